//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use skewring::analysis::{analyze_groupoid, analyze_snake, AnalyzeOptions, Report};
use skewring::bruteforce::{brute_force, DEFAULT_CAP_BITS};
use skewring::corpus::{run_corpus, CorpusReport, ENGINE_SAMPLES};
use skewring::gallery::{gallery, NAMES};
use skewring::steinberg::build::{cyclic_groupoid, pair_groupoid, unit_groupoid};
use skewring::steinberg::{Groupoid, SteinbergModel};
use skewring::Carrier;

const CORPUS_SIZE: usize = 60;
const CORPUS_SEED: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// Instances where the named check failed or was not run.
fn holds(corpus: &CorpusReport, name: &str) -> Vec<usize> {
    corpus.reports.iter().filter(|r| !r.checks.iter().any(|c| c.name == name && c.holds)).map(|r| r.id).collect()
}

fn corpus_check(corpus: &CorpusReport, names: &[&str]) -> Outcome {
    let mut bad = BTreeSet::new();
    for n in names {
        bad.extend(holds(corpus, n));
    }
    outcome(bad.is_empty(), format!("{} instances, disagreements at {:?}", corpus.instances, bad))
}

fn criterion_1(c: &CorpusReport) -> Outcome {
    let mut o = corpus_check(c, &["criterion agrees with exhaustive scan", "exhaustively simple implies S-simple"]);
    let orders_ok = c.reports.iter().all(|r| r.semigroup_order <= 6 && r.points <= 5);
    let carriers: BTreeSet<&str> = c.reports.iter().map(|r| r.carrier.as_str()).collect();
    o.pass &= c.instances >= 50 && orders_ok && carriers.len() == 2;
    o.detail = format!("{}, {} simple, carriers {:?}", o.detail, c.simple, carriers);
    o
}

fn criterion_2(c: &CorpusReport) -> Outcome {
    corpus_check(c, &["max commutative iff every ideal meets the diagonal"])
}

fn criterion_3(c: &CorpusReport) -> Outcome {
    let samples = c.instances * ENGINE_SAMPLES;
    let mut o = corpus_check(
        c,
        &[
            "germ normal form agrees with the span of N",
            "homogeneous elements meet N trivially",
            "tau vanishes on N",
            "tau agrees on representatives of one class",
            "quotient product is associative",
            "quotient product is distributive",
        ],
    );
    o.pass &= samples >= 10_000;
    o.detail = format!("{}, {samples} random element pairs", o.detail);
    o
}

fn criterion_4(c: &CorpusReport) -> Outcome {
    corpus_check(c, &["diagonal embedding is a ring morphism split by tau", "diagonal embedding is injective"])
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for window in [3, 4, 5] {
        for carrier in [Carrier::Gf(2), Carrier::Rational] {
            let opts = AnalyzeOptions { carrier, cap_bits: DEFAULT_CAP_BITS, require_bruteforce: false };
            let r = analyze_snake(window, opts).expect("snake analysis");
            let facts = r.snake.as_ref().unwrap();
            // one germ per window point, two at the tail
            let dim_ok = r.quotient_dim == Some(window + 2);
            let witness_ok = r.max_commutative.as_ref().unwrap().witness.as_deref() == Some("1_{tail,inf}δ_z");
            if !(facts.all_hold() && dim_ok && witness_ok && r.agree) {
                failures.push(format!("W={window} over {carrier}"));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(failures.is_empty() && secs < 10.0, format!("6 configurations in {secs:.2}s, failures {failures:?}"))
}

/// `Σ_k C(n,k)² k!`: partial bijections of an `n`-set.
fn partial_bijections(n: u64) -> u64 {
    let binom = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
    (0..=n).map(|k| binom(n, k).pow(2) * (1..=k).product::<u64>()).sum()
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let cases: Vec<(&str, Groupoid, Carrier, bool, usize)> = vec![
        ("P_2", pair_groupoid(2), Carrier::Gf(2), true, partial_bijections(2) as usize),
        ("P_3", pair_groupoid(3), Carrier::Gf(2), true, partial_bijections(3) as usize),
        ("P_3/GF(3)", pair_groupoid(3), Carrier::Gf(3), true, partial_bijections(3) as usize),
        ("unit groupoid on 3 points", unit_groupoid(3), Carrier::Gf(2), false, 8),
        ("Z/2", cyclic_groupoid(2), Carrier::Gf(3), false, 3),
        ("P_2/Z/4", pair_groupoid(2), Carrier::Zmod(4), false, partial_bijections(2) as usize),
    ];
    for (name, g, carrier, expect_simple, expect_bisections) in cases {
        let arrows = g.len();
        let m = SteinbergModel::new(g, carrier).expect("Steinberg model");
        let r = m.simplicity(DEFAULT_CAP_BITS).expect("simplicity");
        let mut ok =
            r.isomorphism.all_hold() && r.agree && r.simple == expect_simple && r.bisections == expect_bisections;
        if carrier.is_field() {
            // the algebra is spanned by arrow indicators
            ok &= m.ring().quotient_dim().unwrap() == arrows;
            // GF(3) allows dimension 8 only, so P_3 there rests on the criterion
            match brute_force(m.ring(), DEFAULT_CAP_BITS) {
                Ok(b) => ok &= b.simple == r.simple && r.bruteforce.is_some(),
                Err(_) => ok &= carrier == Carrier::Gf(3) && r.bruteforce_skipped.is_some(),
            }
        } else {
            ok &= r.non_field_ideal.as_ref().is_some_and(|i| i.factor == 2 && i.nonzero && i.proper && i.closed);
        }
        if name == "Z/2" {
            ok &= !r.effective && r.effective_witness.as_deref() == Some("g");
        }
        if !ok {
            failures.push(name);
        }
    }
    outcome(failures.is_empty(), format!("6 groupoid configurations, failures {failures:?}"))
}

fn criterion_7(c: &CorpusReport) -> Outcome {
    let mut o = corpus_check(
        c,
        &[
            "free implies principal",
            "minimal iff S-simple",
            "minimal by open sets iff by orbit hulls",
            "max commutative implies principal and tau support",
            "principal and tau support imply max commutative",
            "simple iff minimal, principal and tau support",
        ],
    );
    let mut bad = Vec::new();
    let opts = |carrier| AnalyzeOptions { carrier, cap_bits: DEFAULT_CAP_BITS, require_bruteforce: false };
    let mut groupoids = 0;
    for name in NAMES {
        if let Report::Groupoid(g) = gallery(name, None, None, None).unwrap() {
            groupoids += 1;
            let s = &g.steinberg;
            let field_ok = !s.carrier_is_field || s.criterion_simple.is_some();
            if s.minimal != s.action_minimal || !field_ok {
                bad.push(name.to_string());
            }
            if let Some(m) = s.diagonal_max_commutative {
                if m != s.effective {
                    bad.push(name.to_string());
                }
            }
        }
    }
    for (name, g) in [("P_3", pair_groupoid(3)), ("unit groupoid on 3 points", unit_groupoid(3))] {
        let s = analyze_groupoid(g, opts(Carrier::Gf(3))).unwrap().steinberg;
        if s.minimal != s.action_minimal || s.diagonal_max_commutative != Some(s.effective) {
            bad.push(name.to_string());
        }
    }
    o.pass &= bad.is_empty() && groupoids >= 4;
    o.detail = format!("{}; {groupoids} gallery groupoids, groupoid failures {bad:?}", o.detail);
    o
}

fn criterion_8() -> Outcome {
    let mut mismatched = Vec::new();
    for name in NAMES {
        let a = gallery(name, None, None, None).unwrap().to_json();
        let b = gallery(name, None, None, None).unwrap().to_json();
        if a != b {
            mismatched.push(name);
        }
    }
    let a = serde_json::to_string(&run_corpus(8, 3).unwrap()).unwrap();
    let b = serde_json::to_string(&run_corpus(8, 3).unwrap()).unwrap();
    if a != b {
        mismatched.push("corpus");
    }
    outcome(mismatched.is_empty(), format!("gallery and corpus reports, mismatches {mismatched:?}"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = run_corpus(CORPUS_SIZE, CORPUS_SEED).expect("corpus generation");
    let corpus_secs = start.elapsed().as_secs_f64();
    let results = [
        ("1 main equivalence on the corpus", criterion_1(&corpus)),
        ("2 ideal intersection equivalence", criterion_2(&corpus)),
        ("3 quotient engines agree", criterion_3(&corpus)),
        ("4 diagonal embedding", criterion_4(&corpus)),
        ("5 two-headed snake", criterion_5()),
        ("6 Steinberg stack", criterion_6()),
        ("7 dynamics implications", criterion_7(&corpus)),
        ("8 determinism", criterion_8()),
    ];
    let mut all = true;
    for (name, o) in &results {
        all &= o.pass;
        println!("criterion {name}: {} ({})", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("corpus of {CORPUS_SIZE} checked in {corpus_secs:.2}s, total {:.2}s", start.elapsed().as_secs_f64());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
