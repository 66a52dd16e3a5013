//! Seeded random partial actions and the property suite run on each of them.
//!
//! Semigroups are closures of one or two random partial injections of at most three points,
//! so every draw is an inverse semigroup. Instances alternate between GF(2) and GF(3).

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::action::{munn_action, ActionData, PartialAction};
use crate::analysis::CrossCheck;
use crate::bruteforce::{brute_force, max_dimension, DEFAULT_CAP_BITS};
use crate::error::Result;
use crate::isg::build::{close_partial_injections, from_partial_injections, PartialInjection};
use crate::isg::InverseSemigroup;
use crate::linalg::{Field, Subspace};
use crate::scalar::{Carrier, Scalar};
use crate::skew::{SkewElement, SkewRing};
use crate::space::{ClopenSet, LcFun, SpaceModel};

pub const MAX_DEGREE: usize = 3;
pub const MAX_ORDER: usize = 6;
pub const MAX_POINTS: usize = 5;
/// Random elements compared by the two quotient engines per instance.
pub const ENGINE_SAMPLES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionKind {
    /// `θ_s = s` on the union of the ranges.
    Natural,
    Munn,
    /// The natural action plus one extra point fixed by everything.
    NaturalWithFixedPoint,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub id: usize,
    pub generators: Vec<String>,
    pub kind: ActionKind,
    pub carrier: Carrier,
    pub action: PartialAction,
}

fn random_injection(rng: &mut ChaCha8Rng, degree: usize) -> PartialInjection {
    let mut free: Vec<u8> = (0..degree as u8).collect();
    let mut map = Vec::new();
    for _ in 0..degree {
        if rng.gen_bool(0.25) || free.is_empty() {
            map.push(None);
        } else {
            map.push(Some(free.swap_remove(rng.gen_range(0..free.len()))));
        }
    }
    PartialInjection(map)
}

/// `θ_s = s` on `∪ ran(s)`, optionally with a point fixed by every element.
pub fn natural_action(s: &InverseSemigroup, elems: &[PartialInjection], fixed_point: bool) -> Result<PartialAction> {
    let used: BTreeSet<u8> = elems.iter().flat_map(|e| e.0.iter().flatten().copied()).collect();
    let pos: BTreeMap<u8, usize> = used.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let extra = used.len();
    let model = SpaceModel::Finite { n: extra + usize::from(fixed_point) };
    let mut domains = Vec::new();
    let mut maps = Vec::new();
    for e in elems {
        let mut m: BTreeMap<usize, usize> =
            e.0.iter().enumerate().filter_map(|(x, y)| y.map(|y| (pos[&(x as u8)], pos[&y]))).collect();
        let mut range: Vec<usize> = m.values().copied().collect();
        if fixed_point {
            m.insert(extra, extra);
            range.push(extra);
        }
        domains.push(ClopenSet::new(model, range)?);
        maps.push(m);
    }
    PartialAction::new(s.clone(), ActionData { model, domains, maps, tail_witnessed: BTreeSet::new() })
}

/// Draws instances until `n` fit the caps: `2 ≤ |S| ≤ 6`, `|X| ≤ 5`, quotient dimension within
/// the exhaustive scan.
pub fn generate(n: usize, seed: u64) -> Result<Vec<Instance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < n {
        let id = out.len();
        let carrier = if id % 2 == 0 { Carrier::Gf(2) } else { Carrier::Gf(3) };
        let degree = rng.gen_range(2..=MAX_DEGREE);
        let gens: Vec<PartialInjection> =
            (0..rng.gen_range(1..=2)).map(|_| random_injection(&mut rng, degree)).collect();
        let kind = match rng.gen_range(0..3) {
            0 => ActionKind::Natural,
            1 => ActionKind::Munn,
            _ => ActionKind::NaturalWithFixedPoint,
        };
        let elems = close_partial_injections(&gens);
        if elems.len() > MAX_ORDER || elems.len() < 2 {
            continue;
        }
        let s = from_partial_injections(&elems);
        let action = match kind {
            ActionKind::Natural => natural_action(&s, &elems, false)?,
            ActionKind::NaturalWithFixedPoint => natural_action(&s, &elems, true)?,
            ActionKind::Munn => munn_action(&s)?,
        };
        if action.model().num_points() > MAX_POINTS || action.model().num_points() == 0 {
            continue;
        }
        let p = carrier.modulus().unwrap();
        if SkewRing::new(action.clone(), carrier)?.quotient_dim()? > max_dimension(p, DEFAULT_CAP_BITS) {
            continue;
        }
        out.push(Instance {
            id,
            generators: gens.iter().map(PartialInjection::label).collect(),
            kind,
            carrier,
            action,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceReport {
    pub id: usize,
    pub generators: Vec<String>,
    pub kind: ActionKind,
    pub carrier: String,
    pub semigroup_order: usize,
    pub points: usize,
    pub quotient_dim: usize,
    pub simple: bool,
    pub s_simple: bool,
    pub max_commutative: bool,
    pub minimal: bool,
    pub principal: bool,
    pub free: bool,
    pub engine_samples: usize,
    pub checks: Vec<CrossCheck>,
    pub all_hold: bool,
}

fn random_scalar(rng: &mut ChaCha8Rng, k: Carrier) -> Scalar {
    k.from_i64(rng.gen_range(0..k.modulus().unwrap()) as i64)
}

fn random_element(rng: &mut ChaCha8Rng, ring: &SkewRing) -> SkewElement {
    let k = ring.carrier();
    let coords: Vec<Scalar> =
        (0..ring.columns().len()).map(|_| if rng.gen_bool(0.4) { random_scalar(rng, k) } else { k.zero() }).collect();
    ring.from_coords(&coords)
}

fn random_in_n(rng: &mut ChaCha8Rng, ring: &SkewRing, gens: &[Vec<Scalar>]) -> SkewElement {
    let k = ring.carrier();
    let mut v = vec![k.zero(); ring.columns().len()];
    for g in gens {
        let c = random_scalar(rng, k);
        crate::linalg::axpy(&k, &mut v, &c, g);
    }
    ring.from_coords(&v)
}

/// Runs every property on one instance. The RNG for random elements depends only on
/// `(seed, id)`, so the report does not depend on scheduling.
pub fn check_instance(inst: &Instance, seed: u64) -> Result<InstanceReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (inst.id as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let action = &inst.action;
    let k = inst.carrier;
    let ring = SkewRing::new(action.clone(), k)?;
    let mut checks = Vec::new();
    let mut check = |name: &'static str, holds: bool| checks.push(CrossCheck { name, holds });

    let minimal = action.is_minimal();
    let principal = action.is_topologically_principal().principal;
    let free = action.is_topologically_free().free;
    let s = ring.is_s_simple()?.s_simple;
    let m = ring.is_diagonal_maximal_commutative()?.max_commutative;
    let b = brute_force(&ring, DEFAULT_CAP_BITS)?;
    let tau = b.every_ideal_has_tau_support;
    check("criterion agrees with exhaustive scan", (s && m) == b.simple);
    check("max commutative iff every ideal meets the diagonal", m == b.every_ideal_meets_diagonal);
    check("minimal iff S-simple", minimal.minimal == s);
    check("exhaustively simple implies S-simple", !b.simple || s);
    check("minimal by open sets iff by orbit hulls", minimal.minimal == action.minimal_by_hulls().minimal);
    check("free implies principal", !free || principal);
    check("max commutative implies principal and tau support", !m || (principal && tau));
    check("principal and tau support imply max commutative", !(principal && tau) || m);
    check("simple iff minimal, principal and tau support", b.simple == (minimal.minimal && principal && tau));
    check("algebra action axioms", action.check_algebra_action(k).is_ok());

    // engines: germ normal form against membership in the span of N
    let gens = ring.n_generators();
    let mut engines = true;
    let mut tau_well_defined = true;
    for i in 0..ENGINE_SAMPLES {
        let x = random_element(&mut rng, &ring);
        let y = if i % 2 == 0 { x.add(&random_in_n(&mut rng, &ring, &gens))? } else { random_element(&mut rng, &ring) };
        if i % 2 == 0 {
            tau_well_defined &= x.tau_tilde() == y.tau_tilde();
        }
        let d = x.sub(&y)?;
        engines &= ring.germ_normal_form(&d).is_zero() == ring.is_zero_mod_n(&d)?;
        engines &= (ring.germ_normal_form(&x) == ring.germ_normal_form(&y))
            == (ring.to_quotient(&x)? == ring.to_quotient(&y)?);
    }
    check("germ normal form agrees with the span of N", engines);
    check("tau agrees on representatives of one class", tau_well_defined);

    // a nonzero homogeneous element a·δ_s is never in N
    let mut homogeneous = true;
    for c in 0..ring.columns().len() {
        for v in 1..k.modulus().unwrap() {
            homogeneous &= !ring.is_zero_mod_n(&ring.column_element(c).scale(&k.from_i64(v as i64))?)?;
        }
    }
    let sg = action.semigroup();
    for t in 0..sg.len() {
        let domain = action.domain(t);
        if domain.is_empty() {
            continue;
        }
        for _ in 0..4 {
            let values = ring
                .model()
                .points()
                .map(|x| if domain.contains(x) { random_scalar(&mut rng, k) } else { k.zero() })
                .collect();
            let a = LcFun::from_values(ring.model(), k, values)?;
            if !a.is_zero() {
                homogeneous &= !ring.is_zero_mod_n(&ring.element(vec![(t, a)])?)?;
            }
        }
    }
    check("homogeneous elements meet N trivially", homogeneous);
    check("tau vanishes on N", gens.iter().all(|g| ring.from_coords(g).tau_tilde().is_zero()));

    // the diagonal embedding
    let atoms: Vec<LcFun> = ring.atoms().iter().map(|a| LcFun::indicator(a, k)).collect();
    let images: Vec<SkewElement> = atoms.iter().map(|a| ring.diagonal_embed(a)).collect::<Result<_>>()?;
    let mut morphism = true;
    for (a, x) in atoms.iter().zip(&images) {
        morphism &= &x.tau_tilde() == a;
        for (b, y) in atoms.iter().zip(&images) {
            let prod = ring.diagonal_embed(&a.mul(b)?)?;
            morphism &= ring.is_zero_mod_n(&prod.sub(&ring.mul(x, y)?)?)?;
            let sum = ring.diagonal_embed(&a.add(b)?)?;
            morphism &= ring.is_zero_mod_n(&sum.sub(&x.add(y)?)?)?;
        }
    }
    let rank = Subspace::spanned_by(
        &k,
        ring.quotient_dim()?,
        images.iter().map(|x| ring.to_quotient(x)).collect::<Result<Vec<_>>>()?,
    )
    .rank();
    check("diagonal embedding is a ring morphism split by tau", morphism);
    check("diagonal embedding is injective", rank == atoms.len());

    // associativity on the quotient basis
    let dim = ring.quotient_dim()?;
    let basis: Vec<Vec<Scalar>> =
        (0..dim).map(|i| (0..dim).map(|j| if i == j { k.one() } else { k.zero() }).collect()).collect();
    let mut assoc = true;
    for u in &basis {
        for v in &basis {
            let uv = ring.quotient_mul(u, v)?;
            for w in &basis {
                assoc &= ring.quotient_mul(&uv, w)? == ring.quotient_mul(u, &ring.quotient_mul(v, w)?)?;
            }
        }
    }
    check("quotient product is associative", assoc);

    let random_vector = |rng: &mut ChaCha8Rng| -> Vec<Scalar> { (0..dim).map(|_| random_scalar(rng, k)).collect() };
    let add = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> { u.iter().zip(v).map(|(a, b)| k.add(a, b)).collect() };
    let mut distributive = true;
    for _ in 0..20 {
        let (u, v, w) = (random_vector(&mut rng), random_vector(&mut rng), random_vector(&mut rng));
        distributive &=
            ring.quotient_mul(&u, &add(&v, &w))? == add(&ring.quotient_mul(&u, &v)?, &ring.quotient_mul(&u, &w)?);
        distributive &=
            ring.quotient_mul(&add(&u, &v), &w)? == add(&ring.quotient_mul(&u, &w)?, &ring.quotient_mul(&v, &w)?);
    }
    check("quotient product is distributive", distributive);

    let all_hold = checks.iter().all(|c| c.holds);
    Ok(InstanceReport {
        id: inst.id,
        generators: inst.generators.clone(),
        kind: inst.kind,
        carrier: k.to_string(),
        semigroup_order: sg.len(),
        points: ring.model().num_points(),
        quotient_dim: dim,
        simple: b.simple,
        s_simple: s,
        max_commutative: m,
        minimal: minimal.minimal,
        principal,
        free,
        engine_samples: ENGINE_SAMPLES,
        checks,
        all_hold,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub seed: u64,
    pub instances: usize,
    pub simple: usize,
    pub failures: Vec<usize>,
    pub reports: Vec<InstanceReport>,
}

/// Generates and checks `n` instances, checking them on all available cores.
pub fn run_corpus(n: usize, seed: u64) -> Result<CorpusReport> {
    let instances = generate(n, seed)?;
    let workers = std::thread::available_parallelism().map_or(1, |w| w.get()).min(instances.len().max(1));
    let mut results: Vec<Option<Result<InstanceReport>>> = (0..instances.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let instances = &instances;
                scope.spawn(move || {
                    instances
                        .iter()
                        .skip(w)
                        .step_by(workers)
                        .map(|i| (i.id, check_instance(i, seed)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (id, r) in h.join().expect("corpus worker panicked") {
                results[id] = Some(r);
            }
        }
    });
    let reports: Vec<InstanceReport> = results.into_iter().map(|r| r.unwrap()).collect::<Result<_>>()?;
    Ok(CorpusReport {
        seed,
        instances: reports.len(),
        simple: reports.iter().filter(|r| r.simple).count(),
        failures: reports.iter().filter(|r| !r.all_hold).map(|r| r.id).collect(),
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_reproducible_and_capped() {
        let a = generate(12, 7).unwrap();
        let b = generate(12, 7).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.generators, y.generators);
            assert_eq!(x.kind, y.kind);
            assert!(x.action.semigroup().len() <= MAX_ORDER);
            assert!(x.action.model().num_points() <= MAX_POINTS);
        }
    }

    #[test]
    fn small_corpus_passes() {
        let r = run_corpus(6, 1).unwrap();
        assert!(r.failures.is_empty(), "{:#?}", r.reports);
    }
}
