//! Full reports: every predicate, the simplicity verdict, the exhaustive oracle when it fits
//! under the cap, and the implications that must hold between them.

use serde::Serialize;
use serde_json::Value;

use crate::action::{munn_action, snake_action, FreeVerdict, MinimalityVerdict, PartialAction, PrincipalVerdict};
use crate::bruteforce::{brute_force, BruteForceReport};
use crate::error::{Error, Result};
use crate::io::{action_to_raw, build_action, build_groupoid, Input};
use crate::isg::InverseSemigroup;
use crate::linalg::Field;
use crate::scalar::Carrier;
use crate::skew::{MaxCommutativeVerdict, SSimpleVerdict, SkewRing};
use crate::space::{ClopenSet, LcFun, SpaceModel};
use crate::steinberg::{Groupoid, SteinbergModel, SteinbergReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub carrier: Carrier,
    pub cap_bits: u32,
    /// Fail with [`Error::CapExceeded`] instead of skipping the exhaustive oracle.
    pub require_bruteforce: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// Outcome of validating an input file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub input: &'static str,
    pub valid: bool,
    /// Semigroup elements, or arrows of a groupoid.
    pub elements: usize,
    pub idempotents: Vec<String>,
    pub unit: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionReport {
    pub carrier: String,
    pub semigroup_order: usize,
    pub points: Vec<String>,
    pub quotient_dim: Option<usize>,
    pub minimal: MinimalityVerdict,
    pub minimal_by_hulls: bool,
    pub principal: PrincipalVerdict,
    pub free: FreeVerdict,
    pub s_simple: Option<SSimpleVerdict>,
    pub max_commutative: Option<MaxCommutativeVerdict>,
    pub simple: bool,
    pub mode: &'static str,
    /// Why the ring is not simple, when it is not.
    pub witness: Option<String>,
    /// Smallest prime `d` with `d·(L_c(X) ⋊ S)` a nonzero proper ideal, over `Z/n` composite.
    pub non_field_factor: Option<u64>,
    pub bruteforce: Option<BruteForceReport>,
    pub bruteforce_skipped: Option<String>,
    pub engine_agreement: bool,
    pub cross_checks: Vec<CrossCheck>,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub snake: Option<SnakeFacts>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupoidReport {
    pub carrier: String,
    pub arrows: usize,
    pub units: Vec<String>,
    /// Why the algebra is not simple, when it is not.
    pub witness: Option<String>,
    #[serde(flatten)]
    pub steinberg: SteinbergReport,
}

/// One report per run, so the variant size gap is immaterial.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Report {
    Action(ActionReport),
    Groupoid(GroupoidReport),
}

impl Report {
    /// Every internal cross-check agreed.
    pub fn agrees(&self) -> bool {
        match self {
            Report::Action(a) => a.agree,
            Report::Groupoid(g) => g.steinberg.agree,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        render_text(self)
    }
}

/// One `path: value` line per leaf of the JSON form, so both formats carry the same fields.
pub fn render_text<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("reports serialize");
    let mut out = String::new();
    render(&value, "", &mut out);
    out
}

fn render(v: &Value, path: &str, out: &mut String) {
    let scalar = |v: &Value| match v {
        Value::Null => "none".to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                render(child, &p, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{path}: [{}]\n", parts.join(", ")));
        }
        Value::Array(items) => {
            for (i, child) in items.iter().enumerate() {
                render(child, &format!("{path}[{i}]"), out);
            }
        }
        other => out.push_str(&format!("{path}: {}\n", scalar(other))),
    }
}

pub fn verify_input(input: &Input) -> Result<VerifyReport> {
    let labels = |s: &InverseSemigroup, v: Vec<usize>| v.iter().map(|&e| s.label(e).to_string()).collect();
    Ok(match input {
        Input::Semigroup(raw) => {
            let s = InverseSemigroup::verify(raw)?;
            VerifyReport {
                input: "semigroup",
                valid: true,
                elements: s.len(),
                idempotents: labels(&s, s.idempotents()),
                unit: s.unit().map(|u| s.label(u).to_string()),
                points: None,
            }
        }
        Input::Action(raw) => {
            let a = build_action(raw)?;
            let s = a.semigroup();
            VerifyReport {
                input: "action",
                valid: true,
                elements: s.len(),
                idempotents: labels(s, s.idempotents()),
                unit: s.unit().map(|u| s.label(u).to_string()),
                points: Some(a.model().points().map(|x| a.model().point_label(x)).collect()),
            }
        }
        Input::Groupoid(file) => {
            let g = build_groupoid(file)?;
            VerifyReport {
                input: "groupoid",
                valid: true,
                elements: g.len(),
                idempotents: g.units().iter().map(|&u| g.label(u).to_string()).collect(),
                unit: None,
                points: None,
            }
        }
    })
}

/// A semigroup is analysed through its Munn representation. An action equal to the
/// windowed snake gets the worked-example facts; `window` re-windows it.
pub fn analyze_input(input: &Input, opts: AnalyzeOptions, window: Option<usize>) -> Result<Report> {
    match input {
        Input::Semigroup(raw) => {
            if window.is_some() {
                return Err(Error::Parse("--window applies to the windowed snake only".into()));
            }
            Ok(Report::Action(analyze_action(munn_action(&InverseSemigroup::verify(raw)?)?, opts)?))
        }
        Input::Action(raw) => {
            let action = build_action(raw)?;
            let snake_window = match action.model() {
                SpaceModel::OmegaPlus { window: w }
                    if action_to_raw(&action, None) == action_to_raw(&snake_action(w)?, None) =>
                {
                    Some(w)
                }
                _ => None,
            };
            match (snake_window, window) {
                (Some(w), requested) => Ok(Report::Action(analyze_snake(requested.unwrap_or(w), opts)?)),
                (None, Some(_)) => Err(Error::Parse("--window applies to the windowed snake only".into())),
                (None, None) => Ok(Report::Action(analyze_action(action, opts)?)),
            }
        }
        Input::Groupoid(file) => {
            if window.is_some() {
                return Err(Error::Parse("--window applies to the windowed snake only".into()));
            }
            Ok(Report::Groupoid(analyze_groupoid(build_groupoid(file)?, opts)?))
        }
    }
}

/// Germ normal form and the span of `N` agree on atom slices, their multiples and every
/// generator of `N`.
pub fn engine_agreement(ring: &SkewRing) -> Result<bool> {
    let k = ring.carrier();
    let two = k.from_i64(2);
    let mut probes: Vec<_> = (0..ring.columns().len()).map(|c| ring.column_element(c)).collect();
    probes.extend(probes.clone().iter().map(|x| x.scale(&two)).collect::<Result<Vec<_>>>()?);
    probes.extend(ring.n_generators().iter().map(|v| ring.from_coords(v)));
    for x in &probes {
        if ring.germ_normal_form(x).is_zero() != ring.is_zero_mod_n(x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn analyze_action(action: PartialAction, opts: AnalyzeOptions) -> Result<ActionReport> {
    let minimal = action.is_minimal();
    let minimal_by_hulls = action.minimal_by_hulls().minimal;
    let principal = action.is_topologically_principal();
    let free = action.is_topologically_free();
    let points = action.model().points().map(|x| action.model().point_label(x)).collect();
    let semigroup_order = action.semigroup().len();
    let ring = SkewRing::new(action, opts.carrier)?;
    let mut checks = vec![
        CrossCheck { name: "free implies principal", holds: !free.free || principal.principal },
        CrossCheck { name: "minimal by open sets iff by orbit hulls", holds: minimal.minimal == minimal_by_hulls },
    ];
    let mut report = ActionReport {
        carrier: opts.carrier.to_string(),
        semigroup_order,
        points,
        quotient_dim: None,
        minimal,
        minimal_by_hulls,
        principal,
        free,
        s_simple: None,
        max_commutative: None,
        simple: false,
        mode: "non-field carrier",
        witness: None,
        non_field_factor: None,
        bruteforce: None,
        bruteforce_skipped: None,
        engine_agreement: true,
        cross_checks: Vec::new(),
        agree: true,
        snake: None,
    };
    if !opts.carrier.is_field() {
        let n = opts.carrier.modulus().unwrap();
        let d = (2..=n).find(|d| n.is_multiple_of(*d)).unwrap();
        let dx = ring.column_element(0).scale(&opts.carrier.from_i64(d as i64))?;
        checks.push(CrossCheck { name: "d times a slice is nonzero", holds: !ring.germ_normal_form(&dx).is_zero() });
        report.non_field_factor = Some(d);
        report.witness = Some(format!("proper ideal {d}·(L_c(X) ⋊ S)"));
        report.bruteforce_skipped = Some(Error::NotAField(opts.carrier).to_string());
    } else {
        let s = ring.is_s_simple()?;
        let m = ring.is_diagonal_maximal_commutative()?;
        report.simple = s.s_simple && m.max_commutative;
        report.witness = match (&s.witness, &m.witness) {
            (Some(u), _) => Some(format!("proper invariant ideal supported on {{{}}}", u.join(","))),
            (None, Some(x)) => Some(format!("{x} commutes with the diagonal")),
            (None, None) => None,
        };
        report.mode = "criterion";
        report.quotient_dim = Some(ring.quotient_dim()?);
        report.engine_agreement = engine_agreement(&ring)?;
        checks.push(CrossCheck { name: "minimal iff S-simple", holds: report.minimal.minimal == s.s_simple });
        checks.push(CrossCheck {
            name: "max commutative implies principal",
            holds: !m.max_commutative || report.principal.principal,
        });
        match brute_force(&ring, opts.cap_bits) {
            Ok(b) => {
                let tau = b.every_ideal_has_tau_support;
                let p = report.principal.principal;
                checks.push(CrossCheck {
                    name: "criterion agrees with exhaustive scan",
                    holds: report.simple == b.simple,
                });
                checks.push(CrossCheck {
                    name: "max commutative iff every ideal meets the diagonal",
                    holds: m.max_commutative == b.every_ideal_meets_diagonal,
                });
                checks
                    .push(CrossCheck { name: "max commutative implies tau support", holds: !m.max_commutative || tau });
                checks.push(CrossCheck {
                    name: "principal and tau support imply max commutative",
                    holds: !(p && tau) || m.max_commutative,
                });
                checks.push(CrossCheck {
                    name: "simple iff minimal, principal and tau support",
                    holds: b.simple == (report.minimal.minimal && p && tau),
                });
                report.bruteforce = Some(b);
            }
            Err(e @ Error::CapExceeded { .. }) if !opts.require_bruteforce => {
                report.bruteforce_skipped = Some(e.to_string())
            }
            Err(e @ Error::Carrier(_)) if !opts.require_bruteforce => report.bruteforce_skipped = Some(e.to_string()),
            Err(e) => return Err(e),
        }
        report.s_simple = Some(s);
        report.max_commutative = Some(m);
    }
    report.agree = report.engine_agreement && checks.iter().all(|c| c.holds);
    report.cross_checks = checks;
    Ok(report)
}

pub fn analyze_groupoid(groupoid: Groupoid, opts: AnalyzeOptions) -> Result<GroupoidReport> {
    let units = groupoid.units().iter().map(|&u| groupoid.label(u).to_string()).collect();
    let arrows = groupoid.len();
    let model = SteinbergModel::new(groupoid, opts.carrier)?;
    let steinberg = model.simplicity(opts.cap_bits)?;
    if opts.require_bruteforce && opts.carrier.is_field() && steinberg.bruteforce.is_none() {
        brute_force(model.ring(), opts.cap_bits)?;
    }
    let witness = if let Some(i) = &steinberg.non_field_ideal {
        Some(format!("proper ideal {}·A_R(G)", i.factor))
    } else if let Some(a) = &steinberg.effective_witness {
        Some(format!("isotropy arrow {a} is not a unit"))
    } else {
        steinberg.minimal_witness.as_ref().map(|o| format!("orbit {{{}}} is not everything", o.join(",")))
    };
    Ok(GroupoidReport { carrier: opts.carrier.to_string(), arrows, units, witness, steinberg })
}

/// The worked example on `ℕ ∪ {∞}` seen through a finite window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SnakeFacts {
    pub window: usize,
    pub principal: bool,
    pub free: bool,
    pub minimal: bool,
    pub simple: bool,
    pub tails: Vec<TailFacts>,
}

/// Facts about `1_{[n,∞]}δ_z` and the ideal `J_n` it spans with `1_{[n,∞]}δ_∞`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TailFacts {
    pub n: usize,
    pub element: String,
    pub commutes_with_diagonal: bool,
    pub outside_diagonal: bool,
    pub j_n_dim: usize,
    pub j_n_meets_diagonal: bool,
    pub tau_vanishes_on_j_n: bool,
}

impl SnakeFacts {
    pub fn all_hold(&self) -> bool {
        self.principal
            && !self.free
            && !self.minimal
            && !self.simple
            && self.tails.iter().all(|t| {
                t.commutes_with_diagonal
                    && t.outside_diagonal
                    && t.j_n_dim > 0
                    && !t.j_n_meets_diagonal
                    && t.tau_vanishes_on_j_n
            })
    }
}

/// `1_{[n,∞]}`; for `n` beyond the window only the tail and `∞` remain.
pub fn tail_from(ring: &SkewRing, n: usize) -> Result<LcFun> {
    let model = ring.model();
    let pts: Vec<usize> = (n..=model.explicit_points()).collect();
    Ok(LcFun::indicator(&ClopenSet::from_labels(model, &pts, true)?, ring.carrier()))
}

pub fn snake_facts(ring: &SkewRing, report: &ActionReport) -> Result<SnakeFacts> {
    let window = ring.model().explicit_points();
    let s = ring.action().semigroup();
    let k = ring.carrier();
    let (z, inf) = (s.index_of("z").unwrap(), s.index_of("inf").unwrap());
    let diagonal: Vec<_> = (0..ring.columns().len())
        .filter(|&c| s.is_idempotent(ring.columns()[c].0))
        .map(|c| ring.column_element(c))
        .collect();
    let d = ring.diagonal_subspace()?;
    let mut tails = Vec::new();
    for n in 1..=window + 1 {
        let f = tail_from(ring, n)?;
        let x = ring.element(vec![(z, f.clone())])?;
        let mut commutes = true;
        for e in &diagonal {
            commutes &= ring.is_zero_mod_n(&ring.mul(&x, e)?.sub(&ring.mul(e, &x)?)?)?;
        }
        let g = ring.element(vec![(z, f.clone()), (inf, f.neg())])?;
        let j = ring.ideal_generated_by(&g)?;
        let mut tau_vanishes = true;
        for v in j.basis() {
            tau_vanishes &= ring.quotient_tau(v)?.iter().all(|t| k.is_zero(t));
        }
        tails.push(TailFacts {
            n,
            element: x.display(ring).to_string(),
            commutes_with_diagonal: commutes,
            outside_diagonal: !ring.is_in_diagonal(&x),
            j_n_dim: j.rank(),
            j_n_meets_diagonal: j.intersection_dim(&k, d) > 0,
            tau_vanishes_on_j_n: tau_vanishes,
        });
    }
    Ok(SnakeFacts {
        window,
        principal: report.principal.principal,
        free: report.free.free,
        minimal: report.minimal.minimal,
        simple: report.simple,
        tails,
    })
}

/// [`analyze_action`] on the windowed snake, with the worked-example facts attached.
pub fn analyze_snake(window: usize, opts: AnalyzeOptions) -> Result<ActionReport> {
    let action = crate::action::snake_action(window)?;
    let ring = SkewRing::new(action.clone(), opts.carrier)?;
    let mut report = analyze_action(action, opts)?;
    let facts = snake_facts(&ring, &report)?;
    report.agree &= facts.all_hold();
    report.snake = Some(facts);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::global_group_action;
    use crate::isg::build::cyclic_group;
    use crate::steinberg::build::pair_groupoid;

    fn opts(carrier: Carrier) -> AnalyzeOptions {
        AnalyzeOptions { carrier, cap_bits: 14, require_bruteforce: false }
    }

    #[test]
    fn snake_window_four() {
        let r = analyze_snake(4, opts(Carrier::Gf(2))).unwrap();
        assert!(!r.minimal.minimal && r.principal.principal && !r.free.free && !r.simple);
        assert!(!r.max_commutative.as_ref().unwrap().max_commutative);
        assert_eq!(r.quotient_dim, Some(6));
        assert!(r.agree, "{:#?}", r.cross_checks);
        assert!(r.snake.unwrap().all_hold());
    }

    #[test]
    fn translation_all_true() {
        let a = global_group_action(&cyclic_group(2), 2, |g, x| (x + g) % 2).unwrap();
        let r = analyze_action(a, opts(Carrier::Gf(3))).unwrap();
        assert!(r.minimal.minimal && r.principal.principal && r.free.free && r.simple);
        assert!(r.bruteforce.unwrap().simple);
        assert!(r.agree);
    }

    #[test]
    fn non_field_action() {
        let a = global_group_action(&cyclic_group(2), 2, |g, x| (x + g) % 2).unwrap();
        let r = analyze_action(a, opts(Carrier::Zmod(4))).unwrap();
        assert!(!r.simple);
        assert_eq!(r.non_field_factor, Some(2));
        assert!(r.agree);
    }

    #[test]
    fn cap_is_enforced_when_required() {
        let a = crate::action::snake_action(4).unwrap();
        let o = AnalyzeOptions { carrier: Carrier::Gf(2), cap_bits: 3, require_bruteforce: true };
        assert!(matches!(analyze_action(a.clone(), o), Err(Error::CapExceeded { .. })));
        let r = analyze_action(a, AnalyzeOptions { require_bruteforce: false, ..o }).unwrap();
        assert!(r.bruteforce.is_none() && r.bruteforce_skipped.is_some());
    }

    #[test]
    fn text_lists_every_json_leaf() {
        let r = Report::Groupoid(analyze_groupoid(pair_groupoid(2), opts(Carrier::Gf(2))).unwrap());
        let text = r.to_text();
        assert!(text.contains("kind: groupoid\n"));
        assert!(text.contains("simple: true\n"));
        assert!(text.contains("isomorphism.psi_multiplicative: true\n"));
        let leaves = text.lines().count();
        fn count(v: &Value) -> usize {
            match v {
                Value::Object(m) => m.values().map(count).sum(),
                Value::Array(a) if a.iter().all(|i| !i.is_object() && !i.is_array()) => 1,
                Value::Array(a) => a.iter().map(count).sum(),
                _ => 1,
            }
        }
        assert_eq!(leaves, count(&serde_json::to_value(&r).unwrap()));
    }
}
