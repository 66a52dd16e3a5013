//! Topological partial actions `θ` of a finite inverse semigroup on a base space, the induced
//! action `α` on `L_c(X)`, and the dynamical predicates.
//!
//! On `OmegaPlus` every map fixes the tail and `∞`. Idempotents beyond the window cannot be
//! listed, so an action declares which elements are *tail witnessed*: `s` is tail witnessed
//! when every natural number beyond the window lies in `X_e` for some idempotent `e ≤ s`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::isg::InverseSemigroup;
use crate::scalar::Carrier;
use crate::space::{ClopenSet, LcFun, PointSet, SpaceModel};

/// Largest number of candidate open sets scanned directly when testing minimality.
pub const OPEN_ENUMERATION_CAP: usize = 16;

/// Unvalidated action data. Maps list explicit points only (0-based); the tail and `∞`
/// are fixed by every `θ_s`.
#[derive(Clone, Debug)]
pub struct ActionData {
    pub model: SpaceModel,
    pub domains: Vec<ClopenSet>,
    pub maps: Vec<BTreeMap<usize, usize>>,
    pub tail_witnessed: BTreeSet<usize>,
}

#[derive(Clone, Debug)]
pub struct PartialAction {
    semigroup: InverseSemigroup,
    model: SpaceModel,
    domains: Vec<ClopenSet>,
    theta: Vec<Vec<Option<usize>>>,
    tail_witnessed: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointWitness {
    pub element: String,
    pub point: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityVerdict {
    pub minimal: bool,
    pub method: &'static str,
    /// A nonempty proper open invariant set, when not minimal.
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaCertificate {
    pub element: String,
    pub domain: Vec<String>,
    pub lambda: Vec<String>,
    pub dense: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalVerdict {
    pub principal: bool,
    pub certificates: Vec<LambdaCertificate>,
    /// A point of `X_{s*}` outside the closure of `Λ_s(θ)`.
    pub witness: Option<PointWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeVerdict {
    pub free: bool,
    /// A point where the interior of the fixed set and the idempotent-witnessed set differ.
    pub witness: Option<PointWitness>,
}

/// Fixed and moved sets of a group element `t ≠ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupElementSets {
    pub element: String,
    pub moved: Vec<String>,
    pub fixed: Vec<String>,
    pub moved_dense: bool,
    pub fixed_interior_empty: bool,
}

impl PartialAction {
    pub fn new(semigroup: InverseSemigroup, data: ActionData) -> Result<Self> {
        let n = semigroup.len();
        let model = data.model;
        if data.domains.len() != n || data.maps.len() != n {
            return Err(Error::action("domains and maps must be given for every element", format!("{n} elements")));
        }
        for (s, d) in data.domains.iter().enumerate() {
            if d.model() != model {
                return Err(Error::action("domain lives in another space", semigroup.label(s)));
            }
        }
        let np = model.num_points();
        let mut theta = vec![vec![None; np]; n];
        for (s, row) in theta.iter_mut().enumerate() {
            let label = semigroup.label(s);
            let src = &data.domains[semigroup.star(s)];
            let dst = &data.domains[s];
            let explicit_src: BTreeSet<usize> = src.iter().filter(|&x| x < model.explicit_points()).collect();
            let keys: BTreeSet<usize> = data.maps[s].keys().copied().collect();
            if keys != explicit_src {
                let x = keys.symmetric_difference(&explicit_src).next().copied().unwrap();
                return Err(Error::action(
                    "θ_s must be defined exactly on X_{s*}",
                    format!("s = {label}, x = {}", model.point_label(x)),
                ));
            }
            let mut image = BTreeSet::new();
            for (&x, &y) in &data.maps[s] {
                if y >= model.explicit_points() || !dst.contains(y) || !image.insert(y) {
                    return Err(Error::action(
                        "θ_s must be a bijection X_{s*} → X_s",
                        format!("s = {label}, x = {}", model.point_label(x)),
                    ));
                }
                row[x] = Some(y);
            }
            if src.has_tail() != dst.has_tail() || image.len() + 2 * src.has_tail() as usize != dst.len() {
                return Err(Error::action("θ_s must be a bijection X_{s*} → X_s", format!("s = {label}")));
            }
            if src.has_tail() {
                for x in [model.tail().unwrap(), model.infinity().unwrap()] {
                    row[x] = Some(x);
                }
            }
        }
        let mut tail_witnessed = vec![false; n];
        for &s in &data.tail_witnessed {
            if s >= n {
                return Err(Error::action("unknown tail-witnessed element", s.to_string()));
            }
            if !data.domains[semigroup.star(s)].has_tail() {
                return Err(Error::action("tail-witnessed element must have the tail in X_{s*}", semigroup.label(s)));
            }
            tail_witnessed[s] = true;
        }
        for e in semigroup.idempotents() {
            if data.domains[e].has_tail() {
                tail_witnessed[e] = true;
            }
        }
        let action = PartialAction { semigroup, model, domains: data.domains, theta, tail_witnessed };
        action.check_axioms()?;
        action.check_consequences()?;
        Ok(action)
    }

    fn witness(&self, s: usize, t: Option<usize>, x: Option<usize>) -> String {
        let mut parts = vec![format!("s = {}", self.semigroup.label(s))];
        if let Some(t) = t {
            parts.push(format!("t = {}", self.semigroup.label(t)));
        }
        if let Some(x) = x {
            parts.push(format!("x = {}", self.model.point_label(x)));
        }
        parts.join(", ")
    }

    fn check_axioms(&self) -> Result<()> {
        let s_ = &self.semigroup;
        let mut covered = self.model.empty();
        for e in s_.idempotents() {
            covered = covered.union(&self.domains[e]);
        }
        if let Some(x) = self.model.points().find(|&x| !covered.contains(x)) {
            return Err(Error::action(
                "X is not the union of the X_e",
                format!("x = {} lies in no idempotent domain", self.model.point_label(x)),
            ));
        }
        for s in 0..s_.len() {
            let ss = s_.star(s);
            for t in 0..s_.len() {
                let st = s_.mul(s, t);
                let lhs = self.image(s, &self.domains[ss].intersection(&self.domains[t]));
                let rhs = self.domains[s].intersection(&self.domains[st]);
                if lhs != rhs {
                    let x = lhs.union(&rhs).difference(&lhs.intersection(&rhs)).iter().next();
                    return Err(Error::action(
                        "θ_s(X_{s*} ∩ X_t) must equal X_s ∩ X_{st}",
                        self.witness(s, Some(t), x),
                    ));
                }
                let ts = s_.mul(s_.star(t), ss);
                let common = self.domains[s_.star(t)].intersection(&self.domains[ts]);
                for x in common.iter() {
                    let lhs = self.theta[t][x].and_then(|y| self.theta[s][y]);
                    if lhs.is_none() || lhs != self.theta[st][x] {
                        return Err(Error::action(
                            "θ_s θ_t must equal θ_{st} on X_{t*} ∩ X_{t*s*}",
                            self.witness(s, Some(t), Some(x)),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Consequences that must follow from the axioms; a failure here is an internal error.
    fn check_consequences(&self) -> Result<()> {
        let s_ = &self.semigroup;
        for s in 0..s_.len() {
            if !self.domains[s].is_subset(&self.domains[s_.range_idempotent(s)]) {
                return Err(Error::action("X_s ⊆ X_{ss*} fails", self.witness(s, None, None)));
            }
            if s_.is_idempotent(s) {
                if let Some(x) = self.domains[s].iter().find(|&x| self.theta[s][x] != Some(x)) {
                    return Err(Error::action("θ_e must be the identity", self.witness(s, None, Some(x))));
                }
            }
            for x in self.domains[s_.star(s)].iter() {
                let y = self.theta[s][x].unwrap();
                if self.theta[s_.star(s)][y] != Some(x) {
                    return Err(Error::action("θ_{s*} must invert θ_s", self.witness(s, None, Some(x))));
                }
            }
            for t in 0..s_.len() {
                if !s_.le(s, t) {
                    continue;
                }
                if !self.domains[s].is_subset(&self.domains[t]) {
                    return Err(Error::action("s ≤ t must give X_s ⊆ X_t", self.witness(s, Some(t), None)));
                }
                if let Some(x) = self.domains[s_.star(s)].iter().find(|&x| self.theta[s][x] != self.theta[t][x]) {
                    return Err(Error::action(
                        "s ≤ t must give θ_s = θ_t on X_{s*}",
                        self.witness(s, Some(t), Some(x)),
                    ));
                }
            }
        }
        if let Some(u) = s_.unit() {
            if self.domains[u] != self.model.full() {
                return Err(Error::action("the unit must act on all of X", self.witness(u, None, None)));
            }
        }
        Ok(())
    }

    pub fn semigroup(&self) -> &InverseSemigroup {
        &self.semigroup
    }

    pub fn model(&self) -> SpaceModel {
        self.model
    }

    pub fn domain(&self, s: usize) -> &ClopenSet {
        &self.domains[s]
    }

    /// `θ_s(x)` for `x ∈ X_{s*}`.
    pub fn apply(&self, s: usize, x: usize) -> Option<usize> {
        self.theta[s][x]
    }

    pub fn is_tail_witnessed(&self, s: usize) -> bool {
        self.tail_witnessed[s]
    }

    /// `θ_s(K ∩ X_{s*})`
    pub fn image(&self, s: usize, k: &ClopenSet) -> ClopenSet {
        let pts: Vec<usize> = k.iter().filter_map(|x| self.theta[s][x]).collect();
        ClopenSet::new(self.model, pts).expect("θ_s preserves the tail block")
    }

    /// Explicit-point maps as accepted by [`PartialAction::new`].
    pub fn to_data(&self) -> ActionData {
        let explicit = self.model.explicit_points();
        ActionData {
            model: self.model,
            domains: self.domains.clone(),
            maps: self.theta.iter().map(|m| (0..explicit).filter_map(|x| m[x].map(|y| (x, y))).collect()).collect(),
            tail_witnessed: (0..self.semigroup.len())
                .filter(|&s| self.tail_witnessed[s] && !self.semigroup.is_idempotent(s))
                .collect(),
        }
    }

    /// `U` is invariant when `θ_s(U ∩ X_{s*}) ⊆ U` for every `s`.
    pub fn is_invariant(&self, u: &PointSet) -> bool {
        (0..self.semigroup.len()).all(|s| u.iter().all(|x| self.theta[s][x].is_none_or(|y| u.contains(y))))
    }

    /// Candidate open sets in scan order: window subsets first, then with the tail, then
    /// with tail and `∞`.
    fn open_sets(&self) -> Vec<PointSet> {
        let w = self.model.explicit_points();
        let tails: Vec<Vec<usize>> = match (self.model.tail(), self.model.infinity()) {
            (Some(t), Some(i)) => vec![vec![], vec![t], vec![t, i]],
            _ => vec![vec![]],
        };
        let mut out = Vec::new();
        for extra in &tails {
            for mask in 0u64..(1u64 << w) {
                let pts = (0..w).filter(|x| mask >> x & 1 == 1).chain(extra.iter().copied());
                out.push(PointSet::new(self.model, pts));
            }
        }
        out
    }

    /// Smallest open invariant set containing `x`.
    pub fn invariant_hull(&self, x: usize) -> PointSet {
        let mut set = BTreeSet::from([x]);
        let mut stack = vec![x];
        let push = |y: usize, set: &mut BTreeSet<usize>, stack: &mut Vec<usize>| {
            if set.insert(y) {
                stack.push(y);
            }
        };
        while let Some(y) = stack.pop() {
            if Some(y) == self.model.infinity() {
                push(self.model.tail().unwrap(), &mut set, &mut stack);
            }
            for s in 0..self.semigroup.len() {
                if let Some(z) = self.theta[s][y] {
                    push(z, &mut set, &mut stack);
                }
            }
        }
        PointSet::new(self.model, set)
    }

    /// Minimality by orbit hulls: minimal iff every point's invariant hull is all of `X`.
    pub fn minimal_by_hulls(&self) -> MinimalityVerdict {
        let full = self.model.full().as_point_set();
        for x in self.model.points() {
            let hull = self.invariant_hull(x);
            if hull != full {
                return MinimalityVerdict { minimal: false, method: "orbit hull", witness: Some(hull.labels()) };
            }
        }
        MinimalityVerdict { minimal: true, method: "orbit hull", witness: None }
    }

    /// Minimality by scanning every open set, falling back to orbit hulls above the cap.
    pub fn is_minimal(&self) -> MinimalityVerdict {
        if self.model.explicit_points() > OPEN_ENUMERATION_CAP {
            return self.minimal_by_hulls();
        }
        let full = self.model.full().as_point_set();
        for u in self.open_sets() {
            if u.is_empty() || u == full || !u.is_open() {
                continue;
            }
            if self.is_invariant(&u) {
                return MinimalityVerdict { minimal: false, method: "open-set enumeration", witness: Some(u.labels()) };
            }
        }
        MinimalityVerdict { minimal: true, method: "open-set enumeration", witness: None }
    }

    /// `{x ∈ X_{s*} : ∃ e ∈ E(S), e ≤ s, x ∈ X_e}`
    pub fn idempotent_witnessed(&self, s: usize) -> PointSet {
        let mut pts = BTreeSet::new();
        for e in self.semigroup.idempotents() {
            if self.semigroup.le(e, s) {
                pts.extend(self.domains[e].iter());
            }
        }
        if self.tail_witnessed[s] {
            pts.insert(self.model.tail().unwrap());
        }
        PointSet::new(self.model, pts)
    }

    pub fn fixed_set(&self, s: usize) -> PointSet {
        let ss = self.semigroup.star(s);
        PointSet::new(self.model, self.domains[ss].iter().filter(|&x| self.theta[s][x] == Some(x)))
    }

    /// `Λ_s(θ)`: points of `X_{s*}` that are moved by `θ_s` or witnessed by an idempotent below `s`.
    pub fn lambda(&self, s: usize) -> PointSet {
        let ss = self.semigroup.star(s);
        let witnessed = self.idempotent_witnessed(s);
        PointSet::new(
            self.model,
            self.domains[ss].iter().filter(|&x| self.theta[s][x] != Some(x) || witnessed.contains(x)),
        )
    }

    pub fn is_topologically_principal(&self) -> PrincipalVerdict {
        let mut certificates = Vec::new();
        let mut witness = None;
        for s in 0..self.semigroup.len() {
            let domain = self.domains[self.semigroup.star(s)].as_point_set();
            let lambda = self.lambda(s);
            let dense = lambda.is_dense_in(&domain);
            if !dense && witness.is_none() {
                let x = domain.difference(&lambda.closure()).iter().next().unwrap();
                witness = Some(PointWitness {
                    element: self.semigroup.label(s).to_string(),
                    point: self.model.point_label(x),
                });
            }
            certificates.push(LambdaCertificate {
                element: self.semigroup.label(s).to_string(),
                domain: domain.labels(),
                lambda: lambda.labels(),
                dense,
            });
        }
        PrincipalVerdict { principal: witness.is_none(), certificates, witness }
    }

    pub fn is_topologically_free(&self) -> FreeVerdict {
        for s in 0..self.semigroup.len() {
            let fixed_interior = self.fixed_set(s).interior();
            let witnessed = self.idempotent_witnessed(s);
            if fixed_interior != witnessed {
                let x = fixed_interior
                    .difference(&witnessed)
                    .union(&witnessed.difference(&fixed_interior))
                    .iter()
                    .next()
                    .unwrap();
                return FreeVerdict {
                    free: false,
                    witness: Some(PointWitness {
                        element: self.semigroup.label(s).to_string(),
                        point: self.model.point_label(x),
                    }),
                };
            }
        }
        FreeVerdict { free: true, witness: None }
    }

    /// Moved and fixed sets of every non-identity element, when `S` is a group.
    pub fn group_element_sets(&self) -> Option<Vec<GroupElementSets>> {
        let one = self.semigroup.group_identity()?;
        Some(
            (0..self.semigroup.len())
                .filter(|&t| t != one)
                .map(|t| {
                    let domain = self.domains[self.semigroup.star(t)].as_point_set();
                    let fixed = self.fixed_set(t);
                    let moved = domain.difference(&fixed);
                    GroupElementSets {
                        element: self.semigroup.label(t).to_string(),
                        moved_dense: moved.is_dense_in(&domain),
                        fixed_interior_empty: fixed.interior().is_empty(),
                        moved: moved.labels(),
                        fixed: fixed.labels(),
                    }
                })
                .collect(),
        )
    }

    /// `α_s(f) = f ∘ θ_{s*}` on `X_s`, zero elsewhere. Requires `supp(f) ⊆ X_{s*}`.
    pub fn alpha(&self, s: usize, f: &LcFun) -> Result<LcFun> {
        let ss = self.semigroup.star(s);
        if f.model() != self.model {
            return Err(Error::Mismatch("function lives in another space".into()));
        }
        if !f.support().is_subset(&self.domains[ss]) {
            return Err(Error::Element(format!(
                "α_{} is defined on functions supported in {}",
                self.semigroup.label(s),
                self.domains[ss]
            )));
        }
        Ok(self.alpha_unchecked(s, f))
    }

    /// `α_s(f · 1_{X_{s*}})`
    pub fn alpha_unchecked(&self, s: usize, f: &LcFun) -> LcFun {
        let carrier = f.carrier();
        let ss = self.semigroup.star(s);
        let mut values = vec![crate::linalg::Field::zero(&carrier); self.model.num_points()];
        for x in self.domains[s].iter() {
            let y = self.theta[ss][x].expect("θ_{s*} is defined on X_s");
            values[x] = f.value_at(y).clone();
        }
        LcFun::from_values(self.model, carrier, values).expect("θ fixes the tail block")
    }

    /// Writes `f = Σ f·1_{K_j}` with disjoint `K_j ⊆ X_{e_j}`, `e_j` idempotent.
    pub fn decompose(&self, f: &LcFun) -> Vec<(usize, LcFun)> {
        let mut remaining = f.support();
        let mut out = Vec::new();
        for e in self.semigroup.idempotents() {
            let k = remaining.intersection(&self.domains[e]);
            if !k.is_empty() {
                remaining = remaining.difference(&k);
                out.push((e, f.restrict(&k)));
            }
        }
        debug_assert!(remaining.is_empty());
        out
    }

    /// Checks that `α` is a partial action on `L_c(X)` with the given coefficients,
    /// on the basis of atom indicators.
    pub fn check_algebra_action(&self, carrier: Carrier) -> Result<()> {
        let s_ = &self.semigroup;
        let atoms = self.model.atoms();
        let ind = |k: &ClopenSet| LcFun::indicator(k, carrier);
        for a in &atoms {
            let f = ind(a);
            let parts = self.decompose(&f);
            let mut sum = LcFun::zero(self.model, carrier);
            for (e, g) in &parts {
                if !g.support().is_subset(&self.domains[*e]) {
                    return Err(Error::action("decomposition leaves D_e", self.witness(*e, None, None)));
                }
                sum = sum.add(g)?;
            }
            if sum != f {
                return Err(Error::action("L_c(X) is not generated by the D_e", format!("atom {a}")));
            }
        }
        for s in 0..s_.len() {
            let ss = s_.star(s);
            let in_src: Vec<&ClopenSet> = atoms.iter().filter(|a| a.is_subset(&self.domains[ss])).collect();
            for (i, a) in in_src.iter().enumerate() {
                let fa = self.alpha(s, &ind(a))?;
                if self.alpha(ss, &fa)? != ind(a) {
                    return Err(Error::action("α_{s*} must invert α_s", format!("s = {}, atom {a}", s_.label(s))));
                }
                for b in &in_src[i..] {
                    let lhs = self.alpha(s, &ind(a).mul(&ind(b))?)?;
                    let rhs = fa.mul(&self.alpha(s, &ind(b))?)?;
                    if lhs != rhs {
                        return Err(Error::action("α_s must be multiplicative", format!("s = {}", s_.label(s))));
                    }
                }
            }
            for t in 0..s_.len() {
                let st = s_.mul(s, t);
                let lhs: BTreeSet<ClopenSet> = in_src
                    .iter()
                    .filter(|a| a.is_subset(&self.domains[t]))
                    .map(|a| self.alpha(s, &ind(a)).map(|g| g.support()))
                    .collect::<Result<_>>()?;
                let target = self.domains[s].intersection(&self.domains[st]);
                let rhs: BTreeSet<ClopenSet> = atoms.iter().filter(|a| a.is_subset(&target)).cloned().collect();
                if lhs != rhs {
                    return Err(Error::action(
                        "α_s(D_{s*} ∩ D_t) must equal D_s ∩ D_{st}",
                        self.witness(s, Some(t), None),
                    ));
                }
                let common = self.domains[s_.star(t)].intersection(&self.domains[s_.mul(s_.star(t), ss)]);
                for a in atoms.iter().filter(|a| a.is_subset(&common)) {
                    if self.alpha(s, &self.alpha(t, &ind(a))?)? != self.alpha(st, &ind(a))? {
                        return Err(Error::action("α_s α_t must equal α_{st}", self.witness(s, Some(t), None)));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Munn representation: `X = E(S)` discrete, `X_s = {e ≤ ss*}`, `θ_s(e) = s e s*`.
/// Points follow the order of `E(S)` inside `S`.
pub fn munn_action(s: &InverseSemigroup) -> Result<PartialAction> {
    let idem = s.idempotents();
    let pos: BTreeMap<usize, usize> = idem.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let model = SpaceModel::Finite { n: idem.len() };
    let mut domains = Vec::new();
    let mut maps = Vec::new();
    for a in 0..s.len() {
        let r = s.range_idempotent(a);
        let d = idem.iter().filter(|&&e| s.le(e, r)).map(|e| pos[e]);
        domains.push(ClopenSet::new(model, d)?);
        let src = s.source_idempotent(a);
        let mut m = BTreeMap::new();
        for &e in idem.iter().filter(|&&e| s.le(e, src)) {
            m.insert(pos[&e], pos[&s.mul(s.mul(a, e), s.star(a))]);
        }
        maps.push(m);
    }
    PartialAction::new(s.clone(), ActionData { model, domains, maps, tail_witnessed: BTreeSet::new() })
}

/// The two-headed snake acting on `ℕ ∪ {∞}` through a window of `window` points:
/// `X_n = {1, …, n}`, `X_∞ = X_z = X`, every map the identity. Beyond the window the
/// idempotents `n > window` lie below `z`, so `z` is tail witnessed.
pub fn snake_action(window: usize) -> Result<PartialAction> {
    let s = crate::isg::build::snake(window);
    let model = SpaceModel::OmegaPlus { window };
    let mut domains = Vec::new();
    let mut maps = Vec::new();
    for a in 0..s.len() {
        let d = if a < window { ClopenSet::new(model, 0..=a)? } else { model.full() };
        maps.push(d.iter().filter(|&x| x < window).map(|x| (x, x)).collect());
        domains.push(d);
    }
    let z = s.index_of("z").unwrap();
    PartialAction::new(s, ActionData { model, domains, maps, tail_witnessed: BTreeSet::from([z]) })
}

/// A global action of a group on `n` points given by `perm(g, x)`.
pub fn global_group_action(
    group: &InverseSemigroup,
    n: usize,
    perm: impl Fn(usize, usize) -> usize,
) -> Result<PartialAction> {
    let model = SpaceModel::Finite { n };
    let len = group.len();
    PartialAction::new(
        group.clone(),
        ActionData {
            model,
            domains: vec![model.full(); len],
            maps: (0..len).map(|g| (0..n).map(|x| (x, perm(g, x))).collect()).collect(),
            tail_witnessed: BTreeSet::new(),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isg::build::{cyclic_group, min_semilattice, snake};
    use crate::linalg::Field;

    #[test]
    fn munn_of_finite_snake_is_accepted() {
        let a = munn_action(&snake(4)).unwrap();
        assert_eq!(a.model(), SpaceModel::Finite { n: 5 });
        a.check_algebra_action(Carrier::Gf(2)).unwrap();
    }

    #[test]
    fn swap_and_translation() {
        let z2 = cyclic_group(2);
        let swap = global_group_action(&z2, 2, |g, x| (x + g) % 2).unwrap();
        let m = swap.model();
        let one = ClopenSet::new(m, [0]).unwrap();
        let k = Carrier::Gf(3);
        assert_eq!(
            swap.alpha(1, &LcFun::indicator(&one, k)).unwrap(),
            LcFun::indicator(&ClopenSet::new(m, [1]).unwrap(), k)
        );
        assert!(swap.is_minimal().minimal);
        assert!(swap.is_topologically_free().free);
        assert!(swap.is_topologically_principal().principal);
    }

    #[test]
    fn uncovered_point_is_rejected() {
        let s = min_semilattice(1);
        let model = SpaceModel::Finite { n: 2 };
        let err = PartialAction::new(
            s,
            ActionData {
                model,
                domains: vec![ClopenSet::new(model, [0]).unwrap()],
                maps: vec![BTreeMap::from([(0, 0)])],
                tail_witnessed: BTreeSet::new(),
            },
        )
        .unwrap_err();
        match err {
            Error::Action { axiom, witness } => {
                assert!(axiom.contains("union"));
                assert!(witness.contains("x = 2"));
            }
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn idempotent_must_not_move_points() {
        let s = min_semilattice(1);
        let model = SpaceModel::Finite { n: 2 };
        let err = PartialAction::new(
            s,
            ActionData {
                model,
                domains: vec![model.full()],
                maps: vec![BTreeMap::from([(0, 1), (1, 0)])],
                tail_witnessed: BTreeSet::new(),
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::Action { .. }));
    }

    #[test]
    fn snake_dynamics() {
        let a = snake_action(4).unwrap();
        let z = a.semigroup().index_of("z").unwrap();
        let inf = a.semigroup().index_of("inf").unwrap();
        let m = a.model();
        let k = Carrier::Rational;
        let f = LcFun::indicator(&ClopenSet::from_labels(m, &[3, 4], true).unwrap(), k);
        assert_eq!(a.alpha(z, &f).unwrap(), f);

        let minimal = a.is_minimal();
        assert!(!minimal.minimal);
        assert_eq!(minimal.witness, Some(vec!["1".to_string()]));

        let principal = a.is_topologically_principal();
        assert!(principal.principal);
        let cert = &principal.certificates[z];
        assert_eq!(cert.lambda, ["1", "2", "3", "4", "tail"]);
        assert_eq!(principal.certificates[inf].lambda, cert.domain);

        let free = a.is_topologically_free();
        assert!(!free.free);
        assert_eq!(free.witness, Some(PointWitness { element: "z".into(), point: "inf".into() }));
        a.check_algebra_action(Carrier::Gf(2)).unwrap();
    }

    #[test]
    fn identity_action_of_z2_is_not_principal() {
        let z2 = cyclic_group(2);
        let a = global_group_action(&z2, 2, |_, x| x).unwrap();
        let v = a.is_topologically_principal();
        assert!(!v.principal);
        assert!(v.certificates[1].lambda.is_empty());
        assert!(!a.is_topologically_free().free);
        let sets = a.group_element_sets().unwrap();
        assert!(!sets[0].moved_dense && !sets[0].fixed_interior_empty);
    }

    #[test]
    fn semilattice_actions_are_principal_and_free() {
        let a = munn_action(&min_semilattice(3)).unwrap();
        assert!(a.is_topologically_principal().principal);
        assert!(a.is_topologically_free().free);
        assert!(!a.is_minimal().minimal);
    }

    #[test]
    fn single_point_is_minimal() {
        let a = munn_action(&min_semilattice(1)).unwrap();
        assert!(a.is_minimal().minimal);
        assert!(a.minimal_by_hulls().minimal);
    }

    #[test]
    fn decomposition_reassembles() {
        let a = munn_action(&snake(3)).unwrap();
        let k = Carrier::Gf(5);
        let f = LcFun::from_values(a.model(), k, (0..4).map(|v| k.from_i64(v + 1)).collect()).unwrap();
        let parts = a.decompose(&f);
        let mut sum = LcFun::zero(a.model(), k);
        for (e, g) in &parts {
            assert!(g.support().is_subset(a.domain(*e)));
            sum = sum.add(g).unwrap();
        }
        assert_eq!(sum, f);
        assert!(k.is_zero(&k.zero()));
    }
}
