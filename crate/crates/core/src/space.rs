//! Zero-dimensional base spaces, their clopen sets, and the function ring `L_c(X)`.
//!
//! Two models are supported:
//!
//! * `Finite { n }`: `n` isolated points.
//! * `OmegaPlus { window }`: the one-point compactification `ℕ ∪ {∞}` seen through a
//!   window. Points `1..=window` are explicit, one symbolic *tail* point stands for
//!   every natural number beyond the window, and the last point is `∞`. A clopen set is
//!   a set of window points, plus optionally the tail together with `∞` (cofinite sets
//!   contain `∞`; finite sets live inside the window).
//!
//! Internally points are dense indices: window/finite points first, then tail, then `∞`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Field, Subspace};
use crate::scalar::{Carrier, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpaceModel {
    Finite { n: usize },
    OmegaPlus { window: usize },
}

impl SpaceModel {
    pub fn num_points(&self) -> usize {
        match *self {
            SpaceModel::Finite { n } => n,
            SpaceModel::OmegaPlus { window } => window + 2,
        }
    }

    /// Number of explicit points (finite points or window points).
    pub fn explicit_points(&self) -> usize {
        match *self {
            SpaceModel::Finite { n } => n,
            SpaceModel::OmegaPlus { window } => window,
        }
    }

    pub fn tail(&self) -> Option<usize> {
        match *self {
            SpaceModel::Finite { .. } => None,
            SpaceModel::OmegaPlus { window } => Some(window),
        }
    }

    pub fn infinity(&self) -> Option<usize> {
        match *self {
            SpaceModel::Finite { .. } => None,
            SpaceModel::OmegaPlus { window } => Some(window + 1),
        }
    }

    pub fn point_label(&self, x: usize) -> String {
        if Some(x) == self.tail() {
            "tail".into()
        } else if Some(x) == self.infinity() {
            "inf".into()
        } else {
            (x + 1).to_string()
        }
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.num_points()
    }

    pub fn full(&self) -> ClopenSet {
        ClopenSet { model: *self, points: self.points().collect() }
    }

    pub fn empty(&self) -> ClopenSet {
        ClopenSet { model: *self, points: BTreeSet::new() }
    }

    /// The finest clopen partition: singletons, and in `OmegaPlus` the block `tail ∪ {∞}`.
    pub fn atoms(&self) -> Vec<ClopenSet> {
        let mut out: Vec<ClopenSet> =
            (0..self.explicit_points()).map(|x| ClopenSet { model: *self, points: BTreeSet::from([x]) }).collect();
        if let (Some(t), Some(i)) = (self.tail(), self.infinity()) {
            out.push(ClopenSet { model: *self, points: BTreeSet::from([t, i]) });
        }
        out
    }

    /// Index into [`SpaceModel::atoms`] of the atom containing `x`.
    pub fn atom_of(&self, x: usize) -> usize {
        x.min(self.explicit_points())
    }

    /// Smallest open neighbourhood of a point in the windowed topology.
    pub fn basic_neighbourhood(&self, x: usize) -> PointSet {
        if Some(x) == self.infinity() {
            PointSet::new(*self, [self.tail().unwrap(), x])
        } else {
            PointSet::new(*self, [x])
        }
    }

    fn check_same(&self, other: &SpaceModel) -> Result<()> {
        if self != other {
            return Err(Error::Mismatch(format!("spaces {self:?} and {other:?}")));
        }
        Ok(())
    }
}

impl fmt::Display for SpaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceModel::Finite { n } => write!(f, "finite({n})"),
            SpaceModel::OmegaPlus { window } => write!(f, "omega_plus(window={window})"),
        }
    }
}

/// An arbitrary subset of the model's points (not necessarily open or closed).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    model: SpaceModel,
    points: BTreeSet<usize>,
}

impl PointSet {
    pub fn new(model: SpaceModel, points: impl IntoIterator<Item = usize>) -> Self {
        let points: BTreeSet<usize> = points.into_iter().collect();
        assert!(points.iter().all(|&x| x < model.num_points()), "point out of range");
        PointSet { model, points }
    }

    pub fn model(&self) -> SpaceModel {
        self.model
    }

    pub fn contains(&self, x: usize) -> bool {
        self.points.contains(&x)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.points.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.points.is_subset(&other.points)
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        PointSet { model: self.model, points: self.points.union(&other.points).copied().collect() }
    }

    pub fn difference(&self, other: &PointSet) -> PointSet {
        PointSet { model: self.model, points: self.points.difference(&other.points).copied().collect() }
    }

    pub fn is_open(&self) -> bool {
        match (self.model.tail(), self.model.infinity()) {
            (Some(t), Some(i)) => !self.contains(i) || self.contains(t),
            _ => true,
        }
    }

    /// Closure: a set meeting the tail accumulates at `∞`.
    pub fn closure(&self) -> PointSet {
        let mut c = self.clone();
        if let (Some(t), Some(i)) = (self.model.tail(), self.model.infinity()) {
            if self.contains(t) {
                c.points.insert(i);
            }
        }
        c
    }

    /// Interior: `∞` is interior only if the tail is present too.
    pub fn interior(&self) -> PointSet {
        let mut c = self.clone();
        if let (Some(t), Some(i)) = (self.model.tail(), self.model.infinity()) {
            if !self.contains(t) {
                c.points.remove(&i);
            }
        }
        c
    }

    pub fn is_dense_in(&self, v: &PointSet) -> bool {
        v.is_subset(&self.closure())
    }

    /// The clopen set with these points, if it is one.
    pub fn to_clopen(&self) -> Option<ClopenSet> {
        ClopenSet::new(self.model, self.points.iter().copied()).ok()
    }

    pub fn labels(&self) -> Vec<String> {
        self.points.iter().map(|&x| self.model.point_label(x)).collect()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(","))
    }
}

/// A compact-open subset of the model.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClopenSet {
    model: SpaceModel,
    points: BTreeSet<usize>,
}

impl ClopenSet {
    /// Fails if a point is out of range or, in `OmegaPlus`, if tail and `∞` are split.
    pub fn new(model: SpaceModel, points: impl IntoIterator<Item = usize>) -> Result<Self> {
        let points: BTreeSet<usize> = points.into_iter().collect();
        if let Some(&x) = points.iter().find(|&&x| x >= model.num_points()) {
            return Err(Error::Space(format!("point index {x} outside {model}")));
        }
        if let (Some(t), Some(i)) = (model.tail(), model.infinity()) {
            if points.contains(&t) != points.contains(&i) {
                return Err(Error::Space(
                    "clopen sets of omega_plus contain the tail exactly when they contain inf".into(),
                ));
            }
        }
        Ok(ClopenSet { model, points })
    }

    /// From 1-based explicit points plus a tail flag (the JSON encoding).
    pub fn from_labels(model: SpaceModel, points: &[usize], tail: bool) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &p in points {
            if p == 0 || p > model.explicit_points() {
                return Err(Error::Space(format!("point {p} outside {model}")));
            }
            set.insert(p - 1);
        }
        match (model.tail(), model.infinity()) {
            (Some(t), Some(i)) if tail => {
                set.insert(t);
                set.insert(i);
            }
            (None, _) if tail => return Err(Error::Space("finite spaces have no tail".into())),
            _ => {}
        }
        Ok(ClopenSet { model, points: set })
    }

    /// Explicit points, 1-based, and the tail flag.
    pub fn to_labels(&self) -> (Vec<usize>, bool) {
        let explicit = self.points.iter().filter(|&&x| x < self.model.explicit_points()).map(|x| x + 1).collect();
        let tail = self.model.tail().is_some_and(|t| self.contains(t));
        (explicit, tail)
    }

    pub fn model(&self) -> SpaceModel {
        self.model
    }

    pub fn contains(&self, x: usize) -> bool {
        self.points.contains(&x)
    }

    pub fn has_tail(&self) -> bool {
        self.to_labels().1
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.points.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_subset(&self, other: &ClopenSet) -> bool {
        self.points.is_subset(&other.points)
    }

    pub fn union(&self, other: &ClopenSet) -> ClopenSet {
        ClopenSet { model: self.model, points: self.points.union(&other.points).copied().collect() }
    }

    pub fn intersection(&self, other: &ClopenSet) -> ClopenSet {
        ClopenSet { model: self.model, points: self.points.intersection(&other.points).copied().collect() }
    }

    pub fn difference(&self, other: &ClopenSet) -> ClopenSet {
        ClopenSet { model: self.model, points: self.points.difference(&other.points).copied().collect() }
    }

    pub fn complement(&self) -> ClopenSet {
        self.model.full().difference(self)
    }

    pub fn as_point_set(&self) -> PointSet {
        PointSet { model: self.model, points: self.points.clone() }
    }
}

impl fmt::Display for ClopenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (explicit, tail) = self.to_labels();
        let mut parts: Vec<String> = explicit.iter().map(|p| p.to_string()).collect();
        if tail {
            parts.push("tail".into());
            parts.push("inf".into());
        }
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Coarsest partition of `X` into clopen sets such that every input is a union of parts.
/// Parts are ordered by their smallest point.
pub fn atoms(model: SpaceModel, sets: &[ClopenSet]) -> Result<Vec<ClopenSet>> {
    for s in sets {
        model.check_same(&s.model)?;
    }
    let mut groups: BTreeMap<Vec<bool>, BTreeSet<usize>> = BTreeMap::new();
    for x in model.points() {
        let signature: Vec<bool> = sets.iter().map(|s| s.contains(x)).collect();
        groups.entry(signature).or_default().insert(x);
    }
    let mut parts: Vec<ClopenSet> = groups.into_values().map(|points| ClopenSet { model, points }).collect();
    parts.sort_by_key(|p| p.points.first().copied());
    Ok(parts)
}

/// A locally constant, compactly supported function, stored by its value at every point.
/// In `OmegaPlus` the tail and `∞` always carry the same value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LcFun {
    model: SpaceModel,
    carrier: Carrier,
    values: Vec<Scalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcOp {
    Add,
    Mul,
}

impl LcFun {
    pub fn zero(model: SpaceModel, carrier: Carrier) -> Self {
        LcFun { model, carrier, values: vec![carrier.zero(); model.num_points()] }
    }

    pub fn indicator(set: &ClopenSet, carrier: Carrier) -> Self {
        Self::constant_on(set, carrier.one(), carrier)
    }

    pub fn constant_on(set: &ClopenSet, value: Scalar, carrier: Carrier) -> Self {
        let mut f = Self::zero(set.model, carrier);
        for x in set.iter() {
            f.values[x] = value.clone();
        }
        f
    }

    /// Builds `Σ c_i 1_{D_i}` from pairwise disjoint pieces.
    pub fn from_pieces(model: SpaceModel, carrier: Carrier, pieces: &[(ClopenSet, Scalar)]) -> Result<Self> {
        let mut f = Self::zero(model, carrier);
        let mut seen = model.empty();
        for (piece, value) in pieces {
            model.check_same(&piece.model)?;
            carrier.check(value)?;
            if !piece.intersection(&seen).is_empty() {
                return Err(Error::Space(format!("function pieces overlap at {}", piece.intersection(&seen))));
            }
            seen = seen.union(piece);
            for x in piece.iter() {
                f.values[x] = value.clone();
            }
        }
        Ok(f)
    }

    /// Function with the given value at each point. Fails if tail and `∞` differ.
    pub fn from_values(model: SpaceModel, carrier: Carrier, values: Vec<Scalar>) -> Result<Self> {
        if values.len() != model.num_points() {
            return Err(Error::Space("wrong number of point values".into()));
        }
        for v in &values {
            carrier.check(v)?;
        }
        if let (Some(t), Some(i)) = (model.tail(), model.infinity()) {
            if values[t] != values[i] {
                return Err(Error::Space("function is not locally constant at inf".into()));
            }
        }
        Ok(LcFun { model, carrier, values })
    }

    pub fn model(&self) -> SpaceModel {
        self.model
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn value_at(&self, x: usize) -> &Scalar {
        &self.values[x]
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| self.carrier.is_zero(v))
    }

    pub fn support(&self) -> ClopenSet {
        ClopenSet {
            model: self.model,
            points: self.model.points().filter(|&x| !self.carrier.is_zero(&self.values[x])).collect(),
        }
    }

    /// Canonical pieces: one per nonzero value, ordered by smallest point.
    pub fn pieces(&self) -> Vec<(ClopenSet, Scalar)> {
        let mut out: Vec<(ClopenSet, Scalar)> = Vec::new();
        for x in self.model.points() {
            let v = &self.values[x];
            if self.carrier.is_zero(v) {
                continue;
            }
            match out.iter_mut().find(|(_, w)| w == v) {
                Some((piece, _)) => {
                    piece.points.insert(x);
                }
                None => out.push((ClopenSet { model: self.model, points: BTreeSet::from([x]) }, v.clone())),
            }
        }
        out
    }

    fn check_compatible(&self, other: &LcFun) -> Result<()> {
        self.model.check_same(&other.model)?;
        if self.carrier != other.carrier {
            return Err(Error::Mismatch(format!("carriers {} and {}", self.carrier, other.carrier)));
        }
        Ok(())
    }

    fn zip(&self, other: &LcFun, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<LcFun> {
        self.check_compatible(other)?;
        Ok(LcFun {
            model: self.model,
            carrier: self.carrier,
            values: self.values.iter().zip(&other.values).map(|(a, b)| op(a, b)).collect(),
        })
    }

    /// Pointwise sum or product.
    pub fn arith(&self, other: &LcFun, op: LcOp) -> Result<LcFun> {
        let k = self.carrier;
        match op {
            LcOp::Add => self.zip(other, |a, b| k.add(a, b)),
            LcOp::Mul => self.zip(other, |a, b| k.mul(a, b)),
        }
    }

    pub fn add(&self, other: &LcFun) -> Result<LcFun> {
        self.arith(other, LcOp::Add)
    }

    pub fn mul(&self, other: &LcFun) -> Result<LcFun> {
        self.arith(other, LcOp::Mul)
    }

    pub fn sub(&self, other: &LcFun) -> Result<LcFun> {
        let k = self.carrier;
        self.zip(other, |a, b| k.sub(a, b))
    }

    pub fn scale(&self, c: &Scalar) -> Result<LcFun> {
        self.carrier.check(c)?;
        let k = self.carrier;
        Ok(LcFun { model: self.model, carrier: k, values: self.values.iter().map(|v| k.mul(c, v)).collect() })
    }

    pub fn neg(&self) -> LcFun {
        let k = self.carrier;
        LcFun { model: self.model, carrier: k, values: self.values.iter().map(|v| k.neg(v)).collect() }
    }

    /// `f · 1_D`
    pub fn restrict(&self, d: &ClopenSet) -> LcFun {
        let mut g = self.clone();
        for x in self.model.points() {
            if !d.contains(x) {
                g.values[x] = self.carrier.zero();
            }
        }
        g
    }

    /// Coordinates in the basis of model-atom indicators.
    pub fn atom_coords(&self) -> Vec<Scalar> {
        self.model.atoms().iter().map(|a| self.values[a.iter().next().unwrap()].clone()).collect()
    }

    pub fn from_atom_coords(model: SpaceModel, carrier: Carrier, coords: &[Scalar]) -> LcFun {
        let mut f = Self::zero(model, carrier);
        for x in model.points() {
            f.values[x] = coords[model.atom_of(x)].clone();
        }
        f
    }
}

impl fmt::Display for LcFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces = self.pieces();
        if pieces.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = pieces.iter().map(|(p, v)| format!("{p}->{v}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn require_field(carrier: Carrier) -> Result<()> {
    if carrier.is_field() {
        Ok(())
    } else {
        Err(Error::NotAField(carrier))
    }
}

/// `I(U) = {f : supp(f) ⊆ U}` for an open `U`, as a basis of atom indicators.
pub fn ideal_of_open(model: SpaceModel, carrier: Carrier, open: &PointSet) -> Result<Vec<LcFun>> {
    require_field(carrier)?;
    model.check_same(&open.model)?;
    if !open.is_open() {
        return Err(Error::Space(format!("{open} is not open")));
    }
    Ok(model
        .atoms()
        .iter()
        .filter(|a| a.as_point_set().is_subset(open))
        .map(|a| LcFun::indicator(a, carrier))
        .collect())
}

/// `I(T) = {f : f = 0 on T}` for any subset `T`.
pub fn vanishing_ideal(model: SpaceModel, carrier: Carrier, t: &PointSet) -> Result<Vec<LcFun>> {
    require_field(carrier)?;
    model.check_same(&t.model)?;
    Ok(model
        .atoms()
        .iter()
        .filter(|a| a.iter().all(|x| !t.contains(x)))
        .map(|a| LcFun::indicator(a, carrier))
        .collect())
}

/// Basis (as atom coordinates) of the ideal of `L_c(X)` generated by `generators`.
pub fn ideal_closure(model: SpaceModel, carrier: Carrier, generators: &[LcFun]) -> Result<Subspace<Carrier>> {
    require_field(carrier)?;
    let atoms = model.atoms();
    let mut ideal = Subspace::new(atoms.len());
    let mut queue: Vec<Vec<Scalar>> = Vec::new();
    for g in generators {
        model.check_same(&g.model)?;
        if g.carrier != carrier {
            return Err(Error::Mismatch(format!("carriers {} and {}", g.carrier, carrier)));
        }
        queue.push(g.atom_coords());
    }
    while let Some(v) = queue.pop() {
        if !ideal.insert(&carrier, v.clone()) {
            continue;
        }
        // multiply by each atom indicator
        for k in 0..atoms.len() {
            let mut w = vec![carrier.zero(); atoms.len()];
            w[k] = v[k].clone();
            if !carrier.is_zero(&w[k]) && !ideal.contains(&carrier, &w) {
                queue.push(w);
            }
        }
    }
    Ok(ideal)
}

/// The open set `U = ⋃ supp(f)` over the ideal generated by `generators`.
pub fn open_of_ideal(model: SpaceModel, carrier: Carrier, generators: &[LcFun]) -> Result<PointSet> {
    let ideal = ideal_closure(model, carrier, generators)?;
    let mut points = BTreeSet::new();
    for row in ideal.basis() {
        let f = LcFun::from_atom_coords(model, carrier, row);
        points.extend(f.support().iter());
    }
    Ok(PointSet { model, points })
}

#[cfg(test)]
mod tests {
    use super::*;

    const GF2: Carrier = Carrier::Gf(2);

    fn fin(n: usize) -> SpaceModel {
        SpaceModel::Finite { n }
    }

    #[test]
    fn indicator_algebra() {
        let m = fin(4);
        let a = ClopenSet::new(m, [0, 1, 2]).unwrap();
        let b = ClopenSet::new(m, [1, 3]).unwrap();
        let prod = LcFun::indicator(&a, GF2).mul(&LcFun::indicator(&b, GF2)).unwrap();
        assert_eq!(prod, LcFun::indicator(&a.intersection(&b), GF2));
        let twice = LcFun::indicator(&a, GF2).add(&LcFun::indicator(&a, GF2)).unwrap();
        assert!(twice.is_zero());
    }

    #[test]
    fn omega_plus_sum_merges_tail_piece() {
        let m = SpaceModel::OmegaPlus { window: 3 };
        let q = Carrier::Rational;
        let one = LcFun::indicator(&m.full(), q);
        let first = LcFun::indicator(&ClopenSet::from_labels(m, &[1], false).unwrap(), q);
        let sum = one.add(&first).unwrap();
        let pieces = sum.pieces();
        assert_eq!(pieces.len(), 2);
        assert_eq!(pieces[0].0, ClopenSet::from_labels(m, &[1], false).unwrap());
        assert_eq!(pieces[0].1, q.from_i64(2));
        assert_eq!(pieces[1].0, ClopenSet::from_labels(m, &[2, 3], true).unwrap());
        assert_eq!(pieces[1].1, q.from_i64(1));
        assert_eq!(sum.to_string(), "{1}->2 + {2,3,tail,inf}->1");
    }

    #[test]
    fn mismatched_carriers_rejected() {
        let m = fin(2);
        let f = LcFun::indicator(&m.full(), GF2);
        let g = LcFun::indicator(&m.full(), Carrier::Gf(3));
        assert!(matches!(f.add(&g), Err(Error::Mismatch(_))));
    }

    #[test]
    fn split_tail_is_not_clopen() {
        let m = SpaceModel::OmegaPlus { window: 2 };
        assert!(ClopenSet::new(m, [2]).is_err());
        assert!(ClopenSet::new(m, [2, 3]).is_ok());
    }

    #[test]
    fn atoms_examples() {
        let m = fin(3);
        assert_eq!(atoms(m, &[m.full()]).unwrap(), vec![m.full()]);
        let a = ClopenSet::new(m, [0, 1]).unwrap();
        let b = ClopenSet::new(m, [1, 2]).unwrap();
        let parts = atoms(m, &[a, b]).unwrap();
        let expect: Vec<ClopenSet> = (0..3).map(|x| ClopenSet::new(m, [x]).unwrap()).collect();
        assert_eq!(parts, expect);

        let w = SpaceModel::OmegaPlus { window: 5 };
        let cofinite = ClopenSet::from_labels(w, &[3, 4, 5], true).unwrap();
        let parts = atoms(w, std::slice::from_ref(&cofinite)).unwrap();
        assert_eq!(parts, vec![ClopenSet::from_labels(w, &[1, 2], false).unwrap(), cofinite]);
    }

    #[test]
    fn omega_topology() {
        let m = SpaceModel::OmegaPlus { window: 3 };
        let naturals = PointSet::new(m, [0, 1, 2, 3]);
        assert!(naturals.is_open());
        assert!(naturals.is_dense_in(&m.full().as_point_set()));
        let window_only = PointSet::new(m, [0, 1, 2]);
        assert!(!window_only.is_dense_in(&m.full().as_point_set()));
        let with_inf = PointSet::new(m, [0, 4]);
        assert!(!with_inf.is_open());
        assert_eq!(with_inf.interior(), PointSet::new(m, [0]));
        assert_eq!(m.full().as_point_set().interior(), m.full().as_point_set());
    }

    #[test]
    fn ideal_examples() {
        let m = fin(3);
        assert!(ideal_of_open(m, GF2, &PointSet::new(m, [])).unwrap().is_empty());
        assert_eq!(ideal_of_open(m, GF2, &m.full().as_point_set()).unwrap().len(), 3);
        let g = LcFun::indicator(&ClopenSet::new(m, [0]).unwrap(), GF2)
            .add(&LcFun::indicator(&ClopenSet::new(m, [1]).unwrap(), GF2))
            .unwrap();
        assert_eq!(open_of_ideal(m, GF2, &[g]).unwrap(), PointSet::new(m, [0, 1]));
        assert!(matches!(ideal_of_open(m, Carrier::Zmod(4), &PointSet::new(m, [0])), Err(Error::NotAField(_))));
    }

    #[test]
    fn vanishing_ideal_sees_only_closure() {
        let m = SpaceModel::OmegaPlus { window: 3 };
        let t = PointSet::new(m, [3]);
        let a = vanishing_ideal(m, GF2, &t).unwrap();
        let b = vanishing_ideal(m, GF2, &t.closure()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn opens_and_ideals_in_bijection() {
        // every open set of a small discrete space is recovered from its ideal,
        // and every ideal generated by a single function is some I(U)
        for n in 1..=5 {
            let m = fin(n);
            let mut ideals = BTreeSet::new();
            for mask in 0u32..(1 << n) {
                let u = PointSet::new(m, (0..n).filter(|x| mask >> x & 1 == 1));
                let basis = ideal_of_open(m, GF2, &u).unwrap();
                assert_eq!(open_of_ideal(m, GF2, &basis).unwrap(), u);
                ideals.insert(u);
            }
            assert_eq!(ideals.len(), 1 << n);
            for mask in 0u32..(1 << n) {
                let f = LcFun::indicator(&ClopenSet::new(m, (0..n).filter(|x| mask >> x & 1 == 1)).unwrap(), GF2);
                let u = open_of_ideal(m, GF2, std::slice::from_ref(&f)).unwrap();
                assert_eq!(u, f.support().as_point_set());
                assert!(ideals.contains(&u));
            }
        }
    }
}
