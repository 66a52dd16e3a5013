//! Finite discrete groupoids, their Steinberg algebras, the inverse semigroup `G^a` of
//! bisections acting on the unit space, and the isomorphism `A_R(G) ≅ L_c(G⁽⁰⁾) ⋊ G^a`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::action::{ActionData, PartialAction};
use crate::bruteforce::{brute_force, BruteForceReport};
use crate::error::{Error, Result};
use crate::isg::InverseSemigroup;
use crate::linalg::Field;
use crate::scalar::{Carrier, Scalar};
use crate::skew::{SkewElement, SkewRing};
use crate::space::{ClopenSet, LcFun, SpaceModel};

pub const DEFAULT_ARROW_CAP: usize = 64;
/// Largest groupoid whose full set of bisections is enumerated.
pub const BISECTION_ARROW_CAP: usize = 16;

/// Unvalidated JSON form. `compose` lists `[c, d, cd]` for every pair with `s(c) = r(d)`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawGroupoid {
    pub arrows: Vec<String>,
    pub src: BTreeMap<String, String>,
    pub rng: BTreeMap<String, String>,
    pub inv: BTreeMap<String, String>,
    pub compose: Vec<[String; 3]>,
    /// Optional generating family of bisections, used instead of all of `G^a`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bisections: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug)]
pub struct Groupoid {
    labels: Vec<String>,
    src: Vec<usize>,
    rng: Vec<usize>,
    inv: Vec<usize>,
    compose: HashMap<(usize, usize), usize>,
    units: Vec<usize>,
    unit_pos: BTreeMap<usize, usize>,
    family: Option<Vec<BTreeSet<usize>>>,
}

impl Groupoid {
    pub fn verify(raw: &RawGroupoid) -> Result<Self> {
        let n = raw.arrows.len();
        if n == 0 {
            return Err(Error::Parse("groupoid has no arrows".into()));
        }
        if n > DEFAULT_ARROW_CAP {
            return Err(Error::CapExceeded { what: "arrow count".into(), value: n, cap: DEFAULT_ARROW_CAP });
        }
        let mut index = HashMap::new();
        for (i, a) in raw.arrows.iter().enumerate() {
            if index.insert(a.clone(), i).is_some() {
                return Err(Error::groupoid("arrow labels must be distinct", a.clone()));
            }
        }
        let lookup = |what: &str, map: &BTreeMap<String, String>| -> Result<Vec<usize>> {
            raw.arrows
                .iter()
                .map(|a| {
                    let v = map.get(a).ok_or_else(|| Error::groupoid(&format!("{what} must be total"), a.clone()))?;
                    index.get(v).copied().ok_or_else(|| {
                        Error::groupoid(&format!("{what} must name an arrow"), format!("{what}({a}) = {v}"))
                    })
                })
                .collect()
        };
        let src = lookup("src", &raw.src)?;
        let rng = lookup("rng", &raw.rng)?;
        let inv = lookup("inv", &raw.inv)?;
        let units: BTreeSet<usize> = src.iter().chain(&rng).copied().collect();
        for &u in &units {
            if src[u] != u || rng[u] != u || inv[u] != u {
                return Err(Error::groupoid(
                    "units must be their own source, range and inverse",
                    raw.arrows[u].clone(),
                ));
            }
        }
        let mut compose = HashMap::new();
        for [c, d, cd] in &raw.compose {
            let get = |x: &String| {
                index.get(x).copied().ok_or_else(|| Error::groupoid("composition names an unknown arrow", x.clone()))
            };
            let (c, d, cd) = (get(c)?, get(d)?, get(cd)?);
            let w = format!("({}, {})", raw.arrows[c], raw.arrows[d]);
            if src[c] != rng[d] {
                return Err(Error::groupoid("composition given for a non-composable pair", w));
            }
            if compose.insert((c, d), cd).is_some() {
                return Err(Error::groupoid("composition given twice", w));
            }
            if src[cd] != src[d] || rng[cd] != rng[c] {
                return Err(Error::groupoid("s(cd) = s(d) and r(cd) = r(c) must hold", w));
            }
        }
        for (c, &sc) in src.iter().enumerate() {
            for (d, &rd) in rng.iter().enumerate() {
                if sc == rd && !compose.contains_key(&(c, d)) {
                    return Err(Error::groupoid(
                        "composition missing for a composable pair",
                        format!("({}, {})", raw.arrows[c], raw.arrows[d]),
                    ));
                }
            }
        }
        for b in 0..n {
            let w = raw.arrows[b].clone();
            if compose[&(rng[b], b)] != b || compose[&(b, src[b])] != b {
                return Err(Error::groupoid("units must act neutrally", w));
            }
            if src[inv[b]] != rng[b] || compose[&(inv[b], b)] != src[b] || compose[&(b, inv[b])] != rng[b] {
                return Err(Error::groupoid("inverse law fails", w));
            }
        }
        for b in 0..n {
            for c in (0..n).filter(|&c| src[b] == rng[c]) {
                let bc = compose[&(b, c)];
                for d in (0..n).filter(|&d| src[c] == rng[d]) {
                    if compose[&(bc, d)] != compose[&(b, compose[&(c, d)])] {
                        return Err(Error::groupoid(
                            "composition is not associative",
                            format!("({}, {}, {})", raw.arrows[b], raw.arrows[c], raw.arrows[d]),
                        ));
                    }
                }
            }
        }
        let units: Vec<usize> = units.into_iter().collect();
        let unit_pos = units.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let mut g = Groupoid { labels: raw.arrows.clone(), src, rng, inv, compose, units, unit_pos, family: None };
        if let Some(family) = &raw.bisections {
            let mut sets = Vec::new();
            for b in family {
                let set: BTreeSet<usize> = b
                    .iter()
                    .map(|a| {
                        index
                            .get(a)
                            .copied()
                            .ok_or_else(|| Error::groupoid("bisection names an unknown arrow", a.clone()))
                    })
                    .collect::<Result<_>>()?;
                if !g.is_bisection(&set) {
                    return Err(Error::groupoid("family member is not a bisection", g.set_label(&set)));
                }
                sets.push(set);
            }
            g.family = Some(sets);
        }
        Ok(g)
    }

    pub fn to_raw(&self) -> RawGroupoid {
        let l = |i: usize| self.labels[i].clone();
        let mut compose: Vec<[String; 3]> = self.compose.iter().map(|(&(c, d), &cd)| [l(c), l(d), l(cd)]).collect();
        compose.sort();
        RawGroupoid {
            arrows: self.labels.clone(),
            src: (0..self.len()).map(|a| (l(a), l(self.src[a]))).collect(),
            rng: (0..self.len()).map(|a| (l(a), l(self.rng[a]))).collect(),
            inv: (0..self.len()).map(|a| (l(a), l(self.inv[a]))).collect(),
            compose,
            bisections: self.family.as_ref().map(|f| f.iter().map(|b| b.iter().map(|&a| l(a)).collect()).collect()),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn src(&self, a: usize) -> usize {
        self.src[a]
    }

    pub fn rng(&self, a: usize) -> usize {
        self.rng[a]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn compose(&self, c: usize, d: usize) -> Option<usize> {
        self.compose.get(&(c, d)).copied()
    }

    /// Units in arrow order.
    pub fn units(&self) -> &[usize] {
        &self.units
    }

    /// Position of a unit in [`Groupoid::units`], which is its point index in `G⁽⁰⁾`.
    pub fn unit_index(&self, u: usize) -> usize {
        self.unit_pos[&u]
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.unit_pos.contains_key(&a)
    }

    pub fn isotropy(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.src[a] == self.rng[a]).collect()
    }

    pub fn is_bisection(&self, set: &BTreeSet<usize>) -> bool {
        let s: BTreeSet<usize> = set.iter().map(|&a| self.src[a]).collect();
        let r: BTreeSet<usize> = set.iter().map(|&a| self.rng[a]).collect();
        s.len() == set.len() && r.len() == set.len()
    }

    pub fn set_label(&self, set: &BTreeSet<usize>) -> String {
        let parts: Vec<&str> = set.iter().map(|&a| self.labels[a].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Orbit `{r(b) : s(b) = u}` of a unit, as unit indices.
    pub fn orbit(&self, u: usize) -> BTreeSet<usize> {
        (0..self.len()).filter(|&b| self.src[b] == u).map(|b| self.unit_index(self.rng[b])).collect()
    }

    /// `BC = {bc : b ∈ B, c ∈ C, s(b) = r(c)}`
    pub fn bisection_product(&self, b: &BTreeSet<usize>, c: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &x in b {
            for &y in c {
                if let Some(z) = self.compose(x, y) {
                    out.insert(z);
                }
            }
        }
        out
    }

    pub fn bisection_inverse(&self, b: &BTreeSet<usize>) -> BTreeSet<usize> {
        b.iter().map(|&a| self.inv[a]).collect()
    }

    /// Every bisection, ordered by size and then by arrow indices.
    pub fn all_bisections(&self) -> Result<Vec<BTreeSet<usize>>> {
        if self.len() > BISECTION_ARROW_CAP {
            return Err(Error::CapExceeded {
                what: "arrow count for bisection enumeration".into(),
                value: self.len(),
                cap: BISECTION_ARROW_CAP,
            });
        }
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        let mut used_src = BTreeSet::new();
        let mut used_rng = BTreeSet::new();
        self.extend(0, &mut chosen, &mut used_src, &mut used_rng, &mut out);
        out.sort_by(|a: &Vec<usize>, b: &Vec<usize>| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out.into_iter().map(|v| v.into_iter().collect()).collect())
    }

    fn extend(
        &self,
        next: usize,
        chosen: &mut Vec<usize>,
        used_src: &mut BTreeSet<usize>,
        used_rng: &mut BTreeSet<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if next == self.len() {
            out.push(chosen.clone());
            return;
        }
        self.extend(next + 1, chosen, used_src, used_rng, out);
        let (s, r) = (self.src[next], self.rng[next]);
        if !used_src.contains(&s) && !used_rng.contains(&r) {
            chosen.push(next);
            used_src.insert(s);
            used_rng.insert(r);
            self.extend(next + 1, chosen, used_src, used_rng, out);
            chosen.pop();
            used_src.remove(&s);
            used_rng.remove(&r);
        }
    }

    /// Closure of a family of bisections under products and inverses, ordered like
    /// [`Groupoid::all_bisections`].
    pub fn close_family(&self, family: &[BTreeSet<usize>]) -> Vec<BTreeSet<usize>> {
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut frontier: Vec<BTreeSet<usize>> = Vec::new();
        for b in family {
            for c in [b.clone(), self.bisection_inverse(b)] {
                if set.insert(c.iter().copied().collect()) {
                    frontier.push(c);
                }
            }
        }
        while let Some(a) = frontier.pop() {
            let current: Vec<BTreeSet<usize>> = set.iter().map(|v| v.iter().copied().collect()).collect();
            for b in current {
                for c in [self.bisection_product(&a, &b), self.bisection_product(&b, &a)] {
                    if set.insert(c.iter().copied().collect()) {
                        frontier.push(c);
                    }
                }
            }
        }
        let mut out: Vec<Vec<usize>> = set.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out.into_iter().map(|v| v.into_iter().collect()).collect()
    }

    pub fn is_effective(&self) -> (bool, Option<String>) {
        match self.isotropy().into_iter().find(|&a| !self.is_unit(a)) {
            Some(a) => (false, Some(self.labels[a].clone())),
            None => (true, None),
        }
    }

    /// Minimal iff a single orbit; the witness is the first orbit that is not everything.
    pub fn is_minimal(&self) -> (bool, Option<Vec<String>>) {
        for &u in &self.units {
            let orbit = self.orbit(u);
            if orbit.len() != self.units.len() {
                return (false, Some(orbit.iter().map(|&i| self.labels[self.units[i]].clone()).collect()));
            }
        }
        (true, None)
    }
}

/// A function on the arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinbergFun {
    carrier: Carrier,
    values: Vec<Scalar>,
}

impl SteinbergFun {
    pub fn zero(g: &Groupoid, carrier: Carrier) -> Self {
        SteinbergFun { carrier, values: vec![carrier.zero(); g.len()] }
    }

    pub fn indicator(g: &Groupoid, carrier: Carrier, set: &BTreeSet<usize>) -> Self {
        let mut f = Self::zero(g, carrier);
        for &a in set {
            f.values[a] = carrier.one();
        }
        f
    }

    pub fn from_values(carrier: Carrier, values: Vec<Scalar>) -> Self {
        SteinbergFun { carrier, values }
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn value(&self, a: usize) -> &Scalar {
        &self.values[a]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| self.carrier.is_zero(v))
    }

    pub fn support(&self) -> BTreeSet<usize> {
        (0..self.values.len()).filter(|&a| !self.carrier.is_zero(&self.values[a])).collect()
    }

    pub fn add(&self, other: &SteinbergFun) -> Result<SteinbergFun> {
        if self.carrier != other.carrier || self.values.len() != other.values.len() {
            return Err(Error::Mismatch("Steinberg functions over different groupoids or carriers".into()));
        }
        let k = self.carrier;
        Ok(SteinbergFun {
            carrier: k,
            values: self.values.iter().zip(&other.values).map(|(a, b)| k.add(a, b)).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> SteinbergFun {
        let k = self.carrier;
        SteinbergFun { carrier: k, values: self.values.iter().map(|v| k.mul(c, v)).collect() }
    }

    /// `(f ∗ g)(b) = Σ_{cd = b} f(c) g(d)`
    pub fn convolve(&self, other: &SteinbergFun, g: &Groupoid) -> Result<SteinbergFun> {
        if self.carrier != other.carrier || self.values.len() != g.len() || other.values.len() != g.len() {
            return Err(Error::Mismatch("Steinberg functions over different groupoids or carriers".into()));
        }
        let k = self.carrier;
        let mut out = vec![k.zero(); g.len()];
        for (&(c, d), &cd) in &g.compose {
            let (x, y) = (&self.values[c], &other.values[d]);
            if !k.is_zero(x) && !k.is_zero(y) {
                out[cd] = k.add(&out[cd], &k.mul(x, y));
            }
        }
        Ok(SteinbergFun { carrier: k, values: out })
    }

    pub fn display(&self, g: &Groupoid) -> String {
        let parts: Vec<String> =
            self.support().iter().map(|&a| format!("{}·1_{}", self.values[a], g.labels[a])).collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// `G^a` (or the sub-inverse-semigroup generated by a family) acting on `G⁽⁰⁾`, with the
/// skew ring built over it.
#[derive(Clone, Debug)]
pub struct SteinbergModel {
    groupoid: Groupoid,
    bisections: Vec<BTreeSet<usize>>,
    position: BTreeMap<Vec<usize>, usize>,
    ring: SkewRing,
    restricted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub psi_inverts_phi: bool,
    pub phi_inverts_psi_mod_n: bool,
    pub psi_multiplicative: bool,
    pub psi_kills_n: bool,
    pub pairs_checked: usize,
}

impl IsoReport {
    pub fn all_hold(&self) -> bool {
        self.psi_inverts_phi && self.phi_inverts_psi_mod_n && self.psi_multiplicative && self.psi_kills_n
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonFieldIdeal {
    pub factor: u64,
    pub nonzero: bool,
    pub proper: bool,
    pub closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SteinbergReport {
    pub simple: bool,
    pub mode: &'static str,
    pub effective: bool,
    pub effective_witness: Option<String>,
    pub minimal: bool,
    pub minimal_witness: Option<Vec<String>>,
    pub carrier_is_field: bool,
    pub bisections: usize,
    /// `S`-simplicity ∧ maximal commutativity of the diagonal, in the skew ring.
    pub criterion_simple: Option<bool>,
    pub action_minimal: bool,
    pub diagonal_max_commutative: Option<bool>,
    pub bruteforce: Option<BruteForceReport>,
    pub bruteforce_skipped: Option<String>,
    pub isomorphism: IsoReport,
    pub non_field_ideal: Option<NonFieldIdeal>,
    pub agree: bool,
}

impl SteinbergModel {
    /// Uses every bisection, or the declared generating family when the groupoid has one.
    pub fn new(groupoid: Groupoid, carrier: Carrier) -> Result<Self> {
        let (bisections, restricted) = match &groupoid.family {
            Some(f) => (groupoid.close_family(f), true),
            None => (groupoid.all_bisections()?, false),
        };
        Self::with_bisections(groupoid, carrier, bisections, restricted)
    }

    fn with_bisections(
        groupoid: Groupoid,
        carrier: Carrier,
        bisections: Vec<BTreeSet<usize>>,
        restricted: bool,
    ) -> Result<Self> {
        let key = |b: &BTreeSet<usize>| -> Vec<usize> { b.iter().copied().collect() };
        let position: BTreeMap<Vec<usize>, usize> = bisections.iter().enumerate().map(|(i, b)| (key(b), i)).collect();
        let labels: Vec<String> = bisections.iter().map(|b| groupoid.set_label(b)).collect();
        let units: BTreeSet<usize> = groupoid.units().iter().copied().collect();
        let unit_label = position.get(&key(&units)).map(|&i| labels[i].clone());
        let semigroup = InverseSemigroup::from_fn(labels, unit_label.as_deref(), |a, b| {
            position[&key(&groupoid.bisection_product(&bisections[a], &bisections[b]))]
        })?;
        let model = SpaceModel::Finite { n: groupoid.units().len() };
        let mut domains = Vec::new();
        let mut maps = Vec::new();
        for b in &bisections {
            let r = b.iter().map(|&a| groupoid.unit_index(groupoid.rng(a)));
            domains.push(ClopenSet::new(model, r)?);
            maps.push(
                b.iter()
                    .map(|&a| (groupoid.unit_index(groupoid.src(a)), groupoid.unit_index(groupoid.rng(a))))
                    .collect(),
            );
        }
        let action =
            PartialAction::new(semigroup, ActionData { model, domains, maps, tail_witnessed: BTreeSet::new() })?;
        let ring = SkewRing::new(action, carrier)?;
        Ok(SteinbergModel { groupoid, bisections, position, ring, restricted })
    }

    pub fn groupoid(&self) -> &Groupoid {
        &self.groupoid
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    pub fn bisections(&self) -> &[BTreeSet<usize>] {
        &self.bisections
    }

    pub fn is_restricted(&self) -> bool {
        self.restricted
    }

    pub fn bisection_index(&self, b: &BTreeSet<usize>) -> Option<usize> {
        self.position.get(&b.iter().copied().collect::<Vec<_>>()).copied()
    }

    fn carrier(&self) -> Carrier {
        self.ring.carrier()
    }

    /// `ψ(f_B δ_B)(x) = f_B(r(x))` for `x ∈ B`.
    pub fn psi(&self, x: &SkewElement) -> SteinbergFun {
        let g = &self.groupoid;
        let k = self.carrier();
        let mut out = SteinbergFun::zero(g, k);
        for (b, f) in x.terms() {
            for &a in &self.bisections[b] {
                let v = f.value_at(g.unit_index(g.rng(a)));
                out.values[a] = k.add(&out.values[a], v);
            }
        }
        out
    }

    /// `f = Σ b_j 1_{B_j}` with disjoint bisections, peeled greedily in arrow order within
    /// each value class.
    pub fn decompose(&self, f: &SteinbergFun) -> Vec<(BTreeSet<usize>, Scalar)> {
        let g = &self.groupoid;
        let mut classes: Vec<(Scalar, Vec<usize>)> = Vec::new();
        for a in f.support() {
            let v = &f.values[a];
            match classes.iter_mut().find(|(w, _)| w == v) {
                Some((_, arrows)) => arrows.push(a),
                None => classes.push((v.clone(), vec![a])),
            }
        }
        let mut out = Vec::new();
        for (v, mut arrows) in classes {
            while !arrows.is_empty() {
                let mut piece = BTreeSet::new();
                let mut rest = Vec::new();
                let (mut used_s, mut used_r) = (BTreeSet::new(), BTreeSet::new());
                for a in arrows {
                    if !used_s.contains(&g.src(a)) && !used_r.contains(&g.rng(a)) {
                        used_s.insert(g.src(a));
                        used_r.insert(g.rng(a));
                        piece.insert(a);
                    } else {
                        rest.push(a);
                    }
                }
                out.push((piece, v.clone()));
                arrows = rest;
            }
        }
        out
    }

    /// `φ(Σ b_j 1_{B_j}) = Σ b_j 1_{r(B_j)} δ_{B_j}`. A piece missing from a restricted
    /// model is split into slices `1_{r(a)} δ_B` over model bisections `B ∋ a`.
    pub fn phi(&self, f: &SteinbergFun) -> Result<SkewElement> {
        let g = &self.groupoid;
        let model = self.ring.model();
        let k = self.carrier();
        let mut terms = Vec::new();
        for (piece, v) in self.decompose(f) {
            if let Some(idx) = self.bisection_index(&piece) {
                let range = ClopenSet::new(model, piece.iter().map(|&a| g.unit_index(g.rng(a))))?;
                terms.push((idx, LcFun::constant_on(&range, v, k)));
                continue;
            }
            for &a in &piece {
                let idx = self.bisections.iter().position(|b| b.contains(&a)).ok_or_else(|| {
                    Error::Element(format!("arrow {} lies in no bisection of the restricted model", g.label(a)))
                })?;
                let range = ClopenSet::new(model, [g.unit_index(g.rng(a))])?;
                terms.push((idx, LcFun::constant_on(&range, v.clone(), k)));
            }
        }
        self.ring.element(terms)
    }

    fn zero_mod_n(&self, x: &SkewElement) -> Result<bool> {
        if self.carrier().is_field() {
            self.ring.is_zero_mod_n(x)
        } else {
            Ok(self.ring.germ_normal_form(x).is_zero())
        }
    }

    /// Checks both maps on spanning sets: arrow indicators and atom slices.
    pub fn check_isomorphism(&self) -> Result<IsoReport> {
        let g = &self.groupoid;
        let k = self.carrier();
        let mut report = IsoReport {
            psi_inverts_phi: true,
            phi_inverts_psi_mod_n: true,
            psi_multiplicative: true,
            psi_kills_n: true,
            pairs_checked: 0,
        };
        let mut probes: Vec<SteinbergFun> =
            (0..g.len()).map(|a| SteinbergFun::indicator(g, k, &BTreeSet::from([a]))).collect();
        probes.push(SteinbergFun::indicator(g, k, &(0..g.len()).collect()));
        probes.push(SteinbergFun::from_values(k, (0..g.len()).map(|a| k.from_i64(a as i64 + 1)).collect()));
        for f in &probes {
            if &self.psi(&self.phi(f)?) != f {
                report.psi_inverts_phi = false;
            }
        }
        let columns: Vec<SkewElement> = (0..self.ring.columns().len()).map(|c| self.ring.column_element(c)).collect();
        for x in &columns {
            if !self.zero_mod_n(&self.phi(&self.psi(x))?.sub(x)?)? {
                report.phi_inverts_psi_mod_n = false;
            }
        }
        for x in &columns {
            let px = self.psi(x);
            for y in &columns {
                report.pairs_checked += 1;
                if self.psi(&self.ring.mul(x, y)?) != px.convolve(&self.psi(y), g)? {
                    report.psi_multiplicative = false;
                }
            }
        }
        for v in self.ring.n_generators() {
            if !self.psi(&self.ring.from_coords(&v)).is_zero() {
                report.psi_kills_n = false;
            }
        }
        Ok(report)
    }

    /// For `Z/n` with `n` composite: `d·A_R(G)` for the smallest prime `d | n`.
    pub fn non_field_ideal(&self) -> Option<NonFieldIdeal> {
        let Carrier::Zmod(n) = self.carrier() else { return None };
        if self.carrier().is_field() {
            return None;
        }
        let g = &self.groupoid;
        let k = self.carrier();
        let d = (2..=n).find(|d| n % d == 0).unwrap();
        let dk = k.from_i64(d as i64);
        let multiple = |v: &Scalar| matches!(v, Scalar::Residue(r) if r % d == 0);
        let indicators: Vec<SteinbergFun> =
            (0..g.len()).map(|a| SteinbergFun::indicator(g, k, &BTreeSet::from([a]))).collect();
        let generators: Vec<SteinbergFun> = indicators.iter().map(|f| f.scale(&dk)).collect();
        let nonzero = generators.iter().any(|f| !f.is_zero());
        // 1_{G⁽⁰⁾} has value 1, which is not a multiple of d
        let proper = !multiple(&k.one());
        let mut closed = true;
        for x in &generators {
            for y in &indicators {
                for z in [x.convolve(y, g).unwrap(), y.convolve(x, g).unwrap()] {
                    closed &= z.values().iter().all(multiple);
                }
            }
        }
        Some(NonFieldIdeal { factor: d, nonzero, proper, closed })
    }

    /// Groupoid verdict cross-checked against the skew ring, by criterion and exhaustively.
    pub fn simplicity(&self, cap_bits: u32) -> Result<SteinbergReport> {
        let g = &self.groupoid;
        let (effective, effective_witness) = g.is_effective();
        let (minimal, minimal_witness) = g.is_minimal();
        let field = self.carrier().is_field();
        let simple = effective && minimal && field;
        let action_minimal = self.ring.action().is_minimal().minimal;
        let isomorphism = self.check_isomorphism()?;
        let (mut criterion_simple, mut diagonal_max_commutative, mut bruteforce, mut bruteforce_skipped) =
            (None, None, None, None);
        let mut agree = action_minimal == minimal && isomorphism.all_hold();
        if field {
            let s = self.ring.is_s_simple()?.s_simple;
            let m = self.ring.is_diagonal_maximal_commutative()?.max_commutative;
            criterion_simple = Some(s && m);
            diagonal_max_commutative = Some(m);
            agree &= s == minimal && m == effective && (s && m) == simple;
            match brute_force(&self.ring, cap_bits) {
                Ok(b) => {
                    agree &= b.simple == simple;
                    bruteforce = Some(b);
                }
                Err(e @ (Error::CapExceeded { .. } | Error::Carrier(_))) => bruteforce_skipped = Some(e.to_string()),
                Err(e) => return Err(e),
            }
        }
        let non_field_ideal = self.non_field_ideal();
        if let Some(i) = &non_field_ideal {
            agree &= i.nonzero && i.proper && i.closed && !simple;
        }
        Ok(SteinbergReport {
            simple,
            mode: if self.restricted { "restricted model" } else { "criterion" },
            effective,
            effective_witness,
            minimal,
            minimal_witness,
            carrier_is_field: field,
            bisections: self.bisections.len(),
            criterion_simple,
            action_minimal,
            diagonal_max_commutative,
            bruteforce,
            bruteforce_skipped,
            isomorphism,
            non_field_ideal,
            agree,
        })
    }
}

pub mod build {
    use super::*;

    fn assemble(
        labels: Vec<String>,
        src: Vec<usize>,
        rng: Vec<usize>,
        inv: Vec<usize>,
        compose: impl Fn(usize, usize) -> Option<usize>,
    ) -> Groupoid {
        let n = labels.len();
        let l = |i: usize| labels[i].clone();
        let mut triples = Vec::new();
        for c in 0..n {
            for d in 0..n {
                if let Some(cd) = compose(c, d) {
                    triples.push([l(c), l(d), l(cd)]);
                }
            }
        }
        let raw = RawGroupoid {
            arrows: labels.clone(),
            src: (0..n).map(|a| (l(a), l(src[a]))).collect(),
            rng: (0..n).map(|a| (l(a), l(rng[a]))).collect(),
            inv: (0..n).map(|a| (l(a), l(inv[a]))).collect(),
            compose: triples,
            bisections: None,
        };
        Groupoid::verify(&raw).expect("builder produces a groupoid")
    }

    /// `P_k × Z/m`: arrows `(i, j; g)` from `j` to `i`. Labels are `(i,j)` when `m = 1`.
    pub fn product_groupoid(k: usize, m: usize) -> Groupoid {
        let mut labels = Vec::new();
        let mut triples = Vec::new();
        for i in 0..k {
            for j in 0..k {
                for g in 0..m {
                    labels.push(if m == 1 {
                        format!("({},{})", i + 1, j + 1)
                    } else {
                        format!("({},{};{})", i + 1, j + 1, g)
                    });
                    triples.push((i, j, g));
                }
            }
        }
        let idx = |i: usize, j: usize, g: usize| (i * k + j) * m + g;
        let src = triples.iter().map(|&(_, j, _)| idx(j, j, 0)).collect();
        let rng = triples.iter().map(|&(i, _, _)| idx(i, i, 0)).collect();
        let inv = triples.iter().map(|&(i, j, g)| idx(j, i, (m - g) % m)).collect();
        assemble(labels, src, rng, inv, |c, d| {
            let (i, j, g) = triples[c];
            let (j2, l, h) = triples[d];
            (j == j2).then(|| idx(i, l, (g + h) % m))
        })
    }

    pub fn pair_groupoid(k: usize) -> Groupoid {
        product_groupoid(k, 1)
    }

    /// `Z/m` as a one-object groupoid with arrows `1, g, g2, …`.
    pub fn cyclic_groupoid(m: usize) -> Groupoid {
        let labels = (0..m).map(|g| match g {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g{g}"),
        });
        assemble(labels.collect(), vec![0; m], vec![0; m], (0..m).map(|g| (m - g) % m).collect(), |c, d| {
            Some((c + d) % m)
        })
    }

    /// Only units, labelled `1, …, n`.
    pub fn unit_groupoid(n: usize) -> Groupoid {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        assemble(labels, (0..n).collect(), (0..n).collect(), (0..n).collect(), |c, d| (c == d).then_some(c))
    }

    /// Disjoint union; arrow labels of the second part get a `'` suffix.
    pub fn disjoint_union(a: &Groupoid, b: &Groupoid) -> Groupoid {
        let off = a.len();
        let mut labels: Vec<String> = a.labels.clone();
        labels.extend(b.labels.iter().map(|l| format!("{l}'")));
        let src = a.src.iter().copied().chain(b.src.iter().map(|&x| x + off)).collect();
        let rng = a.rng.iter().copied().chain(b.rng.iter().map(|&x| x + off)).collect();
        let inv = a.inv.iter().copied().chain(b.inv.iter().map(|&x| x + off)).collect();
        assemble(labels, src, rng, inv, |c, d| match (c < off, d < off) {
            (true, true) => a.compose(c, d),
            (false, false) => b.compose(c - off, d - off).map(|x| x + off),
            _ => None,
        })
    }
}
