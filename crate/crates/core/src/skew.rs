//! The skew inverse semigroup ring `L_c(X) ⋊ S = L/N`.
//!
//! `L` is spanned by atom slices `1_K δ_s` (`K` a model atom inside `X_s`), ordered by
//! `(s, K)`. `N` is the span of `1_K δ_r − 1_K δ_s` for `r ≤ s`, `K ⊆ X_r`. Over a field the
//! quotient is a plain vector space whose coordinates are the non-pivot columns of `N`.
//!
//! Equality modulo `N` is decided twice: by row reduction against `N` and by germ normal
//! forms, which accumulate coefficients per point and per germ class
//! (`s ~ t` at `x` when some `u ≤ s, t` has `x ∈ X_u`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::action::PartialAction;
use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, kernel, Field, Subspace};
use crate::scalar::{Carrier, Scalar};
use crate::space::{ClopenSet, LcFun, SpaceModel};

/// `Σ a_s δ_s` with `supp(a_s) ⊆ X_s`; zero coefficients are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewElement {
    model: SpaceModel,
    carrier: Carrier,
    terms: BTreeMap<usize, LcFun>,
}

impl SkewElement {
    pub fn zero(model: SpaceModel, carrier: Carrier) -> Self {
        SkewElement { model, carrier, terms: BTreeMap::new() }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &LcFun)> {
        self.terms.iter().map(|(&s, f)| (s, f))
    }

    pub fn coefficient(&self, s: usize) -> Option<&LcFun> {
        self.terms.get(&s)
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    /// Zero as an element of `L` (not modulo `N`).
    pub fn is_zero_in_l(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, s: usize, f: LcFun) {
        let sum = match self.terms.remove(&s) {
            Some(g) => g.add(&f).expect("same model and carrier"),
            None => f,
        };
        if !sum.is_zero() {
            self.terms.insert(s, sum);
        }
    }

    fn check(&self, other: &SkewElement) -> Result<()> {
        if self.model != other.model || self.carrier != other.carrier {
            return Err(Error::Mismatch("skew elements over different rings".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &SkewElement) -> Result<SkewElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (s, f) in other.terms() {
            out.insert(s, f.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SkewElement) -> Result<SkewElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SkewElement {
        SkewElement {
            model: self.model,
            carrier: self.carrier,
            terms: self.terms.iter().map(|(&s, f)| (s, f.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Result<SkewElement> {
        let mut out = SkewElement::zero(self.model, self.carrier);
        for (s, f) in self.terms() {
            out.insert(s, f.scale(c)?);
        }
        Ok(out)
    }

    /// `τ̃(Σ a_s δ_s) = Σ a_s`
    pub fn tau_tilde(&self) -> LcFun {
        let mut sum = LcFun::zero(self.model, self.carrier);
        for f in self.terms.values() {
            sum = sum.add(f).expect("same model and carrier");
        }
        sum
    }

    /// Renders with semigroup labels, e.g. `1_{3,4,tail,inf}δ_z + 2·1_{1}δ_1`.
    pub fn display<'a>(&'a self, ring: &'a SkewRing) -> impl fmt::Display + 'a {
        DisplayElement { x: self, labels: ring.action.semigroup().labels() }
    }
}

struct DisplayElement<'a> {
    x: &'a SkewElement,
    labels: &'a [String],
}

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (s, a) in self.x.terms() {
            for (piece, c) in a.pieces() {
                let coeff = if c == self.x.carrier.one() { String::new() } else { format!("{c}·") };
                parts.push(format!("{coeff}1_{piece}δ_{}", self.labels[s]));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Canonical residue modulo `N`: nonzero totals keyed by `(point, germ class representative)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermNormalForm {
    entries: BTreeMap<(usize, usize), Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GermEntry {
    pub point: String,
    pub germ: String,
    pub value: String,
}

impl GermNormalForm {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(x, s), v)| (x, s, v))
    }

    pub fn labelled(&self, ring: &SkewRing) -> Vec<GermEntry> {
        self.entries()
            .map(|(x, s, v)| GermEntry {
                point: ring.model().point_label(x),
                germ: ring.action.semigroup().label(s).to_string(),
                value: v.to_string(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxCommutativeVerdict {
    pub max_commutative: bool,
    pub diagonal_dim: usize,
    pub centralizer_dim: usize,
    /// An element of the centralizer of the diagonal outside the diagonal.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SSimpleVerdict {
    pub s_simple: bool,
    /// Support of a nonzero proper invariant ideal `I(U)`.
    pub witness: Option<Vec<String>>,
}

/// Structure of `L/N` over a field.
#[derive(Clone, Debug)]
struct Quotient {
    n: Subspace<Carrier>,
    /// Columns of `L` that index quotient coordinates.
    free: Vec<usize>,
    /// Quotient coordinates of each column of `L`.
    red: Vec<Vec<Scalar>>,
    diagonal: Subspace<Carrier>,
}

#[derive(Clone, Debug)]
pub struct SkewRing {
    action: PartialAction,
    carrier: Carrier,
    atoms: Vec<ClopenSet>,
    columns: Vec<(usize, usize)>,
    column_of: BTreeMap<(usize, usize), usize>,
    product: Vec<Vec<Option<usize>>>,
    /// `germ[x][s]`: representative of the germ class of `s` at `x`, if `x ∈ X_s`.
    germ: Vec<Vec<Option<usize>>>,
    quotient: Option<Quotient>,
}

fn find(parent: &mut [usize], a: usize) -> usize {
    let mut r = a;
    while parent[r] != r {
        r = parent[r];
    }
    let mut a = a;
    while parent[a] != r {
        let next = parent[a];
        parent[a] = r;
        a = next;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    // smallest index stays the representative
    if ra < rb {
        parent[rb] = ra;
    } else {
        parent[ra] = rb;
    }
}

fn germ_classes(action: &PartialAction) -> Vec<Vec<Option<usize>>> {
    let s_ = action.semigroup();
    let n = s_.len();
    let model = action.model();
    let order = s_.natural_partial_order().pairs();
    model
        .points()
        .map(|x| {
            let mut parent: Vec<usize> = (0..n).collect();
            for &(u, s) in &order {
                if action.domain(u).contains(x) {
                    union(&mut parent, u, s);
                }
            }
            if Some(x) == model.tail() {
                // an idempotent e ≤ s beyond the window also satisfies e ≤ s*s
                for s in (0..n).filter(|&s| action.is_tail_witnessed(s)) {
                    union(&mut parent, s, s_.source_idempotent(s));
                }
            }
            (0..n).map(|s| action.domain(s).contains(x).then(|| find(&mut parent, s))).collect()
        })
        .collect()
}

impl SkewRing {
    pub fn new(action: PartialAction, carrier: Carrier) -> Result<Self> {
        let model = action.model();
        let s_ = action.semigroup().clone();
        let atoms = model.atoms();
        let mut columns = Vec::new();
        for s in 0..s_.len() {
            for (k, atom) in atoms.iter().enumerate() {
                if atom.is_subset(action.domain(s)) {
                    columns.push((s, k));
                }
            }
        }
        let column_of: BTreeMap<(usize, usize), usize> = columns.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let atom_index: BTreeMap<&ClopenSet, usize> = atoms.iter().enumerate().map(|(i, a)| (a, i)).collect();
        // (1_K δ_s)(1_{K'} δ_t) = 1_K δ_{st} when θ_{s*}(K) = K', else 0
        let product = columns
            .iter()
            .map(|&(s, k)| {
                let back = atom_index[&action.image(s_.star(s), &atoms[k])];
                columns.iter().map(|&(t, k2)| (k2 == back).then(|| column_of[&(s_.mul(s, t), k)])).collect()
            })
            .collect();
        let germ = germ_classes(&action);
        let mut ring = SkewRing { action, carrier, atoms, columns, column_of, product, germ, quotient: None };
        if carrier.is_field() {
            ring.quotient = Some(ring.build_quotient());
        }
        Ok(ring)
    }

    fn build_quotient(&self) -> Quotient {
        let k = self.carrier;
        let dim = self.columns.len();
        let s_ = self.action.semigroup();
        let mut n = Subspace::new(dim);
        for (r, s) in s_.natural_partial_order().pairs() {
            if r == s {
                continue;
            }
            for (katom, _) in self.atoms.iter().enumerate() {
                if let (Some(&a), Some(&b)) = (self.column_of.get(&(r, katom)), self.column_of.get(&(s, katom))) {
                    let mut v = vec![k.zero(); dim];
                    v[a] = k.one();
                    v[b] = k.neg(&k.one());
                    n.insert(&k, v);
                }
            }
        }
        let pivots: BTreeSet<usize> = n.pivots().iter().copied().collect();
        let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
        let red: Vec<Vec<Scalar>> = (0..dim)
            .map(|c| {
                let mut e = vec![k.zero(); dim];
                e[c] = k.one();
                let r = n.reduce(&k, &e);
                free.iter().map(|&f| r[f].clone()).collect()
            })
            .collect();
        let diagonal = Subspace::spanned_by(
            &k,
            free.len(),
            self.columns.iter().enumerate().filter(|(_, &(s, _))| s_.is_idempotent(s)).map(|(c, _)| red[c].clone()),
        );
        Quotient { n, free, red, diagonal }
    }

    pub fn action(&self) -> &PartialAction {
        &self.action
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn model(&self) -> SpaceModel {
        self.action.model()
    }

    /// Spanning atom slices `(s, atom index)` of `L`.
    pub fn columns(&self) -> &[(usize, usize)] {
        &self.columns
    }

    pub fn atoms(&self) -> &[ClopenSet] {
        &self.atoms
    }

    fn quotient(&self) -> Result<&Quotient> {
        self.quotient.as_ref().ok_or(Error::NotAField(self.carrier))
    }

    pub fn element(&self, terms: Vec<(usize, LcFun)>) -> Result<SkewElement> {
        let mut x = SkewElement::zero(self.model(), self.carrier);
        for (s, f) in terms {
            if s >= self.action.semigroup().len() {
                return Err(Error::Element(format!("unknown semigroup element index {s}")));
            }
            if f.model() != self.model() || f.carrier() != self.carrier {
                return Err(Error::Mismatch("coefficient over a different space or carrier".into()));
            }
            if !f.support().is_subset(self.action.domain(s)) {
                return Err(Error::Element(format!(
                    "coefficient of δ_{} must be supported in {}",
                    self.action.semigroup().label(s),
                    self.action.domain(s)
                )));
            }
            x.insert(s, f);
        }
        Ok(x)
    }

    /// `1_K δ_s` for the `c`-th column.
    pub fn column_element(&self, c: usize) -> SkewElement {
        let (s, k) = self.columns[c];
        self.element(vec![(s, LcFun::indicator(&self.atoms[k], self.carrier))]).unwrap()
    }

    /// `(a δ_s)(b δ_t) = α_s(α_{s*}(a) b) δ_{st}`, extended bilinearly.
    pub fn mul(&self, x: &SkewElement, y: &SkewElement) -> Result<SkewElement> {
        x.check(y)?;
        let s_ = self.action.semigroup();
        let mut out = SkewElement::zero(self.model(), self.carrier);
        for (s, a) in x.terms() {
            let back = self.action.alpha(s_.star(s), a)?;
            for (t, b) in y.terms() {
                let c = self.action.alpha_unchecked(s, &back.mul(b)?);
                if !c.is_zero() {
                    out.insert(s_.mul(s, t), c);
                }
            }
        }
        Ok(out)
    }

    /// Coordinates in `L` over the atom slices.
    pub fn coords(&self, x: &SkewElement) -> Vec<Scalar> {
        let mut v = vec![self.carrier.zero(); self.columns.len()];
        for (s, f) in x.terms() {
            for (k, atom) in self.atoms.iter().enumerate() {
                if let Some(&c) = self.column_of.get(&(s, k)) {
                    v[c] = f.value_at(atom.iter().next().unwrap()).clone();
                }
            }
        }
        v
    }

    pub fn from_coords(&self, v: &[Scalar]) -> SkewElement {
        let mut x = SkewElement::zero(self.model(), self.carrier);
        for (c, value) in v.iter().enumerate() {
            if !self.carrier.is_zero(value) {
                let (s, k) = self.columns[c];
                x.insert(s, LcFun::constant_on(&self.atoms[k], value.clone(), self.carrier));
            }
        }
        x
    }

    /// Product of columns of `L`: `None` when it vanishes.
    pub fn column_product(&self, a: usize, b: usize) -> Option<usize> {
        self.product[a][b]
    }

    /// Exact membership in `N` by row reduction.
    pub fn is_zero_mod_n(&self, x: &SkewElement) -> Result<bool> {
        let q = self.quotient()?;
        Ok(q.n.contains(&self.carrier, &self.coords(x)))
    }

    /// Whether a vector of `L` lies in `N`.
    pub fn n_contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.quotient()?.n.contains(&self.carrier, v))
    }

    /// Spanning generators of `N`, as vectors of `L`.
    pub fn n_generators(&self) -> Vec<Vec<Scalar>> {
        let k = self.carrier;
        let mut out = Vec::new();
        for (r, s) in self.action.semigroup().natural_partial_order().pairs() {
            if r == s {
                continue;
            }
            for katom in 0..self.atoms.len() {
                if let (Some(&a), Some(&b)) = (self.column_of.get(&(r, katom)), self.column_of.get(&(s, katom))) {
                    let mut v = vec![k.zero(); self.columns.len()];
                    v[a] = k.one();
                    v[b] = k.neg(&k.one());
                    out.push(v);
                }
            }
        }
        out
    }

    pub fn n_rank(&self) -> Result<usize> {
        Ok(self.quotient()?.n.rank())
    }

    pub fn germ_normal_form(&self, x: &SkewElement) -> GermNormalForm {
        let k = self.carrier;
        let mut entries: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (s, f) in x.terms() {
            for p in self.model().points() {
                let v = f.value_at(p);
                if k.is_zero(v) {
                    continue;
                }
                let class = self.germ[p][s].expect("coefficients live in X_s");
                let e = entries.entry((p, class)).or_insert_with(|| k.zero());
                *e = k.add(e, v);
            }
        }
        entries.retain(|_, v| !k.is_zero(v));
        GermNormalForm { entries }
    }

    /// An element whose germ normal form is `g`. Tail entries are implied by `∞` entries.
    pub fn from_germ_normal_form(&self, g: &GermNormalForm) -> SkewElement {
        let model = self.model();
        let mut x = SkewElement::zero(model, self.carrier);
        for (p, s, v) in g.entries() {
            if Some(p) == model.tail() {
                continue;
            }
            let atom = &self.atoms[model.atom_of(p)];
            x.insert(s, LcFun::constant_on(atom, v.clone(), self.carrier));
        }
        x
    }

    /// Membership in the diagonal via germs: every surviving class contains an idempotent.
    pub fn is_in_diagonal(&self, x: &SkewElement) -> bool {
        let s_ = self.action.semigroup();
        let g = self.germ_normal_form(x);
        let all_diagonal = g
            .entries()
            .all(|(p, class, _)| (0..s_.len()).any(|e| s_.is_idempotent(e) && self.germ[p][e] == Some(class)));
        all_diagonal
    }

    /// `φ(a) = Σ a·1_{K_j} δ_{e_j}` from a decomposition over idempotent domains.
    pub fn diagonal_embed(&self, a: &LcFun) -> Result<SkewElement> {
        self.element(self.action.decompose(a))
    }

    pub fn quotient_dim(&self) -> Result<usize> {
        Ok(self.quotient()?.free.len())
    }

    pub fn diagonal_dim(&self) -> Result<usize> {
        Ok(self.quotient()?.diagonal.rank())
    }

    /// Quotient coordinates of `x`.
    pub fn to_quotient(&self, x: &SkewElement) -> Result<Vec<Scalar>> {
        self.vector_to_quotient(&self.coords(x))
    }

    pub fn vector_to_quotient(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let q = self.quotient()?;
        let k = self.carrier;
        let mut out = vec![k.zero(); q.free.len()];
        for (c, value) in v.iter().enumerate() {
            axpy(&k, &mut out, value, &q.red[c]);
        }
        Ok(out)
    }

    /// Representative `Σ c_i 1_{K_i} δ_{s_i}` over the quotient basis columns.
    pub fn from_quotient(&self, v: &[Scalar]) -> Result<SkewElement> {
        let q = self.quotient()?;
        let mut full = vec![self.carrier.zero(); self.columns.len()];
        for (i, &c) in q.free.iter().enumerate() {
            full[c] = v[i].clone();
        }
        Ok(self.from_coords(&full))
    }

    /// Columns of `L` forming the quotient basis.
    pub fn quotient_basis_columns(&self) -> Result<&[usize]> {
        Ok(&self.quotient()?.free)
    }

    /// Quotient coordinates of every column of `L`.
    pub fn column_residues(&self) -> Result<&[Vec<Scalar>]> {
        Ok(&self.quotient()?.red)
    }

    pub fn diagonal_subspace(&self) -> Result<&Subspace<Carrier>> {
        Ok(&self.quotient()?.diagonal)
    }

    /// Product in `L/N` of quotient vectors.
    pub fn quotient_mul(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        let q = self.quotient()?;
        let k = self.carrier;
        let mut out = vec![k.zero(); q.free.len()];
        for (i, ui) in u.iter().enumerate() {
            if k.is_zero(ui) {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if k.is_zero(vj) {
                    continue;
                }
                if let Some(c) = self.product[q.free[i]][q.free[j]] {
                    axpy(&k, &mut out, &k.mul(ui, vj), &q.red[c]);
                }
            }
        }
        Ok(out)
    }

    /// `τ̃` on quotient coordinates, as atom coordinates of `L_c(X)`.
    pub fn quotient_tau(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let q = self.quotient()?;
        let k = self.carrier;
        let mut out = vec![k.zero(); self.atoms.len()];
        for (i, &c) in q.free.iter().enumerate() {
            let atom = self.columns[c].1;
            out[atom] = k.add(&out[atom], &v[i]);
        }
        Ok(out)
    }

    /// Basis of the two-sided ideal of `L/N` generated by `v`.
    pub fn ideal_of_vector(&self, v: &[Scalar]) -> Result<Subspace<Carrier>> {
        let q = self.quotient()?;
        let k = self.carrier;
        let dim = q.free.len();
        let mut ideal = Subspace::new(dim);
        let mut queue = vec![v.to_vec()];
        let units: Vec<Vec<Scalar>> = (0..dim)
            .map(|i| {
                let mut e = vec![k.zero(); dim];
                e[i] = k.one();
                e
            })
            .collect();
        while let Some(w) = queue.pop() {
            if !ideal.insert(&k, w.clone()) {
                continue;
            }
            if ideal.is_full() {
                break;
            }
            for e in &units {
                for p in [self.quotient_mul(e, &w)?, self.quotient_mul(&w, e)?] {
                    if !is_zero_vec(&k, &p) && !ideal.contains(&k, &p) {
                        queue.push(p);
                    }
                }
            }
        }
        Ok(ideal)
    }

    pub fn ideal_generated_by(&self, x: &SkewElement) -> Result<Subspace<Carrier>> {
        self.ideal_of_vector(&self.to_quotient(x)?)
    }

    /// Centralizer of the diagonal in `L/N`.
    pub fn diagonal_centralizer(&self) -> Result<Vec<Vec<Scalar>>> {
        let q = self.quotient()?;
        let k = self.carrier;
        let dim = q.free.len();
        let s_ = self.action.semigroup();
        let mut rows = Vec::new();
        let units: Vec<Vec<Scalar>> = (0..dim)
            .map(|i| {
                let mut e = vec![k.zero(); dim];
                e[i] = k.one();
                e
            })
            .collect();
        for (c, &(s, _)) in self.columns.iter().enumerate() {
            if !s_.is_idempotent(s) {
                continue;
            }
            let d = &q.red[c];
            // column i of the constraint block is e_i·d − d·e_i
            let block: Vec<Vec<Scalar>> = units
                .iter()
                .map(|e| {
                    let ed = self.quotient_mul(e, d).unwrap();
                    let de = self.quotient_mul(d, e).unwrap();
                    ed.iter().zip(&de).map(|(a, b)| k.sub(a, b)).collect()
                })
                .collect();
            for r in 0..dim {
                let row: Vec<Scalar> = block.iter().map(|col| col[r].clone()).collect();
                if !is_zero_vec(&k, &row) {
                    rows.push(row);
                }
            }
        }
        Ok(kernel(&k, &rows, dim))
    }

    pub fn is_diagonal_maximal_commutative(&self) -> Result<MaxCommutativeVerdict> {
        let q = self.quotient()?;
        let k = self.carrier;
        let centralizer = Subspace::spanned_by(&k, q.free.len(), self.diagonal_centralizer()?);
        let diagonal_dim = q.diagonal.rank();
        let centralizer_dim = centralizer.rank();
        let mut witness = None;
        if centralizer_dim > diagonal_dim {
            // prefer a single atom slice
            let slice = (0..self.columns.len())
                .find(|&c| centralizer.contains(&k, &q.red[c]) && !q.diagonal.contains(&k, &q.red[c]));
            let x = match slice {
                Some(c) => self.column_element(c),
                None => {
                    let v = centralizer
                        .basis()
                        .iter()
                        .find(|v| !q.diagonal.contains(&k, v))
                        .expect("centralizer is larger than the diagonal");
                    self.from_quotient(v)?
                }
            };
            witness = Some(x.display(self).to_string());
        }
        Ok(MaxCommutativeVerdict {
            max_commutative: centralizer_dim == diagonal_dim,
            diagonal_dim,
            centralizer_dim,
            witness,
        })
    }

    /// Smallest `S`-invariant ideal of `L_c(X)` containing the generators, as atom coordinates.
    pub fn invariant_ideal(&self, generators: &[LcFun]) -> Result<Subspace<Carrier>> {
        if self.quotient.is_none() {
            return Err(Error::NotAField(self.carrier));
        }
        let k = self.carrier;
        let model = self.model();
        let s_ = self.action.semigroup();
        let mut ideal = Subspace::new(self.atoms.len());
        let mut queue: Vec<LcFun> = generators.to_vec();
        let indicators: Vec<LcFun> = self.atoms.iter().map(|a| LcFun::indicator(a, k)).collect();
        while let Some(f) = queue.pop() {
            if !ideal.insert(&k, f.atom_coords()) {
                continue;
            }
            for g in &indicators {
                queue.push(f.mul(g)?);
            }
            for s in 0..s_.len() {
                queue.push(self.action.alpha_unchecked(s, &f));
            }
        }
        debug_assert!(ideal.basis().iter().all(|r| r.len() == model.atoms().len()));
        Ok(ideal)
    }

    /// `L_c(X)` has no nonzero proper `S`-invariant ideal.
    pub fn is_s_simple(&self) -> Result<SSimpleVerdict> {
        let k = self.carrier;
        for atom in &self.atoms {
            let ideal = self.invariant_ideal(&[LcFun::indicator(atom, k)])?;
            if !ideal.is_full() {
                let mut points = BTreeSet::new();
                for row in ideal.basis() {
                    let f = LcFun::from_atom_coords(self.model(), k, row);
                    points.extend(f.support().iter());
                }
                let u = crate::space::PointSet::new(self.model(), points);
                return Ok(SSimpleVerdict { s_simple: false, witness: Some(u.labels()) });
            }
        }
        Ok(SSimpleVerdict { s_simple: true, witness: None })
    }
}
