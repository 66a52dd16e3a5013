//! Exact linear algebra over a field: reduced row echelon subspaces and kernels.

use std::fmt::Debug;

/// Field arithmetic carried by a context value (the modulus lives in `self`).
pub trait Field {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// `y += c * x`
pub fn axpy<F: Field>(k: &F, y: &mut [F::Elem], c: &F::Elem, x: &[F::Elem]) {
    if k.is_zero(c) {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !k.is_zero(xi) {
            *yi = k.add(yi, &k.mul(c, xi));
        }
    }
}

pub fn is_zero_vec<F: Field>(k: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| k.is_zero(x))
}

/// A subspace of `F^dim` kept as a fully reduced row echelon basis.
#[derive(Debug)]
pub struct Subspace<F: Field> {
    dim: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Clone for Subspace<F> {
    fn clone(&self) -> Self {
        Subspace { dim: self.dim, rows: self.rows.clone(), pivots: self.pivots.clone() }
    }
}

impl<F: Field> Subspace<F> {
    pub fn new(dim: usize) -> Self {
        Subspace { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by<I: IntoIterator<Item = Vec<F::Elem>>>(k: &F, dim: usize, vectors: I) -> Self {
        let mut s = Subspace::new(dim);
        for v in vectors {
            s.insert(k, v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    /// Pivot column of each basis row, in row order.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the unique combination of basis rows that clears every pivot column.
    pub fn reduce(&self, k: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !k.is_zero(&w[p]) {
                let c = k.neg(&w[p]);
                axpy(k, &mut w, &c, row);
            }
        }
        w
    }

    pub fn contains(&self, k: &F, v: &[F::Elem]) -> bool {
        is_zero_vec(k, &self.reduce(k, v))
    }

    /// Adds `v` to the span. Returns `true` when the rank grew.
    pub fn insert(&mut self, k: &F, v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length does not match ambient dimension");
        let mut w = self.reduce(k, &v);
        let Some(p) = w.iter().position(|x| !k.is_zero(x)) else {
            return false;
        };
        let inv = k.inv(&w[p]);
        for x in w.iter_mut() {
            *x = k.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            if !k.is_zero(&row[p]) {
                let c = k.neg(&row[p]);
                axpy(k, row, &c, &w);
            }
        }
        // keep rows sorted by pivot so the echelon form is canonical
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, w);
        self.pivots.insert(at, p);
        true
    }

    /// Dimension of the intersection with `other`.
    pub fn intersection_dim(&self, k: &F, other: &Subspace<F>) -> usize {
        let mut sum = self.clone();
        for row in other.basis() {
            sum.insert(k, row.clone());
        }
        self.rank() + other.rank() - sum.rank()
    }
}

/// Basis of `{x : M x = 0}` for `M` given as rows of length `cols`.
pub fn kernel<F: Field>(k: &F, rows: &[Vec<F::Elem>], cols: usize) -> Vec<Vec<F::Elem>> {
    let echelon = Subspace::spanned_by(k, cols, rows.iter().cloned());
    let pivots = echelon.pivots();
    let mut out = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut x = vec![k.zero(); cols];
        x[free] = k.one();
        for (row, &p) in echelon.basis().iter().zip(pivots) {
            x[p] = k.neg(&row[free]);
        }
        out.push(x);
    }
    out
}

/// GF(p) with elements as plain residues; used on the hot paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u32,
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "division by zero in GF({})", self.p);
        // Fermat: a^(p-2)
        let (mut base, mut e, mut acc) = (*a as u64, self.p as u64 - 2, 1u64);
        let m = self.p as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        acc as u32
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
}
