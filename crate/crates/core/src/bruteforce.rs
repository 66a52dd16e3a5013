//! Exhaustive oracle over a finite field: every nonzero vector of `L/N` (up to scaling)
//! generates a principal ideal, and each ideal is tested for being everything, meeting the
//! diagonal, and containing an element with `τ̃ ≠ 0`.
//!
//! Every nonzero ideal contains a nonzero principal ideal, so these three scans decide
//! simplicity, the ideal intersection property and the support condition exactly.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, Field, PrimeField, Subspace};
use crate::scalar::{is_prime, Carrier, Scalar};
use crate::skew::SkewRing;

/// Default cap: at most `2^14` vectors.
pub const DEFAULT_CAP_BITS: u32 = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BruteForceReport {
    pub dimension: usize,
    pub vectors_checked: usize,
    pub simple: bool,
    pub every_ideal_meets_diagonal: bool,
    pub every_ideal_has_tau_support: bool,
    /// Generator of a nonzero proper ideal.
    pub proper_ideal_witness: Option<String>,
    /// Generator of a nonzero ideal meeting the diagonal trivially.
    pub diagonal_miss_witness: Option<String>,
    /// Generator of a nonzero ideal on which `τ̃` vanishes.
    pub tau_zero_witness: Option<String>,
}

/// Largest quotient dimension allowed over GF(p) when `p^dim ≤ 2^cap_bits`.
pub fn max_dimension(p: u64, cap_bits: u32) -> usize {
    let limit = 1u128 << cap_bits;
    let mut d = 0usize;
    let mut pow = 1u128;
    while pow * p as u128 <= limit {
        pow *= p as u128;
        d += 1;
    }
    d
}

struct Tables {
    f: PrimeField,
    dim: usize,
    /// `prod[i][j]`: quotient coordinates of `b_i b_j`, or `None` when zero.
    prod: Vec<Vec<Option<Vec<u32>>>>,
    tau_atom: Vec<usize>,
    atoms: usize,
    diagonal: Subspace<PrimeField>,
}

fn residue(v: &Scalar) -> u32 {
    match v {
        Scalar::Residue(r) => *r as u32,
        Scalar::Rational(_) => unreachable!("prime field carriers hold residues"),
    }
}

impl Tables {
    fn new(ring: &SkewRing, p: u32) -> Result<Self> {
        let f = PrimeField { p };
        let free = ring.quotient_basis_columns()?;
        let red = ring.column_residues()?;
        let dim = free.len();
        let prod = free
            .iter()
            .map(|&a| {
                free.iter().map(|&b| ring.column_product(a, b).map(|c| red[c].iter().map(residue).collect())).collect()
            })
            .collect();
        let tau_atom = free.iter().map(|&c| ring.columns()[c].1).collect();
        let diagonal = Subspace::spanned_by(
            &f,
            dim,
            ring.diagonal_subspace()?.basis().iter().map(|r| r.iter().map(residue).collect()),
        );
        Ok(Tables { f, dim, prod, tau_atom, atoms: ring.atoms().len(), diagonal })
    }

    fn left(&self, i: usize, v: &[u32], out: &mut [u32]) {
        out.iter_mut().for_each(|x| *x = 0);
        for (j, &vj) in v.iter().enumerate() {
            if vj != 0 {
                if let Some(r) = &self.prod[i][j] {
                    crate::linalg::axpy(&self.f, out, &vj, r);
                }
            }
        }
    }

    fn right(&self, v: &[u32], j: usize, out: &mut [u32]) {
        out.iter_mut().for_each(|x| *x = 0);
        for (i, &vi) in v.iter().enumerate() {
            if vi != 0 {
                if let Some(r) = &self.prod[i][j] {
                    crate::linalg::axpy(&self.f, out, &vi, r);
                }
            }
        }
    }

    fn ideal(&self, v: &[u32]) -> Subspace<PrimeField> {
        let mut ideal = Subspace::new(self.dim);
        let mut queue = vec![v.to_vec()];
        let mut buf = vec![0u32; self.dim];
        while let Some(w) = queue.pop() {
            if !ideal.insert(&self.f, w.clone()) {
                continue;
            }
            if ideal.is_full() {
                break;
            }
            for k in 0..self.dim {
                self.left(k, &w, &mut buf);
                if !is_zero_vec(&self.f, &buf) && !ideal.contains(&self.f, &buf) {
                    queue.push(buf.clone());
                }
                self.right(&w, k, &mut buf);
                if !is_zero_vec(&self.f, &buf) && !ideal.contains(&self.f, &buf) {
                    queue.push(buf.clone());
                }
            }
        }
        ideal
    }

    fn tau_nonzero(&self, v: &[u32]) -> bool {
        let mut t = vec![0u32; self.atoms];
        for (i, &x) in v.iter().enumerate() {
            let a = self.tau_atom[i];
            t[a] = self.f.add(&t[a], &x);
        }
        t.iter().any(|&x| x != 0)
    }
}

fn prime_of(carrier: Carrier) -> Result<u32> {
    match carrier {
        Carrier::Gf(p) => Ok(p as u32),
        Carrier::Zmod(n) if is_prime(n) => Ok(n as u32),
        Carrier::Zmod(_) => Err(Error::NotAField(carrier)),
        Carrier::Rational => Err(Error::Carrier("exhaustive enumeration needs a finite field of coefficients".into())),
    }
}

/// Runs the exhaustive scan; fails when `p^dim` exceeds `2^cap_bits`.
pub fn brute_force(ring: &SkewRing, cap_bits: u32) -> Result<BruteForceReport> {
    let p = prime_of(ring.carrier())?;
    let dim = ring.quotient_dim()?;
    let max = max_dimension(p as u64, cap_bits);
    if dim > max {
        return Err(Error::CapExceeded { what: format!("quotient dimension over GF({p})"), value: dim, cap: max });
    }
    let t = Tables::new(ring, p)?;
    let k = ring.carrier();
    let show = |v: &[u32]| -> Result<String> {
        let s: Vec<Scalar> = v.iter().map(|&x| k.from_i64(x as i64)).collect();
        Ok(ring.from_quotient(&s)?.display(ring).to_string())
    };
    let mut report = BruteForceReport {
        dimension: dim,
        vectors_checked: 0,
        simple: true,
        every_ideal_meets_diagonal: true,
        every_ideal_has_tau_support: true,
        proper_ideal_witness: None,
        diagonal_miss_witness: None,
        tau_zero_witness: None,
    };
    let total = (p as u64).pow(dim as u32);
    let mut v = vec![0u32; dim];
    for code in 1..total {
        let mut c = code;
        for x in v.iter_mut() {
            *x = (c % p as u64) as u32;
            c /= p as u64;
        }
        // one representative per line: leading coordinate 1
        if v.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        report.vectors_checked += 1;
        let ideal = t.ideal(&v);
        if !ideal.is_full() && report.simple {
            report.simple = false;
            report.proper_ideal_witness = Some(show(&v)?);
        }
        if report.every_ideal_meets_diagonal && ideal.intersection_dim(&t.f, &t.diagonal) == 0 {
            report.every_ideal_meets_diagonal = false;
            report.diagonal_miss_witness = Some(show(&v)?);
        }
        if report.every_ideal_has_tau_support && !ideal.basis().iter().any(|r| t.tau_nonzero(r)) {
            report.every_ideal_has_tau_support = false;
            report.tau_zero_witness = Some(show(&v)?);
        }
        if !report.simple && !report.every_ideal_meets_diagonal && !report.every_ideal_has_tau_support {
            break;
        }
    }
    Ok(report)
}
