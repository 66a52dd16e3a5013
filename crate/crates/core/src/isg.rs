//! Finite inverse semigroups given by multiplication tables.
//!
//! Elements carry string labels but all arithmetic runs on dense indices.
//! Validation computes the involution `s ↦ s*`, the idempotents, and the
//! natural partial order `s ≤ t ⟺ s = t s* s` up front, so downstream code
//! only does table lookups.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_SIZE_CAP: usize = 64;

/// Square boolean matrix, one bit per entry.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words_per_row: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64).max(1);
        BitMatrix { n, words_per_row, words: vec![0; n * words_per_row] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.words[i * self.words_per_row + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.words[i * self.words_per_row + j / 64] |= 1 << (j % 64);
    }

    /// All pairs `(i, j)` with the bit set, row-major.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: String = (0..self.n).map(|j| if self.get(i, j) { '1' } else { '.' }).collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// Unvalidated JSON form: row `i`, column `j` of `table` is the index of `elements[i]·elements[j]`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawSemigroup {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
}

#[derive(Clone, Debug)]
pub struct InverseSemigroup {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    table: Vec<usize>,
    star: Vec<usize>,
    idempotent: Vec<bool>,
    order: BitMatrix,
    unit: Option<usize>,
}

impl PartialEq for InverseSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.table == other.table && self.unit == other.unit
    }
}

impl InverseSemigroup {
    pub fn verify(raw: &RawSemigroup) -> Result<Self> {
        Self::verify_with_cap(raw, DEFAULT_SIZE_CAP)
    }

    pub fn verify_with_cap(raw: &RawSemigroup, cap: usize) -> Result<Self> {
        let n = raw.elements.len();
        if n == 0 {
            return Err(Error::Parse("semigroup has an empty element list".into()));
        }
        if n > cap {
            return Err(Error::CapExceeded { what: "semigroup size".into(), value: n, cap });
        }
        let mut index = HashMap::with_capacity(n);
        for (i, l) in raw.elements.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate element label {l:?}")));
            }
        }
        if raw.table.len() != n || raw.table.iter().any(|r| r.len() != n) {
            return Err(Error::Parse(format!("multiplication table must be {n}x{n}")));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in raw.table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::Parse(format!(
                        "table entry ({}, {}) = {v} is out of range",
                        raw.elements[i], raw.elements[j]
                    )));
                }
                table.push(v);
            }
        }
        let unit = match &raw.unit {
            Some(u) => Some(*index.get(u).ok_or_else(|| Error::Parse(format!("unit {u:?} is not an element")))?),
            None => None,
        };
        let name = |i: usize| raw.elements[i].as_str();
        let mul = |a: usize, b: usize| table[a * n + b];

        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::semigroup(
                            "associativity",
                            format!("({}, {}, {})", name(a), name(b), name(c)),
                        ));
                    }
                }
            }
        }

        let mut star = Vec::with_capacity(n);
        for s in 0..n {
            let candidates: Vec<usize> = (0..n).filter(|&t| mul(mul(s, t), s) == s && mul(mul(t, s), t) == t).collect();
            match candidates.as_slice() {
                [t] => star.push(*t),
                [] => return Err(Error::semigroup("missing inverse", name(s).to_string())),
                many => {
                    let list: Vec<&str> = many.iter().map(|&t| name(t)).collect();
                    return Err(Error::semigroup(
                        "inverse not unique",
                        format!("{} has inverses {}", name(s), list.join(", ")),
                    ));
                }
            }
        }

        let idempotent: Vec<bool> = (0..n).map(|e| mul(e, e) == e).collect();
        for e in (0..n).filter(|&e| idempotent[e]) {
            for f in (0..n).filter(|&f| idempotent[f]) {
                if mul(e, f) != mul(f, e) {
                    return Err(Error::semigroup("idempotents commute", format!("({}, {})", name(e), name(f))));
                }
            }
        }

        let mut order = BitMatrix::new(n);
        for (s, &ss) in star.iter().enumerate() {
            for t in 0..n {
                if mul(mul(t, ss), s) == s {
                    order.set(s, t);
                }
            }
        }
        for s in 0..n {
            if !order.get(s, s) {
                return Err(Error::semigroup("natural order is reflexive", name(s).to_string()));
            }
            for t in 0..n {
                if s != t && order.get(s, t) && order.get(t, s) {
                    return Err(Error::semigroup(
                        "natural order is antisymmetric",
                        format!("({}, {})", name(s), name(t)),
                    ));
                }
                if !order.get(s, t) {
                    continue;
                }
                for u in 0..n {
                    if order.get(t, u) && !order.get(s, u) {
                        return Err(Error::semigroup(
                            "natural order is transitive",
                            format!("({}, {}, {})", name(s), name(t), name(u)),
                        ));
                    }
                }
            }
        }

        if let Some(one) = unit {
            for s in 0..n {
                if mul(one, s) != s || mul(s, one) != s {
                    return Err(Error::semigroup(
                        "unit is a two-sided identity",
                        format!("({}, {})", name(one), name(s)),
                    ));
                }
            }
            for e in (0..n).filter(|&e| idempotent[e]) {
                if !order.get(e, one) {
                    return Err(Error::semigroup("idempotents lie below the unit", name(e).to_string()));
                }
            }
        }

        Ok(InverseSemigroup { labels: raw.elements.clone(), index, table, star, idempotent, order, unit })
    }

    /// Validates a table given by closure `mul(i, j)` over labelled elements.
    pub fn from_fn(labels: Vec<String>, unit: Option<&str>, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = labels.len();
        let table = (0..n).map(|i| (0..n).map(|j| mul(i, j)).collect()).collect();
        Self::verify_with_cap(&RawSemigroup { elements: labels, table, unit: unit.map(str::to_string) }, usize::MAX)
    }

    pub fn to_raw(&self) -> RawSemigroup {
        let n = self.len();
        RawSemigroup {
            elements: self.labels.clone(),
            table: (0..n).map(|i| self.table[i * n..(i + 1) * n].to_vec()).collect(),
            unit: self.unit.map(|u| self.labels[u].clone()),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, s: usize) -> &str {
        &self.labels[s]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.len() + b]
    }

    pub fn star(&self, s: usize) -> usize {
        self.star[s]
    }

    pub fn is_idempotent(&self, s: usize) -> bool {
        self.idempotent[s]
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.idempotent[e]).collect()
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    /// Natural partial order: `s ≤ t ⟺ s = t s* s`.
    pub fn le(&self, s: usize, t: usize) -> bool {
        self.order.get(s, t)
    }

    /// The full relation as a bit matrix (`get(s, t)` ⟺ `s ≤ t`).
    pub fn natural_partial_order(&self) -> &BitMatrix {
        &self.order
    }

    /// Domain idempotent `s* s`.
    pub fn source_idempotent(&self, s: usize) -> usize {
        self.mul(self.star(s), s)
    }

    /// Range idempotent `s s*`.
    pub fn range_idempotent(&self, s: usize) -> usize {
        self.mul(s, self.star(s))
    }

    pub fn is_group(&self) -> bool {
        self.idempotents().len() == 1
    }

    /// Index of the idempotent of a group, when `S` is one.
    pub fn group_identity(&self) -> Option<usize> {
        match self.idempotents().as_slice() {
            [e] if (0..self.len()).all(|s| self.mul(*e, s) == s && self.mul(s, *e) == s) => Some(*e),
            _ => None,
        }
    }
}

/// Stock semigroups used by the gallery, tests and the corpus.
pub mod build {
    use super::*;

    /// Windowed two-headed snake `{1, …, n, ∞, z}`: `km = min(k, m)`, `k∞ = ∞k = kz = zk = k`,
    /// `z∞ = ∞z = z`, `zz = ∞∞ = ∞`. Labels are `"1"…"n"`, `"inf"`, `"z"`.
    pub fn snake(n: usize) -> InverseSemigroup {
        assert!(n >= 1);
        let inf = n;
        let z = n + 1;
        let mut labels: Vec<String> = (1..=n).map(|k| k.to_string()).collect();
        labels.push("inf".into());
        labels.push("z".into());
        InverseSemigroup::from_fn(labels, Some("inf"), |a, b| match (a, b) {
            (a, b) if a < n && b < n => a.min(b),
            (a, _) if a < n => a,
            (_, b) if b < n => b,
            (a, b) if a == z && b == z => inf,
            (a, b) if a == z || b == z => z,
            _ => inf,
        })
        .expect("snake table is an inverse semigroup")
    }

    /// Cyclic group Z/n with labels `"0"…"n-1"`.
    pub fn cyclic_group(n: usize) -> InverseSemigroup {
        let labels = (0..n).map(|k| k.to_string()).collect();
        InverseSemigroup::from_fn(labels, Some("0"), |a, b| (a + b) % n).expect("cyclic group is an inverse semigroup")
    }

    /// Chain `{0, …, k-1}` under `xy = min(x, y)`.
    pub fn min_semilattice(k: usize) -> InverseSemigroup {
        let labels = (0..k).map(|x| x.to_string()).collect();
        InverseSemigroup::from_fn(labels, None, |a, b| a.min(b)).expect("a chain under min is a semilattice")
    }

    /// Left-zero band `xy = x` on two elements; not inverse.
    pub fn left_zero_raw() -> RawSemigroup {
        RawSemigroup { elements: vec!["a".into(), "b".into()], table: vec![vec![0, 0], vec![1, 1]], unit: None }
    }

    /// A partial injection of `{0, …, n-1}`; `map[x] = Some(y)` means `x ↦ y`.
    #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
    pub struct PartialInjection(pub Vec<Option<u8>>);

    impl PartialInjection {
        pub fn degree(&self) -> usize {
            self.0.len()
        }

        /// `self ∘ other`: apply `other` first.
        pub fn compose(&self, other: &PartialInjection) -> PartialInjection {
            PartialInjection(other.0.iter().map(|y| y.and_then(|y| self.0[y as usize])).collect())
        }

        pub fn inverse(&self) -> PartialInjection {
            let mut inv = vec![None; self.degree()];
            for (x, y) in self.0.iter().enumerate() {
                if let Some(y) = y {
                    inv[*y as usize] = Some(x as u8);
                }
            }
            PartialInjection(inv)
        }

        pub fn label(&self) -> String {
            let parts: Vec<String> =
                self.0.iter().map(|y| y.map_or("-".to_string(), |y| (y + 1).to_string())).collect();
            format!("[{}]", parts.join(","))
        }
    }

    /// Closes `gens` under composition and inversion inside the symmetric inverse monoid.
    /// Elements are returned sorted, so the result does not depend on generator order.
    pub fn close_partial_injections(gens: &[PartialInjection]) -> Vec<PartialInjection> {
        let mut set: BTreeSet<PartialInjection> = BTreeSet::new();
        let mut frontier: Vec<PartialInjection> = Vec::new();
        for g in gens {
            for h in [g.clone(), g.inverse()] {
                if set.insert(h.clone()) {
                    frontier.push(h);
                }
            }
        }
        while let Some(a) = frontier.pop() {
            let current: Vec<PartialInjection> = set.iter().cloned().collect();
            for b in current {
                for c in [a.compose(&b), b.compose(&a)] {
                    if set.insert(c.clone()) {
                        frontier.push(c);
                    }
                }
            }
        }
        set.into_iter().collect()
    }

    /// The inverse semigroup of a closed family of partial injections, multiplication
    /// being composition `(st)(x) = s(t(x))`.
    pub fn from_partial_injections(elems: &[PartialInjection]) -> InverseSemigroup {
        let pos: HashMap<&PartialInjection, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let labels = elems.iter().map(PartialInjection::label).collect();
        let identity = elems
            .iter()
            .find(|e| e.0.iter().enumerate().all(|(x, y)| *y == Some(x as u8)))
            .map(PartialInjection::label);
        InverseSemigroup::from_fn(labels, identity.as_deref(), |a, b| pos[&elems[a].compose(&elems[b])])
            .expect("closed family of partial injections is an inverse semigroup")
    }
}
