//! Property tests over randomly generated semigroups, spaces, actions and groupoids.

use std::collections::BTreeSet;

use proptest::prelude::*;
use skewring::action::{munn_action, PartialAction};
use skewring::corpus::natural_action;
use skewring::isg::build::{close_partial_injections, from_partial_injections, PartialInjection};
use skewring::isg::InverseSemigroup;
use skewring::linalg::{Field, Subspace};
use skewring::scalar::{Carrier, Scalar};
use skewring::skew::SkewRing;
use skewring::space::{
    ideal_closure, ideal_of_open, open_of_ideal, vanishing_ideal, ClopenSet, LcFun, PointSet, SpaceModel,
};
use skewring::steinberg::build::{cyclic_groupoid, disjoint_union, pair_groupoid, product_groupoid, unit_groupoid};
use skewring::steinberg::{Groupoid, SteinbergFun, SteinbergModel};

const DEGREE: usize = 3;
const PERMUTATIONS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn injection() -> impl Strategy<Value = PartialInjection> {
    (0..PERMUTATIONS.len(), 0u8..8).prop_map(|(p, mask)| {
        PartialInjection((0..DEGREE).map(|x| (mask >> x & 1 == 1).then_some(PERMUTATIONS[p][x])).collect())
    })
}

/// A closed family of partial injections of a 3-set with at most `max` elements.
fn family(max: usize) -> impl Strategy<Value = Vec<PartialInjection>> {
    prop::collection::vec(injection(), 1..=2)
        .prop_map(|gens| close_partial_injections(&gens))
        .prop_filter("family too large", move |e| e.len() <= max)
}

/// A random action of a random family together with its semigroup.
fn action(max: usize) -> impl Strategy<Value = (Vec<PartialInjection>, PartialAction)> {
    (family(max), 0..3u8).prop_map(|(elems, kind)| {
        let s = from_partial_injections(&elems);
        let a = match kind {
            0 => natural_action(&s, &elems, false),
            1 => natural_action(&s, &elems, true),
            _ => munn_action(&s),
        };
        (elems, a.expect("valid action"))
    })
}

fn carrier() -> impl Strategy<Value = Carrier> {
    prop_oneof![Just(Carrier::Gf(2)), Just(Carrier::Gf(3))]
}

fn model() -> impl Strategy<Value = SpaceModel> {
    prop_oneof![
        (1..=5usize).prop_map(|n| SpaceModel::Finite { n }),
        (1..=4usize).prop_map(|window| SpaceModel::OmegaPlus { window })
    ]
}

fn scalars(k: Carrier, raw: &[i64]) -> Vec<Scalar> {
    raw.iter().map(|&v| k.from_i64(v)).collect()
}

fn graph(p: &PartialInjection) -> BTreeSet<(usize, u8)> {
    p.0.iter().enumerate().filter_map(|(x, y)| y.map(|y| (x, y))).collect()
}

fn le_all(s: &InverseSemigroup) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..s.len()).flat_map(move |a| (0..s.len()).map(move |b| (a, b))).filter(|&(a, b)| s.le(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_is_restriction_of_maps(elems in family(40)) {
        let s = from_partial_injections(&elems);
        for a in 0..s.len() {
            for b in 0..s.len() {
                prop_assert_eq!(s.le(a, b), graph(&elems[a]).is_subset(&graph(&elems[b])));
            }
        }
    }

    #[test]
    fn order_is_compatible(elems in family(40)) {
        let s = from_partial_injections(&elems);
        let pairs: Vec<(usize, usize)> = le_all(&s).collect();
        for &(a, b) in &pairs {
            prop_assert!(s.le(s.star(a), s.star(b)));
            for &(c, d) in &pairs {
                prop_assert!(s.le(s.mul(a, c), s.mul(b, d)));
            }
        }
    }

    #[test]
    fn star_is_an_involutive_antimorphism(elems in family(40)) {
        let s = from_partial_injections(&elems);
        for a in 0..s.len() {
            prop_assert_eq!(s.star(s.star(a)), a);
            prop_assert_eq!(s.mul(s.mul(a, s.star(a)), a), a);
            for b in 0..s.len() {
                prop_assert_eq!(s.star(s.mul(a, b)), s.mul(s.star(b), s.star(a)));
            }
        }
    }

    #[test]
    fn idempotents_form_a_meet_semilattice(elems in family(40)) {
        let s = from_partial_injections(&elems);
        let e = s.idempotents();
        for &a in &e {
            for &b in &e {
                let m = s.mul(a, b);
                prop_assert_eq!(m, s.mul(b, a));
                prop_assert!(s.is_idempotent(m) && s.le(m, a) && s.le(m, b));
                for &c in &e {
                    if s.le(c, a) && s.le(c, b) {
                        prop_assert!(s.le(c, m));
                    }
                }
            }
        }
    }

    #[test]
    fn pieces_are_canonical(m in model(), k in carrier(), raw in prop::collection::vec(0i64..3, 6), rot in 0usize..6) {
        let f = LcFun::from_atom_coords(m, k, &scalars(k, &raw[..m.atoms().len()]));
        let pieces = f.pieces();
        let mut seen = BTreeSet::new();
        let mut union = m.empty();
        for (i, (d, v)) in pieces.iter().enumerate() {
            prop_assert!(!k.is_zero(v) && !d.is_empty());
            prop_assert!(union.intersection(d).is_empty());
            prop_assert!(pieces[i + 1..].iter().all(|(_, w)| w != v));
            prop_assert!(seen.insert(d.iter().next()));
            union = union.union(d);
        }
        prop_assert_eq!(&union, &f.support());
        let mut shuffled = pieces.clone();
        let len = shuffled.len().max(1);
        shuffled.rotate_left(rot % len);
        let g = LcFun::from_pieces(m, k, &shuffled).unwrap();
        prop_assert_eq!(&g, &f);
        prop_assert_eq!(g.pieces(), pieces);
    }

    #[test]
    fn vanishing_ideal_ignores_closure(m in model(), mask in 0u64..64) {
        let t = PointSet::new(m, m.points().filter(|x| mask >> x & 1 == 1));
        let k = Carrier::Gf(2);
        prop_assert_eq!(vanishing_ideal(m, k, &t).unwrap(), vanishing_ideal(m, k, &t.closure()).unwrap());
    }

    #[test]
    fn partial_action_consequences((elems, a) in action(12)) {
        let s = a.semigroup();
        let x = a.model();
        for t in 0..s.len() {
            let ts = s.star(t);
            prop_assert!(a.domain(t).is_subset(a.domain(s.mul(t, ts))));
            for p in a.domain(ts).iter() {
                let q = a.apply(t, p).expect("θ_t is defined on X_{t*}");
                prop_assert!(a.domain(t).contains(q));
                prop_assert_eq!(a.apply(ts, q), Some(p));
                if s.is_idempotent(t) {
                    prop_assert_eq!(q, p);
                }
            }
        }
        for (u, v) in le_all(s) {
            prop_assert!(a.domain(u).is_subset(a.domain(v)));
            for p in a.domain(s.star(u)).iter() {
                prop_assert_eq!(a.apply(u, p), a.apply(v, p));
            }
        }
        if let Some(one) = s.unit() {
            prop_assert_eq!(a.domain(one), &x.full());
            prop_assert!(x.points().all(|p| a.apply(one, p) == Some(p)));
        }
        prop_assert_eq!(elems.len(), s.len());
    }

    #[test]
    fn functions_decompose_over_idempotent_domains((_, a) in action(12), raw in prop::collection::vec(0i64..3, 16)) {
        let k = Carrier::Gf(3);
        let m = a.model();
        let f = LcFun::from_atom_coords(m, k, &scalars(k, &raw[..m.atoms().len()]));
        let mut sum = LcFun::zero(m, k);
        let mut covered = m.empty();
        for (e, g) in a.decompose(&f) {
            prop_assert!(a.semigroup().is_idempotent(e));
            prop_assert!(g.support().is_subset(a.domain(e)));
            prop_assert!(covered.intersection(&g.support()).is_empty());
            covered = covered.union(&g.support());
            sum = sum.add(&g).unwrap();
        }
        prop_assert_eq!(sum, f);
    }

    #[test]
    fn quotient_engines_and_tau((_, a) in action(8), k in carrier(), seed in prop::collection::vec(0i64..3, 64)) {
        let ring = SkewRing::new(a, k).unwrap();
        let cols = ring.columns().len();
        let pick = |offset: usize, len: usize| scalars(k, &seed.iter().cycle().skip(offset).take(len).copied().collect::<Vec<_>>());
        let x = ring.from_coords(&pick(0, cols));
        prop_assert_eq!(ring.is_zero_mod_n(&x).unwrap(), ring.germ_normal_form(&x).is_zero());

        let gens = ring.n_generators();
        let coeffs = pick(7, gens.len());
        let mut v = ring.coords(&x);
        for (c, g) in coeffs.iter().zip(&gens) {
            for (vi, gi) in v.iter_mut().zip(g) {
                *vi = k.add(vi, &k.mul(c, gi));
            }
        }
        let y = ring.from_coords(&v);
        let diff = y.sub(&x).unwrap();
        prop_assert!(ring.is_zero_mod_n(&diff).unwrap());
        prop_assert!(ring.germ_normal_form(&diff).is_zero());
        prop_assert_eq!(x.tau_tilde(), y.tau_tilde());
    }

    #[test]
    fn quotient_is_a_ring((_, a) in action(8), k in carrier(), seed in prop::collection::vec(0i64..3, 48)) {
        let ring = SkewRing::new(a, k).unwrap();
        let dim = ring.quotient_dim().unwrap();
        let vec_at = |i: usize| scalars(k, &seed.iter().cycle().skip(i * 5).take(dim).copied().collect::<Vec<_>>());
        let (u, v, w) = (vec_at(0), vec_at(1), vec_at(2));
        let add = |p: &[Scalar], q: &[Scalar]| -> Vec<Scalar> { p.iter().zip(q).map(|(a, b)| k.add(a, b)).collect() };
        let mul = |p: &[Scalar], q: &[Scalar]| ring.quotient_mul(p, q).unwrap();
        prop_assert_eq!(mul(&mul(&u, &v), &w), mul(&u, &mul(&v, &w)));
        prop_assert_eq!(mul(&u, &add(&v, &w)), add(&mul(&u, &v), &mul(&u, &w)));
        prop_assert_eq!(mul(&add(&u, &v), &w), add(&mul(&u, &w), &mul(&v, &w)));
    }

    #[test]
    fn diagonal_embedding_is_split_by_tau((_, a) in action(8), k in carrier(), raw in prop::collection::vec(0i64..3, 32)) {
        let m = a.model();
        let n = m.atoms().len();
        let ring = SkewRing::new(a, k).unwrap();
        let f = LcFun::from_atom_coords(m, k, &scalars(k, &raw[..n]));
        let g = LcFun::from_atom_coords(m, k, &scalars(k, &raw[16..16 + n]));
        let (df, dg) = (ring.diagonal_embed(&f).unwrap(), ring.diagonal_embed(&g).unwrap());
        prop_assert_eq!(df.tau_tilde(), f.clone());
        prop_assert!(ring.is_in_diagonal(&df));
        let prod = ring.mul(&df, &dg).unwrap();
        let expected = ring.diagonal_embed(&f.mul(&g).unwrap()).unwrap();
        prop_assert!(ring.is_zero_mod_n(&prod.sub(&expected).unwrap()).unwrap());
        prop_assert_eq!(f.is_zero(), ring.is_zero_mod_n(&df).unwrap());
    }
}

fn groupoid() -> impl Strategy<Value = Groupoid> {
    let atom = prop_oneof![
        (1..=3usize).prop_map(pair_groupoid),
        (1..=3usize).prop_map(cyclic_groupoid),
        (1..=3usize).prop_map(unit_groupoid),
        Just(product_groupoid(2, 2)),
    ];
    (atom.clone(), prop::option::of(atom))
        .prop_map(|(a, b)| match b {
            Some(b) => disjoint_union(&a, &b),
            None => a,
        })
        .prop_filter("too many arrows", |g| g.len() <= 10)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bisections_form_an_inverse_semigroup(g in groupoid()) {
        let all = g.all_bisections().unwrap();
        let units: BTreeSet<usize> = g.units().iter().copied().collect();
        prop_assert_eq!(g.close_family(&all).len(), all.len());
        for b in &all {
            prop_assert!(g.is_bisection(b));
            let bi = g.bisection_inverse(b);
            prop_assert!(all.contains(&bi));
            prop_assert_eq!(g.bisection_product(&g.bisection_product(b, &bi), b), b.clone());
            prop_assert_eq!(g.bisection_product(b, b) == *b, b.is_subset(&units));
            for c in &all {
                prop_assert!(all.contains(&g.bisection_product(b, c)));
            }
        }
        prop_assert_eq!(all.iter().filter(|b| b.is_subset(&units)).count(), 1usize << units.len());
    }

    #[test]
    fn decomposition_round_trips(g in groupoid(), raw in prop::collection::vec(0i64..3, 10)) {
        let k = Carrier::Gf(3);
        let f = SteinbergFun::from_values(k, scalars(k, &raw[..g.len()]));
        let m = SteinbergModel::new(g.clone(), k).unwrap();
        let mut covered = BTreeSet::new();
        let mut sum = SteinbergFun::zero(&g, k);
        for (b, v) in m.decompose(&f) {
            prop_assert!(g.is_bisection(&b));
            prop_assert!(covered.is_disjoint(&b));
            covered.extend(b.iter().copied());
            sum = sum.add(&SteinbergFun::indicator(&g, k, &b).scale(&v)).unwrap();
        }
        prop_assert_eq!(&sum, &f);
        prop_assert_eq!(&m.psi(&m.phi(&f).unwrap()), &f);
    }

    #[test]
    fn psi_is_multiplicative(g in groupoid(), picks in prop::collection::vec((0usize..64, 0usize..64), 4)) {
        let k = Carrier::Gf(2);
        let m = SteinbergModel::new(g.clone(), k).unwrap();
        let ring = m.ring();
        let cols = ring.columns().len();
        for (i, j) in picks {
            let (x, y) = (ring.column_element(i % cols), ring.column_element(j % cols));
            prop_assert_eq!(m.psi(&ring.mul(&x, &y).unwrap()), m.psi(&x).convolve(&m.psi(&y), &g).unwrap());
        }
    }
}

/// Opens of a finite discrete space correspond to ideals, preserving order both ways.
#[test]
fn opens_and_ideals_correspond() {
    let k = Carrier::Gf(3);
    for n in 1..=5 {
        let m = SpaceModel::Finite { n };
        let opens: Vec<PointSet> =
            (0u64..1 << n).map(|mask| PointSet::new(m, (0..n).filter(|x| mask >> x & 1 == 1))).collect();
        let ideals: Vec<Subspace<Carrier>> =
            opens.iter().map(|u| ideal_closure(m, k, &ideal_of_open(m, k, u).unwrap()).unwrap()).collect();
        for (u, i) in opens.iter().zip(&ideals) {
            assert_eq!(&open_of_ideal(m, k, &ideal_of_open(m, k, u).unwrap()).unwrap(), u);
            for (v, j) in opens.iter().zip(&ideals) {
                let contained = i.basis().iter().all(|row| j.contains(&k, row));
                assert_eq!(u.is_subset(v), contained, "{u} vs {v}");
            }
        }
        // every ideal generated by one function is one of the I(U)
        let spanning: Vec<LcFun> = (0u64..3u64.pow(n as u32))
            .map(|code| {
                LcFun::from_atom_coords(
                    m,
                    k,
                    &(0..n).map(|x| k.from_i64((code / 3u64.pow(x as u32) % 3) as i64)).collect::<Vec<_>>(),
                )
            })
            .collect();
        for f in &spanning {
            let u = open_of_ideal(m, k, std::slice::from_ref(f)).unwrap();
            assert_eq!(u, f.support().as_point_set());
            let i = ideal_closure(m, k, std::slice::from_ref(f)).unwrap();
            assert_eq!(i.rank(), ideals[opens.iter().position(|o| *o == u).unwrap()].rank());
        }
    }
}

/// Open sets of the one-point compactification model map to ideals and back.
#[test]
fn omega_plus_opens_round_trip() {
    let k = Carrier::Gf(2);
    for window in 1..=4 {
        let m = SpaceModel::OmegaPlus { window };
        for mask in 0u64..1 << m.num_points() {
            let u = PointSet::new(m, m.points().filter(|x| mask >> x & 1 == 1));
            if !u.is_open() {
                assert!(ideal_of_open(m, k, &u).is_err());
                continue;
            }
            let back = open_of_ideal(m, k, &ideal_of_open(m, k, &u).unwrap()).unwrap();
            // the tail block without `∞` is open but not compact, so only atoms inside U carry functions
            let expected: BTreeSet<usize> = m
                .atoms()
                .iter()
                .filter(|a: &&ClopenSet| a.as_point_set().is_subset(&u))
                .flat_map(|a| a.iter().collect::<Vec<_>>())
                .collect();
            assert_eq!(back, PointSet::new(m, expected));
        }
    }
}
