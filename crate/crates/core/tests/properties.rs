use std::sync::Arc;

use nalgebra::DMatrix;
use proptest::prelude::*;
use qsep::cloud::cloud;
use qsep::nqm::{born_probability, Borelian, CMatrix, CVector, Interval, Observable, C64};
use qsep::qset::{Qset, Universe};

const LABELS: [&str; 4] = ["Ann", "Bob", "Cy", "Dee"];

fn universe() -> Arc<Universe> {
    Universe::builder()
        .quantum("s", 5)
        .quantum("t", 3)
        .classical("person", LABELS)
        .build()
        .unwrap()
}

fn qset() -> impl Strategy<Value = Qset> {
    (0..=5usize, 0..=3usize, proptest::collection::vec(any::<bool>(), 4)).prop_map(|(s, t, picks)| {
        let mut q = Qset::empty(&universe()).with_count("s", s).unwrap().with_count("t", t).unwrap();
        for (label, _) in LABELS.iter().zip(&picks).filter(|(_, &p)| p) {
            q = q.with_member("person", label).unwrap();
        }
        q
    })
}

// every qset from `qset()` must share one universe for the binary operations
fn rebased(q: &Qset, u: &Arc<Universe>) -> Qset {
    let mut out = Qset::empty(u);
    for (s, &n) in q.composition() {
        out = out.with_count(s, n).unwrap();
    }
    for m in q.members() {
        out = out.with_member(&m.species, &m.label).unwrap();
    }
    out
}

fn triple() -> impl Strategy<Value = (Qset, Qset, Qset)> {
    (qset(), qset(), qset()).prop_map(|(a, b, c)| {
        let u = universe();
        (rebased(&a, &u), rebased(&b, &u), rebased(&c, &u))
    })
}

proptest! {
    #[test]
    fn lattice_laws((a, b, c) in triple()) {
        let (u, i) = (|x: &Qset, y: &Qset| x.union(y).unwrap(), |x: &Qset, y: &Qset| x.intersection(y).unwrap());
        prop_assert_eq!(u(&a, &b), u(&b, &a));
        prop_assert_eq!(i(&a, &b), i(&b, &a));
        prop_assert_eq!(u(&u(&a, &b), &c), u(&a, &u(&b, &c)));
        prop_assert_eq!(i(&i(&a, &b), &c), i(&a, &i(&b, &c)));
        prop_assert_eq!(u(&a, &a), a.clone());
        prop_assert_eq!(i(&a, &a), a.clone());
        prop_assert_eq!(u(&a, &i(&a, &b)), a.clone());
        prop_assert_eq!(i(&a, &u(&a, &b)), a.clone());
    }

    #[test]
    fn cardinality_is_additive((a, b, _c) in triple()) {
        let union = a.union(&b).unwrap();
        let meet = a.intersection(&b).unwrap();
        prop_assert_eq!(union.qcard() + meet.qcard(), a.qcard() + b.qcard());
        prop_assert!(a.is_subqset_of(&union) && meet.is_subqset_of(&a));
        prop_assert_eq!(a.is_subqset_of(&b), union == b);
        let rest = a.difference(&b).unwrap();
        prop_assert_eq!(rest.qcard() + meet.qcard(), a.qcard());
    }

    #[test]
    fn cloud_laws((a, b, _c) in triple()) {
        let ambient = Qset::ambient(a.universe());
        let ca = cloud(&ambient, &a).unwrap();
        prop_assert!(a.is_subqset_of(ca.extent()));
        prop_assert_eq!(cloud(&ambient, ca.extent()).unwrap().extent().clone(), ca.extent().clone());
        if a.is_subqset_of(&b) {
            prop_assert!(ca.extent().is_subqset_of(cloud(&ambient, &b).unwrap().extent()));
        }
        // members are untouched; every m-species present fills out completely
        prop_assert!(ca.extent().members().eq(a.members()));
        for s in a.composition().keys() {
            prop_assert_eq!(ca.extent().count(s), ambient.count(s));
        }
    }

    #[test]
    fn internal_labels_are_unobservable(q in qset(), perm in Just((0..5usize).collect::<Vec<_>>()).prop_shuffle()) {
        let n = q.count("s");
        let perm: Vec<usize> = perm.into_iter().filter(|&i| i < n).collect();
        let p = q.permute_internal_labels("s", &perm).unwrap();
        prop_assert!(p.indiscernible(&q));
        prop_assert_eq!(p.to_string(), q.to_string());
        let ambient = Qset::ambient(q.universe());
        prop_assert_eq!(cloud(&ambient, &p).unwrap().extent().clone(), cloud(&ambient, &q).unwrap().extent().clone());
    }
}

fn unitary(seed: &[(f64, f64)], n: usize) -> CMatrix {
    DMatrix::from_fn(n, n, |r, c| {
        let (re, im) = seed[r * n + c];
        C64::new(re, im)
    })
    .qr()
    .q()
}

fn born_case() -> impl Strategy<Value = (usize, Vec<(f64, f64)>, Vec<(f64, f64)>, Vec<f64>, f64)> {
    (2..=5usize).prop_flat_map(|n| {
        (
            Just(n),
            proptest::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n * n),
            proptest::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n),
            proptest::collection::vec(-3.0..3.0f64, n),
            -3.0..3.0f64,
        )
    })
}

proptest! {
    #[test]
    fn born_additivity_and_unitary_invariance((n, seed, amps, values, cut) in born_case()) {
        let psi = CVector::from_iterator(n, amps.iter().map(|&(re, im)| C64::new(re, im)));
        prop_assume!(psi.norm() > 1e-3);
        let psi = psi.normalize();
        let u = unitary(&seed, n);
        let d = CMatrix::from_diagonal(&CVector::from_iterator(n, values.iter().map(|&v| C64::new(v, 0.0))));
        let a = Observable::new(&u * d * u.adjoint(), 1e-9).unwrap();

        let below = Borelian::interval(Interval::below(cut)).unwrap();
        let above = Borelian::interval(Interval::at_least(cut)).unwrap();
        let whole = below.disjoint_union(&above).unwrap();
        let p_below = born_probability(&psi, &a, &below).unwrap();
        let p_above = born_probability(&psi, &a, &above).unwrap();
        prop_assert!((p_below + p_above - born_probability(&psi, &a, &whole).unwrap()).abs() < 1e-9);
        prop_assert!((born_probability(&psi, &a, &Borelian::real_line()).unwrap() - 1.0).abs() < 1e-9);

        let v = unitary(&seed.iter().rev().copied().collect::<Vec<_>>(), n);
        let moved = Observable::new(&v * a.matrix() * v.adjoint(), 1e-9).unwrap();
        let p_moved = born_probability(&(&v * &psi), &moved, &below).unwrap();
        prop_assert!((p_moved - p_below).abs() < 1e-8, "{} vs {}", p_moved, p_below);
    }
}
