mod common;

use nichols::builtins::{self, Params};
use nichols::nichols::{self as nic, GradedComputation, NilOrder, RelationComputation};
use nichols::{bpair, Cyc, TensorVec};

fn pair(name: &str) -> nichols::BraidedPair {
    builtins::braided_pair(name, &Params::default()).unwrap()
}

fn z(m: u32, e: i64) -> Cyc {
    Cyc::root_of_unity(m, e)
}

#[test]
fn dims_match_brute_force_symmetrizer() {
    for (name, top) in [("v3", 3), ("c4-a2", 4), ("a2", 3), ("qls2", 3), ("diag1", 3)] {
        let bp = pair(name);
        let h = nic::hilbert(&bp, top);
        for n in 0..=top.min(h.dims.len() - 1) {
            assert_eq!(h.dims[n], common::symmetrizer_rank(&bp, n), "{name} degree {n}");
        }
    }
}

#[test]
fn hilbert_series_examples() {
    let cases: &[(&str, &[usize], usize)] = &[
        ("v3", &[1, 3, 4, 3, 1, 0], 12),
        ("c4-a2", &[1, 2, 3, 4, 3, 2, 1, 0], 16),
        ("qls2", &[1, 2, 1, 0], 4),
        ("diag1", &[1, 1, 0], 2),
    ];
    for &(name, dims, total) in cases {
        let h = nic::hilbert(&pair(name), 12);
        assert_eq!(h.dims, dims, "{name}");
        assert_eq!(h.total, Some(total));
    }
    let v4 = nic::hilbert(&pair("v4"), 12);
    assert_eq!(v4.dims, [1, 4, 8, 11, 12, 12, 11, 8, 4, 1, 0]);
    assert_eq!(v4.total, Some(72));
    let infinite = nic::hilbert(&bpair::diagonal(&[vec![Cyc::one()]]).unwrap(), 5);
    assert_eq!(infinite.dims, [1; 6]);
    assert!(!infinite.is_finite());
}

#[test]
fn minus_one_minus_one_v4_is_large() {
    let bp = pair_with("v4", Some(Cyc::from_int(-1)), Some(Cyc::from_int(-1)));
    assert_eq!(nic::hilbert(&bp, 5).dims, [1, 4, 12, 36, 104, 292]);
}

fn pair_with(name: &str, q: Option<Cyc>, alpha: Option<Cyc>) -> nichols::BraidedPair {
    builtins::braided_pair(name, &Params { q, alpha }).unwrap()
}

#[test]
fn kernels_in_low_degree() {
    let bp = pair("v3");
    // B^2 has dimension 4
    let k = nic::kernel_basis(&bp, 2);
    assert_eq!(k.len(), 5);
    for v in &k {
        let mut map = common::Vector::new();
        for (w, c) in v.terms() {
            map.insert(w, c.clone());
        }
        assert!(common::symmetrize(&bp, &map, 2).is_empty());
    }
    assert_eq!(nic::kernel_basis(&bp, 3).len(), 27 - 3);
    let v3q = pair_with("v3", Some(z(3, 1)), None);
    let mut gc = GradedComputation::new(v3q);
    let ker: Vec<usize> = (1..5).map(|n| nic::derivation_kernel_dim(&mut gc, 0, n)).collect();
    assert_eq!(ker, [2, 6, 13, 31]);
}

#[test]
fn v4_relations() {
    let bp = pair("v4");
    let mut rc = RelationComputation::new(&bp);
    let d2 = rc.degree(2, true);
    assert_eq!(d2.count, 8);
    let reps = d2.representatives.unwrap();
    assert_eq!(reps.len(), 8);
    for r in &reps {
        let mut map = common::Vector::new();
        for (w, c) in r.terms() {
            map.insert(w, c.clone());
        }
        assert!(common::symmetrize(&bp, &map, 2).is_empty());
    }
    let counts: Vec<usize> = rc.counts(6).iter().map(|&(_, c, _)| c).collect();
    assert_eq!(counts, [8, 0, 0, 0, 1]);
    let d6 = rc.degree(6, true);
    assert_eq!(d6.count, 1);
    assert_eq!(d6.representatives.unwrap()[0].degree(), 6);
    assert_eq!(rc.degree(3, false).groebner_words, [vec![1, 2, 1], vec![2, 3, 2]]);
}

#[test]
fn products_and_adjoints() {
    let bp = pair("diag1");
    let x = TensorVec::basis(1, &[0]);
    // x^2 = (1 + q) x (x) x = 0 at q = -1
    assert!(nic::power(&bp, &x, 2).is_zero());
    let q3 = pair_with("diag1", Some(z(3, 1)), None);
    assert!(!nic::power(&q3, &x, 2).is_zero());
    assert!(nic::power(&q3, &x, 3).is_zero());
    assert_eq!(nic::multiply(&bp, &TensorVec::scalar(1, Cyc::one()), &x), x);

    let qls = pair("qls2");
    let x1 = TensorVec::basis(2, &[1]);
    assert!(nic::adjoint(&qls, 0, &x1).is_zero());
    assert_eq!(nic::nilpotency_order(&qls, 0, 1).unwrap(), NilOrder::Finite(1));
    let a2 = pair("a2");
    assert_eq!(nic::nilpotency_order(&a2, 0, 1).unwrap(), NilOrder::Finite(2));
    assert!(nic::nilpotency_order(&a2, 0, 0).is_err());
    let d = nic::derivation(1, &TensorVec::basis(2, &[0, 1])).unwrap();
    assert_eq!(d, TensorVec::basis(2, &[0]));
    assert!(nic::derivation(0, &TensorVec::scalar(2, Cyc::one())).is_err());
}
