mod common;

use nichols::bpair;
use nichols::braidgrp::{
    apply, d_elt, matsumoto_section, r_elt, shuffles, symmetrizer, symmetrizer_apply, u_elt, verify_identity,
    BraidWord, GroupAlgElt, Perm,
};
use nichols::{Cyc, TensorVec};

fn z(m: u32, e: i64) -> Cyc {
    Cyc::root_of_unity(m, e)
}

fn words(e: &GroupAlgElt) -> Vec<Vec<usize>> {
    let mut w: Vec<Vec<usize>> = e.terms().map(|(w, _)| w.gens()).collect();
    w.sort();
    w
}

#[test]
fn matsumoto() {
    assert!(matsumoto_section(&Perm::identity(4)).is_empty());
    assert_eq!(matsumoto_section(&Perm::transposition(2, 1)).gens(), [1]);
    let w0 = Perm::new(vec![2, 1, 0]).unwrap();
    let s = matsumoto_section(&w0);
    assert_eq!(s.len(), 3);
    assert_eq!(s.gens(), [1, 2, 1]);
}

#[test]
fn section_is_multiplicative_on_length_additive_pairs() {
    let suite = [bpair::diagonal(&[vec![z(3, 1), z(4, 1)], vec![z(5, 2), z(6, 1)]]).unwrap()];
    for n in 2..=4 {
        let all = Perm::all(n);
        for x in &all {
            for y in &all {
                let xy = x.compose(y);
                if xy.length() == x.length() + y.length() {
                    let lhs = GroupAlgElt::from_word(matsumoto_section(&xy));
                    let rhs = GroupAlgElt::from_word(matsumoto_section(x)).mul(&GroupAlgElt::from_word(matsumoto_section(y)));
                    assert!(verify_identity(&lhs, &rhs, &suite).unwrap().holds(), "{x:?} {y:?}");
                }
            }
        }
    }
}

#[test]
fn shuffle_counts() {
    assert_eq!(shuffles(&[1, 1]).len(), 2);
    assert_eq!(shuffles(&[1, 2]).len(), 3);
    assert_eq!(shuffles(&[2, 2]).len(), 6);
    // brute force over S_4: inverse preserves the order inside each block
    let brute = Perm::all(4)
        .into_iter()
        .filter(|p| {
            let inv = p.inverse();
            inv.apply(0) < inv.apply(1) && inv.apply(2) < inv.apply(3)
        })
        .count();
    assert_eq!(brute, 6);
}

#[test]
fn named_elements() {
    assert_eq!(words(&u_elt(3, 2, 1).unwrap()), [vec![2, 1]]);
    assert_eq!(words(&d_elt(4, 3, 1).unwrap()), [vec![1, 2, 3]]);
    let r = r_elt(3, 2, 2).unwrap();
    assert_eq!(r.num_terms(), 2);
    assert_eq!(words(&r), [vec![], vec![2, 2]]);
    assert_eq!(words(&symmetrizer(2)), [vec![], vec![1]]);
    let s3 = words(&symmetrizer(3));
    assert_eq!(s3, [vec![], vec![1], vec![1, 2], vec![1, 2, 1], vec![2], vec![2, 1]]);
}

#[test]
fn actions() {
    let q = vec![vec![z(4, 1), z(3, 1)], vec![z(6, 5), Cyc::from_int(-1)]];
    let bp = bpair::diagonal(&q).unwrap();
    let v = TensorVec::basis(2, &[0, 1]);
    assert_eq!(apply(&GroupAlgElt::identity(2), &bp, &v).unwrap(), v);
    let s1 = GroupAlgElt::word(2, &[1]);
    assert_eq!(apply(&s1, &bp, &v).unwrap(), TensorVec::basis(2, &[1, 0]).scale(&q[0][1]));
    let sym = symmetrizer_apply(&bp, &v);
    assert_eq!(sym, v.add(&TensorVec::basis(2, &[1, 0]).scale(&q[0][1])));
    let one = bpair::diagonal(&[vec![z(5, 1)]]).unwrap();
    let xx = TensorVec::basis(1, &[0, 0]);
    assert_eq!(apply(&symmetrizer(2), &one, &xx).unwrap(), xx.scale(&(&Cyc::one() + &z(5, 1))));
    assert!(apply(&s1, &bp, &TensorVec::basis(2, &[0, 1, 1])).is_err());
}

#[test]
fn fast_symmetrizer_matches_brute_force() {
    let pairs = [bpair::v3(&z(3, 1)).unwrap(), bpair::v4(&Cyc::from_int(-1), &Cyc::one()).unwrap()];
    for bp in &pairs {
        for n in 1..=4 {
            for w in common::all_words(bp.dim(), n).into_iter().step_by(7) {
                let v = TensorVec::basis(bp.dim(), &w);
                let fast = symmetrizer_apply(bp, &v);
                let brute = common::symmetrize(bp, &common::Vector::from([(w.clone(), Cyc::one())]), n);
                let brute = TensorVec::from_words(bp.dim(), n, brute);
                assert_eq!(fast, brute, "word {w:?}");
                if n <= 3 {
                    assert_eq!(apply(&symmetrizer(n), bp, &v).unwrap(), brute);
                }
            }
        }
    }
}

#[test]
fn identity_checks() {
    let bp = bpair::v3(&Cyc::from_int(-1)).unwrap();
    let e = GroupAlgElt::identity(3);
    assert!(verify_identity(&e, &e, &[bp.clone()]).unwrap().holds());
    let braid = GroupAlgElt::word(3, &[1, 2, 1]);
    let other = GroupAlgElt::word(3, &[2, 1, 2]);
    assert!(verify_identity(&braid, &other, &[bp.clone()]).unwrap().holds());
    assert!(!verify_identity(&braid, &e, &[bp.clone()]).unwrap().holds());
    assert!(verify_identity(&e, &GroupAlgElt::identity(2), &[bp]).is_err());
    let w = BraidWord::new(3, vec![(1, 1), (1, -1)]).unwrap();
    assert_eq!(w.len(), 2);
}
