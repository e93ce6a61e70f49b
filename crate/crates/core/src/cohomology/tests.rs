use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::abelian::FinAbGroup;
use crate::oracle;
use crate::structures::{trivial_lcs, LinearCycleSet, Table};
use crate::verdict::Law;

fn z(n: i64) -> FinAbGroup {
    FinAbGroup::cyclic(n).unwrap()
}

fn z4_nontrivial() -> LinearCycleSet {
    LinearCycleSet::from_group(&z(4), Table::from_fn(4, |x, y| if x % 2 == 1 { 3 * y % 4 } else { y })).unwrap()
}

fn bilinear_f() -> Cochain2 {
    Cochain2::from_fn(2, &z(2), |x, y| x * y, |_, _| 0).unwrap()
}

#[test]
fn cocycle_examples() {
    let x = trivial_lcs(&z(2));
    assert!(verify_cocycle(&x, &Cochain2::zero(2, &z(2))).unwrap().is_ok());
    assert!(verify_cocycle(&x, &bilinear_f()).unwrap().is_ok());
    let bad = Cochain2::from_fn(2, &z(2), |_, _| 0, |p, q| usize::from(p == 0 && q == 1)).unwrap();
    assert_eq!(verify_cocycle(&x, &bad).unwrap().unwrap_err().law, Law::GSymmetric);
    let unnormalised = Cochain2::from_fn(2, &z(2), |_, _| 0, |_, _| 1).unwrap();
    assert_eq!(verify_cocycle(&x, &unnormalised).unwrap().unwrap_err().law, Law::Normalisation);
}

#[test]
fn cocycles_vanish_on_zero() {
    for (x, a) in [(trivial_lcs(&z(2)), z(2)), (z4_nontrivial(), z(2))] {
        let (z2, _, _) = compute_cohomology(&x, &a, COHOMOLOGY_BOUND).unwrap();
        for c in z2.all_coords() {
            let k = z2.lift(&c).unwrap();
            assert!(verify_cocycle(&x, &k).unwrap().is_ok());
            for p in 0..x.size() {
                assert_eq!((k.f(0, p), k.f(p, 0)), (0, 0));
                assert_eq!(k.g(0, p), k.g(0, 0));
                assert_eq!(k.g(p, 0), k.g(0, 0));
            }
        }
    }
}

#[test]
fn trivial_z2_cohomology() {
    let x = trivial_lcs(&z(2));
    let (z2, b2, h2) = compute_cohomology(&x, &z(2), COHOMOLOGY_BOUND).unwrap();
    assert_eq!((z2.order(), b2.order()), (4, 1));
    assert_eq!(h2.invariant_factors(), &[2, 2]);
    let o = oracle::cohomology(&x, &z(2)).unwrap();
    assert_eq!((o.cocycles.len(), o.coboundaries.len(), o.h2_order), (4, 1, 4));
}

#[test]
fn pipeline_matches_oracle() {
    let cases = [
        (trivial_lcs(&z(2)), z(2)),
        (trivial_lcs(&z(2)), z(3)),
        (trivial_lcs(&z(3)), z(3)),
        (trivial_lcs(&z(3)), z(2)),
        (trivial_lcs(&FinAbGroup::trivial()), z(5)),
        (trivial_lcs(&z(2)), FinAbGroup::trivial()),
        (z4_nontrivial(), z(2)),
    ];
    for (x, a) in cases {
        let (z2, b2, h2) = compute_cohomology(&x, &a, COHOMOLOGY_BOUND).unwrap();
        let o = oracle::cohomology(&x, &a).unwrap();
        assert_eq!(z2.order(), o.cocycles.len());
        assert_eq!(b2.order(), o.coboundaries.len());
        assert_eq!(h2.order(), o.h2_order);
        // membership and class equality agree with the oracle
        for (f, g) in &o.cocycles {
            let c = Cochain2::new(x.size(), a.clone(), f.clone(), g.clone()).unwrap();
            assert!(z2.reduce(&c).is_ok());
            let bounded = o.coboundaries.contains(&(f.clone(), g.clone()));
            assert_eq!(h2.reduce(&c).unwrap().iter().all(|&t| t == 0), bounded);
            assert_eq!(coboundary_witness(&x, &c).unwrap().is_some(), bounded);
            let class = h2.class(&c).unwrap();
            assert_eq!(h2.class(&class.representative).unwrap(), class);
        }
    }
}

#[test]
fn coboundary_witness_examples() {
    let x = trivial_lcs(&z(2));
    assert_eq!(coboundary_witness(&x, &Cochain2::zero(2, &z(2))).unwrap(), Some(vec![0, 0]));
    assert_eq!(coboundary_witness(&x, &bilinear_f()).unwrap(), None);
    let y = z4_nontrivial();
    for l in 0..8usize {
        let lambda = vec![0, l & 1, l >> 1 & 1, l >> 2];
        let c = coboundary(&y, &z(2), &lambda).unwrap();
        let w = coboundary_witness(&y, &c).unwrap().unwrap();
        assert_eq!(coboundary(&y, &z(2), &w).unwrap(), c);
    }
}

#[test]
fn z1_examples() {
    assert_eq!(compute_z1(&trivial_lcs(&z(2)), &z(2)).unwrap().order(), 2);
    assert_eq!(compute_z1(&trivial_lcs(&z(4)), &FinAbGroup::trivial()).unwrap().order(), 1);
    let x = z4_nontrivial();
    let z1 = compute_z1(&x, &z(2)).unwrap();
    let brute = oracle::z1(&x, &z(2)).unwrap();
    assert_eq!(z1.order(), brute.len());
    for c in z1.all_coords() {
        let l = z1.lift_map(&c);
        assert!(brute.contains(&l));
        // λ kills every L_p(q) − q
        for p in 0..4 {
            for q in 0..4 {
                assert_eq!(l[x.sub(x.dot(p, q), q)], 0);
            }
        }
    }
}

#[test]
fn h2sym_examples() {
    assert_eq!(compute_h2sym(&z(2), &z(2)).unwrap().order(), 2);
    assert_eq!(compute_h2sym(&FinAbGroup::trivial(), &z(4)).unwrap().order(), 1);
    assert_eq!(compute_h2sym(&z(3), &z(3)).unwrap().order(), 3);
    for (g, a) in [(z(2), z(2)), (z(3), z(3)), (z(4), z(2)), (FinAbGroup::new(&[2, 2]).unwrap(), z(2))] {
        let sum = Table::new(g.order(), g.sum_table()).unwrap();
        assert_eq!(compute_h2sym(&g, &a).unwrap().order(), oracle::h2sym_order(&sum, 0, &a).unwrap());
    }
}

#[test]
fn lambda_examples() {
    let x = trivial_lcs(&z(2));
    let a = z(2);
    let (_, b2, h2) = compute_cohomology(&x, &a, COHOMOLOGY_BOUND).unwrap();
    let sym = compute_h2sym(&z(2), &a).unwrap();
    assert_eq!(lambda_map(&h2, &sym, &[0, 0]).unwrap(), vec![0]);
    let c = Cochain2::from_fn(2, &a, |_, _| 0, |p, q| p * q).unwrap();
    let class = h2.reduce(&c).unwrap();
    assert_eq!(lambda_map(&h2, &sym, &class).unwrap(), vec![1]);
    let all = h2.all_coords();
    for c1 in &all {
        for c2 in &all {
            let s: Vec<i64> = c1.iter().zip(c2).map(|(p, q)| (p + q) % 2).collect();
            let l = |c: &[i64]| lambda_map(&h2, &sym, c).unwrap()[0];
            assert_eq!(l(&s), (l(c1) + l(c2)) % 2);
        }
    }
    let r = lambda_report(&h2, &b2, &sym).unwrap();
    assert_eq!((r.kernel_order, r.image_order), (2, 2));
}

#[test]
fn trivial_decomposition_examples() {
    for (n, q, expected) in [(1, 4, (1, 1, 1)), (2, 2, (4, 2, 2)), (3, 3, (9, 3, 3))] {
        let x = trivial_lcs(&z(n));
        let a = z(q);
        let (_, _, h2) = compute_cohomology(&x, &a, COHOMOLOGY_BOUND).unwrap();
        let sym = compute_h2sym(&z(n), &a).unwrap();
        let d = trivial_decomposition(&x, &h2, &sym).unwrap();
        assert_eq!((d.h2_order, d.bilin_order, d.h2sym_order), expected);
        assert!(d.isomorphism && d.lambda_is_projection);
        let sum = Table::new(x.size(), z(n).sum_table()).unwrap();
        assert_eq!(oracle::bilinear_order(&sum, &a).unwrap(), d.bilin_order);
    }
    assert!(trivial_decomposition(&z4_nontrivial(), &compute_h2sym(&z(2), &z(2)).unwrap(), &compute_h2sym(&z(2), &z(2)).unwrap()).is_err());
}

#[test]
fn size_bound_is_enforced() {
    assert!(compute_cohomology(&trivial_lcs(&z(8)), &z(8), COHOMOLOGY_BOUND).is_err());
}
