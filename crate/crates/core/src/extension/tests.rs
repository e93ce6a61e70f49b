use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::abelian::FinAbGroup;
use crate::cohomology::{coboundary, compute_cohomology, COHOMOLOGY_BOUND};
use crate::oracle::for_each_vector;
use crate::structures::{lcs_to_brace, trivial_lcs};

fn z(n: i64) -> FinAbGroup {
    FinAbGroup::cyclic(n).unwrap()
}

fn z4_nontrivial() -> LinearCycleSet {
    LinearCycleSet::from_group(&z(4), Table::from_fn(4, |x, y| if x % 2 == 1 { 3 * y % 4 } else { y })).unwrap()
}

fn additive_order(e: &LinearCycleSet, u: usize) -> usize {
    let mut acc = u;
    let mut k = 1;
    while acc != e.zero() {
        acc = e.add(acc, u);
        k += 1;
    }
    k
}

#[test]
fn build_examples() {
    let x = trivial_lcs(&z(2));
    let a = z(2);
    let direct = build_extension(&x, &a, &Cochain2::zero(2, &a)).unwrap();
    assert!(direct.total().is_trivial());
    assert!((0..4).all(|u| additive_order(direct.total(), u) <= 2));

    let g = Cochain2::from_fn(2, &a, |_, _| 0, |p, q| p * q).unwrap();
    let cyclic = build_extension(&x, &a, &g).unwrap();
    assert_eq!(cyclic.total().add(2, 2), 1);
    assert!((0..4).any(|u| additive_order(cyclic.total(), u) == 4));

    let f = Cochain2::from_fn(2, &a, |p, q| p * q, |_, _| 0).unwrap();
    let dotted = build_extension(&x, &a, &f).unwrap();
    assert!(!dotted.total().is_trivial());
    assert_eq!(dotted.total().dot(2, 2), 3);
}

#[test]
fn build_succeeds_exactly_on_cocycles() {
    // every cochain pair on Z2/Z2
    let x = trivial_lcs(&z(2));
    let a = z(2);
    let mut built = 0;
    for_each_vector(2, 8, |v| {
        let c = Cochain2::new(2, a.clone(), v[..4].to_vec(), v[4..].to_vec()).unwrap();
        let ok = verify_cocycle(&x, &c).unwrap().is_ok();
        match build_extension(&x, &a, &c) {
            Ok(_) => {
                assert!(ok);
                built += 1;
            }
            Err(Error::Property(_)) => assert!(!ok),
            Err(other) => panic!("{other}"),
        }
    });
    assert_eq!(built, 4);
}

#[test]
fn extract_inverts_build() {
    for (x, a) in [(trivial_lcs(&z(2)), z(2)), (trivial_lcs(&z(3)), z(3)), (z4_nontrivial(), z(2))] {
        let (z2, _, _) = compute_cohomology(&x, &a, COHOMOLOGY_BOUND).unwrap();
        for c in z2.all_coords() {
            let k = z2.lift(&c).unwrap();
            let e = build_extension(&x, &a, &k).unwrap();
            let (back, normalised) = extract_cocycle(&e, e.section()).unwrap();
            assert!(normalised);
            assert_eq!(back, k);
        }
    }
}

#[test]
fn other_sections() {
    let x = trivial_lcs(&z(2));
    let a = z(2);
    let c = Cochain2::from_fn(2, &a, |p, q| p * q, |p, q| p * q).unwrap();
    let e = build_extension(&x, &a, &c).unwrap();
    let (_, normalised) = extract_cocycle(&e, &[1, 2]).unwrap();
    assert!(!normalised);
    let (c2, normalised) = extract_cocycle(&e, &[0, 3]).unwrap();
    assert!(normalised);
    assert!(coboundary_witness(&x, &c2.sub(&c)).unwrap().is_some());
    assert!(extract_cocycle(&e, &[0, 1]).is_err());
}

#[test]
fn equivalence_classes_match_h2() {
    let x = trivial_lcs(&z(2));
    let a = z(2);
    let (z2, _, h2) = compute_cohomology(&x, &a, COHOMOLOGY_BOUND).unwrap();
    let exts: Vec<CentralExtension> =
        z2.all_coords().iter().map(|c| build_extension(&x, &a, &z2.lift(c).unwrap()).unwrap()).collect();
    let mut reps: Vec<usize> = Vec::new();
    for (k, e) in exts.iter().enumerate() {
        if !reps.iter().any(|&r| classify_equivalence(&exts[r], e).unwrap().equivalent) {
            reps.push(k);
        }
    }
    assert_eq!(reps.len(), h2.order());
    let same = classify_equivalence(&exts[1], &exts[1]).unwrap();
    assert_eq!(same.lambda, Some(vec![0, 0]));
}

#[test]
fn equivalence_recovers_witness() {
    let x = z4_nontrivial();
    let a = z(2);
    let (z2, _, _) = compute_cohomology(&x, &a, COHOMOLOGY_BOUND).unwrap();
    let base = z2.lift(&vec![1; z2.structure().rank()]).unwrap();
    let shift = coboundary(&x, &a, &[0, 1, 1, 0]).unwrap();
    let e1 = build_extension(&x, &a, &base).unwrap();
    let e2 = build_extension(&x, &a, &base.add(&shift)).unwrap();
    let eq = classify_equivalence(&e1, &e2).unwrap();
    assert!(eq.equivalent);
    let lambda = eq.lambda.unwrap();
    assert_eq!(coboundary(&x, &a, &lambda).unwrap(), shift);
}

#[test]
fn inequivalent_pair() {
    let x = trivial_lcs(&z(2));
    let a = z(2);
    let e0 = build_extension(&x, &a, &Cochain2::zero(2, &a)).unwrap();
    let e1 = build_extension(&x, &a, &Cochain2::from_fn(2, &a, |_, _| 0, |p, q| p * q).unwrap()).unwrap();
    assert!(!classify_equivalence(&e0, &e1).unwrap().equivalent);
}

fn check_brace_case(x: &LinearCycleSet, a: &FinAbGroup, c: &Cochain2) -> bool {
    let b = lcs_to_brace(x).unwrap();
    let bar = brace_transform(x, c).unwrap();
    let cocycle = verify_cocycle(x, &bar).unwrap().is_ok();
    match build_brace_extension(&b, a, c) {
        Ok(e) => {
            assert!(cocycle);
            let via_lcs = build_extension(x, a, &bar).unwrap();
            assert_eq!(brace_to_lcs(&e).unwrap().table(), via_lcs.total().table());
            true
        }
        Err(Error::Property(_)) => {
            assert!(!cocycle);
            false
        }
        Err(other) => panic!("{other}"),
    }
}

#[test]
fn brace_extension_matches_lcs_extension() {
    let x = trivial_lcs(&z(2));
    let a = z(2);
    let mut agreed = 0;
    for_each_vector(2, 8, |v| {
        let c = Cochain2::new(2, a.clone(), v[..4].to_vec(), v[4..].to_vec()).unwrap();
        agreed += usize::from(check_brace_case(&x, &a, &c));
    });
    assert_eq!(agreed, 4);
}

#[test]
fn brace_extension_on_nontrivial_brace() {
    // invert the transform: f(x, z) = g(x, y) − f̄(x, y) with z = x·y
    let x = z4_nontrivial();
    let a = z(2);
    let (z2, _, _) = compute_cohomology(&x, &a, COHOMOLOGY_BOUND).unwrap();
    for coords in z2.all_coords() {
        let bar = z2.lift(&coords).unwrap();
        let f: Vec<usize> = (0..16)
            .map(|i| {
                let (p, q) = (i / 4, i % 4);
                let y = x.left_translation_inverse(p)[q];
                a.add_index(bar.g(p, y), a.neg_index(bar.f(p, y)))
            })
            .collect();
        let c = Cochain2::new(4, a.clone(), f, bar.g_table().to_vec()).unwrap();
        assert_eq!(brace_transform(&x, &c).unwrap(), bar);
        assert!(check_brace_case(&x, &a, &c));
        let mut broken = c.f_table().to_vec();
        broken[5] ^= 1;
        let d = Cochain2::new(4, a.clone(), broken, c.g_table().to_vec()).unwrap();
        check_brace_case(&x, &a, &d);
    }
}

#[test]
fn brace_transform_example() {
    let x = trivial_lcs(&z(2));
    let a = z(2);
    let c = Cochain2::from_fn(2, &a, |p, q| p * q, |p, q| p * q).unwrap();
    let bar = brace_transform(&x, &c).unwrap();
    // −f(x, x·y) + g(x, y) = −xy + xy on a trivial X
    assert!(bar.f_table().iter().all(|&v| v == 0));
    assert!(verify_cocycle(&x, &bar).unwrap().is_ok());
}
