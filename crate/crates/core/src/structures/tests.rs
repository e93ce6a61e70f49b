use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::abelian::FinAbGroup;
use crate::verdict::Law;

fn z(n: i64) -> FinAbGroup {
    FinAbGroup::cyclic(n).unwrap()
}

fn pow3(x: usize) -> usize {
    if x % 2 == 0 {
        1
    } else {
        3
    }
}

fn z4_dot() -> Table {
    Table::from_fn(4, |x, y| pow3(x) * y % 4)
}

#[test]
fn cycle_set_examples() {
    assert!(verify_cycle_set(&Table::from_fn(3, |_, y| y)).is_ok());
    assert!(verify_cycle_set(&Table::from_fn(2, |_, y| (y + 1) % 2)).is_ok());
    let f = verify_cycle_set(&Table::from_fn(2, |x, _| x)).unwrap_err();
    assert_eq!((f.law, f.witness), (Law::Bijectivity, vec![0]));
}

#[test]
fn malformed_tables_are_errors() {
    assert!(Table::new(2, vec![0, 1, 2, 0]).is_err());
    assert!(Table::from_rows(&[vec![0, 1], vec![0]]).is_err());
}

#[test]
fn squaring_examples() {
    let t = CycleSet::new(Table::from_fn(3, |_, y| y)).unwrap();
    assert_eq!(t.squaring(), vec![0, 1, 2]);
    let s = CycleSet::new(Table::from_fn(2, |_, y| (y + 1) % 2)).unwrap();
    assert_eq!(s.squaring(), vec![1, 0]);
    assert!(verify_nondegenerate(&s).is_ok());
}

#[test]
fn every_small_cycle_set_is_nondegenerate() {
    let counts: Vec<usize> = (1..=4).map(|n| enumerate_cycle_sets(n).len()).collect();
    // cycle sets on 1..4 points, counted as labelled tables by brute force
    assert_eq!(counts[0], 1);
    assert_eq!(counts[1], 2);
    for n in 1..=4 {
        for c in enumerate_cycle_sets(n) {
            assert!(verify_nondegenerate(&c).is_ok());
        }
    }
}

#[test]
fn lcs_examples() {
    let g = z(4);
    assert!(LinearCycleSet::from_group(&g, trivial_lcs(&g).table().clone()).is_ok());
    let l = LinearCycleSet::from_group(&g, z4_dot()).unwrap();
    assert!(l.left_translations_are_automorphisms());
    let sum = Carrier::from_group(&z(2));
    let f = verify_linear_cycle_set(sum.sum_table(), &Table::from_fn(2, |x, y| (x + y) % 2)).unwrap_err();
    assert_eq!(f.law, Law::DotAdditive);
    assert_eq!(f.witness[0], 1);
}

#[test]
fn trivial_lcs_shapes() {
    assert_eq!(trivial_lcs(&z(2)).table().rows(), vec![vec![0, 1], vec![0, 1]]);
    assert_eq!(trivial_lcs(&FinAbGroup::trivial()).size(), 1);
    let k = FinAbGroup::new(&[2, 2]).unwrap();
    let t = trivial_lcs(&k);
    assert!(verify_linear_cycle_set(t.carrier().sum_table(), t.table()).is_ok());
}

#[test]
fn brace_examples() {
    let c = Carrier::from_group(&z(4));
    let plus = Table::from_fn(4, |x, y| (x + y) % 4);
    assert!(verify_brace(c.sum_table(), &plus).is_ok());
    let circ = Table::from_fn(4, |x, y| (x + pow3(x) * y) % 4);
    let b = Brace::new(c.clone(), circ.clone()).unwrap();
    assert_eq!(brace_to_lcs(&b).unwrap().table(), &z4_dot());
    let l = LinearCycleSet::new(c.clone(), z4_dot()).unwrap();
    assert_eq!(lcs_to_brace(&l).unwrap().table(), &circ);
    let triv = Brace::new(c.clone(), plus).unwrap();
    assert!(brace_to_lcs(&triv).unwrap().is_trivial());

    // x∘y = x - y keeps 0 as right identity only; swap two entries to break associativity
    let mut rows = Table::from_fn(4, |x, y| (x + y) % 4).rows();
    rows[1].swap(2, 3);
    rows[2].swap(1, 3);
    let f = verify_brace(c.sum_table(), &Table::from_rows(&rows).unwrap()).unwrap_err();
    assert!(matches!(f.law, Law::Associativity | Law::Identity | Law::BraceAxiom));
}

#[test]
fn round_trip_on_enumerated_lcs() {
    for factors in [vec![1], vec![2], vec![3], vec![4], vec![2, 2], vec![5], vec![6], vec![7], vec![8], vec![2, 4], vec![2, 2, 2]] {
        let g = FinAbGroup::new(&factors).unwrap();
        let all = enumerate_lcs(&g, LCS_ORDER_BOUND).unwrap();
        assert!(!all.is_empty());
        for l in &all {
            assert!(l.left_translations_are_automorphisms());
            let b = lcs_to_brace(l).unwrap();
            assert_eq!(brace_to_lcs(&b).unwrap().table(), l.table());
            assert_eq!(lcs_to_brace(&brace_to_lcs(&b).unwrap()).unwrap(), b);
        }
    }
}

#[test]
fn enumeration_examples() {
    let z2 = enumerate_lcs(&z(2), 8).unwrap();
    assert_eq!(z2.len(), 1);
    assert!(z2[0].is_trivial());
    let z4 = enumerate_lcs(&z(4), 8).unwrap();
    assert!(z4.iter().any(|l| l.is_trivial()));
    assert!(z4.iter().any(|l| l.table() == &z4_dot()));
    assert_eq!(enumerate_lcs(&FinAbGroup::trivial(), 8).unwrap().len(), 1);
    assert!(enumerate_lcs(&FinAbGroup::new(&[3, 3]).unwrap(), 8).is_err());
}

#[test]
fn z4_enumeration_matches_brute_force() {
    // all 2^4 choices of L_x ∈ {1, 3}, filtered by the linear axioms
    let g = z(4);
    let c = Carrier::from_group(&g);
    let mut expected = Vec::new();
    for mask in 0..16usize {
        let t = Table::from_fn(4, |x, y| if mask >> x & 1 == 1 { 3 * y % 4 } else { y });
        if verify_linear_cycle_set(c.sum_table(), &t).is_ok() {
            expected.push(t);
        }
    }
    expected.sort();
    let got: Vec<Table> = enumerate_lcs(&g, 8).unwrap().into_iter().map(|l| l.table().clone()).collect();
    assert_eq!(got, expected);
}

#[test]
fn braid_examples() {
    let flip = BraidMap::new(3, (0..9).map(|i| (i % 3, i / 3)).collect()).unwrap();
    let r = verify_braid(&flip);
    assert!(r.braid.is_ok() && r.nondegenerate.is_ok());
    let id = BraidMap::new(3, (0..9).map(|i| (i / 3, i % 3)).collect()).unwrap();
    assert!(verify_braid(&id).braid.is_ok());
    // S(x,y) = (y, y*x) for a non-left-distributive * on two points
    let star = Table::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
    assert!(verify_rack(&star).is_err());
    let b = BiGroupoid::new(Table::from_fn(2, |_, y| y), star).unwrap();
    assert_eq!(verify_braid(&b.solution()).braid.unwrap_err().law, Law::Braid);
}

#[test]
fn bigroupoid_equivalence_on_two_points() {
    let mut agree = 0;
    for m1 in 0..16usize {
        for m2 in 0..16usize {
            let t1 = Table::new(2, (0..4).map(|i| m1 >> i & 1).collect()).unwrap();
            let t2 = Table::new(2, (0..4).map(|i| m2 >> i & 1).collect()).unwrap();
            let b = BiGroupoid::new(t1, t2).unwrap();
            let (braid, cond) = bigroupoid_ybe_equivalence(&b).unwrap();
            assert_eq!(braid.is_ok(), cond.is_ok());
            if b.table1() == &Table::from_fn(2, |_, y| y) {
                assert_eq!(braid.is_ok(), trivial_dot_criterion(&b).is_ok());
            }
            agree += 1;
        }
    }
    assert_eq!(agree, 256);
}

#[test]
fn rack_examples() {
    let trivial = Rack::new(Table::from_fn(3, |_, y| y)).unwrap();
    assert!(abelian_rack_to_cycle_set(&trivial).is_ok());
    let dihedral = Rack::new(Table::from_fn(3, |x, y| (2 * x + 3 - y) % 3)).unwrap();
    // brute force: does x*(y*z) = y*(x*z) hold everywhere?
    let s = |x: usize, y: usize| (2 * x + 3 - y) % 3;
    let commuting = (0..27).all(|i| {
        let (x, y, zz) = (i / 9, i / 3 % 3, i % 3);
        s(x, s(y, zz)) == s(y, s(x, zz))
    });
    assert!(!commuting);
    assert_eq!(abelian_rack_to_cycle_set(&dihedral).unwrap_err().law, Law::RackAbelian);
}

#[test]
fn abelian_racks_on_three_points_are_cycle_sets() {
    let perms = permutations(3);
    for a in 0..6 {
        for b in 0..6 {
            for c in 0..6 {
                let t = Table::from_rows(&[perms[a].clone(), perms[b].clone(), perms[c].clone()]).unwrap();
                if let Ok(r) = Rack::new(t) {
                    if let Ok(cs) = abelian_rack_to_cycle_set(&r) {
                        assert!(verify_cycle_set(cs.table()).is_ok());
                    }
                }
            }
        }
    }
}

#[test]
fn carrier_from_table() {
    let sum = Table::from_fn(3, |x, y| (x + y) % 3);
    let c = Carrier::from_table(sum).unwrap();
    assert_eq!((c.zero(), c.neg(1)), (0, 2));
    let bad = Table::from_fn(3, |x, _| x);
    assert!(Carrier::from_table(bad).is_err());
}
