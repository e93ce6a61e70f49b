use cslab_core::abelian::{
    enumerate_automorphisms, is_permutation_group, smith_normal_form, Element, FinAbGroup, GroupHom, IntMatrix, Quotient,
};
use cslab_core::cohomology::{coboundary, coboundary_witness, compute_cohomology, verify_cocycle, Cochain2};
use cslab_core::dynamical::{build_dynamical_extension, cocycle_to_dynamical, DYNAMICAL_BOUND};
use cslab_core::extension::{build_extension, extract_cocycle};
use cslab_core::structures::{
    bigroupoid_ybe_equivalence, brace_to_lcs, enumerate_cycle_sets, enumerate_lcs, lcs_to_brace, trivial_lcs,
    verify_cycle_set, verify_nondegenerate, BiGroupoid, LinearCycleSet, Table,
};
use cslab_core::wells::{orbit_bound_report, verify_theta_cocycle, verify_wells, WellsInstance, WELLS_BOUND};
use proptest::prelude::*;

fn group(factors: &[i64]) -> FinAbGroup {
    FinAbGroup::new(factors).unwrap()
}

fn small_groups() -> Vec<FinAbGroup> {
    [&[][..], &[2], &[3], &[4], &[2, 2], &[6], &[2, 4]].iter().map(|f| group(f)).collect()
}

/// `(X, A)` with `|X|·|A| ≤ 16`, covering trivial and non-trivial dot tables.
fn instances() -> Vec<(LinearCycleSet, FinAbGroup)> {
    let mut xs = Vec::new();
    for g in [group(&[2]), group(&[3]), group(&[4]), group(&[2, 2])] {
        xs.extend(enumerate_lcs(&g, 8).unwrap());
    }
    let mut out = Vec::new();
    for x in xs {
        for a in [group(&[2]), group(&[3]), group(&[4]), group(&[2, 2])] {
            if x.size() * a.order() <= WELLS_BOUND {
                out.push((x.clone(), a));
            }
        }
    }
    out
}

fn pick<T: Clone + std::fmt::Debug + 'static>(items: Vec<T>) -> impl Strategy<Value = T> {
    proptest::sample::select(items)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_is_exact(rows in proptest::collection::vec(proptest::collection::vec(-20i64..20, 3), 3)) {
        let m = IntMatrix::from_rows(&rows).unwrap();
        let s = smith_normal_form(&m).unwrap();
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap().to_rows(), s.d.to_rows());
        let d = s.diagonal();
        for w in d.windows(2) {
            prop_assert!(w[0] >= 0 && w[1] >= 0);
            let divides = if w[0] == 0 { w[1] == 0 } else { w[1] % w[0] == 0 };
            prop_assert!(divides);
        }
    }

    #[test]
    fn kernel_times_image_is_domain(
        dom in pick(small_groups()),
        cod in pick(small_groups()),
        seeds in proptest::collection::vec(0usize..64, 2),
    ) {
        let c = cod.exponent();
        let images: Vec<Element> = dom
            .invariant_factors()
            .iter()
            .zip(&seeds)
            .map(|(&d, &s)| cod.scale(&cod.element(s % cod.order()), c / gcd(c, d)))
            .collect();
        let h = GroupHom::from_images(dom.clone(), cod.clone(), &images).unwrap();
        prop_assert_eq!(h.kernel().order() * h.image().order(), dom.order());
    }

    #[test]
    fn quotient_orders_and_cosets(
        gens in proptest::collection::vec(proptest::collection::vec(0i64..12, 2), 1..3),
        combo in proptest::collection::vec(proptest::collection::vec(-3i64..4, 3), 1..3),
        x in proptest::collection::vec(-3i64..4, 3),
    ) {
        let moduli = [4, 6];
        let combine = |k: &[i64]| -> Vec<i64> {
            (0..2).map(|j| gens.iter().zip(k).map(|(g, &t)| g[j] * t).sum::<i64>().rem_euclid(moduli[j])).collect()
        };
        let sub: Vec<Vec<i64>> = combo.iter().map(|k| combine(k)).collect();
        let q = Quotient::new(&moduli, &gens, &sub).unwrap();
        prop_assert_eq!(q.span_order(), q.order() * q.sub_order());
        let v = combine(&x);
        let shifted: Vec<i64> = (0..2).map(|j| (v[j] + sub[0][j]).rem_euclid(moduli[j])).collect();
        prop_assert_eq!(q.reduce(&v).unwrap(), q.reduce(&shifted).unwrap());
        prop_assert_eq!(q.reduce(&q.lift(&q.reduce(&v).unwrap())).unwrap(), q.reduce(&v).unwrap());
    }

    #[test]
    fn automorphisms_form_a_group(g in pick(small_groups())) {
        let perms: Vec<Vec<usize>> =
            enumerate_automorphisms(&g, 64).unwrap().iter().map(GroupHom::to_permutation).collect();
        prop_assert!(is_permutation_group(&perms));
    }

    #[test]
    fn cocycles_are_normalised_and_build(inst in pick(instances()), seed in 0usize..1 << 16) {
        let (x, a) = inst;
        let (z2, b2, h2) = compute_cohomology(&x, &a, 32).unwrap();
        prop_assert_eq!(z2.order(), b2.order() * h2.order());
        let coords = z2.structure().coords(seed % z2.order());
        let c = z2.lift(&coords).unwrap();
        prop_assert!(verify_cocycle(&x, &c).unwrap().is_ok());
        let n = x.size();
        for p in 0..n {
            prop_assert_eq!(c.f(0, p), 0);
            prop_assert_eq!(c.f(p, 0), 0);
            prop_assert_eq!(c.g(0, p), c.g(0, 0));
            prop_assert_eq!(c.g(p, 0), c.g(0, 0));
        }
        let ext = build_extension(&x, &a, &c).unwrap();
        let (back, normalised) = extract_cocycle(&ext, ext.section()).unwrap();
        prop_assert!(normalised);
        prop_assert_eq!(&back, &c);
        if n * a.order() <= DYNAMICAL_BOUND {
            let dynamical = build_dynamical_extension(&x, &cocycle_to_dynamical(&c)).unwrap();
            prop_assert_eq!(dynamical.table(), ext.total().table());
            prop_assert_eq!(dynamical.carrier().sum_table(), ext.total().carrier().sum_table());
        }
        let witnessed = coboundary_witness(&x, &c).unwrap().is_some();
        prop_assert_eq!(witnessed, h2.reduce(&c).unwrap().iter().all(|&t| t == 0));
    }

    #[test]
    fn coboundaries_have_zero_class(inst in pick(instances()), values in proptest::collection::vec(0usize..64, 8)) {
        let (x, a) = inst;
        let (_, _, h2) = compute_cohomology(&x, &a, 32).unwrap();
        let mut lambda: Vec<usize> = (0..x.size()).map(|i| values[i % values.len()] % a.order()).collect();
        lambda[x.zero()] = 0;
        let c = coboundary(&x, &a, &lambda).unwrap();
        prop_assert!(h2.reduce(&c).unwrap().iter().all(|&t| t == 0));
        prop_assert!(coboundary_witness(&x, &c).unwrap().is_some());
    }

    #[test]
    fn build_succeeds_exactly_on_cocycles(values in proptest::collection::vec(0usize..3, 18)) {
        let (x, a) = (trivial_lcs(&group(&[3])), group(&[3]));
        let c = Cochain2::new(3, a.clone(), values[..9].to_vec(), values[9..].to_vec()).unwrap();
        prop_assert_eq!(build_extension(&x, &a, &c).is_ok(), verify_cocycle(&x, &c).unwrap().is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn wells_sequence_is_exact(inst in pick(instances()), seed in 0usize..1 << 16) {
        let (x, a) = inst;
        let w = WellsInstance::new(&x, &a, WELLS_BOUND).unwrap();
        let base = w.h2.structure().coords(seed % w.h2.order());
        let cert = verify_wells(&w, &base).unwrap();
        prop_assert!(cert.is_valid());
        if w.h2.order() == 1 {
            prop_assert_eq!(cert.psi_image.len(), cert.pairs_order);
        }
        prop_assert!(verify_theta_cocycle(&w, &base).unwrap().holds());
        let orbit = orbit_bound_report(&w, &base).unwrap();
        prop_assert!(orbit.orbit_stabiliser && orbit.bound);
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

#[test]
fn cycle_sets_up_to_four_are_nondegenerate() {
    for n in 1..=4 {
        for x in enumerate_cycle_sets(n) {
            assert!(verify_nondegenerate(&x).is_ok());
        }
    }
}

#[test]
fn enumerated_lcs_satisfy_the_cycle_axiom_and_round_trip() {
    for g in [group(&[2]), group(&[4]), group(&[2, 2]), group(&[8]), group(&[2, 4])] {
        for l in enumerate_lcs(&g, 8).unwrap() {
            assert!(verify_cycle_set(l.table()).is_ok());
            assert!(l.left_translations_are_automorphisms());
            let b = lcs_to_brace(&l).unwrap();
            assert_eq!(brace_to_lcs(&b).unwrap().table(), l.table());
            assert_eq!(lcs_to_brace(&brace_to_lcs(&b).unwrap()).unwrap().table(), b.table());
        }
    }
}

#[test]
fn braid_verdict_matches_three_conditions() {
    let mut count = 0;
    for d in 0..16usize {
        for s in 0..16usize {
            let bits = |v: usize| (0..4).map(|i| (v >> i) & 1).collect::<Vec<_>>();
            let b = BiGroupoid::new(Table::new(2, bits(d)).unwrap(), Table::new(2, bits(s)).unwrap()).unwrap();
            let (braid, conditions) = bigroupoid_ybe_equivalence(&b).unwrap();
            assert_eq!(braid.is_ok(), conditions.is_ok());
            count += 1;
        }
    }
    assert_eq!(count, 256);
}
