use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::pairs::{AutPair, WellsInstance};
use crate::abelian::{FinAbGroup, ValuedSystem};
use crate::cohomology::{flat_to_indices, indices_to_flat, Cochain2};
use crate::extension::pair_index;
use crate::structures::{invert_permutation, LinearCycleSet};
use crate::verdict::{Failure, Law};
use crate::{Error, Result};

/// `ψ(x, a) = (φ(x), λ(x) + θ(a))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LiftedAut {
    pub pair: AutPair,
    pub lambda: Vec<usize>,
}

impl LiftedAut {
    /// `ψ` as a permutation of the canonical carrier `X × A`.
    pub fn to_permutation(&self, a: &FinAbGroup) -> Vec<usize> {
        let na = a.order();
        (0..self.lambda.len() * na)
            .map(|u| {
                let (x, s) = (u / na, u % na);
                pair_index(na, self.pair.phi[x], a.add_index(self.lambda[x], self.pair.theta_at(s)))
            })
            .collect()
    }

    /// `λ = λ₁∘φ₂ + θ₁∘λ₂` for `ψ₁ψ₂`.
    pub fn compose(&self, other: &LiftedAut, a: &FinAbGroup) -> LiftedAut {
        let lambda =
            (0..self.lambda.len()).map(|x| a.add_index(self.lambda[other.pair.phi[x]], self.pair.theta_at(other.lambda[x]))).collect();
        LiftedAut { pair: self.pair.compose(&other.pair), lambda }
    }

    /// `ψ⁻¹(x, a) = (φ⁻¹x, θ⁻¹(−λ(φ⁻¹x)) + θ⁻¹(a))`.
    pub fn inverse(&self, a: &FinAbGroup) -> LiftedAut {
        let pair = self.pair.inverse();
        let phi_inv = invert_permutation(&self.pair.phi);
        let lambda = (0..self.lambda.len()).map(|x| pair.theta_at(a.neg_index(self.lambda[phi_inv[x]]))).collect();
        LiftedAut { pair, lambda }
    }
}

/// `Ψ(ψ) = (φ, θ)`.
pub fn psi(l: &LiftedAut) -> AutPair {
    l.pair.clone()
}

/// `ι(λ) = (x, a) ↦ (x, λ(x) + a)`; rejects `λ ∉ Z¹_N` with the failing equation.
pub fn iota(x: &LinearCycleSet, a: &FinAbGroup, lambda: &[usize]) -> core::result::Result<LiftedAut, Failure> {
    let n = x.size();
    if lambda.len() != n || lambda.iter().any(|&v| v >= a.order()) {
        return Err(Failure::new(Law::Range, &[]));
    }
    for p in 0..n {
        for q in 0..n {
            if lambda[x.add(p, q)] != a.add_index(lambda[p], lambda[q]) {
                return Err(Failure::new(Law::OneCocycleAdditive, &[p, q]));
            }
        }
    }
    for p in 0..n {
        for q in 0..n {
            if lambda[x.dot(p, q)] != lambda[q] {
                return Err(Failure::new(Law::OneCocycleDot, &[p, q]));
            }
        }
    }
    Ok(LiftedAut { pair: AutPair::identity(n, a), lambda: lambda.to_vec() })
}

/// Linear system `λ(x+y) − λ(x) − λ(y) = …`, and `λ(x·y) − λ(y) = …` when `with_dot`.
pub(crate) fn lift_system(
    x: &LinearCycleSet,
    a: &FinAbGroup,
    c: &Cochain2,
    p: &AutPair,
    with_dot: bool,
) -> (ValuedSystem, Vec<i64>) {
    let n = x.size();
    let sub = |s, t| a.add_index(s, a.neg_index(t));
    let mut sys = ValuedSystem::new(n);
    let mut rhs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            sys.push(&[(x.add(u, v), 1), (u, -1), (v, -1)]);
            rhs.push(sub(c.g(p.phi[u], p.phi[v]), p.theta_at(c.g(u, v))));
            if with_dot {
                sys.push(&[(x.dot(u, v), 1), (v, -1)]);
                rhs.push(sub(c.f(p.phi[u], p.phi[v]), p.theta_at(c.f(u, v))));
            }
        }
    }
    (sys, indices_to_flat(a, &rhs))
}

/// One `λ` lifting `p` to `Aut_A(E)`, if any.
pub fn solve_lift(inst: &WellsInstance, c: &Cochain2, p: &AutPair) -> Result<Option<Vec<usize>>> {
    let (sys, rhs) = lift_system(&inst.x, &inst.a, c, p, true);
    Ok(sys.solve(&inst.a, &rhs)?.map(|sol| flat_to_indices(&inst.a, &sol, inst.x.size())))
}

/// Direct check that `ψ` preserves both operations of `E = X ⊕_{f,g} A`.
pub fn is_automorphism_of(e: &LinearCycleSet, perm: &[usize]) -> bool {
    let n = e.size();
    crate::structures::is_permutation(perm)
        && (0..n).all(|u| (0..n).all(|v| perm[e.add(u, v)] == e.add(perm[u], perm[v]) && perm[e.dot(u, v)] == e.dot(perm[u], perm[v])))
}

/// `Aut_A(E)`: every pair with a particular lift, shifted by all of `Z¹_N`.
pub fn enumerate_aut_a_e(inst: &WellsInstance, c: &Cochain2, e: &LinearCycleSet) -> Result<Vec<LiftedAut>> {
    let z1: Vec<Vec<usize>> = inst.z1.all_coords().iter().map(|k| inst.z1.lift_map(k)).collect();
    let a = &inst.a;
    let mut out = Vec::new();
    for p in &inst.pairs {
        let Some(base) = solve_lift(inst, c, p)? else { continue };
        for k in &z1 {
            let lambda: Vec<usize> = base.iter().zip(k).map(|(&s, &t)| a.add_index(s, t)).collect();
            let l = LiftedAut { pair: p.clone(), lambda };
            if !is_automorphism_of(e, &l.to_permutation(a)) {
                return Err(Error::Internal("solved lift is not an automorphism of E".into()));
            }
            out.push(l);
        }
    }
    let perms: BTreeSet<Vec<usize>> = out.iter().map(|l| l.to_permutation(a)).collect();
    if perms.len() != out.len() {
        return Err(Error::Internal("distinct lifts gave the same automorphism".into()));
    }
    for l1 in &out {
        let inv = l1.inverse(a);
        if !perms.contains(&inv.to_permutation(a)) || compose_perm(&l1.to_permutation(a), &inv.to_permutation(a)).iter().enumerate().any(|(i, &v)| i != v) {
            return Err(Error::Internal("inverse formula disagrees with the inverse map".into()));
        }
        for l2 in &out {
            let prod = l1.compose(l2, a).to_permutation(a);
            if prod != compose_perm(&l1.to_permutation(a), &l2.to_permutation(a)) || !perms.contains(&prod) {
                return Err(Error::Internal("composition formula disagrees with composition".into()));
            }
        }
    }
    Ok(out)
}

/// `p ∘ q` on indices.
pub(crate) fn compose_perm(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&v| p[v]).collect()
}
