use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::abelian::{enumerate_automorphisms, Element, FinAbGroup, GroupHom, AUT_ORDER_BOUND};
use crate::cohomology::{compute_cohomology, compute_z1, Cochain2, CohomologyGroup};
use crate::oracle;
use crate::structures::{invert_permutation, is_permutation, Carrier, LinearCycleSet, Table};
use crate::{Error, Result};

/// `(φ, θ) ∈ Aut(X) × Aut(A)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AutPair {
    pub phi: Vec<usize>,
    pub theta: GroupHom,
    theta_perm: Vec<usize>,
}

impl AutPair {
    pub fn new(phi: Vec<usize>, theta: GroupHom) -> Result<Self> {
        if !is_permutation(&phi) || !theta.is_bijective() || theta.domain() != theta.codomain() {
            return Err(Error::InvalidInput("automorphism pair is not invertible".into()));
        }
        let theta_perm = theta.to_permutation();
        Ok(AutPair { phi, theta, theta_perm })
    }

    pub fn identity(n: usize, a: &FinAbGroup) -> Self {
        AutPair::new((0..n).collect(), GroupHom::identity(a)).expect("identity is invertible")
    }

    #[inline]
    pub fn theta_at(&self, v: usize) -> usize {
        self.theta_perm[v]
    }

    pub fn theta_permutation(&self) -> &[usize] {
        &self.theta_perm
    }

    /// `(φ₁φ₂, θ₁θ₂)`
    pub fn compose(&self, other: &AutPair) -> AutPair {
        let phi = other.phi.iter().map(|&x| self.phi[x]).collect();
        let theta = self.theta.compose(&other.theta).expect("same coefficient group");
        AutPair::new(phi, theta).expect("product of automorphisms")
    }

    pub fn inverse(&self) -> AutPair {
        let a = self.theta.domain();
        let inv = invert_permutation(&self.theta_perm);
        let images: Vec<Element> = (0..a.rank())
            .map(|j| {
                let mut unit = a.zero();
                unit.0[j] = 1;
                a.element(inv[a.index(&unit.0)])
            })
            .collect();
        let theta = GroupHom::from_images(a.clone(), a.clone(), &images).expect("inverse automorphism");
        AutPair::new(invert_permutation(&self.phi), theta).expect("inverse is invertible")
    }

    pub fn is_identity(&self) -> bool {
        self.phi.iter().enumerate().all(|(i, &v)| i == v) && self.theta_perm.iter().enumerate().all(|(i, &v)| i == v)
    }

    fn key(&self) -> (Vec<usize>, Vec<usize>) {
        (self.phi.clone(), self.theta_perm.clone())
    }
}

/// Automorphisms of `(X, +)` as permutations.
pub fn additive_automorphisms(carrier: &Carrier, bound: usize) -> Result<Vec<Vec<usize>>> {
    match carrier.group() {
        Some(g) => Ok(enumerate_automorphisms(g, bound)?.iter().map(|h| h.to_permutation()).collect()),
        None => oracle::table_automorphisms(carrier.sum_table(), &Table::from_fn(carrier.size(), |_, y| y), bound),
    }
}

/// `Aut(X)`: additive automorphisms that also preserve the dot table.
pub fn enumerate_aut_lcs(x: &LinearCycleSet, bound: usize) -> Result<Vec<Vec<usize>>> {
    let n = x.size();
    let mut out: Vec<Vec<usize>> = additive_automorphisms(x.carrier(), bound)?
        .into_iter()
        .filter(|p| (0..n).all(|u| (0..n).all(|v| p[x.dot(u, v)] == x.dot(p[u], p[v]))))
        .collect();
    out.sort();
    if !crate::abelian::is_permutation_group(&out) {
        return Err(Error::Internal("LCS automorphisms are not closed under composition".into()));
    }
    Ok(out)
}

/// Everything the Wells computations share for one `(X, A)`.
#[derive(Debug, Clone)]
pub struct WellsInstance {
    pub x: LinearCycleSet,
    pub a: FinAbGroup,
    pub z2: CohomologyGroup,
    pub b2: CohomologyGroup,
    pub h2: CohomologyGroup,
    pub z1: CohomologyGroup,
    pub pairs: Vec<AutPair>,
    index: BTreeMap<(Vec<usize>, Vec<usize>), usize>,
}

/// Default cap on `|X|·|A|` for Wells certificates.
pub const WELLS_BOUND: usize = 16;

impl WellsInstance {
    pub fn new(x: &LinearCycleSet, a: &FinAbGroup, bound: usize) -> Result<Self> {
        let size = x.size() * a.order();
        if size > bound {
            return Err(Error::SizeBound { size, bound });
        }
        let (z2, b2, h2) = compute_cohomology(x, a, bound.max(size))?;
        let z1 = compute_z1(x, a)?;
        let aut_x = enumerate_aut_lcs(x, AUT_ORDER_BOUND.max(x.size()))?;
        let aut_a = enumerate_automorphisms(a, AUT_ORDER_BOUND.max(a.order()))?;
        let mut pairs = Vec::with_capacity(aut_x.len() * aut_a.len());
        for phi in &aut_x {
            for theta in &aut_a {
                pairs.push(AutPair::new(phi.clone(), theta.clone())?);
            }
        }
        let index = pairs.iter().enumerate().map(|(i, p)| (p.key(), i)).collect();
        Ok(WellsInstance { x: x.clone(), a: a.clone(), z2, b2, h2, z1, pairs, index })
    }

    pub fn pair_index(&self, p: &AutPair) -> Option<usize> {
        self.index.get(&p.key()).copied()
    }

    /// `^{(φ,θ)}c(x, y) = θ(c(φ⁻¹x, φ⁻¹y))` for both components.
    pub fn act_on_cochain(&self, p: &AutPair, c: &Cochain2) -> Cochain2 {
        transport(p, c)
    }

    /// Class of the transported representative.
    pub fn act_on_class(&self, p: &AutPair, coords: &[i64]) -> Result<Vec<i64>> {
        let rep = self.h2.lift(coords)?;
        self.h2.reduce(&transport(p, &rep))
    }

    /// `Θ(p) = base − ^p base`.
    pub fn theta(&self, base: &[i64], p: &AutPair) -> Result<Vec<i64>> {
        let moved = self.act_on_class(p, base)?;
        Ok(self.class_sub(base, &moved))
    }

    pub fn class_add(&self, u: &[i64], v: &[i64]) -> Vec<i64> {
        let s = self.h2.structure();
        s.add(&Element(u.to_vec()), &Element(v.to_vec())).0
    }

    pub fn class_sub(&self, u: &[i64], v: &[i64]) -> Vec<i64> {
        let s = self.h2.structure();
        s.add(&Element(u.to_vec()), &s.neg(&Element(v.to_vec()))).0
    }

    pub fn is_zero_class(&self, u: &[i64]) -> bool {
        u.iter().all(|&t| t == 0)
    }
}

pub(crate) fn transport(p: &AutPair, c: &Cochain2) -> Cochain2 {
    let inv = invert_permutation(&p.phi);
    Cochain2::from_fn(
        c.size(),
        c.coefficients(),
        |x, y| p.theta_at(c.f(inv[x], inv[y])),
        |x, y| p.theta_at(c.g(inv[x], inv[y])),
    )
    .expect("automorphisms keep values in range")
}
