use alloc::vec;
use alloc::vec::Vec;

use super::cochain::Cochain2;
use crate::abelian::{FinAbGroup, Quotient, SubgroupPresentation, ValuedSystem};
use crate::structures::{Carrier, LinearCycleSet};
use crate::{Error, Result};

/// Default cap on `|X|·|A|` for cohomology computations.
pub const COHOMOLOGY_BOUND: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CohomologyKind {
    LcsH2,
    GroupH2Sym,
    Z1,
    Z2,
    B2,
}

impl CohomologyKind {
    pub fn name(self) -> &'static str {
        match self {
            CohomologyKind::LcsH2 => "lcs-H2",
            CohomologyKind::GroupH2Sym => "group-H2sym",
            CohomologyKind::Z1 => "Z1",
            CohomologyKind::Z2 => "Z2",
            CohomologyKind::B2 => "B2",
        }
    }
}

/// A subquotient of `A^m` with canonical coordinates.
///
/// For `Z1` the ambient is `A^X` (values `λ(x)`); for `GroupH2Sym` it is
/// `A^(X×X)` (values `g(x,y)`); otherwise it is the flat cochain layout.
#[derive(Debug, Clone)]
pub struct CohomologyGroup {
    kind: CohomologyKind,
    n: usize,
    a: FinAbGroup,
    quotient: Quotient,
}

/// A cohomology class: canonical coordinates and the canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohClass {
    pub coords: Vec<i64>,
    pub representative: Cochain2,
}

impl CohomologyGroup {
    pub(crate) fn new(
        kind: CohomologyKind,
        n: usize,
        a: &FinAbGroup,
        moduli: &[i64],
        top: &[Vec<i64>],
        bottom: &[Vec<i64>],
    ) -> Result<Self> {
        let quotient = Quotient::new(moduli, top, bottom).map_err(|e| match e {
            Error::NotInSpan => Error::Internal(alloc::format!("{}: subgroup not contained in the group", kind.name())),
            other => other,
        })?;
        Ok(CohomologyGroup { kind, n, a: a.clone(), quotient })
    }

    pub fn kind(&self) -> CohomologyKind {
        self.kind
    }

    pub fn structure(&self) -> &FinAbGroup {
        self.quotient.structure()
    }

    pub fn invariant_factors(&self) -> &[i64] {
        self.quotient.structure().invariant_factors()
    }

    pub fn order(&self) -> usize {
        self.quotient.order()
    }

    pub fn coefficients(&self) -> &FinAbGroup {
        &self.a
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Representatives of the standard generators, in the ambient flat layout.
    pub fn generator_vectors(&self) -> &[Vec<i64>] {
        self.quotient.generators()
    }

    pub fn contains_flat(&self, v: &[i64]) -> bool {
        self.quotient.in_span(v)
    }

    pub fn reduce_flat(&self, v: &[i64]) -> Result<Vec<i64>> {
        self.quotient.reduce(v)
    }

    pub fn lift_flat(&self, coords: &[i64]) -> Vec<i64> {
        self.quotient.lift(coords)
    }

    /// Canonical coordinates of a cochain; errors if it is not a member.
    pub fn reduce(&self, c: &Cochain2) -> Result<Vec<i64>> {
        c.check_shape(self.n, &self.a)?;
        let flat = match self.kind {
            CohomologyKind::GroupH2Sym => c.g_flat(),
            CohomologyKind::Z1 => return Err(Error::InvalidInput("Z1 elements are maps, not cochains".into())),
            _ => c.to_flat(),
        };
        self.quotient.reduce(&flat)
    }

    /// Canonical representative with the given coordinates.
    pub fn lift(&self, coords: &[i64]) -> Result<Cochain2> {
        let flat = self.lift_flat(coords);
        match self.kind {
            CohomologyKind::Z1 => Err(Error::InvalidInput("Z1 elements are maps, not cochains".into())),
            CohomologyKind::GroupH2Sym => {
                let zeros = vec![0; flat.len()];
                Cochain2::from_flat(self.n, &self.a, &[zeros, flat].concat())
            }
            _ => Cochain2::from_flat(self.n, &self.a, &flat),
        }
    }

    pub fn class(&self, c: &Cochain2) -> Result<CohClass> {
        let coords = self.reduce(c)?;
        let representative = self.lift(&coords)?;
        Ok(CohClass { coords, representative })
    }

    /// Every coordinate vector of the structure, in mixed-radix order.
    pub fn all_coords(&self) -> Vec<Vec<i64>> {
        self.structure().elements().map(|e| e.0).collect()
    }

    /// For `Z1`: the map `λ` with the given coordinates, as `A`-indices.
    pub fn lift_map(&self, coords: &[i64]) -> Vec<usize> {
        flat_to_indices(&self.a, &self.lift_flat(coords), self.n)
    }
}

pub(crate) fn flat_to_indices(a: &FinAbGroup, flat: &[i64], count: usize) -> Vec<usize> {
    let k = a.rank();
    if k == 0 {
        // rank 0: every value is the identity
        return vec![0; count];
    }
    flat.chunks(k).map(|c| a.index(c)).collect()
}

pub(crate) fn indices_to_flat(a: &FinAbGroup, values: &[usize]) -> Vec<i64> {
    values.iter().flat_map(|&v| a.coords(v)).collect()
}

fn check_bound(n: usize, a: &FinAbGroup, bound: usize) -> Result<()> {
    let size = n.checked_mul(a.order()).ok_or(Error::Overflow)?;
    if size > bound {
        return Err(Error::SizeBound { size, bound });
    }
    Ok(())
}

/// Equations cutting out `Z²_N` in the flat cochain layout.
pub(crate) fn cocycle_system(x: &LinearCycleSet) -> ValuedSystem {
    let n = x.size();
    let f = |p: usize, q: usize| p * n + q;
    let g = |p: usize, q: usize| n * n + p * n + q;
    let mut sys = ValuedSystem::new(2 * n * n);
    for p in 0..n {
        for q in p + 1..n {
            sys.push(&[(g(p, q), 1), (g(q, p), -1)]);
        }
    }
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                sys.push(&[(g(p, q), 1), (g(x.add(p, q), r), 1), (g(q, r), -1), (g(p, x.add(q, r)), -1)]);
                sys.push(&[(f(x.add(p, q), r), 1), (f(x.dot(p, q), x.dot(p, r)), -1), (f(p, r), -1)]);
                sys.push(&[
                    (f(p, x.add(q, r)), 1),
                    (f(p, q), -1),
                    (f(p, r), -1),
                    (g(x.dot(p, q), x.dot(p, r)), -1),
                    (g(q, r), 1),
                ]);
            }
        }
    }
    let z = x.zero();
    sys.push(&[(g(z, z), 1)]);
    sys
}

/// Coboundaries of the unit maps `λ = a_j·δ_x`, `x ≠ 0`.
fn coboundary_generators(x: &LinearCycleSet, a: &FinAbGroup) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for p in (0..x.size()).filter(|&p| p != x.zero()) {
        for j in 0..a.rank() {
            let mut unit = a.zero();
            unit.0[j] = 1;
            let mut lambda = vec![0usize; x.size()];
            lambda[p] = a.index(&unit.0);
            out.push(super::cochain::coboundary(x, a, &lambda)?.to_flat());
        }
    }
    Ok(out)
}

/// `(Z²_N, B²_N, H²_N)` of `X` with coefficients in `A`.
pub fn compute_cohomology(
    x: &LinearCycleSet,
    a: &FinAbGroup,
    bound: usize,
) -> Result<(CohomologyGroup, CohomologyGroup, CohomologyGroup)> {
    check_bound(x.size(), a, bound)?;
    let n = x.size();
    let moduli = ValuedSystem::layout(a, 2 * n * n);
    let z2 = cocycle_system(x).kernel(a);
    let b2 = coboundary_generators(x, a)?;
    let b2_gens = SubgroupPresentation::new(moduli.clone(), b2)?.generators().to_vec();
    let z = CohomologyGroup::new(CohomologyKind::Z2, n, a, &moduli, z2.generators(), &[])?;
    let b = CohomologyGroup::new(CohomologyKind::B2, n, a, &moduli, &b2_gens, &[])?;
    if let Some(bad) = b2_gens.iter().find(|v| !z.contains_flat(v)) {
        return Err(Error::Internal(alloc::format!("coboundary {bad:?} is not a cocycle")));
    }
    let h = CohomologyGroup::new(CohomologyKind::LcsH2, n, a, &moduli, z2.generators(), &b2_gens)?;
    if h.order() * b.order() != z.order() {
        return Err(Error::Internal("|H²| · |B²| differs from |Z²|".into()));
    }
    Ok((z, b, h))
}

/// `Z¹_N(X; A)`: additive `λ` with `λ(x·y) = λ(y)`.
pub fn compute_z1(x: &LinearCycleSet, a: &FinAbGroup) -> Result<CohomologyGroup> {
    let n = x.size();
    let mut sys = ValuedSystem::new(n);
    for p in 0..n {
        for q in 0..n {
            sys.push(&[(x.add(p, q), 1), (p, -1), (q, -1)]);
            sys.push(&[(x.dot(p, q), 1), (q, -1)]);
        }
    }
    let kernel = sys.kernel(a);
    CohomologyGroup::new(CohomologyKind::Z1, n, a, &ValuedSystem::layout(a, n), kernel.generators(), &[])
}

/// `Hom((X,+), A)` in the same layout as [`compute_z1`].
pub fn compute_hom(carrier: &Carrier, a: &FinAbGroup) -> Result<CohomologyGroup> {
    let n = carrier.size();
    let mut sys = ValuedSystem::new(n);
    for p in 0..n {
        for q in 0..n {
            sys.push(&[(carrier.add(p, q), 1), (p, -1), (q, -1)]);
        }
    }
    let kernel = sys.kernel(a);
    CohomologyGroup::new(CohomologyKind::Z1, n, a, &ValuedSystem::layout(a, n), kernel.generators(), &[])
}

/// Symmetric normalised group 2-cocycles of `G` modulo coboundaries.
pub fn compute_h2sym(g: &FinAbGroup, a: &FinAbGroup) -> Result<CohomologyGroup> {
    compute_h2sym_carrier(&Carrier::from_group(g), a)
}

pub fn compute_h2sym_carrier(carrier: &Carrier, a: &FinAbGroup) -> Result<CohomologyGroup> {
    let n = carrier.size();
    let at = |p: usize, q: usize| p * n + q;
    let mut sys = ValuedSystem::new(n * n);
    for p in 0..n {
        for q in p + 1..n {
            sys.push(&[(at(p, q), 1), (at(q, p), -1)]);
        }
    }
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                sys.push(&[(at(p, q), 1), (at(carrier.add(p, q), r), 1), (at(q, r), -1), (at(p, carrier.add(q, r)), -1)]);
            }
        }
    }
    let z = carrier.zero();
    sys.push(&[(at(z, z), 1)]);
    let moduli = ValuedSystem::layout(a, n * n);
    let cocycles = sys.kernel(a);
    let mut boundaries = Vec::new();
    for p in (0..n).filter(|&p| p != z) {
        for j in 0..a.rank() {
            let mut unit = a.zero();
            unit.0[j] = 1;
            let v = a.index(&unit.0);
            let mut lambda = vec![0usize; n];
            lambda[p] = v;
            let sub = |s, t| a.add_index(s, a.neg_index(t));
            let g: Vec<usize> = (0..n * n)
                .map(|i| sub(sub(lambda[carrier.add(i / n, i % n)], lambda[i / n]), lambda[i % n]))
                .collect();
            boundaries.push(indices_to_flat(a, &g));
        }
    }
    CohomologyGroup::new(CohomologyKind::GroupH2Sym, n, a, &moduli, cocycles.generators(), &boundaries)
}

/// `λ` with `λ(0) = 0` whose coboundary is `c`, if one exists.
pub fn coboundary_witness(x: &LinearCycleSet, c: &Cochain2) -> Result<Option<Vec<usize>>> {
    c.check_shape(x.size(), c.coefficients())?;
    let n = x.size();
    let a = c.coefficients();
    let mut sys = ValuedSystem::new(n);
    let mut rhs: Vec<usize> = Vec::new();
    for p in 0..n {
        for q in 0..n {
            sys.push(&[(x.dot(p, q), 1), (q, -1)]);
            rhs.push(c.f(p, q));
            sys.push(&[(x.add(p, q), 1), (p, -1), (q, -1)]);
            rhs.push(c.g(p, q));
        }
    }
    sys.push(&[(x.zero(), 1)]);
    rhs.push(0);
    let Some(sol) = sys.solve(a, &indices_to_flat(a, &rhs))? else { return Ok(None) };
    let lambda = flat_to_indices(a, &sol, n);
    if &super::cochain::coboundary(x, a, &lambda)? != c {
        return Err(Error::Internal("coboundary witness does not reproduce the cochain".into()));
    }
    Ok(Some(lambda))
}
