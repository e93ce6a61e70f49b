use alloc::vec;
use alloc::vec::Vec;

use super::echelon::Echelon;
use super::group::FinAbGroup;
use super::subgroup::SubgroupPresentation;
use crate::{Error, Result};

/// Integer-linear equations in unknowns that take values in a fixed group `A`.
///
/// Each equation `Σ cᵤ·xᵤ = 0` is imposed coordinate by coordinate in `A`.
/// Values are laid out flat: unknown `u`, coordinate `j` at `u·rank(A) + j`.
#[derive(Debug, Clone, Default)]
pub struct ValuedSystem {
    unknowns: usize,
    equations: Vec<Vec<(usize, i64)>>,
}

impl ValuedSystem {
    pub fn new(unknowns: usize) -> Self {
        ValuedSystem { unknowns, equations: Vec::new() }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn equations(&self) -> usize {
        self.equations.len()
    }

    /// Adds an equation; repeated unknowns are summed.
    pub fn push(&mut self, terms: &[(usize, i64)]) {
        let mut merged: Vec<(usize, i64)> = Vec::with_capacity(terms.len());
        for &(u, c) in terms {
            debug_assert!(u < self.unknowns);
            match merged.iter_mut().find(|(v, _)| *v == u) {
                Some(slot) => slot.1 += c,
                None => merged.push((u, c)),
            }
        }
        merged.retain(|&(_, c)| c != 0);
        self.equations.push(merged);
    }

    /// Moduli of the flat layout of `count` values in `a`.
    pub fn layout(a: &FinAbGroup, count: usize) -> Vec<i64> {
        let f = a.invariant_factors();
        (0..count).flat_map(|_| f.iter().copied()).collect()
    }

    fn echelon(&self, a: &FinAbGroup, payload_moduli: Vec<i64>) -> Echelon {
        let k = a.rank();
        let mut incidence: Vec<Vec<(usize, i64)>> = vec![Vec::new(); self.unknowns];
        for (e, eq) in self.equations.iter().enumerate() {
            for &(u, c) in eq {
                incidence[u].push((e, c));
            }
        }
        let mut ech = Echelon::new(Self::layout(a, self.equations.len()), payload_moduli);
        let width = self.unknowns * k;
        for (u, hits) in incidence.iter().enumerate() {
            for j in 0..k {
                let mut image = vec![0i64; self.equations.len() * k];
                for &(e, c) in hits {
                    image[e * k + j] += c;
                }
                let mut payload = vec![0i64; width];
                payload[u * k + j] = 1;
                ech.insert(image, payload);
            }
        }
        ech
    }

    /// Solutions of the homogeneous system, as a subgroup of `A^unknowns`.
    pub fn kernel(&self, a: &FinAbGroup) -> SubgroupPresentation {
        let moduli = Self::layout(a, self.unknowns);
        let ech = self.echelon(a, moduli.clone());
        SubgroupPresentation::new(moduli, ech.kernel().to_vec()).expect("kernel lies in the unknown space")
    }

    /// One solution of `system(x) = rhs`, where `rhs` is flat over equations.
    pub fn solve(&self, a: &FinAbGroup, rhs: &[i64]) -> Result<Option<Vec<i64>>> {
        let expected = self.equations.len() * a.rank();
        if rhs.len() != expected {
            return Err(Error::DimensionMismatch { expected, found: rhs.len() });
        }
        let ech = self.echelon(a, Self::layout(a, self.unknowns));
        Ok(ech.solve(rhs))
    }

    /// Evaluates every equation at the flat value vector `x`.
    pub fn apply(&self, a: &FinAbGroup, x: &[i64]) -> Vec<i64> {
        let k = a.rank();
        let f = a.invariant_factors();
        let mut out = vec![0i64; self.equations.len() * k];
        for (e, eq) in self.equations.iter().enumerate() {
            for &(u, c) in eq {
                for j in 0..k {
                    out[e * k + j] += c * x[u * k + j];
                }
            }
            for j in 0..k {
                out[e * k + j] = out[e * k + j].rem_euclid(f[j]);
            }
        }
        out
    }
}

/// Bilinear maps `G × G → A` as a subgroup of `A^(G×G)`, pair `(x, y)` at unknown `x·|G| + y`.
pub fn bilinear_group(g: &FinAbGroup, a: &FinAbGroup) -> SubgroupPresentation {
    let n = g.order();
    let sum = g.sum_table();
    let at = |x: usize, y: usize| x * n + y;
    let mut sys = ValuedSystem::new(n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                sys.push(&[(at(sum[x * n + y], z), 1), (at(x, z), -1), (at(y, z), -1)]);
                sys.push(&[(at(x, sum[y * n + z]), 1), (at(x, y), -1), (at(x, z), -1)]);
            }
        }
    }
    sys.kernel(a)
}
