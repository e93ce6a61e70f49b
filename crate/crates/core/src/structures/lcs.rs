use alloc::vec::Vec;

use super::cycle_set::{cycle_axiom, CycleSet};
use super::table::{invert_permutation, is_permutation, verify_abelian_group, Carrier, Table};
use crate::abelian::FinAbGroup;
use crate::verdict::{Failure, Law, Verdict};

/// A verified linear cycle set `(X, +, ·)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearCycleSet {
    carrier: Carrier,
    dot: Table,
}

impl LinearCycleSet {
    pub fn new(carrier: Carrier, dot: Table) -> Result<Self, Failure> {
        verify_linear_cycle_set(carrier.sum_table(), &dot)?;
        Ok(LinearCycleSet { carrier, dot })
    }

    pub fn from_group(g: &FinAbGroup, dot: Table) -> Result<Self, Failure> {
        Self::new(Carrier::from_group(g), dot)
    }

    pub(crate) fn new_unchecked(carrier: Carrier, dot: Table) -> Self {
        LinearCycleSet { carrier, dot }
    }

    pub fn size(&self) -> usize {
        self.dot.size()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn group(&self) -> Option<&FinAbGroup> {
        self.carrier.group()
    }

    pub fn table(&self) -> &Table {
        &self.dot
    }

    #[inline]
    pub fn dot(&self, x: usize, y: usize) -> usize {
        self.dot.get(x, y)
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.carrier.add(x, y)
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.carrier.neg(x)
    }

    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.carrier.sub(x, y)
    }

    pub fn zero(&self) -> usize {
        self.carrier.zero()
    }

    /// `L_x : y ↦ x·y`
    pub fn left_translation(&self, x: usize) -> Vec<usize> {
        self.dot.row(x).to_vec()
    }

    pub fn left_translation_inverse(&self, x: usize) -> Vec<usize> {
        invert_permutation(self.dot.row(x))
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.size()).all(|x| (0..self.size()).all(|y| self.dot(x, y) == y))
    }

    pub fn as_cycle_set(&self) -> CycleSet {
        CycleSet::new(self.dot.clone()).expect("linear cycle sets are cycle sets")
    }

    /// Checks directly that every `L_x` is a bijective additive map.
    pub fn left_translations_are_automorphisms(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| {
            let l = self.dot.row(x);
            is_permutation(l) && (0..n).all(|y| (0..n).all(|z| l[self.add(y, z)] == self.add(l[y], l[z])))
        })
    }
}

/// Group axioms for `+`, bijectivity, `x·(y+z) = x·y + x·z`,
/// `(x+y)·z = (x·y)·(x·z)`, then the cycle set axiom as a redundancy check.
pub fn verify_linear_cycle_set(sum: &Table, dot: &Table) -> Verdict {
    if sum.size() != dot.size() {
        return Err(Failure::new(Law::Range, &[sum.size(), dot.size()]));
    }
    verify_abelian_group(sum)?;
    let n = dot.size();
    if let Some(x) = dot.first_non_bijective_row() {
        return Err(Failure::new(Law::Bijectivity, &[x]));
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if dot.get(x, sum.get(y, z)) != sum.get(dot.get(x, y), dot.get(x, z)) {
                    return Err(Failure::new(Law::DotAdditive, &[x, y, z]));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let (s, xy) = (sum.get(x, y), dot.get(x, y));
            for z in 0..n {
                if dot.get(s, z) != dot.get(xy, dot.get(x, z)) {
                    return Err(Failure::new(Law::LinearCycle, &[x, y, z]));
                }
            }
        }
    }
    cycle_axiom(dot).map_err(|w| Failure::new(Law::RedundancyBreach, &w))
}

/// `x·y = y` on `A`.
pub fn trivial_lcs(a: &FinAbGroup) -> LinearCycleSet {
    let dot = Table::from_fn(a.order(), |_, y| y);
    LinearCycleSet::new_unchecked(Carrier::from_group(a), dot)
}
