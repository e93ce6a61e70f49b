use alloc::vec::Vec;

use super::rack::left_distributive;
use super::table::{is_permutation, Table};
use crate::verdict::{Failure, Law, Verdict};
use crate::{Error, Result};

/// A set with two binary operations `·` and `*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiGroupoid {
    table1: Table,
    table2: Table,
}

impl BiGroupoid {
    pub fn new(table1: Table, table2: Table) -> Result<Self> {
        if table1.size() != table2.size() || table1.size() == 0 {
            return Err(Error::DimensionMismatch { expected: table1.size(), found: table2.size() });
        }
        Ok(BiGroupoid { table1, table2 })
    }

    pub fn size(&self) -> usize {
        self.table1.size()
    }

    pub fn dot(&self, x: usize, y: usize) -> usize {
        self.table1.get(x, y)
    }

    pub fn star(&self, x: usize, y: usize) -> usize {
        self.table2.get(x, y)
    }

    pub fn table1(&self) -> &Table {
        &self.table1
    }

    pub fn table2(&self) -> &Table {
        &self.table2
    }

    /// `S(x, y) = (x·y, y*x)`
    pub fn solution(&self) -> BraidMap {
        let n = self.size();
        let pairs = (0..n * n).map(|i| (self.dot(i / n, i % n), self.star(i % n, i / n))).collect();
        BraidMap { n, pairs }
    }
}

/// A map `r : X×X → X×X` stored as `pairs[x·n + y] = r(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidMap {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl BraidMap {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        if pairs.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: pairs.len() });
        }
        if pairs.iter().any(|&(a, b)| a >= n || b >= n) {
            return Err(Error::InvalidInput("braid map entry out of range".into()));
        }
        Ok(BraidMap { n, pairs })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        self.pairs[x * self.n + y]
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidReport {
    pub braid: Verdict,
    /// Bijectivity of `y ↦ σ_x(y)` and `x ↦ τ_y(x)`; informational.
    pub nondegenerate: Verdict,
}

/// `r₁₂r₂₃r₁₂ = r₂₃r₁₂r₂₃` on every triple, plus non-degeneracy of the components.
pub fn verify_braid(r: &BraidMap) -> BraidReport {
    BraidReport { braid: braid_relation(r), nondegenerate: nondegeneracy(r) }
}

fn braid_relation(r: &BraidMap) -> Verdict {
    let n = r.n;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (a, b) = r.apply(x, y);
                let (b, c) = r.apply(b, z);
                let (a, b) = r.apply(a, b);
                let (q, s) = r.apply(y, z);
                let (p, q) = r.apply(x, q);
                let (q, s) = r.apply(q, s);
                if (a, b, c) != (p, q, s) {
                    return Err(Failure::new(Law::Braid, &[x, y, z]));
                }
            }
        }
    }
    Ok(())
}

fn nondegeneracy(r: &BraidMap) -> Verdict {
    let n = r.n;
    for x in 0..n {
        let sigma: Vec<usize> = (0..n).map(|y| r.apply(x, y).0).collect();
        if !is_permutation(&sigma) {
            return Err(Failure::new(Law::BraidNondegeneracy, &[0, x]));
        }
    }
    for y in 0..n {
        let tau: Vec<usize> = (0..n).map(|x| r.apply(x, y).1).collect();
        if !is_permutation(&tau) {
            return Err(Failure::new(Law::BraidNondegeneracy, &[1, y]));
        }
    }
    Ok(())
}

/// The three equalities equivalent to `S` solving the braid relation.
pub fn verify_bigroupoid_conditions(b: &BiGroupoid) -> Verdict {
    let n = b.size();
    let (d, s) = (|x, y| b.dot(x, y), |x, y| b.star(x, y));
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if d(x, d(y, z)) != d(d(x, y), d(s(y, x), z)) {
                    return Err(Failure::new(Law::BiGroupoidFirst, &[x, y, z]));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if d(s(d(y, z), x), s(z, y)) != s(d(s(y, x), z), d(x, y)) {
                    return Err(Failure::new(Law::BiGroupoidSecond, &[x, y, z]));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if s(s(z, y), s(d(y, z), x)) != s(z, s(y, x)) {
                    return Err(Failure::new(Law::BiGroupoidThird, &[x, y, z]));
                }
            }
        }
    }
    Ok(())
}

/// Both verdicts; they must agree, otherwise this is an internal error.
pub fn bigroupoid_ybe_equivalence(b: &BiGroupoid) -> Result<(Verdict, Verdict)> {
    let braid = braid_relation(&b.solution());
    let conditions = verify_bigroupoid_conditions(b);
    if braid.is_ok() != conditions.is_ok() {
        return Err(Error::Internal(alloc::format!(
            "braid verdict {braid:?} disagrees with the three conditions {conditions:?}"
        )));
    }
    Ok((braid, conditions))
}

/// For `x·y = y`, `S` solves the braid relation iff `*` is left distributive.
pub fn trivial_dot_criterion(b: &BiGroupoid) -> Verdict {
    left_distributive(b.table2())
}
