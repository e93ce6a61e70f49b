use alloc::vec::Vec;

use super::table::{is_permutation, Table};
use crate::verdict::{Failure, Law, Verdict};

/// A verified cycle set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleSet {
    dot: Table,
}

impl CycleSet {
    pub fn new(dot: Table) -> Result<Self, Failure> {
        verify_cycle_set(&dot)?;
        Ok(CycleSet { dot })
    }

    pub fn size(&self) -> usize {
        self.dot.size()
    }

    pub fn dot(&self, x: usize, y: usize) -> usize {
        self.dot.get(x, y)
    }

    pub fn table(&self) -> &Table {
        &self.dot
    }

    /// `a ↦ a·a`
    pub fn squaring(&self) -> Vec<usize> {
        (0..self.size()).map(|a| self.dot(a, a)).collect()
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.size()).all(|x| (0..self.size()).all(|y| self.dot(x, y) == y))
    }
}

/// Bijectivity of every row, then `(x·y)·(x·z) = (y·x)·(y·z)`.
pub fn verify_cycle_set(dot: &Table) -> Verdict {
    if let Some(x) = dot.first_non_bijective_row() {
        return Err(Failure::new(Law::Bijectivity, &[x]));
    }
    cycle_axiom(dot).map_err(|w| Failure::new(Law::CycleSetAxiom, &w))
}

pub(crate) fn cycle_axiom(dot: &Table) -> Result<(), [usize; 3]> {
    let n = dot.size();
    for x in 0..n {
        for y in 0..n {
            let (xy, yx) = (dot.get(x, y), dot.get(y, x));
            for z in 0..n {
                if dot.get(xy, dot.get(x, z)) != dot.get(yx, dot.get(y, z)) {
                    return Err([x, y, z]);
                }
            }
        }
    }
    Ok(())
}

/// The squaring map must be a bijection; the witness is the first colliding pair.
pub fn verify_nondegenerate(x: &CycleSet) -> Verdict {
    let sq = x.squaring();
    if is_permutation(&sq) {
        return Ok(());
    }
    for a in 0..sq.len() {
        for b in a + 1..sq.len() {
            if sq[a] == sq[b] {
                return Err(Failure::new(Law::Nondegeneracy, &[a, b]));
            }
        }
    }
    unreachable!("a non-injective map on a finite set has a collision")
}

/// Every cycle set structure on `{0, …, n-1}` by brute force over row permutations.
pub fn enumerate_cycle_sets(n: usize) -> Vec<CycleSet> {
    let perms = permutations(n);
    let mut out = Vec::new();
    let mut choice = alloc::vec![0usize; n];
    loop {
        let data: Vec<usize> = choice.iter().flat_map(|&c| perms[c].iter().copied()).collect();
        let table = Table::new(n, data).expect("permutation rows are in range");
        if let Ok(c) = CycleSet::new(table) {
            out.push(c);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < perms.len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { return out };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}
