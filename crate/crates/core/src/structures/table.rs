use alloc::vec::Vec;

use crate::abelian::FinAbGroup;
use crate::verdict::{Failure, Law};
use crate::{Error, Result};

/// Square operation table over `{0, …, n-1}`; row = left operand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Table {
    n: usize,
    data: Vec<usize>,
}

impl Table {
    pub fn new(n: usize, data: Vec<usize>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: data.len() });
        }
        if let Some(&bad) = data.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidInput(alloc::format!("table entry {bad} out of range for size {n}")));
        }
        Ok(Table { n, data })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: r.len() });
        }
        Self::new(n, rows.concat())
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let data = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).map(|(x, y)| f(x, y)).collect();
        Table::new(n, data).expect("from_fn produces entries in range")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.data[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.data[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| self.row(x).to_vec()).collect()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.data
    }

    /// First row `x` whose left translation `y ↦ x∘y` is not a bijection.
    pub fn first_non_bijective_row(&self) -> Option<usize> {
        (0..self.n).find(|&x| !is_permutation(self.row(x)))
    }
}

pub(crate) fn is_permutation(p: &[usize]) -> bool {
    let mut seen = alloc::vec![false; p.len()];
    p.iter().all(|&v| v < p.len() && !core::mem::replace(&mut seen[v], true))
}

pub(crate) fn invert_permutation(p: &[usize]) -> Vec<usize> {
    let mut inv = alloc::vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

/// A verified abelian group structure on `{0, …, n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Carrier {
    sum: Table,
    zero: usize,
    neg: Vec<usize>,
    group: Option<FinAbGroup>,
}

impl Carrier {
    pub fn from_group(g: &FinAbGroup) -> Self {
        let sum = Table::new(g.order(), g.sum_table()).expect("group table in range");
        let neg = (0..g.order()).map(|x| g.neg_index(x)).collect();
        Carrier { sum, zero: 0, neg, group: Some(g.clone()) }
    }

    pub fn from_table(sum: Table) -> core::result::Result<Self, Failure> {
        let (zero, neg) = verify_abelian_group(&sum)?;
        Ok(Carrier { sum, zero, neg, group: None })
    }

    pub fn size(&self) -> usize {
        self.sum.size()
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.sum.get(x, y)
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg[y])
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn sum_table(&self) -> &Table {
        &self.sum
    }

    /// The invariant-factor description, when the carrier came from one.
    pub fn group(&self) -> Option<&FinAbGroup> {
        self.group.as_ref()
    }
}

/// Checks the abelian group axioms; returns the identity and the negation map.
pub fn verify_abelian_group(sum: &Table) -> core::result::Result<(usize, Vec<usize>), Failure> {
    let n = sum.size();
    if n == 0 {
        return Err(Failure::new(Law::Range, &[]));
    }
    let zero = (0..n)
        .find(|&z| (0..n).all(|x| sum.get(z, x) == x))
        .ok_or_else(|| Failure::new(Law::Identity, &[]))?;
    for x in 0..n {
        for y in 0..n {
            if sum.get(x, y) != sum.get(y, x) {
                return Err(Failure::new(Law::Commutativity, &[x, y]));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if sum.get(sum.get(x, y), z) != sum.get(x, sum.get(y, z)) {
                    return Err(Failure::new(Law::Associativity, &[x, y, z]));
                }
            }
        }
    }
    let mut neg = Vec::with_capacity(n);
    for x in 0..n {
        let y = (0..n).find(|&y| sum.get(x, y) == zero).ok_or_else(|| Failure::new(Law::Inverse, &[x]))?;
        neg.push(y);
    }
    Ok((zero, neg))
}
