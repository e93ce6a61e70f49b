use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::snf::{smith_normal_form, IntMatrix};
use crate::{Error, Result};

/// Finite abelian group `Z/d₁ × … × Z/d_k` with `d₁ | d₂ | … | d_k`, all `dᵢ ≥ 2`.
///
/// Elements are indexed in mixed radix with the first coordinate most
/// significant, so index 0 is the identity and tables stay bit-stable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinAbGroup {
    factors: Vec<i64>,
    order: usize,
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinAbGroup{:?}", self.factors)
    }
}

/// Coordinates of a group element, each reduced modulo its factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub Vec<i64>);

impl Element {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl FinAbGroup {
    /// Builds the group `⊕ Z/fᵢ` and normalises it into invariant factors.
    pub fn new(factors: &[i64]) -> Result<Self> {
        if let Some(&bad) = factors.iter().find(|&&f| f < 1) {
            return Err(Error::InvalidInput(alloc::format!("group factor {bad} must be positive")));
        }
        let kept: Vec<i64> = factors.iter().copied().filter(|&f| f > 1).collect();
        let is_chain = kept.windows(2).all(|w| w[1] % w[0] == 0);
        let chain = if is_chain {
            kept
        } else {
            let n = kept.len();
            let mut m = IntMatrix::zeros(n, n);
            for (i, &f) in kept.iter().enumerate() {
                m.set(i, i, f);
            }
            smith_normal_form(&m)?.diagonal().into_iter().filter(|&d| d > 1).collect()
        };
        Self::from_chain(chain)
    }

    pub(crate) fn from_chain(factors: Vec<i64>) -> Result<Self> {
        if factors.iter().any(|&f| f < 2) || factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::Internal(alloc::format!("{factors:?} is not an invariant factor chain")));
        }
        let mut order: usize = 1;
        for &f in &factors {
            order = order.checked_mul(f as usize).ok_or(Error::Overflow)?;
        }
        Ok(FinAbGroup { factors, order })
    }

    pub fn trivial() -> Self {
        FinAbGroup { factors: Vec::new(), order: 1 }
    }

    pub fn cyclic(n: i64) -> Result<Self> {
        Self::new(&[n])
    }

    pub fn invariant_factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> i64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn zero(&self) -> Element {
        Element(vec![0; self.rank()])
    }

    pub fn reduce(&self, coords: &[i64]) -> Element {
        Element(coords.iter().zip(&self.factors).map(|(&c, &d)| c.rem_euclid(d)).collect())
    }

    pub fn index(&self, coords: &[i64]) -> usize {
        coords
            .iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&c, &d)| acc * d as usize + c.rem_euclid(d) as usize)
    }

    pub fn coords(&self, mut index: usize) -> Vec<i64> {
        let mut out = vec![0; self.rank()];
        for (slot, &d) in out.iter_mut().zip(&self.factors).rev() {
            *slot = (index % d as usize) as i64;
            index /= d as usize;
        }
        out
    }

    pub fn element(&self, index: usize) -> Element {
        Element(self.coords(index))
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).map(|i| self.element(i))
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element(a.0.iter().zip(&b.0).zip(&self.factors).map(|((&x, &y), &d)| (x + y).rem_euclid(d)).collect())
    }

    pub fn neg(&self, a: &Element) -> Element {
        Element(a.0.iter().zip(&self.factors).map(|(&x, &d)| (-x).rem_euclid(d)).collect())
    }

    pub fn scale(&self, a: &Element, k: i64) -> Element {
        Element(
            a.0.iter()
                .zip(&self.factors)
                .map(|(&x, &d)| ((x as i128 * k as i128).rem_euclid(d as i128)) as i64)
                .collect(),
        )
    }

    pub fn add_index(&self, a: usize, b: usize) -> usize {
        self.digitwise(a, b, |x, y, d| (x + y) % d)
    }

    pub fn neg_index(&self, a: usize) -> usize {
        self.digitwise(a, 0, |x, _, d| (d - x) % d)
    }

    /// Applies `op` to matching mixed-radix digits, least significant first.
    fn digitwise(&self, mut a: usize, mut b: usize, op: impl Fn(usize, usize, usize) -> usize) -> usize {
        let (mut out, mut place) = (0, 1);
        for &d in self.factors.iter().rev() {
            let d = d as usize;
            out += op(a % d, b % d, d) * place;
            place *= d;
            a /= d;
            b /= d;
        }
        out
    }

    /// Additive order of an element.
    pub fn element_order(&self, a: &Element) -> i64 {
        a.0.iter()
            .zip(&self.factors)
            .map(|(&x, &d)| d / super::snf::gcd(x, d))
            .fold(1, super::snf::lcm)
    }

    /// Row-major `n × n` addition table over element indices.
    pub fn sum_table(&self) -> Vec<usize> {
        let n = self.order;
        let coords: Vec<Vec<i64>> = (0..n).map(|i| self.coords(i)).collect();
        let mut table = Vec::with_capacity(n * n);
        for a in &coords {
            for b in &coords {
                table.push(self.index(&a.iter().zip(b).map(|(p, q)| p + q).collect::<Vec<_>>()));
            }
        }
        table
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_and_trivial() {
        let g = FinAbGroup::new(&[2, 4]).unwrap();
        assert_eq!(g.invariant_factors(), &[2, 4]);
        assert_eq!(g.order(), 8);
        let t = FinAbGroup::new(&[]).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(FinAbGroup::new(&[1, 1]).unwrap(), t);
    }

    #[test]
    fn coprime_factors_merge() {
        let g = FinAbGroup::new(&[2, 3]).unwrap();
        assert_eq!(g.invariant_factors(), &[6]);
        assert_eq!(FinAbGroup::new(&[4, 2, 6]).unwrap().invariant_factors(), &[2, 2, 12]);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(FinAbGroup::new(&[0]).is_err());
        assert!(FinAbGroup::new(&[2, -3]).is_err());
    }

    #[test]
    fn z2_times_z3_is_cyclic_by_exhaustion() {
        // an element of order 6 exists in Z2 x Z3, so it is isomorphic to Z6
        let orders: Vec<i64> = (0..2)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .map(|(a, b)| (1..=6).find(|k| (a * k) % 2 == 0 && (b * k) % 3 == 0).unwrap())
            .collect();
        assert!(orders.contains(&6));
    }

    #[test]
    fn mixed_radix_round_trip() {
        let g = FinAbGroup::new(&[2, 6]).unwrap();
        for i in 0..g.order() {
            assert_eq!(g.index(&g.coords(i)), i);
        }
        assert_eq!(g.coords(0), vec![0, 0]);
        assert_eq!(g.coords(7), vec![1, 1]);
    }
}
