use alloc::vec::Vec;

use crate::abelian::FinAbGroup;
use crate::structures::LinearCycleSet;
use crate::verdict::{Failure, Law, Verdict};
use crate::{Error, Result};

/// A pair of maps `f, g : X × X → A`, stored as `A`-indices at `x·n + y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cochain2 {
    n: usize,
    a: FinAbGroup,
    f: Vec<usize>,
    g: Vec<usize>,
}

impl Cochain2 {
    pub fn new(n: usize, a: FinAbGroup, f: Vec<usize>, g: Vec<usize>) -> Result<Self> {
        for t in [&f, &g] {
            if t.len() != n * n {
                return Err(Error::DimensionMismatch { expected: n * n, found: t.len() });
            }
            if t.iter().any(|&v| v >= a.order()) {
                return Err(Error::InvalidInput("cochain value outside the coefficient group".into()));
            }
        }
        Ok(Cochain2 { n, a, f, g })
    }

    pub fn zero(n: usize, a: &FinAbGroup) -> Self {
        Cochain2 { n, a: a.clone(), f: alloc::vec![0; n * n], g: alloc::vec![0; n * n] }
    }

    pub fn from_fn(
        n: usize,
        a: &FinAbGroup,
        f: impl Fn(usize, usize) -> usize,
        g: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let idx = |x: usize| (x / n, x % n);
        let ft = (0..n * n).map(|i| f(idx(i).0, idx(i).1)).collect();
        let gt = (0..n * n).map(|i| g(idx(i).0, idx(i).1)).collect();
        Self::new(n, a.clone(), ft, gt)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &FinAbGroup {
        &self.a
    }

    #[inline]
    pub fn f(&self, x: usize, y: usize) -> usize {
        self.f[x * self.n + y]
    }

    #[inline]
    pub fn g(&self, x: usize, y: usize) -> usize {
        self.g[x * self.n + y]
    }

    pub fn f_table(&self) -> &[usize] {
        &self.f
    }

    pub fn g_table(&self) -> &[usize] {
        &self.g
    }

    /// Flat coordinates: unknown `x·n+y` is `f(x,y)`, `n²+x·n+y` is `g(x,y)`,
    /// coordinate `j` of unknown `u` at `u·rank(A)+j`.
    pub fn to_flat(&self) -> Vec<i64> {
        self.f.iter().chain(&self.g).flat_map(|&v| self.a.coords(v)).collect()
    }

    pub fn from_flat(n: usize, a: &FinAbGroup, flat: &[i64]) -> Result<Self> {
        let k = a.rank();
        if flat.len() != 2 * n * n * k {
            return Err(Error::DimensionMismatch { expected: 2 * n * n * k, found: flat.len() });
        }
        let values: Vec<usize> =
            if k == 0 { alloc::vec![0; 2 * n * n] } else { flat.chunks(k).map(|c| a.index(c)).collect() };
        let (f, g) = values.split_at(n * n);
        Ok(Cochain2 { n, a: a.clone(), f: f.to_vec(), g: g.to_vec() })
    }

    pub fn add(&self, other: &Cochain2) -> Cochain2 {
        let f = self.f.iter().zip(&other.f).map(|(&p, &q)| self.a.add_index(p, q)).collect();
        let g = self.g.iter().zip(&other.g).map(|(&p, &q)| self.a.add_index(p, q)).collect();
        Cochain2 { n: self.n, a: self.a.clone(), f, g }
    }

    pub fn neg(&self) -> Cochain2 {
        let f = self.f.iter().map(|&p| self.a.neg_index(p)).collect();
        let g = self.g.iter().map(|&p| self.a.neg_index(p)).collect();
        Cochain2 { n: self.n, a: self.a.clone(), f, g }
    }

    pub fn sub(&self, other: &Cochain2) -> Cochain2 {
        self.add(&other.neg())
    }

    /// `g` as a flat vector of `A`-coordinates.
    pub fn g_flat(&self) -> Vec<i64> {
        self.g.iter().flat_map(|&v| self.a.coords(v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.f.iter().chain(&self.g).all(|&v| v == 0)
    }

    pub(crate) fn check_shape(&self, n: usize, a: &FinAbGroup) -> Result<()> {
        if self.n != n {
            return Err(Error::DimensionMismatch { expected: n, found: self.n });
        }
        if &self.a != a {
            return Err(Error::InvalidInput("cochain has a different coefficient group".into()));
        }
        Ok(())
    }
}

/// The four cocycle conditions in order, then `g(0,0) = 0`.
pub fn verify_cocycle(x: &LinearCycleSet, c: &Cochain2) -> Result<Verdict> {
    c.check_shape(x.size(), c.coefficients())?;
    let n = x.size();
    let a = &c.a;
    let (add, sub) = (|p, q| a.add_index(p, q), |p, q| a.add_index(p, a.neg_index(q)));
    for p in 0..n {
        for q in 0..n {
            if c.g(p, q) != c.g(q, p) {
                return Ok(Err(Failure::new(Law::GSymmetric, &[p, q])));
            }
        }
    }
    let triples = || (0..n).flat_map(move |p| (0..n).flat_map(move |q| (0..n).map(move |r| (p, q, r))));
    for (p, q, r) in triples() {
        let lhs = add(c.g(p, q), c.g(x.add(p, q), r));
        let rhs = add(c.g(q, r), c.g(p, x.add(q, r)));
        if lhs != rhs {
            return Ok(Err(Failure::new(Law::GCocycle, &[p, q, r])));
        }
    }
    for (p, q, r) in triples() {
        let lhs = c.f(x.add(p, q), r);
        let rhs = add(c.f(x.dot(p, q), x.dot(p, r)), c.f(p, r));
        if lhs != rhs {
            return Ok(Err(Failure::new(Law::FCocycle, &[p, q, r])));
        }
    }
    for (p, q, r) in triples() {
        let lhs = sub(sub(c.f(p, x.add(q, r)), c.f(p, q)), c.f(p, r));
        let rhs = sub(c.g(x.dot(p, q), x.dot(p, r)), c.g(q, r));
        if lhs != rhs {
            return Ok(Err(Failure::new(Law::FgCompatibility, &[p, q, r])));
        }
    }
    let z = x.zero();
    if c.g(z, z) != 0 {
        return Ok(Err(Failure::new(Law::Normalisation, &[z, z])));
    }
    Ok(Ok(()))
}

/// `f = λ(x·y) − λ(y)`, `g = λ(x+y) − λ(x) − λ(y)`.
pub fn coboundary(x: &LinearCycleSet, a: &FinAbGroup, lambda: &[usize]) -> Result<Cochain2> {
    if lambda.len() != x.size() {
        return Err(Error::DimensionMismatch { expected: x.size(), found: lambda.len() });
    }
    let sub = |p, q| a.add_index(p, a.neg_index(q));
    Cochain2::from_fn(
        x.size(),
        a,
        |p, q| sub(lambda[x.dot(p, q)], lambda[q]),
        |p, q| sub(sub(lambda[x.add(p, q)], lambda[p]), lambda[q]),
    )
}
