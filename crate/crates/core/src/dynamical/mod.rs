//! Bi-groupoid products on `X × S` and dynamical extensions.

use alloc::vec;
use alloc::vec::Vec;

use crate::cohomology::Cochain2;
use crate::structures::{verify_cycle_set, verify_linear_cycle_set, Carrier, CycleSet, LinearCycleSet, Table};
use crate::verdict::{Failure, Law, Verdict};
use crate::{Error, Result};

/// Default cap on `|X|·|S|`.
pub const DYNAMICAL_BOUND: usize = 12;

/// A family of binary maps indexed by pairs: `map[i][j](u, v)`.
///
/// For `α : X × X → Map(S × S, S)` the outer size is `|X|` and the inner size `|S|`;
/// for `β : S × S → Map(X × X, X)` the roles swap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamicalMap {
    outer: usize,
    inner: usize,
    data: Vec<usize>,
}

impl DynamicalMap {
    pub fn new(outer: usize, inner: usize, data: Vec<usize>) -> Result<Self> {
        let expected = outer * outer * inner * inner;
        if data.len() != expected {
            return Err(Error::DimensionMismatch { expected, found: data.len() });
        }
        if let Some(&v) = data.iter().find(|&&v| v >= inner) {
            return Err(Error::InvalidInput(alloc::format!("entry {v} out of range for a fibre of size {inner}")));
        }
        Ok(DynamicalMap { outer, inner, data })
    }

    pub fn from_fn(outer: usize, inner: usize, f: impl Fn(usize, usize, usize, usize) -> usize) -> Result<Self> {
        let mut data = Vec::with_capacity(outer * outer * inner * inner);
        for i in 0..outer {
            for j in 0..outer {
                for u in 0..inner {
                    for v in 0..inner {
                        data.push(f(i, j, u, v));
                    }
                }
            }
        }
        DynamicalMap::new(outer, inner, data)
    }

    /// Nested layout `map[i][j][u][v]`.
    pub fn from_nested(nested: &[Vec<Vec<Vec<usize>>>]) -> Result<Self> {
        let outer = nested.len();
        let inner = nested.first().and_then(|r| r.first()).map_or(0, Vec::len);
        let mut data = Vec::new();
        for row in nested {
            if row.len() != outer {
                return Err(Error::DimensionMismatch { expected: outer, found: row.len() });
            }
            for table in row {
                if table.len() != inner {
                    return Err(Error::DimensionMismatch { expected: inner, found: table.len() });
                }
                for line in table {
                    if line.len() != inner {
                        return Err(Error::DimensionMismatch { expected: inner, found: line.len() });
                    }
                    data.extend_from_slice(line);
                }
            }
        }
        DynamicalMap::new(outer, inner, data)
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Vec<usize>>>> {
        (0..self.outer)
            .map(|i| {
                (0..self.outer)
                    .map(|j| (0..self.inner).map(|u| (0..self.inner).map(|v| self.get(i, j, u, v)).collect()).collect())
                    .collect()
            })
            .collect()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, u: usize, v: usize) -> usize {
        self.data[((i * self.outer + j) * self.inner + u) * self.inner + v]
    }

    pub fn outer(&self) -> usize {
        self.outer
    }

    pub fn inner(&self) -> usize {
        self.inner
    }
}

/// `α` drives the dot, `α'` the sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamicalPair {
    pub alpha: DynamicalMap,
    pub alpha_prime: DynamicalMap,
}

impl DynamicalPair {
    pub fn new(alpha: DynamicalMap, alpha_prime: DynamicalMap) -> Result<Self> {
        if (alpha.outer, alpha.inner) != (alpha_prime.outer, alpha_prime.inner) {
            return Err(Error::DimensionMismatch { expected: alpha.data.len(), found: alpha_prime.data.len() });
        }
        Ok(DynamicalPair { alpha, alpha_prime })
    }
}

/// Verdict from the stated conditions next to the verdict on the product table itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamicalReport {
    pub conditions: Verdict,
    pub product: Verdict,
}

impl DynamicalReport {
    pub fn agree(&self) -> bool {
        self.conditions.is_ok() == self.product.is_ok()
    }

    /// Conditions first; a product failure behind passing conditions is `product-not-lcs`.
    pub fn verdict(&self) -> Verdict {
        self.conditions.clone()?;
        self.product.clone().map_err(|f| Failure { law: Law::ProductNotLcs, witness: f.witness })
    }
}

fn check_bound(n: usize, m: usize) -> Result<()> {
    let size = n * m;
    if size > DYNAMICAL_BOUND {
        return Err(Error::SizeBound { size, bound: DYNAMICAL_BOUND });
    }
    if n == 0 || m == 0 {
        return Err(Error::InvalidInput("empty factor".into()));
    }
    Ok(())
}

fn product_table(n: usize, m: usize, op: impl Fn(usize, usize, usize, usize) -> (usize, usize)) -> Table {
    Table::from_fn(n * m, |u, v| {
        let (x, s) = op(u / m, u % m, v / m, v % m);
        x * m + s
    })
}

/// Condition (1): `(y, t) ↦ op((x, s), (y, t))` is a bijection for every `(x, s)`.
fn bijectivity(n: usize, m: usize, op: &impl Fn(usize, usize, usize, usize) -> (usize, usize)) -> Verdict {
    for x in 0..n {
        for s in 0..m {
            let mut seen = vec![false; n * m];
            for y in 0..n {
                for t in 0..m {
                    let (a, b) = op(x, s, y, t);
                    if core::mem::replace(&mut seen[a * m + b], true) {
                        return Err(Failure::new(Law::Dynamical(1), &[x, s]));
                    }
                }
            }
        }
    }
    Ok(())
}

fn for_tuples(n: usize, m: usize, mut check: impl FnMut(usize, usize, usize, usize, usize, usize) -> bool) -> Option<[usize; 6]> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for s in 0..m {
                    for t in 0..m {
                        for q in 0..m {
                            if !check(x, y, z, s, t, q) {
                                return Some([x, y, z, s, t, q]);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// `(x, s)·(y, t) = (β_{s,t}(x, y), α_{x,y}(s, t))` as a cycle set, decided both ways.
pub fn verify_bigroupoid_product(alpha: &DynamicalMap, beta: &DynamicalMap) -> Result<DynamicalReport> {
    let (n, m) = (alpha.outer, alpha.inner);
    if (beta.outer, beta.inner) != (m, n) {
        return Err(Error::InvalidInput("β must be indexed by the fibre and act on the base".into()));
    }
    check_bound(n, m)?;
    let op = |x, s, y, t| (beta.get(s, t, x, y), alpha.get(x, y, s, t));
    let conditions = bijectivity(n, m, &op).and_then(|()| {
        let hit = for_tuples(n, m, |x, y, z, s, t, q| {
            let (xy, st) = op(x, s, y, t);
            let (xz, sq) = op(x, s, z, q);
            let (yx, ts) = op(y, t, x, s);
            let (yz, tq) = op(y, t, z, q);
            op(xy, st, xz, sq) == op(yx, ts, yz, tq)
        });
        match hit {
            Some(w) => Err(Failure::new(Law::Dynamical(2), &w)),
            None => Ok(()),
        }
    });
    let product = verify_cycle_set(&product_table(n, m, op));
    finish(DynamicalReport { conditions, product }, true)
}

fn finish(report: DynamicalReport, exact: bool) -> Result<DynamicalReport> {
    let impossible = report.conditions.is_err() && report.product.is_ok();
    if impossible || (exact && !report.agree()) {
        return Err(Error::Internal("condition verdict disagrees with the product table".into()));
    }
    Ok(report)
}

/// `(x, s)·(y, t) = (x·y, α_{x,y}(s, t))` over a cycle set.
pub fn verify_dynamical_cs(x: &CycleSet, alpha: &DynamicalMap) -> Result<DynamicalReport> {
    let (n, m) = (alpha.outer, alpha.inner);
    if n != x.size() {
        return Err(Error::DimensionMismatch { expected: x.size(), found: n });
    }
    check_bound(n, m)?;
    let op = |u, s, v, t| (x.dot(u, v), alpha.get(u, v, s, t));
    let d = |u, v| x.dot(u, v);
    let a = |u, v, s, t| alpha.get(u, v, s, t);
    let conditions = bijectivity(n, m, &op).and_then(|()| {
        let hit = for_tuples(n, m, |u, v, w, s, t, q| {
            a(d(u, v), d(u, w), a(u, v, s, t), a(u, w, s, q)) == a(d(v, u), d(v, w), a(v, u, t, s), a(v, w, t, q))
        });
        match hit {
            Some(w) => Err(Failure::new(Law::Dynamical(2), &w)),
            None => Ok(()),
        }
    });
    let product = verify_cycle_set(&product_table(n, m, op));
    finish(DynamicalReport { conditions, product }, true)
}

/// `(x, s)·(y, t) = (x·y, α_{x,y}(s, t))`, `(x, s) + (y, t) = (x + y, α'_{x,y}(s, t))`.
///
/// The stated conditions do not force `+` on `X × S` to be a group, so the product
/// table is checked in full and a gap shows up as `product-not-lcs` in [`DynamicalReport::verdict`].
pub fn verify_dynamical_lcs(x: &LinearCycleSet, pair: &DynamicalPair) -> Result<DynamicalReport> {
    let (n, m) = (pair.alpha.outer, pair.alpha.inner);
    if n != x.size() {
        return Err(Error::DimensionMismatch { expected: x.size(), found: n });
    }
    check_bound(n, m)?;
    let a = |u, v, s, t| pair.alpha.get(u, v, s, t);
    let ap = |u, v, s, t| pair.alpha_prime.get(u, v, s, t);
    let (d, p) = (|u, v| x.dot(u, v), |u, v| x.add(u, v));
    let dot = |u, s, v, t| (d(u, v), a(u, v, s, t));
    let conditions = bijectivity(n, m, &dot)
        .and_then(|()| {
            let hit = for_tuples(n, m, |u, v, w, s, t, q| {
                a(u, p(v, w), s, ap(v, w, t, q)) == ap(d(u, v), d(u, w), a(u, v, s, t), a(u, w, s, q))
            });
            hit.map_or(Ok(()), |w| Err(Failure::new(Law::Dynamical(2), &w)))
        })
        .and_then(|()| {
            let hit = for_tuples(n, m, |u, v, w, s, t, q| {
                a(p(u, v), w, ap(u, v, s, t), q) == a(d(u, v), d(u, w), a(u, v, s, t), a(u, w, s, q))
            });
            hit.map_or(Ok(()), |w| Err(Failure::new(Law::Dynamical(3), &w)))
        });
    let sum = product_table(n, m, |u, s, v, t| (p(u, v), ap(u, v, s, t)));
    let product = verify_linear_cycle_set(&sum, &product_table(n, m, dot));
    finish(DynamicalReport { conditions, product }, false)
}

/// The cycle set on `X × S`, index `x·|S| + s`.
pub fn build_dynamical_cs(x: &CycleSet, alpha: &DynamicalMap) -> Result<CycleSet> {
    verify_dynamical_cs(x, alpha)?.verdict()?;
    let m = alpha.inner;
    Ok(CycleSet::new(product_table(x.size(), m, |u, s, v, t| (x.dot(u, v), alpha.get(u, v, s, t))))?)
}

/// The dynamical extension of `X` by `S`, index `x·|S| + s`.
pub fn build_dynamical_extension(x: &LinearCycleSet, pair: &DynamicalPair) -> Result<LinearCycleSet> {
    verify_dynamical_lcs(x, pair)?.verdict()?;
    let m = pair.alpha.inner;
    let sum = product_table(x.size(), m, |u, s, v, t| (x.add(u, v), pair.alpha_prime.get(u, v, s, t)));
    let dot = product_table(x.size(), m, |u, s, v, t| (x.dot(u, v), pair.alpha.get(u, v, s, t)));
    Ok(LinearCycleSet::new(Carrier::from_table(sum)?, dot)?)
}

/// `α_{x,y}(s, t) = t + f(x, y)` and `α'_{x,y}(s, t) = s + t + g(x, y)`.
pub fn cocycle_to_dynamical(c: &Cochain2) -> DynamicalPair {
    let a = c.coefficients();
    let (n, m) = (c.size(), a.order());
    let alpha = DynamicalMap::from_fn(n, m, |x, y, _, t| a.add_index(t, c.f(x, y))).expect("values in A");
    let alpha_prime =
        DynamicalMap::from_fn(n, m, |x, y, s, t| a.add_index(a.add_index(s, t), c.g(x, y))).expect("values in A");
    DynamicalPair { alpha, alpha_prime }
}
