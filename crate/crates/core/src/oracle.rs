//! Exhaustive reference computations, kept independent of the linear algebra.
//!
//! Everything here enumerates raw tables and tests the defining identities
//! directly, so it is only usable at desk scale.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::FinAbGroup;
use crate::structures::{permutations, LinearCycleSet, Table};
use crate::{Error, Result};

/// Cap on the number of candidate tables any oracle will visit.
pub const ORACLE_BUDGET: u64 = 1 << 20;

/// Calls `visit` on every vector in `[0, base)^len`, in lexicographic order.
pub fn for_each_vector(base: usize, len: usize, mut visit: impl FnMut(&[usize])) {
    let mut v = vec![0usize; len];
    if base == 0 && len > 0 {
        return;
    }
    loop {
        visit(&v);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < base {
                break;
            }
            v[i] = 0;
        }
    }
}

fn budget(base: usize, len: usize) -> Result<()> {
    let mut total: u64 = 1;
    for _ in 0..len {
        total = total.saturating_mul(base as u64);
    }
    if total > ORACLE_BUDGET {
        return Err(Error::SizeBound { size: total.min(usize::MAX as u64) as usize, bound: ORACLE_BUDGET as usize });
    }
    Ok(())
}

/// Result of the exhaustive cochain enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCohomology {
    /// Cocycles as `(f, g)` index tables.
    pub cocycles: Vec<(Vec<usize>, Vec<usize>)>,
    pub coboundaries: BTreeSet<(Vec<usize>, Vec<usize>)>,
    pub h2_order: usize,
}

fn is_cocycle(x: &LinearCycleSet, a: &FinAbGroup, f: &[usize], g: &[usize]) -> bool {
    let n = x.size();
    let (add, neg) = (|p, q| a.add_index(p, q), |p| a.neg_index(p));
    let at = |p: usize, q: usize| p * n + q;
    if g[at(x.zero(), x.zero())] != 0 {
        return false;
    }
    for p in 0..n {
        for q in 0..n {
            if g[at(p, q)] != g[at(q, p)] {
                return false;
            }
            for r in 0..n {
                let (pq, qr) = (x.add(p, q), x.add(q, r));
                let (dq, dr) = (x.dot(p, q), x.dot(p, r));
                if add(g[at(p, q)], g[at(pq, r)]) != add(g[at(q, r)], g[at(p, qr)]) {
                    return false;
                }
                if f[at(pq, r)] != add(f[at(dq, dr)], f[at(p, r)]) {
                    return false;
                }
                let lhs = add(f[at(p, qr)], neg(add(f[at(p, q)], f[at(p, r)])));
                if lhs != add(g[at(dq, dr)], neg(g[at(q, r)])) {
                    return false;
                }
            }
        }
    }
    true
}

/// All normalised coboundaries `(λ(x·y) − λ(y), λ(x+y) − λ(x) − λ(y))`.
pub fn coboundaries(x: &LinearCycleSet, a: &FinAbGroup) -> Result<BTreeSet<(Vec<usize>, Vec<usize>)>> {
    let n = x.size();
    budget(a.order(), n.saturating_sub(1))?;
    let sub = |p, q| a.add_index(p, a.neg_index(q));
    let mut out = BTreeSet::new();
    for_each_vector(a.order(), n, |lambda| {
        if lambda[x.zero()] != 0 {
            return;
        }
        let f = (0..n * n).map(|i| sub(lambda[x.dot(i / n, i % n)], lambda[i % n])).collect();
        let g = (0..n * n).map(|i| sub(sub(lambda[x.add(i / n, i % n)], lambda[i / n]), lambda[i % n])).collect();
        out.insert((f, g));
    });
    Ok(out)
}

/// `Z²_N`, `B²_N` and `|H²_N|` by exhaustive search: every `g` table, then
/// every `f` table for each `g` that passes the `g`-only conditions.
pub fn cohomology(x: &LinearCycleSet, a: &FinAbGroup) -> Result<OracleCohomology> {
    let n = x.size();
    budget(a.order(), n * n)?;
    let sum = Table::from_fn(n, |p, q| x.add(p, q));
    let gs = symmetric_cocycles(&sum, x.zero(), a);
    let mut cocycles = Vec::new();
    for g in &gs {
        for_each_vector(a.order(), n * n, |f| {
            if is_cocycle(x, a, f, g) {
                cocycles.push((f.to_vec(), g.clone()));
            }
        });
    }
    cocycles.sort();
    let coboundaries = coboundaries(x, a)?;
    let h2_order = cocycles.len() / coboundaries.len();
    Ok(OracleCohomology { cocycles, coboundaries, h2_order })
}

fn symmetric_cocycles(sum: &Table, zero: usize, a: &FinAbGroup) -> Vec<Vec<usize>> {
    let n = sum.size();
    let add = |p, q| a.add_index(p, q);
    let mut out = Vec::new();
    for_each_vector(a.order(), n * n, |g| {
        let at = |p: usize, q: usize| g[p * n + q];
        if at(zero, zero) != 0 {
            return;
        }
        for p in 0..n {
            for q in 0..n {
                if at(p, q) != at(q, p) {
                    return;
                }
                for r in 0..n {
                    if add(at(p, q), at(sum.get(p, q), r)) != add(at(q, r), at(p, sum.get(q, r))) {
                        return;
                    }
                }
            }
        }
        out.push(g.to_vec());
    });
    out
}

/// `|H²_sym(G; A)|` from symmetric normalised group cocycles.
pub fn h2sym_order(sum: &Table, zero: usize, a: &FinAbGroup) -> Result<usize> {
    let n = sum.size();
    budget(a.order(), n * n)?;
    let cocycles = symmetric_cocycles(sum, zero, a).len();
    let sub = |p, q| a.add_index(p, a.neg_index(q));
    let mut boundaries = BTreeSet::new();
    for_each_vector(a.order(), n, |lambda| {
        if lambda[zero] != 0 {
            return;
        }
        let g: Vec<usize> =
            (0..n * n).map(|i| sub(sub(lambda[sum.get(i / n, i % n)], lambda[i / n]), lambda[i % n])).collect();
        boundaries.insert(g);
    });
    Ok(cocycles / boundaries.len())
}

/// `|Bilin(G × G, A)|` by enumeration.
pub fn bilinear_order(sum: &Table, a: &FinAbGroup) -> Result<usize> {
    let n = sum.size();
    budget(a.order(), n * n)?;
    let add = |p, q| a.add_index(p, q);
    let mut count = 0;
    for_each_vector(a.order(), n * n, |b| {
        let at = |p: usize, q: usize| b[p * n + q];
        let ok = (0..n).all(|p| {
            (0..n).all(|q| {
                (0..n).all(|r| {
                    at(sum.get(p, q), r) == add(at(p, r), at(q, r)) && at(p, sum.get(q, r)) == add(at(p, q), at(p, r))
                })
            })
        });
        count += usize::from(ok);
    });
    Ok(count)
}

/// Every additive `λ` with `λ(x·y) = λ(y)`.
pub fn z1(x: &LinearCycleSet, a: &FinAbGroup) -> Result<Vec<Vec<usize>>> {
    let n = x.size();
    budget(a.order(), n)?;
    let mut out = Vec::new();
    for_each_vector(a.order(), n, |l| {
        let ok = (0..n).all(|p| (0..n).all(|q| l[x.add(p, q)] == a.add_index(l[p], l[q]) && l[x.dot(p, q)] == l[q]));
        if ok {
            out.push(l.to_vec());
        }
    });
    Ok(out)
}

/// Bijections preserving both operations of a structure given by two tables.
pub fn table_automorphisms(sum: &Table, dot: &Table, bound: usize) -> Result<Vec<Vec<usize>>> {
    let n = sum.size();
    if n > bound {
        return Err(Error::SizeBound { size: n, bound });
    }
    Ok(permutations(n)
        .into_iter()
        .filter(|p| {
            (0..n).all(|x| {
                (0..n).all(|y| p[sum.get(x, y)] == sum.get(p[x], p[y]) && p[dot.get(x, y)] == dot.get(p[x], p[y]))
            })
        })
        .collect())
}

/// Automorphisms of `(A, +)` as permutations of element indices.
pub fn group_automorphisms(a: &FinAbGroup, bound: usize) -> Result<Vec<Vec<usize>>> {
    let n = a.order();
    let sum = Table::new(n, a.sum_table())?;
    table_automorphisms(&sum, &Table::from_fn(n, |_, y| y), bound)
}

/// Automorphisms of `E = X ⊕ A` (carrier index `x·|A| + a`) of the form
/// `(x, a) ↦ (φ(x), λ(x) + θ(a))`, found by filtering every bijection of `E`.
pub fn aut_a_e(e: &LinearCycleSet, a: &FinAbGroup, bound: usize) -> Result<Vec<Vec<usize>>> {
    let na = a.order();
    let all = table_automorphisms(e.carrier().sum_table(), e.table(), bound)?;
    Ok(all
        .into_iter()
        .filter(|p| {
            // θ is read off the fibre over 0, λ off the image of (x, 0).
            (0..na).all(|v| p[v] < na)
                && (0..e.size() / na).all(|x| {
                    let head = p[x * na];
                    (0..na).all(|v| p[x * na + v] == (head / na) * na + a.add_index(head % na, p[v]))
                })
        })
        .collect())
}
