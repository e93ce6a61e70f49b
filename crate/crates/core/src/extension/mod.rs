//! Central extensions `X ⊕_{f,g} A`, brace extensions, cocycle extraction and
//! equivalence of extensions.

use alloc::vec::Vec;

use crate::abelian::FinAbGroup;
use crate::cohomology::{coboundary_witness, verify_cocycle, Cochain2};
use crate::structures::{brace_to_lcs, is_permutation, Brace, Carrier, LinearCycleSet, Table};
use crate::verdict::{Failure, Law};
use crate::{Error, Result};

/// A central extension `0 → A → E → X → 0` with explicit maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralExtension {
    x: LinearCycleSet,
    a: FinAbGroup,
    e: LinearCycleSet,
    i: Vec<usize>,
    pi: Vec<usize>,
    section: Vec<usize>,
    cocycle: Option<Cochain2>,
}

/// Index of `(x, a)` on the canonical carrier `X × A`.
#[inline]
pub fn pair_index(a_order: usize, x: usize, a: usize) -> usize {
    x * a_order + a
}

impl CentralExtension {
    /// Validates `i`, `π` and centrality for an arbitrary extension.
    pub fn from_parts(x: LinearCycleSet, a: FinAbGroup, e: LinearCycleSet, i: Vec<usize>, pi: Vec<usize>) -> Result<Self> {
        let (ne, nx, na) = (e.size(), x.size(), a.order());
        if i.len() != na || pi.len() != ne {
            return Err(Error::DimensionMismatch { expected: na + ne, found: i.len() + pi.len() });
        }
        if ne != nx * na {
            return Err(Error::InvalidInput("|E| must equal |X|·|A|".into()));
        }
        if i.iter().any(|&v| v >= ne) || pi.iter().any(|&v| v >= nx) {
            return Err(Error::InvalidInput("inclusion or projection out of range".into()));
        }
        for p in 0..na {
            for q in 0..na {
                if i[a.add_index(p, q)] != e.add(i[p], i[q]) {
                    return Err(Error::InvalidInput(alloc::format!("i is not additive at ({p}, {q})")));
                }
            }
        }
        let mut seen = alloc::vec![false; ne];
        for &v in &i {
            if core::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidInput("i is not injective".into()));
            }
        }
        for p in 0..ne {
            for q in 0..ne {
                if pi[e.add(p, q)] != x.add(pi[p], pi[q]) || pi[e.dot(p, q)] != x.dot(pi[p], pi[q]) {
                    return Err(Error::InvalidInput(alloc::format!("π is not a morphism at ({p}, {q})")));
                }
            }
        }
        if i.iter().any(|&v| pi[v] != x.zero()) {
            return Err(Error::InvalidInput("π∘i is not zero".into()));
        }
        // surjective π with injective i and |E| = |X||A| forces ker π = im i
        let mut hit = alloc::vec![false; nx];
        pi.iter().for_each(|&v| hit[v] = true);
        if hit.iter().any(|&h| !h) {
            return Err(Error::InvalidInput("π is not surjective".into()));
        }
        check_centrality(&e, &i).map_err(Error::Property)?;
        let section = (0..nx)
            .map(|p| if p == x.zero() { e.zero() } else { pi.iter().position(|&v| v == p).expect("surjective") })
            .collect();
        Ok(CentralExtension { x, a, e, i, pi, section, cocycle: None })
    }

    pub fn base(&self) -> &LinearCycleSet {
        &self.x
    }

    pub fn coefficients(&self) -> &FinAbGroup {
        &self.a
    }

    pub fn total(&self) -> &LinearCycleSet {
        &self.e
    }

    pub fn inclusion(&self) -> &[usize] {
        &self.i
    }

    pub fn projection(&self) -> &[usize] {
        &self.pi
    }

    /// Default section; sends `0` to `0`.
    pub fn section(&self) -> &[usize] {
        &self.section
    }

    /// The cocycle the extension was built from, if any.
    pub fn cocycle(&self) -> Option<&Cochain2> {
        self.cocycle.as_ref()
    }

    /// `A`-index of `e ∈ i(A)`.
    pub fn preimage(&self, e: usize) -> Option<usize> {
        self.i.iter().position(|&v| v == e)
    }
}

/// `x·x' = x'` and `x'·x = x` for `x ∈ E`, `x' ∈ i(A)`.
pub fn check_centrality(e: &LinearCycleSet, i: &[usize]) -> core::result::Result<(), Failure> {
    for p in 0..e.size() {
        for &q in i {
            if e.dot(p, q) != q || e.dot(q, p) != p {
                return Err(Failure::new(Law::Centrality, &[p, q]));
            }
        }
    }
    Ok(())
}

fn extension_tables(x: &LinearCycleSet, a: &FinAbGroup, c: &Cochain2) -> (Table, Table) {
    let na = a.order();
    let n = x.size() * na;
    let split = |v: usize| (v / na, v % na);
    let sum = Table::from_fn(n, |u, v| {
        let ((p, s), (q, t)) = (split(u), split(v));
        pair_index(na, x.add(p, q), a.add_index(a.add_index(s, t), c.g(p, q)))
    });
    let dot = Table::from_fn(n, |u, v| {
        let ((p, _), (q, t)) = (split(u), split(v));
        pair_index(na, x.dot(p, q), a.add_index(t, c.f(p, q)))
    });
    (sum, dot)
}

/// `(x,a) + (y,b) = (x+y, a+b+g(x,y))`, `(x,a)·(y,b) = (x·y, b+f(x,y))`.
///
/// A non-cocycle is reported with the linear cycle set law the product breaks,
/// or with the normalisation failure when the product is an LCS anyway.
pub fn build_extension(x: &LinearCycleSet, a: &FinAbGroup, c: &Cochain2) -> Result<CentralExtension> {
    if c.size() != x.size() || c.coefficients() != a {
        return Err(Error::InvalidInput("cochain does not match X and A".into()));
    }
    let (sum, dot) = extension_tables(x, a, c);
    let carrier = Carrier::from_table(sum).map_err(Error::Property)?;
    let e = LinearCycleSet::new(carrier, dot).map_err(Error::Property)?;
    if let Err(f) = verify_cocycle(x, c)? {
        if f.law == Law::Normalisation {
            return Err(Error::Property(f));
        }
        return Err(Error::Internal(alloc::format!("product is an LCS but the cocycle check says {f}")));
    }
    let na = a.order();
    let i = (0..na).map(|s| pair_index(na, x.zero(), s)).collect();
    let pi = (0..e.size()).map(|u| u / na).collect();
    let mut ext = CentralExtension::from_parts(x.clone(), a.clone(), e, i, pi)?;
    ext.section = (0..x.size()).map(|p| pair_index(na, p, 0)).collect();
    ext.cocycle = Some(c.clone());
    Ok(ext)
}

/// `f̄(x,y) = −f(x, x·y) + g(x,y)` for the linear cycle set of the brace.
pub fn brace_transform(l: &LinearCycleSet, c: &Cochain2) -> Result<Cochain2> {
    let a = c.coefficients();
    Cochain2::from_fn(l.size(), a, |p, q| a.add_index(a.neg_index(c.f(p, l.dot(p, q))), c.g(p, q)), |p, q| c.g(p, q))
}

/// `(x,a)+(y,b) = (x+y, a+b+g(x,y))`, `(x,a)∘(y,b) = (x∘y, a+b+f(x,y))`.
pub fn build_brace_extension(b: &Brace, a: &FinAbGroup, c: &Cochain2) -> Result<Brace> {
    if c.size() != b.size() || c.coefficients() != a {
        return Err(Error::InvalidInput("cochain does not match the brace and A".into()));
    }
    let l = brace_to_lcs(b)?;
    if let Err(f) = verify_cocycle(&l, &brace_transform(&l, c)?)? {
        return Err(Error::Property(f));
    }
    let na = a.order();
    let n = b.size() * na;
    let split = |v: usize| (v / na, v % na);
    let plus = b.carrier();
    let sum = Table::from_fn(n, |u, v| {
        let ((p, s), (q, t)) = (split(u), split(v));
        pair_index(na, plus.add(p, q), a.add_index(a.add_index(s, t), c.g(p, q)))
    });
    let circ = Table::from_fn(n, |u, v| {
        let ((p, s), (q, t)) = (split(u), split(v));
        pair_index(na, b.circ(p, q), a.add_index(a.add_index(s, t), c.f(p, q)))
    });
    let carrier = Carrier::from_table(sum).map_err(|f| Error::Internal(alloc::format!("{f}")))?;
    Brace::new(carrier, circ).map_err(|f| Error::Internal(alloc::format!("brace extension fails: {f}")))
}

/// Cocycle `f = s(x)·s(y) − s(x·y)`, `g = s(x)+s(y) − s(x+y)` and whether it is normalised.
pub fn extract_cocycle(ext: &CentralExtension, s: &[usize]) -> Result<(Cochain2, bool)> {
    let (x, e) = (&ext.x, &ext.e);
    if s.len() != x.size() || s.iter().enumerate().any(|(p, &v)| v >= e.size() || ext.pi[v] != p) {
        return Err(Error::InvalidInput("not a section of π".into()));
    }
    let back = |v: usize| {
        ext.preimage(v).ok_or_else(|| Error::Internal("extracted value outside i(A)".into()))
    };
    let n = x.size();
    let mut f = Vec::with_capacity(n * n);
    let mut g = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            f.push(back(e.sub(e.dot(s[p], s[q]), s[x.dot(p, q)]))?);
            g.push(back(e.sub(e.add(s[p], s[q]), s[x.add(p, q)]))?);
        }
    }
    let c = Cochain2::new(n, ext.a.clone(), f, g)?;
    let normalised = s[x.zero()] == e.zero();
    match verify_cocycle(x, &c)? {
        Ok(()) if normalised => {}
        Err(fl) if !normalised && fl.law == Law::Normalisation => {}
        other => return Err(Error::Internal(alloc::format!("extracted cochain verdict {other:?}, normalised {normalised}"))),
    }
    Ok((c, normalised))
}

/// Outcome of comparing two extensions through their cohomology classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub equivalent: bool,
    /// `λ` with `φ(x,a) = (x, a + λ(x))` on the canonical carriers.
    pub lambda: Option<Vec<usize>>,
    /// The equivalence `E₁ → E₂` as a table of element indices.
    pub map: Option<Vec<usize>>,
}

pub fn classify_equivalence(e1: &CentralExtension, e2: &CentralExtension) -> Result<Equivalence> {
    if e1.x != e2.x || e1.a != e2.a {
        return Err(Error::InvalidInput("extensions of different X or A".into()));
    }
    let (c1, _) = extract_cocycle(e1, &e1.section)?;
    let (c2, _) = extract_cocycle(e2, &e2.section)?;
    let Some(lambda) = coboundary_witness(&e1.x, &c2.sub(&c1))? else {
        return Ok(Equivalence { equivalent: false, lambda: None, map: None });
    };
    let a = &e1.a;
    // e = s₁(x) + i₁(a) ↦ s₂(x) + i₂(a + λ(x))
    let map: Vec<usize> = (0..e1.e.size())
        .map(|u| {
            let p = e1.pi[u];
            let s = e1.preimage(e1.e.sub(u, e1.section[p])).expect("fibre difference lies in i(A)");
            e2.e.add(e2.section[p], e2.i[a.add_index(s, lambda[p])])
        })
        .collect();
    let (ee1, ee2) = (&e1.e, &e2.e);
    let n = ee1.size();
    let morphism = is_permutation(&map)
        && (0..n).all(|u| (0..n).all(|v| map[ee1.add(u, v)] == ee2.add(map[u], map[v]) && map[ee1.dot(u, v)] == ee2.dot(map[u], map[v])));
    let diagram = (0..a.order()).all(|s| map[e1.i[s]] == e2.i[s]) && (0..n).all(|u| e2.pi[map[u]] == e1.pi[u]);
    if !(morphism && diagram) {
        return Err(Error::Internal("cohomologous cocycles gave a map that is not an equivalence".into()));
    }
    Ok(Equivalence { equivalent: true, lambda: Some(lambda), map: Some(map) })
}

#[cfg(test)]
mod tests;
