use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::echelon::Echelon;
use super::group::FinAbGroup;
use super::snf::{lcm, smith_mod};
use crate::{Error, Result};

fn exponent_of(moduli: &[i64]) -> i64 {
    moduli.iter().copied().fold(1, lcm)
}

fn reduce_vec(v: &[i64], moduli: &[i64]) -> Vec<i64> {
    v.iter().zip(moduli).map(|(&x, &m)| x.rem_euclid(m)).collect()
}

/// Subgroup of a product of cyclic groups `⊕ Z/mᵢ`, given by generators.
///
/// The ambient moduli need not form a divisibility chain: cochain groups such
/// as `A^(X×X)` are laid out coordinate by coordinate.
#[derive(Debug, Clone)]
pub struct SubgroupPresentation {
    ambient: Vec<i64>,
    generators: Vec<Vec<i64>>,
    structure: FinAbGroup,
    span: Echelon,
}

impl SubgroupPresentation {
    pub fn new(ambient: Vec<i64>, generators: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(&bad) = ambient.iter().find(|&&m| m < 1) {
            return Err(Error::InvalidInput(alloc::format!("modulus {bad} must be positive")));
        }
        let e = exponent_of(&ambient);
        let r = generators.len();
        let mut span = Echelon::new(ambient.clone(), vec![e; r]);
        let mut gens = Vec::with_capacity(r);
        for (k, g) in generators.iter().enumerate() {
            if g.len() != ambient.len() {
                return Err(Error::DimensionMismatch { expected: ambient.len(), found: g.len() });
            }
            let g = reduce_vec(g, &ambient);
            let mut payload = vec![0; r];
            payload[k] = 1;
            span.insert(g.clone(), payload);
            gens.push(g);
        }
        // relations among the generators present the subgroup
        let smith = smith_mod(span.kernel(), r, e)?;
        let structure = FinAbGroup::from_chain(smith.diagonal.into_iter().filter(|&d| d > 1).collect())?;
        if structure.order() as u128 != span.span_order() {
            return Err(Error::Internal("subgroup order disagrees with its presentation".into()));
        }
        Ok(SubgroupPresentation { ambient, generators: gens, structure, span })
    }

    pub fn ambient(&self) -> &[i64] {
        &self.ambient
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// Abstract isomorphism type of the subgroup.
    pub fn structure(&self) -> &FinAbGroup {
        &self.structure
    }

    pub fn order(&self) -> usize {
        self.structure.order()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.span.solve(x).is_some()
    }

    /// Integer coefficients `c` with `x = Σ cₖ·generatorₖ`.
    pub fn coefficients(&self, x: &[i64]) -> Option<Vec<i64>> {
        self.span.solve(x)
    }

    /// Canonical representative of `x` modulo the subgroup.
    pub fn canonical(&self, x: &[i64]) -> Vec<i64> {
        self.span.reduce(x).0
    }

    /// All elements, by closure. Only sensible at desk scale.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let zero = vec![0; self.ambient.len()];
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        seen.insert(zero.clone());
        let mut frontier = vec![zero];
        while let Some(x) = frontier.pop() {
            for g in &self.generators {
                let y: Vec<i64> = x.iter().zip(g).zip(&self.ambient).map(|((&a, &b), &m)| (a + b).rem_euclid(m)).collect();
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }
}

/// Quotient of a span by a subgroup of it, with canonical coordinates.
#[derive(Debug, Clone)]
pub struct Quotient {
    ambient: Vec<i64>,
    structure: FinAbGroup,
    span: Echelon,
    /// Column transform, `r × r` modulo the exponent.
    v: Vec<Vec<i64>>,
    /// Positions in the Smith diagonal that carry a nontrivial factor.
    kept: Vec<usize>,
    generators: Vec<Vec<i64>>,
    span_order: usize,
    sub_order: usize,
}

impl Quotient {
    /// `span(ambient_generators) / span(sub_generators)` inside `⊕ Z/moduli`.
    pub fn new(moduli: &[i64], ambient_generators: &[Vec<i64>], sub_generators: &[Vec<i64>]) -> Result<Self> {
        let e = exponent_of(moduli);
        let r = ambient_generators.len();
        let mut span = Echelon::new(moduli.to_vec(), vec![e; r]);
        for (k, g) in ambient_generators.iter().enumerate() {
            if g.len() != moduli.len() {
                return Err(Error::DimensionMismatch { expected: moduli.len(), found: g.len() });
            }
            let mut payload = vec![0; r];
            payload[k] = 1;
            span.insert(reduce_vec(g, moduli), payload);
        }
        let mut relations = span.kernel().to_vec();
        for s in sub_generators {
            if s.len() != moduli.len() {
                return Err(Error::DimensionMismatch { expected: moduli.len(), found: s.len() });
            }
            relations.push(span.solve(s).ok_or(Error::NotInSpan)?);
        }
        let smith = smith_mod(&relations, r, e)?;
        let kept: Vec<usize> = (0..r).filter(|&i| smith.diagonal[i] > 1).collect();
        let structure = FinAbGroup::from_chain(kept.iter().map(|&i| smith.diagonal[i]).collect())?;
        let generators = kept
            .iter()
            .map(|&k| {
                let mut acc = vec![0i64; moduli.len()];
                for (i, g) in ambient_generators.iter().enumerate() {
                    let c = smith.v_inv[k][i];
                    for ((a, &x), &m) in acc.iter_mut().zip(g).zip(moduli) {
                        *a = ((*a as i128 + c as i128 * x as i128).rem_euclid(m as i128)) as i64;
                    }
                }
                acc
            })
            .collect();
        let span_order = usize::try_from(span.span_order()).map_err(|_| Error::Overflow)?;
        let sub_order = SubgroupPresentation::new(moduli.to_vec(), sub_generators.to_vec())?.order();
        let q = Quotient { ambient: moduli.to_vec(), structure, span, v: smith.v, kept, generators, span_order, sub_order };
        if q.structure.order() * q.sub_order != q.span_order {
            return Err(Error::Internal("quotient order is not the index of the subgroup".into()));
        }
        Ok(q)
    }

    pub fn ambient(&self) -> &[i64] {
        &self.ambient
    }

    /// Isomorphism type of the quotient.
    pub fn structure(&self) -> &FinAbGroup {
        &self.structure
    }

    pub fn order(&self) -> usize {
        self.structure.order()
    }

    pub fn span_order(&self) -> usize {
        self.span_order
    }

    pub fn sub_order(&self) -> usize {
        self.sub_order
    }

    /// Representatives of the standard generators of [`Self::structure`].
    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn in_span(&self, x: &[i64]) -> bool {
        self.span.solve(x).is_some()
    }

    /// Canonical coordinates of the class of `x`; equal exactly on cosets of the subgroup.
    pub fn reduce(&self, x: &[i64]) -> Result<Vec<i64>> {
        let a = self.span.solve(x).ok_or(Error::NotInSpan)?;
        Ok(self
            .kept
            .iter()
            .zip(self.structure.invariant_factors())
            .map(|(&k, &d)| {
                let s: i128 = a.iter().zip(&self.v).map(|(&ai, row)| ai as i128 * row[k] as i128).sum();
                s.rem_euclid(d as i128) as i64
            })
            .collect())
    }

    /// Canonical representative with the given quotient coordinates.
    pub fn lift(&self, coords: &[i64]) -> Vec<i64> {
        let mut acc = vec![0i64; self.ambient.len()];
        for (&c, g) in coords.iter().zip(&self.generators) {
            for ((a, &x), &m) in acc.iter_mut().zip(g).zip(&self.ambient) {
                *a = ((*a as i128 + c as i128 * x as i128).rem_euclid(m as i128)) as i64;
            }
        }
        acc
    }
}

/// `span(ambient) / sub` with a canonical reduction map.
pub fn quotient(ambient: &SubgroupPresentation, sub: &SubgroupPresentation) -> Result<Quotient> {
    if ambient.ambient() != sub.ambient() {
        return Err(Error::InvalidInput("subgroups live in different ambient groups".into()));
    }
    Quotient::new(ambient.ambient(), ambient.generators(), sub.generators())
}

/// One solution of `M·x ≡ b` with row `i` taken modulo `moduli[i]`, or `None`.
pub fn solve_mod(m: &[Vec<i64>], b: &[i64], moduli: &[i64]) -> Result<Option<Vec<i64>>> {
    if m.len() != moduli.len() {
        return Err(Error::DimensionMismatch { expected: moduli.len(), found: m.len() });
    }
    if b.len() != moduli.len() {
        return Err(Error::DimensionMismatch { expected: moduli.len(), found: b.len() });
    }
    if moduli.iter().any(|&q| q < 1) {
        return Err(Error::InvalidInput("moduli must be positive".into()));
    }
    let cols = m.first().map_or(0, Vec::len);
    if let Some(row) = m.iter().find(|row| row.len() != cols) {
        return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
    }
    let e = exponent_of(moduli);
    let mut ech = Echelon::new(moduli.to_vec(), vec![e; cols]);
    for j in 0..cols {
        let mut payload = vec![0; cols];
        payload[j] = 1;
        ech.insert(m.iter().map(|row| row[j]).collect(), payload);
    }
    Ok(ech.solve(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_mod_examples() {
        let x = solve_mod(&[vec![2]], &[0], &[4]).unwrap().unwrap();
        assert_eq!((2 * x[0]).rem_euclid(4), 0);
        assert_eq!(solve_mod(&[vec![2]], &[1], &[4]).unwrap(), None);
        let x = solve_mod(&[vec![1, 1]], &[1], &[2]).unwrap().unwrap();
        assert_eq!((x[0] + x[1]).rem_euclid(2), 1);
    }

    #[test]
    fn solve_mod_rejects_bad_shapes() {
        assert!(solve_mod(&[vec![1]], &[1, 1], &[2]).is_err());
        assert!(solve_mod(&[vec![1], vec![1, 2]], &[1, 1], &[2, 2]).is_err());
    }

    #[test]
    fn z4_mod_two_torsion() {
        let all = SubgroupPresentation::new(vec![4], vec![vec![1]]).unwrap();
        let sub = SubgroupPresentation::new(vec![4], vec![vec![2]]).unwrap();
        let q = quotient(&all, &sub).unwrap();
        assert_eq!(q.structure().invariant_factors(), &[2]);
        assert_eq!(q.reduce(&[1]).unwrap(), q.reduce(&[3]).unwrap());
        assert_ne!(q.reduce(&[0]).unwrap(), q.reduce(&[1]).unwrap());
    }

    #[test]
    fn whole_and_trivial_quotients() {
        let g = SubgroupPresentation::new(vec![2, 4], vec![vec![1, 0], vec![0, 1]]).unwrap();
        let zero = SubgroupPresentation::new(vec![2, 4], vec![]).unwrap();
        assert_eq!(quotient(&g, &g).unwrap().order(), 1);
        assert_eq!(quotient(&g, &zero).unwrap().structure().invariant_factors(), &[2, 4]);
    }

    #[test]
    fn quotient_rejects_outside_generators() {
        let small = SubgroupPresentation::new(vec![4], vec![vec![2]]).unwrap();
        let big = SubgroupPresentation::new(vec![4], vec![vec![1]]).unwrap();
        assert_eq!(quotient(&small, &big).unwrap_err(), Error::NotInSpan);
    }

    #[test]
    fn structure_matches_closure() {
        let s = SubgroupPresentation::new(vec![2, 4, 4], vec![vec![1, 2, 0], vec![0, 2, 2], vec![1, 0, 2]]).unwrap();
        assert_eq!(s.order(), s.elements().len());
    }
}
