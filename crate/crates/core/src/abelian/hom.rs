use alloc::vec::Vec;

use super::echelon::Echelon;
use super::group::{Element, FinAbGroup};
use super::subgroup::SubgroupPresentation;
use crate::{Error, Result};

/// Homomorphism given by the images of the domain's canonical generators.
///
/// `matrix[i][j]` is coordinate `i` of the image of generator `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupHom {
    domain: FinAbGroup,
    codomain: FinAbGroup,
    matrix: Vec<Vec<i64>>,
}

impl GroupHom {
    pub fn new(domain: FinAbGroup, codomain: FinAbGroup, matrix: Vec<Vec<i64>>) -> Result<Self> {
        if matrix.len() != codomain.rank() {
            return Err(Error::DimensionMismatch { expected: codomain.rank(), found: matrix.len() });
        }
        let mut reduced = matrix;
        for (row, &c) in reduced.iter_mut().zip(codomain.invariant_factors()) {
            if row.len() != domain.rank() {
                return Err(Error::DimensionMismatch { expected: domain.rank(), found: row.len() });
            }
            for x in row.iter_mut() {
                *x = x.rem_euclid(c);
            }
        }
        for (j, &d) in domain.invariant_factors().iter().enumerate() {
            let column = Element(reduced.iter().map(|row| row[j]).collect());
            if codomain.scale(&column, d) != codomain.zero() {
                return Err(Error::InvalidInput(alloc::format!(
                    "image of generator {j} does not have order dividing {d}"
                )));
            }
        }
        Ok(GroupHom { domain, codomain, matrix: reduced })
    }

    /// Homomorphism sending generator `j` to `images[j]`.
    pub fn from_images(domain: FinAbGroup, codomain: FinAbGroup, images: &[Element]) -> Result<Self> {
        let matrix = (0..codomain.rank()).map(|i| images.iter().map(|e| e.0[i]).collect()).collect();
        Self::new(domain, codomain, matrix)
    }

    pub fn identity(g: &FinAbGroup) -> Self {
        let matrix = (0..g.rank()).map(|i| (0..g.rank()).map(|j| i64::from(i == j)).collect()).collect();
        GroupHom { domain: g.clone(), codomain: g.clone(), matrix }
    }

    pub fn zero(domain: FinAbGroup, codomain: FinAbGroup) -> Self {
        let matrix = alloc::vec![alloc::vec![0; domain.rank()]; codomain.rank()];
        GroupHom { domain, codomain, matrix }
    }

    pub fn domain(&self) -> &FinAbGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FinAbGroup {
        &self.codomain
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn apply(&self, x: &Element) -> Element {
        let coords: Vec<i64> = self
            .matrix
            .iter()
            .map(|row| row.iter().zip(&x.0).map(|(&a, &b)| a as i128 * b as i128).sum::<i128>())
            .zip(self.codomain.invariant_factors())
            .map(|(v, &c)| v.rem_euclid(c as i128) as i64)
            .collect();
        Element(coords)
    }

    pub fn apply_index(&self, x: usize) -> usize {
        self.codomain.index(&self.apply(&self.domain.element(x)).0)
    }

    /// Images of all domain indices.
    pub fn to_permutation(&self) -> Vec<usize> {
        (0..self.domain.order()).map(|x| self.apply_index(x)).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom> {
        if other.codomain != self.domain {
            return Err(Error::InvalidInput("composition of incompatible homomorphisms".into()));
        }
        let images: Vec<Element> =
            (0..other.domain.rank()).map(|j| self.apply(&other.apply(&unit(&other.domain, j)))).collect();
        GroupHom::from_images(other.domain.clone(), self.codomain.clone(), &images)
    }

    pub fn kernel(&self) -> SubgroupPresentation {
        let mut ech =
            Echelon::new(self.codomain.invariant_factors().to_vec(), self.domain.invariant_factors().to_vec());
        for j in 0..self.domain.rank() {
            let column = self.matrix.iter().map(|row| row[j]).collect();
            let mut payload = alloc::vec![0; self.domain.rank()];
            payload[j] = 1;
            ech.insert(column, payload);
        }
        let gens = ech.kernel().to_vec();
        SubgroupPresentation::new(self.domain.invariant_factors().to_vec(), gens)
            .expect("kernel generators lie in the domain")
    }

    pub fn image(&self) -> SubgroupPresentation {
        let gens = (0..self.domain.rank()).map(|j| self.matrix.iter().map(|row| row[j]).collect()).collect();
        SubgroupPresentation::new(self.codomain.invariant_factors().to_vec(), gens)
            .expect("images lie in the codomain")
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.order() == self.codomain.order() && self.kernel().order() == 1
    }
}

pub(crate) fn unit(g: &FinAbGroup, j: usize) -> Element {
    let mut c = g.zero();
    c.0[j] = 1;
    c
}

/// Kernel of `h`; free function form of [`GroupHom::kernel`].
pub fn kernel(h: &GroupHom) -> SubgroupPresentation {
    h.kernel()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> FinAbGroup {
        FinAbGroup::cyclic(n).unwrap()
    }

    #[test]
    fn doubling_on_z4() {
        let h = GroupHom::new(z(4), z(4), alloc::vec![alloc::vec![2]]).unwrap();
        let k = h.kernel();
        assert_eq!(k.order(), 2);
        assert!(k.contains(&[2]));
        assert!(!k.contains(&[1]));
    }

    #[test]
    fn identity_and_zero_maps() {
        assert_eq!(GroupHom::identity(&z(6)).kernel().order(), 1);
        assert_eq!(GroupHom::zero(z(6), z(6)).kernel().order(), 6);
    }

    #[test]
    fn rejects_ill_defined_matrix() {
        // Z2 -> Z4 sending 1 to 1 is not well defined
        assert!(GroupHom::new(z(2), z(4), alloc::vec![alloc::vec![1]]).is_err());
        assert!(GroupHom::new(z(2), z(4), alloc::vec![alloc::vec![2]]).is_ok());
    }
}
