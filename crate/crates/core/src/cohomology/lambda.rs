use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::groups::{CohomologyGroup, CohomologyKind};
use crate::abelian::{Element, GroupHom, Quotient, ValuedSystem};
use crate::structures::{Carrier, LinearCycleSet};
use crate::{Error, Result};

/// `Λ[(f, g)] = [g]`, in canonical coordinates.
pub fn lambda_map(h2: &CohomologyGroup, h2sym: &CohomologyGroup, coords: &[i64]) -> Result<Vec<i64>> {
    if h2.kind() != CohomologyKind::LcsH2 || h2sym.kind() != CohomologyKind::GroupH2Sym {
        return Err(Error::InvalidInput("lambda_map expects H²_N and H²_sym".into()));
    }
    h2sym.reduce(&h2.lift(coords)?)
}

/// `Λ` as a homomorphism between the computed structures, with kernel and image.
#[derive(Debug, Clone)]
pub struct LambdaReport {
    pub hom: GroupHom,
    pub kernel_order: usize,
    pub image_order: usize,
    pub kernel: Vec<Vec<i64>>,
    pub image: Vec<Vec<i64>>,
}

/// Builds `Λ` from generator images and checks that coboundaries map to zero.
pub fn lambda_report(h2: &CohomologyGroup, b2: &CohomologyGroup, h2sym: &CohomologyGroup) -> Result<LambdaReport> {
    for v in b2.generator_vectors() {
        let c = crate::cohomology::Cochain2::from_flat(h2.size(), h2.coefficients(), v)?;
        if h2sym.reduce(&c)?.iter().any(|&t| t != 0) {
            return Err(Error::Internal("a coboundary has a non-trivial image under Λ".into()));
        }
    }
    let images: Vec<Element> = (0..h2.structure().rank())
        .map(|j| {
            let mut unit = alloc::vec![0; h2.structure().rank()];
            unit[j] = 1;
            lambda_map(h2, h2sym, &unit).map(Element)
        })
        .collect::<Result<_>>()?;
    let hom = GroupHom::from_images(h2.structure().clone(), h2sym.structure().clone(), &images)?;
    let kernel = hom.kernel().elements();
    let image = hom.image().elements();
    Ok(LambdaReport { kernel_order: kernel.len(), image_order: image.len(), kernel, image, hom })
}

/// Outcome of checking `H²_N(X; A) ≅ Bilin × H²_sym` for a trivial `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialDecomposition {
    pub h2_order: usize,
    pub bilin_order: usize,
    pub h2sym_order: usize,
    pub bilin_factors: Vec<i64>,
    /// `class ↦ (f, Λ(class))` is a bijective homomorphism.
    pub isomorphism: bool,
    /// `Λ` agrees with the second projection.
    pub lambda_is_projection: bool,
}

fn bilinear_quotient(carrier: &Carrier, a: &crate::abelian::FinAbGroup) -> Result<Quotient> {
    let n = carrier.size();
    let at = |x: usize, y: usize| x * n + y;
    let mut sys = ValuedSystem::new(n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                sys.push(&[(at(carrier.add(x, y), z), 1), (at(x, z), -1), (at(y, z), -1)]);
                sys.push(&[(at(x, carrier.add(y, z)), 1), (at(x, y), -1), (at(x, z), -1)]);
            }
        }
    }
    Quotient::new(&ValuedSystem::layout(a, n * n), sys.kernel(a).generators(), &[])
}

/// Exhaustively certifies the decomposition for a trivial linear cycle set.
pub fn trivial_decomposition(
    x: &LinearCycleSet,
    h2: &CohomologyGroup,
    h2sym: &CohomologyGroup,
) -> Result<TrivialDecomposition> {
    if !x.is_trivial() {
        return Err(Error::InvalidInput("decomposition applies to trivial linear cycle sets only".into()));
    }
    let a = h2.coefficients();
    let bilin = bilinear_quotient(x.carrier(), a)?;
    let phi = |coords: &[i64]| -> Result<(Vec<i64>, Vec<i64>)> {
        let rep = h2.lift(coords)?;
        let f: Vec<i64> = rep.f_table().iter().flat_map(|&v| a.coords(v)).collect();
        Ok((bilin.reduce(&f)?, h2sym.reduce(&rep)?))
    };
    let classes = h2.all_coords();
    let images: Vec<(Vec<i64>, Vec<i64>)> = classes.iter().map(|c| phi(c)).collect::<Result<_>>()?;
    let distinct: BTreeSet<&(Vec<i64>, Vec<i64>)> = images.iter().collect();
    let bijective = distinct.len() == classes.len() && classes.len() == bilin.order() * h2sym.order();
    let (hs, bs, ss) = (h2.structure(), bilin.structure(), h2sym.structure());
    let mut additive = true;
    'outer: for (i, c1) in classes.iter().enumerate() {
        for (j, c2) in classes.iter().enumerate() {
            let sum = hs.add(&Element(c1.clone()), &Element(c2.clone())).0;
            let k = hs.index(&sum);
            let expect_b = bs.add(&Element(images[i].0.clone()), &Element(images[j].0.clone())).0;
            let expect_s = ss.add(&Element(images[i].1.clone()), &Element(images[j].1.clone())).0;
            if images[k] != (expect_b, expect_s) {
                additive = false;
                break 'outer;
            }
        }
    }
    let mut lambda_is_projection = true;
    for (c, img) in classes.iter().zip(&images) {
        if lambda_map(h2, h2sym, c)? != img.1 {
            lambda_is_projection = false;
        }
    }
    Ok(TrivialDecomposition {
        h2_order: h2.order(),
        bilin_order: bilin.order(),
        h2sym_order: h2sym.order(),
        bilin_factors: bs.invariant_factors().to_vec(),
        isomorphism: bijective && additive,
        lambda_is_projection,
    })
}
