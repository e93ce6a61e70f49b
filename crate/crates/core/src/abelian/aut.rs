use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::group::{Element, FinAbGroup};
use super::hom::GroupHom;
use crate::{Error, Result};

/// Default cap on `|A|` for automorphism enumeration.
pub const AUT_ORDER_BOUND: usize = 64;

/// All automorphisms of `a`, in lexicographic order of generator images.
///
/// Generator `j` can only go to an element whose order divides `dⱼ`, and the
/// images chosen so far must span a subgroup of the full size `d₁⋯dⱼ`.
pub fn enumerate_automorphisms(a: &FinAbGroup, bound: usize) -> Result<Vec<GroupHom>> {
    if a.order() > bound {
        return Err(Error::SizeBound { size: a.order(), bound });
    }
    let n = a.order();
    let sum = a.sum_table();
    let factors = a.invariant_factors();
    let candidates: Vec<Vec<usize>> = factors
        .iter()
        .map(|&d| (0..n).filter(|&x| d % a.element_order(&a.element(x)) == 0).collect())
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(factors.len());
    search(a, &sum, &candidates, &mut chosen, &mut out)?;
    Ok(out)
}

fn span_size(n: usize, sum: &[usize], gens: &[usize]) -> usize {
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0usize];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &g in gens {
            let y = sum[x * n + g];
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count
}

fn search(
    a: &FinAbGroup,
    sum: &[usize],
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    out: &mut Vec<GroupHom>,
) -> Result<()> {
    let depth = chosen.len();
    if depth == candidates.len() {
        let images: Vec<Element> = chosen.iter().map(|&x| a.element(x)).collect();
        out.push(GroupHom::from_images(a.clone(), a.clone(), &images)?);
        return Ok(());
    }
    let need: usize = a.invariant_factors()[..=depth].iter().map(|&d| d as usize).product();
    for &x in &candidates[depth] {
        chosen.push(x);
        if span_size(a.order(), sum, chosen) == need {
            search(a, sum, candidates, chosen, out)?;
        }
        chosen.pop();
    }
    Ok(())
}

/// Checks that a list of permutations is closed under composition and inverse
/// and contains the identity.
pub fn is_permutation_group(perms: &[Vec<usize>]) -> bool {
    let set: BTreeSet<&Vec<usize>> = perms.iter().collect();
    let Some(first) = perms.first() else { return false };
    let identity: Vec<usize> = (0..first.len()).collect();
    if !set.contains(&identity) {
        return false;
    }
    for p in perms {
        let mut inv = vec![0; p.len()];
        for (i, &x) in p.iter().enumerate() {
            inv[x] = i;
        }
        if !set.contains(&inv) {
            return false;
        }
        for q in perms {
            let pq: Vec<usize> = q.iter().map(|&x| p[x]).collect();
            if !set.contains(&pq) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(factors: &[i64]) -> usize {
        enumerate_automorphisms(&FinAbGroup::new(factors).unwrap(), AUT_ORDER_BOUND).unwrap().len()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(&[4]), 2);
        assert_eq!(count(&[2, 2]), 6);
        assert_eq!(count(&[]), 1);
        assert_eq!(count(&[2, 4]), 8);
        assert_eq!(count(&[2, 2, 2]), 168);
    }

    #[test]
    fn forms_a_group() {
        let g = FinAbGroup::new(&[2, 4]).unwrap();
        let perms: Vec<Vec<usize>> =
            enumerate_automorphisms(&g, 64).unwrap().iter().map(GroupHom::to_permutation).collect();
        assert!(is_permutation_group(&perms));
    }

    #[test]
    fn bound_is_enforced() {
        let g = FinAbGroup::new(&[128]).unwrap();
        assert!(matches!(enumerate_automorphisms(&g, 64), Err(Error::SizeBound { .. })));
    }
}
