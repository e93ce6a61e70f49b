use alloc::vec::Vec;

use super::lcs::LinearCycleSet;
use super::table::{verify_abelian_group, Carrier, Table};
use crate::verdict::{Failure, Law, Verdict};
use crate::{Error, Result};

/// A verified (left) brace `(B, +, ∘)` whose `∘`-identity is the additive zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Brace {
    carrier: Carrier,
    circ: Table,
    inv: Vec<usize>,
}

impl Brace {
    pub fn new(carrier: Carrier, circ: Table) -> core::result::Result<Self, Failure> {
        let inv = check_brace(carrier.sum_table(), &circ)?;
        Ok(Brace { carrier, circ, inv })
    }

    pub fn size(&self) -> usize {
        self.circ.size()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn table(&self) -> &Table {
        &self.circ
    }

    pub fn circ(&self, x: usize, y: usize) -> usize {
        self.circ.get(x, y)
    }

    /// Inverse for `∘`.
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }
}

pub fn verify_brace(sum: &Table, circ: &Table) -> Verdict {
    check_brace(sum, circ).map(|_| ())
}

fn check_brace(sum: &Table, circ: &Table) -> core::result::Result<Vec<usize>, Failure> {
    if sum.size() != circ.size() {
        return Err(Failure::new(Law::Range, &[sum.size(), circ.size()]));
    }
    let (zero, _) = verify_abelian_group(sum)?;
    let n = circ.size();
    for x in 0..n {
        if circ.get(zero, x) != x || circ.get(x, zero) != x {
            return Err(Failure::new(Law::Identity, &[x]));
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = circ.get(x, y);
            for z in 0..n {
                if circ.get(xy, z) != circ.get(x, circ.get(y, z)) {
                    return Err(Failure::new(Law::Associativity, &[x, y, z]));
                }
            }
        }
    }
    let mut inv = Vec::with_capacity(n);
    for x in 0..n {
        let y = (0..n).find(|&y| circ.get(x, y) == zero).ok_or_else(|| Failure::new(Law::Inverse, &[x]))?;
        inv.push(y);
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = sum.get(circ.get(a, sum.get(b, c)), a);
                let rhs = sum.get(circ.get(a, b), circ.get(a, c));
                if lhs != rhs {
                    return Err(Failure::new(Law::BraceAxiom, &[a, b, c]));
                }
            }
        }
    }
    Ok(inv)
}

/// `x·y = x⁻¹∘(x+y)`
pub fn brace_to_lcs(b: &Brace) -> Result<LinearCycleSet> {
    let dot = Table::from_fn(b.size(), |x, y| b.circ(b.inv(x), b.carrier.add(x, y)));
    LinearCycleSet::new(b.carrier.clone(), dot)
        .map_err(|f| Error::Internal(alloc::format!("brace gave a non-linear cycle set: {f}")))
}

/// `x∘y = x + L_x⁻¹(y)`, validated by converting back.
pub fn lcs_to_brace(l: &LinearCycleSet) -> Result<Brace> {
    let inverses: Vec<Vec<usize>> = (0..l.size()).map(|x| l.left_translation_inverse(x)).collect();
    let circ = Table::from_fn(l.size(), |x, y| l.add(x, inverses[x][y]));
    let brace = Brace::new(l.carrier().clone(), circ)
        .map_err(|f| Error::Internal(alloc::format!("linear cycle set gave a non-brace: {f}")))?;
    if brace_to_lcs(&brace)?.table() != l.table() {
        return Err(Error::Internal("brace round trip changed the dot table".into()));
    }
    Ok(brace)
}
