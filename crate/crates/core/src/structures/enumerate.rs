use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::lcs::{verify_linear_cycle_set, LinearCycleSet};
use super::table::{Carrier, Table};
use crate::abelian::{enumerate_automorphisms, FinAbGroup};
use crate::{Error, Result};

pub const LCS_ORDER_BOUND: usize = 8;

/// Every linear cycle set structure on `A`, sorted by dot table.
///
/// Each `L_x` ranges over `Aut(A)`; the constraint
/// `L_{x+y} = L_{L_x(y)} ∘ L_x` is propagated after every choice.
pub fn enumerate_lcs(a: &FinAbGroup, bound: usize) -> Result<Vec<LinearCycleSet>> {
    if a.order() > bound {
        return Err(Error::SizeBound { size: a.order(), bound });
    }
    let n = a.order();
    let auts: Vec<Vec<usize>> =
        enumerate_automorphisms(a, usize::MAX)?.iter().map(|h| h.to_permutation()).collect();
    let index: BTreeMap<Vec<usize>, usize> = auts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let carrier = Carrier::from_group(a);
    let id = index[&(0..n).collect::<Vec<_>>()];

    let mut search = Search { n, auts: &auts, index: &index, carrier: &carrier, out: Vec::new() };
    let mut assign = alloc::vec![None; n];
    assign[0] = Some(id);
    if search.propagate(&mut assign) {
        search.descend(assign);
    }
    let mut tables = search.out;
    tables.sort();
    tables.dedup();
    tables
        .into_iter()
        .map(|dot| {
            verify_linear_cycle_set(carrier.sum_table(), &dot)
                .map_err(|f| Error::Internal(alloc::format!("enumerated table fails: {f}")))?;
            Ok(LinearCycleSet::new_unchecked(carrier.clone(), dot))
        })
        .collect()
}

struct Search<'a> {
    n: usize,
    auts: &'a [Vec<usize>],
    index: &'a BTreeMap<Vec<usize>, usize>,
    carrier: &'a Carrier,
    out: Vec<Table>,
}

impl Search<'_> {
    fn descend(&mut self, assign: Vec<Option<usize>>) {
        let Some(x) = assign.iter().position(Option::is_none) else {
            let rows: Vec<usize> = assign.iter().flat_map(|a| self.auts[a.unwrap()].iter().copied()).collect();
            self.out.push(Table::new(self.n, rows).expect("automorphisms stay in range"));
            return;
        };
        for choice in 0..self.auts.len() {
            let mut next = assign.clone();
            next[x] = Some(choice);
            if self.propagate(&mut next) {
                self.descend(next);
            }
        }
    }

    fn compose(&self, p: usize, q: usize) -> usize {
        let c: Vec<usize> = self.auts[q].iter().map(|&v| self.auts[p][v]).collect();
        self.index[&c]
    }

    fn inverse(&self, p: usize) -> usize {
        let inv = super::table::invert_permutation(&self.auts[p]);
        self.index[&inv]
    }

    fn set(slot: &mut Option<usize>, value: usize, changed: &mut bool) -> bool {
        match *slot {
            Some(v) => v == value,
            None => {
                *slot = Some(value);
                *changed = true;
                true
            }
        }
    }

    /// Fixpoint of `L_{x+y} = L_{L_x(y)} ∘ L_x`; false on contradiction.
    fn propagate(&self, assign: &mut [Option<usize>]) -> bool {
        loop {
            let mut changed = false;
            for x in 0..self.n {
                let Some(lx) = assign[x] else { continue };
                for y in 0..self.n {
                    let s = self.carrier.add(x, y);
                    let t = self.auts[lx][y];
                    match (assign[s], assign[t]) {
                        (_, Some(lt)) => {
                            if !Self::set(&mut assign[s], self.compose(lt, lx), &mut changed) {
                                return false;
                            }
                        }
                        (Some(ls), None) => {
                            let lt = self.compose(ls, self.inverse(lx));
                            if !Self::set(&mut assign[t], lt, &mut changed) {
                                return false;
                            }
                        }
                        (None, None) => {}
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }
}
