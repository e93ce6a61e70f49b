use super::cycle_set::CycleSet;
use super::table::Table;
use crate::verdict::{Failure, Law, Verdict};

/// A verified (left) rack.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rack {
    star: Table,
}

impl Rack {
    pub fn new(star: Table) -> Result<Self, Failure> {
        verify_rack(&star)?;
        Ok(Rack { star })
    }

    pub fn size(&self) -> usize {
        self.star.size()
    }

    pub fn table(&self) -> &Table {
        &self.star
    }

    pub fn star(&self, x: usize, y: usize) -> usize {
        self.star.get(x, y)
    }
}

/// Bijective rows and `z*(y*x) = (z*y)*(z*x)`; witness order `[x, y, z]`.
pub fn verify_rack(star: &Table) -> Verdict {
    if let Some(x) = star.first_non_bijective_row() {
        return Err(Failure::new(Law::Bijectivity, &[x]));
    }
    left_distributive(star)
}

pub(crate) fn left_distributive(star: &Table) -> Verdict {
    let n = star.size();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if star.get(z, star.get(y, x)) != star.get(star.get(z, y), star.get(z, x)) {
                    return Err(Failure::new(Law::LeftDistributivity, &[x, y, z]));
                }
            }
        }
    }
    Ok(())
}

/// Certifies a rack with `x*(y*z) = y*(x*z)` as a cycle set.
pub fn abelian_rack_to_cycle_set(r: &Rack) -> Result<CycleSet, Failure> {
    let n = r.size();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if r.star(x, r.star(y, z)) != r.star(y, r.star(x, z)) {
                    return Err(Failure::new(Law::RackAbelian, &[x, y, z]));
                }
            }
        }
    }
    CycleSet::new(r.star.clone())
}
