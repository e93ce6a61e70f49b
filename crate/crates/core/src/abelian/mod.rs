//! Finite abelian groups and the integer linear algebra behind every
//! subgroup, kernel and quotient in the crate.

mod aut;
mod echelon;
mod group;
mod hom;
pub mod snf;
mod subgroup;
mod system;

pub use aut::{enumerate_automorphisms, is_permutation_group, AUT_ORDER_BOUND};
pub use group::{Element, FinAbGroup};
pub use hom::{kernel, GroupHom};
pub use snf::{smith_mod, smith_normal_form, IntMatrix, ModSmith, SmithForm};
pub use subgroup::{quotient, solve_mod, Quotient, SubgroupPresentation};
pub use system::{bilinear_group, ValuedSystem};

/// Builds a group from arbitrary positive cyclic factors.
pub fn make_group(factors: &[i64]) -> crate::Result<FinAbGroup> {
    FinAbGroup::new(factors)
}
