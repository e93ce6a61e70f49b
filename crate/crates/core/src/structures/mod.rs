//! Table-based cycle sets, linear cycle sets, braces, racks and bi-groupoids.

mod brace;
mod braid;
mod cycle_set;
mod enumerate;
mod lcs;
mod rack;
mod table;

pub use brace::{brace_to_lcs, lcs_to_brace, verify_brace, Brace};
pub use braid::{
    bigroupoid_ybe_equivalence, trivial_dot_criterion, verify_bigroupoid_conditions, verify_braid, BiGroupoid,
    BraidMap, BraidReport,
};
pub use cycle_set::{enumerate_cycle_sets, permutations, verify_cycle_set, verify_nondegenerate, CycleSet};
pub use enumerate::{enumerate_lcs, LCS_ORDER_BOUND};
pub use lcs::{trivial_lcs, verify_linear_cycle_set, LinearCycleSet};
pub use rack::{abelian_rack_to_cycle_set, verify_rack, Rack};
pub use table::{verify_abelian_group, Carrier, Table};

pub(crate) use table::{invert_permutation, is_permutation};

#[cfg(test)]
mod tests;
