//! Normalised second cohomology of linear cycle sets, `Z¹_N`, symmetric group
//! cohomology and the comparison map `Λ`.

mod cochain;
mod groups;
mod lambda;

pub use cochain::{coboundary, verify_cocycle, Cochain2};
pub use groups::{
    coboundary_witness, compute_cohomology, compute_h2sym, compute_h2sym_carrier, compute_hom, compute_z1,
    CohClass, CohomologyGroup, CohomologyKind, COHOMOLOGY_BOUND,
};
pub use lambda::{lambda_map, lambda_report, trivial_decomposition, LambdaReport, TrivialDecomposition};

pub(crate) use groups::{flat_to_indices, indices_to_flat};

#[cfg(test)]
mod tests;
