//! Automorphisms of central extensions and the obstruction `Θ`.

mod certificate;
mod group;
mod lifts;
mod pairs;

pub use certificate::{
    orbit_bound_report, orbit_bound_with, theta_difference_coboundary, theta_difference_with, verify_theta_cocycle,
    verify_theta_with, verify_wells, ActionTable, DifferenceReport, OrbitReport, ThetaReport, WellsCertificate,
};
pub use group::{comparison_diagram, group_wells, ComparisonReport, GroupWellsCertificate, GroupWellsInstance};
pub use lifts::{enumerate_aut_a_e, iota, is_automorphism_of, psi, solve_lift, LiftedAut};
pub use pairs::{additive_automorphisms, enumerate_aut_lcs, AutPair, WellsInstance, WELLS_BOUND};
