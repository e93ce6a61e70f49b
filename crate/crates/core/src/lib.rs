//! Finite linear cycle sets, braces and their central extensions.
//!
//! Everything here is table based and exact: finite abelian groups are
//! presented by invariant factors, structures are stored as operation tables
//! over element indices, and all cohomology is computed by integer linear
//! algebra over the coefficient group.
#![no_std]

extern crate alloc;

pub mod abelian;
pub mod cohomology;
pub mod dynamical;
mod error;
pub mod extension;
pub mod oracle;
pub mod structures;
pub mod verdict;
pub mod wells;

pub use error::{Error, Result};
pub use verdict::{Failure, Law, Verdict};
