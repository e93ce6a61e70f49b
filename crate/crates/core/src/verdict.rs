//! Pass/fail verdicts with replayable witnesses.

use core::fmt;

use alloc::vec::Vec;

/// The law a verification found broken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    Range,
    Bijectivity,
    CycleSetAxiom,
    Nondegeneracy,
    Associativity,
    Commutativity,
    Identity,
    Inverse,
    /// `x·(y+z) = x·y + x·z`
    DotAdditive,
    /// `(x+y)·z = (x·y)·(x·z)`
    LinearCycle,
    /// Cycle set axiom failed although the linear axioms held.
    RedundancyBreach,
    BraceAxiom,
    LeftDistributivity,
    RackAbelian,
    Braid,
    BraidNondegeneracy,
    /// The three bi-groupoid equalities.
    BiGroupoidFirst,
    BiGroupoidSecond,
    BiGroupoidThird,
    GSymmetric,
    GCocycle,
    FCocycle,
    FgCompatibility,
    Normalisation,
    Centrality,
    Section,
    OneCocycleAdditive,
    OneCocycleDot,
    /// A dynamical condition, numbered as in the corollary it comes from.
    Dynamical(u8),
    ProductNotLcs,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::Range => "range",
            Law::Bijectivity => "bijectivity",
            Law::CycleSetAxiom => "cycle-set-axiom",
            Law::Nondegeneracy => "nondegeneracy",
            Law::Associativity => "associativity",
            Law::Commutativity => "commutativity",
            Law::Identity => "identity",
            Law::Inverse => "inverse",
            Law::DotAdditive => "dot-additive",
            Law::LinearCycle => "linear-cycle",
            Law::RedundancyBreach => "redundancy-breach",
            Law::BraceAxiom => "brace-axiom",
            Law::LeftDistributivity => "left-distributivity",
            Law::RackAbelian => "rack-abelian",
            Law::Braid => "braid",
            Law::BraidNondegeneracy => "braid-nondegeneracy",
            Law::BiGroupoidFirst => "bigroupoid-first",
            Law::BiGroupoidSecond => "bigroupoid-second",
            Law::BiGroupoidThird => "bigroupoid-third",
            Law::GSymmetric => "g-symmetric",
            Law::GCocycle => "g-cocycle",
            Law::FCocycle => "f-cocycle",
            Law::FgCompatibility => "fg-compatibility",
            Law::Normalisation => "normalisation",
            Law::Centrality => "centrality",
            Law::Section => "section",
            Law::OneCocycleAdditive => "one-cocycle-additive",
            Law::OneCocycleDot => "one-cocycle-dot",
            Law::Dynamical(1) => "dynamical-1",
            Law::Dynamical(2) => "dynamical-2",
            Law::Dynamical(3) => "dynamical-3",
            Law::Dynamical(_) => "dynamical",
            Law::ProductNotLcs => "product-not-lcs",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First failure found in deterministic scan order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub law: Law,
    pub witness: Vec<usize>,
}

impl Failure {
    pub fn new(law: Law, witness: &[usize]) -> Self {
        Failure { law, witness: witness.to_vec() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.witness)
    }
}

pub type Verdict = core::result::Result<(), Failure>;
