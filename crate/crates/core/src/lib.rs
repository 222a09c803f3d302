//! Exact-arithmetic verification of the defining ideal of the Rees algebra of
//! an Artinian almost complete intersection monomial ideal
//! `I = <T1^a1, ..., Tm^am, T1^b1 ... Tm^bm>`.
//!
//! The crate constructs the structural generator families of the presentation
//! kernel, runs a coefficient-free Buchberger engine over pure-difference
//! binomials, computes monomial-ideal and homological invariants of the
//! initial ideals involved (Hilbert series, multigraded Betti numbers, depth,
//! dimension), and machine-checks each structural claim on desk-scale
//! instances against independent brute-force oracles.

pub mod binomial;
pub mod caps;
pub mod exponent;
pub mod families;
pub mod groebner;
pub mod homology;
pub mod instance;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod report;
pub mod suite;

pub use binomial::Binomial;
pub use caps::Caps;
pub use exponent::{AlgebraError, Block, ExponentVec, Layout};
pub use groebner::{EngineError, GroebnerBasis};
pub use homology::BettiTable;
pub use instance::{Instance, InstanceError};
pub use monomial::{HilbertData, MonomialIdeal};
pub use order::TermOrder;
pub use report::{analyze, AnalysisReport, Checks};
pub use suite::{run_suite, SuiteOutcome, SuiteSpec};
