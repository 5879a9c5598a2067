pub mod error;
pub mod graph;
pub mod monomial;
pub mod resolution;
pub mod verify;
pub use error::{Error, Result};
pub use graph::Graph;
pub use monomial::{Monomial, MonomialIdeal};
pub use resolution::{BettiTable, Caps, EngineConfig, Field};
pub use verify::{Statement, Verdict, VerificationReport, Verifier, Witness};
