//! Minimal free resolution data of monomial ideals: Betti tables through
//! lcm-lattice homology, the Taylor-complex oracle, and derived invariants.

mod betti;
mod complex;
mod field;
mod lattice;
mod linalg;
mod quotients;
mod taylor;

pub use betti::{
    betti_table, betti_table_with, has_linear_resolution, has_linear_resolution_with,
    order_complex, projective_dimension, regularity, upper_koszul_complex, BettiTable,
    BettiTableJson, Caps, EngineConfig, GradedEntry, HomologyRoute, MultiEntry,
};
pub use complex::SimplicialComplex;
pub use field::Field;
pub use lattice::LcmLattice;
pub use linalg::{rank, SparseRow};
pub use quotients::{
    colon_is_variable_generated, has_linear_quotients, is_linear_quotient_order, LinearQuotients,
};
pub use taylor::taylor_betti_oracle;
