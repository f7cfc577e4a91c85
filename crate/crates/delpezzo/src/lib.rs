//! Exact computer algebra for the blow-up catalog of normal rational
//! del Pezzo surfaces of degree at least 5.
//!
//! Everything runs over arbitrary-precision rationals: multivariate
//! polynomials, Groebner bases and elimination, the 22-entry catalog of
//! point configurations on the projective plane, anticanonical embeddings
//! and their image ideals, local A-type singularity analysis via Tjurina
//! algebras, the tangent-sheaf cohomology ledger, and the degree-7 family
//! over the affine line.

pub mod arena;
pub mod cache;
pub mod catalog;
pub mod embed;
pub mod error;
pub mod family;
pub mod gb;
pub mod hilbert;
pub mod ideal;
pub mod jet;
pub mod linalg;
pub mod order;
pub mod poly;
pub mod report;
pub mod singular;
pub mod tangent;

pub use arena::Arena;
pub use error::Error;
pub use ideal::HomogIdeal;
pub use order::MonomialOrder;
pub use poly::{MPoly, Monomial, Rat};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
