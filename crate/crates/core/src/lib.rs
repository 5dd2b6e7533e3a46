//! Exact computations on lattice polytopes: facet systems, lattice-point
//! enumeration, graded semigroup membership and holes, Hilbert bases of
//! vertex cones, very ampleness certificates and binomial Gröbner basis
//! verification for toric ideals.

pub mod budget;
pub mod error;
pub mod families;
pub mod linalg;
pub mod polytope;
pub mod report;
pub mod semigroup;
pub mod toric;
mod util;
pub mod verdict;

pub use budget::Budget;
pub use error::{Error, Result};
pub use verdict::Verdict;
