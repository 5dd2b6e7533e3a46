//! Exact integer linear algebra.

mod lattice;
mod matrix;
mod normal_forms;
mod unimodular;

pub use lattice::{sublattice_coordinates, LatticeFrame, SublatticeCoordinates};
pub use matrix::IntMatrix;
pub(crate) use matrix::to_i64;
pub use normal_forms::{hermite_normal_form, smith_normal_form, unimodular_inverse, HermiteForm, SmithForm};
pub use unimodular::{is_totally_unimodular, is_unimodular_simplex, normalized_simplex_volume};
