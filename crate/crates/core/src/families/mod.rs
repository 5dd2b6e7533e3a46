//! Constructors for the concrete polytopes and configurations under study.

mod examples;
mod phd;
mod registry;

pub use examples::{build_ogata_p2, build_qk, build_qk_pyramid, ogata_hole, unit_cube, unit_simplex};
pub use phd::{
    build_expected_hrep, build_f0_configuration, build_phd, expected_halfspace, expected_holes, hyperplane_label,
    PhdSpec,
};
pub use registry::{FamilyParams, FamilyRegistry, PolytopeFamily};
