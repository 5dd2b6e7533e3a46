//! Named polytope constructors selectable at runtime.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::examples::{build_ogata_p2, build_qk, build_qk_pyramid, unit_cube, unit_simplex};
use super::phd::{build_phd, PhdSpec};
use crate::error::{Error, Result};
use crate::polytope::LatticePolytope;

/// Parameters accepted by the builtin families; each family reads the ones it needs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub h: Option<u32>,
    pub d: Option<usize>,
    pub k: Option<u32>,
    pub dim: Option<usize>,
}

impl FamilyParams {
    fn require<T: Copy>(value: Option<T>, name: &str, family: &str) -> Result<T> {
        value.ok_or_else(|| Error::invalid(format!("family `{family}` needs --{name}")))
    }
}

pub trait PolytopeFamily: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn build(&self, params: &FamilyParams) -> Result<LatticePolytope>;
}

struct Phd;
struct OgataP2;
struct Qk;
struct QkPyramid;
struct Simplex;
struct Cube;

impl PolytopeFamily for Phd {
    fn name(&self) -> &'static str {
        "phd"
    }
    fn summary(&self) -> &'static str {
        "P_{h,d}: non-normal very ample polytope with h holes (--h, --d)"
    }
    fn build(&self, params: &FamilyParams) -> Result<LatticePolytope> {
        let h = FamilyParams::require(params.h, "h", self.name())?;
        let d = FamilyParams::require(params.d, "d", self.name())?;
        build_phd(PhdSpec::new(h, d)?)
    }
}

impl PolytopeFamily for OgataP2 {
    fn name(&self) -> &'static str {
        "ogata-p2"
    }
    fn summary(&self) -> &'static str {
        "Ogata's 4-dimensional P_2 with infinitely many holes"
    }
    fn build(&self, _params: &FamilyParams) -> Result<LatticePolytope> {
        Ok(build_ogata_p2())
    }
}

impl PolytopeFamily for Qk {
    fn name(&self) -> &'static str {
        "qk"
    }
    fn summary(&self) -> &'static str {
        "Q_k in R^3 (--qk)"
    }
    fn build(&self, params: &FamilyParams) -> Result<LatticePolytope> {
        build_qk(FamilyParams::require(params.k, "qk", self.name())?)
    }
}

impl PolytopeFamily for QkPyramid {
    fn name(&self) -> &'static str {
        "qk-pyramid"
    }
    fn summary(&self) -> &'static str {
        "pyramid over Q_k (--qk)"
    }
    fn build(&self, params: &FamilyParams) -> Result<LatticePolytope> {
        build_qk_pyramid(FamilyParams::require(params.k, "qk", self.name())?)
    }
}

impl PolytopeFamily for Simplex {
    fn name(&self) -> &'static str {
        "simplex"
    }
    fn summary(&self) -> &'static str {
        "unit simplex conv(0, e_1, ..., e_n) (--dim)"
    }
    fn build(&self, params: &FamilyParams) -> Result<LatticePolytope> {
        unit_simplex(FamilyParams::require(params.dim, "dim", self.name())?)
    }
}

impl PolytopeFamily for Cube {
    fn name(&self) -> &'static str {
        "cube"
    }
    fn summary(&self) -> &'static str {
        "unit cube [0,1]^n (--dim)"
    }
    fn build(&self, params: &FamilyParams) -> Result<LatticePolytope> {
        unit_cube(FamilyParams::require(params.dim, "dim", self.name())?)
    }
}

#[derive(Default)]
pub struct FamilyRegistry {
    families: BTreeMap<&'static str, Box<dyn PolytopeFamily>>,
}

impl FamilyRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_builtins() -> Self {
        let mut registry = Self::new();
        let builtins: [Box<dyn PolytopeFamily>; 6] =
            [Box::new(Phd), Box::new(OgataP2), Box::new(Qk), Box::new(QkPyramid), Box::new(Simplex), Box::new(Cube)];
        for family in builtins {
            registry.register(family).expect("builtin names are distinct");
        }
        registry
    }

    pub fn register(&mut self, family: Box<dyn PolytopeFamily>) -> Result<()> {
        let name = family.name();
        if self.families.contains_key(name) {
            return Err(Error::invalid(format!("family `{name}` already registered")));
        }
        self.families.insert(name, family);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&dyn PolytopeFamily> {
        self.families.get(name).map(|f| f.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.families.keys().copied()
    }

    pub fn build(&self, name: &str, params: &FamilyParams) -> Result<LatticePolytope> {
        let family = self.get(name).ok_or_else(|| {
            let known: Vec<_> = self.names().collect();
            Error::invalid(format!("unknown family `{name}` (known: {})", known.join(", ")))
        })?;
        family.build(params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_resolve() {
        let registry = FamilyRegistry::with_builtins();
        let names: Vec<_> = registry.names().collect();
        assert_eq!(names, ["cube", "ogata-p2", "phd", "qk", "qk-pyramid", "simplex"]);
        let p = registry.build("phd", &FamilyParams { h: Some(1), d: Some(3), ..Default::default() }).unwrap();
        assert_eq!(p.points().len(), 8);
    }

    #[test]
    fn missing_parameter_and_unknown_name() {
        let registry = FamilyRegistry::with_builtins();
        assert!(registry.build("qk", &FamilyParams::default()).is_err());
        assert!(registry.build("nope", &FamilyParams::default()).is_err());
    }

    #[test]
    fn duplicate_registration_rejected() {
        let mut registry = FamilyRegistry::with_builtins();
        assert!(registry.register(Box::new(Cube)).is_err());
    }
}
