//! The graded semigroup generated by the homogenized lattice points of a
//! polytope: membership, holes, normality, Hilbert bases of vertex cones and
//! very ampleness.

mod hilbert;
mod holes;
mod membership;
mod slices;
mod very_ample;

use std::collections::HashMap;
use std::collections::HashSet;
use std::sync::{Arc, Mutex, MutexGuard};

pub use hilbert::{hilbert_basis, Cone, HilbertBasis};
pub use holes::{default_degree_budget, HoleReport, KNormalReport, LevelProbe, StopReason};
pub use membership::{DfsStrategy, MembershipRegistry, MembershipStrategy, SumsetStrategy};
pub use slices::{slice_sumset, verify_slice_decompositions, SliceCase, SliceCheck, SLICE_CASES};
pub use very_ample::{certify_very_ample, VertexCertificate, VeryAmplenessCertificate, Witness};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::linalg::LatticeFrame;
use crate::polytope::{LatticePolytope, Point};
use crate::util::dot_i128;

#[derive(Default)]
pub(crate) struct MembershipCache {
    pub(crate) verdicts: HashMap<Point, bool>,
    pub(crate) levels: Vec<HashSet<Point>>,
}

/// `ℤ_{≥0} A_P` for `A_P = {(α, 1) : α ∈ P ∩ ℤ^N}`, graded by the last
/// coordinate.
///
/// When the lattice points of `P` do not affinely generate `ℤ^N` (or `P` is
/// not full-dimensional) all work happens in coordinates of the affine
/// lattice they generate, so that `ℤA_P` becomes the full lattice there.
/// Inputs and outputs stay in ambient coordinates.
pub struct GradedSemigroup {
    ambient_dim: usize,
    frame: Option<LatticeFrame>,
    work: LatticePolytope,
    rows: Vec<(Vec<i64>, i64)>,
    generators: Vec<Point>,
    generator_set: HashSet<Point>,
    strategy: Arc<dyn MembershipStrategy>,
    cache: Mutex<MembershipCache>,
}

impl std::fmt::Debug for GradedSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GradedSemigroup")
            .field("ambient_dim", &self.ambient_dim)
            .field("generators", &self.generators.len())
            .field("strategy", &self.strategy.name())
            .finish()
    }
}

/// Homogenizes with the default depth-first membership strategy.
pub fn homogenize(polytope: &LatticePolytope) -> Result<GradedSemigroup> {
    GradedSemigroup::new(polytope, Arc::new(DfsStrategy))
}

impl GradedSemigroup {
    pub fn new(polytope: &LatticePolytope, strategy: Arc<dyn MembershipStrategy>) -> Result<Self> {
        Self::with_budget(polytope, strategy, &Budget::default())
    }

    pub fn with_budget(
        polytope: &LatticePolytope,
        strategy: Arc<dyn MembershipStrategy>,
        budget: &Budget,
    ) -> Result<Self> {
        let points = polytope.lattice_points_with(1, budget)?;
        let frame = LatticeFrame::generated(&points)?;
        let (frame, work) = if frame.dim() == frame.ambient_dim() && frame.basis().is_unimodular() {
            (None, polytope.clone())
        } else {
            let coords: Vec<Point> = points
                .iter()
                .map(|p| frame.coordinates(p).expect("generating point lies in its own lattice"))
                .collect();
            let work = LatticePolytope::new(frame.dim(), coords)?;
            (Some(frame), work)
        };
        let rows: Vec<(Vec<i64>, i64)> = if work.dim() == 0 {
            Vec::new()
        } else {
            work.hrep()?.halfspaces.iter().map(|h| (h.normal.clone(), h.offset)).collect()
        };
        let mut generators: Vec<Point> = work
            .lattice_points_with(1, budget)?
            .into_iter()
            .map(|mut p| {
                p.push(1);
                p
            })
            .collect();
        generators.sort_by(|a, b| {
            let sa: i64 = a.iter().sum();
            let sb: i64 = b.iter().sum();
            sb.cmp(&sa).then_with(|| a.cmp(b))
        });
        let generator_set = generators.iter().cloned().collect();
        Ok(GradedSemigroup {
            ambient_dim: polytope.ambient_dim() + 1,
            frame,
            work,
            rows,
            generators,
            generator_set,
            strategy,
            cache: Mutex::new(MembershipCache::default()),
        })
    }

    /// `N + 1`.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the polytope, i.e. rank of `ℤA_P` minus one.
    pub fn dim(&self) -> usize {
        self.work.ambient_dim()
    }

    pub fn strategy_name(&self) -> &'static str {
        self.strategy.name()
    }

    /// `ℤA_P = ℤ^{N+1}`: no change of coordinates is needed.
    pub fn is_standard_lattice(&self) -> bool {
        self.frame.is_none()
    }

    /// Homogenized generators in ambient coordinates, canonically sorted.
    pub fn generators(&self) -> Vec<Point> {
        let mut out: Vec<Point> = self.generators.iter().map(|g| self.lift(g)).collect();
        out.sort();
        out
    }

    pub(crate) fn work_generators(&self) -> &[Point] {
        &self.generators
    }

    pub(crate) fn is_work_generator(&self, x: &[i64]) -> bool {
        self.generator_set.contains(x)
    }

    pub(crate) fn cache(&self) -> MutexGuard<'_, MembershipCache> {
        self.cache.lock().unwrap_or_else(|e| e.into_inner())
    }

    /// Working coordinates of an ambient homogenized point, if it lies in `ℤA_P`.
    pub(crate) fn to_work(&self, x: &[i64]) -> Result<Option<Point>> {
        if x.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: x.len() });
        }
        let n = *x.last().expect("ambient_dim >= 1");
        let Some(frame) = &self.frame else { return Ok(Some(x.to_vec())) };
        let shifted: Vec<i64> = x[..x.len() - 1].iter().zip(frame.origin()).map(|(a, o)| a - n * o).collect();
        Ok(frame.linear_coordinates(&shifted).map(|mut y| {
            y.push(n);
            y
        }))
    }

    pub(crate) fn lift(&self, y: &[i64]) -> Point {
        let Some(frame) = &self.frame else { return y.to_vec() };
        let n = *y.last().expect("homogenized");
        let mut x: Point =
            frame.lift_linear(&y[..y.len() - 1]).iter().zip(frame.origin()).map(|(a, o)| a + n * o).collect();
        x.push(n);
        x
    }

    /// Working-coordinate cone test: `y ∈ m P` at height `m >= 0`.
    pub(crate) fn work_in_cone(&self, y: &[i64]) -> bool {
        let (alpha, m) = y.split_at(y.len() - 1);
        let m = m[0];
        if m < 0 {
            return false;
        }
        if m == 0 {
            return alpha.iter().all(|&v| v == 0);
        }
        self.rows.iter().all(|(a, b)| dot_i128(a, alpha) <= *b as i128 * m as i128)
    }

    /// `x ∈ ℝ_{≥0}A_P ∩ ℤA_P`.
    pub fn in_cone_lattice(&self, x: &[i64]) -> Result<bool> {
        Ok(match self.to_work(x)? {
            Some(y) => self.work_in_cone(&y),
            None => false,
        })
    }

    pub fn is_member(&self, x: &[i64]) -> Result<bool> {
        self.is_member_with(x, &Budget::default())
    }

    /// `x` is a sum of exactly `deg(x)` generators.
    pub fn is_member_with(&self, x: &[i64], budget: &Budget) -> Result<bool> {
        match self.to_work(x)? {
            Some(y) if self.work_in_cone(&y) => self.strategy.is_member(self, &y, budget),
            _ => Ok(false),
        }
    }

    pub fn decompose(&self, x: &[i64]) -> Result<Option<Vec<Point>>> {
        self.decompose_with(x, &Budget::default())
    }

    /// A witness `x = g_1 + ... + g_n` in ambient coordinates, if one exists.
    pub fn decompose_with(&self, x: &[i64], budget: &Budget) -> Result<Option<Vec<Point>>> {
        match self.to_work(x)? {
            Some(y) if self.work_in_cone(&y) => Ok(self
                .strategy
                .decompose(self, &y, budget)?
                .map(|parts| parts.iter().map(|g| self.lift(g)).collect())),
            _ => Ok(None),
        }
    }

    /// Homogenized cone points at height `n`, in working coordinates.
    pub(crate) fn work_level(&self, n: u32, budget: &Budget) -> Result<Vec<Point>> {
        Ok(self
            .work
            .lattice_points_with(n, budget)?
            .into_iter()
            .map(|mut p| {
                p.push(n as i64);
                p
            })
            .collect())
    }
}
