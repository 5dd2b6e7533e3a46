//! Lattice polytopes in V- and H-representation.

mod dd;
mod enumerate;
mod halfspace;
mod ops;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub(crate) use dd::cone_facets;
pub(crate) use enumerate::BoxEnumerator;
pub use halfspace::{HRep, Halfspace};
pub use ops::{pyramid, restrict_to_facet, restrict_to_facet_with_frame, RestrictedFacet};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, LatticeFrame};
use crate::util::dot;

pub type Point = Vec<i64>;

/// Integral convex polytope given by a generating point set.
///
/// The generating points are deduplicated and sorted on construction. The
/// affine lattice frame is computed eagerly; facets and vertices are computed
/// on first use and cached.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    ambient_dim: usize,
    points: Vec<Point>,
    frame: LatticeFrame,
    geometry: OnceLock<Geometry>,
}

#[derive(Clone, Debug)]
struct Geometry {
    hrep: HRep,
    // facets in frame coordinates, as (normal, offset) rows
    inner_rows: Vec<(Vec<i64>, i64)>,
    vertices: Vec<Point>,
}

/// Wire format: `{ "ambient_dim": N, "points": [[...], ...] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub ambient_dim: usize,
    pub points: Vec<Point>,
}

impl LatticePolytope {
    pub fn new(ambient_dim: usize, points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::invalid("polytope needs at least one point"));
        }
        if let Some(bad) = points.iter().find(|p| p.len() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, got: bad.len() });
        }
        let mut points = points;
        points.sort();
        points.dedup();
        let frame = LatticeFrame::saturated(&points)?;
        Ok(LatticePolytope { ambient_dim, points, frame, geometry: OnceLock::new() })
    }

    pub fn from_points(points: Vec<Point>) -> Result<Self> {
        let n = points.first().map(|p| p.len()).ok_or_else(|| Error::invalid("no points"))?;
        Self::new(n, points)
    }

    pub fn from_json(json: &PolytopeJson) -> Result<Self> {
        Self::new(json.ambient_dim, json.points.clone())
    }

    pub fn to_json(&self) -> PolytopeJson {
        PolytopeJson { ambient_dim: self.ambient_dim, points: self.points.clone() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// The deduplicated generating set (not necessarily vertices).
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Frame of `aff(P) ∩ ℤ^N`.
    pub fn frame(&self) -> &LatticeFrame {
        &self.frame
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.frame.dim()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    fn geometry(&self) -> Result<&Geometry> {
        if let Some(g) = self.geometry.get() {
            return Ok(g);
        }
        let g = self.compute_geometry()?;
        Ok(self.geometry.get_or_init(|| g))
    }

    fn compute_geometry(&self) -> Result<Geometry> {
        let k = self.dim();
        let mut halfspaces = Vec::new();
        for (u, c) in self.frame.equations()? {
            let neg: Vec<i64> = u.iter().map(|x| -x).collect();
            halfspaces.push(Halfspace::new(u, c).non_facet());
            halfspaces.push(Halfspace::new(neg, -c).non_facet());
        }
        if k == 0 {
            return Ok(Geometry {
                hrep: HRep::new(halfspaces),
                inner_rows: Vec::new(),
                vertices: vec![self.points[0].clone()],
            });
        }
        let inner: Vec<Point> = self
            .points
            .iter()
            .map(|p| self.frame.coordinates(p).expect("generating point lies in its frame"))
            .collect();
        let homogenized: Vec<Point> = inner
            .iter()
            .map(|y| {
                let mut v = y.clone();
                v.push(1);
                v
            })
            .collect();
        let w = self.frame.coordinate_matrix().expect("polytope frames are saturated");
        let w_rows = w.to_i64_rows()?;
        let mut inner_rows = Vec::new();
        for normal in cone_facets(&homogenized)? {
            let (c, c0) = normal.split_at(k);
            let inner_normal: Vec<i64> = c.iter().map(|x| -x).collect();
            let offset = c0[0];
            let mut ambient = vec![0i64; self.ambient_dim];
            for (ci, row) in inner_normal.iter().zip(&w_rows) {
                for (a, r) in ambient.iter_mut().zip(row) {
                    *a = a
                        .checked_add(ci.checked_mul(*r).ok_or(Error::Overflow("facet lift"))?)
                        .ok_or(Error::Overflow("facet lift"))?;
                }
            }
            let ambient_offset = offset + dot(&ambient, self.frame.origin());
            halfspaces.push(Halfspace::new(ambient, ambient_offset));
            inner_rows.push((inner_normal, offset));
        }
        let mut vertices = Vec::new();
        for (p, y) in self.points.iter().zip(&inner) {
            let tight: Vec<Vec<i64>> = inner_rows
                .iter()
                .filter(|(a, b)| dot(a, y) == *b)
                .map(|(a, _)| a.clone())
                .collect();
            if !tight.is_empty() && IntMatrix::from_rows(&tight, k)?.rank() == k {
                vertices.push(p.clone());
            }
        }
        Ok(Geometry { hrep: HRep::new(halfspaces), inner_rows, vertices })
    }

    /// Facets (and, for lower-dimensional polytopes, the implicit equations
    /// as pairs of non-facet halfspaces), canonically ordered.
    pub fn hrep(&self) -> Result<&HRep> {
        Ok(&self.geometry()?.hrep)
    }

    /// Vertices, computed geometrically, in canonical order.
    pub fn vertices(&self) -> Result<&[Point]> {
        Ok(&self.geometry()?.vertices)
    }

    pub fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = self.points[0].clone();
        let mut hi = self.points[0].clone();
        for p in &self.points {
            for i in 0..self.ambient_dim {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        (lo, hi)
    }

    pub fn contains(&self, x: &[i64], dilation: i64) -> Result<bool> {
        self.hrep()?.contains(x, dilation)
    }

    /// `nP ∩ ℤ^N` in lexicographic order.
    pub fn lattice_points(&self, dilation: u32) -> Result<Vec<Point>> {
        self.lattice_points_with(dilation, &Budget::default())
    }

    pub fn lattice_points_with(&self, dilation: u32, budget: &Budget) -> Result<Vec<Point>> {
        if dilation == 0 {
            return Ok(vec![vec![0; self.ambient_dim]]);
        }
        let n = dilation as i64;
        let geometry = self.geometry()?;
        if self.is_full_dimensional() {
            let rows: Vec<(Vec<i64>, i64)> =
                geometry.hrep.halfspaces.iter().map(|h| (h.normal.clone(), h.offset)).collect();
            let (lo, hi) = self.bounding_box();
            let lo: Vec<i64> = lo.iter().map(|x| x * n).collect();
            let hi: Vec<i64> = hi.iter().map(|x| x * n).collect();
            return BoxEnumerator::new(&rows, n, &lo, &hi).run(budget, "lattice point enumeration");
        }
        // enumerate in frame coordinates, then lift: nP = n*o + B(nQ)
        let k = self.dim();
        let inner: Vec<Point> =
            self.points.iter().map(|p| self.frame.coordinates(p).expect("in frame")).collect();
        let mut lo = vec![i64::MAX; k];
        let mut hi = vec![i64::MIN; k];
        for y in &inner {
            for i in 0..k {
                lo[i] = lo[i].min(y[i] * n);
                hi[i] = hi[i].max(y[i] * n);
            }
        }
        let inner_points = BoxEnumerator::new(&geometry.inner_rows, n, &lo, &hi)
            .run(budget, "lattice point enumeration")?;
        let shift: Vec<i64> = self.frame.origin().iter().map(|x| x * n).collect();
        let mut out: Vec<Point> = inner_points
            .iter()
            .map(|y| {
                self.frame.lift_linear(y).iter().zip(&shift).map(|(a, b)| a + b).collect()
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Lattice points of `nP ∩ {x_axis = k}`; empty when the slice misses.
    pub fn slice(&self, dilation: u32, level: i64, axis: usize) -> Result<Vec<Point>> {
        self.slice_with(dilation, level, axis, &Budget::default())
    }

    pub fn slice_with(&self, dilation: u32, level: i64, axis: usize, budget: &Budget) -> Result<Vec<Point>> {
        if axis >= self.ambient_dim {
            return Err(Error::invalid(format!("axis {axis} out of range")));
        }
        let n = dilation as i64;
        let rows: Vec<(Vec<i64>, i64)> =
            self.hrep()?.halfspaces.iter().map(|h| (h.normal.clone(), h.offset)).collect();
        let (lo, hi) = self.bounding_box();
        let mut lo: Vec<i64> = lo.iter().map(|x| x * n).collect();
        let mut hi: Vec<i64> = hi.iter().map(|x| x * n).collect();
        lo[axis] = level;
        hi[axis] = level;
        BoxEnumerator::new(&rows, n, &lo, &hi).run(budget, "slice enumeration")
    }
}

/// Irredundant facet description of `P` (plus implicit equations when `P` is
/// not full-dimensional). Refuses 0-dimensional input.
pub fn facet_enumeration(polytope: &LatticePolytope) -> Result<HRep> {
    if polytope.dim() == 0 {
        return Err(Error::invalid("facet enumeration needs dimension >= 1"));
    }
    polytope.hrep().cloned()
}

/// `x ∈ nP` against a stored H-representation.
pub fn contains(hrep: &HRep, x: &[i64], dilation: i64) -> Result<bool> {
    hrep.contains(x, dilation)
}

pub fn lattice_points(polytope: &LatticePolytope, dilation: u32) -> Result<Vec<Point>> {
    polytope.lattice_points(dilation)
}

pub fn slice(polytope: &LatticePolytope, dilation: u32, level: i64, axis: usize) -> Result<Vec<Point>> {
    polytope.slice(dilation, level, axis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex(d: usize) -> LatticePolytope {
        let mut pts = vec![vec![0; d]];
        for i in 0..d {
            let mut e = vec![0; d];
            e[i] = 1;
            pts.push(e);
        }
        LatticePolytope::new(d, pts).unwrap()
    }

    #[test]
    fn unit_simplex_has_four_facets() {
        let p = simplex(3);
        let h = facet_enumeration(&p).unwrap();
        assert_eq!(h.facet_count(), 4);
        assert!(h.halfspaces.iter().all(|f| f.is_primitive()));
        assert_eq!(p.vertices().unwrap().len(), 4);
    }

    #[test]
    fn points_are_deduplicated() {
        let p = LatticePolytope::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 0]]).unwrap();
        assert_eq!(p.points().len(), 2);
        assert_eq!(p.dim(), 1);
    }

    #[test]
    fn zero_dilation_is_origin() {
        let p = simplex(2);
        assert_eq!(p.lattice_points(0).unwrap(), vec![vec![0, 0]]);
        assert_eq!(p.slice(0, 0, 0).unwrap(), vec![vec![0, 0]]);
    }

    #[test]
    fn dilated_simplex_counts() {
        // binomial(n + d, d)
        let p = simplex(3);
        assert_eq!(p.lattice_points(1).unwrap().len(), 4);
        assert_eq!(p.lattice_points(2).unwrap().len(), 10);
        assert_eq!(p.lattice_points(3).unwrap().len(), 20);
    }

    #[test]
    fn lower_dimensional_polytope() {
        // triangle in the plane x + y + z = 1 (dilation 2 has 6 points)
        let p = LatticePolytope::new(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(p.dim(), 2);
        let h = facet_enumeration(&p).unwrap();
        assert_eq!(h.facet_count(), 3);
        assert_eq!(h.len(), 5);
        assert_eq!(p.lattice_points(2).unwrap().len(), 6);
        for x in p.lattice_points(2).unwrap() {
            assert!(h.contains(&x, 2).unwrap());
        }
        assert!(!h.contains(&[1, 1, 1], 2).unwrap());
    }

    #[test]
    fn zero_dimensional_refused() {
        let p = LatticePolytope::new(2, vec![vec![1, 1]]).unwrap();
        assert!(facet_enumeration(&p).is_err());
        assert_eq!(p.vertices().unwrap(), &[vec![1, 1]]);
        assert_eq!(p.lattice_points(3).unwrap(), vec![vec![3, 3]]);
    }

    #[test]
    fn empty_slice_is_empty() {
        let p = simplex(2);
        assert!(p.slice(1, 5, 0).unwrap().is_empty());
        assert_eq!(p.slice(2, 1, 0).unwrap(), vec![vec![1, 0], vec![1, 1]]);
    }
}
