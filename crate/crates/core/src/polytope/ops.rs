use super::{Halfspace, LatticePolytope, Point};
use crate::error::{Error, Result};
use crate::linalg::{sublattice_coordinates, LatticeFrame};

/// A facet re-expressed as a full-dimensional lattice polytope in a basis of
/// its own affine lattice, with the frame needed to map points back.
#[derive(Clone, Debug)]
pub struct RestrictedFacet {
    pub polytope: LatticePolytope,
    pub frame: LatticeFrame,
    /// Lattice points of the facet in ambient coordinates.
    pub ambient_points: Vec<Point>,
}

pub fn restrict_to_facet_with_frame(polytope: &LatticePolytope, facet: &Halfspace) -> Result<RestrictedFacet> {
    if facet.dim() != polytope.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: polytope.ambient_dim(), got: facet.dim() });
    }
    if polytope.dim() == 0 {
        return Err(Error::NotAFacet("a point has no facets".into()));
    }
    if !polytope.points().iter().all(|p| facet.contains(p, 1)) {
        return Err(Error::NotAFacet(format!("{:?} <= {} is violated by the polytope", facet.normal, facet.offset)));
    }
    let tight: Vec<Point> = polytope
        .lattice_points(1)?
        .into_iter()
        .filter(|p| facet.is_tight(p, 1))
        .collect();
    if tight.is_empty() {
        return Err(Error::NotAFacet("no lattice point is tight".into()));
    }
    let sub = sublattice_coordinates(&tight)?;
    if sub.dim() + 1 != polytope.dim() {
        return Err(Error::NotAFacet(format!(
            "tight set has dimension {} but the polytope has dimension {}",
            sub.dim(),
            polytope.dim()
        )));
    }
    let restricted = LatticePolytope::new(sub.dim(), sub.coords)?;
    Ok(RestrictedFacet { polytope: restricted, frame: sub.frame, ambient_points: tight })
}

/// The facet cut out by `facet`, as a full-dimensional polytope of dimension
/// `dim(P) - 1` in lattice coordinates of its affine hull.
pub fn restrict_to_facet(polytope: &LatticePolytope, facet: &Halfspace) -> Result<LatticePolytope> {
    Ok(restrict_to_facet_with_frame(polytope, facet)?.polytope)
}

/// `conv({(α, 1) : α ∈ P} ∪ {0})`.
pub fn pyramid(polytope: &LatticePolytope) -> Result<LatticePolytope> {
    let n = polytope.ambient_dim();
    let mut points: Vec<Point> = polytope
        .points()
        .iter()
        .map(|p| {
            let mut v = p.clone();
            v.push(1);
            v
        })
        .collect();
    points.push(vec![0; n + 1]);
    LatticePolytope::new(n + 1, points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_facet_is_unit_segment() {
        let sq = LatticePolytope::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let f = sq.hrep().unwrap().facets().next().unwrap().clone();
        let seg = restrict_to_facet(&sq, &f).unwrap();
        assert_eq!(seg.ambient_dim(), 1);
        assert_eq!(seg.points().len(), 2);
        assert_eq!(seg.lattice_points(1).unwrap().len(), 2);
    }

    #[test]
    fn non_facet_rejected() {
        let sq = LatticePolytope::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        // supporting line through a single vertex
        let h = Halfspace::new(vec![1, 1], 2);
        assert!(matches!(restrict_to_facet(&sq, &h), Err(Error::NotAFacet(_))));
        let h = Halfspace::new(vec![1, 0], 0);
        assert!(matches!(restrict_to_facet(&sq, &h), Err(Error::NotAFacet(_))));
    }

    #[test]
    fn pyramid_over_point_is_segment() {
        let p = LatticePolytope::new(0, vec![vec![]]).unwrap();
        let pyr = pyramid(&p).unwrap();
        assert_eq!(pyr.points(), &[vec![0], vec![1]]);
        assert_eq!(pyr.dim(), 1);
    }

    #[test]
    fn pyramid_adds_one_vertex() {
        let sq = LatticePolytope::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let pyr = pyramid(&sq).unwrap();
        assert_eq!(pyr.vertices().unwrap().len(), sq.vertices().unwrap().len() + 1);
    }
}
