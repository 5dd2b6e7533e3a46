//! Pointed rational cones and their Hilbert bases.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, unimodular_inverse, IntMatrix, LatticeFrame};
use crate::polytope::{cone_facets, Point};
use crate::util::{combinations, dot_i128, make_primitive};

/// A pointed cone `cone(generators) ⊂ ℝ^N`, described in coordinates of the
/// lattice `span ∩ ℤ^N`.
#[derive(Clone, Debug)]
pub struct Cone {
    ambient_dim: usize,
    frame: LatticeFrame,
    rays: Vec<Point>,
    facets: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertBasis {
    pub elements: Vec<Point>,
}

fn primitive(v: &[i64]) -> Point {
    let mut p = v.to_vec();
    make_primitive(&mut p);
    p
}

impl Cone {
    pub fn new(generators: &[Point]) -> Result<Self> {
        let n = generators
            .first()
            .map(|g| g.len())
            .ok_or_else(|| Error::invalid("cone needs at least one generator"))?;
        if let Some(bad) = generators.iter().find(|g| g.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: bad.len() });
        }
        let mut with_origin = vec![vec![0; n]];
        with_origin.extend(generators.iter().filter(|g| g.iter().any(|&x| x != 0)).cloned());
        let frame = LatticeFrame::saturated(&with_origin)?;
        let k = frame.dim();
        let coords: Vec<Point> = with_origin[1..]
            .iter()
            .map(|g| frame.linear_coordinates(g).expect("generator lies in its span lattice"))
            .collect();
        if k == 0 {
            return Ok(Cone { ambient_dim: n, frame, rays: Vec::new(), facets: Vec::new() });
        }
        let facets = cone_facets(&coords)?;
        if facets.is_empty() || IntMatrix::from_rows(&facets, k)?.rank() < k {
            return Err(Error::NotPointed);
        }
        let mut rays = BTreeSet::new();
        for g in &coords {
            let tight: Vec<Vec<i64>> = facets.iter().filter(|a| dot_i128(a, g) == 0).cloned().collect();
            let rank = if tight.is_empty() { 0 } else { IntMatrix::from_rows(&tight, k)?.rank() };
            if rank + 1 == k {
                rays.insert(primitive(g));
            }
        }
        Ok(Cone { ambient_dim: n, frame, rays: rays.into_iter().collect(), facets })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.frame.dim()
    }

    /// Primitive extreme rays in ambient coordinates.
    pub fn rays(&self) -> Vec<Point> {
        let mut out: Vec<Point> = self.rays.iter().map(|r| self.frame.lift_linear(r)).collect();
        out.sort();
        out
    }

    fn coords(&self, x: &[i64]) -> Option<Point> {
        if x.len() != self.ambient_dim {
            return None;
        }
        self.frame.linear_coordinates(x)
    }

    fn contains_coords(&self, y: &[i64]) -> bool {
        self.facets.iter().all(|a| dot_i128(a, y) >= 0)
    }

    /// `x` is a lattice point of the cone.
    pub fn contains(&self, x: &[i64]) -> bool {
        self.coords(x).is_some_and(|y| self.contains_coords(&y))
    }

    /// Sum of the facet functionals: strictly positive on every nonzero
    /// lattice point of the cone. `None` outside the cone's lattice.
    pub fn grade(&self, x: &[i64]) -> Option<i128> {
        self.coords(x).map(|y| self.grade_coords(&y))
    }

    fn grade_coords(&self, y: &[i64]) -> i128 {
        self.facets.iter().map(|a| dot_i128(a, y)).sum()
    }
}

fn adjugate(m: &IntMatrix) -> Result<IntMatrix> {
    let k = m.rows();
    let mut adj = IntMatrix::zeros(k, k);
    if k == 1 {
        adj.set(0, 0, BigInt::from(1));
        return Ok(adj);
    }
    for i in 0..k {
        for j in 0..k {
            let rows: Vec<usize> = (0..k).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..k).filter(|&c| c != i).collect();
            let minor = m.submatrix(&rows, &cols).det()?;
            adj.set(i, j, if (i + j) % 2 == 0 { minor } else { -minor });
        }
    }
    Ok(adj)
}

/// Nonzero lattice points of the half-open parallelepiped spanned by the
/// columns of `m` (square, nonsingular).
fn parallelepiped_points(m: &IntMatrix, budget: &Budget) -> Result<Vec<Point>> {
    let det = m.det()?;
    let volume = det.abs().to_u64().ok_or(Error::Overflow("parallelepiped volume"))?;
    budget.check_points(volume as usize, "parallelepiped enumeration")?;
    let snf = smith_normal_form(m);
    let u_inv = unimodular_inverse(&snf.u)?;
    let adj = adjugate(m)?;
    let k = m.rows();
    let divisors: Vec<u64> = snf
        .elementary_divisors
        .iter()
        .map(|s| s.to_u64().ok_or(Error::Overflow("elementary divisor")))
        .collect::<Result<_>>()?;
    let sign = if det.is_negative() { BigInt::from(-1) } else { BigInt::from(1) };
    let den = det.abs();
    let mut out = Vec::new();
    let mut c = vec![0u64; k];
    loop {
        if c.iter().any(|&x| x != 0) {
            let cb: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
            let y = u_inv.mul_vec(&cb)?;
            let lambda: Vec<BigInt> = adj.mul_vec(&y)?.into_iter().map(|v| (v * &sign).mod_floor(&den)).collect();
            let x = m.mul_vec(&lambda)?;
            let mut p = Vec::with_capacity(k);
            for v in x {
                debug_assert!(v.is_multiple_of(&den));
                p.push((v / &den).to_i64().ok_or(Error::Overflow("parallelepiped point"))?);
            }
            if p.iter().any(|&v| v != 0) {
                out.push(p);
            }
        }
        let mut i = 0;
        loop {
            if i == k {
                return Ok(out);
            }
            c[i] += 1;
            if c[i] < divisors[i] {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// Hilbert basis of a pointed cone.
///
/// Every Hilbert basis element lies in some simplicial cone spanned by
/// linearly independent extreme rays, where it is either a ray or a point of
/// the half-open fundamental parallelepiped. These candidates are scanned by
/// increasing grade, keeping those not reducible by an element kept earlier.
pub fn hilbert_basis(cone: &Cone, budget: &Budget) -> Result<HilbertBasis> {
    let k = cone.dim();
    if k == 0 {
        return Ok(HilbertBasis { elements: Vec::new() });
    }
    let mut candidates: BTreeSet<Point> = cone.rays.iter().cloned().collect();
    for subset in combinations(cone.rays.len(), k) {
        budget.check_time("Hilbert basis")?;
        let cols: Vec<Point> = subset.iter().map(|&i| cone.rays[i].clone()).collect();
        let m = IntMatrix::from_columns(&cols, k)?;
        if m.det()?.is_zero() {
            continue;
        }
        candidates.extend(parallelepiped_points(&m, budget)?);
        budget.check_points(candidates.len(), "Hilbert basis candidates")?;
    }
    let mut graded: Vec<(i128, Point)> = candidates.into_iter().map(|y| (cone.grade_coords(&y), y)).collect();
    graded.sort();
    let mut basis: Vec<Point> = Vec::new();
    for (_, y) in graded {
        let reducible = basis.iter().any(|b| {
            let rest: Point = y.iter().zip(b).map(|(a, c)| a - c).collect();
            cone.contains_coords(&rest)
        });
        if !reducible {
            basis.push(y);
        }
    }
    let mut elements: Vec<Point> = basis.iter().map(|y| cone.frame.lift_linear(y)).collect();
    elements.sort();
    Ok(HilbertBasis { elements })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hb(gens: &[Point]) -> Vec<Point> {
        hilbert_basis(&Cone::new(gens).unwrap(), &Budget::default()).unwrap().elements
    }

    #[test]
    fn orthant() {
        assert_eq!(hb(&[vec![1, 0], vec![0, 1]]), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn two_dimensional_example() {
        assert_eq!(hb(&[vec![1, 0], vec![1, 2]]), vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn redundant_generators_and_rays() {
        let cone = Cone::new(&[vec![2, 0], vec![1, 1], vec![0, 3], vec![1, 2]]).unwrap();
        assert_eq!(cone.rays(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn non_pointed_rejected() {
        assert!(matches!(Cone::new(&[vec![1, 0], vec![-1, 0], vec![0, 1]]), Err(Error::NotPointed)));
    }

    #[test]
    fn lower_dimensional_cone() {
        // cone((1,0,1),(1,2,1)) lives in the plane x_1 = x_3
        assert_eq!(hb(&[vec![1, 0, 1], vec![1, 2, 1]]), vec![vec![1, 0, 1], vec![1, 1, 1], vec![1, 2, 1]]);
    }

    #[test]
    fn reeve_cone() {
        // cone over the Reeve tetrahedron with height 3: basis includes interior points
        let gens = vec![vec![0, 0, 0, 1], vec![1, 0, 0, 1], vec![0, 1, 0, 1], vec![1, 1, 3, 1]];
        let basis = hb(&gens);
        assert!(basis.contains(&vec![1, 1, 1, 2]));
        assert!(basis.contains(&vec![1, 1, 2, 2]));
        assert_eq!(basis.len(), 6);
    }
}
