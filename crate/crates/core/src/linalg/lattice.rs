//! Affine lattice frames: an origin plus a basis of a sublattice, with exact
//! conversion between ambient points and frame coordinates.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::matrix::{to_big, IntMatrix};
use super::normal_forms::{hermite_normal_form, smith_normal_form, unimodular_inverse, SmithForm};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeFrame {
    origin: Vec<i64>,
    basis: IntMatrix,
    snf: SmithForm,
}

impl LatticeFrame {
    /// `basis` holds the lattice generators as columns and must have full
    /// column rank.
    pub fn from_basis(origin: Vec<i64>, basis: IntMatrix) -> Result<Self> {
        if basis.rows() != origin.len() {
            return Err(Error::DimensionMismatch { expected: origin.len(), got: basis.rows() });
        }
        let snf = smith_normal_form(&basis);
        if snf.rank() != basis.cols() {
            return Err(Error::invalid("frame basis is not linearly independent"));
        }
        Ok(LatticeFrame { origin, basis, snf })
    }

    pub fn standard(n: usize) -> Self {
        Self::from_basis(vec![0; n], IntMatrix::identity(n)).expect("identity basis")
    }

    /// Frame of `aff(points) ∩ ℤ^N`, based at the first point.
    pub fn saturated(points: &[Vec<i64>]) -> Result<Self> {
        let (origin, edges) = edge_matrix(points)?;
        let snf = smith_normal_form(&edges);
        let rank = snf.rank();
        let u_inv = unimodular_inverse(&snf.u)?;
        Self::from_basis(origin, u_inv.leading_columns(rank))
    }

    /// Frame of the affine lattice generated by the points themselves, based
    /// at the first point.
    pub fn generated(points: &[Vec<i64>]) -> Result<Self> {
        let (origin, edges) = edge_matrix(points)?;
        let hnf = hermite_normal_form(&edges);
        Self::from_basis(origin, hnf.basis())
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.origin.len()
    }

    pub fn origin(&self) -> &[i64] {
        &self.origin
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Index of the basis lattice inside `span ∩ ℤ^N` is one.
    pub fn is_saturated(&self) -> bool {
        self.snf.is_saturated()
    }

    /// Origin zero and basis the identity: coordinates are ambient points.
    pub fn is_standard(&self) -> bool {
        self.origin.iter().all(|&x| x == 0) && self.basis == IntMatrix::identity(self.ambient_dim())
    }

    /// Coordinates of a vector in the basis, if it lies in the lattice.
    pub fn linear_coordinates(&self, v: &[i64]) -> Option<Vec<i64>> {
        if v.len() != self.ambient_dim() {
            return None;
        }
        let z = self.snf.u.mul_vec(&to_big(v)).ok()?;
        let k = self.dim();
        if z[k..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut scaled = Vec::with_capacity(k);
        for (zi, si) in z.iter().zip(&self.snf.elementary_divisors) {
            let (q, r) = zi.div_rem(si);
            if !r.is_zero() {
                return None;
            }
            scaled.push(q);
        }
        let y = self.snf.v.mul_vec(&scaled).ok()?;
        y.iter().map(|x| x.to_i64()).collect()
    }

    pub fn coordinates(&self, x: &[i64]) -> Option<Vec<i64>> {
        if x.len() != self.ambient_dim() {
            return None;
        }
        let shifted: Vec<i64> = x.iter().zip(&self.origin).map(|(a, b)| a - b).collect();
        self.linear_coordinates(&shifted)
    }

    pub fn lift_linear(&self, y: &[i64]) -> Vec<i64> {
        let v = self.basis.mul_vec(&to_big(y)).expect("frame coordinate length");
        v.iter().map(|x| x.to_i64().expect("lifted coordinate fits i64")).collect()
    }

    pub fn lift(&self, y: &[i64]) -> Vec<i64> {
        self.lift_linear(y).iter().zip(&self.origin).map(|(a, b)| a + b).collect()
    }

    /// Integer `k x N` matrix `W` with `W * basis = I`; exists exactly when
    /// the frame is saturated.
    pub fn coordinate_matrix(&self) -> Option<IntMatrix> {
        if !self.is_saturated() {
            return None;
        }
        let rows: Vec<usize> = (0..self.dim()).collect();
        let cols: Vec<usize> = (0..self.ambient_dim()).collect();
        let top = self.snf.u.submatrix(&rows, &cols);
        Some(self.snf.v.mul(&top).expect("shapes agree"))
    }

    /// Primitive integer equations `a·x = c` cutting out the affine span.
    pub fn equations(&self) -> Result<Vec<(Vec<i64>, i64)>> {
        let n = self.ambient_dim();
        let mut out = Vec::new();
        for i in self.dim()..n {
            let row: Vec<i64> = self
                .snf
                .u
                .row(i)
                .iter()
                .map(|x| x.to_i64().ok_or(Error::Overflow("frame equation")))
                .collect::<Result<_>>()?;
            let c = row.iter().zip(&self.origin).map(|(a, b)| a * b).sum();
            out.push((row, c));
        }
        Ok(out)
    }
}

fn edge_matrix(points: &[Vec<i64>]) -> Result<(Vec<i64>, IntMatrix)> {
    let origin = points
        .first()
        .cloned()
        .ok_or_else(|| Error::invalid("lattice frame needs at least one point"))?;
    let n = origin.len();
    let mut edges = Vec::with_capacity(points.len().saturating_sub(1));
    for p in &points[1..] {
        if p.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: p.len() });
        }
        edges.push(p.iter().zip(&origin).map(|(a, b)| a - b).collect::<Vec<i64>>());
    }
    Ok((origin, IntMatrix::from_columns(&edges, n)?))
}

/// Points expressed in a basis of `aff(points) ∩ ℤ^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SublatticeCoordinates {
    pub origin: Vec<i64>,
    pub basis: IntMatrix,
    pub coords: Vec<Vec<i64>>,
    pub frame: LatticeFrame,
}

impl SublatticeCoordinates {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

pub fn sublattice_coordinates(points: &[Vec<i64>]) -> Result<SublatticeCoordinates> {
    let frame = LatticeFrame::saturated(points)?;
    let coords = points
        .iter()
        .map(|p| {
            frame
                .coordinates(p)
                .ok_or_else(|| Error::LatticeMismatch("point outside its own affine lattice".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SublatticeCoordinates {
        origin: frame.origin().to_vec(),
        basis: frame.basis().clone(),
        coords,
        frame,
    })
}
