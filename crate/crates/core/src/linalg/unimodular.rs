use num_traits::{One, Signed, ToPrimitive, Zero};

use super::lattice::LatticeFrame;
use super::matrix::IntMatrix;
use super::normal_forms::smith_normal_form;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::util::{binomial, combinations};

/// True iff the points are the vertices of a simplex whose edge vectors form
/// a basis of `aff(points) ∩ ℤ^N` (normalized volume one).
pub fn is_unimodular_simplex(points: &[Vec<i64>]) -> bool {
    let Some(first) = points.first() else { return false };
    let n = first.len();
    if points.iter().any(|p| p.len() != n) {
        return false;
    }
    let edges: Vec<Vec<i64>> =
        points[1..].iter().map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect()).collect();
    let Ok(m) = IntMatrix::from_columns(&edges, n) else { return false };
    let snf = smith_normal_form(&m);
    snf.rank() == edges.len() && snf.is_saturated()
}

/// Normalized volume of a lattice simplex relative to its own affine lattice;
/// zero for affinely dependent point sets.
pub fn normalized_simplex_volume(points: &[Vec<i64>]) -> Result<u64> {
    let frame = LatticeFrame::saturated(points)?;
    if frame.dim() + 1 != points.len() {
        return Ok(0);
    }
    let coords: Vec<Vec<i64>> = points
        .iter()
        .map(|p| frame.coordinates(p).expect("point lies in its own affine lattice"))
        .collect();
    let k = frame.dim();
    let edges: Vec<Vec<i64>> = coords[1..]
        .iter()
        .map(|c| c.iter().zip(&coords[0]).map(|(a, b)| a - b).collect())
        .collect();
    let det = IntMatrix::from_columns(&edges, k)?.det()?;
    det.abs().to_u64().ok_or(Error::Overflow("simplex volume"))
}

/// Exhaustive total-unimodularity test: every square submatrix must have
/// determinant in {-1, 0, 1}. Matrices with entries outside {-1, 0, 1} are
/// rejected immediately; matrices with more square submatrices than
/// `budget.max_minors` are refused.
pub fn is_totally_unimodular(m: &IntMatrix, budget: &Budget) -> Result<bool> {
    let small = (0..m.rows()).all(|i| m.row(i).iter().all(|x| x.abs() <= One::one()));
    if !small {
        return Ok(false);
    }
    let (r, c) = (m.rows() as u64, m.cols() as u64);
    let mut work = 0u64;
    for k in 1..=r.min(c) {
        work = work.saturating_add(binomial(r, k).saturating_mul(binomial(c, k)));
    }
    if work > budget.max_minors {
        return Err(Error::Budget(format!(
            "total unimodularity check needs {work} minors (limit {})",
            budget.max_minors
        )));
    }
    for k in 2..=m.rows().min(m.cols()) {
        let row_sets = combinations(m.rows(), k);
        let col_sets = combinations(m.cols(), k);
        for rows in &row_sets {
            for cols in &col_sets {
                let det = m.submatrix(rows, cols).det()?;
                if !(det.is_zero() || det.abs().is_one()) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(d: usize, i: usize) -> Vec<i64> {
        let mut v = vec![0; d];
        v[i] = 1;
        v
    }

    #[test]
    fn standard_simplex_is_unimodular() {
        let mut pts = vec![vec![0; 4]];
        pts.extend((0..3).map(|i| unit(4, i)));
        assert!(is_unimodular_simplex(&pts));
    }

    #[test]
    fn stretched_simplex_is_not() {
        // {0, e1, e2, 2 e3}: simplex of normalized volume 2
        let pts = vec![vec![0, 0, 0], unit(3, 0), unit(3, 1), vec![0, 0, 2]];
        assert!(!is_unimodular_simplex(&pts));
        assert_eq!(normalized_simplex_volume(&pts).unwrap(), 2);
    }

    #[test]
    fn dependent_points_are_not_a_simplex() {
        let pts = vec![vec![0, 0], vec![1, 1], vec![2, 2]];
        assert!(!is_unimodular_simplex(&pts));
        assert!(!is_unimodular_simplex(&[]));
    }

    #[test]
    fn tu_examples() {
        let budget = Budget::default();
        assert!(is_totally_unimodular(&IntMatrix::identity(4), &budget).unwrap());
        let bad = IntMatrix::from_rows(&[vec![1, 1], vec![-1, 1]], 2).unwrap();
        assert!(!is_totally_unimodular(&bad, &budget).unwrap());
        let big = IntMatrix::from_rows(&[vec![2, 0]], 2).unwrap();
        assert!(!is_totally_unimodular(&big, &budget).unwrap());
    }

    #[test]
    fn tu_budget_is_enforced() {
        let budget = Budget { max_minors: 10, ..Budget::default() };
        assert!(is_totally_unimodular(&IntMatrix::identity(4), &budget).unwrap_err().is_budget());
    }
}
