//! Hermite and Smith normal forms over the integers.
//!
//! Conventions, fixed once:
//!
//! * Hermite form is column-style: `M * U = H` with `U` unimodular. The first
//!   `rank` columns of `H` are nonzero and the remaining ones are zero. Pivot
//!   rows increase strictly from left to right, every pivot is positive, and
//!   in a pivot row the entries left of the pivot lie in `[0, pivot)`.
//! * Smith form: `U * M * V = S` with `U`, `V` unimodular, `S` diagonal with
//!   nonnegative entries `d_1 | d_2 | ... | d_r` followed by zeros.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
}

impl HermiteForm {
    /// Basis of the column lattice of the input: the nonzero columns of `H`.
    pub fn basis(&self) -> IntMatrix {
        self.h.leading_columns(self.rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub elementary_divisors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.elementary_divisors.len()
    }

    /// True when every elementary divisor is one, i.e. the column lattice is
    /// saturated in its rational span.
    pub fn is_saturated(&self) -> bool {
        self.elementary_divisors.iter().all(|d| d.is_one())
    }
}

pub fn hermite_normal_form(m: &IntMatrix) -> HermiteForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(cols);
    let mut pc = 0;
    for row in 0..rows {
        if pc == cols {
            break;
        }
        loop {
            let pivot = (pc..cols)
                .filter(|&j| !h.get(row, j).is_zero())
                .min_by(|&a, &b| h.get(row, a).abs().cmp(&h.get(row, b).abs()));
            let Some(j_min) = pivot else { break };
            h.swap_cols(pc, j_min);
            u.swap_cols(pc, j_min);
            let mut clean = true;
            for j in pc + 1..cols {
                if h.get(row, j).is_zero() {
                    continue;
                }
                let q = h.get(row, j).div_floor(h.get(row, pc));
                let neg_q = -q;
                h.add_col_multiple(j, pc, &neg_q);
                u.add_col_multiple(j, pc, &neg_q);
                if !h.get(row, j).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h.get(row, pc).is_zero() {
            continue;
        }
        if h.get(row, pc).is_negative() {
            h.negate_col(pc);
            u.negate_col(pc);
        }
        let p = h.get(row, pc).clone();
        for j in 0..pc {
            let q = h.get(row, j).div_floor(&p);
            if !q.is_zero() {
                let neg_q = -q;
                h.add_col_multiple(j, pc, &neg_q);
                u.add_col_multiple(j, pc, &neg_q);
            }
        }
        pc += 1;
    }
    HermiteForm { h, u, rank: pc }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((i0, j0)) = min_abs_entry(&s, t) else { break };
        s.swap_rows(t, i0);
        u.swap_rows(t, i0);
        s.swap_cols(t, j0);
        v.swap_cols(t, j0);
        loop {
            let mut residue = false;
            for i in t + 1..rows {
                if s.get(i, t).is_zero() {
                    continue;
                }
                let neg_q = -s.get(i, t).div_floor(s.get(t, t));
                s.add_row_multiple(i, t, &neg_q);
                u.add_row_multiple(i, t, &neg_q);
                residue |= !s.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if s.get(t, j).is_zero() {
                    continue;
                }
                let neg_q = -s.get(t, j).div_floor(s.get(t, t));
                s.add_col_multiple(j, t, &neg_q);
                v.add_col_multiple(j, t, &neg_q);
                residue |= !s.get(t, j).is_zero();
            }
            if residue {
                // a remainder smaller than the pivot survived; move it in
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !s.get(i, t).is_zero() && s.get(i, t).abs() < s.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !s.get(t, j).is_zero() && s.get(t, j).abs() < s.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                s.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
                s.swap_cols(t, best.1);
                v.swap_cols(t, best.1);
                continue;
            }
            let pivot = s.get(t, t).clone();
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !s.get(i, j).is_multiple_of(&pivot));
            match offender {
                Some((i, _)) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    let elementary_divisors = (0..t).map(|i| s.get(i, i).clone()).collect();
    SmithForm { s, u, v, elementary_divisors }
}

fn min_abs_entry(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let x = s.get(i, j);
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < s.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Inverse of a unimodular matrix, computed through its Hermite form.
pub fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { expected: m.rows(), got: m.cols() });
    }
    let hnf = hermite_normal_form(m);
    if hnf.h != IntMatrix::identity(m.rows()) {
        return Err(Error::invalid("matrix is not unimodular"));
    }
    Ok(hnf.u)
}
