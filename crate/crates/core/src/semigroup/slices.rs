//! Lattice points of the slices `nP_{h,d} ∩ {x_1 = k}` as sumsets of the
//! two extreme slices `P_0 = {x_1 = 0}` and `P_1 = {x_1 = 1}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::families::{build_phd, expected_holes, PhdSpec};
use crate::polytope::Point;

/// `(n, k)`: the slice of `nP` at `x_1 = k`.
pub type SliceCase = (u32, u32);

/// Slices at low dilation where the sumset decomposition is checked.
pub const SLICE_CASES: [SliceCase; 4] = [(2, 1), (3, 1), (3, 2), (4, 1)];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceCheck {
    pub n: u32,
    pub k: u32,
    pub holds: bool,
    pub slice_points: usize,
    pub sumset_points: usize,
    /// Slice points outside the sumset (the allowed exceptions included).
    pub outside_sumset: Vec<Point>,
    /// Expected points that are not slice points.
    pub unexpected: Vec<Point>,
    /// Allowed exceptions: the degree-two holes when `(n, k) = (2, 1)`.
    pub exceptions: Vec<Point>,
}

/// `{a_1 + ... + a_{n-k} + b_1 + ... + b_k : a_i ∈ P_0 ∩ ℤ^d, b_j ∈ P_1 ∩ ℤ^d}`.
pub fn slice_sumset(p0: &[Point], p1: &[Point], n: u32, k: u32) -> BTreeSet<Point> {
    let d = p0.first().or(p1.first()).map_or(0, |p| p.len());
    let mut acc: BTreeSet<Point> = BTreeSet::from([vec![0; d]]);
    for step in 0..n {
        let summands = if step < n - k { p0 } else { p1 };
        acc = acc
            .iter()
            .flat_map(|s| summands.iter().map(move |a| s.iter().zip(a).map(|(x, y)| x + y).collect::<Point>()))
            .collect();
    }
    acc
}

/// Recomputes each slice and compares it with the sumset, allowing the
/// points `u_j'` as the only extra slice points in case `(2, 1)`.
pub fn verify_slice_decompositions(spec: PhdSpec, cases: &[SliceCase]) -> Result<Vec<SliceCheck>> {
    let p = build_phd(spec)?;
    let p0 = p.slice(1, 0, 0)?;
    let p1 = p.slice(1, 1, 0)?;
    let holes: Vec<Point> = expected_holes(spec)?
        .into_iter()
        .map(|mut x| {
            x.pop();
            x
        })
        .collect();
    let mut out = Vec::with_capacity(cases.len());
    for &(n, k) in cases {
        let slice: BTreeSet<Point> = p.slice(n, k as i64, 0)?.into_iter().collect();
        let sumset = slice_sumset(&p0, &p1, n, k);
        let exceptions: Vec<Point> = if (n, k) == (2, 1) { holes.clone() } else { Vec::new() };
        let mut expected = sumset.clone();
        expected.extend(exceptions.iter().cloned());
        let outside_sumset: Vec<Point> = slice.difference(&sumset).cloned().collect();
        let unexpected: Vec<Point> = expected.difference(&slice).cloned().collect();
        let holds = unexpected.is_empty() && slice.difference(&expected).next().is_none();
        out.push(SliceCheck {
            n,
            k,
            holds,
            slice_points: slice.len(),
            sumset_points: sumset.len(),
            outside_sumset,
            unexpected,
            exceptions,
        });
    }
    Ok(out)
}
