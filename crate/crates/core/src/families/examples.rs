//! Small named polytopes: Ogata's `P_2`, the `Q_k` family, unit simplices and cubes.

use crate::error::{Error, Result};
use crate::polytope::{pyramid, LatticePolytope, Point};

/// Ogata's four-dimensional polytope `P_2` from its ten listed points.
pub fn build_ogata_p2() -> LatticePolytope {
    let points = vec![
        vec![0, 0, 0, 0],
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        vec![1, 1, 1, 2],
        vec![0, 0, 0, 1],
        vec![1, 0, 0, 1],
        vec![0, 1, 0, 1],
        vec![0, 0, 1, 1],
        vec![1, 1, 1, 3],
    ];
    LatticePolytope::new(4, points).expect("fixed point list is well formed")
}

/// `(m, 1, 1, 1, m + 1)`, the homogenized hole family of `P_2`.
pub fn ogata_hole(m: i64) -> Point {
    vec![m, 1, 1, 1, m + 1]
}

/// `Q_k = conv(0, e_1, e_2, e_3, e_1+e_3, e_2+e_3, e_1+e_2+k e_3, e_1+e_2+(k+1) e_3)`.
pub fn build_qk(k: u32) -> Result<LatticePolytope> {
    if k < 1 {
        return Err(Error::invalid("k must be >= 1"));
    }
    let k = k as i64;
    let points = vec![
        vec![0, 0, 0],
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![0, 0, 1],
        vec![1, 0, 1],
        vec![0, 1, 1],
        vec![1, 1, k],
        vec![1, 1, k + 1],
    ];
    LatticePolytope::new(3, points)
}

/// The pyramid over `Q_{h+3}`.
pub fn build_qk_pyramid(k: u32) -> Result<LatticePolytope> {
    pyramid(&build_qk(k)?)
}

/// `conv(0, e_1, ..., e_n)`.
pub fn unit_simplex(n: usize) -> Result<LatticePolytope> {
    if n == 0 {
        return Err(Error::invalid("dimension must be >= 1"));
    }
    let mut points = vec![vec![0; n]];
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        points.push(e);
    }
    LatticePolytope::new(n, points)
}

/// `[0,1]^n`.
pub fn unit_cube(n: usize) -> Result<LatticePolytope> {
    if n == 0 || n > 16 {
        return Err(Error::invalid("dimension must be in 1..=16"));
    }
    let points = (0..1u32 << n)
        .map(|mask| (0..n).map(|i| i64::from(mask >> i & 1)).collect())
        .collect();
    LatticePolytope::new(n, points)
}
