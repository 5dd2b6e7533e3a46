//! The polytope `P_{h,d}`, its facet system and the degree-two holes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::polytope::{HRep, Halfspace, LatticePolytope, Point};

/// Parameters `h >= 1`, `d >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PhdSpec {
    pub h: u32,
    pub d: usize,
}

impl PhdSpec {
    pub fn new(h: u32, d: usize) -> Result<Self> {
        if h < 1 {
            return Err(Error::invalid(format!("h must be >= 1 (got {h})")));
        }
        if d < 3 {
            return Err(Error::invalid(format!("d must be >= 3 (got {d})")));
        }
        Ok(PhdSpec { h, d })
    }

    fn validate(&self) -> Result<()> {
        Self::new(self.h, self.d).map(|_| ())
    }

    /// Number of facet-defining hyperplanes listed for `P_{h,d}`: `8(d-2)+2`.
    pub fn listed_facet_count(&self) -> usize {
        8 * (self.d - 2) + 2
    }

    /// Columns of the `F_0` configuration: `2(d-2)+3h+1`.
    pub fn configuration_size(&self) -> usize {
        2 * (self.d - 2) + 3 * self.h as usize + 1
    }

    fn unit(&self, i: usize) -> Point {
        let mut v = vec![0; self.d];
        v[i - 1] = 1;
        v
    }

    /// `a e_1 + b (e_2 + ... + e_{d-1}) + c e_d`
    fn combo(&self, a: i64, b: i64, c: i64) -> Point {
        let mut v = vec![b; self.d];
        v[0] = a;
        v[self.d - 1] = c;
        v
    }

    /// `u_1, ..., u_10` in order.
    pub fn u_points(&self) -> Vec<Point> {
        let h = self.h as i64;
        vec![
            self.combo(0, 0, 0),
            self.combo(0, 0, 1),
            self.combo(0, 1, 0),
            self.combo(0, h, h),
            self.combo(0, h - 1, h),
            self.combo(0, h, h - 1),
            self.combo(1, 0, 4),
            self.combo(1, 0, 5),
            self.combo(1, 1, 0),
            self.combo(1, 1, 1),
        ]
    }

    /// `v_i = e_i` for `i = 2..d-1`.
    pub fn v_point(&self, i: usize) -> Point {
        self.unit(i)
    }

    /// `v_i' = e_i + e_d` for `i = 2..d-1`.
    pub fn v_prime_point(&self, i: usize) -> Point {
        let mut v = self.unit(i);
        v[self.d - 1] = 1;
        v
    }

    /// `u_{1,j} = j (e_2 + ... + e_{d-1}) + j e_d`, `j = 0..h`.
    pub fn u1(&self, j: i64) -> Point {
        self.combo(0, j, j)
    }

    /// `u_{2,j} = j (e_2 + ... + e_{d-1}) + (j + 1) e_d`, `j = 0..h-1`.
    pub fn u2(&self, j: i64) -> Point {
        self.combo(0, j, j + 1)
    }

    /// `u_{3,j} = (j + 1)(e_2 + ... + e_{d-1}) + j e_d`, `j = 0..h-1`.
    pub fn u3(&self, j: i64) -> Point {
        self.combo(0, j + 1, j)
    }

    /// `u_j' = e_1 + j (e_2 + ... + e_{d-1}) + (j + 2) e_d`, `j = 1..h`.
    pub fn hole_base(&self, j: i64) -> Point {
        self.combo(1, j, j + 2)
    }
}

/// `conv({u_1, ..., u_10} ∪ {v_i, v_i'})`, points deduplicated.
pub fn build_phd(spec: PhdSpec) -> Result<LatticePolytope> {
    spec.validate()?;
    let mut points = spec.u_points();
    for i in 2..spec.d {
        points.push(spec.v_point(i));
        points.push(spec.v_prime_point(i));
    }
    LatticePolytope::new(spec.d, points)
}

fn row(spec: &PhdSpec, i: usize, x1: i64, xi: i64, others: i64, xd: i64) -> Vec<i64> {
    let mut a = vec![others; spec.d];
    a[0] = x1;
    a[spec.d - 1] = xd;
    a[i - 1] = xi;
    a
}

/// The listed hyperplanes `H_0, H_1, H_{2,i}, ..., H_{9,i}` as inequalities
/// `a·x <= b`. `H_0` and `H_1` bound from below (`>=`) and are stored
/// negated; the others are stored as given.
pub fn build_expected_hrep(spec: PhdSpec) -> Result<HRep> {
    spec.validate()?;
    let d = spec.d as i64;
    let h = spec.h as i64;
    let mut rows = Vec::with_capacity(spec.listed_facet_count());
    let mut e1 = vec![0; spec.d];
    e1[0] = -1;
    rows.push(Halfspace::new(e1, 0).with_label("H0: x_1 >= 0, negated"));
    let mut ed = vec![0; spec.d];
    ed[spec.d - 1] = -1;
    rows.push(Halfspace::new(ed, 0).with_label("H1: x_d >= 0, negated"));
    for i in 2..spec.d {
        let families: [(u8, Vec<i64>, i64); 8] = [
            (2, row(&spec, i, 0, -1, 0, 0), 0),
            (3, row(&spec, i, 0, -(d - 4), 1, -1), 1),
            (4, row(&spec, i, 4, -4, 0, -1), 0),
            (5, row(&spec, i, -4, -1, 0, 1), 1),
            (6, row(&spec, i, 1, -(d - 3), 1, 0), 1),
            (7, row(&spec, i, 5 * h - 5, -((d - 3) * (5 * h - 1) - 4), 5 * h - 1, 1), 5 * h),
            (8, row(&spec, i, h - 5, -(d - 3) * (h - 1), h - 1, 1), h),
            (9, row(&spec, i, h - 1, -((d - 3) * h - 1), h, 0), h),
        ];
        for (j, normal, offset) in families {
            rows.push(Halfspace::new(normal, offset).with_label(format!("H{j},{i}: <=")));
        }
    }
    Ok(HRep::new(rows))
}

/// Label of the listed hyperplane family `H_{j,i}`, e.g. `"H7,3"`.
pub fn hyperplane_label(j: u8, i: usize) -> String {
    format!("H{j},{i}")
}

/// Finds the listed halfspace `H_{j,i}` (or `H_0`, `H_1` with `i` ignored).
pub fn expected_halfspace(spec: PhdSpec, j: u8, i: usize) -> Result<Halfspace> {
    let hrep = build_expected_hrep(spec)?;
    let prefix = if j <= 1 { format!("H{j}:") } else { format!("{}:", hyperplane_label(j, i)) };
    hrep.halfspaces
        .into_iter()
        .find(|h| h.label.as_deref().is_some_and(|l| l.starts_with(&prefix)))
        .ok_or_else(|| Error::invalid(format!("no listed hyperplane {prefix}")))
}

/// The `d x (2(d-2)+3h+1)` matrix with columns
/// `v_2*, v_2'*, ..., v_{d-1}*, v_{d-1}'*, u_{3,0..h-1}*, u_{2,0..h-1}*, u_{1,0..h}*`
/// where `v* = e_1 + v`.
pub fn build_f0_configuration(spec: PhdSpec) -> Result<IntMatrix> {
    spec.validate()?;
    let star = |mut v: Point| {
        v[0] += 1;
        v
    };
    let h = spec.h as i64;
    let mut columns = Vec::with_capacity(spec.configuration_size());
    for i in 2..spec.d {
        columns.push(star(spec.v_point(i)));
        columns.push(star(spec.v_prime_point(i)));
    }
    columns.extend((0..h).map(|j| star(spec.u3(j))));
    columns.extend((0..h).map(|j| star(spec.u2(j))));
    columns.extend((0..=h).map(|j| star(spec.u1(j))));
    IntMatrix::from_columns(&columns, spec.d)
}

/// `{(u_j', 2) : j = 1..h}` in canonical order.
pub fn expected_holes(spec: PhdSpec) -> Result<Vec<Point>> {
    spec.validate()?;
    let mut holes: Vec<Point> = (1..=spec.h as i64)
        .map(|j| {
            let mut v = spec.hole_base(j);
            v.push(2);
            v
        })
        .collect();
    holes.sort();
    Ok(holes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(PhdSpec::new(0, 3).is_err());
        assert!(PhdSpec::new(1, 2).is_err());
        assert!(PhdSpec::new(1, 3).is_ok());
    }

    #[test]
    fn p13_dedupes_to_eight_points() {
        // u_1..u_10, v_2, v_2' for (1,3):
        // 000 001 010 011 001 010 104 105 110 111 010 011 -> 8 distinct
        let p = build_phd(PhdSpec::new(1, 3).unwrap()).unwrap();
        assert_eq!(p.points().len(), 8);
    }

    #[test]
    fn u4_u5_u6_for_h2_d4() {
        let u = PhdSpec::new(2, 4).unwrap().u_points();
        assert_eq!(u[3], vec![0, 2, 2, 2]);
        assert_eq!(u[4], vec![0, 1, 1, 2]);
        assert_eq!(u[5], vec![0, 2, 2, 1]);
        assert_eq!(u[6], vec![1, 0, 0, 4]);
        assert_eq!(u[7], vec![1, 0, 0, 5]);
    }

    #[test]
    fn listed_row_counts() {
        assert_eq!(build_expected_hrep(PhdSpec::new(2, 3).unwrap()).unwrap().len(), 10);
        assert_eq!(build_expected_hrep(PhdSpec::new(2, 5).unwrap()).unwrap().len(), 26);
    }

    #[test]
    fn h2_row_is_nonnegativity() {
        let spec = PhdSpec::new(2, 4).unwrap();
        let h = expected_halfspace(spec, 2, 3).unwrap();
        assert_eq!(h.normal, vec![0, 0, -1, 0]);
        assert_eq!(h.offset, 0);
        let h7 = expected_halfspace(spec, 7, 2).unwrap();
        // (5h-5) x1 - ((d-3)(5h-1)-4) x_i + (5h-1) sum + x_d <= 5h, h=2 d=4
        assert_eq!(h7.normal, vec![5, -5, 9, 1]);
        assert_eq!(h7.offset, 10);
    }

    #[test]
    fn configuration_shape() {
        let a = build_f0_configuration(PhdSpec::new(2, 4).unwrap()).unwrap();
        assert_eq!(a.cols(), 11);
        assert_eq!(a.rows(), 4);
        assert!(a.row(0).iter().all(|x| *x == 1.into()));
        // last column u_{1,h}* = e_1 + h(e_2 + e_3) + h e_4
        assert_eq!(a.to_i64_columns().unwrap()[10], vec![1, 2, 2, 2]);
    }

    #[test]
    fn holes_formula() {
        assert_eq!(expected_holes(PhdSpec::new(1, 3).unwrap()).unwrap(), vec![vec![1, 1, 3, 2]]);
        assert_eq!(
            expected_holes(PhdSpec::new(2, 3).unwrap()).unwrap(),
            vec![vec![1, 1, 3, 2], vec![1, 2, 4, 2]]
        );
        assert_eq!(
            expected_holes(PhdSpec::new(2, 4).unwrap()).unwrap(),
            vec![vec![1, 1, 1, 3, 2], vec![1, 2, 2, 4, 2]]
        );
    }

    #[test]
    fn listed_system_matches_double_description_for_h_at_least_two() {
        for h in 2..=3 {
            for d in 3..=5 {
                let spec = PhdSpec::new(h, d).unwrap();
                let computed = build_phd(spec).unwrap();
                let expected = build_expected_hrep(spec).unwrap();
                assert!(computed.hrep().unwrap().same_facets(&expected), "(h,d)=({h},{d})");
            }
        }
    }

    #[test]
    fn lattice_point_count_h3_d4() {
        let p = build_phd(PhdSpec::new(3, 4).unwrap()).unwrap();
        assert_eq!(p.lattice_points(1).unwrap().len(), 18);
    }
}
