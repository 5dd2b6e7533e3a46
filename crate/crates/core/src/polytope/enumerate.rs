//! Lattice points of a dilated H-polytope inside a box, by coordinate-wise
//! recursion. At each level the admissible interval of the next coordinate is
//! narrowed by every inequality, using the smallest value the remaining
//! coordinates can contribute inside the box.

use num_integer::Integer;

use crate::budget::Budget;
use crate::error::Result;

pub(crate) struct BoxEnumerator<'a> {
    rows: &'a [(Vec<i64>, i64)],
    dilation: i128,
    lo: &'a [i64],
    hi: &'a [i64],
    // rest_min[f][k]: minimum of sum_{j >= k} a_fj x_j over the box
    rest_min: Vec<Vec<i128>>,
}

impl<'a> BoxEnumerator<'a> {
    pub(crate) fn new(rows: &'a [(Vec<i64>, i64)], dilation: i64, lo: &'a [i64], hi: &'a [i64]) -> Self {
        let n = lo.len();
        let rest_min = rows
            .iter()
            .map(|(a, _)| {
                let mut acc = vec![0i128; n + 1];
                for k in (0..n).rev() {
                    let c = a[k] as i128;
                    acc[k] = acc[k + 1] + (c * lo[k] as i128).min(c * hi[k] as i128);
                }
                acc
            })
            .collect();
        BoxEnumerator { rows, dilation: dilation as i128, lo, hi, rest_min }
    }

    pub(crate) fn run(&self, budget: &Budget, what: &str) -> Result<Vec<Vec<i64>>> {
        let n = self.lo.len();
        let mut out = Vec::new();
        if self.lo.iter().zip(self.hi).any(|(l, h)| l > h) {
            return Ok(out);
        }
        let mut point = vec![0i64; n];
        let mut sums = vec![0i128; self.rows.len()];
        self.descend(0, &mut point, &mut sums, &mut out, budget, what)?;
        Ok(out)
    }

    fn descend(
        &self,
        k: usize,
        point: &mut Vec<i64>,
        sums: &mut Vec<i128>,
        out: &mut Vec<Vec<i64>>,
        budget: &Budget,
        what: &str,
    ) -> Result<()> {
        let n = self.lo.len();
        if k == n {
            out.push(point.clone());
            budget.check_points(out.len(), what)?;
            if out.len().is_multiple_of(65536) {
                budget.check_time(what)?;
            }
            return Ok(());
        }
        let mut lower = self.lo[k] as i128;
        let mut upper = self.hi[k] as i128;
        for (f, (a, b)) in self.rows.iter().enumerate() {
            let rhs = self.dilation * *b as i128 - sums[f] - self.rest_min[f][k + 1];
            let c = a[k] as i128;
            if c > 0 {
                upper = upper.min(Integer::div_floor(&rhs, &c));
            } else if c < 0 {
                lower = lower.max(Integer::div_ceil(&rhs, &c));
            } else if rhs < 0 {
                return Ok(());
            }
            if lower > upper {
                return Ok(());
            }
        }
        for x in lower..=upper {
            point[k] = x as i64;
            for (f, (a, _)) in self.rows.iter().enumerate() {
                sums[f] += a[k] as i128 * x;
            }
            let r = self.descend(k + 1, point, sums, out, budget, what);
            for (f, (a, _)) in self.rows.iter().enumerate() {
                sums[f] -= a[k] as i128 * x;
            }
            r?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_points() {
        // x >= 0, y >= 0, x + y <= 2
        let rows = vec![(vec![-1, 0], 0), (vec![0, -1], 0), (vec![1, 1], 2)];
        let e = BoxEnumerator::new(&rows, 1, &[0, 0], &[2, 2]);
        let pts = e.run(&Budget::default(), "test").unwrap();
        assert_eq!(pts.len(), 6);
        let e = BoxEnumerator::new(&rows, 2, &[0, 0], &[4, 4]);
        assert_eq!(e.run(&Budget::default(), "test").unwrap().len(), 15);
    }

    #[test]
    fn budget_stops_enumeration() {
        let rows = vec![(vec![-1, 0], 0), (vec![0, -1], 0), (vec![1, 1], 100)];
        let e = BoxEnumerator::new(&rows, 1, &[0, 0], &[100, 100]);
        let budget = Budget { max_points: 10, ..Budget::default() };
        assert!(e.run(&budget, "test").unwrap_err().is_budget());
    }
}
