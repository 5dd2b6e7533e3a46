//! Holes, k-normality and normality.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::GradedSemigroup;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::polytope::Point;
use crate::verdict::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    /// A level at or above `d - 1` came out empty; no holes exist above it.
    PropagationEmpty,
    /// A resource limit (time, nodes, points) stopped the scan before any
    /// conclusion.
    DegreeBudget,
    /// The degree budget was reached with holes still present at the last level.
    InfiniteSuspected,
}

/// How a level was scanned and what it produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelProbe {
    pub degree: u32,
    pub method: String,
    pub candidates: usize,
    pub holes: usize,
}

/// Holes found up to the degree budget.
///
/// Wire format: `{ "holes": {"2": [[...]]}, "certified": bool, "stop_reason":
/// "...", "degree_budget": n }` followed by the per-level probes and the
/// certification note.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleReport {
    #[serde(rename = "holes")]
    pub holes_by_degree: BTreeMap<u32, Vec<Point>>,
    #[serde(rename = "certified")]
    pub certified_complete: bool,
    pub stop_reason: StopReason,
    pub degree_budget: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub probe_evidence: Vec<LevelProbe>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

const PROPAGATION_NOTE: &str = "For a lattice polytope of dimension d every lattice point of the cone at height \
n >= d - 1 is a height-one generator plus a cone point of height n - 1. Hence holes at height n >= d - 1 lie in \
(holes at n - 1) + A, and an empty level at height >= d - 1 leaves no holes above it.";

impl HoleReport {
    pub fn all_holes(&self) -> Vec<Point> {
        self.holes_by_degree.values().flatten().cloned().collect()
    }

    pub fn hole_count(&self) -> usize {
        self.holes_by_degree.values().map(Vec::len).sum()
    }

    /// Degrees that carry at least one hole.
    pub fn hole_degrees(&self) -> BTreeSet<u32> {
        self.holes_by_degree.iter().filter(|(_, v)| !v.is_empty()).map(|(&n, _)| n).collect()
    }

    /// Highest degree that was fully scanned.
    pub fn scanned_through(&self) -> u32 {
        self.holes_by_degree.keys().copied().max().unwrap_or(0)
    }

    pub fn to_json_pretty(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Result of a k-normality check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KNormalReport {
    pub k: u32,
    pub horizon: u32,
    pub verdict: Verdict,
    /// Every degree in `k..=verified_up_to` was checked.
    pub verified_up_to: u32,
    /// The hole scan closed, so the verdict covers all degrees.
    pub certified_all_degrees: bool,
    /// Holes found at degree `>= k`, if any.
    pub counterexamples: Vec<Point>,
}

impl GradedSemigroup {
    fn scan(&self, candidates: Vec<Point>, budget: &Budget) -> Result<Vec<Point>> {
        let mut holes = Vec::new();
        for y in candidates {
            budget.check_time("hole scan")?;
            if !self.strategy.is_member(self, &y, budget)? {
                holes.push(self.lift(&y));
            }
        }
        holes.sort();
        Ok(holes)
    }

    pub fn holes_at_degree(&self, n: u32) -> Result<Vec<Point>> {
        self.holes_at_degree_with(n, &Budget::default())
    }

    /// All cone lattice points of height `n` outside the semigroup, by
    /// exhaustive scan.
    pub fn holes_at_degree_with(&self, n: u32, budget: &Budget) -> Result<Vec<Point>> {
        if n == 0 {
            return Err(Error::invalid("degree must be >= 1"));
        }
        if n == 1 {
            return Ok(Vec::new());
        }
        self.scan(self.work_level(n, budget)?, budget)
    }

    /// Holes at height `n` obtained from the holes at height `n - 1` by adding
    /// a generator (working coordinates in, ambient coordinates out).
    fn propagate(&self, previous: &[Point], budget: &Budget) -> Result<(usize, Vec<Point>)> {
        let mut candidates = BTreeSet::new();
        for hole in previous {
            let y = self.to_work(hole)?.expect("holes lie in ℤA");
            for g in self.work_generators() {
                let c: Point = y.iter().zip(g).map(|(a, b)| a + b).collect();
                if self.work_in_cone(&c) {
                    candidates.insert(c);
                }
            }
        }
        let count = candidates.len();
        Ok((count, self.scan(candidates.into_iter().collect(), budget)?))
    }

    pub fn enumerate_holes(&self, degree_budget: u32) -> Result<HoleReport> {
        self.enumerate_holes_with(degree_budget, &Budget::default())
    }

    /// Scans degrees `2..d-1` exhaustively and higher degrees by propagation
    /// until a level at height `>= d - 1` is empty or `degree_budget` is hit.
    /// Resource exhaustion ends the scan with [`StopReason::DegreeBudget`].
    pub fn enumerate_holes_with(&self, degree_budget: u32, budget: &Budget) -> Result<HoleReport> {
        let d = self.dim() as u32;
        if degree_budget < d.max(1) {
            return Err(Error::invalid(format!("degree budget {degree_budget} is below the dimension {d}")));
        }
        let certify_from = d.saturating_sub(1).max(1);
        let mut report = HoleReport {
            holes_by_degree: BTreeMap::from([(1, Vec::new())]),
            certified_complete: false,
            stop_reason: StopReason::InfiniteSuspected,
            degree_budget,
            probe_evidence: Vec::new(),
            note: None,
        };
        if certify_from <= 1 {
            report.certified_complete = true;
            report.stop_reason = StopReason::PropagationEmpty;
            report.note = Some(PROPAGATION_NOTE.to_string());
            return Ok(report);
        }
        let mut previous: Vec<Point> = Vec::new();
        for n in 2..=degree_budget {
            let outcome = if n < d {
                self.work_level(n, budget).and_then(|level| {
                    let count = level.len();
                    Ok((count, self.scan(level, budget)?))
                })
            } else {
                self.propagate(&previous, budget)
            };
            let (candidates, holes) = match outcome {
                Ok(v) => v,
                Err(e) if e.is_budget() => {
                    report.stop_reason = StopReason::DegreeBudget;
                    report.note = Some(format!("stopped at degree {n}: {e}"));
                    return Ok(report);
                }
                Err(e) => return Err(e),
            };
            report.probe_evidence.push(LevelProbe {
                degree: n,
                method: if n < d { "exhaustive" } else { "propagation" }.to_string(),
                candidates,
                holes: holes.len(),
            });
            let empty = holes.is_empty();
            report.holes_by_degree.insert(n, holes.clone());
            if empty && n >= certify_from {
                report.certified_complete = true;
                report.stop_reason = StopReason::PropagationEmpty;
                report.note = Some(PROPAGATION_NOTE.to_string());
                return Ok(report);
            }
            previous = holes;
        }
        Ok(report)
    }

    pub fn is_k_normal(&self, k: u32, horizon: u32) -> Result<KNormalReport> {
        self.is_k_normal_with(k, horizon, &Budget::default())
    }

    /// Checks that no hole has degree `>= k`, scanning through `horizon`
    /// (raised to the dimension if smaller, since the scan needs it).
    pub fn is_k_normal_with(&self, k: u32, horizon: u32, budget: &Budget) -> Result<KNormalReport> {
        if k < 1 || horizon < k {
            return Err(Error::invalid("need k >= 1 and horizon >= k"));
        }
        let horizon = horizon.max(self.dim() as u32).max(1);
        let report = self.enumerate_holes_with(horizon, budget)?;
        let counterexamples: Vec<Point> =
            report.holes_by_degree.range(k..).flat_map(|(_, v)| v.iter().cloned()).collect();
        let verified_up_to = report.scanned_through();
        let verdict = if !counterexamples.is_empty() {
            Verdict::Fails
        } else if report.certified_complete {
            Verdict::Holds
        } else {
            Verdict::Unknown
        };
        Ok(KNormalReport {
            k,
            horizon,
            verdict,
            verified_up_to,
            certified_all_degrees: report.certified_complete,
            counterexamples,
        })
    }

    pub fn is_normal(&self) -> Result<Verdict> {
        self.is_normal_with(default_degree_budget(self.dim()), &Budget::default())
    }

    /// Normal iff the scan certifies an empty hole set; any hole refutes it.
    pub fn is_normal_with(&self, degree_budget: u32, budget: &Budget) -> Result<Verdict> {
        let report = self.enumerate_holes_with(degree_budget.max(self.dim() as u32), budget)?;
        Ok(if report.hole_count() > 0 {
            Verdict::Fails
        } else if report.certified_complete {
            Verdict::Holds
        } else {
            Verdict::Unknown
        })
    }
}

/// `max(d + 3, 8)`.
pub fn default_degree_budget(d: usize) -> u32 {
    (d as u32 + 3).max(8)
}

#[cfg(test)]
mod tests {
    use super::super::homogenize;
    use super::*;
    use crate::families::{build_ogata_p2, build_phd, unit_cube, unit_simplex, PhdSpec};

    #[test]
    fn degree_one_is_empty() {
        let s = homogenize(&build_phd(PhdSpec::new(2, 3).unwrap()).unwrap()).unwrap();
        assert!(s.holes_at_degree(1).unwrap().is_empty());
    }

    #[test]
    fn p23_degree_two() {
        let s = homogenize(&build_phd(PhdSpec::new(2, 3).unwrap()).unwrap()).unwrap();
        assert_eq!(s.holes_at_degree(2).unwrap(), vec![vec![1, 1, 3, 2], vec![1, 2, 4, 2]]);
    }

    #[test]
    fn p14_holes_certified() {
        let s = homogenize(&build_phd(PhdSpec::new(1, 4).unwrap()).unwrap()).unwrap();
        let r = s.enumerate_holes(8).unwrap();
        assert!(r.certified_complete);
        assert_eq!(r.stop_reason, StopReason::PropagationEmpty);
        assert_eq!(r.all_holes(), vec![vec![1, 1, 1, 3, 2]]);
        assert!(r.holes_by_degree[&1].is_empty());
    }

    #[test]
    fn ogata_is_infinite_suspected() {
        let s = homogenize(&build_ogata_p2()).unwrap();
        let r = s.enumerate_holes(6).unwrap();
        assert_eq!(r.stop_reason, StopReason::InfiniteSuspected);
        assert!(!r.certified_complete);
        for m in 1..=5 {
            let n = (m + 1) as u32;
            assert!(r.holes_by_degree[&n].contains(&crate::families::ogata_hole(m)));
        }
    }

    #[test]
    fn unit_simplex_certified_without_holes() {
        let s = homogenize(&unit_simplex(3).unwrap()).unwrap();
        let r = s.enumerate_holes(3).unwrap();
        assert!(r.certified_complete);
        assert_eq!(r.hole_count(), 0);
        assert_eq!(s.is_normal().unwrap(), Verdict::Holds);
    }

    #[test]
    fn k_normality() {
        let s = homogenize(&build_phd(PhdSpec::new(2, 3).unwrap()).unwrap()).unwrap();
        assert_eq!(s.is_k_normal(3, 6).unwrap().verdict, Verdict::Holds);
        assert_eq!(s.is_k_normal(1, 6).unwrap().verdict, Verdict::Fails);
        assert_eq!(s.is_normal().unwrap(), Verdict::Fails);
        let square = homogenize(&unit_cube(2).unwrap()).unwrap();
        assert_eq!(square.is_k_normal(1, 4).unwrap().verdict, Verdict::Holds);
    }

    #[test]
    fn budget_exhaustion_is_not_a_verdict() {
        let s = homogenize(&build_phd(PhdSpec::new(2, 4).unwrap()).unwrap()).unwrap();
        let tiny = Budget { max_nodes: 0, ..Budget::default() };
        let r = s.enumerate_holes_with(8, &tiny).unwrap();
        assert_eq!(r.stop_reason, StopReason::DegreeBudget);
        assert!(!r.certified_complete);
    }

    #[test]
    fn json_shape() {
        let s = homogenize(&build_phd(PhdSpec::new(1, 3).unwrap()).unwrap()).unwrap();
        let r = s.enumerate_holes(4).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["holes"]["2"], serde_json::json!([[1, 1, 3, 2]]));
        assert_eq!(v["certified"], true);
        assert_eq!(v["stop_reason"], "propagation_empty");
        assert_eq!(v["degree_budget"], 4);
    }
}
