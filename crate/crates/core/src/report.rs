//! End-to-end check of P_{h,d} for one `(h, d)`: facets, holes, very
//! ampleness, normality, 3-normality and the Gröbner certificate.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::budget::Budget;
use crate::error::Result;
use crate::families::{build_expected_hrep, build_phd, expected_holes, PhdSpec};
use crate::polytope::{HRep, Halfspace, Point};
use crate::semigroup::{certify_very_ample, default_degree_budget, GradedSemigroup, MembershipStrategy, StopReason};
use crate::semigroup::DfsStrategy;
use crate::toric::{buchberger_verify, generate_g_sets, CompletionSummary, ToricMap, VerifyOptions};
use crate::verdict::Verdict;

#[derive(Clone)]
pub struct ReportOptions {
    /// Hole scan degree budget; default `max(d + 3, 8)`.
    pub degree_budget: Option<u32>,
    /// Horizon of the 3-normality check; default the degree budget.
    pub horizon: Option<u32>,
    /// Gröbner membership bound; default largest degree in G plus two.
    pub membership_bound: Option<u32>,
    /// Replaces the listed facet system in the comparison.
    pub expected_hrep: Option<HRep>,
    pub membership: Arc<dyn MembershipStrategy>,
    pub groebner: bool,
    pub timings: bool,
    pub budget: Budget,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            degree_budget: None,
            horizon: None,
            membership_bound: None,
            expected_hrep: None,
            membership: Arc::new(DfsStrategy),
            groebner: true,
            timings: false,
            budget: Budget::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetCheck {
    pub verdict: Verdict,
    /// `8(d-2)+2`.
    pub listed_count: usize,
    pub computed_count: usize,
    /// Listed halfspaces that are not facets.
    pub not_facets: Vec<Halfspace>,
    /// Facets missing from the listed system.
    pub unlisted: Vec<Halfspace>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleSetCheck {
    pub verdict: Verdict,
    pub holes: Vec<Point>,
    pub count: usize,
    pub expected: Vec<Point>,
    pub certified: bool,
    pub stop_reason: StopReason,
    pub degree_budget: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeryAmpleCheck {
    pub verdict: Verdict,
    /// SHA-256 of the canonical certificate JSON.
    pub certificate_digest: String,
    pub vertices: usize,
    pub failures: Vec<(Point, Point)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalCheck {
    /// Holds when the polytope is shown not normal.
    pub verdict: Verdict,
    pub normal: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeNormalCheck {
    pub verdict: Verdict,
    pub horizon: u32,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerCheck {
    pub verdict: Verdict,
    pub generators: usize,
    pub pairs_checked: usize,
    pub failures: usize,
    pub squarefree_initial: bool,
    pub membership_bound: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub completion: Option<CompletionSummary>,
}

/// Verdicts of every stage. `overall` combines the facet, hole, very
/// ampleness, non-normality and 3-normality checks; the Gröbner check is
/// reported alongside but is not part of it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub h: u32,
    pub d: usize,
    pub overall: Verdict,
    pub facet_check: FacetCheck,
    pub hole_set: HoleSetCheck,
    pub very_ample: VeryAmpleCheck,
    pub normal: NormalCheck,
    pub three_normal: ThreeNormalCheck,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub groebner: Option<GroebnerCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<BTreeMap<String, u64>>,
}

struct Clock {
    enabled: bool,
    stages: BTreeMap<String, u64>,
    start: Instant,
}

impl Clock {
    fn lap(&mut self, stage: &str) {
        if self.enabled {
            self.stages.insert(stage.to_string(), self.start.elapsed().as_millis() as u64);
            self.start = Instant::now();
        }
    }
}

pub fn run_theorem_report(spec: PhdSpec, options: &ReportOptions) -> Result<TheoremReport> {
    let spec = PhdSpec::new(spec.h, spec.d)?;
    let budget = &options.budget;
    let mut clock = Clock { enabled: options.timings, stages: BTreeMap::new(), start: Instant::now() };
    let polytope = build_phd(spec)?;

    let computed = polytope.hrep()?.clone();
    let listed = match &options.expected_hrep {
        Some(h) => h.clone(),
        None => build_expected_hrep(spec)?,
    };
    let (not_facets, unlisted) = listed.facet_difference(&computed);
    let listed_count = spec.listed_facet_count();
    let facet_check = FacetCheck {
        verdict: Verdict::from_bool(
            not_facets.is_empty() && unlisted.is_empty() && computed.facet_count() == listed_count,
        ),
        listed_count,
        computed_count: computed.facet_count(),
        not_facets,
        unlisted,
    };
    clock.lap("facets");

    let semigroup = GradedSemigroup::with_budget(&polytope, options.membership.clone(), budget)?;
    let degree_budget = options.degree_budget.unwrap_or_else(|| default_degree_budget(spec.d)).max(spec.d as u32);
    let holes = semigroup.enumerate_holes_with(degree_budget, budget)?;
    let expected = expected_holes(spec)?;
    let found = holes.all_holes();
    let hole_verdict = if found.len() > expected.len() || found.iter().any(|x| !expected.contains(x)) {
        Verdict::Fails
    } else if !holes.certified_complete {
        Verdict::Unknown
    } else {
        Verdict::from_bool(found == expected && holes.hole_degrees().into_iter().all(|n| n == 2))
    };
    let hole_set = HoleSetCheck {
        verdict: hole_verdict,
        count: found.len(),
        holes: found,
        expected,
        certified: holes.certified_complete,
        stop_reason: holes.stop_reason,
        degree_budget,
    };
    clock.lap("holes");

    let certificate = certify_very_ample(&polytope, budget)?;
    let digest = hex::encode(Sha256::digest(certificate.to_canonical_json()?.as_bytes()));
    let very_ample = VeryAmpleCheck {
        verdict: certificate.verdict,
        certificate_digest: digest,
        vertices: certificate.vertices.len(),
        failures: certificate.failures(),
    };
    clock.lap("very_ample");

    let normal_value = if holes.hole_count() > 0 {
        Verdict::Fails
    } else if holes.certified_complete {
        Verdict::Holds
    } else {
        Verdict::Unknown
    };
    let normal = NormalCheck { verdict: normal_value.negate(), normal: normal_value };

    let horizon = options.horizon.unwrap_or(degree_budget);
    let k3 = semigroup.is_k_normal_with(3, horizon.max(3), budget)?;
    let three_normal = ThreeNormalCheck { verdict: k3.verdict, horizon: k3.horizon, certified: k3.certified_all_degrees };
    clock.lap("three_normal");

    let groebner = if options.groebner {
        let g = generate_g_sets(spec)?;
        let r = buchberger_verify(
            &g.binomials,
            &g.order,
            &ToricMap::new(spec),
            &VerifyOptions { membership_bound: options.membership_bound },
            budget,
        )?;
        clock.lap("groebner");
        Some(GroebnerCheck {
            verdict: r.verdict,
            generators: r.generators,
            pairs_checked: r.pairs_checked,
            failures: r.failures.len(),
            squarefree_initial: r.squarefree_initial,
            membership_bound: r.membership_bound,
            completion: r.completion,
        })
    } else {
        None
    };

    let overall = facet_check
        .verdict
        .and(hole_set.verdict)
        .and(very_ample.verdict)
        .and(normal.verdict)
        .and(three_normal.verdict);
    Ok(TheoremReport {
        h: spec.h,
        d: spec.d,
        overall,
        facet_check,
        hole_set,
        very_ample,
        normal,
        three_normal,
        groebner,
        runtime_ms: options.timings.then_some(clock.stages),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p24_passes() {
        let r = run_theorem_report(PhdSpec::new(2, 4).unwrap(), &ReportOptions::default()).unwrap();
        assert_eq!(r.overall, Verdict::Holds, "{r:#?}");
        assert_eq!(r.hole_set.count, 2);
        assert!(r.runtime_ms.is_none());
    }

    #[test]
    fn sabotaged_facet_list_fails() {
        let spec = PhdSpec::new(2, 4).unwrap();
        let mut listed = build_expected_hrep(spec).unwrap();
        listed.halfspaces.remove(3);
        let options = ReportOptions { expected_hrep: Some(listed), groebner: false, ..ReportOptions::default() };
        let r = run_theorem_report(spec, &options).unwrap();
        assert_eq!(r.facet_check.verdict, Verdict::Fails);
        assert_eq!(r.facet_check.unlisted.len(), 1);
        assert_eq!(r.overall, Verdict::Fails);
    }

    #[test]
    fn output_is_deterministic() {
        let spec = PhdSpec::new(1, 3).unwrap();
        let a = serde_json::to_string(&run_theorem_report(spec, &ReportOptions::default()).unwrap()).unwrap();
        let b = serde_json::to_string(&run_theorem_report(spec, &ReportOptions::default()).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
