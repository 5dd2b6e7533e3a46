//! Very ampleness via Hilbert bases of vertex cones.
//!
//! `P` is very ample iff at every vertex `v` the semigroup generated by
//! `{p - v : p ∈ P ∩ ℤ^d}` is saturated, i.e. contains the Hilbert basis of
//! the cone it spans.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::hilbert::{hilbert_basis, Cone};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::polytope::{LatticePolytope, Point};
use crate::verdict::Verdict;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub element: Point,
    pub verdict: Verdict,
    /// Summands from `{p - v}` when the element is reachable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<Point>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCertificate {
    pub vertex: Point,
    pub verdict: Verdict,
    pub extreme_rays: Vec<Point>,
    pub hilbert_basis: Vec<Point>,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeryAmplenessCertificate {
    pub verdict: Verdict,
    pub vertices: Vec<VertexCertificate>,
}

impl VeryAmplenessCertificate {
    /// `(vertex, element)` pairs whose element is not reachable.
    pub fn failures(&self) -> Vec<(Point, Point)> {
        self.vertices
            .iter()
            .flat_map(|v| {
                v.witnesses
                    .iter()
                    .filter(|w| w.verdict == Verdict::Fails)
                    .map(move |w| (v.vertex.clone(), w.element.clone()))
            })
            .collect()
    }

    pub fn to_canonical_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }
}

struct VertexSearch<'a> {
    cone: &'a Cone,
    steps: Vec<Point>,
    failed: HashMap<Point, ()>,
    budget: &'a Budget,
    nodes: u64,
}

impl VertexSearch<'_> {
    fn reach(&mut self, r: &[i64], path: &mut Vec<Point>) -> Result<bool> {
        if r.iter().all(|&x| x == 0) {
            return Ok(true);
        }
        if self.failed.contains_key(r) {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::Budget(format!("vertex semigroup search exceeded {} nodes", self.budget.max_nodes)));
        }
        if self.nodes.is_multiple_of(4096) {
            self.budget.check_time("vertex semigroup search")?;
        }
        for i in 0..self.steps.len() {
            let rest: Point = r.iter().zip(&self.steps[i]).map(|(a, b)| a - b).collect();
            if self.cone.contains(&rest) {
                path.push(self.steps[i].clone());
                if self.reach(&rest, path)? {
                    return Ok(true);
                }
                path.pop();
            }
        }
        self.failed.insert(r.to_vec(), ());
        Ok(false)
    }
}

fn certify_vertex(vertex: &Point, points: &[Point], budget: &Budget) -> Result<VertexCertificate> {
    let mut steps: Vec<Point> = points
        .iter()
        .filter(|p| *p != vertex)
        .map(|p| p.iter().zip(vertex).map(|(a, b)| a - b).collect())
        .collect();
    let cone = Cone::new(&steps)?;
    // larger steps first: shorter decompositions are found before long ones
    steps.sort_by_key(|s| std::cmp::Reverse(cone.grade(s).unwrap_or(0)));
    let basis = hilbert_basis(&cone, budget)?;
    let mut search = VertexSearch { cone: &cone, steps, failed: HashMap::new(), budget, nodes: 0 };
    let mut witnesses = Vec::with_capacity(basis.elements.len());
    for element in &basis.elements {
        let mut path = Vec::new();
        let witness = match search.reach(element, &mut path) {
            Ok(true) => Witness { element: element.clone(), verdict: Verdict::Holds, decomposition: Some(path) },
            Ok(false) => Witness { element: element.clone(), verdict: Verdict::Fails, decomposition: None },
            Err(e) if e.is_budget() => {
                search.nodes = 0;
                Witness { element: element.clone(), verdict: Verdict::Unknown, decomposition: None }
            }
            Err(e) => return Err(e),
        };
        witnesses.push(witness);
    }
    let verdict = witnesses.iter().fold(Verdict::Holds, |acc, w| acc.and(w.verdict));
    Ok(VertexCertificate {
        vertex: vertex.clone(),
        verdict,
        extreme_rays: cone.rays(),
        hilbert_basis: basis.elements,
        witnesses,
    })
}

/// Checks every vertex cone; `Unknown` wherever a search budget binds.
pub fn certify_very_ample(polytope: &LatticePolytope, budget: &Budget) -> Result<VeryAmplenessCertificate> {
    if !polytope.is_full_dimensional() {
        return Err(Error::invalid("very ampleness check needs a full-dimensional polytope"));
    }
    let points = polytope.lattice_points_with(1, budget)?;
    let mut vertices = Vec::new();
    for v in polytope.vertices()? {
        let cert = match certify_vertex(v, &points, budget) {
            Ok(c) => c,
            Err(e) if e.is_budget() => VertexCertificate {
                vertex: v.clone(),
                verdict: Verdict::Unknown,
                extreme_rays: Vec::new(),
                hilbert_basis: Vec::new(),
                witnesses: Vec::new(),
            },
            Err(e) => return Err(e),
        };
        vertices.push(cert);
    }
    let verdict = vertices.iter().fold(Verdict::Holds, |acc, v| acc.and(v.verdict));
    Ok(VeryAmplenessCertificate { verdict, vertices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_ogata_p2, build_phd, unit_cube, PhdSpec};

    #[test]
    fn cube_is_very_ample() {
        let c = certify_very_ample(&unit_cube(3).unwrap(), &Budget::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Holds);
        assert_eq!(c.vertices.len(), 8);
    }

    #[test]
    fn p13_is_very_ample() {
        let p = build_phd(PhdSpec::new(1, 3).unwrap()).unwrap();
        let c = certify_very_ample(&p, &Budget::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Holds);
        for v in &c.vertices {
            for w in &v.witnesses {
                let sum = w.decomposition.as_ref().unwrap().iter().fold(vec![0; 3], |mut acc, s| {
                    for (a, b) in acc.iter_mut().zip(s) {
                        *a += b;
                    }
                    acc
                });
                assert_eq!(sum, w.element);
            }
        }
    }

    #[test]
    fn ogata_is_not_very_ample() {
        let c = certify_very_ample(&build_ogata_p2(), &Budget::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Fails);
        assert!(!c.failures().is_empty());
    }
}
