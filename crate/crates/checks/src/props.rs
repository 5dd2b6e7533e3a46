//! Property checks shared by the `properties` and `acceptance` targets. Each
//! one runs a proptest runner for the given number of cases.

use std::collections::BTreeSet;
use std::sync::Arc;

use polyhole::families::{build_expected_hrep, build_phd, PhdSpec};
use polyhole::linalg::{is_unimodular_simplex, smith_normal_form, IntMatrix};
use polyhole::polytope::{facet_enumeration, HRep, Halfspace, LatticePolytope};
use polyhole::report::{run_theorem_report, ReportOptions};
use polyhole::semigroup::{hilbert_basis, homogenize, Cone, GradedSemigroup, SumsetStrategy};
use polyhole::toric::{buchberger_verify, generate_g_sets, Binomial, Provenance, ToricMap, VerifyOptions};
use polyhole::{Budget, Verdict};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use crate::oracle::{self, Pt};

pub type Check = fn(u32) -> Result<(), String>;

/// Every property, by name.
pub const ALL: [(&str, Check); 11] = [
    ("vertex_facet_round_trip", vertex_facet_round_trip),
    ("lattice_points_match_box_scan", lattice_points_match_box_scan),
    ("membership_matches_sumset", membership_matches_sumset),
    ("holes_propagate_from_the_previous_degree", holes_propagate_from_the_previous_degree),
    ("plane_hilbert_basis_matches_brute_force", plane_hilbert_basis_matches_brute_force),
    ("hilbert_basis_is_minimal_and_generating", hilbert_basis_is_minimal_and_generating),
    ("smith_divisors_are_unimodular_invariants", smith_divisors_are_unimodular_invariants),
    ("unimodular_simplex_is_invariant", unimodular_simplex_is_invariant),
    ("corrupted_facet_list_is_rejected", corrupted_facet_list_is_rejected),
    ("corrupted_binomial_is_rejected", corrupted_binomial_is_rejected),
    ("report_rejects_a_corrupted_facet_list", report_rejects_a_corrupted_facet_list),
];

fn run<S>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S: Strategy,
    S::Value: std::fmt::Debug,
{
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new(config).run(&strategy, test).map_err(|e| e.to_string())
}

fn full_dimensional(dim: usize, coord: i64, count: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Pt>> {
    prop::collection::vec(prop::collection::vec(0..=coord, dim), count)
        .prop_filter("full-dimensional", move |pts| oracle::affine_rank(pts) == dim)
}

fn phd_spec() -> impl Strategy<Value = PhdSpec> {
    (2u32..=3, 3usize..=4).prop_map(|(h, d)| PhdSpec::new(h, d).unwrap())
}

fn keys(h: &HRep) -> BTreeSet<(Pt, i64)> {
    h.facet_keys()
}

pub fn vertex_facet_round_trip(cases: u32) -> Result<(), String> {
    run(cases, full_dimensional(3, 3, 4..=8), |pts| {
        let p = LatticePolytope::new(3, pts.clone()).unwrap();
        let hrep = facet_enumeration(&p).unwrap();
        prop_assert_eq!(keys(&hrep), oracle::brute_facets(&pts));
        let vertices = p.vertices().unwrap().to_vec();
        let q = LatticePolytope::new(3, vertices.clone()).unwrap();
        prop_assert_eq!(keys(q.hrep().unwrap()), keys(&hrep));
        for v in &vertices {
            prop_assert!(pts.contains(v));
            let tight = hrep.facets().filter(|f| f.is_tight(v, 1)).count();
            prop_assert!(tight >= 3);
        }
        for x in &pts {
            prop_assert!(hrep.contains(x, 1).unwrap());
        }
        Ok(())
    })
}

pub fn lattice_points_match_box_scan(cases: u32) -> Result<(), String> {
    run(cases, (full_dimensional(3, 2, 4..=6), 1u32..=3), |(pts, n)| {
        let p = LatticePolytope::new(3, pts.clone()).unwrap();
        let lib: BTreeSet<Pt> = p.lattice_points(n).unwrap().into_iter().collect();
        prop_assert_eq!(lib, oracle::box_points(&pts, n as i64));
        Ok(())
    })
}

pub fn membership_matches_sumset(cases: u32) -> Result<(), String> {
    run(cases, full_dimensional(3, 2, 4..=6), |pts| {
        let p = LatticePolytope::new(3, pts.clone()).unwrap();
        let lattice: Vec<Pt> = oracle::box_points(&pts, 1).into_iter().collect();
        let dfs = homogenize(&p).unwrap();
        let sumset = GradedSemigroup::new(&p, Arc::new(SumsetStrategy)).unwrap();
        for n in 1..=3u32 {
            let sums = oracle::sumset(&lattice, n);
            for x in oracle::box_points(&pts, n as i64) {
                let mut y = x.clone();
                y.push(n as i64);
                let expected = sums.contains(&x);
                prop_assert_eq!(dfs.is_member(&y).unwrap(), expected);
                prop_assert_eq!(sumset.is_member(&y).unwrap(), expected);
                if let Some(parts) = dfs.decompose(&y).unwrap() {
                    prop_assert_eq!(parts.len(), n as usize);
                    let total: Pt = (0..4).map(|i| parts.iter().map(|q| q[i]).sum()).collect();
                    prop_assert_eq!(total, y);
                }
            }
        }
        Ok(())
    })
}

pub fn holes_propagate_from_the_previous_degree(cases: u32) -> Result<(), String> {
    run(cases, full_dimensional(3, 2, 4..=6), |pts| {
        let p = LatticePolytope::new(3, pts).unwrap();
        let sg = homogenize(&p).unwrap();
        let d = sg.dim() as u32;
        let generators = sg.generators();
        let mut previous: BTreeSet<Pt> = sg.holes_at_degree(d - 1).unwrap().into_iter().collect();
        for n in d..=d + 1 {
            let current: BTreeSet<Pt> = sg.holes_at_degree(n).unwrap().into_iter().collect();
            for x in &current {
                let reached = generators.iter().any(|g| {
                    let y: Pt = x.iter().zip(g).map(|(a, b)| a - b).collect();
                    previous.contains(&y)
                });
                prop_assert!(reached, "hole {:?} at degree {} has no predecessor", x, n);
            }
            previous = current;
        }
        let report = sg.enumerate_holes(d + 2).unwrap();
        for (n, holes) in &report.holes_by_degree {
            let direct: BTreeSet<Pt> = sg.holes_at_degree(*n).unwrap().into_iter().collect();
            prop_assert_eq!(&holes.iter().cloned().collect::<BTreeSet<Pt>>(), &direct);
        }
        Ok(())
    })
}

pub fn plane_hilbert_basis_matches_brute_force(cases: u32) -> Result<(), String> {
    run(cases, ((1i64..=4, -4i64..=4), (-4i64..=4, 1i64..=4)), |(a, b)| {
        let rays = vec![vec![a.0, a.1], vec![b.0, b.1]];
        let det = a.0 * b.1 - a.1 * b.0;
        prop_assume!(det != 0);
        let s = det.signum();
        let facets = vec![vec![-a.1 * s, a.0 * s], vec![b.1 * s, -b.0 * s]];
        let cone = Cone::new(&rays).unwrap();
        let lib: BTreeSet<Pt> = hilbert_basis(&cone, &Budget::default()).unwrap().elements.into_iter().collect();
        prop_assert_eq!(lib, oracle::brute_hilbert_basis(&rays, &facets));
        Ok(())
    })
}

pub fn hilbert_basis_is_minimal_and_generating(cases: u32) -> Result<(), String> {
    run(cases, prop::collection::vec(prop::collection::vec(0i64..=3, 3), 3..=5), |rays| {
        prop_assume!(oracle::rank(&rays.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect::<Vec<_>>()) == 3);
        let cone = Cone::new(&rays).unwrap();
        let hb = hilbert_basis(&cone, &Budget::default()).unwrap().elements;
        for x in &hb {
            prop_assert!(cone.contains(x));
            for y in &hb {
                if x != y {
                    let z: Pt = x.iter().zip(y).map(|(a, b)| a - b).collect();
                    prop_assert!(!cone.contains(&z), "{:?} = {:?} + {:?}", x, y, z);
                }
            }
        }
        for r in cone.rays() {
            prop_assert!(hb.contains(&r));
        }
        // The cone lies in the orthant, so sums only grow and the closure of
        // the basis inside the box reaches every cone lattice point there.
        let in_box = |x: &Pt| x.iter().all(|&v| (0..=4).contains(&v));
        let mut reached: BTreeSet<Pt> = BTreeSet::from([vec![0, 0, 0]]);
        let mut frontier: Vec<Pt> = vec![vec![0, 0, 0]];
        while let Some(x) = frontier.pop() {
            for h in &hb {
                let y: Pt = x.iter().zip(h).map(|(a, b)| a + b).collect();
                if in_box(&y) && reached.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        let grid = (0..=4).flat_map(|i| (0..=4).flat_map(move |j| (0..=4).map(move |k| vec![i, j, k])));
        for x in grid {
            prop_assert_eq!(cone.contains(&x), reached.contains(&x), "{:?}", x);
        }
        Ok(())
    })
}

pub fn smith_divisors_are_unimodular_invariants(cases: u32) -> Result<(), String> {
    run(cases, (prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 3), prop::collection::vec((0usize..3, 0usize..3, -3i64..=3, any::<bool>()), 0..8)), |(m, ops)| {
        let expected = oracle::elementary_divisors(&m);
        let lib = |rows: &[Pt]| -> Vec<i128> {
            smith_normal_form(&IntMatrix::from_rows(rows, 3).unwrap())
                .elementary_divisors
                .iter()
                .map(|x| x.to_string().parse().unwrap())
                .collect()
        };
        prop_assert_eq!(lib(&m), expected.clone());
        let mut t = m.clone();
        for (i, j, f, on_rows) in ops {
            if i == j {
                continue;
            }
            if on_rows {
                let source = t[j].clone();
                for (x, y) in t[i].iter_mut().zip(&source) {
                    *x += f * y;
                }
            } else {
                for row in t.iter_mut() {
                    row[i] += f * row[j];
                }
            }
        }
        prop_assert_eq!(lib(&t), expected);
        Ok(())
    })
}

pub fn unimodular_simplex_is_invariant(cases: u32) -> Result<(), String> {
    run(cases, (prop::collection::vec(-5i64..=5, 3), Just(vec![0usize, 1, 2, 3]).prop_shuffle(), prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 0..6), 1i64..=2), |(shift, perm, ops, scale)| {
        let mut pts: Vec<Pt> = vec![vec![0, 0, 0], vec![scale, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        for (i, j, f) in ops {
            if i != j {
                for p in pts.iter_mut() {
                    p[i] += f * p[j];
                }
            }
        }
        let moved: Vec<Pt> = perm.iter().map(|&k| pts[k].iter().zip(&shift).map(|(a, b)| a + b).collect()).collect();
        prop_assert_eq!(is_unimodular_simplex(&moved), scale == 1);
        Ok(())
    })
}

pub fn corrupted_facet_list_is_rejected(cases: u32) -> Result<(), String> {
    run(cases, (phd_spec(), any::<prop::sample::Index>(), 1i64..=3), |(spec, pick, shift)| {
        let listed = build_expected_hrep(spec).unwrap();
        let computed = build_phd(spec).unwrap().hrep().unwrap().clone();
        prop_assert!(listed.same_facets(&computed));
        let mut rows: Vec<Halfspace> = listed.facets().cloned().collect();
        let i = pick.index(rows.len());
        let bad = Halfspace::new(rows[i].normal.clone(), rows[i].offset + shift);
        rows[i] = bad;
        prop_assert!(!HRep::new(rows).same_facets(&computed));
        Ok(())
    })
}

pub fn corrupted_binomial_is_rejected(cases: u32) -> Result<(), String> {
    run(cases, (any::<prop::sample::Index>(), any::<prop::sample::Index>()), |(pick, var)| {
        let spec = PhdSpec::new(2, 3).unwrap();
        let g = generate_g_sets(spec).unwrap();
        let mut basis = g.binomials.clone();
        let i = pick.index(basis.len());
        let mut trail = basis[i].trail.clone();
        trail.exponents[var.index(g.order.len())] += 1;
        prop_assume!(trail != basis[i].lead);
        basis[i] = Binomial::new(basis[i].lead.clone(), trail, Provenance::G1).unwrap();
        let report = buchberger_verify(&basis, &g.order, &ToricMap::new(spec), &VerifyOptions::default(), &Budget::default()).unwrap();
        prop_assert_eq!(report.verdict, Verdict::Fails);
        Ok(())
    })
}

pub fn report_rejects_a_corrupted_facet_list(cases: u32) -> Result<(), String> {
    run(cases, (any::<prop::sample::Index>(), any::<bool>()), |(pick, drop)| {
        let spec = PhdSpec::new(2, 3).unwrap();
        let mut rows: Vec<Halfspace> = build_expected_hrep(spec).unwrap().facets().cloned().collect();
        let i = pick.index(rows.len());
        if drop {
            rows.remove(i);
        } else {
            rows[i] = Halfspace::new(rows[i].normal.iter().map(|x| -x).collect(), rows[i].offset);
        }
        let options = ReportOptions { expected_hrep: Some(HRep::new(rows)), groebner: false, ..ReportOptions::default() };
        let report = run_theorem_report(spec, &options).unwrap();
        prop_assert_eq!(report.facet_check.verdict, Verdict::Fails);
        prop_assert_eq!(report.overall, Verdict::Fails);
        Ok(())
    })
}
