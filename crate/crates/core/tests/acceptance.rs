//! Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
//! exact (tolerance zero). Exits nonzero when any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use polyhole::families::{
    build_expected_hrep, build_ogata_p2, build_phd, build_qk, build_qk_pyramid, expected_halfspace, expected_holes,
    ogata_hole, PhdSpec,
};
use polyhole::linalg::{hermite_normal_form, is_totally_unimodular, is_unimodular_simplex, IntMatrix};
use polyhole::polytope::{facet_enumeration, restrict_to_facet, restrict_to_facet_with_frame, LatticePolytope};
use polyhole::report::{run_theorem_report, ReportOptions};
use polyhole::semigroup::{
    certify_very_ample, default_degree_budget, homogenize, verify_slice_decompositions, StopReason, SLICE_CASES,
};
use polyhole::toric::{buchberger_verify, generate_g_sets, ToricMap, VerifyOptions};
use polyhole::{Budget, Verdict};
use polyhole_checks::oracle::Pt;
use polyhole_checks::props;

type Outcome = Result<Vec<String>, Vec<String>>;

struct Criterion {
    id: u8,
    title: &'static str,
    run: fn() -> Outcome,
}

fn spec(h: u32, d: usize) -> PhdSpec {
    PhdSpec::new(h, d).unwrap()
}

fn collect(lines: Vec<(bool, String)>) -> Outcome {
    let ok = lines.iter().all(|(ok, _)| *ok);
    let text = lines.into_iter().map(|(ok, s)| format!("{} {s}", if ok { "ok  " } else { "FAIL" })).collect();
    if ok {
        Ok(text)
    } else {
        Err(text)
    }
}

fn theorem_grid() -> Outcome {
    let mut lines = Vec::new();
    for h in 1..=3 {
        for d in 3..=5 {
            let s = spec(h, d);
            let start = Instant::now();
            let options = ReportOptions { groebner: false, ..ReportOptions::default() };
            let r = run_theorem_report(s, &options).unwrap();
            let elapsed = start.elapsed();
            let expected = expected_holes(s).unwrap();
            let holes_ok = r.hole_set.count == h as usize
                && r.hole_set.holes == expected
                && r.hole_set.holes.iter().all(|x| x[d] == 2)
                && r.hole_set.certified;
            let ok = r.overall == Verdict::Holds
                && holes_ok
                && r.very_ample.verdict == Verdict::Holds
                && r.normal.normal == Verdict::Fails
                && r.three_normal.verdict == Verdict::Holds
                && r.three_normal.certified
                && elapsed < Duration::from_secs(60);
            lines.push((
                ok,
                format!(
                    "(h,d)=({h},{d}) overall={} facets={} ({} computed, {} listed) holes={} {:?} very_ample={} normal={} 3-normal={} certified={} {:.2}s",
                    r.overall,
                    r.facet_check.verdict,
                    r.facet_check.computed_count,
                    r.facet_check.listed_count,
                    r.hole_set.count,
                    r.hole_set.holes,
                    r.very_ample.verdict,
                    r.normal.normal,
                    r.three_normal.verdict,
                    r.three_normal.certified,
                    elapsed.as_secs_f64()
                ),
            ));
        }
    }
    collect(lines)
}

fn facet_systems() -> Outcome {
    let mut lines = Vec::new();
    for h in 1..=3 {
        for d in 3..=5 {
            let s = spec(h, d);
            let computed = facet_enumeration(&build_phd(s).unwrap()).unwrap();
            let listed = build_expected_hrep(s).unwrap();
            let (not_facets, unlisted) = listed.facet_difference(&computed);
            let count = 8 * (d - 2) + 2;
            let ok = listed.same_facets(&computed) && computed.facet_count() == count && listed.len() == count;
            lines.push((
                ok,
                format!(
                    "(h,d)=({h},{d}) computed={} listed_distinct={} required={count} listed_not_facets={} unlisted={}",
                    computed.facet_count(),
                    listed.len(),
                    not_facets.len(),
                    unlisted.len()
                ),
            ));
        }
    }
    collect(lines)
}

fn ogata_refutation() -> Outcome {
    let start = Instant::now();
    let p = build_ogata_p2();
    let sg = homogenize(&p).unwrap();
    let mut lines = Vec::new();
    for m in 1..=10 {
        let x = ogata_hole(m);
        let in_cone = sg.in_cone_lattice(&x).unwrap();
        let member = sg.is_member(&x).unwrap();
        lines.push((in_cone && !member, format!("{x:?} cone_lattice_point={in_cone} member={member}")));
    }
    let budget = default_degree_budget(sg.dim());
    let report = sg.enumerate_holes(budget).unwrap();
    lines.push((
        report.stop_reason == StopReason::InfiniteSuspected && !report.certified_complete,
        format!("enumerate_holes({budget}) stop_reason={:?} holes_at_budget={}", report.stop_reason, report.holes_by_degree[&budget].len()),
    ));
    let cert = certify_very_ample(&p, &Budget::default()).unwrap();
    lines.push((cert.verdict == Verdict::Fails, format!("very_ample={} failing_vertices={}", cert.verdict, cert.failures().len())));
    let elapsed = start.elapsed();
    lines.push((elapsed < Duration::from_secs(30), format!("elapsed {:.2}s (limit 30s)", elapsed.as_secs_f64())));
    collect(lines)
}

fn remark_reproduction() -> Outcome {
    let mut lines = Vec::new();
    for h in 1..=3u32 {
        let q = build_qk(h + 3).unwrap();
        let sg = homogenize(&q).unwrap();
        let report = sg.enumerate_holes(default_degree_budget(sg.dim())).unwrap();
        let holes = report.all_holes();
        let mut ok = report.certified_complete && holes.len() == h as usize;
        if h == 1 {
            ok &= holes == vec![vec![1, 1, 3, 2]];
        }
        lines.push((ok, format!("Q_{} holes={holes:?} certified={}", h + 3, report.certified_complete)));
    }
    let pyramid = build_qk_pyramid(4).unwrap();
    let cert = certify_very_ample(&pyramid, &Budget::default()).unwrap();
    lines.push((cert.verdict == Verdict::Fails, format!("pyramid(Q_4) very_ample={}", cert.verdict)));
    let sg = homogenize(&pyramid).unwrap();
    let budget = default_degree_budget(sg.dim());
    let report = sg.enumerate_holes(budget).unwrap();
    for m in 2..=budget as i64 {
        let x = vec![1, 1, 3, 2, m];
        let found = report.holes_by_degree.get(&(m as u32)).is_some_and(|level| level.contains(&x));
        lines.push((found, format!("pyramid(Q_4) hole {x:?} found={found}")));
    }
    lines.push((
        report.stop_reason == StopReason::InfiniteSuspected,
        format!("pyramid(Q_4) stop_reason={:?}", report.stop_reason),
    ));
    collect(lines)
}

fn groebner_verification() -> Outcome {
    let mut lines = Vec::new();
    for (h, d) in [(2, 3), (2, 4), (3, 4)] {
        let s = spec(h, d);
        let start = Instant::now();
        let g = generate_g_sets(s).unwrap();
        let r = buchberger_verify(&g.binomials, &g.order, &ToricMap::new(s), &VerifyOptions::default(), &Budget::default())
            .unwrap();
        let elapsed = start.elapsed();
        let ok = r.verdict == Verdict::Holds && r.squarefree_initial && r.failures.is_empty() && elapsed < Duration::from_secs(300);
        let mut detail = format!(
            "(h,d)=({h},{d}) verdict={} generators={} pairs={} failures={} squarefree_initial={} bound={} {:.2}s",
            r.verdict,
            r.generators,
            r.pairs_checked,
            r.failures.len(),
            r.squarefree_initial,
            r.membership_bound,
            elapsed.as_secs_f64()
        );
        if let Some(first) = r.failures.first() {
            detail.push_str(&format!("; first failure {}: {}", first.kind, first.detail));
        }
        if let Some(c) = &r.completion {
            detail.push_str(&format!("; completion adds {:?}, squarefree={}", c.added, c.squarefree_initial));
        }
        lines.push((ok, detail));
    }
    collect(lines)
}

fn facet_normality() -> Outcome {
    let mut lines = Vec::new();
    let budget = Budget::default();
    for (h, d) in [(2, 4), (3, 4)] {
        let s = spec(h, d);
        let p = build_phd(s).unwrap();
        let hrep = p.hrep().unwrap().clone();
        let mut normal = 0;
        let mut failed = Vec::new();
        for f in hrep.facets() {
            let facet = restrict_to_facet(&p, f).unwrap();
            match homogenize(&facet).unwrap().is_normal().unwrap() {
                Verdict::Holds => normal += 1,
                v => failed.push(format!("{:?} <= {} ({v})", f.normal, f.offset)),
            }
        }
        lines.push((failed.is_empty(), format!("(h,d)=({h},{d}) normal facets {normal}/{} {failed:?}", hrep.facet_count())));
        for j in [4u8, 7, 8] {
            for i in 2..d {
                let f = expected_halfspace(s, j, i).unwrap();
                let pts = restrict_to_facet_with_frame(&p, &f).unwrap().ambient_points;
                let ok = is_unimodular_simplex(&pts);
                lines.push((ok, format!("(h,d)=({h},{d}) F_{{{j},{i}}} unimodular simplex={ok} ({} lattice points)", pts.len())));
            }
        }
        let (tu, equivalent) = f22_matrix_check(s, &p, &budget);
        lines.push((tu, format!("(h,d)=({h},{d}) F_{{2,2}} column matrix totally unimodular={tu}")));
        lines.push((equivalent, format!("(h,d)=({h},{d}) F_{{2,2}} vertices unimodularly equivalent to that matrix={equivalent}")));
    }
    collect(lines)
}

/// `(0, -e_d, e_1, e_1 - e_d, e_3..e_{d-1}, e_3 - e_d..e_{d-1} - e_d)`, checked
/// for total unimodularity, and compared with the vertex matrix of `F_{2,2}`
/// (translated to `u_1`) through the row Hermite form.
fn f22_matrix_check(s: PhdSpec, p: &LatticePolytope, budget: &Budget) -> (bool, bool) {
    let d = s.d;
    let e = |i: usize| -> Pt {
        let mut v = vec![0; d];
        v[i - 1] = 1;
        v
    };
    let minus = |a: Pt, b: Pt| -> Pt { a.iter().zip(&b).map(|(x, y)| x - y).collect() };
    let mut columns: Vec<Pt> = vec![vec![0; d], minus(vec![0; d], e(d)), e(1), minus(e(1), e(d))];
    columns.extend((3..d).map(e));
    columns.extend((3..d).map(|i| minus(e(i), e(d))));
    let m = IntMatrix::from_columns(&columns, d).unwrap();
    let tu = is_totally_unimodular(&m, budget).unwrap();

    let u = s.u_points();
    let mut vertices: Vec<Pt> = vec![u[0].clone(), u[1].clone(), u[6].clone(), u[7].clone()];
    vertices.extend((3..d).map(|i| s.v_point(i)));
    vertices.extend((3..d).map(|i| s.v_prime_point(i)));
    let facet = expected_halfspace(s, 2, 2).unwrap();
    let on_facet: BTreeSet<Pt> = restrict_to_facet_with_frame(p, &facet).unwrap().ambient_points.into_iter().collect();
    let facet_vertices: BTreeSet<Pt> =
        LatticePolytope::new(d, on_facet.into_iter().collect()).unwrap().vertices().unwrap().iter().cloned().collect();
    let same_vertices = facet_vertices == vertices.iter().cloned().collect();
    let translated: Vec<Pt> = vertices.iter().map(|v| minus(v.clone(), u[0].clone())).collect();
    let a = IntMatrix::from_columns(&translated, d).unwrap();
    let row_form = |x: &IntMatrix| hermite_normal_form(&x.transpose()).h;
    (tu, same_vertices && row_form(&a) == row_form(&m))
}

fn slice_decompositions() -> Outcome {
    let mut lines = Vec::new();
    for (h, d) in [(2, 4), (1, 3), (3, 5)] {
        for c in verify_slice_decompositions(spec(h, d), &SLICE_CASES).unwrap() {
            lines.push((
                c.holds,
                format!(
                    "(h,d)=({h},{d}) (n,k)=({},{}) slice={} sumset={} outside={} unexpected={}",
                    c.n,
                    c.k,
                    c.slice_points,
                    c.sumset_points,
                    c.outside_sumset.len(),
                    c.unexpected.len()
                ),
            ));
        }
    }
    collect(lines)
}

fn property_suites() -> Outcome {
    const CASES: u32 = 200;
    let lines = props::ALL
        .iter()
        .map(|(name, check)| match check(CASES) {
            Ok(()) => (true, format!("{name}: {CASES} cases")),
            Err(e) => (false, format!("{name}: {e}")),
        })
        .collect();
    collect(lines)
}

const CRITERIA: [Criterion; 8] = [
    Criterion { id: 1, title: "P_{h,d} report on the (h,d) grid", run: theorem_grid },
    Criterion { id: 2, title: "facet systems equal the listed hyperplanes", run: facet_systems },
    Criterion { id: 3, title: "Ogata's P_2 has infinitely many holes", run: ogata_refutation },
    Criterion { id: 4, title: "Q_k holes and pyramid over Q_4", run: remark_reproduction },
    Criterion { id: 5, title: "G_1..G_8 Groebner verification", run: groebner_verification },
    Criterion { id: 6, title: "facet normality", run: facet_normality },
    Criterion { id: 7, title: "slice decompositions", run: slice_decompositions },
    Criterion { id: 8, title: "property suites", run: property_suites },
];

fn main() {
    let only: Option<u8> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = Vec::new();
    println!("acceptance: exact arithmetic, tolerance 0");
    for c in CRITERIA.iter().filter(|c| only.is_none_or(|id| id == c.id)) {
        let start = Instant::now();
        let (pass, lines) = match (c.run)() {
            Ok(lines) => (true, lines),
            Err(lines) => (false, lines),
        };
        println!(
            "criterion {} {}: {} ({:.2}s)",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.title,
            start.elapsed().as_secs_f64()
        );
        for line in lines {
            println!("    {line}");
        }
        if !pass {
            failed.push(c.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria PASS");
    } else {
        println!("acceptance: FAIL on criteria {failed:?}");
        std::process::exit(1);
    }
}
