//! Library results checked against the brute-force oracles.

use std::collections::BTreeSet;

use polyhole::families::{build_ogata_p2, build_phd, build_qk, expected_holes, unit_cube, PhdSpec};
use polyhole::linalg::{hermite_normal_form, smith_normal_form, IntMatrix};
use polyhole::polytope::{facet_enumeration, LatticePolytope};
use polyhole::semigroup::{hilbert_basis, homogenize, Cone};
use polyhole::toric::{complete_basis, generate_g_sets, Binomial, ToricMap};
use polyhole::Budget;
use polyhole_checks::oracle::{self, Pt};

fn spec(h: u32, d: usize) -> PhdSpec {
    PhdSpec::new(h, d).unwrap()
}

fn facet_keys(p: &LatticePolytope) -> BTreeSet<(Pt, i64)> {
    facet_enumeration(p).unwrap().facet_keys()
}

#[test]
fn facets_match_brute_force_on_the_grid() {
    for h in 1..=3 {
        for d in 3..=5 {
            let p = build_phd(spec(h, d)).unwrap();
            assert_eq!(facet_keys(&p), oracle::brute_facets(p.points()), "(h, d) = ({h}, {d})");
        }
    }
}

#[test]
fn facet_counts_for_h_one_follow_the_geometry() {
    let counts: Vec<usize> = (3..=5)
        .map(|d| oracle::brute_facets(build_phd(spec(1, d)).unwrap().points()).len())
        .collect();
    assert_eq!(counts, vec![8, 13, 18]);
}

#[test]
fn facets_match_brute_force_on_examples() {
    for p in [build_ogata_p2(), build_qk(4).unwrap(), unit_cube(3).unwrap()] {
        assert_eq!(facet_keys(&p), oracle::brute_facets(p.points()));
    }
}

#[test]
fn lattice_points_match_box_scan() {
    let cases = [
        (build_phd(spec(2, 3)).unwrap(), 2),
        (build_phd(spec(3, 4)).unwrap(), 2),
        (build_qk(4).unwrap(), 3),
        (build_ogata_p2(), 2),
    ];
    for (p, max_n) in cases {
        for n in 1..=max_n {
            let lib: BTreeSet<Pt> = p.lattice_points(n).unwrap().into_iter().collect();
            assert_eq!(lib, oracle::box_points(p.points(), n as i64));
        }
    }
    assert_eq!(oracle::box_points(build_phd(spec(3, 4)).unwrap().points(), 1).len(), 18);
}

#[test]
fn smith_divisors_match_determinantal_divisors() {
    let matrices: Vec<Vec<Vec<i64>>> = vec![
        vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]],
        vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]],
        vec![vec![6, 0], vec![0, 4], vec![3, 2]],
        vec![vec![0, 0, 0], vec![0, 0, 0]],
    ];
    for m in matrices {
        let cols = m[0].len();
        let snf = smith_normal_form(&IntMatrix::from_rows(&m, cols).unwrap());
        let lib: Vec<i128> = snf.elementary_divisors.iter().map(|x| x.to_string().parse().unwrap()).collect();
        assert_eq!(lib, oracle::elementary_divisors(&m), "{m:?}");
    }
}

#[test]
fn hermite_columns_span_the_same_lattice() {
    let m = vec![vec![3, 1, 4, 1], vec![5, 9, 2, 6], vec![5, 3, 5, 8]];
    let hnf = hermite_normal_form(&IntMatrix::from_rows(&m, 4).unwrap());
    let basis = hnf.basis().to_i64_columns().unwrap();
    let rank = oracle::rank(&m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect::<Vec<_>>());
    assert_eq!(basis.len(), rank);
    let rows_of = |cols: &[Pt]| -> Vec<Pt> { (0..3).map(|i| cols.iter().map(|c| c[i]).collect()).collect() };
    assert_eq!(oracle::elementary_divisors(&rows_of(&basis)), oracle::elementary_divisors(&m));
}

#[test]
fn hilbert_bases_match_brute_force() {
    let cones: Vec<(Vec<Pt>, Vec<Pt>)> = vec![
        (vec![vec![1, 0], vec![1, 3]], vec![vec![0, 1], vec![3, -1]]),
        (vec![vec![2, -1], vec![-1, 2]], vec![vec![2, 1], vec![1, 2]]),
        (
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 3]],
            vec![vec![3, 0, -1], vec![0, 3, -1], vec![0, 0, 1]],
        ),
    ];
    for (rays, facets) in cones {
        let cone = Cone::new(&rays).unwrap();
        let lib: BTreeSet<Pt> = hilbert_basis(&cone, &Budget::default()).unwrap().elements.into_iter().collect();
        assert_eq!(lib, oracle::brute_hilbert_basis(&rays, &facets), "{rays:?}");
    }
}

#[test]
fn holes_match_sumset_complement() {
    for (h, d) in [(1, 3), (2, 3), (2, 4)] {
        let s = spec(h, d);
        let p = build_phd(s).unwrap();
        let sg = homogenize(&p).unwrap();
        let brute = oracle::brute_holes(p.points(), 2);
        let lib: BTreeSet<Pt> = sg.holes_at_degree(2).unwrap().into_iter().collect();
        assert_eq!(lib, brute);
        assert_eq!(brute, expected_holes(s).unwrap().into_iter().collect());
        assert!(sg.holes_at_degree(3).unwrap().is_empty());
        assert!(oracle::brute_holes(p.points(), 3).is_empty());
    }
    let q = build_qk(5).unwrap();
    let lib: BTreeSet<Pt> = homogenize(&q).unwrap().holes_at_degree(2).unwrap().into_iter().collect();
    assert_eq!(lib, oracle::brute_holes(q.points(), 2));
}

fn to_poly(b: &Binomial) -> oracle::Poly {
    oracle::Poly::from([(b.lead.exponents.clone(), 1), (b.trail.exponents.clone(), -1)])
}

#[test]
fn completion_matches_textbook_buchberger() {
    for (h, d) in [(2, 3), (2, 4), (3, 4), (1, 4)] {
        let g = generate_g_sets(spec(h, d)).unwrap();
        let oracle = oracle::buchberger(&g.binomials.iter().map(to_poly).collect::<Vec<_>>());
        let lib: Vec<oracle::Poly> =
            complete_basis(&g.binomials, &Budget::default()).unwrap().iter().map(to_poly).collect();
        assert_eq!(lib, oracle, "(h, d) = ({h}, {d})");
    }
}

#[test]
fn completed_basis_separates_fibers() {
    // Two monomials with the same image must share one normal form.
    let s = spec(2, 4);
    let g = generate_g_sets(s).unwrap();
    let basis: Vec<oracle::Poly> = oracle::buchberger(&g.binomials.iter().map(to_poly).collect::<Vec<_>>());
    let map = ToricMap::new(s);
    let n = g.order.len();
    for deg in 1..=3 {
        let mut fibers: std::collections::BTreeMap<Pt, BTreeSet<Vec<u32>>> = Default::default();
        for m in oracle::monomials_of_degree(n, deg) {
            let image: Pt = (0..s.d)
                .map(|k| m.iter().zip(&map.images).map(|(&e, img)| e as i64 * img[k]).sum())
                .collect();
            let nf = oracle::normal_form(&oracle::Poly::from([(m, 1)]), &basis);
            assert_eq!(nf.len(), 1);
            fibers.entry(image).or_default().insert(nf.into_keys().next().unwrap());
        }
        assert!(fibers.values().all(|forms| forms.len() == 1), "degree {deg}");
    }
}

#[test]
fn listed_binomials_alone_do_not_separate_fibers_for_d_four() {
    let s = spec(2, 4);
    let g = generate_g_sets(s).unwrap();
    let listed: Vec<oracle::Poly> = g.binomials.iter().map(to_poly).collect();
    let x2x3 = g.order.monomial(&[(g.order.x(2).unwrap(), 1), (g.order.x(3).unwrap(), 1)]);
    let w0w1 = g.order.monomial(&[(g.order.w(0).unwrap(), 1), (g.order.w(1).unwrap(), 1)]);
    let map = ToricMap::new(s);
    assert_eq!(map.image(&x2x3), map.image(&w0w1));
    let nf = |m: &polyhole::toric::Monomial| oracle::normal_form(&oracle::Poly::from([(m.exponents.clone(), 1)]), &listed);
    assert_ne!(nf(&x2x3), nf(&w0w1));
}

#[test]
fn qk_holes_match_sumset_complement() {
    // Only the degree-two holes number k - 3; deeper levels add more.
    for (k, degree_two, total) in [(4, 1, 1), (5, 2, 6), (6, 3, 21)] {
        let q = build_qk(k).unwrap();
        let sg = homogenize(&q).unwrap();
        let report = sg.enumerate_holes(8).unwrap();
        assert!(report.certified_complete);
        for n in 2..=5 {
            let lib: BTreeSet<Pt> = sg.holes_at_degree(n).unwrap().into_iter().collect();
            assert_eq!(lib, oracle::brute_holes(q.points(), n), "k = {k}, n = {n}");
        }
        assert_eq!(report.holes_by_degree[&2].len(), degree_two);
        assert_eq!(report.hole_count(), total);
    }
}
