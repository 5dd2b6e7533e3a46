//! Brute-force oracles that share no code with the library algorithms.

use std::collections::{BTreeMap, BTreeSet};

pub type Pt = Vec<i64>;

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Fraction-free (Bareiss) determinant.
pub fn det(rows: &[Vec<i128>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Rank by rational elimination on cross-multiplied integer rows.
pub fn rank(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let pivot = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x = *x * a - y * b;
                }
                let g = m[i].iter().fold(0, |g, &x| gcd(g, x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

pub fn affine_rank(points: &[Pt]) -> usize {
    let Some(p0) = points.first() else { return 0 };
    let diffs: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(p0).map(|(a, b)| (a - b) as i128).collect())
        .collect();
    rank(&diffs)
}

/// `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Facets of a full-dimensional `conv(points)` as primitive `(a, b)` with
/// `a·x <= b`: every hyperplane through `n` affinely independent points that
/// leaves all points on one side and contains `n` independent ones.
pub fn brute_facets(points: &[Pt]) -> BTreeSet<(Pt, i64)> {
    let n = points[0].len();
    let pts: Vec<Pt> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    assert_eq!(affine_rank(&pts), n, "oracle needs a full-dimensional polytope");
    let mut out = BTreeSet::new();
    for idx in subsets(pts.len(), n) {
        let base = &pts[idx[0]];
        let diffs: Vec<Vec<i128>> = idx[1..]
            .iter()
            .map(|&i| pts[i].iter().zip(base).map(|(a, b)| (a - b) as i128).collect())
            .collect();
        let mut normal: Vec<i128> = (0..n)
            .map(|k| {
                let minor: Vec<Vec<i128>> = diffs
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &x)| x).collect())
                    .collect();
                if k % 2 == 0 { det(&minor) } else { -det(&minor) }
            })
            .collect();
        let g = normal.iter().fold(0, |g, &x| gcd(g, x));
        if g == 0 {
            continue;
        }
        normal.iter_mut().for_each(|x| *x /= g);
        let value = |p: &Pt| -> i128 { normal.iter().zip(p).map(|(a, &b)| a * b as i128).sum() };
        let b = value(base);
        let (lo, hi) = (pts.iter().any(|p| value(p) < b), pts.iter().any(|p| value(p) > b));
        if lo && hi {
            continue;
        }
        if hi {
            normal.iter_mut().for_each(|x| *x = -*x);
        }
        let offset = if hi { -b } else { b };
        out.insert((normal.iter().map(|&x| x as i64).collect(), offset as i64));
    }
    out
}

/// Lattice points of `n·conv(points)` by scanning the bounding box against
/// the brute-force facets.
pub fn box_points(points: &[Pt], dilation: i64) -> BTreeSet<Pt> {
    let facets = brute_facets(points);
    let n = points[0].len();
    let lo: Vec<i64> = (0..n).map(|i| points.iter().map(|p| p[i]).min().unwrap() * dilation).collect();
    let hi: Vec<i64> = (0..n).map(|i| points.iter().map(|p| p[i]).max().unwrap() * dilation).collect();
    let mut out = BTreeSet::new();
    let mut x = lo.clone();
    loop {
        if facets.iter().all(|(a, b)| a.iter().zip(&x).map(|(p, q)| p * q).sum::<i64>() <= b * dilation) {
            out.insert(x.clone());
        }
        let mut i = 0;
        while i < n && x[i] == hi[i] {
            x[i] = lo[i];
            i += 1;
        }
        if i == n {
            return out;
        }
        x[i] += 1;
    }
}

/// `{p_1 + ... + p_n : p_i ∈ points}`.
pub fn sumset(points: &[Pt], n: u32) -> BTreeSet<Pt> {
    let dim = points[0].len();
    let mut level: BTreeSet<Pt> = BTreeSet::from([vec![0; dim]]);
    for _ in 0..n {
        level = level
            .iter()
            .flat_map(|s| points.iter().map(move |p| s.iter().zip(p).map(|(a, b)| a + b).collect()))
            .collect();
    }
    level
}

/// Holes at degree `n` for a full-dimensional polytope whose lattice is the
/// standard one: lattice points of `nP` that are not sums of `n` lattice
/// points of `P`, with the degree appended.
pub fn brute_holes(points: &[Pt], n: u32) -> BTreeSet<Pt> {
    let lattice: Vec<Pt> = box_points(points, 1).into_iter().collect();
    let sums = sumset(&lattice, n);
    box_points(points, n as i64)
        .into_iter()
        .filter(|x| !sums.contains(x))
        .map(|mut x| {
            x.push(n as i64);
            x
        })
        .collect()
}

/// `k`-th determinantal divisor: gcd of all `k x k` minors.
pub fn determinantal_divisor(m: &[Vec<i64>], k: usize) -> i128 {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut g = 0;
    for rows in subsets(r, k) {
        for cols in subsets(c, k) {
            let minor: Vec<Vec<i128>> =
                rows.iter().map(|&i| cols.iter().map(|&j| m[i][j] as i128).collect()).collect();
            g = gcd(g, det(&minor));
        }
    }
    g
}

/// Elementary divisors `d_k / d_{k-1}` for `k` up to the rank.
pub fn elementary_divisors(m: &[Vec<i64>]) -> Vec<i128> {
    let max = m.len().min(m.first().map_or(0, Vec::len));
    let mut out = Vec::new();
    let mut prev = 1;
    for k in 1..=max {
        let dk = determinantal_divisor(m, k);
        if dk == 0 {
            break;
        }
        out.push(dk / prev);
        prev = dk;
    }
    out
}

/// Hilbert basis of `cone(rays)` for a full-dimensional pointed cone whose
/// facet inequalities are given: irreducible lattice points inside the box
/// spanned by the zonotope of the rays.
pub fn brute_hilbert_basis(rays: &[Pt], facets: &[Pt]) -> BTreeSet<Pt> {
    let n = rays[0].len();
    let bound: Vec<i64> = (0..n).map(|i| rays.iter().map(|r| r[i].abs()).sum()).collect();
    let inside = |x: &Pt| facets.iter().all(|a| a.iter().zip(x).map(|(p, q)| p * q).sum::<i64>() >= 0);
    let mut points = Vec::new();
    let mut x: Pt = bound.iter().map(|b| -b).collect();
    loop {
        if x.iter().any(|&v| v != 0) && inside(&x) {
            points.push(x.clone());
        }
        let mut i = 0;
        while i < n && x[i] == bound[i] {
            x[i] = -bound[i];
            i += 1;
        }
        if i == n {
            break;
        }
        x[i] += 1;
    }
    let set: BTreeSet<Pt> = points.iter().cloned().collect();
    points
        .iter()
        .filter(|x| {
            !points.iter().any(|y| {
                let z: Pt = x.iter().zip(y).map(|(a, b)| a - b).collect();
                z.iter().any(|&v| v != 0) && set.contains(&z)
            })
        })
        .cloned()
        .collect()
}

/// Polynomials with integer coefficients over exponent vectors, compared in
/// lex order with the first variable largest.
pub type Poly = BTreeMap<Vec<u32>, i64>;

fn lex_gt(a: &[u32], b: &[u32]) -> bool {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x > y;
        }
    }
    false
}

pub fn lead(p: &Poly) -> Option<(Vec<u32>, i64)> {
    let mut best: Option<(&Vec<u32>, i64)> = None;
    for (m, &c) in p {
        if best.is_none_or(|(b, _)| lex_gt(m, b)) {
            best = Some((m, c));
        }
    }
    best.map(|(m, c)| (m.clone(), c))
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn add_scaled(p: &mut Poly, q: &Poly, coeff: i64, shift: &[u32]) {
    for (m, c) in q {
        let key: Vec<u32> = m.iter().zip(shift).map(|(a, b)| a + b).collect();
        let e = p.entry(key.clone()).or_insert(0);
        *e += coeff * c;
        if *e == 0 {
            p.remove(&key);
        }
    }
}

/// Full reduction by a list of monic polynomials.
pub fn normal_form(p: &Poly, basis: &[Poly]) -> Poly {
    let mut p = p.clone();
    let mut rest = Poly::new();
    while let Some((m, c)) = lead(&p) {
        let hit = basis.iter().find_map(|g| {
            let (gm, gc) = lead(g).unwrap();
            divides(&gm, &m).then(|| (g, gc, m.iter().zip(&gm).map(|(a, b)| a - b).collect::<Vec<u32>>()))
        });
        match hit {
            Some((g, gc, shift)) => {
                assert_eq!(gc.abs(), 1, "oracle expects monic leads");
                add_scaled(&mut p, g, -c * gc, &shift);
            }
            None => {
                p.remove(&m);
                rest.insert(m, c);
            }
        }
    }
    rest
}

fn monic(mut p: Poly) -> Poly {
    if let Some((_, c)) = lead(&p) {
        if c < 0 {
            p.values_mut().for_each(|v| *v = -*v);
        }
    }
    p
}

/// Textbook Buchberger over every pair, then interreduction to the reduced
/// Gröbner basis, sorted by decreasing lead.
pub fn buchberger(generators: &[Poly]) -> Vec<Poly> {
    let mut g: Vec<Poly> = generators.iter().filter(|p| !p.is_empty()).cloned().map(monic).collect();
    let mut pairs: Vec<(usize, usize)> = subsets(g.len(), 2).into_iter().map(|v| (v[0], v[1])).collect();
    while let Some((i, j)) = pairs.pop() {
        let (li, ci) = lead(&g[i]).unwrap();
        let (lj, cj) = lead(&g[j]).unwrap();
        let l: Vec<u32> = li.iter().zip(&lj).map(|(a, b)| *a.max(b)).collect();
        let mut s = Poly::new();
        add_scaled(&mut s, &g[i], cj, &l.iter().zip(&li).map(|(a, b)| a - b).collect::<Vec<_>>());
        add_scaled(&mut s, &g[j], -ci, &l.iter().zip(&lj).map(|(a, b)| a - b).collect::<Vec<_>>());
        let r = normal_form(&s, &g);
        if !r.is_empty() {
            let k = g.len();
            g.push(monic(r));
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    let leads: Vec<Vec<u32>> = g.iter().map(|p| lead(p).unwrap().0).collect();
    let minimal: Vec<Poly> = g
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            !leads.iter().enumerate().any(|(j, lj)| {
                j != i && divides(lj, &leads[i]) && (lj != &leads[i] || j < i)
            })
        })
        .map(|(_, p)| p.clone())
        .collect();
    let mut reduced: Vec<Poly> = minimal
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let others: Vec<Poly> = minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| q.clone()).collect();
            let (m, c) = lead(p).unwrap();
            let mut tail = p.clone();
            tail.remove(&m);
            let mut out = normal_form(&tail, &others);
            out.insert(m, c);
            out
        })
        .collect();
    reduced.sort_by(|a, b| {
        let (la, lb) = (lead(a).unwrap().0, lead(b).unwrap().0);
        if lex_gt(&la, &lb) {
            std::cmp::Ordering::Less
        } else if la == lb {
            std::cmp::Ordering::Equal
        } else {
            std::cmp::Ordering::Greater
        }
    });
    reduced
}

/// All exponent vectors in `n` variables with total degree exactly `deg`.
pub fn monomials_of_degree(n: usize, deg: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=deg).rev() {
        for mut rest in monomials_of_degree(n - 1, deg - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
