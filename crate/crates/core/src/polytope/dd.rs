//! Double description method for the facets of a full-dimensional cone.
//!
//! Facet normals of `cone(G)` are the extreme rays of the dual cone
//! `{a : a·g >= 0 for all g in G}`. Those rays are built incrementally: start
//! from a simplicial cone on `D` independent generators and intersect with one
//! constraint at a time, combining adjacent positive/negative ray pairs.
//! Adjacency uses the combinatorial zero-set test.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{to_i64, IntMatrix};
use crate::util::BitSet;

struct Ray {
    coords: Vec<BigInt>,
    zeros: BitSet,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

/// Primitive inward normals `a` (with `a·g >= 0` on the cone) of every facet
/// of `cone(generators)`, sorted lexicographically. The generators must span
/// the whole space.
pub(crate) fn cone_facets(generators: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let dim = generators.first().map(|g| g.len()).ok_or_else(|| Error::invalid("empty cone"))?;
    if let Some(bad) = generators.iter().find(|g| g.len() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, got: bad.len() });
    }
    if dim == 0 {
        return Ok(Vec::new());
    }
    let gens: Vec<Vec<BigInt>> = generators
        .iter()
        .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
        .collect();

    // independent starting rows
    let mut basis: Vec<usize> = Vec::with_capacity(dim);
    for (i, g) in generators.iter().enumerate() {
        let mut rows: Vec<Vec<i64>> = basis.iter().map(|&b| generators[b].clone()).collect();
        rows.push(g.clone());
        if IntMatrix::from_rows(&rows, dim)?.rank() == rows.len() {
            basis.push(i);
            if basis.len() == dim {
                break;
            }
        }
    }
    if basis.len() < dim {
        return Err(Error::invalid("cone generators do not span the ambient space"));
    }

    // rays of {a : B a >= 0} are the columns of adj(B), sign-corrected
    let b_rows: Vec<Vec<i64>> = basis.iter().map(|&i| generators[i].clone()).collect();
    let b = IntMatrix::from_rows(&b_rows, dim)?;
    let det = b.det()?;
    let m = generators.len();
    let mut rays: Vec<Ray> = Vec::with_capacity(dim);
    for j in 0..dim {
        // column j of the adjugate: cofactors C_{j,i}
        let mut col = Vec::with_capacity(dim);
        for i in 0..dim {
            let rows: Vec<usize> = (0..dim).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..dim).filter(|&c| c != i).collect();
            let minor = b.submatrix(&rows, &cols).det()?;
            let cof = if (i + j) % 2 == 0 { minor } else { -minor };
            col.push(if det.is_negative() { -cof } else { cof });
        }
        let coords = primitive(col);
        let mut zeros = BitSet::new(m);
        for (k, &bi) in basis.iter().enumerate() {
            if k != j {
                zeros.insert(bi);
            }
        }
        rays.push(Ray { coords, zeros });
    }

    let in_basis: Vec<bool> = (0..m).map(|i| basis.contains(&i)).collect();
    for (gi, g) in gens.iter().enumerate() {
        if in_basis[gi] {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(g, &r.coords)).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    r.zeros.insert(gi);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let mut next: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.intersection(&rays[q].zeros);
                if common.count() + 2 < dim {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(r, ray)| r != p && r != q && common.is_subset(&ray.zeros));
                if blocked {
                    continue;
                }
                let vp = &values[p];
                let vq = -&values[q];
                let coords: Vec<BigInt> = rays[q]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(a, b)| vp * a + &vq * b)
                    .collect();
                let mut zeros = common;
                zeros.insert(gi);
                next.push(Ray { coords: primitive(coords), zeros });
            }
        }
        for (i, ray) in rays.into_iter().enumerate() {
            if values[i].is_negative() {
                continue;
            }
            let mut ray = ray;
            if values[i].is_zero() {
                ray.zeros.insert(gi);
            }
            next.push(ray);
        }
        rays = next;
    }

    let mut out: Vec<Vec<i64>> =
        rays.iter().map(|r| to_i64(&r.coords)).collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthant_facets() {
        let gens = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let f = cone_facets(&gens).unwrap();
        assert_eq!(f, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn square_cone_has_four_facets() {
        // cone over the unit square at height one
        let gens = vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]];
        let f = cone_facets(&gens).unwrap();
        assert_eq!(f.len(), 4);
        for a in &f {
            assert!(gens.iter().all(|g| crate::util::dot(a, g) >= 0));
        }
    }

    #[test]
    fn redundant_generators_are_ignored() {
        let gens = vec![vec![1, 0], vec![1, 1], vec![0, 1], vec![2, 1]];
        let f = cone_facets(&gens).unwrap();
        assert_eq!(f, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn degenerate_input_rejected() {
        assert!(cone_facets(&[vec![1, 0], vec![2, 0]]).is_err());
    }
}
