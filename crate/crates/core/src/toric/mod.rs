//! Binomial Gröbner bases of the toric ideal of the `F_0` configuration.

mod complete;
mod gsets;
mod reduce;
mod verify;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use complete::complete_basis;
pub use gsets::{generate_g_sets, GSets};
pub use reduce::{reduce, s_pair, Polynomial};
pub use verify::{
    buchberger_verify, initial_ideal_squarefree, CompletionSummary, GroebnerFailure, GroebnerReport, VerifyOptions};

use crate::error::{Error, Result};
use crate::families::{build_f0_configuration, PhdSpec};
use crate::linalg::IntMatrix;

/// Variables `x_1 > ... > x_{2d-4} > y_1 > ... > y_h > z_1 > ... > z_h > w_0 > ... > w_h`.
/// Index 0 is the largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableOrder {
    pub h: usize,
    pub d: usize,
    pub names: Vec<String>,
}

impl VariableOrder {
    pub fn new(spec: PhdSpec) -> Self {
        let (h, d) = (spec.h as usize, spec.d);
        let mut names: Vec<String> = (1..=2 * d - 4).map(|i| format!("x{i}")).collect();
        names.extend((1..=h).map(|j| format!("y{j}")));
        names.extend((1..=h).map(|j| format!("z{j}")));
        names.extend((0..=h).map(|k| format!("w{k}")));
        VariableOrder { h, d, names }
    }

    /// `2d + 3h - 3`.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// `x_i`, `1 <= i <= 2d-4`.
    pub fn x(&self, i: usize) -> Option<usize> {
        (1..=2 * self.d - 4).contains(&i).then(|| i - 1)
    }

    /// `y_j`, `1 <= j <= h`.
    pub fn y(&self, j: usize) -> Option<usize> {
        (1..=self.h).contains(&j).then(|| 2 * self.d - 4 + j - 1)
    }

    /// `z_j`, `1 <= j <= h`.
    pub fn z(&self, j: usize) -> Option<usize> {
        (1..=self.h).contains(&j).then(|| 2 * self.d - 4 + self.h + j - 1)
    }

    /// `w_k`, `0 <= k <= h`.
    pub fn w(&self, k: usize) -> Option<usize> {
        (k <= self.h).then(|| 2 * self.d - 4 + 2 * self.h + k)
    }

    pub fn monomial(&self, factors: &[(usize, u32)]) -> Monomial {
        let mut e = vec![0; self.len()];
        for &(var, power) in factors {
            e[var] += power;
        }
        Monomial { exponents: e }
    }

    pub fn format(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { self.names[i].clone() } else { format!("{}^{e}", self.names[i]) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Exponent vector over a [`VariableOrder`]. The derived ordering is the
/// lexicographic order with the first variable largest.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exponents: vec![0; n] }
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect() }
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial { exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a - b).collect() }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }
}

pub fn lex_compare(a: &Monomial, b: &Monomial, order: &VariableOrder) -> Result<Ordering> {
    let n = order.len();
    for m in [a, b] {
        if m.exponents.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: m.exponents.len() });
        }
    }
    Ok(a.cmp(b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Provenance {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    G7,
    G8,
    SPair,
    Reduced,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Provenance::G1 => "G1",
            Provenance::G2 => "G2",
            Provenance::G3 => "G3",
            Provenance::G4 => "G4",
            Provenance::G5 => "G5",
            Provenance::G6 => "G6",
            Provenance::G7 => "G7",
            Provenance::G8 => "G8",
            Provenance::SPair => "spair",
            Provenance::Reduced => "reduced",
        };
        f.write_str(s)
    }
}

/// `lead - trail` with `lead > trail`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Binomial {
    pub lead: Monomial,
    pub trail: Monomial,
    pub provenance: Provenance,
}

impl Binomial {
    /// Orders the two monomials; `None` when they coincide (the zero binomial).
    pub fn new(a: Monomial, b: Monomial, provenance: Provenance) -> Option<Self> {
        match a.cmp(&b) {
            Ordering::Greater => Some(Binomial { lead: a, trail: b, provenance }),
            Ordering::Less => Some(Binomial { lead: b, trail: a, provenance }),
            Ordering::Equal => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.lead.degree().max(self.trail.degree())
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::binomial(self.lead.clone(), self.trail.clone())
    }

    pub fn format(&self, order: &VariableOrder) -> String {
        format!("{} - {}", order.format(&self.lead), order.format(&self.trail))
    }
}

/// `π`: variable `i` maps to the Laurent monomial `t^{images[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricMap {
    pub images: Vec<Vec<i64>>,
}

impl ToricMap {
    /// The map of the displayed formulas for `π`.
    pub fn new(spec: PhdSpec) -> Self {
        let d = spec.d;
        let h = spec.h as i64;
        let t = |mid: i64, last: i64| {
            let mut v = vec![mid; d];
            v[0] = 1;
            v[d - 1] = last;
            v
        };
        let mut images = Vec::new();
        for i in 1..=d - 2 {
            let mut odd = vec![0; d];
            odd[0] = 1;
            odd[i] = 1;
            let mut even = odd.clone();
            even[d - 1] = 1;
            images.push(odd);
            images.push(even);
        }
        images.extend((1..=h).map(|j| t(j, j - 1)));
        images.extend((1..=h).map(|j| t(j - 1, j)));
        images.extend((0..=h).map(|k| t(k, k)));
        ToricMap { images }
    }

    /// Columns of an integer configuration matrix.
    pub fn from_configuration(a: &IntMatrix) -> Result<Self> {
        Ok(ToricMap { images: a.to_i64_columns()? })
    }

    pub fn configuration(spec: PhdSpec) -> Result<Self> {
        Self::from_configuration(&build_f0_configuration(spec)?)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, m: &Monomial) -> Vec<i64> {
        let d = self.images.first().map_or(0, Vec::len);
        let mut out = vec![0; d];
        for (e, img) in m.exponents.iter().zip(&self.images) {
            for (o, v) in out.iter_mut().zip(img) {
                *o += *e as i64 * v;
            }
        }
        out
    }
}

/// `π(lead) = π(trail)`.
pub fn in_toric_ideal(g: &Binomial, map: &ToricMap) -> bool {
    map.image(&g.lead) == map.image(&g.trail)
}
