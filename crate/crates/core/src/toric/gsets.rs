//! The binomial sets `G_1, ..., G_8`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{Binomial, Monomial, Provenance, VariableOrder};
use crate::error::Result;
use crate::families::PhdSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GSets {
    pub order: VariableOrder,
    /// Nonzero binomials in generation order (`G_1` first), duplicates removed.
    pub binomials: Vec<Binomial>,
    /// Index tuples whose two monomials coincide (the zero binomial).
    pub trivial: usize,
    /// Exact duplicates of an earlier binomial.
    pub duplicates: usize,
    /// Displayed binomials whose first monomial is not the larger one.
    pub orientation_mismatches: Vec<String>,
    /// Parts that cannot be formed for these parameters, with the reason.
    pub skipped: Vec<String>,
}

impl GSets {
    pub fn of(&self, provenance: Provenance) -> impl Iterator<Item = &Binomial> {
        self.binomials.iter().filter(move |b| b.provenance == provenance)
    }

    pub fn count(&self, provenance: Provenance) -> usize {
        self.of(provenance).count()
    }

    pub fn max_degree(&self) -> u32 {
        self.binomials.iter().map(Binomial::degree).max().unwrap_or(0)
    }
}

struct Builder {
    out: GSets,
    seen: HashSet<(Monomial, Monomial)>,
}

impl Builder {
    fn push(&mut self, first: Monomial, second: Monomial, provenance: Provenance) {
        let shown = format!("{} - {}", self.out.order.format(&first), self.out.order.format(&second));
        let first_is_lead = first > second;
        match Binomial::new(first, second, provenance) {
            None => self.out.trivial += 1,
            Some(b) => {
                if !first_is_lead {
                    self.out.orientation_mismatches.push(format!("{provenance}: {shown}"));
                }
                if self.seen.insert((b.lead.clone(), b.trail.clone())) {
                    self.out.binomials.push(b);
                } else {
                    self.out.duplicates += 1;
                }
            }
        }
    }
}

/// All binomials of `G_1, ..., G_8` with the displayed index ranges. Empty
/// ranges give empty sets; terms naming a variable that does not exist for
/// these parameters are skipped and listed in [`GSets::skipped`].
pub fn generate_g_sets(spec: PhdSpec) -> Result<GSets> {
    let spec = PhdSpec::new(spec.h, spec.d)?;
    let o = VariableOrder::new(spec);
    let (h, d) = (spec.h as usize, spec.d);
    let mut b = Builder {
        out: GSets {
            order: o.clone(),
            binomials: Vec::new(),
            trivial: 0,
            duplicates: 0,
            orientation_mismatches: Vec::new(),
            skipped: Vec::new(),
        },
        seen: HashSet::new(),
    };
    let x = |i: usize| o.x(i).expect("x index in range");
    let y = |j: usize| o.y(j).expect("y index in range");
    let z = |j: usize| o.z(j).expect("z index in range");
    let w = |k: usize| o.w(k).expect("w index in range");
    let m = |factors: &[(usize, u32)]| o.monomial(factors);

    for i in 1..=d - 2 {
        for j in i + 1..=d - 2 {
            b.push(m(&[(x(2 * i - 1), 1), (x(2 * j), 1)]), m(&[(x(2 * i), 1), (x(2 * j - 1), 1)]), Provenance::G1);
        }
    }

    let quads = |lo: usize| {
        let mut out = Vec::new();
        for i in lo..=h {
            for j in i..=h {
                for k in j..=h {
                    for l in k..=h {
                        if i + l == j + k {
                            out.push((i, j, k, l));
                        }
                    }
                }
            }
        }
        out
    };
    for (i, j, k, l) in quads(1) {
        b.push(m(&[(y(i), 1), (y(l), 1)]), m(&[(y(j), 1), (y(k), 1)]), Provenance::G2);
        b.push(m(&[(z(i), 1), (z(l), 1)]), m(&[(z(j), 1), (z(k), 1)]), Provenance::G2);
    }
    for (i, j, k, l) in quads(0) {
        b.push(m(&[(w(i), 1), (w(l), 1)]), m(&[(w(j), 1), (w(k), 1)]), Provenance::G3);
    }

    for i in 1..=d - 2 {
        for j in 1..=h {
            b.push(m(&[(x(2 * i - 1), 1), (z(j), 1)]), m(&[(x(2 * i), 1), (w(j - 1), 1)]), Provenance::G4);
            b.push(m(&[(x(2 * i - 1), 1), (w(j), 1)]), m(&[(x(2 * i), 1), (y(j), 1)]), Provenance::G4);
        }
    }

    for i in 1..=h {
        for j in 1..=h {
            b.push(m(&[(y(i), 1), (z(j), 1)]), m(&[(w(i - 1), 1), (w(j), 1)]), Provenance::G5);
        }
    }

    for i in 1..h {
        for j in 1..=h {
            b.push(m(&[(y(i), 1), (w(j), 1)]), m(&[(y(i + 1), 1), (w(j - 1), 1)]), Provenance::G6);
            b.push(m(&[(z(i), 1), (w(j), 1)]), m(&[(z(i + 1), 1), (w(j - 1), 1)]), Provenance::G6);
        }
    }

    for i in 1..=d - 2 {
        for j in 2..=h {
            b.push(
                m(&[(x(2 * i - 1), 1), (y(j), 1), (w(0), 1)]),
                m(&[(x(2 * i), 1), (y(1), 1), (y(j - 1), 1)]),
                Provenance::G7,
            );
        }
    }

    if d >= 4 {
        if h >= 2 {
            for k in 0..=d - 4 {
                let mut lhs: Vec<(usize, u32)> = (1..=k).map(|q| (x(2 * q - 1), 1)).collect();
                lhs.extend((k + 1..=d - 2).map(|q| (x(2 * q), 1)));
                let rhs = [(z(1), (d - 4 - k) as u32), (z(2), 1), (w(0), (k + 1) as u32)];
                b.push(m(&lhs), m(&rhs), Provenance::G8);
            }
        } else {
            b.out.skipped.push(format!(
                "G8, first family (k = 0..{}): its second monomial uses z_2, which does not exist when h = 1",
                d - 4
            ));
        }
    }
    let mut lhs: Vec<(usize, u32)> = vec![(x(2 * d - 4), 1)];
    lhs.extend((1..=d - 3).map(|q| (x(2 * q - 1), 1)));
    b.push(m(&lhs), m(&[(w(0), (d - 3) as u32), (w(1), 1)]), Provenance::G8);
    let lhs: Vec<(usize, u32)> = (1..=d - 2).map(|q| (x(2 * q - 1), 1)).collect();
    b.push(m(&lhs), m(&[(w(0), (d - 3) as u32), (y(1), 1)]), Provenance::G8);

    Ok(b.out)
}
