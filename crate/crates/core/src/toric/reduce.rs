//! Signed monomial sums, S-polynomials and division by binomials.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Binomial, Monomial};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// A polynomial with integer coefficients. Reduction only ever sees
/// monomials and binomials; [`reduce`] enforces that.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polynomial {
    pub terms: BTreeMap<Monomial, i64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// `a - b`.
    pub fn binomial(a: Monomial, b: Monomial) -> Self {
        let mut p = Self::monomial(a, 1);
        p.add_term(b, -1);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        let v = self.terms.get(&m).copied().unwrap_or(0) + c;
        if v == 0 {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Monomial, i64)> {
        self.terms.iter().next_back().map(|(m, &c)| (m, c))
    }

    /// At most two terms whose coefficients cancel.
    pub fn is_binomial(&self) -> bool {
        match self.terms.len() {
            0 => true,
            1 => false,
            2 => self.terms.values().sum::<i64>() == 0,
            _ => false,
        }
    }
}

/// `S(g1, g2) = (L / lead_2) trail_2 - (L / lead_1) trail_1` with
/// `L = lcm(lead_1, lead_2)`.
pub fn s_pair(g1: &Binomial, g2: &Binomial) -> Polynomial {
    let l = g1.lead.lcm(&g2.lead);
    let mut p = Polynomial::monomial(l.div(&g2.lead).mul(&g2.trail), 1);
    p.add_term(l.div(&g1.lead).mul(&g1.trail), -1);
    p
}

/// Full reduction modulo `basis`: repeatedly rewrites the largest term
/// divisible by some leading monomial, using the first such binomial in
/// `basis` order. Fails if an intermediate has more than two terms.
pub fn reduce(p: &Polynomial, basis: &[Binomial], budget: &Budget) -> Result<Polynomial> {
    let mut p = p.clone();
    let mut steps: u64 = 0;
    loop {
        if p.len() > 2 {
            return Err(Error::invalid(format!("reduction produced {} terms", p.len())));
        }
        let step = p.terms.iter().rev().find_map(|(m, &c)| {
            basis.iter().find(|g| g.lead.divides(m)).map(|g| (m.clone(), c, g))
        });
        let Some((m, c, g)) = step else { return Ok(p) };
        steps += 1;
        if steps > budget.max_nodes {
            return Err(Error::Budget(format!("reduction exceeded {} steps", budget.max_nodes)));
        }
        p.terms.remove(&m);
        p.add_term(m.div(&g.lead).mul(&g.trail), c);
    }
}

/// Normal form of a single monomial under the same rewriting rule.
pub(crate) fn normal_form(m: &Monomial, basis: &[Binomial], budget: &Budget) -> Result<Monomial> {
    let mut m = m.clone();
    let mut steps: u64 = 0;
    while let Some(g) = basis.iter().find(|g| g.lead.divides(&m)) {
        steps += 1;
        if steps > budget.max_nodes {
            return Err(Error::Budget(format!("reduction exceeded {} steps", budget.max_nodes)));
        }
        m = m.div(&g.lead).mul(&g.trail);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::super::{Provenance, VariableOrder};
    use super::*;
    use crate::families::PhdSpec;

    fn setup() -> (VariableOrder, Binomial) {
        let o = VariableOrder::new(PhdSpec::new(2, 4).unwrap());
        let (x1, x2, x3, x4) = (o.x(1).unwrap(), o.x(2).unwrap(), o.x(3).unwrap(), o.x(4).unwrap());
        let g = Binomial::new(o.monomial(&[(x1, 1), (x4, 1)]), o.monomial(&[(x2, 1), (x3, 1)]), Provenance::G1).unwrap();
        (o, g)
    }

    #[test]
    fn lead_reduces_to_trail() {
        let (_, g) = setup();
        let r = reduce(&Polynomial::monomial(g.lead.clone(), 1), std::slice::from_ref(&g), &Budget::default()).unwrap();
        assert_eq!(r, Polynomial::monomial(g.trail.clone(), 1));
        assert_eq!(normal_form(&g.lead, std::slice::from_ref(&g), &Budget::default()).unwrap(), g.trail);
    }

    #[test]
    fn zero_and_multiple() {
        let (o, g) = setup();
        assert!(reduce(&Polynomial::zero(), std::slice::from_ref(&g), &Budget::default()).unwrap().is_zero());
        let y1 = o.monomial(&[(o.y(1).unwrap(), 1)]);
        let p = Polynomial::binomial(g.lead.mul(&y1), g.trail.mul(&y1));
        assert!(reduce(&p, std::slice::from_ref(&g), &Budget::default()).unwrap().is_zero());
    }

    #[test]
    fn self_pair_is_zero() {
        let (_, g) = setup();
        assert!(s_pair(&g, &g).is_zero());
    }
}
