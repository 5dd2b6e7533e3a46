//! Buchberger completion of a binomial set to the reduced Gröbner basis.

use super::reduce::{normal_form, reduce, s_pair};
use super::{Binomial, Provenance};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Turns a nonzero reduced S-polynomial (two terms, opposite coefficients)
/// into a binomial.
fn to_binomial(p: &super::Polynomial) -> Result<Option<Binomial>> {
    if p.is_zero() {
        return Ok(None);
    }
    if !p.is_binomial() {
        return Err(Error::invalid("completion met a non-binomial remainder"));
    }
    let mut it = p.terms.keys().cloned();
    let (a, b) = (it.next().expect("two terms"), it.next().expect("two terms"));
    Ok(Binomial::new(a, b, Provenance::SPair))
}

/// Completes `basis` by Buchberger's algorithm, then returns the reduced
/// Gröbner basis sorted by leading monomial (descending).
pub fn complete_basis(basis: &[Binomial], budget: &Budget) -> Result<Vec<Binomial>> {
    let mut g: Vec<Binomial> = basis.to_vec();
    let mut pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut processed: u64 = 0;
    while let Some((i, j)) = pairs.pop() {
        processed += 1;
        if processed > budget.max_nodes {
            return Err(Error::Budget(format!("completion exceeded {} pairs", budget.max_nodes)));
        }
        if processed.is_multiple_of(256) {
            budget.check_time("Buchberger completion")?;
        }
        if g[i].lead.is_coprime(&g[j].lead) {
            continue;
        }
        let r = reduce(&s_pair(&g[i], &g[j]), &g, budget)?;
        if let Some(b) = to_binomial(&r)? {
            let k = g.len();
            g.push(b);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // minimal: drop elements whose lead is divisible by another lead
    let mut minimal: Vec<Binomial> = Vec::new();
    for (idx, b) in g.iter().enumerate() {
        let redundant = g.iter().enumerate().any(|(other, c)| {
            other != idx && c.lead.divides(&b.lead) && (c.lead != b.lead || other < idx)
        });
        if !redundant {
            minimal.push(b.clone());
        }
    }
    // reduced: trails in normal form
    let mut reduced = Vec::with_capacity(minimal.len());
    for b in &minimal {
        let trail = normal_form(&b.trail, &minimal, budget)?;
        reduced.push(Binomial { lead: b.lead.clone(), trail, provenance: Provenance::Reduced });
    }
    reduced.sort_by(|a, b| b.lead.cmp(&a.lead));
    Ok(reduced)
}

#[cfg(test)]
mod tests {
    use super::super::{generate_g_sets, initial_ideal_squarefree};
    use super::*;
    use crate::families::PhdSpec;

    #[test]
    fn p23_completion_keeps_the_initial_ideal() {
        let g = generate_g_sets(PhdSpec::new(2, 3).unwrap()).unwrap();
        let reduced = complete_basis(&g.binomials, &Budget::default()).unwrap();
        let mut leads: Vec<_> = g.binomials.iter().map(|b| b.lead.clone()).collect();
        leads.sort_by(|a, b| b.cmp(a));
        leads.dedup();
        let minimal: Vec<_> =
            leads.iter().filter(|l| !leads.iter().any(|m| m != *l && m.divides(l))).cloned().collect();
        let completed: Vec<_> = reduced.iter().map(|b| b.lead.clone()).collect();
        assert_eq!(completed, minimal);
        assert!(initial_ideal_squarefree(&reduced));
    }
}
