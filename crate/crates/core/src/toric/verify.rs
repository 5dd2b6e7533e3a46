//! Buchberger-criterion verification of a candidate Gröbner basis.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::complete::complete_basis;
use super::reduce::{normal_form, reduce, s_pair};
use super::{in_toric_ideal, Binomial, Monomial, ToricMap, VariableOrder};
use crate::budget::Budget;
use crate::error::Result;
use crate::verdict::Verdict;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOptions {
    /// Degree up to which every binomial of the ideal must reduce to zero.
    /// Defaults to the largest degree in the basis plus two.
    pub membership_bound: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerFailure {
    /// `kernel`, `s_pair` or `fiber`.
    pub kind: String,
    pub detail: String,
}

/// Wire format: `{ "pairs_checked", "failures", "squarefree_initial",
/// "membership_bound", ... }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerReport {
    pub pairs_checked: usize,
    pub failures: Vec<GroebnerFailure>,
    pub squarefree_initial: bool,
    pub membership_bound: u32,
    pub generators: usize,
    pub monomials_checked: usize,
    pub fibers_checked: usize,
    /// Every check ran to completion.
    pub complete: bool,
    pub verdict: Verdict,
    /// Present when the check failed on a set lying in the ideal: what the
    /// reduced Gröbner basis obtained by completing the set looks like.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub completion: Option<CompletionSummary>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletionSummary {
    pub reduced_size: usize,
    /// Elements of the reduced basis whose leading monomial is not a leading
    /// monomial of the input.
    pub added: Vec<String>,
    /// Input leading monomials that are not minimal generators of the
    /// initial ideal.
    pub non_minimal_leads: Vec<String>,
    pub squarefree_initial: bool,
}

const MAX_LISTED_FAILURES: usize = 50;

/// Every leading monomial is squarefree.
pub fn initial_ideal_squarefree(basis: &[Binomial]) -> bool {
    basis.iter().all(|g| g.lead.is_squarefree())
}

/// All monomials in `n` variables with total degree `1..=max_degree`.
fn monomials_up_to(n: usize, max_degree: u32, budget: &Budget) -> Result<Vec<Monomial>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fn rec(i: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>, budget: &Budget) -> Result<()> {
        if i + 1 == current.len() {
            for e in 0..=left {
                current[i] = e;
                if current.iter().any(|&x| x > 0) {
                    out.push(Monomial { exponents: current.clone() });
                }
            }
            current[i] = 0;
            return budget.check_points(out.len(), "monomial enumeration");
        }
        for e in 0..=left {
            current[i] = e;
            rec(i + 1, left - e, current, out, budget)?;
        }
        current[i] = 0;
        Ok(())
    }
    if n > 0 {
        rec(0, max_degree, &mut current, &mut out, budget)?;
    }
    Ok(out)
}

/// Checks (i) every element lies in the toric ideal, (ii) every S-pair
/// reduces to zero, (iii) every binomial of the ideal up to the membership
/// bound reduces to zero: within each fiber of `π` all monomials of degree
/// at most the bound share one normal form.
pub fn buchberger_verify(
    basis: &[Binomial],
    order: &VariableOrder,
    map: &ToricMap,
    options: &VerifyOptions,
    budget: &Budget,
) -> Result<GroebnerReport> {
    let max_degree = basis.iter().map(Binomial::degree).max().unwrap_or(0);
    let bound = options.membership_bound.unwrap_or(max_degree + 2);
    let mut report = GroebnerReport {
        pairs_checked: 0,
        failures: Vec::new(),
        squarefree_initial: initial_ideal_squarefree(basis),
        membership_bound: bound,
        generators: basis.len(),
        monomials_checked: 0,
        fibers_checked: 0,
        complete: false,
        verdict: Verdict::Unknown,
        completion: None,
        notes: Vec::new(),
    };
    let mut failure_count = 0usize;
    let mut kernel_ok = true;
    let mut fail = |report: &mut GroebnerReport, kind: &str, detail: String| {
        failure_count += 1;
        if report.failures.len() < MAX_LISTED_FAILURES {
            report.failures.push(GroebnerFailure { kind: kind.to_string(), detail });
        }
    };

    for g in basis {
        if !in_toric_ideal(g, map) {
            kernel_ok = false;
            fail(&mut report, "kernel", g.format(order));
        }
    }

    let outcome: Result<()> = (|| {
        for i in 0..basis.len() {
            budget.check_time("S-pair verification")?;
            for j in i + 1..basis.len() {
                let s = s_pair(&basis[i], &basis[j]);
                let r = reduce(&s, basis, budget)?;
                report.pairs_checked += 1;
                if !r.is_zero() {
                    let terms: Vec<String> = r.terms.iter().map(|(m, c)| format!("{c:+}*{}", order.format(m))).collect();
                    let detail = format!(
                        "S({}, {}) reduces to {}",
                        basis[i].format(order),
                        basis[j].format(order),
                        terms.join(" ")
                    );
                    fail(&mut report, "s_pair", detail);
                }
            }
        }

        let monomials = monomials_up_to(order.len(), bound, budget)?;
        let mut fibers: HashMap<Vec<i64>, (Monomial, Monomial)> = HashMap::new();
        for m in monomials {
            let nf = normal_form(&m, basis, budget)?;
            report.monomials_checked += 1;
            match fibers.get(&map.image(&m)) {
                None => {
                    fibers.insert(map.image(&m), (m, nf));
                }
                Some((first, first_nf)) if *first_nf != nf => {
                    let detail = format!(
                        "{} - {} lies in the ideal but reduces to {} - {}",
                        order.format(first),
                        order.format(&m),
                        order.format(first_nf),
                        order.format(&nf)
                    );
                    fail(&mut report, "fiber", detail);
                }
                Some(_) => {}
            }
            if report.monomials_checked.is_multiple_of(4096) {
                budget.check_time("fiber verification")?;
            }
        }
        report.fibers_checked = fibers.len();
        Ok(())
    })();

    match outcome {
        Ok(()) => report.complete = true,
        Err(e) if e.is_budget() => report.notes.push(format!("incomplete: {e}")),
        Err(e) => return Err(e),
    }
    if failure_count > report.failures.len() {
        report.notes.push(format!("{failure_count} failures in total, first {} listed", report.failures.len()));
    }
    if failure_count > 0 && kernel_ok {
        match complete_basis(basis, budget) {
            Ok(reduced) => {
                let leads: std::collections::BTreeSet<&Monomial> = basis.iter().map(|b| &b.lead).collect();
                let added = reduced.iter().filter(|b| !leads.contains(&b.lead)).map(|b| b.format(order)).collect();
                let non_minimal_leads = leads
                    .iter()
                    .filter(|l| !reduced.iter().any(|b| &b.lead == **l))
                    .map(|l| order.format(l))
                    .collect();
                report.completion = Some(CompletionSummary {
                    reduced_size: reduced.len(),
                    added,
                    non_minimal_leads,
                    squarefree_initial: initial_ideal_squarefree(&reduced),
                });
            }
            Err(e) if e.is_budget() => report.notes.push(format!("completion not attempted to the end: {e}")),
            Err(e) => return Err(e),
        }
    }
    report.verdict = if failure_count > 0 {
        Verdict::Fails
    } else if report.complete {
        Verdict::Holds
    } else {
        Verdict::Unknown
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::super::{generate_g_sets, Provenance};
    use super::*;
    use crate::families::PhdSpec;

    fn run(h: u32, d: usize, corrupt: bool) -> GroebnerReport {
        let spec = PhdSpec::new(h, d).unwrap();
        let g = generate_g_sets(spec).unwrap();
        let mut basis = g.binomials.clone();
        if corrupt {
            let b = basis.iter_mut().find(|b| b.provenance == Provenance::G5).unwrap();
            let i = b.trail.exponents.iter().position(|&e| e > 0).unwrap();
            b.trail.exponents[i] += 1;
        }
        buchberger_verify(&basis, &g.order, &ToricMap::new(spec), &VerifyOptions::default(), &Budget::default())
            .unwrap()
    }

    #[test]
    fn p23_verifies() {
        let r = run(2, 3, false);
        assert_eq!(r.verdict, Verdict::Holds, "{:?}", r.failures);
        assert!(r.squarefree_initial);
        // G_7 has degree 3
        assert_eq!(r.membership_bound, 5);
    }

    #[test]
    fn corrupted_binomial_is_caught() {
        let r = run(2, 3, true);
        assert_eq!(r.verdict, Verdict::Fails);
        assert!(r.failures.iter().any(|f| f.kind == "kernel"));
    }

    #[test]
    fn p24_needs_one_more_binomial() {
        let r = run(2, 4, false);
        assert_eq!(r.verdict, Verdict::Fails);
        let c = r.completion.unwrap();
        assert_eq!(c.added, vec!["x2*x3 - w0*w1"]);
        assert!(c.squarefree_initial);
    }

    #[test]
    fn squarefree_detection() {
        let o = VariableOrder::new(PhdSpec::new(2, 3).unwrap());
        let x1 = o.x(1).unwrap();
        let g = Binomial::new(o.monomial(&[(x1, 2)]), o.monomial(&[(o.w(0).unwrap(), 2)]), Provenance::SPair).unwrap();
        assert!(!initial_ideal_squarefree(&[g]));
    }

    #[test]
    fn monomial_count() {
        // degree 1..=2 in 3 variables: 3 + 6
        assert_eq!(monomials_up_to(3, 2, &Budget::default()).unwrap().len(), 9);
    }
}
