//! Interchangeable membership algorithms for graded semigroups.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use super::GradedSemigroup;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::polytope::Point;
use crate::util::sub;

/// Decides whether a cone point of height `n` (working coordinates, already
/// known to lie in the cone) is a sum of `n` generators.
pub trait MembershipStrategy: Send + Sync {
    fn name(&self) -> &'static str;

    fn is_member(&self, semigroup: &GradedSemigroup, target: &[i64], budget: &Budget) -> Result<bool> {
        Ok(self.decompose(semigroup, target, budget)?.is_some())
    }

    fn decompose(&self, semigroup: &GradedSemigroup, target: &[i64], budget: &Budget) -> Result<Option<Vec<Point>>>;
}

fn height(x: &[i64]) -> i64 {
    *x.last().expect("homogenized point")
}

/// Depth-first search over generators. A residual is kept only if it stays
/// in the cone at its remaining height; verdicts on residuals are memoized
/// in the semigroup and shared between queries.
#[derive(Clone, Copy, Debug, Default)]
pub struct DfsStrategy;

struct Search<'a> {
    semigroup: &'a GradedSemigroup,
    verdicts: &'a mut HashMap<Point, bool>,
    budget: &'a Budget,
    nodes: u64,
}

impl Search<'_> {
    fn member(&mut self, r: &[i64]) -> Result<bool> {
        match height(r) {
            0 => return Ok(r.iter().all(|&v| v == 0)),
            1 => return Ok(self.semigroup.is_work_generator(r)),
            _ => {}
        }
        if let Some(&known) = self.verdicts.get(r) {
            return Ok(known);
        }
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::Budget(format!("membership search exceeded {} nodes", self.budget.max_nodes)));
        }
        if self.nodes.is_multiple_of(4096) {
            self.budget.check_time("membership search")?;
        }
        let mut found = false;
        for g in self.semigroup.work_generators() {
            let rest = sub(r, g);
            if self.semigroup.work_in_cone(&rest) && self.member(&rest)? {
                found = true;
                break;
            }
        }
        self.verdicts.insert(r.to_vec(), found);
        Ok(found)
    }

    fn witness(&mut self, target: &[i64]) -> Result<Option<Vec<Point>>> {
        if !self.member(target)? {
            return Ok(None);
        }
        let mut parts = Vec::new();
        let mut r = target.to_vec();
        while height(&r) > 0 {
            let mut next = None;
            for g in self.semigroup.work_generators() {
                let rest = sub(&r, g);
                if self.semigroup.work_in_cone(&rest) && self.member(&rest)? {
                    next = Some((g.clone(), rest));
                    break;
                }
            }
            let (g, rest) = next.expect("a member residual has a member successor");
            parts.push(g);
            r = rest;
        }
        Ok(Some(parts))
    }
}

impl MembershipStrategy for DfsStrategy {
    fn name(&self) -> &'static str {
        "dfs"
    }

    fn decompose(&self, semigroup: &GradedSemigroup, target: &[i64], budget: &Budget) -> Result<Option<Vec<Point>>> {
        let mut cache = semigroup.cache();
        let mut search = Search { semigroup, verdicts: &mut cache.verdicts, budget, nodes: 0 };
        search.witness(target)
    }
}

/// Builds the full level sets `S_n = S_{n-1} + A` and answers by lookup.
/// Cheap per query once a level exists, expensive in memory.
#[derive(Clone, Copy, Debug, Default)]
pub struct SumsetStrategy;

impl SumsetStrategy {
    fn ensure_levels(semigroup: &GradedSemigroup, levels: &mut Vec<HashSet<Point>>, n: usize, budget: &Budget) -> Result<()> {
        if levels.is_empty() {
            levels.push(std::iter::once(vec![0; semigroup.dim() + 1]).collect());
        }
        while levels.len() <= n {
            budget.check_time("sumset level")?;
            let prev = levels.last().expect("level 0 present");
            let mut next = HashSet::new();
            for s in prev {
                for g in semigroup.work_generators() {
                    next.insert(s.iter().zip(g).map(|(a, b)| a + b).collect::<Point>());
                }
                budget.check_points(next.len(), "sumset level")?;
            }
            levels.push(next);
        }
        Ok(())
    }
}

impl MembershipStrategy for SumsetStrategy {
    fn name(&self) -> &'static str {
        "sumset"
    }

    fn decompose(&self, semigroup: &GradedSemigroup, target: &[i64], budget: &Budget) -> Result<Option<Vec<Point>>> {
        let n = height(target);
        if n < 0 {
            return Ok(None);
        }
        let n = n as usize;
        let mut cache = semigroup.cache();
        Self::ensure_levels(semigroup, &mut cache.levels, n, budget)?;
        if !cache.levels[n].contains(target) {
            return Ok(None);
        }
        let mut parts = Vec::with_capacity(n);
        let mut r = target.to_vec();
        for level in (0..n).rev() {
            let (g, rest) = semigroup
                .work_generators()
                .iter()
                .map(|g| (g, sub(&r, g)))
                .find(|(_, rest)| cache.levels[level].contains(rest))
                .expect("every element of S_n has a predecessor in S_{n-1}");
            parts.push(g.clone());
            r = rest;
        }
        Ok(Some(parts))
    }
}

/// Membership strategies addressable by name.
pub struct MembershipRegistry {
    strategies: BTreeMap<&'static str, Arc<dyn MembershipStrategy>>,
}

impl Default for MembershipRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}

impl MembershipRegistry {
    pub fn empty() -> Self {
        MembershipRegistry { strategies: BTreeMap::new() }
    }

    pub fn with_builtins() -> Self {
        let mut r = Self::empty();
        r.register(Arc::new(DfsStrategy)).expect("distinct builtin names");
        r.register(Arc::new(SumsetStrategy)).expect("distinct builtin names");
        r
    }

    pub fn register(&mut self, strategy: Arc<dyn MembershipStrategy>) -> Result<()> {
        let name = strategy.name();
        if self.strategies.contains_key(name) {
            return Err(Error::invalid(format!("membership strategy `{name}` already registered")));
        }
        self.strategies.insert(name, strategy);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn MembershipStrategy>> {
        self.strategies.get(name).cloned().ok_or_else(|| {
            let known: Vec<_> = self.names().collect();
            Error::invalid(format!("unknown membership strategy `{name}` (known: {})", known.join(", ")))
        })
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.strategies.keys().copied()
    }
}
