use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::util::{dot_i128, gcd_slice};

/// The inequality `normal · x <= offset`.
///
/// `facet == false` marks halfspaces that are not facets: one side of an
/// implicit equation of a lower-dimensional polytope, or a redundant row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: Vec<i64>,
    pub offset: i64,
    #[serde(default = "yes", skip_serializing_if = "is_true")]
    pub facet: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

fn yes() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

impl Halfspace {
    /// Builds the primitive form: the normal is divided by its content and
    /// the offset is rounded down accordingly (exact for lattice points).
    pub fn new(normal: Vec<i64>, offset: i64) -> Self {
        let g = gcd_slice(&normal);
        if g > 1 {
            Halfspace {
                normal: normal.iter().map(|a| a / g).collect(),
                offset: offset.div_euclid(g),
                facet: true,
                label: None,
            }
        } else {
            Halfspace { normal, offset, facet: true, label: None }
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn non_facet(mut self) -> Self {
        self.facet = false;
        self
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn is_primitive(&self) -> bool {
        gcd_slice(&self.normal) == 1
    }

    pub fn evaluate(&self, x: &[i64]) -> i128 {
        dot_i128(&self.normal, x)
    }

    /// `normal · x <= n * offset`
    pub fn contains(&self, x: &[i64], dilation: i64) -> bool {
        self.evaluate(x) <= self.offset as i128 * dilation as i128
    }

    pub fn is_tight(&self, x: &[i64], dilation: i64) -> bool {
        self.evaluate(x) == self.offset as i128 * dilation as i128
    }

    fn key(&self) -> (Vec<i64>, i64) {
        (self.normal.clone(), self.offset)
    }
}

/// A list of halfspaces; their intersection is the described polytope.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRep {
    pub halfspaces: Vec<Halfspace>,
}

impl HRep {
    pub fn new(mut halfspaces: Vec<Halfspace>) -> Self {
        halfspaces.sort_by_key(|a| a.key());
        halfspaces.dedup_by(|a, b| a.key() == b.key());
        HRep { halfspaces }
    }

    pub fn len(&self) -> usize {
        self.halfspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.halfspaces.is_empty()
    }

    pub fn ambient_dim(&self) -> Option<usize> {
        self.halfspaces.first().map(|h| h.dim())
    }

    pub fn facets(&self) -> impl Iterator<Item = &Halfspace> {
        self.halfspaces.iter().filter(|h| h.facet)
    }

    pub fn facet_count(&self) -> usize {
        self.facets().count()
    }

    /// Membership of `x` in the `dilation`-th dilate.
    pub fn contains(&self, x: &[i64], dilation: i64) -> Result<bool> {
        if dilation < 0 {
            return Err(Error::invalid("dilation must be nonnegative"));
        }
        if let Some(n) = self.ambient_dim() {
            if n != x.len() {
                return Err(Error::DimensionMismatch { expected: n, got: x.len() });
            }
        }
        Ok(self.contains_unchecked(x, dilation))
    }

    pub(crate) fn contains_unchecked(&self, x: &[i64], dilation: i64) -> bool {
        self.halfspaces.iter().all(|h| h.contains(x, dilation))
    }

    /// Set of `(normal, offset)` pairs of the facet rows.
    pub fn facet_keys(&self) -> BTreeSet<(Vec<i64>, i64)> {
        self.facets().map(|h| h.key()).collect()
    }

    /// Facet rows of `self` missing from `other`, and vice versa.
    pub fn facet_difference(&self, other: &HRep) -> (Vec<Halfspace>, Vec<Halfspace>) {
        let mine = self.facet_keys();
        let theirs = other.facet_keys();
        let only_self = self.facets().filter(|h| !theirs.contains(&h.key())).cloned().collect();
        let only_other = other.facets().filter(|h| !mine.contains(&h.key())).cloned().collect();
        (only_self, only_other)
    }

    pub fn same_facets(&self, other: &HRep) -> bool {
        self.facet_keys() == other.facet_keys()
    }

    pub fn find_facet(&self, normal: &[i64], offset: i64) -> Option<&Halfspace> {
        self.facets().find(|h| h.normal == normal && h.offset == offset)
    }
}
