//! Work limits shared by the enumerators and searches.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Resource limits. Every search that can blow up takes one of these and
/// reports exhaustion as [`Error::Budget`] instead of truncating silently.
#[derive(Clone, Debug)]
pub struct Budget {
    /// Maximum number of lattice points a single enumeration may produce.
    pub max_points: usize,
    /// Maximum number of nodes a single membership search may expand.
    pub max_nodes: u64,
    /// Exhaustive total-unimodularity checks refuse matrices with more
    /// square submatrices than this.
    pub max_minors: u64,
    /// Optional wall-clock deadline.
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_points: 5_000_000,
            max_nodes: 20_000_000,
            max_minors: 5_000_000,
            deadline: None,
        }
    }
}

impl Budget {
    pub fn unlimited_time() -> Self {
        Self::default()
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub fn check_time(&self, what: &str) -> Result<()> {
        match self.deadline {
            Some(deadline) if Instant::now() > deadline => {
                Err(Error::Budget(format!("time limit reached during {what}")))
            }
            _ => Ok(()),
        }
    }

    pub fn check_points(&self, count: usize, what: &str) -> Result<()> {
        if count > self.max_points {
            return Err(Error::Budget(format!(
                "{what} produced more than {} lattice points",
                self.max_points
            )));
        }
        Ok(())
    }
}
