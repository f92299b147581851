//! Node budgets for the exhaustive searches.

use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("search budget of {limit} nodes exceeded")]
pub struct BudgetExceeded {
    pub limit: u64,
}

/// A shared node counter with an optional ceiling. Cheap to share across
/// worker threads by reference.
#[derive(Debug, Default)]
pub struct Budget {
    limit: Option<u64>,
    used: AtomicU64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            limit: None,
            used: AtomicU64::new(0),
        }
    }

    pub fn new(limit: u64) -> Self {
        Budget {
            limit: Some(limit),
            used: AtomicU64::new(0),
        }
    }

    pub fn from_option(limit: Option<u64>) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// True once a charge has been refused.
    pub fn exhausted(&self) -> bool {
        self.limit.is_some_and(|l| self.used() > l)
    }

    /// Charges one node.
    #[inline]
    pub fn tick(&self) -> Result<(), BudgetExceeded> {
        self.spend(1)
    }

    #[inline]
    pub fn spend(&self, nodes: u64) -> Result<(), BudgetExceeded> {
        let before = self.used.fetch_add(nodes, Ordering::Relaxed);
        match self.limit {
            Some(limit) if before + nodes > limit => Err(BudgetExceeded { limit }),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceeds_at_limit() {
        let b = Budget::new(2);
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert!(!b.exhausted());
        assert_eq!(b.tick(), Err(BudgetExceeded { limit: 2 }));
        assert!(b.exhausted());
        assert!(Budget::unlimited().spend(u64::MAX / 2).is_ok());
    }
}
