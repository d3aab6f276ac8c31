//! Exhaustive and heuristic search for small percolating sets.

mod exact;
mod heuristic;
mod latin;
mod symmetry;

pub use exact::{enumerate_percolating, exists_percolating_of_size, for_each_percolating, min_percolating};
pub use heuristic::heuristic_search;
pub use latin::{count_modified_optimal, modified_latin_cube};
pub use symmetry::automorphisms;

use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};

/// Limits on a search. Running out of either yields an inexact result.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget::default()
    }

    pub fn nodes(n: u64) -> Budget {
        Budget {
            max_nodes: Some(n),
            max_time: None,
        }
    }

    pub fn seconds(s: f64) -> Budget {
        Budget {
            max_nodes: None,
            max_time: Some(Duration::from_secs_f64(s)),
        }
    }
}

/// Node and clock accounting against a budget.
#[derive(Debug)]
pub(crate) struct Meter {
    budget: Budget,
    start: Instant,
    pub nodes: u64,
    pub exhausted: bool,
}

impl Meter {
    pub fn new(budget: Budget) -> Meter {
        Meter {
            budget,
            start: Instant::now(),
            nodes: 0,
            exhausted: false,
        }
    }

    /// Counts one node; false once the budget is spent.
    pub fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.exhausted {
            return false;
        }
        if self.budget.max_nodes.is_some_and(|m| self.nodes > m) {
            self.exhausted = true;
        }
        if self.nodes % 1024 == 0 && self.budget.max_time.is_some_and(|t| self.start.elapsed() > t) {
            self.exhausted = true;
        }
        !self.exhausted
    }
}

/// A search result with its completeness flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome<T> {
    pub value: T,
    /// False when the budget ran out before the search space was covered.
    pub exact: bool,
    pub nodes: u64,
}
