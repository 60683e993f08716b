//! Search budgets and exact-or-interval measure results.
//!
//! Every exponential solver threads a [`BudgetMeter`] and stops cleanly when
//! it runs out, downgrading its answer from exact to a certified interval.
//! Node budgets are deterministic across machines; wall-clock budgets are for
//! interactive use.

use std::time::{Duration, Instant};

use serde::Serialize;

/// Limits for an exact search: a node count, a wall-clock duration, both, or
/// neither.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget::default()
    }

    pub fn nodes(n: u64) -> Budget {
        Budget { max_nodes: Some(n), max_time: None }
    }

    pub fn seconds(s: f64) -> Budget {
        Budget { max_nodes: None, max_time: Some(Duration::from_secs_f64(s)) }
    }

    pub fn meter(&self) -> BudgetMeter {
        BudgetMeter {
            node_limit: self.max_nodes.unwrap_or(u64::MAX),
            deadline: self.max_time.map(|d| Instant::now() + d),
            nodes: 0,
            exhausted: false,
        }
    }
}

/// Counts search nodes against a [`Budget`]. The deadline is only polled
/// every 4096 nodes to keep `tick` cheap.
#[derive(Debug)]
pub struct BudgetMeter {
    node_limit: u64,
    deadline: Option<Instant>,
    nodes: u64,
    exhausted: bool,
}

impl BudgetMeter {
    pub fn unlimited() -> BudgetMeter {
        Budget::unlimited().meter()
    }

    /// Account for one search node; returns false once the budget is spent.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.node_limit {
            self.exhausted = true;
            return false;
        }
        if self.nodes & 0xfff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    self.exhausted = true;
                    return false;
                }
            }
        }
        true
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn nodes_used(&self) -> u64 {
        self.nodes
    }
}

/// Did a search run to completion or stop on its budget?
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchStatus {
    Complete,
    Truncated,
}

impl SearchStatus {
    pub fn is_complete(&self) -> bool {
        *self == SearchStatus::Complete
    }
}

/// An exactly computed value with its certificate, or a certified interval
/// when the budget ran out first. Bounded results never masquerade as exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum MeasureResult<C> {
    Exact { value: usize, certificate: C },
    Bounded { lower: usize, upper: usize, witness: Option<C> },
}

impl<C> MeasureResult<C> {
    pub fn is_exact(&self) -> bool {
        matches!(self, MeasureResult::Exact { .. })
    }

    pub fn value_if_exact(&self) -> Option<usize> {
        match self {
            MeasureResult::Exact { value, .. } => Some(*value),
            MeasureResult::Bounded { .. } => None,
        }
    }

    pub fn lower(&self) -> usize {
        match self {
            MeasureResult::Exact { value, .. } => *value,
            MeasureResult::Bounded { lower, .. } => *lower,
        }
    }

    pub fn upper(&self) -> usize {
        match self {
            MeasureResult::Exact { value, .. } => *value,
            MeasureResult::Bounded { upper, .. } => *upper,
        }
    }

    pub fn certificate(&self) -> Option<&C> {
        match self {
            MeasureResult::Exact { certificate, .. } => Some(certificate),
            MeasureResult::Bounded { witness, .. } => witness.as_ref(),
        }
    }
}
