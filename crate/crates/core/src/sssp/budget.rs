use crate::error::{Error, Exhaustion, Result};

/// Deterministic operation budget. Heap pushes, heap pops and edge
/// relaxations each cost one step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepBudget {
    limit: u64,
    used: u64,
}

impl StepBudget {
    pub fn new(limit: u64) -> Self {
        StepBudget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn remaining(&self) -> u64 {
        self.limit.saturating_sub(self.used)
    }

    #[inline]
    pub fn charge(&mut self, steps: u64) -> Result<()> {
        self.used = self.used.saturating_add(steps);
        if self.used > self.limit {
            Err(Error::BudgetExhausted(Exhaustion::Steps { used: self.used, limit: self.limit }))
        } else {
            Ok(())
        }
    }
}
