//! Step budgets shared by the Gröbner and Smith normal form kernels.

use std::sync::OnceLock;

pub const MAX_STEPS_ENV: &str = "THICKGEN_MAX_STEPS";
pub const DEFAULT_MAX_STEPS: u64 = 1_000_000;

/// Largest integer accepted by [`crate::ring::factor::factor_integer`].
pub const FACTOR_BOUND: u64 = 1_000_000_000_000;

/// Default bound for the power-iteration fallback in radical membership.
pub const RADICAL_POWER_BOUND: usize = 64;

static MAX_STEPS: OnceLock<u64> = OnceLock::new();

/// Budget read once from `THICKGEN_MAX_STEPS`; malformed values fall back to the default.
pub fn max_steps() -> u64 {
    *MAX_STEPS.get_or_init(|| {
        std::env::var(MAX_STEPS_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .filter(|&n| n > 0)
            .unwrap_or(DEFAULT_MAX_STEPS)
    })
}

#[derive(Debug)]
pub(crate) struct StepCounter {
    used: u64,
    limit: u64,
    what: &'static str,
}

impl StepCounter {
    pub(crate) fn new(what: &'static str) -> Self {
        Self { used: 0, limit: max_steps(), what }
    }

    pub(crate) fn tick(&mut self) -> crate::Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(crate::Error::BudgetExhausted(self.limit, self.what))
        } else {
            Ok(())
        }
    }
}
