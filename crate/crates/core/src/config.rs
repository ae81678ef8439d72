use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Resource limits shared by every Gröbner computation of one job.
#[derive(Debug, Clone)]
pub struct Budget {
    pub max_basis: usize,
    pub max_degree: u64,
    /// Largest number of terms held by one reduction or by a whole basis.
    pub max_terms: usize,
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_basis: 20_000,
            max_degree: 200,
            max_terms: 2_000_000,
            deadline: None,
        }
    }
}

impl Budget {
    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.deadline = Some(Instant::now() + timeout);
        self
    }

    pub fn check_time(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::BudgetExceeded("wall-clock limit".into())),
            _ => Ok(()),
        }
    }
}

/// Budget plus the seed used by randomized minor sampling.
#[derive(Debug, Clone)]
pub struct Config {
    pub budget: Budget,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            budget: Budget::default(),
            seed: 0x5eed,
        }
    }
}

impl Config {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }
}
