//! Caps on exhaustive enumeration.

use crate::error::{Error, Result};

/// Environment variable that overrides [`Budget::DEFAULT_LIMIT`].
pub const BUDGET_ENV: &str = "RW_BUDGET";

/// Upper bound on the number of primitive checks an enumeration may perform.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    limit: u64,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 100_000_000;

    pub fn new(limit: u64) -> Self {
        Budget { limit }
    }

    pub fn unlimited() -> Self {
        Budget { limit: u64::MAX }
    }

    /// Reads `RW_BUDGET`, falling back to the default when unset. A set but
    /// unparsable value is an error rather than silently ignored.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(raw) => raw
                .trim()
                .replace('_', "")
                .parse::<u64>()
                .map(Budget::new)
                .map_err(|_| Error::InvalidParameter(format!("{BUDGET_ENV}={raw:?} is not an integer"))),
            Err(_) => Ok(Budget::default()),
        }
    }

    pub fn limit(self) -> u64 {
        self.limit
    }

    /// Refuses up front when an estimate is already over the limit.
    pub fn admit(self, task: &'static str, estimate: u64) -> Result<()> {
        if estimate > self.limit {
            Err(Error::BudgetExceeded {
                task,
                needed: estimate,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    pub fn meter(self, task: &'static str) -> Meter {
        Meter {
            task,
            spent: 0,
            limit: self.limit,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_LIMIT)
    }
}

/// Running count of checks against a [`Budget`].
#[derive(Debug)]
pub struct Meter {
    task: &'static str,
    spent: u64,
    limit: u64,
}

impl Meter {
    #[inline]
    pub fn spend(&mut self, checks: u64) -> Result<()> {
        self.spent = self.spent.saturating_add(checks);
        if self.spent > self.limit {
            Err(Error::BudgetExceeded {
                task: self.task,
                needed: self.spent,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meter_trips_past_limit() {
        let mut m = Budget::new(10).meter("test");
        assert!(m.spend(10).is_ok());
        let err = m.spend(1).unwrap_err();
        assert!(err.is_budget());
        assert_eq!(m.spent(), 11);
    }

    #[test]
    fn admit_reports_estimate() {
        let err = Budget::new(5).admit("enumeration", 6).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                task: "enumeration",
                needed: 6,
                limit: 5
            }
        );
        assert!(Budget::unlimited().admit("x", u64::MAX).is_ok());
    }
}
