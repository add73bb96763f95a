/// Node cap for a backtracking search. Running out is reported as
/// [`crate::Error::BudgetExceeded`], never as "no solution".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(200_000_000);
    pub const UNLIMITED: Budget = Budget(u64::MAX);
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// Counts nodes against a [`Budget`].
#[derive(Debug)]
pub(crate) struct Meter {
    pub(crate) used: u64,
    limit: u64,
    search: &'static str,
}

impl Meter {
    pub(crate) fn new(budget: Budget, search: &'static str) -> Self {
        Meter {
            used: 0,
            limit: budget.0,
            search,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> crate::Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(crate::Error::BudgetExceeded {
                search: self.search,
                budget: self.limit,
            })
        } else {
            Ok(())
        }
    }
}
