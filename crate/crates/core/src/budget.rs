use crate::error::{Error, Result};

/// Size limits for exhaustive computations. All limits are inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest n for enumeration over the symmetric group.
    pub max_n: usize,
    /// Largest n for scans over all n^n endofunctions.
    pub fn_scan_max: usize,
    /// Largest dimension for the inclusion-exclusion permanent.
    pub permanent_max: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_n: 10,
            fn_scan_max: 7,
            permanent_max: 9,
        }
    }
}

impl Budget {
    pub fn check_enumeration(&self, n: usize) -> Result<()> {
        check("enumeration", n, self.max_n)
    }

    pub fn check_function_scan(&self, n: usize) -> Result<()> {
        check("function scan", n, self.fn_scan_max)
    }

    pub fn check_permanent(&self, n: usize) -> Result<()> {
        check("permanent", n, self.permanent_max)
    }
}

fn check(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::BudgetExceeded { what, n, limit })
    } else {
        Ok(())
    }
}
