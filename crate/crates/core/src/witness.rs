use std::fmt;

/// Outcome of checking an identity: both sides are rendered so that a
/// failure can be inspected without rerunning.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub parts: Vec<Witness>,
}

impl Witness {
    pub fn compare<T: PartialEq + fmt::Display + ?Sized>(
        name: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        let passed = lhs == rhs;
        let detail = if passed {
            format!("{lhs}")
        } else {
            format!("lhs = {lhs}; rhs = {rhs}")
        };
        Witness {
            name: name.into(),
            passed,
            detail,
            parts: Vec::new(),
        }
    }

    pub fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Witness {
            name: name.into(),
            passed,
            detail: detail.into(),
            parts: Vec::new(),
        }
    }

    /// Passes iff every part passes.
    pub fn all(name: impl Into<String>, parts: Vec<Witness>) -> Self {
        let passed = parts.iter().all(|w| w.passed);
        let failed = parts.iter().filter(|w| !w.passed).count();
        let detail = if passed {
            format!("{} checks", parts.len())
        } else {
            format!("{failed} of {} checks failed", parts.len())
        };
        Witness {
            name: name.into(),
            passed,
            detail,
            parts,
        }
    }

    /// Failed leaves, depth first.
    pub fn failures(&self) -> Vec<&Witness> {
        if self.passed {
            return Vec::new();
        }
        if self.parts.is_empty() {
            return vec![self];
        }
        self.parts.iter().flat_map(|w| w.failures()).collect()
    }

    /// Number of leaf checks.
    pub fn leaf_count(&self) -> usize {
        if self.parts.is_empty() {
            1
        } else {
            self.parts.iter().map(Witness::leaf_count).sum()
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "ok" } else { "FAILED" };
        write!(f, "{}: {status} ({})", self.name, self.detail)?;
        for w in self.failures() {
            if !std::ptr::eq(w, self) {
                write!(f, "\n  {}: {}", w.name, w.detail)?;
            }
        }
        Ok(())
    }
}
