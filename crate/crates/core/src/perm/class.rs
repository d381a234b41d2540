use std::fmt;

use super::{next_lexicographic, Permutation};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// The permutation classes studied in the library.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ClassTag {
    All,
    /// A single orbit.
    Circular,
    /// `σ(1) ≠ 1` and `σ(j+1) ≠ σ(j) + 1`.
    SuccessionFree,
    /// No fixed point.
    Derangement,
    /// `σ(2j) < σ(2j−1), σ(2j+1)` for `2 ≤ 2j ≤ n−1`, and `σ(n) < σ(n−1)`
    /// when `n` is even.
    Alternating,
    /// Every `j` has `j < σ(j), σ⁻¹(j)` or `j > σ(j), σ⁻¹(j)`.
    Biexcedent,
    /// `σ(1) = n`.
    FirstIsN,
    /// `σ(n) = 1`.
    LastIs1,
    /// The values `n−r+1, ..., n` appear in increasing order.
    RTailOrdered(usize),
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::All => f.write_str("all"),
            ClassTag::Circular => f.write_str("circular"),
            ClassTag::SuccessionFree => f.write_str("succession-free"),
            ClassTag::Derangement => f.write_str("derangement"),
            ClassTag::Alternating => f.write_str("alternating"),
            ClassTag::Biexcedent => f.write_str("biexcedent"),
            ClassTag::FirstIsN => f.write_str("first-is-n"),
            ClassTag::LastIs1 => f.write_str("last-is-1"),
            ClassTag::RTailOrdered(r) => write!(f, "{r}-tail-ordered"),
        }
    }
}

fn check_class(n: usize, c: ClassTag) -> Result<()> {
    if let ClassTag::RTailOrdered(r) = c {
        if r == 0 || r > n {
            return Err(Error::Precondition(format!(
                "tail-ordered class needs 1 <= r <= n, got r = {r}, n = {n}"
            )));
        }
    }
    Ok(())
}

pub fn is_in_class(p: &Permutation, c: ClassTag) -> Result<bool> {
    check_class(p.n(), c)?;
    Ok(member(p.word(), c))
}

/// `w` holds values `1..=n`; `c` has been validated.
fn member(w: &[usize], c: ClassTag) -> bool {
    let n = w.len();
    let at = |k: usize| w[k - 1];
    match c {
        ClassTag::All => true,
        ClassTag::Circular => {
            if n == 0 {
                return false;
            }
            let mut len = 1;
            let mut k = at(1);
            while k != 1 {
                k = at(k);
                len += 1;
            }
            len == n
        }
        ClassTag::SuccessionFree => {
            (n == 0 || at(1) != 1) && w.windows(2).all(|p| p[1] != p[0] + 1)
        }
        ClassTag::Derangement => (1..=n).all(|k| at(k) != k),
        ClassTag::Alternating => {
            let mut j = 2;
            while j < n {
                if !(at(j) < at(j - 1) && at(j) < at(j + 1)) {
                    return false;
                }
                j += 2;
            }
            n % 2 == 1 || n == 0 || at(n) < at(n - 1)
        }
        ClassTag::Biexcedent => {
            let mut inv = vec![0; n + 1];
            for (i, &v) in w.iter().enumerate() {
                inv[v] = i + 1;
            }
            (1..=n).all(|j| {
                let (a, b) = (at(j), inv[j]);
                (j < a && j < b) || (j > a && j > b)
            })
        }
        ClassTag::FirstIsN => n >= 1 && at(1) == n,
        ClassTag::LastIs1 => n >= 1 && at(n) == 1,
        ClassTag::RTailOrdered(r) => {
            let mut next = n - r + 1;
            for &v in w {
                if v >= n - r + 1 {
                    if v != next {
                        return false;
                    }
                    next += 1;
                }
            }
            true
        }
    }
}

/// Iterator over a class in lexicographic order of words.
#[derive(Debug, Clone)]
pub struct ClassIter {
    word: Vec<usize>,
    class: ClassTag,
    done: bool,
}

impl Iterator for ClassIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        while !self.done {
            let hit = member(&self.word, self.class).then(|| self.word.clone());
            self.done = !next_lexicographic(&mut self.word);
            if let Some(w) = hit {
                return Some(Permutation::from_word_unchecked(w));
            }
        }
        None
    }
}

/// Members of class `c` in `S_n`, in lexicographic order.
pub fn enumerate(n: usize, c: ClassTag, budget: &Budget) -> Result<ClassIter> {
    budget.check_enumeration(n)?;
    check_class(n, c)?;
    Ok(ClassIter {
        word: start_word(n, c),
        class: c,
        done: false,
    })
}

fn start_word(n: usize, c: ClassTag) -> Vec<usize> {
    match c {
        // Everything before (n, 1, ..., n−1) starts with a smaller letter.
        ClassTag::FirstIsN if n >= 1 => std::iter::once(n).chain(1..n).collect(),
        _ => (1..=n).collect(),
    }
}

/// Calls `f` on each member of class `c` without allocating per member.
pub fn for_each_in_class(
    n: usize,
    c: ClassTag,
    budget: &Budget,
    mut f: impl FnMut(&Permutation),
) -> Result<()> {
    budget.check_enumeration(n)?;
    check_class(n, c)?;
    let mut perm = Permutation {
        word: start_word(n, c),
    };
    loop {
        if member(&perm.word, c) {
            f(&perm);
        }
        if !next_lexicographic(&mut perm.word) {
            return Ok(());
        }
    }
}
