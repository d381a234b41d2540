//! Permutations of `[n] = {1, ..., n}` in one-line form, their statistic
//! vectors and the classes used throughout the library.
//!
//! All positions and values exposed by this module are 1-based.

mod class;
mod function;
mod stats;

pub use class::{enumerate, for_each_in_class, is_in_class, ClassIter, ClassTag};
pub use function::{canonical_factorization, count_class_functions, FunctionKind, FunctionMap};
pub use stats::{
    delta, delta_prime, delta_second, descent_vector, dprime_vector, excedance_vector,
    fixed_point_vector, lambda_op, positive_count, rise_vector, same_multiset, StatVector,
};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `[n]` stored as its word `(σ(1), ..., σ(n))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates that `word` uses each of `1..=n` exactly once.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for (i, &v) in word.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} at position {} is outside 1..={n}",
                    i + 1
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} repeated at position {}",
                    i + 1
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    /// Caller guarantees `word` is a bijection of `[n]`.
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The empty permutation of `[0]`.
    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    /// `σ(k)` with the boundary convention `σ(0) = σ(n+1) = 0`.
    pub fn at(&self, k: usize) -> usize {
        if k == 0 || k > self.n() {
            0
        } else {
            self.word[k - 1]
        }
    }

    /// Inverse as a lookup table indexed by value, with `inv[0] = 0`.
    pub(crate) fn inverse_table(&self) -> Vec<usize> {
        let mut inv = vec![0; self.n() + 1];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v] = i + 1;
        }
        inv
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            word: self.inverse_table()[1..].to_vec(),
        }
    }

    /// The product `self ∘ other`, i.e. `k ↦ self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::Precondition(format!(
                "cannot compose permutations of sizes {} and {}",
                self.n(),
                other.n()
            )));
        }
        Ok(Permutation {
            word: other.word.iter().map(|&k| self.word[k - 1]).collect(),
        })
    }

    pub fn is_fixed_point(&self, k: usize) -> bool {
        self.at(k) == k
    }

    /// Orbits as sorted sets, listed by increasing minimum.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                orbit.push(k);
                k = self.word[k - 1];
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Number of orbits `z(σ)`.
    pub fn cycle_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut z = 0;
        for start in 1..=n {
            if !seen[start] {
                z += 1;
                let mut k = start;
                while !seen[k] {
                    seen[k] = true;
                    k = self.word[k - 1];
                }
            }
        }
        z
    }

    /// Signature `(-1)^(z(σ) + n)`.
    pub fn signature(&self) -> i8 {
        if (self.cycle_count() + self.n()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Positions holding a left-to-right maximum. Position 1 is always one.
    pub fn saillants(&self) -> Vec<usize> {
        let mut best = 0;
        let mut out = Vec::new();
        for (i, &v) in self.word.iter().enumerate() {
            if v > best {
                best = v;
                out.push(i + 1);
            }
        }
        out
    }

    /// `s(σ)`, the number of left-to-right maxima.
    pub fn saillant_count(&self) -> usize {
        self.saillants().len()
    }

    /// Membership flags indexed by value: `flags[v]` is true when `v` is a
    /// left-to-right maximum of the word.
    pub(crate) fn saillant_values(&self) -> Vec<bool> {
        let mut flags = vec![false; self.n() + 1];
        let mut best = 0;
        for &v in &self.word {
            if v > best {
                best = v;
                flags[v] = true;
            }
        }
        flags
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.word)
    }
}

pub(crate) fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// Parses whitespace- or comma-separated values, optionally wrapped in
/// parentheses: `"6 4 1 2 5 3"`, `"6,4,1,2,5,3"` or `"(6,4,1,2,5,3)"`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        let mut word = Vec::new();
        for (i, tok) in inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .enumerate()
        {
            let v = tok.parse::<usize>().map_err(|_| {
                Error::InvalidPermutation(format!(
                    "token {tok:?} at position {} is not a positive integer",
                    i + 1
                ))
            })?;
            word.push(v);
        }
        Permutation::new(word)
    }
}

/// Advances `xs` to the next permutation in lexicographic order. Returns
/// false (leaving `xs` untouched) when `xs` is the last one.
pub(crate) fn next_lexicographic(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}
