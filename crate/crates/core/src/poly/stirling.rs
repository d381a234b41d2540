//! Stirling numbers of the second kind.
//!
//! `S(p, q)` also counts the partial injections `W ⊂ [p]×[p]` with
//! `|W| = p − q` whose pairs `(k, k′)` all satisfy `k < k′`: linking each
//! element to the next larger element of its block gives a bijection with
//! set partitions into `q` blocks.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StirlingMode {
    /// `S(p, q) = q·S(p−1, q) + S(p−1, q−1)`.
    Recurrence,
    /// Count strictly upper partial injections of size `p − q`.
    QuasiPermutation,
}

pub fn stirling2(p: usize, q: usize, mode: StirlingMode) -> Result<BigInt> {
    if q < 1 || q > p {
        return Err(Error::OutOfRange(format!(
            "need 1 <= q <= p, got p = {p}, q = {q}"
        )));
    }
    match mode {
        StirlingMode::Recurrence => Ok(stirling_table(p)[p][q].clone()),
        StirlingMode::QuasiPermutation => {
            if p > 8 {
                return Err(Error::BudgetExceeded {
                    what: "quasi-permutation scan",
                    n: p,
                    limit: 8,
                });
            }
            let mut used = vec![false; p + 1];
            Ok(BigInt::from(count_upper(1, p, p - q, &mut used)))
        }
    }
}

/// `S(m, j)` for `0 ≤ j ≤ m ≤ p`, with `S(0, 0) = 1`.
pub(crate) fn stirling_table(p: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); p + 1]; p + 1];
    s[0][0] = BigInt::one();
    for m in 1..=p {
        for j in 1..=m {
            s[m][j] = &s[m - 1][j] * j + &s[m - 1][j - 1];
        }
    }
    s
}

/// Rows `k..=p` each either unmatched or matched to an unused column
/// `k′ > k`; counts choices with exactly `left` matches.
fn count_upper(k: usize, p: usize, left: usize, used: &mut [bool]) -> u64 {
    if left == 0 {
        return 1;
    }
    if k > p {
        return 0;
    }
    let mut total = count_upper(k + 1, p, left, used);
    for col in k + 1..=p {
        if !used[col] {
            used[col] = true;
            total += count_upper(k + 1, p, left - 1, used);
            used[col] = false;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        for mode in [StirlingMode::Recurrence, StirlingMode::QuasiPermutation] {
            assert_eq!(stirling2(4, 2, mode).unwrap(), BigInt::from(7));
            assert_eq!(stirling2(6, 6, mode).unwrap(), BigInt::one());
            assert_eq!(stirling2(6, 1, mode).unwrap(), BigInt::one());
            assert!(stirling2(3, 0, mode).is_err());
            assert!(stirling2(3, 4, mode).is_err());
        }
        assert!(stirling2(9, 3, StirlingMode::QuasiPermutation).is_err());
    }
}
