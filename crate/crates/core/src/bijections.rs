//! The fundamental transformation `σ ↦ σ̂` and the bijections built from it.
//!
//! For `k` in `[n]` let `k̄` be the largest element of its orbit and `q_k` the
//! least `q ≥ 0` with `σ^q(k) = k̄`. Listing the elements of `[n]` by
//! increasing pair `(k̄, q_k)` gives the word of `σ̂`: orbits appear one after
//! the other by increasing maximum, each read from its maximum backwards
//! along `σ⁻¹`. The orbit maxima are exactly the left-to-right maxima of
//! `σ̂`, which is what [`fundamental_inverse`] uses to cut the word back into
//! cycles.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `Π_σ(k) = (k̄, q_k)` for `k = 1..=n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitKey {
    pairs: Vec<(usize, usize)>,
}

impl OrbitKey {
    pub fn of(p: &Permutation) -> Self {
        let n = p.n();
        let mut pairs = vec![(0, 0); n];
        let inv = p.inverse_table();
        for orbit in p.orbits() {
            let top = *orbit.last().expect("orbits are nonempty");
            // Walk backwards from the maximum: σ^q(k) = top for k = σ^{-q}(top).
            let mut k = top;
            for q in 0..orbit.len() {
                pairs[k - 1] = (top, q);
                k = inv[k];
            }
        }
        OrbitKey { pairs }
    }

    /// 1-based access.
    pub fn get(&self, k: usize) -> (usize, usize) {
        self.pairs[k - 1]
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

/// `σ̂`: the elements of `[n]` sorted by their orbit key.
pub fn fundamental(p: &Permutation) -> Permutation {
    let key = OrbitKey::of(p);
    let mut order: Vec<usize> = (1..=p.n()).collect();
    order.sort_by_key(|&k| key.get(k));
    Permutation::from_word_unchecked(order)
}

/// Rebuilds `σ` from `τ = σ̂` by cutting `τ`'s word before each
/// left-to-right maximum. A segment `(x₁, ..., x_m)` is the cycle with
/// `σ(x_{i+1}) = x_i` and `σ(x₁) = x_m`.
pub fn fundamental_inverse(p: &Permutation) -> Permutation {
    let n = p.n();
    let w = p.word();
    let mut sigma = vec![0; n];
    let starts = p.saillants();
    for (idx, &s) in starts.iter().enumerate() {
        let end = starts.get(idx + 1).map_or(n, |&e| e - 1);
        let seg = &w[s - 1..end];
        for pair in seg.windows(2) {
            sigma[pair[1] - 1] = pair[0];
        }
        sigma[seg[0] - 1] = seg[seg.len() - 1];
    }
    Permutation::from_word_unchecked(sigma)
}

/// `σ̃(k) = σ(n+1−k)`.
pub fn reverse_tilde(p: &Permutation) -> Permutation {
    let mut w = p.word().to_vec();
    w.reverse();
    Permutation::from_word_unchecked(w)
}

/// `σζʳ` where `ζ = (2, 3, ..., n, 1)`, i.e. the word rotated left `r` times.
pub fn zeta_compose(p: &Permutation, r: usize) -> Permutation {
    let mut w = p.word().to_vec();
    if !w.is_empty() {
        let len = w.len();
        w.rotate_left(r % len);
    }
    Permutation::from_word_unchecked(w)
}

/// `σ̌(k) = n+1−σ(n+1−k)`.
pub fn check_map(p: &Permutation) -> Permutation {
    let n = p.n();
    Permutation::from_word_unchecked(p.word().iter().rev().map(|&v| n + 1 - v).collect())
}

/// `σ̄` together with the intermediate permutations of its construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BarTrace {
    /// `σ₁ = σζ`.
    pub sigma1: Permutation,
    /// `σ₂ = σ̂₁`.
    pub sigma2: Permutation,
    /// `σ̄ = σ̃₂`.
    pub result: Permutation,
}

pub fn bar_map_traced(p: &Permutation) -> Result<BarTrace> {
    if p.n() == 0 {
        return Err(Error::Precondition("bar map needs n >= 1".into()));
    }
    let sigma1 = zeta_compose(p, 1);
    let sigma2 = fundamental(&sigma1);
    let result = reverse_tilde(&sigma2);
    Ok(BarTrace {
        sigma1,
        sigma2,
        result,
    })
}

/// `σ̄`, satisfying `Eσ = Mσ̄`.
pub fn bar_map(p: &Permutation) -> Result<Permutation> {
    bar_map_traced(p).map(|t| t.result)
}

/// `σ′` for `σ(n) = 1`: rotate `σ̂` so that it starts at `n`.
/// Satisfies `ΔEσ = ΔDσ′`.
pub fn prime_map(p: &Permutation) -> Result<Permutation> {
    let n = p.n();
    if n == 0 || p.at(n) != 1 {
        return Err(Error::Precondition(format!(
            "prime map needs a permutation ending in 1 (class last-is-1), got {p}"
        )));
    }
    let hat = fundamental(p);
    let i = hat.inverse_table()[n];
    Ok(zeta_compose(&hat, i - 1))
}

/// `σ″` together with the intermediate permutations of its construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DoublePrimeTrace {
    /// `σ₁`: values shifted up by one, then `1` appended.
    pub sigma1: Permutation,
    /// `σ₂ = σ₁′`.
    pub sigma2: Permutation,
    /// `σ″`, the preimage of `σ₂` under the fundamental transformation.
    pub result: Permutation,
}

pub fn double_prime_map_traced(p: &Permutation) -> DoublePrimeTrace {
    let mut w: Vec<usize> = p.word().iter().map(|&v| v + 1).collect();
    w.push(1);
    let sigma1 = Permutation::from_word_unchecked(w);
    let sigma2 = prime_map(&sigma1).expect("shifted word ends in 1");
    let result = fundamental_inverse(&sigma2);
    DoublePrimeTrace {
        sigma1,
        sigma2,
        result,
    }
}

/// Bijection from `S_(n−1)` onto the circular permutations of `[n]`,
/// satisfying `Eσ = ΔEσ″`.
pub fn double_prime_map(p: &Permutation) -> Permutation {
    double_prime_map_traced(p).result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &[usize]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    #[test]
    fn orbit_key_of_example() {
        let key = OrbitKey::of(&p(&[6, 4, 1, 2, 5, 3]));
        assert_eq!(key.get(6), (6, 0));
        assert_eq!(key.get(1), (6, 1));
        assert_eq!(key.get(3), (6, 2));
        assert_eq!(key.get(4), (4, 0));
        assert_eq!(key.get(2), (4, 1));
        assert_eq!(key.get(5), (5, 0));
    }

    #[test]
    fn fundamental_examples() {
        let s = p(&[6, 4, 1, 2, 5, 3]);
        assert_eq!(fundamental(&s), p(&[4, 2, 5, 6, 1, 3]));
        assert_eq!(fundamental_inverse(&p(&[4, 2, 5, 6, 1, 3])), s);
        assert_eq!(
            fundamental(&Permutation::identity(5)),
            Permutation::identity(5)
        );
        assert_eq!(
            fundamental_inverse(&Permutation::identity(5)),
            Permutation::identity(5)
        );
        assert_eq!(fundamental(&Permutation::empty()), Permutation::empty());
    }

    #[test]
    fn biexcedent_rows_map_to_alternating_rows() {
        let rows = [
            ([2, 1, 4, 3], [2, 1, 4, 3]),
            ([3, 4, 1, 2], [3, 1, 4, 2]),
            ([4, 3, 2, 1], [3, 2, 4, 1]),
            ([4, 3, 1, 2], [4, 1, 3, 2]),
            ([3, 4, 2, 1], [4, 2, 3, 1]),
        ];
        for (b, t) in rows {
            assert_eq!(fundamental(&p(&b)), p(&t), "row {b:?}");
        }
    }

    #[test]
    fn tilde_zeta_check() {
        let s = p(&[6, 4, 1, 2, 5, 3]);
        assert_eq!(reverse_tilde(&s), p(&[3, 5, 2, 1, 4, 6]));
        assert_eq!(reverse_tilde(&reverse_tilde(&s)), s);
        assert_eq!(reverse_tilde(&p(&[1])), p(&[1]));
        assert_eq!(zeta_compose(&s, 1), p(&[4, 1, 2, 5, 3, 6]));
        assert_eq!(zeta_compose(&s, 0), s);
        assert_eq!(zeta_compose(&s, 6), s);
        assert_eq!(check_map(&s), p(&[4, 2, 5, 6, 3, 1]));
        assert_eq!(check_map(&check_map(&s)), s);
        assert_eq!(
            check_map(&Permutation::identity(4)),
            Permutation::identity(4)
        );
    }

    #[test]
    fn bar_example_with_intermediates() {
        let t = bar_map_traced(&p(&[6, 4, 1, 2, 5, 3])).unwrap();
        assert_eq!(t.sigma1, p(&[4, 1, 2, 5, 3, 6]));
        assert_eq!(t.sigma2, p(&[5, 4, 1, 2, 3, 6]));
        assert_eq!(t.result, p(&[6, 3, 2, 1, 4, 5]));
        assert_eq!(bar_map(&p(&[1])).unwrap(), p(&[1]));
        assert!(bar_map(&Permutation::empty()).is_err());
    }

    #[test]
    fn prime_map_small_cases() {
        assert_eq!(prime_map(&p(&[2, 1])).unwrap(), p(&[2, 1]));
        assert_eq!(prime_map(&p(&[1])).unwrap(), p(&[1]));
        let err = prime_map(&p(&[1, 2])).unwrap_err();
        assert!(err.to_string().contains("last-is-1"));
    }

    #[test]
    fn double_prime_of_empty_is_unit_cycle() {
        assert_eq!(double_prime_map(&Permutation::empty()), p(&[1]));
    }
}
