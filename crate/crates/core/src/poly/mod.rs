//! Exact polynomials and the finite identities around Eulerian polynomials.
//!
//! `ʳAₙ(t)` is the generating polynomial of `|Δʳ Eσ|` over `S_n`, with the
//! conventions `ʳAₙ(t) = n!` for `r ≥ n` and `A₀(t) = 1`; `Aₙ = ¹Aₙ` and
//! `⁰Aₙ = t·Aₙ` for `n ≥ 1`. Every coefficient of `ʳAₙ` is a multiple of `r!`.

mod bivariate;
mod eulerian;
mod exact;
mod families;
mod identities;
mod ring;
mod stirling;

pub use bivariate::BiPoly;
pub(crate) use eulerian::{apply_gamma, base_vector};
pub use eulerian::{
    eulerian_by_enumeration, eulerian_explicit, eulerian_explicit_poly, eulerian_polynomial,
    eulerian_recurrence_riordan, eulerian_recurrence_shift, eulerian_reduced, Base, Interpretation,
};
pub use exact::ExactPoly;
pub use families::{
    abar_polynomial, eval_at_minus_one, injection_interpretation, q_polynomial, roselle_polynomial,
    RoselleMethod, Which,
};
pub use identities::{
    count_monotone_maps, frobenius_identity, newcomb_specialization, riordan_stirling_identity,
    verify_abar_specializations, verify_q_identities, verify_reciprocal_interpretation, worpitzky,
    worpitzky_generalized,
};
pub use ring::{rat, rat_big, Ring};
pub use stirling::{stirling2, StirlingMode};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(a, b)`, zero unless `0 ≤ b ≤ a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
