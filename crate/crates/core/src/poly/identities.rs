//! Finite identities relating Eulerian polynomials to Stirling numbers,
//! binomial sums, tail-ordered permutations and the enumerated families.

use num_bigint::BigInt;
use num_traits::Zero;

use super::bivariate::BiPoly;
use super::eulerian::{eulerian_polynomial, eulerian_recurrence_riordan};
use super::exact::ExactPoly;
use super::families::{abar_polynomial, q_polynomial, roselle_polynomial, RoselleMethod};
use super::ring::{rat, rat_big};
use super::stirling::stirling_table;
use super::{binomial, factorial};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::{delta, delta_second, descent_vector, for_each_in_class, rise_vector, ClassTag};
use crate::witness::Witness;

/// `(t−1)^k` expanded by the binomial theorem.
fn t_minus_one_pow(k: usize) -> ExactPoly {
    ExactPoly::from_integers((0..=k).map(|j| {
        let c = binomial(k as i64, j as i64);
        if (k - j) % 2 == 0 {
            c
        } else {
            -c
        }
    }))
}

/// `Aₙ(t) = Σ_k (n−k)! (t−1)^k S(n, n−k)`.
pub fn frobenius_identity(n: usize) -> Result<Witness> {
    if n == 0 {
        return Err(Error::OutOfRange("need n >= 1".into()));
    }
    let s = stirling_table(n);
    let rhs = (0..n).fold(ExactPoly::zero(), |acc, k| {
        let c = factorial(n - k) * &s[n][n - k];
        &acc + &t_minus_one_pow(k).scale(&rat_big(c))
    });
    Ok(Witness::compare(
        format!("frobenius n={n}"),
        &eulerian_polynomial(n),
        &rhs,
    ))
}

/// `ʳAₙ(s+1) = Σ_k s^k (n−k)! S(n+1−r, n+1−r−k)`, compared as
/// polynomials in `s`.
pub fn riordan_stirling_identity(n: usize, r: usize) -> Result<Witness> {
    if r < 1 || r > n {
        return Err(Error::OutOfRange(format!(
            "need 1 <= r <= n, got r = {r}, n = {n}"
        )));
    }
    let lhs = eulerian_recurrence_riordan(n, r)?.compose_affine(&rat(1), &rat(1));
    let m = n + 1 - r;
    let s = stirling_table(m);
    let rhs = ExactPoly::from_integers((0..=n - r).map(|k| factorial(n - k) * &s[m][m - k]));
    Ok(Witness::compare(
        format!("riordan-stirling n={n} r={r}"),
        &lhs,
        &rhs,
    ))
}

/// `mⁿ = Σ_s C(m+s, n) A_{n,s}`.
pub fn worpitzky(m: usize, n: usize) -> Result<Witness> {
    if m == 0 || n == 0 {
        return Err(Error::OutOfRange("need m, n >= 1".into()));
    }
    let a = eulerian_polynomial(n);
    let rhs = (0..n).fold(BigInt::zero(), |acc, s| {
        acc + binomial((m + s) as i64, n as i64) * a.coeff(s).to_integer()
    });
    let lhs = num_traits::pow(BigInt::from(m), n);
    Ok(Witness::compare(
        format!("worpitzky m={m} n={n}"),
        &lhs,
        &rhs,
    ))
}

/// `Σ_{s=0}^{n−r} ʳA_{n,n−r−s} C(m+s, n) = m^{n−r} m!/(m−r)!`.
pub fn worpitzky_generalized(m: usize, n: usize, r: usize) -> Result<Witness> {
    if r < 1 || r > n || r > m {
        return Err(Error::OutOfRange(format!(
            "need 1 <= r <= min(m, n), got m = {m}, n = {n}, r = {r}"
        )));
    }
    let a = eulerian_recurrence_riordan(n, r)?;
    let lhs = (0..=n - r).fold(BigInt::zero(), |acc, s| {
        acc + a.coeff(n - r - s).to_integer() * binomial((m + s) as i64, n as i64)
    });
    let rhs = num_traits::pow(BigInt::from(m), n - r) * factorial(m) / factorial(m - r);
    Ok(Witness::compare(
        format!("worpitzky-generalized m={m} n={n} r={r}"),
        &lhs,
        &rhs,
    ))
}

/// Counts weakly increasing `φ : [n] → [m]` with `φ(i) ≠ φ(i+1)` whenever
/// `i` is not distinguished. `distinguished` is strictly decreasing in `[n−1]`.
pub fn count_monotone_maps(m: usize, n: usize, distinguished: &[usize]) -> Result<BigInt> {
    let s = distinguished.len();
    if n == 0 || s >= n || n > m + s {
        return Err(Error::Precondition(format!(
            "need 0 <= s < n <= m + s, got m = {m}, n = {n}, s = {s}"
        )));
    }
    if distinguished.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::Precondition(
            "distinguished indices must strictly decrease".into(),
        ));
    }
    if distinguished.iter().any(|&i| i == 0 || i >= n) {
        return Err(Error::Precondition(format!(
            "distinguished indices must lie in 1..={}",
            n - 1
        )));
    }
    let mut weak = vec![false; n + 1];
    for &i in distinguished {
        weak[i] = true;
    }
    fn walk(i: usize, prev: usize, m: usize, n: usize, weak: &[bool]) -> u64 {
        if i > n {
            return 1;
        }
        // φ(i) ≥ φ(i−1), strictly unless i−1 is distinguished.
        let lo = if i == 1 || weak[i - 1] {
            prev.max(1)
        } else {
            prev + 1
        };
        (lo..=m).map(|v| walk(i + 1, v, m, n, weak)).sum()
    }
    Ok(BigInt::from(walk(1, 1, m, n, &weak)))
}

/// `t^{n−r} ʳAₙ(1/t) = r!·Σ t^{|ΔDσ|}` over permutations whose values
/// `n−r+1, ..., n` appear in increasing order.
pub fn newcomb_specialization(n: usize, r: usize, budget: &Budget) -> Result<Witness> {
    if r < 2 || r > n {
        return Err(Error::OutOfRange(format!(
            "need 2 <= r <= n, got r = {r}, n = {n}"
        )));
    }
    let lhs = eulerian_recurrence_riordan(n, r)?.reversed(n - r)?;
    let mut counts = vec![0u64; n];
    for_each_in_class(n, ClassTag::RTailOrdered(r), budget, |p| {
        counts[delta(&descent_vector(p)).expect("n >= 2").positive_count()] += 1;
    })?;
    let rhs = ExactPoly::from_counts(&counts).scale(&factorial(r).into());
    Ok(Witness::compare(format!("newcomb n={n} r={r}"), &lhs, &rhs))
}

/// `t^{n−r} ʳAₙ(1/t) = Σ t^{|Δ″^{r−1} ΔDσ|}` over `S_n`, plus the two
/// symmetries `t^{n−1}Aₙ(1/t) = Aₙ(t)` and `⁰Aₙ(t) = tⁿ Aₙ(1/t)`.
pub fn verify_reciprocal_interpretation(n: usize, r: usize, budget: &Budget) -> Result<Witness> {
    if r < 1 || r > n {
        return Err(Error::OutOfRange(format!(
            "need 1 <= r <= n, got r = {r}, n = {n}"
        )));
    }
    let lhs = eulerian_recurrence_riordan(n, r)?.reversed(n - r)?;
    let mut counts = vec![0u64; n];
    for_each_in_class(n, ClassTag::All, budget, |p| {
        let mut v = delta(&descent_vector(p)).expect("n >= 1");
        for _ in 1..r {
            v = delta_second(&v).expect("length n - 1 >= r - 1");
        }
        counts[v.positive_count()] += 1;
    })?;
    let a = eulerian_polynomial(n);
    Ok(Witness::all(
        format!("reciprocal n={n} r={r}"),
        vec![
            Witness::compare(
                "descent interpretation",
                &lhs,
                &ExactPoly::from_counts(&counts),
            ),
            Witness::compare("palindromic", &a.reversed(n - 1)?, &a),
            Witness::compare(
                "zero shift is reversal",
                &eulerian_recurrence_riordan(n, 0)?,
                &a.reversed(n)?,
            ),
        ],
    ))
}

/// `Āₙ(t,t) = ⁰Aₙ`, `Āₙ(t,1) = Aₙ`, `Āₙ(t,0) = Bₙ`.
pub fn verify_abar_specializations(n: usize, budget: &Budget) -> Result<Witness> {
    let abar = abar_polynomial(n, budget)?;
    let b = roselle_polynomial(n, RoselleMethod::ExcedanceOnDerangements, budget)?;
    Ok(Witness::all(
        format!("abar specializations n={n}"),
        vec![
            Witness::compare(
                "t'=t",
                &abar.at_y_equals_t(),
                &eulerian_recurrence_riordan(n, 0)?,
            ),
            Witness::compare("t'=1", &abar.at_y(&rat(1)), &eulerian_polynomial(n)),
            Witness::compare("t'=0", &abar.at_y(&rat(0)), &b),
        ],
    ))
}

/// `ʳA_{n+r−1}(t) = (r−1)!·Qₙ(t, r)` for the integer `r`, and
/// `Σ t^{|Mσ|} y^{s(σ)} = tⁿ Qₙ(1/t, y)` as polynomials in `t` and `y`.
pub fn verify_q_identities(n: usize, r: usize, budget: &Budget) -> Result<Witness> {
    if r == 0 {
        return Err(Error::OutOfRange("need r >= 1".into()));
    }
    let q = q_polynomial(n, budget)?;
    let shifted = if n == 0 {
        ExactPoly::constant(factorial(r - 1).into())
    } else {
        eulerian_recurrence_riordan(n + r - 1, r)?
    };
    let scaled_q = q.at_y(&rat(r as i64)).scale(&factorial(r - 1).into());
    let mut counts = vec![vec![0u64; n + 1]; n + 1];
    for_each_in_class(n, ClassTag::All, budget, |p| {
        counts[p.saillant_count()][rise_vector(p).positive_count()] += 1;
    })?;
    let rises = BiPoly::from_counts(&counts);
    Ok(Witness::all(
        format!("cycle-weighted n={n} r={r}"),
        vec![
            Witness::compare("shifted eulerian", &shifted, &scaled_q),
            Witness::compare("rises and maxima", &rises, &q.reversed_t(n)?),
            Witness::check(
                "nonnegative integer coefficients",
                q.has_nonnegative_integer_coeffs(),
                q.to_string(),
            ),
            Witness::compare("y=1", &q.at_y(&rat(1)), &eulerian_polynomial(n)),
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn frobenius_small() {
        assert!(frobenius_identity(1).unwrap().passed);
        assert!(frobenius_identity(3).unwrap().passed);
    }

    #[test]
    fn riordan_stirling_small() {
        assert!(riordan_stirling_identity(4, 1).unwrap().passed);
        assert!(riordan_stirling_identity(5, 2).unwrap().passed);
        let w = riordan_stirling_identity(4, 4).unwrap();
        assert!(w.passed);
        assert_eq!(w.detail, "24");
    }

    #[test]
    fn worpitzky_small() {
        let w = worpitzky(2, 3).unwrap();
        assert!(w.passed);
        assert_eq!(w.detail, "8");
        assert!(worpitzky(1, 5).unwrap().passed);
        let g = worpitzky_generalized(4, 4, 2).unwrap();
        assert!(g.passed);
        assert_eq!(g.detail, "192");
        assert!(worpitzky_generalized(3, 4, 4).is_err());
    }

    #[test]
    fn monotone_maps() {
        assert_eq!(count_monotone_maps(5, 3, &[]).unwrap(), binomial(5, 3));
        assert_eq!(
            count_monotone_maps(3, 4, &[3, 2, 1]).unwrap(),
            binomial(6, 4)
        );
        assert_eq!(count_monotone_maps(3, 3, &[1]).unwrap(), BigInt::from(4));
        assert!(count_monotone_maps(3, 3, &[1, 2]).is_err());
        assert!(count_monotone_maps(2, 4, &[1]).is_err());
    }

    #[test]
    fn newcomb_small() {
        let w = newcomb_specialization(4, 2, &b()).unwrap();
        assert!(w.passed);
        assert_eq!(w.detail, "2 + 14t + 8t^2");
        assert!(newcomb_specialization(5, 5, &b()).unwrap().passed);
        assert!(newcomb_specialization(5, 3, &b()).unwrap().passed);
        assert!(newcomb_specialization(5, 1, &b()).is_err());
    }

    #[test]
    fn specializations_small() {
        for n in 0..=5 {
            assert!(
                verify_abar_specializations(n, &b()).unwrap().passed,
                "n={n}"
            );
            assert!(verify_q_identities(n, 2, &b()).unwrap().passed, "n={n}");
        }
    }
}
