//! `ʳAₙ(t)` by enumeration, two recurrences and a closed formula.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::exact::ExactPoly;
use super::ring::{rat, Ring};
use super::{binomial, factorial};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::{
    delta, delta_prime, descent_vector, dprime_vector, excedance_vector, for_each_in_class,
    rise_vector, ClassTag, Permutation, StatVector,
};

/// The base family of vectors a monomial `Γ = Δ^a Δ′^b` acts on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Base {
    /// `Eσ` over `S_n`.
    E,
    /// `(D + D′)σ` over `S_n`.
    DPlusDPrime,
    /// `Mσ` over `S_n`.
    M,
    /// `Dσ` over `S_n`; only valid when `Γ` contains a `Δ`.
    D,
    /// `ΔEσ` over the circular permutations of `[n+1]`.
    DeltaEOnCircular,
    /// `ΔDσ` over the permutations of `[n+1]` starting with `n+1`.
    DeltaDOnFirstIsN,
}

/// `Γ` applied to a base family: `Γ = Δ^(r − primes) Δ′^primes`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Interpretation {
    pub base: Base,
    pub primes: usize,
}

impl Interpretation {
    /// `Δʳ` on `E`.
    pub const fn excedance() -> Self {
        Interpretation {
            base: Base::E,
            primes: 0,
        }
    }
}

pub(crate) fn base_vector(base: Base, p: &Permutation) -> StatVector {
    match base {
        Base::E => excedance_vector(p),
        Base::DPlusDPrime => descent_vector(p)
            .add(&dprime_vector(p))
            .expect("equal lengths"),
        Base::M => rise_vector(p),
        Base::D => descent_vector(p),
        Base::DeltaEOnCircular => delta(&excedance_vector(p)).expect("n >= 1"),
        Base::DeltaDOnFirstIsN => delta(&descent_vector(p)).expect("n >= 1"),
    }
}

pub(crate) fn apply_gamma(mut v: StatVector, deltas: usize, primes: usize) -> StatVector {
    for _ in 0..deltas {
        v = delta(&v).expect("length checked by caller");
    }
    for _ in 0..primes {
        v = delta_prime(&v).expect("length checked by caller");
    }
    v
}

/// `Σ_σ t^{|Γ·base σ|}` over the class matching `interp.base`.
pub fn eulerian_by_enumeration(
    n: usize,
    r: usize,
    interp: Interpretation,
    budget: &Budget,
) -> Result<ExactPoly> {
    if interp.primes > r {
        return Err(Error::Precondition(format!(
            "monomial has {} primes but degree {r}",
            interp.primes
        )));
    }
    let deltas = r - interp.primes;
    if interp.base == Base::D && deltas == 0 {
        return Err(Error::Precondition(
            "the descent vector needs at least one Δ factor".into(),
        ));
    }
    if r > n {
        budget.check_enumeration(n)?;
        return Ok(ExactPoly::constant(factorial(n).into()));
    }
    let (size, class) = match interp.base {
        Base::DeltaEOnCircular => (n + 1, ClassTag::Circular),
        Base::DeltaDOnFirstIsN => (n + 1, ClassTag::FirstIsN),
        _ => (n, ClassTag::All),
    };
    let mut counts = vec![0u64; n + 1];
    for_each_in_class(size, class, budget, |p| {
        let v = apply_gamma(base_vector(interp.base, p), deltas, interp.primes);
        counts[v.positive_count()] += 1;
    })?;
    Ok(ExactPoly::from_counts(&counts))
}

/// Coefficients of `ʳA_m` for `m = r..=n` by the triangle recurrence
/// `ʳA_{m,k} = (k+r)·ʳA_{m−1,k} + (m+1−k−r)·ʳA_{m−1,k−1}` from
/// `ʳA_{r,0} = r!`.
fn riordan_rows(n: usize, r: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![factorial(r)]];
    for m in r + 1..=n {
        let prev = rows.last().expect("nonempty");
        let get = |k: i64| -> BigInt {
            if k < 0 {
                BigInt::zero()
            } else {
                prev.get(k as usize).cloned().unwrap_or_default()
            }
        };
        let row: Vec<BigInt> = (0..=(m - r) as i64)
            .map(|k| get(k) * (k + r as i64) + get(k - 1) * (m as i64 + 1 - k - r as i64))
            .collect();
        rows.push(row);
    }
    rows
}

/// `ʳAₙ(t)` by the triangle recurrence; each step is also checked against
/// the differential form `ʳA_m = (r + (m−r)t)·ʳA_{m−1} + t(1−t)·ʳA′_{m−1}`.
pub fn eulerian_recurrence_riordan(n: usize, r: usize) -> Result<ExactPoly> {
    if r > n {
        return Err(Error::OutOfRange(format!(
            "need r <= n, got r = {r}, n = {n}"
        )));
    }
    let rows = riordan_rows(n, r);
    let polys: Vec<ExactPoly> = rows.into_iter().map(ExactPoly::from_integers).collect();
    for (i, pair) in polys.windows(2).enumerate() {
        let m = r + i + 1;
        let lin = ExactPoly::from_ints(&[r as i64, (m - r) as i64]);
        let t_one_minus_t = ExactPoly::from_ints(&[0, 1, -1]);
        let rhs = &(&lin * &pair[0]) + &(&t_one_minus_t * &pair[0].derivative());
        if rhs != pair[1] {
            return Err(Error::Internal(format!(
                "differential form fails at r = {r}, m = {m}: {} vs {rhs}",
                pair[1]
            )));
        }
    }
    Ok(polys.into_iter().last().expect("nonempty"))
}

/// `Aₙ(t)`, with `A₀ = 1`.
pub fn eulerian_polynomial(n: usize) -> ExactPoly {
    if n == 0 {
        return ExactPoly::one();
    }
    ExactPoly::from_integers(riordan_rows(n, 1).pop().expect("nonempty"))
}

/// The reduced coefficients `ʳa_{n,k} = ʳA_{n,k} / r!` for `r ≤ n`.
pub fn eulerian_reduced(n: usize, r: usize) -> Result<Vec<BigInt>> {
    if r > n {
        return Err(Error::OutOfRange(format!(
            "need r <= n, got r = {r}, n = {n}"
        )));
    }
    let f = factorial(r);
    riordan_rows(n, r)
        .pop()
        .expect("nonempty")
        .into_iter()
        .map(|c| {
            if (&c % &f).is_zero() {
                Ok(c / &f)
            } else {
                Err(Error::Internal(format!(
                    "coefficient {c} not divisible by {r}!"
                )))
            }
        })
        .collect()
}

/// `ʳAₙ(t)` by iterating `t·^{s+1}A_m = ˢA_m + s(t−1)·ˢA_{m−1}` upward
/// from the `s = 1` column.
pub fn eulerian_recurrence_shift(n: usize, r: usize) -> Result<ExactPoly> {
    if r > n {
        return Err(Error::OutOfRange(format!(
            "need r <= n, got r = {r}, n = {n}"
        )));
    }
    if r == n {
        return Ok(ExactPoly::constant(factorial(n).into()));
    }
    if r == 0 {
        return Ok(eulerian_polynomial(n).shift(1));
    }
    // col[m] = ˢA_m for m = 0..=n.
    let mut col: Vec<ExactPoly> = (0..=n).map(eulerian_polynomial).collect();
    let t = ExactPoly::t();
    let t_minus_1 = ExactPoly::from_ints(&[-1, 1]);
    for s in 1..r {
        let mut next = Vec::with_capacity(n + 1);
        for m in 0..=n {
            if m <= s + 1 {
                // ^{s+1}A_m = m! for m ≤ s+1.
                next.push(ExactPoly::constant(factorial(m).into()));
                continue;
            }
            let lhs = &col[m] + &(&t_minus_1 * &col[m - 1]).scale(&rat(s as i64));
            let q = lhs.divide_exact(&t).ok_or_else(|| {
                Error::Internal(format!(
                    "shift recurrence leaves a remainder at s = {s}, m = {m}"
                ))
            })?;
            next.push(q);
        }
        col = next;
    }
    Ok(col.swap_remove(n))
}

/// One coefficient `ʳA_{n−1+r, k}` by the alternating sum
/// `r! Σ_{i=0}^{k} (−1)^i (k−i+r)^{n−1} C(n+r, i) C(k−i+r, r)`.
pub fn eulerian_explicit(n: usize, r: usize, k: usize) -> Result<BigInt> {
    if n == 0 || k > n - 1 {
        return Err(Error::OutOfRange(format!(
            "need n >= 1 and k <= n-1, got n = {n}, k = {k}"
        )));
    }
    let mut sum = BigInt::zero();
    for i in 0..=k {
        let base = BigInt::from(k - i + r);
        let term = num_traits::pow(base, n - 1)
            * binomial((n + r) as i64, i as i64)
            * binomial((k - i + r) as i64, r as i64);
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let value = factorial(r) * sum;
    if value.is_negative() {
        return Err(Error::Internal(format!("negative coefficient {value}")));
    }
    Ok(value)
}

/// `ʳA_N(t)` assembled coefficientwise from [`eulerian_explicit`].
pub fn eulerian_explicit_poly(big_n: usize, r: usize) -> Result<ExactPoly> {
    if r > big_n {
        return Err(Error::OutOfRange(format!(
            "need r <= n, got r = {r}, n = {big_n}"
        )));
    }
    let n = big_n + 1 - r;
    let coeffs = (0..n)
        .map(|k| eulerian_explicit(n, r, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExactPoly::from_integers(coeffs))
}
