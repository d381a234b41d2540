//! Power series in `u` truncated at a fixed order, with coefficients in any
//! [`Ring`]: rationals, polynomials in `t`, or polynomials in `t` and `t′`.
//!
//! A series of order `N` stores exactly `c₀, ..., c_N`. Binary operations
//! work at the smaller of the two orders. `exp` needs `c₀ = 0`; `log` and
//! `reciprocal` need `c₀ = 1`. The derivative loses one order; the integral
//! keeps the order and has zero constant term.

mod closed;
mod identities;
mod matrix;
mod weights;

pub use closed::{
    closed_form_abar, closed_form_specialized, egf_from_polynomials, eulerian_by_series,
    Specialization,
};
pub use identities::{
    tan_sec_series, verify_abar_exponential, verify_arborescence_equation, verify_bernoulli,
    verify_closed_forms, verify_perdet_identity, verify_permanent_abar, verify_remark_relations,
    verify_shifted_power, verify_tan_sec,
};
pub use matrix::{determinant, permanent, Matrix};
pub use weights::{verify_abar_power, verify_exponential_formula, MultiplicativeWeight};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::{factorial, BiPoly, ExactPoly, Ring};
use crate::witness::Witness;

#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<R> {
    order: usize,
    coeffs: Vec<R>,
}

fn inv_int(k: usize) -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(k))
}

impl<R: Ring> TruncSeries<R> {
    /// Pads with zeros or truncates to exactly `order + 1` coefficients.
    pub fn new(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        TruncSeries::constant(order, R::one())
    }

    pub fn constant(order: usize, c: R) -> Self {
        TruncSeries::new(order, vec![c])
    }

    /// `c·u`.
    pub fn linear(order: usize, c: R) -> Self {
        TruncSeries::new(order, vec![R::zero(), c])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncSeries::new(order, self.coeffs[..=order.min(self.order)].to_vec())
    }

    fn zip(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let order = self.order.min(other.order);
        TruncSeries {
            order,
            coeffs: (0..=order)
                .map(|n| f(&self.coeffs[n], &other.coeffs[n]))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, R::plus)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, R::minus)
    }

    pub fn neg(&self) -> Self {
        self.map(R::negated)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(R::zero(), |acc, k| {
                    let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc.plus(&a.times(b))
                    }
                })
            })
            .collect();
        TruncSeries { order, coeffs }
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn scalar_mul(&self, c: &R) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        self.map(|x| x.scaled(q))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(TruncSeries::one(self.order), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Self {
        if self.order == 0 {
            return TruncSeries::zero(0);
        }
        TruncSeries {
            order: self.order - 1,
            coeffs: (1..=self.order)
                .map(|n| self.coeffs[n].scaled(&BigRational::from_integer(n.into())))
                .collect(),
        }
    }

    pub fn integral(&self) -> Self {
        let mut coeffs = vec![R::zero()];
        coeffs.extend((0..self.order).map(|n| self.coeffs[n].scaled(&inv_int(n + 1))));
        TruncSeries {
            order: self.order,
            coeffs,
        }
    }

    fn require_constant(&self, one: bool) -> Result<()> {
        let c = &self.coeffs[0];
        let ok = if one { *c == R::one() } else { c.is_zero() };
        if ok {
            Ok(())
        } else {
            Err(Error::ConstantTerm {
                expected: if one { "1" } else { "0" },
                found: c.to_string(),
            })
        }
    }

    pub fn reciprocal(&self) -> Result<Self> {
        self.require_constant(true)?;
        let mut out: Vec<R> = vec![R::one()];
        for n in 1..=self.order {
            let s = (1..=n).fold(R::zero(), |acc, k| {
                acc.plus(&self.coeffs[k].times(&out[n - k]))
            });
            out.push(s.negated());
        }
        Ok(TruncSeries {
            order: self.order,
            coeffs: out,
        })
    }

    /// From `E′ = S′E`: `e_n = (1/n) Σ_{k=1}^{n} k·s_k·e_{n−k}`.
    pub fn exp(&self) -> Result<Self> {
        self.require_constant(false)?;
        let mut out: Vec<R> = vec![R::one()];
        for n in 1..=self.order {
            let s = (1..=n).fold(R::zero(), |acc, k| {
                if self.coeffs[k].is_zero() {
                    acc
                } else {
                    acc.plus(
                        &self.coeffs[k]
                            .times(&out[n - k])
                            .scaled(&BigRational::from_integer(k.into())),
                    )
                }
            });
            out.push(s.scaled(&inv_int(n)));
        }
        Ok(TruncSeries {
            order: self.order,
            coeffs: out,
        })
    }

    /// From `S·L′ = S′`: `n·l_n = n·s_n − Σ_{k=1}^{n−1} k·l_k·s_{n−k}`.
    pub fn log(&self) -> Result<Self> {
        self.require_constant(true)?;
        let mut out: Vec<R> = vec![R::zero()];
        for n in 1..=self.order {
            let mut acc = self.coeffs[n].scaled(&BigRational::from_integer(n.into()));
            for k in 1..n {
                acc = acc.minus(
                    &out[k]
                        .times(&self.coeffs[n - k])
                        .scaled(&BigRational::from_integer(k.into())),
                );
            }
            out.push(acc.scaled(&inv_int(n)));
        }
        Ok(TruncSeries {
            order: self.order,
            coeffs: out,
        })
    }

    /// `u ↦ λu`.
    pub fn dilate(&self, lambda: &BigRational) -> Self {
        let mut p = BigRational::from_integer(1.into());
        let mut coeffs = Vec::with_capacity(self.order + 1);
        for c in &self.coeffs {
            coeffs.push(c.scaled(&p));
            p *= lambda;
        }
        TruncSeries {
            order: self.order,
            coeffs,
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// `n!·c_n` for each `n`: the family an exponential generating function
    /// encodes.
    pub fn egf_coefficients(&self) -> Vec<R> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scaled(&BigRational::from_integer(factorial(n))))
            .collect()
    }

    /// First order at which the two series differ, up to the smaller order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        (0..=self.order.min(other.order)).find(|&n| self.coeffs[n] != other.coeffs[n])
    }
}

impl TruncSeries<ExactPoly> {
    /// Specializes `t := value` in every coefficient.
    pub fn substitute_t(&self, value: &BigRational) -> TruncSeries<BigRational> {
        self.map(|c| c.eval(value))
    }
}

impl TruncSeries<BiPoly> {
    /// Specializes `t′ := value`.
    pub fn substitute_y(&self, value: &BigRational) -> TruncSeries<ExactPoly> {
        self.map(|c| c.at_y(value))
    }

    /// Specializes `t′ := t`.
    pub fn substitute_y_with_t(&self) -> TruncSeries<ExactPoly> {
        self.map(BiPoly::at_y_equals_t)
    }
}

/// Compares two series up to the smaller order, reporting the first
/// differing order on failure.
pub fn compare_series<R: Ring>(
    name: impl Into<String>,
    lhs: &TruncSeries<R>,
    rhs: &TruncSeries<R>,
) -> Witness {
    let order = lhs.order.min(rhs.order);
    match lhs.first_difference(rhs) {
        None => Witness::check(name, true, format!("equal to order {order}")),
        Some(n) => Witness::check(
            name,
            false,
            format!(
                "order {n}: lhs = {}; rhs = {}",
                lhs.coeffs[n], rhs.coeffs[n]
            ),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    type S = TruncSeries<BigRational>;

    fn s(cs: &[i64], order: usize) -> S {
        TruncSeries::new(order, cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn exp_of_zero_is_one() {
        assert_eq!(S::zero(5).exp().unwrap(), S::one(5));
    }

    #[test]
    fn geometric_reciprocal() {
        let one_minus_u = s(&[1, -1], 6);
        assert_eq!(one_minus_u.reciprocal().unwrap(), s(&[1; 7], 6));
    }

    #[test]
    fn derivative_of_integral() {
        let x = s(&[3, -1, 4, 1, -5], 4);
        assert_eq!(x.integral().derivative(), x.truncate(3));
        assert_eq!(x.integral().coeff(0), &rat(0));
    }

    #[test]
    fn constant_term_errors() {
        let err = s(&[2, 1], 3).reciprocal().unwrap_err();
        assert_eq!(err.to_string(), "series constant term must be 1, found 2");
        assert!(s(&[1, 1], 3).exp().is_err());
        assert!(s(&[0, 1], 3).log().is_err());
    }

    #[test]
    fn exp_log_roundtrip() {
        let x = s(&[0, 2, -1, 3], 7);
        assert_eq!(x.exp().unwrap().log().unwrap(), x);
        let y = s(&[1, 1, 5], 7);
        assert_eq!(y.log().unwrap().exp().unwrap(), y);
    }

    #[test]
    fn exp_of_u_is_factorial_reciprocals() {
        let e = s(&[0, 1], 5).exp().unwrap();
        let want: Vec<_> = (0..=5)
            .map(|n| BigRational::new(1.into(), factorial(n)))
            .collect();
        assert_eq!(e.coeffs(), &want[..]);
    }

    #[test]
    fn orders_and_mismatch_report() {
        let a = s(&[1, 2, 3], 4);
        let b = s(&[1, 2, 4], 2);
        assert_eq!(a.add(&b).order(), 2);
        assert_eq!(a.first_difference(&b), Some(2));
        let w = compare_series("x", &a, &b);
        assert!(!w.passed);
        assert_eq!(w.detail, "order 2: lhs = 3; rhs = 4");
    }
}
