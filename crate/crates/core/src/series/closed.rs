//! Closed-form generating functions of the two-variable Eulerian family.
//!
//! With `Ā(t,t′,u) = Σ uⁿ/n!·Āₙ(t,t′)`:
//!
//! ```text
//! Ā(t,t′,u) = (1−t) / (exp((t−t′)u) − t·exp((1−t′)u))
//! Ā(t,t,u)  = (1−t) / (1 − t·exp((1−t)u))
//! Ā(t,1,u)  = (1−t) / (exp((t−1)u) − t)
//! Ā(t,0,u)  = (1−t) / (exp(tu) − t·exp(u))
//! ```
//!
//! Each denominator has constant term `1−t`, which is not a unit. Every
//! coefficient of the denominator vanishes at `t = 1`, so it factors as
//! `(1−t)·D̃` with `D̃(0) = 1`; the quotient is then `1/D̃`.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::{factorial, rat, BiPoly, ExactPoly, Ring};
use crate::series::TruncSeries;

/// `Σ uⁿ/n!·family(n)` for `n = 0..=order`.
pub fn egf_from_polynomials<R: Ring>(order: usize, family: impl Fn(usize) -> R) -> TruncSeries<R> {
    TruncSeries::new(
        order,
        (0..=order)
            .map(|n| family(n).scaled(&BigRational::new(1.into(), factorial(n))))
            .collect(),
    )
}

fn one_minus_t() -> ExactPoly {
    ExactPoly::from_ints(&[1, -1])
}

/// `exp(c·u)`.
fn exp_linear<R: Ring>(order: usize, c: R) -> TruncSeries<R> {
    TruncSeries::linear(order, c)
        .exp()
        .expect("zero constant term")
}

/// `(1−t)/den` for a denominator with constant term `1−t`.
fn over_one_minus_t(den: TruncSeries<ExactPoly>) -> Result<TruncSeries<ExactPoly>> {
    let order = den.order();
    let reduced = den
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            c.divide_exact(&one_minus_t()).ok_or_else(|| {
                Error::Internal(format!(
                    "denominator coefficient {n} not divisible by 1-t: {c}"
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    TruncSeries::new(order, reduced).reciprocal()
}

/// `Ā(t,t′,u)` from its closed form, `t′` being the second variable.
pub fn closed_form_abar(order: usize) -> Result<TruncSeries<BiPoly>> {
    let t = BiPoly::from_t(ExactPoly::t());
    let y = BiPoly::y();
    let e1 = exp_linear(order, &t - &y);
    let e2 = exp_linear(order, &BiPoly::one() - &y);
    let den = e1.sub(&e2.scalar_mul(&t));
    let reduced = den
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            c.divide_t_exact(&one_minus_t()).ok_or_else(|| {
                Error::Internal(format!(
                    "denominator coefficient {n} not divisible by 1-t: {c}"
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    TruncSeries::new(order, reduced).reciprocal()
}

/// The three one-variable specializations of `Ā`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Specialization {
    /// `t′ = t`: generating function of `⁰Aₙ = t·Aₙ`.
    Diagonal,
    /// `t′ = 1`: generating function of `Aₙ`.
    One,
    /// `t′ = 0`: generating function of the Roselle polynomials `Bₙ`.
    Zero,
}

impl Specialization {
    pub fn value(self) -> Option<BigRational> {
        match self {
            Specialization::Diagonal => None,
            Specialization::One => Some(rat(1)),
            Specialization::Zero => Some(rat(0)),
        }
    }
}

/// The specialized closed form, built directly from its own expression.
pub fn closed_form_specialized(
    order: usize,
    which: Specialization,
) -> Result<TruncSeries<ExactPoly>> {
    let t = ExactPoly::t();
    let den = match which {
        Specialization::Diagonal => {
            let e = exp_linear(order, one_minus_t());
            TruncSeries::one(order).sub(&e.scalar_mul(&t))
        }
        Specialization::One => {
            let e = exp_linear(order, ExactPoly::from_ints(&[-1, 1]));
            e.sub(&TruncSeries::constant(order, t))
        }
        Specialization::Zero => {
            let e1 = exp_linear(order, t.clone());
            let e2 = exp_linear(order, ExactPoly::one());
            e1.sub(&e2.scalar_mul(&t))
        }
    };
    over_one_minus_t(den)
}

/// `ʳAₙ(t)` read off `ʳA(t,u) = (r−1)!·A(t,u)^r`, where
/// `ʳA(t,u) = Σ_{m≥0} u^m/m!·ʳA_{m+r−1}(t)` and `A(t,u)` comes from its
/// closed form.
pub fn eulerian_by_series(n: usize, r: usize) -> Result<ExactPoly> {
    if r > n {
        return Ok(ExactPoly::constant(factorial(n).into()));
    }
    if r == 0 {
        if n == 0 {
            return Ok(ExactPoly::one());
        }
        return Ok(eulerian_by_series(n, 1)?.shift(1));
    }
    let m = n + 1 - r;
    let a = closed_form_specialized(m, Specialization::One)?;
    let power = a.pow(r);
    Ok(power
        .coeff(m)
        .scale(&(factorial(m) * factorial(r - 1)).into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::eulerian_polynomial;

    #[test]
    fn one_specialization_is_eulerian_egf() {
        let s = closed_form_specialized(4, Specialization::One).unwrap();
        let want = egf_from_polynomials(4, eulerian_polynomial);
        assert_eq!(s, want);
        assert_eq!(
            want.coeff(3),
            &ExactPoly::from_ints(&[1, 4, 1]).scale(&BigRational::new(1.into(), 6.into()))
        );
    }

    #[test]
    fn simple_families() {
        let ones = egf_from_polynomials(5, |_| rat(1));
        assert_eq!(ones, TruncSeries::linear(5, rat(1)).exp().unwrap());
        let facts = egf_from_polynomials(5, |n| BigRational::from_integer(factorial(n)));
        assert_eq!(facts, TruncSeries::new(5, vec![rat(1); 6]));
    }

    #[test]
    fn bivariate_specializes() {
        let abar = closed_form_abar(5).unwrap();
        for which in [Specialization::One, Specialization::Zero] {
            assert_eq!(
                abar.substitute_y(&which.value().unwrap()),
                closed_form_specialized(5, which).unwrap()
            );
        }
        assert_eq!(
            abar.substitute_y_with_t(),
            closed_form_specialized(5, Specialization::Diagonal).unwrap()
        );
    }

    #[test]
    fn series_extraction_small() {
        assert_eq!(
            eulerian_by_series(4, 1).unwrap(),
            ExactPoly::from_ints(&[1, 11, 11, 1])
        );
        assert_eq!(
            eulerian_by_series(4, 2).unwrap(),
            ExactPoly::from_ints(&[8, 14, 2])
        );
        assert_eq!(
            eulerian_by_series(3, 3).unwrap(),
            ExactPoly::from_ints(&[6])
        );
        assert_eq!(
            eulerian_by_series(3, 0).unwrap(),
            ExactPoly::from_ints(&[0, 1, 4, 1])
        );
    }
}
