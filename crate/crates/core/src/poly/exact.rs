use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::{rat, Ring};
use crate::error::{Error, Result};

/// Polynomial in `t` with rational coefficients, stored densely in
/// ascending order without trailing zeros. The zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExactPoly {
    coeffs: Vec<BigRational>,
}

impl ExactPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        ExactPoly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_integers(cs: impl IntoIterator<Item = BigInt>) -> Self {
        ExactPoly::new(cs.into_iter().map(BigRational::from_integer).collect())
    }

    /// Coefficients from counts: `Σ counts[k] t^k`.
    pub fn from_counts(counts: &[u64]) -> Self {
        ExactPoly::from_integers(counts.iter().map(|&c| BigInt::from(c)))
    }

    pub fn zero() -> Self {
        ExactPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ExactPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        ExactPoly::new(vec![c])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        ExactPoly::monomial(BigRational::one(), 1)
    }

    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        ExactPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Integer coefficients, or `None` if some coefficient is fractional.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&rat(x))
    }

    pub fn derivative(&self) -> Self {
        ExactPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(ExactPoly::one(), |acc, _| &acc * self)
    }

    /// `t^k · self`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ExactPoly { coeffs }
    }

    /// `self(a·t + b)`.
    pub fn compose_affine(&self, a: &BigRational, b: &BigRational) -> Self {
        let lin = ExactPoly::new(vec![b.clone(), a.clone()]);
        self.coeffs.iter().rev().fold(ExactPoly::zero(), |acc, c| {
            &(&acc * &lin) + &ExactPoly::constant(c.clone())
        })
    }

    /// `t^d · self(1/t)`; requires `deg self ≤ d`.
    pub fn reversed(&self, d: usize) -> Result<Self> {
        if self.coeffs.len() > d + 1 {
            return Err(Error::Precondition(format!(
                "cannot reverse a degree {} polynomial in degree {d}",
                self.coeffs.len() - 1
            )));
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(d + 1, BigRational::zero());
        coeffs.reverse();
        Ok(ExactPoly::new(coeffs))
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &ExactPoly) -> Result<(ExactPoly, ExactPoly)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::Precondition("division by the zero polynomial".into()))?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((ExactPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / lead;
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &q * c;
                }
            }
            quot[k] = q;
        }
        Ok((ExactPoly::new(quot), ExactPoly::new(rem)))
    }

    /// Rescales coefficients by `q`.
    pub fn scale(&self, q: &BigRational) -> Self {
        ExactPoly::new(self.coeffs.iter().map(|c| c * q).collect())
    }

    /// Sum of coefficients, i.e. the value at `t = 1`.
    pub fn at_one(&self) -> BigRational {
        self.coeffs.iter().fold(BigRational::zero(), |a, c| a + c)
    }
}

impl num_traits::Zero for ExactPoly {
    fn zero() -> Self {
        ExactPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl num_traits::One for ExactPoly {
    fn one() -> Self {
        ExactPoly::one()
    }
}

impl Ring for ExactPoly {
    fn plus(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += d;
        }
        ExactPoly::new(coeffs)
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn negated(&self) -> Self {
        ExactPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ExactPoly::new(coeffs)
    }
    fn scaled(&self, q: &BigRational) -> Self {
        self.scale(q)
    }
    fn divide_exact(&self, other: &Self) -> Option<Self> {
        match self.div_rem(other) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }
}

macro_rules! forward_ops {
    ($ty:ty) => {
        impl std::ops::Add for &$ty {
            type Output = $ty;
            fn add(self, o: &$ty) -> $ty {
                self.plus(o)
            }
        }
        impl std::ops::Sub for &$ty {
            type Output = $ty;
            fn sub(self, o: &$ty) -> $ty {
                self.minus(o)
            }
        }
        impl std::ops::Mul for &$ty {
            type Output = $ty;
            fn mul(self, o: &$ty) -> $ty {
                self.times(o)
            }
        }
        impl std::ops::Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                self.negated()
            }
        }
        impl std::ops::Add for $ty {
            type Output = $ty;
            fn add(self, o: $ty) -> $ty {
                self.plus(&o)
            }
        }
        impl std::ops::Sub for $ty {
            type Output = $ty;
            fn sub(self, o: $ty) -> $ty {
                self.minus(&o)
            }
        }
        impl std::ops::Mul for $ty {
            type Output = $ty;
            fn mul(self, o: $ty) -> $ty {
                self.times(&o)
            }
        }
        impl std::ops::Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                self.negated()
            }
        }
    };
}
pub(crate) use forward_ops;

forward_ops!(ExactPoly);

/// Writes `Σ c_k x^k` in ascending order, e.g. `1 + 11t + 11t^2 + t^3`.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[BigRational],
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let unit = mag.is_one();
        if k == 0 || !unit {
            if mag.is_integer() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "({mag})")?;
            }
        }
        match k {
            0 => {}
            1 => f.write_str(var)?,
            _ => write!(f, "{var}^{k}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "t")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_and_displays() {
        let p = ExactPoly::from_ints(&[1, 11, 11, 1, 0, 0]);
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.to_string(), "1 + 11t + 11t^2 + t^3");
        assert_eq!(ExactPoly::from_ints(&[0, 0]).to_string(), "0");
        assert_eq!(ExactPoly::from_ints(&[1, -1]).to_string(), "1 - t");
        assert_eq!(ExactPoly::from_ints(&[0, -2]).to_string(), "-2t");
        let half = ExactPoly::new(vec![BigRational::new(1.into(), 2.into())]).shift(2);
        assert_eq!(half.to_string(), "(1/2)t^2");
    }

    #[test]
    fn arithmetic() {
        let a = ExactPoly::from_ints(&[1, 1]);
        let b = ExactPoly::from_ints(&[1, -1]);
        assert_eq!(&a * &b, ExactPoly::from_ints(&[1, 0, -1]));
        assert_eq!(&a + &b, ExactPoly::from_ints(&[2]));
        assert_eq!((&a - &a).degree(), None);
        assert_eq!(a.pow(3), ExactPoly::from_ints(&[1, 3, 3, 1]));
        assert_eq!(
            ExactPoly::from_ints(&[1, 4, 1]).derivative(),
            ExactPoly::from_ints(&[4, 2])
        );
    }

    #[test]
    fn division() {
        let p = ExactPoly::from_ints(&[-1, 0, 1]);
        let d = ExactPoly::from_ints(&[1, -1]);
        let (q, r) = p.div_rem(&d).unwrap();
        assert_eq!(q, ExactPoly::from_ints(&[-1, -1]));
        assert!(r.is_zero());
        assert!(ExactPoly::from_ints(&[1, 0, 1]).divide_exact(&d).is_none());
        assert!(p.div_rem(&ExactPoly::zero()).is_err());
    }

    #[test]
    fn reversal_and_affine() {
        let p = ExactPoly::from_ints(&[4, 7, 1]);
        assert_eq!(p.reversed(2).unwrap(), ExactPoly::from_ints(&[1, 7, 4]));
        assert_eq!(p.reversed(3).unwrap(), ExactPoly::from_ints(&[0, 1, 7, 4]));
        assert!(p.reversed(1).is_err());
        // (s+1)^2 = 1 + 2s + s^2
        let sq = ExactPoly::from_ints(&[0, 0, 1]);
        assert_eq!(
            sq.compose_affine(&rat(1), &rat(1)),
            ExactPoly::from_ints(&[1, 2, 1])
        );
        assert_eq!(p.eval_int(-1), rat(-2));
        assert_eq!(p.at_one(), rat(12));
    }
}
