use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Commutative ring with rational scalars: the coefficient rings used by
/// polynomials, series and matrices.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, q: &BigRational) -> Self;
    /// `self / other` when the quotient exists in the ring.
    fn divide_exact(&self, other: &Self) -> Option<Self>;

    fn from_rational(q: &BigRational) -> Self {
        <Self as One>::one().scaled(q)
    }

    fn from_int(k: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(k)))
    }
}

impl Ring for BigRational {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, q: &BigRational) -> Self {
        self * q
    }
    fn divide_exact(&self, other: &Self) -> Option<Self> {
        (!Zero::is_zero(other)).then(|| self / other)
    }
}

pub fn rat(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

pub fn rat_big(k: BigInt) -> BigRational {
    BigRational::from_integer(k)
}
