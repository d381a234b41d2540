use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::exact::{forward_ops, ExactPoly};
use super::ring::Ring;
use crate::error::Result;

/// Polynomial in two variables `t` and `y`, stored as a polynomial in `y`
/// whose coefficients are polynomials in `t`. `y` stands for `t′` or `r`
/// depending on the family.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BiPoly {
    coeffs: Vec<ExactPoly>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<ExactPoly>) -> Self {
        while coeffs.last().is_some_and(ExactPoly::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    /// `Σ counts[(i, j)] t^i y^j` from a dense count table `counts[j][i]`.
    pub fn from_counts(counts: &[Vec<u64>]) -> Self {
        BiPoly::new(
            counts
                .iter()
                .map(|row| ExactPoly::from_counts(row))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        BiPoly::from_t(ExactPoly::one())
    }

    /// A polynomial not involving `y`.
    pub fn from_t(p: ExactPoly) -> Self {
        BiPoly::new(vec![p])
    }

    /// The variable `y`.
    pub fn y() -> Self {
        BiPoly::new(vec![ExactPoly::zero(), ExactPoly::one()])
    }

    /// `c · t^i · y^j`.
    pub fn monomial(c: BigRational, i: usize, j: usize) -> Self {
        let mut coeffs = vec![ExactPoly::zero(); j + 1];
        coeffs[j] = ExactPoly::monomial(c, i);
        BiPoly::new(coeffs)
    }

    /// Coefficient of `y^j`.
    pub fn coeff(&self, j: usize) -> ExactPoly {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[ExactPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^i y^j`.
    pub fn term(&self, i: usize, j: usize) -> BigRational {
        self.coeff(j).coeff(i)
    }

    /// Specializes `y := value`.
    pub fn at_y(&self, value: &BigRational) -> ExactPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactPoly::zero(), |acc, c| &acc.scale(value) + c)
    }

    /// Specializes `y := t`.
    pub fn at_y_equals_t(&self) -> ExactPoly {
        self.coeffs
            .iter()
            .enumerate()
            .fold(ExactPoly::zero(), |acc, (j, c)| &acc + &c.shift(j))
    }

    /// Specializes `t := value`, leaving a polynomial in `y` (returned with
    /// `y` renamed to `t`).
    pub fn at_t(&self, value: &BigRational) -> ExactPoly {
        ExactPoly::new(self.coeffs.iter().map(|c| c.eval(value)).collect())
    }

    /// Applies `f` to every `t`-coefficient.
    pub fn map_t(&self, f: impl Fn(&ExactPoly) -> ExactPoly) -> Self {
        BiPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// `t^d · self(1/t, y)`; requires every `t`-degree to be at most `d`.
    pub fn reversed_t(&self, d: usize) -> Result<Self> {
        Ok(BiPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.reversed(d))
                .collect::<Result<_>>()?,
        ))
    }

    /// Divides every `t`-coefficient exactly by `p`.
    pub fn divide_t_exact(&self, p: &ExactPoly) -> Option<Self> {
        self.coeffs
            .iter()
            .map(|c| c.divide_exact(p))
            .collect::<Option<Vec<_>>>()
            .map(BiPoly::new)
    }

    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.coeffs
            .iter()
            .all(ExactPoly::has_nonnegative_integer_coeffs)
    }

    /// Renders with the given name for `y`.
    pub fn display_with(&self, y: &str) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let inner = c.to_string();
            let ypow = match i {
                0 => String::new(),
                1 => y.to_string(),
                _ => format!("{y}^{i}"),
            };
            let constant = c.degree() == Some(0) && c.coeff(0).is_integer();
            parts.push(if ypow.is_empty() {
                inner
            } else if inner == "1" {
                ypow
            } else if constant {
                format!("{inner}{ypow}")
            } else {
                format!("({inner}){ypow}")
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl num_traits::Zero for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl num_traits::One for BiPoly {
    fn one() -> Self {
        BiPoly::one()
    }
}

impl Ring for BiPoly {
    fn plus(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        BiPoly::new((0..n).map(|j| &self.coeff(j) + &other.coeff(j)).collect())
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn negated(&self) -> Self {
        BiPoly {
            coeffs: self.coeffs.iter().map(Ring::negated).collect(),
        }
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![ExactPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        BiPoly::new(coeffs)
    }
    fn scaled(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            coeffs: self.coeffs.iter().map(|c| c.scale(q)).collect(),
        }
    }
    fn divide_exact(&self, other: &Self) -> Option<Self> {
        let dl = other.coeffs.len().checked_sub(1)?;
        let lead = &other.coeffs[dl];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dl {
            return self.is_zero().then(BiPoly::zero);
        }
        let mut quot = vec![ExactPoly::zero(); rem.len() - dl];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dl].divide_exact(lead)?;
            for (i, c) in other.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&q * c);
            }
            quot[k] = q;
        }
        rem.iter()
            .all(ExactPoly::is_zero)
            .then(|| BiPoly::new(quot))
    }
}

forward_ops!(BiPoly);

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t'"))
    }
}

impl From<ExactPoly> for BiPoly {
    fn from(p: ExactPoly) -> Self {
        BiPoly::from_t(p)
    }
}
