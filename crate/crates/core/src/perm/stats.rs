//! Statistic vectors and the operators acting on them.
//!
//! For `σ` in `S_n` and `k` in `[n]`, with `σ(0) = σ⁻¹(0) = σ(n+1) = 0`:
//!
//! * `Eσ(k) = (σ(k) − (k−1))₊`
//! * `Dσ(k) = (σ(σ⁻¹(k) − 1) − (k−1))₊`, indexed by value
//! * `Mσ(k) = (σ(1 + σ⁻¹(k−1)) − (k−1))₊`, indexed by value
//!
//! `Δ` drops the last entry and lowers the rest by one (floored at zero),
//! `Δ′` drops the first entry, `Δ″` drops the last, and `Λ` lowers every
//! entry by one. `Δ = Δ″Λ = ΛΔ″`, and `Δ`, `Δ′`, `Δ″` commute pairwise.

use std::fmt;

use super::{write_tuple, Permutation};
use crate::error::{Error, Result};

/// A finite sequence of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct StatVector(Vec<usize>);

impl StatVector {
    pub fn new(entries: Vec<usize>) -> Self {
        StatVector(entries)
    }

    /// Builds a vector from signed values, applying the positive part.
    pub fn from_signed(values: impl IntoIterator<Item = i64>) -> Self {
        StatVector(values.into_iter().map(|x| x.max(0) as usize).collect())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based access.
    pub fn get(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    /// `|x|`, the number of strictly positive entries.
    pub fn positive_count(&self) -> usize {
        self.0.iter().filter(|&&x| x > 0).count()
    }

    /// Entrywise sum; lengths must agree.
    pub fn add(&self, other: &StatVector) -> Result<StatVector> {
        if self.len() != other.len() {
            return Err(Error::Precondition(format!(
                "vector lengths differ: {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(StatVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn delta(&self) -> Result<StatVector> {
        delta(self)
    }

    pub fn delta_prime(&self) -> Result<StatVector> {
        delta_prime(self)
    }

    pub fn delta_second(&self) -> Result<StatVector> {
        delta_second(self)
    }

    pub fn lambda(&self) -> StatVector {
        lambda_op(self)
    }
}

impl fmt::Display for StatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

pub fn positive_count(v: &StatVector) -> usize {
    v.positive_count()
}

pub fn delta(v: &StatVector) -> Result<StatVector> {
    match v.0.split_last() {
        None => Err(Error::EmptyVector("delta")),
        Some((_, init)) => Ok(StatVector(
            init.iter().map(|&x| x.saturating_sub(1)).collect(),
        )),
    }
}

pub fn delta_prime(v: &StatVector) -> Result<StatVector> {
    match v.0.split_first() {
        None => Err(Error::EmptyVector("delta_prime")),
        Some((_, tail)) => Ok(StatVector(tail.to_vec())),
    }
}

pub fn delta_second(v: &StatVector) -> Result<StatVector> {
    match v.0.split_last() {
        None => Err(Error::EmptyVector("delta_second")),
        Some((_, init)) => Ok(StatVector(init.to_vec())),
    }
}

pub fn lambda_op(v: &StatVector) -> StatVector {
    StatVector(v.0.iter().map(|&x| x.saturating_sub(1)).collect())
}

fn pos_part(a: usize, b: usize) -> usize {
    a.saturating_sub(b)
}

pub fn excedance_vector(p: &Permutation) -> StatVector {
    StatVector(
        p.word()
            .iter()
            .enumerate()
            .map(|(i, &v)| pos_part(v, i))
            .collect(),
    )
}

pub fn descent_vector(p: &Permutation) -> StatVector {
    let inv = p.inverse_table();
    StatVector(
        (1..=p.n())
            .map(|k| pos_part(p.at(inv[k] - 1), k - 1))
            .collect(),
    )
}

pub fn rise_vector(p: &Permutation) -> StatVector {
    let inv = p.inverse_table();
    StatVector(
        (1..=p.n())
            .map(|k| pos_part(p.at(1 + inv[k - 1]), k - 1))
            .collect(),
    )
}

/// `D′τ(j) = 1` when the value `j` is a left-to-right maximum of `τ` and
/// either `j` sits in the last position or the value right after it is
/// also a left-to-right maximum; `0` otherwise.
pub fn dprime_vector(p: &Permutation) -> StatVector {
    let n = p.n();
    let inv = p.inverse_table();
    let sail = p.saillant_values();
    StatVector(
        (1..=n)
            .map(|j| {
                if !sail[j] {
                    return 0;
                }
                let pos = inv[j];
                if pos == n {
                    // A maximum in last position must be n itself.
                    assert_eq!(j, n, "internal error: saillant {j} < {n} in last position");
                    1
                } else {
                    usize::from(sail[p.at(pos + 1)])
                }
            })
            .collect(),
    )
}

/// `E′σ(k) = 1` if `k` is a fixed point, else 0.
pub fn fixed_point_vector(p: &Permutation) -> StatVector {
    StatVector(
        (1..=p.n())
            .map(|k| usize::from(p.is_fixed_point(k)))
            .collect(),
    )
}

/// Multiset equality of two vector families, by sorting.
pub fn same_multiset(mut a: Vec<StatVector>, mut b: Vec<StatVector>) -> bool {
    if a.len() != b.len() {
        return false;
    }
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &[usize]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    fn v(xs: &[usize]) -> StatVector {
        StatVector::new(xs.to_vec())
    }

    #[test]
    fn excedance_examples() {
        assert_eq!(
            excedance_vector(&p(&[6, 4, 1, 2, 5, 3])),
            v(&[6, 3, 0, 0, 1, 0])
        );
        assert_eq!(
            excedance_vector(&Permutation::identity(4)),
            v(&[1, 1, 1, 1])
        );
        assert_eq!(excedance_vector(&Permutation::empty()), v(&[]));
    }

    #[test]
    fn operator_examples() {
        let e = v(&[6, 3, 0, 0, 1, 0]);
        assert_eq!(delta(&e).unwrap(), v(&[5, 2, 0, 0, 0]));
        assert_eq!(delta(&delta(&e).unwrap()).unwrap(), v(&[4, 1, 0, 0]));
        assert_eq!(delta(&v(&[1, 1])).unwrap(), v(&[0]));
        assert_eq!(delta_prime(&e).unwrap(), v(&[3, 0, 0, 1, 0]));
        assert_eq!(
            delta_prime(&delta_prime(&e).unwrap()).unwrap(),
            v(&[0, 0, 1, 0])
        );
        assert_eq!(delta_prime(&v(&[5])).unwrap(), v(&[]));
        assert_eq!(delta_second(&e).unwrap(), v(&[6, 3, 0, 0, 1]));
        assert_eq!(delta_second(&v(&[5])).unwrap(), v(&[]));
        assert_eq!(delta(&delta_prime(&e).unwrap()).unwrap(), v(&[2, 0, 0, 0]));
        assert_eq!(lambda_op(&e), v(&[5, 2, 0, 0, 0, 0]));
        assert_eq!(lambda_op(&v(&[])), v(&[]));
        assert_eq!(lambda_op(&lambda_op(&v(&[3, 1]))), v(&[1, 0]));
    }

    #[test]
    fn empty_vector_errors() {
        assert_eq!(delta(&v(&[])), Err(Error::EmptyVector("delta")));
        assert!(delta_prime(&v(&[])).is_err());
        assert!(delta_second(&v(&[])).is_err());
        assert_eq!(
            Error::EmptyVector("delta").to_string(),
            "delta on empty vector"
        );
    }

    #[test]
    fn descent_and_rise_examples() {
        let s = p(&[6, 4, 1, 2, 5, 3]);
        assert_eq!(descent_vector(&s), v(&[4, 0, 3, 3, 0, 0]));
        assert_eq!(delta(&descent_vector(&s)).unwrap(), v(&[3, 0, 2, 2, 0]));
        assert_eq!(rise_vector(&s), v(&[6, 1, 3, 0, 0, 0]));
        assert_eq!(rise_vector(&p(&[3, 5, 2, 1, 4, 6])), v(&[3, 3, 0, 2, 2, 0]));
        assert_eq!(descent_vector(&Permutation::identity(3)), v(&[0, 0, 0]));
        assert_eq!(rise_vector(&p(&[1])), v(&[1]));
    }

    #[test]
    fn dprime_examples() {
        let t = p(&[4, 2, 5, 6, 1, 3]);
        assert_eq!(dprime_vector(&t), v(&[0, 0, 0, 0, 1, 0]));
        assert_eq!(
            descent_vector(&t).add(&dprime_vector(&t)).unwrap(),
            v(&[6, 3, 0, 0, 1, 0])
        );
        assert_eq!(
            dprime_vector(&Permutation::identity(5)),
            v(&[1, 1, 1, 1, 1])
        );
        assert_eq!(dprime_vector(&p(&[1])), v(&[1]));
    }

    #[test]
    fn fixed_points_and_counts() {
        assert_eq!(
            fixed_point_vector(&p(&[6, 4, 1, 2, 5, 3])),
            v(&[0, 0, 0, 0, 1, 0])
        );
        assert_eq!(fixed_point_vector(&p(&[2, 3, 1])), v(&[0, 0, 0]));
        assert_eq!(v(&[6, 3, 0, 0, 1, 0]).positive_count(), 3);
        assert_eq!(v(&[]).positive_count(), 0);
        assert_eq!(v(&[5, 2, 0, 0, 0]).positive_count(), 2);
    }
}
