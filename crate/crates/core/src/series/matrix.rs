use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::Ring;

/// Square matrix over a ring, row-major, 1-based accessors.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<R> {
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    /// `ξ_{i,j} = a` above the diagonal, `b` on it, `c` below it.
    pub fn banded(n: usize, a: &R, b: &R, c: &R) -> Self {
        Matrix::from_fn(n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => a.clone(),
            std::cmp::Ordering::Equal => b.clone(),
            std::cmp::Ordering::Greater => c.clone(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }
}

/// Permanent by inclusion-exclusion over column subsets:
/// `per A = Σ_S (−1)^{n−|S|} Π_i Σ_{j∈S} a_{ij}`.
pub fn permanent<R: Ring>(m: &Matrix<R>, budget: &Budget) -> Result<R> {
    let n = m.n;
    budget.check_permanent(n)?;
    if n == 0 {
        return Ok(R::one());
    }
    let mut total = R::zero();
    for mask in 1u32..(1u32 << n) {
        let mut prod = R::one();
        for i in 1..=n {
            let row = (1..=n)
                .filter(|j| mask & (1 << (j - 1)) != 0)
                .fold(R::zero(), |acc, j| acc.plus(m.get(i, j)));
            prod = prod.times(&row);
            if prod.is_zero() {
                break;
            }
        }
        if (n - mask.count_ones() as usize) % 2 == 0 {
            total = total.plus(&prod);
        } else {
            total = total.minus(&prod);
        }
    }
    Ok(total)
}

const COFACTOR_LIMIT: usize = 6;

/// Determinant: cofactor expansion up to size 6, fraction-free elimination
/// beyond.
pub fn determinant<R: Ring>(m: &Matrix<R>) -> Result<R> {
    if m.n <= COFACTOR_LIMIT {
        let rows: Vec<Vec<R>> = (1..=m.n)
            .map(|i| (1..=m.n).map(|j| m.get(i, j).clone()).collect())
            .collect();
        Ok(cofactor(&rows))
    } else {
        bareiss(m)
    }
}

fn cofactor<R: Ring>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    if n == 0 {
        return R::one();
    }
    let mut total = R::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<R>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = rows[0][j].times(&cofactor(&minor));
        total = if j % 2 == 0 {
            total.plus(&term)
        } else {
            total.minus(&term)
        };
    }
    total
}

fn bareiss<R: Ring>(m: &Matrix<R>) -> Result<R> {
    let n = m.n;
    let mut a: Vec<Vec<R>> = (1..=n)
        .map(|i| (1..=n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(R::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = num.divide_exact(&prev).ok_or_else(|| {
                    Error::Internal("fraction-free elimination step was not exact".into())
                })?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { det.negated() } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ExactPoly};
    use num_rational::BigRational;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn identity_and_small() {
        let id = Matrix::from_fn(4, |i, j| if i == j { rat(1) } else { rat(0) });
        assert_eq!(determinant(&id).unwrap(), rat(1));
        assert_eq!(permanent(&id, &b()).unwrap(), rat(1));
        let m = Matrix::from_fn(2, |i, j| rat((2 * (i - 1) + j) as i64));
        assert_eq!(determinant(&m).unwrap(), rat(-2));
        assert_eq!(permanent(&m, &b()).unwrap(), rat(10));
    }

    #[test]
    fn all_ones() {
        let ones = Matrix::banded(5, &rat(1), &rat(1), &rat(1));
        assert_eq!(permanent(&ones, &b()).unwrap(), rat(120));
        assert_eq!(determinant(&ones).unwrap(), rat(0));
    }

    #[test]
    fn elimination_agrees_with_expansion() {
        let m = Matrix::from_fn(6, |i, j| rat(((i * i + 3 * j) % 7) as i64 - 3));
        let big = Matrix::from_fn(8, |i, j| {
            if i <= 6 && j <= 6 {
                m.get(i, j).clone()
            } else if i == j {
                rat(1)
            } else {
                rat(0)
            }
        });
        assert_eq!(determinant(&big).unwrap(), determinant(&m).unwrap());
        let p = Matrix::from_fn(7, |i, j| {
            ExactPoly::from_ints(&[(i as i64 - j as i64), (i * j % 3) as i64])
        });
        let expanded: Vec<Vec<ExactPoly>> = (1..=7)
            .map(|i| (1..=7).map(|j| p.get(i, j).clone()).collect())
            .collect();
        assert_eq!(bareiss(&p).unwrap(), cofactor(&expanded));
    }

    #[test]
    fn zero_first_column() {
        let m = Matrix::from_fn(4, |i, j| if j == 1 { rat(0) } else { rat((i + j) as i64) });
        assert_eq!(permanent(&m, &b()).unwrap(), rat(0));
        assert_eq!(determinant(&m).unwrap(), rat(0));
    }

    #[test]
    fn permanent_budget() {
        let m = Matrix::banded(10, &rat(1), &rat(1), &rat(1));
        assert!(permanent(&m, &b()).is_err());
        let _: BigRational = permanent(
            &m,
            &Budget {
                permanent_max: 10,
                ..b()
            },
        )
        .unwrap();
    }
}
