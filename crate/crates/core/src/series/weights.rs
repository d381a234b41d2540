//! Multiplicative weights on permutations and the exponential formula.
//!
//! A weight `μ` is multiplicative when `μσ` is the product of `μ` over the
//! connected factors of the canonical factorization of `σ`. For such `μ`,
//!
//! ```text
//! Σ uⁿ/n!·μ(S_n) = exp(Σ uⁿ/n!·μ(C_n))
//! (Σ uⁿ/n!·μ(S_n))⁻¹ = Σ (−u)ⁿ/n!·μ̄(S_n),   μ̄σ = (−1)^{z(σ)+n}·μσ
//! ```
//!
//! where `C_n` is the set of circular permutations.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::closed::{closed_form_abar, egf_from_polynomials};
use super::{compare_series, TruncSeries};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::{
    canonical_factorization, delta, excedance_vector, fixed_point_vector, for_each_in_class,
    is_in_class, ClassTag, FunctionMap, Permutation,
};
use crate::poly::{factorial, rat, BiPoly, ExactPoly};
use crate::witness::Witness;

#[derive(Clone, PartialEq, Debug)]
pub enum MultiplicativeWeight {
    /// `Π_cycles x_{length}` with numeric `x₁, x₂, ...`.
    CycleIndicator(Vec<BigRational>),
    /// `t′^{|E′σ|} t^{|ΔEσ|}`.
    Abar,
    /// 1 on biexcedent permutations, 0 elsewhere.
    Biexcedent,
    /// `Π_i ξ_{i,σ(i)}` for the banded matrix with `a` above the diagonal,
    /// `b` on it, `c` below it.
    Matrix {
        a: BigRational,
        b: BigRational,
        c: BigRational,
    },
}

impl MultiplicativeWeight {
    pub fn label(&self) -> String {
        match self {
            MultiplicativeWeight::CycleIndicator(_) => "cycle-indicator".into(),
            MultiplicativeWeight::Abar => "fixed-points-and-excedances".into(),
            MultiplicativeWeight::Biexcedent => "biexcedent".into(),
            MultiplicativeWeight::Matrix { a, b, c } => format!("matrix a={a} b={b} c={c}"),
        }
    }
}

/// `coeff · t^i · t′^j`.
#[derive(Clone, PartialEq, Debug)]
struct Term {
    coeff: BigRational,
    t: usize,
    y: usize,
}

/// Exponents over the generators of a weight. A weight is a product of
/// generator powers, so the sums can be collected by exponent vector and
/// turned into rationals once per distinct vector.
type Exponents = Vec<u32>;

fn generator_count(w: &MultiplicativeWeight, n: usize) -> usize {
    match w {
        // x_1, ..., x_n by cycle length.
        MultiplicativeWeight::CycleIndicator(_) => n,
        // t, t′.
        MultiplicativeWeight::Abar => 2,
        // A generator of value 0 marking non-biexcedent permutations.
        MultiplicativeWeight::Biexcedent => 1,
        // a, b, c.
        MultiplicativeWeight::Matrix { .. } => 3,
    }
}

fn exponents_of(w: &MultiplicativeWeight, p: &Permutation, len: usize) -> Result<Exponents> {
    let n = p.n();
    let mut e = vec![0u32; len];
    match w {
        MultiplicativeWeight::CycleIndicator(_) => {
            for orbit in p.orbits() {
                e[orbit.len() - 1] += 1;
            }
        }
        MultiplicativeWeight::Abar => {
            if n > 0 {
                e[0] = delta(&excedance_vector(p))?.positive_count() as u32;
                e[1] = fixed_point_vector(p).positive_count() as u32;
            }
        }
        MultiplicativeWeight::Biexcedent => {
            e[0] = u32::from(!is_in_class(p, ClassTag::Biexcedent)?);
        }
        MultiplicativeWeight::Matrix { .. } => {
            for (i, &v) in p.word().iter().enumerate() {
                let g = match (i + 1).cmp(&v) {
                    std::cmp::Ordering::Less => 0,
                    std::cmp::Ordering::Equal => 1,
                    std::cmp::Ordering::Greater => 2,
                };
                e[g] += 1;
            }
        }
    }
    Ok(e)
}

fn term_of(w: &MultiplicativeWeight, e: &[u32]) -> Result<Term> {
    let power = |x: &BigRational, k: u32| num_traits::pow(x.clone(), k as usize);
    let mut coeff = BigRational::one();
    let (mut t, mut y) = (0, 0);
    match w {
        MultiplicativeWeight::CycleIndicator(x) => {
            for (k, &m) in e.iter().enumerate() {
                if m > 0 {
                    let xk = x.get(k).ok_or_else(|| {
                        Error::Precondition(format!("no value supplied for x_{}", k + 1))
                    })?;
                    coeff *= power(xk, m);
                }
            }
        }
        MultiplicativeWeight::Abar => {
            t = e[0] as usize;
            y = e[1] as usize;
        }
        MultiplicativeWeight::Biexcedent => {
            if e[0] > 0 {
                coeff = BigRational::zero();
            }
        }
        MultiplicativeWeight::Matrix { a, b, c } => {
            coeff = power(a, e[0]) * power(b, e[1]) * power(c, e[2]);
        }
    }
    Ok(Term { coeff, t, y })
}

/// Integer counts per exponent vector.
#[derive(Default)]
struct Tally(HashMap<Exponents, i64>);

impl Tally {
    fn add(&mut self, e: &[u32], by: i64) {
        if let Some(c) = self.0.get_mut(e) {
            *c += by;
        } else {
            self.0.insert(e.to_vec(), by);
        }
    }

    fn into_poly(self, w: &MultiplicativeWeight, n: usize) -> Result<BiPoly> {
        let mut cells = vec![vec![BigRational::zero(); n + 1]; n + 1];
        for (e, count) in self.0 {
            let term = term_of(w, &e)?;
            cells[term.y][term.t] += term.coeff * BigRational::from_integer(BigInt::from(count));
        }
        Ok(BiPoly::new(cells.into_iter().map(ExactPoly::new).collect()))
    }
}

struct Sums {
    direct: BiPoly,
    factored: BiPoly,
    signed: BiPoly,
}

fn sums_over_all(w: &MultiplicativeWeight, n: usize, budget: &Budget) -> Result<Sums> {
    let len = generator_count(w, n);
    let mut direct = Tally::default();
    let mut factored = Tally::default();
    let mut signed = Tally::default();
    let mut failure = None;
    for_each_in_class(n, ClassTag::All, budget, |p| {
        let mut step = || -> Result<()> {
            let d = exponents_of(w, p, len)?;
            let mut f = vec![0u32; len];
            for (factor, _) in canonical_factorization(&FunctionMap::from(p)) {
                let q = factor.as_permutation().expect("factors of a permutation");
                for (a, b) in f.iter_mut().zip(exponents_of(w, &q, len)?) {
                    *a += b;
                }
            }
            direct.add(&d, 1);
            factored.add(&f, 1);
            signed.add(&d, i64::from(p.signature()));
            Ok(())
        };
        if failure.is_none() {
            if let Err(e) = step() {
                failure = Some(e);
            }
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(Sums {
        direct: direct.into_poly(w, n)?,
        factored: factored.into_poly(w, n)?,
        signed: signed.into_poly(w, n)?,
    })
}

fn sum_over_circular(w: &MultiplicativeWeight, n: usize, budget: &Budget) -> Result<BiPoly> {
    let len = generator_count(w, n);
    let mut acc = Tally::default();
    let mut failure = None;
    for_each_in_class(n, ClassTag::Circular, budget, |p| {
        match exponents_of(w, p, len) {
            Ok(e) => acc.add(&e, 1),
            Err(e) => failure = Some(e),
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => acc.into_poly(w, n),
    }
}

/// Checks both forms of the exponential formula for `w` up to `order`.
/// The left sides multiply the weight over canonical factors; agreement
/// with the direct weight is reported as a separate part.
pub fn verify_exponential_formula(
    w: &MultiplicativeWeight,
    order: usize,
    budget: &Budget,
) -> Result<Witness> {
    budget.check_enumeration(order)?;
    let mut direct = Vec::new();
    let mut factored = Vec::new();
    let mut signed = Vec::new();
    let mut connected = Vec::new();
    for n in 0..=order {
        let s = sums_over_all(w, n, budget)?;
        direct.push(s.direct);
        factored.push(s.factored);
        signed.push(s.signed);
        connected.push(if n == 0 {
            BiPoly::zero()
        } else {
            sum_over_circular(w, n, budget)?
        });
    }
    let lhs = egf_from_polynomials(order, |n| factored[n].clone());
    let rhs = egf_from_polynomials(order, |n| connected[n].clone()).exp()?;
    let inv = lhs.reciprocal()?;
    let signed_egf = egf_from_polynomials(order, |n| signed[n].clone()).dilate(&rat(-1));
    let mut parts = vec![
        Witness::all(
            "factored weight equals direct weight",
            (0..=order)
                .map(|n| Witness::compare(format!("n={n}"), &factored[n], &direct[n]))
                .collect(),
        ),
        compare_series("exponential formula", &lhs, &rhs),
        compare_series("signed inverse", &inv, &signed_egf),
    ];
    if let MultiplicativeWeight::CycleIndicator(x) = w {
        // Every n-cycle has weight x_n, so the values exist up to `order`.
        let cyc = (1..=order)
            .map(|n| {
                let want = BiPoly::from_t(ExactPoly::constant(
                    &x[n - 1] * BigRational::from_integer(factorial(n - 1)),
                ));
                Witness::compare(format!("n={n}"), &connected[n], &want)
            })
            .collect();
        parts.push(Witness::all("circular sum is (n-1)! x_n", cyc));
        let closed = TruncSeries::new(
            order,
            std::iter::once(BiPoly::zero())
                .chain((1..=order).map(|n| {
                    BiPoly::from_t(ExactPoly::constant(
                        &x[n - 1] / BigRational::from_integer(BigInt::from(n)),
                    ))
                }))
                .collect(),
        )
        .exp()?;
        parts.push(compare_series("cycle indicator closed form", &lhs, &closed));
    }
    Ok(Witness::all(
        format!("exponential formula {} order={order}", w.label()),
        parts,
    ))
}

/// `Σ uⁿ/n! Σ_σ t′^{|E′σ|} t^{|ΔEσ|} r^{z(σ)} = Ā(t,t′,u)^r` for an integer `r`.
pub fn verify_abar_power(r: usize, order: usize, budget: &Budget) -> Result<Witness> {
    budget.check_enumeration(order)?;
    let mut polys = Vec::new();
    let rr = BigRational::from_integer(BigInt::from(r));
    for n in 0..=order {
        // Cells indexed by (z, t′ exponent, t exponent).
        let mut counts = vec![vec![vec![0u64; n + 1]; n + 1]; n + 1];
        let mut failure = None;
        for_each_in_class(n, ClassTag::All, budget, |p| {
            match exponents_of(&MultiplicativeWeight::Abar, p, 2) {
                Ok(e) => counts[p.cycle_count()][e[1] as usize][e[0] as usize] += 1,
                Err(e) => failure = Some(e),
            }
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
        let mut cells = vec![vec![BigRational::zero(); n + 1]; n + 1];
        for (z, grid) in counts.iter().enumerate() {
            let scale = num_traits::pow(rr.clone(), z);
            for (y, row) in grid.iter().enumerate() {
                for (t, &c) in row.iter().enumerate() {
                    if c > 0 {
                        cells[y][t] += &scale * BigRational::from_integer(BigInt::from(c));
                    }
                }
            }
        }
        polys.push(BiPoly::new(cells.into_iter().map(ExactPoly::new).collect()));
    }
    let lhs = egf_from_polynomials(order, |n| polys[n].clone());
    let rhs = closed_form_abar(order)?.pow(r);
    Ok(compare_series(
        format!("cycle-weighted power r={r} order={order}"),
        &lhs,
        &rhs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn unit_weight_gives_factorials() {
        let w = MultiplicativeWeight::CycleIndicator(vec![rat(1); 6]);
        let res = verify_exponential_formula(&w, 6, &b()).unwrap();
        assert!(res.passed, "{res}");
    }

    #[test]
    fn small_orders_hold() {
        for w in [
            MultiplicativeWeight::CycleIndicator((1..=5).map(|k| rat(k)).collect()),
            MultiplicativeWeight::Abar,
            MultiplicativeWeight::Biexcedent,
            MultiplicativeWeight::Matrix {
                a: rat(2),
                b: rat(1),
                c: rat(3),
            },
        ] {
            let res = verify_exponential_formula(&w, 5, &b()).unwrap();
            assert!(res.passed, "{res}");
        }
    }

    #[test]
    fn missing_indicator_value_is_an_error() {
        let w = MultiplicativeWeight::CycleIndicator(vec![rat(1); 2]);
        assert!(verify_exponential_formula(&w, 4, &b()).is_err());
    }

    #[test]
    fn abar_powers_small() {
        for r in 1..=3 {
            assert!(verify_abar_power(r, 4, &b()).unwrap().passed);
        }
    }
}
