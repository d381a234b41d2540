//! Generating polynomials obtained by enumeration: Roselle, two-variable
//! Eulerian, cycle-weighted, and the injection count.

use num_bigint::BigInt;
use num_traits::Zero;

use super::binomial;
use super::bivariate::BiPoly;
use super::eulerian::eulerian_polynomial;
use super::exact::ExactPoly;
use super::ring::{rat, rat_big};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::{
    delta, excedance_vector, fixed_point_vector, for_each_in_class, lambda_op, rise_vector,
    ClassTag, StatVector,
};

/// How to compute the Roselle polynomial `Bₙ(t)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RoselleMethod {
    /// `Σ t^{|Eσ|}` over derangements.
    ExcedanceOnDerangements,
    /// `Σ t^{|Mσ|}` over succession-free permutations.
    RisesOnSuccessionFree,
    /// `Σ_k C(n,k) (−1)^{n−k} A_k(t)`, from `Ā(t,0,u) = e^{−u} Ā(t,1,u)`.
    BinomialTransform,
}

pub fn roselle_polynomial(n: usize, via: RoselleMethod, budget: &Budget) -> Result<ExactPoly> {
    match via {
        RoselleMethod::ExcedanceOnDerangements => {
            let mut counts = vec![0u64; n + 1];
            for_each_in_class(n, ClassTag::Derangement, budget, |p| {
                counts[excedance_vector(p).positive_count()] += 1;
            })?;
            Ok(ExactPoly::from_counts(&counts))
        }
        RoselleMethod::RisesOnSuccessionFree => {
            let mut counts = vec![0u64; n + 1];
            for_each_in_class(n, ClassTag::SuccessionFree, budget, |p| {
                counts[rise_vector(p).positive_count()] += 1;
            })?;
            Ok(ExactPoly::from_counts(&counts))
        }
        RoselleMethod::BinomialTransform => Ok((0..=n).fold(ExactPoly::zero(), |acc, k| {
            let c = binomial(n as i64, k as i64);
            let c = if (n - k) % 2 == 0 { c } else { -c };
            &acc + &eulerian_polynomial(k).scale(&rat_big(c))
        })),
    }
}

/// `Āₙ(t, t′) = Σ t′^{|E′σ|} t^{|ΔEσ|}`, with `t′` as the second variable.
pub fn abar_polynomial(n: usize, budget: &Budget) -> Result<BiPoly> {
    if n == 0 {
        budget.check_enumeration(0)?;
        return Ok(BiPoly::one());
    }
    let mut counts = vec![vec![0u64; n + 1]; n + 1];
    for_each_in_class(n, ClassTag::All, budget, |p| {
        let e = excedance_vector(p);
        let fixed = fixed_point_vector(p).positive_count();
        let exc = delta(&e).expect("n >= 1").positive_count();
        counts[fixed][exc] += 1;
    })?;
    Ok(BiPoly::from_counts(&counts))
}

/// `Qₙ(t, r) = Σ t^{|ΔEσ|} r^{z(σ)}`, with `r` as the second variable.
pub fn q_polynomial(n: usize, budget: &Budget) -> Result<BiPoly> {
    if n == 0 {
        budget.check_enumeration(0)?;
        return Ok(BiPoly::one());
    }
    let mut counts = vec![vec![0u64; n + 1]; n + 1];
    for_each_in_class(n, ClassTag::All, budget, |p| {
        let exc = delta(&excedance_vector(p))
            .expect("n >= 1")
            .positive_count();
        counts[p.cycle_count()][exc] += 1;
    })?;
    Ok(BiPoly::from_counts(&counts))
}

/// `ʳPₙ(t) = Σ t^{|ΛʳEφ|}` over injections `φ : [n−r] → [n]`, where
/// `Eφ(k) = (φ(k) − (k−1))₊`. Equals `ʳAₙ(t) / r!`.
pub fn injection_interpretation(n: usize, r: usize, budget: &Budget) -> Result<ExactPoly> {
    if r > n {
        return Err(Error::OutOfRange(format!(
            "need r <= n, got r = {r}, n = {n}"
        )));
    }
    budget.check_enumeration(n)?;
    let len = n - r;
    let mut counts = vec![0u64; len + 1];
    let mut phi = Vec::with_capacity(len);
    let mut used = vec![false; n + 1];
    injections(n, len, &mut phi, &mut used, &mut |phi: &[usize]| {
        let e = StatVector::from_signed(phi.iter().enumerate().map(|(i, &v)| v as i64 - i as i64));
        let v = (0..r).fold(e, |v, _| lambda_op(&v));
        counts[v.positive_count()] += 1;
    });
    Ok(ExactPoly::from_counts(&counts))
}

fn injections(
    n: usize,
    len: usize,
    phi: &mut Vec<usize>,
    used: &mut [bool],
    f: &mut dyn FnMut(&[usize]),
) {
    if phi.len() == len {
        f(phi);
        return;
    }
    for v in 1..=n {
        if !used[v] {
            used[v] = true;
            phi.push(v);
            injections(n, len, phi, used, f);
            phi.pop();
            used[v] = false;
        }
    }
}

/// Which family to evaluate at `t = −1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Which {
    A,
    B,
}

/// `Aₙ(−1)` or `Bₙ(−1)`, exactly.
pub fn eval_at_minus_one(n: usize, which: Which) -> BigInt {
    let poly = match which {
        Which::A => eulerian_polynomial(n),
        Which::B => roselle_polynomial(n, RoselleMethod::BinomialTransform, &Budget::default())
            .expect("no enumeration involved"),
    };
    let v = poly.eval(&rat(-1));
    debug_assert!(v.is_integer());
    if v.is_zero() {
        BigInt::zero()
    } else {
        v.to_integer()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn roselle_small() {
        for via in [
            RoselleMethod::ExcedanceOnDerangements,
            RoselleMethod::RisesOnSuccessionFree,
            RoselleMethod::BinomialTransform,
        ] {
            assert_eq!(
                roselle_polynomial(2, via, &b()).unwrap(),
                ExactPoly::t(),
                "{via:?}"
            );
            assert_eq!(
                roselle_polynomial(1, via, &b()).unwrap(),
                ExactPoly::zero(),
                "{via:?}"
            );
        }
    }

    #[test]
    fn abar_small() {
        assert_eq!(abar_polynomial(1, &b()).unwrap(), BiPoly::y());
        let want = &BiPoly::monomial(rat(1), 0, 2) + &BiPoly::monomial(rat(1), 1, 0);
        assert_eq!(abar_polynomial(2, &b()).unwrap(), want);
        assert_eq!(
            abar_polynomial(5, &b()).unwrap().at_y(&rat(1)),
            ExactPoly::from_ints(&[1, 26, 66, 26, 1])
        );
    }

    #[test]
    fn q_small() {
        assert_eq!(q_polynomial(1, &b()).unwrap(), BiPoly::y());
        assert_eq!(
            q_polynomial(4, &b()).unwrap().at_y(&rat(1)),
            ExactPoly::from_ints(&[1, 11, 11, 1])
        );
        assert_eq!(
            q_polynomial(3, &b()).unwrap().at_y(&rat(2)),
            ExactPoly::from_ints(&[8, 14, 2])
        );
    }

    #[test]
    fn injections_small() {
        assert_eq!(
            injection_interpretation(4, 2, &b()).unwrap(),
            ExactPoly::from_ints(&[4, 7, 1])
        );
        assert_eq!(
            injection_interpretation(5, 5, &b()).unwrap(),
            ExactPoly::one()
        );
        assert_eq!(
            injection_interpretation(5, 3, &b()).unwrap(),
            ExactPoly::from_ints(&[9, 10, 1])
        );
    }

    #[test]
    fn minus_one_values() {
        assert_eq!(eval_at_minus_one(4, Which::A), BigInt::zero());
        assert_eq!(eval_at_minus_one(7, Which::A), BigInt::from(-272));
        assert_eq!(eval_at_minus_one(8, Which::B), BigInt::from(1385));
    }
}
