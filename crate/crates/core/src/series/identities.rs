//! Series identities checked to a truncation order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::closed::{
    closed_form_abar, closed_form_specialized, egf_from_polynomials, Specialization,
};
use super::matrix::{determinant, permanent, Matrix};
use super::{compare_series, TruncSeries};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::{count_class_functions, FunctionKind};
use crate::poly::{
    abar_polynomial, binomial, eulerian_polynomial, eulerian_recurrence_shift, factorial, rat,
    rat_big, roselle_polynomial, BiPoly, ExactPoly, Ring, RoselleMethod,
};
use crate::witness::Witness;

/// `Σ uⁿ/n!·Āₙ(t,t′)` from enumeration.
fn abar_egf(order: usize, budget: &Budget) -> Result<TruncSeries<BiPoly>> {
    let polys = (0..=order)
        .map(|n| abar_polynomial(n, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(egf_from_polynomials(order, |n| polys[n].clone()))
}

fn a_egf(order: usize) -> TruncSeries<ExactPoly> {
    egf_from_polynomials(order, eulerian_polynomial)
}

/// `Ā(t,t′,u) = exp(ut′ + C(t,u))` with `C(t,u) = Σ_{n≥2} uⁿ/n!·t·Aₙ₋₁(t)`.
pub fn verify_abar_exponential(order: usize, budget: &Budget) -> Result<Witness> {
    let lhs = abar_egf(order, budget)?;
    let c = egf_from_polynomials(order, |n| {
        if n < 2 {
            ExactPoly::zero()
        } else {
            eulerian_polynomial(n - 1).shift(1)
        }
    });
    let mut arg = c.map(|p| BiPoly::from_t(p.clone()));
    if order >= 1 {
        let mut coeffs = arg.coeffs().to_vec();
        coeffs[1] = &coeffs[1] + &BiPoly::y();
        arg = TruncSeries::new(order, coeffs);
    }
    let rhs = arg.exp()?;
    Ok(compare_series(
        format!("abar as exponential order={order}"),
        &lhs,
        &rhs,
    ))
}

/// The closed form of `Ā` and its three specializations against the
/// enumerated families `Āₙ`, `⁰Aₙ`, `Aₙ`, `Bₙ`.
pub fn verify_closed_forms(order: usize, budget: &Budget) -> Result<Witness> {
    let full = closed_form_abar(order)?;
    let enumerated = abar_egf(order, budget)?;
    let diagonal = closed_form_specialized(order, Specialization::Diagonal)?;
    let one = closed_form_specialized(order, Specialization::One)?;
    let zero = closed_form_specialized(order, Specialization::Zero)?;

    let shifted = egf_from_polynomials(order, |n| {
        if n == 0 {
            ExactPoly::one()
        } else {
            eulerian_polynomial(n).shift(1)
        }
    });
    let roselle = (0..=order)
        .map(|n| roselle_polynomial(n, RoselleMethod::ExcedanceOnDerangements, budget))
        .collect::<Result<Vec<_>>>()?;
    let roselle = egf_from_polynomials(order, |n| roselle[n].clone());

    Ok(Witness::all(
        format!("closed forms order={order}"),
        vec![
            compare_series("two-variable closed form", &full, &enumerated),
            compare_series("t'=t closed form", &diagonal, &shifted),
            compare_series("t'=1 closed form", &one, &a_egf(order)),
            compare_series("t'=0 closed form", &zero, &roselle),
            compare_series(
                "t'=t agrees with two-variable form",
                &full.substitute_y_with_t(),
                &diagonal,
            ),
            compare_series(
                "t'=1 agrees with two-variable form",
                &full.substitute_y(&rat(1)),
                &one,
            ),
            compare_series(
                "t'=0 agrees with two-variable form",
                &full.substitute_y(&rat(0)),
                &zero,
            ),
        ],
    ))
}

/// `Ā(t,t,u) = 1 + t(Ā(t,1,u) − 1)` and `Ā(t,t,u) = exp(ut − u)·Ā(t,1,u)`.
pub fn verify_remark_relations(order: usize) -> Result<Witness> {
    let diagonal = closed_form_specialized(order, Specialization::Diagonal)?;
    let one = closed_form_specialized(order, Specialization::One)?;
    let t = ExactPoly::t();
    let linear = TruncSeries::one(order).add(&one.sub(&TruncSeries::one(order)).scalar_mul(&t));
    let expo = TruncSeries::linear(order, ExactPoly::from_ints(&[-1, 1]))
        .exp()?
        .mul(&one);
    Ok(Witness::all(
        format!("diagonal relations order={order}"),
        vec![
            compare_series("linear relation", &diagonal, &linear),
            compare_series("exponential relation", &diagonal, &expo),
        ],
    ))
}

/// `ʳA(t,u) = (r−1)!·A(t,u)^r`, where `ʳA(t,u) = Σ u^m/m!·ʳA_{m+r−1}(t)`
/// is assembled from the shift recurrence.
pub fn verify_shifted_power(r: usize, order: usize) -> Result<Witness> {
    if r == 0 {
        return Err(Error::Precondition("shifted power needs r >= 1".into()));
    }
    let polys = (0..=order)
        .map(|m| {
            if m == 0 {
                Ok(ExactPoly::constant(factorial(r - 1).into()))
            } else {
                eulerian_recurrence_shift(m + r - 1, r)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let lhs = egf_from_polynomials(order, |m| polys[m].clone());
    let rhs = a_egf(order).pow(r).scale(&factorial(r - 1).into());
    Ok(compare_series(
        format!("shifted power r={r} order={order}"),
        &lhs,
        &rhs,
    ))
}

/// `∂A/∂u = A(1 + t(A − 1))` and
/// `A_{n+1} = Aₙ + t·Σ_{m<n} C(n,m)·A_m·A_{n−m}`.
pub fn verify_bernoulli(order: usize) -> Result<Witness> {
    if order == 0 {
        return Err(Error::Precondition(
            "Bernoulli check needs order >= 1".into(),
        ));
    }
    let a = a_egf(order);
    let t = ExactPoly::t();
    let lhs = a.derivative();
    let rhs = a.mul(&TruncSeries::one(order).add(&a.sub(&TruncSeries::one(order)).scalar_mul(&t)));
    let mut conv = Vec::new();
    for n in 0..order {
        let mut sum = ExactPoly::zero();
        for m in 0..n {
            let c = rat_big(binomial(n as i64, m as i64));
            sum = &sum + &(&eulerian_polynomial(m) * &eulerian_polynomial(n - m)).scale(&c);
        }
        let predicted = &eulerian_polynomial(n) + &(&t * &sum);
        conv.push(Witness::compare(
            format!("n={n}"),
            &predicted,
            &eulerian_polynomial(n + 1),
        ));
    }
    Ok(Witness::all(
        format!("Bernoulli equation order={order}"),
        vec![
            compare_series("differential equation", &lhs, &rhs.truncate(order - 1)),
            Witness::all("convolution recurrence", conv),
        ],
    ))
}

/// Ultimately idempotent maps on `[n]` counted by layers: `L₀` is the set
/// of fixed points and `L_{i+1}` the points mapped into `L_i`. A sequence
/// of layer sizes `k₀, ..., k_h` contributes
/// `n!/(k₀!⋯k_h!) · k₀^{k₁} ⋯ k_{h−1}^{k_h}`.
fn layered_idempotent_count(n: usize) -> BigInt {
    fn go(remaining: usize, prev: usize, acc: BigInt, total: &mut BigInt) {
        if remaining == 0 {
            *total += acc;
            return;
        }
        for k in 1..=remaining {
            let ways =
                binomial(remaining as i64, k as i64) * num_traits::pow(BigInt::from(prev), k);
            go(remaining - k, k, &acc * ways, total);
        }
    }
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for k0 in 1..=n {
        go(n - k0, k0, binomial(n as i64, k0 as i64), &mut total);
    }
    total
}

/// `w = exp(uw)` for `w = Σ uⁿ/n!·card Uₙ`. Terms up to the function-scan
/// budget come from the exhaustive scan; beyond it from the layered count,
/// which is checked against the scan where both exist.
pub fn verify_arborescence_equation(order: usize, budget: &Budget) -> Result<Witness> {
    let mut counts = Vec::with_capacity(order + 1);
    let mut agree = Vec::new();
    for n in 0..=order {
        let layered = layered_idempotent_count(n);
        if n <= budget.fn_scan_max {
            let scanned: BigInt =
                count_class_functions(n, FunctionKind::UltimatelyIdempotent, budget)?.into();
            agree.push(Witness::compare(format!("n={n}"), &scanned, &layered));
            counts.push(scanned);
        } else {
            counts.push(layered);
        }
    }
    let w = egf_from_polynomials(order, |n| rat_big(counts[n].clone()));
    let uw = TruncSeries::new(
        order,
        std::iter::once(BigRational::zero())
            .chain(w.coeffs().iter().cloned())
            .collect(),
    );
    Ok(Witness::all(
        format!("w = exp(uw) order={order}"),
        vec![
            Witness::all("layered count matches scan", agree),
            compare_series("functional equation", &w, &uw.exp()?),
        ],
    ))
}

fn banded(n: usize, a: &BigRational, b: &BigRational, c: &BigRational) -> Matrix<BigRational> {
    Matrix::banded(n, a, b, c)
}

/// `(1 + Σ uⁿ/n!·per Ξₙ)⁻¹ = 1 + Σ (−u)ⁿ/n!·det Ξₙ` for a family of
/// matrices `Ξₙ`, with the sequences returned for further checks.
fn perdet_series(
    order: usize,
    budget: &Budget,
    make: impl Fn(usize) -> Matrix<BigRational>,
) -> Result<(Witness, Vec<BigRational>, Vec<BigRational>)> {
    let mut pers = vec![rat(1)];
    let mut dets = vec![rat(1)];
    for n in 1..=order {
        let m = make(n);
        pers.push(permanent(&m, budget)?);
        dets.push(determinant(&m)?);
    }
    let per_egf = egf_from_polynomials(order, |n| pers[n].clone());
    let det_egf = egf_from_polynomials(order, |n| dets[n].clone()).dilate(&rat(-1));
    let w = compare_series(
        "permanent-determinant inverse",
        &per_egf.reciprocal()?,
        &det_egf,
    );
    Ok((w, pers, dets))
}

fn power(x: &BigRational, n: usize) -> BigRational {
    num_traits::pow(x.clone(), n)
}

/// The permanent-determinant inverse for the banded matrix with `a` above,
/// `b` on and `c` below the diagonal, the closed forms of `det Ξₙ` and of
/// the inverse series, and the two further matrices for which the
/// identity also holds: the zero first column and Kittel's matrix.
pub fn verify_perdet_identity(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    order: usize,
    budget: &Budget,
) -> Result<Witness> {
    let (main, _, dets) = perdet_series(order, budget, |n| banded(n, a, b, c))?;

    let closed_det = |n: usize| -> BigRational {
        if a != c {
            (c * power(&(b - a), n) - a * power(&(b - c), n)) / (c - a)
        } else {
            power(&(b - a), n - 1) * (b + BigRational::from_integer(BigInt::from(n - 1)) * a)
        }
    };
    let det_parts = (1..=order)
        .map(|n| Witness::compare(format!("n={n}"), &dets[n], &closed_det(n)))
        .collect();

    let exp = |x: BigRational| TruncSeries::linear(order, x).exp();
    let closed_inverse = if a != c {
        exp(a - b)?
            .scale(c)
            .sub(&exp(c - b)?.scale(a))
            .scale(&(BigRational::one() / (c - a)))
    } else {
        TruncSeries::new(order, vec![rat(1), -a.clone()]).mul(&exp(a - b)?)
    };
    let det_egf = egf_from_polynomials(order, |n| dets[n].clone()).dilate(&rat(-1));

    let (zero_col, zpers, zdets) = perdet_series(order, budget, |n| {
        Matrix::from_fn(n, |i, j| {
            if j == 1 {
                rat(0)
            } else {
                rat((i + 2 * j) as i64)
            }
        })
    })?;
    let zero_values = (1..=order)
        .map(|n| {
            Witness::check(
                format!("n={n}"),
                zpers[n].is_zero() && zdets[n].is_zero(),
                format!("per = {}, det = {}", zpers[n], zdets[n]),
            )
        })
        .collect();

    let kittel = |n: usize| {
        Matrix::from_fn(n, |i, j| {
            if i <= j {
                rat(1)
            } else if i == j + 1 {
                rat(1 - i as i64)
            } else {
                rat(0)
            }
        })
    };
    let (kittel_id, kpers, kdets) = perdet_series(order, budget, kittel)?;
    let kittel_values = (1..=order)
        .map(|n| {
            let want_per = if n == 1 { rat(1) } else { rat(0) };
            let want_det = rat_big(factorial(n));
            Witness::check(
                format!("n={n}"),
                kpers[n] == want_per && kdets[n] == want_det,
                format!("per = {}, det = {}", kpers[n], kdets[n]),
            )
        })
        .collect();
    let alternating_geometric = TruncSeries::new(
        order,
        (0..=order)
            .map(|n| rat(if n % 2 == 0 { 1 } else { -1 }))
            .collect(),
    );
    let one_plus_u = TruncSeries::new(order, vec![rat(1), rat(1)]);

    Ok(Witness::all(
        format!("permanent-determinant a={a} b={b} c={c} order={order}"),
        vec![
            main,
            Witness::all("determinant closed form", det_parts),
            compare_series("inverse closed form", &det_egf, &closed_inverse),
            Witness::all(
                "zero first column",
                vec![zero_col, Witness::all("values", zero_values)],
            ),
            Witness::all(
                "Kittel matrix",
                vec![
                    kittel_id,
                    Witness::all("values", kittel_values),
                    compare_series(
                        "inverse of 1+u",
                        &one_plus_u.reciprocal()?,
                        &alternating_geometric,
                    ),
                ],
            ),
        ],
    ))
}

/// `per Ξₙ = Āₙ(t,t′)` for the matrix with `t` above, `t′` on and `1` below
/// the diagonal, and `det Ξₙ = ((t′−t)ⁿ − t(t′−1)ⁿ)/(1−t)`.
pub fn verify_permanent_abar(max_n: usize, budget: &Budget) -> Result<Witness> {
    let t = BiPoly::from_t(ExactPoly::t());
    let y = BiPoly::y();
    let one = BiPoly::one();
    let one_minus_t = BiPoly::from_t(ExactPoly::from_ints(&[1, -1]));
    let mut parts = Vec::new();
    for n in 1..=max_n {
        let m = Matrix::banded(n, &t, &y, &one);
        let per = permanent(&m, budget)?;
        parts.push(Witness::compare(
            format!("permanent n={n}"),
            &per,
            &abar_polynomial(n, budget)?,
        ));
        let num = num_traits::pow(&y - &t, n) - &t * &num_traits::pow(&y - &one, n);
        let closed = num.divide_exact(&one_minus_t).ok_or_else(|| {
            Error::Internal(format!(
                "determinant closed form not divisible by 1-t at n = {n}"
            ))
        })?;
        parts.push(Witness::compare(
            format!("determinant n={n}"),
            &determinant(&m)?,
            &closed,
        ));
    }
    Ok(Witness::all(
        format!("banded permanent max_n={max_n}"),
        parts,
    ))
}

/// `Σ uⁿ/n!·Aₙ(−1)` and `Σ uⁿ/n!·Bₙ(−1)` from the closed forms.
fn at_minus_one(order: usize) -> Result<(TruncSeries<BigRational>, TruncSeries<BigRational>)> {
    let a = closed_form_specialized(order, Specialization::One)?.substitute_t(&rat(-1));
    let b = closed_form_specialized(order, Specialization::Zero)?.substitute_t(&rat(-1));
    Ok((a, b))
}

fn sign_pattern(s: &TruncSeries<BigRational>, parity: usize) -> TruncSeries<BigRational> {
    let coeffs = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            if n % 2 != parity {
                rat(0)
            } else if (n / 2) % 2 == 0 {
                c.clone()
            } else {
                -c.clone()
            }
        })
        .collect();
    TruncSeries::new(s.order(), coeffs)
}

/// `tan u` and `1/cos u`, read from the odd part of `Σ uⁿ/n!·Aₙ(−1)` and
/// the even part of `Σ uⁿ/n!·Bₙ(−1)` with the signs of `u ↦ iu`.
pub fn tan_sec_series(
    order: usize,
) -> Result<(TruncSeries<BigRational>, TruncSeries<BigRational>)> {
    if order == 0 {
        return Err(Error::Precondition("tan/sec needs order >= 1".into()));
    }
    let (a, b) = at_minus_one(order)?;
    Ok((sign_pattern(&a, 1), sign_pattern(&b, 0)))
}

/// The tan/sec pair against `sin/cos` and `1/cos`, the vanishing halves of
/// the two series at `t = −1`, and `1/cos u = exp(∫ tan u du)`.
pub fn verify_tan_sec(order: usize) -> Result<Witness> {
    let (tan, sec) = tan_sec_series(order)?;
    let (a, b) = at_minus_one(order)?;
    let vanish = |s: &TruncSeries<BigRational>, parity: usize| -> Witness {
        let bad: Vec<usize> = (1..=order)
            .filter(|&n| n % 2 == parity && !s.coeff(n).is_zero())
            .collect();
        Witness::check(
            format!(
                "{} coefficients vanish",
                if parity == 0 { "even" } else { "odd" }
            ),
            bad.is_empty(),
            format!("nonzero at {bad:?}"),
        )
    };
    let trig = |parity: usize| {
        TruncSeries::new(
            order,
            (0..=order)
                .map(|n| {
                    if n % 2 != parity {
                        rat(0)
                    } else {
                        let v = BigRational::new(1.into(), factorial(n));
                        if (n / 2) % 2 == 0 {
                            v
                        } else {
                            -v
                        }
                    }
                })
                .collect(),
        )
    };
    let sin = trig(1);
    let cos = trig(0);
    let cos_inv = cos.reciprocal()?;
    Ok(Witness::all(
        format!("tan and sec order={order}"),
        vec![
            Witness::all("A(-1) series", vec![vanish(&a, 0)]),
            Witness::all("B(-1) series", vec![vanish(&b, 1)]),
            compare_series("tan = sin/cos", &tan, &sin.mul(&cos_inv)),
            compare_series("sec = 1/cos", &sec, &cos_inv),
            compare_series("sec = exp(integral of tan)", &sec, &tan.integral().exp()?),
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn abar_exponential_small() {
        assert!(verify_abar_exponential(6, &b()).unwrap().passed);
    }

    #[test]
    fn closed_forms_small() {
        let w = verify_closed_forms(6, &b()).unwrap();
        assert!(w.passed, "{w}");
    }

    #[test]
    fn remark_relations() {
        assert!(verify_remark_relations(8).unwrap().passed);
    }

    #[test]
    fn shifted_powers() {
        for r in 1..=5 {
            let w = verify_shifted_power(r, 6).unwrap();
            assert!(w.passed, "{w}");
        }
        assert!(verify_shifted_power(0, 3).is_err());
    }

    #[test]
    fn bernoulli() {
        let w = verify_bernoulli(8).unwrap();
        assert!(w.passed, "{w}");
    }

    #[test]
    fn layered_counts() {
        let got: Vec<BigInt> = (0..6).map(layered_idempotent_count).collect();
        let want: Vec<BigInt> = [1, 1, 3, 16, 125, 1296]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn arborescence() {
        let w = verify_arborescence_equation(6, &b()).unwrap();
        assert!(w.passed, "{w}");
    }

    #[test]
    fn perdet_both_cases() {
        for (a, bb, c) in [(2, 1, 3), (1, 1, 1), (2, 5, 2), (3, 3, 3)] {
            let w = verify_perdet_identity(&rat(a), &rat(bb), &rat(c), 6, &b()).unwrap();
            assert!(w.passed, "{w}");
        }
    }

    #[test]
    fn permanent_abar() {
        let w = verify_permanent_abar(5, &b()).unwrap();
        assert!(w.passed, "{w}");
    }

    #[test]
    fn tan_sec_values() {
        let (tan, sec) = tan_sec_series(14).unwrap();
        assert_eq!(tan.coeff(3) * rat_big(factorial(3)), rat(2));
        assert_eq!(sec.coeff(10) * rat_big(factorial(10)), rat(50521));
        assert_eq!(sec.coeff(14) * rat_big(factorial(14)), rat(199360981));
        assert!(verify_tan_sec(14).unwrap().passed);
    }
}
