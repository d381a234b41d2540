//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on
//! any failure. All comparisons are exact.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use eulerian_core::alternating::{
    c_triangle, euler_numbers, verify_c_identity, verify_descent_letters,
    verify_eulerian_alternating, verify_nabla_generates, verify_roselle_alternating,
    verify_runs_bridge, CTriangleMode, EulerMode,
};
use eulerian_core::certify::{
    biexcedent_table, certify_bijections, certify_interpretations, certify_statistics,
    running_example,
};
use eulerian_core::poly::{
    eulerian_by_enumeration, eulerian_explicit_poly, eulerian_recurrence_riordan,
    eulerian_recurrence_shift, eulerian_reduced, factorial, frobenius_identity,
    injection_interpretation, newcomb_specialization, rat, riordan_stirling_identity,
    verify_abar_specializations, verify_q_identities, verify_reciprocal_interpretation, worpitzky,
    worpitzky_generalized, Base, Interpretation,
};
use eulerian_core::series::{
    eulerian_by_series, verify_abar_exponential, verify_abar_power, verify_arborescence_equation,
    verify_bernoulli, verify_closed_forms, verify_exponential_formula, verify_perdet_identity,
    verify_permanent_abar, verify_remark_relations, verify_shifted_power, verify_tan_sec,
    MultiplicativeWeight,
};
use eulerian_core::{Budget, ExactPoly, Permutation, Result, Witness};
use num_bigint::BigInt;

const ORDER: usize = 10;

/// Reduced coefficients `ʳa_{n,k}`, rows `n = r..=8`, for `r = 1..=5`.
const REDUCED_TABLES: [&[&[u64]]; 5] = [
    &[
        &[1],
        &[1, 1],
        &[1, 4, 1],
        &[1, 11, 11, 1],
        &[1, 26, 66, 26, 1],
        &[1, 57, 302, 302, 57, 1],
        &[1, 120, 1191, 2416, 1191, 120, 1],
        &[1, 247, 4293, 15619, 15619, 4293, 247, 1],
    ],
    &[
        &[1],
        &[2, 1],
        &[4, 7, 1],
        &[8, 33, 18, 1],
        &[16, 131, 171, 41, 1],
        &[32, 473, 1208, 718, 88, 1],
        &[64, 1611, 7197, 8422, 2682, 183, 1],
    ],
    &[
        &[1],
        &[3, 1],
        &[9, 10, 1],
        &[27, 67, 25, 1],
        &[81, 376, 326, 56, 1],
        &[243, 1909, 3134, 1314, 119, 1],
    ],
    &[
        &[1],
        &[4, 1],
        &[16, 13, 1],
        &[64, 113, 32, 1],
        &[256, 821, 531, 71, 1],
    ],
    &[&[1], &[5, 1], &[25, 16, 1], &[125, 171, 39, 1]],
];

const EULER_NUMBERS: [u64; 14] = [
    1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765, 22368256, 199360981,
];

/// Rows of the biexcedent table of `S_4`: `σ` and its image.
const BIEXCEDENT_ROWS: [(&str, &str); 5] = [
    ("2 1 4 3", "2 1 4 3"),
    ("3 4 1 2", "3 1 4 2"),
    ("4 3 2 1", "3 2 4 1"),
    ("4 3 1 2", "4 1 3 2"),
    ("3 4 2 1", "4 2 3 1"),
];

fn budget() -> Budget {
    Budget::default()
}

fn poly_of(row: &[u64], scale: &BigInt) -> ExactPoly {
    ExactPoly::from_integers(row.iter().map(|&c| BigInt::from(c) * scale))
}

/// The five computations of `ʳAₙ(t)`, labelled.
fn five_methods(n: usize, r: usize) -> Result<Vec<(&'static str, ExactPoly)>> {
    Ok(vec![
        (
            "enumeration",
            eulerian_by_enumeration(n, r, Interpretation::excedance(), &budget())?,
        ),
        ("shift recurrence", eulerian_recurrence_shift(n, r)?),
        ("triangle recurrence", eulerian_recurrence_riordan(n, r)?),
        ("explicit formula", eulerian_explicit_poly(n, r)?),
        ("series extraction", eulerian_by_series(n, r)?),
    ])
}

fn tables() -> Result<Vec<Witness>> {
    let mut out = Vec::new();
    for (i, rows) in REDUCED_TABLES.iter().enumerate() {
        let r = i + 1;
        let scale = factorial(r);
        for (j, row) in rows.iter().enumerate() {
            let n = r + j;
            let expected = poly_of(row, &scale);
            let reduced: Vec<BigInt> = row.iter().map(|&c| BigInt::from(c)).collect();
            out.push(Witness::compare(
                format!("reduced r={r} n={n}"),
                &format!("{:?}", eulerian_reduced(n, r)?),
                &format!("{reduced:?}"),
            ));
            for (name, p) in five_methods(n, r)? {
                out.push(Witness::compare(
                    format!("{name} r={r} n={n}"),
                    &p,
                    &expected,
                ));
            }
            let inj = injection_interpretation(n, r, &budget())?.scale(&scale.clone().into());
            out.push(Witness::compare(
                format!("injections r={r} n={n}"),
                &inj,
                &expected,
            ));
        }
    }
    Ok(out)
}

fn euler_table() -> Result<Vec<Witness>> {
    let expected: Vec<BigInt> = EULER_NUMBERS.iter().map(|&t| BigInt::from(t)).collect();
    let render = |v: &[BigInt]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut out = Vec::new();
    for (name, mode, n) in [
        ("c-triangle", EulerMode::CTriangle, 14),
        ("series", EulerMode::Series, 14),
        ("enumeration", EulerMode::Enumeration, 10),
    ] {
        let got = euler_numbers(n, mode, &budget())?;
        out.push(Witness::compare(
            format!("euler numbers by {name}, n <= {n}"),
            &render(&got),
            &render(&expected[..n]),
        ));
    }
    Ok(out)
}

fn bijections() -> Result<Vec<Witness>> {
    let mut out = Vec::new();
    for n in 0..=8 {
        out.push(certify_bijections(n, &budget())?);
        out.push(certify_statistics(n, &budget())?);
    }
    Ok(out)
}

fn worked_example() -> Result<Vec<Witness>> {
    let mut out: Vec<Witness> = running_example()
        .into_iter()
        .map(|(name, got, want)| Witness::compare(name, &got, &want))
        .collect();
    let table = biexcedent_table()?;
    let mut expected = Vec::new();
    for (s, img) in BIEXCEDENT_ROWS {
        let p: Permutation = s.parse()?;
        let q: Permutation = img.parse()?;
        expected.push((p, q));
    }
    for (p, q) in &expected {
        out.push(Witness::compare(
            format!("image of {p}"),
            &eulerian_core::bijections::fundamental(p),
            q,
        ));
    }
    let mut sorted = expected.clone();
    sorted.sort_by(|a, b| a.0.word().cmp(b.0.word()));
    let render = |rows: &[(Permutation, Permutation)]| {
        rows.iter()
            .map(|(p, q)| format!("{p} {q}"))
            .collect::<Vec<_>>()
            .join("; ")
    };
    out.push(Witness::compare(
        "biexcedent table of S_4",
        &render(&table),
        &render(&sorted),
    ));
    Ok(out)
}

fn series() -> Result<Vec<Witness>> {
    let b = budget();
    let wide = Budget {
        permanent_max: 10,
        ..b
    };
    let mut out = vec![
        verify_abar_exponential(ORDER, &b)?,
        verify_closed_forms(ORDER, &b)?,
        verify_remark_relations(ORDER)?,
        verify_bernoulli(ORDER)?,
        verify_arborescence_equation(ORDER, &b)?,
        verify_tan_sec(ORDER)?,
        verify_tan_sec(14)?,
        verify_perdet_identity(&rat(2), &rat(1), &rat(3), ORDER, &wide)?,
        verify_perdet_identity(&rat(2), &rat(5), &rat(2), ORDER, &wide)?,
        verify_permanent_abar(8, &b)?,
    ];
    for r in 1..=5 {
        out.push(verify_shifted_power(r, ORDER)?);
    }
    for r in 1..=3 {
        out.push(verify_abar_power(r, ORDER, &b)?);
    }
    let weights = [
        MultiplicativeWeight::CycleIndicator((1..=ORDER as i64).map(rat).collect()),
        MultiplicativeWeight::Abar,
        MultiplicativeWeight::Biexcedent,
        MultiplicativeWeight::Matrix {
            a: rat(2),
            b: rat(1),
            c: rat(3),
        },
    ];
    for w in weights {
        out.push(verify_exponential_formula(&w, ORDER, &b)?);
    }
    Ok(out)
}

fn finite_identities() -> Result<Vec<Witness>> {
    let b = budget();
    let mut out = Vec::new();
    for m in 1..=8 {
        for n in 1..=8 {
            out.push(worpitzky(m, n)?);
            if m.min(n) <= 6 {
                for r in 1..=m.min(n) {
                    out.push(worpitzky_generalized(m, n, r)?);
                }
            }
        }
    }
    for n in 1..=8 {
        out.push(frobenius_identity(n)?);
    }
    for n in 1..=7 {
        for r in 1..=n.min(3) {
            out.push(riordan_stirling_identity(n, r)?);
            out.push(verify_reciprocal_interpretation(n, r, &b)?);
        }
        for r in 2..=n.min(3) {
            out.push(newcomb_specialization(n, r, &b)?);
        }
        for r in 0..=n.min(3) {
            let inj = injection_interpretation(n, r, &b)?.scale(&factorial(r).into());
            out.push(Witness::compare(
                format!("injections n={n} r={r}"),
                &inj,
                &eulerian_recurrence_riordan(n, r)?,
            ));
        }
    }
    for n in 0..=6 {
        for r in 1..=3 {
            out.push(verify_q_identities(n, r, &b)?);
        }
        out.push(verify_abar_specializations(n, &b)?);
    }
    Ok(out)
}

fn word_calculus() -> Result<Vec<Witness>> {
    let b = budget();
    let mut out = Vec::new();
    for n in 3..=8 {
        out.push(verify_nabla_generates(n, &b)?);
    }
    for n in 2..=8 {
        out.push(verify_descent_letters(n, &b)?);
    }
    let rec = c_triangle(8, CTriangleMode::Recurrence, &b)?;
    let abel = c_triangle(8, CTriangleMode::Abelianization, &b)?;
    out.push(Witness::check(
        "c triangle by recurrence and abelianization",
        rec == abel,
        format!("{rec:?} vs {abel:?}"),
    ));
    for n in 2..=9 {
        out.push(verify_c_identity(n)?);
    }
    for n in 2..=7 {
        out.push(verify_runs_bridge(n, &b)?);
    }
    // The Eulerian clause is exact for every p with 2p <= 14; the Roselle
    // clause needs enumeration over S_2p.
    for p in 1..=7 {
        out.push(verify_eulerian_alternating(p, &b)?);
    }
    for p in 1..=b.max_n / 2 {
        out.push(verify_roselle_alternating(p, &b)?);
    }
    Ok(out)
}

fn cross_method() -> Result<Vec<Witness>> {
    let mut out = Vec::new();
    for n in 1..=8 {
        for r in 1..=n {
            let methods = five_methods(n, r)?;
            let (_, reference) = &methods[0];
            for (name, p) in &methods[1..] {
                out.push(Witness::compare(
                    format!("enumeration vs {name} n={n} r={r}"),
                    reference,
                    p,
                ));
            }
        }
    }
    // The same polynomial read off every vector family.
    for n in 1..=7 {
        for r in 1..=n {
            out.push(certify_interpretations(n, r, &budget())?);
            let reference = eulerian_recurrence_riordan(n, r)?;
            for primes in 0..=r {
                for base in [
                    Base::E,
                    Base::DPlusDPrime,
                    Base::M,
                    Base::DeltaEOnCircular,
                    Base::DeltaDOnFirstIsN,
                    Base::D,
                ] {
                    if base == Base::D && primes == r {
                        continue;
                    }
                    let p =
                        eulerian_by_enumeration(n, r, Interpretation { base, primes }, &budget())?;
                    out.push(Witness::compare(
                        format!("{base:?} primes={primes} n={n} r={r}"),
                        &p,
                        &reference,
                    ));
                }
            }
        }
    }
    Ok(out)
}

type Criterion = (&'static str, fn() -> Result<Vec<Witness>>);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("eulerian tables reproduced by every method", tables),
        ("euler numbers t_1..t_14", euler_table),
        ("bijection certification n <= 8", bijections),
        ("running example and biexcedent table", worked_example),
        ("series identities to order 10", series),
        ("finite identities", finite_identities),
        ("word calculus", word_calculus),
        ("cross-method polynomial equality", cross_method),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run));
        let secs = start.elapsed().as_secs_f64();
        let (ok, note) = match outcome {
            Ok(Ok(ws)) => {
                let leaves: usize = ws.iter().map(Witness::leaf_count).sum();
                let failures: Vec<String> = ws
                    .iter()
                    .flat_map(|w| w.failures())
                    .map(|f| format!("{}: {}", f.name, f.detail))
                    .collect();
                if failures.is_empty() {
                    (true, format!("{leaves} checks"))
                } else {
                    (
                        false,
                        format!(
                            "{} of {leaves} failed; first: {}",
                            failures.len(),
                            failures[0]
                        ),
                    )
                }
            }
            Ok(Err(e)) => (false, format!("error: {e}")),
            Err(_) => (false, "panicked".to_string()),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {}: {} - {name} ({note}, {secs:.1}s)",
            i + 1,
            if ok { "PASS" } else { "FAIL" }
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
