//! The verification suites run by `eulerian verify`.

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
    eulerian_recurrence_shift, factorial, frobenius_identity, injection_interpretation,
    newcomb_specialization, rat, riordan_stirling_identity, stirling2, verify_abar_specializations,
    verify_q_identities, verify_reciprocal_interpretation, worpitzky, worpitzky_generalized,
    Interpretation, StirlingMode,
};
use eulerian_core::series::{
    eulerian_by_series, verify_abar_exponential, verify_abar_power, verify_arborescence_equation,
    verify_bernoulli, verify_closed_forms, verify_exponential_formula, verify_perdet_identity,
    verify_permanent_abar, verify_remark_relations, verify_shifted_power, verify_tan_sec,
    MultiplicativeWeight,
};
use eulerian_core::{Result, Witness};

use crate::{entry, Entry, VerifyConfig};

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Suite {
    /// Statistic vectors and bijections.
    Chapter1,
    /// Eulerian polynomials and finite identities.
    Chapter2,
    /// Generating-function identities.
    Series,
    /// Word calculus and alternating permutations.
    Chapter5,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Chapter1 => "chapter1",
            Suite::Chapter2 => "chapter2",
            Suite::Series => "series",
            Suite::Chapter5 => "chapter5",
            Suite::All => "all",
        }
    }
}

struct Runner {
    verbose: bool,
    entries: Vec<Entry>,
}

impl Runner {
    fn push(&mut self, id: &str, params: String, outcome: Result<Witness>) {
        self.entries.push(entry(id, params, outcome, self.verbose));
    }
}

pub(crate) fn run(suite: Suite, config: &VerifyConfig, verbose: bool) -> Vec<Entry> {
    let mut r = Runner {
        verbose,
        entries: Vec::new(),
    };
    match suite {
        Suite::Chapter1 => chapter1(&mut r, config),
        Suite::Chapter2 => chapter2(&mut r, config),
        Suite::Series => series(&mut r, config),
        Suite::Chapter5 => chapter5(&mut r, config),
        Suite::All => {
            chapter1(&mut r, config);
            chapter2(&mut r, config);
            series(&mut r, config);
            chapter5(&mut r, config);
        }
    }
    r.entries
}

fn chapter1(r: &mut Runner, c: &VerifyConfig) {
    let b = c.budget();
    for n in 0..=c.max_n {
        r.push("bijections", format!("n={n}"), certify_bijections(n, &b));
        r.push("statistics", format!("n={n}"), certify_statistics(n, &b));
    }
    // The circular and first-is-n families live on [n+1].
    for n in 1..c.max_n.min(8) {
        for k in 1..=n {
            r.push(
                "vector-interpretations",
                format!("n={n} r={k}"),
                certify_interpretations(n, k, &b),
            );
        }
    }
    let rows = running_example()
        .into_iter()
        .map(|(name, got, want)| Witness::compare(name, &got, &want))
        .collect();
    r.push(
        "running-example",
        String::new(),
        Ok(Witness::all("running example", rows)),
    );
    r.push(
        "biexcedent-table",
        "n=4".into(),
        biexcedent_table().map(|rows| {
            Witness::check(
                "five biexcedent permutations of [4], each sent to an alternating one",
                rows.len() == 5,
                rows.iter()
                    .map(|(p, q)| format!("{p} -> {q}"))
                    .collect::<Vec<_>>()
                    .join("; "),
            )
        }),
    );
}

fn five_methods(n: usize, k: usize, c: &VerifyConfig) -> Result<Witness> {
    let reference = eulerian_by_enumeration(n, k, Interpretation::excedance(), &c.budget())?;
    let others = [
        ("shift recurrence", eulerian_recurrence_shift(n, k)?),
        ("triangle recurrence", eulerian_recurrence_riordan(n, k)?),
        ("explicit formula", eulerian_explicit_poly(n, k)?),
        ("series extraction", eulerian_by_series(n, k)?),
    ];
    Ok(Witness::all(
        format!("five methods n={n} r={k}"),
        others
            .iter()
            .map(|(name, p)| Witness::compare(format!("enumeration vs {name}"), &reference, p))
            .collect(),
    ))
}

fn chapter2(r: &mut Runner, c: &VerifyConfig) {
    let b = c.budget();
    for n in 1..=c.max_n {
        for k in 1..=n {
            r.push(
                "five-methods",
                format!("n={n} r={k}"),
                five_methods(n, k, c),
            );
        }
        r.push("frobenius", format!("n={n}"), frobenius_identity(n));
    }
    for m in 1..=8 {
        for n in 1..=8 {
            r.push("worpitzky", format!("m={m} n={n}"), worpitzky(m, n));
            if m.min(n) <= 6 {
                for k in 1..=m.min(n) {
                    r.push(
                        "worpitzky-generalized",
                        format!("m={m} n={n} r={k}"),
                        worpitzky_generalized(m, n, k),
                    );
                }
            }
        }
    }
    for n in 1..=c.max_n.min(8) {
        for q in 1..=n {
            let w = stirling2(n, q, StirlingMode::Recurrence).and_then(|a| {
                Ok(Witness::compare(
                    "recurrence vs quasi-permutations",
                    &a,
                    &stirling2(n, q, StirlingMode::QuasiPermutation)?,
                ))
            });
            r.push("stirling-modes", format!("p={n} q={q}"), w);
        }
    }
    for n in 1..=c.max_n.min(7) {
        for k in 1..=n.min(3) {
            r.push(
                "riordan-stirling",
                format!("n={n} r={k}"),
                riordan_stirling_identity(n, k),
            );
            r.push(
                "reciprocal-descents",
                format!("n={n} r={k}"),
                verify_reciprocal_interpretation(n, k, &b),
            );
        }
        for k in 2..=n.min(3) {
            r.push(
                "newcomb",
                format!("n={n} r={k}"),
                newcomb_specialization(n, k, &b),
            );
        }
        for k in 0..=n.min(3) {
            let w = injection_interpretation(n, k, &b).and_then(|p| {
                Ok(Witness::compare(
                    "r! P = rA",
                    &p.scale(&factorial(k).into()),
                    &eulerian_recurrence_riordan(n, k)?,
                ))
            });
            r.push("injections", format!("n={n} r={k}"), w);
        }
    }
    for n in 0..=c.max_n.min(6) {
        for k in 1..=3 {
            r.push(
                "cycle-weighted",
                format!("n={n} r={k}"),
                verify_q_identities(n, k, &b),
            );
        }
        r.push(
            "abar-specializations",
            format!("n={n}"),
            verify_abar_specializations(n, &b),
        );
    }
}

fn series(r: &mut Runner, c: &VerifyConfig) {
    let b = c.budget();
    let n = c.order;
    let p = format!("order={n}");
    r.push(
        "abar-exponential",
        p.clone(),
        verify_abar_exponential(n, &b),
    );
    r.push("closed-forms", p.clone(), verify_closed_forms(n, &b));
    r.push("remark-relations", p.clone(), verify_remark_relations(n));
    r.push("bernoulli", p.clone(), verify_bernoulli(n));
    r.push(
        "arborescences",
        p.clone(),
        verify_arborescence_equation(n, &b),
    );
    r.push("tan-sec", p.clone(), verify_tan_sec(n));
    for (a, bb, cc) in [(2, 1, 3), (2, 5, 2)] {
        r.push(
            "permanent-determinant",
            format!("{p} a={a} b={bb} c={cc}"),
            verify_perdet_identity(&rat(a), &rat(bb), &rat(cc), n, &b),
        );
    }
    r.push(
        "permanent-abar",
        format!("n<={}", n.min(8)),
        verify_permanent_abar(n.min(8), &b),
    );
    for k in 1..=5 {
        r.push(
            "shifted-power",
            format!("{p} r={k}"),
            verify_shifted_power(k, n),
        );
    }
    for k in 1..=3 {
        r.push(
            "cycle-weighted-power",
            format!("{p} r={k}"),
            verify_abar_power(k, n, &b),
        );
    }
    let weights = [
        MultiplicativeWeight::CycleIndicator((1..=n.max(1) as i64).map(rat).collect()),
        MultiplicativeWeight::Abar,
        MultiplicativeWeight::Biexcedent,
        MultiplicativeWeight::Matrix {
            a: rat(2),
            b: rat(1),
            c: rat(3),
        },
    ];
    for w in weights {
        r.push(
            "exponential-formula",
            format!("{p} {}", w.label()),
            verify_exponential_formula(&w, n, &b),
        );
    }
}

fn chapter5(r: &mut Runner, c: &VerifyConfig) {
    let b = c.budget();
    for n in 3..=c.max_n.min(9) {
        r.push("nabla", format!("n={n}"), verify_nabla_generates(n, &b));
    }
    for n in 2..=c.max_n {
        r.push(
            "descent-letters",
            format!("n={n}"),
            verify_descent_letters(n, &b),
        );
        r.push("c-identity", format!("n={n}"), verify_c_identity(n));
    }
    for n in 2..=c.max_n.min(8) {
        r.push("runs-bridge", format!("n={n}"), verify_runs_bridge(n, &b));
    }
    let top = c.max_n.min(9).max(2);
    let modes = c_triangle(top, CTriangleMode::Recurrence, &b).and_then(|rec| {
        let abel = c_triangle(top, CTriangleMode::Abelianization, &b)?;
        Ok(Witness::check(
            "recurrence vs abelianization",
            rec == abel,
            format!("rows 2..={top}"),
        ))
    });
    r.push("c-triangle-modes", format!("n<={top}"), modes);
    for p in 1..=7 {
        r.push(
            "eulerian-alternating",
            format!("p={p}"),
            verify_eulerian_alternating(p, &b),
        );
    }
    for p in 1..=c.max_n / 2 {
        r.push(
            "roselle-alternating",
            format!("p={p}"),
            verify_roselle_alternating(p, &b),
        );
    }
    let euler = (|| {
        let tri = euler_numbers(14, EulerMode::CTriangle, &b)?;
        let ser = euler_numbers(14, EulerMode::Series, &b)?;
        let en = euler_numbers(c.max_n.min(14), EulerMode::Enumeration, &b)?;
        let render = |v: &[num_bigint::BigInt]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        Ok(Witness::all(
            "euler numbers",
            vec![
                Witness::compare("c-triangle vs series", &render(&tri), &render(&ser)),
                Witness::compare(
                    "enumeration vs c-triangle",
                    &render(&en),
                    &render(&tri[..en.len()]),
                ),
            ],
        ))
    })();
    r.push("euler-number-modes", "n<=14".into(), euler);
}
