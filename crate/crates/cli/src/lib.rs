//! Command implementations behind the `eulerian` binary. Every command
//! returns its rendered output so that it can be tested without a process.

use std::fmt::Write as _;
use std::time::Instant;

use eulerian_core::alternating::{euler_numbers, EulerMode};
use eulerian_core::bijections::{
    bar_map_traced, check_map, double_prime_map_traced, fundamental, fundamental_inverse,
    prime_map, reverse_tilde, zeta_compose,
};
use eulerian_core::perm::{
    delta, delta_prime, delta_second, descent_vector, dprime_vector, excedance_vector,
    fixed_point_vector, lambda_op, rise_vector,
};
use eulerian_core::poly::{
    abar_polynomial, eulerian_by_enumeration, eulerian_explicit_poly, eulerian_recurrence_riordan,
    eulerian_recurrence_shift, eulerian_reduced, injection_interpretation, q_polynomial,
    roselle_polynomial, Interpretation, RoselleMethod,
};
use eulerian_core::series::{
    closed_form_abar, closed_form_specialized, eulerian_by_series, tan_sec_series, Specialization,
};
use eulerian_core::{BiPoly, Budget, Error, ExactPoly, Permutation, Result, Witness};
use serde::Serialize;

pub mod suites;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Internal(e.to_string());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

fn json_text<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Right-aligned columns, one space apart, widths per column.
fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:>w$}", w = widths[c]))
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct PolyRecord {
    n: usize,
    r: usize,
    coeffs: Vec<String>,
}

fn integer_strings(p: &ExactPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Table {
    Eulerian,
    EulerNumbers,
}

/// The reduced coefficient tables `ʳa_{n,k}` for `r = 1..=5`, `r ≤ n ≤ max_n`,
/// or `tₙ` for `n ≤ max_n`. `only_r` restricts the first to one `r`.
pub fn cmd_tables(
    which: Table,
    only_r: Option<usize>,
    max_n: usize,
    format: Format,
) -> Result<String> {
    match which {
        Table::Eulerian => {
            let rs: Vec<usize> = match only_r {
                Some(r) => vec![r],
                None => (1..=5).collect(),
            };
            let mut records = Vec::new();
            for &r in &rs {
                if r == 0 {
                    return Err(Error::OutOfRange("table rows need r >= 1".into()));
                }
                for n in r..=max_n {
                    let coeffs = eulerian_reduced(n, r)?
                        .iter()
                        .map(|c| c.to_string())
                        .collect();
                    records.push(PolyRecord { n, r, coeffs });
                }
            }
            match format {
                Format::Json => json_text(&records),
                Format::Csv => csv_text(
                    &["r", "n", "coefficients"],
                    records
                        .into_iter()
                        .map(|p| vec![p.r.to_string(), p.n.to_string(), p.coeffs.join(",")])
                        .collect(),
                ),
                Format::Text => {
                    let mut out = String::new();
                    for (i, &r) in rs.iter().enumerate() {
                        if i > 0 {
                            out.push('\n');
                        }
                        let _ = writeln!(out, "r = {r}");
                        let width = max_n.saturating_sub(r) + 1;
                        let mut rows = vec![std::iter::once("k".to_string())
                            .chain((0..width).map(|k| k.to_string()))
                            .collect()];
                        for p in records.iter().filter(|p| p.r == r) {
                            rows.push(
                                std::iter::once(format!("n={}", p.n))
                                    .chain(p.coeffs.clone())
                                    .collect(),
                            );
                        }
                        out.push_str(&aligned(&rows));
                    }
                    Ok(out)
                }
            }
        }
        Table::EulerNumbers => {
            if max_n > 14 {
                return Err(Error::OutOfRange(format!(
                    "euler numbers are tabulated for n <= 14, got {max_n}"
                )));
            }
            let values = euler_numbers(max_n, EulerMode::CTriangle, &Budget::default())?;
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Row {
                        n: usize,
                        t: String,
                    }
                    let rows: Vec<Row> = values
                        .iter()
                        .enumerate()
                        .map(|(i, t)| Row {
                            n: i + 1,
                            t: t.to_string(),
                        })
                        .collect();
                    json_text(&rows)
                }
                Format::Csv => csv_text(
                    &["n", "t"],
                    values
                        .iter()
                        .enumerate()
                        .map(|(i, t)| vec![(i + 1).to_string(), t.to_string()])
                        .collect(),
                ),
                Format::Text => {
                    let mut rows = vec![vec!["n".to_string(), "t_n".to_string()]];
                    for (i, t) in values.iter().enumerate() {
                        rows.push(vec![(i + 1).to_string(), t.to_string()]);
                    }
                    Ok(aligned(&rows))
                }
            }
        }
    }
}

/// A vector statistic: operators applied right to left to a base vector.
enum StatExpr {
    Vector { ops: Vec<Op>, base: BaseVec },
    Cycles,
    Saillants,
    Signature,
}

#[derive(Clone, Copy)]
enum Op {
    Delta,
    Prime,
    Second,
    Lambda,
}

#[derive(Clone, Copy)]
enum BaseVec {
    E,
    EPrime,
    D,
    DPrime,
    M,
}

pub const DEFAULT_STATS: &[&str] = &["E", "E'", "ΔE", "D", "D'", "M", "z", "s", "ε"];

fn parse_stat(name: &str) -> Result<StatExpr> {
    match name {
        "z" => return Ok(StatExpr::Cycles),
        "s" => return Ok(StatExpr::Saillants),
        "ε" | "eps" => return Ok(StatExpr::Signature),
        _ => {}
    }
    let bases = [
        ("E'", BaseVec::EPrime),
        ("D'", BaseVec::DPrime),
        ("E", BaseVec::E),
        ("D", BaseVec::D),
        ("M", BaseVec::M),
    ];
    let (mut rest, base) = bases
        .iter()
        .find_map(|(s, b)| name.strip_suffix(s).map(|r| (r, *b)))
        .ok_or_else(|| Error::Precondition(format!("unknown statistic {name:?}")))?;
    let mut ops = Vec::new();
    let tokens: [(&str, Option<Op>); 9] = [
        ("Δ''", Some(Op::Second)),
        ("d''", Some(Op::Second)),
        ("Δ'", Some(Op::Prime)),
        ("d'", Some(Op::Prime)),
        ("Δ", Some(Op::Delta)),
        ("d", Some(Op::Delta)),
        ("Λ", Some(Op::Lambda)),
        ("L", Some(Op::Lambda)),
        ("²", None),
    ];
    while !rest.is_empty() {
        let (tok, op) = tokens
            .iter()
            .find(|(t, _)| rest.starts_with(t))
            .ok_or_else(|| {
                Error::Precondition(format!("unknown operator in {name:?} at {rest:?}"))
            })?;
        match op {
            Some(op) => ops.push(*op),
            None => {
                let last = *ops
                    .last()
                    .ok_or_else(|| Error::Precondition(format!("dangling power in {name:?}")))?;
                ops.push(last);
            }
        }
        rest = &rest[tok.len()..];
    }
    Ok(StatExpr::Vector { ops, base })
}

#[derive(Serialize)]
struct StatRecord {
    name: String,
    value: serde_json::Value,
}

fn eval_stat(p: &Permutation, expr: &StatExpr) -> Result<(String, serde_json::Value)> {
    Ok(match expr {
        StatExpr::Cycles => (p.cycle_count().to_string(), p.cycle_count().into()),
        StatExpr::Saillants => (p.saillant_count().to_string(), p.saillant_count().into()),
        StatExpr::Signature => (p.signature().to_string(), p.signature().into()),
        StatExpr::Vector { ops, base } => {
            let mut v = match base {
                BaseVec::E => excedance_vector(p),
                BaseVec::EPrime => fixed_point_vector(p),
                BaseVec::D => descent_vector(p),
                BaseVec::DPrime => dprime_vector(p),
                BaseVec::M => rise_vector(p),
            };
            for op in ops.iter().rev() {
                v = match op {
                    Op::Delta => delta(&v)?,
                    Op::Prime => delta_prime(&v)?,
                    Op::Second => delta_second(&v)?,
                    Op::Lambda => lambda_op(&v),
                };
            }
            (v.to_string(), v.entries().into())
        }
    })
}

pub fn parse_permutation(word: &str) -> Result<Permutation> {
    word.parse()
}

/// Requested statistics of one permutation.
pub fn cmd_stat(perm: &str, stats: &[String], format: Format) -> Result<String> {
    let p = parse_permutation(perm)?;
    let names: Vec<String> = if stats.is_empty() {
        DEFAULT_STATS.iter().map(|s| s.to_string()).collect()
    } else {
        stats.to_vec()
    };
    let mut rows = Vec::new();
    for name in &names {
        let (text, value) = eval_stat(&p, &parse_stat(name)?)?;
        rows.push((name.clone(), text, value));
    }
    match format {
        Format::Text => Ok(rows
            .iter()
            .map(|(n, t, _)| format!("{n} = {t}\n"))
            .collect()),
        Format::Csv => csv_text(
            &["statistic", "value"],
            rows.into_iter().map(|(n, t, _)| vec![n, t]).collect(),
        ),
        Format::Json => json_text(
            &rows
                .into_iter()
                .map(|(name, _, value)| StatRecord { name, value })
                .collect::<Vec<_>>(),
        ),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum MapName {
    /// Orbits read in order of their maxima.
    Fundamental,
    FundamentalInverse,
    /// Reversal and complement.
    Tilde,
    /// Satisfies E σ = M σ̄.
    Bar,
    Check,
    /// Defined on permutations ending in 1.
    Prime,
    /// From S_(n-1) to circular permutations of [n].
    DoublePrime,
    /// Composition with the r-th power of the rotation.
    Zeta,
}

fn word_text(p: &Permutation) -> String {
    p.word()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// The image of `perm`, with intermediates in verbose mode.
pub fn cmd_map(
    name: MapName,
    perm: &str,
    r: usize,
    verbose: bool,
    format: Format,
) -> Result<String> {
    let p = parse_permutation(perm)?;
    let mut steps: Vec<(&str, Permutation)> = Vec::new();
    let image = match name {
        MapName::Fundamental => fundamental(&p),
        MapName::FundamentalInverse => fundamental_inverse(&p),
        MapName::Tilde => reverse_tilde(&p),
        MapName::Check => check_map(&p),
        MapName::Prime => prime_map(&p)?,
        MapName::Zeta => zeta_compose(&p, r),
        MapName::Bar => {
            let t = bar_map_traced(&p)?;
            steps.push(("sigma1", t.sigma1));
            steps.push(("sigma2", t.sigma2));
            t.result
        }
        MapName::DoublePrime => {
            let t = double_prime_map_traced(&p);
            steps.push(("sigma1", t.sigma1));
            steps.push(("sigma2", t.sigma2));
            t.result
        }
    };
    if !verbose {
        steps.clear();
    }
    match format {
        Format::Text => {
            let mut out = String::new();
            for (label, q) in &steps {
                let _ = writeln!(out, "{label}: {}", word_text(q));
            }
            if steps.is_empty() {
                let _ = writeln!(out, "{}", word_text(&image));
            } else {
                let _ = writeln!(out, "image: {}", word_text(&image));
            }
            Ok(out)
        }
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = steps
                .iter()
                .map(|(l, q)| vec![l.to_string(), word_text(q)])
                .collect();
            rows.push(vec!["image".into(), word_text(&image)]);
            csv_text(&["step", "word"], rows)
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            for (l, q) in &steps {
                obj.insert(l.to_string(), q.word().into());
            }
            obj.insert("image".into(), image.word().into());
            json_text(&obj)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum PolyFamily {
    /// ʳAₙ(t).
    Eulerian,
    /// Bₙ(t).
    Roselle,
    /// Āₙ(t, t′).
    Abar,
    /// Qₙ(t, y), y marking cycles.
    Q,
    /// ʳPₙ(t) over injections.
    Injection,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum PolyMethod {
    Enumeration,
    Shift,
    Triangle,
    Explicit,
    Series,
    Derangements,
    SuccessionFree,
    Binomial,
}

fn eulerian_by(method: PolyMethod, n: usize, r: usize, budget: &Budget) -> Result<ExactPoly> {
    match method {
        PolyMethod::Enumeration => {
            eulerian_by_enumeration(n, r, Interpretation::excedance(), budget)
        }
        PolyMethod::Shift => eulerian_recurrence_shift(n, r),
        PolyMethod::Triangle => eulerian_recurrence_riordan(n, r),
        PolyMethod::Explicit => eulerian_explicit_poly(n, r),
        PolyMethod::Series => eulerian_by_series(n, r),
        other => Err(Error::Precondition(format!(
            "{other:?} does not compute Eulerian polynomials"
        ))),
    }
}

fn render_bivariate(p: &BiPoly, n: usize, r: usize, var: &str, format: Format) -> Result<String> {
    let rows: Vec<Vec<String>> = p.coeffs().iter().map(integer_strings).collect();
    match format {
        Format::Text => Ok(format!("{}\n", p.display_with(var))),
        Format::Csv => csv_text(
            &[var, "coefficients"],
            rows.into_iter()
                .enumerate()
                .map(|(j, cs)| vec![j.to_string(), cs.join(",")])
                .collect(),
        ),
        Format::Json => {
            #[derive(Serialize)]
            struct Bi {
                n: usize,
                r: usize,
                coeffs: Vec<Vec<String>>,
            }
            json_text(&Bi { n, r, coeffs: rows })
        }
    }
}

fn render_poly(p: &ExactPoly, n: usize, r: usize, format: Format) -> Result<String> {
    let coeffs = integer_strings(p);
    match format {
        Format::Text => Ok(format!("{p}\n")),
        Format::Csv => csv_text(
            &["r", "n", "coefficients"],
            vec![vec![r.to_string(), n.to_string(), coeffs.join(",")]],
        ),
        Format::Json => json_text(&PolyRecord { n, r, coeffs }),
    }
}

pub fn cmd_poly(
    family: PolyFamily,
    n: usize,
    r: usize,
    method: Option<PolyMethod>,
    budget: &Budget,
    format: Format,
) -> Result<String> {
    match family {
        PolyFamily::Eulerian => {
            let p = eulerian_by(method.unwrap_or(PolyMethod::Triangle), n, r, budget)?;
            render_poly(&p, n, r, format)
        }
        PolyFamily::Roselle => {
            let via = match method.unwrap_or(PolyMethod::Derangements) {
                PolyMethod::Derangements | PolyMethod::Enumeration => {
                    RoselleMethod::ExcedanceOnDerangements
                }
                PolyMethod::SuccessionFree => RoselleMethod::RisesOnSuccessionFree,
                PolyMethod::Binomial => RoselleMethod::BinomialTransform,
                other => {
                    return Err(Error::Precondition(format!(
                        "{other:?} does not compute Roselle polynomials"
                    )))
                }
            };
            render_poly(&roselle_polynomial(n, via, budget)?, n, 0, format)
        }
        PolyFamily::Abar => render_bivariate(&abar_polynomial(n, budget)?, n, 0, "t'", format),
        PolyFamily::Q => render_bivariate(&q_polynomial(n, budget)?, n, 0, "y", format),
        PolyFamily::Injection => {
            render_poly(&injection_interpretation(n, r, budget)?, n, r, format)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum SeriesName {
    Tan,
    Sec,
    /// Σ Aₙ(t) uⁿ/n! from its closed form.
    Eulerian,
    /// Σ Bₙ(t) uⁿ/n! from its closed form.
    Roselle,
    /// Σ Āₙ(t, t′) uⁿ/n! from its closed form.
    Abar,
}

/// The coefficients `n!·[uⁿ]` of a series up to `order`.
pub fn cmd_series(name: SeriesName, order: usize, format: Format) -> Result<String> {
    let values: Vec<String> = match name {
        SeriesName::Tan | SeriesName::Sec => {
            let (tan, sec) = tan_sec_series(order)?;
            let s = if name == SeriesName::Tan { tan } else { sec };
            s.egf_coefficients().iter().map(|c| c.to_string()).collect()
        }
        SeriesName::Eulerian => closed_form_specialized(order, Specialization::One)?
            .egf_coefficients()
            .iter()
            .map(|c| c.to_string())
            .collect(),
        SeriesName::Roselle => closed_form_specialized(order, Specialization::Zero)?
            .egf_coefficients()
            .iter()
            .map(|c| c.to_string())
            .collect(),
        SeriesName::Abar => closed_form_abar(order)?
            .egf_coefficients()
            .iter()
            .map(|c| c.to_string())
            .collect(),
    };
    match format {
        Format::Text => {
            let rows: Vec<Vec<String>> =
                std::iter::once(vec!["n".to_string(), "n! [u^n]".to_string()])
                    .chain(
                        values
                            .iter()
                            .enumerate()
                            .map(|(n, v)| vec![n.to_string(), v.clone()]),
                    )
                    .collect();
            // Polynomial values are left as they are; only the index is aligned.
            Ok(rows
                .iter()
                .map(|r| format!("{:>3}  {}\n", r[0], r[1]))
                .collect())
        }
        Format::Csv => csv_text(
            &["n", "coefficient"],
            values
                .into_iter()
                .enumerate()
                .map(|(n, v)| vec![n.to_string(), v])
                .collect(),
        ),
        Format::Json => {
            #[derive(Serialize)]
            struct Coeff {
                n: usize,
                value: String,
            }
            json_text(
                &values
                    .into_iter()
                    .enumerate()
                    .map(|(n, value)| Coeff { n, value })
                    .collect::<Vec<_>>(),
            )
        }
    }
}

/// One checked identity in a report.
#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub id: String,
    pub params: String,
    pub passed: bool,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub entries: Vec<Entry>,
    pub elapsed_secs: f64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn render(&self, format: Format, verbose: bool) -> Result<String> {
        match format {
            Format::Json => json_text(self),
            Format::Csv => csv_text(
                &["id", "params", "status", "witness"],
                self.entries
                    .iter()
                    .map(|e| {
                        vec![
                            e.id.clone(),
                            e.params.clone(),
                            if e.passed { "pass" } else { "fail" }.to_string(),
                            e.witness.clone(),
                        ]
                    })
                    .collect(),
            ),
            Format::Text => {
                let mut out = String::new();
                for e in &self.entries {
                    if e.passed && !verbose {
                        continue;
                    }
                    let status = if e.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "{status} {} [{}]", e.id, e.params);
                    for line in e.witness.lines() {
                        let _ = writeln!(out, "    {line}");
                    }
                }
                let failed = self.entries.iter().filter(|e| !e.passed).count();
                let _ = writeln!(
                    out,
                    "{}: {} passed, {failed} failed ({:.1}s)",
                    self.suite,
                    self.entries.len() - failed,
                    self.elapsed_secs
                );
                Ok(out)
            }
        }
    }
}

/// Budgets and sizes for a verification run.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub order: usize,
    pub fn_scan_max: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        let b = Budget::default();
        VerifyConfig {
            max_n: b.max_n,
            order: 10,
            fn_scan_max: b.fn_scan_max,
        }
    }
}

impl VerifyConfig {
    pub fn budget(&self) -> Budget {
        Budget {
            max_n: self.max_n.max(self.order),
            fn_scan_max: self.fn_scan_max,
            // Ryser's formula at the series order is cheap.
            permanent_max: Budget::default().permanent_max.max(self.order),
        }
    }
}

/// Renders a witness tree: failing leaves first, then all leaves when
/// `full`.
fn witness_text(w: &Witness, full: bool) -> String {
    if full {
        let mut out = String::new();
        fn walk(w: &Witness, depth: usize, out: &mut String) {
            let status = if w.passed { "ok" } else { "FAILED" };
            let _ = writeln!(
                out,
                "{}{}: {status} ({})",
                "  ".repeat(depth),
                w.name,
                w.detail
            );
            for p in &w.parts {
                walk(p, depth + 1, out);
            }
        }
        walk(w, 0, &mut out);
        out.trim_end().to_string()
    } else {
        w.to_string()
    }
}

pub(crate) fn entry(id: &str, params: String, outcome: Result<Witness>, verbose: bool) -> Entry {
    match outcome {
        Ok(w) => Entry {
            id: id.to_string(),
            params,
            passed: w.passed,
            witness: witness_text(&w, verbose || !w.passed),
        },
        Err(e) => Entry {
            id: id.to_string(),
            params,
            passed: false,
            witness: format!("error: {e}"),
        },
    }
}

pub fn cmd_verify(suite: suites::Suite, config: &VerifyConfig, verbose: bool) -> Report {
    let start = Instant::now();
    let mut entries = suites::run(suite, config, verbose);
    entries.sort_by(|a, b| {
        a.id.cmp(&b.id)
            .then_with(|| natural(&a.params).cmp(&natural(&b.params)))
    });
    Report {
        suite: suite.name().to_string(),
        entries,
        elapsed_secs: start.elapsed().as_secs_f64(),
    }
}

/// Sort key that orders embedded integers numerically.
fn natural(s: &str) -> Vec<(String, u64)> {
    let mut out = Vec::new();
    let mut text = String::new();
    let mut num: Option<u64> = None;
    for ch in s.chars() {
        if let Some(d) = ch.to_digit(10) {
            num = Some(num.unwrap_or(0) * 10 + u64::from(d));
        } else {
            if let Some(v) = num.take() {
                out.push((std::mem::take(&mut text), v));
            }
            text.push(ch);
        }
    }
    out.push((text, num.unwrap_or(0)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_are_reported_with_both_sides() {
        let bad = Witness::compare("identity", &1, &2);
        let report = Report {
            suite: "demo".into(),
            entries: vec![
                entry(
                    "good",
                    "n=1".into(),
                    Ok(Witness::check("ok", true, "")),
                    false,
                ),
                entry("bad", "n=2".into(), Ok(bad), false),
                entry(
                    "err",
                    "n=3".into(),
                    Err(Error::Precondition("nope".into())),
                    false,
                ),
            ],
            elapsed_secs: 0.0,
        };
        assert!(!report.passed());
        let text = report.render(Format::Text, false).unwrap();
        assert!(text.contains("FAIL bad [n=2]"));
        assert!(text.contains("lhs = 1; rhs = 2"));
        assert!(text.contains("FAIL err [n=3]"));
        assert!(!text.contains("good"));
        assert!(text.ends_with("demo: 1 passed, 2 failed (0.0s)\n"));
    }

    #[test]
    fn natural_order_sorts_numbers() {
        let mut v = vec!["n=10", "n=2", "n=1 r=3", "n=1 r=10"];
        v.sort_by_key(|s| natural(s));
        assert_eq!(v, ["n=1 r=3", "n=1 r=10", "n=2", "n=10"]);
    }

    #[test]
    fn stat_names_parse() {
        assert!(parse_stat("Δ''Δ'ΔE").is_ok());
        assert!(parse_stat("ΛD'").is_ok());
        assert!(parse_stat("XE").is_err());
        assert!(parse_stat("²E").is_err());
    }
}
