//! Exhaustive certification of the statistic vectors and the bijections
//! over all permutations of a given size.

use std::collections::HashSet;

use crate::bijections::{
    bar_map_traced, check_map, double_prime_map, fundamental, fundamental_inverse, prime_map,
    reverse_tilde, zeta_compose,
};
use crate::budget::Budget;
use crate::error::Result;
use crate::perm::{
    delta, delta_prime, delta_second, descent_vector, dprime_vector, excedance_vector,
    fixed_point_vector, for_each_in_class, is_in_class, lambda_op, same_multiset, ClassTag,
    Permutation, StatVector,
};
use crate::poly::{apply_gamma, base_vector, Base};
use crate::witness::Witness;

/// Counts checks of one property and keeps the first counterexample.
struct Tally {
    name: String,
    checked: u64,
    failure: Option<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            checked: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn witness(self) -> Witness {
        match self.failure {
            None => Witness::check(self.name, true, format!("{} cases", self.checked)),
            Some(d) => Witness::check(self.name, false, d),
        }
    }
}

fn pow_apply(v: &StatVector, k: usize, f: fn(&StatVector) -> Result<StatVector>) -> StatVector {
    (0..k).fold(v.clone(), |acc, _| f(&acc).expect("length checked"))
}

/// Properties of the statistic vectors over `S_n`:
/// `Δ′ʳEσ = ΔʳE(σζʳ)`; `Mσ̃(1) = σ(n)` and `Mσ̃(k+1) = ΔDσ(k)`;
/// `|Eσ| = |E′σ| + |ΔEσ|`; the entries of `Dσ` are 0 or at least 2 with
/// `Dσ(n) = 0`; `Δ, Δ′, Δ″` commute; `Δ = Δ″Λ = ΛΔ″`; biexcedent
/// permutations have only even cycles.
pub fn certify_statistics(n: usize, budget: &Budget) -> Result<Witness> {
    let mut rotation = Tally::new("primed deltas equal deltas of rotations");
    let mut reversal = Tally::new("rises of the reversal");
    let mut split = Tally::new("excedances split into fixed points and strict excedances");
    let mut descents = Tally::new("descent entries are 0 or at least 2, last is 0");
    let mut commute = Tally::new("delta operators commute");
    let mut lambda = Tally::new("delta factors through lambda");
    let mut biexcedent = Tally::new("biexcedent permutations have even cycles");
    for_each_in_class(n, ClassTag::All, budget, |p| {
        let e = excedance_vector(p);
        for r in 0..=n {
            let lhs = pow_apply(&e, r, delta_prime);
            let rhs = pow_apply(&excedance_vector(&zeta_compose(p, r)), r, delta);
            rotation.record(lhs == rhs, || format!("{p}, r = {r}: {lhs} vs {rhs}"));
        }
        if n >= 1 {
            let m = crate::perm::rise_vector(&reverse_tilde(p));
            let dd = delta(&descent_vector(p)).expect("n >= 1");
            let ok = m.get(1) == p.at(n) && (1..n).all(|k| m.get(k + 1) == dd.get(k));
            reversal.record(ok, || format!("{p}: M = {m}, ΔD = {dd}"));

            let de = delta(&e).expect("n >= 1");
            let fp = fixed_point_vector(p);
            split.record(
                e.positive_count() == fp.positive_count() + de.positive_count(),
                || format!("{p}"),
            );

            let d = descent_vector(p);
            descents.record(d.entries().iter().all(|&x| x != 1) && d.get(n) == 0, || {
                format!("{p}: D = {d}")
            });
        }
        if n >= 2 {
            let de = delta(&e).unwrap();
            let a = delta(&delta_prime(&e).unwrap()).unwrap();
            let b = delta_prime(&delta(&e).unwrap()).unwrap();
            let c = delta(&delta_second(&e).unwrap()).unwrap();
            let d2 = delta_second(&delta(&e).unwrap()).unwrap();
            let f = delta_prime(&delta_second(&e).unwrap()).unwrap();
            let g = delta_second(&delta_prime(&e).unwrap()).unwrap();
            commute.record(a == b && c == d2 && f == g, || format!("{p}"));

            let l1 = delta_second(&lambda_op(&e)).unwrap();
            let l2 = lambda_op(&delta_second(&e).unwrap());
            lambda.record(l1 == de && l2 == de, || format!("{p}"));
        }
        if is_in_class(p, ClassTag::Biexcedent).unwrap_or(false) {
            biexcedent.record(
                n % 2 == 0 && p.orbits().iter().all(|o| o.len() % 2 == 0),
                || format!("{p}"),
            );
        }
    })?;
    let mut parts = vec![
        rotation.witness(),
        reversal.witness(),
        split.witness(),
        descents.witness(),
        commute.witness(),
        lambda.witness(),
    ];
    if n > 0 {
        // Checked vacuously when there are no biexcedent permutations.
        parts.push(biexcedent.witness());
    }
    Ok(Witness::all(format!("statistics n={n}"), parts))
}

/// The bijections over `S_n` with their transport properties.
pub fn certify_bijections(n: usize, budget: &Budget) -> Result<Witness> {
    let mut round_trip = Tally::new("fundamental inverse undoes fundamental");
    let mut last = Tally::new("fundamental keeps the last value");
    let mut circular = Tally::new("circular permutations map to first-is-n");
    let mut transport = Tally::new("E = (D + D') of image and ΔE = ΔD of image");
    let mut maxima = Tally::new("orbit maxima are the saillants of the image");
    let mut fixed = Tally::new("fixed points read off the image");
    let mut minima = Tally::new("double deficiencies read off the image");
    let mut bar = Tally::new("E = M of the bar image");
    let mut derangements = Tally::new("derangements map exactly to succession-free");
    let mut biexcedent = Tally::new("biexcedent map exactly to alternating for even n");
    let mut check = Tally::new("|E of check image| + |ΔE| = n");
    let mut fundamental_images = HashSet::new();
    let mut bar_images = HashSet::new();
    for_each_in_class(n, ClassTag::All, budget, |p| {
        let hat = fundamental(p);
        round_trip.record(fundamental_inverse(&hat) == *p, || format!("{p}"));
        last.record(hat.at(n) == p.at(n), || format!("{p} -> {hat}"));
        if n >= 1 && is_in_class(p, ClassTag::Circular).unwrap_or(false) {
            circular.record(hat.at(1) == n, || format!("{p} -> {hat}"));
        }
        if n >= 1 {
            let e = excedance_vector(p);
            let dd = descent_vector(&hat)
                .add(&dprime_vector(&hat))
                .expect("same length");
            let ok = e == dd && delta(&e).unwrap() == delta(&descent_vector(&hat)).unwrap();
            transport.record(ok, || format!("{p} -> {hat}"));
        }

        let saillant = hat.saillant_values();
        let inv_hat = hat.inverse_table();
        let orbits = p.orbits();
        let inv = p.inverse_table();
        for k in 1..=n {
            let is_max = orbits.iter().any(|o| o.last() == Some(&k));
            maxima.record(is_max == saillant[k], || format!("{p}, k = {k}"));
            let j = inv_hat[k];
            let by_image = saillant[k] && (j == n || saillant[hat.at(j + 1)]);
            fixed.record(p.is_fixed_point(k) == by_image, || format!("{p}, k = {k}"));
            let low = k < p.at(k) && k < inv[k];
            let by_word = j != 1
                && ((j <= n - 1 && hat.at(j) < hat.at(j - 1) && hat.at(j) < hat.at(j + 1))
                    || (j == n && hat.at(j) < hat.at(j - 1)));
            minima.record(low == by_word, || format!("{p}, k = {k}"));
        }

        if n >= 1 {
            let t = bar_map_traced(p).expect("n >= 1");
            bar.record(
                excedance_vector(p) == crate::perm::rise_vector(&t.result),
                || format!("{p} -> {}", t.result),
            );
            let der = is_in_class(p, ClassTag::Derangement).unwrap_or(false);
            let free = is_in_class(&t.result, ClassTag::SuccessionFree).unwrap_or(false);
            derangements.record(der == free, || format!("{p} -> {}", t.result));
            bar_images.insert(t.result.into_word());

            let chk = check_map(p);
            check.record(
                excedance_vector(&chk).positive_count()
                    + delta(&excedance_vector(p)).unwrap().positive_count()
                    == n,
                || format!("{p}"),
            );
        }
        let bi = is_in_class(p, ClassTag::Biexcedent).unwrap_or(false);
        let alt = is_in_class(&hat, ClassTag::Alternating).unwrap_or(false);
        // Odd n has no biexcedent permutation at all.
        let expected = if n % 2 == 0 { alt } else { false };
        biexcedent.record(bi == expected, || format!("{p} -> {hat}"));
        fundamental_images.insert(hat.into_word());
    })?;
    let total = (1..=n as u64).product::<u64>() as usize;
    let bijective = Witness::check(
        "fundamental and bar are bijective",
        fundamental_images.len() == total && (n == 0 || bar_images.len() == total),
        format!(
            "{} and {} distinct images of {total}",
            fundamental_images.len(),
            bar_images.len()
        ),
    );

    let mut parts = vec![
        round_trip.witness(),
        last.witness(),
        circular.witness(),
        transport.witness(),
        maxima.witness(),
        fixed.witness(),
        minima.witness(),
        bar.witness(),
        derangements.witness(),
        biexcedent.witness(),
        check.witness(),
        bijective,
    ];
    if n >= 1 {
        parts.push(certify_prime_map(n, budget)?);
        parts.push(certify_double_prime_map(n, budget)?);
    }
    Ok(Witness::all(format!("bijections n={n}"), parts))
}

/// `σ ↦ σ′` from `σ(n) = 1` onto `σ(1) = n` with `ΔEσ = ΔDσ′`.
fn certify_prime_map(n: usize, budget: &Budget) -> Result<Witness> {
    let mut tally = Tally::new("prime map: first-is-n image with ΔE = ΔD");
    let mut images = HashSet::new();
    let mut domain = 0usize;
    for_each_in_class(n, ClassTag::LastIs1, budget, |p| {
        domain += 1;
        match prime_map(p) {
            Ok(q) => {
                let ok = q.at(1) == n
                    && delta(&excedance_vector(p)).unwrap() == delta(&descent_vector(&q)).unwrap();
                tally.record(ok, || format!("{p} -> {q}"));
                images.insert(q.into_word());
            }
            Err(e) => tally.record(false, || format!("{p}: {e}")),
        }
    })?;
    Ok(Witness::all(
        "prime map",
        vec![
            tally.witness(),
            Witness::check(
                "injective",
                images.len() == domain,
                format!("{} images of {domain}", images.len()),
            ),
        ],
    ))
}

/// `σ ↦ σ″` from `S_(n−1)` onto the circular permutations of `[n]` with
/// `Eσ = ΔEσ″`.
fn certify_double_prime_map(n: usize, budget: &Budget) -> Result<Witness> {
    let mut tally = Tally::new("double prime map: circular image with E = ΔE");
    let mut images = HashSet::new();
    let mut domain = 0usize;
    for_each_in_class(n - 1, ClassTag::All, budget, |p| {
        domain += 1;
        let q = double_prime_map(p);
        let ok = q.n() == n
            && is_in_class(&q, ClassTag::Circular).unwrap_or(false)
            && excedance_vector(p) == delta(&excedance_vector(&q)).unwrap();
        tally.record(ok, || format!("{p} -> {q}"));
        images.insert(q.into_word());
    })?;
    Ok(Witness::all(
        "double prime map",
        vec![
            tally.witness(),
            Witness::check(
                "injective",
                images.len() == domain,
                format!("{} images of {domain}", images.len()),
            ),
        ],
    ))
}

fn family(
    n: usize,
    base: Base,
    deltas: usize,
    primes: usize,
    budget: &Budget,
) -> Result<Vec<StatVector>> {
    let (size, class) = match base {
        Base::DeltaEOnCircular => (n + 1, ClassTag::Circular),
        Base::DeltaDOnFirstIsN => (n + 1, ClassTag::FirstIsN),
        _ => (n, ClassTag::All),
    };
    let mut out = Vec::new();
    for_each_in_class(size, class, budget, |p| {
        out.push(apply_gamma(base_vector(base, p), deltas, primes));
    })?;
    Ok(out)
}

/// For every monomial `Γ = Δ^a Δ′^b` with `a + b = r`, the multisets
/// `ΓE S_n`, `Γ(D+D′) S_n`, `ΓM S_n`, `ΓΔE` over circular permutations of
/// `[n+1]` and `ΓΔD` over `S′_(n+1)` coincide; `ΓD S_n` joins them exactly
/// when `a ≥ 1`.
pub fn certify_interpretations(n: usize, r: usize, budget: &Budget) -> Result<Witness> {
    let mut parts = Vec::new();
    if r > n {
        return Ok(Witness::all(format!("interpretations n={n} r={r}"), parts));
    }
    for primes in 0..=r {
        let deltas = r - primes;
        let e = family(n, Base::E, deltas, primes, budget)?;
        let others = [
            (Base::DPlusDPrime, "D + D'"),
            (Base::M, "M"),
            (Base::DeltaEOnCircular, "ΔE circular"),
            (Base::DeltaDOnFirstIsN, "ΔD first-is-n"),
        ];
        for (base, label) in others {
            let f = family(n, base, deltas, primes, budget)?;
            parts.push(Witness::check(
                format!("deltas={deltas} primes={primes}: E vs {label}"),
                same_multiset(e.clone(), f),
                format!("{} vectors", e.len()),
            ));
        }
        let d = family(n, Base::D, deltas, primes, budget)?;
        let equal = same_multiset(e.clone(), d);
        // With only primes, E and D differ unless every vector is empty.
        let expected = deltas >= 1 || primes == n;
        parts.push(Witness::check(
            format!("deltas={deltas} primes={primes}: E vs D"),
            equal == expected,
            format!("equal = {equal}, expected {expected}"),
        ));
    }
    Ok(Witness::all(format!("interpretations n={n} r={r}"), parts))
}

/// The running example `σ = (6,4,1,2,5,3)`: each printed vector and image,
/// rendered, against the expected text.
pub fn running_example() -> Vec<(String, String, String)> {
    let p: Permutation = "6 4 1 2 5 3".parse().expect("valid");
    let e = excedance_vector(&p);
    let t = bar_map_traced(&p).expect("n >= 1");
    let tilde = reverse_tilde(&p);
    let rows: Vec<(&str, String, &str)> = vec![
        ("E", e.to_string(), "(6,3,0,0,1,0)"),
        ("ΔE", delta(&e).unwrap().to_string(), "(5,2,0,0,0)"),
        ("Δ'E", delta_prime(&e).unwrap().to_string(), "(3,0,0,1,0)"),
        ("Δ''E", delta_second(&e).unwrap().to_string(), "(6,3,0,0,1)"),
        (
            "Δ²E",
            delta(&delta(&e).unwrap()).unwrap().to_string(),
            "(4,1,0,0)",
        ),
        (
            "Δ'²E",
            delta_prime(&delta_prime(&e).unwrap()).unwrap().to_string(),
            "(0,0,1,0)",
        ),
        (
            "ΔΔ'E",
            delta(&delta_prime(&e).unwrap()).unwrap().to_string(),
            "(2,0,0,0)",
        ),
        ("D", descent_vector(&p).to_string(), "(4,0,3,3,0,0)"),
        (
            "ΔD",
            delta(&descent_vector(&p)).unwrap().to_string(),
            "(3,0,2,2,0)",
        ),
        (
            "M",
            crate::perm::rise_vector(&p).to_string(),
            "(6,1,3,0,0,0)",
        ),
        ("σ̂", fundamental(&p).to_string(), "(4,2,5,6,1,3)"),
        (
            "(D+D')σ̂",
            descent_vector(&fundamental(&p))
                .add(&dprime_vector(&fundamental(&p)))
                .unwrap()
                .to_string(),
            "(6,3,0,0,1,0)",
        ),
        (
            "ΔDσ̂",
            delta(&descent_vector(&fundamental(&p)))
                .unwrap()
                .to_string(),
            "(5,2,0,0,0)",
        ),
        ("σ̃", tilde.to_string(), "(3,5,2,1,4,6)"),
        (
            "Mσ̃",
            crate::perm::rise_vector(&tilde).to_string(),
            "(3,3,0,2,2,0)",
        ),
        ("σ₁", t.sigma1.to_string(), "(4,1,2,5,3,6)"),
        ("σ₂", t.sigma2.to_string(), "(5,4,1,2,3,6)"),
        (
            "ΔEσ₁",
            delta(&excedance_vector(&t.sigma1)).unwrap().to_string(),
            "(3,0,0,1,0)",
        ),
        (
            "ΔDσ₂",
            delta(&descent_vector(&t.sigma2)).unwrap().to_string(),
            "(3,0,0,1,0)",
        ),
        ("σ̄", t.result.to_string(), "(6,3,2,1,4,5)"),
        (
            "Mσ̄",
            crate::perm::rise_vector(&t.result).to_string(),
            "(6,3,0,0,1,0)",
        ),
    ];
    rows.into_iter()
        .map(|(k, got, want)| (k.to_string(), got, want.to_string()))
        .collect()
}

/// The biexcedent permutations of `[4]` next to their images, which are
/// the alternating permutations of `[4]`.
pub fn biexcedent_table() -> Result<Vec<(Permutation, Permutation)>> {
    let mut rows = Vec::new();
    for_each_in_class(4, ClassTag::Biexcedent, &Budget::default(), |p| {
        rows.push((p.clone(), fundamental(p)));
    })?;
    Ok(rows)
}
