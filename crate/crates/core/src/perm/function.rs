//! Endofunctions of `[n]` and their canonical factorization.
//!
//! Two points are in the same sub-domain when their forward orbits meet,
//! i.e. `f^p(i) = f^q(i′)` for some `p, q`. Each sub-domain is stable under
//! `f`; relabelling it order-preservingly onto `[card]` gives a connected
//! factor. Excedances, fixed points and deficiencies survive the relabelling
//! because it preserves order.

use num_bigint::BigUint;

use super::Permutation;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// A map `f : [n] → [n]` stored as `(f(1), ..., f(n))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FunctionMap {
    image: Vec<usize>,
}

impl FunctionMap {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if let Some(i) = image.iter().position(|&v| v == 0 || v > n) {
            return Err(Error::InvalidMap(format!(
                "value {} at position {} is outside 1..={n}",
                image[i],
                i + 1
            )));
        }
        Ok(FunctionMap { image })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn at(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    /// `f^e(i)`.
    pub fn iterate(&self, i: usize, e: usize) -> usize {
        (0..e).fold(i, |k, _| self.at(k))
    }

    pub fn as_permutation(&self) -> Option<Permutation> {
        Permutation::new(self.image.clone()).ok()
    }

    /// Number of sub-domains, `z(f)`.
    pub fn component_count(&self) -> usize {
        components(self).len()
    }
}

impl From<&Permutation> for FunctionMap {
    fn from(p: &Permutation) -> Self {
        FunctionMap {
            image: p.word().to_vec(),
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Sub-domains as sorted sets, ordered by their minimum.
fn components(f: &FunctionMap) -> Vec<Vec<usize>> {
    let n = f.n();
    let mut parent: Vec<usize> = (0..=n).collect();
    for i in 1..=n {
        let (a, b) = (find(&mut parent, i), find(&mut parent, f.at(i)));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut slot = vec![usize::MAX; n + 1];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for i in 1..=n {
        let root = find(&mut parent, i);
        if slot[root] == usize::MAX {
            slot[root] = out.len();
            out.push(Vec::new());
        }
        out[slot[root]].push(i);
    }
    out
}

/// Factors `f` into connected maps, each paired with its sub-domain.
pub fn canonical_factorization(f: &FunctionMap) -> Vec<(FunctionMap, Vec<usize>)> {
    let mut rank = vec![0; f.n() + 1];
    components(f)
        .into_iter()
        .map(|dom| {
            for (r, &i) in dom.iter().enumerate() {
                rank[i] = r + 1;
            }
            let image = dom.iter().map(|&i| rank[f.at(i)]).collect();
            (FunctionMap { image }, dom)
        })
        .collect()
}

/// Families of endofunctions counted by exhaustive scan.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FunctionKind {
    /// `f^n = f^(n−1)`.
    UltimatelyIdempotent,
    /// The image of `f^(n−1)` is a single point.
    Arborescence,
}

/// Counts maps of the given kind among all `n^n` maps of `[n]`.
pub fn count_class_functions(n: usize, kind: FunctionKind, budget: &Budget) -> Result<BigUint> {
    budget.check_function_scan(n)?;
    if n == 0 {
        return Ok(match kind {
            FunctionKind::UltimatelyIdempotent => 1u32.into(),
            FunctionKind::Arborescence => 0u32.into(),
        });
    }
    let mut image = vec![1; n];
    let mut count: u64 = 0;
    let mut power = vec![0; n];
    loop {
        for (i, slot) in power.iter_mut().enumerate() {
            let mut k = i + 1;
            for _ in 0..n - 1 {
                k = image[k - 1];
            }
            *slot = k;
        }
        let hit = match kind {
            FunctionKind::UltimatelyIdempotent => power.iter().all(|&k| image[k - 1] == k),
            FunctionKind::Arborescence => power.iter().all(|&k| k == power[0]),
        };
        count += u64::from(hit);
        // Odometer step over [n]^n.
        let mut i = 0;
        while i < n && image[i] == n {
            image[i] = 1;
            i += 1;
        }
        if i == n {
            break;
        }
        image[i] += 1;
    }
    Ok(count.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_of_permutation_is_cycles() {
        let p = Permutation::new(vec![6, 4, 1, 2, 5, 3]).unwrap();
        let fac = canonical_factorization(&FunctionMap::from(&p));
        let doms: Vec<_> = fac.iter().map(|(_, d)| d.clone()).collect();
        assert_eq!(doms, vec![vec![1, 3, 6], vec![2, 4], vec![5]]);
        let sizes: Vec<_> = fac.iter().map(|(g, _)| g.n()).collect();
        assert_eq!(sizes, vec![3, 2, 1]);
        // 1 -> 6 -> 3 -> 1 relabels to 1 -> 3 -> 2 -> 1.
        assert_eq!(fac[0].0.image(), &[3, 1, 2]);
        assert!(fac.iter().all(|(g, _)| g.component_count() == 1));
    }

    #[test]
    fn constant_and_identity_maps() {
        let c = FunctionMap::new(vec![1; 5]).unwrap();
        assert_eq!(canonical_factorization(&c).len(), 1);
        let id = FunctionMap::new((1..=4).collect()).unwrap();
        let fac = canonical_factorization(&id);
        assert_eq!(fac.len(), 4);
        assert!(fac.iter().all(|(g, _)| g.image() == [1]));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(FunctionMap::new(vec![1, 3]).is_err());
    }

    #[test]
    fn small_counts() {
        let b = Budget::default();
        let v = |n| count_class_functions(n, FunctionKind::Arborescence, &b).unwrap();
        let u = |n| count_class_functions(n, FunctionKind::UltimatelyIdempotent, &b).unwrap();
        assert_eq!(v(1), 1u32.into());
        assert_eq!(v(2), 2u32.into());
        assert_eq!(u(0), 1u32.into());
        assert_eq!(u(1), 1u32.into());
        assert_eq!(u(2), 3u32.into());
        assert!(count_class_functions(8, FunctionKind::Arborescence, &b).is_err());
    }
}
