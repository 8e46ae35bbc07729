//! Cyclotomic cosets in `1 + rZ_rn`, multipliers and Type I splittings.
//!
//! A splitting is an ordered partition `X_0, ..., X_{m-1}` of `1 + rZ_rn`
//! into unions of `q`-cyclotomic cosets with `s·X_j = X_{j+1}` (indices mod
//! `m`). [`criteria`] holds the closed-form existence criteria and their
//! brute-force counterparts.

mod criteria;

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use crate::gf::prime_power_decomposition;
use crate::valuations::{gcd_u64, is_prime};
use crate::{Error, Result};

pub use criteria::{
    exists_duadic_mu_minus1, exists_duadic_mu_s, exists_mu_s_p_odd, exists_p_adic, m_bruteforce,
    m_closed_form, ms_bruteforce, ms_closed_form, orbit_lengths_on_cosets, oracle_sweep, SweepReport, MAX_BRUTE_FORCE_RN,
};

/// A validated `(q, n, r)` triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Params {
    q: u64,
    n: u64,
    r: u64,
}

impl Params {
    pub fn new(q: u64, n: u64, r: u64) -> Result<Self> {
        crate::gf::check_family(q, n, r)?;
        Ok(Params { q, n, r })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn rn(&self) -> u64 {
        self.r * self.n
    }

    /// `s mod rn` if `s` is a unit congruent to 1 mod `r`.
    pub fn normalize_multiplier(&self, s: i64) -> Result<u64> {
        let rn = self.rn();
        let reduced = s.rem_euclid(rn as i64) as u64;
        if gcd_u64(reduced, rn) == 1 && reduced % self.r == 1 % self.r {
            Ok(reduced)
        } else {
            Err(Error::BadMultiplier { s, modulus: rn })
        }
    }
}

/// `{1 + rk mod rn : 0 ≤ k < n}`, sorted.
pub fn residue_set(params: &Params) -> Vec<u64> {
    let rn = params.rn();
    let mut out: Vec<u64> = (0..params.n).map(|k| (1 + params.r * k) % rn).collect();
    out.sort_unstable();
    out
}

/// All `s` in `[0, rn)` with `gcd(s, rn) = 1` and `s ≡ 1 mod r`.
pub fn multiplier_candidates(params: &Params) -> Vec<u64> {
    let rn = params.rn();
    (0..rn)
        .filter(|&s| gcd_u64(s, rn) == 1 && s % params.r == 1 % params.r)
        .collect()
}

/// The `q`-cyclotomic cosets inside `1 + rZ_rn`, sorted by smallest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    params: Params,
    cosets: Vec<Vec<u64>>,
    /// Coset id of each residue mod `rn`, `usize::MAX` outside the set.
    coset_of: Vec<usize>,
}

impl CosetPartition {
    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Index of the coset containing `x mod rn`, if `x ∈ 1 + rZ_rn`.
    pub fn coset_index(&self, x: u64) -> Option<usize> {
        let id = self.coset_of[(x % self.params.rn()) as usize];
        (id != usize::MAX).then_some(id)
    }

    /// The coset permutation induced by `x -> s·x`.
    pub fn multiplier_permutation(&self, s: u64) -> Vec<usize> {
        let rn = self.params.rn();
        self.cosets
            .iter()
            .map(|c| {
                self.coset_index((c[0] * s) % rn)
                    .expect("multipliers preserve 1 + rZ_rn")
            })
            .collect()
    }
}

pub fn cyclotomic_cosets(params: &Params) -> CosetPartition {
    let rn = params.rn();
    let q = params.q % rn;
    let mut coset_of = vec![usize::MAX; rn as usize];
    let mut cosets = Vec::new();
    for x in residue_set(params) {
        if coset_of[x as usize] != usize::MAX {
            continue;
        }
        let id = cosets.len();
        let mut coset = Vec::new();
        let mut y = x;
        while coset_of[y as usize] == usize::MAX {
            coset_of[y as usize] = id;
            coset.push(y);
            y = (y * q) % rn;
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    CosetPartition {
        params: *params,
        cosets,
        coset_of,
    }
}

/// An ordered partition `X_0, ..., X_{m-1}` of `1 + rZ_rn` permuted
/// cyclically by `x -> s·x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    params: Params,
    s: u64,
    classes: Vec<Vec<u64>>,
}

impl Splitting {
    /// Assemble and validate a splitting from explicit classes.
    pub fn new(params: Params, s: i64, classes: Vec<Vec<u64>>) -> Result<Self> {
        let s = params.normalize_multiplier(s)?;
        let rn = params.rn();
        let classes = classes
            .into_iter()
            .map(|c| {
                let mut c: Vec<u64> = c.into_iter().map(|x| x % rn).collect();
                c.sort_unstable();
                c
            })
            .collect();
        let splitting = Splitting { params, s, classes };
        splitting.validate()?;
        Ok(splitting)
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn m(&self) -> usize {
        self.classes.len()
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn classes(&self) -> &[Vec<u64>] {
        &self.classes
    }

    /// Check the partition, `q`-invariance and `s·X_j = X_{j+1}`.
    pub fn validate(&self) -> Result<()> {
        let rn = self.params.rn();
        let m = self.classes.len();
        if m == 0 {
            return Err(Error::BadParams("a splitting needs at least one class".into()));
        }
        let mut seen = BTreeSet::new();
        for class in &self.classes {
            for &x in class {
                if !seen.insert(x) {
                    return Err(Error::BadParams(format!("{x} appears in two classes")));
                }
            }
        }
        let expected: BTreeSet<u64> = residue_set(&self.params).into_iter().collect();
        if seen != expected {
            return Err(Error::BadParams("classes do not cover 1 + rZ_rn exactly".into()));
        }
        let q = self.params.q % rn;
        for (j, class) in self.classes.iter().enumerate() {
            let set: BTreeSet<u64> = class.iter().copied().collect();
            if class.iter().any(|x| !set.contains(&((x * q) % rn))) {
                return Err(Error::NotInvariant(format!("class {j}")));
            }
            let image: BTreeSet<u64> = class.iter().map(|x| (x * self.s) % rn).collect();
            let next: BTreeSet<u64> = self.classes[(j + 1) % m].iter().copied().collect();
            if image != next {
                return Err(Error::BadParams(format!(
                    "multiplier {} does not map class {j} onto class {}",
                    self.s,
                    (j + 1) % m
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "q": self.params.q,
            "n": self.params.n,
            "r": self.params.r,
            "m": self.m(),
            "s": self.s,
            "classes": self.classes,
        })
    }
}

/// The splitting of `1 + rZ_rn` into `m` classes given by `s`.
///
/// Each `s`-orbit on the cosets is walked from its coset with the smallest
/// element, and the `j`-th coset on the walk goes to class `j mod m`.
pub fn build_splitting(params: &Params, s: i64, m: u64) -> Result<Splitting> {
    let s_red = params.normalize_multiplier(s)?;
    if m == 0 {
        return Err(Error::BadParams("m must be positive".into()));
    }
    let max = ms_bruteforce(params, s)?;
    if max % m != 0 {
        return Err(Error::NoSuchSplitting { m, max });
    }
    let partition = cyclotomic_cosets(params);
    let perm = partition.multiplier_permutation(s_red);
    let mut classes = vec![Vec::new(); m as usize];
    let mut visited = vec![false; partition.len()];
    for start in 0..partition.len() {
        if visited[start] {
            continue;
        }
        let mut c = start;
        let mut j = 0usize;
        while !visited[c] {
            visited[c] = true;
            classes[j % m as usize].extend_from_slice(&partition.cosets()[c]);
            c = perm[c];
            j += 1;
        }
    }
    Splitting::new(*params, s_red as i64, classes)
}

/// The standard `p`-adic splitting `X_j = {1 + ir : jn/p ≤ i < (j+1)n/p}`
/// with multiplier `1 + rn/p`, for `rn | q - 1`, `p^2 | q - 1`, `p | r`
/// and `p | n`.
pub fn padic_standard_splitting(params: &Params, p: u64) -> Result<Splitting> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let (q, n, r) = (params.q, params.n, params.r);
    let rn = params.rn();
    let violated = |what: &str| Err(Error::HypothesisViolated(what.to_string()));
    if (q - 1) % rn != 0 {
        return violated(&format!("rn = {rn} does not divide q - 1 = {}", q - 1));
    }
    if (q - 1) % (p * p) != 0 {
        return violated(&format!("{p}^2 does not divide q - 1 = {}", q - 1));
    }
    if r % p != 0 || n % p != 0 {
        return violated(&format!("{p} must divide both r = {r} and n = {n}"));
    }
    let block = n / p;
    let classes = (0..p)
        .map(|j| (j * block..(j + 1) * block).map(|i| 1 + i * r).collect())
        .collect();
    Splitting::new(*params, (1 + rn / p) as i64, classes)
}

/// Prime powers `2 ≤ q ≤ qmax`.
pub fn prime_powers_up_to(qmax: u64) -> Vec<u64> {
    (2..=qmax)
        .filter(|&q| prime_power_decomposition(q).is_some())
        .collect()
}

/// Every valid `(q, n, r)` with `q ≤ qmax` and `rn ≤ rnmax`, in lexicographic
/// order.
pub fn sweep_params(qmax: u64, rnmax: u64) -> Vec<Params> {
    let mut out = Vec::new();
    for q in prime_powers_up_to(qmax) {
        for r in (1..q).filter(|r| (q - 1) % r == 0) {
            for n in (1..=rnmax / r).filter(|&n| gcd_u64(q, n) == 1) {
                out.push(Params { q, n, r });
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(q: u64, n: u64, r: u64) -> Params {
        Params::new(q, n, r).unwrap()
    }

    #[test]
    fn residue_sets() {
        assert_eq!(residue_set(&params(5, 6, 2)), vec![1, 3, 5, 7, 9, 11]);
        assert_eq!(residue_set(&params(19, 6, 3)), vec![1, 4, 7, 10, 13, 16]);
        assert_eq!(residue_set(&params(7, 5, 1)), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn cosets_by_direct_iteration() {
        let singletons: Vec<Vec<u64>> = [1, 4, 7, 10, 13, 16].iter().map(|&x| vec![x]).collect();
        assert_eq!(cyclotomic_cosets(&params(19, 6, 3)).cosets(), singletons.as_slice());
        assert_eq!(
            cyclotomic_cosets(&params(5, 6, 2)).cosets(),
            &[vec![1, 5], vec![3], vec![7, 11], vec![9]]
        );
        assert_eq!(
            cyclotomic_cosets(&params(7, 8, 2)).cosets(),
            &[vec![1, 7], vec![3, 5], vec![9, 15], vec![11, 13]]
        );
    }

    #[test]
    fn candidates() {
        assert_eq!(multiplier_candidates(&params(5, 6, 2)), vec![1, 5, 7, 11]);
        assert_eq!(multiplier_candidates(&params(19, 6, 3)), vec![1, 7, 13]);
        assert_eq!(multiplier_candidates(&params(4, 1, 1)), vec![0]);
        let p = params(17, 8, 2);
        assert_eq!(p.normalize_multiplier(-1).unwrap(), 15);
        assert_eq!(
            p.normalize_multiplier(2),
            Err(Error::BadMultiplier { s: 2, modulus: 16 })
        );
    }

    #[test]
    fn explicit_splittings() {
        let s = build_splitting(&params(19, 6, 3), 7, 3).unwrap();
        assert_eq!(s.classes(), &[vec![1, 4], vec![7, 10], vec![13, 16]]);
        let s = build_splitting(&params(17, 8, 2), 15, 2).unwrap();
        assert_eq!(s.classes(), &[vec![1, 3, 5, 7], vec![9, 11, 13, 15]]);
        let p = params(5, 6, 2);
        let s = build_splitting(&p, 7, 1).unwrap();
        assert_eq!(s.classes(), &[residue_set(&p)]);
        assert_eq!(
            build_splitting(&params(19, 6, 3), 7, 2),
            Err(Error::NoSuchSplitting { m: 2, max: 3 })
        );
    }

    #[test]
    fn standard_padic_splittings() {
        let s = padic_standard_splitting(&params(19, 6, 3), 3).unwrap();
        assert_eq!(s.s(), 7);
        assert_eq!(s.classes(), &[vec![1, 4], vec![7, 10], vec![13, 16]]);
        let s = padic_standard_splitting(&params(17, 8, 2), 2).unwrap();
        assert_eq!(s.s(), 9);
        assert_eq!(s.classes(), &[vec![1, 3, 5, 7], vec![9, 11, 13, 15]]);
        assert!(matches!(
            padic_standard_splitting(&params(13, 4, 4), 2),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn invalid_splittings_are_rejected() {
        let p = params(5, 6, 2);
        // {1,5} and {7,11} are cosets but 5 does not swap the two halves.
        let bad = Splitting::new(p, 5, vec![vec![1, 5, 3], vec![7, 11, 9]]);
        assert!(matches!(bad, Err(Error::BadParams(_))));
        let not_invariant = Splitting::new(p, 7, vec![vec![1, 3, 7], vec![5, 9, 11]]);
        assert!(matches!(not_invariant, Err(Error::NotInvariant(_))));
    }

    #[test]
    fn splitting_json() {
        let s = build_splitting(&params(19, 6, 3), 7, 3).unwrap();
        assert_eq!(
            s.to_json().to_string(),
            r#"{"classes":[[1,4],[7,10],[13,16]],"m":3,"n":6,"q":19,"r":3,"s":7}"#
        );
    }

    #[test]
    fn sweep_enumeration() {
        let all = sweep_params(5, 12);
        assert!(all.contains(&params(5, 6, 2)));
        assert!(all.iter().all(|p| p.rn() <= 12 && gcd_u64(p.q(), p.n()) == 1));
        // q = 4: r ∈ {1, 3}, n odd.
        assert!(all.contains(&params(4, 3, 3)));
        assert!(!all.iter().any(|p| p.q() == 4 && p.n() % 2 == 0));
        assert_eq!(prime_powers_up_to(27).len(), 15);
    }
}
