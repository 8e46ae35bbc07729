//! Self-dual and alternant MDS constacyclic codes from duadic splittings.

use std::sync::Arc;

use super::constacyclic::ConstacyclicRing;
use super::distance::min_distance_exhaustive;
use super::grs::{certify_mds_via_grs, GrsSpec, MdsCertificate};
use super::linear::{Distance, LinearCode};
use crate::gf::{prime_power_decomposition, ExtField, FieldCtx};
use crate::splitting::{residue_set, Params, Splitting};
use crate::valuations::nu_u64;
use crate::{Error, Result};

/// A duadic constacyclic code with its alternant description.
#[derive(Debug, Clone)]
pub struct AlternantCode {
    pub params: Params,
    pub splitting: Splitting,
    /// Index of the class whose code is `code`.
    pub class_index: usize,
    pub code: LinearCode<FieldCtx>,
    pub parent: GrsSpec<ExtField>,
    pub certificate: MdsCertificate,
    pub self_dual: bool,
    /// Exhaustive distance, when `q^k` fits the budget.
    pub exhaustive: Option<Distance>,
}

impl AlternantCode {
    /// Exhaustive value if computed, otherwise the certified one.
    pub fn distance(&self) -> Distance {
        match (self.exhaustive, self.certificate.d_certified) {
            (Some(d), _) => d,
            (None, Some(d)) => Distance::Certified(d),
            (None, None) => Distance::Undefined,
        }
    }

    /// `ω^e` exponents of the parent locators and multipliers, `t = 0..n`.
    pub fn parent_exponents(&self) -> (Vec<i64>, Vec<i64>) {
        exponents_of(&self.params, &self.parent)
    }
}

fn exponents_of(params: &Params, parent: &GrsSpec<ExtField>) -> (Vec<i64>, Vec<i64>) {
    // Parents are always built from ω powers; recover them by table lookup.
    let rd = crate::gf::root_data(params.q(), params.n(), params.r()).expect("valid params");
    let rn = params.rn() as i64;
    let find = |x: &Vec<u64>| (0..rn).find(|&i| rd.omega_pow(i) == x).expect("power of omega");
    (
        parent.locators.iter().map(find).collect(),
        parent.multipliers.iter().map(find).collect(),
    )
}

fn odd_prime_power(q: u64) -> Result<()> {
    match prime_power_decomposition(q) {
        Some((p, _)) if p != 2 => Ok(()),
        _ => Err(Error::HypothesisViolated(format!("q = {q} is not an odd prime power"))),
    }
}

fn finish(
    ring: &ConstacyclicRing,
    splitting: Splitting,
    class_index: usize,
    parent: GrsSpec<ExtField>,
    budget: u64,
) -> Result<AlternantCode> {
    let code = ring.code_from_class(&splitting.classes()[class_index])?;
    let certificate = certify_mds_via_grs(&code, &parent)?;
    let exhaustive = match min_distance_exhaustive(&code, budget) {
        Ok(d) => Some(d),
        Err(Error::TooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(AlternantCode {
        params: *ring.params(),
        self_dual: code.is_self_dual(),
        splitting,
        class_index,
        code,
        parent,
        certificate,
        exhaustive,
    })
}

/// Negacyclic codes of length `n = (q + 1)/ℓ` over `GF(q)` from the classes
/// `{1, 3, ..., n-1}` and `{n+1, ..., 2n-1}`, which `-1` swaps. The first
/// class code is the subfield subcode of the GRS code over `GF(q^2)` with
/// locators `ω^{-2t}` and multipliers `ω^{-t}`.
pub fn negacyclic_alternant_mds(q: u64, ell: u64, budget: u64) -> Result<AlternantCode> {
    odd_prime_power(q)?;
    if ell == 0 || ell % 2 == 0 || (q + 1) % ell != 0 {
        return Err(Error::HypothesisViolated(format!(
            "ell = {ell} must be an odd divisor of q + 1 = {}",
            q + 1
        )));
    }
    let n = (q + 1) / ell;
    let params = Params::new(q, n, 2)?;
    let x0: Vec<u64> = (0..n / 2).map(|i| 2 * i + 1).collect();
    let x1: Vec<u64> = (0..n / 2).map(|i| n + 2 * i + 1).collect();
    let splitting = Splitting::new(params, -1, vec![x0, x1])
        .map_err(|e| Error::HypothesisViolated(format!("classes do not split: {e}")))?;
    let ring = ConstacyclicRing::new(&params)?;
    let rd = ring.root();
    let parent = GrsSpec {
        field: Arc::clone(rd.field()),
        k: (n / 2) as usize,
        locators: (0..n as i64).map(|t| rd.omega_pow(-2 * t).clone()).collect(),
        multipliers: (0..n as i64).map(|t| rd.omega_pow(-t).clone()).collect(),
    };
    finish(&ring, splitting, 0, parent, budget)
}

/// Constacyclic codes of length `q + 1` with `r = (q - 1)/2`, for
/// `8 | q - 1`. The classes are `X_0 = {1 + rj : -(q-1)/4 < j ≤ (q-1)/4 + 1}`
/// and its complement, swapped by `s = 1 + (q^2 - 1)/4`. The complement's
/// code is the subfield subcode of the GRS code over `GF(q^2)` with
/// locators `ω^{rt}` and multipliers `ω^{((q-1)/4)rt - t}`.
pub fn constacyclic_alternant_mds(q: u64, budget: u64) -> Result<AlternantCode> {
    odd_prime_power(q)?;
    if nu_u64(2, q - 1) < 3 {
        return Err(Error::HypothesisViolated(format!("8 does not divide q - 1 = {}", q - 1)));
    }
    let r = (q - 1) / 2;
    let n = q + 1;
    let quarter = ((q - 1) / 4) as i64;
    let params = Params::new(q, n, r)?;
    let rn = params.rn() as i64;
    let s = 1 + (q * q - 1) / 4;
    let mut x0: Vec<u64> = ((-quarter + 1)..=(quarter + 1))
        .map(|j| (1 + r as i64 * j).rem_euclid(rn) as u64)
        .collect();
    x0.sort_unstable();
    let x1: Vec<u64> = residue_set(&params)
        .into_iter()
        .filter(|x| x0.binary_search(x).is_err())
        .collect();
    let splitting = Splitting::new(params, s as i64, vec![x0, x1])
        .map_err(|e| Error::HypothesisViolated(format!("classes do not split: {e}")))?;
    let ring = ConstacyclicRing::new(&params)?;
    let rd = ring.root();
    let r = r as i64;
    let parent = GrsSpec {
        field: Arc::clone(rd.field()),
        k: (n / 2) as usize,
        locators: (0..n as i64).map(|t| rd.omega_pow(r * t).clone()).collect(),
        multipliers: (0..n as i64)
            .map(|t| rd.omega_pow(quarter * t * r - t).clone())
            .collect(),
    };
    finish(&ring, splitting, 1, parent, budget)
}
