//! Generalized Reed-Solomon codes, subfield subcodes and the certificates
//! that tie them to constacyclic codes.

use std::sync::Arc;

use serde::Serialize;

use super::constacyclic::ConstacyclicRing;
use super::linalg;
use super::linear::{LinearCode, Provenance};
use crate::gf::{ExtField, Field, FieldCtx};
use crate::splitting::{padic_standard_splitting, Params};
use crate::{Error, Result};

/// `GRS_k(α; v) = {(v_0 f(α_0), ..., v_{n-1} f(α_{n-1})) : deg f < k}`.
#[derive(Debug, Clone)]
pub struct GrsSpec<F: Field> {
    pub field: Arc<F>,
    pub k: usize,
    pub locators: Vec<F::Elem>,
    pub multipliers: Vec<F::Elem>,
}

impl<F: Field> GrsSpec<F> {
    pub fn n(&self) -> usize {
        self.locators.len()
    }

    pub fn validate(&self) -> Result<()> {
        let f = &*self.field;
        if self.multipliers.len() != self.locators.len() {
            return Err(Error::DimMismatch {
                expected: self.locators.len(),
                found: self.multipliers.len(),
            });
        }
        if self.k > self.n() {
            return Err(Error::BadParams(format!("k = {} exceeds n = {}", self.k, self.n())));
        }
        for (i, a) in self.locators.iter().enumerate() {
            if let Some(j) = self.locators[..i].iter().position(|b| b == a) {
                return Err(Error::DuplicateLocator(j, i));
            }
        }
        if let Some(i) = self.multipliers.iter().position(|v| f.is_zero(v)) {
            return Err(Error::ZeroMultiplier(i));
        }
        Ok(())
    }
}

/// Generator rows `(v_i α_i^t)_i` for `0 ≤ t < k`.
pub fn grs_code<F: Field>(spec: &GrsSpec<F>) -> Result<LinearCode<F>> {
    spec.validate()?;
    let f = &*spec.field;
    let mut powers = spec.multipliers.clone();
    let mut rows = Vec::with_capacity(spec.k);
    for _ in 0..spec.k {
        rows.push(powers.clone());
        for (p, a) in powers.iter_mut().zip(&spec.locators) {
            *p = f.mul(p, a);
        }
    }
    LinearCode::new(Arc::clone(&spec.field), spec.n(), rows, Provenance::Grs)
}

/// The codewords of `code` with every coordinate in `GF(q)`.
///
/// Each parity check over `GF(q^e)` splits into `e` checks over `GF(q)`, one
/// per tower coordinate, since multiplying by a constant acts coordinatewise.
pub fn subfield_subcode(code: &LinearCode<ExtField>) -> LinearCode<FieldCtx> {
    let tower = &**code.field();
    let base = Arc::clone(tower.base());
    let n = code.n();
    let checks = code.parity_check();
    let mut expanded = Vec::with_capacity(checks.len() * tower.degree());
    for row in &checks {
        for t in 0..tower.degree() {
            expanded.push(row.iter().map(|x| x[t]).collect::<Vec<u64>>());
        }
    }
    let generator = linalg::null_space(&*base, &expanded, n);
    LinearCode::new(base, n, generator, Provenance::SubfieldSubcode)
        .expect("a null space basis is independent")
}

fn embed_rows(tower: &ExtField, rows: &[Vec<u64>]) -> Vec<Vec<Vec<u64>>> {
    rows.iter()
        .map(|row| row.iter().map(|&c| tower.embed(c)).collect())
        .collect()
}

/// Evidence that a code over `GF(q)` is the subfield subcode of a GRS code,
/// and the distance that follows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MdsCertificate {
    pub n: usize,
    pub k: usize,
    /// Every generator row of the code lies in the parent GRS code.
    pub contained_in_parent: bool,
    pub parent_k: usize,
    pub subfield_subcode_dim: usize,
    /// `n - k_parent + 1`, the distance of the parent.
    pub lower_bound: usize,
    /// Singleton bound `n - k + 1`.
    pub upper_bound: usize,
    pub d_certified: Option<usize>,
}

impl MdsCertificate {
    pub fn is_mds(&self) -> bool {
        self.d_certified == Some(self.n - self.k + 1)
    }
}

/// Check that `code` equals `GRS(parent)|_{GF(q)}` and derive its distance
/// from the parent's.
pub fn certify_mds_via_grs(code: &LinearCode<FieldCtx>, parent: &GrsSpec<ExtField>) -> Result<MdsCertificate> {
    let tower = &*parent.field;
    if !tower.base().same_field(code.field()) || parent.n() != code.n() {
        return Err(Error::FieldMismatch);
    }
    let grs = grs_code(parent)?;
    let n = code.n();
    let checks = grs.parity_check();
    for (i, row) in embed_rows(tower, code.generator()).iter().enumerate() {
        if checks.iter().any(|h| !tower.is_zero(&linalg::dot(tower, h, row))) {
            return Err(Error::NotSubcode(format!("generator row {i}")));
        }
    }
    let sub = subfield_subcode(&grs);
    if sub.k() != code.k() {
        return Err(Error::DimMismatch {
            expected: code.k(),
            found: sub.k(),
        });
    }
    let lower = n - parent.k + 1;
    let upper = n + 1 - code.k();
    Ok(MdsCertificate {
        n,
        k: code.k(),
        contained_in_parent: true,
        parent_k: parent.k,
        subfield_subcode_dim: sub.k(),
        lower_bound: lower,
        upper_bound: upper,
        d_certified: (lower == upper).then_some(lower),
    })
}

/// Evidence that a sum of class codes of the standard `p`-adic splitting is
/// a GRS code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrsEquality {
    pub n: usize,
    pub k: usize,
    pub grs_k: usize,
    /// Every GRS generator row vanishes at every zero of the constacyclic
    /// code.
    pub zeros_annihilated: bool,
    /// Direct row-space comparison after embedding.
    pub same_row_space: bool,
    pub d_certified: usize,
}

impl GrsEquality {
    pub fn holds(&self) -> bool {
        self.k == self.grs_k && self.zeros_annihilated && self.same_row_space
    }
}

/// The GRS code with locators `ω^{-rt}` and multipliers `ω^{-t}` over
/// `GF(q^e)`, of dimension `k`.
pub fn padic_grs_spec(ring: &ConstacyclicRing, k: usize) -> GrsSpec<ExtField> {
    let rd = ring.root();
    let n = ring.params().n() as i64;
    let r = ring.params().r() as i64;
    GrsSpec {
        field: Arc::clone(rd.field()),
        k,
        locators: (0..n).map(|t| rd.omega_pow(-r * t).clone()).collect(),
        multipliers: (0..n).map(|t| rd.omega_pow(-t).clone()).collect(),
    }
}

/// The code `C_{X_0} ⊕ ... ⊕ C_{X_{k-1}}` for the standard `p`-adic splitting
/// together with the comparison against the GRS code of dimension `kn/p`.
pub fn grs_equals_constacyclic(params: &Params, p: u64, k: u64) -> Result<(LinearCode<FieldCtx>, GrsEquality)> {
    let splitting = padic_standard_splitting(params, p)?;
    if k == 0 || k >= p {
        return Err(Error::HypothesisViolated(format!("need 0 < k < p, got k = {k}")));
    }
    let ring = ConstacyclicRing::new(params)?;
    let class: Vec<u64> = splitting.classes()[..k as usize].concat();
    let code = ring.code_from_class(&class)?;
    let n = params.n() as usize;
    let grs_k = (k * params.n() / p) as usize;
    let spec = padic_grs_spec(&ring, grs_k);
    let grs = grs_code(&spec)?;
    let tower = &**ring.root().field();
    let zeros = &code.constacyclic().expect("constacyclic").zero_exponents;
    let zeros_annihilated = grs.generator().iter().all(|row| {
        zeros.iter().all(|&z| {
            let x = ring.root().omega_pow(z as i64);
            let value = row
                .iter()
                .rev()
                .fold(tower.zero(), |acc, c| tower.add(&tower.mul(&acc, x), c));
            tower.is_zero(&value)
        })
    });
    let embedded = embed_rows(tower, code.generator());
    let same_row_space = linalg::same_row_space(tower, &embedded, grs.generator(), n);
    let report = GrsEquality {
        n,
        k: code.k(),
        grs_k,
        zeros_annihilated,
        same_row_space,
        d_certified: n - grs_k + 1,
    };
    Ok((code, report))
}
