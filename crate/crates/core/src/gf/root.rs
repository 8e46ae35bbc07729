use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use super::{ExtField, Field, FieldCtx};
use crate::valuations::{factorize_u64, gcd_u64, unit_order_u64};
use crate::{Error, Result};

/// The fields and roots of unity a `(q, n, r)` family is expressed against.
///
/// `omega` has order `rn` in `GF(q^e)`, `e = ord_rn(q)`, and `omega^n` is the
/// embedded `lambda`, which has order `r` in `GF(q)`.
#[derive(Debug, Clone)]
pub struct RootData {
    q: u64,
    n: u64,
    r: u64,
    base: Arc<FieldCtx>,
    field: Arc<ExtField>,
    lambda: u64,
    omega: Vec<u64>,
    /// `omega^i` for `0 ≤ i < rn`.
    omega_powers: Vec<Vec<u64>>,
}

impl RootData {
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

    pub fn e(&self) -> usize {
        self.field.degree()
    }

    pub fn base(&self) -> &Arc<FieldCtx> {
        &self.base
    }

    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn omega(&self) -> &Vec<u64> {
        &self.omega
    }

    /// `omega^i`, exponent taken mod `rn`.
    pub fn omega_pow(&self, i: i64) -> &Vec<u64> {
        &self.omega_powers[i.rem_euclid(self.rn() as i64) as usize]
    }

    /// Recheck the defining properties from scratch.
    pub fn check_invariants(&self) -> Result<()> {
        let t = &*self.field;
        let rn = self.rn();
        if !t.is_one(&t.pow_u64(&self.omega, rn)) {
            return Err(Error::OracleInconsistency("omega^(rn) != 1".into()));
        }
        for (prime, _) in factorize_u64(rn) {
            if t.is_one(&t.pow_u64(&self.omega, rn / prime)) {
                return Err(Error::OracleInconsistency(format!(
                    "omega^(rn/{prime}) = 1"
                )));
            }
        }
        if t.pow_u64(&self.omega, self.n) != t.embed(self.lambda) {
            return Err(Error::OracleInconsistency("omega^n != lambda".into()));
        }
        let b = &*self.base;
        if !b.is_one(&b.pow_u64(&self.lambda, self.r)) {
            return Err(Error::OracleInconsistency("lambda^r != 1".into()));
        }
        for (prime, _) in factorize_u64(self.r) {
            if b.is_one(&b.pow_u64(&self.lambda, self.r / prime)) {
                return Err(Error::OracleInconsistency(format!(
                    "lambda^(r/{prime}) = 1"
                )));
            }
        }
        Ok(())
    }
}

/// Validate `(q, n, r)`: `q` a prime power, `gcd(q, n) = 1`, `r | q - 1`.
pub(crate) fn check_family(q: u64, n: u64, r: u64) -> Result<()> {
    if q < 2 || super::prime_power_decomposition(q).is_none() {
        return Err(Error::BadParams(format!("q = {q} is not a prime power")));
    }
    if n == 0 || r == 0 {
        return Err(Error::BadParams("n and r must be positive".into()));
    }
    if gcd_u64(q, n) != 1 {
        return Err(Error::BadParams(format!("gcd(q, n) = gcd({q}, {n}) != 1")));
    }
    if (q - 1) % r != 0 {
        return Err(Error::BadParams(format!("r = {r} does not divide q - 1 = {}", q - 1)));
    }
    if r.checked_mul(n).is_none_or(|rn| rn > u32::MAX as u64) {
        return Err(Error::BadParams("rn is too large".into()));
    }
    Ok(())
}

/// Build `GF(q)`, `GF(q^e)`, `lambda` and `omega` for `(q, n, r)`.
///
/// `lambda = g^((q-1)/r)` for the generator `g` of `GF(q)`. A root `omega_0`
/// of order `rn` is `g^((q-1)/rn)` when `e = 1`; otherwise it is
/// `x^((q^e-1)/rn)` for the first non-constant `x` (by packed index) for
/// which that power has order `rn`. Then `omega = omega_0^j` for the
/// smallest `j ≥ 1` coprime to `rn` with `omega^n = lambda`.
pub fn root_data(q: u64, n: u64, r: u64) -> Result<RootData> {
    check_family(q, n, r)?;
    let rn = r * n;
    let e = if rn == 1 { 1 } else { unit_order_u64(q % rn, rn)? as usize };
    let base = Arc::new(FieldCtx::for_prime_power(q)?);
    let field = Arc::new(ExtField::new(Arc::clone(&base), e)?);
    let g = base.generator();
    let lambda = base.pow_u64(&g, (q - 1) / r);

    let rn_primes: Vec<u64> = factorize_u64(rn).into_iter().map(|(p, _)| p).collect();
    let has_order_rn = |y: &Vec<u64>| {
        field.is_one(&field.pow_u64(y, rn))
            && rn_primes
                .iter()
                .all(|p| !field.is_one(&field.pow_u64(y, rn / p)))
    };

    let omega0 = if e == 1 {
        field.embed(base.pow_u64(&g, (q - 1) / rn))
    } else {
        let cofactor = (field.size() - BigUint::one()) / BigUint::from(rn);
        let mut index = BigUint::from(q);
        loop {
            let x = field.from_index(&index).expect("index below q^e");
            let y = field.pow(&x, &cofactor);
            if has_order_rn(&y) {
                break y;
            }
            index += 1u32;
        }
    };
    debug_assert!(has_order_rn(&omega0));

    let target = field.embed(lambda);
    let base_n = field.pow_u64(&omega0, n);
    let j = (1..=rn)
        .filter(|j| j.gcd(&rn) == 1)
        .find(|&j| field.pow_u64(&base_n, j) == target)
        .ok_or_else(|| Error::OracleInconsistency("no power of omega_0 maps to lambda".into()))?;
    let omega = field.pow_u64(&omega0, j);

    let mut omega_powers = Vec::with_capacity(rn as usize);
    let mut acc = field.one();
    for _ in 0..rn {
        omega_powers.push(acc.clone());
        acc = field.mul(&acc, &omega);
    }

    Ok(RootData {
        q,
        n,
        r,
        base,
        field,
        lambda,
        omega,
        omega_powers,
    })
}
