//! Exact integer number theory: p-adic valuations with the `ν_p(0) = -∞`
//! convention, factorization, unit orders, the Chinese remainder map, and the
//! structure of `Z_{2^a}^*` modulo a cyclic subgroup.
//!
//! Everything here works on arbitrary precision integers; small fast paths
//! exist only where the inputs are known to fit in a machine word.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// A p-adic valuation extended by the two infinities.
///
/// `ν_p(0)` is [`ExtValuation::NegInfinity`]; its absolute value is
/// [`ExtValuation::PosInfinity`]. The derived order puts `NegInfinity` below
/// every finite value and `PosInfinity` above, so `min`/`max` follow the
/// extended-real rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtValuation {
    NegInfinity,
    Finite(i64),
    PosInfinity,
}

impl ExtValuation {
    pub fn abs(self) -> Self {
        match self {
            ExtValuation::Finite(v) => ExtValuation::Finite(v.abs()),
            _ => ExtValuation::PosInfinity,
        }
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtValuation::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        !matches!(self, ExtValuation::Finite(_))
    }

    /// Finite value, panicking on an infinity. Only for call sites whose
    /// inputs are nonzero by construction.
    pub fn expect_finite(self) -> i64 {
        self.finite().expect("valuation of a nonzero integer")
    }
}

impl From<i64> for ExtValuation {
    fn from(v: i64) -> Self {
        ExtValuation::Finite(v)
    }
}

impl PartialEq<i64> for ExtValuation {
    fn eq(&self, other: &i64) -> bool {
        *self == ExtValuation::Finite(*other)
    }
}

impl PartialOrd<i64> for ExtValuation {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&ExtValuation::Finite(*other)))
    }
}

impl Sub for ExtValuation {
    type Output = ExtValuation;

    fn sub(self, rhs: ExtValuation) -> ExtValuation {
        use ExtValuation::*;
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a - b),
            (PosInfinity, Finite(_)) | (PosInfinity, NegInfinity) => PosInfinity,
            (NegInfinity, Finite(_)) | (NegInfinity, PosInfinity) => NegInfinity,
            (Finite(_), PosInfinity) => NegInfinity,
            (Finite(_), NegInfinity) => PosInfinity,
            (a, b) => panic!("indeterminate difference {a} - {b}"),
        }
    }
}

impl Add<i64> for ExtValuation {
    type Output = ExtValuation;

    fn add(self, rhs: i64) -> ExtValuation {
        match self {
            ExtValuation::Finite(v) => ExtValuation::Finite(v + rhs),
            inf => inf,
        }
    }
}

impl Sub<i64> for ExtValuation {
    type Output = ExtValuation;

    fn sub(self, rhs: i64) -> ExtValuation {
        self - ExtValuation::Finite(rhs)
    }
}

impl fmt::Display for ExtValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValuation::NegInfinity => f.write_str("-inf"),
            ExtValuation::Finite(v) => write!(f, "{v}"),
            ExtValuation::PosInfinity => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtValuation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtValuation::Finite(v) => serializer.serialize_i64(*v),
            other => serializer.serialize_str(&other.to_string()),
        }
    }
}

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &SMALL_PRIMES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin with the first twelve prime bases: exact below 3.3·10^24,
/// probabilistic (and in practice reliable) above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime(small);
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for &a in &SMALL_PRIMES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p.to_string()))
    }
}

// ---------------------------------------------------------------------------
// Valuations
// ---------------------------------------------------------------------------

/// `ν_p(t)`: the exponent of the largest power of `p` dividing `t`, with
/// `ν_p(0) = -∞`. The sign of `t` is ignored.
pub fn nu_p(p: u64, t: impl Into<BigInt>) -> Result<ExtValuation> {
    require_prime(p)?;
    let t: BigInt = t.into();
    if t.is_zero() {
        return Ok(ExtValuation::NegInfinity);
    }
    let mut mag = t.magnitude().clone();
    let p_big = BigUint::from(p);
    let mut e = 0i64;
    loop {
        let (q, r) = mag.div_rem(&p_big);
        if !r.is_zero() {
            break;
        }
        mag = q;
        e += 1;
    }
    Ok(ExtValuation::Finite(e))
}

/// Valuation of a nonzero machine integer; `p` is assumed prime.
pub(crate) fn nu_u64(p: u64, mut t: u64) -> u32 {
    debug_assert!(t != 0);
    let mut e = 0;
    while t % p == 0 {
        t /= p;
        e += 1;
    }
    e
}

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

/// Prime factorization, primes ascending, exponents positive.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    pairs: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(BigUint, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.pairs.iter().map(|(p, _)| p)
    }

    pub fn value(&self) -> BigUint {
        self.pairs
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    /// Euler's totient of the factored integer.
    pub fn totient(&self) -> BigUint {
        self.pairs.iter().fold(BigUint::one(), |acc, (p, e)| {
            acc * p.pow(e - 1) * (p - BigUint::one())
        })
    }

    /// The pairs as machine integers; `None` if a prime exceeds 64 bits.
    pub fn to_u64_pairs(&self) -> Option<Vec<(u64, u32)>> {
        self.pairs
            .iter()
            .map(|(p, e)| p.to_u64().map(|p| (p, *e)))
            .collect()
    }

    fn from_primes(mut primes: Vec<BigUint>) -> Self {
        primes.sort();
        let mut pairs: Vec<(BigUint, u32)> = Vec::new();
        for p in primes {
            match pairs.last_mut() {
                Some((last, e)) if *last == p => *e += 1,
                _ => pairs.push((p, 1)),
            }
        }
        Factorization { pairs }
    }
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Factor `t ≥ 1`: trial division up to 10^6, then Pollard rho (Brent) on
/// whatever cofactor remains.
pub fn factorize(t: impl Into<BigInt>) -> Result<Factorization> {
    let t: BigInt = t.into();
    if t.sign() != Sign::Plus {
        return Err(Error::NonPositive(t.to_string()));
    }
    let mut rest = t.magnitude().clone();
    let mut primes = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let d_big = BigUint::from(d);
        if &d_big * &d_big > rest {
            break;
        }
        loop {
            let (q, r) = rest.div_rem(&d_big);
            if !r.is_zero() {
                break;
            }
            primes.push(d_big.clone());
            rest = q;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        split_large(rest, &mut primes);
    }
    Ok(Factorization::from_primes(primes))
}

/// Factorization of a machine integer as machine pairs.
pub fn factorize_u64(t: u64) -> Vec<(u64, u32)> {
    factorize(t)
        .expect("positive input")
        .to_u64_pairs()
        .expect("factors of a u64 fit in a u64")
}

fn split_large(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    let mut c = 1u64;
    let d = loop {
        if let Some(d) = brent_rho(&n, &BigUint::from(c)) {
            break d;
        }
        c += 1;
    };
    let other = &n / &d;
    split_large(d, out);
    split_large(other, out);
}

/// One run of Brent's variant of Pollard rho with `x -> x^2 + c`; `None` if
/// the run degenerates to the trivial divisor.
fn brent_rho(n: &BigUint, c: &BigUint) -> Option<BigUint> {
    let one = BigUint::one();
    let f = |x: &BigUint| (x * x + c) % n;
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    const BATCH: u64 = 128;
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g == one {
            ys = y.clone();
            for _ in 0..BATCH.min(r - k) {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += BATCH;
        }
        r *= 2;
    }
    if &g == n {
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if g != one {
                break;
            }
        }
    }
    if &g == n {
        None
    } else {
        Some(g)
    }
}

// ---------------------------------------------------------------------------
// Orders
// ---------------------------------------------------------------------------

/// Exact order of a group element given a multiple of it: start from the
/// multiple and strip prime factors while the element stays trivial.
pub fn order_by_stripping(
    multiple: &Factorization,
    mut is_identity_at: impl FnMut(&BigUint) -> bool,
) -> BigUint {
    let mut order = multiple.value();
    for (p, e) in multiple.pairs() {
        for _ in 0..*e {
            let candidate = &order / p;
            if is_identity_at(&candidate) {
                order = candidate;
            } else {
                break;
            }
        }
    }
    order
}

/// Multiplicative order of `u` modulo `t`.
pub fn unit_order(u: impl Into<BigInt>, t: impl Into<BigInt>) -> Result<BigUint> {
    let u: BigInt = u.into();
    let t: BigInt = t.into();
    if t.sign() != Sign::Plus {
        return Err(Error::NonPositive(t.to_string()));
    }
    let modulus = t.magnitude().clone();
    let u_red = u.mod_floor(&t).magnitude().clone();
    if !u_red.gcd(&modulus).is_one() {
        return Err(Error::NotAUnit {
            value: u.to_string(),
            modulus: t.to_string(),
        });
    }
    if modulus.is_one() {
        return Ok(BigUint::one());
    }
    let phi = factorize(factorize(t)?.totient())?;
    Ok(order_by_stripping(&phi, |k| {
        u_red.modpow(k, &modulus).is_one()
    }))
}

/// Multiplicative order modulo `t` for machine integers.
pub(crate) fn unit_order_u64(u: u64, t: u64) -> Result<u64> {
    Ok(unit_order(u, t)?.to_u64().expect("order below the modulus"))
}

// ---------------------------------------------------------------------------
// Z_{2^a}^* modulo a cyclic subgroup
// ---------------------------------------------------------------------------

/// `Z_{2^a}^*/⟨u⟩` as a product of cyclic groups (one or two factors, each a
/// power of two). Two factors means `⟨-1⟩ × ⟨5⟩` in that order; a factor of
/// order 1 is kept so the shape records which case applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoAdicQuotientShape {
    pub cyclic_factors: Vec<BigUint>,
}

impl TwoAdicQuotientShape {
    pub fn order(&self) -> BigUint {
        self.cyclic_factors.iter().product()
    }

    /// Invariant factors: trivial factors dropped, ascending.
    pub fn invariant_factors(&self) -> Vec<BigUint> {
        let mut v: Vec<BigUint> = self
            .cyclic_factors
            .iter()
            .filter(|f| !f.is_one())
            .cloned()
            .collect();
        v.sort();
        v
    }
}

fn check_two_adic_unit(u: &BigInt, a: u32) -> Result<()> {
    if a < 2 {
        return Err(Error::BadParams(format!("exponent a = {a} must be at least 2")));
    }
    if u.is_even() {
        return Err(Error::NotAUnit {
            value: u.to_string(),
            modulus: format!("2^{a}"),
        });
    }
    Ok(())
}

fn pow2(e: i64) -> BigUint {
    BigUint::one() << (e.max(0) as usize)
}

/// Structure of `Z_{2^a}^*/⟨u⟩` for odd `u ≠ -1`.
pub fn two_adic_quotient_shape(u: impl Into<BigInt>, a: u32) -> Result<TwoAdicQuotientShape> {
    let u: BigInt = u.into();
    check_two_adic_unit(&u, a)?;
    if u == BigInt::from(-1) {
        return Err(Error::ExcludedCase("u = -1".into()));
    }
    let a = a as i64;
    let v_minus = nu_p(2, &u - 1)?.abs();
    let factors = if v_minus >= 2 {
        let e = (v_minus - 2).min(ExtValuation::Finite(a - 2)).expect_finite();
        vec![BigUint::from(2u32), pow2(e)]
    } else {
        let v_plus = nu_p(2, &u + 1)?.abs();
        let e = (v_plus - 1).min(ExtValuation::Finite(a - 2)).expect_finite();
        vec![pow2(e)]
    };
    Ok(TwoAdicQuotientShape {
        cyclic_factors: factors,
    })
}

/// Order of the image of `h` in `Z_{2^a}^*/⟨u⟩`, both odd, `u ≠ -1`
/// (`h = -1` is allowed and handled through `|ν_2(0)| = ∞`).
pub fn two_adic_image_order(
    h: impl Into<BigInt>,
    u: impl Into<BigInt>,
    a: u32,
) -> Result<BigUint> {
    let h: BigInt = h.into();
    let u: BigInt = u.into();
    check_two_adic_unit(&u, a)?;
    check_two_adic_unit(&h, a)?;
    if u == BigInt::from(-1) {
        return Err(Error::ExcludedCase("u = -1".into()));
    }
    let a_ext = ExtValuation::Finite(a as i64);
    let zero = ExtValuation::Finite(0);
    let u_minus = nu_p(2, &u - 1)?.abs();
    let h_minus = nu_p(2, &h - 1)?.abs();
    let v = if u_minus >= 2 && h_minus >= 2 {
        (u_minus.min(a_ext) - h_minus).max(zero)
    } else if u_minus == 1 && h_minus >= 2 {
        let u_plus = nu_p(2, &u + 1)?;
        ((u_plus + 1).min(a_ext) - h_minus).max(zero)
    } else if u_minus >= 2 && h_minus == 1 {
        let h_plus = nu_p(2, &h + 1)?.abs();
        (u_minus.min(a_ext) - h_plus).max(ExtValuation::Finite(1))
    } else {
        let u_plus = nu_p(2, &u + 1)?;
        let h_plus = nu_p(2, &h + 1)?.abs();
        if h_plus == u_plus {
            zero
        } else {
            ((u_plus + 1).min(a_ext) - h_plus.min(u_plus)).max(zero)
        }
    };
    Ok(pow2(v.expect_finite()))
}

// ---------------------------------------------------------------------------
// Chinese remainder map
// ---------------------------------------------------------------------------

fn check_moduli(moduli: &[BigInt]) -> Result<()> {
    for (i, m) in moduli.iter().enumerate() {
        if m.sign() != Sign::Plus {
            return Err(Error::NonPositive(m.to_string()));
        }
        for other in &moduli[i + 1..] {
            if !m.gcd(other).is_one() {
                return Err(Error::NotCoprime(format!("gcd({m}, {other}) != 1")));
            }
        }
    }
    Ok(())
}

/// `x mod m_i` for each modulus, residues in `[0, m_i)`.
pub fn crt_decompose(x: impl Into<BigInt>, moduli: &[BigInt]) -> Result<Vec<BigInt>> {
    check_moduli(moduli)?;
    let x: BigInt = x.into();
    Ok(moduli.iter().map(|m| x.mod_floor(m)).collect())
}

/// The unique `x` in `[0, ∏ m_i)` with the given residues.
pub fn crt_compose(residues: &[BigInt], moduli: &[BigInt]) -> Result<BigInt> {
    check_moduli(moduli)?;
    if residues.len() != moduli.len() {
        return Err(Error::BadParams(format!(
            "{} residues for {} moduli",
            residues.len(),
            moduli.len()
        )));
    }
    let mut x = BigInt::zero();
    let mut modulus = BigInt::one();
    for (r, m) in residues.iter().zip(moduli) {
        // Solve x + modulus·t ≡ r (mod m).
        let inv = modulus
            .extended_gcd(m)
            .x
            .mod_floor(m);
        let t = ((r - &x).mod_floor(m) * inv).mod_floor(m);
        x += &modulus * t;
        modulus *= m;
        x = x.mod_floor(&modulus);
    }
    Ok(x)
}

/// Positive machine-integer gcd, with `gcd(0, t) = t`.
pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// `ν_p(t)` read off the residue of `t` modulo `p^cap`: `PosInfinity` when
/// `p^cap | t`, otherwise the (lift-independent) finite valuation below `cap`.
pub(crate) fn capped_nu(p: u64, t: i128, cap: u32) -> ExtValuation {
    let modulus = (p as i128).pow(cap);
    let residue = t.rem_euclid(modulus);
    if residue == 0 {
        ExtValuation::PosInfinity
    } else {
        ExtValuation::Finite(nu_u64(p, residue as u64) as i64)
    }
}
