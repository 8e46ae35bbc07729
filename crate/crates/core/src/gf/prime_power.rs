use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::Field;
use crate::codes::{Poly, PolyRing};
use crate::valuations::{factorize, is_prime, order_by_stripping, pow_mod_u64, Factorization};
use crate::{Error, Result};

/// Fields up to this size get log/antilog tables.
const TABLE_LIMIT: u64 = 1 << 20;
/// Odd non-prime fields up to this size get addition and negation tables.
const ADD_TABLE_LIMIT: u64 = 1 << 10;

/// `GF(p^k)` as `Z_p[X]/(f)` with a primitive modulus `f`.
///
/// The modulus is the first monic polynomial of degree `k` whose root
/// generates the unit group, in the order given by reading the coefficient
/// vector `(c_0, ..., c_{k-1})` as a little-endian base-`p` number. The
/// generator is the class of `X`. For `k = 1` the generator is the smallest
/// primitive root `g` and the modulus is `X - g`. Elements are `u64` packed indices: the
/// same little-endian base-`p` reading of the reduced coefficient vector.
#[derive(Clone)]
pub struct FieldCtx {
    p: u64,
    k: usize,
    size: u64,
    /// Monic, `k + 1` coefficients, constant term first.
    modulus: Vec<u64>,
    generator: u64,
    unit_factors: Factorization,
    powers_of_p: Vec<u64>,
    tables: Option<LogTables>,
    /// `add[a * size + b]` and `neg[a]`, for odd `p` and `k > 1`.
    digit_tables: Option<(Vec<u32>, Vec<u32>)>,
}

#[derive(Clone)]
struct LogTables {
    /// `exp[i] = g^i` for `0 ≤ i < 2(size - 1)`.
    exp: Vec<u64>,
    /// `log[x]` for nonzero `x`.
    log: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// The canonical presentation of `GF(p^k)`.
    pub fn new(p: u64, k: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        if k == 0 {
            return Err(Error::BadParams("extension degree must be at least 1".into()));
        }
        let size = u32::try_from(k)
            .ok()
            .and_then(|k| p.checked_pow(k))
            .filter(|&s| s < (1 << 62))
            .ok_or_else(|| Error::BadParams(format!("{p}^{k} exceeds the supported field size")))?;
        let unit_factors = factorize(size - 1)?;
        let powers_of_p: Vec<u64> = (0..k as u32).map(|i| p.pow(i)).collect();

        let (modulus, generator) = if k == 1 {
            let g = primitive_root(p, &unit_factors);
            (vec![(p - g) % p, 1], g)
        } else {
            let prime = FieldCtx::new(p, 1)?;
            let modulus = first_primitive_modulus(&prime, k, &unit_factors);
            (modulus, p)
        };

        let mut ctx = FieldCtx {
            p,
            k,
            size,
            modulus,
            generator,
            unit_factors,
            powers_of_p,
            tables: None,
            digit_tables: None,
        };
        if size <= TABLE_LIMIT {
            ctx.tables = Some(ctx.build_tables());
        }
        if k > 1 && p != 2 && size <= ADD_TABLE_LIMIT {
            let add = (0..size * size)
                .map(|i| ctx.add_digits(i / size, i % size) as u32)
                .collect();
            let neg = (0..size).map(|a| ctx.neg_digits(a) as u32).collect();
            ctx.digit_tables = Some((add, neg));
        }
        Ok(ctx)
    }

    /// Digitwise sum of packed indices.
    fn add_digits(&self, mut a: u64, mut b: u64) -> u64 {
        let mut out = 0;
        for w in &self.powers_of_p {
            out += (a % self.p + b % self.p) % self.p * w;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    fn neg_digits(&self, mut a: u64) -> u64 {
        let mut out = 0;
        for w in &self.powers_of_p {
            out += (self.p - a % self.p) % self.p * w;
            a /= self.p;
        }
        out
    }

    /// `GF(q)` for a prime power `q`.
    pub fn for_prime_power(q: u64) -> Result<Self> {
        let (p, k) = prime_power_decomposition(q)
            .ok_or_else(|| Error::BadParams(format!("{q} is not a prime power")))?;
        FieldCtx::new(p, k)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.size
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    /// Factorization of `p^k - 1`.
    pub fn unit_factors(&self) -> &Factorization {
        &self.unit_factors
    }

    /// Whether the modulus passes the Ben-Or irreducibility test over `Z_p`.
    pub fn modulus_is_irreducible(&self) -> bool {
        if self.k == 1 {
            return true;
        }
        let prime = FieldCtx::new(self.p, 1).expect("prime field");
        let ring = PolyRing::new(&prime);
        ring.is_irreducible(&ring.from_coeffs(self.modulus.clone()))
    }

    /// Coefficients of an element, constant term first, length `k`.
    pub fn coefficients(&self, a: u64) -> Vec<u64> {
        let mut a = a;
        (0..self.k)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    pub fn from_coefficients(&self, coeffs: &[u64]) -> u64 {
        coeffs
            .iter()
            .zip(&self.powers_of_p)
            .map(|(c, w)| (c % self.p) * w)
            .sum()
    }

    /// Discrete logarithm with respect to the generator, when tables exist.
    pub fn log(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        match &self.tables {
            Some(t) => Some(t.log[a as usize] as u64),
            None => None,
        }
    }

    fn build_tables(&self) -> LogTables {
        let units = (self.size - 1) as usize;
        let mut exp = Vec::with_capacity(2 * units);
        let mut log = vec![0u32; self.size as usize];
        let mut x = 1u64;
        for i in 0..units {
            exp.push(x);
            log[x as usize] = i as u32;
            x = self.mul_slow(x, self.generator);
        }
        debug_assert_eq!(x, 1, "generator must have full order");
        exp.extend_from_within(0..units);
        LogTables { exp, log }
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return ((a as u128 * b as u128) % self.p as u128) as u64;
        }
        let (ca, cb) = (self.coefficients(a), self.coefficients(b));
        let p = self.p as u128;
        let mut prod = vec![0u128; 2 * self.k - 1];
        for (i, x) in ca.iter().enumerate() {
            for (j, y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + *x as u128 * *y as u128) % p;
            }
        }
        for i in (self.k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..self.k {
                let idx = i - self.k + j;
                prod[idx] = (prod[idx] + c * (p - self.modulus[j] as u128)) % p;
            }
        }
        let coeffs: Vec<u64> = prod[..self.k].iter().map(|&c| c as u64).collect();
        self.from_coefficients(&coeffs)
    }
}

impl Field for FieldCtx {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        if self.k == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        if self.p == 2 {
            return a ^ b;
        }
        match &self.digit_tables {
            Some((add, _)) => add[(a * self.size + b) as usize] as u64,
            None => self.add_digits(*a, *b),
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if self.k == 1 {
            return if *a == 0 { 0 } else { self.p - a };
        }
        if self.p == 2 {
            return *a;
        }
        match &self.digit_tables {
            Some((_, neg)) => neg[*a as usize] as u64,
            None => self.neg_digits(*a),
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => t.exp[(t.log[*a as usize] + t.log[*b as usize]) as usize],
            None => self.mul_slow(*a, *b),
        }
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivByZero);
        }
        Ok(match &self.tables {
            Some(t) => {
                let units = self.size - 1;
                t.exp[((units - t.log[*a as usize] as u64) % units) as usize]
            }
            None => self.pow_u64(a, self.size - 2),
        })
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn size(&self) -> BigUint {
        BigUint::from(self.size)
    }

    fn from_int(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn to_index(&self, a: &u64) -> BigUint {
        BigUint::from(*a)
    }

    fn from_index(&self, index: &BigUint) -> Option<u64> {
        index.to_u64().filter(|&i| i < self.size)
    }

    fn same_field(&self, other: &Self) -> bool {
        self == other
    }
}

/// `(p, k)` with `q = p^k`, if `q` is a prime power.
pub fn prime_power_decomposition(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let f = factorize(q).ok()?.to_u64_pairs()?;
    match f.as_slice() {
        [(p, k)] => Some((*p, *k as usize)),
        _ => None,
    }
}

fn primitive_root(p: u64, unit_factors: &Factorization) -> u64 {
    if p == 2 {
        return 1;
    }
    let primes: Vec<u64> = unit_factors
        .to_u64_pairs()
        .expect("machine-sized factors")
        .into_iter()
        .map(|(t, _)| t)
        .collect();
    (2..p)
        .find(|&g| primes.iter().all(|t| pow_mod_u64(g, (p - 1) / t, p) != 1))
        .expect("every prime field has a primitive root")
}

fn first_primitive_modulus(prime: &FieldCtx, k: usize, unit_factors: &Factorization) -> Vec<u64> {
    let p = prime.p;
    let ring = PolyRing::new(prime);
    let x = ring.x();
    let full_order = unit_factors.value();
    (0..p.pow(k as u32))
        .filter(|t| t % p != 0)
        .map(|t| {
            let mut coeffs = prime_digits(t, p, k);
            coeffs.push(1);
            coeffs
        })
        .find(|coeffs| {
            let f: Poly<u64> = ring.from_coeffs(coeffs.clone());
            if !ring.pow_mod(&x, &full_order, &f).coeffs().eq(&[1]) {
                return false;
            }
            let order = order_by_stripping(unit_factors, |e| ring.pow_mod(&x, e, &f).coeffs() == [1]);
            order == full_order && ring.is_irreducible(&f)
        })
        .expect("a primitive polynomial exists in every degree")
}

fn prime_digits(mut t: u64, p: u64, k: usize) -> Vec<u64> {
    (0..k)
        .map(|_| {
            let d = t % p;
            t /= p;
            d
        })
        .collect()
}
