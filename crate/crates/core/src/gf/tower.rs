use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::{Field, FieldCtx};
use crate::codes::PolyRing;
use crate::{Error, Result};

/// Prime bases below this bound multiply coordinates with delayed reduction.
const LAZY_PRIME_LIMIT: u64 = 1 << 20;

/// `GF(q^e) = GF(q)[Y]/(F)` over a [`FieldCtx`] `GF(q)`.
///
/// `F` is the first monic irreducible of degree `e` when coefficient vectors
/// are read as little-endian base-`q` numbers over the packed indices of
/// `GF(q)`. Elements are coordinate vectors of length `e` (constant first)
/// and `GF(q)` sits inside as the constants.
#[derive(Clone)]
pub struct ExtField {
    base: Arc<FieldCtx>,
    e: usize,
    /// Monic, `e + 1` coefficients, constant term first.
    modulus: Vec<u64>,
    /// `p - F_j` for the lazy prime-base path.
    neg_modulus: Vec<u64>,
    lazy: bool,
}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtField")
            .field("q", &self.base.order())
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl ExtField {
    pub fn new(base: Arc<FieldCtx>, e: usize) -> Result<Self> {
        if e == 0 {
            return Err(Error::BadParams("extension degree must be at least 1".into()));
        }
        let modulus = first_irreducible(&base, e);
        let lazy = base.degree() == 1 && base.p() < LAZY_PRIME_LIMIT;
        let neg_modulus = modulus.iter().map(|&c| base.neg(&c)).collect();
        Ok(ExtField {
            base,
            e,
            modulus,
            neg_modulus,
            lazy,
        })
    }

    pub fn base(&self) -> &Arc<FieldCtx> {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The constant `c ∈ GF(q)`.
    pub fn embed(&self, c: u64) -> Vec<u64> {
        let mut v = vec![0; self.e];
        v[0] = c;
        v
    }

    /// The `GF(q)` value of `x` if `x` is a constant.
    pub fn as_base(&self, x: &[u64]) -> Option<u64> {
        x[1..].iter().all(|&c| c == 0).then_some(x[0])
    }

    /// `x -> x^q`.
    pub fn frobenius(&self, x: &Vec<u64>) -> Vec<u64> {
        self.pow_u64(x, self.base.order())
    }

    /// Whether `x` lies in `GF(q^d)`, i.e. `x^{q^d} = x`.
    pub fn subfield_test(&self, x: &Vec<u64>, d: usize) -> Result<bool> {
        if d == 0 || self.e % d != 0 {
            return Err(Error::BadSubfield { d, e: self.e });
        }
        let mut y = x.clone();
        for _ in 0..d {
            y = self.frobenius(&y);
        }
        Ok(y == *x)
    }

    /// Product as a raw polynomial of degree `< 2e - 1`, then reduced.
    fn mul_generic(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = &*self.base;
        let e = self.e;
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = f.add(&prod[i + j], &f.mul(x, y));
            }
        }
        for i in (e..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..e {
                let idx = i - e + j;
                prod[idx] = f.add(&prod[idx], &f.mul(&c, &self.neg_modulus[j]));
            }
        }
        prod.truncate(e);
        prod
    }

    fn mul_lazy(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.base.p();
        let e = self.e;
        // Terms are below 2^40 and at most 2e of them land on one slot.
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        for i in (e..prod.len()).rev() {
            let c = prod[i] % p;
            if c == 0 {
                continue;
            }
            for j in 0..e {
                prod[i - e + j] += c * self.neg_modulus[j];
            }
        }
        prod.truncate(e);
        for c in &mut prod {
            *c %= p;
        }
        prod
    }
}

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        self.e == other.e && self.modulus == other.modulus && self.base == other.base
    }
}

impl Eq for ExtField {}

impl Field for ExtField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.e]
    }

    fn one(&self) -> Vec<u64> {
        self.embed(1)
    }

    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        if self.e == 1 {
            return vec![self.base.mul(&a[0], &b[0])];
        }
        if self.lazy {
            self.mul_lazy(a, b)
        } else {
            self.mul_generic(a, b)
        }
    }

    fn inv(&self, a: &Vec<u64>) -> Result<Vec<u64>> {
        if self.is_zero(a) {
            return Err(Error::DivByZero);
        }
        if self.e == 1 {
            return Ok(vec![self.base.inv(&a[0])?]);
        }
        let ring = PolyRing::new(&*self.base);
        let m = ring.from_coeffs(self.modulus.clone());
        let inv = ring
            .inverse_mod(&ring.from_coeffs(a.clone()), &m)
            .expect("nonzero elements are invertible modulo an irreducible");
        let mut v = inv.into_coeffs();
        v.resize(self.e, 0);
        Ok(v)
    }

    fn characteristic(&self) -> u64 {
        self.base.p()
    }

    fn size(&self) -> BigUint {
        BigUint::from(self.base.order()).pow(self.e as u32)
    }

    fn from_int(&self, v: i64) -> Vec<u64> {
        self.embed(self.base.from_int(v))
    }

    fn to_index(&self, a: &Vec<u64>) -> BigUint {
        let q = BigUint::from(self.base.order());
        a.iter()
            .rev()
            .fold(BigUint::zero(), |acc, &c| acc * &q + BigUint::from(c))
    }

    fn from_index(&self, index: &BigUint) -> Option<Vec<u64>> {
        if *index >= self.size() {
            return None;
        }
        let q = BigUint::from(self.base.order());
        let mut rest = index.clone();
        let mut v = Vec::with_capacity(self.e);
        for _ in 0..self.e {
            v.push((&rest % &q).to_u64().expect("digit below q"));
            rest /= &q;
        }
        Some(v)
    }

    fn same_field(&self, other: &Self) -> bool {
        self == other
    }
}

/// First monic irreducible of degree `e` over `base` in coefficient order.
fn first_irreducible(base: &FieldCtx, e: usize) -> Vec<u64> {
    let q = base.order();
    let ring = PolyRing::new(base);
    let mut low = vec![0u64; e];
    loop {
        let mut coeffs = low.clone();
        coeffs.push(1);
        if (e == 1 || coeffs[0] != 0) && ring.is_irreducible(&ring.from_coeffs(coeffs.clone())) {
            return coeffs;
        }
        // Odometer, constant term fastest.
        let mut i = 0;
        loop {
            low[i] += 1;
            if low[i] < q {
                break;
            }
            low[i] = 0;
            i += 1;
            assert!(i < e, "irreducible polynomials exist in every degree");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tower(q: u64, e: usize) -> ExtField {
        ExtField::new(Arc::new(FieldCtx::for_prime_power(q).unwrap()), e).unwrap()
    }

    #[test]
    fn degree_one_is_the_base() {
        let t = tower(19, 1);
        assert_eq!(t.modulus(), &[0, 1]);
        assert_eq!(t.mul(&vec![5], &vec![4]), vec![1]);
        assert_eq!(t.inv(&vec![2]).unwrap(), vec![10]);
    }

    #[test]
    fn gf25_over_gf5() {
        let t = tower(5, 2);
        // X^2 + 2 is the first irreducible quadratic over GF(5).
        assert_eq!(t.modulus(), &[2, 0, 1]);
        let y = vec![0, 1];
        assert_eq!(t.mul(&y, &y), vec![3, 0]);
        for idx in 1..25u32 {
            let x = t.from_index(&BigUint::from(idx)).unwrap();
            assert_eq!(t.mul(&x, &t.inv(&x).unwrap()), t.one());
            assert_eq!(t.to_index(&x), BigUint::from(idx));
        }
    }

    #[test]
    fn lazy_and_generic_agree() {
        let t = tower(7, 9);
        assert!(t.lazy);
        let mut x = vec![3, 1, 4, 1, 5, 2, 6, 0, 1];
        let y = vec![6, 6, 0, 2, 1, 3, 5, 4, 2];
        for _ in 0..50 {
            assert_eq!(t.mul_lazy(&x, &y), t.mul_generic(&x, &y));
            x = t.mul_lazy(&x, &y);
        }
    }

    #[test]
    fn subfields_and_frobenius() {
        let t = tower(4, 6);
        let c = t.embed(3);
        assert!(t.subfield_test(&c, 1).unwrap());
        let y = vec![0, 1, 0, 0, 0, 0];
        assert!(!t.subfield_test(&y, 1).unwrap());
        assert!(!t.subfield_test(&y, 3).unwrap());
        assert!(t.subfield_test(&y, 6).unwrap());
        // Norm-like power lands in the subfield GF(4^2).
        let z = t.pow(&y, &((t.size() - 1u32) / BigUint::from(15u32)));
        assert!(t.subfield_test(&z, 2).unwrap());
        assert_eq!(t.subfield_test(&y, 4), Err(Error::BadSubfield { d: 4, e: 6 }));
        assert_eq!(t.frobenius(&c), c);
    }

    #[test]
    fn nonprime_base() {
        let t = tower(9, 3);
        assert!(!t.lazy);
        let x = vec![2, 7, 1];
        let units = t.unit_group_order();
        assert_eq!(t.pow(&x, &units), t.one());
    }
}
