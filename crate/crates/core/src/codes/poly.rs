//! Dense univariate polynomials over a [`Field`].

use num_bigint::BigUint;

use crate::gf::Field;
use crate::{Error, Result};

/// Coefficients, constant term first, with no trailing zeros; the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    /// Coefficient of `X^i` if stored (absent means zero).
    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

/// Polynomial arithmetic over a borrowed field.
#[derive(Debug, Clone, Copy)]
pub struct PolyRing<'a, F: Field> {
    field: &'a F,
}

impl<'a, F: Field> PolyRing<'a, F> {
    pub fn new(field: &'a F) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &'a F {
        self.field
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero(&self) -> Poly<F::Elem> {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    /// `c·X^d`.
    pub fn monomial(&self, c: F::Elem, d: usize) -> Poly<F::Elem> {
        let mut coeffs = vec![self.field.zero(); d + 1];
        coeffs[d] = c;
        self.from_coeffs(coeffs)
    }

    pub fn x(&self) -> Poly<F::Elem> {
        self.monomial(self.field.one(), 1)
    }

    /// `X - a`.
    pub fn linear(&self, a: &F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![self.field.neg(a), self.field.one()])
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let f = self.field;
        let n = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => f.add(x, y),
                (Some(x), None) | (None, Some(x)) => x.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        self.from_coeffs(coeffs)
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|x| self.field.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let f = self.field;
        let mut out = vec![f.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }

    /// Euclidean division: `a = q·b + r` with `deg r < deg b`.
    pub fn divmod(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> Result<(Poly<F::Elem>, Poly<F::Elem>)> {
        let f = self.field;
        let db = b.degree().ok_or(Error::DivByZero)?;
        let lead_inv = f.inv(b.leading().expect("nonzero divisor"))?;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((self.zero(), self.from_coeffs(rem)));
        }
        let mut quot = vec![f.zero(); rem.len() - db];
        for i in (db..rem.len()).rev() {
            if f.is_zero(&rem[i]) {
                continue;
            }
            let c = f.mul(&rem[i], &lead_inv);
            for (j, bj) in b.coeffs.iter().enumerate() {
                let idx = i - db + j;
                rem[idx] = f.sub(&rem[idx], &f.mul(&c, bj));
            }
            quot[i - db] = c;
        }
        rem.truncate(db);
        Ok((self.from_coeffs(quot), self.from_coeffs(rem)))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        Ok(self.divmod(a, b)?.1)
    }

    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.leading() {
            None => self.zero(),
            Some(lead) => {
                let inv = self.field.inv(lead).expect("leading coefficient is nonzero");
                self.scale(a, &inv)
            }
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
    pub fn inverse_mod(&self, a: &Poly<F::Elem>, m: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
        // Invariant: r0 ≡ s0·a, r1 ≡ s1·a (mod m).
        let (mut r0, mut r1) = (m.clone(), self.rem(a, m).ok()?);
        let (mut s0, mut s1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divmod(&r0, &r1).ok()?;
            let s = self.sub(&s0, &self.mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.degree() != Some(0) {
            return None;
        }
        let inv = self.field.inv(&r0.coeffs[0]).ok()?;
        self.rem(&self.scale(&s0, &inv), m).ok()
    }

    /// Horner evaluation.
    pub fn eval(&self, a: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        let f = self.field;
        a.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn mul_mod(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
        m: &Poly<F::Elem>,
    ) -> Poly<F::Elem> {
        self.rem(&self.mul(a, b), m).expect("nonzero modulus")
    }

    /// `base^exp mod m`.
    pub fn pow_mod(&self, base: &Poly<F::Elem>, exp: &BigUint, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let base = self.rem(base, m).expect("nonzero modulus");
        let mut acc = self.rem(&self.one(), m).expect("nonzero modulus");
        for i in (0..exp.bits()).rev() {
            acc = self.mul_mod(&acc, &acc, m);
            if exp.bit(i) {
                acc = self.mul_mod(&acc, &base, m);
            }
        }
        acc
    }

    /// Ben-Or irreducibility test: `f` of degree `d ≥ 1` is irreducible iff
    /// `gcd(X^{Q^i} - X, f) = 1` for `1 ≤ i ≤ d/2`, `Q` the field size.
    ///
    /// `h -> h^Q` is linear over the coefficient field. Most reducible inputs
    /// fail within a few steps, so powering is used first and a `d × d`
    /// matrix of `X^{jQ} mod f` only once a candidate survives them.
    pub fn is_irreducible(&self, f: &Poly<F::Elem>) -> bool {
        const POWERING_STEPS: usize = 4;
        let d = match f.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(d) => d,
        };
        let field = self.field;
        let size = field.size();
        let x = self.x();
        let x_q = self.pow_mod(&x, &size, f);
        let mut frobenius: Vec<Vec<F::Elem>> = Vec::new();
        let mut h = x_q.clone();
        for i in 1..=d / 2 {
            if i > 1 && i <= POWERING_STEPS {
                h = self.pow_mod(&h, &size, f);
            } else if i > POWERING_STEPS {
                if frobenius.is_empty() {
                    let mut power = self.one();
                    for _ in 0..d {
                        let mut column = power.coeffs.clone();
                        column.resize(d, field.zero());
                        frobenius.push(column);
                        power = self.mul_mod(&power, &x_q, f);
                    }
                }
                let mut next = vec![field.zero(); d];
                for (c, column) in h.coeffs.iter().zip(&frobenius) {
                    if field.is_zero(c) {
                        continue;
                    }
                    for (n, v) in next.iter_mut().zip(column) {
                        *n = field.add(n, &field.mul(c, v));
                    }
                }
                h = self.from_coeffs(next);
            }
            let g = self.gcd(&self.sub(&h, &x), f);
            if g.degree() != Some(0) {
                return false;
            }
        }
        true
    }
}
