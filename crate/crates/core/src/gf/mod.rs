//! Finite fields.
//!
//! [`FieldCtx`] is `GF(p^k)` presented as `Z_p[X]/(f)` with a primitive
//! modulus `f`, so the class of `X` generates the unit group. [`ExtField`] is
//! a tower `GF(q^e) = GF(q)[Y]/(F)` over a `FieldCtx`; the constants of the
//! tower are the embedded copy of `GF(q)`. [`RootData`] pins the primitive
//! `rn`-th root of unity `ω` with `ω^n = λ` that every splitting and code is
//! expressed against.
//!
//! Elements are plain values (`u64` packed indices for `GF(p^k)`, coordinate
//! vectors for towers) and all arithmetic goes through the field context.
//! [`FieldElement`] bundles an element with its context for callers that
//! want mismatches reported instead of assumed away.

mod element;
mod prime_power;
mod root;
mod tower;

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::Result;

pub use element::{element_order, FieldElement};
pub use prime_power::{prime_power_decomposition, FieldCtx};
pub(crate) use root::check_family;
pub use root::{root_data, RootData};
pub use tower::ExtField;

/// Arithmetic in a finite field.
pub trait Field: Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `DivByZero` for zero.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn characteristic(&self) -> u64;
    /// Number of elements.
    fn size(&self) -> BigUint;
    /// Image of an integer under `Z -> GF(p) ⊂ self`.
    fn from_int(&self, v: i64) -> Self::Elem;
    /// Packed index in `[0, size)`: little-endian base-`p` (or base-`q` for a
    /// tower) digits of the coordinate vector.
    fn to_index(&self, a: &Self::Elem) -> BigUint;
    fn from_index(&self, index: &BigUint) -> Option<Self::Elem>;
    /// Whether `other` describes the same field presentation.
    fn same_field(&self, other: &Self) -> bool;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    /// Square-and-multiply with an arbitrary precision exponent.
    fn pow(&self, a: &Self::Elem, exp: &BigUint) -> Self::Elem {
        if exp.is_zero() {
            return self.one();
        }
        let mut acc = self.one();
        for i in (0..exp.bits()).rev() {
            acc = self.square(&acc);
            if exp.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    fn pow_u64(&self, a: &Self::Elem, exp: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.square(&base);
            }
        }
        acc
    }

    /// `a^exp` for a signed exponent; negative powers of zero are an error.
    fn pow_i64(&self, a: &Self::Elem, exp: i64) -> Result<Self::Elem> {
        if exp >= 0 {
            Ok(self.pow_u64(a, exp as u64))
        } else {
            Ok(self.pow_u64(&self.inv(a)?, exp.unsigned_abs()))
        }
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `size - 1` as a big integer: the order of the unit group.
    fn unit_group_order(&self) -> BigUint {
        self.size() - BigUint::one()
    }
}
