use std::sync::Arc;

use num_bigint::BigUint;

use super::Field;
use crate::valuations::{factorize, order_by_stripping};
use crate::{Error, Result};

/// An element together with its field; binary operations check that both
/// operands come from the same field.
#[derive(Debug, Clone)]
pub struct FieldElement<F: Field> {
    field: Arc<F>,
    value: F::Elem,
}

impl<F: Field> PartialEq for FieldElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.compatible(other) && self.value == other.value
    }
}

impl<F: Field> FieldElement<F> {
    pub fn new(field: Arc<F>, value: F::Elem) -> Self {
        FieldElement { field, value }
    }

    pub fn from_index(field: Arc<F>, index: &BigUint) -> Option<Self> {
        let value = field.from_index(index)?;
        Some(FieldElement { field, value })
    }

    pub fn field(&self) -> &Arc<F> {
        &self.field
    }

    pub fn value(&self) -> &F::Elem {
        &self.value
    }

    pub fn into_value(self) -> F::Elem {
        self.value
    }

    pub fn index(&self) -> BigUint {
        self.field.to_index(&self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.value)
    }

    fn compatible(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field.same_field(&other.field)
    }

    fn with(&self, value: F::Elem) -> Self {
        FieldElement {
            field: Arc::clone(&self.field),
            value,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.compatible(other) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.add(&self.value, &other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.sub(&self.value, &other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.mul(&self.value, &other.value)))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.div(&self.value, &other.value)?))
    }

    pub fn neg(&self) -> Self {
        self.with(self.field.neg(&self.value))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.with(self.field.inv(&self.value)?))
    }

    pub fn pow(&self, exp: &BigUint) -> Self {
        self.with(self.field.pow(&self.value, exp))
    }

    pub fn order(&self) -> Result<BigUint> {
        element_order(&*self.field, &self.value)
    }
}

/// Multiplicative order of a nonzero element.
pub fn element_order<F: Field>(field: &F, x: &F::Elem) -> Result<BigUint> {
    if field.is_zero(x) {
        return Err(Error::ZeroElement);
    }
    let units = factorize(field.unit_group_order())?;
    Ok(order_by_stripping(&units, |k| field.is_one(&field.pow(x, k))))
}
