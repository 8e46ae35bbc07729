use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use super::linalg::{self, Matrix};
use super::Poly;
use crate::gf::{Field, FieldCtx};
use crate::{Error, Result};

/// How a code was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Constacyclic,
    Grs,
    SubfieldSubcode,
    Dual,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Constacyclic => "constacyclic",
            Provenance::Grs => "grs",
            Provenance::SubfieldSubcode => "subfield-subcode",
            Provenance::Dual => "dual",
        })
    }
}

/// Polynomial description of a `λ`-constacyclic code of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstacyclicData<E> {
    pub lambda: E,
    pub generator_poly: Poly<E>,
    pub check_poly: Poly<E>,
    /// `{i ∈ 1 + rZ_rn : ω^i is a root of g}`, sorted.
    pub zero_exponents: Vec<u64>,
}

/// Minimum distance as far as it is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    /// Computed by enumerating all codewords.
    Exact(usize),
    /// Proven from a lower bound meeting the Singleton bound.
    Certified(usize),
    /// The zero code.
    Undefined,
}

impl Distance {
    pub fn value(&self) -> Option<usize> {
        match self {
            Distance::Exact(d) | Distance::Certified(d) => Some(*d),
            Distance::Undefined => None,
        }
    }
}

/// A linear `[n, k]` code given by a full-rank generator matrix.
#[derive(Debug, Clone)]
pub struct LinearCode<F: Field> {
    field: Arc<F>,
    n: usize,
    generator: Matrix<F::Elem>,
    provenance: Provenance,
    constacyclic: Option<ConstacyclicData<F::Elem>>,
}

impl<F: Field> LinearCode<F> {
    /// A code with the given generator rows, which must be independent.
    pub fn new(field: Arc<F>, n: usize, generator: Matrix<F::Elem>, provenance: Provenance) -> Result<Self> {
        if let Some(bad) = generator.iter().find(|row| row.len() != n) {
            return Err(Error::DimMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        let rank = linalg::rank(&*field, &generator, n);
        if rank != generator.len() {
            return Err(Error::DimMismatch {
                expected: generator.len(),
                found: rank,
            });
        }
        Ok(LinearCode {
            field,
            n,
            generator,
            provenance,
            constacyclic: None,
        })
    }

    /// The code spanned by arbitrary rows (a basis is extracted).
    pub fn spanned_by(field: Arc<F>, n: usize, rows: &[Vec<F::Elem>], provenance: Provenance) -> Self {
        let (basis, _) = linalg::rref(&*field, rows, n);
        LinearCode {
            field,
            n,
            generator: basis,
            provenance,
            constacyclic: None,
        }
    }

    pub(crate) fn with_constacyclic(mut self, data: ConstacyclicData<F::Elem>) -> Self {
        self.constacyclic = Some(data);
        self
    }

    pub fn field(&self) -> &Arc<F> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.len()
    }

    pub fn generator(&self) -> &Matrix<F::Elem> {
        &self.generator
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn constacyclic(&self) -> Option<&ConstacyclicData<F::Elem>> {
        self.constacyclic.as_ref()
    }

    pub fn encode(&self, message: &[F::Elem]) -> Vec<F::Elem> {
        linalg::combine(&*self.field, message, &self.generator, self.n)
    }

    pub fn contains(&self, word: &[F::Elem]) -> bool {
        self.spans_with(&[word.to_vec()])
    }

    /// Whether adding `rows` to the generator keeps the rank at `k`; the
    /// generator is full rank, so its own rank need not be recomputed.
    fn spans_with(&self, rows: &[Vec<F::Elem>]) -> bool {
        let mut stacked = self.generator.clone();
        stacked.extend_from_slice(rows);
        linalg::rank(&*self.field, &stacked, self.n) == self.k()
    }

    /// Row-space equality.
    pub fn same_code(&self, other: &Self) -> bool {
        self.n == other.n
            && self.k() == other.k()
            && self.field.same_field(&other.field)
            && self.spans_with(&other.generator)
    }

    pub fn is_subcode_of(&self, other: &Self) -> bool {
        self.n == other.n && self.field.same_field(&other.field) && other.spans_with(&self.generator)
    }

    /// A generator matrix of the Euclidean dual.
    pub fn parity_check(&self) -> Matrix<F::Elem> {
        linalg::null_space(&*self.field, &self.generator, self.n)
    }

    /// The Euclidean dual code.
    pub fn dual(&self) -> Self {
        LinearCode {
            field: Arc::clone(&self.field),
            n: self.n,
            generator: self.parity_check(),
            provenance: Provenance::Dual,
            constacyclic: None,
        }
    }

    /// `2k = n` and `G·G^T = 0`.
    pub fn is_self_dual(&self) -> bool {
        let f = &*self.field;
        2 * self.k() == self.n
            && self
                .generator
                .iter()
                .all(|a| self.generator.iter().all(|b| f.is_zero(&linalg::dot(f, a, b))))
    }
}

pub fn dual_code<F: Field>(code: &LinearCode<F>) -> LinearCode<F> {
    code.dual()
}

pub fn is_self_dual<F: Field>(code: &LinearCode<F>) -> bool {
    code.is_self_dual()
}

pub fn weight<F: Field>(field: &F, word: &[F::Elem]) -> usize {
    word.iter().filter(|x| !field.is_zero(x)).count()
}

impl LinearCode<FieldCtx> {
    /// JSON summary with element values as packed indices.
    pub fn to_json(&self, distance: Distance) -> Value {
        let mut out = json!({
            "q": self.field.order(),
            "n": self.n,
            "k": self.k(),
            "provenance": self.provenance.to_string(),
        });
        let obj = out.as_object_mut().expect("object");
        match distance {
            Distance::Exact(d) => {
                obj.insert("d".into(), json!(d));
            }
            Distance::Certified(d) => {
                obj.insert("d_certified".into(), json!(d));
            }
            Distance::Undefined => {
                obj.insert("d".into(), json!("UNDEFINED"));
            }
        }
        if let Some(c) = &self.constacyclic {
            obj.insert("lambda_index".into(), json!(c.lambda));
            obj.insert("generator_poly".into(), json!(c.generator_poly.coeffs()));
            obj.insert("zeros".into(), json!(c.zero_exponents));
        }
        out
    }
}
