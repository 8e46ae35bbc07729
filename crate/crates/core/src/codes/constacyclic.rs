//! Constacyclic codes in `GF(q)[X]/(X^n - λ)` from unions of cyclotomic
//! cosets.
//!
//! A class `X ⊆ 1 + rZ_rn` closed under multiplication by `q` gives the code
//! with check polynomial `h = ∏_{Q ⊆ X} M_Q`, where `M_Q = ∏_{i ∈ Q}(X - ω^i)`.
//! Its nonzeros are `{ω^i : i ∈ X}` and its zeros the rest of `1 + rZ_rn`.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::linalg;
use super::linear::{ConstacyclicData, LinearCode, Provenance};
use super::{Poly, PolyRing};
use crate::gf::{root_data, Field, FieldCtx, RootData};
use crate::splitting::{cyclotomic_cosets, residue_set, CosetPartition, Params, Splitting};
use crate::{Error, Result};

/// `M_Q(X) = ∏_{i ∈ Q}(X - ω^i)`, computed in `GF(q^e)` and brought down to
/// `GF(q)`.
pub fn coset_minimal_poly(coset: &[u64], rd: &RootData) -> Result<Poly<u64>> {
    let t = &**rd.field();
    let ring = PolyRing::new(t);
    let mut acc = ring.one();
    for &i in coset {
        acc = ring.mul(&acc, &ring.linear(rd.omega_pow(i as i64)));
    }
    let coeffs = acc
        .coeffs()
        .iter()
        .map(|c| t.as_base(c))
        .collect::<Option<Vec<u64>>>()
        .ok_or_else(|| Error::NotGaloisStable(format!("{coset:?}")))?;
    Ok(PolyRing::new(&**rd.base()).from_coeffs(coeffs))
}

/// The quotient ring `GF(q)[X]/(X^n - λ)` with its coset structure and
/// minimal polynomials.
#[derive(Debug, Clone)]
pub struct ConstacyclicRing {
    params: Params,
    root: Arc<RootData>,
    partition: CosetPartition,
    minimal_polys: Vec<Poly<u64>>,
}

impl ConstacyclicRing {
    pub fn new(params: &Params) -> Result<Self> {
        let root = Arc::new(root_data(params.q(), params.n(), params.r())?);
        Self::with_root(params, root)
    }

    pub fn with_root(params: &Params, root: Arc<RootData>) -> Result<Self> {
        let partition = cyclotomic_cosets(params);
        let minimal_polys = partition
            .cosets()
            .iter()
            .map(|c| coset_minimal_poly(c, &root))
            .collect::<Result<Vec<_>>>()?;
        Ok(ConstacyclicRing {
            params: *params,
            root,
            partition,
            minimal_polys,
        })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn root(&self) -> &Arc<RootData> {
        &self.root
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        self.root.base()
    }

    pub fn partition(&self) -> &CosetPartition {
        &self.partition
    }

    pub fn minimal_polys(&self) -> &[Poly<u64>] {
        &self.minimal_polys
    }

    fn ring(&self) -> PolyRing<'_, FieldCtx> {
        PolyRing::new(&**self.root.base())
    }

    /// `X^n - λ`.
    pub fn modulus(&self) -> Poly<u64> {
        let f = &**self.root.base();
        let ring = self.ring();
        let n = self.params.n() as usize;
        ring.sub(&ring.monomial(f.one(), n), &ring.constant(self.root.lambda()))
    }

    /// `∏_Q M_Q`, which should be `X^n - λ`.
    pub fn product_of_minimal_polys(&self) -> Poly<u64> {
        let ring = self.ring();
        self.minimal_polys
            .iter()
            .fold(ring.one(), |acc, m| ring.mul(&acc, m))
    }

    fn cosets_of_class(&self, class: &[u64]) -> Result<Vec<usize>> {
        let rn = self.params.rn();
        let set: BTreeSet<u64> = class.iter().map(|x| x % rn).collect();
        let mut ids = BTreeSet::new();
        for &x in &set {
            let id = self
                .partition
                .coset_index(x)
                .ok_or_else(|| Error::NotInvariant(format!("{x} is not in 1 + rZ_rn")))?;
            if self.partition.cosets()[id].iter().any(|y| !set.contains(y)) {
                return Err(Error::NotInvariant(format!(
                    "class contains {x} but not its whole coset"
                )));
            }
            ids.insert(id);
        }
        Ok(ids.into_iter().collect())
    }

    /// The code with check polynomial `∏_{Q ⊆ class} M_Q`; generator rows are
    /// `X^i g(X)` for `0 ≤ i < k`.
    pub fn code_from_class(&self, class: &[u64]) -> Result<LinearCode<FieldCtx>> {
        let ids = self.cosets_of_class(class)?;
        let ring = self.ring();
        let h = ids
            .iter()
            .fold(ring.one(), |acc, &id| ring.mul(&acc, &self.minimal_polys[id]));
        let (g, rem) = ring.divmod(&self.modulus(), &h)?;
        debug_assert!(rem.is_zero());
        let nonzeros: BTreeSet<u64> = ids
            .iter()
            .flat_map(|&id| self.partition.cosets()[id].iter().copied())
            .collect();
        let zero_exponents = residue_set(&self.params)
            .into_iter()
            .filter(|x| !nonzeros.contains(x))
            .collect();
        let data = ConstacyclicData {
            lambda: self.root.lambda(),
            generator_poly: g,
            check_poly: h,
            zero_exponents,
        };
        Ok(self.code_from_generator(data))
    }

    fn code_from_generator(&self, data: ConstacyclicData<u64>) -> LinearCode<FieldCtx> {
        let n = self.params.n() as usize;
        let k = data.check_poly.degree().unwrap_or(0);
        let rows = (0..k)
            .map(|i| {
                let mut row = vec![0u64; n];
                for (j, c) in data.generator_poly.coeffs().iter().enumerate() {
                    row[i + j] = *c;
                }
                row
            })
            .collect();
        LinearCode::new(Arc::clone(self.root.base()), n, rows, Provenance::Constacyclic)
            .expect("shifts of the generator polynomial are independent")
            .with_constacyclic(data)
    }

    /// Evaluate a word, read as `Σ c_t X^t`, at `ω^i`.
    pub fn evaluate_at_root(&self, word: &[u64], i: i64) -> Vec<u64> {
        let t = &**self.root.field();
        let x = self.root.omega_pow(i);
        word.iter()
            .rev()
            .fold(t.zero(), |acc, c| t.add(&t.mul(&acc, x), &t.embed(*c)))
    }

    /// `Σ a_i X^i -> Σ a_i X^{is}` with `X^n = λ`.
    pub fn apply_multiplier(&self, word: &[u64], s: u64) -> Vec<u64> {
        let f = &**self.root.base();
        let n = self.params.n();
        let lambda = self.root.lambda();
        let mut out = vec![0u64; n as usize];
        for (i, a) in word.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            let e = i as u64 * s;
            let scale = f.pow_u64(&lambda, e / n);
            let slot = &mut out[(e % n) as usize];
            *slot = f.add(slot, &f.mul(a, &scale));
        }
        out
    }

    /// Image of a constacyclic code under `X -> X^s`. The image's generator
    /// polynomial is `gcd(g(X^s) mod (X^n - λ), X^n - λ)`.
    pub fn multiplier_isometry(&self, code: &LinearCode<FieldCtx>, s: i64) -> Result<LinearCode<FieldCtx>> {
        let s = self.params.normalize_multiplier(s)?;
        let data = code
            .constacyclic()
            .ok_or_else(|| Error::BadParams("multiplier isometry needs a constacyclic code".into()))?;
        let n = self.params.n() as usize;
        if code.k() == 0 {
            return Ok(code.clone());
        }
        let ring = self.ring();
        let modulus = self.modulus();
        let mut g_word = data.generator_poly.coeffs().to_vec();
        g_word.resize(n, 0);
        let image_g = ring.from_coeffs(self.apply_multiplier(&g_word, s));
        let g = ring.gcd(&image_g, &modulus);
        let (h, _) = ring.divmod(&modulus, &g)?;
        let t = &**self.root.field();
        let zero_exponents = residue_set(&self.params)
            .into_iter()
            .filter(|&i| {
                let mut w = g.coeffs().to_vec();
                w.resize(n, 0);
                t.is_zero(&self.evaluate_at_root(&w, i as i64))
            })
            .collect();
        let image = LinearCode::new(
            Arc::clone(self.root.base()),
            n,
            code.generator()
                .iter()
                .map(|row| self.apply_multiplier(row, s))
                .collect(),
            Provenance::Constacyclic,
        )?;
        Ok(image.with_constacyclic(ConstacyclicData {
            lambda: self.root.lambda(),
            generator_poly: g,
            check_poly: h,
            zero_exponents,
        }))
    }

    /// Codes of all classes of a splitting and whether they form a direct sum
    /// decomposition of the whole ring.
    pub fn direct_sum_check(&self, splitting: &Splitting) -> Result<DirectSum> {
        if splitting.params() != &self.params {
            return Err(Error::BadParams("splitting belongs to other parameters".into()));
        }
        let codes = splitting
            .classes()
            .iter()
            .map(|c| self.code_from_class(c))
            .collect::<Result<Vec<_>>>()?;
        let n = self.params.n() as usize;
        let stacked: Vec<Vec<u64>> = codes.iter().flat_map(|c| c.generator().iter().cloned()).collect();
        let rank = linalg::rank(&**self.root.base(), &stacked, n);
        let dims: Vec<usize> = codes.iter().map(|c| c.k()).collect();
        let ok = dims.iter().sum::<usize>() == n && rank == n;
        Ok(DirectSum { dims, rank, ok, codes })
    }
}

/// Outcome of [`ConstacyclicRing::direct_sum_check`].
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub dims: Vec<usize>,
    pub rank: usize,
    pub ok: bool,
    pub codes: Vec<LinearCode<FieldCtx>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::splitting::build_splitting;

    fn ring(q: u64, n: u64, r: u64) -> ConstacyclicRing {
        ConstacyclicRing::new(&Params::new(q, n, r).unwrap()).unwrap()
    }

    #[test]
    fn minimal_polys_factor_the_modulus() {
        for (q, n, r) in [(5, 6, 2), (19, 6, 3), (2, 7, 1), (4, 5, 3), (9, 10, 4), (3, 8, 2)] {
            let ring = ring(q, n, r);
            assert_eq!(ring.product_of_minimal_polys(), ring.modulus(), "({q},{n},{r})");
        }
    }

    #[test]
    fn minimal_poly_examples() {
        let rd = root_data(19, 6, 3).unwrap();
        let m = coset_minimal_poly(&[1], &rd).unwrap();
        assert_eq!(m.coeffs(), &[(19 - rd.omega()[0]) % 19, 1]);
        let rd = root_data(5, 6, 2).unwrap();
        let m = coset_minimal_poly(&[1, 5], &rd).unwrap();
        assert_eq!(m.degree(), Some(2));
        // A non-coset has coefficients outside GF(5).
        assert!(matches!(coset_minimal_poly(&[1], &rd), Err(Error::NotGaloisStable(_))));
    }

    #[test]
    fn codes_from_classes() {
        let ring = ring(5, 6, 2);
        let c = ring.code_from_class(&[1, 3, 5]).unwrap();
        assert_eq!((c.n(), c.k()), (6, 3));
        let data = c.constacyclic().unwrap();
        assert_eq!(data.zero_exponents, vec![7, 9, 11]);
        let pr = PolyRing::new(&**ring.field());
        assert_eq!(pr.mul(&data.generator_poly, &data.check_poly), ring.modulus());
        for row in c.generator() {
            for &z in &data.zero_exponents {
                assert!(ring.root().field().is_zero(&ring.evaluate_at_root(row, z as i64)));
            }
        }
        let full = ring.code_from_class(&residue_set(ring.params())).unwrap();
        assert_eq!(full.k(), 6);
        assert_eq!(full.constacyclic().unwrap().generator_poly, pr.one());
        let zero = ring.code_from_class(&[]).unwrap();
        assert_eq!(zero.k(), 0);
        assert_eq!(zero.constacyclic().unwrap().generator_poly, ring.modulus());
        assert!(matches!(ring.code_from_class(&[1, 3]), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn direct_sums() {
        let ring19 = ring(19, 6, 3);
        let s = build_splitting(ring19.params(), 7, 3).unwrap();
        let ds = ring19.direct_sum_check(&s).unwrap();
        assert!(ds.ok);
        assert_eq!(ds.dims, vec![2, 2, 2]);
        let one = build_splitting(ring19.params(), 7, 1).unwrap();
        assert!(ring19.direct_sum_check(&one).unwrap().ok);
        let ring5 = ring(5, 6, 2);
        let s = build_splitting(ring5.params(), -1, 2).unwrap();
        let ds = ring5.direct_sum_check(&s).unwrap();
        assert!(ds.ok);
        assert_eq!(ds.dims, vec![3, 3]);
    }

    #[test]
    fn multiplier_maps_class_codes_backwards() {
        // The image of the code with nonzeros X_j has nonzeros s^{-1} X_j,
        // which is X_{j-1}.
        let ring = ring(19, 6, 3);
        let s = build_splitting(ring.params(), 7, 3).unwrap();
        let codes: Vec<_> = s.classes().iter().map(|c| ring.code_from_class(c).unwrap()).collect();
        for j in 0..3 {
            let image = ring.multiplier_isometry(&codes[j], 7).unwrap();
            assert!(image.same_code(&codes[(j + 2) % 3]), "class {j}");
            assert_eq!(
                image.constacyclic().unwrap().zero_exponents,
                codes[(j + 2) % 3].constacyclic().unwrap().zero_exponents
            );
        }
        let identity = ring.multiplier_isometry(&codes[0], 1).unwrap();
        assert!(identity.same_code(&codes[0]));
        assert!(matches!(
            ring.multiplier_isometry(&codes[0], 2),
            Err(Error::BadMultiplier { .. })
        ));
    }

    #[test]
    fn multiplier_preserves_weight() {
        let ring = ring(17, 8, 2);
        let code = ring.code_from_class(&[1, 3, 5, 7]).unwrap();
        let mut x = 3u64;
        for _ in 0..100 {
            let msg: Vec<u64> = (0..code.k())
                .map(|_| {
                    x = (x * 7 + 5) % 17;
                    x
                })
                .collect();
            let w = code.encode(&msg);
            let image = ring.apply_multiplier(&w, 15);
            let nz = |v: &[u64]| v.iter().filter(|&&c| c != 0).count();
            assert_eq!(nz(&w), nz(&image));
        }
    }
}
