use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use polyadic::codes::{grs_code, min_distance_exhaustive, subfield_subcode, Distance, GrsSpec, LinearCode, Provenance};
use polyadic::gf::{ExtField, Field, FieldCtx};
use polyadic::splitting::{m_bruteforce, m_closed_form, ms_bruteforce, ms_closed_form, multiplier_candidates, Params};
use polyadic::valuations::{crt_compose, crt_decompose, nu_p, ExtValuation};

const PRIME_POWERS: [(u64, usize); 9] = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (2, 3), (5, 2), (3, 3)];

fn finite(v: ExtValuation) -> u64 {
    match v {
        ExtValuation::Finite(k) => k as u64,
        other => panic!("expected a finite valuation, got {other:?}"),
    }
}

fn elem(f: &FieldCtx, i: u64) -> u64 {
    let size = f.size();
    f.from_index(&(BigUint::from(i) % size)).unwrap()
}

fn coprime_params() -> impl Strategy<Value = Params> {
    (prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27]), 1u64..30, 1u64..30)
        .prop_filter_map("invalid (q, n, r)", |(q, n, r)| {
            let r = (1..=r).rev().find(|d| (q - 1) % d == 0)?;
            let p = Params::new(q, n, r).ok()?;
            (r * n <= 200).then_some(p)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn valuation_is_additive(p in prop::sample::select(vec![2u64, 3, 5, 7]), a in 1i64..10_000, b in 1i64..10_000) {
        let sum = finite(nu_p(p, a).unwrap()) + finite(nu_p(p, b).unwrap());
        prop_assert_eq!(finite(nu_p(p, a * b).unwrap()), sum);
        prop_assert_eq!(nu_p(p, -a).unwrap(), nu_p(p, a).unwrap());
    }

    #[test]
    fn crt_round_trip(x in -5_000i64..5_000) {
        let moduli = [BigInt::from(8), BigInt::from(9), BigInt::from(25), BigInt::from(7)];
        let parts = crt_decompose(x, &moduli).unwrap();
        let back = crt_compose(&parts, &moduli).unwrap();
        prop_assert_eq!(back, BigInt::from(x.rem_euclid(12_600)));
    }

    #[test]
    fn field_axioms(pk in prop::sample::select(PRIME_POWERS.to_vec()), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = FieldCtx::new(pk.0, pk.1).unwrap();
        let (a, b, c) = (elem(&f, a), elem(&f, b), elem(&f, c));
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        if !f.is_zero(&a) {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        }
        let q = pk.0.pow(pk.1 as u32);
        prop_assert_eq!(f.pow_u64(&a, q), a);
    }

    #[test]
    fn tower_embedding_and_frobenius(pk in prop::sample::select(PRIME_POWERS[..6].to_vec()), e in 1usize..4, a in any::<u64>(), b in any::<u64>()) {
        let base = Arc::new(FieldCtx::new(pk.0, pk.1).unwrap());
        let t = ExtField::new(Arc::clone(&base), e).unwrap();
        let (a, b) = (elem(&base, a), elem(&base, b));
        prop_assert_eq!(t.embed(base.add(&a, &b)), t.add(&t.embed(a), &t.embed(b)));
        prop_assert_eq!(t.embed(base.mul(&a, &b)), t.mul(&t.embed(a), &t.embed(b)));
        prop_assert_eq!(t.frobenius(&t.embed(a)), t.embed(a));
        prop_assert_eq!(t.as_base(&t.embed(a)), Some(a));
    }

    #[test]
    fn closed_forms_match_brute_force(params in coprime_params()) {
        prop_assert_eq!(m_closed_form(&params), m_bruteforce(&params).unwrap());
        for s in multiplier_candidates(&params) {
            let s = s as i64;
            prop_assert_eq!(ms_closed_form(&params, s).unwrap(), ms_bruteforce(&params, s).unwrap(), "s = {}", s);
        }
    }
}

fn small_grs() -> impl Strategy<Value = (u64, usize, usize, Vec<u64>)> {
    prop::sample::select(vec![5u64, 7])
        .prop_flat_map(|p| (Just(p), 1..p as usize))
        .prop_flat_map(|(p, n)| (Just(p), Just(n), 1..=n, prop::collection::vec(1..p, n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn grs_codes_are_mds((p, n, k, mult) in small_grs(), shift in 0u64..7) {
        let base = Arc::new(FieldCtx::new(p, 1).unwrap());
        let t = Arc::new(ExtField::new(Arc::clone(&base), 1).unwrap());
        let spec = GrsSpec {
            field: Arc::clone(&t),
            k,
            locators: (0..n as u64).map(|i| t.embed((i + shift) % p)).collect(),
            multipliers: mult.iter().map(|&v| t.embed(v)).collect(),
        };
        let code = subfield_subcode(&grs_code(&spec).unwrap());
        prop_assert_eq!(code.k(), k);
        prop_assert_eq!(min_distance_exhaustive(&code, 1_000_000).unwrap(), Distance::Exact(n - k + 1));
    }

    #[test]
    fn dual_is_an_involution(rows in prop::collection::vec(prop::collection::vec(0u64..3, 6), 0..6)) {
        let f = Arc::new(FieldCtx::new(3, 1).unwrap());
        let code = LinearCode::spanned_by(Arc::clone(&f), 6, &rows, Provenance::Grs);
        let dual = code.dual();
        prop_assert_eq!(dual.k(), 6 - code.k());
        prop_assert!(dual.dual().same_code(&code));
        for g in code.generator() {
            for h in dual.generator() {
                let dot = g.iter().zip(h).fold(0, |acc, (x, y)| f.add(&acc, &f.mul(x, y)));
                prop_assert_eq!(dot, 0);
            }
        }
    }
}
