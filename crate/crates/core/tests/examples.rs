use num_bigint::{BigInt, BigUint};

use polyadic::codes::{
    constacyclic_alternant_mds, grs_equals_constacyclic, min_distance_exhaustive, negacyclic_alternant_mds,
    ConstacyclicRing, Distance, PolyRing,
};
use polyadic::gf::{element_order, root_data, Field, FieldCtx};
use polyadic::splitting::*;
use polyadic::valuations::*;
use polyadic::Error;

fn params(q: u64, n: u64, r: u64) -> Params {
    Params::new(q, n, r).unwrap()
}

fn big(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

#[test]
fn valuations() {
    assert_eq!(nu_p(2, 48).unwrap(), ExtValuation::Finite(4));
    assert_eq!(nu_p(5, 0).unwrap(), ExtValuation::NegInfinity);
    assert_eq!(nu_p(3, -18).unwrap(), ExtValuation::Finite(2));
    assert_eq!(factorize(18).unwrap().to_u64_pairs().unwrap(), vec![(2, 1), (3, 2)]);
    assert!(factorize(1).unwrap().pairs().is_empty());
    assert_eq!(factorize(120).unwrap().to_u64_pairs().unwrap(), vec![(2, 3), (3, 1), (5, 1)]);
    assert_eq!(unit_order(5, 16).unwrap(), BigUint::from(4u32));
    assert_eq!(unit_order(1, 99).unwrap(), BigUint::from(1u32));
    assert_eq!(unit_order(19, 18).unwrap(), BigUint::from(1u32));
}

#[test]
fn two_adic_quotients() {
    assert_eq!(two_adic_quotient_shape(5, 4).unwrap().cyclic_factors, big(&[2, 1]));
    assert_eq!(two_adic_quotient_shape(7, 4).unwrap().cyclic_factors, big(&[4]));
    // Z_16^* itself: C2 x C4.
    assert_eq!(two_adic_quotient_shape(17, 4).unwrap().invariant_factors(), big(&[2, 4]));
    assert!(matches!(two_adic_quotient_shape(-1, 4), Err(Error::ExcludedCase(_))));
    assert_eq!(two_adic_image_order(3, 5, 4).unwrap(), BigUint::from(2u32));
    assert_eq!(two_adic_image_order(-1, 5, 4).unwrap(), BigUint::from(2u32));
    for u in [3, 5, 7, 9, 11, 13, 17] {
        assert_eq!(two_adic_image_order(u, u, 6).unwrap(), BigUint::from(1u32));
    }
}

#[test]
fn chinese_remainders() {
    let moduli = [BigInt::from(4), BigInt::from(9)];
    let parts = crt_decompose(7, &moduli).unwrap();
    assert_eq!(parts, vec![BigInt::from(3), BigInt::from(7)]);
    assert_eq!(crt_compose(&parts, &moduli).unwrap(), BigInt::from(7));
    let moduli = [BigInt::from(2), BigInt::from(9)];
    assert_eq!(crt_decompose(19 % 18, &moduli).unwrap(), vec![BigInt::from(1), BigInt::from(1)]);
    assert!(matches!(
        crt_decompose(1, &[BigInt::from(4), BigInt::from(6)]),
        Err(Error::NotCoprime(_))
    ));
}

#[test]
fn finite_fields() {
    let gf5 = FieldCtx::new(5, 1).unwrap();
    assert_eq!(gf5.add(&2, &4), 1);
    assert_eq!(gf5.inv(&2).unwrap(), 3);
    let gf9 = FieldCtx::new(3, 2).unwrap();
    let g = gf9.generator();
    assert_eq!(element_order(&gf9, &g).unwrap(), BigUint::from(8u32));
    assert_eq!(element_order(&gf9, &gf9.mul(&g, &g)).unwrap(), BigUint::from(4u32));
    assert_eq!(element_order(&gf9, &1).unwrap(), BigUint::from(1u32));
    let gf64 = FieldCtx::new(2, 6).unwrap();
    assert_eq!(element_order(&gf64, &gf64.generator()).unwrap(), BigUint::from(63u32));
    assert_eq!(gf64.pow_u64(&gf64.generator(), 63), 1);
}

#[test]
fn roots_of_x_n_minus_lambda() {
    let rd = root_data(19, 6, 3).unwrap();
    assert_eq!(rd.e(), 1);
    let f = rd.field();
    assert_eq!(f.pow_u64(rd.omega(), 6), f.embed(rd.lambda()));
    assert_eq!(element_order(&**rd.base(), &rd.lambda()).unwrap(), BigUint::from(3u32));
    assert_eq!(element_order(&**f, rd.omega()).unwrap(), BigUint::from(18u32));

    let rd = root_data(5, 6, 2).unwrap();
    assert_eq!(rd.e(), 2);
    assert_eq!(rd.lambda(), 4);
    assert_eq!(rd.field().pow_u64(rd.omega(), 6), rd.field().embed(4));
    assert_eq!(element_order(&**rd.field(), rd.omega()).unwrap(), BigUint::from(12u32));

    let rd = root_data(7, 9, 1).unwrap();
    assert_eq!(rd.lambda(), 1);
    assert_eq!(rd.field().pow_u64(rd.omega(), 9), rd.field().one());
    // A norm lands in the base field; a generator of GF(q^2) does not.
    let rd = root_data(5, 6, 2).unwrap();
    let norm = rd.field().pow_u64(rd.omega(), 6);
    assert!(rd.field().subfield_test(&norm, 1).unwrap());
    assert!(!rd.field().subfield_test(rd.omega(), 1).unwrap());
}

#[test]
fn residues_cosets_and_multipliers() {
    assert_eq!(residue_set(&params(5, 6, 2)), vec![1, 3, 5, 7, 9, 11]);
    assert_eq!(residue_set(&params(19, 6, 3)), vec![1, 4, 7, 10, 13, 16]);
    assert_eq!(residue_set(&params(7, 5, 1)), vec![0, 1, 2, 3, 4]);
    let cosets = |q, n, r| cyclotomic_cosets(&params(q, n, r)).cosets().to_vec();
    assert_eq!(cosets(19, 6, 3), vec![vec![1], vec![4], vec![7], vec![10], vec![13], vec![16]]);
    assert_eq!(cosets(5, 6, 2), vec![vec![1, 5], vec![3], vec![7, 11], vec![9]]);
    assert_eq!(cosets(7, 8, 2), vec![vec![1, 7], vec![3, 5], vec![9, 15], vec![11, 13]]);
    assert_eq!(multiplier_candidates(&params(5, 6, 2)), vec![1, 5, 7, 11]);
    assert_eq!(multiplier_candidates(&params(19, 6, 3)), vec![1, 7, 13]);
    assert_eq!(multiplier_candidates(&params(2, 1, 1)), vec![0]);
}

#[test]
fn existence_numbers() {
    assert_eq!(orbit_lengths_on_cosets(&params(19, 6, 3), 7).unwrap(), vec![3, 3]);
    assert_eq!(orbit_lengths_on_cosets(&params(17, 8, 2), -1).unwrap(), vec![2, 2, 2, 2]);
    assert_eq!(ms_closed_form(&params(19, 6, 3), 7).unwrap(), 3);
    assert_eq!(ms_closed_form(&params(17, 8, 2), 15).unwrap(), 2);
    for (q, n, r, m) in [(19, 6, 3, 3), (17, 8, 2, 4), (5, 6, 2, 2), (7, 6, 1, 1)] {
        assert_eq!(m_closed_form(&params(q, n, r)), m);
        assert_eq!(m_bruteforce(&params(q, n, r)).unwrap(), m);
    }
    assert!(exists_duadic_mu_minus1(&params(17, 8, 2)));
    assert!(exists_duadic_mu_minus1(&params(7, 8, 2)));
    assert!(exists_p_adic(3, &params(19, 6, 3)).unwrap());
    assert!(!exists_p_adic(3, &params(19, 6, 1)).unwrap());
    assert!(!exists_mu_s_p_odd(3, &params(19, 6, 3), 1).unwrap());
}

#[test]
fn splittings() {
    let s = build_splitting(&params(19, 6, 3), 7, 3).unwrap();
    assert_eq!(s.classes(), &[vec![1, 4], vec![7, 10], vec![13, 16]]);
    let s = build_splitting(&params(17, 8, 2), 15, 2).unwrap();
    assert_eq!(s.classes(), &[vec![1, 3, 5, 7], vec![9, 11, 13, 15]]);
    let one = build_splitting(&params(5, 6, 2), 5, 1).unwrap();
    assert_eq!(one.classes(), &[residue_set(&params(5, 6, 2))]);
    assert!(matches!(
        build_splitting(&params(19, 6, 3), 7, 2),
        Err(Error::NoSuchSplitting { m: 2, max: 3 })
    ));

    let s = padic_standard_splitting(&params(19, 6, 3), 3).unwrap();
    assert_eq!((s.s(), s.classes().to_vec()), (7, vec![vec![1, 4], vec![7, 10], vec![13, 16]]));
    let s = padic_standard_splitting(&params(17, 8, 2), 2).unwrap();
    assert_eq!(s.s(), 9);
    assert!(matches!(
        padic_standard_splitting(&params(13, 4, 4), 2),
        Err(Error::HypothesisViolated(_))
    ));
    assert_eq!(
        build_splitting(&params(19, 6, 3), 7, 3).unwrap().to_json().to_string(),
        r#"{"classes":[[1,4],[7,10],[13,16]],"m":3,"n":6,"q":19,"r":3,"s":7}"#
    );
}

#[test]
fn polynomials_over_gf5() {
    let f = FieldCtx::new(5, 1).unwrap();
    let ring = PolyRing::new(&f);
    let a = ring.from_coeffs(vec![1, 1]);
    let b = ring.from_coeffs(vec![4, 1]);
    let prod = ring.mul(&a, &b);
    assert_eq!(prod.coeffs(), &[4, 0, 1]);
    let (quot, rem) = ring.divmod(&prod, &a).unwrap();
    assert_eq!((quot.coeffs(), rem.is_zero()), (&[4u64, 1][..], true));
    assert_eq!(ring.gcd(&prod, &ring.scale(&b, &3)), b);
}

#[test]
fn constacyclic_codes() {
    let ring = ConstacyclicRing::new(&params(5, 6, 2)).unwrap();
    assert_eq!(ring.product_of_minimal_polys(), ring.modulus());
    let c = ring.code_from_class(&[1, 3, 5]).unwrap();
    assert_eq!((c.n(), c.k()), (6, 3));
    assert_eq!(min_distance_exhaustive(&c, 1_000).unwrap(), Distance::Exact(4));
    assert!(c.is_self_dual());
    assert!(c.dual().same_code(&c));
    assert!(c.dual().dual().same_code(&c));
    let full = ring.code_from_class(&residue_set(ring.params())).unwrap();
    assert_eq!(full.dual().k(), 0);
    assert_eq!(min_distance_exhaustive(&full, 100_000).unwrap(), Distance::Exact(1));

    let identity = ring.multiplier_isometry(&c, 1).unwrap();
    assert!(identity.same_code(&c));

    let ring = ConstacyclicRing::new(&params(19, 6, 3)).unwrap();
    let split = build_splitting(ring.params(), 7, 3).unwrap();
    let ds = ring.direct_sum_check(&split).unwrap();
    assert!(ds.ok);
    assert_eq!(ds.dims, vec![2, 2, 2]);
}

#[test]
fn grs_and_alternant_families() {
    for (q, n, r, p, k, dims) in [
        (19, 6, 3, 3, 2, [6, 4, 3]),
        (17, 8, 2, 2, 1, [8, 4, 5]),
        (64, 21, 3, 3, 1, [21, 7, 15]),
    ] {
        let (code, eq) = grs_equals_constacyclic(&params(q, n, r), p, k).unwrap();
        assert!(eq.holds());
        assert_eq!([code.n(), code.k(), eq.d_certified], dims);
    }
    let c = negacyclic_alternant_mds(7, 1, 10_000_000).unwrap();
    assert_eq!(c.exhaustive, Some(Distance::Exact(5)));
    assert!(c.self_dual);
    let c = constacyclic_alternant_mds(17, 1).unwrap();
    assert_eq!((c.params.r(), c.splitting.s(), c.code.n(), c.code.k()), (8, 73, 18, 9));
    assert_eq!(c.distance(), Distance::Certified(10));
    assert!(matches!(constacyclic_alternant_mds(5, 1), Err(Error::HypothesisViolated(_))));
    // The [6,3,4] code is the subfield subcode of its parent over GF(25).
    let c = negacyclic_alternant_mds(5, 1, 1_000).unwrap();
    let parent = polyadic::codes::grs_code(&c.parent).unwrap();
    assert!(polyadic::codes::subfield_subcode(&parent).same_code(&c.code));
}
