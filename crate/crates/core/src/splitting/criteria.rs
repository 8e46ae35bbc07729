//! Existence of Type I splittings: closed forms in terms of p-adic
//! valuations, and brute force over the multiplier action on cosets.

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use super::{cyclotomic_cosets, multiplier_candidates, sweep_params, Params};
use crate::valuations::{capped_nu, factorize_u64, is_prime, nu_u64, ExtValuation};
use crate::{Error, Result};

/// Largest `rn` the brute-force maximisation over all multipliers accepts.
pub const MAX_BRUTE_FORCE_RN: u64 = 1 << 14;

/// Cycle lengths of the permutation `s` induces on the `q`-cyclotomic
/// cosets, sorted.
pub fn orbit_lengths_on_cosets(params: &Params, s: i64) -> Result<Vec<u64>> {
    let s = params.normalize_multiplier(s)?;
    let partition = cyclotomic_cosets(params);
    let perm = partition.multiplier_permutation(s);
    let mut visited = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        let mut len = 0;
        let mut c = start;
        while !visited[c] {
            visited[c] = true;
            c = perm[c];
            len += 1;
        }
        if len > 0 {
            lengths.push(len);
        }
    }
    lengths.sort_unstable();
    Ok(lengths)
}

/// `M_s` as the gcd of the orbit lengths of `s` on the cosets.
pub fn ms_bruteforce(params: &Params, s: i64) -> Result<u64> {
    Ok(orbit_lengths_on_cosets(params, s)?
        .into_iter()
        .fold(0, |acc: u64, l| acc.gcd(&l)))
}

/// `M` as the largest `M_s` over all multipliers; every `M_s` must divide it.
pub fn m_bruteforce(params: &Params) -> Result<u64> {
    if params.rn() > MAX_BRUTE_FORCE_RN {
        return Err(Error::SweepTooLarge(format!(
            "rn = {} exceeds {MAX_BRUTE_FORCE_RN}",
            params.rn()
        )));
    }
    let values = multiplier_candidates(params)
        .into_iter()
        .map(|s| ms_bruteforce(params, s as i64))
        .collect::<Result<Vec<_>>>()?;
    let max = values.iter().copied().max().unwrap_or(1);
    if let Some(bad) = values.iter().find(|&&v| max % v != 0) {
        return Err(Error::OracleInconsistency(format!(
            "M_s = {bad} does not divide the maximum {max} for {params:?}"
        )));
    }
    Ok(max)
}

fn primes_of_gcd(params: &Params) -> Vec<u64> {
    factorize_u64(params.r().gcd(&params.n()))
        .into_iter()
        .map(|(p, _)| p)
        .collect()
}

fn nu(p: u64, t: u64) -> i64 {
    nu_u64(p, t) as i64
}

/// `M` from the valuations of `q - 1`, `q + 1`, `r` and `n`.
pub fn m_closed_form(params: &Params) -> u64 {
    let (q, n, r) = (params.q(), params.n(), params.r());
    primes_of_gcd(params)
        .into_iter()
        .map(|p| {
            let e = if p != 2 || nu(p, r) >= 2 {
                (nu(p, q - 1) - nu(p, r)).min(nu(p, n))
            } else if nu(2, q - 1) >= 2 {
                (nu(2, q - 1) - 2).min(nu(2, n) - 1).max(1)
            } else {
                (nu(2, q + 1) - 1).min(nu(2, n) - 1)
            };
            p.pow(e.max(0) as u32)
        })
        .product()
}

/// `M_s` from the valuations of `q ± 1`, `rn` and `s ± 1`.
///
/// `ν_p(s ± 1)` is read from `s mod p^{ν_p(rn)}`, with a zero residue giving
/// `+∞`; the formulas never distinguish values at or above `ν_p(rn)`.
pub fn ms_closed_form(params: &Params, s: i64) -> Result<u64> {
    let s = params.normalize_multiplier(s)? as i128;
    let q = params.q();
    let rn = params.rn();
    let mut out = 1u64;
    for p in primes_of_gcd(params) {
        let a = nu(p, rn);
        let cap = a as u32;
        let s_minus = capped_nu(p, s - 1, cap).abs();
        let s_plus = capped_nu(p, s + 1, cap).abs();
        let nu_qm = nu(p, q - 1);
        let exponent = if p != 2 || (nu_qm >= 2 && s_minus >= 2) {
            clamp_at(ExtValuation::from(nu_qm.min(a)) - s_minus, 0)
        } else if nu_qm == 1 && s_minus >= 2 {
            clamp_at(ExtValuation::from((nu(2, q + 1) + 1).min(a)) - s_minus, 0)
        } else if nu_qm >= 2 {
            // ν_2(s - 1) = 1
            clamp_at(ExtValuation::from(nu_qm.min(a)) - s_plus, 1)
        } else {
            let nu_qp = nu(2, q + 1);
            if s_plus == nu_qp {
                0
            } else {
                let sub = s_plus.min(ExtValuation::from(nu_qp));
                clamp_at(ExtValuation::from((nu_qp + 1).min(a)) - sub, 0)
            }
        };
        out *= p.pow(exponent as u32);
    }
    Ok(out)
}

/// `max{v, floor}` for an extended valuation, as a plain exponent.
fn clamp_at(v: ExtValuation, floor: i64) -> i64 {
    match v {
        ExtValuation::Finite(x) => x.max(floor),
        ExtValuation::NegInfinity => floor,
        ExtValuation::PosInfinity => unreachable!("finite minus a valuation is never +inf"),
    }
}

/// Whether Type I `p`-adic splittings of `1 + rZ_rn` exist at all.
pub fn exists_p_adic(p: u64, params: &Params) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let (q, n, r) = (params.q(), params.n(), params.r());
    let general = nu(p, n) >= 1 && nu(p, q - 1) > nu(p, r) && nu(p, r) >= 1;
    let duadic = p == 2 && nu(2, r) == 1 && nu(2, q + 1).min(nu(2, n)) >= 2;
    Ok(general || duadic)
}

/// Whether `s` gives a Type I `p`-adic splitting for an odd prime `p`. For
/// `s = 1` the capped valuation is `+∞` and the answer is `false`.
pub fn exists_mu_s_p_odd(p: u64, params: &Params, s: i64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if p == 2 {
        return Err(Error::BadParams("the prime must be odd".into()));
    }
    let s = params.normalize_multiplier(s)?;
    let (q, n, r) = (params.q(), params.n(), params.r());
    let a = nu(p, params.rn());
    if r % p != 0 || n % p != 0 {
        return Ok(false);
    }
    let s_minus = capped_nu(p, s as i128 - 1, a as u32);
    Ok(s_minus < nu(p, q - 1).min(a))
}

/// Whether `s` gives a Type I duadic splitting.
pub fn exists_duadic_mu_s(params: &Params, s: i64) -> Result<bool> {
    let s = params.normalize_multiplier(s)? as i128;
    let (q, n, r) = (params.q(), params.n(), params.r());
    if n % 2 != 0 || r % 2 != 0 {
        return Ok(false);
    }
    let a = nu(2, params.rn());
    let s_minus = capped_nu(2, s - 1, a as u32).abs();
    let s_plus = capped_nu(2, s + 1, a as u32).abs();
    let (nu_qm, nu_qp) = (nu(2, q - 1), nu(2, q + 1));
    let cond_i = s_minus < nu_qm && s_minus < a;
    let cond_ii = nu_qm == 1 && s_minus > 1 && s_minus < nu_qp + 1 && s_minus < a;
    let cond_iii = nu_qm == 1 && s_minus == 1 && s_plus > nu_qp && a > nu_qp;
    let cond_iv = nu_qm == 1 && s_minus == 1 && s_plus < nu_qp && s_plus < a;
    Ok(cond_i || cond_ii || cond_iii || cond_iv)
}

/// Whether `s = -1` gives a Type I duadic splitting.
pub fn exists_duadic_mu_minus1(params: &Params) -> bool {
    let (q, n, r) = (params.q(), params.n(), params.r());
    n % 2 == 0
        && r == 2
        && (nu(2, q - 1) >= 2 || (nu(2, q - 1) == 1 && nu(2, q + 1) < nu(2, params.rn())))
}

/// Outcome of comparing closed forms with brute force over a sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub params_checked: usize,
    /// `(q, n, r, s)` tuples on which `M_s` was compared.
    pub pairs_checked: usize,
    pub failures: Vec<String>,
}

/// Compare `M` and every `M_s` against brute force for all parameters of
/// [`sweep_params`].
pub fn oracle_sweep(qmax: u64, rnmax: u64) -> Result<SweepReport> {
    if rnmax > MAX_BRUTE_FORCE_RN {
        return Err(Error::SweepTooLarge(format!("rnmax = {rnmax} exceeds {MAX_BRUTE_FORCE_RN}")));
    }
    let all = sweep_params(qmax, rnmax);
    let parts = all
        .par_iter()
        .map(|params| {
            let mut failures = Vec::new();
            let (m_closed, m_brute) = (m_closed_form(params), m_bruteforce(params)?);
            if m_closed != m_brute {
                failures.push(format!("{params:?}: M closed {m_closed}, brute {m_brute}"));
            }
            let candidates = multiplier_candidates(params);
            for &s in &candidates {
                let (closed, brute) = (ms_closed_form(params, s as i64)?, ms_bruteforce(params, s as i64)?);
                if closed != brute {
                    failures.push(format!("{params:?} s = {s}: M_s closed {closed}, brute {brute}"));
                }
            }
            Ok((candidates.len(), failures))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = SweepReport {
        params_checked: all.len(),
        ..SweepReport::default()
    };
    for (pairs, failures) in parts {
        report.pairs_checked += pairs;
        report.failures.extend(failures);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(q: u64, n: u64, r: u64) -> Params {
        Params::new(q, n, r).unwrap()
    }

    #[test]
    fn orbit_lengths() {
        assert_eq!(orbit_lengths_on_cosets(&params(19, 6, 3), 7).unwrap(), vec![3, 3]);
        assert_eq!(orbit_lengths_on_cosets(&params(5, 6, 2), 1).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(
            orbit_lengths_on_cosets(&params(17, 8, 2), -1).unwrap(),
            vec![2, 2, 2, 2]
        );
        assert!(matches!(
            orbit_lengths_on_cosets(&params(19, 6, 3), 5),
            Err(Error::BadMultiplier { .. })
        ));
    }

    #[test]
    fn ms_examples() {
        let p = params(19, 6, 3);
        assert_eq!(ms_bruteforce(&p, 7).unwrap(), 3);
        assert_eq!(ms_closed_form(&p, 7).unwrap(), 3);
        let p = params(17, 8, 2);
        assert_eq!(ms_bruteforce(&p, 15).unwrap(), 2);
        assert_eq!(ms_closed_form(&p, 15).unwrap(), 2);
        assert_eq!(ms_closed_form(&p, -1).unwrap(), 2);
        for p in [params(5, 6, 2), params(19, 6, 3), params(49, 24, 2)] {
            assert_eq!(ms_bruteforce(&p, 1).unwrap(), 1);
            assert_eq!(ms_closed_form(&p, 1).unwrap(), 1);
        }
    }

    #[test]
    fn m_examples() {
        for (q, n, r, m) in [(19, 6, 3, 3), (17, 8, 2, 4), (5, 6, 2, 2), (7, 6, 1, 1)] {
            let p = params(q, n, r);
            assert_eq!(m_closed_form(&p), m, "({q},{n},{r})");
            assert_eq!(m_bruteforce(&p).unwrap(), m, "({q},{n},{r})");
        }
        let big = params(2, 16385, 1);
        assert!(matches!(m_bruteforce(&big), Err(Error::SweepTooLarge(_))));
    }

    #[test]
    fn corollary_examples() {
        assert!(exists_duadic_mu_minus1(&params(17, 8, 2)));
        assert!(exists_duadic_mu_minus1(&params(7, 8, 2)));
        assert!(!exists_duadic_mu_minus1(&params(7, 4, 2)));
        assert!(exists_p_adic(3, &params(19, 6, 3)).unwrap());
        assert!(!exists_p_adic(3, &params(19, 6, 1)).unwrap());
        assert!(exists_mu_s_p_odd(3, &params(19, 6, 3), 7).unwrap());
        assert!(!exists_mu_s_p_odd(3, &params(19, 6, 3), 1).unwrap());
        assert!(exists_duadic_mu_s(&params(17, 8, 2), -1).unwrap());
    }

    #[test]
    fn orbit_gcd_only_has_primes_of_gcd_n_r() {
        for p in super::super::sweep_params(13, 60) {
            let g = p.r().gcd(&p.n());
            for s in multiplier_candidates(&p) {
                let ms = ms_bruteforce(&p, s as i64).unwrap();
                for (prime, _) in factorize_u64(ms) {
                    assert_eq!(g % prime, 0, "{p:?}, s = {s}");
                }
            }
        }
    }
}
