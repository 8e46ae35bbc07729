use num_bigint::BigUint;
use rayon::prelude::*;

use super::linear::{Distance, LinearCode};
use crate::gf::{Field, FieldCtx};
use crate::{Error, Result};

/// Default cap on `q^k` for exhaustive search.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

/// Budget from `POLYADIC_BUDGET`, else [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> u64 {
    std::env::var("POLYADIC_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// Fields up to this size use precomputed addition tables.
const TABLE_LIMIT: u64 = 1024;

struct Arith<'a> {
    field: &'a FieldCtx,
    q: usize,
    add: Option<Vec<u32>>,
}

impl Arith<'_> {
    fn new(field: &FieldCtx) -> Arith<'_> {
        let q = field.order();
        let add = (q <= TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = field.add(&a, &b) as u32;
                }
            }
            t
        });
        Arith {
            field,
            q: q as usize,
            add,
        }
    }

    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        match &self.add {
            Some(t) => t[a as usize * self.q + b as usize] as u64,
            None => self.field.add(&a, &b),
        }
    }
}

/// Minimum weight over all nonzero codewords.
///
/// Only messages whose first nonzero coordinate is 1 are enumerated; every
/// codeword is a scalar multiple of one of them. Requires `q^k ≤ budget`.
pub fn min_distance_exhaustive(code: &LinearCode<FieldCtx>, budget: u64) -> Result<Distance> {
    let field = &**code.field();
    let q = field.order();
    let k = code.k();
    let n = code.n();
    if k == 0 {
        return Ok(Distance::Undefined);
    }
    let size = BigUint::from(q).pow(k as u32);
    if size > BigUint::from(budget) {
        return Err(Error::TooLarge {
            size: size.to_string(),
            budget,
        });
    }
    let arith = Arith::new(field);
    let rows = code.generator();
    // delta[j][a] turns (a·row_j) into ((a+1 mod q)·row_j) by addition,
    // where a+1 means the next packed index.
    let scaled: Vec<Vec<Vec<u64>>> = rows
        .iter()
        .map(|row| {
            (0..q)
                .map(|a| row.iter().map(|x| field.mul(&a, x)).collect())
                .collect()
        })
        .collect();
    let delta: Vec<Vec<Vec<u64>>> = scaled
        .iter()
        .map(|multiples| {
            (0..q as usize)
                .map(|a| {
                    let next = &multiples[(a + 1) % q as usize];
                    let cur = &multiples[a];
                    next.iter()
                        .zip(cur)
                        .map(|(x, y)| arith.add(*x, field.neg(y)))
                        .collect()
                })
                .collect()
        })
        .collect();

    // One task per (leading position, value of the next coordinate).
    let mut tasks = Vec::new();
    for lead in 0..k {
        if lead + 1 < k {
            tasks.extend((0..q).map(|a| (lead, Some(a))));
        } else {
            tasks.push((lead, None));
        }
    }
    let best = tasks
        .into_par_iter()
        .map(|(lead, next)| {
            let mut word = rows[lead].clone();
            let mut free_start = lead + 1;
            if let Some(a) = next {
                for (w, x) in word.iter_mut().zip(&scaled[lead + 1][a as usize]) {
                    *w = arith.add(*w, *x);
                }
                free_start = lead + 2;
            }
            let mut digits = vec![0usize; k];
            let mut best = weight(&word);
            'outer: loop {
                let mut pos = free_start;
                loop {
                    if pos >= k {
                        break 'outer;
                    }
                    let d = digits[pos];
                    for (w, x) in word.iter_mut().zip(&delta[pos][d]) {
                        *w = arith.add(*w, *x);
                    }
                    digits[pos] = (d + 1) % q as usize;
                    if digits[pos] != 0 {
                        break;
                    }
                    pos += 1;
                }
                best = best.min(weight(&word));
            }
            best
        })
        .min()
        .unwrap_or(n);
    Ok(Distance::Exact(best))
}

fn weight(word: &[u64]) -> usize {
    word.iter().filter(|&&x| x != 0).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::linear::Provenance;
    use std::sync::Arc;

    /// Plain enumeration of every message, for cross-checking.
    fn naive(code: &LinearCode<FieldCtx>) -> usize {
        let f = &**code.field();
        let q = f.order();
        let k = code.k();
        let mut best = usize::MAX;
        for m in 1..q.pow(k as u32) {
            let msg: Vec<u64> = (0..k).map(|i| (m / q.pow(i as u32)) % q).collect();
            best = best.min(weight(&code.encode(&msg)));
        }
        best
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        let f = Arc::new(FieldCtx::new(2, 2).unwrap());
        let rows = vec![vec![1, 0, 0, 2, 3, 1], vec![0, 1, 0, 3, 3, 2], vec![0, 0, 1, 1, 2, 0]];
        let code = LinearCode::new(f, 6, rows, Provenance::Grs).unwrap();
        assert_eq!(min_distance_exhaustive(&code, 1000).unwrap(), Distance::Exact(naive(&code)));

        let f = Arc::new(FieldCtx::new(3, 1).unwrap());
        let rows = vec![vec![1, 1, 1, 0, 2], vec![0, 1, 2, 1, 1]];
        let code = LinearCode::new(f, 5, rows, Provenance::Grs).unwrap();
        assert_eq!(min_distance_exhaustive(&code, 1000).unwrap(), Distance::Exact(naive(&code)));
    }

    #[test]
    fn extremes_and_budget() {
        let f = Arc::new(FieldCtx::new(5, 1).unwrap());
        let id: Vec<Vec<u64>> = (0..4).map(|i| (0..4).map(|j| u64::from(i == j)).collect()).collect();
        let full = LinearCode::new(Arc::clone(&f), 4, id, Provenance::Grs).unwrap();
        assert_eq!(min_distance_exhaustive(&full, 1000).unwrap(), Distance::Exact(1));
        assert_eq!(
            min_distance_exhaustive(&full, 100).unwrap_err(),
            Error::TooLarge {
                size: "625".into(),
                budget: 100
            }
        );
        let zero = LinearCode::new(f, 4, vec![], Provenance::Grs).unwrap();
        assert_eq!(min_distance_exhaustive(&zero, 1).unwrap(), Distance::Undefined);
    }
}
