//! Type I polyadic constacyclic codes over finite fields.
//!
//! The crate answers two questions about a constacyclic code family with
//! parameters `(q, n, r)`: for which `m` a Type I `m`-adic splitting of
//! `1 + rZ_rn` exists, and for which multipliers `s` the map `x -> s·x`
//! realises one. Both answers are available in closed form (p-adic
//! valuation formulas) and by brute force over the orbit structure, and the
//! two routes are kept independent so they can check each other.
//!
//! On top of the existence theory the crate builds the splittings and the
//! codes themselves: minimal polynomials of cyclotomic cosets, constacyclic
//! codes from splitting classes, generalized Reed-Solomon codes, subfield
//! subcodes, duals, and exhaustive or certificate-based minimum distances.
//!
//! Modules:
//! - [`valuations`]: integer number theory (valuations, factorization, CRT,
//!   unit orders, the structure of `Z_{2^a}^*` modulo a cyclic subgroup).
//! - [`gf`]: finite fields `GF(p^k)`, towers `GF(q^e)` over them, and the
//!   root of unity data every construction is relative to.
//! - [`splitting`]: cyclotomic cosets, multipliers, the existence criteria
//!   and explicit splittings.
//! - [`codes`]: polynomials, linear codes and the optimal code families.
//! - [`cli`]: the command-line reports.

pub mod cli;
pub mod codes;
mod error;
pub mod gf;
pub mod splitting;
pub mod tables;
pub mod valuations;

pub use error::{Error, Result};
