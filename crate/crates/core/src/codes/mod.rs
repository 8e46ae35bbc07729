//! Polynomials, linear codes and the constacyclic, GRS and alternant
//! constructions built on top of splittings.

mod constacyclic;
mod distance;
mod families;
mod grs;
pub mod linalg;
mod linear;
mod poly;

pub use constacyclic::{coset_minimal_poly, ConstacyclicRing, DirectSum};
pub use distance::{budget_from_env, min_distance_exhaustive, DEFAULT_BUDGET};
pub use families::{constacyclic_alternant_mds, negacyclic_alternant_mds, AlternantCode};
pub use grs::{
    certify_mds_via_grs, grs_code, grs_equals_constacyclic, padic_grs_spec, subfield_subcode,
    GrsEquality, GrsSpec, MdsCertificate,
};
pub use linear::{dual_code, is_self_dual, weight, ConstacyclicData, Distance, LinearCode, Provenance};
pub use poly::{Poly, PolyRing};
