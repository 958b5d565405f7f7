//! Fox calculus and twisted Alexander invariants over finite fields.
//!
//! Polynomials are defined up to units `c t^k`; everything exposed here is
//! in normalized form (lowest term of degree 0 with coefficient 1).

mod fox;
mod poly;
mod rep;
mod wada;

pub use fox::{fox_derivative, GroupRingElem};
pub use poly::{gcd2, maximal_minor_gcd, poly_det, poly_gcd, LaurentPoly, PolyMatrix};
pub use rep::{psl27_to_sl32, sl2_natural, FpMatrix, GeneralLinear, Representation};
pub use wada::{
    phi, talex_sweep, twisted_alexander, twisted_alexander_at, wada_matrix, Bucket, FoxMatrix, TalexSweep,
    TwistedAlexander, BUCKET_ALL, BUCKET_CLASSES, BUCKET_NONABELIAN,
};
pub use crate::snf::abelianization_degrees;
