//! Exact computation of annihilators, Oda ideals, support closures,
//! assassinators, conductors and crucial/critical ideals.
//!
//! The kernel is a Buchberger Gröbner engine over ℚ and ℤ/p
//! ([`groebner`]), an ideal calculus on top of it ([`ideal`]), modules that
//! are finite direct sums of cyclic modules ([`module`]), ring extensions
//! with decidable arithmetic ([`extensions`]), symbolic subsets of Spec(ℤ)
//! ([`zspec`]) and Nagata-ring membership procedures ([`nagata`]).

pub mod arith;
pub mod error;
pub mod extensions;
pub mod groebner;
pub mod ideal;
pub mod module;
pub mod nagata;
pub mod poly;
pub mod zspec;

pub use error::{Error, Result};

pub use groebner::{buchberger, eliminate, ideal_member, normal_form, GroebnerBasis, Ideal};
pub use poly::{
    parse_polynomial, poly_arith, ArithKind, CoeffField, Monomial, MonomialOrder, Operand, PolyError, PolyRing,
    Polynomial,
};

/// Version of the engine, echoed in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
