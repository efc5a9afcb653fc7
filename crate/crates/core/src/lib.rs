//! Exact computer algebra for powers of polynomial ideals.
//!
//! The crate computes generalized symbolic powers `I^k : J^inf`, saturated powers,
//! form ideals of powers through the `#`-deformation, Rees algebra presentations,
//! analytic spread and exact lengths of finite-length quotients. All arithmetic is
//! exact, over the rationals or a prime field.
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is disabled.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod constructions;
pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal_ops;
pub mod invariants;
pub mod linalg;
pub mod monomial_ideal;
pub mod poly;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldOp, FieldSpec};
pub use groebner::{buchberger, equal_ideals, initial_ideal, normal_form, Ideal};
pub use monomial_ideal::MonomialIdeal;
pub use poly::{Monomial, MonomialOrder, Poly, PolyOp, Ring, Term};
