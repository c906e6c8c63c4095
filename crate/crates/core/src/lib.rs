//! Multiple zeta functions and their star and `t` variants at identical
//! arguments.
//!
//! The four diagonal families `ζ_r(s)`, `ζ*_r(s)`, `t_r(s)` and `t*_r(s)` are
//! polynomials in the values `ζ(s), ζ(2s), …, ζ(rs)` (or the `t` analogues).
//! This crate evaluates them three independent ways (partition closed form,
//! complete Bell polynomials and Newton recurrences) over exact rationals,
//! exact elements of `ℚ[π²]`, and `f64`, and checks the results against a
//! truncated-series oracle.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod bell;
pub mod diagonal;
mod error;
pub mod identities;
pub mod laurent;
pub mod pi;
pub mod ring;
pub mod zeta;

pub use arith::Rational;
pub use diagonal::{Argument, DiagonalValue, Family, Method, OracleConfig, Value};
pub use error::{Error, Result};
pub use pi::PiValue;
pub use ring::Ring;
