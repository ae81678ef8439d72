//! Computational commutative algebra over prime fields: Gröbner bases, module
//! presentations over quotient rings, Frobenius pushforwards and blowups at
//! modules (F-blowups).

#![allow(clippy::needless_range_loop)]

pub mod blowup;
pub mod config;
pub mod error;
pub mod ffpoly;
pub mod frobenius;
pub mod groebner;
pub mod matrix;
pub mod modpres;

pub use config::{Budget, Config};
pub use error::{Error, Result};
