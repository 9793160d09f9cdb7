//! Exact computation and verification of p-adic divisibility properties of
//! the coefficients of `ℓ(x)^t`, where `ℓ(x) = log(1+x)/x` and `t` is any
//! integer.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: rationals, p-adic valuations, factorial-type building blocks.
//! * [`series`]: dense truncated power series over the rationals.
//! * [`combinatorics`]: index tuples, the modified multinomial coefficients
//!   `c(I)`, and the terms `T_I` of the multinomial expansion of `ℓ(x)^t`.
//! * [`harness`]: one verifier per divisibility / zero-coefficient result,
//!   plus reconstruction of `x/log(1+x)` from its zero coefficients.
//!
//! With the default `parallel` feature, convolution kernels and parameter
//! sweeps run on rayon; without it every loop is sequential and results are
//! identical.

pub mod arith;
pub mod combinatorics;
mod error;
pub mod harness;
mod kernel;
pub mod par;
pub mod series;

pub use arith::{BigRat, Valuation};
pub use combinatorics::IndexTuple;
pub use error::{Error, Result};
pub use harness::{Outcome, VerifyReport};
pub use series::TruncSeries;
