//! Arbitrary-precision continued proportions and the constructions built on them.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalar`]: exact fixed-point decimals, exact rationals, integer-Newton roots
//!   and the grouped digit typography used by the historical tables.
//! * [`euclid`]: exact-rational checkers for the cited propositions of the
//!   *Elements*; they double as the oracle layer for everything else.
//! * [`pyramid`]: the three-dimensional Pythagorean identity for trirectangular
//!   pyramids, the circumscribed sphere and the oblique generalisation.
//! * [`proportio`]: the continued-chord problem in a semicircle, table
//!   reproduction, and four continued proportionals in a circle and a sphere.
//! * [`delian`]: two mean proportionals by simulating the ruler-and-cursor and
//!   the compass instruments; cube duplication.
//! * [`figures`]: deterministic SVG drawings of all seven figures.
//! * [`cli`]: the command-line front end used by the `proportionals` binary.

pub mod cli;
pub mod delian;
pub mod error;
pub mod euclid;
pub mod figures;
pub mod proportio;
pub mod pyramid;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{DecimalScalar, PrecisionContext, Rational};
