//! Exact arithmetic for triples of positive integers whose sum, sum of
//! pairwise products, and product are all perfect squares.
//!
//! Modules build on each other bottom-up: [`exactnum`] and [`multipoly`]
//! supply integers, rationals, polynomials and rational functions;
//! [`triads`] holds the central objects; [`quartic`] and [`ecurve`] produce
//! values of the auxiliary parameter `u`; [`families`] turns those into
//! certified parametric families; [`search`] enumerates small triads.

pub mod ecurve;
pub mod error;
pub mod exactnum;
pub mod families;
pub mod field;
pub mod json;
pub mod multipoly;
pub mod quartic;
pub mod search;
pub mod triads;

pub use error::{Error, Result};
pub use exactnum::{Integer, Rational};
pub use field::ExactField;
pub use multipoly::{Poly, RatFunc, Var};
pub use triads::{verify_triad, SquareCertificate, Triad};
