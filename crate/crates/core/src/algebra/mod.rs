//! Exact scalar, matrix and polynomial arithmetic.

mod affine;
mod matrix;
mod poly;
mod rational;

pub use affine::{divides_linear, AffineForm};
pub use matrix::{primitive_normal, QMatrix};
pub use poly::MultiPoly;
pub use rational::{format_rational, frac_part, parse_rational, q, qi, Rational};
