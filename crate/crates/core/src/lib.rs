//! Exact combinatorics of central hyperplane arrangements.
//!
//! The crate computes intersection lattices, dense edges, canonical
//! resolution data and topological zeta functions (univariate and
//! multivariate) of hyperplane arrangements over the rationals, together
//! with wall-and-chamber geometry for multi-indexed filtrations and a set
//! of verification workflows that compare zeta-function poles against
//! externally supplied Bernstein–Sato roots.
//!
//! Everything is exact: rationals are arbitrary precision and no floating
//! point value ever enters a computation.

pub mod algebra;
pub mod arrangement;
pub mod error;
pub mod fixtures;
pub mod harness;
pub mod io;
pub mod vmono;
pub mod walls;
pub mod zeta;

pub use algebra::{AffineForm, MultiPoly, QMatrix, Rational};
pub use arrangement::{Arrangement, Flat, IntersectionLattice};
pub use error::{Error, Result};
pub use zeta::{PoleReport, ZetaFunction};
