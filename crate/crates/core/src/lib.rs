//! Graded Ehrhart theory of unimodular zonotopes, computed exactly.
//!
//! A zonotope `Z = A [0,1]^n` is given by a full-row-rank integer matrix
//! `A`. The crate computes graded lattice point counts from the Tutte
//! polynomial of `A`'s matroid, the graded Ehrhart polynomial and series,
//! and checks them against independent oracles: lattice point enumeration,
//! zonotopal algebra Hilbert functions and the harmonic algebra
//! presentation.

pub mod error;
pub mod exact;
pub mod gehrhart;
pub mod harmonic;
pub mod linalg;
pub mod matroid;
pub mod verify;
pub mod zonalg;
pub mod zonotope;

pub use error::{Error, Result};
pub use exact::{BiPolyXY, LaurentQ, PolyTQ, RatSeries};
pub use matroid::RealizedMatroid;
