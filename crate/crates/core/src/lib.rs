//! Numerical harmonic analysis on the hyperbolic disk at desk scale.
//!
//! The crate implements the boundary-model machinery for Laplace
//! eigenfunctions on the Poincare disk: plane waves built from the horocycle
//! bracket, the Poisson and non-Euclidean Fourier transforms, circle-model
//! principal-series representations, order-zero equivariant
//! pseudo-differential operators, and the invariant trilinear functionals
//! whose stationary-phase asymptotics drive microlocal-lift invariance.
//!
//! Everything runs on ordinary f64 grids with deterministic quadrature;
//! normalization constants that are conventionally left implicit are pinned
//! in a constants ledger (see [`ledger`]).

pub mod error;
pub mod numerics;

pub mod circle;
pub mod geometry;
pub mod helgason;
pub mod ledger;
pub mod pdo;
pub mod trilinear;
pub mod verify;

pub use error::{Error, Result};
pub use numerics::QuadValue;
