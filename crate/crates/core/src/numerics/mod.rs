//! Special functions and the quadrature engines the rest of the crate
//! builds on.

pub mod gamma;
pub mod phase;
pub mod quad;
pub mod singular;

pub use gamma::{gamma, log_gamma};
pub use phase::{stationary_phase_leading, CriticalPoint};
pub use quad::{integrate_adaptive, integrate_oscillatory, QuadValue};
pub use singular::{
    integrate_singular, integrate_singular_osc, integrate_singular_periodic, pow_abs_sin,
    SingularFactor, SingularOptions, WindowPath,
};
