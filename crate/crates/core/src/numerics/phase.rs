//! Leading-order stationary phase for int A(z) e^{i t p(z)} dz in one
//! variable.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_4, TAU};

/// Data for one non-degenerate critical point of the phase.
#[derive(Debug, Clone, Copy)]
pub struct CriticalPoint {
    /// Amplitude A evaluated at the point.
    pub amplitude: Complex64,
    /// Second derivative of the phase there (nonzero).
    pub p_second: f64,
    /// Value of the phase there.
    pub p_value: f64,
}

/// Sum over critical points of
/// sqrt(2 pi / (t |p''|)) e^{i t p + i (pi/4) sgn p''} A.
pub fn stationary_phase_leading(points: &[CriticalPoint], t: f64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for cp in points {
        let amp = (TAU / (t * cp.p_second.abs())).sqrt();
        let phase = t * cp.p_value + FRAC_PI_4 * cp.p_second.signum();
        acc += amp * Complex64::new(0.0, phase).exp() * cp.amplitude;
    }
    acc
}
