//! Circle model of the spherical principal series: even functions on the
//! circle, the twisted group action, invariant pairings and the bump family.
//!
//! A `CircleFunction` is an even function in the plane-model sense,
//! f(theta + pi) = f(theta), held as uniform grid samples with a cached
//! even-frequency Fourier expansion f = sum c_{2k} e^{i 2k theta}. The
//! direction angle theta is related to the disk boundary angle by
//! b = -2 theta (the Cayley identification); helpers here stay in theta.
//!
//! Throughout this module `mu` names the spectral parameter of the symbol
//! representation (a lambda-type parameter, imaginary on the principal
//! series), not the Laplace eigenvalue.

use num_complex::Complex64;
use rustfft::FftPlanner;
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::geometry::GroupElement;
use crate::numerics::{gamma, integrate_singular_osc, SingularFactor, SingularOptions};

/// Default grid size; resolves every kernel in the suite for |t| <= 400.
pub const DEFAULT_GRID: usize = 4096;

/// A Dirac delta on the boundary circle; purely symbolic, never sampled.
#[derive(Debug, Clone, Copy)]
pub struct DeltaDistribution {
    /// Boundary angle of the mass point.
    pub location: f64,
}

impl Default for DeltaDistribution {
    fn default() -> Self {
        DeltaDistribution { location: 0.0 }
    }
}

#[derive(Debug, Clone)]
pub struct CircleFunction {
    n: usize,
    samples: Vec<Complex64>,
    /// Coefficient of e^{i k theta} for k = fft index (negative in the
    /// upper half); odd k are identically zero after projection.
    fourier: Vec<Complex64>,
    /// L2 fraction removed by the evenness projection at construction.
    odd_mass: f64,
}

fn fft_forward(data: &mut [Complex64]) {
    let mut planner = FftPlanner::new();
    planner.plan_fft_forward(data.len()).process(data);
}

fn fft_inverse(data: &mut [Complex64]) {
    let mut planner = FftPlanner::new();
    planner.plan_fft_inverse(data.len()).process(data);
    let n = data.len() as f64;
    for v in data.iter_mut() {
        *v /= n;
    }
}

impl CircleFunction {
    /// Build from samples on theta_j = 2 pi j / n, projecting out odd
    /// frequencies (evenness in the plane-model sense).
    pub fn from_samples(samples: Vec<Complex64>) -> Result<Self> {
        let n = samples.len();
        if n < 4 || n % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "grid size {n} must be even and >= 4"
            )));
        }
        let mut spec = samples;
        fft_forward(&mut spec);
        let total: f64 = spec.iter().map(|c| c.norm_sqr()).sum();
        let mut odd = 0.0;
        for (k, c) in spec.iter_mut().enumerate() {
            if k % 2 == 1 {
                odd += c.norm_sqr();
                *c = Complex64::new(0.0, 0.0);
            }
        }
        let fourier: Vec<Complex64> = spec.iter().map(|c| c / n as f64).collect();
        let mut back = spec;
        fft_inverse(&mut back);
        Ok(CircleFunction {
            n,
            samples: back,
            fourier,
            odd_mass: if total > 0.0 { (odd / total).sqrt() } else { 0.0 },
        })
    }

    pub fn from_fn<F: Fn(f64) -> Complex64>(n: usize, f: F) -> Result<Self> {
        let samples = (0..n).map(|j| f(TAU * j as f64 / n as f64)).collect();
        Self::from_samples(samples)
    }

    /// The K-type basis vector e_{2k} = e^{i 2k theta} (argument is the
    /// frequency 2k itself, expected even).
    pub fn e(freq: i64, n: usize) -> Result<Self> {
        if freq % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "K-type frequency {freq} must be even"
            )));
        }
        Self::from_fn(n, |th| Complex64::new(0.0, freq as f64 * th).exp())
    }

    /// Constant function 1 (the spherical vector e_0).
    pub fn e0(n: usize) -> Self {
        Self::from_fn(n, |_| Complex64::new(1.0, 0.0)).unwrap()
    }

    /// Build from even-frequency coefficients: pairs (k, c) meaning
    /// c * e^{i 2k theta}.
    pub fn from_even_fourier(n: usize, coeffs: &[(i64, Complex64)]) -> Result<Self> {
        if n < 4 || n % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "grid size {n} must be even and >= 4"
            )));
        }
        let mut spec = vec![Complex64::new(0.0, 0.0); n];
        for &(k, c) in coeffs {
            let freq = 2 * k;
            if freq.unsigned_abs() as usize >= n / 2 {
                return Err(Error::InvalidArgument(format!(
                    "frequency {freq} out of range for grid {n}"
                )));
            }
            let idx = freq.rem_euclid(n as i64) as usize;
            spec[idx] += c;
        }
        let fourier = spec.clone();
        let mut back: Vec<Complex64> = spec.iter().map(|c| c * n as f64).collect();
        fft_inverse(&mut back);
        Ok(CircleFunction {
            n,
            samples: back,
            fourier,
            odd_mass: 0.0,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn odd_mass(&self) -> f64 {
        self.odd_mass
    }

    /// Coefficient of e^{i 2k theta}.
    pub fn coeff(&self, k: i64) -> Complex64 {
        let freq = 2 * k;
        if freq.unsigned_abs() as usize >= self.n / 2 {
            return Complex64::new(0.0, 0.0);
        }
        self.fourier[freq.rem_euclid(self.n as i64) as usize]
    }

    /// Trigonometric evaluation at an arbitrary angle from the even
    /// spectrum; exact for band-limited content.
    pub fn eval(&self, theta: f64) -> Complex64 {
        let half = (self.n / 2) as i64;
        let step = Complex64::new(0.0, 2.0 * theta).exp();
        let mut phase = Complex64::new(0.0, -(half as f64) * theta).exp();
        let mut acc = Complex64::new(0.0, 0.0);
        let mut k = -half;
        while k < half {
            let idx = k.rem_euclid(self.n as i64) as usize;
            let c = self.fourier[idx];
            if c.re != 0.0 || c.im != 0.0 {
                acc += c * phase;
            }
            phase *= step;
            k += 2;
        }
        acc
    }

    /// Largest |frequency| carrying more than 1e-12 of the peak coefficient
    /// magnitude.
    pub fn bandwidth(&self) -> f64 {
        let peak = self
            .fourier
            .iter()
            .fold(0.0f64, |m, c| m.max(c.norm()));
        if peak == 0.0 {
            return 0.0;
        }
        let half = self.n / 2;
        let mut bw = 0usize;
        for k in 0..self.n {
            let f = if k <= half { k } else { self.n - k };
            if self.fourier[k].norm() > 1e-12 * peak {
                bw = bw.max(f);
            }
        }
        bw as f64
    }

    /// Fraction of L2 mass in the top quarter of frequencies; a resolution
    /// diagnostic for resampled results.
    pub fn high_freq_fraction(&self) -> f64 {
        let half = self.n / 2;
        let cut = half / 2;
        let mut tail = 0.0;
        let mut total = 0.0;
        for k in 0..self.n {
            let f = if k <= half { k } else { self.n - k };
            let e = self.fourier[k].norm_sqr();
            total += e;
            if f >= cut {
                tail += e;
            }
        }
        if total > 0.0 {
            tail / total
        } else {
            0.0
        }
    }

    pub fn scale(&self, c: Complex64) -> CircleFunction {
        let samples = self.samples.iter().map(|v| v * c).collect();
        CircleFunction::from_samples(samples).unwrap()
    }

    pub fn conj(&self) -> CircleFunction {
        let samples = self.samples.iter().map(|v| v.conj()).collect();
        CircleFunction::from_samples(samples).unwrap()
    }

    pub fn sub(&self, other: &CircleFunction) -> Result<CircleFunction> {
        if self.n != other.n {
            return Err(Error::GridMismatch(self.n, other.n));
        }
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a - b)
            .collect();
        CircleFunction::from_samples(samples)
    }

    pub fn add(&self, other: &CircleFunction) -> Result<CircleFunction> {
        if self.n != other.n {
            return Err(Error::GridMismatch(self.n, other.n));
        }
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a + b)
            .collect();
        CircleFunction::from_samples(samples)
    }

    /// CSV with columns theta, re, im.
    pub fn to_csv_samples(&self) -> String {
        let mut out = String::from("theta,re,im\n");
        for (j, v) in self.samples.iter().enumerate() {
            let th = TAU * j as f64 / self.n as f64;
            out.push_str(&format!("{:.17e},{:.17e},{:.17e}\n", th, v.re, v.im));
        }
        out
    }

    /// CSV with columns k, re_c, im_c over the e_{2k} coefficients.
    pub fn to_csv_fourier(&self) -> String {
        let mut out = String::from("k,re_c,im_c\n");
        let half = (self.n / 4) as i64;
        for k in -half..half {
            let c = self.coeff(k);
            out.push_str(&format!("{},{:.17e},{:.17e}\n", k, c.re, c.im));
        }
        out
    }

    pub fn from_csv_samples(text: &str) -> Result<Self> {
        let mut samples = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if i == 0 || line.trim().is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split(',').collect();
            if parts.len() != 3 {
                return Err(Error::InvalidArgument(format!("bad CSV row: {line}")));
            }
            let re: f64 = parts[1]
                .trim()
                .parse()
                .map_err(|e| Error::InvalidArgument(format!("{e}")))?;
            let im: f64 = parts[2]
                .trim()
                .parse()
                .map_err(|e| Error::InvalidArgument(format!("{e}")))?;
            samples.push(Complex64::new(re, im));
        }
        Self::from_samples(samples)
    }
}

/// The representation inner product <f,h> = (1/2pi) int f conj(h) dtheta.
pub fn inner_product(f: &CircleFunction, h: &CircleFunction) -> Result<Complex64> {
    if f.n != h.n {
        return Err(Error::GridMismatch(f.n, h.n));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (a, b) in f.samples.iter().zip(&h.samples) {
        acc += a * b.conj();
    }
    Ok(acc / f.n as f64)
}

pub fn norm(f: &CircleFunction) -> f64 {
    inner_product(f, f).unwrap().re.max(0.0).sqrt()
}

/// Sobolev norm (sum_k (1 + |2k|^2)^order |c_{2k}|^2)^{1/2}.
pub fn sobolev_norm(f: &CircleFunction, order: i32) -> f64 {
    let half = (f.n / 4) as i64;
    let mut acc = 0.0;
    for k in -half..half {
        let c = f.coeff(k);
        if c.re != 0.0 || c.im != 0.0 {
            let w = 1.0 + (2 * k) as f64 * (2 * k) as f64;
            acc += w.powi(order) * c.norm_sqr();
        }
    }
    acc.sqrt()
}

/// Which computation path pi_act uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActPath {
    /// Homogeneous extension of degree lambda - 1, linear action on the
    /// plane, restriction to the circle.
    Plane,
    /// Boundary form through the disk action:
    /// f(g^{-1} b) |(g^{-1})'(b)|^{(1-lambda)/2}.
    Circle,
}

/// Twisted action of the group on a circle function.
///
/// Both paths compute the same operator; `Circle` goes through the disk
/// boundary maps and is kept as an independent cross-check of the whole
/// plane/disk identification.
pub fn pi_act_path(
    lambda: Complex64,
    g: &GroupElement,
    f: &CircleFunction,
    path: ActPath,
) -> CircleFunction {
    let ginv = g.inverse();
    let n = f.n;
    let samples: Vec<Complex64> = (0..n)
        .map(|j| {
            let th = TAU * j as f64 / n as f64;
            match path {
                ActPath::Plane => {
                    let w = ginv.apply_vec([th.cos(), th.sin()]);
                    let r = (w[0] * w[0] + w[1] * w[1]).sqrt();
                    let phi = w[1].atan2(w[0]);
                    f.eval(phi) * ((lambda - 1.0) * r.ln()).exp()
                }
                ActPath::Circle => {
                    let b = crate::geometry::BoundaryPoint::new(-2.0 * th);
                    let (b_img, deriv) = crate::geometry::boundary_act(&ginv, b);
                    let th_img = -0.5 * b_img.angle();
                    f.eval(th_img) * ((1.0 - lambda) * 0.5 * deriv.ln()).exp()
                }
            }
        })
        .collect();
    CircleFunction::from_samples(samples).unwrap()
}

/// Twisted action, plane-model path.
pub fn pi_act(lambda: Complex64, g: &GroupElement, f: &CircleFunction) -> CircleFunction {
    pi_act_path(lambda, g, f, ActPath::Plane)
}

/// The diagonal-invariant functional d_mu, normalized so d_mu(e_0) = 1:
/// d_mu(v) = [(1/2pi) int v(x) |sin 2x|^{(-mu-1)/2} dx] / (same with v = 1).
///
/// The kernel exponent must satisfy Re(-mu-1)/2 > -1, i.e. Re mu < 1, which
/// covers the principal and complementary ranges and the discrete points
/// mu = -k.
pub fn d_mu(mu: Complex64, v: &CircleFunction) -> Result<Complex64> {
    let num = d_mu_unnormalized(mu, v)?;
    let den = d_mu_unnormalized(mu, &CircleFunction::e0(v.n))?;
    Ok(num / den)
}

/// (1/2pi) int v(x) |sin 2x|^{(-mu-1)/2} dx without normalization.
pub fn d_mu_unnormalized(mu: Complex64, v: &CircleFunction) -> Result<Complex64> {
    let s = (-mu - 1.0) / 2.0;
    if s.re <= -1.0 {
        return Err(Error::ExponentOutOfRange(s));
    }
    // |sin 2x|^s = 2^s |sin x|^s |sin(x - pi/2)|^s.
    let factors = [SingularFactor::new(0.0, s), SingularFactor::new(PI / 2.0, s)];
    let two_s = (s * 2.0f64.ln()).exp();
    let opts = SingularOptions {
        tol_rel: 1e-11,
        tol_abs: 1e-14,
        ..Default::default()
    };
    let bw = v.bandwidth();
    let q = integrate_singular_osc(
        |x| two_s * v.eval(x),
        |_| bw,
        &factors,
        0.0,
        TAU,
        true,
        &opts,
    )?;
    Ok(q.value / TAU)
}

/// Closed form c_mu = 2^{(mu-1)/2} Gamma((1-mu)/2) / Gamma((3-mu)/4)^2.
pub fn c_mu_closed(mu: Complex64) -> Result<Complex64> {
    let g1 = gamma::gamma((1.0 - mu) / 2.0)?;
    let g4 = gamma::gamma((3.0 - mu) / 4.0)?;
    Ok(((mu - 1.0) * 0.5 * 2.0f64.ln()).exp() * g1 / (g4 * g4))
}

/// kappa = quadrature / closed form for the |sin 2x| kernel at mu; the
/// measure constant pinned by the acceptance suite (2 exactly, by the
/// Legendre duplication formula).
pub fn c_mu_quadrature_ratio(mu: Complex64, n: usize) -> Result<Complex64> {
    let quad = d_mu_unnormalized(mu, &CircleFunction::e0(n))?;
    Ok(quad / c_mu_closed(mu)?)
}

/// Smooth bump profile supported in (-pi/4, pi/4).
pub struct BumpProfile {
    f: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl BumpProfile {
    pub fn new<F: Fn(f64) -> f64 + Send + Sync + 'static>(f: F) -> Self {
        BumpProfile { f: Box::new(f) }
    }

    /// The standard C-infinity mollifier on (-pi/4, pi/4).
    pub fn standard() -> Self {
        BumpProfile::new(|t: f64| {
            let x = 4.0 * t / PI;
            if x.abs() < 1.0 {
                (-1.0 / (1.0 - x * x)).exp()
            } else {
                0.0
            }
        })
    }

    pub fn eval(&self, t: f64) -> f64 {
        (self.f)(t)
    }
}

/// Two contracted bumps at 0 and pi/2 (plus their period-pi copies),
/// normalized to unit representation norm on the grid.
pub fn bump_family(chi: &BumpProfile, r: f64, n: usize) -> Result<CircleFunction> {
    if r < 1.0 {
        return Err(Error::InvalidArgument(format!("bump scale r = {r} < 1")));
    }
    if r > n as f64 / 64.0 {
        return Err(Error::BumpTooNarrow { r, n });
    }
    let centers = [0.0, PI / 2.0, PI, 1.5 * PI];
    let raw = CircleFunction::from_fn(n, |th| {
        let mut acc = 0.0;
        for c in centers {
            let mut d = (th - c).rem_euclid(TAU);
            if d > PI {
                d -= TAU;
            }
            acc += chi.eval(r * d);
        }
        Complex64::new(acc, 0.0)
    })?;
    let nrm = norm(&raw);
    if nrm == 0.0 {
        return Err(Error::InvalidArgument("empty bump".into()));
    }
    Ok(raw.scale(Complex64::new(1.0 / nrm, 0.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::GroupElement;
    use approx::assert_relative_eq;

    const N: usize = 512;

    #[test]
    fn grid_fourier_round_trip_and_evenness() {
        let f = CircleFunction::from_fn(N, |th| {
            Complex64::new((2.0 * th).cos(), (4.0 * th).sin())
        })
        .unwrap();
        assert!(f.odd_mass() < 1e-12);
        let coeffs: Vec<(i64, Complex64)> = (-(N as i64) / 4 + 1..(N as i64) / 4)
            .map(|k| (k, f.coeff(k)))
            .collect();
        let g = CircleFunction::from_even_fourier(N, &coeffs).unwrap();
        for j in 0..N {
            assert!((f.samples()[j] - g.samples()[j]).norm() < 1e-10);
        }
        for j in 0..N / 2 {
            assert!((f.samples()[j] - f.samples()[j + N / 2]).norm() < 1e-12);
        }
        let odd = CircleFunction::from_fn(N, |th| Complex64::new(th.cos(), 0.0)).unwrap();
        assert!(odd.odd_mass() > 0.99);
    }

    #[test]
    fn inner_product_orthogonality() {
        let e0 = CircleFunction::e0(N);
        let e2 = CircleFunction::e(2, N).unwrap();
        let e4 = CircleFunction::e(4, N).unwrap();
        assert!((inner_product(&e0, &e0).unwrap() - 1.0).norm() < 1e-14);
        assert!(inner_product(&e2, &e4).unwrap().norm() < 1e-14);
        assert!((inner_product(&e2, &e2).unwrap() - 1.0).norm() < 1e-14);
        assert!(matches!(
            inner_product(&e0, &CircleFunction::e0(2 * N)),
            Err(Error::GridMismatch(_, _))
        ));
    }

    #[test]
    fn diagonal_action_closed_form() {
        // g = diag(e^t, e^{-t}) on e_0: (e^{-2t} cos^2 + e^{2t} sin^2)^{(lam-1)/2}.
        let t = 0.6;
        let lambda = Complex64::new(0.0, 3.0);
        let g = GroupElement::diagonal(t);
        let out = pi_act(lambda, &g, &CircleFunction::e0(N));
        for j in [0usize, 37, 111, 255] {
            let th = TAU * j as f64 / N as f64;
            let base = (-2.0 * t).exp() * th.cos() * th.cos()
                + (2.0 * t).exp() * th.sin() * th.sin();
            let want = ((lambda - 1.0) * 0.5 * base.ln()).exp();
            assert!(
                (out.samples()[j] - want).norm() < 1e-10,
                "j={j}: {} vs {want}",
                out.samples()[j]
            );
        }
    }

    #[test]
    fn rotation_translates_theta() {
        let lambda = Complex64::new(0.0, 2.0);
        let phi = 0.37;
        // A disk rotation by -2 phi is theta -> theta + phi in the plane
        // model (b = -2 theta), so pi(g) f = f(theta - phi).
        let g = GroupElement::rotation(-2.0 * phi);
        let f = CircleFunction::from_fn(N, |th| {
            Complex64::new((2.0 * th).cos() + 0.3, (4.0 * th).sin())
        })
        .unwrap();
        let out = pi_act(lambda, &g, &f);
        for j in [3usize, 64, 200] {
            let th = TAU * j as f64 / N as f64;
            assert!((out.samples()[j] - f.eval(th - phi)).norm() < 1e-9);
        }
        // Identity acts trivially.
        let id = pi_act(lambda, &GroupElement::identity(), &f);
        for j in 0..N {
            assert!((id.samples()[j] - f.samples()[j]).norm() < 1e-10);
        }
    }

    #[test]
    fn plane_and_circle_paths_agree() {
        let lambda = Complex64::new(0.0, 2.5);
        let g = GroupElement::new([[1.2, 0.35], [-0.15, 0.95]]).unwrap();
        let f = CircleFunction::from_fn(N, |th| {
            Complex64::new((2.0 * th).cos(), 0.5 * (6.0 * th).cos())
        })
        .unwrap();
        let a = pi_act_path(lambda, &g, &f, ActPath::Plane);
        let b = pi_act_path(lambda, &g, &f, ActPath::Circle);
        let mut worst = 0.0f64;
        for j in 0..N {
            worst = worst.max((a.samples()[j] - b.samples()[j]).norm());
        }
        assert!(worst < 1e-9, "paths disagree: {worst:.2e}");
    }

    #[test]
    fn representation_property_and_unitarity() {
        let lambda = Complex64::new(0.0, 2.0);
        let g = GroupElement::new([[1.1, 0.2], [0.3, 1.05]]).unwrap();
        let h = GroupElement::new([[0.9, -0.4], [0.25, 1.2]]).unwrap();
        let f = CircleFunction::from_fn(N, |th| {
            Complex64::new((2.0 * th).cos(), (4.0 * th).sin() * 0.5)
        })
        .unwrap();
        let gh = pi_act(lambda, &g.compose(&h), &f);
        let steps = pi_act(lambda, &g, &pi_act(lambda, &h, &f));
        let mut worst = 0.0f64;
        for j in 0..N {
            worst = worst.max((gh.samples()[j] - steps.samples()[j]).norm());
        }
        assert!(worst < 1e-8, "composition gap {worst:.2e}");

        // Unitarity on the principal series.
        let f2 = CircleFunction::e(2, N).unwrap();
        let before = inner_product(&f, &f2).unwrap();
        let after = inner_product(&pi_act(lambda, &g, &f), &pi_act(lambda, &g, &f2)).unwrap();
        assert!((before - after).norm() < 1e-8);

        // Non-preservation off the unitary axis.
        let lam_real = Complex64::new(0.5, 0.0);
        let before = inner_product(&f, &f).unwrap();
        let after =
            inner_product(&pi_act(lam_real, &g, &f), &pi_act(lam_real, &g, &f)).unwrap();
        assert!((before - after).norm() > 1e-3);
    }

    #[test]
    fn d_mu_basics() {
        let e0 = CircleFunction::e0(N);
        let d = d_mu(Complex64::new(0.0, 0.0), &e0).unwrap();
        assert!((d - 1.0).norm() < 1e-14);
        // Odd K-types vanish: shifting x by pi/2 fixes |sin 2x|, negates e_2.
        let e2 = CircleFunction::e(2, N).unwrap();
        let d = d_mu(Complex64::new(0.0, 0.0), &e2).unwrap();
        assert!(d.norm() < 1e-10, "d_mu(e_2) = {d}");
        let e6 = CircleFunction::e(6, N).unwrap();
        let d = d_mu(Complex64::new(0.0, 2.0), &e6).unwrap();
        assert!(d.norm() < 1e-10);
        // Known value: d_mu(1 + cos 4 theta) = 4/3 at mu = 0.
        let v = CircleFunction::from_fn(N, |th| Complex64::new(1.0 + (4.0 * th).cos(), 0.0))
            .unwrap();
        let d = d_mu(Complex64::new(0.0, 0.0), &v).unwrap();
        assert_relative_eq!(d.re, 4.0 / 3.0, max_relative = 1e-9);
        assert!(d.im.abs() < 1e-10);
        // Out-of-range exponent errors.
        assert!(matches!(
            d_mu(Complex64::new(1.5, 0.0), &e0),
            Err(Error::ExponentOutOfRange(_))
        ));
    }

    #[test]
    fn d_mu_diagonal_invariance() {
        let v = CircleFunction::from_fn(N, |th| {
            Complex64::new(1.0 + (4.0 * th).cos(), 0.3 * (2.0 * th).sin())
        })
        .unwrap();
        for mu in [Complex64::new(0.0, 0.0), Complex64::new(0.0, 2.0)] {
            let base = d_mu(mu, &v).unwrap();
            for t in [0.3, 1.0] {
                let moved = pi_act(mu, &GroupElement::diagonal(t), &v);
                let d = d_mu(mu, &moved).unwrap();
                assert!(
                    (d - base).norm() <= 1e-8 * base.norm().max(1.0),
                    "t={t}: {d} vs {base}"
                );
            }
        }
    }

    #[test]
    fn c_mu_closed_value_and_kappa() {
        let c0 = c_mu_closed(Complex64::new(0.0, 0.0)).unwrap();
        assert_relative_eq!(c0.re, 0.8346268, max_relative = 1e-6);
        // kappa = quadrature / closed form is 2 (Legendre duplication).
        for mu in [
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, 5.0),
        ] {
            let kappa = c_mu_quadrature_ratio(mu, N).unwrap();
            assert!(
                (kappa - Complex64::new(2.0, 0.0)).norm() < 1e-7,
                "mu={mu}: kappa {kappa}"
            );
        }
    }

    #[test]
    fn bump_family_norm_and_support() {
        let chi = BumpProfile::standard();
        for r in [2.0, 8.0, 32.0] {
            let v = bump_family(&chi, r, 4096).unwrap();
            assert_relative_eq!(norm(&v), 1.0, max_relative = 1e-6);
            assert!(v.eval(PI / 4.0).norm() < 1e-8);
        }
        assert!(matches!(
            bump_family(&BumpProfile::standard(), 1000.0, 4096),
            Err(Error::BumpTooNarrow { .. })
        ));
    }

    #[test]
    fn sobolev_norms() {
        let e0 = CircleFunction::e0(N);
        assert_relative_eq!(sobolev_norm(&e0, 0), 1.0, max_relative = 1e-12);
        assert_relative_eq!(sobolev_norm(&e0, 3), 1.0, max_relative = 1e-12);
        let e2 = CircleFunction::e(2, N).unwrap();
        assert_relative_eq!(sobolev_norm(&e2, 1), 5.0f64.sqrt(), max_relative = 1e-12);
        let f = CircleFunction::from_fn(N, |th| {
            Complex64::new((2.0 * th).cos() + 0.2 * (8.0 * th).cos(), 0.0)
        })
        .unwrap();
        assert!(sobolev_norm(&f, 2) >= sobolev_norm(&f, 1));
        assert!(sobolev_norm(&f, 1) >= sobolev_norm(&f, 0));
    }

    #[test]
    fn csv_round_trip() {
        let f = CircleFunction::from_fn(64, |th| {
            Complex64::new((2.0 * th).cos(), (4.0 * th).sin())
        })
        .unwrap();
        let back = CircleFunction::from_csv_samples(&f.to_csv_samples()).unwrap();
        for j in 0..64 {
            assert!((f.samples()[j] - back.samples()[j]).norm() < 1e-12);
        }
        assert!(f.to_csv_fourier().starts_with("k,re_c,im_c"));
    }
}
