//! The Poincare disk, its boundary circle, the projective matrix action and
//! the horocycle bracket.
//!
//! Conventions (fixed crate-wide): curvature -1, i.e. metric
//! 4(dx^2+dy^2)/(1-r^2)^2, Laplacian -((1-r^2)^2/4)(dxx+dyy), and
//! e^{<z,b>} = (1 - |z|^2)/|z - e^{ib}|^2, the Poisson kernel. Under these
//! the plane wave e^{((1+lambda)/2)<z,b>} has eigenvalue (1-lambda^2)/4.
//!
//! Real 2x2 matrices act on the upper half-plane (conjugating the argument
//! first when det < 0) and are carried to the disk by the Cayley map
//! w -> (w - i)/(w + i); the disk form is a Mobius map in SU(1,1) shape,
//! composed with z -> conj(z) for the orientation-reversing coset.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// A point of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint(Complex64);

impl DiskPoint {
    pub fn new(z: Complex64) -> Result<Self> {
        if z.norm() < 1.0 {
            Ok(DiskPoint(z))
        } else {
            Err(Error::InvalidArgument(format!(
                "|z| = {} is not < 1",
                z.norm()
            )))
        }
    }

    pub fn from_xy(x: f64, y: f64) -> Result<Self> {
        Self::new(Complex64::new(x, y))
    }

    pub fn z(&self) -> Complex64 {
        self.0
    }

    /// Hyperbolic distance to the origin (curvature -1).
    pub fn dist_origin(&self) -> f64 {
        2.0 * self.0.norm().atanh()
    }
}

/// A boundary point e^{ib}, stored as the angle b in [0, 2 pi).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint(f64);

impl BoundaryPoint {
    pub fn new(b: f64) -> Self {
        BoundaryPoint(b.rem_euclid(TAU))
    }

    pub fn angle(&self) -> f64 {
        self.0
    }

    pub fn point(&self) -> Complex64 {
        Complex64::new(0.0, self.0).exp()
    }
}

/// Series classification of a spectral parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Series {
    Principal,
    Complementary,
    Discrete,
}

/// A representation parameter lambda with derived eigenvalue
/// mu = (1 - lambda^2)/4.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralParam {
    pub lambda: Complex64,
}

impl SpectralParam {
    pub fn new(lambda: Complex64) -> Self {
        SpectralParam { lambda }
    }

    pub fn principal(t: f64) -> Self {
        SpectralParam {
            lambda: Complex64::new(0.0, t),
        }
    }

    pub fn mu(&self) -> Complex64 {
        (1.0 - self.lambda * self.lambda) / 4.0
    }

    pub fn series(&self) -> Option<Series> {
        let l = self.lambda;
        if l.re.abs() < 1e-12 {
            return Some(Series::Principal);
        }
        if l.im.abs() < 1e-12 {
            let k = -l.re;
            if k > 1.0 && (k - k.round()).abs() < 1e-12 && (k.round() as i64) % 2 == 1 {
                return Some(Series::Discrete);
            }
            if l.re.abs() < 1.0 {
                return Some(Series::Complementary);
            }
        }
        None
    }
}

/// A real 2x2 matrix modulo scalars, normalized to |det| = 1.
#[derive(Debug, Clone, Copy)]
pub struct GroupElement {
    m: [[f64; 2]; 2],
    det_sign: f64,
}

impl GroupElement {
    pub fn new(m: [[f64; 2]; 2]) -> Result<Self> {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if det == 0.0 || !det.is_finite() {
            return Err(Error::SingularMatrix);
        }
        let s = det.abs().sqrt();
        Ok(GroupElement {
            m: [[m[0][0] / s, m[0][1] / s], [m[1][0] / s, m[1][1] / s]],
            det_sign: det.signum(),
        })
    }

    pub fn identity() -> Self {
        GroupElement {
            m: [[1.0, 0.0], [0.0, 1.0]],
            det_sign: 1.0,
        }
    }

    /// Rotation of the disk about 0 by the angle phi.
    pub fn rotation(phi: f64) -> Self {
        let (s, c) = (0.5 * phi).sin_cos();
        GroupElement {
            m: [[c, s], [-s, c]],
            det_sign: 1.0,
        }
    }

    /// diag(e^t, e^{-t}): the geodesic-flow subgroup.
    pub fn diagonal(t: f64) -> Self {
        GroupElement {
            m: [[t.exp(), 0.0], [0.0, (-t).exp()]],
            det_sign: 1.0,
        }
    }

    pub fn entries(&self) -> [[f64; 2]; 2] {
        self.m
    }

    pub fn det_sign(&self) -> f64 {
        self.det_sign
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let a = &self.m;
        let b = &other.m;
        GroupElement {
            m: [
                [
                    a[0][0] * b[0][0] + a[0][1] * b[1][0],
                    a[0][0] * b[0][1] + a[0][1] * b[1][1],
                ],
                [
                    a[1][0] * b[0][0] + a[1][1] * b[1][0],
                    a[1][0] * b[0][1] + a[1][1] * b[1][1],
                ],
            ],
            det_sign: self.det_sign * other.det_sign,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let [[a, b], [c, d]] = self.m;
        let det = a * d - b * c; // = +-1
        GroupElement {
            m: [[d / det, -b / det], [-c / det, a / det]],
            det_sign: self.det_sign,
        }
    }

    /// Linear action on a plane vector.
    pub fn apply_vec(&self, v: [f64; 2]) -> [f64; 2] {
        [
            self.m[0][0] * v[0] + self.m[0][1] * v[1],
            self.m[1][0] * v[0] + self.m[1][1] * v[1],
        ]
    }

    /// Disk form: a Mobius map (alpha z + beta)/(conj(beta) z + conj(alpha))
    /// with |alpha|^2 - |beta|^2 = 1, preceded by z -> conj(z) when flip.
    fn disk_form(&self) -> (Complex64, Complex64, bool) {
        let flip = self.det_sign < 0.0;
        // For det = -1, factor off J = diag(1, -1) (which acts as conj on
        // the disk): g = h J with h = g J, det h = 1.
        let [[a, b], [c, d]] = if flip {
            let [[a, b], [c, d]] = self.m;
            [[a, -b], [c, -d]]
        } else {
            self.m
        };
        let alpha = Complex64::new(0.5 * (a + d), 0.5 * (b - c));
        let beta = Complex64::new(0.5 * (a - d), -0.5 * (b + c));
        (alpha, beta, flip)
    }

    pub fn norm_max(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .fold(0.0f64, |acc, &x| acc.max(x.abs()))
    }
}

impl PartialEq for GroupElement {
    /// Projective equality: g and -g compare equal.
    fn eq(&self, other: &Self) -> bool {
        if self.det_sign != other.det_sign {
            return false;
        }
        let same = self
            .m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .all(|(x, y)| (x - y).abs() < 1e-12);
        let negated = self
            .m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .all(|(x, y)| (x + y).abs() < 1e-12);
        same || negated
    }
}

/// Mobius action of g on a disk point.
pub fn mobius_act(g: &GroupElement, z: DiskPoint) -> DiskPoint {
    let (alpha, beta, flip) = g.disk_form();
    let w = if flip { z.z().conj() } else { z.z() };
    let img = (alpha * w + beta) / (beta.conj() * w + alpha.conj());
    // The image is inside the disk up to roundoff.
    DiskPoint(if img.norm() >= 1.0 {
        img / img.norm() * (1.0 - 1e-15)
    } else {
        img
    })
}

/// Boundary action of g in the angle coordinate, with the positive
/// derivative |d(g b)/db|.
pub fn boundary_act(g: &GroupElement, b: BoundaryPoint) -> (BoundaryPoint, f64) {
    let (alpha, beta, flip) = g.disk_form();
    let w = if flip { b.point().conj() } else { b.point() };
    let denom = beta.conj() * w + alpha.conj();
    let img = (alpha * w + beta) / denom;
    let deriv = 1.0 / denom.norm_sqr(); // |m'(w)| with unit determinant
    (BoundaryPoint::new(img.arg()), deriv)
}

/// Signed distance from the origin to the horocycle through z with endpoint
/// b: <z,b> = log((1 - |z|^2) / |z - e^{ib}|^2).
pub fn horocycle_bracket(z: DiskPoint, b: BoundaryPoint) -> f64 {
    let num = 1.0 - z.z().norm_sqr();
    let den = (z.z() - b.point()).norm_sqr();
    (num / den).ln()
}

/// Plane wave e^{((1 + lambda)/2) <z,b>}.
pub fn plane_wave(sp: SpectralParam, z: DiskPoint, b: BoundaryPoint) -> Complex64 {
    let br = horocycle_bracket(z, b);
    ((1.0 + sp.lambda) * 0.5 * br).exp()
}

/// Hyperbolic Laplacian -((1-|z|^2)^2/4)(dxx + dyy) by central differences
/// with one Richardson step over h, h/2.
pub fn laplace_beltrami_fd<F>(field: &F, z: DiskPoint, h: f64) -> Result<Complex64>
where
    F: Fn(DiskPoint) -> Complex64,
{
    if z.z().norm() + h >= 1.0 {
        return Err(Error::StencilEscapesDisk { z: z.z(), h });
    }
    let lap = |h: f64| -> Complex64 {
        let zc = z.z();
        let fx1 = field(DiskPoint(zc + h));
        let fx2 = field(DiskPoint(zc - h));
        let fy1 = field(DiskPoint(zc + Complex64::new(0.0, h)));
        let fy2 = field(DiskPoint(zc - Complex64::new(0.0, h)));
        let f0 = field(DiskPoint(zc));
        (fx1 + fx2 + fy1 + fy2 - 4.0 * f0) / (h * h)
    };
    let coarse = lap(h);
    let fine = lap(0.5 * h);
    let euclid = (4.0 * fine - coarse) / 3.0;
    let w = 1.0 - z.z().norm_sqr();
    Ok(-(w * w / 4.0) * euclid)
}
