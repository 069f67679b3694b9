use std::fmt;

use num_complex::Complex64;

use super::{wrap_angle, Geodesic, HPoint};
use crate::error::{Error, Result};

/// Real 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Mat2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }

    pub fn mul(self, o: Mat2) -> Mat2 {
        Mat2 {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn det(self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(self) -> f64 {
        self.a + self.d
    }

    /// Adjugate; the inverse for unit determinant.
    pub fn adjugate(self) -> Mat2 {
        Mat2 {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Conjugation by `z ↦ −z̄`: `σ M σ = [[a, −b], [−c, d]]`.
    pub fn sigma(self) -> Mat2 {
        Mat2 {
            a: self.a,
            b: -self.b,
            c: -self.c,
            d: self.d,
        }
    }

    pub fn scale(self, s: f64) -> Mat2 {
        Mat2 {
            a: self.a * s,
            b: self.b * s,
            c: self.c * s,
            d: self.d * s,
        }
    }

    pub fn normalized(self) -> Mat2 {
        self.scale(1.0 / self.det().abs().sqrt())
    }

    pub fn apply_homogeneous(self, v: [f64; 2]) -> [f64; 2] {
        [self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1]]
    }

    /// Distance from ±I in the max norm, sign chosen by the trace.
    pub fn distance_from_identity(self) -> f64 {
        let s = if self.trace() >= 0.0 { 1.0 } else { -1.0 };
        (self.a - s)
            .abs()
            .max(self.b.abs())
            .max(self.c.abs())
            .max((self.d - s).abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Preserving,
    Reversing,
}

impl Orientation {
    pub fn compose(self, other: Orientation) -> Orientation {
        if self == other {
            Orientation::Preserving
        } else {
            Orientation::Reversing
        }
    }
}

/// Conjugacy class of an orientation-preserving isometry, read off `|trace|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsometryKind {
    Hyperbolic,
    Parabolic,
    EllipticOrIdentity,
}

impl fmt::Display for IsometryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsometryKind::Hyperbolic => "hyperbolic",
            IsometryKind::Parabolic => "parabolic",
            IsometryKind::EllipticOrIdentity => "elliptic-or-identity",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TranslationLength {
    pub length: f64,
    pub kind: IsometryKind,
}

/// Isometry of the hyperbolic plane.
///
/// Orientation-preserving maps act on the upper half-plane by
/// `z ↦ (az + b)/(cz + d)`. Orientation-reversing maps act by the same
/// fractional-linear map precomposed with `z ↦ −z̄`, which keeps `det = 1` for
/// both kinds. Matrices are projective: `M` and `−M` are the same isometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry {
    m: Mat2,
    orientation: Orientation,
}

/// Threshold on `|trace| − 2` used by [`Isometry::kind`].
const KIND_THRESHOLD: f64 = 1e-9;

impl Isometry {
    pub fn identity() -> Self {
        Self {
            m: Mat2::IDENTITY,
            orientation: Orientation::Preserving,
        }
    }

    /// Build from matrix entries; the matrix is rescaled to unit determinant.
    pub fn from_matrix(a: f64, b: f64, c: f64, d: f64, orientation: Orientation) -> Result<Self> {
        let m = Mat2::new(a, b, c, d);
        let det = m.det();
        if !(det > 0.0) || !det.is_finite() {
            return Err(Error::Domain(format!(
                "matrix determinant must be positive, got {det}"
            )));
        }
        Ok(Self {
            m: m.normalized(),
            orientation,
        })
    }

    pub(crate) fn from_mat(m: Mat2, orientation: Orientation) -> Self {
        Self {
            m: m.normalized(),
            orientation,
        }
    }

    pub(crate) fn mat(&self) -> Mat2 {
        self.m
    }

    pub fn matrix(&self) -> [f64; 4] {
        [self.m.a, self.m.b, self.m.c, self.m.d]
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_preserving(&self) -> bool {
        self.orientation == Orientation::Preserving
    }

    /// Translation by `s` along the imaginary axis of the half-plane (`i ↦ i·eˢ`).
    pub fn translation(s: f64) -> Self {
        let e = (s / 2.0).exp();
        Self {
            m: Mat2::new(e, 0.0, 0.0, 1.0 / e),
            orientation: Orientation::Preserving,
        }
    }

    /// Anticlockwise rotation by `theta` about `i`, i.e. about the disc origin.
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = (theta / 2.0).sin_cos();
        Self {
            m: Mat2::new(c, s, -s, c),
            orientation: Orientation::Preserving,
        }
    }

    /// Orientation-preserving map sending `p` to the disc origin (no particular rotation).
    pub fn centering(p: HPoint) -> Self {
        let z = p.to_upper_half();
        let r = z.im.sqrt();
        Self {
            m: Mat2::new(1.0 / r, -z.re / r, 0.0, r),
            orientation: Orientation::Preserving,
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let rhs = match self.orientation {
            Orientation::Preserving => other.m,
            Orientation::Reversing => other.m.sigma(),
        };
        Isometry {
            m: self.m.mul(rhs).normalized(),
            orientation: self.orientation.compose(other.orientation),
        }
    }

    pub fn inverse(&self) -> Isometry {
        let adj = self.m.adjugate();
        match self.orientation {
            Orientation::Preserving => Isometry {
                m: adj,
                orientation: Orientation::Preserving,
            },
            // (M σ)⁻¹ = σ M⁻¹ = (M⁻¹)^σ σ
            Orientation::Reversing => Isometry {
                m: adj.sigma(),
                orientation: Orientation::Reversing,
            },
        }
    }

    /// Conjugate `h ∘ self ∘ h⁻¹`.
    pub fn conjugate_by(&self, h: &Isometry) -> Isometry {
        h.compose(self).compose(&h.inverse())
    }

    pub fn apply_upper(&self, z: Complex64) -> Complex64 {
        let w = match self.orientation {
            Orientation::Preserving => z,
            Orientation::Reversing => -z.conj(),
        };
        let Mat2 { a, b, c, d } = self.m;
        (a * w + b) / (c * w + d)
    }

    pub fn apply(&self, p: HPoint) -> HPoint {
        HPoint::from_upper_half(self.apply_upper(p.to_upper_half()))
    }

    /// Action on ideal points, given as angles on the unit circle.
    pub fn apply_ideal(&self, theta: f64) -> f64 {
        angle_of_homogeneous(self.apply_homogeneous(homogeneous_of_angle(theta)))
    }

    pub(crate) fn apply_homogeneous(&self, v: [f64; 2]) -> [f64; 2] {
        let v = match self.orientation {
            Orientation::Preserving => v,
            Orientation::Reversing => [-v[0], v[1]],
        };
        self.m.apply_homogeneous(v)
    }

    pub fn apply_geodesic(&self, g: &Geodesic) -> Geodesic {
        let (a, b) = g.ideal_points();
        Geodesic::new_unchecked(self.apply_ideal(a), self.apply_ideal(b))
    }

    pub fn trace(&self) -> f64 {
        self.m.trace()
    }

    /// Classification of an orientation-preserving map by `|trace| − 2`.
    pub fn kind(&self) -> Result<IsometryKind> {
        if !self.is_preserving() {
            return Err(Error::OrientationReversing);
        }
        let excess = self.trace().abs() - 2.0;
        Ok(if excess > KIND_THRESHOLD {
            IsometryKind::Hyperbolic
        } else if excess < -KIND_THRESHOLD || self.m.distance_from_identity() <= 1e-10 {
            IsometryKind::EllipticOrIdentity
        } else {
            IsometryKind::Parabolic
        })
    }

    /// `2·arccosh(|trace|/2)` for hyperbolic maps, 0 with a kind tag otherwise.
    pub fn translation_length(&self) -> Result<TranslationLength> {
        let kind = self.kind()?;
        let length = match kind {
            IsometryKind::Hyperbolic => 2.0 * (self.trace().abs() / 2.0).acosh(),
            _ => 0.0,
        };
        Ok(TranslationLength { length, kind })
    }

    /// Translation length of an orientation-reversing map, `2·arcsinh(|a − d|/2)`;
    /// zero means a reflection.
    pub fn glide_length(&self) -> Result<f64> {
        if self.is_preserving() {
            return Err(Error::Domain(
                "glide length of an orientation-preserving map".into(),
            ));
        }
        Ok(2.0 * ((self.m.a - self.m.d).abs() / 2.0).asinh())
    }

    /// Ideal endpoints `(repelling, attracting)` of the axis of a hyperbolic map.
    pub fn oriented_axis(&self) -> Result<(f64, f64)> {
        match self.kind()? {
            IsometryKind::Hyperbolic => {}
            k => return Err(Error::NoAxis(k)),
        }
        let Mat2 { a, b, c, d } = self.m;
        let tr = a + d;
        let disc = (tr * tr - 4.0).sqrt();
        // Larger-modulus eigenvalue first; the other is its reciprocal.
        let big = (tr + tr.signum() * disc) / 2.0;
        let small = 1.0 / big;
        let eigvec = |lambda: f64| {
            let v1 = [b, lambda - a];
            let v2 = [lambda - d, c];
            if v1[0].hypot(v1[1]) >= v2[0].hypot(v2[1]) {
                v1
            } else {
                v2
            }
        };
        Ok((
            angle_of_homogeneous(eigvec(small)),
            angle_of_homogeneous(eigvec(big)),
        ))
    }

    /// The invariant geodesic of a hyperbolic map.
    pub fn axis(&self) -> Result<Geodesic> {
        let (r, a) = self.oriented_axis()?;
        Geodesic::new(r, a)
    }

    /// `±I` within `tol`, orientation preserving.
    pub fn is_identity(&self, tol: f64) -> bool {
        self.is_preserving() && self.m.distance_from_identity() <= tol
    }

    /// Equality up to the sign of the matrix.
    pub fn approx_eq(&self, other: &Isometry, tol: f64) -> bool {
        if self.orientation != other.orientation {
            return false;
        }
        let d = |s: f64| {
            (self.m.a - s * other.m.a)
                .abs()
                .max((self.m.b - s * other.m.b).abs())
                .max((self.m.c - s * other.m.c).abs())
                .max((self.m.d - s * other.m.d).abs())
        };
        d(1.0).min(d(-1.0)) <= tol
    }
}

/// Boundary point `e^{iθ}` of the disc as a homogeneous real coordinate on the
/// half-plane boundary: the Cayley preimage is `x = −cot(θ/2)`.
pub(crate) fn homogeneous_of_angle(theta: f64) -> [f64; 2] {
    let (s, c) = (theta / 2.0).sin_cos();
    [-c, s]
}

pub(crate) fn angle_of_homogeneous(v: [f64; 2]) -> f64 {
    wrap_angle(2.0 * v[1].atan2(-v[0]))
}
