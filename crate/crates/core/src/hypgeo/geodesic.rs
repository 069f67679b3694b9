use num_complex::Complex64;

use super::isometry::{homogeneous_of_angle, Mat2};
use super::{circular_distance, wrap_angle, HPoint, Isometry, KleinPoint, Orientation};
use crate::error::{Error, Result};

/// Minimum angular separation of the two ideal endpoints.
const MIN_SEPARATION: f64 = 1e-12;

/// Complete unoriented geodesic, stored as its two ideal endpoints in `[0, 2π)`, sorted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geodesic {
    theta1: f64,
    theta2: f64,
}

impl Geodesic {
    pub fn new(theta1: f64, theta2: f64) -> Result<Self> {
        if circular_distance(theta1, theta2) <= MIN_SEPARATION {
            return Err(Error::DegenerateGeodesic);
        }
        Ok(Self::new_unchecked(theta1, theta2))
    }

    pub(crate) fn new_unchecked(theta1: f64, theta2: f64) -> Self {
        let (a, b) = (wrap_angle(theta1), wrap_angle(theta2));
        if a <= b {
            Self {
                theta1: a,
                theta2: b,
            }
        } else {
            Self {
                theta1: b,
                theta2: a,
            }
        }
    }

    /// The geodesic through two distinct points of the disc.
    pub fn through(p: HPoint, q: HPoint) -> Result<Self> {
        Ok(OrientedGeodesic::through(p, q)?.unoriented())
    }

    pub fn ideal_points(&self) -> (f64, f64) {
        (self.theta1, self.theta2)
    }

    /// Reflection across this geodesic: an orientation-reversing involution fixing it pointwise.
    pub fn reflection(&self) -> Isometry {
        let u = homogeneous_of_angle(self.theta1);
        let v = homogeneous_of_angle(self.theta2);
        let s = u[0] * v[1] + v[0] * u[1];
        let m = Mat2::new(s, 2.0 * u[0] * v[0], 2.0 * u[1] * v[1], s);
        Isometry::from_mat(m, Orientation::Reversing)
    }

    /// Hyperbolic distance from `p` to this geodesic.
    pub fn distance_to(&self, p: HPoint) -> f64 {
        let (alpha, beta) = self.endpoints_seen_from(p);
        let half = circular_distance(alpha, beta) / 2.0;
        (1.0 / half.sin()).max(1.0).acosh()
    }

    /// Foot of the perpendicular dropped from `p`.
    pub fn closest_point(&self, p: HPoint) -> HPoint {
        let (alpha, beta) = self.endpoints_seen_from(p);
        let half = circular_distance(alpha, beta) / 2.0;
        // Midpoint of the shorter arc between the transformed endpoints.
        let mut mid = (alpha + beta) / 2.0;
        if (alpha - beta).abs() > std::f64::consts::PI {
            mid += std::f64::consts::PI;
        }
        let r = ((std::f64::consts::FRAC_PI_2 - half) / 2.0).tan();
        let z = Complex64::from_polar(r, mid);
        let c = p.to_complex();
        HPoint::from_complex_unchecked((z + c) / (1.0 + c.conj() * z))
    }

    /// Ideal endpoints after the disc automorphism moving `p` to the origin.
    fn endpoints_seen_from(&self, p: HPoint) -> (f64, f64) {
        let c = p.to_complex();
        let f = |t: f64| {
            let w = Complex64::from_polar(1.0, t);
            ((w - c) / (1.0 - c.conj() * w)).arg()
        };
        (f(self.theta1), f(self.theta2))
    }

    pub fn contains(&self, p: HPoint, tol: f64) -> bool {
        self.distance_to(p) <= tol
    }

    /// True when the geodesics meet in exactly one point of the open disc.
    pub fn crosses(&self, other: &Geodesic) -> bool {
        let inside = |t: f64| t > self.theta1 && t < self.theta2;
        let (a, b) = other.ideal_points();
        if self.shares_endpoint(other, MIN_SEPARATION) {
            return false;
        }
        inside(a) != inside(b)
    }

    pub fn shares_endpoint(&self, other: &Geodesic, tol: f64) -> bool {
        let (a, b) = other.ideal_points();
        [self.theta1, self.theta2]
            .iter()
            .any(|&t| circular_distance(t, a) <= tol || circular_distance(t, b) <= tol)
    }

    /// Intersection point, or `None` if the geodesics do not cross.
    pub fn intersection(&self, other: &Geodesic) -> Option<HPoint> {
        if !self.crosses(other) {
            return None;
        }
        let c1 = to_klein_chord(self, None);
        let c2 = to_klein_chord(other, None);
        let k = c1.line_intersection(&c2)?;
        HPoint::from_klein(k).ok()
    }

    pub fn approx_eq(&self, other: &Geodesic, tol: f64) -> bool {
        let (a, b) = other.ideal_points();
        let same = circular_distance(self.theta1, a).max(circular_distance(self.theta2, b));
        let swapped = circular_distance(self.theta1, b).max(circular_distance(self.theta2, a));
        same.min(swapped) <= tol
    }

    /// Orient from `theta1` to `theta2`.
    pub fn oriented(&self) -> OrientedGeodesic {
        OrientedGeodesic {
            from: self.theta1,
            to: self.theta2,
        }
    }
}

/// Geodesic with a direction of travel, from ideal point `from` to ideal point `to`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientedGeodesic {
    from: f64,
    to: f64,
}

impl OrientedGeodesic {
    pub fn new(from: f64, to: f64) -> Result<Self> {
        if circular_distance(from, to) <= MIN_SEPARATION {
            return Err(Error::DegenerateGeodesic);
        }
        Ok(Self {
            from: wrap_angle(from),
            to: wrap_angle(to),
        })
    }

    /// The geodesic through `p` and then `q`, oriented from `p` towards `q`.
    pub fn through(p: HPoint, q: HPoint) -> Result<Self> {
        let (a, b) = (p.to_complex(), q.to_complex());
        let moved = (b - a) / (1.0 - a.conj() * b);
        let r = moved.norm();
        if !(r > 1e-15) {
            return Err(Error::DegenerateGeodesic);
        }
        let u = moved / r;
        let back = |z: Complex64| ((z + a) / (1.0 + a.conj() * z)).arg();
        Self::new(back(-u), back(u))
    }

    pub fn endpoints(&self) -> (f64, f64) {
        (self.from, self.to)
    }

    pub fn unoriented(&self) -> Geodesic {
        Geodesic::new_unchecked(self.from, self.to)
    }

    pub fn reversed(&self) -> OrientedGeodesic {
        OrientedGeodesic {
            from: self.to,
            to: self.from,
        }
    }

    pub fn image(&self, g: &Isometry) -> OrientedGeodesic {
        OrientedGeodesic {
            from: g.apply_ideal(self.from),
            to: g.apply_ideal(self.to),
        }
    }

    /// Orientation-preserving isometry taking the half-plane imaginary axis,
    /// traversed from 0 to ∞, onto this geodesic.
    pub fn frame(&self) -> Isometry {
        let mut u = homogeneous_of_angle(self.from);
        let v = homogeneous_of_angle(self.to);
        let m = Mat2::new(v[0], u[0], v[1], u[1]);
        if m.det() < 0.0 {
            u = [-u[0], -u[1]];
        }
        Isometry::from_mat(Mat2::new(v[0], u[0], v[1], u[1]), Orientation::Preserving)
    }

    /// Point at signed arc length `s` from the frame's base point.
    pub fn point_at(&self, s: f64) -> HPoint {
        let z = Complex64::new(0.0, s.exp());
        HPoint::from_upper_half(self.frame().apply_upper(z))
    }

    /// Signed arc-length coordinate of the projection of `p` onto the geodesic.
    pub fn param(&self, p: HPoint) -> f64 {
        let z = self.frame().inverse().apply_upper(p.to_upper_half());
        z.norm().ln()
    }
}

/// Straight segment in the Klein model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chord {
    pub p: KleinPoint,
    pub q: KleinPoint,
}

impl Chord {
    /// Intersection of the two supporting lines, `None` when parallel.
    pub(crate) fn line_intersection(&self, other: &Chord) -> Option<KleinPoint> {
        let d1 = [self.q[0] - self.p[0], self.q[1] - self.p[1]];
        let d2 = [other.q[0] - other.p[0], other.q[1] - other.p[1]];
        let den = d1[0] * d2[1] - d1[1] * d2[0];
        if den.abs() < 1e-300 {
            return None;
        }
        let w = [other.p[0] - self.p[0], other.p[1] - self.p[1]];
        let t = (w[0] * d2[1] - w[1] * d2[0]) / den;
        Some([self.p[0] + t * d1[0], self.p[1] + t * d1[1]])
    }
}

/// Klein-model image of a geodesic, optionally clipped to the segment between two of its points.
pub fn to_klein_chord(l: &Geodesic, clip: Option<(HPoint, HPoint)>) -> Chord {
    match clip {
        Some((a, b)) => Chord {
            p: a.to_klein(),
            q: b.to_klein(),
        },
        None => {
            let (t1, t2) = l.ideal_points();
            Chord {
                p: [t1.cos(), t1.sin()],
                q: [t2.cos(), t2.sin()],
            }
        }
    }
}

/// Disc angle of the real boundary point `x` of the upper half-plane.
pub fn ideal_angle_of_real(x: f64) -> f64 {
    wrap_angle(2.0 * 1f64.atan2(-x))
}

/// Shortest geodesic segment between two ultraparallel geodesics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommonPerpendicular {
    pub geodesic: Geodesic,
    pub length: f64,
    /// Foot on the first geodesic.
    pub foot1: HPoint,
    /// Foot on the second geodesic.
    pub foot2: HPoint,
}

/// The unique geodesic orthogonal to both `l1` and `l2`, found as the axis of
/// the product of the two reflections, whose translation length is twice the distance.
pub fn common_perpendicular(l1: &Geodesic, l2: &Geodesic) -> Result<CommonPerpendicular> {
    if l1.shares_endpoint(l2, 1e-12) {
        return Err(Error::Asymptotic);
    }
    if l1.crosses(l2) {
        return Err(Error::Intersecting);
    }
    let g = l1.reflection().compose(&l2.reflection());
    let geodesic = g.axis()?;
    let length = g.translation_length()?.length / 2.0;
    let foot1 = geodesic.intersection(l1).ok_or(Error::Asymptotic)?;
    let foot2 = geodesic.intersection(l2).ok_or(Error::Asymptotic)?;
    Ok(CommonPerpendicular {
        geodesic,
        length,
        foot1,
        foot2,
    })
}
