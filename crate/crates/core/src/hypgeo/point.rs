use num_complex::Complex64;

use crate::error::{Error, Result};

/// A point of the hyperbolic plane in Poincaré disc coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HPoint {
    x: f64,
    y: f64,
}

/// A point of the closed unit disc in Klein (projective) coordinates.
pub type KleinPoint = [f64; 2];

impl HPoint {
    pub const ORIGIN: HPoint = HPoint { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Result<Self> {
        let r2 = x * x + y * y;
        if !(r2 < 1.0) {
            return Err(Error::OutsideDisc { x, y });
        }
        Ok(Self { x, y })
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    /// Internal constructor for points produced by isometries and model changes,
    /// whose modulus is < 1 by construction. Rounding can push points extremely
    /// close to the circle onto it; those are pulled back by one ulp.
    pub(crate) fn from_complex_unchecked(z: Complex64) -> Self {
        let r = z.norm();
        if r >= 1.0 {
            let s = (1.0 - f64::EPSILON) / r;
            Self {
                x: z.re * s,
                y: z.im * s,
            }
        } else {
            Self { x: z.re, y: z.im }
        }
    }

    pub fn x(self) -> f64 {
        self.x
    }

    pub fn y(self) -> f64 {
        self.y
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    /// Inverse Cayley transform: disc point to upper half-plane point.
    pub fn to_upper_half(self) -> Complex64 {
        let w = self.to_complex();
        Complex64::i() * (1.0 + w) / (1.0 - w)
    }

    /// Cayley transform: upper half-plane point to disc point.
    pub fn from_upper_half(z: Complex64) -> Self {
        Self::from_complex_unchecked((z - Complex64::i()) / (z + Complex64::i()))
    }

    pub fn to_klein(self) -> KleinPoint {
        let s = 2.0 / (1.0 + self.norm_sq());
        [s * self.x, s * self.y]
    }

    pub fn from_klein(k: KleinPoint) -> Result<Self> {
        let r2 = k[0] * k[0] + k[1] * k[1];
        if !(r2 < 1.0) {
            return Err(Error::OutsideDisc { x: k[0], y: k[1] });
        }
        let s = 1.0 / (1.0 + (1.0 - r2).sqrt());
        Ok(Self::from_complex_unchecked(Complex64::new(
            s * k[0],
            s * k[1],
        )))
    }

    /// Point on the hyperboloid `t² − x² − y² = 1`.
    pub(crate) fn to_hyperboloid(self) -> [f64; 3] {
        let r2 = self.norm_sq();
        let d = 1.0 - r2;
        [(1.0 + r2) / d, 2.0 * self.x / d, 2.0 * self.y / d]
    }

    pub(crate) fn from_hyperboloid(v: [f64; 3]) -> Self {
        let n = (v[0] * v[0] - v[1] * v[1] - v[2] * v[2]).sqrt();
        let (t, x, y) = (v[0] / n, v[1] / n, v[2] / n);
        Self::from_complex_unchecked(Complex64::new(x / (1.0 + t), y / (1.0 + t)))
    }
}

/// Hyperbolic distance in the disc: `2·artanh |p − q| / |1 − p̄q|`.
pub fn dist(p: HPoint, q: HPoint) -> f64 {
    let (a, b) = (p.to_complex(), q.to_complex());
    let ratio = (a - b).norm() / (1.0 - a.conj() * b).norm();
    2.0 * ratio.min(1.0 - f64::EPSILON).atanh()
}

/// Direction (Euclidean angle in the disc) of the geodesic leaving `p` towards `q`.
///
/// The disc Möbius map sending `p` to the origin has real positive derivative at
/// `p`, so the direction of `q` seen from the origin after the map is the tangent
/// direction at `p`.
pub fn tangent_angle(p: HPoint, q: HPoint) -> f64 {
    let (a, b) = (p.to_complex(), q.to_complex());
    ((b - a) / (1.0 - a.conj() * b)).arg()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_points_outside_disc() {
        assert!(HPoint::new(1.0, 0.0).is_err());
        assert!(HPoint::new(0.6, 0.8).is_err());
        assert!(HPoint::new(0.6, 0.79).is_ok());
    }

    #[test]
    fn radial_distance_matches_metric_integral() {
        // ∫₀ʳ 2/(1−s²) ds, composite Simpson on 2000 panels.
        let r = (0.5f64).tanh();
        let n = 2000;
        let h = r / n as f64;
        let f = |s: f64| 2.0 / (1.0 - s * s);
        let mut acc = f(0.0) + f(r);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * f(i as f64 * h);
        }
        let integral = acc * h / 3.0;
        assert!((integral - 1.0).abs() < 1e-12);
        let d = dist(HPoint::ORIGIN, HPoint::new(r, 0.0).unwrap());
        assert!((d - integral).abs() < 1e-12);
    }

    #[test]
    fn coincident_points_have_zero_distance() {
        let p = HPoint::new(0.3, -0.4).unwrap();
        assert_eq!(dist(p, p), 0.0);
    }

    #[test]
    fn cayley_round_trip() {
        let p = HPoint::new(-0.2, 0.7).unwrap();
        let q = HPoint::from_upper_half(p.to_upper_half());
        assert!((p.x() - q.x()).abs() < 1e-14 && (p.y() - q.y()).abs() < 1e-14);
        assert!(HPoint::ORIGIN.to_upper_half().im > 0.999_999);
    }

    #[test]
    fn klein_image_of_half() {
        let k = HPoint::new(0.5, 0.0).unwrap().to_klein();
        assert!((k[0] - 0.8).abs() < 1e-15 && k[1] == 0.0);
        let back = HPoint::from_klein(k).unwrap();
        assert!((back.x() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn hyperboloid_round_trip() {
        let p = HPoint::new(0.1, -0.55).unwrap();
        let q = HPoint::from_hyperboloid(p.to_hyperboloid());
        assert!((p.x() - q.x()).abs() < 1e-14 && (p.y() - q.y()).abs() < 1e-14);
    }
}
