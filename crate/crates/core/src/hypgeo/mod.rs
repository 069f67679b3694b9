//! Hyperbolic plane geometry.
//!
//! Isometries are real 2×2 matrices acting on the upper half-plane; points and
//! geodesics are stored in the Poincaré disc and converted through the fixed
//! Cayley transform `w = (z − i)/(z + i)`. Geodesics are recorded by their two
//! ideal endpoints on the unit circle.

mod geodesic;
mod isometry;
mod point;

pub use geodesic::{
    common_perpendicular, ideal_angle_of_real, to_klein_chord, Chord, CommonPerpendicular,
    Geodesic, OrientedGeodesic,
};
pub use isometry::{Isometry, IsometryKind, Orientation, TranslationLength};
pub use point::{dist, tangent_angle, HPoint, KleinPoint};

pub(crate) use isometry::Mat2;

use std::f64::consts::TAU;

/// Reduce an angle to `[0, 2π)`.
pub(crate) fn wrap_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Absolute angular separation on the circle, in `[0, π]`.
pub(crate) fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}
