//! Euclidean predicates on Klein-model points.

use crate::hypgeo::KleinPoint;

pub(crate) fn cross(o: KleinPoint, a: KleinPoint, b: KleinPoint) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

pub(crate) fn sub(a: KleinPoint, b: KleinPoint) -> KleinPoint {
    [a[0] - b[0], a[1] - b[1]]
}

pub(crate) fn norm(a: KleinPoint) -> f64 {
    a[0].hypot(a[1])
}

pub(crate) fn lerp(a: KleinPoint, b: KleinPoint, t: f64) -> KleinPoint {
    [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])]
}

/// Shoelace signed area; positive for anticlockwise polygons.
pub(crate) fn signed_area(pts: &[KleinPoint]) -> f64 {
    let n = pts.len();
    (0..n)
        .map(|i| {
            let (p, q) = (pts[i], pts[(i + 1) % n]);
            p[0] * q[1] - q[0] * p[1]
        })
        .sum::<f64>()
        / 2.0
}

/// Parameters `(s, t)` of the crossing point of segments `p0p1` and `q0q1`,
/// `None` when the supporting lines are parallel.
pub(crate) fn segment_params(
    p0: KleinPoint,
    p1: KleinPoint,
    q0: KleinPoint,
    q1: KleinPoint,
) -> Option<(f64, f64)> {
    let d1 = sub(p1, p0);
    let d2 = sub(q1, q0);
    let den = d1[0] * d2[1] - d1[1] * d2[0];
    if den.abs() <= 1e-300 {
        return None;
    }
    let w = sub(q0, p0);
    let s = (w[0] * d2[1] - w[1] * d2[0]) / den;
    let t = (w[0] * d1[1] - w[1] * d1[0]) / den;
    Some((s, t))
}

/// Closed-segment intersection test, including touching and collinear overlap.
pub(crate) fn segments_touch(
    p0: KleinPoint,
    p1: KleinPoint,
    q0: KleinPoint,
    q1: KleinPoint,
) -> bool {
    let d1 = cross(q0, q1, p0);
    let d2 = cross(q0, q1, p1);
    let d3 = cross(p0, p1, q0);
    let d4 = cross(p0, p1, q1);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    let on = |a: KleinPoint, b: KleinPoint, c: KleinPoint, d: f64| {
        d == 0.0
            && c[0] >= a[0].min(b[0])
            && c[0] <= a[0].max(b[0])
            && c[1] >= a[1].min(b[1])
            && c[1] <= a[1].max(b[1])
    };
    on(q0, q1, p0, d1) || on(q0, q1, p1, d2) || on(p0, p1, q0, d3) || on(p0, p1, q1, d4)
}
