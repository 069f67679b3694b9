//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use hypbill::hypgeo::{Geodesic, HPoint};
use hypbill::BilliardSequence;

pub fn seq(v: &[usize]) -> BilliardSequence {
    BilliardSequence::new(v.to_vec()).unwrap()
}

/// Ternary search for the minimum value of a unimodal function on `[a, b]`.
pub fn min_value(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    for _ in 0..200 {
        let m1 = a + (b - a) / 3.0;
        let m2 = b - (b - a) / 3.0;
        if f(m1) < f(m2) {
            b = m2;
        } else {
            a = m1;
        }
    }
    f((a + b) / 2.0)
}

/// Distance between two disjoint geodesics by minimizing point-to-geodesic
/// distance along the first.
pub fn geodesic_distance(l1: &Geodesic, l2: &Geodesic) -> f64 {
    let o = l1.oriented();
    min_value(|s| l2.distance_to(o.point_at(s)), -25.0, 25.0)
}

/// Distance from `p` to `l` by minimizing the point distance along `l`.
pub fn point_geodesic_distance(p: HPoint, l: &Geodesic) -> f64 {
    let o = l.oriented();
    min_value(|s| hypbill::hypgeo::dist(p, o.point_at(s)), -25.0, 25.0)
}

/// Euclidean unit tangent at `p` of the disc geodesic arc from `p` to `q`,
/// from the circle through `p`, `q`, and the inverse point `p / |p|²`.
pub fn arc_tangent(p: HPoint, q: HPoint) -> [f64; 2] {
    let (px, py, qx, qy) = (p.x(), p.y(), q.x(), q.y());
    let chord = [qx - px, qy - py];
    let det = px * qy - py * qx;
    if det.abs() < 1e-14 {
        let n = chord[0].hypot(chord[1]);
        return [chord[0] / n, chord[1] / n];
    }
    // Circle x² + y² − 2c·x + 1 = 0 is orthogonal to the unit circle; solve for c through p and q.
    let (rp, rq) = (px * px + py * py + 1.0, qx * qx + qy * qy + 1.0);
    let cx = (rp * qy - rq * py) / (2.0 * det);
    let cy = (px * rq - qx * rp) / (2.0 * det);
    let radial = [px - cx, py - cy];
    let mut t = [-radial[1], radial[0]];
    if t[0] * chord[0] + t[1] * chord[1] < 0.0 {
        t = [-t[0], -t[1]];
    }
    let n = t[0].hypot(t[1]);
    [t[0] / n, t[1] / n]
}

/// Unsigned angle between two vectors.
pub fn vector_angle(u: [f64; 2], v: [f64; 2]) -> f64 {
    let dot = u[0] * v[0] + u[1] * v[1];
    let cross = u[0] * v[1] - u[1] * v[0];
    cross.atan2(dot).abs()
}

/// Every sequence of length `2..=max_len` over labels `1..=m` with cyclically distinct neighbours.
pub fn all_sequences(m: usize, max_len: usize) -> Vec<BilliardSequence> {
    let mut out = Vec::new();
    for n in 2..=max_len {
        let total = m.pow(n as u32);
        for mut code in 0..total {
            let mut v = Vec::with_capacity(n);
            for _ in 0..n {
                v.push(code % m + 1);
                code /= m;
            }
            if let Ok(s) = BilliardSequence::new(v) {
                out.push(s);
            }
        }
    }
    out
}

type V3 = [f64; 3];

fn lorentz(x: V3, y: V3) -> f64 {
    x[0] * y[0] + x[1] * y[1] - x[2] * y[2]
}

fn comb(a: f64, x: V3, b: f64, y: V3) -> V3 {
    [
        a * x[0] + b * y[0],
        a * x[1] + b * y[1],
        a * x[2] + b * y[2],
    ]
}

/// Unit tangent at `p` obtained by turning `t` a quarter turn anticlockwise.
fn left(p: V3, t: V3) -> V3 {
    let c = [
        p[1] * t[2] - p[2] * t[1],
        p[2] * t[0] - p[0] * t[2],
        p[0] * t[1] - p[1] * t[0],
    ];
    [c[0], c[1], -c[2]]
}

/// Closing sides of a right-angled polygon in the hyperboloid model.
///
/// Walks the open chain of `free` sides with anticlockwise quarter turns, then
/// joins the line leaving the last vertex to the line entering the first by
/// their common perpendicular. `None` when the lines are not ultraparallel or
/// the three closing sides would not be positive with anticlockwise turns.
pub fn closing_sides_oracle(free: &[f64]) -> Option<[f64; 3]> {
    let p0 = [0.0, 0.0, 1.0];
    let t0 = [1.0, 0.0, 0.0];
    let (mut p, mut t) = (p0, t0);
    for &s in free {
        let (c, sh) = (s.cosh(), s.sinh());
        let (np, nt) = (comb(c, p, sh, t), comb(sh, p, c, t));
        p = comb(1.0 / (-lorentz(np, np)).sqrt(), np, 0.0, np);
        let nt = comb(1.0, nt, lorentz(nt, p), p);
        let nt = comb(1.0 / lorentz(nt, nt).sqrt(), nt, 0.0, nt);
        t = left(p, nt);
    }
    // Line A leaves p along t; line B runs backward from p0 along w.
    let w = left(p0, t0);
    let n_a = left(p, t);
    let n_b = left(p0, w);
    let (alpha, beta) = (lorentz(p, n_b), lorentz(t, n_b));
    let (gamma, delta) = (lorentz(p0, n_a), lorentz(w, n_a));
    if beta.abs() >= alpha.abs() || delta.abs() >= gamma.abs() {
        return None;
    }
    let u = (-beta / alpha).atanh();
    let v = (-delta / gamma).atanh();
    if u <= 0.0 || v <= 0.0 {
        return None;
    }
    let foot_a = comb(u.cosh(), p, u.sinh(), t);
    let foot_b = comb(v.cosh(), p0, v.sinh(), w);
    let length = (-lorentz(foot_a, foot_b)).max(1.0).acosh();
    if length <= 0.0 {
        return None;
    }
    let t_a = comb(u.sinh(), p, u.cosh(), t);
    if lorentz(foot_b, left(foot_a, t_a)) <= 0.0 {
        return None;
    }
    let arrive = comb(
        length.cosh() / length.sinh(),
        foot_b,
        -1.0 / length.sinh(),
        foot_a,
    );
    let toward_p0 = comb(-v.sinh(), p0, -v.cosh(), w);
    if lorentz(left(foot_b, arrive), toward_p0) <= 0.0 {
        return None;
    }
    Some([u, length, v])
}
