//! Poincaré-disc figures: geodesic segments drawn as arcs of circles orthogonal to the boundary.

use std::fmt::Write;

use hypbill::hypgeo::HPoint;

pub const BLUE: &str = "#1f4fd1";
pub const RED: &str = "#d1321f";
pub const GREEN: &str = "#1a9c3a";
pub const INK: &str = "#222222";

pub struct Scene {
    size: f64,
    body: String,
}

impl Scene {
    pub fn new(size: f64) -> Self {
        let mut s = Self {
            size,
            body: String::new(),
        };
        let c = size / 2.0;
        let _ = writeln!(
            s.body,
            r##"<circle cx="{c:.3}" cy="{c:.3}" r="{:.3}" fill="#f7f7f2" stroke="#888888" stroke-width="1"/>"##,
            s.radius()
        );
        s
    }

    fn radius(&self) -> f64 {
        0.47 * self.size
    }

    /// Screen coordinates with the y axis pointing down.
    fn screen(&self, x: f64, y: f64) -> (f64, f64) {
        let c = self.size / 2.0;
        (c + self.radius() * x, c - self.radius() * y)
    }

    /// Geodesic segment from `p` to `q`.
    pub fn segment(&mut self, p: HPoint, q: HPoint, color: &str, width: f64) {
        let (sx, sy) = self.screen(p.x(), p.y());
        let (ex, ey) = self.screen(q.x(), q.y());
        let d = match orthogonal_circle(p, q) {
            None => format!("M {sx:.3} {sy:.3} L {ex:.3} {ey:.3}"),
            Some((cx, cy, r)) => {
                let (ccx, ccy) = self.screen(cx, cy);
                let cross = (ex - sx) * (ccy - sy) - (ey - sy) * (ccx - sx);
                let sweep = u8::from(cross > 0.0);
                let rr = r * self.radius();
                format!("M {sx:.3} {sy:.3} A {rr:.3} {rr:.3} 0 0 {sweep} {ex:.3} {ey:.3}")
            }
        };
        let _ = writeln!(
            self.body,
            r#"<path d="{d}" fill="none" stroke="{color}" stroke-width="{width}" stroke-linecap="round"/>"#
        );
    }

    pub fn dot(&mut self, p: HPoint, color: &str) {
        let (x, y) = self.screen(p.x(), p.y());
        let _ = writeln!(
            self.body,
            r#"<circle cx="{x:.3}" cy="{y:.3}" r="2.5" fill="{color}"/>"#
        );
    }

    pub fn label(&mut self, p: HPoint, text: &str, color: &str) {
        let (x, y) = self.screen(p.x(), p.y());
        let _ = writeln!(
            self.body,
            r#"<text x="{x:.3}" y="{y:.3}" font-family="sans-serif" font-size="13" fill="{color}" text-anchor="middle" dominant-baseline="middle">{text}</text>"#
        );
    }

    pub fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n{1}</svg>\n",
            self.size, self.body
        )
    }
}

/// Centre and radius of the circle through `p` and `q` orthogonal to the unit
/// circle, or `None` when the geodesic is a diameter.
fn orthogonal_circle(p: HPoint, q: HPoint) -> Option<(f64, f64, f64)> {
    let (px, py, qx, qy) = (p.x(), p.y(), q.x(), q.y());
    let det = px * qy - py * qx;
    if det.abs() < 1e-12 {
        return None;
    }
    let (rp, rq) = (px * px + py * py + 1.0, qx * qx + qy * qy + 1.0);
    let cx = (rp * qy - rq * py) / (2.0 * det);
    let cy = (px * rq - qx * rp) / (2.0 * det);
    let r = (cx * cx + cy * cy - 1.0).sqrt();
    Some((cx, cy, r))
}
