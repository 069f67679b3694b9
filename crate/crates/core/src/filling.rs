//! The filling test: cut a table along a family of trajectories and inspect
//! the complementary faces.
//!
//! Everything happens in the Klein model, where geodesic segments are straight,
//! so the cut is a planar segment arrangement. Faces are recovered from a
//! half-edge structure; angles for Gauss–Bonnet areas are measured back in the
//! Poincaré model, which is conformal.

use std::f64::consts::PI;

use crate::billiard::BilliardTrajectory;
use crate::error::{Error, Result};
use crate::hypgeo::{tangent_angle, wrap_angle, HPoint, KleinPoint};
use crate::planar;
use crate::polygon::Table;
use crate::tol::Tolerances;

/// Origin of an arrangement edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeTag {
    Trajectory,
    Side(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrangementEdge {
    pub a: usize,
    pub b: usize,
    pub tag: EdgeTag,
}

/// A face as its anticlockwise boundary cycle.
#[derive(Debug, Clone, PartialEq)]
pub struct Face {
    /// Vertex ids around the boundary.
    pub vertices: Vec<usize>,
    /// `edges[i]` joins `vertices[i]` to `vertices[i + 1]`.
    pub edges: Vec<usize>,
    /// Euclidean signed area in the Klein model; negative only for the outer face.
    pub signed_area: f64,
}

/// Planar subdivision of a table by trajectory segments.
#[derive(Debug, Clone, PartialEq)]
pub struct Arrangement {
    pub vertices: Vec<KleinPoint>,
    /// `Some(i)` when vertex is the table's corner `i`.
    pub corner: Vec<Option<usize>>,
    pub edges: Vec<ArrangementEdge>,
    /// Bounded faces followed by the outer face, which is last.
    pub faces: Vec<Face>,
    /// Points merged at distances close to the snap tolerance.
    pub warnings: Vec<String>,
}

impl Arrangement {
    pub fn interior_faces(&self) -> &[Face] {
        &self.faces[..self.faces.len() - 1]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Hyperbolic area of a face by Gauss–Bonnet: `(m − 2)π − Σ angles`.
    pub fn face_area(&self, f: &Face) -> Result<f64> {
        let pts = f
            .vertices
            .iter()
            .map(|&v| HPoint::from_klein(self.vertices[v]))
            .collect::<Result<Vec<_>>>()?;
        let m = pts.len();
        let angles: f64 = (0..m)
            .map(|i| {
                let p = pts[i];
                let next = tangent_angle(p, pts[(i + 1) % m]);
                let prev = tangent_angle(p, pts[(i + m - 1) % m]);
                wrap_angle(prev - next)
            })
            .sum();
        Ok((m as f64 - 2.0) * PI - angles)
    }
}

/// Complementary region types of the filling definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaceClass {
    /// Bounded by trajectory segments only.
    PureDisc,
    /// Touches one side of the table away from its corners.
    EdgeDisc,
    /// Touches two adjacent sides and exactly their common corner.
    CornerDisc,
    Invalid,
}

struct Segment {
    p: KleinPoint,
    q: KleinPoint,
    tag: EdgeTag,
    /// `(parameter along the segment, vertex id)`.
    stops: Vec<(f64, usize)>,
}

struct VertexPool {
    points: Vec<KleinPoint>,
    snap: f64,
    warnings: Vec<String>,
}

impl VertexPool {
    fn insert(&mut self, x: KleinPoint) -> usize {
        for (i, p) in self.points.iter().enumerate() {
            let d = planar::norm(planar::sub(*p, x));
            if d <= self.snap {
                if d > 1e-12 {
                    self.warnings.push(format!(
                        "merged points ({:.12}, {:.12}) and ({:.12}, {:.12}) at distance {d:.2e}",
                        p[0], p[1], x[0], x[1]
                    ));
                }
                return i;
            }
        }
        self.points.push(x);
        self.points.len() - 1
    }
}

pub fn build_arrangement(table: &Table, family: &[BilliardTrajectory]) -> Result<Arrangement> {
    build_arrangement_with(table, family, &Tolerances::default())
}

pub fn build_arrangement_with(
    table: &Table,
    family: &[BilliardTrajectory],
    tol: &Tolerances,
) -> Result<Arrangement> {
    let snap = tol.snap;
    let corners = table.klein_vertices();
    let m = corners.len();
    let mut pool = VertexPool {
        points: Vec::new(),
        snap,
        warnings: Vec::new(),
    };
    for c in &corners {
        pool.insert(*c);
    }

    let mut segments: Vec<Segment> = (0..m)
        .map(|i| Segment {
            p: corners[i],
            q: corners[(i + 1) % m],
            tag: EdgeTag::Side(i + 1),
            stops: vec![(0.0, i), (1.0, (i + 1) % m)],
        })
        .collect();

    // Trajectory segments, with retraced duplicates removed.
    for t in family {
        for (a, b) in t.segments() {
            let (p, q) = (a.to_klein(), b.to_klein());
            let close = |x: KleinPoint, y: KleinPoint| planar::norm(planar::sub(x, y)) <= snap;
            let duplicate = segments[m..]
                .iter()
                .any(|s| (close(s.p, p) && close(s.q, q)) || (close(s.p, q) && close(s.q, p)));
            if !duplicate {
                let (ip, iq) = (pool.insert(p), pool.insert(q));
                segments.push(Segment {
                    p,
                    q,
                    tag: EdgeTag::Trajectory,
                    stops: vec![(0.0, ip), (1.0, iq)],
                });
            }
        }
    }

    // Pairwise intersections; sides meet only at corners, already recorded.
    let n = segments.len();
    for i in 0..n {
        for j in (i + 1).max(m)..n {
            let (p0, p1, q0, q1) = (segments[i].p, segments[i].q, segments[j].p, segments[j].q);
            let (li, lj) = (
                planar::norm(planar::sub(p1, p0)),
                planar::norm(planar::sub(q1, q0)),
            );
            match planar::segment_params(p0, p1, q0, q1) {
                Some((s, t)) => {
                    let (ei, ej) = (snap / li, snap / lj);
                    if s < -ei || s > 1.0 + ei || t < -ej || t > 1.0 + ej {
                        continue;
                    }
                    let (s, t) = (s.clamp(0.0, 1.0), t.clamp(0.0, 1.0));
                    let v = pool.insert(planar::lerp(p0, p1, s));
                    segments[i].stops.push((s, v));
                    segments[j].stops.push((t, v));
                }
                None => {
                    let off = planar::cross(p0, p1, q0).abs() / li;
                    if off > snap {
                        continue;
                    }
                    let d = planar::sub(p1, p0);
                    let proj = |x: KleinPoint| {
                        let w = planar::sub(x, p0);
                        (w[0] * d[0] + w[1] * d[1]) / (li * li)
                    };
                    let (a, b) = (proj(q0).min(proj(q1)), proj(q0).max(proj(q1)));
                    let overlap = (b.min(1.0) - a.max(0.0)) * li;
                    if overlap > snap {
                        return Err(Error::DegenerateArrangement(format!(
                            "collinear overlap of length {overlap:.3e} between segments {i} and {j}"
                        )));
                    }
                }
            }
        }
    }

    // Split segments at their stops.
    let mut edges: Vec<ArrangementEdge> = Vec::new();
    for seg in &mut segments {
        seg.stops.sort_by(|x, y| x.0.total_cmp(&y.0));
        for w in seg.stops.windows(2) {
            let (a, b) = (w[0].1, w[1].1);
            if a == b {
                continue;
            }
            let exists = edges
                .iter()
                .any(|e| (e.a == a && e.b == b) || (e.a == b && e.b == a));
            if !exists {
                edges.push(ArrangementEdge { a, b, tag: seg.tag });
            }
        }
    }

    let vertices = pool.points;
    let faces = trace_faces(&vertices, &edges)?;
    let mut corner = vec![None; vertices.len()];
    for (i, c) in corner.iter_mut().enumerate().take(m) {
        *c = Some(i);
    }
    let arrangement = Arrangement {
        vertices,
        corner,
        edges,
        faces,
        warnings: pool.warnings,
    };
    if arrangement.euler_characteristic() != 2 {
        return Err(Error::DegenerateArrangement(format!(
            "Euler characteristic {} (V = {}, E = {}, F = {})",
            arrangement.euler_characteristic(),
            arrangement.vertices.len(),
            arrangement.edges.len(),
            arrangement.faces.len()
        )));
    }
    Ok(arrangement)
}

/// Walk the half-edge cycles. Half-edge `2e` runs `a → b` along edge `e`, `2e + 1` back.
fn trace_faces(vertices: &[KleinPoint], edges: &[ArrangementEdge]) -> Result<Vec<Face>> {
    let head = |h: usize| {
        if h.is_multiple_of(2) {
            edges[h / 2].b
        } else {
            edges[h / 2].a
        }
    };
    let tail = |h: usize| {
        if h.is_multiple_of(2) {
            edges[h / 2].a
        } else {
            edges[h / 2].b
        }
    };

    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    for h in 0..2 * edges.len() {
        outgoing[tail(h)].push(h);
    }
    let direction = |h: usize| {
        let d = planar::sub(vertices[head(h)], vertices[tail(h)]);
        d[1].atan2(d[0])
    };
    for out in &mut outgoing {
        out.sort_by(|&x, &y| direction(x).total_cmp(&direction(y)));
    }
    // Leaving v = head(h), take the first edge clockwise from the way back.
    let next = |h: usize| {
        let v = head(h);
        let out = &outgoing[v];
        let twin = h ^ 1;
        let pos = out
            .iter()
            .position(|&x| x == twin)
            .expect("twin leaves its head");
        out[(pos + out.len() - 1) % out.len()]
    };

    let mut seen = vec![false; 2 * edges.len()];
    let mut bounded = Vec::new();
    let mut outer = Vec::new();
    for start in 0..2 * edges.len() {
        if seen[start] {
            continue;
        }
        let mut h = start;
        let (mut vs, mut es) = (Vec::new(), Vec::new());
        loop {
            seen[h] = true;
            vs.push(tail(h));
            es.push(h / 2);
            h = next(h);
            if h == start {
                break;
            }
        }
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DegenerateArrangement(
                "face boundary is not a simple cycle".into(),
            ));
        }
        let pts: Vec<KleinPoint> = vs.iter().map(|&v| vertices[v]).collect();
        let signed_area = planar::signed_area(&pts);
        let face = Face {
            vertices: vs,
            edges: es,
            signed_area,
        };
        if signed_area < 0.0 {
            outer.push(face);
        } else {
            bounded.push(face);
        }
    }
    if outer.len() != 1 {
        return Err(Error::DegenerateArrangement(format!(
            "{} unbounded faces",
            outer.len()
        )));
    }
    bounded.extend(outer);
    Ok(bounded)
}

/// Classify one bounded face by the table sides on its boundary.
pub fn classify_face(a: &Arrangement, f: &Face) -> FaceClass {
    let n = f.edges.len();
    let on_side = |i: usize| matches!(a.edges[f.edges[i]].tag, EdgeTag::Side(_));
    let side_edges = (0..n).filter(|&i| on_side(i)).count();
    if side_edges == 0 {
        return FaceClass::PureDisc;
    }
    if side_edges == n {
        return FaceClass::Invalid;
    }
    // Runs of consecutive side edges, starting just after a trajectory edge.
    let first = (0..n)
        .find(|&i| !on_side(i) && on_side((i + 1) % n))
        .expect("a run starts somewhere");
    let mut runs: Vec<usize> = Vec::new();
    let mut i = (first + 1) % n;
    let mut steps = 0;
    while steps < n {
        if on_side(i) {
            // Corners touched by this run: both ends of every edge in it.
            let mut corners = Vec::new();
            while on_side(i) && steps < n {
                for v in [f.vertices[i], f.vertices[(i + 1) % n]] {
                    if a.corner[v].is_some() && !corners.contains(&v) {
                        corners.push(v);
                    }
                }
                i = (i + 1) % n;
                steps += 1;
            }
            runs.push(corners.len());
        } else {
            i = (i + 1) % n;
            steps += 1;
        }
    }
    match runs.as_slice() {
        [0] => FaceClass::EdgeDisc,
        [1] => FaceClass::CornerDisc,
        _ => FaceClass::Invalid,
    }
}

/// Verdict of the filling test.
#[derive(Debug, Clone, PartialEq)]
pub struct FillingReport {
    pub classes: Vec<FaceClass>,
    pub areas: Vec<f64>,
    pub is_filling: bool,
}

impl FillingReport {
    pub fn total_area(&self) -> f64 {
        self.areas.iter().sum()
    }
}

pub fn classify_faces(a: &Arrangement) -> Result<FillingReport> {
    let faces = a.interior_faces();
    let classes: Vec<FaceClass> = faces.iter().map(|f| classify_face(a, f)).collect();
    let areas = faces
        .iter()
        .map(|f| a.face_area(f))
        .collect::<Result<Vec<_>>>()?;
    let is_filling = !classes.contains(&FaceClass::Invalid);
    Ok(FillingReport {
        classes,
        areas,
        is_filling,
    })
}

/// Build the arrangement of `family` in `table` and classify its faces.
pub fn check_filling(table: &Table, family: &[BilliardTrajectory]) -> Result<FillingReport> {
    classify_faces(&build_arrangement(table, family)?)
}
