//! Billiard tables: right-angled 2k-gons, Lambert quadrilaterals, and the
//! 2k-fold Lambert gluing.
//!
//! Sides carry labels `1..=m` anticlockwise. Side `j` runs from
//! `vertices[j - 1]` to `vertices[j % m]`, so `vertices[i]` is the corner where
//! side `i` ends and side `i + 1` begins, and `angles[i]` is its interior angle.

mod holonomy;
mod lambert;
mod right_angled;

pub use holonomy::{holonomy, holonomy_residual, solve_closing, HolonomyFrames};
pub use lambert::{
    glue_lambert, lambert_quad, regular_lambert, regular_lambert_parameter, GlueRole, GluedLambert,
    LambertQuad, LAMBERT_ACUTE_VERTEX,
};
pub use right_angled::{
    green_diagonals, polygon_from_sides, polygon_from_sides_with, regular_polygon,
    regular_side_length, GreenArc, GreenDiagonals, RightAngledPolygon,
};

use crate::error::{Error, Result};
use crate::hypgeo::{
    dist, tangent_angle, wrap_angle, Geodesic, HPoint, Isometry, OrientedGeodesic,
};
use crate::planar;
use crate::tol::Tolerances;

/// Side colour in the four-copy gluing: odd labels are blue, even labels red.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SideColor {
    Blue,
    Red,
}

impl SideColor {
    pub fn of_label(label: usize) -> SideColor {
        if label % 2 == 1 {
            SideColor::Blue
        } else {
            SideColor::Red
        }
    }
}

/// One side segment of a table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Side {
    label: usize,
    start: HPoint,
    end: HPoint,
    length: f64,
    line: OrientedGeodesic,
}

impl Side {
    fn new(label: usize, start: HPoint, end: HPoint) -> Result<Self> {
        let line = OrientedGeodesic::through(start, end)
            .map_err(|_| Error::DegeneratePolygon(format!("side {label} has zero length")))?;
        Ok(Self {
            label,
            start,
            end,
            length: dist(start, end),
            line,
        })
    }

    pub fn label(&self) -> usize {
        self.label
    }

    pub fn start(&self) -> HPoint {
        self.start
    }

    pub fn end(&self) -> HPoint {
        self.end
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn geodesic(&self) -> Geodesic {
        self.line.unoriented()
    }

    /// The side's geodesic, oriented from `start` to `end`.
    pub fn line(&self) -> OrientedGeodesic {
        self.line
    }

    /// Arc-length position of the projection of `p`, measured from `start`.
    pub fn param(&self, p: HPoint) -> f64 {
        self.line.param(p) - self.line.param(self.start)
    }

    /// True when `p` lies on the side's geodesic at distance more than `margin`
    /// from both endpoints.
    pub fn contains_interior(&self, p: HPoint, margin: f64) -> bool {
        if self.geodesic().distance_to(p) > margin {
            return false;
        }
        let s = self.param(p);
        s > margin && s < self.length - margin
    }

    pub fn color(&self) -> SideColor {
        SideColor::of_label(self.label)
    }
}

/// A convex hyperbolic polygon with anticlockwise labelled sides.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    vertices: Vec<HPoint>,
    sides: Vec<Side>,
    angles: Vec<f64>,
}

impl Table {
    /// Build a table from its anticlockwise vertex list, checking orientation and simplicity.
    pub fn from_vertices(vertices: Vec<HPoint>) -> Result<Self> {
        let m = vertices.len();
        if m < 3 {
            return Err(Error::DegeneratePolygon(format!("{m} vertices")));
        }
        let sides = (0..m)
            .map(|i| Side::new(i + 1, vertices[i], vertices[(i + 1) % m]))
            .collect::<Result<Vec<_>>>()?;
        let angles = (0..m)
            .map(|i| {
                let v = vertices[i];
                let next = tangent_angle(v, vertices[(i + 1) % m]);
                let prev = tangent_angle(v, vertices[(i + m - 1) % m]);
                wrap_angle(prev - next)
            })
            .collect();
        let table = Self {
            vertices,
            sides,
            angles,
        };
        table.check_embedded()?;
        Ok(table)
    }

    fn check_embedded(&self) -> Result<()> {
        let k = self.klein_vertices();
        if planar::signed_area(&k) <= 0.0 {
            return Err(Error::DegeneratePolygon(
                "vertices are not anticlockwise".into(),
            ));
        }
        let m = k.len();
        for i in 0..m {
            for j in i + 1..m {
                let adjacent = j == i + 1 || (i == 0 && j == m - 1);
                if adjacent {
                    continue;
                }
                if planar::segments_touch(k[i], k[(i + 1) % m], k[j], k[(j + 1) % m]) {
                    return Err(Error::DegeneratePolygon(format!(
                        "sides {} and {} intersect",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn num_sides(&self) -> usize {
        self.sides.len()
    }

    pub fn vertices(&self) -> &[HPoint] {
        &self.vertices
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    /// Side with the given 1-based label.
    pub fn side(&self, label: usize) -> &Side {
        &self.sides[label - 1]
    }

    pub fn side_lengths(&self) -> Vec<f64> {
        self.sides.iter().map(Side::length).collect()
    }

    /// Interior angles, `angles()[i]` at `vertices()[i]`.
    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    /// Reflection across the full geodesic of side `label`.
    pub fn reflection(&self, label: usize) -> Isometry {
        self.side(label).geodesic().reflection()
    }

    pub fn klein_vertices(&self) -> Vec<[f64; 2]> {
        self.vertices.iter().map(|v| v.to_klein()).collect()
    }

    /// Closed-region membership with slack `tol` in the Klein model.
    pub fn contains(&self, p: HPoint, tol: f64) -> bool {
        let k = self.klein_vertices();
        let q = p.to_klein();
        let m = k.len();
        (0..m).all(|i| {
            let (a, b) = (k[i], k[(i + 1) % m]);
            let len = planar::norm(planar::sub(b, a));
            planar::cross(a, b, q) / len >= -tol
        })
    }

    /// Hyperbolic area by Gauss–Bonnet.
    pub fn area(&self) -> f64 {
        let m = self.num_sides() as f64;
        (m - 2.0) * std::f64::consts::PI - self.angles.iter().sum::<f64>()
    }

    pub fn image(&self, g: &Isometry) -> Result<Table> {
        if !g.is_preserving() {
            return Err(Error::OrientationReversing);
        }
        Table::from_vertices(self.vertices.iter().map(|v| g.apply(*v)).collect())
    }

    /// Move the table to its canonical position: the hyperboloid barycentre of
    /// the vertices at the origin and the midpoint of side 1 on the positive x-axis.
    /// Returns the placed table and the isometry applied.
    pub fn canonical_placement(&self) -> Result<(Table, Isometry)> {
        let mut acc = [0.0; 3];
        for v in &self.vertices {
            let h = v.to_hyperboloid();
            for (a, x) in acc.iter_mut().zip(h) {
                *a += x;
            }
        }
        let centre = HPoint::from_hyperboloid(acc);
        let centring = Isometry::centering(centre);
        let s1 = self.side(1);
        let mid = centring.apply(s1.line.point_at(s1.line.param(s1.start) + s1.length / 2.0));
        let g = Isometry::rotation(-mid.y().atan2(mid.x())).compose(&centring);
        Ok((self.image(&g)?, g))
    }

    /// Max deviation between corresponding vertices.
    pub fn vertex_distance(&self, other: &Table) -> f64 {
        self.vertices
            .iter()
            .zip(&other.vertices)
            .map(|(a, b)| dist(*a, *b))
            .fold(
                if self.vertices.len() == other.vertices.len() {
                    0.0
                } else {
                    f64::INFINITY
                },
                f64::max,
            )
    }

    pub(crate) fn check_angles(&self, expected: &[f64], tol: &Tolerances) -> Result<()> {
        for (i, (a, e)) in self.angles.iter().zip(expected).enumerate() {
            if (a - e).abs() > tol.angle {
                return Err(Error::DegeneratePolygon(format!(
                    "angle at vertex {i} is {a}, expected {e}"
                )));
            }
        }
        Ok(())
    }
}
