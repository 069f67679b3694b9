//! Lambert quadrilaterals and their 2k-fold gluing.
//!
//! Labelling: sides 1 and 2 meet at the right angle opposite the acute corner,
//! with lengths `a = s₁` (the construction parameter `t`) and `b = s₂`. The
//! acute corner, of angle π/k, sits between sides 3 and 4, which are the
//! spokes of the gluing. The mirror of the symmetric quadrilateral swaps
//! 1 ↔ 2 and 3 ↔ 4.

use std::f64::consts::{FRAC_PI_2, PI};

use super::holonomy::{solve_closing, HolonomyFrames};
use super::right_angled::RightAngledPolygon;
use super::Table;
use crate::error::{Error, Result};
use crate::hypgeo::{dist, Geodesic, HPoint, Isometry, Mat2, Orientation};
use crate::tol::Tolerances;

/// Index into `vertices()` of the acute corner.
pub const LAMBERT_ACUTE_VERTEX: usize = 3;

/// Quadrilateral with three right angles and one angle π/k.
#[derive(Debug, Clone, PartialEq)]
pub struct LambertQuad {
    k: usize,
    t: f64,
    table: Table,
}

impl LambertQuad {
    pub fn k(&self) -> usize {
        self.k
    }

    /// The construction parameter, equal to `a`.
    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn a(&self) -> f64 {
        self.table.side(1).length()
    }

    pub fn b(&self) -> f64 {
        self.table.side(2).length()
    }

    pub fn side_lengths(&self) -> Vec<f64> {
        self.table.side_lengths()
    }

    pub fn acute_vertex_index(&self) -> usize {
        LAMBERT_ACUTE_VERTEX
    }

    /// Interior angles in vertex order.
    pub fn expected_angles(k: usize) -> [f64; 4] {
        [FRAC_PI_2, FRAC_PI_2, FRAC_PI_2, PI / k as f64]
    }
}

/// `t*` with `sinh²(t*) = cos(π/k)`, the parameter of the symmetric quadrilateral.
pub fn regular_lambert_parameter(k: usize) -> f64 {
    (PI / k as f64).cos().sqrt().asinh()
}

pub fn regular_lambert(k: usize) -> Result<LambertQuad> {
    lambert_quad(k, regular_lambert_parameter(k))
}

fn exterior_angles(k: usize) -> Vec<f64> {
    vec![FRAC_PI_2, FRAC_PI_2, PI - PI / k as f64, FRAC_PI_2]
}

fn step(s: f64, exterior: f64) -> Mat2 {
    let e = (s / 2.0).exp();
    let (sn, cs) = (exterior / 2.0).sin_cos();
    Mat2::new(e, 0.0, 0.0, 1.0 / e).mul(Mat2::new(cs, sn, -sn, cs))
}

/// Lambert quadrilateral with angle π/k whose side 1 has length `t`.
pub fn lambert_quad(k: usize, t: f64) -> Result<LambertQuad> {
    if k < 3 {
        return Err(Error::Domain(format!("k must be at least 3, got {k}")));
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!(
            "Lambert parameter must be positive, got {t}"
        )));
    }
    let tol = Tolerances::default();
    let b = ((PI / k as f64).cos() / t.sinh()).asinh();
    let exterior = exterior_angles(k);

    // Seed from the direct construction: start at i heading up the imaginary
    // axis; side 4 lies on the unit semicircle and side 3 leaves the corner
    // after side 2 at a right angle.
    let f2 = Isometry::from_mat(
        step(t, FRAC_PI_2).mul(step(b, FRAC_PI_2)),
        Orientation::Preserving,
    );
    let side3 = Geodesic::new(f2.apply_ideal(PI), f2.apply_ideal(0.0))?;
    let side4 = Geodesic::new(FRAC_PI_2, 3.0 * FRAC_PI_2)?;
    let v2 = f2.apply(HPoint::ORIGIN);
    let v3 = side3
        .intersection(&side4)
        .ok_or_else(|| Error::DegeneratePolygon("sides 3 and 4 do not meet".into()))?;
    let seed = [b, dist(v2, v3), dist(v3, HPoint::ORIGIN)];

    let rest = solve_closing(&[t], &exterior, seed, &tol)?;
    let sides = [t, rest[0], rest[1], rest[2]];
    if sides.iter().any(|s| !(*s > 0.0)) {
        return Err(Error::DegeneratePolygon(format!(
            "non-positive side in {sides:?}"
        )));
    }
    let vertices = HolonomyFrames::new(&sides, &exterior).vertices();
    let (table, _) = Table::from_vertices(vertices)?.canonical_placement()?;
    table.check_angles(&LambertQuad::expected_angles(k), &tol)?;
    Ok(LambertQuad { k, t, table })
}

/// What a side of one glued copy becomes in the 2k-gon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GlueRole {
    /// Interior side shared with copy `neighbor`.
    Spoke { neighbor: usize },
    /// Half of the outer side with this label.
    Outer { label: usize },
}

/// 2k copies of a Lambert quadrilateral around its acute corner.
#[derive(Debug, Clone, PartialEq)]
pub struct GluedLambert {
    polygon: RightAngledPolygon,
    copies: Vec<Isometry>,
    roles: Vec<[GlueRole; 4]>,
}

impl GluedLambert {
    pub fn polygon(&self) -> &RightAngledPolygon {
        &self.polygon
    }

    /// Isometry placing copy `j` of the quadrilateral in the polygon's frame.
    pub fn copy(&self, j: usize) -> &Isometry {
        &self.copies[j]
    }

    pub fn num_copies(&self) -> usize {
        self.copies.len()
    }

    /// Role of side `label` (1..=4) of copy `j`.
    pub fn role(&self, j: usize, label: usize) -> GlueRole {
        self.roles[j][label - 1]
    }
}

/// Roles of the four sides of copy `j` among `2k` copies.
///
/// Even copies cross to `j + 1` through side 3 and to `j − 1` through side 4;
/// odd copies the other way round.
fn roles_of(j: usize, k: usize) -> [GlueRole; 4] {
    let n = 2 * k;
    let label = |l: usize| (l - 1) % n + 1;
    let (next, prev) = ((j + 1) % n, (j + n - 1) % n);
    if j.is_multiple_of(2) {
        [
            GlueRole::Outer {
                label: label(j + 1),
            },
            GlueRole::Outer {
                label: label(j + 2),
            },
            GlueRole::Spoke { neighbor: next },
            GlueRole::Spoke { neighbor: prev },
        ]
    } else {
        [
            GlueRole::Outer {
                label: label(j + 2),
            },
            GlueRole::Outer {
                label: label(j + 1),
            },
            GlueRole::Spoke { neighbor: prev },
            GlueRole::Spoke { neighbor: next },
        ]
    }
}

/// Reflect the quadrilateral alternately across its spokes to tile a right-angled 2k-gon.
pub fn glue_lambert(q: &LambertQuad) -> Result<GluedLambert> {
    let k = q.k();
    let n = 2 * k;
    let (r3, r4) = (q.table().reflection(3), q.table().reflection(4));
    let mut copies = Vec::with_capacity(n);
    let mut g = Isometry::identity();
    for j in 0..n {
        copies.push(g);
        g = g.compose(if j % 2 == 0 { &r3 } else { &r4 });
    }
    let o = q.table().vertices()[1];
    let vertices = (0..n).map(|i| copies[(i + n - 1) % n].apply(o)).collect();
    let (table, place) = Table::from_vertices(vertices)?.canonical_placement()?;
    let polygon = RightAngledPolygon::from_table(k, table, &Tolerances::default())?;
    let copies = copies.iter().map(|c| place.compose(c)).collect();
    let roles = (0..n).map(|j| roles_of(j, k)).collect();
    Ok(GluedLambert {
        polygon,
        copies,
        roles,
    })
}
