use std::f64::consts::{FRAC_PI_2, PI};

use super::holonomy::{holonomy_residual, solve_closing, HolonomyFrames};
use super::Table;
use crate::error::{Error, Result};
use crate::hypgeo::{common_perpendicular, HPoint};
use crate::tol::Tolerances;

/// Right-angled hyperbolic 2k-gon.
#[derive(Debug, Clone, PartialEq)]
pub struct RightAngledPolygon {
    k: usize,
    table: Table,
    residual: f64,
}

impl RightAngledPolygon {
    /// Wrap a table whose angles are all right angles.
    pub fn from_table(k: usize, table: Table, tol: &Tolerances) -> Result<Self> {
        if table.num_sides() != 2 * k {
            return Err(Error::Domain(format!(
                "expected {} sides, got {}",
                2 * k,
                table.num_sides()
            )));
        }
        table.check_angles(&vec![FRAC_PI_2; 2 * k], tol)?;
        let residual = holonomy_residual(&table.side_lengths(), &vec![FRAC_PI_2; 2 * k]);
        Ok(Self { k, table, residual })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn side_lengths(&self) -> Vec<f64> {
        self.table.side_lengths()
    }

    /// Distance of the boundary holonomy from `±I`.
    pub fn holonomy_residual(&self) -> f64 {
        self.residual
    }

    /// The 2k−3 side lengths that parameterize the polygon.
    pub fn free_sides(&self) -> Vec<f64> {
        let s = self.side_lengths();
        s[..2 * self.k - 3].to_vec()
    }
}

/// Side length of the regular right-angled 2k-gon: `cosh(s/2) = √2·cos(π/2k)`.
pub fn regular_side_length(k: usize) -> f64 {
    2.0 * (2f64.sqrt() * (PI / (2 * k) as f64).cos()).acosh()
}

fn check_k(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::Domain(format!("k must be at least 3, got {k}")));
    }
    Ok(())
}

/// The regular right-angled 2k-gon, canonically placed.
pub fn regular_polygon(k: usize) -> Result<RightAngledPolygon> {
    check_k(k)?;
    let s = regular_side_length(k);
    build(k, &vec![s; 2 * k], &Tolerances::default())
}

/// Right-angled 2k-gon with sides `1..=2k−3` given; the last three are solved
/// from the closing condition, starting from `init` or the regular side length.
pub fn polygon_from_sides(
    k: usize,
    free_sides: &[f64],
    init: Option<[f64; 3]>,
) -> Result<RightAngledPolygon> {
    polygon_from_sides_with(k, free_sides, init, &Tolerances::default())
}

pub fn polygon_from_sides_with(
    k: usize,
    free_sides: &[f64],
    init: Option<[f64; 3]>,
    tol: &Tolerances,
) -> Result<RightAngledPolygon> {
    check_k(k)?;
    if free_sides.len() != 2 * k - 3 {
        return Err(Error::Domain(format!(
            "expected {} free sides, got {}",
            2 * k - 3,
            free_sides.len()
        )));
    }
    if let Some(bad) = free_sides.iter().find(|s| !(**s > 0.0) || !s.is_finite()) {
        return Err(Error::Domain(format!(
            "side lengths must be positive, got {bad}"
        )));
    }
    let exterior = vec![FRAC_PI_2; 2 * k];
    let last = match init {
        Some(seed) => solve_closing(free_sides, &exterior, seed, tol)?,
        None => solve_from_regular(k, free_sides, &exterior, tol)?,
    };
    if let Some(bad) = last.iter().find(|s| !(**s > 0.0)) {
        return Err(Error::DegeneratePolygon(format!(
            "solved side length {bad} is not positive"
        )));
    }
    let mut sides = free_sides.to_vec();
    sides.extend_from_slice(&last);
    build(k, &sides, tol)
}

/// Newton from the regular tail, falling back to continuation along the
/// straight path from the regular side vector.
fn solve_from_regular(
    k: usize,
    free_sides: &[f64],
    exterior: &[f64],
    tol: &Tolerances,
) -> Result<[f64; 3]> {
    let s0 = regular_side_length(k);
    let direct = solve_closing(free_sides, exterior, [s0; 3], tol);
    if direct.is_ok() {
        return direct;
    }
    'refine: for steps in [8usize, 32, 128] {
        let mut x = [s0; 3];
        let mut partial = vec![0.0; free_sides.len()];
        for i in 1..=steps {
            let t = i as f64 / steps as f64;
            for (p, f) in partial.iter_mut().zip(free_sides) {
                *p = s0 + t * (f - s0);
            }
            match solve_closing(&partial, exterior, x, tol) {
                Ok(next) if next.iter().all(|s| *s > 0.0) => x = next,
                _ => continue 'refine,
            }
        }
        return Ok(x);
    }
    direct
}

fn build(k: usize, sides: &[f64], tol: &Tolerances) -> Result<RightAngledPolygon> {
    let exterior = vec![FRAC_PI_2; 2 * k];
    let residual = holonomy_residual(sides, &exterior);
    if residual > tol.matrix {
        return Err(Error::NoClosingSolution(format!(
            "holonomy residual {residual:.3e}"
        )));
    }
    let vertices = HolonomyFrames::new(sides, &exterior).vertices();
    let (table, _) = Table::from_vertices(vertices)?.canonical_placement()?;
    table.check_angles(&vec![FRAC_PI_2; 2 * k], tol)?;
    Ok(RightAngledPolygon { k, table, residual })
}

/// One orthogeodesic between side 1 and a blue side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreenArc {
    /// Label of the far blue side (5, 7, …, 2k−3).
    pub target: usize,
    /// Foot on side 1.
    pub foot1: HPoint,
    /// Foot on the target side.
    pub foot2: HPoint,
    pub length: f64,
}

/// The k−3 orthogeodesics cutting the polygon into right-angled hexagons.
#[derive(Debug, Clone, PartialEq)]
pub struct GreenDiagonals {
    pub arcs: Vec<GreenArc>,
}

pub fn green_diagonals(p: &RightAngledPolygon) -> Result<GreenDiagonals> {
    let t = p.table();
    let s1 = t.side(1);
    let margin = Tolerances::default().geometric;
    let arcs = (5..=2 * p.k() - 3)
        .step_by(2)
        .map(|j| {
            let sj = t.side(j);
            let cp = common_perpendicular(&s1.geodesic(), &sj.geodesic())
                .map_err(|e| Error::DecompositionInvalid(format!("sides 1 and {j}: {e}")))?;
            if !s1.contains_interior(cp.foot1, margin) || !sj.contains_interior(cp.foot2, margin) {
                return Err(Error::DecompositionInvalid(format!(
                    "orthogeodesic from side 1 to side {j} has a foot outside its side"
                )));
            }
            Ok(GreenArc {
                target: j,
                foot1: cp.foot1,
                foot2: cp.foot2,
                length: cp.length,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GreenDiagonals { arcs })
}
