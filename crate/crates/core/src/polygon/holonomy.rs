//! Development map of a polygon boundary and the closing condition.
//!
//! Walking the boundary anticlockwise from `i` in the upper half-plane, each
//! side contributes a translation `T(s) = diag(e^{s/2}, e^{-s/2})` along the
//! current heading followed by an anticlockwise turn `R(e)` by the exterior
//! angle at its far corner. The boundary closes when `Π T(sᵢ)·R(eᵢ) = ±I`.

use crate::error::{Error, Result};
use crate::hypgeo::{HPoint, Isometry, Mat2};
use crate::tol::Tolerances;

fn step(s: f64, exterior: f64) -> Mat2 {
    let e = (s / 2.0).exp();
    let (sn, cs) = (exterior / 2.0).sin_cos();
    Mat2::new(e, 0.0, 0.0, 1.0 / e).mul(Mat2::new(cs, sn, -sn, cs))
}

/// Holonomy `Π T(sᵢ)·R(eᵢ)` around the boundary.
pub fn holonomy(sides: &[f64], exterior: &[f64]) -> Isometry {
    let m = sides
        .iter()
        .zip(exterior)
        .fold(Mat2::IDENTITY, |acc, (&s, &e)| acc.mul(step(s, e)));
    Isometry::from_mat(m, crate::hypgeo::Orientation::Preserving)
}

/// Max-norm distance of the holonomy from `±I`.
pub fn holonomy_residual(sides: &[f64], exterior: &[f64]) -> f64 {
    holonomy(sides, exterior).mat().distance_from_identity()
}

/// Three scalar closing equations `(H.b, H.c, H.a − H.d)`; all vanish exactly at `±I`.
fn closing_equations(sides: &[f64], exterior: &[f64]) -> [f64; 3] {
    let m = sides
        .iter()
        .zip(exterior)
        .fold(Mat2::IDENTITY, |acc, (&s, &e)| acc.mul(step(s, e)));
    [m.b, m.c, m.a - m.d]
}

fn max_abs(r: &[f64; 3]) -> f64 {
    r.iter().fold(0.0f64, |m, x| {
        if x.is_finite() {
            m.max(x.abs())
        } else {
            f64::INFINITY
        }
    })
}

/// Gaussian elimination with partial pivoting.
fn solve3(mut a: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let piv = (col..3).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if !(a[piv][col].abs() > 1e-300) {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..3 {
            let f = a[row][col] / a[col][col];
            let top = a[col];
            for (x, t) in a[row][col..].iter_mut().zip(&top[col..]) {
                *x -= f * t;
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let s: f64 = (row + 1..3).map(|c| a[row][c] * x[c]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    x.iter().all(|v| v.is_finite()).then_some(x)
}

const MAX_ITERATIONS: usize = 100;
const FD_STEP: f64 = 1e-7;

/// Solve for the last three side lengths so that the boundary closes.
///
/// Newton's method with a central-difference Jacobian and step halving.
pub fn solve_closing(
    fixed: &[f64],
    exterior: &[f64],
    seed: [f64; 3],
    tol: &Tolerances,
) -> Result<[f64; 3]> {
    if fixed.len() + 3 != exterior.len() {
        return Err(Error::Domain(format!(
            "{} fixed sides and {} exterior angles",
            fixed.len(),
            exterior.len()
        )));
    }
    let mut sides = fixed.to_vec();
    sides.extend_from_slice(&seed);
    let n = fixed.len();
    let eval = |sides: &mut Vec<f64>, x: [f64; 3]| {
        sides[n..].copy_from_slice(&x);
        closing_equations(sides, exterior)
    };

    let mut x = seed;
    let mut r = eval(&mut sides, x);
    for _ in 0..MAX_ITERATIONS {
        let norm = max_abs(&r);
        if norm <= tol.solve {
            return Ok(x);
        }
        if !norm.is_finite() {
            break;
        }
        let mut jac = [[0.0; 3]; 3];
        for j in 0..3 {
            let (mut xp, mut xm) = (x, x);
            xp[j] += FD_STEP;
            xm[j] -= FD_STEP;
            let (rp, rm) = (eval(&mut sides, xp), eval(&mut sides, xm));
            for i in 0..3 {
                jac[i][j] = (rp[i] - rm[i]) / (2.0 * FD_STEP);
            }
        }
        let Some(dx) = solve3(jac, [-r[0], -r[1], -r[2]]) else {
            break;
        };
        let mut lambda = 1.0;
        let mut accepted = false;
        while lambda > 1e-10 {
            let trial = [
                x[0] + lambda * dx[0],
                x[1] + lambda * dx[1],
                x[2] + lambda * dx[2],
            ];
            let rt = eval(&mut sides, trial);
            if max_abs(&rt) < norm {
                x = trial;
                r = rt;
                accepted = true;
                break;
            }
            lambda /= 2.0;
        }
        if !accepted {
            // Stalled at rounding level: accept if already inside the matrix tolerance.
            if norm <= tol.matrix {
                return Ok(x);
            }
            break;
        }
    }
    if max_abs(&r) <= tol.solve {
        return Ok(x);
    }
    Err(Error::NoClosingSolution(format!(
        "residual {:.3e} after Newton iteration",
        max_abs(&r)
    )))
}

/// Frames of the development map and the vertex positions they produce.
#[derive(Debug, Clone)]
pub struct HolonomyFrames {
    /// `frames[i]` sends `i` to vertex `i` with the imaginary axis along side `i + 1`.
    pub frames: Vec<Isometry>,
}

impl HolonomyFrames {
    pub fn new(sides: &[f64], exterior: &[f64]) -> Self {
        let mut frames = Vec::with_capacity(sides.len());
        let mut acc = Mat2::IDENTITY;
        for (&s, &e) in sides.iter().zip(exterior) {
            frames.push(Isometry::from_mat(
                acc,
                crate::hypgeo::Orientation::Preserving,
            ));
            acc = acc.mul(step(s, e)).normalized();
        }
        Self { frames }
    }

    pub fn vertices(&self) -> Vec<HPoint> {
        self.frames
            .iter()
            .map(|f| f.apply(HPoint::ORIGIN))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn regular_hexagon_closes_to_minus_identity() {
        let s = 2f64.acosh();
        let h = holonomy(&[s; 6], &[FRAC_PI_2; 6]);
        assert!(h.is_identity(1e-12));
        assert!(h.trace() < 0.0);
    }

    #[test]
    fn newton_recovers_regular_hexagon() {
        let s = 2f64.acosh();
        let x = solve_closing(
            &[s; 3],
            &[FRAC_PI_2; 6],
            [1.2, 1.4, 1.3],
            &Tolerances::default(),
        )
        .unwrap();
        for v in x {
            assert!((v - s).abs() < 1e-10);
        }
    }

    #[test]
    fn huge_sides_fail_to_close() {
        let r = solve_closing(&[1e3; 3], &[FRAC_PI_2; 6], [1.3; 3], &Tolerances::default());
        assert!(matches!(r, Err(Error::NoClosingSolution(_))));
    }

    #[test]
    fn solve3_identity() {
        let i = [[1.0, 0.0, 0.0], [0.0, 2.0, 0.0], [0.0, 0.0, 4.0]];
        assert_eq!(solve3(i, [1.0, 1.0, 1.0]), Some([1.0, 0.5, 0.25]));
    }
}
