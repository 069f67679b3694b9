//! Numerical tolerances shared by every module.

/// Fixed thresholds used for geometric predicates.
///
/// The defaults are the values every test and acceptance check is pinned to;
/// the CLI can override `geometric` with `--tol`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Equality of points, geodesics, and interiority margins.
    pub geometric: f64,
    /// Distance of a matrix from ±I.
    pub matrix: f64,
    /// Target residual of Newton and root solves.
    pub solve: f64,
    /// Margin on |trace| − 2 separating hyperbolic from parabolic/elliptic.
    pub classification: f64,
    /// Angle checks (right angles, reflection law).
    pub angle: f64,
    /// Vertex snapping in the Klein-model arrangement.
    pub snap: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            geometric: 1e-9,
            matrix: 1e-10,
            solve: 1e-12,
            classification: 1e-9,
            angle: 1e-8,
            snap: 1e-9,
        }
    }
}
