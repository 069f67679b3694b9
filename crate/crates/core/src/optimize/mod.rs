//! Minimizing average trajectory length over right-angled polygons and over
//! Lambert quadrilaterals.

mod nelder_mead;

pub use nelder_mead::{golden_section, nelder_mead, NelderMeadOptions, SimplexResult};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::billiard::{cyclic_family, reflective_pair, BilliardSequence};
use crate::error::{Error, Result};
use crate::polygon::{
    lambert_quad, polygon_from_sides, regular_lambert_parameter, regular_side_length,
};

/// Value returned for parameters with no valid polygon or family.
pub const DEFAULT_PENALTY: f64 = 1e6;

/// Average-length objective over the free side lengths of a right-angled 2k-gon.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveSpec {
    pub k: usize,
    pub sequence: BilliardSequence,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub penalty: f64,
}

impl ObjectiveSpec {
    /// Box `[0.2, 4.0]·s₀` on each of the 2k−3 free sides, `s₀` the regular side.
    pub fn new(k: usize, sequence: BilliardSequence) -> Result<Self> {
        if k < 3 {
            return Err(Error::Domain(format!("k must be at least 3, got {k}")));
        }
        sequence.check_labels(2 * k)?;
        let s0 = regular_side_length(k);
        let n = 2 * k - 3;
        Ok(Self {
            k,
            sequence,
            lower: vec![0.2 * s0; n],
            upper: vec![4.0 * s0; n],
            penalty: DEFAULT_PENALTY,
        })
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn regular_point(&self) -> Vec<f64> {
        vec![regular_side_length(self.k); self.dimension()]
    }

    pub fn in_box(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(&self.lower)
                .zip(&self.upper)
                .all(|((v, lo), hi)| v >= lo && v <= hi)
    }
}

/// Family-average length at the polygon with free sides `params`, or the penalty.
pub fn avg_length_objective(spec: &ObjectiveSpec, params: &[f64]) -> f64 {
    if !spec.in_box(params) {
        return spec.penalty;
    }
    polygon_from_sides(spec.k, params, None)
        .and_then(|p| cyclic_family(&p, &spec.sequence))
        .map(|f| f.average_length())
        .unwrap_or(spec.penalty)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinimizationResult {
    pub argmin: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    pub evaluations: usize,
    pub converged: bool,
    /// Max-norm distance from the regular object: full side vector for
    /// polygons, the parameter `t` for Lambert quadrilaterals.
    pub distance_to_regular: f64,
}

/// Number of random starts besides the regular point.
pub const RANDOM_STARTS: usize = 8;

/// Multi-start Nelder–Mead from the regular point and eight random starts.
pub fn minimize_polygon(spec: &ObjectiveSpec, seed: u64) -> Result<MinimizationResult> {
    let regular = spec.regular_point();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut starts = vec![regular.clone()];
    for _ in 0..RANDOM_STARTS {
        let x: Vec<f64> = regular
            .iter()
            .zip(spec.lower.iter().zip(&spec.upper))
            .map(|(r, (lo, hi))| (r * (1.0 + rng.gen_range(-0.25..0.25))).clamp(*lo, *hi))
            .collect();
        starts.push(x);
    }
    let runs: Vec<SimplexResult> = starts
        .par_iter()
        .filter(|x0| avg_length_objective(spec, x0) < spec.penalty)
        .map(|x0| run_simplex(spec, x0))
        .collect();
    best_of(spec, runs)
}

/// Single Nelder–Mead run from `start`.
pub fn minimize_polygon_from(spec: &ObjectiveSpec, start: &[f64]) -> Result<MinimizationResult> {
    best_of(spec, vec![run_simplex(spec, start)])
}

fn run_simplex(spec: &ObjectiveSpec, x0: &[f64]) -> SimplexResult {
    let step = 0.05 * regular_side_length(spec.k);
    let opts = NelderMeadOptions {
        initial_step: step,
        ..Default::default()
    };
    nelder_mead(|x| avg_length_objective(spec, x), x0, &opts)
}

fn best_of(spec: &ObjectiveSpec, runs: Vec<SimplexResult>) -> Result<MinimizationResult> {
    let best = runs
        .into_iter()
        .filter(|r| r.converged && r.value < spec.penalty)
        .min_by(|a, b| a.value.total_cmp(&b.value))
        .ok_or_else(|| Error::OptimizationFailed("no start converged".into()))?;
    let polygon = polygon_from_sides(spec.k, &best.x, None)?;
    let s0 = regular_side_length(spec.k);
    let distance_to_regular = polygon
        .side_lengths()
        .iter()
        .map(|s| (s - s0).abs())
        .fold(0.0, f64::max);
    Ok(MinimizationResult {
        argmin: best.x,
        value: best.value,
        iterations: best.iterations,
        evaluations: best.evaluations,
        converged: best.converged,
        distance_to_regular,
    })
}

/// Outcome of the one-parameter search over Lambert quadrilaterals.
#[derive(Debug, Clone, PartialEq)]
pub struct LambertMinimization {
    pub result: MinimizationResult,
    /// The requested interval.
    pub requested: (f64, f64),
    /// The largest interval of the grid scan on which the pair is valid.
    pub valid_range: (f64, f64),
}

/// Pair-average length of `a` and its mirror on the Lambert quadrilateral with parameter `t`.
pub fn lambert_objective(k: usize, a: &BilliardSequence, t: f64) -> Result<f64> {
    let q = lambert_quad(k, t)?;
    Ok(reflective_pair(&q, a)?.average)
}

const SCAN_POINTS: usize = 201;

/// Golden-section search for the parameter minimizing the pair-average length.
///
/// The interval is first scanned on a grid; the search runs on the largest
/// contiguous stretch where both trajectories exist.
pub fn minimize_lambert(
    k: usize,
    a: &BilliardSequence,
    t_range: (f64, f64),
) -> Result<LambertMinimization> {
    let (lo, hi) = t_range;
    if !(lo > 0.0 && hi > lo) {
        return Err(Error::Domain(format!("bad parameter range ({lo}, {hi})")));
    }
    let grid: Vec<f64> = (0..SCAN_POINTS)
        .map(|i| lo + (hi - lo) * i as f64 / (SCAN_POINTS - 1) as f64)
        .collect();
    let valid: Vec<bool> = grid
        .par_iter()
        .map(|&t| lambert_objective(k, a, t).is_ok())
        .collect();

    let mut best: Option<(usize, usize)> = None;
    let mut i = 0;
    while i < grid.len() {
        if valid[i] {
            let start = i;
            while i + 1 < grid.len() && valid[i + 1] {
                i += 1;
            }
            if best.is_none_or(|(s, e)| i - start > e - s) {
                best = Some((start, i));
            }
        }
        i += 1;
    }
    let (s, e) = best.ok_or_else(|| {
        Error::EmptyValidRange(format!(
            "{a} and its mirror are invalid on all of ({lo}, {hi})"
        ))
    })?;
    if s == e {
        return Err(Error::EmptyValidRange(format!(
            "{a} is valid only at isolated t = {}",
            grid[s]
        )));
    }
    let valid_range = (grid[s], grid[e]);
    let f = |t: f64| lambert_objective(k, a, t).unwrap_or(DEFAULT_PENALTY);
    let (t, value, iterations) = golden_section(f, valid_range.0, valid_range.1, 1e-10);
    if value >= DEFAULT_PENALTY {
        return Err(Error::OptimizationFailed(format!(
            "search left the valid range at t = {t}"
        )));
    }
    Ok(LambertMinimization {
        result: MinimizationResult {
            argmin: vec![t],
            value,
            iterations,
            evaluations: iterations + 3,
            converged: true,
            distance_to_regular: (t - regular_lambert_parameter(k)).abs(),
        },
        requested: t_range,
        valid_range,
    })
}
