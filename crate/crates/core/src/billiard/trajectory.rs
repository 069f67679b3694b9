use std::f64::consts::PI;

use super::BilliardSequence;
use crate::error::{Error, Result};
use crate::hypgeo::{circular_distance, dist, tangent_angle, HPoint, Isometry, OrientedGeodesic};
use crate::planar;
use crate::polygon::Table;
use crate::tol::Tolerances;

/// Samples per segment for the containment check.
const CONTAINMENT_SAMPLES: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// A closed billiard trajectory realizing a sequence on a table.
#[derive(Debug, Clone, PartialEq)]
pub struct BilliardTrajectory {
    sequence: BilliardSequence,
    bounce_points: Vec<HPoint>,
    segment_lengths: Vec<f64>,
    total_length: f64,
    word: Isometry,
    parity: Parity,
}

impl BilliardTrajectory {
    pub fn sequence(&self) -> &BilliardSequence {
        &self.sequence
    }

    /// `bounce_points()[i]` lies on side `sequence()[i]`.
    pub fn bounce_points(&self) -> &[HPoint] {
        &self.bounce_points
    }

    /// `segment_lengths()[i]` runs from bounce `i` to bounce `i + 1`.
    pub fn segment_lengths(&self) -> &[f64] {
        &self.segment_lengths
    }

    pub fn total_length(&self) -> f64 {
        self.total_length
    }

    /// The unfolding word `r(aₙ₋₁)∘…∘r(a₀)`.
    pub fn word(&self) -> &Isometry {
        &self.word
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Translation length of the word, a glide length for odd words.
    pub fn word_length(&self) -> Result<f64> {
        word_length(&self.word)
    }

    /// Segment endpoints as pairs of consecutive bounce points.
    pub fn segments(&self) -> impl Iterator<Item = (HPoint, HPoint)> + '_ {
        let n = self.bounce_points.len();
        (0..n).map(move |i| (self.bounce_points[i], self.bounce_points[(i + 1) % n]))
    }
}

fn word_length(w: &Isometry) -> Result<f64> {
    if w.is_preserving() {
        Ok(w.translation_length()?.length)
    } else {
        w.glide_length()
    }
}

/// `r(aₙ₋₁)∘…∘r(a₀)`, the isometry that straightens the trajectory.
pub fn unfold(table: &Table, a: &BilliardSequence) -> Result<Isometry> {
    a.check_labels(table.num_sides())?;
    Ok(a.entries().iter().fold(Isometry::identity(), |acc, &l| {
        table.reflection(l).compose(&acc)
    }))
}

pub fn trajectory(table: &Table, a: &BilliardSequence) -> Result<BilliardTrajectory> {
    trajectory_with(table, a, &Tolerances::default())
}

/// Unsigned angle between two directions, in `[0, π]`.
fn angle_between(u: f64, v: f64) -> f64 {
    circular_distance(u, v)
}

/// Compute the closed trajectory with billiard sequence `a` and check it is a
/// genuine billiard path in `table`.
///
/// The word `r(aᵢ)∘…∘r(aᵢ₋₁)` obtained by starting the cycle at position `i`
/// (squared when odd) is a translation whose axis, directed towards its
/// attracting end, is the line the trajectory follows into bounce `i`.
pub fn trajectory_with(
    table: &Table,
    a: &BilliardSequence,
    tol: &Tolerances,
) -> Result<BilliardTrajectory> {
    a.check_labels(table.num_sides())?;
    let labels = a.entries();
    let n = labels.len();
    let refl: Vec<Isometry> = (1..=table.num_sides())
        .map(|l| table.reflection(l))
        .collect();
    let r = |l: usize| &refl[l - 1];
    let parity = if n.is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    };

    let word = labels
        .iter()
        .fold(Isometry::identity(), |acc, &l| r(l).compose(&acc));
    let even_word = if n.is_multiple_of(2) {
        word
    } else {
        word.compose(&word)
    };
    let trace = even_word.trace().abs();
    if trace - 2.0 <= tol.classification {
        return Err(Error::NonHyperbolicWord { trace });
    }

    let mut axes = Vec::with_capacity(n);
    let mut bounces = Vec::with_capacity(n);
    for i in 0..n {
        let h = (0..n).fold(Isometry::identity(), |acc, j| {
            acc.compose(r(labels[(i + j) % n]))
        });
        let h = if n.is_multiple_of(2) {
            h
        } else {
            h.compose(&h)
        };
        let (from, to) = h.oriented_axis()?;
        let axis = OrientedGeodesic::new(from, to)?;
        let side = table.side(labels[i]);
        let p = axis
            .unoriented()
            .intersection(&side.geodesic())
            .ok_or_else(|| {
                Error::InvalidSequence(format!("{a}: axis misses the line of side {}", labels[i]))
            })?;
        if !side.contains_interior(p, tol.geometric) {
            return Err(Error::InvalidSequence(format!(
                "{a}: bounce {i} falls outside side {}",
                labels[i]
            )));
        }
        axes.push(axis);
        bounces.push(p);
    }

    let mut segment_lengths = Vec::with_capacity(n);
    for i in 0..n {
        let j = (i + 1) % n;
        let line = &axes[j];
        if !(line.param(bounces[i]) < line.param(bounces[j])) {
            return Err(Error::InvalidSequence(format!(
                "{a}: bounces {i} and {j} are out of order"
            )));
        }
        segment_lengths.push(dist(bounces[i], bounces[j]));
    }

    let total_length: f64 = segment_lengths.iter().sum();
    let expected = word_length(&word)?;
    if (total_length - expected).abs() > tol.geometric.max(1e-8) * expected.max(1.0) {
        return Err(Error::InvalidSequence(format!(
            "{a}: path length {total_length} differs from word length {expected}"
        )));
    }

    for i in 0..n {
        let p = bounces[i];
        let prev = tangent_angle(p, bounces[(i + n - 1) % n]);
        let next = tangent_angle(p, bounces[(i + 1) % n]);
        let side = table.side(labels[i]);
        let t = tangent_angle(p, side.end());
        let mismatch = (angle_between(prev, t) - angle_between(next, t + PI)).abs();
        if mismatch > tol.angle {
            return Err(Error::InvalidSequence(format!(
                "{a}: reflection law fails at bounce {i} by {mismatch:.3e}"
            )));
        }
    }

    for i in 0..n {
        let (p, q) = (bounces[i].to_klein(), bounces[(i + 1) % n].to_klein());
        for s in 1..CONTAINMENT_SAMPLES {
            let x = planar::lerp(p, q, s as f64 / CONTAINMENT_SAMPLES as f64);
            let inside = HPoint::from_klein(x).map(|h| table.contains(h, tol.geometric));
            if !matches!(inside, Ok(true)) {
                return Err(Error::InvalidSequence(format!(
                    "{a}: segment {i} leaves the table"
                )));
            }
        }
    }

    Ok(BilliardTrajectory {
        sequence: a.clone(),
        bounce_points: bounces,
        segment_lengths,
        total_length,
        word: word.inverse(),
        parity,
    })
}
