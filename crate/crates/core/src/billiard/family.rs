use std::collections::HashSet;

use rayon::prelude::*;

use super::{
    reflect_sequence, rotate_sequence, trajectory_with, BilliardSequence, BilliardTrajectory,
};
use crate::error::{Error, Result};
use crate::polygon::{glue_lambert, GlueRole, LambertQuad, RightAngledPolygon, Table};
use crate::tol::Tolerances;

/// The trajectories of all label rotations of a sequence, kept with multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclicFamily {
    base: BilliardSequence,
    members: Vec<BilliardTrajectory>,
    average_length: f64,
}

impl CyclicFamily {
    pub fn base(&self) -> &BilliardSequence {
        &self.base
    }

    /// `members()[j]` realizes the base sequence rotated by `j`.
    pub fn members(&self) -> &[BilliardTrajectory] {
        &self.members
    }

    pub fn lengths(&self) -> Vec<f64> {
        self.members
            .iter()
            .map(BilliardTrajectory::total_length)
            .collect()
    }

    pub fn average_length(&self) -> f64 {
        self.average_length
    }

    /// Number of distinct trajectories, identifying members whose sequences
    /// agree up to starting point and direction.
    pub fn distinct_count(&self) -> usize {
        self.members
            .iter()
            .map(|m| m.sequence().canonical())
            .collect::<HashSet<_>>()
            .len()
    }

    /// Sum of the lengths of the distinct trajectories.
    pub fn distinct_total_length(&self) -> f64 {
        let mut seen = HashSet::new();
        self.members
            .iter()
            .filter(|m| seen.insert(m.sequence().canonical()))
            .map(BilliardTrajectory::total_length)
            .sum()
    }
}

pub fn cyclic_family(p: &RightAngledPolygon, a: &BilliardSequence) -> Result<CyclicFamily> {
    cyclic_family_with(p.table(), a, &Tolerances::default())
}

/// Family over every rotation of the labels of `table`.
pub fn cyclic_family_with(
    table: &Table,
    a: &BilliardSequence,
    tol: &Tolerances,
) -> Result<CyclicFamily> {
    let m = table.num_sides();
    a.check_labels(m)?;
    let members = (0..m)
        .into_par_iter()
        .map(|j| {
            trajectory_with(table, &rotate_sequence(a, j, m), tol).map_err(|e| {
                Error::FamilyInvalid {
                    rotation: j,
                    reason: e.to_string(),
                }
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let average_length = members
        .iter()
        .map(BilliardTrajectory::total_length)
        .sum::<f64>()
        / m as f64;
    Ok(CyclicFamily {
        base: a.clone(),
        members,
        average_length,
    })
}

/// A trajectory on a Lambert quadrilateral and its mirror partner.
#[derive(Debug, Clone, PartialEq)]
pub struct ReflectivePair {
    pub gamma: BilliardTrajectory,
    pub gamma_bar: BilliardTrajectory,
    /// Mean of the two lengths.
    pub average: f64,
}

pub fn reflective_pair(q: &LambertQuad, a: &BilliardSequence) -> Result<ReflectivePair> {
    reflective_pair_with(q, a, &Tolerances::default())
}

pub fn reflective_pair_with(
    q: &LambertQuad,
    a: &BilliardSequence,
    tol: &Tolerances,
) -> Result<ReflectivePair> {
    let gamma = trajectory_with(q.table(), a, tol)?;
    let gamma_bar = trajectory_with(q.table(), &reflect_sequence(a)?, tol)?;
    let average = (gamma.total_length() + gamma_bar.total_length()) / 2.0;
    Ok(ReflectivePair {
        gamma,
        gamma_bar,
        average,
    })
}

/// Billiard sequence on the glued 2k-gon traced by the lift of `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedSequence {
    pub sequence: BilliardSequence,
    /// Traversals of `a` before the lift closes.
    pub passes: usize,
}

/// Follow `a` through the copies of the glued quadrilateral: spoke bounces
/// move to the neighbouring copy, outer bounces emit the 2k-gon label. The
/// lift closes at the first full pass that ends back in copy 0.
pub fn lift_sequence_to_polygon(q: &LambertQuad, a: &BilliardSequence) -> Result<LiftedSequence> {
    trajectory_with(q.table(), a, &Tolerances::default())?;
    let glued = glue_lambert(q)?;
    let mut copy = 0;
    let mut emitted = Vec::new();
    for passes in 1..=glued.num_copies() {
        for &label in a.entries() {
            match glued.role(copy, label) {
                GlueRole::Spoke { neighbor } => copy = neighbor,
                GlueRole::Outer { label } => emitted.push(label),
            }
        }
        if copy == 0 {
            let sequence = BilliardSequence::new(emitted)
                .map_err(|e| Error::InvalidSequence(format!("lift of {a}: {e}")))?;
            return Ok(LiftedSequence { sequence, passes });
        }
    }
    Err(Error::InvalidSequence(format!(
        "lift of {a} does not close"
    )))
}

/// Both sides of the length identity between a Lambert pair and its lift to the glued 2k-gon.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingRelation {
    pub lifted: LiftedSequence,
    /// Distinct trajectories in the cyclic family of the lifted sequence.
    pub family_size: usize,
    /// `family_size · L_avg(b, P_Q)`.
    pub lhs: f64,
    /// `4k · L_avg(a, Q)`.
    pub rhs: f64,
}

pub fn scaling_relation(q: &LambertQuad, a: &BilliardSequence) -> Result<ScalingRelation> {
    let tol = Tolerances::default();
    let pair = reflective_pair_with(q, a, &tol)?;
    let lifted = lift_sequence_to_polygon(q, a)?;
    let glued = glue_lambert(q)?;
    let family = cyclic_family_with(glued.polygon().table(), &lifted.sequence, &tol)?;
    let family_size = family.distinct_count();
    Ok(ScalingRelation {
        lifted,
        family_size,
        lhs: family_size as f64 * family.average_length(),
        rhs: 4.0 * q.k() as f64 * pair.average,
    })
}
