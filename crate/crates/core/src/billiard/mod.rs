//! Billiard sequences, unfolding, closed trajectories, and their families.

mod family;
mod sequence;
mod trajectory;

pub use family::{
    cyclic_family, cyclic_family_with, lift_sequence_to_polygon, reflective_pair,
    reflective_pair_with, scaling_relation, CyclicFamily, LiftedSequence, ReflectivePair,
    ScalingRelation,
};
pub use sequence::{reflect_sequence, rotate_sequence, BilliardSequence};
pub use trajectory::{trajectory, trajectory_with, unfold, BilliardTrajectory, Parity};
