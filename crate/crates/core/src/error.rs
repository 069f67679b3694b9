use thiserror::Error;

use crate::hypgeo::IsometryKind;

/// Everything that can go wrong while building tables, trajectories and arrangements.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point ({x}, {y}) is not strictly inside the unit disc")]
    OutsideDisc { x: f64, y: f64 },
    #[error("geodesic endpoints coincide")]
    DegenerateGeodesic,
    #[error("isometry is orientation-reversing; use its glide length")]
    OrientationReversing,
    #[error("no axis: isometry is {0}")]
    NoAxis(IsometryKind),
    #[error("geodesics intersect")]
    Intersecting,
    #[error("geodesics are asymptotic (shared ideal endpoint)")]
    Asymptotic,
    #[error("no closing solution near seed: {0}")]
    NoClosingSolution(String),
    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(String),
    #[error("decomposition invalid: {0}")]
    DecompositionInvalid(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("malformed billiard sequence: {0}")]
    MalformedSequence(String),
    #[error("non-hyperbolic word (|trace| = {trace})")]
    NonHyperbolicWord { trace: f64 },
    #[error("invalid sequence for this table: {0}")]
    InvalidSequence(String),
    #[error("family invalid on this table: rotation {rotation}: {reason}")]
    FamilyInvalid { rotation: usize, reason: String },
    #[error("degenerate arrangement: {0}")]
    DegenerateArrangement(String),
    #[error("optimization failed: {0}")]
    OptimizationFailed(String),
    #[error("empty valid range: {0}")]
    EmptyValidRange(String),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::OutsideDisc { .. } => "outside_disc",
            Error::DegenerateGeodesic => "degenerate_geodesic",
            Error::OrientationReversing => "orientation_reversing",
            Error::NoAxis(_) => "no_axis",
            Error::Intersecting => "intersecting",
            Error::Asymptotic => "asymptotic",
            Error::NoClosingSolution(_) => "no_closing_solution",
            Error::DegeneratePolygon(_) => "degenerate_polygon",
            Error::DecompositionInvalid(_) => "decomposition_invalid",
            Error::Domain(_) => "domain",
            Error::MalformedSequence(_) => "malformed_sequence",
            Error::NonHyperbolicWord { .. } => "non_hyperbolic_word",
            Error::InvalidSequence(_) => "invalid_sequence",
            Error::FamilyInvalid { .. } => "family_invalid",
            Error::DegenerateArrangement(_) => "degenerate_arrangement",
            Error::OptimizationFailed(_) => "optimization_failed",
            Error::EmptyValidRange(_) => "empty_valid_range",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
