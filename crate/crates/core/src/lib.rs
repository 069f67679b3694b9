//! Closed billiard trajectories in right-angled hyperbolic polygons and
//! Lambert quadrilaterals.
//!
//! - [`hypgeo`]: points, geodesics, and isometries of the hyperbolic plane.
//! - [`polygon`]: right-angled 2k-gons, Lambert quadrilaterals, and gluings.
//! - [`billiard`]: billiard sequences and the closed trajectories they code.
//! - [`surface`]: lifts to the four-copy billiard surface and its
//!   Fenchel–Nielsen lengths.
//! - [`filling`]: whether a family of trajectories cuts a table into discs.
//! - [`optimize`]: minimizing average trajectory length.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod billiard;
pub mod error;
pub mod filling;
pub mod hypgeo;
pub mod optimize;
pub mod polygon;
pub mod surface;
pub mod tol;

mod planar;

pub use billiard::{BilliardSequence, BilliardTrajectory, CyclicFamily};
pub use error::{Error, Result};
pub use hypgeo::{Geodesic, HPoint, Isometry};
pub use polygon::{LambertQuad, RightAngledPolygon, Table};
pub use tol::Tolerances;
