use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use hypbill::BilliardSequence;

/// Closed billiard trajectories in right-angled hyperbolic polygons.
#[derive(Debug, Parser)]
#[command(name = "hypbill", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,

    /// Also render an SVG figure to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub svg: Option<PathBuf>,

    /// Geometric tolerance for point equality and interiority margins.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a table and print its vertices, sides and angles.
    Table {
        #[command(subcommand)]
        kind: TableCommand,
    },
    /// Closed trajectory of one billiard sequence.
    Trajectory(SequenceArgs),
    /// Cyclic family on a polygon, or the mirror pair on a Lambert quadrilateral.
    Family(SequenceArgs),
    /// Lifts to the four-copy surface, or the lift of a Lambert sequence to the glued polygon.
    Lift(SequenceArgs),
    /// Fenchel–Nielsen data of the billiard surface.
    FnCoords(PolygonArgs),
    /// Whether a collection of trajectories fills the polygon.
    Filling(FillingArgs),
    /// Minimize the family-average length over right-angled polygons.
    Minimize(MinimizeArgs),
    /// Minimize the mirror-pair average over Lambert quadrilaterals.
    MinimizeLambert(MinimizeLambertArgs),
    /// Draw a table and optional trajectories as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Subcommand)]
pub enum TableCommand {
    /// The regular right-angled 2k-gon.
    Regular {
        #[arg(long)]
        k: usize,
    },
    /// Right-angled 2k-gon from its first 2k−3 sides.
    FromSides {
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        sides: Vec<f64>,
    },
    /// Lambert quadrilateral with acute angle π/k and first side t.
    Lambert {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: f64,
    },
    /// The right-angled 2k-gon tiled by 2k copies of a Lambert quadrilateral.
    GlueLambert {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: f64,
    },
    /// Read a table JSON written by `table` and print it again.
    Load {
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
    },
}

/// Which table to use: a right-angled 2k-gon, or a Lambert quadrilateral when `--t` is given.
#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub k: usize,
    /// First 2k−3 side lengths; the regular polygon when omitted.
    #[arg(long, value_delimiter = ',', conflicts_with = "t")]
    pub sides: Option<Vec<f64>>,
    /// Lambert parameter: use the quadrilateral instead of the 2k-gon.
    #[arg(long)]
    pub t: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct PolygonArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_delimiter = ',')]
    pub sides: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Args)]
pub struct SequenceArgs {
    #[command(flatten)]
    pub table: TableArgs,
    #[arg(long, value_parser = parse_sequence)]
    pub sequence: BilliardSequence,
}

#[derive(Debug, Clone, Args)]
pub struct FillingArgs {
    #[command(flatten)]
    pub polygon: PolygonArgs,
    /// Repeat for several trajectories.
    #[arg(long = "sequence", value_parser = parse_sequence, required = true)]
    pub sequences: Vec<BilliardSequence>,
    /// Replace each sequence by all its label rotations.
    #[arg(long)]
    pub orbit: bool,
}

#[derive(Debug, Clone, Args)]
pub struct MinimizeArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_parser = parse_sequence)]
    pub sequence: BilliardSequence,
    /// Seed for the random starts.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct MinimizeLambertArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_parser = parse_sequence)]
    pub sequence: BilliardSequence,
    #[arg(long, default_value_t = 0.05)]
    pub t_min: f64,
    #[arg(long, default_value_t = 3.0)]
    pub t_max: f64,
}

#[derive(Debug, Clone, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub table: TableArgs,
    #[arg(long = "sequence", value_parser = parse_sequence)]
    pub sequences: Vec<BilliardSequence>,
    #[arg(long)]
    pub orbit: bool,
    /// Skip the green orthogeodesics.
    #[arg(long)]
    pub no_green: bool,
}

fn parse_sequence(s: &str) -> Result<BilliardSequence, String> {
    s.parse().map_err(|e: hypbill::Error| e.to_string())
}
