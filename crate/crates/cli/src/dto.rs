//! JSON shapes of the command outputs.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Number, Value};

use hypbill::billiard::{CyclicFamily, LiftedSequence, Parity, ScalingRelation};
use hypbill::filling::{Arrangement, FillingReport};
use hypbill::hypgeo::HPoint;
use hypbill::optimize::MinimizationResult;
use hypbill::surface::{FNCoordinates, LiftCount};
use hypbill::{BilliardTrajectory, Table};

/// Round to 15 significant digits.
pub fn round15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

pub fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round15(n.as_f64().unwrap_or(f64::NAN));
            *v = Number::from_f64(x).map_or(Value::Null, Value::Number);
        }
        Value::Array(a) => a.iter_mut().for_each(round_floats),
        Value::Object(o) => o.values_mut().for_each(round_floats),
        _ => {}
    }
}

fn pt(p: HPoint) -> [f64; 2] {
    [p.x(), p.y()]
}

/// Every input of a run, defaults included.
#[derive(Debug, Default, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub k: Option<usize>,
    pub sides: Option<Vec<f64>>,
    pub t: Option<f64>,
    pub sequences: Vec<String>,
    pub orbit: Option<bool>,
    pub seed: Option<u64>,
    pub t_range: Option<[f64; 2]>,
    pub input: Option<String>,
    pub tol: f64,
    pub svg: Option<String>,
    pub json: Option<String>,
}

impl RunConfig {
    pub fn new(command: &str, tol: f64, svg: Option<&Path>, json: Option<&Path>) -> Self {
        Self {
            command: command.to_string(),
            tol,
            svg: svg.map(|p| p.display().to_string()),
            json: json.map(|p| p.display().to_string()),
            ..Default::default()
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TableDto {
    pub num_sides: usize,
    pub vertices: Vec<[f64; 2]>,
    pub side_lengths: Vec<f64>,
    pub angles: Vec<f64>,
    pub area: f64,
    #[serde(default)]
    pub holonomy_residual: Option<f64>,
}

impl TableDto {
    pub fn new(t: &Table, holonomy_residual: Option<f64>) -> Self {
        Self {
            num_sides: t.num_sides(),
            vertices: t.vertices().iter().map(|v| pt(*v)).collect(),
            side_lengths: t.side_lengths(),
            angles: t.angles().to_vec(),
            area: t.area(),
            holonomy_residual,
        }
    }

    pub fn to_table(&self) -> hypbill::Result<Table> {
        let vertices = self
            .vertices
            .iter()
            .map(|[x, y]| HPoint::new(*x, *y))
            .collect::<hypbill::Result<Vec<_>>>()?;
        Table::from_vertices(vertices)
    }
}

#[derive(Debug, Serialize)]
pub struct TrajectoryDto {
    pub sequence: String,
    pub parity: &'static str,
    pub bounce_points: Vec<[f64; 2]>,
    pub segment_lengths: Vec<f64>,
    pub total_length: f64,
    pub word_length: Option<f64>,
}

impl From<&BilliardTrajectory> for TrajectoryDto {
    fn from(t: &BilliardTrajectory) -> Self {
        Self {
            sequence: t.sequence().to_string(),
            parity: match t.parity() {
                Parity::Even => "even",
                Parity::Odd => "odd",
            },
            bounce_points: t.bounce_points().iter().map(|p| pt(*p)).collect(),
            segment_lengths: t.segment_lengths().to_vec(),
            total_length: t.total_length(),
            word_length: t.word_length().ok(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MemberDto {
    pub rotation: usize,
    pub sequence: String,
    pub total_length: f64,
}

#[derive(Debug, Serialize)]
pub struct FamilyDto {
    pub base: String,
    pub average_length: f64,
    pub distinct_count: usize,
    pub distinct_total_length: f64,
    pub members: Vec<MemberDto>,
}

impl From<&CyclicFamily> for FamilyDto {
    fn from(f: &CyclicFamily) -> Self {
        Self {
            base: f.base().to_string(),
            average_length: f.average_length(),
            distinct_count: f.distinct_count(),
            distinct_total_length: f.distinct_total_length(),
            members: f
                .members()
                .iter()
                .enumerate()
                .map(|(rotation, m)| MemberDto {
                    rotation,
                    sequence: m.sequence().to_string(),
                    total_length: m.total_length(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LiftDto {
    pub sequence: String,
    pub trajectory_length: f64,
    pub deck_word: String,
    pub count: usize,
    pub per_lift_length: f64,
    pub stabilizer: Vec<String>,
    pub geometric_stabilizer: Vec<String>,
    pub passes: usize,
    /// `[copy, side label]` per step.
    pub itinerary: Vec<[usize; 2]>,
}

impl LiftDto {
    pub fn new(
        t: &BilliardTrajectory,
        l: &LiftCount,
        geometric: &[hypbill::surface::DeckElement],
    ) -> Self {
        Self {
            sequence: t.sequence().to_string(),
            trajectory_length: t.total_length(),
            deck_word: l.deck_word.to_string(),
            count: l.count,
            per_lift_length: l.per_lift_length,
            stabilizer: l.stabilizer.iter().map(ToString::to_string).collect(),
            geometric_stabilizer: geometric.iter().map(ToString::to_string).collect(),
            passes: l.itinerary.passes,
            itinerary: l.itinerary.steps.iter().map(|&(c, s)| [c, s]).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LambertLiftDto {
    pub sequence: String,
    pub lifted_sequence: String,
    pub passes: usize,
    pub family_size: usize,
    pub lhs: f64,
    pub rhs: f64,
}

impl LambertLiftDto {
    pub fn new(a: &str, lifted: &LiftedSequence, s: &ScalingRelation) -> Self {
        Self {
            sequence: a.to_string(),
            lifted_sequence: lifted.sequence.to_string(),
            passes: lifted.passes,
            family_size: s.family_size,
            lhs: s.lhs,
            rhs: s.rhs,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FnDto {
    pub genus: usize,
    pub curve_count: usize,
    pub alpha_lengths: Vec<f64>,
    pub delta_lengths: Vec<[f64; 2]>,
    pub beta_lengths: Vec<f64>,
    pub twists: Vec<f64>,
    pub in_billiard_space: bool,
}

impl From<&FNCoordinates> for FnDto {
    fn from(c: &FNCoordinates) -> Self {
        Self {
            genus: c.genus(),
            curve_count: c.curve_count(),
            alpha_lengths: c.alpha_lengths.clone(),
            delta_lengths: c.delta_lengths.iter().map(|&(a, b)| [a, b]).collect(),
            beta_lengths: c.beta_lengths.clone(),
            twists: c.twists.clone(),
            in_billiard_space: c.in_billiard_space(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FaceDto {
    pub class: &'static str,
    pub area: f64,
    pub klein_vertices: Vec<[f64; 2]>,
}

#[derive(Debug, Serialize)]
pub struct FillingDto {
    pub is_filling: bool,
    pub trajectories: Vec<String>,
    pub total_area: f64,
    pub polygon_area: f64,
    pub euler_characteristic: i64,
    pub faces: Vec<FaceDto>,
    pub warnings: Vec<String>,
}

impl FillingDto {
    pub fn new(
        trajectories: Vec<String>,
        table: &Table,
        a: &Arrangement,
        r: &FillingReport,
    ) -> Self {
        use hypbill::filling::FaceClass;
        let faces = a
            .interior_faces()
            .iter()
            .zip(r.classes.iter().zip(&r.areas))
            .map(|(f, (c, area))| FaceDto {
                class: match c {
                    FaceClass::PureDisc => "pure_disc",
                    FaceClass::EdgeDisc => "edge_disc",
                    FaceClass::CornerDisc => "corner_disc",
                    FaceClass::Invalid => "invalid",
                },
                area: *area,
                klein_vertices: f.vertices.iter().map(|&v| a.vertices[v]).collect(),
            })
            .collect();
        Self {
            is_filling: r.is_filling,
            trajectories,
            total_area: r.total_area(),
            polygon_area: table.area(),
            euler_characteristic: a.euler_characteristic(),
            faces,
            warnings: a.warnings.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MinimizeDto {
    pub sequence: String,
    pub argmin: Vec<f64>,
    pub value: f64,
    pub regular_value: f64,
    pub iterations: usize,
    pub evaluations: usize,
    pub converged: bool,
    pub distance_to_regular: f64,
}

impl MinimizeDto {
    pub fn new(sequence: String, r: &MinimizationResult, regular_value: f64) -> Self {
        Self {
            sequence,
            argmin: r.argmin.clone(),
            value: r.value,
            regular_value,
            iterations: r.iterations,
            evaluations: r.evaluations,
            converged: r.converged,
            distance_to_regular: r.distance_to_regular,
        }
    }
}

/// Merge the config echo and a result object into one top-level object.
pub fn envelope<T: Serialize>(config: &RunConfig, result: &T) -> Value {
    let mut out = Map::new();
    out.insert(
        "config".into(),
        serde_json::to_value(config).unwrap_or(Value::Null),
    );
    match serde_json::to_value(result).unwrap_or(Value::Null) {
        Value::Object(fields) => out.extend(fields),
        other => {
            out.insert("result".into(), other);
        }
    }
    let mut v = Value::Object(out);
    round_floats(&mut v);
    v
}
