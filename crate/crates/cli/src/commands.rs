use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use hypbill::billiard::{
    cyclic_family_with, lift_sequence_to_polygon, reflective_pair_with, scaling_relation,
    trajectory_with,
};
use hypbill::filling::{build_arrangement_with, classify_faces};
use hypbill::optimize::{avg_length_objective, minimize_lambert, minimize_polygon, ObjectiveSpec};
use hypbill::polygon::{
    glue_lambert, green_diagonals, lambert_quad, polygon_from_sides_with,
    regular_lambert_parameter, regular_polygon, regular_side_length, SideColor,
};
use hypbill::surface::{fn_coordinates, geometric_stabilizer, lift_count};
use hypbill::{
    BilliardSequence, BilliardTrajectory, LambertQuad, RightAngledPolygon, Table, Tolerances,
};

use crate::args::{
    Cli, Command, FillingArgs, MinimizeArgs, MinimizeLambertArgs, PolygonArgs, RenderArgs,
    SequenceArgs, TableArgs, TableCommand,
};
use crate::dto::{
    envelope, FamilyDto, FillingDto, FnDto, LambertLiftDto, LiftDto, MinimizeDto, RunConfig,
    TableDto, TrajectoryDto,
};
use crate::svg::{Scene, BLUE, GREEN, INK, RED};
use crate::CliError;

const FIGURE_SIZE: f64 = 640.0;

/// A command's JSON result and optional figure.
pub struct Output {
    pub json: Value,
    pub figure: Option<Scene>,
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let tol = Tolerances {
        geometric: cli.tol,
        ..Tolerances::default()
    };
    let config =
        |name: &str| RunConfig::new(name, cli.tol, cli.svg.as_deref(), cli.json.as_deref());
    match &cli.command {
        Command::Table { kind } => table(kind, config("table"), &tol),
        Command::Trajectory(a) => trajectory(a, config("trajectory"), &tol),
        Command::Family(a) => family(a, config("family"), &tol),
        Command::Lift(a) => lift(a, config("lift"), &tol),
        Command::FnCoords(a) => fn_coords(a, config("fn-coords"), &tol),
        Command::Filling(a) => filling(a, config("filling"), &tol),
        Command::Minimize(a) => minimize(a, config("minimize")),
        Command::MinimizeLambert(a) => minimize_lambert_cmd(a, config("minimize-lambert")),
        Command::Render(a) => {
            if cli.svg.is_none() {
                return Err(CliError::Usage("render needs --svg PATH".into()));
            }
            render(a, config("render"), &tol)
        }
    }
}

enum Domain {
    Polygon(RightAngledPolygon),
    Lambert(LambertQuad),
}

impl Domain {
    fn table(&self) -> &Table {
        match self {
            Domain::Polygon(p) => p.table(),
            Domain::Lambert(q) => q.table(),
        }
    }
}

fn polygon(
    k: usize,
    sides: &Option<Vec<f64>>,
    tol: &Tolerances,
) -> hypbill::Result<RightAngledPolygon> {
    match sides {
        None => regular_polygon(k),
        Some(s) => polygon_from_sides_with(k, s, None, tol),
    }
}

fn domain(a: &TableArgs, config: &mut RunConfig, tol: &Tolerances) -> hypbill::Result<Domain> {
    config.k = Some(a.k);
    config.sides = a.sides.clone();
    config.t = a.t;
    match a.t {
        Some(t) => Ok(Domain::Lambert(lambert_quad(a.k, t)?)),
        None => Ok(Domain::Polygon(polygon(a.k, &a.sides, tol)?)),
    }
}

fn polygon_domain(
    a: &PolygonArgs,
    config: &mut RunConfig,
    tol: &Tolerances,
) -> hypbill::Result<RightAngledPolygon> {
    config.k = Some(a.k);
    config.sides = a.sides.clone();
    polygon(a.k, &a.sides, tol)
}

fn draw_table(scene: &mut Scene, table: &Table) {
    for side in table.sides() {
        let color = match side.color() {
            SideColor::Blue => BLUE,
            SideColor::Red => RED,
        };
        scene.segment(side.start(), side.end(), color, 2.5);
        let line = side.line();
        let mid = line.point_at((line.param(side.start()) + line.param(side.end())) / 2.0);
        if let Ok(inner) = hypbill::hypgeo::HPoint::new(0.85 * mid.x(), 0.85 * mid.y()) {
            scene.label(inner, &side.label().to_string(), color);
        }
    }
}

fn draw_green(scene: &mut Scene, p: &RightAngledPolygon) -> hypbill::Result<()> {
    for arc in green_diagonals(p)?.arcs {
        scene.segment(arc.foot1, arc.foot2, GREEN, 1.8);
    }
    Ok(())
}

fn draw_trajectory(scene: &mut Scene, t: &BilliardTrajectory) {
    for (p, q) in t.segments() {
        scene.segment(p, q, INK, 1.2);
    }
    for p in t.bounce_points() {
        scene.dot(*p, INK);
    }
}

fn figure(
    table: &Table,
    green: Option<&RightAngledPolygon>,
    paths: &[BilliardTrajectory],
) -> hypbill::Result<Scene> {
    let mut scene = Scene::new(FIGURE_SIZE);
    draw_table(&mut scene, table);
    if let Some(p) = green {
        draw_green(&mut scene, p)?;
    }
    for t in paths {
        draw_trajectory(&mut scene, t);
    }
    Ok(scene)
}

fn table(kind: &TableCommand, mut config: RunConfig, tol: &Tolerances) -> Result<Output, CliError> {
    let (result, table, green) = match kind {
        TableCommand::Regular { k } => {
            config.k = Some(*k);
            let p = regular_polygon(*k)?;
            let r = json!({
                "kind": "regular",
                "k": k,
                "side_length": regular_side_length(*k),
                "table": TableDto::new(p.table(), Some(p.holonomy_residual())),
            });
            (r, p.table().clone(), Some(p))
        }
        TableCommand::FromSides { k, sides } => {
            config.k = Some(*k);
            config.sides = Some(sides.clone());
            let p = polygon_from_sides_with(*k, sides, None, tol)?;
            let r = json!({
                "kind": "from_sides",
                "k": k,
                "table": TableDto::new(p.table(), Some(p.holonomy_residual())),
            });
            (r, p.table().clone(), Some(p))
        }
        TableCommand::Lambert { k, t } => {
            config.k = Some(*k);
            config.t = Some(*t);
            let q = lambert_quad(*k, *t)?;
            let r = json!({
                "kind": "lambert",
                "k": k,
                "t": t,
                "a": q.a(),
                "b": q.b(),
                "acute_vertex": q.acute_vertex_index(),
                "symmetric_t": regular_lambert_parameter(*k),
                "table": TableDto::new(q.table(), None),
            });
            (r, q.table().clone(), None)
        }
        TableCommand::GlueLambert { k, t } => {
            config.k = Some(*k);
            config.t = Some(*t);
            let q = lambert_quad(*k, *t)?;
            let g = glue_lambert(&q)?;
            let p = g.polygon().clone();
            let r = json!({
                "kind": "glued_lambert",
                "k": k,
                "t": t,
                "a": q.a(),
                "b": q.b(),
                "copies": g.num_copies(),
                "table": TableDto::new(p.table(), Some(p.holonomy_residual())),
            });
            (r, p.table().clone(), Some(p))
        }
        TableCommand::Load { input } => {
            config.input = Some(input.display().to_string());
            let text = fs::read_to_string(input)
                .map_err(|e| CliError::Io(format!("{}: {e}", input.display())))?;
            let value: Value =
                serde_json::from_str(&text).map_err(|e| CliError::Input(e.to_string()))?;
            let dto_value = value.get("table").cloned().unwrap_or(value);
            let dto: TableDto =
                serde_json::from_value(dto_value).map_err(|e| CliError::Input(e.to_string()))?;
            let t = dto.to_table()?;
            let r = json!({
                "kind": "loaded",
                "table": TableDto::new(&t, dto.holonomy_residual),
            });
            (r, t, None)
        }
    };
    let scene = figure(&table, green.as_ref().filter(|p| p.k() > 3), &[])?;
    Ok(Output {
        json: envelope(&config, &result),
        figure: Some(scene),
    })
}

fn trajectory(
    a: &SequenceArgs,
    mut config: RunConfig,
    tol: &Tolerances,
) -> Result<Output, CliError> {
    config.sequences = vec![a.sequence.to_string()];
    let d = domain(&a.table, &mut config, tol)?;
    let t = trajectory_with(d.table(), &a.sequence, tol)?;
    let scene = figure(d.table(), None, std::slice::from_ref(&t))?;
    Ok(Output {
        json: envelope(&config, &TrajectoryDto::from(&t)),
        figure: Some(scene),
    })
}

fn family(a: &SequenceArgs, mut config: RunConfig, tol: &Tolerances) -> Result<Output, CliError> {
    config.sequences = vec![a.sequence.to_string()];
    match domain(&a.table, &mut config, tol)? {
        Domain::Polygon(p) => {
            let f = cyclic_family_with(p.table(), &a.sequence, tol)?;
            let scene = figure(p.table(), None, f.members())?;
            Ok(Output {
                json: envelope(&config, &FamilyDto::from(&f)),
                figure: Some(scene),
            })
        }
        Domain::Lambert(q) => {
            let pair = reflective_pair_with(&q, &a.sequence, tol)?;
            let r = json!({
                "gamma": TrajectoryDto::from(&pair.gamma),
                "gamma_bar": TrajectoryDto::from(&pair.gamma_bar),
                "average": pair.average,
            });
            let scene = figure(
                q.table(),
                None,
                &[pair.gamma.clone(), pair.gamma_bar.clone()],
            )?;
            Ok(Output {
                json: envelope(&config, &r),
                figure: Some(scene),
            })
        }
    }
}

fn lift(a: &SequenceArgs, mut config: RunConfig, tol: &Tolerances) -> Result<Output, CliError> {
    config.sequences = vec![a.sequence.to_string()];
    match domain(&a.table, &mut config, tol)? {
        Domain::Polygon(p) => {
            let t = trajectory_with(p.table(), &a.sequence, tol)?;
            let l = lift_count(&a.sequence, t.total_length());
            let g = geometric_stabilizer(&t, tol.angle);
            let scene = figure(p.table(), None, std::slice::from_ref(&t))?;
            Ok(Output {
                json: envelope(&config, &LiftDto::new(&t, &l, &g)),
                figure: Some(scene),
            })
        }
        Domain::Lambert(q) => {
            let lifted = lift_sequence_to_polygon(&q, &a.sequence)?;
            let s = scaling_relation(&q, &a.sequence)?;
            let glued = glue_lambert(&q)?;
            let t = trajectory_with(glued.polygon().table(), &lifted.sequence, tol)?;
            let scene = figure(glued.polygon().table(), None, &[t])?;
            let dto = LambertLiftDto::new(&a.sequence.to_string(), &lifted, &s);
            Ok(Output {
                json: envelope(&config, &dto),
                figure: Some(scene),
            })
        }
    }
}

fn fn_coords(a: &PolygonArgs, mut config: RunConfig, tol: &Tolerances) -> Result<Output, CliError> {
    let p = polygon_domain(a, &mut config, tol)?;
    let c = fn_coordinates(&p)?;
    let scene = figure(p.table(), Some(&p), &[])?;
    Ok(Output {
        json: envelope(&config, &FnDto::from(&c)),
        figure: Some(scene),
    })
}

fn collect_paths(
    table: &Table,
    sequences: &[BilliardSequence],
    orbit: bool,
    tol: &Tolerances,
) -> hypbill::Result<Vec<BilliardTrajectory>> {
    let mut paths = Vec::new();
    for s in sequences {
        if orbit {
            paths.extend_from_slice(cyclic_family_with(table, s, tol)?.members());
        } else {
            paths.push(trajectory_with(table, s, tol)?);
        }
    }
    Ok(paths)
}

fn filling(a: &FillingArgs, mut config: RunConfig, tol: &Tolerances) -> Result<Output, CliError> {
    config.sequences = a.sequences.iter().map(ToString::to_string).collect();
    config.orbit = Some(a.orbit);
    let p = polygon_domain(&a.polygon, &mut config, tol)?;
    let paths = collect_paths(p.table(), &a.sequences, a.orbit, tol)?;
    let arrangement = build_arrangement_with(p.table(), &paths, tol)?;
    let report = classify_faces(&arrangement)?;
    let names = paths.iter().map(|t| t.sequence().to_string()).collect();
    let dto = FillingDto::new(names, p.table(), &arrangement, &report);
    let scene = figure(p.table(), None, &paths)?;
    Ok(Output {
        json: envelope(&config, &dto),
        figure: Some(scene),
    })
}

fn minimize(a: &MinimizeArgs, mut config: RunConfig) -> Result<Output, CliError> {
    config.k = Some(a.k);
    config.sequences = vec![a.sequence.to_string()];
    config.seed = Some(a.seed);
    let spec = ObjectiveSpec::new(a.k, a.sequence.clone())?;
    let r = minimize_polygon(&spec, a.seed)?;
    let regular_value = avg_length_objective(&spec, &spec.regular_point());
    let p = polygon_from_sides_with(a.k, &r.argmin, None, &Tolerances::default())?;
    let scene = figure(p.table(), None, &[])?;
    let dto = MinimizeDto::new(a.sequence.to_string(), &r, regular_value);
    Ok(Output {
        json: envelope(&config, &dto),
        figure: Some(scene),
    })
}

fn minimize_lambert_cmd(
    a: &MinimizeLambertArgs,
    mut config: RunConfig,
) -> Result<Output, CliError> {
    config.k = Some(a.k);
    config.sequences = vec![a.sequence.to_string()];
    config.t_range = Some([a.t_min, a.t_max]);
    let m = minimize_lambert(a.k, &a.sequence, (a.t_min, a.t_max))?;
    let t = m.result.argmin[0];
    let r = json!({
        "sequence": a.sequence.to_string(),
        "t": t,
        "symmetric_t": regular_lambert_parameter(a.k),
        "value": m.result.value,
        "iterations": m.result.iterations,
        "evaluations": m.result.evaluations,
        "converged": m.result.converged,
        "distance_to_regular": m.result.distance_to_regular,
        "valid_range": [m.valid_range.0, m.valid_range.1],
    });
    let q = lambert_quad(a.k, t)?;
    let pair = reflective_pair_with(&q, &a.sequence, &Tolerances::default())?;
    let scene = figure(q.table(), None, &[pair.gamma, pair.gamma_bar])?;
    Ok(Output {
        json: envelope(&config, &r),
        figure: Some(scene),
    })
}

fn render(a: &RenderArgs, mut config: RunConfig, tol: &Tolerances) -> Result<Output, CliError> {
    config.sequences = a.sequences.iter().map(ToString::to_string).collect();
    config.orbit = Some(a.orbit);
    let d = domain(&a.table, &mut config, tol)?;
    let paths = collect_paths(d.table(), &a.sequences, a.orbit, tol)?;
    let green = match &d {
        Domain::Polygon(p) if !a.no_green && p.k() > 3 => Some(p),
        _ => None,
    };
    let scene = figure(d.table(), green, &paths)?;
    let r = json!({ "trajectories": paths.len() });
    Ok(Output {
        json: envelope(&config, &r),
        figure: Some(scene),
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
