//! Turns a validated config into a run: initial data, scheme dispatch,
//! snapshot CSVs, a run manifest, and a best-effort plot script.
//!
//! Snapshot files are named `<prefix>_t<time>.csv`. One-dimensional
//! snapshots carry the cell center, the conserved components, and one
//! ledger column per component holding point masses not yet folded back
//! into averages. Wind snapshots carry `x,y,u,v` per node, plus a
//! `<prefix>_eye.csv` summary with the calm-spot position per snapshot.
//! Numbers are written with 17 significant digits so a reader can
//! round-trip the exact doubles.

use crate::config::{Config, GridSpec, InitialData, Segment, SystemId, SystemParams, VortexKind};
use crate::godunov::{self, Grid1D, RunPlan, StepScheme};
use crate::hurricane::{self, HurricanePlan, HurricaneParams, WindField};
use crate::systems::burgers::BurgersSolver;
use crate::systems::elasto::{ElastoForceSolver, ElastoParams, ElastoTransportSolver};
use crate::systems::euler::{PressureStepSolver, PressurelessSolver};
use crate::systems::k2::K2Solver;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RunError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("solver abort: {0}")]
    Engine(#[from] godunov::EngineError),
    #[error("solver abort: {0}")]
    Hurricane(#[from] hurricane::HurricaneError),
}

pub struct RunArtifacts {
    pub directory: PathBuf,
    pub files: Vec<PathBuf>,
    pub steps: usize,
    pub wall_seconds: f64,
}

/// Values of the segment covering position `x` (the first segment also
/// covers everything left of its start).
fn segment_at(segments: &[Segment], x: f64) -> &[f64] {
    let mut current = &segments[0];
    for s in segments {
        if s.x_start <= x {
            current = s;
        }
    }
    &current.values
}

/// Converts a primitive `[initial]` tuple to the conserved components the
/// grid carries.
fn conserved_from_primitive(system: SystemId, params: &SystemParams, vals: &[f64]) -> Vec<f64> {
    match (system, params) {
        (SystemId::EulerSplit, SystemParams::EulerSplit { gamma }) => {
            let (rho, u, p) = (vals[0], vals[1], vals[2]);
            let e = p / ((gamma - 1.0) * rho) + 0.5 * u * u;
            vec![rho, rho * u, rho * e]
        }
        (SystemId::Pressureless, _) => {
            let (rho, u, e) = (vals[0], vals[1], vals[2]);
            vec![rho, rho * u, rho * e]
        }
        _ => vals.to_vec(),
    }
}

/// Builds the initial cell-average grid for a one-dimensional scenario.
pub fn initial_grid(config: &Config) -> Grid1D {
    let GridSpec::Line { n, h, x0 } = &config.grid else {
        panic!("one-dimensional systems use a line grid");
    };
    let InitialData::Segments(segments) = &config.initial else {
        panic!("one-dimensional systems use segment initial data");
    };
    let ncomp = config.system.component_names().len();
    Grid1D::from_fn(*x0, *h, *n, ncomp, |x| {
        conserved_from_primitive(config.system, &config.params, segment_at(segments, x))
    })
}

/// Builds the initial wind field for a hurricane scenario.
pub fn initial_wind(config: &Config) -> WindField {
    let GridSpec::Plane { nx, ny, dx, dy, x0, y0 } = &config.grid else {
        panic!("hurricane uses a plane grid");
    };
    let InitialData::Vortex(vortex) = &config.initial else {
        panic!("hurricane uses a vortex initial pattern");
    };
    let SystemParams::Hurricane { coefficients, .. } = &config.params else {
        panic!("hurricane params");
    };
    let trade = coefficients.trade;
    let (cx, cy) = vortex.center;
    WindField::from_fn(*x0, *y0, *dx, *dy, *nx, *ny, |x, y| match vortex.kind {
        VortexKind::Ring { r_inner, r_outer, speed } => {
            let (rx, ry) = (x - cx, y - cy);
            let r = (rx * rx + ry * ry).sqrt();
            if r >= r_inner && r <= r_outer {
                (trade.0 - speed * ry / r, trade.1 + speed * rx / r)
            } else {
                trade
            }
        }
        VortexKind::SolidRotation { omega } => {
            (trade.0 - omega * (y - cy), trade.1 + omega * (x - cx))
        }
        VortexKind::Uniform { u, v } => (u, v),
    })
}

fn csv_number(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_snapshot_1d(grid: &Grid1D, names: &[&str]) -> String {
    let mut out = String::from("x_center");
    for n in names {
        out.push(',');
        out.push_str(n);
    }
    for n in names {
        out.push_str(",ledger_");
        out.push_str(n);
    }
    out.push('\n');
    for i in 0..grid.ncells() {
        out.push_str(&csv_number(grid.cell_center(i)));
        for w in grid.state(i) {
            out.push(',');
            out.push_str(&csv_number(*w));
        }
        for m in grid.ledger(i) {
            out.push(',');
            out.push_str(&csv_number(*m));
        }
        out.push('\n');
    }
    out
}

fn csv_snapshot_wind(field: &WindField) -> String {
    let mut out = String::from("x,y,u,v\n");
    for iy in 0..field.ny {
        for ix in 0..field.nx {
            let (x, y) = field.node_position(ix, iy);
            let (u, v) = field.at(ix, iy);
            let _ = writeln!(
                out,
                "{},{},{},{}",
                csv_number(x),
                csv_number(y),
                csv_number(u),
                csv_number(v)
            );
        }
    }
    out
}

fn write_file(dir: &Path, name: &str, content: &str) -> Result<PathBuf, RunError> {
    let path = dir.join(name);
    std::fs::write(&path, content).map_err(|source| RunError::Io { path: path.clone(), source })?;
    Ok(path)
}

/// Output directory precedence: explicit override, then the GFSHOCK_OUT
/// environment variable, then the config's `[output] directory`.
fn resolve_out_dir(config: &Config, override_dir: Option<&Path>, env_dir: Option<&str>) -> PathBuf {
    if let Some(d) = override_dir {
        return d.to_path_buf();
    }
    if let Some(d) = env_dir {
        if !d.is_empty() {
            return PathBuf::from(d);
        }
    }
    PathBuf::from(&config.output.directory)
}

fn plot_script_1d(csvs: &[String], names: &[&str]) -> String {
    let mut out = String::from(
        "# gnuplot script (best effort)\nset datafile separator \",\"\nset key \
         autotitle columnhead\nset xlabel \"x\"\n",
    );
    for (c, name) in names.iter().enumerate() {
        let _ = writeln!(out, "# component {name}");
        let parts: Vec<String> = csvs
            .iter()
            .map(|f| format!("\"{f}\" using 1:{} with lines", c + 2))
            .collect();
        let _ = writeln!(out, "plot {}", parts.join(", \\\n     "));
        out.push_str("pause -1\n");
    }
    out
}

fn plot_script_wind(csvs: &[String]) -> String {
    let mut out = String::from(
        "# gnuplot script (best effort)\nset datafile separator \",\"\nset size \
         ratio -1\n",
    );
    for f in csvs {
        let _ = writeln!(out, "plot \"{f}\" using 1:2:($3*0.2):($4*0.2) with vectors");
        out.push_str("pause -1\n");
    }
    out
}

/// Display form used in snapshot file names; output times come from config
/// literals, and runs land on them exactly, so this stays short.
fn time_tag(t: f64) -> String {
    format!("{t}")
}

/// Runs a scenario end to end and writes all artifacts. `override_dir`
/// (the CLI `--out`) wins over `GFSHOCK_OUT`, which wins over the config.
pub fn run_scenario(config: &Config, override_dir: Option<&Path>) -> Result<RunArtifacts, RunError> {
    let env_dir = std::env::var("GFSHOCK_OUT").ok();
    let dir = resolve_out_dir(config, override_dir, env_dir.as_deref());
    std::fs::create_dir_all(&dir)
        .map_err(|source| RunError::Io { path: dir.clone(), source })?;

    let started = std::time::Instant::now();
    let prefix = &config.output.prefix;
    let mut files = Vec::new();
    let mut csv_names = Vec::new();
    let steps;

    if config.system == SystemId::Hurricane {
        let SystemParams::Hurricane { coefficients, schedule } = &config.params else {
            unreachable!("validated")
        };
        let params =
            HurricaneParams { initial: *coefficients, schedule: schedule.clone() };
        let field = initial_wind(config);
        let plan = HurricanePlan {
            end_time: config.end_time,
            dt_cap: config.dt_cap.unwrap_or(config.end_time.max(1e-9)),
            // cfl is the fraction of the interaction-free allowance used;
            // the wind stability bound allows twice the fan bound's 1/2.
            safety: (config.cfl * 2.0).min(1.0),
            output_times: config.output.times.clone(),
        };
        let (snaps, n) = hurricane::hurricane_run_counted(field, &params, &plan)?;
        steps = n;
        let mut eye = String::from("t,x,y\n");
        for snap in &snaps {
            let name = format!("{prefix}_t{}.csv", time_tag(snap.time));
            files.push(write_file(&dir, &name, &csv_snapshot_wind(snap))?);
            csv_names.push(name);
            let (ex, ey) = hurricane::eye_position(snap);
            let _ = writeln!(eye, "{},{},{}", csv_number(snap.time), csv_number(ex), csv_number(ey));
        }
        files.push(write_file(&dir, &format!("{prefix}_eye.csv"), &eye)?);
        files.push(write_file(
            &dir,
            &format!("{prefix}_plot.gp"),
            &plot_script_wind(&csv_names),
        )?);
    } else {
        let grid = initial_grid(config);
        let plan = RunPlan {
            cfl: config.cfl,
            dt_cap: config.dt_cap.unwrap_or(config.end_time.max(1e-9)),
            end_time: config.end_time,
            output_times: config.output.times.clone(),
            boundary: config.boundary,
        };
        let burgers = BurgersSolver;
        let pressureless = PressurelessSolver;
        let scheme = match &config.params {
            SystemParams::Burgers => StepScheme::Single(&burgers),
            SystemParams::Pressureless => StepScheme::Single(&pressureless),
            SystemParams::K2 { k } => {
                let solver = K2Solver { k: *k };
                return finish_1d(config, grid, StepScheme::Single(&solver), &plan, dir, started);
            }
            SystemParams::EulerSplit { gamma } => {
                let second = PressureStepSolver { gamma: *gamma };
                let scheme = StepScheme::Split { first: &pressureless, second: &second };
                return finish_1d(config, grid, scheme, &plan, dir, started);
            }
            SystemParams::Elasto { gamma, k, s0 } => {
                let force = ElastoForceSolver { params: ElastoParams::new(*gamma, *k, *s0) };
                let scheme = StepScheme::Split { first: &ElastoTransportSolver, second: &force };
                return finish_1d(config, grid, scheme, &plan, dir, started);
            }
            SystemParams::Hurricane { .. } => unreachable!("handled above"),
        };
        return finish_1d(config, grid, scheme, &plan, dir, started);
    }

    let wall_seconds = started.elapsed().as_secs_f64();
    files.push(write_manifest(config, &dir, steps, wall_seconds, &csv_names)?);
    Ok(RunArtifacts { directory: dir, files, steps, wall_seconds })
}

fn finish_1d(
    config: &Config,
    grid: Grid1D,
    scheme: StepScheme,
    plan: &RunPlan,
    dir: PathBuf,
    started: std::time::Instant,
) -> Result<RunArtifacts, RunError> {
    let names = config.system.component_names();
    let prefix = &config.output.prefix;
    let (snaps, steps) = godunov::run_counted(grid, &scheme, plan)?;
    let mut files = Vec::new();
    let mut csv_names = Vec::new();
    for snap in &snaps {
        let name = format!("{prefix}_t{}.csv", time_tag(snap.time));
        files.push(write_file(&dir, &name, &csv_snapshot_1d(snap, names))?);
        csv_names.push(name);
    }
    files.push(write_file(&dir, &format!("{prefix}_plot.gp"), &plot_script_1d(&csv_names, names))?);
    let wall_seconds = started.elapsed().as_secs_f64();
    files.push(write_manifest(config, &dir, steps, wall_seconds, &csv_names)?);
    Ok(RunArtifacts { directory: dir, files, steps, wall_seconds })
}

fn write_manifest(
    config: &Config,
    dir: &Path,
    steps: usize,
    wall_seconds: f64,
    csvs: &[String],
) -> Result<PathBuf, RunError> {
    let mut out = String::from("# run manifest\n");
    for (k, v) in config.manifest() {
        let _ = writeln!(out, "{k} = {v}");
    }
    let _ = writeln!(out, "steps = {steps}");
    let _ = writeln!(out, "wall_seconds = {wall_seconds:.6}");
    let _ = writeln!(out, "snapshots = {}", csvs.join(" "));
    write_file(dir, &format!("{}_manifest.txt", config.output.prefix), &out)
}

// ============================================================================
