//! Scenario configuration: a small INI dialect, whole-document validation,
//! and the named presets.
//!
//! A config is sectioned `key = value` text. `[scenario]` names the system
//! and the time-stepping envelope, `[grid]` the mesh, `[params]` the
//! system constants, `[initial]` the data (either a two-state `left` /
//! `right` / `interface` shorthand or repeated `segment` lines), and
//! `[output]` the snapshot times and destination. Parsing reports every
//! violation it finds rather than stopping at the first, so a bad file can
//! be fixed in one pass.
//!
//! State values in `[initial]` are primitive per-system tuples:
//!
//! | system       | values                       |
//! |--------------|------------------------------|
//! | burgers      | u                            |
//! | k2           | v u sigma                    |
//! | euler_split  | rho u p                      |
//! | pressureless | rho u e                      |
//! | elasto       | v u s p                      |
//! | hurricane    | vortex pattern, see below    |
//!
//! The hurricane `[initial]` section instead picks a wind pattern:
//! `pattern = ring` (calm eye inside `r_inner`, swirl speed `speed` out to
//! `r_outer`), `pattern = solid_rotation` with angular rate `omega`, or
//! `pattern = uniform` with components `u`, `v`.

use crate::godunov::Boundary;
use crate::hurricane::Coefficients;
use thiserror::Error;

#[derive(Debug, Error)]
#[error("{}", issues.join("\n"))]
pub struct ConfigError {
    pub issues: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemId {
    Burgers,
    K2,
    EulerSplit,
    Pressureless,
    Elasto,
    Hurricane,
}

pub const SYSTEM_NAMES: [&str; 6] =
    ["burgers", "k2", "euler_split", "pressureless", "elasto", "hurricane"];

impl SystemId {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "burgers" => Some(Self::Burgers),
            "k2" => Some(Self::K2),
            "euler_split" => Some(Self::EulerSplit),
            "pressureless" => Some(Self::Pressureless),
            "elasto" => Some(Self::Elasto),
            "hurricane" => Some(Self::Hurricane),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Burgers => "burgers",
            Self::K2 => "k2",
            Self::EulerSplit => "euler_split",
            Self::Pressureless => "pressureless",
            Self::Elasto => "elasto",
            Self::Hurricane => "hurricane",
        }
    }

    /// Names of the primitive values expected in `[initial]` tuples.
    pub fn primitive_names(&self) -> &'static [&'static str] {
        match self {
            Self::Burgers => &["u"],
            Self::K2 => &["v", "u", "sigma"],
            Self::EulerSplit => &["rho", "u", "p"],
            Self::Pressureless => &["rho", "u", "e"],
            Self::Elasto => &["v", "u", "s", "p"],
            Self::Hurricane => &["u", "v"],
        }
    }

    /// Names of the conserved components carried on the grid and written to
    /// snapshot CSVs.
    pub fn component_names(&self) -> &'static [&'static str] {
        match self {
            Self::Burgers => &["u"],
            Self::K2 => &["v", "u", "sigma"],
            Self::EulerSplit | Self::Pressureless => &["rho", "momentum", "energy"],
            Self::Elasto => &["v", "u", "s", "p"],
            Self::Hurricane => &["u", "v"],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GridSpec {
    Line { n: usize, h: f64, x0: f64 },
    Plane { nx: usize, ny: usize, dx: f64, dy: f64, x0: f64, y0: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub enum SystemParams {
    Burgers,
    K2 { k: f64 },
    EulerSplit { gamma: f64 },
    Pressureless,
    Elasto { gamma: f64, k: f64, s0: f64 },
    Hurricane { coefficients: Coefficients, schedule: Vec<(f64, Coefficients)> },
}

/// One piecewise-constant band: `values` hold from `x_start` to the next
/// segment's start (the first segment also covers everything to its left).
#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    pub x_start: f64,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VortexKind {
    Ring { r_inner: f64, r_outer: f64, speed: f64 },
    SolidRotation { omega: f64 },
    Uniform { u: f64, v: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VortexSpec {
    pub center: (f64, f64),
    pub kind: VortexKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum InitialData {
    Segments(Vec<Segment>),
    Vortex(VortexSpec),
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputSpec {
    pub times: Vec<f64>,
    pub directory: String,
    pub prefix: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub system: SystemId,
    pub end_time: f64,
    pub cfl: f64,
    pub boundary: Boundary,
    pub dt_cap: Option<f64>,
    pub grid: GridSpec,
    pub params: SystemParams,
    pub initial: InitialData,
    pub output: OutputSpec,
}

impl Config {
    /// Every parameter affecting the numerics, as ordered key/value text
    /// pairs for the run manifest.
    pub fn manifest(&self) -> Vec<(String, String)> {
        let mut out = vec![
            ("system".into(), self.system.as_str().to_string()),
            ("end_time".into(), format!("{:.17e}", self.end_time)),
            ("cfl".into(), format!("{:.17e}", self.cfl)),
            (
                "boundary".into(),
                match self.boundary {
                    Boundary::Outflow => "outflow".into(),
                    Boundary::Reflective => "reflective".into(),
                },
            ),
        ];
        if let Some(cap) = self.dt_cap {
            out.push(("dt_cap".into(), format!("{cap:.17e}")));
        }
        match &self.grid {
            GridSpec::Line { n, h, x0 } => {
                out.push(("grid.n".into(), n.to_string()));
                out.push(("grid.h".into(), format!("{h:.17e}")));
                out.push(("grid.x0".into(), format!("{x0:.17e}")));
            }
            GridSpec::Plane { nx, ny, dx, dy, x0, y0 } => {
                out.push(("grid.nx".into(), nx.to_string()));
                out.push(("grid.ny".into(), ny.to_string()));
                out.push(("grid.dx".into(), format!("{dx:.17e}")));
                out.push(("grid.dy".into(), format!("{dy:.17e}")));
                out.push(("grid.x0".into(), format!("{x0:.17e}")));
                out.push(("grid.y0".into(), format!("{y0:.17e}")));
            }
        }
        match &self.params {
            SystemParams::Burgers | SystemParams::Pressureless => {}
            SystemParams::K2 { k } => out.push(("params.k".into(), format!("{k:.17e}"))),
            SystemParams::EulerSplit { gamma } => {
                out.push(("params.gamma".into(), format!("{gamma:.17e}")));
            }
            SystemParams::Elasto { gamma, k, s0 } => {
                out.push(("params.gamma".into(), format!("{gamma:.17e}")));
                out.push(("params.k".into(), format!("{k:.17e}")));
                out.push(("params.s0".into(), format!("{s0:.17e}")));
            }
            SystemParams::Hurricane { coefficients, schedule } => {
                let c = coefficients;
                out.push(("params.omega".into(), format!("{:.17e}", c.omega)));
                out.push(("params.mu".into(), format!("{:.17e}", c.mu)));
                out.push(("params.kcoef".into(), format!("{:.17e}", c.kcoef)));
                out.push(("params.trade_u".into(), format!("{:.17e}", c.trade.0)));
                out.push(("params.trade_v".into(), format!("{:.17e}", c.trade.1)));
                for (i, (t, c)) in schedule.iter().enumerate() {
                    out.push((
                        format!("params.schedule.{i}"),
                        format!(
                            "{:.17e} {:.17e} {:.17e} {:.17e} {:.17e} {:.17e}",
                            t, c.omega, c.mu, c.kcoef, c.trade.0, c.trade.1
                        ),
                    ));
                }
            }
        }
        match &self.initial {
            InitialData::Segments(segs) => {
                for (i, s) in segs.iter().enumerate() {
                    let vals: Vec<String> =
                        s.values.iter().map(|v| format!("{v:.17e}")).collect();
                    out.push((
                        format!("initial.segment.{i}"),
                        format!("{:.17e} {}", s.x_start, vals.join(" ")),
                    ));
                }
            }
            InitialData::Vortex(v) => {
                out.push(("initial.center_x".into(), format!("{:.17e}", v.center.0)));
                out.push(("initial.center_y".into(), format!("{:.17e}", v.center.1)));
                match v.kind {
                    VortexKind::Ring { r_inner, r_outer, speed } => {
                        out.push(("initial.pattern".into(), "ring".into()));
                        out.push(("initial.r_inner".into(), format!("{r_inner:.17e}")));
                        out.push(("initial.r_outer".into(), format!("{r_outer:.17e}")));
                        out.push(("initial.speed".into(), format!("{speed:.17e}")));
                    }
                    VortexKind::SolidRotation { omega } => {
                        out.push(("initial.pattern".into(), "solid_rotation".into()));
                        out.push(("initial.omega".into(), format!("{omega:.17e}")));
                    }
                    VortexKind::Uniform { u, v } => {
                        out.push(("initial.pattern".into(), "uniform".into()));
                        out.push(("initial.u".into(), format!("{u:.17e}")));
                        out.push(("initial.v".into(), format!("{v:.17e}")));
                    }
                }
            }
        }
        let times: Vec<String> = self.output.times.iter().map(|t| format!("{t:.17e}")).collect();
        out.push(("output.times".into(), times.join(" ")));
        out
    }
}

// ---------------------------------------------------------------------------
// Raw INI layer

struct Entry {
    key: String,
    value: String,
    line: usize,
}

struct Doc {
    sections: Vec<(String, Vec<Entry>)>,
}

impl Doc {
    fn section(&self, name: &str) -> Option<&Vec<Entry>> {
        self.sections.iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }

    /// Last value wins for scalar keys.
    fn get(&self, section: &str, key: &str) -> Option<&str> {
        self.section(section)?
            .iter()
            .rev()
            .find(|e| e.key == key)
            .map(|e| e.value.as_str())
    }

    /// All values of a repeatable key, in file order.
    fn all(&self, section: &str, key: &str) -> Vec<&str> {
        match self.section(section) {
            Some(entries) => {
                entries.iter().filter(|e| e.key == key).map(|e| e.value.as_str()).collect()
            }
            None => Vec::new(),
        }
    }
}

fn parse_ini(text: &str) -> (Doc, Vec<String>) {
    let mut doc = Doc { sections: Vec::new() };
    let mut issues = Vec::new();
    let mut current: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') || t.starts_with(';') {
            continue;
        }
        if let Some(rest) = t.strip_prefix('[') {
            match rest.strip_suffix(']') {
                Some(name) => {
                    let name = name.trim().to_string();
                    let at = doc.sections.iter().position(|(n, _)| *n == name).unwrap_or_else(
                        || {
                            doc.sections.push((name, Vec::new()));
                            doc.sections.len() - 1
                        },
                    );
                    current = Some(at);
                }
                None => issues.push(format!("line {line}: section header missing ']'")),
            }
            continue;
        }
        let Some((key, value)) = t.split_once('=') else {
            issues.push(format!("line {line}: expected 'key = value', got '{t}'"));
            continue;
        };
        match current {
            Some(at) => doc.sections[at].1.push(Entry {
                key: key.trim().to_string(),
                value: value.trim().to_string(),
                line,
            }),
            None => issues.push(format!("line {line}: key before any [section] header")),
        }
    }
    (doc, issues)
}

// ---------------------------------------------------------------------------
// Validation layer

struct Check<'a> {
    doc: &'a Doc,
    issues: Vec<String>,
}

impl<'a> Check<'a> {
    fn fail(&mut self, msg: String) {
        self.issues.push(msg);
    }

    fn number(&mut self, section: &str, key: &str) -> Option<f64> {
        let raw = self.doc.get(section, key)?;
        match raw.parse::<f64>() {
            Ok(x) if x.is_finite() => Some(x),
            _ => {
                self.fail(format!("[{section}] {key}: expected a finite number, got '{raw}'"));
                None
            }
        }
    }

    fn required_number(&mut self, section: &str, key: &str, need: &str) -> Option<f64> {
        if self.doc.get(section, key).is_none() {
            self.fail(format!("[{section}] {key}: missing key required by {need}"));
            return None;
        }
        self.number(section, key)
    }

    fn count(&mut self, section: &str, key: &str, need: &str) -> Option<usize> {
        let raw = match self.doc.get(section, key) {
            Some(r) => r,
            None => {
                self.fail(format!("[{section}] {key}: missing key required by {need}"));
                return None;
            }
        };
        match raw.parse::<usize>() {
            Ok(n) => Some(n),
            Err(_) => {
                self.fail(format!("[{section}] {key}: expected a whole number, got '{raw}'"));
                None
            }
        }
    }

    fn numbers(&mut self, section: &str, key: &str, raw: &str) -> Option<Vec<f64>> {
        let mut out = Vec::new();
        for tok in raw.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()) {
            match tok.parse::<f64>() {
                Ok(x) if x.is_finite() => out.push(x),
                _ => {
                    self.fail(format!(
                        "[{section}] {key}: expected numbers, got '{tok}' in '{raw}'"
                    ));
                    return None;
                }
            }
        }
        Some(out)
    }

    fn known_keys(&mut self, section: &str, allowed: &[&str]) {
        if let Some(entries) = self.doc.section(section) {
            for e in entries {
                if !allowed.contains(&e.key.as_str()) {
                    self.fail(format!(
                        "[{section}] {}: unknown key (line {}); allowed: {}",
                        e.key,
                        e.line,
                        allowed.join(", ")
                    ));
                }
            }
        }
    }
}

fn state_tuple_ok(
    system: SystemId,
    params: Option<&SystemParams>,
    vals: &[f64],
    place: &str,
    check: &mut Check,
) {
    let names = system.primitive_names();
    if vals.len() != names.len() {
        check.fail(format!(
            "{place}: expected {} values ({}) for {}, got {}",
            names.len(),
            names.join(" "),
            system.as_str(),
            vals.len()
        ));
        return;
    }
    match system {
        SystemId::Burgers | SystemId::Hurricane => {}
        SystemId::K2 => {
            if vals[0] <= 0.0 {
                check.fail(format!("{place}: specific volume v must be positive, got {}", vals[0]));
            }
        }
        SystemId::EulerSplit => {
            if vals[0] <= 0.0 {
                check.fail(format!("{place}: density rho must be positive, got {}", vals[0]));
            }
            if vals[2] <= 0.0 {
                check.fail(format!("{place}: pressure p must be positive, got {}", vals[2]));
            }
        }
        SystemId::Pressureless => {
            if vals[0] < 0.0 {
                check.fail(format!("{place}: density rho must be nonnegative, got {}", vals[0]));
            }
        }
        SystemId::Elasto => {
            if vals[0] <= 0.0 {
                check.fail(format!("{place}: specific volume v must be positive, got {}", vals[0]));
            }
            if vals[3] <= 0.0 {
                check.fail(format!("{place}: pressure p must be positive, got {}", vals[3]));
            }
            if let Some(SystemParams::Elasto { s0, .. }) = params {
                if vals[2].abs() > *s0 {
                    check.fail(format!(
                        "{place}: |s| = {} exceeds the yield bound s0 = {s0}",
                        vals[2].abs()
                    ));
                }
            }
        }
    }
}

fn parse_coefficient_tuple(
    check: &mut Check,
    section: &str,
    key: &str,
    raw: &str,
) -> Option<(f64, Coefficients)> {
    let vals = check.numbers(section, key, raw)?;
    if vals.len() != 6 {
        check.fail(format!(
            "[{section}] {key}: expected 6 values (t omega mu kcoef trade_u trade_v), got {}",
            vals.len()
        ));
        return None;
    }
    if vals[2] < 0.0 || vals[3] < 0.0 {
        check.fail(format!("[{section}] {key}: mu and kcoef must be nonnegative"));
        return None;
    }
    Some((
        vals[0],
        Coefficients {
            omega: vals[1],
            mu: vals[2],
            kcoef: vals[3],
            trade: (vals[4], vals[5]),
        },
    ))
}

/// Parses and validates a config document, reporting every violation found.
pub fn parse_config(text: &str) -> Result<Config, ConfigError> {
    let (doc, syntax_issues) = parse_ini(text);
    let mut check = Check { doc: &doc, issues: syntax_issues };

    for (name, _) in &doc.sections {
        if !["scenario", "grid", "params", "initial", "output"].contains(&name.as_str()) {
            check.fail(format!("[{name}]: unknown section"));
        }
    }

    // [scenario]
    check.known_keys("scenario", &["system", "end_time", "cfl", "boundary", "dt_cap"]);
    let system = match doc.get("scenario", "system") {
        Some(raw) => match SystemId::parse(raw) {
            Some(s) => Some(s),
            None => {
                check.fail(format!(
                    "[scenario] system: unknown system '{raw}' (expected one of {})",
                    SYSTEM_NAMES.join(", ")
                ));
                None
            }
        },
        None => {
            check.fail("[scenario] system: missing key".into());
            None
        }
    };
    let end_time = check.required_number("scenario", "end_time", "every scenario");
    if let Some(t) = end_time {
        if t < 0.0 {
            check.fail(format!("[scenario] end_time: must be nonnegative, got {t}"));
        }
    }
    let cfl = check.required_number("scenario", "cfl", "every scenario");
    if let Some(r) = cfl {
        if !(r > 0.0 && r <= 0.5) {
            check.fail(format!(
                "[scenario] cfl: must lie in (0, 0.5] so neighboring interface fans cannot \
                 meet within one step (r max|speed| <= 1/2), got {r}"
            ));
        }
    }
    let boundary = match doc.get("scenario", "boundary") {
        None | Some("outflow") => Boundary::Outflow,
        Some("reflective") => Boundary::Reflective,
        Some(other) => {
            check.fail(format!(
                "[scenario] boundary: expected 'outflow' or 'reflective', got '{other}'"
            ));
            Boundary::Outflow
        }
    };
    let dt_cap = check.number("scenario", "dt_cap");
    if let Some(cap) = dt_cap {
        if cap <= 0.0 {
            check.fail(format!("[scenario] dt_cap: must be positive, got {cap}"));
        }
    }

    // [grid]
    let grid = match system {
        Some(SystemId::Hurricane) => {
            check.known_keys("grid", &["nx", "ny", "dx", "dy", "x0", "y0"]);
            let nx = check.count("grid", "nx", "hurricane");
            let ny = check.count("grid", "ny", "hurricane");
            let dx = check.required_number("grid", "dx", "hurricane");
            let dy = check.required_number("grid", "dy", "hurricane");
            let x0 = check.number("grid", "x0").unwrap_or(0.0);
            let y0 = check.number("grid", "y0").unwrap_or(0.0);
            for (name, n) in [("nx", nx), ("ny", ny)] {
                if let Some(n) = n {
                    if n < 2 {
                        check.fail(format!("[grid] {name}: need at least 2 nodes, got {n}"));
                    }
                }
            }
            for (name, d) in [("dx", dx), ("dy", dy)] {
                if let Some(d) = d {
                    if d <= 0.0 {
                        check.fail(format!("[grid] {name}: spacing must be positive, got {d}"));
                    }
                }
            }
            match (nx, ny, dx, dy) {
                (Some(nx), Some(ny), Some(dx), Some(dy)) => {
                    Some(GridSpec::Plane { nx, ny, dx, dy, x0, y0 })
                }
                _ => None,
            }
        }
        Some(_) => {
            check.known_keys("grid", &["n", "h", "x0"]);
            let n = check.count("grid", "n", "1D systems");
            let h = check.required_number("grid", "h", "1D systems");
            let x0 = check.number("grid", "x0").unwrap_or(0.0);
            if let Some(n) = n {
                if n < 2 {
                    check.fail(format!("[grid] n: need at least 2 cells, got {n}"));
                }
            }
            if let Some(h) = h {
                if h <= 0.0 {
                    check.fail(format!("[grid] h: cell width must be positive, got {h}"));
                }
            }
            match (n, h) {
                (Some(n), Some(h)) => Some(GridSpec::Line { n, h, x0 }),
                _ => None,
            }
        }
        None => None,
    };

    // [params]
    let params = match system {
        Some(SystemId::Burgers) => {
            check.known_keys("params", &[]);
            Some(SystemParams::Burgers)
        }
        Some(SystemId::Pressureless) => {
            check.known_keys("params", &[]);
            Some(SystemParams::Pressureless)
        }
        Some(SystemId::K2) => {
            check.known_keys("params", &["k"]);
            let k = check.required_number("params", "k", "k2");
            if let Some(k) = k {
                if k <= 0.0 {
                    check.fail(format!("[params] k: stress coupling must be positive, got {k}"));
                }
            }
            k.map(|k| SystemParams::K2 { k })
        }
        Some(SystemId::EulerSplit) => {
            check.known_keys("params", &["gamma"]);
            let gamma = check.required_number("params", "gamma", "euler_split");
            if let Some(g) = gamma {
                if g <= 1.0 {
                    check.fail(format!("[params] gamma: must exceed 1, got {g}"));
                }
            }
            gamma.map(|gamma| SystemParams::EulerSplit { gamma })
        }
        Some(SystemId::Elasto) => {
            check.known_keys("params", &["gamma", "k", "s0"]);
            let gamma = check.required_number("params", "gamma", "elasto");
            let k = check.required_number("params", "k", "elasto");
            let s0 = check.required_number("params", "s0", "elasto");
            if let Some(g) = gamma {
                if g <= 1.0 {
                    check.fail(format!("[params] gamma: must exceed 1, got {g}"));
                }
            }
            if let Some(k) = k {
                if k <= 0.0 {
                    check.fail(format!("[params] k: stress coupling must be positive, got {k}"));
                }
            }
            if let Some(s) = s0 {
                if s <= 0.0 {
                    check.fail(format!("[params] s0: yield bound must be positive, got {s}"));
                }
            }
            match (gamma, k, s0) {
                (Some(gamma), Some(k), Some(s0)) => Some(SystemParams::Elasto { gamma, k, s0 }),
                _ => None,
            }
        }
        Some(SystemId::Hurricane) => {
            check.known_keys(
                "params",
                &["omega", "mu", "kcoef", "trade_u", "trade_v", "schedule"],
            );
            let omega = check.required_number("params", "omega", "hurricane");
            let mu = check.required_number("params", "mu", "hurricane");
            let kcoef = check.required_number("params", "kcoef", "hurricane");
            let trade_u = check.number("params", "trade_u").unwrap_or(0.0);
            let trade_v = check.number("params", "trade_v").unwrap_or(0.0);
            for (name, x) in [("mu", mu), ("kcoef", kcoef)] {
                if let Some(x) = x {
                    if x < 0.0 {
                        check.fail(format!("[params] {name}: must be nonnegative, got {x}"));
                    }
                }
            }
            let mut schedule = Vec::new();
            for raw in doc.all("params", "schedule") {
                if let Some(entry) = parse_coefficient_tuple(&mut check, "params", "schedule", raw)
                {
                    schedule.push(entry);
                }
            }
            if !schedule.windows(2).all(|w| w[0].0 <= w[1].0) {
                check.fail("[params] schedule: entries must be in ascending time order".into());
            }
            match (omega, mu, kcoef) {
                (Some(omega), Some(mu), Some(kcoef)) => Some(SystemParams::Hurricane {
                    coefficients: Coefficients { omega, mu, kcoef, trade: (trade_u, trade_v) },
                    schedule,
                }),
                _ => None,
            }
        }
        None => None,
    };

    // [initial]
    let initial = match system {
        Some(SystemId::Hurricane) => {
            check.known_keys(
                "initial",
                &["pattern", "center_x", "center_y", "r_inner", "r_outer", "speed", "omega", "u",
                  "v"],
            );
            let center = (
                check.number("initial", "center_x").unwrap_or(0.0),
                check.number("initial", "center_y").unwrap_or(0.0),
            );
            match doc.get("initial", "pattern") {
                Some("ring") => {
                    let r_inner = check.required_number("initial", "r_inner", "pattern = ring");
                    let r_outer = check.required_number("initial", "r_outer", "pattern = ring");
                    let speed = check.required_number("initial", "speed", "pattern = ring");
                    if let (Some(ri), Some(ro)) = (r_inner, r_outer) {
                        if !(0.0 < ri && ri < ro) {
                            check.fail(format!(
                                "[initial] ring radii must satisfy 0 < r_inner < r_outer, \
                                 got {ri} and {ro}"
                            ));
                        }
                    }
                    match (r_inner, r_outer, speed) {
                        (Some(r_inner), Some(r_outer), Some(speed)) => {
                            Some(InitialData::Vortex(VortexSpec {
                                center,
                                kind: VortexKind::Ring { r_inner, r_outer, speed },
                            }))
                        }
                        _ => None,
                    }
                }
                Some("solid_rotation") => check
                    .required_number("initial", "omega", "pattern = solid_rotation")
                    .map(|omega| {
                        InitialData::Vortex(VortexSpec {
                            center,
                            kind: VortexKind::SolidRotation { omega },
                        })
                    }),
                Some("uniform") => {
                    let u = check.required_number("initial", "u", "pattern = uniform");
                    let v = check.required_number("initial", "v", "pattern = uniform");
                    match (u, v) {
                        (Some(u), Some(v)) => Some(InitialData::Vortex(VortexSpec {
                            center,
                            kind: VortexKind::Uniform { u, v },
                        })),
                        _ => None,
                    }
                }
                Some(other) => {
                    check.fail(format!(
                        "[initial] pattern: expected ring, solid_rotation or uniform, \
                         got '{other}'"
                    ));
                    None
                }
                None => {
                    check.fail("[initial] pattern: missing key required by hurricane".into());
                    None
                }
            }
        }
        Some(sys) => {
            check.known_keys("initial", &["left", "right", "interface", "segment"]);
            let seg_lines = doc.all("initial", "segment");
            let has_riemann = doc.get("initial", "left").is_some()
                || doc.get("initial", "right").is_some()
                || doc.get("initial", "interface").is_some();
            if has_riemann && !seg_lines.is_empty() {
                check.fail(
                    "[initial]: give either left/right/interface or segment lines, not both"
                        .into(),
                );
                None
            } else if !seg_lines.is_empty() {
                let mut segs = Vec::new();
                for raw in seg_lines {
                    let Some(vals) = check.numbers("initial", "segment", raw) else { continue };
                    if vals.len() < 2 {
                        check.fail(format!(
                            "[initial] segment: expected 'x_start value...', got '{raw}'"
                        ));
                        continue;
                    }
                    let (x_start, values) = (vals[0], vals[1..].to_vec());
                    state_tuple_ok(sys, params.as_ref(), &values, "[initial] segment", &mut check);
                    segs.push(Segment { x_start, values });
                }
                if !segs.windows(2).all(|w| w[0].x_start < w[1].x_start) {
                    check.fail(
                        "[initial] segment: starts must be strictly increasing".into(),
                    );
                }
                Some(InitialData::Segments(segs))
            } else {
                let interface =
                    check.required_number("initial", "interface", "two-state initial data");
                let mut side = |key: &str| -> Option<Vec<f64>> {
                    let raw = match doc.get("initial", key) {
                        Some(r) => r,
                        None => {
                            check.fail(format!(
                                "[initial] {key}: missing key required by two-state initial data"
                            ));
                            return None;
                        }
                    };
                    let vals = check.numbers("initial", key, raw)?;
                    state_tuple_ok(
                        sys,
                        params.as_ref(),
                        &vals,
                        &format!("[initial] {key}"),
                        &mut check,
                    );
                    Some(vals)
                };
                let left = side("left");
                let right = side("right");
                match (interface, left, right) {
                    (Some(ix), Some(l), Some(r)) => Some(InitialData::Segments(vec![
                        Segment { x_start: f64::NEG_INFINITY, values: l },
                        Segment { x_start: ix, values: r },
                    ])),
                    _ => None,
                }
            }
        }
        None => None,
    };

    // [output]
    check.known_keys("output", &["times", "directory", "prefix"]);
    let times = match doc.get("output", "times") {
        Some(raw) => match check.numbers("output", "times", raw) {
            Some(ts) => {
                for t in &ts {
                    if *t < 0.0 {
                        check.fail(format!("[output] times: must be nonnegative, got {t}"));
                    }
                }
                ts
            }
            None => Vec::new(),
        },
        None => end_time.into_iter().collect(),
    };
    let directory = doc.get("output", "directory").unwrap_or("out").to_string();
    let prefix = doc
        .get("output", "prefix")
        .map(str::to_string)
        .or_else(|| system.map(|s| s.as_str().to_string()))
        .unwrap_or_else(|| "run".to_string());

    if !check.issues.is_empty() {
        return Err(ConfigError { issues: check.issues });
    }
    Ok(Config {
        system: system.expect("validated"),
        end_time: end_time.expect("validated"),
        cfl: cfl.expect("validated"),
        boundary,
        dt_cap,
        grid: grid.expect("validated"),
        params: params.expect("validated"),
        initial: initial.expect("validated"),
        output: OutputSpec { times, directory, prefix },
    })
}

// ---------------------------------------------------------------------------
// Presets

pub const PRESET_NAMES: [&str; 6] = [
    "burgers_shock",
    "sod_split",
    "k2_shock",
    "elasto_precursor",
    "elasto_merged",
    "hurricane_ring",
];

/// Canonical config text for a named preset.
pub fn preset_text(name: &str) -> Option<&'static str> {
    match name {
        "burgers_shock" => Some(PRESET_BURGERS_SHOCK),
        "sod_split" => Some(PRESET_SOD_SPLIT),
        "k2_shock" => Some(PRESET_K2_SHOCK),
        "elasto_precursor" => Some(PRESET_ELASTO_PRECURSOR),
        "elasto_merged" => Some(PRESET_ELASTO_MERGED),
        "hurricane_ring" => Some(PRESET_HURRICANE_RING),
        _ => None,
    }
}

/// Parsed form of a named preset.
pub fn preset(name: &str) -> Option<Config> {
    preset_text(name).map(|t| parse_config(t).expect("presets are valid"))
}

const PRESET_BURGERS_SHOCK: &str = "\
# Single Burgers shock: u jumps 1 -> 0 at x = 0.25 and travels at speed 1/2.
[scenario]
system = burgers
end_time = 0.5
cfl = 0.45

[grid]
n = 200
h = 0.005

[initial]
left = 1.0
right = 0.0
interface = 0.25

[output]
times = 0.25 0.5
directory = out
prefix = burgers
";

const PRESET_SOD_SPLIT: &str = "\
# Sod shock tube under the fractional-step gas solver: rarefaction, contact
# and shock from the classic (1, 0, 1) / (0.125, 0, 0.1) data.
[scenario]
system = euler_split
end_time = 0.15
cfl = 0.4

[grid]
n = 400
h = 0.0025

[params]
gamma = 1.4

[initial]
left = 1.0 0.0 1.0
right = 0.125 0.0 0.1
interface = 0.5

[output]
times = 0.15
directory = out
prefix = sod
";

const PRESET_K2_SHOCK: &str = "\
# k-squared model Riemann problem: compressive data launch a three-wave fan
# with a contact carrying the v jump between two acoustic shocks.
[scenario]
system = k2
end_time = 0.15
cfl = 0.45

[grid]
n = 400
h = 0.0025

[params]
k = 0.8

[initial]
left = 1.2 0.4 0.5
right = 1.0 0.0 0.0
interface = 0.5

[output]
times = 0.15
directory = out
prefix = k2
";

const PRESET_ELASTO_PRECURSOR: &str = "\
# Moderate-speed slab impact: each side develops an elastic precursor that
# carries the stress to the yield bound, followed by a slower plastic front.
[scenario]
system = elasto
end_time = 0.3
cfl = 0.45

[grid]
n = 400
h = 0.0025

[params]
gamma = 1.4
k = 0.8
s0 = 0.03

[initial]
left = 1.0 0.12 0.0 1.0
right = 1.0 -0.12 0.0 1.0
interface = 0.5

[output]
times = 0.15 0.3
directory = out
prefix = elasto_precursor
";

const PRESET_ELASTO_MERGED: &str = "\
# High-speed slab impact: precursor and plastic front merge into a single
# elastoplastic shock on each side; s stops varying at the yield bound
# partway across the band while u and sigma = s - p keep varying.
[scenario]
system = elasto
end_time = 0.1
cfl = 0.45

[grid]
n = 400
h = 0.0025

[params]
gamma = 1.4
k = 0.8
s0 = 0.03

[initial]
left = 1.0 0.8 0.0 1.0
right = 1.0 -0.8 0.0 1.0
interface = 0.5

[output]
times = 0.1
directory = out
prefix = elasto_merged
";

const PRESET_HURRICANE_RING: &str = "\
# Rotating wind ring around a calm eye over a trade-wind background, with
# the vertical action switched up partway through the run.
[scenario]
system = hurricane
end_time = 1.0
cfl = 0.45

[grid]
nx = 61
ny = 61
dx = 0.05
dy = 0.05
x0 = -1.5
y0 = -1.5

[params]
omega = 0.6
mu = 0.3
kcoef = 0.25
trade_u = 0.1
trade_v = 0.05
schedule = 0.5 0.6 0.3 0.35 0.1 0.05

[initial]
pattern = ring
center_x = 0.0
center_y = 0.0
r_inner = 0.25
r_outer = 0.6
speed = 0.9

[output]
times = 0.5 1.0
directory = out
prefix = hurricane
";

// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_burgers_config_parses() {
        let cfg = parse_config(
            "[scenario]\nsystem = burgers\nend_time = 0.5\ncfl = 0.45\n\
             [grid]\nn = 100\nh = 0.01\n\
             [initial]\nleft = 1.0\nright = 0.0\ninterface = 0.25\n",
        )
        .unwrap();
        assert_eq!(cfg.system, SystemId::Burgers);
        assert_eq!(cfg.cfl, 0.45);
        assert_eq!(cfg.boundary, Boundary::Outflow);
        let InitialData::Segments(segs) = &cfg.initial else { panic!("segments") };
        assert_eq!(segs.len(), 2);
        assert_eq!(segs[1].x_start, 0.25);
        assert_eq!(segs[1].values, vec![0.0]);
        assert_eq!(cfg.output.times, vec![0.5], "defaults to the end time");
        assert_eq!(cfg.output.directory, "out");
    }

    #[test]
    fn oversized_cfl_is_rejected_citing_the_fan_bound() {
        let err = parse_config(
            "[scenario]\nsystem = burgers\nend_time = 0.5\ncfl = 0.9\n\
             [grid]\nn = 100\nh = 0.01\n\
             [initial]\nleft = 1.0\nright = 0.0\ninterface = 0.25\n",
        )
        .unwrap_err();
        assert_eq!(err.issues.len(), 1, "{err}");
        assert!(err.issues[0].contains("(0, 0.5]"), "{err}");
        assert!(err.issues[0].contains("max|speed| <= 1/2"), "{err}");
    }

    #[test]
    fn missing_gamma_is_reported_by_name() {
        let err = parse_config(
            "[scenario]\nsystem = euler_split\nend_time = 0.1\ncfl = 0.4\n\
             [grid]\nn = 100\nh = 0.01\n\
             [initial]\nleft = 1 0 1\nright = 0.125 0 0.1\ninterface = 0.5\n",
        )
        .unwrap_err();
        assert_eq!(err.issues.len(), 1, "{err}");
        assert!(err.issues[0].contains("[params] gamma"), "{err}");
        assert!(err.issues[0].contains("euler_split"), "{err}");
    }

    #[test]
    fn every_violation_is_listed() {
        let err = parse_config(
            "[scenario]\nsystem = maxwell\nend_time = -1\ncfl = 0.9\n\
             [grid]\nn = 100\nh = 0.01\n",
        )
        .unwrap_err();
        let text = err.to_string();
        assert_eq!(err.issues.len(), 3, "{err:?}");
        assert!(text.contains("unknown system 'maxwell'"), "{text}");
        assert!(text.contains("end_time"), "{text}");
        assert!(text.contains("(0, 0.5]"), "{text}");

        let err = parse_config(
            "[scenario]\nsystem = burgers\nend_time = 0.5\ncfl = 0.45\n\
             [grid]\nn = 100\nh = 0.01\nbogus = 3\n\
             [initial]\nleft = 1.0\nright = 0.0\ninterface = 0.25\n",
        )
        .unwrap_err();
        assert!(err.to_string().contains("bogus"), "{err}");
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let err = parse_config("[scenario\nsystem = burgers\n").unwrap_err();
        assert!(err.to_string().contains("line 1"), "{err}");

        let err = parse_config("key = 1\n[scenario]\nnonsense\n").unwrap_err();
        let text = err.to_string();
        assert!(text.contains("line 1: key before any [section]"), "{text}");
        assert!(text.contains("line 3"), "{text}");
    }

    #[test]
    fn segments_must_increase_and_match_the_component_count() {
        let base = "[scenario]\nsystem = k2\nend_time = 0.1\ncfl = 0.4\n\
                    [grid]\nn = 100\nh = 0.01\n[params]\nk = 0.8\n";
        let good = format!(
            "{base}[initial]\nsegment = -1e30 1.0 0.0 0.0\nsegment = 0.3 1.2 0.4 0.5\n\
             segment = 0.6 1.0 0.0 0.0\n"
        );
        let cfg = parse_config(&good).unwrap();
        let InitialData::Segments(segs) = &cfg.initial else { panic!("segments") };
        assert_eq!(segs.len(), 3);

        let unsorted =
            format!("{base}[initial]\nsegment = 0.5 1.0 0.0 0.0\nsegment = 0.3 1.2 0.4 0.5\n");
        let err = parse_config(&unsorted).unwrap_err();
        assert!(err.to_string().contains("strictly increasing"), "{err}");

        let short = format!("{base}[initial]\nsegment = 0.0 1.0 0.0\n");
        let err = parse_config(&short).unwrap_err();
        assert!(err.to_string().contains("expected 3 values (v u sigma)"), "{err}");
    }

    #[test]
    fn state_positivity_is_enforced() {
        let err = parse_config(
            "[scenario]\nsystem = euler_split\nend_time = 0.1\ncfl = 0.4\n\
             [grid]\nn = 100\nh = 0.01\n[params]\ngamma = 1.4\n\
             [initial]\nleft = -1 0 1\nright = 0.125 0 -0.1\ninterface = 0.5\n",
        )
        .unwrap_err();
        let text = err.to_string();
        assert!(text.contains("rho must be positive"), "{text}");
        assert!(text.contains("pressure p must be positive"), "{text}");
    }

    #[test]
    fn elasto_initial_stress_must_respect_the_yield_bound() {
        let err = parse_config(
            "[scenario]\nsystem = elasto\nend_time = 0.1\ncfl = 0.4\n\
             [grid]\nn = 100\nh = 0.01\n[params]\ngamma = 1.4\nk = 0.8\ns0 = 0.25\n\
             [initial]\nleft = 1 0 0.3 1\nright = 1 0 0 1\ninterface = 0.5\n",
        )
        .unwrap_err();
        assert!(err.to_string().contains("yield bound"), "{err}");
    }

    #[test]
    fn hurricane_config_parses_with_schedule() {
        let cfg = preset("hurricane_ring").unwrap();
        assert_eq!(cfg.system, SystemId::Hurricane);
        let SystemParams::Hurricane { coefficients, schedule } = &cfg.params else {
            panic!("hurricane params")
        };
        assert_eq!(coefficients.trade, (0.1, 0.05));
        assert_eq!(schedule.len(), 1);
        assert_eq!(schedule[0].0, 0.5);
        assert_eq!(schedule[0].1.kcoef, 0.35);
        let InitialData::Vortex(v) = &cfg.initial else { panic!("vortex") };
        assert!(matches!(v.kind, VortexKind::Ring { .. }));
    }

    #[test]
    fn all_presets_parse_and_validate() {
        for name in PRESET_NAMES {
            let cfg = preset(name).expect(name);
            assert!(cfg.end_time > 0.0);
            assert!(!cfg.output.times.is_empty());
        }
        assert!(preset("no_such_preset").is_none());
        let sod = preset("sod_split").unwrap();
        assert_eq!(sod.params, SystemParams::EulerSplit { gamma: 1.4 });
        let GridSpec::Line { n, .. } = sod.grid else { panic!("line grid") };
        assert_eq!(n, 400);
    }

    #[test]
    fn manifest_lists_every_numeric_parameter() {
        let cfg = preset("elasto_merged").unwrap();
        let manifest = cfg.manifest();
        let keys: Vec<&str> = manifest.iter().map(|(k, _)| k.as_str()).collect();
        for needed in [
            "system", "end_time", "cfl", "boundary", "grid.n", "grid.h", "grid.x0",
            "params.gamma", "params.k", "params.s0", "initial.segment.0", "initial.segment.1",
            "output.times",
        ] {
            assert!(keys.contains(&needed), "missing {needed} in {keys:?}");
        }
    }

    #[test]
    fn reflective_boundary_and_dt_cap_parse() {
        let cfg = parse_config(
            "[scenario]\nsystem = burgers\nend_time = 0.5\ncfl = 0.45\n\
             boundary = reflective\ndt_cap = 0.001\n\
             [grid]\nn = 100\nh = 0.01\n\
             [initial]\nleft = 1.0\nright = 0.0\ninterface = 0.25\n",
        )
        .unwrap();
        assert_eq!(cfg.boundary, Boundary::Reflective);
        assert_eq!(cfg.dt_cap, Some(0.001));
    }
}
