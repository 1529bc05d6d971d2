//! Scenario front end: validate configs, run them, or run a named preset.
//!
//! Exit codes: 0 success, 2 config error (including usage mistakes and
//! unreadable files), 3 solver abort or output failure.

use gfshock::config::{parse_config, preset, Config, PRESET_NAMES};
use gfshock::runner::{run_scenario, RunArtifacts, RunError};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const USAGE: &str = "\
usage:
  gfshock run <config-path>        run a scenario from a config file
  gfshock preset <name> [--out DIR]  run a named preset
  gfshock validate <config-path>   check a config and report every problem
  gfshock --version

presets: burgers_shock, sod_split, k2_shock, elasto_precursor,
         elasto_merged, hurricane_ring

The GFSHOCK_OUT environment variable overrides the output directory;
the --out flag overrides both.";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    ExitCode::from(dispatch(&args))
}

fn dispatch(args: &[String]) -> u8 {
    match args.first().map(String::as_str) {
        Some("--version") | Some("-V") => {
            println!("gfshock {}", env!("CARGO_PKG_VERSION"));
            0
        }
        Some("validate") => match args {
            [_, path] => cmd_validate(Path::new(path)),
            _ => usage_error("validate takes exactly one config path"),
        },
        Some("run") => match args {
            [_, path] => match load_config(Path::new(path)) {
                Ok(cfg) => execute(&cfg, None),
                Err(code) => code,
            },
            _ => usage_error("run takes exactly one config path"),
        },
        Some("preset") => cmd_preset(&args[1..]),
        _ => usage_error("expected a subcommand"),
    }
}

fn usage_error(msg: &str) -> u8 {
    eprintln!("error: {msg}\n{USAGE}");
    2
}

fn load_config(path: &Path) -> Result<Config, u8> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Err(2);
        }
    };
    match parse_config(&text) {
        Ok(cfg) => Ok(cfg),
        Err(err) => {
            eprintln!("{}: invalid config:", path.display());
            for issue in &err.issues {
                eprintln!("  {issue}");
            }
            Err(2)
        }
    }
}

fn cmd_validate(path: &Path) -> u8 {
    match load_config(path) {
        Ok(cfg) => {
            println!("{}: ok ({} scenario)", path.display(), cfg.system.as_str());
            0
        }
        Err(code) => code,
    }
}

fn cmd_preset(args: &[String]) -> u8 {
    let mut name: Option<&str> = None;
    let mut out: Option<PathBuf> = None;
    let mut it = args.iter();
    while let Some(a) = it.next() {
        match a.as_str() {
            "--out" => match it.next() {
                Some(dir) => out = Some(PathBuf::from(dir)),
                None => return usage_error("--out needs a directory"),
            },
            flag if flag.starts_with('-') => {
                return usage_error(&format!("unknown flag '{flag}'"));
            }
            n if name.is_none() => name = Some(n),
            extra => return usage_error(&format!("unexpected argument '{extra}'")),
        }
    }
    let Some(name) = name else {
        return usage_error("preset needs a name");
    };
    let Some(cfg) = preset(name) else {
        eprintln!("error: unknown preset '{name}' (available: {})", PRESET_NAMES.join(", "));
        return 2;
    };
    execute(&cfg, out.as_deref())
}

fn execute(cfg: &Config, out: Option<&Path>) -> u8 {
    match run_scenario(cfg, out) {
        Ok(RunArtifacts { directory, files, steps, wall_seconds }) => {
            for f in &files {
                println!("wrote {}", f.display());
            }
            println!(
                "{} steps in {:.3} s, artifacts in {}",
                steps,
                wall_seconds,
                directory.display()
            );
            0
        }
        Err(e @ RunError::Engine(_)) | Err(e @ RunError::Hurricane(_)) => {
            eprintln!("error: {e}");
            3
        }
        Err(e @ RunError::Io { .. }) => {
            eprintln!("error: {e}");
            3
        }
    }
}
