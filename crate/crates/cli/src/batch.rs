//! Job files: one job per line as whitespace-separated `key=value` pairs
//! mirroring the command-line flags, e.g.
//!
//! ```text
//! # theorem scans
//! command=verify p=3..200 l=3
//! command=split p=13 l=2 a=4 both=true format=json output=split.json
//! ```
//!
//! Single-letter keys become short flags, others long flags (`_` -> `-`);
//! `key=true` is a bare flag and `key=false` is dropped. Every line runs even
//! if an earlier one fails; the exit status is the worst of all jobs.

use std::fs;
use std::path::Path;

use clap::Parser;

use crate::{run, Cli, Command, GlobalArgs, Status};

/// Command-line arguments for one job line; `None` for blank and comment lines.
pub fn job_args(line: &str) -> Result<Option<Vec<String>>, String> {
    let line = line.trim();
    if line.is_empty() || line.starts_with('#') {
        return Ok(None);
    }
    let mut command = None;
    let mut rest = Vec::new();
    for token in line.split_whitespace() {
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, found {token:?}"))?;
        if key == "command" {
            command = Some(value.to_string());
            continue;
        }
        let flag = if key.len() == 1 {
            format!("-{key}")
        } else {
            format!("--{}", key.replace('_', "-"))
        };
        match value {
            "true" => rest.push(flag),
            "false" => {}
            v => {
                rest.push(flag);
                rest.push(v.to_string());
            }
        }
    }
    let command = command.ok_or("missing command=...")?;
    let mut args = vec!["heisplit".to_string(), command];
    args.extend(rest);
    Ok(Some(args))
}

pub fn run_file(path: &Path, global: &GlobalArgs) -> Status {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: reading {}: {e}", path.display());
            return Status::Usage;
        }
    };
    let mut worst = Status::Ok;
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let args = match job_args(line) {
            Ok(Some(args)) => args,
            Ok(None) => continue,
            Err(e) => {
                eprintln!("job {lineno}: {e}");
                worst = worst.max(Status::Usage);
                continue;
            }
        };
        let mut args = args;
        // Batch-level defaults apply unless the line overrides them.
        let mentions = |flag: &str| args.iter().any(|a| a == flag);
        let mut defaults = Vec::new();
        if !mentions("--seed") {
            defaults.extend(["--seed".to_string(), global.seed.to_string()]);
        }
        if !mentions("--format") {
            defaults.extend(["--format".to_string(), global.format.to_string()]);
        }
        args.extend(defaults);
        let cli = match Cli::try_parse_from(&args) {
            Ok(cli) => cli,
            Err(e) => {
                eprintln!("job {lineno}: {e}");
                worst = worst.max(Status::Usage);
                continue;
            }
        };
        if matches!(cli.command, Command::Batch { .. }) {
            eprintln!("job {lineno}: nested batch files are not supported");
            worst = worst.max(Status::Usage);
            continue;
        }
        let status = run(cli);
        if status != Status::Ok {
            eprintln!("job {lineno}: exit {}", status as u8);
        }
        worst = worst.max(status);
    }
    worst
}
