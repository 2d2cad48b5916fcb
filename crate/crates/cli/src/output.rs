use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context as _, Result};
use heisplit_core::report::{render_scan, to_csv, to_json, Format};
use heisplit_core::verify::ScanRecord;
use serde::Serialize;

use crate::{GlobalArgs, OUT_DIR_ENV};

pub fn render_rows<T: Serialize>(rows: &[T], format: Format) -> Result<String> {
    Ok(match format {
        Format::Csv => to_csv(rows)?,
        Format::Json => to_json(rows)?,
    })
}

pub fn render_records(records: &[ScanRecord], format: Format) -> Result<String> {
    Ok(render_scan(records, format)?)
}

fn resolve(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

/// Write to `--output` or stdout.
pub fn emit(global: &GlobalArgs, text: &str) -> Result<()> {
    match &global.output {
        Some(path) => {
            let path = resolve(path);
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            }
            fs::write(&path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}
