//! Command-line front end for `burnside-core`: input formats, reports and exit codes.

pub mod input;
pub mod report;
pub mod text;

use std::path::PathBuf;

use burnside_core::{Caps, Error};
use serde_json::{json, Value};

use crate::input::Loaded;

pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 0 success, 2 input error, 3 cap exceeded, 4 internal assertion.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_cap_exceeded() => 3,
            CliError::Core(e) if e.is_internal() => 4,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            3 => "cap_exceeded",
            4 => "internal",
            _ => "input",
        }
    }

    pub fn report(&self) -> Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string(), "exit_code": self.exit_code() } })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    File(PathBuf),
    Catalog(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Orbits,
    Burnside,
    Marks,
    Structure,
    CatalogList,
    CatalogEmit(String),
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub source: Option<Source>,
    pub command: Command,
    pub caps: Caps,
    pub format: Format,
    pub seed: u64,
}

fn load(config: &RunConfig) -> Result<Loaded, CliError> {
    match &config.source {
        Some(Source::Catalog(name)) => input::load_catalog(name),
        Some(Source::File(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            input::load_text(&text, config.caps.element_cap)
        }
        None => Err(CliError::Input("no input: pass --input FILE or --catalog NAME".into())),
    }
}

/// Runs one command and returns its JSON report.
pub fn run(config: &RunConfig) -> Result<Value, CliError> {
    let caps = &config.caps;
    if caps.element_cap == 0 || caps.congruence_cap == 0 || caps.lax_oracle_gate == 0 {
        return Err(CliError::Input("caps must be positive".into()));
    }
    match &config.command {
        Command::CatalogList => Ok(report::catalog_list()),
        Command::CatalogEmit(name) => Ok(input::loaded_json(&input::load_catalog(name)?)),
        Command::Analyze => report::analyze(&load(config)?),
        Command::Orbits => report::orbits(&load(config)?),
        Command::Burnside => report::burnside(&load(config)?, config),
        Command::Marks => report::marks(&load(config)?, config),
        Command::Structure => report::structure(&load(config)?, config),
    }
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Text => text::to_text(v),
    }
}
