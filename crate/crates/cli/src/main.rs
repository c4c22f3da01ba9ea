use std::path::PathBuf;
use std::process::ExitCode;

use burnside_cli::{render, run, CliError, Command, Format, RunConfig, Source, DEFAULT_SEED};
use burnside_core::Caps;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "burnside", version, about = "Burnside rings of finite monoids")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Monoid or M-set JSON file.
    #[arg(long, global = true, conflicts_with = "catalog")]
    input: Option<PathBuf>,
    /// Catalog entry, e.g. "full_transformation 3".
    #[arg(long, global = true)]
    catalog: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
    #[arg(long, global = true)]
    element_cap: Option<usize>,
    #[arg(long, global = true)]
    congruence_cap: Option<usize>,
    #[arg(long, global = true)]
    lax_oracle_gate: Option<u64>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Green's relations, idempotents and maximal subgroups.
    Analyze,
    /// Weak and strong orbits of an M-set (a monoid acts on itself).
    Orbits,
    /// Orbit basis and multiplication table.
    Burnside,
    /// Table of marks and semisimplicity certificate.
    Marks,
    /// Distinguishability and the map to the product of group Burnside rings.
    Structure,
    /// Catalog of built-in monoids.
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    /// Print an entry in the JSON input format.
    Emit { name: Vec<String> },
}

fn config(cli: Cli) -> RunConfig {
    let o = cli.opts;
    let defaults = Caps::default();
    let caps = Caps {
        element_cap: o.element_cap.unwrap_or(defaults.element_cap),
        congruence_cap: o.congruence_cap.unwrap_or(defaults.congruence_cap),
        lax_oracle_gate: o.lax_oracle_gate.unwrap_or(defaults.lax_oracle_gate),
    };
    let source = match (o.input, o.catalog) {
        (Some(p), _) => Some(Source::File(p)),
        (None, Some(c)) => Some(Source::Catalog(c)),
        (None, None) => None,
    };
    let command = match cli.command {
        Cmd::Analyze => Command::Analyze,
        Cmd::Orbits => Command::Orbits,
        Cmd::Burnside => Command::Burnside,
        Cmd::Marks => Command::Marks,
        Cmd::Structure => Command::Structure,
        Cmd::Catalog(CatalogCmd::List) => Command::CatalogList,
        Cmd::Catalog(CatalogCmd::Emit { name }) => Command::CatalogEmit(name.join(" ")),
    };
    let format = match o.format {
        OutFormat::Json => Format::Json,
        OutFormat::Text => Format::Text,
    };
    RunConfig { source, command, caps, format, seed: o.seed }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.opts.out.clone();
    let config = config(cli);
    let result = run(&config).and_then(|report| {
        let body = render(&report, config.format);
        match &out {
            Some(path) => std::fs::write(path, body).map_err(CliError::from),
            None => {
                print!("{body}");
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprint!("{}", render(&e.report(), config.format));
            ExitCode::from(e.exit_code())
        }
    }
}
