use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use polyff_core::catalog::Solid;
use polyff_core::group::DEFAULT_CAP;
use polyff_core::Ring;

use crate::pipeline::{self, GridFamily, RunOptions};
use crate::report::Report;
use crate::scan::{self, ScanOptions, DEFAULT_MAX_CARD};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Reduce a named solid or tiling into a ring.
    Specialize,
    /// Square or triangular tiling over Z/nZ.
    Grid,
    /// Raw parameters `--x`, `--y` in a ring.
    Analyze,
    /// Every parameter pair in a small ring.
    Scan,
    /// Check the generator relations on sampled parameters.
    Relations,
    /// Print the catalog of named polyhedra.
    Catalog,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "polyff",
    version,
    about = "Regular polyhedra over finite rings"
)]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// Ring spec, as an alternative to `--ring`.
    #[arg(value_name = "RING")]
    pub ring_positional: Option<String>,
    /// `zmod:N`, `gf:P`, `gf:P^K` or `gf:P^K:POLY`.
    #[arg(long)]
    pub ring: Option<String>,
    #[arg(long)]
    pub solid: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<String>,
    #[arg(long, value_enum)]
    pub family: Option<GridFamily>,
    #[arg(long)]
    pub n: Option<u64>,
    /// Maximum group order before closure gives up.
    #[arg(long, default_value_t = DEFAULT_CAP, value_parser = parse_positive)]
    pub cap: usize,
    /// Move to GF(p^2) when sqrt5 is missing from GF(p).
    #[arg(long)]
    pub auto_extend: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Scan worker count.
    #[arg(long, value_parser = parse_positive)]
    pub width: Option<usize>,
    /// Split scan classes by dart-model conjugacy.
    #[arg(long)]
    pub exact_dedupe: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Parameter pairs sampled by `relations`.
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    /// Largest ring `scan` accepts.
    #[arg(long, default_value_t = DEFAULT_MAX_CARD)]
    pub max_card: u64,
    /// Include dart permutations in reports.
    #[arg(long)]
    pub darts: bool,
    /// Accepted for `catalog`, which always lists.
    #[arg(long)]
    pub list: bool,
}

fn parse_positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn bad(msg: &str) -> CliError {
    CliError::BadArgs(msg.to_string())
}

impl Args {
    fn ring_spec(&self) -> Result<Option<&str>, CliError> {
        match (&self.ring, &self.ring_positional) {
            (Some(_), Some(_)) => Err(bad("ring given twice")),
            (Some(r), None) | (None, Some(r)) => Ok(Some(r)),
            (None, None) => Ok(None),
        }
    }

    fn require_ring(&self) -> Result<Ring, CliError> {
        let spec = self
            .ring_spec()?
            .ok_or_else(|| bad("this command needs --ring"))?;
        Ok(spec.parse()?)
    }

    /// Exactly one input mode per command.
    fn check_inputs(&self) -> Result<(), CliError> {
        let solid = self.solid.is_some();
        let xy = self.x.is_some() || self.y.is_some();
        let grid = self.family.is_some() || self.n.is_some();
        let ring = self.ring_spec()?.is_some();
        let (want_solid, want_xy, want_grid, want_ring) = match self.command {
            Command::Specialize => (true, false, false, true),
            Command::Analyze => (false, true, false, true),
            Command::Grid => (false, false, true, false),
            Command::Scan | Command::Relations => (false, false, false, true),
            Command::Catalog => (false, false, false, false),
        };
        if solid != want_solid || xy != want_xy || grid != want_grid || (ring && !want_ring) {
            return Err(bad(match self.command {
                Command::Specialize => "specialize takes --solid and --ring",
                Command::Analyze => "analyze takes --ring, --x and --y",
                Command::Grid => "grid takes --family and --n; the ring is Z/nZ",
                Command::Scan => "scan takes a ring only",
                Command::Relations => "relations takes a ring only",
                Command::Catalog => "catalog takes no inputs",
            }));
        }
        Ok(())
    }

    fn run_options(&self) -> RunOptions {
        RunOptions {
            cap: self.cap,
            darts: self.darts,
        }
    }
}

fn render_report(report: &Report, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv()?,
        Format::Text => report.to_text(),
    })
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(args: &Args, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    args.check_inputs()?;
    let opts = args.run_options();
    let mut deferred = None;
    let text = match args.command {
        Command::Specialize => {
            let solid: Solid = args.solid.as_deref().unwrap_or_default().parse()?;
            let ring = args.require_ring()?;
            render_report(
                &pipeline::specialize_report(solid, &ring, args.auto_extend, &opts)?,
                args.format,
            )?
        }
        Command::Analyze => {
            let ring = args.require_ring()?;
            let (x, y) = match (&args.x, &args.y) {
                (Some(x), Some(y)) => (x, y),
                _ => return Err(bad("analyze needs both --x and --y")),
            };
            render_report(&pipeline::analyze_report(&ring, x, y, &opts)?, args.format)?
        }
        Command::Grid => {
            let (family, n) = match (args.family, args.n) {
                (Some(f), Some(n)) => (f, n),
                _ => return Err(bad("grid needs both --family and --n")),
            };
            render_report(&pipeline::grid_report(family, n, &opts)?, args.format)?
        }
        Command::Scan => {
            let ring = args.require_ring()?;
            let sopts = ScanOptions {
                cap: args.cap,
                width: args.width,
                exact_dedupe: args.exact_dedupe,
                max_card: args.max_card,
            };
            let result = scan::scan(&ring, &sopts)?;
            if result.summary.cap_exceeded > 0 {
                deferred = Some(CliError::ScanCapRows(result.summary.cap_exceeded));
            }
            match args.format {
                Format::Json => result.to_json() + "\n",
                Format::Csv => {
                    err.write_all(result.summary_text().as_bytes())?;
                    result.to_csv()?
                }
                Format::Text => result.to_csv()? + "\n" + &result.summary_text(),
            }
        }
        Command::Relations => {
            let ring = args.require_ring()?;
            let summary = pipeline::relations(&ring, args.trials)?;
            if !summary.all_pass {
                deferred = Some(CliError::RelationFailures(summary.failures.len()));
            }
            serde_json::to_string_pretty(&summary)? + "\n"
        }
        Command::Catalog => pipeline::catalog_lines().join("\n") + "\n",
    };
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    deferred.map_or(Ok(()), Err)
}

/// Parses the process arguments, runs, and returns the exit code.
pub fn main() -> i32 {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    match run(&args, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("polyff: {e}");
            e.exit_code()
        }
    }
}
