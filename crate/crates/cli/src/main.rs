use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use centrality_cli::bench::{self, BenchRow};
use centrality_cli::report::{self, Engine, Format};
use centrality_cli::validate::{self, Plan, ValidationReport};
use centrality_cli::{edgelist, load_input, spec, CliError, Result};
use centrality_core::{generate, EngineConfig, Family};
use clap::{Parser, Subcommand};

/// Exact betweenness centrality and Freeman centralization for unweighted graphs.
#[derive(Debug, Parser)]
#[command(name = "centrality", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the canonical edge list of a family instance (e.g. `wheel:7`).
    Generate {
        spec: String,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute betweenness, relative betweenness and centralization.
    Compute {
        /// Edge-list path or family spec string.
        input: String,
        #[arg(long, default_value = "exact")]
        engine: Engine,
        #[arg(long, default_value = "json")]
        format: Format,
        /// Worker threads; 0 uses all cores, 1 runs single-threaded.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare closed forms with the exact engine over a parameter range.
    Validate {
        /// Family name or `all`.
        family: String,
        /// Inclusive parameter range such as `3..50`; family default when omitted.
        #[arg(long, value_parser = validate::parse_range)]
        range: Option<std::ops::RangeInclusive<usize>>,
        /// Seed for random trees.
        #[arg(long, default_value_t = validate::DEFAULT_SEED)]
        seed: u64,
        /// Number of random trees.
        #[arg(long, default_value_t = validate::DEFAULT_TREE_COUNT)]
        trees: usize,
        #[arg(long, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Time an engine over a size sweep, as CSV.
    Bench {
        family: String,
        /// `a..b`, `a..b:step` or a comma-separated list.
        #[arg(long, value_parser = bench::parse_sweep)]
        sizes: std::vec::Vec<usize>,
        #[arg(long, default_value = "float")]
        engine: Engine,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write output: {e}"))),
    }
}

fn family_arg(name: &str) -> Result<Family> {
    Family::from_name(name).ok_or_else(|| CliError::Usage(format!("unknown family {name:?}")))
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Generate { spec, out } => {
            let g = generate(&spec::parse_spec(&spec)?)?;
            write_output(out.as_ref(), &edgelist::format(&g))
        }
        Command::Compute {
            input,
            engine,
            format,
            threads,
            out,
        } => {
            let g = load_input(&input)?;
            let report = report::compute(&g, engine, &EngineConfig::with_threads(threads))?;
            write_output(out.as_ref(), &report.render(format))
        }
        Command::Validate {
            family,
            range,
            seed,
            trees,
            format,
            threads,
        } => {
            let plan = Plan {
                family: if family == "all" {
                    None
                } else {
                    Some(family_arg(&family)?)
                },
                range,
                seed,
                trees,
            };
            let config = EngineConfig::with_threads(threads);
            let mut stdout = std::io::stdout().lock();
            let io = |e: std::io::Error| CliError::Io(e.to_string());
            if format == Format::Csv {
                writeln!(stdout, "{}", ValidationReport::csv_header()).map_err(io)?;
            }
            let (mut total, mut failed, mut first_failure) = (0usize, 0usize, None);
            for instance in plan.instances() {
                let report = validate::validate_instance(&instance, &config)?;
                let line = match format {
                    Format::Json => serde_json::to_string(&report).expect("report serializes"),
                    Format::Csv => report.csv_row(),
                };
                writeln!(stdout, "{line}").map_err(io)?;
                total += 1;
                if let Some(msg) = report.failure_message() {
                    failed += 1;
                    first_failure.get_or_insert(msg);
                }
            }
            eprintln!("validated {total} instances, {failed} mismatches");
            match first_failure {
                Some(msg) => Err(CliError::Mismatch(msg)),
                None => Ok(()),
            }
        }
        Command::Bench {
            family,
            sizes,
            engine,
            threads,
            out,
        } => {
            let rows = bench::run(
                family_arg(&family)?,
                &sizes,
                engine,
                &EngineConfig::with_threads(threads),
            )?;
            let mut text = format!("{}\n", BenchRow::HEADER);
            for row in rows {
                text.push_str(&row.to_csv());
                text.push('\n');
            }
            write_output(out.as_ref(), &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
