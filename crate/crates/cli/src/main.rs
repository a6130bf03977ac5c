mod commands;
mod input;
mod manifest;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperweave::ErrorFamily;

use input::InputFormat;
use manifest::{FileDigest, RunManifest};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Library(#[from] hyperweave::Error),
    #[error("{0}")]
    Replay(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Library(e) => match e.family() {
                ErrorFamily::Format => 4,
                ErrorFamily::Structure => 5,
                ErrorFamily::Domain => 6,
                ErrorFamily::Numeric => 7,
            },
            CliError::Replay(_) => 8,
        }
    }
}

/// Hypergraph analytics: statistics, conversion, communities, centrality and
/// forecasting over HGF, JSON, review and scene datasets.
#[derive(Debug, Parser)]
#[command(name = "hyperweave", version)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Args)]
pub struct Common {
    /// Write the primary output to this file instead of standard output
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Write the run manifest here (defaults to <output>.manifest.json)
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,
    /// Print floating-point values in full instead of 6 significant digits
    #[arg(long, global = true)]
    pub full_precision: bool,
    /// Accepted for reproducible pipelines; every command is already deterministic
    #[arg(long, global = true)]
    pub deterministic: bool,
}

#[derive(Clone, Debug, Args)]
pub struct Source {
    /// Input dataset
    #[arg(long)]
    pub input: PathBuf,
    /// Input format; guessed from the extension when omitted
    #[arg(long, visible_alias = "from", value_enum)]
    pub format: Option<InputFormat>,
    /// Keep only reviews with these star values (reviews-csv input)
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(1..=5))]
    pub stars: Vec<u8>,
    /// Restrict to the largest connected component
    #[arg(long)]
    pub lcc: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Hgf,
    Json,
    DotBipartite,
    DotTwosection,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    HyperLp,
    GraphLp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Brandes over the s-adjacency
    S,
    /// classic betweenness of the two-section view, all-pairs (small inputs)
    TwoSection,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sizes, histograms and connected components
    Stats {
        #[command(flatten)]
        source: Source,
    },
    /// Convert between formats or export a view as Graphviz DOT
    Convert {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        to: OutputFormat,
    },
    /// Label propagation communities and their modularity
    Communities {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "hyper-lp")]
        algo: Algorithm,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-iter", default_value_t = 100)]
        max_iter: usize,
    },
    /// Normalized mutual information of two partition files
    Nmi { first: PathBuf, second: PathBuf },
    /// s-betweenness centrality as vertex,label,score CSV
    Betweenness {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long = "top-k")]
        top_k: Option<usize>,
        #[arg(long, value_enum, default_value = "s")]
        method: Method,
    },
    /// Star forecasts from a reviews CSV, hypergraph against two-section
    Forecast {
        #[command(flatten)]
        source: Source,
    },
    /// Pearson correlation of two vertex,label,score CSVs
    Correlate { first: PathBuf, second: PathBuf },
    /// Re-run the command recorded in a manifest and verify its output
    Replay { manifest: PathBuf },
}

fn emit(cli: &Cli, argv: Vec<String>) -> Result<(), CliError> {
    let run = commands::run(cli)?;
    let io_err = |what: &dyn std::fmt::Display, e: std::io::Error| CliError::Io(format!("{what}: {e}"));
    match &cli.common.output {
        Some(path) => {
            std::fs::write(path, &run.primary).map_err(|e| io_err(&path.display(), e))?;
            if let Some(report) = &run.report {
                print!("{report}");
            }
        }
        None => {
            std::io::stdout()
                .write_all(&run.primary)
                .map_err(|e| io_err(&"standard output", e))?;
            if let Some(report) = &run.report {
                eprint!("{report}");
            }
        }
    }

    let location = cli
        .common
        .manifest
        .clone()
        .or_else(|| cli.common.output.as_deref().map(manifest::default_location));
    if let Some(location) = location {
        let inputs = run
            .inputs
            .iter()
            .map(|p| manifest::digest_file(p))
            .collect::<Result<Vec<_>, _>>()?;
        let record = RunManifest {
            tool: "hyperweave".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: run.command.into(),
            argv,
            working_dir: std::env::current_dir().map_err(|e| io_err(&"working directory", e))?,
            inputs,
            parameters: run.parameters,
            outputs: vec![FileDigest {
                path: cli.common.output.clone().unwrap_or_else(|| PathBuf::from("-")),
                sha256: manifest::sha256(&run.primary),
            }],
        };
        let text = serde_json::to_string_pretty(&record).expect("manifest serializes") + "\n";
        std::fs::write(&location, text).map_err(|e| io_err(&location.display(), e))?;
    }
    Ok(())
}

fn replay(path: &std::path::Path) -> Result<(), CliError> {
    let text = input::read_text(path)?;
    let recorded: RunManifest =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: not a run manifest: {e}", path.display())))?;
    std::env::set_current_dir(&recorded.working_dir)
        .map_err(|e| CliError::Io(format!("{}: {e}", recorded.working_dir.display())))?;
    for input in &recorded.inputs {
        let now = manifest::digest_file(&input.path)?;
        if now.sha256 != input.sha256 {
            return Err(CliError::Replay(format!("input {} changed since the run", input.path.display())));
        }
    }
    let cli = Cli::try_parse_from(std::iter::once("hyperweave".to_string()).chain(recorded.argv.iter().cloned()))
        .map_err(|e| CliError::Usage(format!("recorded arguments no longer parse: {e}")))?;
    if matches!(cli.command, Command::Replay { .. }) {
        return Err(CliError::Usage("a manifest cannot record a replay".into()));
    }
    let run = commands::run(&cli)?;
    let digest = manifest::sha256(&run.primary);
    let expected = recorded
        .outputs
        .first()
        .ok_or_else(|| CliError::Usage("manifest lists no outputs".into()))?;
    if digest != expected.sha256 {
        return Err(CliError::Replay(format!(
            "output differs: recorded {} but reproduced {digest}",
            expected.sha256
        )));
    }
    println!("reproduced {} output, sha256 {digest}", recorded.command);
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let result = match &cli.command {
        Command::Replay { manifest } => replay(manifest),
        _ => emit(&cli, std::env::args().skip(1).collect()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
