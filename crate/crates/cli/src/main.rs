use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use genosc_core::{Label, SpectralShape, DEFAULT_MAX_DIM, DEFAULT_SPECTRAL_TOL, DEFAULT_TAU};
use genosc_cli::{run, Command, OutputFormat, RunConfig};

/// Classify real square matrices as GO, GEO or GOO from their compound matrices.
#[derive(Parser)]
#[command(name = "genosc", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,

    /// Relative zero tolerance for sign patterns
    #[arg(long, global = true, default_value_t = DEFAULT_TAU)]
    tau: f64,

    /// Relative tolerance for spectral comparisons
    #[arg(long, global = true, default_value_t = DEFAULT_SPECTRAL_TOL)]
    spectral_tol: f64,

    /// Largest matrix size accepted by classify and search
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DIM)]
    max_dim: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    #[value(name = "GO", alias = "go")]
    Go,
    #[value(name = "GEO", alias = "geo")]
    Geo,
    #[value(name = "GOO", alias = "goo")]
    Goo,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the j-th compound matrix
    Compound {
        /// Matrix file (CSV or JSON)
        input: PathBuf,
        /// Compound order
        #[arg(short = 'j', long)]
        order: usize,
    },
    /// Run the compound-order criteria and check the implied spectrum
    Classify {
        /// Matrix file (CSV or JSON)
        input: PathBuf,
    },
    /// Print the eigenvalues in canonical order
    Spectrum {
        /// Matrix file (CSV or JSON)
        input: PathBuf,
    },
    /// Check the spectrum against a GO, GEO or GOO shape
    Verify {
        /// Matrix file (CSV or JSON)
        input: PathBuf,
        #[arg(long, value_enum)]
        shape: Shape,
    },
    /// Sample random one-decimal matrices and keep those with a given label
    Search {
        /// Matrix size
        #[arg(short, long)]
        n: usize,
        /// Target label (GO, GEO, GOO, NONE)
        #[arg(short, long, value_parser = parse_label)]
        label: Label,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_label(s: &str) -> Result<Label, String> {
    s.parse().map_err(|e: genosc_core::Error| e.to_string())
}

impl Cli {
    fn into_config(self) -> RunConfig {
        let command = match &self.command {
            Cmd::Compound { .. } => Command::Compound,
            Cmd::Classify { .. } => Command::Classify,
            Cmd::Spectrum { .. } => Command::Spectrum,
            Cmd::Verify { .. } => Command::Verify,
            Cmd::Search { .. } => Command::Search,
        };
        let mut cfg = RunConfig::new(command);
        cfg.format = match self.common.format {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        };
        cfg.tau = self.common.tau;
        cfg.spectral_tol = self.common.spectral_tol;
        cfg.max_dim = self.common.max_dim;
        match self.command {
            Cmd::Compound { input, order } => {
                cfg.input_path = Some(input);
                cfg.order = Some(order);
            }
            Cmd::Classify { input } | Cmd::Spectrum { input } => cfg.input_path = Some(input),
            Cmd::Verify { input, shape } => {
                cfg.input_path = Some(input);
                cfg.shape = Some(match shape {
                    Shape::Go => SpectralShape::GoShape,
                    Shape::Geo => SpectralShape::GeoShape,
                    Shape::Goo => SpectralShape::GooShape,
                });
            }
            Cmd::Search {
                n,
                label,
                trials,
                seed,
            } => {
                cfg.n = Some(n);
                cfg.label = Some(label);
                cfg.trials = trials;
                cfg.seed = seed;
            }
        }
        cfg
    }
}

fn main() -> ExitCode {
    let cfg = match Cli::try_parse() {
        Ok(cli) => cli.into_config(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let out = run(&cfg);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
