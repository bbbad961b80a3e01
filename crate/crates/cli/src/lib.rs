//! Command dispatch for the `genosc` binary.
//!
//! [`run`] never prints or exits; it returns the exit code and both output
//! streams so the binary and the tests share one code path.

pub mod input;
mod render;

use std::path::PathBuf;

use genosc_core::{
    classify_with, compound, eigenvalues, search_examples_with_reports, verify, ClassifyOptions,
    Error as CoreError, Label, Matrix, SpectralShape, DEFAULT_MAX_DIM, DEFAULT_SPECTRAL_TOL,
    DEFAULT_TAU,
};
use thiserror::Error;

pub use input::parse_matrix;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("missing argument: {0}")]
    Missing(&'static str),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(
                CoreError::NumericFailure(_)
                | CoreError::DegenerateSpectrum(_)
                | CoreError::InvariantViolation(_),
            ) => EXIT_NUMERIC,
            _ => EXIT_INPUT,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Compound,
    Classify,
    Spectrum,
    Verify,
    Search,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// Matrix file; unused by `search`.
    pub input_path: Option<PathBuf>,
    pub format: OutputFormat,
    pub tau: f64,
    pub spectral_tol: f64,
    /// Compound order for `compound`.
    pub order: Option<usize>,
    /// Spectral shape for `verify`.
    pub shape: Option<SpectralShape>,
    /// Target label for `search`.
    pub label: Option<Label>,
    pub trials: usize,
    pub seed: u64,
    /// Matrix size for `search`.
    pub n: Option<usize>,
    pub max_dim: usize,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            input_path: None,
            format: OutputFormat::Text,
            tau: DEFAULT_TAU,
            spectral_tol: DEFAULT_SPECTRAL_TOL,
            order: None,
            shape: None,
            label: None,
            trials: 10_000,
            seed: 0,
            n: None,
            max_dim: DEFAULT_MAX_DIM,
        }
    }

    fn options(&self) -> ClassifyOptions {
        ClassifyOptions {
            tau: self.tau,
            spectral_tol: self.spectral_tol,
            max_dim: self.max_dim,
        }
    }

    fn matrix(&self) -> Result<Matrix, CliError> {
        let path = self.input_path.as_ref().ok_or(CliError::Missing("input file"))?;
        parse_matrix(path)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let mut stderr = String::new();
    if cfg.max_dim > DEFAULT_MAX_DIM {
        stderr.push_str(&format!(
            "warning: max dimension {} exceeds {DEFAULT_MAX_DIM}; compounds grow as C(n, n/2)\n",
            cfg.max_dim
        ));
    }
    match dispatch(cfg) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr,
        },
        Err(e) => {
            stderr.push_str(&format!("error: {e}\n"));
            Outcome {
                code: e.exit_code(),
                stdout: String::new(),
                stderr,
            }
        }
    }
}

fn dispatch(cfg: &RunConfig) -> Result<String, CliError> {
    let json = cfg.format == OutputFormat::Json;
    match cfg.command {
        Command::Compound => {
            let a = cfg.matrix()?;
            let j = cfg.order.ok_or(CliError::Missing("compound order (-j)"))?;
            let c = compound(&a, j)?;
            Ok(if json {
                render::compound_json(&c)
            } else {
                render::compound_text(&c)
            })
        }
        Command::Classify => {
            let a = cfg.matrix()?;
            let report = classify_with(&a, &cfg.options())?;
            Ok(if json {
                render::to_json(&report)
            } else {
                render::report_text(&report)
            })
        }
        Command::Spectrum => {
            let a = cfg.matrix()?;
            let s = eigenvalues(&a, cfg.spectral_tol)?;
            Ok(if json {
                render::to_json(&s)
            } else {
                render::spectrum_text(&s)
            })
        }
        Command::Verify => {
            let a = cfg.matrix()?;
            let shape = cfg.shape.ok_or(CliError::Missing("spectral shape (--shape)"))?;
            let s = eigenvalues(&a, cfg.spectral_tol)?;
            let verdict = verify(&s, shape, cfg.spectral_tol);
            Ok(if json {
                render::verify_json(&s, &verdict)
            } else {
                render::verify_text(&s, &verdict)
            })
        }
        Command::Search => {
            let n = cfg.n.ok_or(CliError::Missing("matrix size (--n)"))?;
            let label = cfg.label.ok_or(CliError::Missing("target label (--label)"))?;
            let found =
                search_examples_with_reports(n, label, cfg.trials, cfg.seed, &cfg.options())?;
            let search = render::Search {
                n,
                label,
                trials: cfg.trials,
                seed: cfg.seed,
                found: &found,
            };
            Ok(if json {
                render::search_json(&search)
            } else {
                render::search_text(&search)
            })
        }
    }
}
