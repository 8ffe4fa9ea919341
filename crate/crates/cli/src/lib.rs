//! Command-line front end for `hyperlab`.
//!
//! Exit status: 0 when every selected identity passes, 1 when any fails,
//! 2 for usage errors (bad flags, unknown ids, arguments outside a domain).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hyperlab::QuadConfig;

mod commands;
pub mod render;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "hyperlab",
    version,
    about = "Verify dilogarithm and double-integral identities numerically"
)]
pub struct Cli {
    /// Absolute tolerance for numerical integration.
    #[arg(long, global = true, env = "HYPERLAB_TOL")]
    pub tol: Option<f64>,

    /// Integrand evaluation budget per quadrature.
    #[arg(long = "max-evals", global = true, env = "HYPERLAB_MAX_EVALS")]
    pub max_evals: Option<usize>,

    #[arg(
        long,
        global = true,
        env = "HYPERLAB_FORMAT",
        value_enum,
        default_value_t
    )]
    pub format: OutputFormat,

    /// Write data to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check identities from the registry (all of them by default).
    Verify { ids: Vec<String> },
    /// Evaluate a single function.
    Eval {
        #[command(subcommand)]
        what: EvalCommand,
    },
    /// Sample the boundary curves of the region for plotting.
    #[command(allow_negative_numbers = true)]
    Region { u_max: f64, n: usize },
    /// List registry ids with their closed forms.
    List,
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum EvalCommand {
    /// Real dilogarithm, x <= 1.
    #[command(allow_negative_numbers = true)]
    Li2 { x: f64 },
    /// Rogers dilogarithm, 0 < x < 1.
    #[command(allow_negative_numbers = true)]
    Rogers { x: f64 },
    /// ln(1 + sqrt 2).
    Alpha,
    /// (u, v) in the region to (x, y) in the unit square.
    #[command(allow_negative_numbers = true)]
    MapForward { u: f64, v: f64 },
    /// (x, y) in the unit square back to (u, v).
    #[command(allow_negative_numbers = true)]
    MapInverse { x: f64, y: f64 },
    /// Jacobian determinant of the forward map at (u, v).
    #[command(allow_negative_numbers = true)]
    Jacobian { u: f64, v: f64 },
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Rendered command output.
pub(crate) struct Output {
    pub data: String,
    pub diagnostics: Vec<String>,
    pub code: u8,
}

/// A command that could not run.
#[derive(Debug)]
pub(crate) struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

impl Cli {
    pub fn quad_config(&self) -> QuadConfig {
        let mut cfg = QuadConfig::default();
        if let Some(tol) = self.tol {
            cfg = cfg.with_tol(tol);
        }
        if let Some(n) = self.max_evals {
            cfg = cfg.with_max_evaluations(n);
        }
        cfg
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// data to `stdout` (or `--out`) and diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };

    match commands::dispatch(&cli) {
        Ok(output) => {
            for d in &output.diagnostics {
                let _ = writeln!(stderr, "{d}");
            }
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &output.data)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout
                    .write_all(output.data.as_bytes())
                    .map_err(|e| format!("cannot write output: {e}")),
            };
            match written {
                Ok(()) => output.code,
                Err(message) => {
                    let _ = writeln!(stderr, "error: {message}");
                    EXIT_USAGE
                }
            }
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
