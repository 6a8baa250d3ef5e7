//! Command-line reports: stability classes, the partition census, GIT
//! classification of configuration files and the local-model suites.

pub mod commands;
pub mod config;
pub mod error;
pub mod render;

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::Parser;

pub use commands::{cmd_census, cmd_git_classify, cmd_local_verify, cmd_stability, Outcome};
pub use config::{Cli, CommandKind, Format, RunConfig};
pub use error::{CliError, CliResult, EXIT_ASSERTION, EXIT_OK, EXIT_USAGE};

fn read(path: &std::path::Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Runs one validated configuration and renders its report.
pub fn run(cfg: &RunConfig) -> CliResult<Outcome<String>> {
    fn rendered<T>(o: Outcome<T>, text: String) -> Outcome<String> {
        Outcome {
            data: text,
            warnings: o.warnings,
            exit_code: o.exit_code,
        }
    }
    Ok(match cfg.command {
        CommandKind::Stability => {
            let o = cmd_stability(cfg.genus, cfg.degree, cfg.d_beta, cfg.d_gamma)?;
            let text = render::stability(&o.data, cfg.format)?;
            rendered(o, text)
        }
        CommandKind::Census => {
            let o = cmd_census(cfg.genus, cfg.degree)?;
            let text = render::census(&o.data, cfg.format)?;
            rendered(o, text)
        }
        CommandKind::GitClassify => {
            let path = cfg
                .input
                .as_deref()
                .ok_or_else(|| CliError::Usage("--input is required".into()))?;
            let configs = commands::parse_configurations(&read(path)?)?;
            let o = cmd_git_classify(&configs, cfg.genus, cfg.degree, cfg.r_max)?;
            let text = render::git(&o.data, cfg.format)?;
            rendered(o, text)
        }
        CommandKind::LocalModelVerify => {
            let extra = match &cfg.input {
                Some(path) => commands::parse_matrices(&read(path)?)?,
                None => Vec::new(),
            };
            let o = cmd_local_verify(cfg.truncation, cfg.seed, cfg.cases, &extra)?;
            let text = render::local(&o.data, cfg.format)?;
            rendered(o, text)
        }
    })
}

/// Full process behavior minus the actual exit: parses `args`, runs, writes
/// the report to `--output` or `stdout`, and returns the exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|cfg| {
        let outcome = run(&cfg)?;
        match &cfg.output {
            Some(path) => fs::write(path, &outcome.data).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?,
            None => stdout
                .write_all(outcome.data.as_bytes())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })?,
        }
        Ok(outcome)
    });
    match result {
        Ok(outcome) => {
            for w in &outcome.warnings {
                let _ = writeln!(stderr, "warning: {w}");
            }
            if outcome.exit_code == EXIT_ASSERTION {
                let _ = writeln!(stderr, "error: assertion or oracle check failed");
            }
            outcome.exit_code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}
