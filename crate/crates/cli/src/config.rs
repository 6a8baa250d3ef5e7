use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "su12",
    version,
    about = "Stability, GIT and local-model reports for SU(1,2) Hitchin fibers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct ModuliArgs {
    #[arg(long, default_value_t = 2, allow_negative_numbers = true)]
    pub genus: i64,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub degree: i64,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one partition `(d_beta, d_gamma)` of the zeros of `q`.
    Stability {
        #[command(flatten)]
        moduli: ModuliArgs,
        #[arg(long)]
        dbeta: i64,
        #[arg(long)]
        dgamma: i64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Table of all partitions with class, labeled count and stratum dimension.
    Census {
        #[command(flatten)]
        moduli: ModuliArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// GIT-classify a JSON array of configurations with both classifiers.
    GitClassify {
        #[command(flatten)]
        moduli: ModuliArgs,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        rmax: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the randomized local-model suites; `--input` adds extra matrices
    /// (a JSON array of 2x2 series matrices) to the Smith suite.
    LocalModelVerify {
        #[arg(long, default_value_t = 8)]
        truncation: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Stability,
    Census,
    GitClassify,
    LocalModelVerify,
}

/// Everything one invocation needs, validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub genus: i64,
    pub degree: i64,
    pub d_beta: i64,
    pub d_gamma: i64,
    pub truncation: usize,
    pub r_max: u32,
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub seed: u64,
    pub cases: usize,
}

impl RunConfig {
    fn base(command: CommandKind, out: OutputArgs) -> Self {
        RunConfig {
            command,
            genus: 2,
            degree: 0,
            d_beta: 0,
            d_gamma: 0,
            truncation: 8,
            r_max: 2,
            input: None,
            output: out.output,
            format: out.format,
            seed: 0,
            cases: 200,
        }
    }

    pub fn from_cli(cli: Cli) -> CliResult<Self> {
        let cfg = match cli.command {
            Command::Stability {
                moduli,
                dbeta,
                dgamma,
                out,
            } => RunConfig {
                genus: moduli.genus,
                degree: moduli.degree,
                d_beta: dbeta,
                d_gamma: dgamma,
                ..Self::base(CommandKind::Stability, out)
            },
            Command::Census { moduli, out } => RunConfig {
                genus: moduli.genus,
                degree: moduli.degree,
                ..Self::base(CommandKind::Census, out)
            },
            Command::GitClassify {
                moduli,
                input,
                rmax,
                out,
            } => RunConfig {
                genus: moduli.genus,
                degree: moduli.degree,
                input: Some(input),
                r_max: rmax,
                ..Self::base(CommandKind::GitClassify, out)
            },
            Command::LocalModelVerify {
                truncation,
                seed,
                cases,
                input,
                out,
            } => RunConfig {
                truncation,
                seed,
                cases,
                input,
                ..Self::base(CommandKind::LocalModelVerify, out)
            },
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> CliResult<()> {
        let usage = |m: String| Err(CliError::Usage(m));
        if self.genus < 2 {
            return usage(format!("--genus must be at least 2, got {}", self.genus));
        }
        if self.truncation < 2 {
            return usage(format!(
                "--truncation must be at least 2, got {}",
                self.truncation
            ));
        }
        if self.r_max < 1 {
            return usage("--rmax must be at least 1".into());
        }
        if self.command == CommandKind::Stability {
            let n = 4 * self.genus - 4;
            if self.d_beta < 0 || self.d_gamma < 0 || self.d_beta + self.d_gamma > n {
                return usage(format!(
                    "--dbeta and --dgamma must be nonnegative with sum at most {n}, got {} and {}",
                    self.d_beta, self.d_gamma
                ));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> CliResult<RunConfig> {
        let cli = Cli::try_parse_from(std::iter::once("su12").chain(args.iter().copied()))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        RunConfig::from_cli(cli)
    }

    #[test]
    fn defaults() {
        let cfg = parse(&["local-model-verify"]).unwrap();
        assert_eq!(
            (cfg.truncation, cfg.seed, cfg.cases, cfg.format),
            (8, 0, 200, Format::Json)
        );
        let cfg = parse(&["git-classify", "--input", "x.json"]).unwrap();
        assert_eq!((cfg.genus, cfg.degree, cfg.r_max), (2, 0, 2));
    }

    #[test]
    fn validation() {
        assert!(parse(&["census", "--genus", "1"]).is_err());
        assert!(parse(&["git-classify", "--input", "x", "--rmax", "0"]).is_err());
        assert!(parse(&["stability", "--dbeta", "-1", "--dgamma", "0"]).is_err());
        assert!(parse(&["stability", "--dbeta", "4", "--dgamma", "0"]).is_ok());
        assert!(parse(&["census", "--degree", "-3", "--genus", "5"]).is_ok());
    }
}
