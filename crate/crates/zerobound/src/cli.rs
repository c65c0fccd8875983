//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zerobound_core::bounds::{c_main, evaluate, r_total};
use zerobound_core::{check_bound, min_admissible_t0, LFunctionData, NewformSpec, StripParams};

use crate::doc::{self, DataDoc, Preset, Rounding};
use crate::error::{read_file, Error, Result};
use crate::table::{parse_pairs, write_table, BUNDLED_PAIRS};
use crate::zerofile::load_zeros;

/// Exit status for malformed arguments, input or preconditions.
pub const EXIT_INVALID: i32 = 1;
/// Exit status of `verify` when an inequality fails.
pub const EXIT_INEQUALITY: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "zerobound",
    version,
    about = "Explicit zero-counting bounds for L-functions"
)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the L-function datum JSON for a preset.
    Params(Source),
    /// Evaluate every intermediate constant at (T0, T).
    Constants {
        #[command(flatten)]
        source: Source,
        /// Defaults to the smallest admissible height.
        #[arg(long)]
        t0: Option<f64>,
        /// Defaults to 2 * T0.
        #[arg(long)]
        t: Option<f64>,
    },
    /// Print R_L(T0, T) and the coefficient bound at T.
    Bound {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        t0: f64,
        #[arg(long)]
        t: f64,
    },
    /// Print the ceiling table for a list of newforms as CSV.
    Table {
        #[arg(long, value_enum)]
        preset: TablePreset,
        /// CSV of `N,kappa` pairs; defaults to the bundled list.
        #[arg(long)]
        pairs: Option<PathBuf>,
    },
    /// Compare a zero table with the bounds on (T0, T].
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        zeros: PathBuf,
        #[arg(long)]
        t0: f64,
        #[arg(long)]
        t: f64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PresetName {
    Newform,
    Zeta,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TablePreset {
    Newform,
}

#[derive(Debug, Args)]
struct Source {
    /// JSON datum file.
    #[arg(long, conflicts_with = "preset")]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    preset: Option<PresetName>,
    /// Newform level N.
    #[arg(long)]
    level: Option<u64>,
    /// Newform weight kappa.
    #[arg(long)]
    weight: Option<u32>,
}

impl Source {
    fn resolve(&self) -> Result<DataDoc> {
        match (&self.input, self.preset) {
            (Some(path), None) => DataDoc::parse(&read_file(path)?),
            (None, Some(name)) => {
                let preset = match name {
                    PresetName::Newform => {
                        let (Some(level), Some(weight)) = (self.level, self.weight) else {
                            return Err(Error::Usage(
                                "preset newform requires --level and --weight".into(),
                            ));
                        };
                        Preset::Newform(NewformSpec::new(level, weight)?)
                    }
                    PresetName::Zeta => Preset::Zeta,
                };
                Ok(DataDoc::from_data(&preset.data()))
            }
            _ => Err(Error::Usage(
                "exactly one of --input or --preset is required".into(),
            )),
        }
    }

    fn load(&self) -> Result<(DataDoc, LFunctionData, StripParams)> {
        let doc = self.resolve()?;
        let data = doc.to_data()?;
        let strip = doc.to_strip()?;
        Ok((doc, data, strip))
    }
}

fn require_window(t0: f64, t: f64) -> Result<()> {
    if t > t0 {
        Ok(())
    } else {
        Err(Error::Usage(format!(
            "T must exceed T0 (got T0 = {t0}, T = {t})"
        )))
    }
}

/// Runs one command; returns the text to print and whether `verify` passed.
fn execute(command: &Command, rounding: Rounding) -> Result<(String, bool)> {
    match command {
        Command::Params(source) => Ok((doc::data_json(&source.resolve()?, rounding)?, true)),
        Command::Constants { source, t0, t } => {
            let (doc, data, strip) = source.load()?;
            let t0 = t0.unwrap_or_else(|| min_admissible_t0(&data, &strip).t0_min);
            let t = t.unwrap_or(2.0 * t0);
            require_window(t0, t)?;
            let report = evaluate(&data, &strip, t0, t)?;
            Ok((doc::report_json(&doc, &strip, &report, rounding)?, true))
        }
        Command::Bound { source, t0, t } => {
            let (_, data, strip) = source.load()?;
            require_window(*t0, *t)?;
            let total = r_total(&data, &strip, *t0, *t)?;
            let coeffs = c_main(&data, &strip, *t0)?;
            Ok((doc::bound_json(*t0, *t, total, &coeffs, rounding)?, true))
        }
        Command::Table {
            preset: TablePreset::Newform,
            pairs,
        } => {
            let specs = match pairs {
                Some(path) => parse_pairs(&read_file(path)?, &path.display().to_string())?,
                None => parse_pairs(BUNDLED_PAIRS, "bundled pairs")?,
            };
            let mut buf = Vec::new();
            write_table(&specs, &mut buf)?;
            Ok((String::from_utf8(buf).expect("CSV output is UTF-8"), true))
        }
        Command::Verify {
            source,
            zeros,
            t0,
            t,
        } => {
            let (_, data, strip) = source.load()?;
            require_window(*t0, *t)?;
            let zeros = load_zeros(zeros)?;
            let report = check_bound(&data, &strip, &zeros, *t0, *t)?;
            let pass = report.pass_lemma && report.pass_theorem;
            Ok((doc::verification_json(&report, rounding)?, pass))
        }
    }
}

fn emit(text: &str, output: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match output {
        Some(path) => std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| Error::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit status.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let text = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_INVALID
                }
            };
        }
    };
    let result = execute(&cli.command, Rounding::from_env())
        .and_then(|(text, pass)| emit(&text, cli.output.as_ref(), stdout).map(|_| pass));
    match result {
        Ok(true) => 0,
        Ok(false) => EXIT_INEQUALITY,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            EXIT_INVALID
        }
    }
}
