//! `overlap-chain <decide|certify|verify|oracle|generate|bench> [flags]`
//!
//! Exit codes: 0 for YES (or success), 1 for NO (or an invalid
//! certificate), 2 for usage and input errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bench::{bench, write_csv, BenchMethod, BenchOptions};
use crate::certificate::{extract_certificate_with, verify_certificate, CertifyOptions};
use crate::decision::{decide_with, Answer, ConnectivityMethod};
use crate::generate::{generate, GeneratorMode, GeneratorSpec};
use crate::graph::build_pseudodigraph;
use crate::instance::{parse_instance_with, Instance, ParseOptions, SymbolMode};
use crate::oracle::{
    oracle_backtrack_capped, oracle_permutations_capped, DEFAULT_BACKTRACK_CAP,
    DEFAULT_PERMUTATION_CAP,
};
use crate::report::{CertificateReport, VerdictReport};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "overlap-chain",
    version,
    about = "Decide whether strings can be chained by fixed-length overlaps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide an instance; prints the verdict.
    Decide {
        #[command(flatten)]
        input: InstanceArgs,
        /// Use the group-merging connectivity scan.
        #[arg(long)]
        fidelity: bool,
        /// Also list the weakly connected components.
        #[arg(long)]
        explain: bool,
    },
    /// Extract a witness ordering for a YES instance.
    Certify {
        #[command(flatten)]
        input: InstanceArgs,
        /// Group-merging connectivity and augment-and-rotate construction.
        #[arg(long)]
        fidelity: bool,
        /// Write the certificate JSON here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against an instance.
    Verify {
        #[command(flatten)]
        input: InstanceArgs,
        /// Certificate JSON: {"permutation": [...], "path": [[from, to], ...]}.
        #[arg(long)]
        cert: PathBuf,
    },
    /// Run an exponential reference decider.
    Oracle {
        #[command(flatten)]
        input: InstanceArgs,
        #[arg(long, value_enum, default_value_t = OracleMethod::Backtrack)]
        method: OracleMethod,
        /// Largest n the oracle accepts [default: 10 for perms, 14 for backtrack].
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Write a random instance document.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long = "s", default_value_t = 2)]
        s: usize,
        #[arg(long = "t", default_value_t = 1)]
        t: usize,
        #[arg(long, default_value_t = 3)]
        alphabet_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Kind::Uniform)]
        kind: Kind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time deciders on generated instances; writes CSV.
    Bench {
        /// Comma-separated: decide, oracle_perms, oracle_backtrack,
        /// connected_paper, connected_fast, build.
        #[arg(long, value_delimiter = ',', default_value = "decide")]
        methods: Vec<String>,
        /// Comma-separated instance sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long = "s", default_value_t = 2)]
        s: usize,
        #[arg(long = "t", default_value_t = 1)]
        t: usize,
        #[arg(long, default_value_t = 3)]
        alphabet_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Kind::PlantedYes)]
        kind: Kind,
        /// Run the trials of a batch concurrently.
        #[arg(long)]
        parallel_trials: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct InstanceArgs {
    /// Instance document, one string per line; `-` reads standard input.
    #[arg(default_value = "-")]
    file: PathBuf,
    /// String length; overrides the header.
    #[arg(long = "s")]
    s: Option<usize>,
    /// Overlap length; overrides the header.
    #[arg(long = "t")]
    t: Option<usize>,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Chars,
    Tokens,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Plain,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleMethod {
    Perms,
    Backtrack,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Uniform,
    #[value(name = "planted_yes", alias = "planted-yes")]
    PlantedYes,
}

/// A failure that maps to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

impl InstanceArgs {
    fn load(&self) -> Result<Instance, UsageError> {
        let text = read(&self.file)?;
        let options = ParseOptions {
            s: self.s,
            t: self.t,
            mode: self.mode.map(|m| match m {
                ModeArg::Chars => SymbolMode::Chars,
                ModeArg::Tokens => SymbolMode::Tokens,
            }),
        };
        parse_instance_with(&text, &options)
            .map_err(|e| UsageError(format!("{}: {e}", self.file.display())))
    }
}

fn read(path: &Path) -> Result<String, UsageError> {
    let text = if path == Path::new("-") {
        io::read_to_string(io::stdin())
    } else {
        fs::read_to_string(path)
    };
    text.map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), UsageError> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn exit_for(answer: Answer) -> i32 {
    if answer.is_yes() {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

/// Parses `args` (program name first) and runs the subcommand. Returns the
/// process exit code.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_YES;
            }
            let _ = write!(stderr, "{e}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(UsageError(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, UsageError> {
    match command {
        Command::Decide {
            input,
            fidelity,
            explain,
        } => {
            let u = input.load()?;
            let method = if fidelity {
                ConnectivityMethod::Paper
            } else {
                ConnectivityMethod::Fast
            };
            let verdict = decide_with(&u, method);
            let mut report = VerdictReport::new(&verdict, u.mode());
            if explain {
                report = report.with_components(&build_pseudodigraph(&u), u.mode());
            }
            match input.format {
                Format::Json => write_json(out, &report)?,
                Format::Plain => write_verdict_plain(out, &report)?,
            }
            Ok(exit_for(verdict.answer))
        }
        Command::Certify {
            input,
            fidelity,
            out: path,
        } => {
            let u = input.load()?;
            let options = if fidelity {
                CertifyOptions::fidelity()
            } else {
                CertifyOptions::default()
            };
            let Some(cert) = extract_certificate_with(&u, options) else {
                let report = VerdictReport::new(&decide_with(&u, options.connectivity), u.mode());
                match input.format {
                    Format::Json => write_json(out, &report)?,
                    Format::Plain => write_verdict_plain(out, &report)?,
                }
                return Ok(EXIT_NO);
            };
            let report = CertificateReport::new(&cert, u.mode());
            if let Some(path) = path {
                fs::write(&path, serde_json::to_string_pretty(&report)? + "\n")
                    .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?;
            }
            match input.format {
                Format::Json => write_json(out, &report)?,
                Format::Plain => {
                    writeln!(out, "{}", cert.render_chain(&u))?;
                    let perm: Vec<String> =
                        cert.permutation.iter().map(ToString::to_string).collect();
                    writeln!(out, "permutation: {}", perm.join(" "))?;
                }
            }
            Ok(EXIT_YES)
        }
        Command::Verify { input, cert } => {
            let u = input.load()?;
            let report: CertificateReport = serde_json::from_str(&read(&cert)?)
                .map_err(|e| UsageError(format!("{}: {e}", cert.display())))?;
            let outcome = report
                .into_certificate(&u)
                .and_then(|c| verify_certificate(&u, &c));
            match (&outcome, input.format) {
                (Ok(()), Format::Json) => write_json(out, &serde_json::json!({ "valid": true }))?,
                (Err(defect), Format::Json) => write_json(
                    out,
                    &serde_json::json!({
                        "valid": false,
                        "reason": defect.code(),
                        "message": defect.to_string(),
                    }),
                )?,
                (Ok(()), Format::Plain) => writeln!(out, "valid")?,
                (Err(defect), Format::Plain) => writeln!(out, "invalid: {defect}")?,
            }
            Ok(if outcome.is_ok() { EXIT_YES } else { EXIT_NO })
        }
        Command::Oracle { input, method, cap } => {
            let u = input.load()?;
            let (name, yes) = match method {
                OracleMethod::Perms => (
                    "perms",
                    oracle_permutations_capped(&u, cap.unwrap_or(DEFAULT_PERMUTATION_CAP))?,
                ),
                OracleMethod::Backtrack => (
                    "backtrack",
                    oracle_backtrack_capped(&u, cap.unwrap_or(DEFAULT_BACKTRACK_CAP))?,
                ),
            };
            let answer = Answer::from(yes);
            match input.format {
                Format::Json => write_json(
                    out,
                    &serde_json::json!({ "method": name, "answer": answer }),
                )?,
                Format::Plain => writeln!(out, "{}", if yes { "yes" } else { "no" })?,
            }
            Ok(exit_for(answer))
        }
        Command::Generate {
            n,
            s,
            t,
            alphabet_size,
            seed,
            kind,
            out: path,
        } => {
            let spec = GeneratorSpec {
                n,
                s,
                t,
                alphabet_size,
                seed,
                mode: kind.into(),
            };
            let document = generate(&spec)?.to_document();
            emit(out, path.as_deref(), document.as_bytes())?;
            Ok(EXIT_YES)
        }
        Command::Bench {
            methods,
            sizes,
            trials,
            s,
            t,
            alphabet_size,
            seed,
            kind,
            parallel_trials,
            out: path,
        } => {
            let methods: Vec<BenchMethod> = methods
                .iter()
                .map(|m| m.trim().parse())
                .collect::<Result<_, String>>()
                .map_err(UsageError)?;
            let template = GeneratorSpec {
                n: 0,
                s,
                t,
                alphabet_size,
                seed,
                mode: kind.into(),
            };
            let options = BenchOptions {
                parallel_trials,
                ..Default::default()
            };
            let records = bench(&methods, &sizes, trials, &template, &options)?;
            let mut csv = Vec::new();
            write_csv(&records, &mut csv)?;
            emit(out, path.as_deref(), &csv)?;
            Ok(EXIT_YES)
        }
    }
}

impl From<Kind> for GeneratorMode {
    fn from(kind: Kind) -> Self {
        match kind {
            Kind::Uniform => GeneratorMode::Uniform,
            Kind::PlantedYes => GeneratorMode::PlantedYes,
        }
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, bytes: &[u8]) -> Result<(), UsageError> {
    match path {
        Some(path) => fs::write(path, bytes)
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display()))),
        None => Ok(out.write_all(bytes)?),
    }
}

fn write_verdict_plain(out: &mut dyn Write, report: &VerdictReport) -> Result<(), UsageError> {
    writeln!(out, "answer: {}", variant_name(&report.answer))?;
    writeln!(
        out,
        "failure_reason: {}",
        variant_name(&report.failure_reason)
    )?;
    writeln!(out, "case: {}", variant_name(&report.case))?;
    let odd: Vec<String> = report
        .odd_vertices
        .iter()
        .map(|(v, d)| format!("{v}({d:+})"))
        .collect();
    writeln!(out, "odd_vertices: {}", odd.join(" "))?;
    if let Some(components) = &report.components {
        let groups: Vec<String> = components
            .iter()
            .map(|group| format!("{{{}}}", group.join(" ")))
            .collect();
        writeln!(out, "components: {}", groups.join(" "))?;
    }
    Ok(())
}

/// Serialized name of a unit enum variant.
fn variant_name<T: Serialize>(value: &T) -> String {
    match serde_json::to_value(value) {
        Ok(serde_json::Value::String(s)) => s,
        other => format!("{other:?}"),
    }
}
