//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a mathematical check fails, 2 on usage
//! errors and exceeded size caps.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::closedform::catalan_sum_identity;
use crate::csp::{burnside_check, verify_csp_with, CspReport, FamilyDescriptor, VerifyOptions};
use crate::objects::Family;
use crate::qpoly::{eval_at_primitive_root, q_binomial, q_catalan};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest accepted `n` per family when `--cap` is not given.
pub fn default_max_n(family: Family) -> usize {
    match family {
        Family::Configuration => 14,
        Family::Matching => 8,
        // 12-gon
        Family::Triangulation => 10,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "catalan-csp",
    version,
    about = "Enumerate Catalan families and verify cyclic sieving with exact arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every object of a family in canonical text form.
    Enumerate(FamilyArgs),
    /// Compare fixed-point counts with C_n(q) at roots of unity.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Add a floating-point evaluation column (text output only).
        #[arg(long)]
        floating: bool,
    },
    /// Print C_n(q), or its exact value at a primitive d-th root of unity.
    Qcatalan {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        d: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the arc-count summation for C_n and the q-binomial difference identity.
    Identity {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verify all three families over a range of sizes.
    Report {
        #[arg(long, default_value_t = 12)]
        max_config_n: usize,
        #[arg(long, default_value_t = 6)]
        max_matching_n: usize,
        #[arg(long, default_value_t = 8)]
        max_triangulation_n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Config,
    Matching,
    Triangulation,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Config => Family::Configuration,
            FamilyArg::Matching => Family::Matching,
            FamilyArg::Triangulation => Family::Triangulation,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write results to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Catalan index: configurations of [n-1], matchings of [2n], triangulations of the (n+2)-gon.
    #[arg(long)]
    pub n: usize,
    /// Override the largest accepted n.
    #[arg(long)]
    pub cap: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl FamilyArgs {
    /// Checks `n` against the CLI cap and converts it to the enumerator's cap.
    fn enumeration_cap(&self) -> Result<Option<usize>, String> {
        let family = Family::from(self.family);
        let max_n = self.cap.unwrap_or_else(|| default_max_n(family));
        if self.n > max_n {
            return Err(format!(
                "n = {} exceeds the {family} cap n <= {max_n}",
                self.n
            ));
        }
        Ok(Some(match family {
            Family::Configuration => max_n.saturating_sub(1),
            Family::Matching => max_n,
            Family::Triangulation => max_n + 2,
        }))
    }
}

struct Outcome {
    body: String,
    code: i32,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let output = match &cli.command {
        Command::Enumerate(args) | Command::Verify { family: args, .. } => &args.output,
        Command::Qcatalan { output, .. }
        | Command::Identity { output, .. }
        | Command::Report { output, .. } => output,
    };
    let outcome = match execute(&cli.command, stderr) {
        Ok(outcome) => outcome,
        Err(message) => {
            let _ = writeln!(stderr, "error: {message}");
            return EXIT_USAGE;
        }
    };
    let written = match &output.output {
        Some(path) => write_atomically(path, &outcome.body),
        None => stdout.write_all(outcome.body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    outcome.code
}

fn write_atomically(path: &Path, body: &str) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".partial");
    std::fs::write(&tmp, body)?;
    std::fs::rename(&tmp, path)
}

fn user_error(e: Error) -> String {
    e.to_string()
}

fn execute(command: &Command, stderr: &mut dyn Write) -> Result<Outcome, String> {
    match command {
        Command::Enumerate(args) => run_enumerate(args),
        Command::Verify { family, floating } => run_verify(family, *floating, stderr),
        Command::Qcatalan { n, d, output } => {
            Ok(run_qcatalan(*n, d.map(|d| d as usize), output.format))
        }
        Command::Identity { n, output } => run_identity(*n as usize, output.format),
        Command::Report {
            max_config_n,
            max_matching_n,
            max_triangulation_n,
            output,
        } => run_report(
            [
                (Family::Configuration, 1..=*max_config_n),
                (Family::Matching, 1..=*max_matching_n),
                (Family::Triangulation, 1..=*max_triangulation_n),
            ],
            output.format,
            stderr,
        ),
    }
}

fn run_enumerate(args: &FamilyArgs) -> Result<Outcome, String> {
    let family = Family::from(args.family);
    let cap = args.enumeration_cap()?;
    let objects = family.enumerate(args.n, cap).map_err(user_error)?;
    let body = match args.output.format {
        Format::Text => {
            let mut s = String::new();
            for x in &objects {
                let _ = writeln!(s, "{x}");
            }
            let _ = writeln!(s, "count={}", objects.len());
            s
        }
        Format::Json => json_line(&json!({
            "family": family.name(),
            "n": args.n,
            "count": objects.len(),
            "objects": objects.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })),
    };
    Ok(Outcome {
        body,
        code: EXIT_OK,
    })
}

fn run_verify(
    args: &FamilyArgs,
    floating: bool,
    stderr: &mut dyn Write,
) -> Result<Outcome, String> {
    let family = Family::from(args.family);
    let cap = args.enumeration_cap()?;
    let descriptor = FamilyDescriptor::standard(family, args.n, cap).map_err(user_error)?;
    let report = verify_csp_with(&descriptor, VerifyOptions { floating }).map_err(user_error)?;
    let _ = writeln!(
        stderr,
        "verified {} n={} in {:.3}s",
        report.family,
        report.n,
        report.elapsed.as_secs_f64()
    );
    let body = match args.output.format {
        Format::Text => report.to_text(),
        Format::Json => json_line(&report.to_json()),
    };
    Ok(Outcome {
        body,
        code: verdict_code(&report),
    })
}

fn verdict_code(report: &CspReport) -> i32 {
    if report.csp_holds && report.rows.iter().all(|r| r.matches()) && burnside_check(report) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn run_qcatalan(n: usize, d: Option<usize>, format: Format) -> Outcome {
    let poly = q_catalan(n);
    let body = match (d, format) {
        (None, Format::Text) => {
            let coeffs: Vec<String> = poly.coeffs().iter().map(ToString::to_string).collect();
            format!("{}\n", coeffs.join(" "))
        }
        (None, Format::Json) => json_line(&json!({
            "n": n,
            "coeffs": poly.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
        })),
        (Some(d), Format::Text) => format!("{}\n", eval_at_primitive_root(&poly, d)),
        (Some(d), Format::Json) => {
            let value = eval_at_primitive_root(&poly, d);
            json_line(&json!({
                "n": n,
                "d": d,
                "value": value.as_integer().map(|v| v.to_string()),
                "residue": value.residue().coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
            }))
        }
    };
    Outcome {
        body,
        code: EXIT_OK,
    }
}

fn run_identity(n: usize, format: Format) -> Result<Outcome, String> {
    let (sum, catalan) = catalan_sum_identity(n).map_err(user_error)?;
    let lhs = &q_binomial(2 * n, n as i64) - &q_binomial(2 * n, n as i64 + 1);
    let qdiff = lhs == q_catalan(n).shift(n);
    let holds = qdiff && sum == catalan;
    let qdiff = if qdiff { "ok" } else { "mismatch" };
    let body = match format {
        Format::Text => format!("sum={sum} catalan={catalan} qdiff={qdiff}\n"),
        Format::Json => json_line(&json!({
            "n": n,
            "sum": sum.to_string(),
            "catalan": catalan.to_string(),
            "qdiff": qdiff,
            "holds": holds,
        })),
    };
    Ok(Outcome {
        body,
        code: if holds { EXIT_OK } else { EXIT_MISMATCH },
    })
}

fn run_report(
    ranges: [(Family, std::ops::RangeInclusive<usize>); 3],
    format: Format,
    stderr: &mut dyn Write,
) -> Result<Outcome, String> {
    let mut reports = Vec::new();
    for (family, range) in ranges {
        for n in range {
            let descriptor = FamilyDescriptor::standard(family, n, None).map_err(user_error)?;
            let report =
                verify_csp_with(&descriptor, VerifyOptions::default()).map_err(user_error)?;
            let _ = writeln!(
                stderr,
                "verified {family} n={n} in {:.3}s",
                report.elapsed.as_secs_f64()
            );
            reports.push(report);
        }
    }
    let all_hold = reports.iter().all(|r| verdict_code(r) == EXIT_OK);
    let body = match format {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let fixed: Vec<String> = r.rows.iter().map(|row| row.fixed.to_string()).collect();
                let _ = writeln!(
                    s,
                    "family={} n={} group_order={} fixed=[{}] orbits={} csp_holds={}",
                    r.family,
                    r.n,
                    r.group_order,
                    fixed.join(","),
                    r.orbits,
                    r.csp_holds
                );
            }
            let _ = writeln!(s, "all_hold={all_hold}");
            s
        }
        Format::Json => json_line(&json!({
            "reports": reports.iter().map(CspReport::to_json).collect::<Vec<_>>(),
            "all_hold": all_hold,
        })),
    };
    Ok(Outcome {
        body,
        code: if all_hold { EXIT_OK } else { EXIT_MISMATCH },
    })
}

fn json_line(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}
