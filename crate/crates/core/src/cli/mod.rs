//! `cliffroot` command-line front end.
//!
//! Exit codes: 0 success, 1 domain-level negative result (not a root, no
//! root found, a root candidate where nonexistence was expected), 2 usage
//! error.

mod table;

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use table::{table_csv, table_rows, table_text, TableRow};

use crate::algebra::{format_mv, parse_mv, Multivector, Signature, TextStyle};
use crate::error::Error;
use crate::roots::{
    classify, nonexistence_scan, random_starts, records_from_json, records_to_csv, sample_batch,
    slice_scan, solve_multistart, verify, Classification, RootCase, RootRecord, ScanReport, SolveOptions,
};
use crate::symbolic::{constraints_to_text, derive_constraints, solve_for_square, system_to_json};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Style {
    Cyclic,
    Canonical,
}

#[derive(Debug, Parser)]
#[command(name = "cliffroot", version, about = "Geometric roots of -1 in real Clifford algebras Cl(p,q)")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, env = "CLIFFROOT_FORMAT", default_value = "text")]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SigArg {
    /// Signature as p,q
    #[arg(long = "sig", value_parser = parse_sig)]
    pub sig: Signature,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the constraint system of A^2 = -1
    Derive {
        #[command(flatten)]
        sig: SigArg,
        /// Coefficient naming in text output
        #[arg(long, value_enum, default_value = "cyclic")]
        style: Style,
    },
    /// Check whether a multivector squares to -1 (exit 0 root, 1 not)
    Verify {
        #[command(flatten)]
        sig: SigArg,
        /// Multivector text, e.g. "0.5*e1 - e23"
        #[arg(long, allow_hyphen_values = true)]
        mv: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Draw members of a root family
    Sample {
        #[command(flatten)]
        sig: SigArg,
        /// Family name, e.g. N3_A0B0
        #[arg(long = "case")]
        case: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Free parameters are drawn from [-scale, scale]
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
    },
    /// Identify the family of a root (reads root JSON from stdin without --mv)
    Classify {
        /// Signature as p,q (required with --mv)
        #[arg(long = "sig", value_parser = parse_sig)]
        sig: Option<Signature>,
        #[arg(long, allow_hyphen_values = true)]
        mv: Option<String>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Search for roots numerically with Levenberg-Marquardt
    Solve {
        #[command(flatten)]
        sig: SigArg,
        /// Starting multivector
        #[arg(long, allow_hyphen_values = true, conflicts_with = "random", required_unless_present = "random")]
        init: Option<String>,
        /// Number of random starts in [-2, 2]^(2^n)
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long = "max-iter", default_value_t = 200)]
        max_iter: usize,
    },
    /// Scan a region for roots: full grid (n <= 2) or slices with fixed coordinates
    Scan {
        #[command(flatten)]
        sig: SigArg,
        /// Grid box lo,hi applied to every coordinate
        #[arg(long = "box", value_parser = parse_pair, allow_hyphen_values = true, conflicts_with = "slice", required_unless_present = "slice")]
        bounds: Option<(f64, f64)>,
        /// Grid points per axis
        #[arg(long, default_value_t = 21)]
        res: usize,
        /// Fixed coordinate NAME=VALUE, e.g. alpha=0.5 (repeatable)
        #[arg(long, value_parser = parse_assignment, allow_hyphen_values = true)]
        slice: Vec<(String, f64)>,
        /// LM starts for slice scans
        #[arg(long, default_value_t = 200)]
        starts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Residuals at or below this count as a root candidate
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Generate the table of root families for dimension n
    Table {
        #[arg(long = "n")]
        n: usize,
    },
}

fn parse_sig(s: &str) -> Result<Signature, String> {
    s.parse::<Signature>().map_err(|e| e.to_string())
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or("expected lo,hi")?;
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("'{t}': {e}"));
    Ok((num(a)?, num(b)?))
}

fn parse_assignment(s: &str) -> Result<(String, f64), String> {
    let (name, v) = s.split_once('=').ok_or("expected NAME=VALUE")?;
    let v = v.trim().parse::<f64>().map_err(|e| format!("'{v}': {e}"))?;
    Ok((name.trim().to_string(), v))
}

/// Outcome of a command before it is turned into an exit code.
enum Failure {
    Usage(String),
    Negative,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotARoot { .. } | Error::NoConvergence { .. } => Failure::Negative,
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = Result<bool, Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: OutputFormat,
}

impl Io<'_> {
    fn print(&mut self, text: &str) {
        let _ = self.out.write_all(text.as_bytes());
        if !text.ends_with('\n') {
            let _ = self.out.write_all(b"\n");
        }
    }

    fn json<T: Serialize>(&mut self, v: &T) {
        let text = serde_json::to_string_pretty(v).expect("json");
        self.print(&text);
    }

    fn note(&mut self, text: &str) {
        let _ = writeln!(self.err, "{text}");
    }
}

/// Run with explicit arguments (including the program name) and streams.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let mut io = Io {
        stdin,
        out,
        err,
        format: cli.format,
    };
    match dispatch(cli.command, &mut io) {
        Ok(true) => EXIT_OK,
        Ok(false) | Err(Failure::Negative) => EXIT_NEGATIVE,
        Err(Failure::Usage(msg)) => {
            io.note(&format!("error: {msg}"));
            EXIT_USAGE
        }
    }
}

pub fn run_from_env() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

fn dispatch(cmd: Command, io: &mut Io) -> CmdResult {
    match cmd {
        Command::Derive { sig, style } => cmd_derive(sig.sig, style, io),
        Command::Verify { sig, mv, tol } => cmd_verify(sig.sig, &mv, tol, io),
        Command::Sample {
            sig,
            case,
            count,
            seed,
            scale,
        } => cmd_sample(sig.sig, &case, count, seed, scale, io),
        Command::Classify { sig, mv, tol } => cmd_classify(sig, mv, tol, io),
        Command::Solve {
            sig,
            init,
            random,
            seed,
            tol,
            max_iter,
        } => cmd_solve(sig.sig, init, random, seed, tol, max_iter, io),
        Command::Scan {
            sig,
            bounds,
            res,
            slice,
            starts,
            seed,
            tol,
        } => cmd_scan(sig.sig, bounds, res, &slice, starts, seed, tol, io),
        Command::Table { n } => cmd_table(n, io),
    }
}

fn check_tol(tol: f64) -> Result<(), Failure> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Failure::Usage(format!("--tol must be positive, got {tol}")))
    }
}

fn cmd_derive(sig: Signature, style: Style, io: &mut Io) -> CmdResult {
    let sys = derive_constraints(sig);
    match io.format {
        OutputFormat::Json => io.print(&system_to_json(&sys)),
        OutputFormat::Text => {
            let style = match style {
                Style::Cyclic => TextStyle::Cyclic,
                Style::Canonical => TextStyle::Canonical,
            };
            let mut text = constraints_to_text(&sys, style);
            let top = sig.dim() - 1;
            if let Some(solved) = solve_for_square(&sys.root_form().to_polynomial(), -1, top, sig, style) {
                text.push_str(&format!("# pseudoscalar form: {solved}\n"));
            }
            io.print(&text);
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut rows = vec![["mask".to_string(), "i".into(), "j".into(), "coef".into()]];
            for (m, f) in sys.forms().iter().enumerate() {
                for ((i, j), c) in f.to_polynomial().terms {
                    rows.push([m.to_string(), i.to_string(), j.to_string(), c.to_string()]);
                }
            }
            for r in rows {
                w.write_record(&r).map_err(|e| Failure::Usage(e.to_string()))?;
            }
            io.print(&String::from_utf8(w.into_inner().expect("csv")).expect("utf8"));
        }
    }
    Ok(true)
}

fn cmd_verify(sig: Signature, mv: &str, tol: f64, io: &mut Io) -> CmdResult {
    check_tol(tol)?;
    let a = parse_mv(sig, mv)?;
    let report = verify(&a, tol);
    match io.format {
        OutputFormat::Json => io.json(&report),
        OutputFormat::Text => {
            let mut text = format!(
                "{}: {}\nresidual: {:e}\n",
                if report.is_root { "root" } else { "not a root" },
                format_mv(&a, TextStyle::Canonical),
                report.residual_norm
            );
            for (k, g) in report.per_grade.iter().enumerate() {
                text.push_str(&format!("grade {k}: {g:e}\n"));
            }
            io.print(&text);
        }
        OutputFormat::Csv => {
            let mut text = String::from("is_root,residual");
            for k in 0..report.per_grade.len() {
                text.push_str(&format!(",grade{k}"));
            }
            text.push_str(&format!("\n{},{}", report.is_root, report.residual_norm));
            for g in &report.per_grade {
                text.push_str(&format!(",{g}"));
            }
            io.print(&text);
        }
    }
    Ok(report.is_root)
}

fn print_records(sig: Signature, records: &[RootRecord], io: &mut Io) -> Result<(), Failure> {
    match io.format {
        OutputFormat::Json => io.json(&records),
        OutputFormat::Csv => io.print(&records_to_csv(sig, records)?),
        OutputFormat::Text => {
            let mut text = String::new();
            for r in records {
                let a = r.multivector()?;
                let case = r.case.map_or("unclassified".to_string(), |c| c.to_string());
                let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                text.push_str(&format!(
                    "{case} {{{}}}\n  A = {}\n  residual = {:e}\n",
                    params.join(", "),
                    format_mv(&a, TextStyle::Canonical),
                    r.residual
                ));
            }
            io.print(&text);
        }
    }
    Ok(())
}

fn cmd_sample(sig: Signature, case: &str, count: usize, seed: u64, scale: f64, io: &mut Io) -> CmdResult {
    let case: RootCase = case.parse()?;
    let samples = sample_batch(case, sig, seed, scale, count)?;
    let records: Vec<RootRecord> = samples
        .into_iter()
        .map(|(a, params)| RootRecord::new(&a, Some(case), params))
        .collect();
    print_records(sig, &records, io)?;
    Ok(true)
}

fn cmd_classify(sig: Option<Signature>, mv: Option<String>, tol: f64, io: &mut Io) -> CmdResult {
    check_tol(tol)?;
    let inputs: Vec<Multivector> = match mv {
        Some(text) => {
            let sig = sig.ok_or_else(|| Failure::Usage("--mv needs --sig".into()))?;
            vec![parse_mv(sig, &text)?]
        }
        None => {
            let mut text = String::new();
            io.stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
            let records = records_from_json(&text)?;
            let mut out = Vec::new();
            for r in records {
                if let Some(s) = sig {
                    if s != r.signature {
                        return Err(Error::SignatureMismatch(s, r.signature).into());
                    }
                }
                out.push(r.multivector()?);
            }
            out
        }
    };
    let Some(first) = inputs.first() else {
        return Err(Failure::Usage("no multivector to classify".into()));
    };
    let sig = first.signature();
    let mut records = Vec::new();
    let mut all_ok = true;
    for a in &inputs {
        if a.signature() != sig {
            return Err(Error::SignatureMismatch(sig, a.signature()).into());
        }
        match classify(a, tol) {
            Ok(Classification::Case { case, params }) => records.push(RootRecord::new(a, Some(case), params)),
            Ok(Classification::Unclassified) => {
                all_ok = false;
                records.push(RootRecord::new(a, None, Default::default()));
            }
            Err(Error::NotARoot { residual }) => {
                all_ok = false;
                io.note(&format!("not a root: {} (residual {residual:e})", format_mv(a, TextStyle::Canonical)));
                records.push(RootRecord::new(a, None, Default::default()));
            }
            Err(e) => return Err(e.into()),
        }
    }
    if io.format == OutputFormat::Json && records.len() == 1 {
        io.json(&records[0]);
    } else {
        print_records(sig, &records, io)?;
    }
    Ok(all_ok)
}

#[derive(Serialize)]
struct SolveSummary {
    signature: Signature,
    starts: usize,
    converged: usize,
    min_residual: f64,
    roots: Vec<RootRecord>,
}

fn cmd_solve(
    sig: Signature,
    init: Option<String>,
    random: Option<usize>,
    seed: u64,
    tol: f64,
    max_iter: usize,
    io: &mut Io,
) -> CmdResult {
    check_tol(tol)?;
    let starts = match (init, random) {
        (Some(text), _) => vec![parse_mv(sig, &text)?.into_coeffs()],
        (None, Some(count)) if count > 0 => random_starts(sig, count, seed, 2.0),
        _ => return Err(Failure::Usage("need --init or --random N with N > 0".into())),
    };
    let opts = SolveOptions {
        tol,
        max_iter,
        ..Default::default()
    };
    let mut min_residual = f64::INFINITY;
    let mut roots = Vec::new();
    for result in solve_multistart(sig, &starts, &opts) {
        match result {
            Ok(sol) => {
                min_residual = min_residual.min(sol.residual);
                let (case, params) = match classify(&sol.root, tol) {
                    Ok(Classification::Case { case, params }) if sig.n() <= 4 => (Some(case), params),
                    _ => (None, Default::default()),
                };
                roots.push(RootRecord::new(&sol.root, case, params));
            }
            Err(Error::NoConvergence { residual, .. }) => min_residual = min_residual.min(residual),
            Err(e) => return Err(e.into()),
        }
    }
    let summary = SolveSummary {
        signature: sig,
        starts: starts.len(),
        converged: roots.len(),
        min_residual,
        roots,
    };
    match io.format {
        OutputFormat::Json => io.json(&summary),
        OutputFormat::Csv => io.print(&records_to_csv(sig, &summary.roots)?),
        OutputFormat::Text => {
            print_records(sig, &summary.roots, io)?;
            io.print(&format!(
                "converged: {} of {}\nmin residual: {:e}",
                summary.converged, summary.starts, summary.min_residual
            ));
        }
    }
    Ok(summary.converged > 0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_scan(
    sig: Signature,
    bounds: Option<(f64, f64)>,
    res: usize,
    slice: &[(String, f64)],
    starts: usize,
    seed: u64,
    tol: f64,
    io: &mut Io,
) -> CmdResult {
    check_tol(tol)?;
    let report: ScanReport = match bounds {
        Some((lo, hi)) => nonexistence_scan(sig, lo, hi, res)?,
        None => slice_scan(sig, slice, starts, seed, 2.0)?,
    };
    match io.format {
        OutputFormat::Json => io.json(&report),
        OutputFormat::Csv => {
            let mut text = String::from("signature,mode,points,min_residual,analytic_bound\n");
            text.push_str(&format!(
                "\"{}\",{},{},{},{}",
                report.signature,
                report.mode,
                report.points,
                report.min_residual,
                report.analytic_bound.map_or(String::new(), |b| b.to_string())
            ));
            io.print(&text);
        }
        OutputFormat::Text => {
            let argmin = Multivector::from_coeffs(sig, report.argmin.clone())?;
            let mut text = format!(
                "{} scan of {} over {} points\nmin residual: {:e}\nargmin: {}\n",
                report.mode,
                sig,
                report.points,
                report.min_residual,
                format_mv(&argmin, TextStyle::Canonical)
            );
            if let Some(b) = report.analytic_bound {
                text.push_str(&format!("analytic bound: residual >= {b}\n"));
            }
            io.print(&text);
        }
    }
    // success means no root candidate in the scanned region
    Ok(report.min_residual > tol)
}

fn cmd_table(n: usize, io: &mut Io) -> CmdResult {
    let rows = table_rows(n)?;
    match io.format {
        OutputFormat::Json => io.json(&rows),
        OutputFormat::Csv => io.print(&table_csv(&rows)?),
        OutputFormat::Text => io.print(&table_text(&rows)),
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("cliffroot").chain(args.iter().copied()),
            &mut std::io::empty(),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(run_args(&["verify", "--sig", "3,0", "--mv", "e123"]).0, 0);
        assert_eq!(run_args(&["verify", "--sig", "2,1", "--mv", "e123"]).0, 1);
        assert_eq!(run_args(&["verify", "--sig", "3,0", "--mv", "e14"]).0, 2);
    }

    #[test]
    fn derive_bounds() {
        assert_eq!(run_args(&["derive", "--sig", "9,9"]).0, 2);
        let (code, out, _) = run_args(&["derive", "--sig", "0,1"]);
        assert_eq!(code, 0);
        assert!(out.contains("1: alpha^2 - beta^2 = -1"), "{out}");
    }

    #[test]
    fn classify_text() {
        let (code, out, _) = run_args(&["classify", "--sig", "3,0", "--mv", "e123"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("N3_PSEUDO"));
    }
}
