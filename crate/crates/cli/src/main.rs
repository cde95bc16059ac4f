//! Command-line front end: codecs, tables, checks, scanners, permutations
//! and the start-block classifier.
//!
//! Exit codes: 0 on success, 1 when a check finds a counterexample, 2 on
//! bad usage or input.

use std::io::{self, Write};
use std::process::ExitCode;

use basephi::numeration::{gamma_minus, phi_decode, zeck_decode, zeck_encode};
use basephi::occurrence::{
    code, conjecture_scan, predict_prefix_small, predict_suffix, rotation_permutation,
    scan_central, scan_prefix, scan_suffix, trident_position, BlockKind, ConjectureEntry,
    Convention,
};
use basephi::structure::{locate, phi_encode_recursive};
use basephi::verify::{
    conjecture_check, run_check, table_bound, CheckReport, VerifyConfig, CHECK_IDS,
};
use basephi::{
    Big, CentralPattern, DigitWord, Error, ExpansionTable, OccurrenceReport, PhiExpansion,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "basephi",
    version,
    about = "Base-phi and Zeckendorf numeration toolkit"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for building expansion tables (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum System {
    Phi,
    Zeck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ScanKind {
    Suffix,
    Prefix,
    Central,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Sketch,
    Raw,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Sketch => Convention::PaperSketch,
            ConventionArg::Raw => Convention::RawOrbit,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expansion of a natural number.
    Encode { system: System, n: String },
    /// Value of an expansion: "1000.1001" (base phi) or "1000" (Zeckendorf).
    Decode {
        word: String,
        /// Read a word without a point as base phi instead of Zeckendorf.
        #[arg(long)]
        phi: bool,
    },
    /// Rows N, Z(N), beta(N), Lambda interval, beta-, gamma-, code.
    Table { from: u64, to: u64 },
    /// Run a named check, or "all". Defaults: 10^5 for number scans, 10^4
    /// for tree nodes, 10^6 for the conjecture scan, n <= 8 or 7.
    Verify {
        id: String,
        #[arg(long)]
        max_n: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_len: Option<usize>,
        /// Print every detail line.
        #[arg(long, short)]
        verbose: bool,
    },
    /// Occurrences of a block: suffix "100", prefix "101", central "00.1".
    Scan {
        kind: ScanKind,
        word: String,
        /// Horizon (default 10^4).
        #[arg(long, default_value_t = 10_000)]
        max_n: u64,
        /// Print at most this many terms.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Pi_2n from the codes of Xi_n, and optionally the rotation order.
    Perm {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        convention: Option<ConventionArg>,
    },
    /// Classify the start blocks of beta- by their difference words.
    Conjecture {
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        /// Horizon (default 10^6).
        #[arg(long, default_value_t = 1_000_000)]
        max_n: u64,
    },
}

enum Failure {
    Usage(String),
    Counterexample,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) | Error::CeilingMismatch { .. } | Error::Surgery { .. } => {
                eprintln!("error: {e}");
                Failure::Counterexample
            }
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Counterexample) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let jobs = cli
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let out = &mut io::stdout().lock();
    match &cli.command {
        Command::Encode { system, n } => encode(out, cli.format, *system, n),
        Command::Decode { word, phi } => decode(out, cli.format, word, *phi),
        Command::Table { from, to } => table(out, cli.format, *from, *to, jobs),
        Command::Verify {
            id,
            max_n,
            n,
            max_len,
            verbose,
        } => {
            let cfg = VerifyConfig {
                max_n: *max_n,
                n: *n,
                max_len: *max_len,
            };
            verify(out, cli.format, id, &cfg, *verbose, jobs)
        }
        Command::Scan {
            kind,
            word,
            max_n,
            count,
        } => scan(out, cli.format, *kind, word, *max_n, *count, jobs),
        Command::Perm { n, convention } => perm(out, cli.format, *n, *convention, jobs),
        Command::Conjecture { max_len, max_n } => {
            conjecture(out, cli.format, *max_len, *max_n, jobs)
        }
    }
}

fn parse_natural(s: &str) -> Result<Big, Failure> {
    let n: Big = s
        .parse()
        .map_err(|_| Failure::Usage(format!("expected a natural number, got {s:?}")))?;
    if n < Big::from(0) {
        return Err(Failure::Usage(format!(
            "expected a natural number, got {s}"
        )));
    }
    Ok(n)
}

fn emit_json<T: Serialize>(out: &mut impl Write, value: &T) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn csv_writer(out: &mut impl Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out as &mut dyn Write)
}

#[derive(Serialize)]
struct Encoded {
    n: String,
    system: &'static str,
    word: String,
}

fn encode(out: &mut impl Write, format: Format, system: System, n: &str) -> Outcome {
    let n = parse_natural(n)?;
    let (name, word) = match system {
        System::Phi => ("phi", phi_encode_recursive(&n)?.to_string()),
        System::Zeck => ("zeck", zeck_encode(&n)?.to_string()),
    };
    let rec = Encoded {
        n: n.to_string(),
        system: name,
        word,
    };
    match format {
        Format::Text => writeln!(out, "{}", rec.word)?,
        Format::Json => emit_json(out, &rec)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.serialize(&rec)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn decode(out: &mut impl Write, format: Format, word: &str, phi: bool) -> Outcome {
    let (name, n) = if phi || word.contains('.') {
        let e: PhiExpansion = word.parse()?;
        ("phi", phi_decode::<Big>(&e)?)
    } else {
        let w: DigitWord = word.parse()?;
        w.check_admissible()?;
        ("zeck", zeck_decode::<Big>(&w)?)
    };
    let rec = Encoded {
        n: n.to_string(),
        system: name,
        word: word.to_string(),
    };
    match format {
        Format::Text => writeln!(out, "{}", rec.n)?,
        Format::Json => emit_json(out, &rec)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.serialize(&rec)?;
            w.flush()?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Row {
    n: u64,
    z: String,
    beta: String,
    lambda: String,
    beta_minus: String,
    gamma_minus: String,
    code: String,
    essential: bool,
}

fn table(out: &mut impl Write, format: Format, from: u64, to: u64, jobs: usize) -> Outcome {
    if from < 1 || from > to {
        return Err(Failure::Usage(format!(
            "expected 1 <= from <= to, got {from} {to}"
        )));
    }
    let t = ExpansionTable::build(to + 2, jobs)?;
    let mut rows = Vec::new();
    for n in from..=to {
        let e = t.expansion(n);
        let (lambda, gamma, c, essential) = if n >= 2 {
            (
                format!("Lambda_{}", locate(&(n as i64))?),
                gamma_minus(&e)?.to_string(),
                code(n, &t)?.to_string(),
                matches!(trident_position(n, &t), Some(0 | 2)),
            )
        } else {
            (String::new(), String::new(), String::new(), false)
        };
        rows.push(Row {
            n,
            z: zeck_encode(&(n as i64))?.to_string(),
            beta: e.to_string(),
            lambda,
            beta_minus: e.right().to_string(),
            gamma_minus: gamma,
            code: c,
            essential,
        });
    }
    match format {
        Format::Text => {
            writeln!(
                out,
                "{:>6}  {:>12}  {:>24}  {:<10}  {:>12}  {:>12}  code",
                "N", "Z(N)", "beta(N)", "interval", "beta-", "gamma-"
            )?;
            for r in &rows {
                let mark = if r.essential || r.code.is_empty() {
                    ""
                } else {
                    "*"
                };
                writeln!(
                    out,
                    "{:>6}  {:>12}  {:>24}  {:<10}  {:>12}  {:>12}  {}{}",
                    r.n, r.z, r.beta, r.lambda, r.beta_minus, r.gamma_minus, r.code, mark
                )?;
            }
        }
        Format::Json => emit_json(out, &rows)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn verify(
    out: &mut impl Write,
    format: Format,
    id: &str,
    cfg: &VerifyConfig,
    verbose: bool,
    jobs: usize,
) -> Outcome {
    let ids: Vec<&str> = if id == "all" {
        CHECK_IDS.to_vec()
    } else {
        vec![id]
    };
    let mut bound = 0;
    for id in &ids {
        bound = bound.max(table_bound(id, cfg)?);
    }
    let t = ExpansionTable::build(bound, jobs)?;
    let mut reports: Vec<CheckReport> = Vec::new();
    for id in &ids {
        let r = run_check(id, cfg, &t)?;
        if format == Format::Text {
            writeln!(out, "{r}")?;
            if verbose || !r.passed {
                for d in &r.details {
                    writeln!(out, "    {d}")?;
                }
            }
        }
        reports.push(r);
    }
    match format {
        Format::Text => {}
        Format::Json if reports.len() == 1 => emit_json(out, &reports[0])?,
        Format::Json => emit_json(out, &reports)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["id", "passed", "summary", "first_counterexample"])?;
            for r in &reports {
                w.write_record([
                    r.id.as_str(),
                    if r.passed { "true" } else { "false" },
                    r.summary.as_str(),
                    r.first_counterexample.as_deref().unwrap_or(""),
                ])?;
            }
            w.flush()?;
        }
    }
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(Failure::Counterexample)
    }
}

fn scan(
    out: &mut impl Write,
    format: Format,
    kind: ScanKind,
    word: &str,
    max_n: u64,
    count: Option<usize>,
    jobs: usize,
) -> Outcome {
    let t = ExpansionTable::build(max_n, jobs)?;
    let report = match kind {
        ScanKind::Suffix => {
            let w: DigitWord = word.parse()?;
            let scanned = scan_suffix(&w, max_n, &t)?;
            let predicted = predict_suffix(&w, &scanned)?;
            OccurrenceReport::new(w.to_string(), BlockKind::Suffix, max_n, scanned, predicted)?
        }
        ScanKind::Prefix => {
            let w: DigitWord = word.trim_start_matches('.').parse()?;
            let scanned = scan_prefix(&w, max_n, &t)?;
            OccurrenceReport::new(
                format!(".{w}"),
                BlockKind::Prefix,
                max_n,
                scanned,
                predict_prefix_small(&w),
            )?
        }
        ScanKind::Central => {
            let p: CentralPattern = word.parse()?;
            let scanned = scan_central(&p.left, &p.right, max_n, &t)?;
            OccurrenceReport::new(p.to_string(), BlockKind::Central, max_n, scanned, None)?
        }
    };
    let shown: &[u64] = match count {
        Some(k) => &report.scanned[..k.min(report.scanned.len())],
        None => &report.scanned,
    };
    match format {
        Format::Text => {
            let terms: Vec<String> = shown.iter().map(u64::to_string).collect();
            writeln!(out, "{}", terms.join(" "))?;
            let predicted = report
                .predicted
                .as_ref()
                .map_or("-".to_string(), |p| p.to_string());
            writeln!(
                out,
                "# {} {} to {}: {}",
                report.block, predicted, max_n, report.verdict
            )?;
        }
        Format::Json => {
            let mut r = report.clone();
            r.scanned = shown.to_vec();
            emit_json(out, &r)?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["index", "n"])?;
            for (i, n) in shown.iter().enumerate() {
                w.write_record([(i + 1).to_string(), n.to_string()])?;
            }
            w.flush()?;
        }
    }
    if matches!(report.verdict, basephi::Verdict::Mismatch { .. }) {
        return Err(Failure::Counterexample);
    }
    Ok(())
}

#[derive(Serialize)]
struct PermOutput {
    n: usize,
    values: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rotation: Option<basephi::occurrence::RotationPermutation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rotation_matches: Option<bool>,
}

fn perm(
    out: &mut impl Write,
    format: Format,
    n: usize,
    convention: Option<ConventionArg>,
    jobs: usize,
) -> Outcome {
    if n < 1 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let bound = basephi::structure::xi_interval::<i64>(n)?.end as u64;
    let t = ExpansionTable::build(bound, jobs)?;
    let p = basephi::occurrence::pi_permutation(n, &t)?;
    let rotation = convention
        .map(|c| rotation_permutation(n, c.into()))
        .transpose()?;
    let matches = rotation.as_ref().map(|r| r.values == p.values);
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    match format {
        Format::Text => {
            writeln!(out, "{}", join(&p.values))?;
            if let Some(r) = &rotation {
                writeln!(
                    out,
                    "# intermediate ({}): {}",
                    r.convention,
                    join(&r.intermediate)
                )?;
                let verdict = if matches == Some(true) {
                    "MATCH"
                } else {
                    "MISMATCH"
                };
                writeln!(
                    out,
                    "# rotation ({}): {} {verdict}",
                    r.convention,
                    join(&r.values)
                )?;
            }
        }
        Format::Json => emit_json(
            out,
            &PermOutput {
                n,
                values: p.values.clone(),
                rotation,
                rotation_matches: matches,
            },
        )?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["j", "value"])?;
            for (j, v) in p.values.iter().enumerate() {
                w.write_record([(j + 1).to_string(), v.to_string()])?;
            }
            w.flush()?;
        }
    }
    if matches == Some(false) {
        return Err(Failure::Counterexample);
    }
    Ok(())
}

fn conjecture(
    out: &mut impl Write,
    format: Format,
    max_len: usize,
    max_n: u64,
    jobs: usize,
) -> Outcome {
    let t = ExpansionTable::build(max_n + 2, jobs)?;
    let entries: Vec<ConjectureEntry> = conjecture_scan(max_len, max_n, &t)?;
    let supported = entries.iter().all(ConjectureEntry::supports);
    match format {
        Format::Text => {
            for e in &entries {
                writeln!(out, "{e}")?;
            }
            if max_len >= 4 {
                writeln!(out, "# {}", conjecture_check(&entries))?;
            }
        }
        Format::Json => emit_json(out, &entries)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record([
                "word",
                "structure",
                "position",
                "terms",
                "class",
                "a",
                "b",
                "lucas",
            ])?;
            for e in &entries {
                for s in &e.sequences {
                    let (tag, a, b) = match &s.class {
                        Some(c) => (c.tag.to_string(), c.a.to_string(), c.b.to_string()),
                        None => ("UNDERSAMPLED".to_string(), String::new(), String::new()),
                    };
                    w.write_record([
                        e.word.clone(),
                        format!("{:?}", e.structure).to_lowercase(),
                        s.position.map_or(String::new(), |p| p.to_string()),
                        s.terms.to_string(),
                        tag,
                        a,
                        b,
                        s.lucas_letters.to_string(),
                    ])?;
                }
            }
            w.flush()?;
        }
    }
    if supported {
        Ok(())
    } else {
        Err(Failure::Counterexample)
    }
}
