use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dsl_core::brackets::{ari, ihara};
use dsl_core::freelie::BasisRecord;
use dsl_core::stabilizers::golden::{check_or_record, golden_path, GoldenOutcome};
use dsl_core::stabilizers::{
    coderivation_defect, tau_defect, Claim, Space, VerificationReport, Workbench,
};
use dsl_core::{parse_poly, Alphabet};

#[derive(Parser)]
#[command(name = "dsl", version, about = "Exact word-algebra workbench")]
struct Cli {
    /// Worker threads for per-bidegree tasks (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum DefectKind {
    Coderivation,
    Tau,
}

#[derive(Clone, Copy, ValueEnum)]
enum BracketKind {
    Ihara,
    Ari,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dimension table of a space for all weights up to the cap.
    Dims {
        #[arg(long)]
        space: Space,
        #[arg(long, env = "DSL_MAX_WEIGHT")]
        max_weight: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Canonical basis of one bigraded component.
    Basis {
        #[arg(long)]
        space: Space,
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        depth: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Runs a claim and exits 0 iff every check passes.
    Verify {
        #[arg(long)]
        claim: Claim,
        /// Overrides the claim's default weight cap.
        #[arg(long, env = "DSL_MAX_WEIGHT")]
        max_weight: Option<u32>,
        /// Golden file, or a directory holding `<claim>-<cap>.json`.
        #[arg(long)]
        golden: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Omit elapsed times so that output is byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
        /// List every check, not only failures.
        #[arg(long, short)]
        verbose: bool,
    },
    /// Evaluates a defect of the action of `psi` on `arg`.
    Defect {
        #[arg(long, value_enum)]
        kind: DefectKind,
        #[arg(long, allow_hyphen_values = true)]
        psi: String,
        #[arg(long, allow_hyphen_values = true)]
        arg: String,
    },
    /// Evaluates a bracket of two Lie elements.
    Bracket {
        #[arg(long, value_enum)]
        kind: BracketKind,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Debug)]
enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// A check failed: exit code 1.
    Verification,
    Io(io::Error),
}

impl From<dsl_core::Error> for Failure {
    fn from(e: dsl_core::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e)
    }
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

#[derive(Serialize)]
struct DimRow {
    m: u32,
    n: u32,
    dim: usize,
}

#[derive(Serialize)]
struct DimTable {
    space: String,
    max_weight: u32,
    dims: Vec<DimRow>,
}

fn dims(out: &mut Out, space: Space, max_weight: u32, format: Format) -> Result<(), Failure> {
    let comps = Workbench::new().components(space, max_weight);
    let rows: Vec<DimRow> = comps
        .iter()
        .map(|c| DimRow {
            m: c.bidegree.weight,
            n: c.bidegree.depth,
            dim: c.dim(),
        })
        .collect();
    match format {
        Format::Csv => {
            writeln!(out, "space,m,n,dim")?;
            for r in &rows {
                writeln!(out, "{space},{},{},{}", r.m, r.n, r.dim)?;
            }
        }
        Format::Json => {
            let t = DimTable {
                space: space.to_string(),
                max_weight,
                dims: rows,
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&t).expect("serializable")
            )?;
        }
        Format::Text => {
            writeln!(out, "dim {space}[m,n]")?;
            write!(out, "{:>4}", "m\\n")?;
            for n in 0..=max_weight {
                write!(out, "{n:>6}")?;
            }
            writeln!(out)?;
            for m in 1..=max_weight {
                write!(out, "{m:>4}")?;
                for r in rows.iter().filter(|r| r.m == m) {
                    write!(out, "{:>6}", r.dim)?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

fn basis(out: &mut Out, space: Space, m: u32, n: u32, format: Format) -> Result<(), Failure> {
    if m == 0 || n > m {
        return Err(Failure::Usage(format!(
            "no component ({m},{n}); need 1 <= m and n <= m"
        )));
    }
    let b = Workbench::new().basis(space, m, n);
    match format {
        Format::Json => {
            let rec = b.record();
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&rec).expect("serializable")
            )?;
        }
        Format::Csv => return Err(Failure::Usage("basis supports text and json".into())),
        Format::Text => {
            for e in &b.elements {
                writeln!(out, "{e}")?;
            }
        }
    }
    Ok(())
}

fn golden_file(path: &Path, claim: Claim, cap: u32) -> PathBuf {
    if path.extension().is_some_and(|e| e == "json") {
        path.to_path_buf()
    } else {
        golden_path(path, claim.name(), cap)
    }
}

fn write_report(out: &mut Out, r: &VerificationReport, verbose: bool) -> io::Result<()> {
    match r.elapsed_ms {
        Some(ms) => writeln!(out, "{} ({ms} ms)", r.summary())?,
        None => writeln!(out, "{}", r.summary())?,
    }
    for it in r.items.iter().filter(|i| verbose || !i.passed) {
        let mark = if it.passed { "ok  " } else { "FAIL" };
        write!(out, "  {mark} {}", it.label)?;
        if let Some(d) = &it.detail {
            write!(out, ": {d}")?;
        }
        writeln!(out)?;
        if let Some(w) = &it.witness {
            writeln!(out, "       witness: {w}")?;
        }
    }
    for n in &r.notes {
        writeln!(out, "  note: {n}")?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify(
    out: &mut Out,
    claim: Claim,
    max_weight: Option<u32>,
    golden: Option<&Path>,
    format: Format,
    no_timing: bool,
    verbose: bool,
) -> Result<(), Failure> {
    if max_weight == Some(0) {
        return Err(Failure::Usage("--max-weight must be positive".into()));
    }
    let mut reports = Workbench::new().verify_claim(claim, max_weight);
    if no_timing {
        reports = reports
            .into_iter()
            .map(VerificationReport::without_timing)
            .collect();
    }
    let mut ok = reports.iter().all(VerificationReport::passed);

    let mut golden_line = None;
    if let Some(g) = golden {
        let cap = max_weight.unwrap_or_else(|| claim.default_max_weight());
        let path = golden_file(g, claim, cap);
        let records: Vec<BasisRecord> = reports.iter().flat_map(|r| r.bases.clone()).collect();
        golden_line = Some(if !ok {
            format!(
                "golden {}: not written, verification failed",
                path.display()
            )
        } else {
            match check_or_record(&path, &records)? {
                GoldenOutcome::Recorded => format!("golden {}: recorded", path.display()),
                GoldenOutcome::Matched => format!("golden {}: matched", path.display()),
                GoldenOutcome::Mismatch(d) => {
                    ok = false;
                    format!("golden {}: MISMATCH\n  {}", path.display(), d.join("\n  "))
                }
            }
        });
    }

    match format {
        Format::Json => {
            let mut reports = reports;
            if !verbose {
                for r in &mut reports {
                    r.bases.clear();
                }
            }
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&reports).expect("serializable")
            )?;
            if let Some(l) = golden_line {
                eprintln!("{l}");
            }
        }
        Format::Csv => return Err(Failure::Usage("verify supports text and json".into())),
        Format::Text => {
            for r in &reports {
                write_report(out, r, verbose)?;
            }
            if let Some(l) = golden_line {
                writeln!(out, "{l}")?;
            }
            writeln!(out, "{}", if ok { "PASS" } else { "FAIL" })?;
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli, out: &mut Out) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Dims {
            space,
            max_weight,
            format,
        } => dims(out, space, max_weight, format),
        Cmd::Basis {
            space,
            weight,
            depth,
            format,
        } => basis(out, space, weight, depth, format),
        Cmd::Verify {
            claim,
            max_weight,
            golden,
            format,
            no_timing,
            verbose,
        } => verify(
            out,
            claim,
            max_weight,
            golden.as_deref(),
            format,
            no_timing,
            verbose,
        ),
        Cmd::Defect { kind, psi, arg } => {
            match kind {
                DefectKind::Coderivation => {
                    let psi = parse_poly(&psi, Some(Alphabet::X))?;
                    let u = parse_poly(&arg, Some(Alphabet::Y))?;
                    writeln!(out, "{}", coderivation_defect(&psi, &u)?)?;
                }
                DefectKind::Tau => {
                    let psi = parse_poly(&psi, Some(Alphabet::B))?;
                    let u = parse_poly(&arg, Some(Alphabet::B))?;
                    writeln!(out, "{}", tau_defect(&psi, &u)?)?;
                }
            }
            Ok(())
        }
        Cmd::Bracket { kind, a, b } => {
            let (alpha, f): (Alphabet, fn(&_, &_) -> _) = match kind {
                BracketKind::Ihara => (Alphabet::X, ihara),
                BracketKind::Ari => (Alphabet::B, ari),
            };
            let a = parse_poly(&a, Some(alpha))?;
            let b = parse_poly(&b, Some(alpha))?;
            writeln!(out, "{}", f(&a, &b)?)?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let res = run(cli, &mut out);
    let flushed = out.flush();
    match (res, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Usage(m)), _) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        (Err(Failure::Verification), _) => ExitCode::from(1),
        (Err(Failure::Io(e)), _) | (Ok(()), Err(e)) => {
            if e.kind() == io::ErrorKind::BrokenPipe {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
