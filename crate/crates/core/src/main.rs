//! Thin command-line front end over the `smith_thom` library: JSON/table
//! rendering and file I/O only, no computation of its own.
//!
//! Exit codes: 0 success, 1 profile-validation violations (listed on
//! stderr), 2 malformed input or arguments (one `error:` line on stderr).

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use smith_thom::{
    classify, deficiency_square, hilbert_square, maximality_verdict, profile::Violation,
    smith_report, strata_report, BettiVector, CompleteIntersection, RealVarietyProfile, ScanRange,
    SimplicialInvolution, StrataReport, Verdict,
};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "smith-thom",
    about = "Exact Smith theory and Hilbert-square deficiency calculators",
    version
)]
struct Cli {
    /// Output format (csv applies to `classify` only)
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report to a file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Smith report of a simplicial involution read from a JSON complex file
    Smith { complex: PathBuf },
    /// Invariants of a complete intersection
    Ci {
        /// Ambient projective dimension N
        #[arg(long)]
        ambient: u32,
        /// Comma-separated multidegree, e.g. 3 or 2,2 (empty for linear)
        #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "")]
        degrees: Vec<String>,
    },
    /// Validate a real-variety profile JSON file
    ProfileCheck { profile: PathBuf },
    /// Hilbert-square deficiency report of a profile JSON file
    Deficiency { profile: PathBuf },
    /// Scan even-dimensional complete intersections for h^{k,k} = b_2k
    Classify {
        #[arg(long)]
        max_dim: usize,
        #[arg(long)]
        max_codim: usize,
        #[arg(long)]
        max_degree: u32,
    },
    /// Fano-variety deficiency of a cubic from defi(X) and defi(X^[2])
    Fano {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        defi_x: u64,
        #[arg(long)]
        defi_square: u64,
    },
}

enum Failure {
    /// exit 2
    Malformed(String),
    /// exit 1
    Violations(Vec<Violation>),
}

impl From<smith_thom::Error> for Failure {
    fn from(e: smith_thom::Error) -> Self {
        Failure::Malformed(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let first = e.to_string();
            let first = first.lines().next().unwrap_or("invalid arguments");
            let first = first.strip_prefix("error: ").unwrap_or(first);
            eprintln!("error: {first}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violations(violations)) => {
            for v in &violations {
                eprintln!("violation: {v}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Malformed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Smith { complex } => {
            let k: SimplicialInvolution = read_json(complex)?;
            let report = smith_report(&k)?;
            if !report.exactness_verified {
                eprintln!("warning: Smith-sequence exactness checks failed (engine anomaly)");
            }
            render(&cli, &report, |r| {
                let mut s = String::new();
                s += &format!("betti_x            {}\n", r.betti_x);
                s += &format!("betti_f            {}\n", r.betti_f);
                s += &format!("betti_rel          {}\n", r.betti_rel);
                s += &format!("coker_dims         {:?}\n", r.coker_dims);
                s += &format!("deficiency         {}\n", r.deficiency);
                s += &format!("maximal            {}\n", r.maximal);
                s += &format!("exactness_verified {}\n", r.exactness_verified);
                s
            })?
        }
        Command::Ci { ambient, degrees } => {
            let degrees: Vec<u32> = degrees
                .iter()
                .filter(|s| !s.trim().is_empty())
                .map(|s| {
                    s.trim()
                        .parse::<u32>()
                        .map_err(|_| Failure::Malformed(format!("bad degree {s:?}")))
                })
                .collect::<Result<_, _>>()?;
            let ci = CompleteIntersection::new(*ambient, degrees)?;
            let report = ci_report(&ci)?;
            render(&cli, &report, |r| {
                let mut s = String::new();
                s += &format!("variety              {}\n", r.display);
                s += &format!("dimension            {}\n", r.n);
                s += &format!("euler_characteristic {}\n", r.euler_characteristic);
                s += &format!("betti                {}\n", r.betti);
                s += &format!("hodge_middle_row     {:?}\n", r.hodge_middle_row);
                if let Some(eq) = r.hkk_equals_b2k {
                    s += &format!("hkk_equals_b2k       {eq}\n");
                }
                s
            })?
        }
        Command::ProfileCheck { profile } => {
            let p: RealVarietyProfile = read_json(profile)?;
            let violations = p.validate();
            let identities = if violations.is_empty() && p.flags.maximal {
                Some(p.check_betti_identities()?)
            } else {
                None
            };
            let report = ProfileCheckReport {
                valid: violations.is_empty(),
                violations: violations.iter().map(|v| v.to_string()).collect(),
                betti_identities: identities,
            };
            render(&cli, &report, |r| {
                let mut s = format!("valid            {}\n", r.valid);
                if let Some(id) = r.betti_identities {
                    s += &format!("betti_identities {id}\n");
                }
                for v in &r.violations {
                    s += &format!("violation: {v}\n");
                }
                s
            })?;
            if !violations.is_empty() {
                return Err(Failure::Violations(violations));
            }
        }
        Command::Deficiency { profile } => {
            let p: RealVarietyProfile = read_json(profile)?;
            let violations = p.validate();
            if !violations.is_empty() {
                return Err(Failure::Violations(violations));
            }
            let report = deficiency_output(&p)?;
            render(&cli, &report, |r| {
                let mut s = String::new();
                match r.deficiency {
                    Some(d) => s += &format!("deficiency  {d}\n"),
                    None => s += "deficiency  not determined by the implemented criteria\n",
                }
                s += &format!("verdict     {}\n", r.verdict);
                s += &format!("reasons     {}\n", r.reasons.join(", "));
                if let Some(t) = r.total_square_complex {
                    let tag = if r.total_square_is_exact == Some(true) {
                        "exact"
                    } else {
                        "lower bound"
                    };
                    s += &format!("beta_total(X^[2])  {t} ({tag})\n");
                }
                for (k, b) in &r.per_degree {
                    s += &format!("beta_{k}(X^[2](R))  {b}\n");
                }
                s
            })?
        }
        Command::Classify {
            max_dim,
            max_codim,
            max_degree,
        } => {
            let rows = classify::scan(&ScanRange {
                max_dim: *max_dim,
                max_codim: *max_codim,
                max_degree: *max_degree,
            })?;
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&rows)
                    .map(|s| s + "\n")
                    .map_err(|e| Failure::Malformed(e.to_string()))?,
                Format::Csv => classify::rows_to_csv(&rows),
                Format::Table => {
                    let mut s = format!(
                        "{:<8} {:<12} {:<4} {:<10} {:<10} {:<6} verdict\n",
                        "ambient", "degrees", "n", "h_kk", "b_2k", "equal"
                    );
                    for r in &rows {
                        let degrees = r
                            .degrees
                            .iter()
                            .map(|d| d.to_string())
                            .collect::<Vec<_>>()
                            .join(",");
                        let degrees = if degrees.is_empty() {
                            "linear".into()
                        } else {
                            degrees
                        };
                        s += &format!(
                            "{:<8} {:<12} {:<4} {:<10} {:<10} {:<6} {}\n",
                            r.ambient, degrees, r.n, r.h_kk, r.b_2k, r.equal, r.verdict
                        );
                    }
                    s
                }
            };
            emit(&cli, text)?;
        }
        Command::Fano {
            n,
            defi_x,
            defi_square,
        } => {
            let fano = hilbert_square::cubic_fano_deficiency(*n, *defi_x, *defi_square)?;
            let report = FanoReport {
                n: *n,
                defi_x: *defi_x,
                defi_square: *defi_square,
                fano_deficiency: fano,
            };
            render(&cli, &report, |r| {
                format!(
                    "defi(X)      {}\ndefi(X^[2])  {}\ndefi(F(X))   {}\n",
                    r.defi_x, r.defi_square, r.fano_deficiency
                )
            })?
        }
    }
    Ok(())
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Malformed(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Malformed(format!("cannot parse {}: {e}", path.display())))
}

fn render<T: Serialize>(
    cli: &Cli,
    report: &T,
    table: impl Fn(&T) -> String,
) -> Result<(), Failure> {
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(report)
            .map(|s| s + "\n")
            .map_err(|e| Failure::Malformed(e.to_string()))?,
        Format::Table => table(report),
        Format::Csv => {
            return Err(Failure::Malformed(
                "csv format is only available for the classify subcommand".into(),
            ))
        }
    };
    emit(cli, text)
}

fn emit(cli: &Cli, text: String) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Malformed(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct CiReport {
    display: String,
    ambient: u32,
    degrees: Vec<u32>,
    n: usize,
    euler_characteristic: i64,
    betti: BettiVector,
    hodge_middle_row: Vec<u64>,
    hkk_equals_b2k: Option<bool>,
}

fn ci_report(ci: &CompleteIntersection) -> Result<CiReport, Failure> {
    if ci.dim() < 1 {
        return Err(Failure::Malformed(
            "the complete intersection must have dimension n ≥ 1".into(),
        ));
    }
    let hodge = smith_thom::hodge_numbers(ci)?;
    let hkk = if ci.dim() % 2 == 0 {
        Some(smith_thom::hkk_equals_b2k(ci)?)
    } else {
        None
    };
    Ok(CiReport {
        display: ci.to_string(),
        ambient: ci.ambient(),
        degrees: ci.degrees().to_vec(),
        n: ci.dim(),
        euler_characteristic: smith_thom::euler_characteristic(ci),
        betti: smith_thom::complex_betti(ci)?,
        hodge_middle_row: hodge.middle_row(),
        hkk_equals_b2k: hkk,
    })
}

#[derive(Serialize)]
struct ProfileCheckReport {
    valid: bool,
    violations: Vec<String>,
    betti_identities: Option<bool>,
}

#[derive(Serialize)]
struct DeficiencyOutput {
    deficiency: Option<u64>,
    verdict: Verdict,
    reasons: Vec<String>,
    total_square_complex: Option<u64>,
    total_square_is_exact: Option<bool>,
    strata: Option<StrataReport>,
    per_degree: BTreeMap<usize, u64>,
}

fn deficiency_output(p: &RealVarietyProfile) -> Result<DeficiencyOutput, Failure> {
    let verdict = maximality_verdict(p)?;
    if p.flags.maximal && p.flags.ci.is_some() && p.n >= 2 {
        let report = deficiency_square(p)?;
        let strata = strata_report(p)?;
        Ok(DeficiencyOutput {
            deficiency: Some(report.deficiency),
            verdict: report.verdict,
            reasons: report.reasons,
            total_square_complex: Some(report.total_square_complex),
            total_square_is_exact: Some(report.total_square_is_exact),
            strata: Some(strata),
            per_degree: report.per_degree_real_betti,
        })
    } else {
        let strata = if p.flags.maximal {
            Some(strata_report(p)?)
        } else {
            None
        };
        Ok(DeficiencyOutput {
            deficiency: None,
            verdict: verdict.verdict,
            reasons: verdict.reasons,
            total_square_complex: p
                .flags
                .torsion2_free
                .then(|| hilbert_square::betti_total_square_complex(p.n, &p.complex_betti, true).0),
            total_square_is_exact: p.flags.torsion2_free.then_some(true),
            strata,
            per_degree: BTreeMap::new(),
        })
    }
}

#[derive(Serialize)]
struct FanoReport {
    n: usize,
    defi_x: u64,
    defi_square: u64,
    fano_deficiency: u64,
}
