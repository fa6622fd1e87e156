mod chart;
mod record;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ginkit::groebner::{oracle_gin_detailed, OracleConfig};
use ginkit::hilbert::{default_t_max, hilbert_in, hilbert_j};
use ginkit::verify::{verify, CheckKind, CheckStatus, VerifyOptions, VerifyReport};
use ginkit::{compute_invariants, dispatch_case, to_generators, CIParams, GinError, OracleError};
use rayon::prelude::*;
use serde::Serialize;

use record::OutputRecord;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "ginkit",
    version,
    about = "Generic initial ideals of complete-intersection powers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariants and generators of gin(I^n)
    Compute {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include wall-clock time in the output
        #[arg(long)]
        timing: bool,
    },
    /// Run independent checks on the computed invariants
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        /// Comma-separated subset of structure,hilbert,closed-form,betti,oracle
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<CheckKind>>,
        /// Last degree of the Hilbert function sweep (default lambda_0 + m)
        #[arg(long)]
        t_max: Option<i64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, hide = true)]
        perturb_index: Option<usize>,
        #[arg(long, hide = true, default_value_t = 1, allow_hyphen_values = true)]
        perturb_delta: i64,
    },
    /// Check every tuple in a parameter box
    Sweep {
        #[arg(long)]
        alpha_max: u32,
        #[arg(long)]
        beta_max: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        vars_list: Vec<u32>,
        #[arg(long)]
        parallel: bool,
        #[arg(long, value_enum, default_value_t = SweepFormat::Text)]
        format: SweepFormat,
    },
    /// Draw the gap sequence one glyph per gap, split by phase
    Chart {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Compute gin(I^n) directly with a Groebner basis (small cases only)
    Oracle {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = SweepFormat::Text)]
        format: SweepFormat,
    },
    /// Print H_{I^n}(t) and H_J(t) pointwise
    Hilbert {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 0)]
        t_min: i64,
        #[arg(long)]
        t_max: Option<i64>,
        #[arg(long, value_enum, default_value_t = SweepFormat::Text)]
        format: SweepFormat,
    },
}

#[derive(Args)]
struct ParamArgs {
    /// Degree of the first generator
    #[arg(long)]
    alpha: u32,
    /// Degree of the second generator
    #[arg(long)]
    beta: u32,
    /// The power n
    #[arg(long)]
    power: u32,
    /// Number of variables m
    #[arg(long)]
    vars: u32,
}

impl ParamArgs {
    fn params(&self) -> Result<CIParams, GinError> {
        CIParams::new(self.alpha, self.beta, self.power, self.vars)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    M2,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFormat {
    Text,
    Json,
}

fn usage_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute {
            params,
            format,
            timing,
        } => cmd_compute(&params, format, timing),
        Command::Verify {
            params,
            checks,
            t_max,
            seed,
            format,
            perturb_index,
            perturb_delta,
        } => {
            let opts = VerifyOptions {
                checks: checks.unwrap_or_else(|| CheckKind::DEFAULT.to_vec()),
                t_max,
                oracle: oracle_config(seed),
                perturb: perturb_index.map(|i| (i, perturb_delta)),
            };
            cmd_verify(&params, &opts, format)
        }
        Command::Sweep {
            alpha_max,
            beta_max,
            n_max,
            vars_list,
            parallel,
            format,
        } => cmd_sweep(alpha_max, beta_max, n_max, &vars_list, parallel, format),
        Command::Chart { params } => cmd_chart(&params),
        Command::Oracle {
            params,
            seed,
            format,
        } => cmd_oracle(&params, seed, format),
        Command::Hilbert {
            params,
            t_min,
            t_max,
            format,
        } => cmd_hilbert(&params, t_min, t_max, format),
    }
}

fn oracle_config(seed: u64) -> OracleConfig {
    let mut cfg = OracleConfig::with_seed(seed);
    if let Some(cap) = std::env::var("GINKIT_MAX_BASIS")
        .ok()
        .and_then(|v| v.parse().ok())
    {
        cfg.max_basis_size = cap;
    }
    cfg
}

fn cmd_compute(args: &ParamArgs, format: Format, timing: bool) -> ExitCode {
    let params = match args.params() {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    let start = Instant::now();
    let seq = match compute_invariants(&params) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAIL);
        }
    };
    let mut rec = OutputRecord::new(dispatch_case(&params), &seq, Vec::new());
    if timing {
        rec.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    match format {
        Format::Text => print!("{}", rec.to_text()),
        Format::Json => println!("{}", rec.to_json()),
        Format::M2 => print!("{}", rec.to_m2()),
    }
    ExitCode::SUCCESS
}

fn report_text(rep: &VerifyReport) -> String {
    let mut out = format!("{}  case {}  k={}\n", rep.seq.params, rep.case, rep.seq.k());
    for c in &rep.checks {
        let status = match c.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "skipped",
        };
        out += &format!("{:<12} {status}", c.check.name());
        if let Some(d) = &c.detail {
            out += &format!("  ({d})");
        }
        out.push('\n');
    }
    out += if rep.passed() {
        "all checks passed\n"
    } else {
        "verification FAILED\n"
    };
    out
}

fn cmd_verify(args: &ParamArgs, opts: &VerifyOptions, format: Format) -> ExitCode {
    let params = match args.params() {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    let rep = match verify(&params, opts) {
        Ok(r) => r,
        Err(e @ GinError::IndexOutOfRange { .. }) => return usage_error(e),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAIL);
        }
    };
    match format {
        Format::Json => {
            println!(
                "{}",
                OutputRecord::new(rep.case, &rep.seq, rep.checks.clone()).to_json()
            )
        }
        Format::Text | Format::M2 => print!("{}", report_text(&rep)),
    }
    if rep.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

#[derive(Serialize)]
struct SweepRow {
    params: CIParams,
    case: ginkit::CaseTag,
    passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    failures: Vec<ginkit::verify::CheckResult>,
}

fn cmd_sweep(
    alpha_max: u32,
    beta_max: u32,
    n_max: u32,
    vars: &[u32],
    parallel: bool,
    format: SweepFormat,
) -> ExitCode {
    if let Some(bad) = vars.iter().find(|&&m| m < 2) {
        return usage_error(format!(
            "--vars-list entries must be at least 2 (got {bad})"
        ));
    }
    let mut tuples = Vec::new();
    for alpha in 1..=alpha_max {
        for beta in alpha..=beta_max {
            for n in 1..=n_max {
                for &m in vars {
                    tuples.push(CIParams { alpha, beta, n, m });
                }
            }
        }
    }
    let run = |p: &CIParams| -> SweepRow {
        let case = dispatch_case(p);
        let failures = match verify(p, &VerifyOptions::default()) {
            Ok(rep) => rep.failures().cloned().collect(),
            Err(e) => vec![ginkit::verify::CheckResult {
                check: CheckKind::Structure,
                status: CheckStatus::Fail,
                detail: Some(e.to_string()),
            }],
        };
        SweepRow {
            params: *p,
            case,
            passed: failures.is_empty(),
            failures,
        }
    };
    let mut rows: Vec<SweepRow> = if parallel {
        tuples.par_iter().map(run).collect()
    } else {
        tuples.iter().map(run).collect()
    };
    rows.sort_by_key(|r| r.params);
    let mut histogram: BTreeMap<String, usize> = BTreeMap::new();
    for r in &rows {
        *histogram.entry(r.case.to_string()).or_default() += 1;
    }
    let failed: Vec<&SweepRow> = rows.iter().filter(|r| !r.passed).collect();
    match format {
        SweepFormat::Json => {
            for r in &rows {
                println!("{}", serde_json::to_string(r).expect("row serializes"));
            }
            let summary = serde_json::json!({
                "summary": {"tuples": rows.len(), "failures": failed.len(), "cases": histogram}
            });
            println!("{summary}");
        }
        SweepFormat::Text => {
            println!("tuples: {}", rows.len());
            for (case, count) in &histogram {
                println!("  {case:<20} {count}");
            }
            for r in &failed {
                for f in &r.failures {
                    println!(
                        "FAIL {} {}: {}",
                        r.params,
                        f.check,
                        f.detail.as_deref().unwrap_or("")
                    );
                }
            }
            println!("failures: {}", failed.len());
        }
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn cmd_chart(args: &ParamArgs) -> ExitCode {
    let params = match args.params() {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    match compute_invariants(&params) {
        Ok(seq) => {
            print!("{}", chart::render(&params, dispatch_case(&params), &seq));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}

fn cmd_oracle(args: &ParamArgs, seed: u64, format: SweepFormat) -> ExitCode {
    let params = match args.params() {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    let predicted = match compute_invariants(&params).and_then(|s| to_generators(&s)) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAIL);
        }
    };
    let out = match oracle_gin_detailed(&params, &oracle_config(seed)) {
        Ok(o) => o,
        Err(e @ GinError::Oracle(OracleError::OutOfScope(_))) => return usage_error(e),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAIL);
        }
    };
    let agree = out.ideal == predicted;
    match format {
        SweepFormat::Json => {
            let v = serde_json::json!({
                "params": params,
                "seed": seed,
                "coord_seeds": [out.coord_seeds.0, out.coord_seeds.1],
                "basis_size": out.basis_size,
                "oracle": out.ideal.generator_strings(),
                "predicted": predicted.generator_strings(),
                "agree": agree,
            });
            println!("{v}");
        }
        SweepFormat::Text => {
            println!("{params}  seed {seed}");
            println!("groebner:  {}", out.ideal);
            println!("predicted: {predicted}");
            println!("{}", if agree { "agree" } else { "DISAGREE" });
        }
    }
    if agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn cmd_hilbert(args: &ParamArgs, t_min: i64, t_max: Option<i64>, format: SweepFormat) -> ExitCode {
    let params = match args.params() {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    let ideal = match compute_invariants(&params).and_then(|s| to_generators(&s)) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAIL);
        }
    };
    let t_max = t_max.unwrap_or_else(|| default_t_max(&params));
    let m = params.m();
    let rows: Vec<(i64, String, String)> = (t_min..=t_max)
        .map(|t| {
            (
                t,
                hilbert_in(&params, t).to_string(),
                hilbert_j(&ideal, m, t).to_string(),
            )
        })
        .collect();
    match format {
        SweepFormat::Json => {
            let values: Vec<_> = rows
                .iter()
                .map(|(t, a, b)| serde_json::json!({"t": t, "h_in": a, "h_j": b}))
                .collect();
            println!(
                "{}",
                serde_json::json!({"params": params, "values": values})
            );
        }
        SweepFormat::Text => {
            println!("{:>6} {:>20} {:>20}", "t", "H_I^n(t)", "H_J(t)");
            for (t, a, b) in &rows {
                println!("{t:>6} {a:>20} {b:>20}");
            }
        }
    }
    if rows.iter().all(|(_, a, b)| a == b) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
