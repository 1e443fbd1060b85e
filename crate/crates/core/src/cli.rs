//! Command-line front end. Every command produces one JSON report and a
//! short human summary. Without `--output` the report goes to stdout and the
//! summary to stderr; with it, the report is written to the file and the
//! summary goes to stdout.
//!
//! Exit codes: 0 all checks passed, 1 survivor or violated property,
//! 2 invalid input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::divisibility::{
    check_nt, check_phi_membership, phi_value_at_root, random_nt_instance, OmegaInstance,
};
use crate::error::{Error, Result};
use crate::help::{
    case::Verdict, check_case_with_workers, explore_eps, verify_order_with_workers, Conclusion,
    OrderVerdict, SCHEMA_VERSION,
};
use crate::numtheory::euler_phi;
use crate::psl2::{admissible_orders, group_profile, GroupProfile};
use crate::realbasis::{basis_determinant, basis_indices, moebius_expansion_holds};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "zassenhaus",
    version,
    about = "Exact checks and case analysis for torsion units of ZPSL(2,q)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Default)]
pub struct Common {
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Worker threads (0: one per core)
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    /// Seed recorded in the report and used by randomized commands
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand, Clone)]
pub enum Command {
    /// Order-level verdicts for PSL(2,q) or a single order n
    Verify {
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Eliminate (or not) the divisor d for units of order n
    Case {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        /// Print every survivor in the summary
        #[arg(long)]
        list_survivors: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Is Φ_{n p^m}(ζ_n) divisible by p?
    LemmaPhi {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Check the divisibility implication on an instance file, or on a
    /// random instance built from --n, --d and --seed
    NtCheck {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Real basis indices and change-of-basis determinant for odd n
    Basis {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Group order, element orders and admissible unit orders of PSL(2,q)
    Orders {
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Bounded search for partial augmentations with integral multiplicities
    ExploreEps {
        #[arg(long)]
        n: u64,
        /// Largest character index used by the filter
        #[arg(long, default_value_t = 2)]
        m: u64,
        /// Bound on |ε_x|
        #[arg(long, default_value_t = 1)]
        bound: i64,
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Verify { common, .. }
            | Command::Case { common, .. }
            | Command::LemmaPhi { common, .. }
            | Command::NtCheck { common, .. }
            | Command::Basis { common, .. }
            | Command::Orders { common, .. }
            | Command::ExploreEps { common, .. } => common,
        }
    }
}

/// Result of one command before it is written anywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub report: String,
    pub summary: String,
    pub code: i32,
}

#[derive(Serialize)]
struct VerifyReport {
    schema_version: u32,
    version: &'static str,
    q: Option<u64>,
    seed: Option<u64>,
    conclusion: Conclusion,
    orders: Vec<OrderVerdict>,
}

#[derive(Serialize)]
struct PhiReport {
    schema_version: u32,
    version: &'static str,
    n: u64,
    p: u64,
    m: u32,
    value: String,
    divisible: bool,
    seed: Option<u64>,
}

#[derive(Serialize)]
struct NtReport {
    schema_version: u32,
    version: &'static str,
    n: u64,
    d: u64,
    source: String,
    hypotheses_hold: bool,
    conclusion_holds: bool,
    consistent: bool,
    seed: Option<u64>,
}

#[derive(Serialize)]
struct BasisReport {
    schema_version: u32,
    version: &'static str,
    n: u64,
    basis_indices: Vec<u64>,
    size: usize,
    half_phi: u64,
    determinant: String,
    unimodular: bool,
    moebius_expansion: bool,
    seed: Option<u64>,
}

#[derive(Serialize)]
struct OrdersReport {
    schema_version: u32,
    version: &'static str,
    profile: GroupProfile,
    admissible_orders: Vec<u64>,
    seed: Option<u64>,
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

/// Runs a parsed command without touching stdout, stderr or the file system
/// (except to read `--input`).
pub fn execute(cmd: &Command) -> Result<Outcome> {
    let common = cmd.common();
    let seed = common.seed;
    let workers = common.workers;
    match cmd {
        Command::Verify { q, n, .. } => {
            let orders = match (q, n) {
                (_, Some(n)) => vec![*n],
                (Some(q), None) => admissible_orders(*q)?,
                (None, None) => return Err(Error::Invalid("verify needs --q or --n".into())),
            };
            let verdicts = orders
                .iter()
                .map(|&n| verify_order_with_workers(n, *q, workers))
                .collect::<Result<Vec<_>>>()?;
            let ok = verdicts
                .iter()
                .all(|v| v.conclusion == Conclusion::Verified);
            let mut summary = String::new();
            if verdicts.is_empty() {
                let _ = writeln!(
                    summary,
                    "q = {}: no admissible orders to check",
                    q.unwrap_or(0)
                );
            }
            for v in &verdicts {
                let cases: Vec<String> = v
                    .case_results
                    .iter()
                    .map(|c| format!("d={} {}", c.d, verdict_word(c.verdict)))
                    .collect();
                let _ = writeln!(
                    summary,
                    "n = {}: {} ({})",
                    v.n,
                    if v.conclusion == Conclusion::Verified {
                        "verified"
                    } else {
                        "inconclusive"
                    },
                    if cases.is_empty() {
                        "prime-power order".to_string()
                    } else {
                        cases.join(", ")
                    }
                );
            }
            let report = VerifyReport {
                schema_version: SCHEMA_VERSION,
                version: env!("CARGO_PKG_VERSION"),
                q: *q,
                seed,
                conclusion: if ok {
                    Conclusion::Verified
                } else {
                    Conclusion::Inconclusive
                },
                orders: verdicts,
            };
            Ok(Outcome {
                report: to_json(&report),
                summary,
                code: if ok { EXIT_OK } else { EXIT_FAILED },
            })
        }
        Command::Case {
            n,
            d,
            list_survivors,
            ..
        } => {
            let cert = check_case_with_workers(*n, *d, workers)?.with_seed(seed);
            let mut summary = format!(
                "case n = {}, d = {}: {} ({} tuples",
                n,
                d,
                verdict_word(cert.verdict),
                cert.tuples_examined
            );
            if let Some(r) = &cert.reason {
                let _ = write!(summary, "; {r}");
            }
            summary.push_str(")\n");
            if *list_survivors {
                for s in &cert.survivors {
                    let _ = writeln!(
                        summary,
                        "  survivor {:?} differences {:?}",
                        s.nus, s.differences
                    );
                }
            }
            let failed =
                cert.verdict == Verdict::SurvivorsFound || cert.pruning_stats.violations() > 0;
            let mut report = cert.to_json();
            report.push('\n');
            Ok(Outcome {
                report,
                summary,
                code: if failed { EXIT_FAILED } else { EXIT_OK },
            })
        }
        Command::LemmaPhi { n, p, m, .. } => {
            let value = phi_value_at_root(*n, *p, *m)?;
            let divisible = check_phi_membership(*n, *p, *m)?;
            let summary = format!(
                "Phi_{{{n}*{p}^{m}}}(zeta_{n}) {} divisible by {p}\n",
                if divisible { "is" } else { "is NOT" }
            );
            let report = PhiReport {
                schema_version: SCHEMA_VERSION,
                version: env!("CARGO_PKG_VERSION"),
                n: *n,
                p: *p,
                m: *m,
                value: value.to_string(),
                divisible,
                seed,
            };
            Ok(Outcome {
                report: to_json(&report),
                summary,
                code: if divisible { EXIT_OK } else { EXIT_FAILED },
            })
        }
        Command::NtCheck { input, n, d, .. } => {
            let (inst, source) = match (input, n, d) {
                (Some(path), _, _) => {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        Error::Invalid(format!("cannot read {}: {e}", path.display()))
                    })?;
                    (OmegaInstance::parse(&text)?, path.display().to_string())
                }
                (None, Some(n), Some(d)) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
                    (random_nt_instance(*n, *d, &mut rng)?, "random".to_string())
                }
                _ => {
                    return Err(Error::Invalid(
                        "nt-check needs --input, or --n and --d".into(),
                    ))
                }
            };
            let v = check_nt(&inst);
            let summary = format!(
                "n = {}, d = {}: hypotheses {}, conclusion {}\n",
                inst.n(),
                inst.d(),
                if v.hypotheses_hold { "hold" } else { "fail" },
                if v.conclusion_holds { "holds" } else { "fails" }
            );
            let report = NtReport {
                schema_version: SCHEMA_VERSION,
                version: env!("CARGO_PKG_VERSION"),
                n: inst.n(),
                d: inst.d(),
                source,
                hypotheses_hold: v.hypotheses_hold,
                conclusion_holds: v.conclusion_holds,
                consistent: v.consistent(),
                seed,
            };
            Ok(Outcome {
                report: to_json(&report),
                summary,
                code: if v.consistent() { EXIT_OK } else { EXIT_FAILED },
            })
        }
        Command::Basis { n, .. } => {
            let idx = basis_indices(*n)?;
            let det = basis_determinant(*n)?;
            let unimodular = det == 1.into() || det == (-1).into();
            let expansion = (0..*n as i64)
                .map(|i| moebius_expansion_holds(*n, i))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|b| b);
            let ok = unimodular && expansion && idx.len() as u64 == euler_phi(*n) / 2;
            let summary = format!(
                "n = {n}: {} basis indices {:?}, determinant {det}\n",
                idx.len(),
                idx
            );
            let report = BasisReport {
                schema_version: SCHEMA_VERSION,
                version: env!("CARGO_PKG_VERSION"),
                n: *n,
                size: idx.len(),
                basis_indices: idx,
                half_phi: euler_phi(*n) / 2,
                determinant: det.to_string(),
                unimodular,
                moebius_expansion: expansion,
                seed,
            };
            Ok(Outcome {
                report: to_json(&report),
                summary,
                code: if ok { EXIT_OK } else { EXIT_FAILED },
            })
        }
        Command::Orders { q, .. } => {
            let profile = group_profile(*q)?;
            let adm = admissible_orders(*q)?;
            let summary = format!(
                "PSL(2, {q}): order {}, element orders {:?}, admissible unit orders {:?}\n",
                profile.order, profile.element_orders, adm
            );
            let report = OrdersReport {
                schema_version: SCHEMA_VERSION,
                version: env!("CARGO_PKG_VERSION"),
                profile,
                admissible_orders: adm,
                seed,
            };
            Ok(Outcome {
                report: to_json(&report),
                summary,
                code: EXIT_OK,
            })
        }
        Command::ExploreEps { n, m, bound, .. } => {
            let r = explore_eps(*n, *m, *bound)?;
            let summary = format!(
                "n = {n}: {} of {} vectors pass the multiplicity filter\n",
                r.solutions.len(),
                r.examined
            );
            let mut report = r.to_json();
            report.push('\n');
            Ok(Outcome {
                report,
                summary,
                code: EXIT_OK,
            })
        }
    }
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Eliminated => "eliminated",
        Verdict::SurvivorsFound => "SURVIVORS FOUND",
        Verdict::NotApplicable => "not applicable",
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
        }
    };
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INVALID;
        }
    };
    match &cli.command.common().output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.report) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_INVALID;
            }
            print!("{}", outcome.summary);
        }
        None => {
            print!("{}", outcome.report);
            eprint!("{}", outcome.summary);
        }
    }
    outcome.code
}
