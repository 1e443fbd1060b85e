//! Case analysis for one `(n, d)` and order-level verdicts.
//!
//! For every admissible tuple the difference vector
//! `C_b(ψ_d(u)−1) − C_b(ψ_d(g_0)−1)` is computed over the basis. A
//! counterexample needs it nonzero and divisible by `d` in every coordinate;
//! tuples meeting both are survivors. Anything else is eliminated and
//! classified in [`PruningStats`]. A nonzero vector with every coordinate
//! below `d` in size can never be divisible, so the size test is subsumed.

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use super::tuples::{bound_check_with, kappa_filter, CoeffTable, NuTuple, TupleSpace};
use super::SCHEMA_VERSION;
use crate::error::{Error, Result};
use crate::numtheory::{prime_count, Modulus};
use crate::psl2::group_profile;

/// Number of near misses kept per certificate, lexicographically smallest.
pub const MAX_WITNESSES: usize = 32;

/// Work units the tuple space is split into before scheduling.
const SPLIT_TARGET: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateD {
    pub d: u64,
    /// `1 + 2^{P(d)+2}` if the branch with one `ν_i ≡ 0` is open, else
    /// `2^{P(d)+2}`
    pub bound: u64,
    /// `n/d` is the smallest prime of `n`
    pub kappa2_open: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RejectedD {
    pub d: u64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateReport {
    pub n: u64,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub candidates: Vec<CandidateD>,
    pub rejected: Vec<RejectedD>,
}

impl CandidateReport {
    pub fn ds(&self) -> Vec<u64> {
        self.candidates.iter().map(|c| c.d).collect()
    }

    pub fn get(&self, d: u64) -> Option<&CandidateD> {
        self.candidates.iter().find(|c| c.d == d)
    }
}

/// Divisors `1 < d < n` that can carry a counterexample: the coefficient
/// differences are at most `1 + 2^{P(d)+2}` in size, and the `+1` needs a
/// `ν_i ≡ 0 (mod n)`, which forces `n/d` to be the smallest prime of `n`.
pub fn candidate_ds(n: u64) -> Result<CandidateReport> {
    let m = Modulus::new(n)?;
    if n < 3 {
        return Err(Error::ModulusTooSmall { n, min: 3 });
    }
    let not_applicable = |reason: &str| CandidateReport {
        n,
        applicable: false,
        reason: Some(reason.to_string()),
        candidates: Vec::new(),
        rejected: Vec::new(),
    };
    if n.is_multiple_of(2) {
        return Ok(not_applicable("even order"));
    }
    if m.is_prime_power() {
        return Ok(not_applicable("prime-power order"));
    }
    let p1 = m.smallest_prime().expect("n > 1");
    let mut candidates = Vec::new();
    let mut rejected = Vec::new();
    for d in m.divisors() {
        if d == 1 || d == n {
            continue;
        }
        let base = 1u64 << (prime_count(d) + 2);
        let open = n / d == p1;
        if d > base + 1 {
            rejected.push(RejectedD {
                d,
                reason: format!("d exceeds 1 + 2^(P(d)+2) = {}", base + 1),
            });
        } else if d > base && !open {
            rejected.push(RejectedD {
                d,
                reason: format!(
                    "d exceeds 2^(P(d)+2) = {base} and n/d = {} is not the smallest prime {p1}",
                    n / d
                ),
            });
        } else {
            candidates.push(CandidateD {
                d,
                bound: if open { base + 1 } else { base },
                kappa2_open: open,
            });
        }
    }
    Ok(CandidateReport {
        n,
        applicable: true,
        reason: None,
        candidates,
        rejected,
    })
}

/// Odd `d` in `3..=limit` with `d ≤ 1 + 2^{P(d)+2}`.
pub fn bound_admissible(limit: u64) -> Vec<u64> {
    (3..=limit)
        .step_by(2)
        .filter(|&d| d <= 1 + (1u64 << (prime_count(d) + 2)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Eliminated,
    SurvivorsFound,
    NotApplicable,
}

/// Tuple counts by the reason they were discarded, plus two cross-checks
/// that must stay at zero.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PruningStats {
    /// difference vector identically zero
    pub identical: u64,
    /// nonzero, with some coordinate not divisible by `d`
    pub congruence: u64,
    /// of those, every coordinate is smaller than `d` in absolute value
    pub difference: u64,
    /// tuples whose `ν_i ≡ 0` pattern is impossible
    pub kappa_inconsistent: u64,
    /// tuples exceeding the coefficient bound
    pub bound_violations: u64,
}

impl PruningStats {
    fn merge(&mut self, o: &PruningStats) {
        self.identical += o.identical;
        self.congruence += o.congruence;
        self.difference += o.difference;
        self.kappa_inconsistent += o.kappa_inconsistent;
        self.bound_violations += o.bound_violations;
    }

    pub fn violations(&self) -> u64 {
        self.kappa_inconsistent + self.bound_violations
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Survivor {
    pub nus: Vec<u64>,
    /// nonzero coordinates of the difference vector
    pub differences: BTreeMap<u64, i64>,
}

/// A tuple with nonzero difference vector failing divisibility by `d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct NearMiss {
    pub nus: Vec<u64>,
    /// first basis index whose coordinate is not divisible by `d`
    pub b: u64,
    pub value: i64,
    pub max_abs_diff: i64,
    pub test: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseCertificate {
    pub schema_version: u32,
    pub version: &'static str,
    pub n: u64,
    pub d: u64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub tuples_examined: u64,
    pub pruning_stats: PruningStats,
    pub survivors: Vec<Survivor>,
    pub near_miss_witnesses: Vec<NearMiss>,
    pub seed: Option<u64>,
}

impl CaseCertificate {
    fn not_applicable(n: u64, d: u64, reason: String) -> Self {
        CaseCertificate {
            schema_version: SCHEMA_VERSION,
            version: env!("CARGO_PKG_VERSION"),
            n,
            d,
            verdict: Verdict::NotApplicable,
            reason: Some(reason),
            tuples_examined: 0,
            pruning_stats: PruningStats::default(),
            survivors: Vec::new(),
            near_miss_witnesses: Vec::new(),
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

#[derive(Default)]
struct Partial {
    examined: u64,
    stats: PruningStats,
    survivors: Vec<Survivor>,
    witnesses: Vec<NearMiss>,
}

impl Partial {
    fn absorb(&mut self, o: Partial) {
        self.examined += o.examined;
        self.stats.merge(&o.stats);
        self.survivors.extend(o.survivors);
        self.witnesses.extend(o.witnesses);
        self.trim();
    }

    fn trim(&mut self) {
        if self.witnesses.len() > 2 * MAX_WITNESSES {
            self.witnesses.sort();
            self.witnesses.truncate(MAX_WITNESSES);
        }
    }

    fn classify(&mut self, table: &CoeffTable, t: &NuTuple) {
        let d = t.d as i64;
        self.examined += 1;
        if !kappa_filter(t) {
            self.stats.kappa_inconsistent += 1;
        }
        if !bound_check_with(table, t).holds() {
            self.stats.bound_violations += 1;
        }
        let diff = table.difference(t);
        let max = diff.iter().map(|v| v.abs()).max().unwrap_or(0);
        if max == 0 {
            self.stats.identical += 1;
        } else if let Some(k) = diff.iter().position(|v| !v.is_multiple_of(&d)) {
            self.stats.congruence += 1;
            if max < d {
                self.stats.difference += 1;
            }
            self.witnesses.push(NearMiss {
                nus: t.nus.clone(),
                b: table.basis()[k],
                value: diff[k],
                max_abs_diff: max,
                test: "congruence",
            });
            self.trim();
        } else {
            self.survivors.push(Survivor {
                nus: t.nus.clone(),
                differences: table
                    .basis()
                    .iter()
                    .zip(&diff)
                    .filter(|(_, &v)| v != 0)
                    .map(|(&b, &v)| (b, v))
                    .collect(),
            });
        }
    }
}

/// [`check_case_with_workers`] on the global thread pool.
pub fn check_case(n: u64, d: u64) -> Result<CaseCertificate> {
    check_case_with_workers(n, d, 0)
}

/// Runs the case `(n, d)` on `workers` threads (0: rayon default). The
/// certificate does not depend on `workers`.
///
/// Errors for even `n`, `n < 3` and `d ∤ n`; every other divisor yields a
/// certificate, `not_applicable` when `d` is not a candidate.
pub fn check_case_with_workers(n: u64, d: u64, workers: usize) -> Result<CaseCertificate> {
    Modulus::new_odd(n)?;
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::NotDivisor { d, n });
    }
    let report = candidate_ds(n)?;
    if !report.applicable {
        let reason = report.reason.unwrap_or_default();
        return Ok(CaseCertificate::not_applicable(n, d, reason));
    }
    if report.get(d).is_none() {
        let reason = match d {
            1 => "d = 1: the unit agrees with g_0 at the first power".to_string(),
            _ if d == n => "d = n: the augmentation fixes the value at n".to_string(),
            _ => report
                .rejected
                .iter()
                .find(|r| r.d == d)
                .map(|r| r.reason.clone())
                .unwrap_or_else(|| "not a candidate".into()),
        };
        return Ok(CaseCertificate::not_applicable(n, d, reason));
    }

    let space = TupleSpace::new(n, d)?;
    let table = CoeffTable::new(n)?;
    let depth = space.split_depth(SPLIT_TARGET);
    let prefixes = space.prefixes(depth);
    let run = || {
        prefixes
            .par_iter()
            .map(|p| {
                let mut part = Partial::default();
                space.for_each_with_prefix(p, |t| part.classify(&table, t));
                part
            })
            .collect::<Vec<_>>()
    };
    let parts = if workers == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?
            .install(run)
    };
    let mut total = Partial::default();
    for p in parts {
        total.absorb(p);
    }
    total.survivors.sort();
    total.witnesses.sort();
    total.witnesses.truncate(MAX_WITNESSES);
    let verdict = if total.survivors.is_empty() {
        Verdict::Eliminated
    } else {
        Verdict::SurvivorsFound
    };
    Ok(CaseCertificate {
        schema_version: SCHEMA_VERSION,
        version: env!("CARGO_PKG_VERSION"),
        n,
        d,
        verdict,
        reason: None,
        tuples_examined: total.examined,
        pruning_stats: total.stats,
        survivors: total.survivors,
        near_miss_witnesses: total.witnesses,
        seed: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    Verified,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// every candidate divisor eliminated
    CaseAnalysis,
    /// prime-power orders coprime to the characteristic are known
    PrimePowerCitation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderVerdict {
    pub schema_version: u32,
    pub version: &'static str,
    pub q: Option<u64>,
    pub n: u64,
    pub conclusion: Conclusion,
    pub method: Method,
    pub candidates: Vec<u64>,
    /// how eliminated cases give the conclusion
    pub reduction: &'static str,
    pub case_results: Vec<CaseCertificate>,
}

impl OrderVerdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdict serializes")
    }
}

const REDUCTION: &str = "no candidate d admits lambda_d != alpha_d, so lambda_i = alpha_i for \
every i; with nonnegative partial augmentations of all proper powers this makes u rationally \
conjugate to g_0";

const CITATION: &str = "units of prime-power order coprime to the characteristic are rationally \
conjugate to group elements";

pub fn verify_order(n: u64, q: Option<u64>) -> Result<OrderVerdict> {
    verify_order_with_workers(n, q, 0)
}

/// Order-level verdict for torsion units of order `n` in `V(Z PSL(2, q))`.
/// With `q` given, `n` must be an element order coprime to `2q`; without it
/// only oddness is required.
pub fn verify_order_with_workers(n: u64, q: Option<u64>, workers: usize) -> Result<OrderVerdict> {
    if n < 3 {
        return Err(Error::Invalid(format!("order {n} is trivial or even")));
    }
    if let Some(q) = q {
        let g = group_profile(q)?;
        if n.gcd(&(2 * q)) != 1 {
            return Err(Error::OutOfScope {
                n,
                reason: format!("order not coprime with 2q = {}", 2 * q),
            });
        }
        if !g.has_element_order(n) {
            return Err(Error::Invalid(format!(
                "PSL(2, {q}) has no element of order {n}"
            )));
        }
    }
    if n.is_multiple_of(2) {
        return Err(Error::OutOfScope {
            n,
            reason: "even order".into(),
        });
    }
    let m = Modulus::new_odd(n)?;
    if m.is_prime_power() {
        return Ok(OrderVerdict {
            schema_version: SCHEMA_VERSION,
            version: env!("CARGO_PKG_VERSION"),
            q,
            n,
            conclusion: Conclusion::Verified,
            method: Method::PrimePowerCitation,
            candidates: Vec::new(),
            reduction: CITATION,
            case_results: Vec::new(),
        });
    }
    let report = candidate_ds(n)?;
    let case_results = report
        .ds()
        .into_iter()
        .map(|d| check_case_with_workers(n, d, workers))
        .collect::<Result<Vec<_>>>()?;
    let all_eliminated = case_results
        .iter()
        .all(|c| c.verdict == Verdict::Eliminated);
    Ok(OrderVerdict {
        schema_version: SCHEMA_VERSION,
        version: env!("CARGO_PKG_VERSION"),
        q,
        n,
        conclusion: if all_eliminated {
            Conclusion::Verified
        } else {
            Conclusion::Inconclusive
        },
        method: Method::CaseAnalysis,
        candidates: report.ds(),
        reduction: REDUCTION,
        case_results,
    })
}
