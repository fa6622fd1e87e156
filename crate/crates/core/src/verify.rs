//! Runs the independent checks on a computed invariant sequence and
//! collects a per-check report.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algorithms::{compute_invariants, dispatch_case, run_case};
use crate::betti::check_cancellation;
use crate::closed_form::full_sequence_closed;
use crate::error::{GinError, OracleError, Result};
use crate::groebner::{oracle_gin_detailed, OracleConfig};
use crate::hilbert::verify_hilbert_equality_raw;
use crate::params::{CIParams, CaseTag};
use crate::sequence::{InvariantSequence, StableIdeal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Structure,
    Hilbert,
    ClosedForm,
    Betti,
    Oracle,
}

impl CheckKind {
    pub const ALL: [CheckKind; 5] = [
        CheckKind::Structure,
        CheckKind::Hilbert,
        CheckKind::ClosedForm,
        CheckKind::Betti,
        CheckKind::Oracle,
    ];

    /// Everything except the Groebner oracle, which only runs at desk scale.
    pub const DEFAULT: [CheckKind; 4] = [
        CheckKind::Structure,
        CheckKind::Hilbert,
        CheckKind::ClosedForm,
        CheckKind::Betti,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::Structure => "structure",
            CheckKind::Hilbert => "hilbert",
            CheckKind::ClosedForm => "closed-form",
            CheckKind::Betti => "betti",
            CheckKind::Oracle => "oracle",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        CheckKind::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                format!("unknown check {s:?} (expected structure, hilbert, closed-form, betti or oracle)")
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: CheckKind,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    fn pass(check: CheckKind) -> Self {
        CheckResult {
            check,
            status: CheckStatus::Pass,
            detail: None,
        }
    }

    fn fail(check: CheckKind, detail: impl Into<String>) -> Self {
        CheckResult {
            check,
            status: CheckStatus::Fail,
            detail: Some(detail.into()),
        }
    }

    fn skipped(check: CheckKind, detail: impl Into<String>) -> Self {
        CheckResult {
            check,
            status: CheckStatus::Skipped,
            detail: Some(detail.into()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub checks: Vec<CheckKind>,
    pub t_max: Option<i64>,
    pub oracle: OracleConfig,
    /// Adds `delta` to `lambda_index` before any check runs.
    pub perturb: Option<(usize, i64)>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            checks: CheckKind::DEFAULT.to_vec(),
            t_max: None,
            oracle: OracleConfig::default(),
            perturb: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub case: CaseTag,
    pub seq: InvariantSequence,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

fn structure_check(seq: &InvariantSequence) -> CheckResult {
    if let Err(e) = seq.validate() {
        return CheckResult::fail(CheckKind::Structure, e.to_string());
    }
    let p = &seq.params;
    // the Far and Equal regions overlap at alpha = beta = 1
    if p.alpha == 1 && p.beta == 1 {
        match run_case(p, CaseTag::Far) {
            Ok(far) if far.seq.lambdas == seq.lambdas => {}
            Ok(far) => {
                return CheckResult::fail(
                    CheckKind::Structure,
                    format!(
                        "Far gives {:?}, Equal gives {:?}",
                        far.seq.lambdas, seq.lambdas
                    ),
                )
            }
            Err(e) => return CheckResult::fail(CheckKind::Structure, e.to_string()),
        }
    }
    CheckResult::pass(CheckKind::Structure)
}

fn hilbert_check(seq: &InvariantSequence, t_max: Option<i64>) -> CheckResult {
    let report = verify_hilbert_equality_raw(&seq.params, &seq.lambdas, t_max);
    match report.first_failure {
        None => CheckResult::pass(CheckKind::Hilbert),
        Some(f) => CheckResult::fail(
            CheckKind::Hilbert,
            format!(
                "first mismatch at t={}: H_J={} H_I^n={}",
                f.t, f.h_j, f.h_in
            ),
        ),
    }
}

fn closed_form_check(seq: &InvariantSequence) -> CheckResult {
    match full_sequence_closed(&seq.params) {
        Err(e) => CheckResult::fail(CheckKind::ClosedForm, e.to_string()),
        Ok(closed) => match closed
            .lambdas
            .iter()
            .zip(&seq.lambdas)
            .position(|(a, b)| a != b)
        {
            None if closed.lambdas.len() == seq.lambdas.len() => {
                CheckResult::pass(CheckKind::ClosedForm)
            }
            None => CheckResult::fail(
                CheckKind::ClosedForm,
                format!(
                    "lengths differ: {} vs {}",
                    closed.lambdas.len(),
                    seq.lambdas.len()
                ),
            ),
            Some(v) => CheckResult::fail(
                CheckKind::ClosedForm,
                format!(
                    "lambda_{v}: closed form {} but sequence has {}",
                    closed.lambdas[v], seq.lambdas[v]
                ),
            ),
        },
    }
}

fn betti_check(seq: &InvariantSequence) -> CheckResult {
    let ideal = match StableIdeal::new(seq.lambdas.clone()) {
        Ok(j) => j,
        Err(e) => return CheckResult::fail(CheckKind::Betti, e.to_string()),
    };
    let p = &seq.params;
    let rep = check_cancellation(p, &ideal);
    if !rep.passed() {
        return CheckResult::fail(
            CheckKind::Betti,
            format!(
                "shifts of I^n not cancelled out: extra b0 {:?}, extra b1 {:?}",
                rep.extra_b0, rep.extra_b1
            ),
        );
    }
    let lams = ideal.lambdas();
    if lams[0] + 1 != p.alpha() + p.n() * p.beta() {
        return CheckResult::fail(CheckKind::Betti, "lambda_0 + 1 != alpha + n*beta");
    }
    let k = ideal.k();
    if lams[lams.len() - 1] + k - 1 != p.alpha() * (p.n() - 1) + p.beta() {
        return CheckResult::fail(
            CheckKind::Betti,
            "lambda_(k-1) + k - 1 != alpha*(n-1) + beta",
        );
    }
    CheckResult::pass(CheckKind::Betti)
}

fn oracle_check(seq: &InvariantSequence, cfg: &OracleConfig) -> CheckResult {
    match oracle_gin_detailed(&seq.params, cfg) {
        Ok(out) if out.ideal.lambdas() == seq.lambdas.as_slice() => {
            CheckResult::pass(CheckKind::Oracle)
        }
        Ok(out) => CheckResult::fail(
            CheckKind::Oracle,
            format!("Groebner computation gives {}", out.ideal),
        ),
        Err(GinError::Oracle(OracleError::OutOfScope(msg))) => {
            CheckResult::skipped(CheckKind::Oracle, msg)
        }
        Err(e) => CheckResult::fail(CheckKind::Oracle, e.to_string()),
    }
}

/// Computes the invariants of `params` and runs the selected checks.
pub fn verify(params: &CIParams, opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut seq = compute_invariants(params)?;
    if let Some((i, delta)) = opts.perturb {
        let k = seq.lambdas.len();
        let slot = seq.lambdas.get_mut(i).ok_or(GinError::IndexOutOfRange {
            index: i as i64,
            k: k as i64,
        })?;
        *slot += delta;
    }
    Ok(verify_sequence(seq, opts))
}

/// Runs the selected checks on an externally supplied sequence.
pub fn verify_sequence(seq: InvariantSequence, opts: &VerifyOptions) -> VerifyReport {
    let checks = opts
        .checks
        .iter()
        .map(|kind| match kind {
            CheckKind::Structure => structure_check(&seq),
            CheckKind::Hilbert => hilbert_check(&seq, opts.t_max),
            CheckKind::ClosedForm => closed_form_check(&seq),
            CheckKind::Betti => betti_check(&seq),
            CheckKind::Oracle => oracle_check(&seq, &opts.oracle),
        })
        .collect();
    VerifyReport {
        case: dispatch_case(&seq.params),
        seq,
        checks,
    }
}
