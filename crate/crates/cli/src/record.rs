use ginkit::sequence::monomial_string;
use ginkit::verify::CheckResult;
use ginkit::{CIParams, CaseTag, InvariantSequence, PhaseTag, StableIdeal};
use serde::{Deserialize, Serialize};

/// One result row as printed by `compute` and `verify`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub params: CIParams,
    pub case: CaseTag,
    pub k: i64,
    pub lambdas: Vec<i64>,
    pub gaps: Vec<i64>,
    pub phases: Vec<PhaseTag>,
    pub generators: Vec<String>,
    pub checks: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl OutputRecord {
    pub fn new(case: CaseTag, seq: &InvariantSequence, checks: Vec<CheckResult>) -> Self {
        let generators = match StableIdeal::new(seq.lambdas.clone()) {
            Ok(j) => j.generator_strings(),
            Err(_) => Vec::new(),
        };
        OutputRecord {
            params: seq.params,
            case,
            k: seq.k() as i64,
            lambdas: seq.lambdas.clone(),
            gaps: seq.gaps(),
            phases: seq.phases.clone(),
            generators,
            checks,
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}  case {}  k={}\n", self.params, self.case, self.k);
        out += &format!("lambdas: {}\n", join(&self.lambdas));
        out += &format!("gaps: {}\n", grouped_gaps(&self.gaps, &self.phases));
        out += &format!("generators: {}\n", self.generators.join(", "));
        if let Some(ms) = self.timing_ms {
            out += &format!("time: {ms:.3} ms\n");
        }
        out
    }

    pub fn to_m2(&self) -> String {
        let gens: Vec<String> = StableIdeal::new(self.lambdas.clone())
            .map(|j| {
                j.generators()
                    .into_iter()
                    .map(|(a, b)| monomial_string(a, b, true))
                    .collect()
            })
            .unwrap_or_default();
        format!(
            "{} J = ideal({})\n",
            ring_decl(self.params.m),
            gens.join(", ")
        )
    }
}

pub fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// `R = QQ[x,y,z_3..z_m];`
pub fn ring_decl(m: u32) -> String {
    let vars = match m {
        2 => "x,y".to_string(),
        3 => "x,y,z_3".to_string(),
        _ => format!("x,y,z_3..z_{m}"),
    };
    format!("R = QQ[{vars}];")
}

/// Consecutive runs of gaps sharing a phase; gap `g_i` carries the phase of
/// `lambda_i`.
pub fn phase_runs(gaps: &[i64], phases: &[PhaseTag]) -> Vec<(PhaseTag, Vec<i64>)> {
    let mut runs: Vec<(PhaseTag, Vec<i64>)> = Vec::new();
    for (g, ph) in gaps.iter().zip(phases.iter().skip(1)) {
        match runs.last_mut() {
            Some((last, run)) if last == ph => run.push(*g),
            _ => runs.push((*ph, vec![*g])),
        }
    }
    runs
}

pub fn grouped_gaps(gaps: &[i64], phases: &[PhaseTag]) -> String {
    phase_runs(gaps, phases)
        .iter()
        .map(|(_, run)| join(run))
        .collect::<Vec<_>>()
        .join("  ")
}
