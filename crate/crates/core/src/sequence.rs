//! Invariant sequences and the two-variable strongly stable ideals they
//! describe.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GinError, Result};
use crate::params::CIParams;

/// The algorithm phase that produced an invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum PhaseTag {
    Build,
    PatternBlock(u32),
    PartialPatternBlock,
    ReverseBuildPartial,
    ReverseBuild,
}

impl PhaseTag {
    pub fn is_pattern(&self) -> bool {
        matches!(
            self,
            PhaseTag::PatternBlock(_) | PhaseTag::PartialPatternBlock
        )
    }

    pub fn is_reverse(&self) -> bool {
        matches!(self, PhaseTag::ReverseBuild | PhaseTag::ReverseBuildPartial)
    }
}

impl fmt::Display for PhaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhaseTag::Build => f.write_str("Build"),
            PhaseTag::PatternBlock(i) => write!(f, "PatternBlock({i})"),
            PhaseTag::PartialPatternBlock => f.write_str("PartialPatternBlock"),
            PhaseTag::ReverseBuildPartial => f.write_str("ReverseBuildPartial"),
            PhaseTag::ReverseBuild => f.write_str("ReverseBuild"),
        }
    }
}

impl FromStr for PhaseTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "Build" => Ok(PhaseTag::Build),
            "PartialPatternBlock" => Ok(PhaseTag::PartialPatternBlock),
            "ReverseBuildPartial" => Ok(PhaseTag::ReverseBuildPartial),
            "ReverseBuild" => Ok(PhaseTag::ReverseBuild),
            _ => s
                .strip_prefix("PatternBlock(")
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(|idx| idx.parse().ok())
                .map(PhaseTag::PatternBlock)
                .ok_or_else(|| format!("unknown phase tag {s:?}")),
        }
    }
}

impl From<PhaseTag> for String {
    fn from(tag: PhaseTag) -> String {
        tag.to_string()
    }
}

impl TryFrom<String> for PhaseTag {
    type Error = String;

    fn try_from(s: String) -> std::result::Result<Self, Self::Error> {
        s.parse()
    }
}

/// The invariants `lambda_0 > ... > lambda_{k-1}` of `gin(I^n)`, together
/// with the phase that produced each entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantSequence {
    pub params: CIParams,
    pub lambdas: Vec<i64>,
    pub phases: Vec<PhaseTag>,
}

impl InvariantSequence {
    pub fn k(&self) -> usize {
        self.lambdas.len()
    }

    pub fn gaps(&self) -> Vec<i64> {
        gaps(&self.lambdas)
    }

    /// Checks every structural invariant: length, strict decrease, both
    /// endpoints, the gap alphabet, the gap sum and phase-index contiguity.
    pub fn validate(&self) -> Result<()> {
        let p = &self.params;
        p.validate()?;
        let k = p.k();
        if self.lambdas.len() as i64 != k {
            return Err(GinError::Structure(format!(
                "expected {k} invariants, found {}",
                self.lambdas.len()
            )));
        }
        if self.phases.len() != self.lambdas.len() {
            return Err(GinError::Structure(format!(
                "{} phases for {} invariants",
                self.phases.len(),
                self.lambdas.len()
            )));
        }
        if self.lambdas[0] != p.lambda0() {
            return Err(GinError::Structure(format!(
                "lambda_0 = {} but n*beta + alpha - 1 = {}",
                self.lambdas[0],
                p.lambda0()
            )));
        }
        let last = self.lambdas[self.lambdas.len() - 1];
        if last != p.lambda_last() {
            return Err(GinError::Structure(format!(
                "lambda_(k-1) = {last} but beta - alpha + 1 = {}",
                p.lambda_last()
            )));
        }
        let allowed = [1, 2, p.wide_gap()];
        let gaps = self.gaps();
        for (i, g) in gaps.iter().enumerate() {
            if *g <= 0 {
                return Err(GinError::Structure(format!(
                    "not strictly decreasing at index {}: {} -> {}",
                    i + 1,
                    self.lambdas[i],
                    self.lambdas[i + 1]
                )));
            }
            if !allowed.contains(g) {
                return Err(GinError::Structure(format!(
                    "gap g_{} = {g} not in {{1, 2, {}}}",
                    i + 1,
                    p.wide_gap()
                )));
            }
        }
        let sum: i64 = gaps.iter().sum();
        let expected = (p.n() - 1) * p.beta() + 2 * p.alpha() - 2;
        if sum != expected {
            return Err(GinError::Structure(format!(
                "gap sum {sum} != (n-1)*beta + 2*alpha - 2 = {expected}"
            )));
        }
        let blocks: BTreeSet<u32> = self
            .phases
            .iter()
            .filter_map(|ph| match ph {
                PhaseTag::PatternBlock(i) => Some(*i),
                _ => None,
            })
            .collect();
        if let Some(max) = blocks.iter().next_back() {
            if blocks.len() as u32 != max + 1 {
                return Err(GinError::Structure(format!(
                    "pattern block indices not contiguous from 0: {blocks:?}"
                )));
            }
        }
        Ok(())
    }
}

/// `g_i = lambda_{i-1} - lambda_i` for `i = 1..k-1`.
pub fn gaps(lambdas: &[i64]) -> Vec<i64> {
    lambdas.windows(2).map(|w| w[0] - w[1]).collect()
}

/// The monomial ideal `(x^k, x^{k-1} y^{lambda_{k-1}}, ..., x y^{lambda_1}, y^{lambda_0})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StableIdeal {
    k: i64,
    lambdas: Vec<i64>,
}

impl StableIdeal {
    pub fn new(lambdas: Vec<i64>) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(GinError::Structure("empty invariant list".into()));
        }
        for (i, w) in lambdas.windows(2).enumerate() {
            if w[0] <= w[1] {
                return Err(GinError::Structure(format!(
                    "invariants not strictly decreasing at index {}: {} -> {}",
                    i + 1,
                    w[0],
                    w[1]
                )));
            }
        }
        if *lambdas.last().unwrap() < 1 {
            return Err(GinError::Structure("invariants must be positive".into()));
        }
        Ok(StableIdeal {
            k: lambdas.len() as i64,
            lambdas,
        })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn lambdas(&self) -> &[i64] {
        &self.lambdas
    }

    /// Minimal generators as `(x exponent, y exponent)`, `x^k` first and
    /// `y^{lambda_0}` last.
    pub fn generators(&self) -> Vec<(i64, i64)> {
        std::iter::once((self.k, 0))
            .chain((0..self.k).rev().map(|i| (i, self.lambdas[i as usize])))
            .collect()
    }

    /// Membership of `x^a y^b`.
    pub fn contains(&self, a: i64, b: i64) -> bool {
        a >= self.k || (a >= 0 && b >= self.lambdas[a as usize])
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators()
            .into_iter()
            .map(|(a, b)| monomial_string(a, b, false))
            .collect()
    }
}

impl fmt::Display for StableIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator_strings().join(", "))
    }
}

/// Renders `x^a y^b`. With `explicit_one` every exponent is printed.
pub fn monomial_string(a: i64, b: i64, explicit_one: bool) -> String {
    let factor = |var: &str, e: i64| match e {
        0 => None,
        1 if !explicit_one => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    };
    let parts: Vec<String> = [factor("x", a), factor("y", b)]
        .into_iter()
        .flatten()
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Validates the sequence and converts it into its monomial ideal.
pub fn to_generators(seq: &InvariantSequence) -> Result<StableIdeal> {
    seq.validate()?;
    StableIdeal::new(seq.lambdas.clone())
}
