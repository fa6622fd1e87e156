//! Exact Hilbert functions of `I^n` and of stable ideals `J`, the equality
//! sweep that certifies `J = gin(I^n)`, and a monomial-counting oracle.
//!
//! Binomial coefficients follow the standard convention: `C(s, t) = 0` when
//! `t < 0` or `t > s`, so in particular `C(0, 0) = 1` and `C(s, t) = 0` for
//! every negative `s`.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{GinError, Result};
use crate::params::CIParams;
use crate::sequence::StableIdeal;

/// Default cap on the degree accepted by [`hilbert_in_bruteforce`].
pub const BRUTEFORCE_T_MAX: i64 = 60;
/// Largest variable count accepted by [`hilbert_in_bruteforce`].
pub const BRUTEFORCE_M_MAX: i64 = 5;

pub fn binom(s: i64, t: i64) -> BigUint {
    if t < 0 || t > s {
        return BigUint::zero();
    }
    let t = t.min(s - t) as u64;
    let s = s as u64;
    // u128 fast path; falls through to BigUint on overflow
    let mut acc: u128 = 1;
    let mut i = 0u64;
    while i < t {
        match acc.checked_mul(u128::from(s - i)) {
            Some(v) => acc = v / u128::from(i + 1),
            None => break,
        }
        i += 1;
    }
    if i == t {
        return BigUint::from(acc);
    }
    let mut big = BigUint::from(acc);
    while i < t {
        big *= s - i;
        big /= i + 1;
        i += 1;
    }
    big
}

fn binom_int(s: i64, t: i64) -> BigInt {
    BigInt::from(binom(s, t))
}

/// `H_{I^n}(t)` from the graded free resolution of `I^n`.
pub fn hilbert_in(params: &CIParams, t: i64) -> BigInt {
    let (alpha, beta, n, m) = (params.alpha(), params.beta(), params.n(), params.m());
    let mut h = binom_int(t - n * alpha + m - 1, m - 1);
    for j in 1..=n {
        h += binom_int(t - alpha * (n - j) - beta * j + m - 1, m - 1);
        h -= binom_int(t - alpha * j - beta * (n + 1 - j) + m - 1, m - 1);
    }
    h
}

/// `H_J(t)` for `J = (x^k, x^{k-1} y^{lambda_{k-1}}, ..., y^{lambda_0})`.
pub fn hilbert_j(ideal: &StableIdeal, m: i64, t: i64) -> BigInt {
    hilbert_j_raw(ideal.lambdas(), m, t)
}

/// Same formula as [`hilbert_j`] evaluated on an arbitrary integer list;
/// used to show that perturbed sequences fail the equality check.
pub fn hilbert_j_raw(lambdas: &[i64], m: i64, t: i64) -> BigInt {
    let k = lambdas.len() as i64;
    let mut h = binom_int(t - k + m - 1, m - 1);
    for (i, lam) in lambdas.iter().enumerate() {
        h += binom_int(t - lam - i as i64 + m - 2, m - 2);
    }
    h
}

/// Pointwise values of a Hilbert function on `0..=t_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertProfile {
    pub values: Vec<BigInt>,
    pub t_max: i64,
}

impl HilbertProfile {
    pub fn of_power(params: &CIParams, t_max: i64) -> Self {
        HilbertProfile {
            values: (0..=t_max).map(|t| hilbert_in(params, t)).collect(),
            t_max,
        }
    }

    pub fn of_stable(ideal: &StableIdeal, m: i64, t_max: i64) -> Self {
        HilbertProfile {
            values: (0..=t_max).map(|t| hilbert_j(ideal, m, t)).collect(),
            t_max,
        }
    }

    pub fn get(&self, t: i64) -> Option<&BigInt> {
        usize::try_from(t).ok().and_then(|t| self.values.get(t))
    }

    /// Smallest degree with a nonzero value.
    pub fn initial_degree(&self) -> Option<i64> {
        self.values
            .iter()
            .position(|v| !v.is_zero())
            .map(|t| t as i64)
    }
}

/// First degree where `H_J` and `H_{I^n}` disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertMismatch {
    pub t: i64,
    pub h_j: String,
    pub h_in: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub t_max: i64,
    pub first_failure: Option<HilbertMismatch>,
}

impl HilbertReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Default sweep bound `lambda_0 + m`.
///
/// For `t > lambda_0` every binomial in both formulas has a nonnegative upper
/// index, so both sides are polynomials in `t` of degree at most `m - 1`;
/// agreement on the `m` points `lambda_0 + 1 ..= lambda_0 + m` then forces
/// agreement for all larger `t`.
pub fn default_t_max(params: &CIParams) -> i64 {
    params.lambda0() + params.m()
}

/// Checks `H_J(t) == H_{I^n}(t)` for every `t` in `[0, t_max]`
/// (`t_max` defaults to `lambda_0 + m`).
pub fn verify_hilbert_equality(
    params: &CIParams,
    ideal: &StableIdeal,
    t_max: Option<i64>,
) -> HilbertReport {
    verify_hilbert_equality_raw(params, ideal.lambdas(), t_max)
}

pub fn verify_hilbert_equality_raw(
    params: &CIParams,
    lambdas: &[i64],
    t_max: Option<i64>,
) -> HilbertReport {
    let t_max = t_max.unwrap_or_else(|| default_t_max(params));
    let m = params.m();
    let first_failure = (0..=t_max).find_map(|t| {
        let h_j = hilbert_j_raw(lambdas, m, t);
        let h_in = hilbert_in(params, t);
        (h_j != h_in).then(|| HilbertMismatch {
            t,
            h_j: h_j.to_string(),
            h_in: h_in.to_string(),
        })
    });
    HilbertReport {
        t_max,
        first_failure,
    }
}

/// Number of degree-`t` monomials in `m` variables divisible by at least one
/// of `gens` (exponent vectors of length `m`), by direct enumeration.
pub fn count_monomials_in(gens: &[Vec<u32>], m: usize, t: u32) -> u64 {
    fn walk(gens: &[Vec<u32>], exps: &mut Vec<u32>, m: usize, left: u32, count: &mut u64) {
        if exps.len() + 1 == m {
            exps.push(left);
            if gens
                .iter()
                .any(|g| g.iter().zip(exps.iter()).all(|(ge, e)| ge <= e))
            {
                *count += 1;
            }
            exps.pop();
            return;
        }
        for e in 0..=left {
            exps.push(e);
            walk(gens, exps, m, left - e, count);
            exps.pop();
        }
    }
    if m == 0 {
        return 0;
    }
    let mut count = 0;
    let mut exps = Vec::with_capacity(m);
    walk(gens, &mut exps, m, t, &mut count);
    count
}

/// `H_{I^n}(t)` computed by counting monomials in the power of the monomial
/// complete intersection `(x_1^alpha, x_2^beta)`. The Hilbert function of a
/// complete-intersection power depends only on `(alpha, beta, n, m)`, so
/// this representative is as good as any.
pub fn hilbert_in_bruteforce(params: &CIParams, t: i64) -> Result<BigInt> {
    hilbert_in_bruteforce_capped(params, t, BRUTEFORCE_T_MAX)
}

pub fn hilbert_in_bruteforce_capped(params: &CIParams, t: i64, t_cap: i64) -> Result<BigInt> {
    params.validate()?;
    if t > t_cap {
        return Err(GinError::BoundExceeded {
            what: "t",
            value: t,
            limit: t_cap,
        });
    }
    if params.m() > BRUTEFORCE_M_MAX {
        return Err(GinError::BoundExceeded {
            what: "m",
            value: params.m(),
            limit: BRUTEFORCE_M_MAX,
        });
    }
    if t < 0 {
        return Ok(BigInt::zero());
    }
    let m = params.m as usize;
    let gens: Vec<Vec<u32>> = (0..=params.n)
        .map(|i| {
            let mut g = vec![0; m];
            g[0] = params.alpha * i;
            g[1] = params.beta * (params.n - i);
            g
        })
        .collect();
    Ok(BigInt::from(count_monomials_in(&gens, m, t as u32)))
}

/// Degree-`t` dimension of the full polynomial ring in `m` variables.
pub fn ring_dim(m: i64, t: i64) -> BigInt {
    if t < 0 {
        return BigInt::zero();
    }
    binom_int(t + m - 1, m - 1)
}
