use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::buchberger::{buchberger_revlex, minimal_leading_monomials};
use super::monomial::Monomial;
use super::polynomial::{apply_change_of_coords, determinant, rational_matrix, Polynomial};
use crate::error::{GinError, OracleError, Result};
use crate::hilbert::{count_monomials_in, hilbert_in};
use crate::params::CIParams;
use crate::sequence::StableIdeal;

pub const MAX_VARS: u32 = 3;
pub const MAX_ALPHA: u32 = 3;
pub const MAX_BETA: u32 = 4;
pub const MAX_POWER: u32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub seed: u64,
    pub coeff_bound: i64,
    pub max_basis_size: usize,
    pub retry_limit: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            seed: 0,
            coeff_bound: 50,
            max_basis_size: 400,
            retry_limit: 3,
        }
    }
}

impl OracleConfig {
    pub fn with_seed(seed: u64) -> Self {
        OracleConfig {
            seed,
            ..OracleConfig::default()
        }
    }
}

/// Result of a successful oracle run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOutcome {
    pub ideal: StableIdeal,
    /// Seeds of the two coordinate changes that agreed.
    pub coord_seeds: (u64, u64),
    /// Disagreeing seed pairs seen before agreement.
    pub retries: u32,
    pub basis_size: usize,
}

fn check_scope(params: &CIParams, max_power: u32) -> Result<()> {
    params.validate()?;
    if params.m > MAX_VARS
        || params.alpha > MAX_ALPHA
        || params.beta > MAX_BETA
        || params.n > max_power
    {
        return Err(OracleError::OutOfScope(format!(
            "{params} exceeds m <= {MAX_VARS}, alpha <= {MAX_ALPHA}, beta <= {MAX_BETA}, n <= {max_power}"
        ))
        .into());
    }
    Ok(())
}

fn nonzero_coeff(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    let v = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

/// A homogeneous form of degree `d` in `m` variables with every monomial
/// present.
pub fn random_form(m: usize, d: u32, bound: i64, rng: &mut ChaCha8Rng) -> Polynomial {
    let mut p = Polynomial::zero(m);
    for mono in Monomial::all_of_degree(m, d) {
        let c = nonzero_coeff(rng, bound);
        p.add_term(mono, BigRational::from_integer(BigInt::from(c)));
    }
    p
}

/// Dimension of `I_t` for the ideal with Groebner basis `basis`.
pub fn ideal_dim(basis: &[Polynomial], m: usize, t: u32) -> u64 {
    let gens: Vec<Vec<u32>> = minimal_leading_monomials(basis)
        .into_iter()
        .map(|mono| mono.exps().to_vec())
        .collect();
    count_monomials_in(&gens, m, t)
}

/// Whether `(f, g)` has the Hilbert function of a complete intersection of
/// type `(deg f, deg g)` through degree `deg f + deg g`.
pub fn is_regular_pair(f: &Polynomial, g: &Polynomial, max_basis_size: usize) -> Result<bool> {
    let (Some(a), Some(b)) = (f.homogeneous_degree(), g.homogeneous_degree()) else {
        return Ok(false);
    };
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    if a == 0 {
        return Ok(false);
    }
    let m = f.nvars();
    let params = CIParams::new(a, b, 1, m as u32)?;
    let basis = buchberger_revlex(&[f.clone(), g.clone()], max_basis_size)?;
    for t in 0..=a + b {
        if BigInt::from(ideal_dim(&basis, m, t)) != hilbert_in(&params, i64::from(t)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Two dense forms of degrees `alpha` and `beta` certified to be a regular
/// sequence.
pub fn random_ci(params: &CIParams, cfg: &OracleConfig) -> Result<(Polynomial, Polynomial)> {
    check_scope(params, u32::MAX)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let m = params.m as usize;
    for _ in 0..cfg.retry_limit.max(1) {
        let f = random_form(m, params.alpha, cfg.coeff_bound, &mut rng);
        let g = random_form(m, params.beta, cfg.coeff_bound, &mut rng);
        if is_regular_pair(&f, &g, cfg.max_basis_size)? {
            return Ok((f, g));
        }
    }
    Err(OracleError::Regularity {
        attempts: cfg.retry_limit.max(1),
    }
    .into())
}

/// A random invertible integer matrix with entries in `[-bound, bound]`.
pub fn random_matrix(m: usize, bound: i64, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    loop {
        let g: Vec<Vec<i64>> = (0..m)
            .map(|_| (0..m).map(|_| rng.gen_range(-bound..=bound)).collect())
            .collect();
        if !determinant(&rational_matrix(&g)).is_zero() {
            return g;
        }
    }
}

/// Reduced Groebner basis of `(g f, g g')^n` for the coordinate change drawn
/// from `coord_seed`.
pub fn transformed_power_basis(
    f: &Polynomial,
    g: &Polynomial,
    n: u32,
    coord_seed: u64,
    cfg: &OracleConfig,
) -> Result<Vec<Polynomial>> {
    let mut rng = ChaCha8Rng::seed_from_u64(coord_seed);
    let mat = random_matrix(f.nvars(), cfg.coeff_bound, &mut rng);
    let gf = apply_change_of_coords(f, &mat)?;
    let gg = apply_change_of_coords(g, &mat)?;
    let gens: Vec<Polynomial> = (0..=n).map(|i| gf.pow(i).mul(&gg.pow(n - i))).collect();
    Ok(buchberger_revlex(&gens, cfg.max_basis_size)?)
}

/// Reads `(x^k, x^{k-1} y^{lambda_{k-1}}, ..., y^{lambda_0})` off a list of
/// minimal monomial generators.
pub fn stable_ideal_from_monomials(gens: &[Monomial]) -> Result<StableIdeal> {
    if let Some(bad) = gens.iter().find(|g| g.exps()[2..].iter().any(|&e| e > 0)) {
        return Err(OracleError::Shape(format!("generator {bad} involves more than x, y")).into());
    }
    let k = gens
        .iter()
        .find(|g| g.exps()[1] == 0)
        .map(|g| g.exps()[0] as usize)
        .ok_or_else(|| OracleError::Shape("no pure power of x".into()))?;
    let mut lambdas = vec![None; k];
    for g in gens {
        let (a, b) = (g.exps()[0] as usize, g.exps()[1]);
        if a < k {
            if lambdas[a].is_some() {
                return Err(OracleError::Shape(format!("two generators with x-degree {a}")).into());
            }
            lambdas[a] = Some(i64::from(b));
        }
    }
    let lambdas: Vec<i64> = lambdas
        .into_iter()
        .enumerate()
        .map(|(i, l)| {
            l.ok_or_else(|| {
                GinError::from(OracleError::Shape(format!(
                    "no generator with x-degree {i}"
                )))
            })
        })
        .collect::<Result<_>>()?;
    StableIdeal::new(lambdas).map_err(|e| OracleError::Shape(e.to_string()).into())
}

/// Closure of a monomial ideal under `u -> x_j u / x_i` for `j < i`,
/// checked on its minimal generators.
pub fn is_strongly_stable(gens: &[Monomial]) -> bool {
    let contains = |u: &Monomial| gens.iter().any(|g| g.divides(u));
    gens.iter().all(|u| {
        let e = u.exps();
        (0..e.len()).filter(|&i| e[i] > 0).all(|i| {
            (0..i).all(|j| {
                let mut v = e.to_vec();
                v[i] -= 1;
                v[j] += 1;
                contains(&Monomial::new(v))
            })
        })
    })
}

/// Minimal generators of the initial ideal for one coordinate change.
pub fn initial_ideal(
    params: &CIParams,
    cfg: &OracleConfig,
    coord_seed: u64,
) -> Result<Vec<Monomial>> {
    check_scope(params, MAX_POWER)?;
    let (f, g) = random_ci(params, cfg)?;
    let basis = transformed_power_basis(&f, &g, params.n, coord_seed, cfg)?;
    Ok(minimal_leading_monomials(&basis))
}

/// Runs the oracle and reports which seeds agreed.
pub fn oracle_gin_detailed(params: &CIParams, cfg: &OracleConfig) -> Result<OracleOutcome> {
    check_scope(params, MAX_POWER)?;
    let (f, g) = random_ci(params, cfg)?;
    let mut seeder = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9e37_79b9_7f4a_7c15);
    let attempts = cfg.retry_limit.max(1);
    for retry in 0..attempts {
        let (s1, s2) = (seeder.gen::<u64>(), seeder.gen::<u64>());
        let b1 = transformed_power_basis(&f, &g, params.n, s1, cfg)?;
        let b2 = transformed_power_basis(&f, &g, params.n, s2, cfg)?;
        let m1 = minimal_leading_monomials(&b1);
        if m1 == minimal_leading_monomials(&b2) {
            return Ok(OracleOutcome {
                ideal: stable_ideal_from_monomials(&m1)?,
                coord_seeds: (s1, s2),
                retries: retry,
                basis_size: b1.len(),
            });
        }
    }
    Err(OracleError::Instability { attempts }.into())
}

/// The generic initial ideal of `I^n` computed from an explicit complete
/// intersection under random coordinates.
pub fn oracle_gin(params: &CIParams, cfg: &OracleConfig) -> Result<StableIdeal> {
    oracle_gin_detailed(params, cfg).map(|o| o.ideal)
}
