//! Exact Groebner-basis oracle: build a complete intersection, move it to
//! random coordinates, and read the initial ideal of its `n`-th power off a
//! reduced revlex basis over the rationals.

pub mod buchberger;
pub mod monomial;
pub mod oracle;
pub mod polynomial;

pub use buchberger::{buchberger_revlex, minimal_leading_monomials, reduce};
pub use monomial::Monomial;
pub use oracle::{
    initial_ideal, is_strongly_stable, oracle_gin, oracle_gin_detailed, random_ci, OracleConfig,
    OracleOutcome,
};
pub use polynomial::{apply_change_of_coords, Polynomial};
