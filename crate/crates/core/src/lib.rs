//! Reverse-lexicographic generic initial ideals of powers of a
//! two-generator complete intersection `I = (f, g)`, `deg f = alpha <= beta = deg g`.
//!
//! `gin(I^n)` is always `(x^k, x^{k-1} y^{lambda_{k-1}}, ..., x y^{lambda_1}, y^{lambda_0})`
//! with `k = n alpha`. The [`algorithms`] module produces the invariants
//! `lambda_i`; the remaining modules check them independently.

pub mod algorithms;
pub mod betti;
pub mod closed_form;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod params;
pub mod sequence;
pub mod verify;

pub use algorithms::{compute_invariants, dispatch_case, trace_invariants, AlgorithmTrace};
pub use betti::{betti_in, betti_j, check_cancellation, BettiData};
pub use closed_form::{full_sequence_closed, lambda_closed, ClosedFormIndex};
pub use error::{GinError, OracleError, Result};
pub use groebner::{oracle_gin, OracleConfig};
pub use hilbert::{binom, hilbert_in, hilbert_in_bruteforce, hilbert_j, verify_hilbert_equality};
pub use params::{derive, CIParams, CaseTag, DerivedParams};
pub use sequence::{gaps, to_generators, InvariantSequence, PhaseTag, StableIdeal};
pub use verify::{verify, CheckKind, CheckStatus, VerifyOptions, VerifyReport};
