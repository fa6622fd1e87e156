//! Case dispatch and the six invariant-producing algorithms.
//!
//! Every algorithm starts at `lambda_0 = n*beta + alpha - 1` and appends
//! gaps produced by small subroutines. The subroutines here are pure: each
//! returns the gaps it would subtract, and [`Tracer`] appends them to the
//! sequence while recording which phase and which call produced them.

#![allow(clippy::int_plus_one)]

use serde::{Deserialize, Serialize};

use crate::error::{GinError, Result};
use crate::params::{derive, CIParams, CaseTag};
use crate::sequence::{InvariantSequence, PhaseTag};

/// One subroutine invocation in an [`AlgorithmTrace`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubroutineCall {
    pub name: String,
    pub args: Vec<(String, i64)>,
    pub phase: PhaseTag,
    pub emitted: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgorithmTrace {
    pub case: CaseTag,
    pub seq: InvariantSequence,
    pub subroutine_log: Vec<SubroutineCall>,
}

impl AlgorithmTrace {
    /// Gaps emitted under the given phase predicate, in sequence order.
    pub fn gaps_where(&self, pred: impl Fn(&PhaseTag) -> bool) -> Vec<i64> {
        let gaps = self.seq.gaps();
        gaps.iter()
            .zip(self.seq.phases.iter().skip(1))
            .filter(|(_, ph)| pred(ph))
            .map(|(g, _)| *g)
            .collect()
    }

    /// Number of subroutine calls with the given name.
    pub fn calls(&self, name: &str) -> usize {
        self.subroutine_log
            .iter()
            .filter(|c| c.name == name)
            .count()
    }
}

/// Picks the algorithm for a parameter tuple. Boundary comparisons are done
/// on cross-multiplied integers.
pub fn dispatch_case(params: &CIParams) -> CaseTag {
    let (alpha, beta, n) = (params.alpha(), params.beta(), params.n());
    if alpha == beta {
        return CaseTag::Equal;
    }
    if beta >= 2 * alpha - 1 {
        return CaseTag::Far;
    }
    if n == 1 {
        return CaseTag::SinglePowerGeneric;
    }
    if 2 * beta >= 3 * alpha {
        return CaseTag::Mid;
    }
    let l = beta - alpha;
    let c = (alpha + l - 1) / l;
    if alpha % l == 0 && n >= alpha / l + 1 {
        CaseTag::CloseDivides
    } else if alpha % l != 0 && n >= c + 1 {
        CaseTag::CloseNotDivides
    } else {
        CaseTag::CloseSmallN
    }
}

/// Runs the dispatched algorithm and validates its output.
pub fn compute_invariants(params: &CIParams) -> Result<InvariantSequence> {
    Ok(trace_invariants(params)?.seq)
}

pub fn trace_invariants(params: &CIParams) -> Result<AlgorithmTrace> {
    params.validate()?;
    let trace = run_case(params, dispatch_case(params))?;
    trace.seq.validate()?;
    Ok(trace)
}

pub fn run_case(params: &CIParams, case: CaseTag) -> Result<AlgorithmTrace> {
    match case {
        CaseTag::Far => run_far(params),
        CaseTag::Mid => run_mid(params),
        CaseTag::CloseDivides => run_close_divides(params),
        CaseTag::CloseNotDivides => run_close_not_divides(params),
        CaseTag::CloseSmallN => run_close_small_n(params),
        CaseTag::Equal => run_equal(params),
        CaseTag::SinglePowerGeneric => run_single_power_generic(params),
    }
}

// ---------------------------------------------------------------------------
// Subroutines. Each returns the gaps it subtracts, in order.

fn repeat(gap: i64, times: i64) -> impl Iterator<Item = i64> {
    std::iter::repeat_n(gap, times.max(0) as usize)
}

/// `alpha - 1` gaps of 2, then one gap of `beta - 2 alpha + 2`.
pub fn block_far(alpha: i64, beta: i64) -> Vec<i64> {
    repeat(2, alpha - 1)
        .chain(std::iter::once(beta - 2 * alpha + 2))
        .collect()
}

pub fn partial_block_far(alpha: i64) -> Vec<i64> {
    repeat(2, alpha - 1).collect()
}

/// `x` gaps of 1 followed by a gap of 2.
pub fn onestwo(x: i64) -> Vec<i64> {
    repeat(1, x).chain(std::iter::once(2)).collect()
}

/// A gap of 2 followed by `x` gaps of 1.
pub fn revonestwo(x: i64) -> Vec<i64> {
    std::iter::once(2).chain(repeat(1, x)).collect()
}

/// For `q = 0..=limq`, `l` copies of `onestwo(q)`.
pub fn build(limq: i64, l: i64) -> Vec<i64> {
    (0..=limq)
        .flat_map(|q| (0..l).flat_map(move |_| onestwo(q)))
        .collect()
}

/// For `q = limq` down to 0, `l` copies of `revonestwo(q)`.
pub fn reverse_build(limq: i64, l: i64) -> Vec<i64> {
    (0..=limq)
        .rev()
        .flat_map(|q| (0..l).flat_map(move |_| revonestwo(q)))
        .collect()
}

/// `limq` gaps of 1, then `l - 1` copies of `revonestwo(limq)`.
pub fn reverse_build_partial(limq: i64, l: i64) -> Vec<i64> {
    repeat(1, limq)
        .chain((1..l).flat_map(|_| revonestwo(limq)))
        .collect()
}

/// Alternating 1, 2 for `2r - 1` steps, then `alpha - (2r - 1)` gaps of 2.
pub fn block_mid(r: i64, alpha: i64) -> Vec<i64> {
    let mut gaps = partial_block_mid(r);
    gaps.extend(repeat(2, alpha - (2 * r - 1)));
    gaps
}

pub fn partial_block_mid(r: i64) -> Vec<i64> {
    (1..=2 * r - 1)
        .map(|t| if t % 2 == 1 { 1 } else { 2 })
        .collect()
}

/// One `onestwo(c - 1)` when `l | alpha`; otherwise `d` copies of
/// `onestwo(c - 1)` followed by `l - d` copies of `onestwo(c - 2)`.
pub fn block_close(c: i64, d: i64, l: i64, alpha: i64) -> Vec<i64> {
    if alpha % l == 0 {
        onestwo(c - 1)
    } else {
        (0..d)
            .flat_map(|_| onestwo(c - 1))
            .chain((d..l).flat_map(|_| onestwo(c - 2)))
            .collect()
    }
}

pub fn partial_block_close(c: i64, d: i64) -> Vec<i64> {
    (0..d).flat_map(|_| onestwo(c - 1)).collect()
}

pub fn partial_block_equal(n: i64) -> Vec<i64> {
    repeat(1, n - 1).collect()
}

// ---------------------------------------------------------------------------

struct Tracer {
    params: CIParams,
    lambdas: Vec<i64>,
    phases: Vec<PhaseTag>,
    log: Vec<SubroutineCall>,
}

impl Tracer {
    fn new(params: &CIParams) -> Self {
        Tracer {
            params: *params,
            lambdas: vec![params.lambda0()],
            phases: Vec::new(),
            log: Vec::new(),
        }
    }

    fn emit(&mut self, name: &str, args: &[(&str, i64)], phase: PhaseTag, gaps: Vec<i64>) {
        // lambda_0 takes the phase of the first phase that runs
        if self.phases.is_empty() {
            self.phases.push(phase);
        }
        for g in &gaps {
            let prev = *self.lambdas.last().unwrap();
            self.lambdas.push(prev - g);
            self.phases.push(phase);
        }
        self.log.push(SubroutineCall {
            name: name.to_string(),
            args: args.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            phase,
            emitted: gaps.len(),
        });
    }

    fn finish(self, case: CaseTag) -> AlgorithmTrace {
        AlgorithmTrace {
            case,
            seq: InvariantSequence {
                params: self.params,
                lambdas: self.lambdas,
                phases: self.phases,
            },
            subroutine_log: self.log,
        }
    }
}

fn precondition(ok: bool, what: &str, params: &CIParams) -> Result<()> {
    params.validate()?;
    if ok {
        Ok(())
    } else {
        Err(GinError::Precondition(format!(
            "{what} does not apply to {params}"
        )))
    }
}

/// Phase tag of the `h`-th (0-based) full pattern block.
fn block_phase(h: i64) -> PhaseTag {
    PhaseTag::PatternBlock(h as u32)
}

/// `beta >= 2 alpha - 1`, `n >= 1`.
pub fn run_far(params: &CIParams) -> Result<AlgorithmTrace> {
    let (alpha, beta, n) = (params.alpha(), params.beta(), params.n());
    precondition(beta >= 2 * alpha - 1, "the far algorithm", params)?;
    let mut tr = Tracer::new(params);
    for h in 0..n - 1 {
        tr.emit(
            "BlockFar",
            &[("alpha", alpha), ("beta", beta)],
            block_phase(h),
            block_far(alpha, beta),
        );
    }
    tr.emit(
        "PartialBlockFar",
        &[("alpha", alpha)],
        PhaseTag::PartialPatternBlock,
        partial_block_far(alpha),
    );
    Ok(tr.finish(CaseTag::Far))
}

/// `2 alpha - 1 > beta >= 3 alpha / 2`, `n >= 2`.
pub fn run_mid(params: &CIParams) -> Result<AlgorithmTrace> {
    let (alpha, beta, n) = (params.alpha(), params.beta(), params.n());
    precondition(
        2 * alpha - 1 > beta && 2 * beta >= 3 * alpha && n >= 2,
        "the mid algorithm",
        params,
    )?;
    let l = beta - alpha;
    let r = 2 * alpha - beta;
    let mut tr = Tracer::new(params);
    tr.emit(
        "Build",
        &[("limq", 0), ("l", l)],
        PhaseTag::Build,
        build(0, l),
    );
    for h in 0..n - 2 {
        tr.emit(
            "BlockMid",
            &[("r", r), ("alpha", alpha)],
            block_phase(h),
            block_mid(r, alpha),
        );
    }
    tr.emit(
        "PartialBlockMid",
        &[("r", r)],
        PhaseTag::PartialPatternBlock,
        partial_block_mid(r),
    );
    tr.emit(
        "ReverseBuild",
        &[("limq", 0), ("l", l)],
        PhaseTag::ReverseBuild,
        reverse_build(0, l),
    );
    Ok(tr.finish(CaseTag::Mid))
}

fn close_region(params: &CIParams) -> bool {
    let (alpha, beta) = (params.alpha(), params.beta());
    beta > alpha && 3 * alpha > 2 * beta
}

fn close_tail(tr: &mut Tracer, limq: i64, l: i64) {
    tr.emit(
        "ReverseBuildPartial",
        &[("limq", limq), ("l", l)],
        PhaseTag::ReverseBuildPartial,
        reverse_build_partial(limq, l),
    );
    if limq >= 1 {
        tr.emit(
            "ReverseBuild",
            &[("limq", limq - 1), ("l", l)],
            PhaseTag::ReverseBuild,
            reverse_build(limq - 1, l),
        );
    }
}

/// `3 alpha / 2 > beta > alpha`, `l | alpha`, `n >= alpha / l + 1`.
pub fn run_close_divides(params: &CIParams) -> Result<AlgorithmTrace> {
    let ok = close_region(params) && params.alpha() % params.l() == 0 && {
        let (alpha, l, n) = (params.alpha(), params.l(), params.n());
        n >= alpha / l + 1
    };
    precondition(ok, "the close (l | alpha) algorithm", params)?;
    let d = derive(params)?;
    let (alpha, l, n) = (params.alpha(), d.l, params.n());
    let (c, dd) = (d.c.unwrap(), d.d.unwrap());
    let mut tr = Tracer::new(params);
    tr.emit(
        "Build",
        &[("limq", c - 2), ("l", l)],
        PhaseTag::Build,
        build(c - 2, l),
    );
    for h in 0..n * l - alpha + l {
        tr.emit(
            "BlockClose",
            &[("c", c), ("d", dd), ("l", l), ("alpha", alpha)],
            block_phase(h),
            block_close(c, dd, l, alpha),
        );
    }
    close_tail(&mut tr, c - 2, l);
    Ok(tr.finish(CaseTag::CloseDivides))
}

/// `3 alpha / 2 > beta > alpha`, `l` does not divide `alpha`,
/// `n >= ceil(alpha / l) + 1`.
pub fn run_close_not_divides(params: &CIParams) -> Result<AlgorithmTrace> {
    let ok = close_region(params) && params.alpha() % params.l() != 0 && {
        let (alpha, l) = (params.alpha(), params.l());
        params.n() >= (alpha + l - 1) / l + 1
    };
    precondition(ok, "the close (l does not divide alpha) algorithm", params)?;
    let d = derive(params)?;
    let (alpha, l, n) = (params.alpha(), d.l, params.n());
    let (c, dd) = (d.c.unwrap(), d.d.unwrap());
    let mut tr = Tracer::new(params);
    tr.emit(
        "Build",
        &[("limq", c - 2), ("l", l)],
        PhaseTag::Build,
        build(c - 2, l),
    );
    for h in 0..n - c {
        tr.emit(
            "BlockClose",
            &[("c", c), ("d", dd), ("l", l), ("alpha", alpha)],
            block_phase(h),
            block_close(c, dd, l, alpha),
        );
    }
    tr.emit(
        "PartialBlockClose",
        &[("c", c), ("d", dd)],
        PhaseTag::PartialPatternBlock,
        partial_block_close(c, dd),
    );
    close_tail(&mut tr, c - 2, l);
    Ok(tr.finish(CaseTag::CloseNotDivides))
}

/// `3 alpha / 2 > beta > alpha`, `2 <= n < ceil(alpha / l) + 1`.
pub fn run_close_small_n(params: &CIParams) -> Result<AlgorithmTrace> {
    let ok = close_region(params) && {
        let (alpha, l, n) = (params.alpha(), params.l(), params.n());
        n >= 2 && n < (alpha + l - 1) / l + 1
    };
    precondition(ok, "the close small-n algorithm", params)?;
    let (beta, l, n) = (params.beta(), params.l(), params.n());
    let mut tr = Tracer::new(params);
    tr.emit(
        "Build",
        &[("limq", n - 2), ("l", l)],
        PhaseTag::Build,
        build(n - 2, l),
    );
    for h in 0..beta - n * l {
        tr.emit("onestwo", &[("x", n - 1)], block_phase(h), onestwo(n - 1));
    }
    close_tail(&mut tr, n - 2, l);
    Ok(tr.finish(CaseTag::CloseSmallN))
}

/// `alpha = beta`, `n >= 1`.
pub fn run_equal(params: &CIParams) -> Result<AlgorithmTrace> {
    precondition(
        params.alpha == params.beta,
        "the equal-degree algorithm",
        params,
    )?;
    let (alpha, n) = (params.alpha(), params.n());
    let mut tr = Tracer::new(params);
    for h in 0..alpha - 1 {
        tr.emit("onestwo", &[("x", n - 1)], block_phase(h), onestwo(n - 1));
    }
    tr.emit(
        "PartialBlockEqual",
        &[("n", n)],
        PhaseTag::PartialPatternBlock,
        partial_block_equal(n),
    );
    Ok(tr.finish(CaseTag::Equal))
}

/// `n = 1`, `alpha < beta < 2 alpha - 1`: every gap is 2.
pub fn run_single_power_generic(params: &CIParams) -> Result<AlgorithmTrace> {
    let (alpha, beta) = (params.alpha(), params.beta());
    precondition(
        params.n == 1 && alpha < beta && beta < 2 * alpha - 1,
        "the single-power formula",
        params,
    )?;
    let mut tr = Tracer::new(params);
    tr.emit(
        "SinglePower",
        &[("alpha", alpha)],
        PhaseTag::PatternBlock(0),
        repeat(2, alpha - 1).collect(),
    );
    Ok(tr.finish(CaseTag::SinglePowerGeneric))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(alpha: u32, beta: u32, n: u32) -> CIParams {
        CIParams::new(alpha, beta, n, 2).unwrap()
    }

    fn lambdas(alpha: u32, beta: u32, n: u32) -> Vec<i64> {
        compute_invariants(&p(alpha, beta, n)).unwrap().lambdas
    }

    #[test]
    fn dispatch_examples() {
        assert_eq!(dispatch_case(&p(4, 12, 3)), CaseTag::Far);
        assert_eq!(dispatch_case(&p(6, 10, 5)), CaseTag::Mid);
        assert_eq!(dispatch_case(&p(6, 8, 3)), CaseTag::CloseSmallN);
        assert_eq!(dispatch_case(&p(1, 1, 5)), CaseTag::Equal);
        assert_eq!(dispatch_case(&p(12, 15, 5)), CaseTag::CloseDivides);
        assert_eq!(dispatch_case(&p(10, 14, 4)), CaseTag::CloseNotDivides);
        assert_eq!(dispatch_case(&p(3, 4, 1)), CaseTag::SinglePowerGeneric);
    }

    #[test]
    fn dispatch_boundaries_are_exact() {
        // beta = 2 alpha - 1 is Far, one less is not
        assert_eq!(dispatch_case(&p(5, 9, 2)), CaseTag::Far);
        assert_eq!(dispatch_case(&p(5, 8, 2)), CaseTag::Mid);
        // 2 beta = 3 alpha is Mid
        assert_eq!(dispatch_case(&p(6, 9, 2)), CaseTag::Mid);
        assert_eq!(dispatch_case(&p(6, 8, 4)), CaseTag::CloseDivides);
        assert_eq!(dispatch_case(&p(6, 8, 3)), CaseTag::CloseSmallN);
        // alpha=7, l=2: c=4, not-divides needs n >= 5
        assert_eq!(dispatch_case(&p(7, 9, 5)), CaseTag::CloseNotDivides);
        assert_eq!(dispatch_case(&p(7, 9, 4)), CaseTag::CloseSmallN);
    }

    #[test]
    fn subroutine_shapes() {
        assert_eq!(onestwo(0), vec![2]);
        assert_eq!(onestwo(2), vec![1, 1, 2]);
        assert_eq!(revonestwo(2), vec![2, 1, 1]);
        assert_eq!(build(1, 2), vec![2, 2, 1, 2, 1, 2]);
        assert_eq!(reverse_build(1, 2), vec![2, 1, 2, 1, 2, 2]);
        assert_eq!(reverse_build(-1, 3), Vec::<i64>::new());
        assert_eq!(reverse_build_partial(2, 3), vec![1, 1, 2, 1, 1, 2, 1, 1]);
        assert_eq!(block_mid(2, 6), vec![1, 2, 1, 2, 2, 2]);
        assert_eq!(partial_block_mid(2), vec![1, 2, 1]);
        assert_eq!(block_close(4, 0, 3, 12), vec![1, 1, 1, 2]);
        assert_eq!(block_close(3, 2, 4, 10), vec![1, 1, 2, 1, 1, 2, 1, 2, 1, 2]);
        assert_eq!(partial_block_close(3, 2), vec![1, 1, 2, 1, 1, 2]);
        assert_eq!(block_far(4, 12), vec![2, 2, 2, 6]);
        assert_eq!(block_far(1, 2), vec![2]);
        assert_eq!(partial_block_far(1), Vec::<i64>::new());
        assert_eq!(partial_block_equal(3), vec![1, 1]);
    }

    #[test]
    fn far_examples() {
        assert_eq!(
            lambdas(4, 9, 4),
            vec![39, 37, 35, 33, 30, 28, 26, 24, 21, 19, 17, 15, 12, 10, 8, 6]
        );
        assert_eq!(run_far(&p(1, 2, 2)).unwrap().seq.lambdas, vec![4, 2]);
    }

    #[test]
    fn mid_example_gaps() {
        let trace = run_mid(&p(6, 10, 5)).unwrap();
        assert_eq!(
            trace.seq.gaps(),
            vec![
                2, 2, 2, 2, 1, 2, 1, 2, 2, 2, 1, 2, 1, 2, 2, 2, 1, 2, 1, 2, 2, 2, 1, 2, 1, 2, 2, 2,
                2
            ]
        );
    }

    #[test]
    fn close_examples() {
        assert_eq!(
            lambdas(7, 10, 2),
            vec![26, 24, 22, 20, 19, 17, 16, 14, 13, 11, 10, 8, 6, 4]
        );
        let s = lambdas(10, 14, 4);
        assert_eq!(s.len(), 40);
        assert_eq!(&s[..6], &[65, 63, 61, 59, 57, 56]);
        assert_eq!(*s.last().unwrap(), 5);
        let t = run_close_divides(&p(9, 12, 4)).unwrap();
        assert_eq!(t.seq.lambdas.len(), 36);
        assert_eq!(&t.seq.lambdas[33..], &[8, 6, 4]);
        assert_eq!(t.calls("BlockClose"), 6);
    }

    #[test]
    fn equal_examples() {
        assert_eq!(
            lambdas(3, 3, 5),
            vec![17, 16, 15, 14, 13, 11, 10, 9, 8, 7, 5, 4, 3, 2, 1]
        );
        assert_eq!(
            run_equal(&p(4, 4, 2)).unwrap().seq.gaps(),
            vec![1, 2, 1, 2, 1, 2, 1]
        );
    }

    #[test]
    fn single_power_examples() {
        assert_eq!(
            run_single_power_generic(&p(3, 4, 1)).unwrap().seq.lambdas,
            vec![6, 4, 2]
        );
        for alpha in 3..12u32 {
            let s = compute_invariants(&p(alpha, alpha + 1, 1)).unwrap();
            assert!(s.gaps().iter().all(|g| *g == 2));
            assert_eq!(*s.lambdas.last().unwrap(), 2);
        }
        assert!(matches!(
            run_single_power_generic(&p(2, 3, 1)),
            Err(GinError::Precondition(_))
        ));
        assert_eq!(compute_invariants(&p(2, 3, 1)).unwrap().lambdas, vec![4, 2]);
    }

    #[test]
    fn runners_reject_other_cases() {
        assert!(matches!(
            run_mid(&p(4, 12, 3)),
            Err(GinError::Precondition(_))
        ));
        assert!(matches!(
            run_far(&p(6, 10, 5)),
            Err(GinError::Precondition(_))
        ));
        assert!(run_close_divides(&p(10, 14, 4)).is_err());
        assert!(run_close_not_divides(&p(12, 15, 5)).is_err());
        assert!(run_close_small_n(&p(12, 15, 5)).is_err());
        assert!(run_equal(&p(3, 4, 2)).is_err());
    }

    #[test]
    fn far_and_equal_agree_at_overlap() {
        for n in 1..8 {
            let far = run_far(&p(1, 1, n)).unwrap();
            let eq = run_equal(&p(1, 1, n)).unwrap();
            assert_eq!(far.seq.lambdas, eq.seq.lambdas);
        }
    }

    #[test]
    fn log_counts_sum_to_k_minus_one() {
        for (a, b, n) in [
            (4, 12, 3),
            (6, 10, 5),
            (12, 15, 5),
            (10, 14, 4),
            (6, 8, 3),
            (3, 3, 5),
            (1, 1, 1),
        ] {
            let t = trace_invariants(&p(a, b, n)).unwrap();
            let total: usize = t.subroutine_log.iter().map(|c| c.emitted).sum();
            assert_eq!(total + 1, t.seq.lambdas.len());
        }
    }

    #[test]
    fn lambda0_phase_follows_first_phase() {
        let t = trace_invariants(&p(6, 10, 5)).unwrap();
        assert_eq!(t.seq.phases[0], PhaseTag::Build);
        let t = trace_invariants(&p(4, 12, 3)).unwrap();
        assert_eq!(t.seq.phases[0], PhaseTag::PatternBlock(0));
        let t = trace_invariants(&p(1, 1, 1)).unwrap();
        assert_eq!(t.seq.phases, vec![PhaseTag::PartialPatternBlock]);
    }
}
