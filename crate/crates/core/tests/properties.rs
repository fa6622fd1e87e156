use ginkit::algorithms::run_case;
use ginkit::closed_form::{locate, reassemble};
use ginkit::hilbert::verify_hilbert_equality_raw;
use ginkit::{
    binom, check_cancellation, compute_invariants, dispatch_case, full_sequence_closed, hilbert_j,
    lambda_closed, to_generators, trace_invariants, CIParams, CaseTag, PhaseTag, StableIdeal,
};
use num_bigint::BigUint;
use proptest::prelude::*;

const CASES: [CaseTag; 7] = [
    CaseTag::Equal,
    CaseTag::Far,
    CaseTag::SinglePowerGeneric,
    CaseTag::Mid,
    CaseTag::CloseDivides,
    CaseTag::CloseNotDivides,
    CaseTag::CloseSmallN,
];

fn params() -> impl Strategy<Value = CIParams> {
    (1u32..=12)
        .prop_flat_map(|a| (Just(a), a..=3 * a + 4, 1u32..=7, 2u32..=5))
        .prop_map(|(a, b, n, m)| CIParams::new(a, b, n, m).unwrap())
}

/// Parameters in the region `3 alpha / 2 > beta > alpha` with `n >= 2`.
fn close_params() -> impl Strategy<Value = CIParams> {
    (3u32..=20)
        .prop_flat_map(|a| (Just(a), a + 1..=(3 * a - 1) / 2, 2u32..=8))
        .prop_filter("beta in range", |(a, b, _)| b > a && 2 * b < 3 * a)
        .prop_map(|(a, b, n)| CIParams::new(a, b, n, 2).unwrap())
}

proptest! {
    #[test]
    fn sequence_invariants(p in params()) {
        let seq = compute_invariants(&p).unwrap();
        prop_assert!(seq.validate().is_ok());
        let l = &seq.lambdas;
        let (a, b, n) = (p.alpha(), p.beta(), p.n());
        prop_assert_eq!(l.len() as i64, n * a);
        prop_assert_eq!(l[0], n * b + a - 1);
        prop_assert_eq!(*l.last().unwrap(), b - a + 1);
        prop_assert!(l.windows(2).all(|w| w[0] > w[1]));
        let g = seq.gaps();
        prop_assert!(g.iter().all(|&x| x == 1 || x == 2 || x == b - 2 * a + 2));
        prop_assert_eq!(g.iter().sum::<i64>(), (n - 1) * b + 2 * a - 2);
        prop_assert_eq!(to_generators(&seq).unwrap().generators().len(), l.len() + 1);
    }

    #[test]
    fn closed_form_matches_algorithm(p in params()) {
        let alg = compute_invariants(&p).unwrap();
        prop_assert_eq!(&full_sequence_closed(&p).unwrap().lambdas, &alg.lambdas);
        for v in 0..p.k() {
            prop_assert_eq!(lambda_closed(&p, v).unwrap(), alg.lambdas[v as usize]);
            let idx = locate(&p, v).unwrap();
            prop_assert_eq!(reassemble(&p, &idx).unwrap(), v);
        }
        prop_assert!(lambda_closed(&p, p.k()).is_err());
        prop_assert!(lambda_closed(&p, -1).is_err());
    }

    #[test]
    fn hilbert_and_betti(p in params()) {
        let seq = compute_invariants(&p).unwrap();
        let rep = verify_hilbert_equality_raw(&p, &seq.lambdas, None);
        prop_assert!(rep.passed(), "{:?}", rep.first_failure);
        let j = StableIdeal::new(seq.lambdas.clone()).unwrap();
        let na = p.n() * p.alpha();
        for t in 0..=p.lambda0() + p.m() {
            let h = hilbert_j(&j, p.m(), t);
            prop_assert_eq!(h > 0.into(), t >= na, "t = {}", t);
        }
        prop_assert!(check_cancellation(&p, &j).passed());
    }

    #[test]
    fn trace_accounting(p in params()) {
        let tr = trace_invariants(&p).unwrap();
        let emitted: usize = tr.subroutine_log.iter().map(|c| c.emitted).sum();
        prop_assert_eq!(emitted as i64, p.k() - 1);
        prop_assert_eq!(tr.seq.phases.len() as i64, p.k());
        match tr.case {
            CaseTag::Far => prop_assert_eq!(tr.calls("BlockFar") as i64, p.n() - 1),
            CaseTag::CloseDivides => {
                let (a, l, n) = (p.alpha(), p.l(), p.n());
                prop_assert_eq!(tr.calls("BlockClose") as i64, n * l - a + l);
            }
            _ => {}
        }
    }

    #[test]
    fn build_and_reverse_build_mirror(p in params()) {
        let tr = trace_invariants(&p).unwrap();
        let build = tr.gaps_where(|ph| *ph == PhaseTag::Build);
        let reverse = tr.gaps_where(PhaseTag::is_reverse);
        match tr.case {
            CaseTag::Far | CaseTag::Equal => {
                prop_assert!(tr.seq.phases.iter().all(|ph| *ph != PhaseTag::Build && !ph.is_reverse()));
            }
            CaseTag::Mid => {
                let mut rev = build.clone();
                rev.reverse();
                prop_assert_eq!(reverse, rev);
            }
            CaseTag::CloseDivides | CaseTag::CloseNotDivides | CaseTag::CloseSmallN => {
                prop_assert_eq!(tr.seq.phases.first(), Some(&PhaseTag::Build));
                // with limq = 0 the Reverse Build emits nothing
                prop_assert!(reverse.is_empty() || tr.seq.phases.last().unwrap().is_reverse());
                let mut rev = build[..build.len() - 1].to_vec();
                rev.reverse();
                prop_assert_eq!(reverse, rev);
            }
            CaseTag::SinglePowerGeneric => {}
        }
    }

    #[test]
    fn close_cases_mirror(p in close_params()) {
        let tr = trace_invariants(&p).unwrap();
        let build = tr.gaps_where(|ph| *ph == PhaseTag::Build);
        let mut rev = build[..build.len() - 1].to_vec();
        rev.reverse();
        prop_assert_eq!(tr.gaps_where(PhaseTag::is_reverse), rev);
    }

    #[test]
    fn dispatch_is_exclusive(p in params()) {
        let applicable: Vec<CaseTag> = CASES.into_iter().filter(|c| run_case(&p, *c).is_ok()).collect();
        let case = dispatch_case(&p);
        prop_assert!(applicable.contains(&case));
        if p.alpha == 1 && p.beta == 1 {
            prop_assert_eq!(applicable, vec![CaseTag::Equal, CaseTag::Far]);
        } else {
            prop_assert_eq!(applicable, vec![case]);
        }
    }

    #[test]
    fn pascal_and_summation(z in -200i64..=200, p in 0i64..=12) {
        if p >= 1 {
            prop_assert_eq!(binom(z, p), binom(z - 1, p - 1) + binom(z - 1, p));
        }
        if z >= 0 {
            let sum: BigUint = (0..=z).map(|w| binom(w, p)).sum();
            prop_assert_eq!(sum, binom(z + 1, p + 1));
        }
    }

    #[test]
    fn shifted_summations(z in -200i64..=200, p in 0i64..=10, l1 in 1i64..=60, span in 0i64..=60) {
        let l2 = l1 + span;
        let up: BigUint = (l1..=l2).map(|j| binom(z + j, p)).sum();
        prop_assert_eq!(up + binom(z + l1, p + 1), binom(z + l2 + 1, p + 1));
        let down: BigUint = (l1..=l2).map(|j| binom(z - j, p)).sum();
        prop_assert_eq!(down + binom(z - l2, p + 1), binom(z - l1 + 1, p + 1));
    }
}

#[test]
fn far_and_equal_agree_at_one_one() {
    for n in 1..=6 {
        let p = CIParams::new(1, 1, n, 2).unwrap();
        let far = run_case(&p, CaseTag::Far).unwrap();
        let equal = run_case(&p, CaseTag::Equal).unwrap();
        assert_eq!(far.seq.lambdas, equal.seq.lambdas);
    }
}
