//! Graded Betti shifts of `I^n` and of a stable ideal, and the consecutive
//! cancellation check between them.

use serde::{Deserialize, Serialize};

use crate::params::CIParams;
use crate::sequence::StableIdeal;

/// Degree shifts of the generators (`b0`) and first syzygies (`b1`), each
/// kept sorted as a multiset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiData {
    pub b0: Vec<i64>,
    pub b1: Vec<i64>,
}

impl BettiData {
    fn sorted(mut b0: Vec<i64>, mut b1: Vec<i64>) -> Self {
        b0.sort_unstable();
        b1.sort_unstable();
        BettiData { b0, b1 }
    }
}

/// `I^n` is minimally generated by `f^p g^{n-p}` with `n` linear syzygies
/// between neighbours, so the resolution is
/// `0 -> (+)_{p=1..n} R(-(alpha p + beta (n+1-p))) -> (+)_{p=0..n} R(-(alpha p + beta (n-p)))`.
pub fn betti_in(params: &CIParams) -> BettiData {
    let (a, b, n) = (params.alpha(), params.beta(), params.n());
    BettiData::sorted(
        (0..=n).map(|p| a * p + b * (n - p)).collect(),
        (1..=n).map(|p| a * p + b * (n + 1 - p)).collect(),
    )
}

/// Eliahou-Kervaire shifts of `J`: generators in degrees `lambda_i + i` and
/// `k`, one syzygy per neighbouring pair in degree `lambda_i + i + 1`.
pub fn betti_j(ideal: &StableIdeal) -> BettiData {
    let lams = ideal.lambdas();
    let mut b0: Vec<i64> = lams.iter().enumerate().map(|(i, l)| l + i as i64).collect();
    b0.push(ideal.k());
    let b1 = lams
        .iter()
        .enumerate()
        .map(|(i, l)| l + i as i64 + 1)
        .collect();
    BettiData::sorted(b0, b1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CancellationReport {
    pub b0_contained: bool,
    pub b1_contained: bool,
    /// `b0(J) - b0(I^n)` as multisets.
    pub extra_b0: Vec<i64>,
    /// `b1(J) - b1(I^n)` as multisets.
    pub extra_b1: Vec<i64>,
}

impl CancellationReport {
    /// The shifts of `I^n` sit inside those of `J` and the surplus pairs up
    /// degree by degree.
    pub fn passed(&self) -> bool {
        self.b0_contained && self.b1_contained && self.extra_b0 == self.extra_b1
    }
}

/// Multiset difference of two sorted lists; `None` if `small` is not contained in `big`.
fn multiset_minus(big: &[i64], small: &[i64]) -> Option<Vec<i64>> {
    let mut rest = Vec::with_capacity(big.len());
    let mut j = 0;
    for &v in big {
        if j < small.len() && small[j] == v {
            j += 1;
        } else if j < small.len() && small[j] < v {
            return None;
        } else {
            rest.push(v);
        }
    }
    (j == small.len()).then_some(rest)
}

pub fn check_cancellation(params: &CIParams, ideal: &StableIdeal) -> CancellationReport {
    let bi = betti_in(params);
    let bj = betti_j(ideal);
    let d0 = multiset_minus(&bj.b0, &bi.b0);
    let d1 = multiset_minus(&bj.b1, &bi.b1);
    CancellationReport {
        b0_contained: d0.is_some(),
        b1_contained: d1.is_some(),
        extra_b0: d0.unwrap_or_default(),
        extra_b1: d1.unwrap_or_default(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(alpha: u32, beta: u32, n: u32) -> CIParams {
        CIParams::new(alpha, beta, n, 2).unwrap()
    }

    #[test]
    fn smallest_examples() {
        let q = p(2, 3, 1);
        assert_eq!(
            betti_in(&q),
            BettiData {
                b0: vec![2, 3],
                b1: vec![5]
            }
        );
        let j = StableIdeal::new(vec![4, 2]).unwrap();
        assert_eq!(
            betti_j(&j),
            BettiData {
                b0: vec![2, 3, 4],
                b1: vec![4, 5]
            }
        );
        let rep = check_cancellation(&q, &j);
        assert!(rep.passed());
        assert_eq!(rep.extra_b0, vec![4]);
        assert_eq!(rep.extra_b1, vec![4]);
    }

    #[test]
    fn maximal_ideal_has_nothing_extra() {
        let rep = check_cancellation(&p(1, 1, 1), &StableIdeal::new(vec![1]).unwrap());
        assert!(rep.passed());
        assert!(rep.extra_b0.is_empty());
    }

    #[test]
    fn far_example() {
        let q = p(4, 12, 3);
        let j = StableIdeal::new(vec![39, 37, 35, 33, 27, 25, 23, 21, 15, 13, 11, 9]).unwrap();
        assert!(check_cancellation(&q, &j).passed());
        let bad = StableIdeal::new(vec![39, 37, 35, 33, 27, 24, 23, 21, 15, 13, 11, 9]).unwrap();
        assert!(!check_cancellation(&q, &bad).passed());
    }

    #[test]
    fn multiset_difference() {
        assert_eq!(multiset_minus(&[1, 2, 2, 3], &[2, 3]), Some(vec![1, 2]));
        assert_eq!(multiset_minus(&[1, 2], &[2, 2]), None);
        assert_eq!(multiset_minus(&[5], &[4]), None);
        assert_eq!(multiset_minus(&[], &[]), Some(vec![]));
    }
}
