//! Direct evaluation of `lambda_v` from per-case closed formulas, independent
//! of the gap-emitting algorithms.
//!
//! Each index `v` is located in the Build, Pattern or Reverse Build range of
//! its case (tried in that order) and the matching formula is evaluated.
//! Reverse Build formulas are anchored at `lambda_{k-1} = l + 1` and work on
//! the mirrored index `T = k - 1 - v`.

use serde::{Deserialize, Serialize};

use crate::algorithms::dispatch_case;
use crate::error::{GinError, Result};
use crate::params::{derive, CIParams, CaseTag};
use crate::sequence::{InvariantSequence, PhaseTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Build,
    Pattern,
    ReverseBuild,
}

/// Case-specific coordinates of an index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Coords {
    /// `v` itself (or the mirrored `T` for Reverse Build).
    Linear { t: i64 },
    /// `v = j alpha + s`.
    Far { j: i64, s: i64 },
    /// `v = q n + j`.
    Equal { q: i64, j: i64 },
    /// `t = l(1 + ... + q) + (q+1) j - x`, with `t = v` in the Build and
    /// `t = k - 1 - v` in the Reverse Build.
    Staircase { q: i64, j: i64, x: i64 },
    /// `v = l + j alpha + y`.
    MidPattern { j: i64, y: i64 },
    /// `v = E + p alpha + j w + i` where `w` is the block width, or, with
    /// `tail`, `v = E + p alpha + d c + j (c-1) + i`.
    Pattern { p: i64, j: i64, i: i64, tail: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormIndex {
    pub v: i64,
    pub family: Family,
    pub coords: Coords,
}

/// Constants shared by the Build/Pattern/Reverse Build cases.
#[derive(Debug, Clone, Copy)]
struct Shape {
    case: CaseTag,
    l: i64,
    alpha: i64,
    lambda0: i64,
    /// Largest `q` in the Build.
    limq: i64,
    /// Width of a Pattern Block (`c` or `n`).
    width: i64,
    e: i64,
    b: i64,
    c: i64,
    d: i64,
}

fn tri(n: i64) -> i64 {
    n * (n + 1) / 2
}

impl Shape {
    fn new(params: &CIParams, case: CaseTag) -> Result<Shape> {
        let dp = derive(params)?;
        let (c, d) = (dp.c.unwrap_or(0), dp.d.unwrap_or(0));
        let (limq, width) = match case {
            CaseTag::CloseSmallN => (params.n() - 2, params.n()),
            _ => (c - 2, c),
        };
        let l = dp.l;
        Ok(Shape {
            case,
            l,
            alpha: params.alpha(),
            lambda0: dp.lambda0,
            limq,
            width,
            e: l * tri(limq + 1),
            b: l * (tri(limq + 2) - 1),
            c,
            d,
        })
    }

    /// Staircase coordinates of `t` in `(l, limq]`; `None` beyond the Build.
    fn staircase(&self, t: i64) -> Option<Coords> {
        if t <= self.l {
            return Some(Coords::Linear { t });
        }
        let mut q = 1;
        while q <= self.limq {
            let base = self.l * tri(q);
            let top = self.l * tri(q + 1);
            if t <= top {
                let p = t - base;
                let j = (p + q) / (q + 1);
                return Some(Coords::Staircase {
                    q,
                    j,
                    x: (q + 1) * j - p,
                });
            }
            q += 1;
        }
        None
    }

    /// Total drop `lambda_0 - lambda_t` across the first `t` Build gaps.
    fn staircase_drop(&self, coords: Coords) -> i64 {
        match coords {
            Coords::Linear { t } => 2 * t,
            Coords::Staircase { q, j, x } => {
                let head = (tri(q + 1) - 1) * self.l;
                if x == 0 {
                    head + (q + 1) * j + j
                } else {
                    head + (q + 1) * j - x + j - 1
                }
            }
            _ => unreachable!("not a staircase coordinate"),
        }
    }
}

/// Every formula whose stated range contains `v`, in Build, Pattern,
/// Reverse Build order, each paired with its value and whether the range
/// carries an exclusion for `v`.
fn candidates(params: &CIParams, v: i64) -> Result<Vec<(ClosedFormIndex, i64, bool)>> {
    params.validate()?;
    let k = params.k();
    if v < 0 || v >= k {
        return Err(GinError::IndexOutOfRange { index: v, k });
    }
    let case = dispatch_case(params);
    let idx = |family, coords| ClosedFormIndex { v, family, coords };
    let (alpha, beta, n) = (params.alpha(), params.beta(), params.n());
    let mut out = Vec::new();
    match case {
        CaseTag::Far => {
            let (j, s) = (v / alpha, v % alpha);
            let lam = (n - j) * beta + alpha - 1 - 2 * s;
            out.push((idx(Family::Pattern, Coords::Far { j, s }), lam, false));
        }
        CaseTag::Equal => {
            let (q, j) = (v / n, v % n);
            let lam = (n + 1) * alpha - 1 - q * (n + 1) - j;
            out.push((idx(Family::Pattern, Coords::Equal { q, j }), lam, false));
        }
        CaseTag::SinglePowerGeneric => {
            let lam = params.lambda0() - 2 * v;
            out.push((idx(Family::Pattern, Coords::Linear { t: v }), lam, false));
        }
        CaseTag::Mid => {
            let l = params.l();
            let r = 2 * alpha - beta;
            let lambda0 = params.lambda0();
            if v <= l {
                out.push((
                    idx(Family::Build, Coords::Linear { t: v }),
                    lambda0 - 2 * v,
                    false,
                ));
            }
            if v > l && v <= k - l - 2 {
                let w = v - l;
                let (j, y) = (w / alpha, w % alpha);
                let drop = if y == 0 {
                    j * (l + alpha) + 2 * l
                } else if y >= 2 * r - 1 {
                    2 * l + (alpha + l) * j + 2 * y - (alpha - l)
                } else if y % 2 == 0 {
                    2 * l + (alpha + l) * j + 3 * (y / 2)
                } else {
                    2 * l + (alpha + l) * j + 3 * ((y + 1) / 2) - 2
                };
                out.push((
                    idx(Family::Pattern, Coords::MidPattern { j, y }),
                    lambda0 - drop,
                    false,
                ));
            }
            let i = k - v;
            if (1..=l + 1).contains(&i) {
                out.push((
                    idx(Family::ReverseBuild, Coords::Linear { t: i - 1 }),
                    l + 2 * i - 1,
                    false,
                ));
            }
        }
        CaseTag::CloseDivides | CaseTag::CloseNotDivides | CaseTag::CloseSmallN => {
            let sh = Shape::new(params, case)?;
            if v <= sh.e {
                if let Some(co) = sh.staircase(v) {
                    out.push((
                        idx(Family::Build, co),
                        sh.lambda0 - sh.staircase_drop(co),
                        false,
                    ));
                }
            }
            if v > sh.e && v <= k - sh.e {
                let (co, lam) = close_pattern(&sh, v - sh.e);
                out.push((idx(Family::Pattern, co), lam, false));
            }
            let t = k - 1 - v;
            if t <= sh.e {
                if let Some(co) = sh.staircase(t) {
                    let excluded = t >= sh.e - 1;
                    let lam = params.lambda_last() + sh.staircase_drop(co);
                    out.push((idx(Family::ReverseBuild, co), lam, excluded));
                }
            }
        }
    }
    Ok(out)
}

/// Pattern formulas for the three close cases; `w = v - E >= 1`.
fn close_pattern(sh: &Shape, w: i64) -> (Coords, i64) {
    let base = sh.lambda0 - sh.b;
    if sh.case != CaseTag::CloseNotDivides {
        let (j, i) = (w / sh.width, w % sh.width);
        let co = Coords::Pattern {
            p: 0,
            j,
            i,
            tail: false,
        };
        return (co, base - (j * (sh.width + 1) + i));
    }
    let (c, d, l, alpha) = (sh.c, sh.d, sh.l, sh.alpha);
    let (mut p, u) = (w / alpha, w % alpha);
    let head_step = p * (l + alpha);
    if u > 0 && u <= d * c {
        let (j, i) = (u / c, u % c);
        let co = Coords::Pattern {
            p,
            j,
            i,
            tail: false,
        };
        return (co, base - (head_step + j * (c + 1) + i));
    }
    let (j, i) = if u == 0 {
        p -= 1;
        (l - d, 0)
    } else {
        let rest = u - d * c;
        (rest / (c - 1), rest % (c - 1))
    };
    let co = Coords::Pattern {
        p,
        j,
        i,
        tail: true,
    };
    (co, base - (p * (l + alpha) + d * (c + 1) + j * c + i))
}

/// Reassembles `v` from its coordinates using the case's indexing identity.
pub fn reassemble(params: &CIParams, index: &ClosedFormIndex) -> Result<i64> {
    let case = dispatch_case(params);
    let mirror = |t: i64| match index.family {
        Family::ReverseBuild => params.k() - 1 - t,
        _ => t,
    };
    let v = match index.coords {
        Coords::Linear { t } => mirror(t),
        Coords::Far { j, s } => j * params.alpha() + s,
        Coords::Equal { q, j } => q * params.n() + j,
        Coords::Staircase { q, j, x } => mirror(params.l() * tri(q) + (q + 1) * j - x),
        Coords::MidPattern { j, y } => params.l() + j * params.alpha() + y,
        Coords::Pattern { p, j, i, tail } => {
            let sh = Shape::new(params, case)?;
            if tail {
                sh.e + p * sh.alpha + sh.d * sh.c + j * (sh.c - 1) + i
            } else {
                sh.e + p * sh.alpha + j * sh.width + i
            }
        }
    };
    Ok(v)
}

/// Locates `v` and returns the coordinates of the formula used.
pub fn locate(params: &CIParams, v: i64) -> Result<ClosedFormIndex> {
    primary(params, v).map(|(idx, _)| idx)
}

fn primary(params: &CIParams, v: i64) -> Result<(ClosedFormIndex, i64)> {
    candidates(params, v)?
        .into_iter()
        .find(|(_, _, excluded)| !excluded)
        .map(|(idx, lam, _)| (idx, lam))
        .ok_or_else(|| {
            GinError::Coverage(format!("index {v} matches no formula range for {params}"))
        })
}

/// `lambda_v` from the closed formulas of the dispatched case.
pub fn lambda_closed(params: &CIParams, v: i64) -> Result<i64> {
    primary(params, v).map(|(_, lam)| lam)
}

/// Pattern block an index belongs to, counting the block that ends at it.
fn block_of(coords: &Coords) -> u32 {
    let b = match *coords {
        Coords::Far { j, s } => j - i64::from(s == 0 && j > 0),
        Coords::Equal { q, j } => q - i64::from(j == 0 && q > 0),
        Coords::MidPattern { j, y } => j - i64::from(y == 0),
        Coords::Pattern {
            p,
            j,
            i,
            tail: false,
        } if p == 0 && i == 0 => j - 1,
        Coords::Pattern { p, .. } => p,
        _ => 0,
    };
    b.max(0) as u32
}

/// Assembles `lambda_0, ..., lambda_{k-1}` from the closed formulas.
///
/// Fails with a coverage error if some index matches no range, or if two
/// formulas whose stated ranges both contain an index disagree there
/// (including the Reverse Build formulas at their excluded boundary points).
pub fn full_sequence_closed(params: &CIParams) -> Result<InvariantSequence> {
    let k = params.k();
    let mut lambdas = Vec::with_capacity(k as usize);
    let mut phases = Vec::with_capacity(k as usize);
    for v in 0..k {
        let all = candidates(params, v)?;
        let (idx, lam) = primary(params, v)?;
        if let Some((other, val, _)) = all.iter().find(|(_, val, _)| *val != lam) {
            return Err(GinError::Coverage(format!(
                "index {v} of {params}: {:?} formula gives {lam} but {:?} formula gives {val}",
                idx.family, other.family
            )));
        }
        lambdas.push(lam);
        phases.push(match idx.family {
            Family::Build => PhaseTag::Build,
            Family::ReverseBuild => PhaseTag::ReverseBuild,
            Family::Pattern => PhaseTag::PatternBlock(block_of(&idx.coords)),
        });
    }
    Ok(InvariantSequence {
        params: *params,
        lambdas,
        phases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(alpha: u32, beta: u32, n: u32) -> CIParams {
        CIParams::new(alpha, beta, n, 2).unwrap()
    }

    #[test]
    fn single_values() {
        assert_eq!(lambda_closed(&p(4, 12, 3), 5).unwrap(), 25);
        assert_eq!(
            locate(&p(4, 12, 3), 5).unwrap().coords,
            Coords::Far { j: 1, s: 1 }
        );
        assert_eq!(lambda_closed(&p(3, 3, 5), 7).unwrap(), 9);
        assert_eq!(
            locate(&p(3, 3, 5), 7).unwrap().coords,
            Coords::Equal { q: 1, j: 2 }
        );
        let q = p(12, 15, 5);
        let first: Vec<i64> = (0..4).map(|v| lambda_closed(&q, v).unwrap()).collect();
        assert_eq!(first, vec![86, 84, 82, 80]);
    }

    #[test]
    fn last_index_is_l_plus_one() {
        for (a, b, n) in [
            (4, 12, 3),
            (6, 10, 5),
            (12, 15, 5),
            (10, 14, 4),
            (7, 9, 2),
            (3, 3, 5),
            (5, 7, 1),
        ] {
            let q = p(a, b, n);
            assert_eq!(lambda_closed(&q, q.k() - 1).unwrap(), q.l() + 1, "{q}");
        }
    }

    #[test]
    fn out_of_range() {
        let q = p(4, 12, 3);
        assert!(matches!(
            lambda_closed(&q, 12),
            Err(GinError::IndexOutOfRange { index: 12, k: 12 })
        ));
        assert!(matches!(
            lambda_closed(&q, -1),
            Err(GinError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn trivial_sequence() {
        assert_eq!(full_sequence_closed(&p(1, 1, 1)).unwrap().lambdas, vec![1]);
    }

    #[test]
    fn mid_example_listing() {
        let seq = full_sequence_closed(&p(6, 10, 5)).unwrap();
        assert_eq!(
            seq.lambdas,
            vec![
                55, 53, 51, 49, 47, 46, 44, 43, 41, 39, 37, 36, 34, 33, 31, 29, 27, 26, 24, 23, 21,
                19, 17, 16, 14, 13, 11, 9, 7, 5
            ]
        );
    }

    #[test]
    fn boundary_points_are_excluded_from_reverse_build() {
        let q = p(12, 15, 5);
        let (k, e) = (q.k(), 18);
        assert_eq!(locate(&q, k - e).unwrap().family, Family::Pattern);
        assert_eq!(locate(&q, k - 1 - e).unwrap().family, Family::Pattern);
        assert_eq!(locate(&q, k - e + 1).unwrap().family, Family::ReverseBuild);
        assert_eq!(locate(&q, e).unwrap().family, Family::Build);
    }

    #[test]
    fn reassembly_round_trip() {
        for (a, b, n) in [
            (4, 12, 3),
            (6, 10, 5),
            (12, 15, 5),
            (10, 14, 4),
            (7, 9, 2),
            (3, 3, 5),
            (5, 7, 1),
            (9, 12, 4),
        ] {
            let q = p(a, b, n);
            for v in 0..q.k() {
                let idx = locate(&q, v).unwrap();
                assert_eq!(reassemble(&q, &idx).unwrap(), v, "{q} v={v} {idx:?}");
            }
        }
    }
}
