//! Input parameters of a complete-intersection power problem and the
//! integer quantities derived from them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GinError, Result};

/// A power `I^n` of a complete intersection `I = (f, g)` with
/// `deg f = alpha <= beta = deg g`, living in a polynomial ring with `m`
/// variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CIParams {
    pub alpha: u32,
    pub beta: u32,
    pub n: u32,
    pub m: u32,
}

impl CIParams {
    pub fn new(alpha: u32, beta: u32, n: u32, m: u32) -> Result<Self> {
        let params = CIParams { alpha, beta, n, m };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if self.alpha < 1 {
            return Err(GinError::InvalidParams(format!(
                "alpha must be at least 1 (got {})",
                self.alpha
            )));
        }
        if self.alpha > self.beta {
            return Err(GinError::InvalidParams(format!(
                "alpha <= beta required (got alpha={}, beta={})",
                self.alpha, self.beta
            )));
        }
        if self.n < 1 {
            return Err(GinError::InvalidParams(format!(
                "power n must be at least 1 (got {})",
                self.n
            )));
        }
        if self.m < 2 {
            return Err(GinError::InvalidParams(format!(
                "need at least 2 variables for a length-2 regular sequence (got m={})",
                self.m
            )));
        }
        Ok(())
    }

    pub fn alpha(&self) -> i64 {
        i64::from(self.alpha)
    }

    pub fn beta(&self) -> i64 {
        i64::from(self.beta)
    }

    pub fn n(&self) -> i64 {
        i64::from(self.n)
    }

    pub fn m(&self) -> i64 {
        i64::from(self.m)
    }

    /// `k = n * alpha`, the number of invariants.
    pub fn k(&self) -> i64 {
        self.n() * self.alpha()
    }

    /// `beta - alpha`.
    pub fn l(&self) -> i64 {
        self.beta() - self.alpha()
    }

    /// `n * beta + alpha - 1`.
    pub fn lambda0(&self) -> i64 {
        self.n() * self.beta() + self.alpha() - 1
    }

    /// `beta - alpha + 1`.
    pub fn lambda_last(&self) -> i64 {
        self.l() + 1
    }

    /// The single gap value that is neither 1 nor 2 in general.
    pub fn wide_gap(&self) -> i64 {
        self.beta() - 2 * self.alpha() + 2
    }
}

impl fmt::Display for CIParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(alpha={}, beta={}, n={}, m={})",
            self.alpha, self.beta, self.n, self.m
        )
    }
}

/// Quantities derived from [`CIParams`]; all exact integers.
///
/// `c`, `d`, `e` and `b` only make sense when `l > 0` and are `None`
/// otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedParams {
    pub k: i64,
    pub l: i64,
    pub r: i64,
    pub c: Option<i64>,
    pub d: Option<i64>,
    pub lambda0: i64,
    pub lambda_last: i64,
    /// `l * (1 + ... + (c-1))`
    pub e: Option<i64>,
    /// `l * (2 + ... + c)`
    pub b: Option<i64>,
}

pub fn derive(params: &CIParams) -> Result<DerivedParams> {
    params.validate()?;
    let alpha = params.alpha();
    let l = params.l();
    let (c, d, e, b) = if l > 0 {
        let c = (alpha + l - 1) / l;
        let d = alpha % l;
        let e = l * (c - 1) * c / 2;
        let b = l * (c * (c + 1) / 2 - 1);
        (Some(c), Some(d), Some(e), Some(b))
    } else {
        (None, None, None, None)
    };
    Ok(DerivedParams {
        k: params.k(),
        l,
        r: 2 * alpha - params.beta(),
        c,
        d,
        lambda0: params.lambda0(),
        lambda_last: params.lambda_last(),
        e,
        b,
    })
}

/// Which invariant-producing algorithm applies to a parameter tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    Far,
    Mid,
    CloseDivides,
    CloseNotDivides,
    CloseSmallN,
    Equal,
    /// `n = 1` with `alpha < beta < 2 alpha - 1`.
    SinglePowerGeneric,
}

impl CaseTag {
    pub const ALL: [CaseTag; 7] = [
        CaseTag::Far,
        CaseTag::Mid,
        CaseTag::CloseDivides,
        CaseTag::CloseNotDivides,
        CaseTag::CloseSmallN,
        CaseTag::Equal,
        CaseTag::SinglePowerGeneric,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::Far => "Far",
            CaseTag::Mid => "Mid",
            CaseTag::CloseDivides => "CloseDivides",
            CaseTag::CloseNotDivides => "CloseNotDivides",
            CaseTag::CloseSmallN => "CloseSmallN",
            CaseTag::Equal => "Equal",
            CaseTag::SinglePowerGeneric => "SinglePowerGeneric",
        }
    }

    /// Whether the case has a Build and a Reverse Build phase.
    pub fn has_build(&self) -> bool {
        matches!(
            self,
            CaseTag::Mid | CaseTag::CloseDivides | CaseTag::CloseNotDivides | CaseTag::CloseSmallN
        )
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derive_far_example() {
        let d = derive(&CIParams::new(4, 12, 3, 3).unwrap()).unwrap();
        assert_eq!(d.k, 12);
        assert_eq!(d.l, 8);
        assert_eq!(d.lambda0, 39);
        assert_eq!(d.lambda_last, 9);
    }

    #[test]
    fn derive_smallest() {
        let d = derive(&CIParams::new(1, 1, 1, 2).unwrap()).unwrap();
        assert_eq!((d.k, d.l, d.lambda0, d.lambda_last), (1, 0, 1, 1));
        assert_eq!((d.c, d.d, d.e, d.b), (None, None, None, None));
    }

    #[test]
    fn derive_close_divides_example() {
        let d = derive(&CIParams::new(12, 15, 5, 2).unwrap()).unwrap();
        assert_eq!(d.l, 3);
        assert_eq!(d.c, Some(4));
        assert_eq!(d.d, Some(0));
        assert_eq!(d.e, Some(18));
        assert_eq!(d.b, Some(27));
        assert_eq!(d.k, 60);
        assert_eq!(d.lambda0, 86);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(matches!(
            CIParams::new(5, 4, 1, 2),
            Err(GinError::InvalidParams(_))
        ));
        assert!(matches!(
            CIParams::new(1, 2, 0, 2),
            Err(GinError::InvalidParams(_))
        ));
        assert!(matches!(
            CIParams::new(1, 2, 1, 1),
            Err(GinError::InvalidParams(_))
        ));
        assert!(matches!(
            CIParams::new(0, 2, 1, 2),
            Err(GinError::InvalidParams(_))
        ));
        let raw = CIParams {
            alpha: 3,
            beta: 2,
            n: 1,
            m: 2,
        };
        assert!(derive(&raw).is_err());
    }

    #[test]
    fn c_and_d_bracket_alpha() {
        for alpha in 1..30u32 {
            for beta in alpha + 1..3 * alpha {
                let p = CIParams::new(alpha, beta, 1, 2).unwrap();
                let d = derive(&p).unwrap();
                let (c, dd) = (d.c.unwrap(), d.d.unwrap());
                let a = i64::from(alpha);
                assert!(d.l * (c - 1) < a && a <= d.l * c);
                assert!(0 <= dd && dd < d.l);
                assert_eq!(derive(&p).unwrap(), d);
            }
        }
    }
}
