use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use crate::error::OracleError;

/// A polynomial with exact rational coefficients; zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(coeff: BigRational, mono: Monomial) -> Self {
        let mut p = Polynomial::zero(mono.nvars());
        p.add_term(mono, coeff);
        p
    }

    pub fn monomial(mono: Monomial) -> Self {
        Polynomial::term(BigRational::one(), mono)
    }

    /// Builds from integer-coefficient terms given as exponent vectors.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (c, e) in terms {
            p.add_term(
                Monomial::new(e.to_vec()),
                BigRational::from_integer(BigInt::from(*c)),
            );
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> Option<&BigRational> {
        self.terms.get(mono)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Removes and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<(Monomial, BigRational)> {
        self.terms.pop_last()
    }

    /// `self += c * shift * other`.
    pub fn add_scaled_shifted(&mut self, other: &Polynomial, c: &BigRational, shift: &Monomial) {
        for (m, a) in other.terms.iter() {
            self.add_term(m.mul(shift), a * c);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled_shifted(other, &BigRational::one(), &Monomial::one(self.nvars));
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled_shifted(other, &-BigRational::one(), &Monomial::one(self.nvars));
        out
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        out.add_scaled_shifted(self, c, &Monomial::one(self.nvars));
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, a) in self.terms.iter() {
            out.add_scaled_shifted(other, a, m);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::monomial(Monomial::one(self.nvars));
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, lc)) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    /// Common degree of all terms, or `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// `f(g(x))` with `g(x_i) = sum_j g[i][j] x_j`.
    pub fn substitute_linear(&self, g: &[Vec<BigRational>]) -> Polynomial {
        let m = self.nvars;
        let images: Vec<Polynomial> = (0..m)
            .map(|i| {
                let mut p = Polynomial::zero(m);
                for (j, c) in g[i].iter().enumerate() {
                    p.add_term(Monomial::var(m, j), c.clone());
                }
                p
            })
            .collect();
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::monomial(Monomial::one(m)), p.clone()])
            .collect();
        let mut out = Polynomial::zero(m);
        for (mono, c) in self.terms.iter() {
            let mut prod = Polynomial::term(c.clone(), Monomial::one(m));
            for (i, &e) in mono.exps().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    prod = prod.mul(&powers[i][e as usize]);
                }
            }
            out = out.add(&prod);
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            let sign = match (n, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            f.write_str(sign)?;
            let mono_one = m.degree() == 0;
            if abs.is_one() && !mono_one {
                write!(f, "{m}")?;
            } else if mono_one {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Determinant of a square rational matrix by fraction-exact elimination.
pub fn determinant(g: &[Vec<BigRational>]) -> BigRational {
    let n = g.len();
    let mut a: Vec<Vec<BigRational>> = g.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            let (top, bottom) = a.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &factor * y;
            }
        }
    }
    det
}

/// Integer matrix to rational entries.
pub fn rational_matrix(g: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    g.iter()
        .map(|row| {
            row.iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect()
}

/// Applies the coordinate change `x_i -> sum_j g[i][j] x_j` to `f`.
pub fn apply_change_of_coords(f: &Polynomial, g: &[Vec<i64>]) -> Result<Polynomial, OracleError> {
    let m = f.nvars();
    if g.len() != m || g.iter().any(|row| row.len() != m) {
        return Err(OracleError::Shape(format!("expected a {m}x{m} matrix")));
    }
    let q = rational_matrix(g);
    if determinant(&q).is_zero() {
        return Err(OracleError::SingularMatrix);
    }
    Ok(f.substitute_linear(&q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn arithmetic_and_leading_term() {
        let x = Polynomial::monomial(Monomial::var(2, 0));
        let y = Polynomial::monomial(Monomial::var(2, 1));
        let s = x.add(&y).pow(2);
        assert_eq!(s.len(), 3);
        assert_eq!(s.coeff(&Monomial::new(vec![1, 1])), Some(&int(2)));
        assert_eq!(s.leading_monomial(), Some(&Monomial::new(vec![2, 0])));
        assert!(s.sub(&s).is_zero());
        assert_eq!(s.to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!(s.homogeneous_degree(), Some(2));
        assert_eq!(s.add(&x).homogeneous_degree(), None);
    }

    #[test]
    fn change_of_coords_examples() {
        let x2 = Polynomial::from_int_terms(2, &[(1, &[2, 0])]);
        let id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(apply_change_of_coords(&x2, &id).unwrap(), x2);
        let shear = vec![vec![1, 1], vec![0, 1]];
        let image = apply_change_of_coords(&x2, &shear).unwrap();
        assert_eq!(image.to_string(), "x^2 + 2*x*y + y^2");
        let y2 = Polynomial::from_int_terms(2, &[(1, &[0, 2])]);
        assert_eq!(apply_change_of_coords(&y2, &shear).unwrap(), y2);
        let singular = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(
            apply_change_of_coords(&x2, &singular),
            Err(OracleError::SingularMatrix)
        );
    }

    #[test]
    fn dense_image_under_generic_matrix() {
        let f = Polynomial::from_int_terms(3, &[(1, &[2, 1, 0]), (-3, &[0, 0, 3])]);
        let g = vec![vec![3, -7, 5], vec![2, 11, -4], vec![-6, 1, 9]];
        let image = apply_change_of_coords(&f, &g).unwrap();
        // C(3 + 2, 2) monomials of degree 3 in 3 variables
        assert_eq!(image.len(), 10);
        assert_eq!(image.homogeneous_degree(), Some(3));
    }

    #[test]
    fn determinants() {
        let m = rational_matrix(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(determinant(&m), int(-1));
        let m = rational_matrix(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]);
        // 2*(3-2) - 0 + 1*(1-3) = 0
        assert_eq!(determinant(&m), int(0));
    }
}
