use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::error::OracleError;

/// Full reduction of `f` modulo `basis` (every term, not only the leading one).
pub fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut p = f.clone();
    let mut rem = Polynomial::zero(f.nvars());
    while let Some((lm, lc)) = p.pop_leading() {
        let divisor = basis.iter().find_map(|g| {
            let (glm, glc) = g.leading_term()?;
            glm.quotient_of(&lm).map(|q| (g, q, glc))
        });
        match divisor {
            Some((g, q, glc)) => {
                let c = -(&lc / glc);
                let mut tail = g.clone();
                tail.pop_leading();
                p.add_scaled_shifted(&tail, &c, &q);
            }
            None => rem.add_term(lm, lc),
        }
    }
    rem
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let mut s = Polynomial::zero(f.nvars());
    s.add_scaled_shifted(f, &fc.recip(), &fm.quotient_of(&l).unwrap());
    s.add_scaled_shifted(g, &-gc.recip(), &gm.quotient_of(&l).unwrap());
    s
}

/// Reduced Groebner basis under graded reverse lexicographic order.
///
/// Pairs are processed by smallest lcm degree, ties broken by insertion
/// order; pairs with coprime leading monomials are skipped. The result is
/// monic and sorted by decreasing leading monomial.
pub fn buchberger_revlex(
    generators: &[Polynomial],
    max_basis_size: usize,
) -> Result<Vec<Polynomial>, OracleError> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in generators {
        if g.is_zero() {
            return Err(OracleError::Shape("zero generator".into()));
        }
        if g.homogeneous_degree().is_none() {
            return Err(OracleError::Shape("generator is not homogeneous".into()));
        }
        let r = reduce(g, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let lcm_deg = |b: &[Polynomial], (i, j): (usize, usize)| {
        b[i].leading_monomial()
            .unwrap()
            .lcm(b[j].leading_monomial().unwrap())
            .degree()
    };
    while !pairs.is_empty() {
        let pos = (0..pairs.len())
            .min_by_key(|&n| (lcm_deg(&basis, pairs[n]), pairs[n]))
            .unwrap();
        let (i, j) = pairs.swap_remove(pos);
        let (mi, mj) = (
            basis[i].leading_monomial().unwrap(),
            basis[j].leading_monomial().unwrap(),
        );
        if mi.is_coprime(mj) {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        basis.push(r.monic());
        if basis.len() > max_basis_size {
            return Err(OracleError::CapExceeded {
                cap: max_basis_size,
            });
        }
        let new = basis.len() - 1;
        for i in 0..new {
            pairs.push((i, new));
        }
    }
    Ok(interreduce(basis))
}

fn interreduce(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial().unwrap().clone())
        .collect();
    let mut keep: Vec<Polynomial> = Vec::new();
    for (n, g) in basis.iter().enumerate() {
        let redundant = lms
            .iter()
            .enumerate()
            .any(|(o, lm)| o != n && lm.divides(&lms[n]) && (lm != &lms[n] || o < n));
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out: Vec<Polynomial> = Vec::with_capacity(keep.len());
    for n in 0..keep.len() {
        let mut g = keep[n].clone();
        let (lm, lc) = g.pop_leading().unwrap();
        let others: Vec<Polynomial> = keep
            .iter()
            .enumerate()
            .filter(|(o, _)| *o != n)
            .map(|(_, p)| p.clone())
            .collect();
        let mut tail = reduce(&g, &others);
        tail.add_term(lm, lc);
        out.push(tail.monic());
    }
    out.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    out
}

/// Leading monomials of a Groebner basis with the redundant ones removed.
pub fn minimal_leading_monomials(basis: &[Polynomial]) -> Vec<Monomial> {
    let lms: Vec<Monomial> = basis
        .iter()
        .filter_map(|g| g.leading_monomial().cloned())
        .collect();
    let mut out: Vec<Monomial> = lms
        .iter()
        .enumerate()
        .filter(|(n, m)| {
            !lms.iter()
                .enumerate()
                .any(|(o, other)| o != *n && other.divides(m) && (other != *m || o < *n))
        })
        .map(|(_, m)| m.clone())
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Whether every element of `basis` reduces its S-pairs to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    for j in 0..basis.len() {
        for i in 0..j {
            if !reduce(&s_polynomial(&basis[i], &basis[j]), basis).is_zero() {
                return false;
            }
        }
    }
    true
}
