//! Monomials: exponent vectors with a cached total degree.
//!
//! Exponents are bounded naturals with checked arithmetic; overflow is a reported
//! error, never wraparound.

use crate::error::{Error, Result};

pub type Exp = u32;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<Exp>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: Vec<Exp>) -> Result<Self> {
        let mut deg: u32 = 0;
        for &e in &exps {
            deg = deg.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial { exps, deg })
    }

    pub fn one(arity: usize) -> Self {
        Monomial { exps: vec![0; arity], deg: 0 }
    }

    pub fn var(arity: usize, i: usize) -> Self {
        let mut exps = vec![0; arity];
        exps[i] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn var_pow(arity: usize, i: usize, e: Exp) -> Self {
        let mut exps = vec![0; arity];
        exps[i] = e;
        Monomial { exps, deg: e }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    /// Total degree of the variables selected by `mask`.
    pub fn degree_masked(&self, mask: &[bool]) -> u32 {
        self.exps.iter().zip(mask).filter(|(_, &m)| m).map(|(&e, _)| e).sum()
    }

    pub fn exps(&self) -> &[Exp] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> Exp {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch { left: self.arity(), right: other.arity() });
        }
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(b).ok_or(Error::ExponentOverflow)?);
        }
        let deg = self.deg.checked_add(other.deg).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exps, deg })
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.arity() == other.arity() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn div_into(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        let exps: Vec<Exp> = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        let deg = other.deg - self.deg;
        Some(Monomial { exps, deg })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.arity(), other.arity());
        let exps: Vec<Exp> =
            self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.arity(), other.arity());
        let exps: Vec<Exp> =
            self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect();
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn coprime_with(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn try_pow(&self, n: u32) -> Result<Self> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for &e in &self.exps {
            exps.push(e.checked_mul(n).ok_or(Error::ExponentOverflow)?);
        }
        let deg = self.deg.checked_mul(n).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exps, deg })
    }

    /// True when every variable in `mask` has exponent zero.
    pub fn avoids(&self, mask: &[bool]) -> bool {
        self.exps.iter().zip(mask).all(|(&e, &m)| !m || e == 0)
    }

    /// Re-index the exponents into a ring of arity `new_arity`; `map[i]` is the
    /// target slot of variable `i`.
    pub fn remap(&self, new_arity: usize, map: &[usize]) -> Self {
        let mut exps = vec![0; new_arity];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[map[i]] = e;
        }
        Monomial { exps, deg: self.deg }
    }

    /// Keep only the variables with `keep[i]` set, in order.
    pub fn project(&self, keep: &[bool]) -> Self {
        let exps: Vec<Exp> = self
            .exps
            .iter()
            .zip(keep)
            .filter(|(_, &k)| k)
            .map(|(&e, _)| e)
            .collect();
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }
}

/// All monomials of the given arity and exact total degree, in lexicographic
/// order of exponent vectors (descending first coordinate).
pub fn monomials_of_degree(arity: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; arity];
    fn rec(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, pos: usize, rem: u32) {
        if pos + 1 == cur.len() {
            cur[pos] = rem;
            out.push(Monomial { exps: cur.clone(), deg: cur.iter().sum() });
            return;
        }
        for e in (0..=rem).rev() {
            cur[pos] = e;
            rec(out, cur, pos + 1, rem - e);
        }
    }
    if arity == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(&mut out, &mut cur, 0, degree);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcm_gcd_div() {
        let m1 = Monomial::new(vec![2, 3, 0]).unwrap();
        let m2 = Monomial::new(vec![1, 4, 1]).unwrap();
        assert_eq!(m1.lcm(&m2).exps(), &[2, 4, 1]);
        assert_eq!(m1.gcd(&m2).exps(), &[1, 3, 0]);
        assert!(m1.gcd(&m2).divides(&m1));
        assert_eq!(m1.gcd(&m2).div_into(&m1).unwrap().exps(), &[1, 0, 0]);
        assert!(m1.div_into(&m2).is_none());
    }

    #[test]
    fn overflow_is_reported() {
        let m = Monomial::new(vec![u32::MAX, 0]).unwrap();
        assert_eq!(m.try_mul(&m), Err(Error::ExponentOverflow));
        assert_eq!(m.try_pow(2), Err(Error::ExponentOverflow));
    }

    #[test]
    fn degree_enumeration_counts() {
        // C(n+k-1, k-1) monomials of degree n in k variables.
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(1, 7).len(), 1);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert_eq!(monomials_of_degree(0, 2).len(), 0);
    }
}
