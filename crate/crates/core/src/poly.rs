//! Sparse multivariate polynomials in canonical form.
//!
//! Term lists are sorted strictly descending in the ring's active order, carry no
//! zero coefficients and no duplicate monomials: two polynomials are equal iff
//! their term lists are identical.

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::ring::Ring;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct Polynomial<F: Coeff> {
    ring: Arc<Ring<F>>,
    terms: Vec<(F, Monomial)>,
}

impl<F: Coeff> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.terms == other.terms
    }
}

impl<F: Coeff> Polynomial<F> {
    /// Build from an unnormalized term list: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: Arc<Ring<F>>, mut terms: Vec<(F, Monomial)>) -> Self {
        let order = ring.order().clone();
        terms.sort_by(|a, b| order.cmp_mono(&b.1, &a.1));
        let mut merged: Vec<(F, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match merged.last_mut() {
                Some((lc, lm)) if *lm == m => *lc = lc.add(&c),
                _ => merged.push((c, m)),
            }
            if let Some((lc, _)) = merged.last() {
                if lc.is_zero() {
                    merged.pop();
                }
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        Polynomial { ring, terms: merged }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn terms(&self) -> &[(F, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].1.is_one())
    }

    /// Leading term; panics on zero (callers check).
    pub fn lt(&self) -> (&F, &Monomial) {
        let (c, m) = &self.terms[0];
        (c, m)
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].1
    }

    pub fn lc(&self) -> &F {
        &self.terms[0].0
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m0)) => {
                let d = m0.degree();
                self.terms.iter().all(|(_, m)| m.degree() == d)
            }
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let order = self.ring.order();
        let (a, b) = (&self.terms, &other.terms);
        let mut out: Vec<(F, Monomial)> = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match order.cmp_mono(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (c, m) = &b[j];
                    out.push((if negate_other { c.neg() } else { c.clone() }, m.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let (ca, m) = &a[i];
                    let cb = &b[j].0;
                    let c = if negate_other { ca.sub(cb) } else { ca.add(cb) };
                    if !c.is_zero() {
                        out.push((c, m.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(c, m)| {
            (if negate_other { c.neg() } else { c.clone() }, m.clone())
        }));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, true))
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, m)| (c.neg(), m.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, ma) in &self.terms {
            for (b, mb) in &other.terms {
                terms.push((a.mul(b), ma.try_mul(mb)?));
            }
        }
        Ok(Polynomial::from_terms(self.ring.clone(), terms))
    }

    /// Multiply by a single term. Keeps canonical form without re-sorting.
    pub fn mul_term(&self, c: &F, m: &Monomial) -> Result<Self> {
        if c.is_zero() {
            return Ok(self.ring.zero());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (a, ma) in &self.terms {
            terms.push((a.mul(c), ma.try_mul(m)?));
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, m)| (a.mul(c), m.clone())).collect(),
        }
    }

    pub fn make_monic(&self) -> Self {
        if self.is_zero() || self.lc().is_one() {
            return self.clone();
        }
        self.scale(&self.lc().inv())
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = self.ring.one();
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Map into `target` along `var_map` (variable `i` here becomes `var_map[i]`
    /// there) and renormalize under the target order.
    pub fn embed(&self, target: &Arc<Ring<F>>, var_map: &[usize]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (c.clone(), m.remap(target.arity(), var_map)))
            .collect();
        Polynomial::from_terms(target.clone(), terms)
    }

    /// True when no term involves a variable selected by `mask`.
    pub fn avoids_vars(&self, mask: &[bool]) -> bool {
        self.terms.iter().all(|(_, m)| m.avoids(mask))
    }
}

/// Multivariate division: `f = sum q_i g_i + r` with no term of `r` divisible by
/// any leading monomial of the divisors. Divisor selection is first-match in the
/// given list order, so the output is deterministic.
pub fn divide<F: Coeff>(
    f: &Polynomial<F>,
    divisors: &[&Polynomial<F>],
) -> Result<(Vec<Polynomial<F>>, Polynomial<F>)> {
    let ring = f.ring().clone();
    for g in divisors {
        ring.check_same(g.ring())?;
        if g.is_zero() {
            return Err(Error::ZeroDivisor);
        }
    }
    let mut quotients: Vec<Polynomial<F>> = divisors.iter().map(|_| ring.zero()).collect();
    let mut remainder_terms: Vec<(F, Monomial)> = Vec::new();
    let mut work = f.clone();
    while !work.is_zero() {
        let (lc, lm) = (work.lc().clone(), work.lm().clone());
        let mut reduced = false;
        for (i, g) in divisors.iter().enumerate() {
            if let Some(q) = g.lm().div_into(&lm) {
                let coeff = lc.mul(&g.lc().inv());
                let qterm = ring.monomial_poly(q.clone()).scale(&coeff);
                quotients[i] = quotients[i].add(&qterm)?;
                work = work.sub(&g.mul_term(&coeff, &q)?)?;
                reduced = true;
                break;
            }
        }
        if !reduced {
            remainder_terms.push(work.terms.remove(0));
        }
    }
    let remainder = Polynomial::from_terms(ring, remainder_terms);
    Ok((quotients, remainder))
}

/// Exact division by a single polynomial; errors if the remainder is nonzero.
pub fn div_exact<F: Coeff>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Polynomial<F>> {
    let (mut qs, r) = divide(f, &[g])?;
    if !r.is_zero() {
        return Err(Error::Internal { detail: "expected exact division".into() });
    }
    Ok(qs.remove(0))
}

impl<F: Coeff> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let (neg, abs) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if m.is_one() || abs != "1" {
                factors.push(abs);
            }
            for (v, &e) in self.ring.vars().iter().zip(m.exps()) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf, Rat};
    use crate::order::TermOrder;

    fn ring_q() -> Arc<Ring<Rat>> {
        Ring::new(vec!["x".into(), "y".into()], TermOrder::GrevLex, ())
    }

    fn ring_gf2() -> Arc<Ring<Gf>> {
        Ring::new(vec!["x".into(), "y".into()], TermOrder::GrevLex, 2)
    }

    #[test]
    fn difference_of_squares() {
        let r = ring_q();
        let x = r.var(0);
        let y = r.var(1);
        let lhs = x.add(&y).unwrap().mul(&x.sub(&y).unwrap()).unwrap();
        let rhs = x.mul(&x).unwrap().sub(&y.mul(&y).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn add_zero_identity() {
        let r = ring_q();
        let f = r.parse("3*x^2*y - 1").unwrap();
        assert_eq!(f.add(&r.zero()).unwrap(), f);
    }

    #[test]
    fn freshman_dream_mod_2() {
        // (x+y)^2 = x^2 + y^2 over GF(2): expand and reduce coefficients by hand.
        let r = ring_gf2();
        let f = r.var(0).add(&r.var(1)).unwrap().pow(2).unwrap();
        let expect = r.parse("x^2 + y^2").unwrap();
        assert_eq!(f, expect);
    }

    #[test]
    fn division_one_step() {
        // x^2 by {x^2 - y} leaves remainder y.
        let r = ring_q();
        let f = r.parse("x^2").unwrap();
        let g = r.parse("x^2 - y").unwrap();
        let (qs, rem) = divide(&f, &[&g]).unwrap();
        assert_eq!(rem, r.parse("y").unwrap());
        assert_eq!(qs[0], r.one());
    }

    #[test]
    fn division_self() {
        let r = ring_q();
        let f = r.parse("x^2*y + 3*x - 2").unwrap();
        let (_, rem) = divide(&f, &[&f]).unwrap();
        assert!(rem.is_zero());
    }

    #[test]
    fn division_lex_hand_oracle() {
        // Hand long division: x^2 y + x y^2 by {xy - 1} under lex(x>y) leaves x + y.
        let r: Arc<Ring<Rat>> = Ring::new(vec!["x".into(), "y".into()], TermOrder::Lex, ());
        let f = r.parse("x^2*y + x*y^2").unwrap();
        let g = r.parse("x*y - 1").unwrap();
        let (qs, rem) = divide(&f, &[&g]).unwrap();
        assert_eq!(rem, r.parse("x + y").unwrap());
        // Reconstruct: sum q_i g_i + r == f, bit-exactly.
        let back = qs[0].mul(&g).unwrap().add(&rem).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn display_roundtrip_shape() {
        let r = ring_q();
        let f = r.parse("3*x^2*y - 1").unwrap();
        assert_eq!(f.to_string(), "3*x^2*y - 1");
        assert_eq!(r.parse(&f.to_string()).unwrap(), f);
    }
}
