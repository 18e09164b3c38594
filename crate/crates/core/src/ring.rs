//! Ring descriptors: variable names, coefficient context and active term order.
//!
//! Polynomials carry an `Arc<Ring<F>>`; two polynomials interoperate only when
//! their descriptors agree (same variables, field and order).

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Polynomial;
use std::sync::Arc;

#[derive(Debug)]
pub struct Ring<F: Coeff> {
    vars: Vec<String>,
    order: TermOrder,
    ctx: F::Ctx,
}

impl<F: Coeff> PartialEq for Ring<F> {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.order == other.order && self.ctx == other.ctx
    }
}

impl<F: Coeff> Ring<F> {
    pub fn new(vars: Vec<String>, order: TermOrder, ctx: F::Ctx) -> Arc<Self> {
        Arc::new(Ring { vars, order, ctx })
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn descriptor(&self) -> String {
        format!("{}[{}]/{}", F::field_name(&self.ctx), self.vars.join(","), self.order.name())
    }

    pub fn check_same(&self, other: &Self) -> Result<()> {
        if self != other {
            return Err(Error::RingMismatch {
                expected: self.descriptor(),
                found: other.descriptor(),
            });
        }
        Ok(())
    }

    /// Same variables and field, different active order.
    pub fn with_order(self: &Arc<Self>, order: TermOrder) -> Arc<Self> {
        Ring::new(self.vars.clone(), order, self.ctx.clone())
    }

    /// Ring on a subset of the variables (those with `keep[i]` true), same field.
    pub fn subring(self: &Arc<Self>, keep: &[bool], order: TermOrder) -> Arc<Self> {
        let vars = self
            .vars
            .iter()
            .zip(keep)
            .filter(|(_, &k)| k)
            .map(|(v, _)| v.clone())
            .collect();
        Ring::new(vars, order, self.ctx.clone())
    }

    /// Ring with extra variables appended in front, same field.
    pub fn extended_front(self: &Arc<Self>, new_vars: &[&str], order: TermOrder) -> Arc<Self> {
        let mut vars: Vec<String> = new_vars.iter().map(|s| s.to_string()).collect();
        vars.extend(self.vars.iter().cloned());
        Ring::new(vars, order, self.ctx.clone())
    }
}

impl<F: Coeff> Ring<F> {
    pub fn zero(self: &Arc<Self>) -> Polynomial<F> {
        Polynomial::from_terms(self.clone(), Vec::new())
    }

    pub fn one(self: &Arc<Self>) -> Polynomial<F> {
        self.constant(F::one(&self.ctx))
    }

    pub fn constant(self: &Arc<Self>, c: F) -> Polynomial<F> {
        if c.is_zero() {
            return self.zero();
        }
        Polynomial::from_terms(self.clone(), vec![(c, Monomial::one(self.arity()))])
    }

    pub fn from_i64(self: &Arc<Self>, n: i64) -> Polynomial<F> {
        self.constant(F::from_i64(&self.ctx, n))
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial<F> {
        self.monomial_poly(Monomial::var(self.arity(), i))
    }

    pub fn monomial_poly(self: &Arc<Self>, m: Monomial) -> Polynomial<F> {
        debug_assert_eq!(m.arity(), self.arity());
        Polynomial::from_terms(self.clone(), vec![(F::one(&self.ctx), m)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf;

    #[test]
    fn descriptor_and_mismatch() {
        let r = Ring::<Gf>::new(vec!["x".into(), "y".into()], TermOrder::GrevLex, 32003);
        let s = r.with_order(TermOrder::Lex);
        assert!(r.check_same(&s).is_err());
        assert_eq!(r.descriptor(), "GF(32003)[x,y]/grevlex");
    }
}
