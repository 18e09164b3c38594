//! Term orders: lex, graded reverse lex, and block (elimination) orders.
//!
//! A block order ranks any monomial containing an eliminated variable above all
//! monomials free of them, which is what makes elimination work.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use std::cmp::Ordering;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TermOrder {
    Lex,
    GrevLex,
    /// Compare the `eliminated` variables first (with `front`), then the rest
    /// (with `back`). Nested blocks are allowed in `back`.
    Block { eliminated: Vec<bool>, front: Box<TermOrder>, back: Box<TermOrder> },
}

impl TermOrder {
    /// Standard elimination order: `eliminated` block first, grevlex inside both blocks.
    pub fn elimination(eliminated: Vec<bool>) -> TermOrder {
        TermOrder::Block {
            eliminated,
            front: Box::new(TermOrder::GrevLex),
            back: Box::new(TermOrder::GrevLex),
        }
    }

    /// Arity-checked comparison; `EQ` iff the exponent vectors are equal.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.arity() != b.arity() {
            return Err(Error::ArityMismatch { left: a.arity(), right: b.arity() });
        }
        Ok(self.cmp_mono(a, b))
    }

    /// Comparison for internal use where equal arity is an invariant.
    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_on(a, b, None)
    }

    /// Compare while only looking at positions where `active` is true (all
    /// positions when `None`).
    fn cmp_on(&self, a: &Monomial, b: &Monomial, active: Option<&[bool]>) -> Ordering {
        let on = |i: usize| active.map_or(true, |m| m[i]);
        match self {
            TermOrder::Lex => {
                for i in 0..a.arity() {
                    if !on(i) {
                        continue;
                    }
                    match a.exp(i).cmp(&b.exp(i)) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            TermOrder::GrevLex => {
                let (mut da, mut db) = (0u64, 0u64);
                for i in 0..a.arity() {
                    if on(i) {
                        da += a.exp(i) as u64;
                        db += b.exp(i) as u64;
                    }
                }
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                // Reverse lex tie-break: last differing variable, smaller exponent wins.
                for i in (0..a.arity()).rev() {
                    if !on(i) {
                        continue;
                    }
                    match a.exp(i).cmp(&b.exp(i)) {
                        Ordering::Equal => {}
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
            TermOrder::Block { eliminated, front, back } => {
                let front_active: Vec<bool> = (0..a.arity())
                    .map(|i| on(i) && eliminated[i])
                    .collect();
                match front.cmp_on(a, b, Some(&front_active)) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                let back_active: Vec<bool> = (0..a.arity())
                    .map(|i| on(i) && !eliminated[i])
                    .collect();
                back.cmp_on(a, b, Some(&back_active))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            TermOrder::Lex => "lex".into(),
            TermOrder::GrevLex => "grevlex".into(),
            TermOrder::Block { .. } => "block".into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    #[test]
    fn grevlex_tiebreak() {
        // x^2 y vs x y^2: same degree, grevlex ranks x^2 y higher.
        assert_eq!(TermOrder::GrevLex.cmp_mono(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        // y^5 vs x under lex(x > y).
        assert_eq!(TermOrder::Lex.cmp_mono(&m(&[0, 5]), &m(&[1, 0])), Ordering::Less);
    }

    #[test]
    fn block_dominates() {
        // Eliminating {t} (variable 0): t beats x^10.
        let ord = TermOrder::elimination(vec![true, false]);
        assert_eq!(ord.cmp_mono(&m(&[1, 0]), &m(&[0, 10])), Ordering::Greater);
    }

    #[test]
    fn arity_checked() {
        let r = TermOrder::Lex.compare(&m(&[1]), &m(&[1, 0]));
        assert_eq!(r, Err(Error::ArityMismatch { left: 1, right: 2 }));
    }
}
