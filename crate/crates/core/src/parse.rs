//! Text syntax for polynomials: terms like `3*x^2*y - 1`. The parser round-trips
//! with the printer.

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;
use std::sync::Arc;

#[derive(Debug, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '+' => {
                chars.next();
                toks.push(Tok::Plus);
            }
            '-' | '−' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                toks.push(Tok::Star);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Caret);
            }
            '/' => {
                chars.next();
                toks.push(Tok::Slash);
            }
            '0'..='9' => {
                let mut n: i64 = 0;
                while let Some(&d) = chars.peek() {
                    if let Some(dig) = d.to_digit(10) {
                        n = n
                            .checked_mul(10)
                            .and_then(|n| n.checked_add(dig as i64))
                            .ok_or(Error::Parse { line: 0, msg: "integer too large".into() })?;
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Int(n));
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut id = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' {
                        id.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Ident(id));
            }
            other => {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("unexpected character '{other}' in polynomial"),
                })
            }
        }
    }
    Ok(toks)
}

impl<F: Coeff> Ring<F> {
    /// Parse a polynomial in this ring's variables.
    pub fn parse(self: &Arc<Self>, s: &str) -> Result<Polynomial<F>> {
        let toks = tokenize(s)?;
        let mut terms: Vec<(F, Monomial)> = Vec::new();
        let mut i = 0usize;
        let err = |msg: &str| Error::Parse { line: 0, msg: msg.to_string() };
        if toks.is_empty() {
            return Err(err("empty polynomial"));
        }
        loop {
            // sign
            let mut negative = false;
            while i < toks.len() {
                match toks[i] {
                    Tok::Plus => i += 1,
                    Tok::Minus => {
                        negative = !negative;
                        i += 1;
                    }
                    _ => break,
                }
            }
            if i >= toks.len() {
                return Err(err("dangling sign"));
            }
            // term: factors separated by '*'
            let mut coeff = F::one(self.ctx());
            let mut mono = Monomial::one(self.arity());
            loop {
                match &toks[i] {
                    Tok::Int(n) => {
                        let mut c = F::from_i64(self.ctx(), *n);
                        i += 1;
                        if i < toks.len() && toks[i] == Tok::Slash {
                            i += 1;
                            match toks.get(i) {
                                Some(Tok::Int(d)) if *d != 0 => {
                                    c = c.mul(&F::from_i64(self.ctx(), *d).inv());
                                    i += 1;
                                }
                                _ => return Err(err("expected nonzero integer denominator")),
                            }
                        }
                        coeff = coeff.mul(&c);
                    }
                    Tok::Ident(name) => {
                        let vi = self
                            .var_index(name)
                            .ok_or_else(|| err(&format!("unknown variable '{name}'")))?;
                        i += 1;
                        let mut e: u32 = 1;
                        if i < toks.len() && toks[i] == Tok::Caret {
                            i += 1;
                            match toks.get(i) {
                                Some(Tok::Int(n)) if *n >= 0 => {
                                    e = u32::try_from(*n).map_err(|_| Error::ExponentOverflow)?;
                                    i += 1;
                                }
                                _ => return Err(err("expected nonnegative integer exponent")),
                            }
                        }
                        mono = mono.try_mul(&Monomial::var_pow(self.arity(), vi, e))?;
                    }
                    _ => return Err(err("expected a coefficient or variable")),
                }
                if i < toks.len() && toks[i] == Tok::Star {
                    i += 1;
                    continue;
                }
                break;
            }
            if negative {
                coeff = coeff.neg();
            }
            terms.push((coeff, mono));
            if i >= toks.len() {
                break;
            }
            match toks[i] {
                Tok::Plus | Tok::Minus => continue,
                _ => return Err(err("expected '+' or '-' between terms")),
            }
        }
        Ok(Polynomial::from_terms(self.clone(), terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rat;
    use crate::order::TermOrder;

    fn ring() -> Arc<Ring<Rat>> {
        Ring::new(vec!["x".into(), "y".into(), "z".into()], TermOrder::GrevLex, ())
    }

    #[test]
    fn parses_spec_shapes() {
        let r = ring();
        assert_eq!(r.parse("3*x^2*y - 1").unwrap().to_string(), "3*x^2*y - 1");
        assert_eq!(r.parse("x").unwrap(), r.var(0));
        assert_eq!(r.parse("-x + x").unwrap(), r.zero());
        assert_eq!(r.parse("1/2*x").unwrap().scale(&Rat::from_ratio(2, 1)), r.var(0));
        assert_eq!(r.parse("x*y*z^0").unwrap().to_string(), "x*y");
    }

    #[test]
    fn rejects_unknown_variable() {
        let r = ring();
        assert!(r.parse("w + 1").is_err());
    }
}
