//! Exact coefficient arithmetic: GF(p) for a configurable prime (default 32003)
//! and arbitrary-precision rationals.
//!
//! Coefficients are context-carrying values: a `Gf` element knows its modulus, a
//! `Rat` needs no context. Constants are manufactured through `Coeff::Ctx`, which
//! lives in the ring descriptor.

use num::{BigInt, BigRational, One, Zero};
use std::fmt;

/// Default prime for modular runs; a standard CAS choice, large enough that
/// desk-scale inputs never collide with characteristic effects.
pub const DEFAULT_PRIME: u64 = 32003;

/// An exact field element usable as a polynomial coefficient.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Data needed to build constants: the prime for GF(p), nothing for the rationals.
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; callers guarantee the element is nonzero.
    fn inv(&self) -> Self;
    /// Human-readable field name, e.g. `GF(32003)` or `QQ`.
    fn field_name(ctx: &Self::Ctx) -> String;
}

/// Residue modulo a prime `p`, stored in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Gf {
    v: u64,
    p: u64,
}

impl Gf {
    pub fn new(v: i64, p: u64) -> Self {
        let m = v.rem_euclid(p as i64) as u64;
        Gf { v: m, p }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.p, other.p, "mixed moduli {} and {}", self.p, other.p);
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Gf { v: 1 % self.p, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl Coeff for Gf {
    type Ctx = u64;

    fn zero(p: &u64) -> Self {
        Gf { v: 0, p: *p }
    }

    fn one(p: &u64) -> Self {
        Gf { v: 1 % *p, p: *p }
    }

    fn from_i64(p: &u64, n: i64) -> Self {
        Gf::new(n, *p)
    }

    fn is_zero(&self) -> bool {
        self.v == 0
    }

    fn is_one(&self) -> bool {
        self.v == 1 % self.p
    }

    fn add(&self, other: &Self) -> Self {
        self.check(other);
        let s = self.v + other.v;
        Gf { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }

    fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let s = self.v + self.p - other.v;
        Gf { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }

    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        Gf { v: ((self.v as u128 * other.v as u128) % self.p as u128) as u64, p: self.p }
    }

    fn neg(&self) -> Self {
        Gf { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }

    fn inv(&self) -> Self {
        assert!(self.v != 0, "inverse of zero in GF({})", self.p);
        self.pow(self.p - 2)
    }

    fn field_name(p: &u64) -> String {
        format!("GF({p})")
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Symmetric representative: small negatives print as negatives.
        if self.v > self.p / 2 {
            write!(f, "-{}", self.p - self.v)
        } else {
            write!(f, "{}", self.v)
        }
    }
}

/// Arbitrary-precision rational, always in lowest terms with positive denominator
/// (maintained by the underlying representation).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn from_ratio(n: i64, d: i64) -> Self {
        Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }
}

impl Coeff for Rat {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        Rat(BigRational::zero())
    }

    fn one(_: &()) -> Self {
        Rat(BigRational::one())
    }

    fn from_i64(_: &(), n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, other: &Self) -> Self {
        Rat(&self.0 + &other.0)
    }

    fn sub(&self, other: &Self) -> Self {
        Rat(&self.0 - &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Rat(&self.0 * &other.0)
    }

    fn neg(&self) -> Self {
        Rat(-self.0.clone())
    }

    fn inv(&self) -> Self {
        assert!(!self.0.is_zero(), "inverse of zero rational");
        Rat(self.0.recip())
    }

    fn field_name(_: &()) -> String {
        "QQ".to_string()
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf_field_axioms_spot() {
        let p = 32003u64;
        let a = Gf::new(12345, p);
        let b = Gf::new(-7, p);
        assert_eq!(a.add(&b).sub(&b), a);
        assert_eq!(a.mul(&a.inv()), Gf::one(&p));
        assert_eq!(a.mul(&Gf::zero(&p)), Gf::zero(&p));
        assert_eq!(b.neg().neg(), b);
    }

    #[test]
    fn gf_display_symmetric() {
        let p = 32003u64;
        assert_eq!(Gf::new(-1, p).to_string(), "-1");
        assert_eq!(Gf::new(2, p).to_string(), "2");
    }

    #[test]
    fn rat_lowest_terms() {
        let x = Rat::from_ratio(6, -4);
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(x.mul(&x.inv()), Rat::one(&()));
    }
}
