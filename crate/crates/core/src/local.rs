//! Combinatorial arithmetic for monomial ideals in a monomial-quotient local
//! ring A = k[[x_1..x_d]]/N with N monomial, including lengths and socles.
//!
//! Everything here is exact exponent arithmetic: for monomial N and monomial
//! ideals, localization changes nothing, which is why non-monomial local inputs
//! are rejected at parse time rather than silently mis-computed.

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial};
use std::sync::Arc;

/// Ambient descriptor: variable names and the monomial relations N.
#[derive(Debug, PartialEq, Eq)]
pub struct LocalRing {
    vars: Vec<String>,
    relations: Vec<Monomial>,
}

impl LocalRing {
    pub fn new(vars: Vec<String>, relations: Vec<Monomial>) -> Arc<Self> {
        let arity = vars.len();
        debug_assert!(relations.iter().all(|m| m.arity() == arity));
        let relations = minimalize(relations, &[]);
        Arc::new(LocalRing { vars, relations })
    }

    pub fn polynomial(vars: Vec<String>) -> Arc<Self> {
        LocalRing::new(vars, Vec::new())
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn relations(&self) -> &[Monomial] {
        &self.relations
    }

    /// A monomial is standard when it lies outside N.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.relations.iter().any(|n| n.divides(m))
    }

    pub fn max_relation_degree(&self) -> u32 {
        self.relations.iter().map(|m| m.degree()).max().unwrap_or(0)
    }
}

/// Keep only generators not divisible by another generator or by a relation.
fn minimalize(gens: Vec<Monomial>, relations: &[Monomial]) -> Vec<Monomial> {
    let mut kept: Vec<Monomial> = Vec::new();
    let mut sorted = gens;
    sorted.sort_by(|a, b| (a.degree(), a.exps()).cmp(&(b.degree(), b.exps())));
    sorted.dedup();
    for m in sorted {
        if relations.iter().any(|n| n.divides(&m)) {
            continue;
        }
        if kept.iter().any(|k| k.divides(&m)) {
            continue;
        }
        kept.push(m);
    }
    kept
}

/// A monomial ideal of the local ring, stored by its minimal standard generators.
/// The zero ideal has no generators; the unit ideal is generated by 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalIdeal {
    ring: Arc<LocalRing>,
    gens: Vec<Monomial>,
}

impl LocalIdeal {
    pub fn new(ring: Arc<LocalRing>, gens: Vec<Monomial>) -> Self {
        let gens = minimalize(gens, ring.relations());
        LocalIdeal { ring, gens }
    }

    pub fn zero(ring: Arc<LocalRing>) -> Self {
        LocalIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Arc<LocalRing>) -> Self {
        let one = Monomial::one(ring.arity());
        LocalIdeal { ring, gens: vec![one] }
    }

    /// The maximal ideal (x_1, .., x_d), minus any variable that lies in N.
    pub fn maximal(ring: Arc<LocalRing>) -> Self {
        let gens = (0..ring.arity()).map(|i| Monomial::var(ring.arity(), i)).collect();
        LocalIdeal::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<LocalRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn min_gen_count(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|m| m.is_one())
    }

    pub fn max_gen_degree(&self) -> u32 {
        self.gens.iter().map(|m| m.degree()).max().unwrap_or(0)
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if !Arc::ptr_eq(&self.ring, &other.ring) && *self.ring != *other.ring {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    /// Membership of a monomial in V + N.
    pub fn contains_mono(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m)) || !self.ring.is_standard(m)
    }

    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.gens.iter().all(|g| other.contains_mono(g)))
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.gens == other.gens)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(LocalIdeal::new(self.ring.clone(), gens))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.try_mul(b)?);
            }
        }
        Ok(LocalIdeal::new(self.ring.clone(), gens))
    }

    pub fn power(&self, n: u32) -> Result<Self> {
        let mut acc = LocalIdeal::unit(self.ring.clone());
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Colon by a single standard monomial: generated by the exponent
    /// subtractions g/gcd(g, w) over the generators of V and of N.
    pub fn colon_mono(&self, w: &Monomial) -> Result<Self> {
        if !self.ring.is_standard(w) {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.colon_mono_unchecked(w))
    }

    /// Colon by an ideal: intersection over the divisor's generators.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        if other.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let mut acc: Option<LocalIdeal> = None;
        for w in &other.gens {
            let c = self.colon_mono(w)?;
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersect(&c)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Intersection: pairwise lcms, re-minimalized mod N.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(LocalIdeal::new(self.ring.clone(), gens))
    }

    /// All standard monomials of degree <= bound outside V + N, sorted by
    /// (degree, exponents).
    pub fn std_monomials(&self, bound: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for d in 0..=bound {
            for m in monomials_of_degree(self.ring.arity(), d) {
                if !self.contains_mono(&m) {
                    out.push(m);
                }
            }
        }
        out.sort_by(|a, b| (a.degree(), a.exps()).cmp(&(b.degree(), b.exps())));
        out
    }

    /// Whether A/V has finite length: every variable must have a pure power
    /// among the generators of V or N.
    pub fn is_cofinite(&self) -> bool {
        self.pure_power_bound().is_some()
    }

    /// For cofinite V: one plus the largest possible degree of a standard
    /// monomial, derived from the minimal pure variable powers present.
    fn pure_power_bound(&self) -> Option<u32> {
        if self.is_unit() {
            return Some(0);
        }
        let arity = self.ring.arity();
        let mut total: u32 = 0;
        for i in 0..arity {
            let mut best: Option<u32> = None;
            for g in self.gens.iter().chain(self.ring.relations()) {
                if g.exps().iter().enumerate().all(|(j, &e)| j == i || e == 0) && g.degree() > 0 {
                    best = Some(best.map_or(g.exp(i), |b: u32| b.min(g.exp(i))));
                }
            }
            total += best? - 1;
        }
        Some(total + 1)
    }

    /// The full (finite) list of standard monomials of A/V, or an error when
    /// the length is infinite.
    pub fn std_monomials_all(&self) -> Result<Vec<Monomial>> {
        let bound = self.pure_power_bound().ok_or_else(|| Error::InfiniteLength {
            detail: "a variable has no pure power in V + N".into(),
        })?;
        Ok(self.std_monomials(bound))
    }

    /// λ(V/W) for W ⊆ V: the number of monomials in (V+N) \ (W+N).
    pub fn length_between(&self, smaller: &Self) -> Result<u64> {
        self.check_ambient(smaller)?;
        if !smaller.is_subset_of(self)? {
            return Err(Error::NotContained { detail: "length_between needs W ⊆ V".into() });
        }
        // Finite iff for every generator g of V, (W+N : g) is cofinite.
        for g in &self.gens {
            let c = smaller.colon_mono_unchecked(g);
            if !c.is_cofinite() {
                return Err(Error::InfiniteLength {
                    detail: format!("(W : generator of degree {}) is not cofinite", g.degree()),
                });
            }
        }
        let arity = self.ring.arity();
        let max_gen_deg = self
            .max_gen_degree()
            .max(smaller.max_gen_degree())
            .max(self.ring.max_relation_degree());
        let mut count: u64 = 0;
        let mut d = 0u32;
        loop {
            let mut here = 0u64;
            for m in monomials_of_degree(arity, d) {
                if self.contains_mono(&m)
                    && self.ring.is_standard(&m)
                    && !smaller.contains_mono(&m)
                {
                    here += 1;
                }
            }
            count += here;
            if here == 0 && d >= max_gen_deg {
                return Ok(count);
            }
            d += 1;
        }
    }

    /// Colon by a monomial that may lie in V itself (used internally where the
    /// zero-divisor precondition is deliberately not enforced).
    fn colon_mono_unchecked(&self, w: &Monomial) -> Self {
        let mut gens = Vec::new();
        for g in self.gens.iter().chain(self.ring.relations()) {
            gens.push(g.gcd(w).div_into(g).expect("gcd divides"));
        }
        LocalIdeal::new(self.ring.clone(), gens)
    }

    /// λ(A/V) for cofinite V.
    pub fn colength(&self) -> Result<u64> {
        let unit = LocalIdeal::unit(self.ring.clone());
        unit.length_between(self)
    }

    /// λ((V:m)/V): the socle dimension of A/V; A/V is Gorenstein iff this is 1.
    pub fn socle_length(&self) -> Result<u64> {
        if !self.is_cofinite() {
            return Err(Error::InfiniteLength { detail: "A/V has infinite length".into() });
        }
        let m = LocalIdeal::maximal(self.ring.clone());
        let soc = self.colon(&m)?;
        soc.length_between(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    /// A = k[[X,Y,Z]]/(X^2, Y^2, XYZ^2), the ambient of the first worked example.
    fn example_ring() -> Arc<LocalRing> {
        LocalRing::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![mono(&[2, 0, 0]), mono(&[0, 2, 0]), mono(&[1, 1, 2])],
        )
    }

    #[test]
    fn m_times_ideal_absorbs_relations() {
        // m·(y,z) = (xy, xz, yz, z^2): y^2 is absorbed by N.
        let r = example_ring();
        let i = LocalIdeal::new(r.clone(), vec![mono(&[0, 1, 0]), mono(&[0, 0, 1])]);
        let m = LocalIdeal::maximal(r.clone());
        let mi = m.product(&i).unwrap();
        let expect = LocalIdeal::new(
            r,
            vec![mono(&[1, 1, 0]), mono(&[1, 0, 1]), mono(&[0, 1, 1]), mono(&[0, 0, 2])],
        );
        assert!(mi.equals(&expect).unwrap());
    }

    #[test]
    fn colon_self_is_unit() {
        let r = example_ring();
        let v = LocalIdeal::new(r, vec![mono(&[0, 1, 0]), mono(&[0, 0, 1])]);
        assert!(v.colon(&v).unwrap().is_unit());
    }

    #[test]
    fn std_monomials_examples() {
        let free = LocalRing::polynomial(vec!["x".into(), "y".into(), "z".into()]);
        let m = LocalIdeal::maximal(free.clone());
        assert_eq!(m.std_monomials(5), vec![Monomial::one(3)]);
        // V = image of (y,z) in the example ring: standard monomials 1, x.
        let r = example_ring();
        let v = LocalIdeal::new(r.clone(), vec![mono(&[0, 1, 0]), mono(&[0, 0, 1])]);
        assert_eq!(v.std_monomials(2), vec![Monomial::one(3), mono(&[1, 0, 0])]);
        let unit = LocalIdeal::unit(r);
        assert!(unit.std_monomials(4).is_empty());
    }

    #[test]
    fn lengths() {
        let r = example_ring();
        let m = LocalIdeal::maximal(r.clone());
        let unit = LocalIdeal::unit(r.clone());
        assert_eq!(unit.length_between(&m).unwrap(), 1); // λ(A/m) = 1
        // λ(I/mI) = 2 for I = (y, z): the two generator classes.
        let i = LocalIdeal::new(r.clone(), vec![mono(&[0, 1, 0]), mono(&[0, 0, 1])]);
        let mi = m.product(&i).unwrap();
        assert_eq!(i.length_between(&mi).unwrap(), 2);
        assert_eq!(i.length_between(&i).unwrap(), 0);
    }

    #[test]
    fn infinite_length_is_detected() {
        let free = LocalRing::polynomial(vec!["x".into(), "y".into()]);
        let v = LocalIdeal::new(free.clone(), vec![mono(&[1, 0])]); // (x)
        let unit = LocalIdeal::unit(free);
        assert!(matches!(unit.length_between(&v), Err(Error::InfiniteLength { .. })));
    }

    #[test]
    fn socles() {
        let free2 = LocalRing::polynomial(vec!["x".into(), "y".into()]);
        let m = LocalIdeal::maximal(free2.clone());
        assert_eq!(m.socle_length().unwrap(), 1); // residue field
        // (x^2, y): complete intersection, socle spanned by x.
        let ci = LocalIdeal::new(free2.clone(), vec![mono(&[2, 0]), mono(&[0, 1])]);
        assert_eq!(ci.socle_length().unwrap(), 1);
        // (x^2, xy, y^2): socle spanned by x and y.
        let sq = LocalIdeal::new(free2, vec![mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])]);
        assert_eq!(sq.socle_length().unwrap(), 2);
    }

    #[test]
    fn minimality_is_idempotent() {
        let r = example_ring();
        let v = LocalIdeal::new(
            r.clone(),
            vec![mono(&[0, 1, 0]), mono(&[0, 1, 1]), mono(&[0, 2, 0]), mono(&[0, 0, 1])],
        );
        // y absorbs yz; y^2 is in N; so the minimal generators are z, y
        // (canonical order sorts by degree, then exponent vector).
        assert_eq!(v.gens(), &[mono(&[0, 0, 1]), mono(&[0, 1, 0])]);
        let again = LocalIdeal::new(r, v.gens().to_vec());
        assert_eq!(again.gens(), v.gens());
    }
}
