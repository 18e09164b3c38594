//! Buchberger engine and the derived ideal calculus: membership, elimination,
//! intersection, colon, saturation, sums/products/powers and equality.
//!
//! Pair selection is the normal strategy (minimal lcm degree first) with the
//! coprime and chain criteria. Bases are inter-reduced, so each ideal has a
//! unique reduced basis under its order; every basis element is monic.

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::{div_exact, Polynomial};
use crate::ring::Ring;
use std::collections::{BTreeSet, HashSet};
use std::sync::{Arc, OnceLock};

/// Default S-polynomial degree cap; results that hit it are flagged truncated.
pub const DEFAULT_CAP: u32 = 30;

#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Coeff> {
    pub polys: Vec<Polynomial<F>>,
    /// Lowest S-polynomial degree that was skipped, when the cap was hit.
    pub truncated: Option<u32>,
}

/// Full normal form of `f` against `basis` (need not be a Groebner basis).
pub fn normal_form<F: Coeff>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
) -> Result<Polynomial<F>> {
    let ring = f.ring().clone();
    let mut work = f.clone();
    let mut rem: Vec<(F, Monomial)> = Vec::new();
    'outer: while !work.is_zero() {
        let lm = work.lm().clone();
        for g in basis {
            if let Some(q) = g.lm().div_into(&lm) {
                let c = work.lc().mul(&g.lc().inv());
                work = work.sub(&g.mul_term(&c, &q)?)?;
                continue 'outer;
            }
        }
        let (c, m) = work.terms()[0].clone();
        rem.push((c.clone(), m.clone()));
        work = work.sub(&ring.monomial_poly(m).scale(&c))?;
    }
    Ok(Polynomial::from_terms(ring, rem))
}

fn spoly<F: Coeff>(g1: &Polynomial<F>, g2: &Polynomial<F>) -> Result<Polynomial<F>> {
    // Both monic by invariant, so the cofactor coefficients are 1.
    let lcm = g1.lm().lcm(g2.lm());
    let u1 = g1.lm().div_into(&lcm).expect("lcm divisible");
    let u2 = g2.lm().div_into(&lcm).expect("lcm divisible");
    let one = g1.lc().clone();
    g1.mul_term(&one, &u1)?.sub(&g2.mul_term(&one, &u2)?)
}

/// Buchberger with a degree cap. The result is the unique reduced basis when no
/// S-polynomial was skipped; otherwise it is valid for all S-polynomials of
/// degree <= cap and flagged truncated.
pub fn buchberger<F: Coeff>(
    ring: &Arc<Ring<F>>,
    gens: &[Polynomial<F>],
    cap: u32,
) -> Result<GroebnerBasis<F>> {
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    for g in gens {
        ring.check_same(g.ring())?;
        if !g.is_zero() {
            let m = g.make_monic();
            if !basis.contains(&m) {
                basis.push(m);
            }
        }
    }
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut treated: HashSet<(usize, usize)> = HashSet::new();
    let mut truncated: Option<u32> = None;
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.insert((basis[j].lm().lcm(basis[i].lm()).degree(), j, i));
        }
    }
    while let Some(&(deg, i, j)) = pairs.iter().next() {
        pairs.remove(&(deg, i, j));
        if deg > cap {
            truncated = Some(truncated.map_or(deg, |d| d.min(deg)));
            continue;
        }
        // Coprime criterion: the S-polynomial reduces to zero.
        if basis[i].lm().coprime_with(basis[j].lm()) {
            treated.insert((i, j));
            continue;
        }
        // Chain criterion.
        let lcm_ij = basis[i].lm().lcm(basis[j].lm());
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&lcm_ij)
                && treated.contains(&key(i, k))
                && treated.contains(&key(j, k))
        });
        if chained {
            treated.insert((i, j));
            continue;
        }
        treated.insert((i, j));
        let s = spoly(&basis[i], &basis[j])?;
        let r = normal_form(&s, &basis)?;
        if !r.is_zero() {
            let r = r.make_monic();
            let new = basis.len();
            for k in 0..new {
                pairs.insert((basis[k].lm().lcm(r.lm()).degree(), k, new));
            }
            basis.push(r);
        }
    }
    // Minimalize: drop elements whose leading monomial is divisible by another's.
    let n = basis.len();
    let mut keep = vec![true; n];
    for i in 0..n {
        if !keep[i] {
            continue;
        }
        for j in 0..n {
            if i == j || !keep[j] {
                continue;
            }
            if basis[j].lm().divides(basis[i].lm())
                && (basis[j].lm() != basis[i].lm() || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let mut reduced: Vec<Polynomial<F>> =
        basis.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect();
    // Tail-reduce to the unique reduced basis.
    loop {
        let mut changed = false;
        for i in 0..reduced.len() {
            let others: Vec<Polynomial<F>> = reduced
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let nf = normal_form(&reduced[i], &others)?.make_monic();
            if nf != reduced[i] {
                reduced[i] = nf;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    reduced.retain(|g| !g.is_zero());
    let order = ring.order().clone();
    reduced.sort_by(|a, b| order.cmp_mono(b.lm(), a.lm()));
    Ok(GroebnerBasis { polys: reduced, truncated })
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// An ideal given by generators, with a lazily computed cached reduced basis.
/// The cache is populated at most once; concurrent readers share the result.
#[derive(Clone, Debug)]
pub struct GroebnerIdeal<F: Coeff> {
    ring: Arc<Ring<F>>,
    gens: Vec<Polynomial<F>>,
    cap: u32,
    cache: Arc<OnceLock<Result<GroebnerBasis<F>>>>,
}

impl<F: Coeff> GroebnerIdeal<F> {
    pub fn new(ring: Arc<Ring<F>>, gens: Vec<Polynomial<F>>) -> Self {
        Self::with_cap(ring, gens, DEFAULT_CAP)
    }

    pub fn with_cap(ring: Arc<Ring<F>>, gens: Vec<Polynomial<F>>, cap: u32) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        GroebnerIdeal { ring, gens, cap, cache: Arc::new(OnceLock::new()) }
    }

    pub fn from_strs(ring: &Arc<Ring<F>>, gens: &[&str]) -> Result<Self> {
        let gens = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(ring.clone(), gens))
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero_ideal(&self) -> Result<bool> {
        Ok(self.basis()?.polys.is_empty())
    }

    pub fn is_unit_ideal(&self) -> Result<bool> {
        Ok(self.basis()?.polys.iter().any(|g| g.is_constant() && !g.is_zero()))
    }

    /// The cached reduced basis, computed on first use.
    pub fn basis(&self) -> Result<&GroebnerBasis<F>> {
        let res = self.cache.get_or_init(|| buchberger(&self.ring, &self.gens, self.cap));
        match res {
            Ok(b) => Ok(b),
            Err(e) => Err(e.clone()),
        }
    }

    /// The basis, refusing truncation; `op` names the caller for the error.
    pub fn full_basis(&self, op: &'static str) -> Result<&[Polynomial<F>]> {
        let b = self.basis()?;
        if let Some(d) = b.truncated {
            return Err(Error::TruncatedBasis { op, degree: d });
        }
        Ok(&b.polys)
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.ring.check_same(f.ring())?;
        normal_form(f, &self.basis()?.polys)
    }

    /// Ideal membership: true iff the normal form vanishes. With a truncated
    /// basis a zero normal form still certifies membership; a nonzero one is
    /// inconclusive and reported as an error.
    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        let nf = self.normal_form(f)?;
        if nf.is_zero() {
            return Ok(true);
        }
        if let Some(d) = self.basis()?.truncated {
            return Err(Error::TruncatedBasis { op: "membership", degree: d });
        }
        Ok(false)
    }

    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality by mutual membership.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::with_cap(self.ring.clone(), gens, self.cap))
    }

    /// Generator-level product with de-duplication.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                let p = a.mul(b)?;
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ok(Self::with_cap(self.ring.clone(), gens, self.cap))
    }

    pub fn power(&self, n: u32) -> Result<Self> {
        let one = Self::with_cap(self.ring.clone(), vec![self.ring.one()], self.cap);
        let mut acc = one;
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Generators of `I ∩ k[vars not in mask]`, via a block order.
    pub fn eliminate(&self, drop: &[bool]) -> Result<Self> {
        if drop.iter().all(|&d| !d) {
            return Ok(self.clone());
        }
        let block = self.ring.with_order(TermOrder::Block {
            eliminated: drop.to_vec(),
            front: Box::new(TermOrder::GrevLex),
            back: Box::new(self.base_order()),
        });
        let gens: Vec<Polynomial<F>> =
            self.gens.iter().map(|g| g.embed(&block, &identity_map(self.ring.arity()))).collect();
        let work = Self::with_cap(block, gens, self.cap);
        let full = work.full_basis("eliminate")?;
        let keep: Vec<bool> = drop.iter().map(|&d| !d).collect();
        let target = self.ring.subring(&keep, self.base_order());
        let mut out = Vec::new();
        for g in full {
            if g.avoids_vars(drop) {
                let terms = g
                    .terms()
                    .iter()
                    .map(|(c, m)| (c.clone(), m.project(&keep)))
                    .collect();
                out.push(Polynomial::from_terms(target.clone(), terms));
            }
        }
        Ok(Self::with_cap(target, out, self.cap))
    }

    fn base_order(&self) -> TermOrder {
        match self.ring.order() {
            TermOrder::Lex => TermOrder::Lex,
            _ => TermOrder::GrevLex,
        }
    }

    /// Intersection via the auxiliary-variable construction: eliminate `t` from
    /// `t·I + (1−t)·J`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let n = self.ring.arity();
        let big = self.ring.extended_front(
            &["t#"],
            TermOrder::Block {
                eliminated: std::iter::once(true).chain(std::iter::repeat(false).take(n)).collect(),
                front: Box::new(TermOrder::GrevLex),
                back: Box::new(self.base_order()),
            },
        );
        let shift: Vec<usize> = (1..=n).collect();
        let t = big.var(0);
        let one_minus_t = big.one().sub(&t)?;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(g.embed(&big, &shift).mul(&t)?);
        }
        for g in &other.gens {
            gens.push(g.embed(&big, &shift).mul(&one_minus_t)?);
        }
        let work = Self::with_cap(big, gens, self.cap);
        let mut drop = vec![false; n + 1];
        drop[0] = true;
        let elim = work.eliminate(&drop)?;
        // Re-home into the original ring (same variables).
        let back: Vec<usize> = (0..n).collect();
        let gens = elim.gens.iter().map(|g| g.embed(&self.ring, &back)).collect();
        Ok(Self::with_cap(self.ring.clone(), gens, self.cap))
    }

    /// Colon by a single nonzero polynomial: `(I : g) = (I ∩ (g)) / g`.
    pub fn colon_poly(&self, g: &Polynomial<F>) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let principal = Self::with_cap(self.ring.clone(), vec![g.clone()], self.cap);
        let meet = self.intersect(&principal)?;
        let gens = meet
            .gens
            .iter()
            .map(|h| div_exact(h, g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::with_cap(self.ring.clone(), gens, self.cap))
    }

    /// Colon by an ideal: intersection of the single-generator colons.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let gens: Vec<&Polynomial<F>> = other.gens.iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::ZeroDivisor);
        }
        let mut acc: Option<Self> = None;
        for g in gens {
            let c = self.colon_poly(g)?;
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersect(&c)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Saturation `(I : g^∞)` by iterated colon; returns the stable ideal and
    /// the number of colon steps taken until stabilization.
    pub fn saturate(&self, g: &Polynomial<F>) -> Result<(Self, usize)> {
        if g.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let mut cur = self.clone();
        let mut steps = 0usize;
        loop {
            let next = cur.colon_poly(g)?;
            if next.equals(&cur)? {
                return Ok((cur, steps));
            }
            cur = next;
            steps += 1;
        }
    }
}

fn identity_map(n: usize) -> Vec<usize> {
    (0..n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf;

    fn ring(vars: &[&str]) -> Arc<Ring<Gf>> {
        Ring::new(vars.iter().map(|s| s.to_string()).collect(), TermOrder::GrevLex, 32003)
    }

    fn lex_ring(vars: &[&str]) -> Arc<Ring<Gf>> {
        Ring::new(vars.iter().map(|s| s.to_string()).collect(), TermOrder::Lex, 32003)
    }

    #[test]
    fn classic_lex_basis() {
        // {x^2 - y, xy - 1} under lex(x > y) has reduced basis {x - y^2, y^3 - 1}.
        let r = lex_ring(&["x", "y"]);
        let i = GroebnerIdeal::from_strs(&r, &["x^2 - y", "x*y - 1"]).unwrap();
        let b = i.basis().unwrap();
        assert!(b.truncated.is_none());
        let strs: Vec<String> = b.polys.iter().map(|p| p.to_string()).collect();
        assert_eq!(strs, vec!["x - y^2", "y^3 - 1"]);
        // Every original generator reduces to zero against the basis.
        assert!(i.contains(&r.parse("x^2 - y").unwrap()).unwrap());
        assert!(i.contains(&r.parse("x*y - 1").unwrap()).unwrap());
        // Derived membership example.
        assert!(i.contains(&r.parse("y^3 - 1").unwrap()).unwrap());
    }

    #[test]
    fn monomial_ideal_is_own_basis() {
        let r = ring(&["x", "y"]);
        let i = GroebnerIdeal::from_strs(&r, &["x^2", "x*y"]).unwrap();
        let strs: Vec<String> = i.basis().unwrap().polys.iter().map(|p| p.to_string()).collect();
        assert_eq!(strs, vec!["x^2", "x*y"]);
    }

    #[test]
    fn principal_ideal_normalizes() {
        let r = ring(&["x", "y"]);
        let i = GroebnerIdeal::from_strs(&r, &["3*x^2 - 3*y"]).unwrap();
        let strs: Vec<String> = i.basis().unwrap().polys.iter().map(|p| p.to_string()).collect();
        assert_eq!(strs, vec!["x^2 - y"]);
    }

    #[test]
    fn membership_edges() {
        let r = ring(&["x", "y"]);
        let i = GroebnerIdeal::from_strs(&r, &["x", "y"]).unwrap();
        assert!(!i.contains(&r.one()).unwrap());
        assert!(i.contains(&r.zero()).unwrap());
    }

    #[test]
    fn eliminate_examples() {
        // eliminate t from (t*x - 1, t*y) gives (y).
        let r = ring(&["t", "x", "y"]);
        let i = GroebnerIdeal::from_strs(&r, &["t*x - 1", "t*y"]).unwrap();
        let e = i.eliminate(&[true, false, false]).unwrap();
        let j = GroebnerIdeal::from_strs(&e.ring().clone(), &["y"]).unwrap();
        assert!(e.equals(&j).unwrap());
        // eliminating nothing returns the same ideal
        let same = i.eliminate(&[false, false, false]).unwrap();
        assert!(same.equals(&i).unwrap());
    }

    #[test]
    fn eliminate_all_vars_consistency() {
        let r = ring(&["x"]);
        let i = GroebnerIdeal::from_strs(&r, &["x - 1"]).unwrap();
        let e = i.eliminate(&[true]).unwrap();
        assert!(e.basis().unwrap().polys.is_empty()); // (0) in the empty ring
        let u = GroebnerIdeal::from_strs(&r, &["x - 1", "x"]).unwrap();
        let e = u.eliminate(&[true]).unwrap();
        assert!(e.is_unit_ideal().unwrap()); // 1 ∈ I
    }

    #[test]
    fn intersect_examples() {
        let r = ring(&["x", "y"]);
        let a = GroebnerIdeal::from_strs(&r, &["x"]).unwrap();
        let b = GroebnerIdeal::from_strs(&r, &["y"]).unwrap();
        let m = a.intersect(&b).unwrap();
        assert!(m.equals(&GroebnerIdeal::from_strs(&r, &["x*y"]).unwrap()).unwrap());
        assert!(a.intersect(&a).unwrap().equals(&a).unwrap());
        // (x^2, xy) ∩ (y) = (xy) — pairwise lcm oracle for monomial ideals.
        let c = GroebnerIdeal::from_strs(&r, &["x^2", "x*y"]).unwrap();
        let m2 = c.intersect(&b).unwrap();
        assert!(m2.equals(&GroebnerIdeal::from_strs(&r, &["x*y"]).unwrap()).unwrap());
    }

    #[test]
    fn colon_examples() {
        let r = ring(&["x", "y"]);
        let i = GroebnerIdeal::from_strs(&r, &["x^2", "x*y"]).unwrap();
        let c = i.colon_poly(&r.parse("x").unwrap()).unwrap();
        assert!(c.equals(&GroebnerIdeal::from_strs(&r, &["x", "y"]).unwrap()).unwrap());
        // (I : (1)) = I
        let one = GroebnerIdeal::from_strs(&r, &["1"]).unwrap();
        assert!(i.colon(&one).unwrap().equals(&i).unwrap());
        // ((x) : (x)) = (1)
        let x = GroebnerIdeal::from_strs(&r, &["x"]).unwrap();
        assert!(x.colon(&x).unwrap().is_unit_ideal().unwrap());
    }

    #[test]
    fn saturate_examples() {
        let r = ring(&["t", "x", "y"]);
        let i = GroebnerIdeal::from_strs(&r, &["t*x"]).unwrap();
        let (s, _) = i.saturate(&r.parse("t").unwrap()).unwrap();
        assert!(s.equals(&GroebnerIdeal::from_strs(&r, &["x"]).unwrap()).unwrap());
        // saturate(I, 1) = I with zero steps
        let (s, n) = i.saturate(&r.one()).unwrap();
        assert!(s.equals(&i).unwrap());
        assert_eq!(n, 0);
        // ((t^2 x, t y) : t^∞) = (x, y), two colon iterations by hand.
        let j = GroebnerIdeal::from_strs(&r, &["t^2*x", "t*y"]).unwrap();
        let (s, steps) = j.saturate(&r.parse("t").unwrap()).unwrap();
        assert!(s.equals(&GroebnerIdeal::from_strs(&r, &["x", "y"]).unwrap()).unwrap());
        assert_eq!(steps, 2);
    }

    #[test]
    fn ideal_ops_examples() {
        let r = ring(&["x", "y"]);
        let m = GroebnerIdeal::from_strs(&r, &["x", "y"]).unwrap();
        let sq = m.power(2).unwrap();
        let expect: Vec<String> = sq.gens().iter().map(|p| p.to_string()).collect();
        assert_eq!(expect, vec!["x^2", "x*y", "y^2"]);
        assert!(m.power(1).unwrap().equals(&m).unwrap());
        assert!(m.power(0).unwrap().is_unit_ideal().unwrap());
        // (x^2, y)·(x, y) keeps the de-duplicated generator-level products.
        let a = GroebnerIdeal::from_strs(&r, &["x^2", "y"]).unwrap();
        let b = GroebnerIdeal::from_strs(&r, &["x", "y"]).unwrap();
        let p = a.product(&b).unwrap();
        let got: Vec<String> = p.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(got, vec!["x^3", "x^2*y", "x*y", "y^2"]);
    }

    #[test]
    fn reduced_basis_unique_under_shuffle() {
        let r = ring(&["x", "y", "z"]);
        let gens = ["x^2*y - z", "y^2 - x*z", "x*z^2 - y"];
        let i1 = GroebnerIdeal::from_strs(&r, &gens).unwrap();
        let shuffled = ["x*z^2 - y", "x^2*y - z", "y^2 - x*z"];
        let i2 = GroebnerIdeal::from_strs(&r, &shuffled).unwrap();
        assert_eq!(i1.basis().unwrap().polys, i2.basis().unwrap().polys);
    }

    #[test]
    fn cap_flags_truncation() {
        let r = ring(&["x", "y"]);
        let gens = vec![r.parse("x^9 - y").unwrap(), r.parse("x^8*y - 1").unwrap()];
        let i = GroebnerIdeal::with_cap(r.clone(), gens, 5);
        assert!(i.basis().unwrap().truncated.is_some());
        assert!(matches!(
            i.full_basis("test"),
            Err(Error::TruncatedBasis { op: "test", .. })
        ));
    }
}
