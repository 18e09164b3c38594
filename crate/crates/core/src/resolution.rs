//! Graded free resolutions over k[U_1..U_k]: Schreyer syzygies, minimalization
//! by unit cancellation, Betti tables, and the derived invariants (regularity,
//! projective dimension, depth, Cohen-Macaulayness, type, Gorensteinness).

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::groebner::GroebnerIdeal;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

// ---------------------------------------------------------------------------
// Module terms and orders
// ---------------------------------------------------------------------------

/// A vector in a free module ⊕ S·e_c: terms (coefficient, monomial, component),
/// kept sorted strictly descending under the active module order.
#[derive(Clone, Debug, PartialEq)]
struct ModVec<F: Coeff> {
    terms: Vec<(F, Monomial, usize)>,
}

trait TermCmp {
    fn cmp_terms(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering;
}

/// Schreyer order on a level of the resolution: compare the fully composed
/// position monomials in the ring order; resolve ties through the component
/// chains bottom-up (lowest level first, smaller component ranking higher).
/// This is the recursive induced order, flattened.
struct SchreyerOrd {
    ring_order: TermOrder,
    position: Vec<Monomial>,
    chains: Vec<Vec<usize>>,
}

impl TermCmp for SchreyerOrd {
    fn cmp_terms(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        let ca = a.0.try_mul(&self.position[a.1]).expect("composed monomial");
        let cb = b.0.try_mul(&self.position[b.1]).expect("composed monomial");
        match self.ring_order.cmp_mono(&ca, &cb) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (x, y) in self.chains[a.1].iter().zip(&self.chains[b.1]) {
            match x.cmp(y) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {}
            }
        }
        Ordering::Equal
    }
}

/// Elimination order for syzygy extraction: the first `main` components beat
/// the tracking components; within a group, ring order then component index.
struct AugmentedOrd {
    ring_order: TermOrder,
    main: usize,
}

impl TermCmp for AugmentedOrd {
    fn cmp_terms(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        let ga = a.1 < self.main;
        let gb = b.1 < self.main;
        match (ga, gb) {
            (true, false) => return Ordering::Greater,
            (false, true) => return Ordering::Less,
            _ => {}
        }
        match self.ring_order.cmp_mono(a.0, b.0) {
            Ordering::Equal => b.1.cmp(&a.1),
            ord => ord,
        }
    }
}

impl<F: Coeff> ModVec<F> {
    fn from_terms(mut terms: Vec<(F, Monomial, usize)>, ord: &dyn TermCmp) -> Self {
        terms.retain(|(c, _, _)| !c.is_zero());
        terms.sort_by(|a, b| ord.cmp_terms((&b.1, b.2), (&a.1, a.2)));
        let mut merged: Vec<(F, Monomial, usize)> = Vec::with_capacity(terms.len());
        for (c, m, p) in terms {
            match merged.last_mut() {
                Some((lc, lm, lp)) if *lm == m && *lp == p => *lc = lc.add(&c),
                _ => merged.push((c, m, p)),
            }
            if let Some((lc, _, _)) = merged.last() {
                if lc.is_zero() {
                    merged.pop();
                }
            }
        }
        ModVec { terms: merged }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lt(&self) -> (&F, &Monomial, usize) {
        let (c, m, p) = &self.terms[0];
        (c, m, *p)
    }

    fn scale(&self, c: &F) -> Self {
        ModVec { terms: self.terms.iter().map(|(a, m, p)| (a.mul(c), m.clone(), *p)).collect() }
    }

    fn mul_term(&self, c: &F, m: &Monomial) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (a, mm, p) in &self.terms {
            terms.push((a.mul(c), mm.try_mul(m)?, *p));
        }
        Ok(ModVec { terms })
    }

    /// self − other, both sorted under `ord`.
    fn sub(&self, other: &Self, ord: &dyn TermCmp) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out: Vec<(F, Monomial, usize)> = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match ord.cmp_terms((&a[i].1, a[i].2), (&b[j].1, b[j].2)) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (c, m, p) = &b[j];
                    out.push((c.neg(), m.clone(), *p));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].0.sub(&b[j].0);
                    if !c.is_zero() {
                        out.push((c, a[i].1.clone(), a[i].2));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(c, m, p)| (c.neg(), m.clone(), *p)));
        ModVec { terms: out }
    }
}

/// Full reduction of `work` against `gens`, recording the quotients.
fn reduce_record<F: Coeff>(
    mut work: ModVec<F>,
    gens: &[ModVec<F>],
    ord: &dyn TermCmp,
    ring: &Arc<Ring<F>>,
) -> Result<(Vec<Polynomial<F>>, ModVec<F>)> {
    let mut quotients: Vec<Polynomial<F>> = gens.iter().map(|_| ring.zero()).collect();
    let mut rem: Vec<(F, Monomial, usize)> = Vec::new();
    'outer: while !work.is_zero() {
        let (lc, lm, lp) = {
            let (c, m, p) = work.lt();
            (c.clone(), m.clone(), p)
        };
        for (k, g) in gens.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let (gc, gm, gp) = g.lt();
            if gp == lp {
                if let Some(q) = gm.div_into(&lm) {
                    let coeff = lc.mul(&gc.inv());
                    quotients[k] =
                        quotients[k].add(&ring.monomial_poly(q.clone()).scale(&coeff))?;
                    work = work.sub(&g.mul_term(&coeff, &q)?, ord);
                    continue 'outer;
                }
            }
        }
        rem.push(work.terms.remove(0));
    }
    Ok((quotients, ModVec { terms: rem }))
}

/// Buchberger completion for submodules of a free module (no pair criteria;
/// S-pairs only between elements sharing the lead component).
fn module_gb<F: Coeff>(
    gens: Vec<ModVec<F>>,
    ord: &dyn TermCmp,
    ring: &Arc<Ring<F>>,
) -> Result<Vec<ModVec<F>>> {
    let mut basis: Vec<ModVec<F>> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            let inv = g.lt().0.inv();
            basis.push(g.scale(&inv));
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (ci, mi, pi) = {
            let (c, m, p) = basis[i].lt();
            (c.clone(), m.clone(), p)
        };
        let (cj, mj, pj) = {
            let (c, m, p) = basis[j].lt();
            (c.clone(), m.clone(), p)
        };
        if pi != pj {
            continue;
        }
        let lcm = mi.lcm(&mj);
        let ai = mi.div_into(&lcm).expect("lcm divisible");
        let aj = mj.div_into(&lcm).expect("lcm divisible");
        let factor = ci.mul(&cj.inv());
        let one = F::one(ring.ctx());
        let s = basis[i].mul_term(&one, &ai)?.sub(&basis[j].mul_term(&factor, &aj)?, ord);
        let (_, rem) = reduce_record(s, &basis, ord, ring)?;
        if !rem.is_zero() {
            let inv = rem.lt().0.inv();
            let nb = rem.scale(&inv);
            for k in 0..basis.len() {
                pairs.push((k, basis.len()));
            }
            basis.push(nb);
        }
    }
    // Minimalize lead terms, then tail-reduce.
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
            let (_, mi, pi) = basis[i].lt();
            let (_, mj, pj) = basis[j].lt();
            if pi == pj && mj.divides(mi) && (mj != mi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut reduced: Vec<ModVec<F>> =
        basis.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect();
    loop {
        let mut changed = false;
        for i in 0..reduced.len() {
            let others: Vec<ModVec<F>> = reduced
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let (_, rem) = reduce_record(reduced[i].clone(), &others, ord, ring)?;
            let rem = if rem.is_zero() { rem } else { rem.scale(&rem.lt().0.inv()) };
            if rem != reduced[i] {
                reduced[i] = rem;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    reduced.retain(|g| !g.is_zero());
    reduced.sort_by(|a, b| {
        let (_, ma, pa) = a.lt();
        let (_, mb, pb) = b.lt();
        ord.cmp_terms((mb, pb), (ma, pa))
    });
    Ok(reduced)
}

/// Generating set of the first syzygy module of arbitrary homogeneous vectors
/// in S^r, via the augmented-module elimination: compute a reduced module
/// Groebner basis of the graph vectors and keep those with vanishing main part.
pub fn syzygies<F: Coeff>(
    ring: &Arc<Ring<F>>,
    gens: &[Vec<Polynomial<F>>],
) -> Result<Vec<Vec<Polynomial<F>>>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let r = gens[0].len();
    let t = gens.len();
    for v in gens {
        if v.len() != r {
            return Err(Error::ArityMismatch { left: r, right: v.len() });
        }
        for p in v {
            ring.check_same(p.ring())?;
            if !p.is_homogeneous() {
                return Err(Error::Unsupported { detail: "syzygies need homogeneous input".into() });
            }
        }
    }
    let ord = AugmentedOrd { ring_order: ring.order().clone(), main: r };
    let mut aug: Vec<ModVec<F>> = Vec::new();
    for (i, v) in gens.iter().enumerate() {
        let mut terms: Vec<(F, Monomial, usize)> = Vec::new();
        for (c, p) in v.iter().enumerate() {
            for (coef, m) in p.terms() {
                terms.push((coef.clone(), m.clone(), c));
            }
        }
        terms.push((F::one(ring.ctx()), Monomial::one(ring.arity()), r + i));
        aug.push(ModVec::from_terms(terms, &ord));
    }
    let gb = module_gb(aug, &ord, ring)?;
    let mut out = Vec::new();
    for g in gb {
        if g.terms.iter().all(|(_, _, p)| *p >= r) {
            let mut coords: Vec<Vec<(F, Monomial)>> = vec![Vec::new(); t];
            for (c, m, p) in &g.terms {
                coords[*p - r].push((c.clone(), m.clone()));
            }
            out.push(
                coords
                    .into_iter()
                    .map(|ts| Polynomial::from_terms(ring.clone(), ts))
                    .collect(),
            );
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Resolutions and Betti tables
// ---------------------------------------------------------------------------

/// A (not necessarily minimal) graded free resolution of S/L: `maps[l]` is the
/// matrix of F_(l+1) → F_l over the generator degrees in `degrees`.
pub struct Resolution<F: Coeff> {
    pub ring: Arc<Ring<F>>,
    pub degrees: Vec<Vec<u32>>,
    pub maps: Vec<Vec<Vec<Polynomial<F>>>>,
}

/// Graded Betti numbers: entries (homological index i, internal degree j, rank).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub nvars: usize,
    pub entries: Vec<(u32, u32, u64)>,
}

impl BettiTable {
    fn from_counts(nvars: usize, counts: BTreeMap<(u32, u32), u64>) -> Self {
        BettiTable {
            nvars,
            entries: counts.into_iter().map(|((i, j), c)| (i, j, c)).collect(),
        }
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries
            .iter()
            .find(|(a, b, _)| *a == i && *b == j)
            .map(|(_, _, c)| *c)
            .unwrap_or(0)
    }

    /// Degrees at homological index i, with multiplicity, ascending.
    pub fn degrees_at(&self, i: u32) -> Vec<u32> {
        let mut out = Vec::new();
        for (a, j, c) in &self.entries {
            if *a == i {
                for _ in 0..*c {
                    out.push(*j);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn projective_dimension(&self) -> u32 {
        self.entries.iter().map(|(i, _, _)| *i).max().unwrap_or(0)
    }

    pub fn regularity(&self) -> Option<i64> {
        self.entries.iter().map(|(i, j, _)| *j as i64 - *i as i64).max()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay-style grid: column = homological index, row = j − i.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(zero module)");
        }
        let pd = self.projective_dimension();
        let min_row = self.entries.iter().map(|(i, j, _)| *j as i64 - *i as i64).min().unwrap();
        let max_row = self.entries.iter().map(|(i, j, _)| *j as i64 - *i as i64).max().unwrap();
        write!(f, "      ")?;
        for i in 0..=pd {
            write!(f, "{i:>6}")?;
        }
        writeln!(f)?;
        for row in min_row..=max_row {
            write!(f, "{row:>4}: ")?;
            for i in 0..=pd {
                let j = row + i as i64;
                let v = if j < 0 { 0 } else { self.get(i, j as u32) };
                if v == 0 {
                    write!(f, "{:>6}", ".")?;
                } else {
                    write!(f, "{v:>6}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn composed_position<F: Coeff>(v: &ModVec<F>, position: &[Monomial]) -> Monomial {
    let (_, m, p) = v.lt();
    m.try_mul(&position[p]).expect("composed monomial")
}

/// Schreyer syzygies of a module Groebner basis: one generator per S-pair with
/// a common lead component, expressed over a basis indexed by the input.
fn schreyer_syzygies<F: Coeff>(
    gens: &[ModVec<F>],
    ord_prev: &dyn TermCmp,
    ord_new: &dyn TermCmp,
    ring: &Arc<Ring<F>>,
) -> Result<Vec<ModVec<F>>> {
    let mut out = Vec::new();
    for j in 0..gens.len() {
        for i in 0..j {
            let (ci, mi, pi) = {
                let (c, m, p) = gens[i].lt();
                (c.clone(), m.clone(), p)
            };
            let (cj, mj, pj) = {
                let (c, m, p) = gens[j].lt();
                (c.clone(), m.clone(), p)
            };
            if pi != pj {
                continue;
            }
            let lcm = mi.lcm(&mj);
            let ai = mi.div_into(&lcm).expect("lcm divisible");
            let aj = mj.div_into(&lcm).expect("lcm divisible");
            let factor = ci.mul(&cj.inv());
            let one = F::one(ring.ctx());
            let s = gens[i].mul_term(&one, &ai)?.sub(&gens[j].mul_term(&factor, &aj)?, ord_prev);
            let (quotients, rem) = reduce_record(s, gens, ord_prev, ring)?;
            if !rem.is_zero() {
                return Err(Error::Internal {
                    detail: "S-vector of a Groebner basis did not reduce to zero".into(),
                });
            }
            let mut terms: Vec<(F, Monomial, usize)> = Vec::new();
            terms.push((one.clone(), ai.clone(), i));
            terms.push((factor.neg(), aj.clone(), j));
            for (k, q) in quotients.iter().enumerate() {
                for (c, m) in q.terms() {
                    terms.push((c.neg(), m.clone(), k));
                }
            }
            out.push(ModVec::from_terms(terms, ord_new));
        }
    }
    out.retain(|v| !v.is_zero());
    Ok(out)
}

/// Schreyer resolution of S/L for a homogeneous ideal L with a full basis,
/// iterated until the syzygies vanish.
pub fn free_resolution<F: Coeff>(ideal: &GroebnerIdeal<F>) -> Result<Resolution<F>> {
    let ring = ideal.ring().clone();
    let basis = ideal.full_basis("free resolution")?;
    for g in basis {
        if !g.is_homogeneous() {
            return Err(Error::Unsupported {
                detail: "free resolutions need a homogeneous ideal".into(),
            });
        }
    }
    let mut degrees: Vec<Vec<u32>> = vec![vec![0]];
    let mut maps: Vec<Vec<Vec<Polynomial<F>>>> = Vec::new();
    if basis.is_empty() {
        return Ok(Resolution { ring, degrees, maps });
    }
    // Level 1: the reduced basis as vectors in F0 = S.
    let ord0 = SchreyerOrd {
        ring_order: ring.order().clone(),
        position: vec![Monomial::one(ring.arity())],
        chains: vec![Vec::new()],
    };
    let mut current: Vec<ModVec<F>> = basis
        .iter()
        .map(|g| {
            ModVec::from_terms(
                g.terms().iter().map(|(c, m)| (c.clone(), m.clone(), 0)).collect(),
                &ord0,
            )
        })
        .collect();
    degrees.push(basis.iter().map(|g| g.lm().degree()).collect());
    maps.push(vec![basis.to_vec()]);
    let mut ord_prev = ord0;
    loop {
        if maps.len() > 2 * ring.arity() + 4 {
            return Err(Error::Internal {
                detail: "resolution exceeded the syzygy-theorem bound".into(),
            });
        }
        let position: Vec<Monomial> =
            current.iter().map(|v| composed_position(v, &ord_prev.position)).collect();
        let chains: Vec<Vec<usize>> = current
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let (_, _, p) = v.lt();
                let mut c = ord_prev.chains[p].clone();
                c.push(i);
                c
            })
            .collect();
        let ord_new = SchreyerOrd { ring_order: ring.order().clone(), position, chains };
        let mut syz = schreyer_syzygies(&current, &ord_prev, &ord_new, &ring)?;
        if syz.is_empty() {
            break;
        }
        // Sort the new level by descending lead term before recording it, so
        // every level is consistently ordered (this is what keeps the Schreyer
        // iteration within its length bound).
        let ordering: &dyn TermCmp = &ord_new;
        syz.sort_by(|a, b| {
            let (_, ma, pa) = a.lt();
            let (_, mb, pb) = b.lt();
            ordering.cmp_terms((mb, pb), (ma, pa))
        });
        // Record the matrix and generator degrees.
        let rows = current.len();
        let level_degrees = degrees.last().unwrap().clone();
        let mut mat: Vec<Vec<Polynomial<F>>> = vec![vec![ring.zero(); syz.len()]; rows];
        let mut new_degrees = Vec::with_capacity(syz.len());
        for (col, s) in syz.iter().enumerate() {
            let mut coords: Vec<Vec<(F, Monomial)>> = vec![Vec::new(); rows];
            for (c, m, p) in &s.terms {
                coords[*p].push((c.clone(), m.clone()));
            }
            for (row, ts) in coords.into_iter().enumerate() {
                mat[row][col] = Polynomial::from_terms(ring.clone(), ts);
            }
            let (_, m0, p0) = s.lt();
            new_degrees.push(m0.degree() + level_degrees[p0]);
            // Homogeneity sanity: all terms land in the same degree.
            debug_assert!(s
                .terms
                .iter()
                .all(|(_, m, p)| m.degree() + level_degrees[*p] == new_degrees[col]));
        }
        maps.push(mat);
        degrees.push(new_degrees);
        current = syz;
        ord_prev = ord_new;
    }
    Ok(Resolution { ring, degrees, maps })
}

/// Minimalize a resolution by cancelling constant unit entries (Schur
/// complement on the complex), pivoting on the lowest (level, degree, row,
/// column); the graded ranks that remain are the Betti numbers.
pub fn minimalize<F: Coeff>(res: &Resolution<F>) -> Result<BettiTable> {
    let ring = &res.ring;
    let mut degrees = res.degrees.clone();
    let mut maps = res.maps.clone();
    loop {
        // Find the pivot.
        let mut pivot: Option<(usize, u32, usize, usize)> = None;
        for (level, mat) in maps.iter().enumerate() {
            for (r, row) in mat.iter().enumerate() {
                for (c, entry) in row.iter().enumerate() {
                    if !entry.is_zero() && entry.is_constant() {
                        let key = (level, degrees[level + 1][c], r, c);
                        if pivot.map_or(true, |p| key < p) {
                            pivot = Some(key);
                        }
                    }
                }
            }
        }
        let Some((level, _, r0, c0)) = pivot else { break };
        let unit = maps[level][r0][c0].clone();
        let unit_inv_neg = ring.constant(unit.lc().inv()).neg();
        // Schur update of the pivot level.
        let rows = maps[level].len();
        let cols = maps[level][0].len();
        let pivot_col: Vec<Polynomial<F>> =
            (0..rows).map(|r| maps[level][r][c0].clone()).collect();
        let pivot_row: Vec<Polynomial<F>> =
            (0..cols).map(|c| maps[level][r0][c].clone()).collect();
        for r in 0..rows {
            if r == r0 {
                continue;
            }
            for c in 0..cols {
                if c == c0 {
                    continue;
                }
                let corr = pivot_col[r].mul(&pivot_row[c])?.mul(&unit_inv_neg)?;
                maps[level][r][c] = maps[level][r][c].add(&corr)?;
            }
        }
        // Delete row r0 and column c0 at the pivot level.
        maps[level].remove(r0);
        for row in maps[level].iter_mut() {
            row.remove(c0);
        }
        // The previous level loses column r0; the next level loses row c0.
        if level > 0 {
            let prev = level - 1;
            for row in maps[prev].iter_mut() {
                row.remove(r0);
            }
        }
        if level + 1 < maps.len() {
            maps[level + 1].remove(c0);
        }
        degrees[level].remove(r0);
        degrees[level + 1].remove(c0);
        // Drop empty tail levels.
        while let Some(last) = maps.last() {
            let empty = last.is_empty() || last[0].is_empty();
            if empty {
                maps.pop();
                degrees.pop();
            } else {
                break;
            }
        }
        if maps.is_empty() {
            break;
        }
    }
    // Exactness spot check: consecutive maps compose to zero.
    for l in 0..maps.len().saturating_sub(1) {
        let a = &maps[l];
        let b = &maps[l + 1];
        let rows = a.len();
        let mid = b.len();
        let cols = if mid == 0 { 0 } else { b[0].len() };
        for r in 0..rows {
            for c in 0..cols {
                let mut acc = ring.zero();
                for m in 0..mid {
                    acc = acc.add(&a[r][m].mul(&b[m][c])?)?;
                }
                if !acc.is_zero() {
                    return Err(Error::Internal {
                        detail: "minimalized differentials do not compose to zero".into(),
                    });
                }
            }
        }
    }
    let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for (i, level) in degrees.iter().enumerate() {
        for &j in level {
            *counts.entry((i as u32, j)).or_insert(0) += 1;
        }
    }
    Ok(BettiTable::from_counts(ring.arity(), counts))
}

/// Resolution followed by minimalization.
pub fn betti_table<F: Coeff>(ideal: &GroebnerIdeal<F>) -> Result<BettiTable> {
    if ideal.is_unit_ideal()? {
        // S/L is the zero module; no Betti numbers.
        return Ok(BettiTable { nvars: ideal.ring().arity(), entries: Vec::new() });
    }
    let res = free_resolution(ideal)?;
    minimalize(&res)
}

/// Invariants read off a minimal Betti table, with the module dimension
/// supplied by the caller.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedInvariants {
    pub regularity: i64,
    pub projective_dimension: u32,
    pub depth: i64,
    pub is_cohen_macaulay: bool,
    pub cm_type: u64,
    pub is_gorenstein: bool,
}

pub fn derived_invariants(betti: &BettiTable, dim: u32) -> Result<DerivedInvariants> {
    if betti.is_empty() {
        return Err(Error::Unsupported {
            detail: "invariants of the zero module are undefined".into(),
        });
    }
    let pd = betti.projective_dimension();
    let regularity = betti.regularity().unwrap();
    let depth = betti.nvars as i64 - pd as i64;
    let is_cm = depth == dim as i64;
    let cm_type: u64 = betti.entries.iter().filter(|(i, _, _)| *i == pd).map(|(_, _, c)| *c).sum();
    Ok(DerivedInvariants {
        regularity,
        projective_dimension: pd,
        depth,
        is_cohen_macaulay: is_cm,
        cm_type,
        is_gorenstein: is_cm && cm_type == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf;

    fn ring(vars: &[&str]) -> Arc<Ring<Gf>> {
        Ring::new(vars.iter().map(|s| s.to_string()).collect(), TermOrder::GrevLex, 32003)
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let r = ring(&["x", "y"]);
        let gens = vec![vec![r.parse("x").unwrap()], vec![r.parse("y").unwrap()]];
        let syz = syzygies(&r, &gens).unwrap();
        assert_eq!(syz.len(), 1);
        // (−y, x) up to sign and normalization.
        let s: Vec<String> = syz[0].iter().map(|p| p.to_string()).collect();
        assert!(s == vec!["y", "-x"] || s == vec!["-y", "x"], "{s:?}");
        // matrix multiplication = 0
        let dot = syz[0][0]
            .mul(&gens[0][0])
            .unwrap()
            .add(&syz[0][1].mul(&gens[1][0]).unwrap())
            .unwrap();
        assert!(dot.is_zero());
    }

    #[test]
    fn syzygy_of_nonzerodivisor_is_empty() {
        let r = ring(&["x", "y"]);
        let gens = vec![vec![r.parse("x^2 + y^2").unwrap()]];
        assert!(syzygies(&r, &gens).unwrap().is_empty());
    }

    #[test]
    fn hilbert_burch_two_linear_syzygies() {
        let r = ring(&["x", "y"]);
        let gens = vec![
            vec![r.parse("x^2").unwrap()],
            vec![r.parse("x*y").unwrap()],
            vec![r.parse("y^2").unwrap()],
        ];
        let syz = syzygies(&r, &gens).unwrap();
        assert_eq!(syz.len(), 2);
        for s in &syz {
            // all linear entries, and matrix multiplication = 0
            let mut dot = r.zero();
            for (c, g) in s.iter().zip(&gens) {
                assert!(c.is_zero() || c.total_degree() == Some(1));
                dot = dot.add(&c.mul(&g[0]).unwrap()).unwrap();
            }
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn resolution_of_zero_ideal() {
        let r = ring(&["x", "y"]);
        let i = GroebnerIdeal::new(r.clone(), vec![]);
        let b = betti_table(&i).unwrap();
        assert_eq!(b.entries, vec![(0, 0, 1)]);
        let inv = derived_invariants(&b, 2).unwrap();
        assert_eq!(inv.regularity, 0);
        assert_eq!(inv.projective_dimension, 0);
        assert!(inv.is_cohen_macaulay && inv.is_gorenstein);
    }

    #[test]
    fn resolution_of_hypersurface() {
        let r = ring(&["x", "y"]);
        let i = GroebnerIdeal::from_strs(&r, &["x^2 - y^2"]).unwrap();
        let b = betti_table(&i).unwrap();
        assert_eq!(b.entries, vec![(0, 0, 1), (1, 2, 1)]);
        let inv = derived_invariants(&b, 1).unwrap();
        assert_eq!(inv.regularity, 1);
        assert!(inv.is_gorenstein);
    }

    #[test]
    fn resolution_of_squared_maximal_ideal() {
        // (x^2, xy, y^2): 0 → S(−3)^2 → S(−2)^3 → S; reg 1, pd 2, depth 0.
        let r = ring(&["x", "y"]);
        let i = GroebnerIdeal::from_strs(&r, &["x^2", "x*y", "y^2"]).unwrap();
        let b = betti_table(&i).unwrap();
        assert_eq!(b.entries, vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
        let inv = derived_invariants(&b, 0).unwrap();
        assert_eq!(inv.regularity, 1);
        assert_eq!(inv.projective_dimension, 2);
        assert_eq!(inv.depth, 0);
        assert_eq!(inv.cm_type, 2);
    }

    #[test]
    fn resolution_second_worked_example_table() {
        // The printed resolution of S/(U^2, UV^2, V^3W, UVW^2, UW^3, V^4):
        // β1 degrees {2,3,4,4,4,4}, β2 {4,5^7}, β3 {6^3}; regularity 3.
        let r = ring(&["U", "V", "W"]);
        let i = GroebnerIdeal::from_strs(
            &r,
            &["U^2", "U*V^2", "V^3*W", "U*V*W^2", "U*W^3", "V^4"],
        )
        .unwrap();
        let b = betti_table(&i).unwrap();
        assert_eq!(b.degrees_at(1), vec![2, 3, 4, 4, 4, 4]);
        assert_eq!(b.degrees_at(2), vec![4, 5, 5, 5, 5, 5, 5, 5]);
        assert_eq!(b.degrees_at(3), vec![6, 6, 6]);
        let inv = derived_invariants(&b, 1).unwrap();
        assert_eq!(inv.regularity, 3);
        assert_eq!(inv.projective_dimension, 3);
        assert_eq!(inv.depth, 0);
        assert!(!inv.is_cohen_macaulay);
    }

    #[test]
    fn resolution_third_worked_example_table() {
        // The printed resolution of S/(U^2, UVW, W^3, V^2W^2, V^4W):
        // β1 {2,3,3,4,5}, β2 {4,5^4,6^2}, β3 {6,6,7}; regularity 4.
        let r = ring(&["U", "V", "W"]);
        let i = GroebnerIdeal::from_strs(&r, &["U^2", "U*V*W", "W^3", "V^2*W^2", "V^4*W"])
            .unwrap();
        let b = betti_table(&i).unwrap();
        assert_eq!(b.degrees_at(1), vec![2, 3, 3, 4, 5]);
        assert_eq!(b.degrees_at(2), vec![4, 5, 5, 5, 5, 6, 6]);
        assert_eq!(b.degrees_at(3), vec![6, 6, 7]);
        let inv = derived_invariants(&b, 1).unwrap();
        assert_eq!(inv.regularity, 4);
    }
}
