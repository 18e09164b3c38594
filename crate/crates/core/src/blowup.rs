//! Presentations of the blowup algebras of a monomial ideal in a monomial
//! quotient of a power series ring: Rees algebra via saturation-elimination,
//! fiber cone with a dual-route certificate, associated graded ring over the
//! Artinian base A/I, plus reduction numbers, analytic spread and Hilbert data.

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::groebner::GroebnerIdeal;
use crate::linalg::RowSpace;
use crate::local::{LocalIdeal, LocalRing};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::semigroup::SemigroupIdeal;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

/// A standard graded algebra k[U_1..U_k]/L with provenance flags.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra<F: Coeff> {
    pub ring: Arc<Ring<F>>,
    pub ideal: GroebnerIdeal<F>,
    /// True when a degreewise stabilization rule (not a complete elimination)
    /// decided the generator list.
    pub heuristic: bool,
    /// λ(I^n / m·I^n) for n = 0.. when the construction computed them.
    pub fiber_lengths: Option<Vec<u64>>,
}

/// The closed ideal calculus shared by the combinatorial and Groebner backends;
/// lets the reduction/Cohen-Macaulay checks run over any of them.
pub trait IdealOps: Clone {
    fn unit_ideal(&self) -> Self;
    fn maximal_ideal(&self) -> Self;
    fn sum(&self, other: &Self) -> Result<Self>;
    fn product(&self, other: &Self) -> Result<Self>;
    fn power(&self, n: u32) -> Result<Self>;
    fn intersect(&self, other: &Self) -> Result<Self>;
    fn colon(&self, other: &Self) -> Result<Self>;
    fn equals(&self, other: &Self) -> Result<bool>;
    fn is_subset_of(&self, other: &Self) -> Result<bool>;
    /// λ(self/other) for other ⊆ self, when the backend can count lengths.
    fn length_between(&self, other: &Self) -> Result<u64>;
    fn min_gen_count(&self) -> usize;
}

impl IdealOps for LocalIdeal {
    fn unit_ideal(&self) -> Self {
        LocalIdeal::unit(self.ring().clone())
    }
    fn maximal_ideal(&self) -> Self {
        LocalIdeal::maximal(self.ring().clone())
    }
    fn sum(&self, other: &Self) -> Result<Self> {
        LocalIdeal::sum(self, other)
    }
    fn product(&self, other: &Self) -> Result<Self> {
        LocalIdeal::product(self, other)
    }
    fn power(&self, n: u32) -> Result<Self> {
        LocalIdeal::power(self, n)
    }
    fn intersect(&self, other: &Self) -> Result<Self> {
        LocalIdeal::intersect(self, other)
    }
    fn colon(&self, other: &Self) -> Result<Self> {
        LocalIdeal::colon(self, other)
    }
    fn equals(&self, other: &Self) -> Result<bool> {
        LocalIdeal::equals(self, other)
    }
    fn is_subset_of(&self, other: &Self) -> Result<bool> {
        LocalIdeal::is_subset_of(self, other)
    }
    fn length_between(&self, other: &Self) -> Result<u64> {
        LocalIdeal::length_between(self, other)
    }
    fn min_gen_count(&self) -> usize {
        LocalIdeal::min_gen_count(self)
    }
}

impl IdealOps for SemigroupIdeal {
    fn unit_ideal(&self) -> Self {
        SemigroupIdeal::unit(self.semigroup().clone())
    }
    fn maximal_ideal(&self) -> Self {
        SemigroupIdeal::maximal(self.semigroup().clone())
    }
    fn sum(&self, other: &Self) -> Result<Self> {
        SemigroupIdeal::sum(self, other)
    }
    fn product(&self, other: &Self) -> Result<Self> {
        SemigroupIdeal::product(self, other)
    }
    fn power(&self, n: u32) -> Result<Self> {
        SemigroupIdeal::power(self, n)
    }
    fn intersect(&self, other: &Self) -> Result<Self> {
        SemigroupIdeal::intersect(self, other)
    }
    fn colon(&self, other: &Self) -> Result<Self> {
        SemigroupIdeal::colon(self, other)
    }
    fn equals(&self, other: &Self) -> Result<bool> {
        SemigroupIdeal::equals(self, other)
    }
    fn is_subset_of(&self, other: &Self) -> Result<bool> {
        SemigroupIdeal::is_subset_of(self, other)
    }
    fn length_between(&self, other: &Self) -> Result<u64> {
        SemigroupIdeal::length_between(self, other)
    }
    fn min_gen_count(&self) -> usize {
        SemigroupIdeal::min_gen_count(self)
    }
}

impl<F: Coeff> IdealOps for GroebnerIdeal<F> {
    fn unit_ideal(&self) -> Self {
        GroebnerIdeal::with_cap(self.ring().clone(), vec![self.ring().one()], self.cap())
    }
    fn maximal_ideal(&self) -> Self {
        let gens = (0..self.ring().arity()).map(|i| self.ring().var(i)).collect();
        GroebnerIdeal::with_cap(self.ring().clone(), gens, self.cap())
    }
    fn sum(&self, other: &Self) -> Result<Self> {
        GroebnerIdeal::sum(self, other)
    }
    fn product(&self, other: &Self) -> Result<Self> {
        GroebnerIdeal::product(self, other)
    }
    fn power(&self, n: u32) -> Result<Self> {
        GroebnerIdeal::power(self, n)
    }
    fn intersect(&self, other: &Self) -> Result<Self> {
        GroebnerIdeal::intersect(self, other)
    }
    fn colon(&self, other: &Self) -> Result<Self> {
        GroebnerIdeal::colon(self, other)
    }
    fn equals(&self, other: &Self) -> Result<bool> {
        GroebnerIdeal::equals(self, other)
    }
    fn is_subset_of(&self, other: &Self) -> Result<bool> {
        other.contains_ideal(self)
    }
    fn length_between(&self, _other: &Self) -> Result<u64> {
        Err(Error::Unsupported {
            detail: "lengths are only computed by the combinatorial backends".into(),
        })
    }
    fn min_gen_count(&self) -> usize {
        self.gens().len()
    }
}

/// One row of equality evidence at a power n.
#[derive(Clone, Debug, serde::Serialize)]
pub struct EqualityRow {
    pub n: u32,
    pub holds: bool,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct CheckReport {
    pub holds: bool,
    pub witness: Option<u32>,
    pub rows: Vec<EqualityRow>,
}

/// Valabrega-Valla criterion: I^n ∩ J = J·I^(n-1) for 1 <= n <= bound. When it
/// holds the reduction generators pass to a regular sequence on the associated
/// graded ring, so G is Cohen-Macaulay.
pub fn valabrega_valla_check<T: IdealOps>(ideal: &T, j: &T, bound: u32) -> Result<CheckReport> {
    let mut rows = Vec::new();
    let mut witness = None;
    for n in 1..=bound {
        let lhs = ideal.power(n)?.intersect(j)?;
        let rhs = j.product(&ideal.power(n - 1)?)?;
        let holds = lhs.equals(&rhs)?;
        rows.push(EqualityRow { n, holds });
        if !holds && witness.is_none() {
            witness = Some(n);
        }
    }
    Ok(CheckReport { holds: witness.is_none(), witness, rows })
}

/// Fiber-cone Cohen-Macaulay check: m·I^n ∩ J = m·J·I^(n-1) for 1 <= n <= bound.
pub fn fiber_cm_check<T: IdealOps>(ideal: &T, j: &T, bound: u32) -> Result<CheckReport> {
    let m = ideal.maximal_ideal();
    let mut rows = Vec::new();
    let mut witness = None;
    for n in 1..=bound {
        let lhs = m.product(&ideal.power(n)?)?.intersect(j)?;
        let rhs = m.product(j)?.product(&ideal.power(n - 1)?)?;
        let holds = lhs.equals(&rhs)?;
        rows.push(EqualityRow { n, holds });
        if !holds && witness.is_none() {
            witness = Some(n);
        }
    }
    Ok(CheckReport { holds: witness.is_none(), witness, rows })
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ReductionData {
    /// r with I^(r+1) = J·I^r and (for r > 0) I^r != J·I^(r-1).
    pub r: u32,
    /// Equality evidence for each n = 1..=r+1 comparing I^n with J·I^(n-1).
    pub rows: Vec<EqualityRow>,
}

/// Verify that J reduces I and compute the reduction number.
pub fn reduction_verify<T: IdealOps>(ideal: &T, j: &T, bound: u32) -> Result<ReductionData> {
    if !j.is_subset_of(ideal)? {
        return Err(Error::NotContained { detail: "J must be contained in I".into() });
    }
    let mut rows = Vec::new();
    for n in 1..=bound + 1 {
        let lhs = ideal.power(n)?;
        let rhs = j.product(&ideal.power(n - 1)?)?;
        let holds = lhs.equals(&rhs)?;
        rows.push(EqualityRow { n, holds });
        if holds {
            return Ok(ReductionData { r: n - 1, rows });
        }
    }
    Err(Error::NotAReduction { bound, failing: bound + 1 })
}

/// I^n with the convention I^n = (1) for n <= 0, over any backend.
pub fn power_clamped<T: IdealOps>(ideal: &T, n: i64) -> Result<T> {
    if n <= 0 {
        Ok(ideal.unit_ideal())
    } else {
        ideal.power(n as u32)
    }
}

/// Random search for a reduction generated by arity-many k-linear combinations
/// of the generators (for an m-primary ideal the analytic spread equals the
/// dimension, so that many elements suffice generically).
pub fn search_reduction<F: Coeff>(
    ideal: &GroebnerIdeal<F>,
    rng: &mut impl rand::Rng,
    tries: u32,
    bound: u32,
) -> Result<(GroebnerIdeal<F>, ReductionData)> {
    let ring = ideal.ring().clone();
    let d = ring.arity();
    for _ in 0..tries {
        let mut jgens = Vec::with_capacity(d);
        for _ in 0..d {
            let mut g = ring.zero();
            for f in ideal.gens() {
                let c = F::from_i64(ring.ctx(), rng.gen_range(1..32003i64));
                g = g.add(&f.scale(&c))?;
            }
            jgens.push(g);
        }
        let j = GroebnerIdeal::with_cap(ring.clone(), jgens, ideal.cap());
        match reduction_verify(ideal, &j, bound) {
            Ok(data) => return Ok((j, data)),
            Err(Error::NotAReduction { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::HypothesisFailed {
        detail: format!("reduction search exhausted after {tries} tries"),
    })
}

/// Least n with I^n = m·I^(n-1), if any within the bound.
pub fn m_absorbing_power<T: IdealOps>(ideal: &T, bound: u32) -> Result<Option<u32>> {
    let m = ideal.maximal_ideal();
    for n in 1..=bound {
        let lhs = ideal.power(n)?;
        let rhs = m.product(&ideal.power(n - 1)?)?;
        if lhs.equals(&rhs)? {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

fn mono_to_poly<F: Coeff>(ring: &Arc<Ring<F>>, m: &Monomial, offset: usize) -> Polynomial<F> {
    let map: Vec<usize> = (0..m.arity()).map(|i| i + offset).collect();
    ring.monomial_poly(m.remap(ring.arity(), &map))
}

/// Defining ideal of the Rees algebra R(I) as a quotient of k[x_1..x_d, U_1..U_k]:
/// saturate N + (U_i − t·f_i) by t, then eliminate t. Returns the ideal and the
/// number of colon steps the saturation took.
pub fn rees_ideal<F: Coeff>(
    ideal: &LocalIdeal,
    ctx: &F::Ctx,
    cap: u32,
) -> Result<(GroebnerIdeal<F>, usize)> {
    let ambient = ideal.ring();
    if ideal.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let d = ambient.arity();
    let k = ideal.gens().len();
    let mut vars: Vec<String> = vec!["t#".to_string()];
    vars.extend(ambient.vars().iter().cloned());
    vars.extend((1..=k).map(|i| format!("U{i}")));
    if ambient.vars().iter().any(|v| v.starts_with('U') || v == "t#") {
        return Err(Error::Unsupported {
            detail: "ambient variable names colliding with U1.. are not supported".into(),
        });
    }
    let mut elim_t = vec![false; 1 + d + k];
    elim_t[0] = true;
    let mut elim_x = vec![false; 1 + d + k];
    for item in elim_x.iter_mut().skip(1).take(d) {
        *item = true;
    }
    let big: Arc<Ring<F>> = Ring::new(
        vars,
        TermOrder::Block {
            eliminated: elim_t.clone(),
            front: Box::new(TermOrder::GrevLex),
            back: Box::new(TermOrder::Block {
                eliminated: elim_x,
                front: Box::new(TermOrder::GrevLex),
                back: Box::new(TermOrder::GrevLex),
            }),
        },
        ctx.clone(),
    );
    let t = big.var(0);
    let mut gens: Vec<Polynomial<F>> = Vec::new();
    for n in ambient.relations() {
        gens.push(mono_to_poly(&big, n, 1));
    }
    for (i, f) in ideal.gens().iter().enumerate() {
        let u = big.var(1 + d + i);
        gens.push(u.sub(&t.mul(&mono_to_poly(&big, f, 1))?)?);
    }
    let raw = GroebnerIdeal::with_cap(big, gens, cap);
    let (sat, steps) = raw.saturate(&t)?;
    let rees = sat.eliminate(&elim_t)?;
    Ok((rees, steps))
}

/// Fiber cone presentation by elimination, cross-validated degree by degree
/// against the direct kernel of the monomial map U^a ↦ class of f^a in
/// I^n/m·I^n. A mismatch is an engine bug, not bad input.
pub fn fiber_presentation<F: Coeff>(
    ideal: &LocalIdeal,
    ctx: &F::Ctx,
    bound: u32,
    cap: u32,
) -> Result<PresentedAlgebra<F>> {
    let ambient = ideal.ring();
    let d = ambient.arity();
    let k = ideal.gens().len();
    let (rees, _) = rees_ideal::<F>(ideal, ctx, cap)?;
    // Add the ambient variables and eliminate them.
    let x_polys: Vec<Polynomial<F>> =
        (0..d).map(|i| rees.ring().var(i)).collect();
    let with_m = rees.sum(&GroebnerIdeal::with_cap(rees.ring().clone(), x_polys, cap))?;
    let mut drop = vec![false; d + k];
    for item in drop.iter_mut().take(d) {
        *item = true;
    }
    let fiber = with_m.eliminate(&drop)?;
    let fiber_basis = fiber.full_basis("fiber presentation")?.to_vec();
    let ring = fiber.ring().clone();

    // Independent degreewise oracle.
    let (oracle_gens, lengths) = fiber_kernel_oracle::<F>(ideal, &ring, bound)?;
    // (1) oracle generators lie in the eliminated ideal;
    for g in &oracle_gens {
        if !fiber.contains(g)? {
            return Err(Error::Internal {
                detail: "fiber cross-validation: oracle generator missing".into(),
            });
        }
    }
    // (2) eliminated generators of degree <= bound lie in the oracle ideal;
    let oracle_ideal = GroebnerIdeal::with_cap(ring.clone(), oracle_gens, cap);
    for g in &fiber_basis {
        if g.total_degree().unwrap_or(0) <= bound && !oracle_ideal.contains(g)? {
            return Err(Error::Internal {
                detail: "fiber cross-validation: eliminated generator missing".into(),
            });
        }
    }
    // (3) Hilbert function of the eliminated quotient matches the lengths.
    let lead: Vec<Monomial> = fiber_basis.iter().map(|g| g.lm().clone()).collect();
    for (n, &lam) in lengths.iter().enumerate() {
        let std_count = monomials_of_degree(k, n as u32)
            .into_iter()
            .filter(|m| !lead.iter().any(|l| l.divides(m)))
            .count() as u64;
        if std_count != lam {
            return Err(Error::Internal {
                detail: format!("fiber cross-validation: Hilbert mismatch at degree {n}"),
            });
        }
    }
    Ok(PresentedAlgebra { ring, ideal: fiber, heuristic: false, fiber_lengths: Some(lengths) })
}

/// Degreewise kernel of k[U] → ⊕ I^n/m·I^n for a monomial ideal in a monomial
/// quotient: a monomial map, so the kernel is spanned by dead monomials and
/// collision differences; minimal generators come from exact rank computations.
fn fiber_kernel_oracle<F: Coeff>(
    ideal: &LocalIdeal,
    ring: &Arc<Ring<F>>,
    bound: u32,
) -> Result<(Vec<Polynomial<F>>, Vec<u64>)> {
    let ctx = ring.ctx().clone();
    let k = ideal.gens().len();
    let m_ideal = LocalIdeal::maximal(ideal.ring().clone());
    let mut gens: Vec<Polynomial<F>> = Vec::new();
    let mut gen_degrees: Vec<u32> = Vec::new();
    let mut lengths: Vec<u64> = vec![1];
    let mut power = LocalIdeal::unit(ideal.ring().clone());
    for n in 1..=bound {
        power = power.product(ideal)?;
        let mpower = m_ideal.product(&power)?;
        lengths.push(power.length_between(&mpower)?);
        let monos = monomials_of_degree(k, n);
        let index_of = |m: &Monomial| monos.iter().position(|x| x == m).unwrap();
        // Image monomials.
        let mut values: Vec<Monomial> = Vec::with_capacity(monos.len());
        for m in &monos {
            let mut v = Monomial::one(ideal.ring().arity());
            for (i, &e) in m.exps().iter().enumerate() {
                v = v.try_mul(&ideal.gens()[i].try_pow(e)?)?;
            }
            values.push(v);
        }
        let dead: Vec<bool> = values.iter().map(|v| mpower.contains_mono(v)).collect();
        let mut space: RowSpace<F> = RowSpace::new(monos.len());
        for (g, &dg) in gens.iter().zip(&gen_degrees) {
            for u in monomials_of_degree(k, n - dg) {
                let gu = g.mul_term(&F::one(&ctx), &u)?;
                let mut row = vec![F::zero(&ctx); monos.len()];
                for (c, mm) in gu.terms() {
                    row[index_of(mm)] = c.clone();
                }
                space.insert(row);
            }
        }
        let mut first_alive: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
        for (i, m) in monos.iter().enumerate() {
            if dead[i] {
                let mut row = vec![F::zero(&ctx); monos.len()];
                row[i] = F::one(&ctx);
                if space.insert(row) {
                    gens.push(ring.monomial_poly(m.clone()));
                    gen_degrees.push(n);
                }
            } else {
                let key = values[i].exps().to_vec();
                match first_alive.get(&key) {
                    None => {
                        first_alive.insert(key, i);
                    }
                    Some(&j) => {
                        let mut row = vec![F::zero(&ctx); monos.len()];
                        row[i] = F::one(&ctx);
                        row[j] = F::one(&ctx).neg();
                        if space.insert(row) {
                            let poly = ring
                                .monomial_poly(m.clone())
                                .sub(&ring.monomial_poly(monos[j].clone()))?;
                            gens.push(poly);
                            gen_degrees.push(n);
                        }
                    }
                }
            }
        }
        let quotient_dim = (monos.len() - space.rank()) as u64;
        if quotient_dim != lengths[n as usize] {
            return Err(Error::Internal {
                detail: format!("fiber oracle rank mismatch at degree {n}"),
            });
        }
    }
    Ok((gens, lengths))
}

/// One generator of the defining ideal of G(I) over (A/I)[U]: a sum of terms
/// coefficient · (standard monomial of A/I) · U-monomial.
#[derive(Clone, Debug)]
pub struct GradedGen<F: Coeff> {
    pub terms: Vec<(F, Monomial, Monomial)>,
    pub degree: u32,
}

impl<F: Coeff> GradedGen<F> {
    pub fn render(&self, base: &LocalRing) -> String {
        let mut out = String::new();
        for (idx, (c, b, u)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let (neg, abs) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if abs != "1" || (b.is_one() && u.is_one()) {
                factors.push(abs);
            }
            for (v, &e) in base.vars().iter().zip(b.exps()) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            for (i, &e) in u.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("U{}", i + 1)),
                    _ => factors.push(format!("U{}^{e}", i + 1)),
                }
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct GradedPresentation<F: Coeff> {
    pub base: Arc<LocalRing>,
    /// k-basis of A/I as standard monomials.
    pub base_std: Vec<Monomial>,
    pub u_arity: usize,
    pub gens: Vec<GradedGen<F>>,
    pub reltype: u32,
    pub heuristic: bool,
    /// λ(I^n / I^(n+1)) for n = 0..=bound.
    pub graded_lengths: Vec<u64>,
}

/// Minimal generators of ker((A/I)[U] → G(I)) computed degree by degree by
/// exact linear algebra over k; the base A/I is materialized as its finite
/// standard-monomial basis. The relation type is the maximum generator degree.
pub fn graded_presentation<F: Coeff>(
    ideal: &LocalIdeal,
    ctx: &F::Ctx,
    bound: u32,
) -> Result<GradedPresentation<F>> {
    let ambient = ideal.ring().clone();
    let base_std = ideal.std_monomials_all().map_err(|_| Error::Unsupported {
        detail: "graded presentation needs A/I of finite length (m-primary I)".into(),
    })?;
    let k = ideal.gens().len();
    let mut gens: Vec<GradedGen<F>> = Vec::new();
    let mut graded_lengths: Vec<u64> = vec![base_std.len() as u64];
    let mut power = ideal.clone(); // I^n, starting at n = 1
    let mut last_new: u32 = 0;
    for n in 1..=bound {
        let next_power = power.product(ideal)?;
        graded_lengths.push(power.length_between(&next_power)?);
        let monos = monomials_of_degree(k, n);
        let cols = base_std.len() * monos.len();
        // Image of each (base monomial, U-monomial) pair in I^n / I^(n+1).
        let mut values: Vec<Option<Monomial>> = Vec::with_capacity(cols);
        for b in &base_std {
            for a in monos.iter() {
                let mut v = b.clone();
                for (i, &e) in a.exps().iter().enumerate() {
                    v = v.try_mul(&ideal.gens()[i].try_pow(e)?)?;
                }
                if next_power.contains_mono(&v) {
                    values.push(None);
                } else {
                    values.push(Some(v));
                }
            }
        }
        // Span of found generators times (base monomial × U-monomial).
        let mut space: RowSpace<F> = RowSpace::new(cols);
        for g in &gens {
            for c in &base_std {
                for u in monomials_of_degree(k, n - g.degree) {
                    if let Some(row) = graded_row(&g.terms, c, &u, &base_std, &monos, ideal, ctx)? {
                        space.insert(row);
                    }
                }
            }
        }
        // Canonical kernel basis: dead pairs and collision differences, scanned
        // in column order. A freshly accepted generator immediately contributes
        // its base-monomial multiples to the span, so base multiples at the same
        // degree are not misreported as new generators.
        let u_one = Monomial::one(k);
        let mut accept = |gen: GradedGen<F>, space: &mut RowSpace<F>| -> Result<()> {
            for c in &base_std {
                if let Some(row) = graded_row(&gen.terms, c, &u_one, &base_std, &monos, ideal, ctx)? {
                    space.insert(row);
                }
            }
            gens.push(gen);
            last_new = n;
            Ok(())
        };
        let mut first_alive: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
        for (col, value) in values.iter().enumerate() {
            let (b_idx, a_idx) = (col / monos.len(), col % monos.len());
            match value {
                None => {
                    let mut row = vec![F::zero(ctx); cols];
                    row[col] = F::one(ctx);
                    if !space.contains(row) {
                        accept(
                            GradedGen {
                                terms: vec![(
                                    F::one(ctx),
                                    base_std[b_idx].clone(),
                                    monos[a_idx].clone(),
                                )],
                                degree: n,
                            },
                            &mut space,
                        )?;
                    }
                }
                Some(v) => {
                    let key = v.exps().to_vec();
                    match first_alive.get(&key) {
                        None => {
                            first_alive.insert(key, col);
                        }
                        Some(&first) => {
                            let mut row = vec![F::zero(ctx); cols];
                            row[col] = F::one(ctx);
                            row[first] = F::one(ctx).neg();
                            if !space.contains(row) {
                                let (fb, fa) = (first / monos.len(), first % monos.len());
                                accept(
                                    GradedGen {
                                        terms: vec![
                                            (
                                                F::one(ctx),
                                                base_std[b_idx].clone(),
                                                monos[a_idx].clone(),
                                            ),
                                            (
                                                F::one(ctx).neg(),
                                                base_std[fb].clone(),
                                                monos[fa].clone(),
                                            ),
                                        ],
                                        degree: n,
                                    },
                                    &mut space,
                                )?;
                            }
                        }
                    }
                }
            }
        }
        let quotient_dim = (cols - space.rank()) as u64;
        if quotient_dim != graded_lengths[n as usize] {
            return Err(Error::Internal {
                detail: format!("graded kernel rank mismatch at degree {n}"),
            });
        }
        power = next_power;
    }
    // Final minimality pass: drop any generator lying in the module generated
    // by the others (acceptance order alone does not guarantee this).
    let mut keep = vec![true; gens.len()];
    for i in 0..gens.len() {
        let d = gens[i].degree;
        let monos = monomials_of_degree(k, d);
        let cols = base_std.len() * monos.len();
        let mut space: RowSpace<F> = RowSpace::new(cols);
        for (j, g) in gens.iter().enumerate() {
            if j == i || !keep[j] || g.degree > d {
                continue;
            }
            for c in &base_std {
                for u in monomials_of_degree(k, d - g.degree) {
                    if let Some(row) = graded_row(&g.terms, c, &u, &base_std, &monos, ideal, ctx)? {
                        space.insert(row);
                    }
                }
            }
        }
        let one = Monomial::one(ideal.ring().arity());
        let u_one = Monomial::one(k);
        if let Some(row) = graded_row(&gens[i].terms, &one, &u_one, &base_std, &monos, ideal, ctx)? {
            if space.contains(row) {
                keep[i] = false;
            }
        } else {
            keep[i] = false;
        }
    }
    let gens: Vec<GradedGen<F>> =
        gens.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect();
    let window = last_new + 1;
    let heuristic = !(bound >= last_new + window);
    let reltype = gens.iter().map(|g| g.degree).max().unwrap_or(0);
    Ok(GradedPresentation {
        base: ambient,
        base_std,
        u_arity: k,
        gens,
        reltype,
        heuristic,
        graded_lengths,
    })
}

/// Row vector of c·(terms)·u in the degree-d coordinate space indexed by
/// (standard base monomial, U-monomial of degree d); None when every term dies
/// in A/I.
fn graded_row<F: Coeff>(
    terms: &[(F, Monomial, Monomial)],
    c: &Monomial,
    u: &Monomial,
    base_std: &[Monomial],
    monos: &[Monomial],
    ideal: &LocalIdeal,
    ctx: &F::Ctx,
) -> Result<Option<Vec<F>>> {
    let cols = base_std.len() * monos.len();
    let mut row = vec![F::zero(ctx); cols];
    let mut nonzero = false;
    for (coef, b, a) in terms {
        let nb = c.try_mul(b)?;
        if ideal.contains_mono(&nb) {
            continue;
        }
        let b_idx = base_std
            .iter()
            .position(|x| *x == nb)
            .ok_or_else(|| Error::Internal { detail: "standard basis lookup failed".into() })?;
        let na = a.try_mul(u)?;
        let a_idx = monos
            .iter()
            .position(|x| *x == na)
            .ok_or_else(|| Error::Internal { detail: "degree bookkeeping failed".into() })?;
        let cell = &mut row[b_idx * monos.len() + a_idx];
        *cell = cell.add(coef);
        nonzero = true;
    }
    Ok(if nonzero { Some(row) } else { None })
}

/// Krull dimension of k[U]/L from the lead-term monomial ideal: the maximum
/// size of a variable subset meeting the support of no lead monomial.
pub fn analytic_spread<F: Coeff>(p: &PresentedAlgebra<F>) -> Result<u32> {
    let basis = p.ideal.full_basis("analytic spread")?;
    let k = p.ring.arity();
    let leads: Vec<&Monomial> = basis.iter().map(|g| g.lm()).collect();
    if leads.iter().any(|m| m.is_one()) {
        return Ok(0);
    }
    let mut best = 0u32;
    for mask in 0u32..(1 << k) {
        let subset: Vec<bool> = (0..k).map(|i| mask & (1 << i) != 0).collect();
        let independent = !leads.iter().any(|m| {
            (0..k).all(|i| m.exp(i) == 0 || subset[i])
        });
        if independent {
            best = best.max(mask.count_ones());
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct HilbertData {
    /// Hilbert function values for degrees 0..=bound.
    pub hf: Vec<u64>,
    /// Numerator h with HS = h(z)/(1-z)^dim.
    pub numerator: Vec<i64>,
    pub dim: u32,
    /// h(1): the multiplicity.
    pub e0: u64,
    /// Palindromicity of h.
    pub symmetric: bool,
}

fn poly_mul_z(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_z(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] += y;
    }
    out
}

fn trim_z(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

fn minimalize_monos(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| (a.degree(), a.exps()).cmp(&(b.degree(), b.exps())));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in gens {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

/// K-polynomial of S/(gens) over the full (1-z)^arity, by pivot-variable
/// splitting: K(I) = K(I + (x)) + z·K(I : x).
fn kpolynomial(gens: &[Monomial], arity: usize) -> Vec<i64> {
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    if gens.is_empty() {
        return vec![1];
    }
    let support = |m: &Monomial| (0..arity).filter(|&i| m.exp(i) > 0).count();
    if gens.iter().all(|m| support(m) == 1) {
        let mut acc = vec![1i64];
        for m in gens {
            let mut factor = vec![0i64; m.degree() as usize + 1];
            factor[0] = 1;
            factor[m.degree() as usize] = -1;
            acc = poly_mul_z(&acc, &factor);
        }
        return acc;
    }
    // Pivot: the variable hitting the most mixed-support generators.
    let mut counts = vec![0usize; arity];
    for m in gens {
        if support(m) > 1 {
            for (i, item) in counts.iter_mut().enumerate() {
                if m.exp(i) > 0 {
                    *item += 1;
                }
            }
        }
    }
    let pivot = counts
        .iter()
        .enumerate()
        .max_by_key(|(i, &c)| (c, usize::MAX - i))
        .map(|(i, _)| i)
        .unwrap();
    let xvar = Monomial::var(arity, pivot);
    let mut plus = gens.to_vec();
    plus.push(xvar.clone());
    let plus = minimalize_monos(plus);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| xvar.gcd(m).div_into(m).expect("gcd divides"))
        .collect();
    let colon = minimalize_monos(colon);
    let shifted: Vec<i64> =
        std::iter::once(0).chain(kpolynomial(&colon, arity)).collect();
    poly_add_z(&kpolynomial(&plus, arity), &shifted)
}

/// Hilbert data of a presented algebra: function by standard-monomial counting,
/// series numerator over (1-z)^dim by the exact K-polynomial recursion.
pub fn hilbert<F: Coeff>(p: &PresentedAlgebra<F>, bound: u32) -> Result<HilbertData> {
    let basis = p.ideal.full_basis("hilbert")?;
    let k = p.ring.arity();
    let leads: Vec<Monomial> = basis.iter().map(|g| g.lm().clone()).collect();
    let leads = minimalize_monos(leads);
    let mut hf = Vec::new();
    for n in 0..=bound {
        let count = monomials_of_degree(k, n)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .count() as u64;
        hf.push(count);
    }
    let dim = analytic_spread(p)?;
    // Divide the K-polynomial by (1-z)^(k-dim) exactly: each division by (1-z)
    // is a prefix sum, exact iff the total h(1) vanishes.
    let mut h = trim_z(kpolynomial(&leads, k));
    for _ in 0..(k as u32 - dim) {
        if h.iter().sum::<i64>() != 0 {
            return Err(Error::Internal {
                detail: "Hilbert numerator division was not exact".into(),
            });
        }
        let mut q = Vec::with_capacity(h.len().saturating_sub(1));
        let mut carry = 0i64;
        for &c in h.iter().take(h.len().saturating_sub(1)) {
            carry += c;
            q.push(carry);
        }
        if q.is_empty() {
            q.push(0);
        }
        h = trim_z(q);
    }
    let e0: i64 = h.iter().sum();
    if e0 < 0 {
        return Err(Error::Internal { detail: "negative multiplicity".into() });
    }
    let symmetric = h.iter().eq(h.iter().rev());
    Ok(HilbertData { hf, numerator: h.clone(), dim, e0: e0 as u64, symmetric })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn free(vars: &[&str]) -> Arc<LocalRing> {
        LocalRing::polynomial(vars.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn rees_of_principal_is_zero() {
        let r = free(&["x"]);
        let i = LocalIdeal::new(r, vec![mono(&[1])]);
        let (rees, _) = rees_ideal::<Gf>(&i, &32003, 30).unwrap();
        assert!(rees.basis().unwrap().polys.is_empty());
    }

    #[test]
    fn rees_of_two_variables_is_koszul() {
        let r = free(&["x", "y"]);
        let i = LocalIdeal::new(r, vec![mono(&[1, 0]), mono(&[0, 1])]);
        let (rees, _) = rees_ideal::<Gf>(&i, &32003, 30).unwrap();
        let basis = rees.full_basis("test").unwrap();
        assert_eq!(basis.len(), 1);
        // Canonical generator order is (y, x), so U1 = y·t, U2 = x·t and the
        // Koszul syzygy is x·U1 − y·U2 (up to sign).
        let s = basis[0].to_string();
        assert!(s == "x*U1 - y*U2" || s == "y*U2 - x*U1", "got {s}");
    }

    #[test]
    fn rees_sees_ambient_relations() {
        // I = (y, z) in k[[X,Y,Z]]/(X^2, Y^2, XYZ^2): the Rees ideal contains
        // the Koszul relation and a y-squared-type relation U1^2.
        let r = LocalRing::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![mono(&[2, 0, 0]), mono(&[0, 2, 0]), mono(&[1, 1, 2])],
        );
        let i = LocalIdeal::new(r, vec![mono(&[0, 1, 0]), mono(&[0, 0, 1])]);
        let (rees, _) = rees_ideal::<Gf>(&i, &32003, 30).unwrap();
        let ring = rees.ring().clone();
        // Generators sort canonically as (z, y), so U1 = z·t and U2 = y·t.
        // y^2 = 0 in A gives the relation U2^2; the Koszul syzygy is y·U1 − z·U2.
        assert!(rees.contains(&ring.parse("U2^2").unwrap()).unwrap());
        let koszul = ring.parse("y*U1 - z*U2").unwrap();
        assert!(rees.contains(&koszul).unwrap());
    }

    #[test]
    fn fiber_presentation_first_worked_example() {
        // F(I) of I = (y,z) in k[[X,Y,Z]]/(X^2,Y^2,XYZ^2) is k[U1,U2]/(U2^2)
        // with U1 = class of z, U2 = class of y.
        let r = LocalRing::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![mono(&[2, 0, 0]), mono(&[0, 2, 0]), mono(&[1, 1, 2])],
        );
        let i = LocalIdeal::new(r, vec![mono(&[0, 1, 0]), mono(&[0, 0, 1])]);
        let f = fiber_presentation::<Gf>(&i, &32003, 8, 30).unwrap();
        let strs: Vec<String> =
            f.ideal.full_basis("test").unwrap().iter().map(|g| g.to_string()).collect();
        assert_eq!(strs, vec!["U2^2"]);
        assert!(!f.heuristic);
        assert_eq!(f.fiber_lengths.as_ref().unwrap()[..4], [1, 2, 2, 2]);
    }

    #[test]
    fn graded_presentation_first_worked_example() {
        // ker((A/I)[U] → G(I)) for the same data: minimal generators U2^2 in
        // degree 2 and x·U2·U1^2 in degree 3 (the paper's x U V^2 with U = y,
        // V = z under our canonical U1 = z, U2 = y). Relation type 3.
        let r = LocalRing::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![mono(&[2, 0, 0]), mono(&[0, 2, 0]), mono(&[1, 1, 2])],
        );
        let i = LocalIdeal::new(r.clone(), vec![mono(&[0, 1, 0]), mono(&[0, 0, 1])]);
        let g = graded_presentation::<Gf>(&i, &32003, 7).unwrap();
        assert_eq!(g.reltype, 3);
        assert!(!g.heuristic);
        let rendered: Vec<(u32, String)> =
            g.gens.iter().map(|x| (x.degree, x.render(&r))).collect();
        assert!(rendered.contains(&(2, "U2^2".to_string())), "{rendered:?}");
        assert!(rendered.contains(&(3, "x*U1^2*U2".to_string())), "{rendered:?}");
        assert_eq!(g.gens.len(), 2);
    }

    #[test]
    fn spread_and_hilbert_shapes() {
        let r = free(&["x", "y"]);
        let i = LocalIdeal::new(r, vec![mono(&[1, 0]), mono(&[0, 1])]);
        let f = fiber_presentation::<Gf>(&i, &32003, 6, 30).unwrap();
        // Fiber cone of the maximal ideal of k[[x,y]] is k[U1,U2].
        assert_eq!(analytic_spread(&f).unwrap(), 2);
        let h = hilbert(&f, 6).unwrap();
        assert_eq!(h.hf, vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(h.numerator, vec![1]);
        assert_eq!(h.e0, 1);
        assert_eq!(h.dim, 2);
    }

    #[test]
    fn checks_on_ideal_ops_backends() {
        // Trivial cases of the reduction machinery.
        let r = free(&["x", "y"]);
        let i = LocalIdeal::new(r, vec![mono(&[1, 0]), mono(&[0, 1])]);
        let data = reduction_verify(&i, &i, 10).unwrap();
        assert_eq!(data.r, 0);
        let vv = valabrega_valla_check(&i, &i, 5).unwrap();
        assert!(vv.holds);
        // m-absorbing power of m itself is 1.
        assert_eq!(m_absorbing_power(&i, 5).unwrap(), Some(1));
    }

    #[test]
    fn m_absorbing_power_none_for_regular_sequence() {
        // I = (x^2, y^2) in k[[x,y]]: no power collapses into m·I^(n-1).
        let r = free(&["x", "y"]);
        let i = LocalIdeal::new(r, vec![mono(&[2, 0]), mono(&[0, 2])]);
        assert_eq!(m_absorbing_power(&i, 10).unwrap(), None);
    }
}
