//! The declarative task-file format and its batch runner.
//!
//! A task file is line-oriented:
//!
//! ```text
//! # rings: numerical semigroup or monomial quotient of a power series ring
//! ring A = semigroup(4, 9, 10)
//! ring B = quotient(power_series(x, y, z), [x^2, y^2, x*y*z^2])
//! ideal I in A = (8, 9, 10)
//! ideal J in A = (8)
//! ideal V in B = (y, z)
//! task gor-char I J expect: verified
//! task reltype V bound=7 expect: 3
//! ```
//!
//! Tasks: fiber, rees, graded, reltype, spread, hilbert, reduction, vv, cmF,
//! pro9, socle, betti, gor-char, canonical, e0, reg. `expect:` clauses make a
//! run self-checking: verdict tasks expect verdict names, numeric tasks expect
//! integers.

use crate::blowup::{
    analytic_spread, fiber_cm_check, hilbert, m_absorbing_power, reduction_verify,
    valabrega_valla_check,
};
use crate::error::{Error, Result};
use crate::field::{Coeff, Gf, Rat};
use crate::groebner::DEFAULT_CAP;
use crate::local::{LocalIdeal, LocalRing};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::resolution::{betti_table, derived_invariants};
use crate::ring::Ring;
use crate::semigroup::{NumericalSemigroup, SemigroupIdeal};
use crate::verify;
use serde::Serialize;
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingDecl {
    Semigroup { name: String, gens: Vec<u64> },
    Local { name: String, vars: Vec<String>, relations: Vec<String> },
}

impl RingDecl {
    pub fn name(&self) -> &str {
        match self {
            RingDecl::Semigroup { name, .. } | RingDecl::Local { name, .. } => name,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealGens {
    Exponents(Vec<u64>),
    Monomials(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDecl {
    pub name: String,
    pub ring: String,
    pub gens: IdealGens,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskDecl {
    pub line: usize,
    pub name: String,
    pub args: Vec<String>,
    pub options: BTreeMap<String, String>,
    pub expect: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TaskFile {
    pub rings: Vec<RingDecl>,
    pub ideals: Vec<IdealDecl>,
    pub tasks: Vec<TaskDecl>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub msg: String,
}

pub const TASK_NAMES: &[&str] = &[
    "fiber", "rees", "graded", "reltype", "spread", "hilbert", "reduction", "vv", "cmF", "pro9",
    "socle", "betti", "gor-char", "canonical", "e0", "reg",
];

// ---------------------------------------------------------------------------
// Parsing and printing
// ---------------------------------------------------------------------------

fn split_args(s: &str) -> Vec<String> {
    s.split(',').map(|p| p.trim().to_string()).filter(|p| !p.is_empty()).collect()
}

/// Parse a task file. The first error aborts; use `validate` for a full
/// diagnostic listing.
pub fn parse(text: &str) -> Result<TaskFile> {
    let mut file = TaskFile::default();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        if let Some(rest) = line.strip_prefix("ring ") {
            let (name, rhs) = rest
                .split_once('=')
                .ok_or_else(|| err("expected 'ring NAME = ...'".into()))?;
            let name = name.trim().to_string();
            let rhs = rhs.trim();
            if let Some(inner) = rhs.strip_prefix("semigroup(").and_then(|s| s.strip_suffix(')')) {
                let gens = split_args(inner)
                    .iter()
                    .map(|p| p.parse::<u64>().map_err(|_| err(format!("bad exponent '{p}'"))))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                file.rings.push(RingDecl::Semigroup { name, gens });
            } else if let Some(inner) =
                rhs.strip_prefix("power_series(").and_then(|s| s.strip_suffix(')'))
            {
                file.rings.push(RingDecl::Local {
                    name,
                    vars: split_args(inner),
                    relations: Vec::new(),
                });
            } else if let Some(inner) =
                rhs.strip_prefix("quotient(").and_then(|s| s.strip_suffix(')'))
            {
                let (ps, rel) = inner
                    .split_once("),")
                    .ok_or_else(|| err("expected quotient(power_series(..), [..])".into()))?;
                let vars = ps
                    .trim()
                    .strip_prefix("power_series(")
                    .map(split_args)
                    .ok_or_else(|| err("expected power_series(..) inside quotient".into()))?;
                let rel = rel.trim();
                let rel = rel
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| err("expected [..] relation list".into()))?;
                file.rings.push(RingDecl::Local { name, vars, relations: split_args(rel) });
            } else {
                return Err(err(format!("unknown ring constructor '{rhs}'")));
            }
        } else if let Some(rest) = line.strip_prefix("ideal ") {
            let (lhs, rhs) = rest
                .split_once('=')
                .ok_or_else(|| err("expected 'ideal NAME [in RING] = (..)'".into()))?;
            let lhs = lhs.trim();
            let (name, ring) = match lhs.split_once(" in ") {
                Some((n, r)) => (n.trim().to_string(), r.trim().to_string()),
                None => {
                    let ring = file
                        .rings
                        .last()
                        .map(|r| r.name().to_string())
                        .ok_or_else(|| err("ideal declared before any ring".into()))?;
                    (lhs.to_string(), ring)
                }
            };
            let rhs = rhs.trim();
            let inner = rhs
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| err("expected generator list (..)".into()))?;
            let parts = split_args(inner);
            let is_semigroup = file
                .rings
                .iter()
                .any(|r| r.name() == ring && matches!(r, RingDecl::Semigroup { .. }));
            let gens = if is_semigroup {
                IdealGens::Exponents(
                    parts
                        .iter()
                        .map(|p| p.parse::<u64>().map_err(|_| err(format!("bad exponent '{p}'"))))
                        .collect::<std::result::Result<Vec<_>, _>>()?,
                )
            } else {
                IdealGens::Monomials(parts)
            };
            file.ideals.push(IdealDecl { name, ring, gens });
        } else if let Some(rest) = line.strip_prefix("task ") {
            let (head, expect) = match rest.split_once("expect:") {
                Some((h, e)) => (h.trim(), Some(e.trim().to_string())),
                None => (rest.trim(), None),
            };
            let mut words = head.split_whitespace();
            let name = words
                .next()
                .ok_or_else(|| err("task needs a name".into()))?
                .to_string();
            let mut args = Vec::new();
            let mut options = BTreeMap::new();
            for w in words {
                match w.split_once('=') {
                    Some((k, v)) => {
                        options.insert(k.to_string(), v.to_string());
                    }
                    None => args.push(w.to_string()),
                }
            }
            file.tasks.push(TaskDecl { line: line_no, name, args, options, expect });
        } else {
            return Err(err(format!("unrecognized line '{line}'")));
        }
    }
    Ok(file)
}

/// Canonical text form; `parse(print(f)) == f` up to task line numbers.
pub fn print(file: &TaskFile) -> String {
    let mut out = String::new();
    for r in &file.rings {
        match r {
            RingDecl::Semigroup { name, gens } => {
                let g: Vec<String> = gens.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "ring {name} = semigroup({})", g.join(", "));
            }
            RingDecl::Local { name, vars, relations } => {
                if relations.is_empty() {
                    let _ = writeln!(out, "ring {name} = power_series({})", vars.join(", "));
                } else {
                    let _ = writeln!(
                        out,
                        "ring {name} = quotient(power_series({}), [{}])",
                        vars.join(", "),
                        relations.join(", ")
                    );
                }
            }
        }
    }
    for i in &file.ideals {
        let gens = match &i.gens {
            IdealGens::Exponents(e) => {
                e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
            }
            IdealGens::Monomials(m) => m.join(", "),
        };
        let _ = writeln!(out, "ideal {} in {} = ({})", i.name, i.ring, gens);
    }
    for t in &file.tasks {
        let mut line = format!("task {}", t.name);
        for a in &t.args {
            let _ = write!(line, " {a}");
        }
        for (k, v) in &t.options {
            let _ = write!(line, " {k}={v}");
        }
        if let Some(e) = &t.expect {
            let _ = write!(line, " expect: {e}");
        }
        let _ = writeln!(out, "{line}");
    }
    out
}

/// All reference and option diagnostics, without running anything.
pub fn validate(file: &TaskFile) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut ring_names: Vec<&str> = Vec::new();
    for r in &file.rings {
        if ring_names.contains(&r.name()) {
            out.push(Diagnostic { line: 0, msg: format!("duplicate ring '{}'", r.name()) });
        }
        ring_names.push(r.name());
        if let RingDecl::Semigroup { gens, name } = r {
            if NumericalSemigroup::new(gens).is_err() {
                out.push(Diagnostic {
                    line: 0,
                    msg: format!("ring '{name}': generators must be positive with gcd 1"),
                });
            }
        }
        if let RingDecl::Local { name, vars, relations } = r {
            let probe: Arc<Ring<Gf>> = Ring::new(vars.clone(), TermOrder::GrevLex, 32003);
            for rel in relations {
                match monomial_of(&probe, rel) {
                    Ok(_) => {}
                    Err(_) => out.push(Diagnostic {
                        line: 0,
                        msg: format!(
                            "ring '{name}': relation '{rel}' is not a monomial; the supported \
                             input class is monomial N and monomial ideals"
                        ),
                    }),
                }
            }
        }
    }
    let mut ideal_names: Vec<&str> = Vec::new();
    for i in &file.ideals {
        if ideal_names.contains(&i.name.as_str()) {
            out.push(Diagnostic { line: 0, msg: format!("duplicate ideal '{}'", i.name) });
        }
        ideal_names.push(&i.name);
        let Some(ring) = file.rings.iter().find(|r| r.name() == i.ring) else {
            out.push(Diagnostic {
                line: 0,
                msg: format!("ideal '{}' references undeclared ring '{}'", i.name, i.ring),
            });
            continue;
        };
        if let (RingDecl::Local { vars, .. }, IdealGens::Monomials(ms)) = (ring, &i.gens) {
            let probe: Arc<Ring<Gf>> = Ring::new(vars.clone(), TermOrder::GrevLex, 32003);
            for m in ms {
                if monomial_of(&probe, m).is_err() {
                    out.push(Diagnostic {
                        line: 0,
                        msg: format!(
                            "ideal '{}': generator '{m}' is not a monomial; the supported \
                             input class is monomial N and monomial ideals",
                            i.name
                        ),
                    });
                }
            }
        }
    }
    for t in &file.tasks {
        if !TASK_NAMES.contains(&t.name.as_str()) {
            out.push(Diagnostic { line: t.line, msg: format!("unknown task '{}'", t.name) });
        }
        for a in &t.args {
            if !ideal_names.contains(&a.as_str()) {
                out.push(Diagnostic {
                    line: t.line,
                    msg: format!("task '{}' references undeclared ideal '{a}'", t.name),
                });
            }
        }
        for (k, v) in &t.options {
            match k.as_str() {
                "bound" | "seed" | "tries" | "count" => {
                    if v.parse::<u64>().is_err() {
                        out.push(Diagnostic {
                            line: t.line,
                            msg: format!("option {k}={v} is not a natural number"),
                        });
                    }
                }
                other => out.push(Diagnostic {
                    line: t.line,
                    msg: format!("unknown option '{other}'"),
                }),
            }
        }
    }
    out
}

fn monomial_of<F: Coeff>(ring: &Arc<Ring<F>>, text: &str) -> Result<Monomial> {
    let p: Polynomial<F> = ring.parse(text)?;
    if p.terms().len() == 1 && p.terms()[0].0.is_one() {
        Ok(p.terms()[0].1.clone())
    } else {
        Err(Error::Unsupported { detail: format!("'{text}' is not a monomial") })
    }
}

// ---------------------------------------------------------------------------
// Running
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub prime: u64,
    pub rationals: bool,
    pub order: TermOrder,
    pub cap: u32,
    pub bound: u32,
    pub seed: u64,
    pub verify_routes: bool,
    /// Run independent tasks concurrently; output stays in declaration order.
    pub parallel: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            prime: crate::field::DEFAULT_PRIME,
            rationals: false,
            order: TermOrder::GrevLex,
            cap: DEFAULT_CAP,
            bound: 8,
            seed: 0,
            verify_routes: false,
            parallel: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TaskOutcome {
    pub task: String,
    pub args: Vec<String>,
    pub text: String,
    pub json: serde_json::Value,
    /// None when the task has no expect clause.
    pub expect_matched: Option<bool>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunOutput {
    pub schema_version: u32,
    pub outcomes: Vec<TaskOutcome>,
    pub all_expectations_met: bool,
    pub any_error: bool,
}

/// One ideal resolved against its declared ring, in either backend.
enum BoundIdeal {
    Semigroup(SemigroupIdeal),
    Local(LocalIdeal),
}

fn resolve_ideal(file: &TaskFile, name: &str) -> Result<BoundIdeal> {
    let decl = file
        .ideals
        .iter()
        .find(|i| i.name == name)
        .ok_or_else(|| Error::Parse { line: 0, msg: format!("undeclared ideal '{name}'") })?;
    let ring = file
        .rings
        .iter()
        .find(|r| r.name() == decl.ring)
        .ok_or_else(|| Error::Parse { line: 0, msg: format!("undeclared ring '{}'", decl.ring) })?;
    match (ring, &decl.gens) {
        (RingDecl::Semigroup { gens, .. }, IdealGens::Exponents(e)) => {
            let sg = NumericalSemigroup::new(gens)?;
            Ok(BoundIdeal::Semigroup(SemigroupIdeal::new(sg, e)?))
        }
        (RingDecl::Local { vars, relations, .. }, IdealGens::Monomials(ms)) => {
            let probe: Arc<Ring<Gf>> = Ring::new(vars.clone(), TermOrder::GrevLex, 32003);
            let rel = relations
                .iter()
                .map(|r| monomial_of(&probe, r))
                .collect::<Result<Vec<_>>>()?;
            let ambient = LocalRing::new(vars.clone(), rel);
            let gens =
                ms.iter().map(|m| monomial_of(&probe, m)).collect::<Result<Vec<_>>>()?;
            Ok(BoundIdeal::Local(LocalIdeal::new(ambient, gens)))
        }
        _ => Err(Error::Unsupported { detail: "ideal generators do not match the ring".into() }),
    }
}

fn sg_of(b: &BoundIdeal) -> Result<&SemigroupIdeal> {
    match b {
        BoundIdeal::Semigroup(s) => Ok(s),
        BoundIdeal::Local(_) => Err(Error::Unsupported {
            detail: "this task needs a semigroup-ring ideal".into(),
        }),
    }
}

fn opt_u32(t: &TaskDecl, key: &str, default: u32) -> u32 {
    t.options.get(key).and_then(|v| v.parse().ok()).unwrap_or(default)
}

pub fn run(file: &TaskFile, opts: &RunOptions) -> RunOutput {
    if opts.rationals {
        run_with::<Rat>(file, opts, &())
    } else {
        run_with::<Gf>(file, opts, &opts.prime)
    }
}

fn run_with<F: Coeff>(file: &TaskFile, opts: &RunOptions, ctx: &F::Ctx) -> RunOutput {
    let raw: Vec<Result<TaskOutcome>> = if opts.parallel {
        std::thread::scope(|scope| {
            let handles: Vec<_> = file
                .tasks
                .iter()
                .map(|task| scope.spawn(move || run_task::<F>(file, task, opts, ctx)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("task thread")).collect()
        })
    } else {
        file.tasks.iter().map(|task| run_task::<F>(file, task, opts, ctx)).collect()
    };
    let mut outcomes = Vec::new();
    let mut all_ok = true;
    let mut any_error = false;
    for (task, result) in file.tasks.iter().zip(raw) {
        let mut outcome = match result {
            Ok(o) => o,
            Err(e) => TaskOutcome {
                task: task.name.clone(),
                args: task.args.clone(),
                text: format!("error: {e}"),
                json: json!({ "error": e.to_string() }),
                expect_matched: None,
                error: Some(e.to_string()),
            },
        };
        if outcome.error.is_some() {
            any_error = true;
        }
        if let (Some(expect), None) = (&task.expect, &outcome.error) {
            let got = outcome
                .json
                .get("result")
                .map(render_result)
                .unwrap_or_default();
            let matched = got == *expect;
            outcome.expect_matched = Some(matched);
            if !matched {
                all_ok = false;
                let _ = write!(outcome.text, "\nexpect: {expect}, got: {got} -> MISMATCH");
            }
        } else if task.expect.is_some() {
            all_ok = false;
        }
        outcomes.push(outcome);
    }
    RunOutput {
        schema_version: verify::SCHEMA_VERSION,
        outcomes,
        all_expectations_met: all_ok,
        any_error,
    }
}

fn render_result(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn run_task<F: Coeff>(
    file: &TaskFile,
    task: &TaskDecl,
    opts: &RunOptions,
    ctx: &F::Ctx,
) -> Result<TaskOutcome> {
    let arg = |i: usize| -> Result<&str> {
        task.args.get(i).map(|s| s.as_str()).ok_or_else(|| Error::Parse {
            line: task.line,
            msg: format!("task '{}' needs an ideal argument #{}", task.name, i + 1),
        })
    };
    let outcome = |text: String, json: serde_json::Value| TaskOutcome {
        task: task.name.clone(),
        args: task.args.clone(),
        text,
        json,
        expect_matched: None,
        error: None,
    };
    let bound = opt_u32(task, "bound", opts.bound);
    match task.name.as_str() {
        "fiber" => {
            let b = resolve_ideal(file, arg(0)?)?;
            let fp = fiber_of::<F>(&b, ctx, bound, opts)?;
            let gens: Vec<String> = fp.ideal.gens().iter().map(|g| g.to_string()).collect();
            let flag = if fp.heuristic { "heuristic" } else { "certified" };
            let hf = fp.fiber_lengths.clone().unwrap_or_default();
            if opts.verify_routes {
                // Dual-route check: the Hilbert function of the presented
                // quotient must reproduce the exponent-set lengths.
                let h = hilbert(&fp, hf.len().saturating_sub(1) as u32)?;
                if h.hf.iter().zip(&hf).any(|(a, b)| a != b) {
                    return Err(Error::Internal {
                        detail: "fiber Hilbert function disagrees with the length table".into(),
                    });
                }
            }
            let text = format!(
                "fiber ideal: ({}) in k[{}]   [{flag}]\nfiber lengths: {:?}",
                gens.join(", "),
                fp.ring.vars().join(","),
                hf
            );
            Ok(outcome(
                text,
                json!({ "result": gens, "heuristic": fp.heuristic, "lengths": hf }),
            ))
        }
        "rees" => {
            let b = resolve_ideal(file, arg(0)?)?;
            let BoundIdeal::Local(ideal) = &b else {
                return Err(Error::Unsupported {
                    detail: "rees needs a local (polynomial-model) ideal".into(),
                });
            };
            let (rees, steps) = crate::blowup::rees_ideal::<F>(ideal, ctx, opts.cap)?;
            let basis: Vec<String> =
                rees.full_basis("rees")?.iter().map(|g| g.to_string()).collect();
            let text = format!(
                "rees ideal basis in k[{}]: ({})\nsaturation steps: {steps}",
                rees.ring().vars().join(","),
                basis.join(", ")
            );
            Ok(outcome(text, json!({ "result": basis, "saturation_steps": steps })))
        }
        "graded" | "reltype" => {
            let b = resolve_ideal(file, arg(0)?)?;
            let BoundIdeal::Local(ideal) = &b else {
                return Err(Error::Unsupported {
                    detail: "graded presentations need a local (polynomial-model) ideal".into(),
                });
            };
            let gp = crate::blowup::graded_presentation::<F>(ideal, ctx, bound)?;
            let gens: Vec<String> =
                gp.gens.iter().map(|g| format!("[{}] {}", g.degree, g.render(&gp.base))).collect();
            let flag = if gp.heuristic { "heuristic" } else { "certified" };
            if task.name == "reltype" {
                let text = format!("reltype: {}   [{flag}]", gp.reltype);
                return Ok(outcome(
                    text,
                    json!({ "result": gp.reltype, "heuristic": gp.heuristic, "generators": gens }),
                ));
            }
            let text = format!(
                "graded presentation over (A/I)[U..]: {}   [{flag}]\nreltype: {}",
                gens.join("; "),
                gp.reltype
            );
            Ok(outcome(
                text,
                json!({ "result": gens, "reltype": gp.reltype, "heuristic": gp.heuristic }),
            ))
        }
        "spread" => {
            let b = resolve_ideal(file, arg(0)?)?;
            let fp = fiber_of::<F>(&b, ctx, bound, opts)?;
            let s = analytic_spread(&fp)?;
            Ok(outcome(format!("analytic spread: {s}"), json!({ "result": s })))
        }
        "hilbert" => {
            let b = resolve_ideal(file, arg(0)?)?;
            let fp = fiber_of::<F>(&b, ctx, bound, opts)?;
            let h = hilbert(&fp, bound)?;
            let text = format!(
                "hilbert function: {:?}\nnumerator: {:?}  dim: {}  e0: {}  symmetric: {}",
                h.hf, h.numerator, h.dim, h.e0, h.symmetric
            );
            Ok(outcome(
                text,
                json!({
                    "result": h.e0,
                    "hf": h.hf,
                    "numerator": h.numerator,
                    "dim": h.dim,
                    "symmetric": h.symmetric
                }),
            ))
        }
        "betti" => {
            let b = resolve_ideal(file, arg(0)?)?;
            let fp = fiber_of::<F>(&b, ctx, bound, opts)?;
            let spread = analytic_spread(&fp)?;
            let bt = betti_table(&fp.ideal)?;
            let inv = derived_invariants(&bt, spread)?;
            let text = format!(
                "{}regularity: {}  pd: {}  depth: {}  cm: {}  type: {}  gorenstein: {}",
                bt, inv.regularity, inv.projective_dimension, inv.depth, inv.is_cohen_macaulay,
                inv.cm_type, inv.is_gorenstein
            );
            Ok(outcome(
                text,
                json!({
                    "result": inv.regularity,
                    "betti": bt.entries,
                    "invariants": serde_json::to_value(&inv).unwrap()
                }),
            ))
        }
        "reduction" => {
            let b = resolve_ideal(file, arg(0)?)?;
            match task.args.len() {
                2 => {
                    let j = resolve_ideal(file, arg(1)?)?;
                    let data = match (&b, &j) {
                        (BoundIdeal::Semigroup(i), BoundIdeal::Semigroup(jj)) => {
                            reduction_verify(i, jj, bound.max(20))?
                        }
                        (BoundIdeal::Local(i), BoundIdeal::Local(jj)) => {
                            reduction_verify(i, jj, bound.max(20))?
                        }
                        _ => return Err(Error::AmbientMismatch),
                    };
                    let rows: Vec<(u32, bool)> =
                        data.rows.iter().map(|r| (r.n, r.holds)).collect();
                    Ok(outcome(
                        format!("reduction number: {}", data.r),
                        json!({ "result": data.r, "rows": rows }),
                    ))
                }
                1 => match &b {
                    BoundIdeal::Semigroup(i) => {
                        let j = i.principal_reduction()?;
                        let r = i.reduction_number(&j, bound.max(20))?;
                        Ok(outcome(
                            format!(
                                "principal reduction (t^{}), reduction number: {r}",
                                j.gens()[0]
                            ),
                            json!({ "result": r, "reduction": j.gens() }),
                        ))
                    }
                    BoundIdeal::Local(i) => {
                        // Randomized search: arity-many k-combinations of the
                        // generators, deterministic in the seed.
                        use rand::SeedableRng;
                        let seed = t_seed(task, opts);
                        let tries = opt_u32(task, "tries", 8);
                        let ring: Arc<Ring<F>> =
                            Ring::new(i.ring().vars().to_vec(), opts.order.clone(), ctx.clone());
                        let gens =
                            i.gens().iter().map(|m| ring.monomial_poly(m.clone())).collect();
                        let gi = crate::groebner::GroebnerIdeal::with_cap(ring, gens, opts.cap);
                        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed);
                        let (j, data) =
                            crate::blowup::search_reduction(&gi, &mut rng, tries, bound.max(12))?;
                        let jg: Vec<String> = j.gens().iter().map(|g| g.to_string()).collect();
                        Ok(outcome(
                            format!(
                                "searched reduction ({}), reduction number: {}",
                                jg.join(", "),
                                data.r
                            ),
                            json!({ "result": data.r, "reduction": jg }),
                        ))
                    }
                },
                _ => Err(Error::Parse {
                    line: task.line,
                    msg: "reduction takes I or I J".into(),
                }),
            }
        }
        "vv" | "cmF" => {
            let b = resolve_ideal(file, arg(0)?)?;
            let j = resolve_ideal(file, arg(1)?)?;
            let rep = match (&b, &j) {
                (BoundIdeal::Semigroup(i), BoundIdeal::Semigroup(jj)) => {
                    if task.name == "vv" {
                        valabrega_valla_check(i, jj, bound)?
                    } else {
                        fiber_cm_check(i, jj, bound)?
                    }
                }
                (BoundIdeal::Local(i), BoundIdeal::Local(jj)) => {
                    if task.name == "vv" {
                        valabrega_valla_check(i, jj, bound)?
                    } else {
                        fiber_cm_check(i, jj, bound)?
                    }
                }
                _ => return Err(Error::AmbientMismatch),
            };
            let verdict = if rep.holds { "verified" } else { "refuted" };
            let text = match rep.witness {
                Some(w) => format!("{}: {verdict} (fails at n = {w})", task.name),
                None => format!("{}: {verdict} for 1 <= n <= {bound}", task.name),
            };
            Ok(outcome(
                text,
                json!({ "result": verdict, "witness": rep.witness, "rows": rep.rows }),
            ))
        }
        "pro9" => {
            let b = resolve_ideal(file, arg(0)?)?;
            let n0 = match &b {
                BoundIdeal::Semigroup(i) => m_absorbing_power(i, bound)?,
                BoundIdeal::Local(i) => m_absorbing_power(i, bound)?,
            };
            let text = match n0 {
                Some(n) => format!("I^n = m I^(n-1) first holds at n = {n}"),
                None => format!("no power collapse within bound {bound}"),
            };
            let result = n0.map_or("none".to_string(), |n| n.to_string());
            Ok(outcome(text, json!({ "result": result })))
        }
        "socle" => {
            let b = resolve_ideal(file, arg(0)?)?;
            let s = match &b {
                BoundIdeal::Local(i) => i.socle_length()?,
                BoundIdeal::Semigroup(i) => {
                    let m = SemigroupIdeal::maximal(i.semigroup().clone());
                    i.colon(&m)?.length_between(i)?
                }
            };
            Ok(outcome(
                format!("socle length of A/I: {s} (Gorenstein iff 1)"),
                json!({ "result": s }),
            ))
        }
        "gor-char" => {
            let i = sg_args(file, task)?;
            let rep = verify::fiber_gorenstein_check::<F>(
                i.0.semigroup(),
                i.0.gens(),
                i.1.gens(),
                ctx,
            )?;
            Ok(outcome(report_text(&rep), report_json(&rep)))
        }
        "canonical" => {
            let i = sg_args(file, task)?;
            let rep =
                verify::canonical_module_checks(i.0.semigroup(), i.0.gens(), i.1.gens())?;
            Ok(outcome(report_text(&rep), report_json(&rep)))
        }
        "e0" => {
            let i = sg_args(file, task)?;
            let rep = verify::multiplicity_compare(i.0.semigroup(), i.0.gens(), i.1.gens())?;
            Ok(outcome(report_text(&rep), report_json(&rep)))
        }
        "reg" => {
            let b = resolve_ideal(file, arg(0)?)?;
            let i = sg_of(&b)?;
            let rep =
                verify::regularity_reduction_check::<F>(i.semigroup(), i.gens(), ctx)?;
            Ok(outcome(report_text(&rep), report_json(&rep)))
        }
        other => Err(Error::Parse { line: task.line, msg: format!("unknown task '{other}'") }),
    }
}

fn sg_args(file: &TaskFile, task: &TaskDecl) -> Result<(SemigroupIdeal, SemigroupIdeal)> {
    if task.args.len() != 2 {
        return Err(Error::Parse {
            line: task.line,
            msg: format!("task '{}' takes I J", task.name),
        });
    }
    let a = resolve_ideal(file, &task.args[0])?;
    let b = resolve_ideal(file, &task.args[1])?;
    match (a, b) {
        (BoundIdeal::Semigroup(i), BoundIdeal::Semigroup(j)) => Ok((i, j)),
        _ => Err(Error::Unsupported { detail: "this verifier needs the semigroup class".into() }),
    }
}

fn report_text(rep: &verify::VerdictReport) -> String {
    let mut out = format!("{}: {}   [{}]\n", rep.tag, rep.verdict, rep.confidence);
    for h in &rep.hypotheses {
        let _ = writeln!(out, "  hypothesis {} [{}]: {:?} — {}", h.name, h.status, h.holds, h.detail);
    }
    if !rep.table.is_empty() {
        let _ = writeln!(out, "  n | left | right");
        for row in &rep.table {
            let _ = writeln!(out, "  {} | {} | {}", row.n, row.left, row.right);
        }
    }
    for n in &rep.notes {
        let _ = writeln!(out, "  note: {n}");
    }
    out.truncate(out.trim_end().len());
    out
}

fn report_json(rep: &verify::VerdictReport) -> serde_json::Value {
    let mut v = serde_json::to_value(rep).unwrap();
    if let serde_json::Value::Object(map) = &mut v {
        map.insert("result".into(), json!(rep.verdict));
    }
    v
}

/// The fiber presentation of either backend, re-homed into the requested order
/// when it differs from the default.
fn fiber_of<F: Coeff>(
    b: &BoundIdeal,
    ctx: &F::Ctx,
    bound: u32,
    opts: &RunOptions,
) -> Result<crate::blowup::PresentedAlgebra<F>> {
    let fp = match b {
        BoundIdeal::Semigroup(i) => crate::semigroup::fiber_presentation::<F>(i, ctx, bound)?,
        BoundIdeal::Local(i) => crate::blowup::fiber_presentation::<F>(i, ctx, bound, opts.cap)?,
    };
    if *fp.ring.order() == opts.order {
        return Ok(fp);
    }
    let ring = fp.ring.with_order(opts.order.clone());
    let map: Vec<usize> = (0..ring.arity()).collect();
    let gens = fp.ideal.gens().iter().map(|g| g.embed(&ring, &map)).collect();
    Ok(crate::blowup::PresentedAlgebra {
        ring: ring.clone(),
        ideal: crate::groebner::GroebnerIdeal::with_cap(ring, gens, opts.cap),
        heuristic: fp.heuristic,
        fiber_lengths: fp.fiber_lengths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# the three-generated ideal in <4,9,10>
ring A = semigroup(4, 9, 10)
ideal I in A = (8, 9, 10)
ideal J in A = (8)
task reduction I J expect: 2
task gor-char I J expect: verified
";

    #[test]
    fn parse_print_roundtrip() {
        let f = parse(SAMPLE).unwrap();
        let printed = print(&f);
        let g = parse(&printed).unwrap();
        assert_eq!(f.rings, g.rings);
        assert_eq!(f.ideals, g.ideals);
        assert_eq!(f.tasks.len(), g.tasks.len());
        for (a, b) in f.tasks.iter().zip(&g.tasks) {
            assert_eq!((&a.name, &a.args, &a.options, &a.expect), (&b.name, &b.args, &b.options, &b.expect));
        }
    }

    #[test]
    fn validate_flags_problems() {
        let bad = "\
ring A = semigroup(4, 9, 10)
ring B = quotient(power_series(x, y), [x + y])
ideal I in A = (8)
task gor-char I K
task bogus I
";
        let f = parse(bad).unwrap();
        let diags = validate(&f);
        assert!(diags.iter().any(|d| d.msg.contains("not a monomial")));
        assert!(diags.iter().any(|d| d.msg.contains("undeclared ideal 'K'")));
        assert!(diags.iter().any(|d| d.msg.contains("unknown task 'bogus'")));
        let good = parse(SAMPLE).unwrap();
        assert!(validate(&good).is_empty());
    }

    #[test]
    fn run_meets_expectations() {
        let f = parse(SAMPLE).unwrap();
        let out = run(&f, &RunOptions::default());
        assert!(!out.any_error, "{:?}", out.outcomes);
        assert!(out.all_expectations_met, "{:?}", out.outcomes);
    }

    #[test]
    fn empty_task_list_is_ok() {
        let f = parse("ring A = semigroup(2, 3)\n").unwrap();
        let out = run(&f, &RunOptions::default());
        assert!(out.outcomes.is_empty());
        assert!(out.all_expectations_met && !out.any_error);
    }

    #[test]
    fn expectation_mismatch_is_reported() {
        let f = parse(
            "ring A = semigroup(4, 9, 10)\nideal I in A = (8, 9, 10)\nideal J in A = (8)\ntask reduction I J expect: 3\n",
        )
        .unwrap();
        let out = run(&f, &RunOptions::default());
        assert!(!out.all_expectations_met);
    }

    #[test]
    fn same_options_same_json() {
        let f = parse(SAMPLE).unwrap();
        let a = serde_json::to_string(&run(&f, &RunOptions::default())).unwrap();
        let b = serde_json::to_string(&run(&f, &RunOptions::default())).unwrap();
        assert_eq!(a, b);
    }
}
