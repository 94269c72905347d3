//! Checks behind `tautring verify`.

use std::str::FromStr;
use std::time::Instant;

use crate::catalog::{all_catalog_cases, case_by_label, enumerate_cases, ResolvedCase};
use crate::cycle::{theta_power, BasisKey, Cycle};
use crate::error::Error;
use crate::index::MultiIndex;
use crate::model::Model;
use crate::oracle::{xi_pair, xi_pair_closed_form, xi_triple, xi_triple_expected};
use crate::scalar::Rational;
use crate::solver::ForcedRelation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    All,
    Dimensions,
    ForcedRelations,
    Oracles,
    Omega,
    Associativity,
    Exchange,
}

impl FromStr for Scope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "all" => Scope::All,
            "dimensions" => Scope::Dimensions,
            "forced-relations" => Scope::ForcedRelations,
            "oracles" => Scope::Oracles,
            "omega" => Scope::Omega,
            "associativity" => Scope::Associativity,
            "exchange" => Scope::Exchange,
            _ => return Err(Error::InvalidInput(format!("unknown scope `{s}`"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult { name: name.to_string(), passed, detail: detail.into() }
    }
}

/// Printed dimension lists for `g = 3..=8`.
pub const EXPECTED_DIMENSIONS: [(u32, &[u64]); 6] = [
    (3, &[4, 5]),
    (4, &[5, 7]),
    (5, &[6, 9, 11]),
    (6, &[7, 11, 12, 14, 15]),
    (7, &[8, 13, 15, 17, 19, 22]),
    (8, &[9, 15, 18, 20, 23, 25, 27, 29, 30]),
];

pub fn check_dimensions() -> CheckResult {
    let start = Instant::now();
    let mut bad = Vec::new();
    for (g, expected) in EXPECTED_DIMENSIONS {
        match enumerate_cases(g) {
            Ok(cases) => {
                let dims: Vec<u64> = cases.iter().map(ResolvedCase::dimension).collect();
                if dims != expected {
                    bad.push(format!("g={g}: {dims:?} ≠ {expected:?}"));
                }
            }
            Err(e) => bad.push(format!("g={g}: {e}")),
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 5.0 {
        bad.push(format!("took {secs:.2}s"));
    }
    let detail = if bad.is_empty() { format!("6 genera in {secs:.2}s") } else { bad.join("; ") };
    CheckResult::new("dimensions", bad.is_empty(), detail)
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

pub fn check_forced_relations() -> CheckResult {
    let run = || -> Result<Vec<String>, Error> {
        let mut bad = Vec::new();
        let g7 = case_by_label(7, "f")?.resolve()?;
        let a7 = g7.value(&[1], &[1, 1], &[3], 2);
        if a7 != Some(&q(70, 1)) {
            bad.push(format!("g=7: a = {a7:?}"));
        }
        if !g7.forced.contains(&ForcedRelation::Vanishes(MultiIndex::of(&[2, 1]))) {
            bad.push("g=7: λ_{2,1} not forced to vanish".into());
        }
        let g8 = case_by_label(8, "i")?.resolve()?;
        let a8 = g8.value(&[1], &[1, 1], &[3], 2);
        let b8 = g8.value(&[1], &[1, 1], &[2, 1], 1);
        if a8 != Some(&q(20, 1)) || b8 != Some(&q(-33, 2)) {
            bad.push(format!("g=8: a = {a8:?}, b = {b8:?}"));
        }
        let expect = ForcedRelation::Substitution(MultiIndex::of(&[2, 2]), vec![(MultiIndex::of(&[3, 1]), q(-10, 3))]);
        if !g8.forced.contains(&expect) {
            bad.push(format!("g=8: forced relations {:?}", g8.forced));
        }
        Ok(bad)
    };
    match run() {
        Ok(bad) if bad.is_empty() => {
            CheckResult::new("forced-relations", true, "a=70, λ_{2,1}=0; a=20, b=-33/2, λ_{2,2}=-10/3·λ_{3,1}")
        }
        Ok(bad) => CheckResult::new("forced-relations", false, bad.join("; ")),
        Err(e) => CheckResult::new("forced-relations", false, e.to_string()),
    }
}

pub fn check_pair_oracle() -> CheckResult {
    let mut bad = Vec::new();
    for g in 4..=12 {
        for i in 0..=6 {
            for j in 0..=6 {
                for t in 0..=(i + j) {
                    let v = xi_pair(g, i, j, t);
                    let want = if t < i + j { Rational::zero() } else { xi_pair_closed_form(g, i, j) };
                    if v != want {
                        bad.push(format!("ξ({g};{i},{j};{t}) = {v}, want {want}"));
                    }
                }
            }
        }
    }
    CheckResult::new("pair-oracle", bad.is_empty(), if bad.is_empty() { "9·7·7 grid".into() } else { bad.join("; ") })
}

pub fn check_triple_oracle() -> CheckResult {
    let mut bad = Vec::new();
    let r111 = xi_triple(10, 1, 1, 1);
    if r111.into_iter().collect::<Vec<_>>() != vec![((2, 1), Rational::from(-18))] {
        bad.push("(1,1,1) differs from −18·{1,2}".to_string());
    }
    let r211 = xi_triple(10, 2, 1, 1);
    if r211.into_iter().collect::<Vec<_>>() != vec![((2, 2), Rational::from(-6)), ((3, 1), Rational::from(-20))] {
        bad.push("(2,1,1) differs from −6·{2,2} − 20·{1,3}".to_string());
    }
    for g in 10..=12 {
        for h in 1..=3 {
            for i in 1..=3 {
                for j in 1..=3 {
                    let targets = [(h, i + j), (i, j + h), (j, h + i)].map(|(x, y): (u32, u32)| (x.max(y), x.min(y)));
                    let distinct = targets[0] != targets[1] && targets[1] != targets[2] && targets[0] != targets[2];
                    if distinct && xi_triple(g, h, i, j) != xi_triple_expected(h, i, j) {
                        bad.push(format!("g={g} ({h},{i},{j})"));
                    }
                }
            }
        }
    }
    CheckResult::new("triple-oracle", bad.is_empty(), if bad.is_empty() { "two known instances and 1..3 grid".into() } else { bad.join("; ") })
}

fn basis_cycles(model: &Model) -> Vec<(BasisKey, Cycle)> {
    model
        .basis_keys()
        .into_iter()
        .map(|k| {
            let c = Cycle::basis(model.genus(), k.index.clone(), k.m as i64);
            (k, c)
        })
        .collect()
}

/// Fourier, unit, commutativity and grading violations over basis pairs.
pub fn exchange_violations(model: &Model) -> Vec<String> {
    let g = model.genus();
    let sg = Rational::sign(g as i64);
    let mut bad = Vec::new();
    let cycles = basis_cycles(model);
    let unit_star = Cycle::basis(g, MultiIndex::empty(), 0);
    let unit_dot = Cycle::basis(g, MultiIndex::empty(), g as i64);
    for (k, x) in &cycles {
        if x.fourier().fourier() != x.mult_pullback(-1).scale(&sg) {
            bad.push(format!("F² on {k}"));
        }
        if model.star(&unit_star, x) != *x || model.star(x, &unit_star) != *x {
            bad.push(format!("★-unit on {k}"));
        }
        if model.dot(&unit_dot, x) != *x || model.dot(x, &unit_dot) != *x {
            bad.push(format!("•-unit on {k}"));
        }
    }
    for (a, (kx, x)) in cycles.iter().enumerate() {
        for (ky, y) in &cycles[a..] {
            let p = model.star(x, y);
            if p != model.star(y, x) {
                bad.push(format!("★ not commutative on {kx}, {ky}"));
            }
            if p.fourier() != model.dot(&x.fourier(), &y.fourier()) {
                bad.push(format!("F(x★y) ≠ F(x)•F(y) on {kx}, {ky}"));
            }
            let i = model.dot(x, y);
            if i != model.dot(y, x) {
                bad.push(format!("• not commutative on {kx}, {ky}"));
            }
            if i.fourier() != model.star(&x.fourier(), &y.fourier()).scale(&sg) {
                bad.push(format!("F(x•y) ≠ (−1)^g F(x)★F(y) on {kx}, {ky}"));
            }
            let s = kx.degree() + ky.degree();
            let dstar = kx.dimension() + ky.dimension();
            if !p.is_zero() && p.bidegree() != Some((dstar, s)) {
                bad.push(format!("★ bidegree on {kx}, {ky}"));
            }
            let ddot = kx.dimension() as i64 + ky.dimension() as i64 - g as i64;
            if !i.is_zero() && (ddot < 0 || i.bidegree() != Some((ddot as u32, s))) {
                bad.push(format!("• bidegree on {kx}, {ky}"));
            }
        }
    }
    bad
}

/// Ω-calculus violations over every basis element.
pub fn omega_violations(model: &Model) -> Vec<String> {
    let g = model.genus() as i64;
    let mut bad = Vec::new();
    for (key, w) in basis_cycles(model) {
        let om = |k: i64, t: i64| model.omega(&w, k, t).expect("pure basis element");
        let o00 = om(0, 0);
        if o00 != w.fourier() {
            bad.push(format!("F(W) ≠ Ω_0;0 on {key}"));
        }
        for k in -(g + 1)..=(g + 1) {
            let mut sum = Cycle::zero(g as u32);
            for t in 0..=g {
                let v = om(k, t);
                if k + t >= 1 && !v.is_zero() {
                    bad.push(format!("Ω_{k};{t} ≠ 0 on {key}"));
                }
                sum = sum.add(&v);
            }
            if k != 0 && !sum.is_zero() {
                bad.push(format!("Σ_t Ω_{k};t ≠ 0 on {key}"));
            }
        }
        for m in 0..=(g + 1) {
            let rhs = model.dot(&o00, &theta_power(g as u32, m)).scale(&Rational::sign(m));
            if om(-m, 0) != rhs {
                bad.push(format!("Ω_-{m};0 ≠ Ω_0;0 • (−Θ)^{m}/{m}! on {key}"));
            }
        }
    }
    bad
}

/// The g=8 case (i) model with a product entry moved out of its bidegree.
pub fn tampered_g8() -> Result<Model, Error> {
    let mut model = case_by_label(8, "i")?.resolve()?.model;
    let (i, j) = (MultiIndex::of(&[1]), MultiIndex::of(&[2]));
    let bad = model.basic(&i, &j).add(&Cycle::basis(8, i.clone(), 1));
    model.replace_basic_product_unchecked(&i, &j, bad);
    Ok(model)
}

fn check_associativity_suite(cases: &[ResolvedCase]) -> CheckResult {
    let mut bad = Vec::new();
    let mut triples = 0;
    for c in cases {
        let r = c.model().check_associativity();
        triples += r.triples_checked;
        if !r.passed() {
            bad.push(format!("g={} ({}) fails on {:?}", c.descriptor.genus, c.descriptor.label, r.failures[0].triple));
        }
    }
    if let Some(c) = cases.iter().find(|c| c.descriptor.genus == 8 && c.descriptor.label == "i") {
        let m = c.model();
        let l = |e: &[u32]| m.make_basis(&MultiIndex::of(e), 0);
        let left = m.star(&m.star(&l(&[1]), &l(&[1])), &l(&[2]));
        let right = m.star(&l(&[1]), &m.star(&l(&[1]), &l(&[2])));
        if left != right {
            bad.push(format!("g=8 (λ1★λ1)★λ2 = {left}, λ1★(λ1★λ2) = {right}"));
        }
    }
    match tampered_g8() {
        Ok(t) if t.check_associativity().passed() => bad.push("tampered g=8 table passes".into()),
        Ok(_) => {}
        Err(e) => bad.push(e.to_string()),
    }
    let detail = if bad.is_empty() { format!("{triples} triples; tampered table rejected") } else { bad.join("; ") };
    CheckResult::new("associativity", bad.is_empty(), detail)
}

fn suite(name: &str, cases: &[ResolvedCase], f: fn(&Model) -> Vec<String>) -> CheckResult {
    let mut bad = Vec::new();
    for c in cases {
        for v in f(c.model()) {
            bad.push(format!("g={} ({}): {v}", c.descriptor.genus, c.descriptor.label));
        }
    }
    let detail = if bad.is_empty() {
        format!("{} models", cases.len())
    } else {
        let shown: Vec<String> = bad.iter().take(5).cloned().collect();
        format!("{} violations, e.g. {}", bad.len(), shown.join("; "))
    };
    CheckResult::new(name, bad.is_empty(), detail)
}

/// Runs the checks in `scope`.
pub fn verify(scope: Scope) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let wants = |s: Scope| scope == Scope::All || scope == s;
    if wants(Scope::Dimensions) {
        out.push(check_dimensions());
    }
    if wants(Scope::ForcedRelations) {
        out.push(check_forced_relations());
    }
    if wants(Scope::Oracles) {
        out.push(check_pair_oracle());
        out.push(check_triple_oracle());
    }
    if wants(Scope::Omega) || wants(Scope::Associativity) || wants(Scope::Exchange) {
        match all_catalog_cases() {
            Ok(cases) => {
                if wants(Scope::Exchange) {
                    out.push(suite("exchange", &cases, exchange_violations));
                }
                if wants(Scope::Omega) {
                    out.push(suite("omega", &cases, omega_violations));
                }
                if wants(Scope::Associativity) {
                    out.push(check_associativity_suite(&cases));
                }
            }
            Err(e) => out.push(CheckResult::new("catalog", false, e.to_string())),
        }
    }
    out
}
