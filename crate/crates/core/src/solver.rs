//! Linear constraints on unknown basic products and their exact solution.
//!
//! Constraints come from the triple relation
//! `(λ_h ★ λ_i ★ λ_j) • Θ = Σ_cyc −C(i+j+2, i+1) λ_h ★ λ_{i+j}`,
//! compared key by key. A constant equation that survives elimination says
//! that a combination of columns vanishes; the resolver then drops the
//! column or substitutes it, and starts over.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::admissible::AdmissibleSet;
use crate::builder::declare_unknown_products;
use crate::cycle::{BasisKey, Cycle};
use crate::error::Error;
use crate::index::MultiIndex;
use crate::linear::{LinearExpression, Unknown};
use crate::model::{pair_key, ColumnRelation, Model, Source};
use crate::scalar::{binomial, Rational};

/// One scalar equation `expr = 0`: the coefficient of `key` in the
/// difference of both sides of the triple relation for `origin`.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub origin: [u32; 3],
    pub key: BasisKey,
    pub expr: LinearExpression,
}

impl std::fmt::Display for Constraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [h, i, j] = self.origin;
        write!(f, "({h},{i},{j}) [{}]: {} = 0", self.key, self.expr)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConstraintSystem {
    pub equations: Vec<Constraint>,
    pub unknowns: BTreeSet<Unknown>,
}

/// Difference of both sides of the triple relation for `(h, i, j)`, or
/// `None` when a generator is missing from the model.
pub fn triple_relation_difference(
    model: &Model<LinearExpression>,
    h: u32,
    i: u32,
    j: u32,
) -> Result<Option<Cycle<LinearExpression>>, Error> {
    let a = model.admissible();
    if [h, i, j].iter().any(|&x| x == 0 || !a.contains(&MultiIndex::singleton(x))) {
        return Ok(None);
    }
    let lam = |s: u32| model.make_basis(&MultiIndex::singleton(s), 0);
    let lhs = model.pontryagin(&model.pontryagin(&lam(h), &lam(i))?, &lam(j))?.dot_theta(1);
    let mut rhs = Cycle::zero(model.genus());
    for (x, y, z) in [(h, i, j), (i, j, h), (j, h, i)] {
        let c = -binomial((y + z + 2) as i64, (y + 1) as i64);
        rhs.add_scaled(&model.pontryagin(&lam(x), &lam(y + z))?, &c);
    }
    Ok(Some(lhs.sub(&rhs)))
}

/// Scalar equations contributed by one triple.
pub fn triple_relation_constraints(
    model: &Model<LinearExpression>,
    h: u32,
    i: u32,
    j: u32,
) -> Result<Vec<Constraint>, Error> {
    let diff = match triple_relation_difference(model, h, i, j)? {
        Some(d) => d,
        None => return Ok(Vec::new()),
    };
    Ok(diff
        .terms()
        .map(|(k, v)| Constraint { origin: [h, i, j], key: k.clone(), expr: v.clone() })
        .collect())
}

/// Every ordered triple `h+i+j ≤ g−3` of singleton generators in `A`.
pub fn all_constraints(model: &Model<LinearExpression>, unknowns: &[Unknown]) -> Result<ConstraintSystem, Error> {
    let g = model.genus() as i64;
    let singles = model.admissible().singletons();
    let mut equations = Vec::new();
    for &h in &singles {
        for &i in &singles {
            for &j in &singles {
                if (h + i + j) as i64 <= g - 3 {
                    equations.extend(triple_relation_constraints(model, h, i, j)?);
                }
            }
        }
    }
    Ok(ConstraintSystem { equations, unknowns: unknowns.iter().cloned().collect() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Unique,
    Parametrized,
    Inconsistent,
}

/// Outcome of exact elimination.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub status: Status,
    /// Pivot unknowns in terms of the free ones.
    pub assignment: BTreeMap<Unknown, LinearExpression>,
    pub free: Vec<Unknown>,
    /// Indexes into the equation list of a minimal inconsistent subset.
    pub witness: Vec<usize>,
}

/// Reduced row echelon form with pivots taken in unknown order. Returns the
/// pivot map and whether a row `0 = c ≠ 0` remains.
fn eliminate(rows: &[LinearExpression], order: &[Unknown]) -> (BTreeMap<Unknown, LinearExpression>, bool) {
    let mut rows: Vec<LinearExpression> = rows.to_vec();
    let mut used = vec![false; rows.len()];
    let mut pivots: Vec<(Unknown, usize)> = Vec::new();
    for u in order {
        let Some(p) = (0..rows.len()).find(|&r| !used[r] && !rows[r].coefficient(u).is_zero()) else {
            continue;
        };
        used[p] = true;
        let inv = rows[p].coefficient(u).recip().expect("nonzero pivot");
        let mut pivot_row = LinearExpression::default();
        pivot_row.add_expr(&rows[p], &inv);
        for r in 0..rows.len() {
            if r != p {
                let c = rows[r].coefficient(u);
                if !c.is_zero() {
                    rows[r].add_expr(&pivot_row, &-c);
                }
            }
        }
        rows[p] = pivot_row;
        pivots.push((u.clone(), p));
    }
    let inconsistent = rows.iter().enumerate().any(|(r, e)| !used[r] && !e.constant_term().is_zero());
    let mut assignment = BTreeMap::new();
    for (u, p) in pivots {
        // u + rest = 0  ⇒  u = −rest
        let mut rest = rows[p].clone();
        rest.add_unknown(&u, &-Rational::one());
        let mut value = LinearExpression::default();
        value.add_expr(&rest, &-Rational::one());
        assignment.insert(u, value);
    }
    (assignment, inconsistent)
}

fn inconsistent_subset(exprs: &[LinearExpression], subset: &[usize], order: &[Unknown]) -> bool {
    let rows: Vec<LinearExpression> = subset.iter().map(|&i| exprs[i].clone()).collect();
    eliminate(&rows, order).1
}

/// Solves `expr = 0` for every equation by exact Gaussian elimination.
pub fn solve(system: &ConstraintSystem) -> Solution {
    let order: Vec<Unknown> = system.unknowns.iter().cloned().collect();
    let exprs: Vec<LinearExpression> = system.equations.iter().map(|c| c.expr.clone()).collect();
    let (assignment, inconsistent) = eliminate(&exprs, &order);
    if inconsistent {
        let mut keep: Vec<usize> = (0..exprs.len()).collect();
        let mut idx = 0;
        while idx < keep.len() {
            let mut trial = keep.clone();
            trial.remove(idx);
            if inconsistent_subset(&exprs, &trial, &order) {
                keep = trial;
            } else {
                idx += 1;
            }
        }
        return Solution { status: Status::Inconsistent, assignment: BTreeMap::new(), free: Vec::new(), witness: keep };
    }
    let free: Vec<Unknown> = order.iter().filter(|u| !assignment.contains_key(u)).cloned().collect();
    let status = if free.is_empty() { Status::Unique } else { Status::Parametrized };
    Solution { status, assignment, free, witness: Vec::new() }
}

/// Solver report in its JSON form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolverReport {
    pub status: Status,
    pub assignment: BTreeMap<String, String>,
    pub free: Vec<String>,
    pub witness: Vec<String>,
}

impl SolverReport {
    pub fn new(system: &ConstraintSystem, solution: &Solution) -> Self {
        SolverReport {
            status: solution.status,
            assignment: solution.assignment.iter().map(|(u, e)| (u.name(), e.to_string())).collect(),
            free: solution.free.iter().map(Unknown::name).collect(),
            witness: solution.witness.iter().map(|&i| system.equations[i].to_string()).collect(),
        }
    }
}

/// A relation among columns derived while resolving.
#[derive(Debug, Clone, PartialEq)]
pub enum ForcedRelation {
    /// `λ_K = 0`.
    Vanishes(MultiIndex),
    /// `λ_K = Σ c·λ_L`.
    Substitution(MultiIndex, ColumnRelation),
}

impl std::fmt::Display for ForcedRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ForcedRelation::Vanishes(k) => write!(f, "λ_{k} = 0"),
            ForcedRelation::Substitution(k, rel) => {
                let parts: Vec<String> = rel.iter().map(|(t, c)| format!("{c}·λ_{t}")).collect();
                write!(f, "λ_{k} = {}", parts.join(" + "))
            }
        }
    }
}

/// A fully resolved model together with how it was obtained.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub model: Model,
    pub values: BTreeMap<Unknown, Rational>,
    pub forced: Vec<ForcedRelation>,
    pub system: ConstraintSystem,
    pub solution: Solution,
}

impl Resolution {
    pub fn value(&self, i: &[u32], j: &[u32], target: &[u32], m: u32) -> Option<&Rational> {
        let (i, j) = pair_key(&MultiIndex::of(i), &MultiIndex::of(j));
        self.values.get(&Unknown { i, j, target: BasisKey::new(MultiIndex::of(target), m) })
    }
}

/// Groups residual constant equations into column relations: one group per
/// origin triple and key shape `(d, s, m)`.
fn column_relations(system: &ConstraintSystem, assignment: &BTreeMap<Unknown, LinearExpression>) -> Vec<Vec<(MultiIndex, Rational)>> {
    let mut groups: BTreeMap<([u32; 3], u32, u32, u32), Vec<(MultiIndex, Rational)>> = BTreeMap::new();
    for c in &system.equations {
        let e = c.expr.substitute(assignment);
        if let Some(v) = e.as_constant() {
            if !v.is_zero() {
                let k = &c.key;
                groups
                    .entry((c.origin, k.index.d(), k.index.s(), k.m))
                    .or_default()
                    .push((k.index.clone(), v.clone()));
            }
        }
    }
    groups.into_values().collect()
}

/// Removes `column` and every column whose substitution becomes empty.
fn drop_column(
    admissible: &AdmissibleSet,
    relations: &BTreeMap<MultiIndex, ColumnRelation>,
    column: &MultiIndex,
) -> (AdmissibleSet, BTreeMap<MultiIndex, ColumnRelation>) {
    let mut adm = admissible.without(column);
    let mut rels: BTreeMap<MultiIndex, ColumnRelation> = relations.clone();
    loop {
        rels.retain(|k, _| adm.contains(k));
        for rel in rels.values_mut() {
            rel.retain(|(t, _)| adm.contains(t));
        }
        match rels.iter().find(|(_, r)| r.is_empty()).map(|(k, _)| k.clone()) {
            Some(k) => {
                rels.remove(&k);
                adm = adm.without(&k);
            }
            None => return (adm, rels),
        }
    }
}

fn inconsistent(system: &ConstraintSystem, msg: String) -> Error {
    let sol = solve(system);
    let witness: Vec<String> = sol.witness.iter().map(|&i| system.equations[i].to_string()).collect();
    if witness.is_empty() {
        Error::Inconsistent(msg)
    } else {
        Error::Inconsistent(format!("{msg}; witness: {}", witness.join("; ")))
    }
}

/// Builds, constrains and solves the model over `admissible`, applying
/// forced column relations until the system is consistent. Columns listed
/// in `nonzero` may not vanish.
pub fn resolve(admissible: &AdmissibleSet, nonzero: &[MultiIndex]) -> Result<Resolution, Error> {
    let mut adm = admissible.clone();
    let mut relations: BTreeMap<MultiIndex, ColumnRelation> = BTreeMap::new();
    let mut forced = Vec::new();
    loop {
        for k in nonzero {
            if !adm.contains(k) {
                return Err(Error::Inconsistent(format!("column {k} is flagged nonzero but forced to vanish")));
            }
        }
        let (sym, unknowns) = declare_unknown_products(&adm, &relations)?;
        let system = all_constraints(&sym, &unknowns)?;
        let pivot_exprs: Vec<Constraint> =
            system.equations.iter().filter(|c| !c.expr.is_constant()).cloned().collect();
        let partial = ConstraintSystem { equations: pivot_exprs, unknowns: system.unknowns.clone() };
        let partial_solution = solve(&partial);
        if partial_solution.status == Status::Inconsistent {
            return Err(inconsistent(&partial, "unknown coefficients admit no solution".into()));
        }
        let groups = column_relations(&system, &partial_solution.assignment);
        if let Some(group) = groups.into_iter().next() {
            if group.len() == 1 {
                let column = group[0].0.clone();
                if nonzero.contains(&column) {
                    return Err(inconsistent(&system, format!("column {column} is flagged nonzero but forced to vanish")));
                }
                let (a, r) = drop_column(&adm, &relations, &column);
                adm = a;
                relations = r;
                forced.push(ForcedRelation::Vanishes(column));
            } else {
                let pick = group
                    .iter()
                    .filter(|(k, _)| !nonzero.contains(k))
                    .min_by(|a, b| a.0.cmp(&b.0))
                    .or_else(|| group.iter().min_by(|a, b| a.0.cmp(&b.0)))
                    .cloned()
                    .expect("non-empty group");
                let rel: ColumnRelation = group
                    .iter()
                    .filter(|(k, _)| *k != pick.0)
                    .map(|(k, c)| (k.clone(), -(c / &pick.1)))
                    .collect();
                for other in relations.values_mut() {
                    let mut expanded = Vec::new();
                    for (t, c) in other.drain(..) {
                        if t == pick.0 {
                            expanded.extend(rel.iter().map(|(u, r)| (u.clone(), &c * r)));
                        } else {
                            expanded.push((t, c));
                        }
                    }
                    *other = expanded;
                }
                relations.insert(pick.0.clone(), rel.clone());
                forced.push(ForcedRelation::Substitution(pick.0, rel));
            }
            continue;
        }
        let solution = solve(&system);
        if solution.status == Status::Parametrized {
            return Err(Error::Underdetermined(solution.free.iter().map(Unknown::name).collect()));
        }
        let mut values = BTreeMap::new();
        for (u, e) in &solution.assignment {
            values.insert(u.clone(), e.as_constant().expect("unique solution").clone());
        }
        let model = evaluate(&sym, &values)?;
        let report = model.check_associativity();
        if let Some(f) = report.failures.first() {
            let [i, j, k] = &f.triple;
            return Err(Error::Inconsistent(format!("associativity fails on ({i}, {j}, {k})")));
        }
        return Ok(Resolution { model, values, forced, system, solution });
    }
}

/// Substitutes solved values into a symbolic model.
pub fn evaluate(sym: &Model<LinearExpression>, values: &BTreeMap<Unknown, Rational>) -> Result<Model, Error> {
    let mut products = BTreeMap::new();
    let mut provenance = BTreeMap::new();
    for (pair, v) in sym.stored_products() {
        let mut out = Cycle::zero(sym.genus());
        for (k, e) in v.terms() {
            let c = e
                .evaluate(values)
                .ok_or_else(|| Error::Underdetermined(e.unknowns().map(Unknown::name).collect()))?;
            out.add_term(k.clone(), c);
        }
        products.insert(pair.clone(), out);
    }
    for (pair, s) in sym.provenance() {
        let s = if *s == Source::Declared { Source::Solved } else { *s };
        provenance.insert(pair.clone(), s);
    }
    Model::from_parts(sym.admissible().clone(), sym.relations().clone(), products, provenance)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn empty_system_is_parametrized() {
        let u = Unknown { i: MultiIndex::of(&[1]), j: MultiIndex::of(&[1, 1]), target: BasisKey::new(MultiIndex::of(&[3]), 2) };
        let system = ConstraintSystem { equations: Vec::new(), unknowns: [u.clone()].into_iter().collect() };
        let s = solve(&system);
        assert_eq!(s.status, Status::Parametrized);
        assert_eq!(s.free, vec![u]);
    }

    #[test]
    fn inconsistent_witness_is_minimal() {
        let u = Unknown { i: MultiIndex::of(&[1]), j: MultiIndex::of(&[1, 1]), target: BasisKey::new(MultiIndex::of(&[3]), 2) };
        let key = BasisKey::new(MultiIndex::of(&[3]), 1);
        let mk = |c: i64| {
            let mut e = LinearExpression::unknown(u.clone());
            e.add_expr(&LinearExpression::constant(Rational::from(c)), &Rational::one());
            Constraint { origin: [1, 1, 1], key: key.clone(), expr: e }
        };
        let noise = Constraint { origin: [1, 1, 2], key: key.clone(), expr: LinearExpression::default() };
        let system = ConstraintSystem { equations: vec![mk(1), noise, mk(2)], unknowns: [u].into_iter().collect() };
        let s = solve(&system);
        assert_eq!(s.status, Status::Inconsistent);
        assert_eq!(s.witness, vec![0, 2]);
    }

    #[test]
    fn genus_seven_forces_a_and_kills_lambda_21() {
        let r = resolve(&AdmissibleSet::maximal(7, None).unwrap(), &[]).unwrap();
        assert_eq!(r.value(&[1], &[1, 1], &[3], 2), Some(&q(70, 1)));
        assert_eq!(r.forced, vec![ForcedRelation::Vanishes(MultiIndex::of(&[2, 1]))]);
        assert_eq!(r.model.dimension(), 22);
    }

    #[test]
    fn genus_eight_values() {
        let nz: Vec<MultiIndex> = [&[1][..], &[2], &[3], &[1, 1], &[2, 1], &[3, 1]].iter().map(|e| MultiIndex::of(e)).collect();
        let r = resolve(&AdmissibleSet::maximal(8, None).unwrap(), &nz).unwrap();
        assert_eq!(r.value(&[1], &[1, 1], &[3], 2), Some(&q(20, 1)));
        assert_eq!(r.value(&[1], &[1, 1], &[2, 1], 1), Some(&q(-33, 2)));
        assert_eq!(
            r.forced,
            vec![ForcedRelation::Substitution(MultiIndex::of(&[2, 2]), vec![(MultiIndex::of(&[3, 1]), q(-10, 3))])]
        );
        assert_eq!(r.model.dimension(), 30);
    }
}
