//! Default basic products and unknown declarations for an admissible set.

use std::collections::BTreeMap;

use crate::admissible::AdmissibleSet;
use crate::cycle::{BasisKey, Cycle};
use crate::error::Error;
use crate::index::{admissible_top, MultiIndex};
use crate::linear::{LinearExpression, Unknown};
use crate::model::{pair_key, ColumnRelation, Model, Source};
use crate::scalar::{binomial, Rational};

/// `λ_{i} ★ λ_{j}` for singleton columns, before restriction to `A`.
pub fn singleton_product(g: u32, i: u32, j: u32) -> Cycle {
    let mut out = Cycle::zero(g);
    let (i, j) = (i as i64, j as i64);
    // Checked first so the denominator below is never zero.
    if i + j > g as i64 - 3 {
        return out;
    }
    out.add_term(BasisKey::new(MultiIndex::of(&[i as u32, j as u32]), 0), Rational::one());
    let c = &binomial(i + j + 2, i + 1) / &Rational::from(g as i64 - i - j - 2);
    out.add_term(BasisKey::new(MultiIndex::singleton((i + j) as u32), 1), -c);
    out
}

/// Keys `λ_K^[m]` with `m ≥ 1` of the given bidegree over basis columns.
fn correction_keys(g: u32, columns: &[MultiIndex], d: u32, s: u32) -> Vec<BasisKey> {
    let mut keys: Vec<BasisKey> = columns
        .iter()
        .filter(|k| k.s() == s && k.d() < d)
        .filter(|k| (d - k.d()) as i64 <= admissible_top(g, k))
        .map(|k| BasisKey::new(k.clone(), d - k.d()))
        .collect();
    keys.sort();
    keys
}

/// Unordered pairs of non-empty basis columns.
fn basis_pairs(columns: &[MultiIndex]) -> Vec<(MultiIndex, MultiIndex)> {
    let nonempty: Vec<&MultiIndex> = columns.iter().filter(|c| !c.is_empty()).collect();
    let mut out = Vec::new();
    for (a, i) in nonempty.iter().enumerate() {
        for j in &nonempty[a..] {
            out.push(pair_key(i, j));
        }
    }
    out.sort();
    out
}

/// The basic product table fixed by the singleton pair formula and by
/// grading; pairs left open are reported separately.
pub fn default_basic_products(
    admissible: &AdmissibleSet,
) -> (BTreeMap<(MultiIndex, MultiIndex), Cycle>, Vec<(MultiIndex, MultiIndex)>) {
    let g = admissible.genus();
    let columns = admissible.display_order();
    let restrict = |c: &Cycle| {
        Cycle::from_terms(g, c.terms().filter(|(k, _)| admissible.contains(&k.index)).map(|(k, v)| (k.clone(), v.clone())))
    };
    let mut fixed = BTreeMap::new();
    let mut open = Vec::new();
    for (i, j) in basis_pairs(&columns) {
        match (i.as_singleton(), j.as_singleton()) {
            (Some(a), Some(b)) => {
                fixed.insert((i, j), restrict(&singleton_product(g, a, b)));
            }
            _ => {
                let (d, s) = (i.d() + j.d(), i.s() + j.s());
                if correction_keys(g, &columns, d, s).is_empty() {
                    let leading = Cycle::basis(g, i.union(&j), 0);
                    fixed.insert((i, j), restrict(&leading));
                } else {
                    open.push((i, j));
                }
            }
        }
    }
    (fixed, open)
}

/// Builds the symbolic model: pair-formula entries, grading zeros, and for
/// each remaining pair `λ_{I∪J}` plus one fresh unknown per correction key.
pub fn declare_unknown_products(
    admissible: &AdmissibleSet,
    relations: &BTreeMap<MultiIndex, ColumnRelation>,
) -> Result<(Model<LinearExpression>, Vec<Unknown>), Error> {
    let g = admissible.genus();
    let columns: Vec<MultiIndex> =
        admissible.display_order().into_iter().filter(|c| !relations.contains_key(c)).collect();
    let mut products = BTreeMap::new();
    let mut provenance = BTreeMap::new();
    let mut unknowns = Vec::new();
    let lift = |c: &Cycle| c.map_coeffs(|r| LinearExpression::constant(r.clone()));
    let restrict = |c: Cycle<LinearExpression>| {
        let mut out = Cycle::zero(g);
        for (k, v) in c.terms() {
            if !admissible.contains(&k.index) {
                continue;
            }
            match relations.get(&k.index) {
                None => out.add_term(k.clone(), v.clone()),
                Some(rel) => {
                    for (t, r) in rel {
                        out.add_term(BasisKey::new(t.clone(), k.m), crate::cycle::Coefficient::scale(v, r));
                    }
                }
            }
        }
        out
    };
    for (i, j) in basis_pairs(&columns) {
        let (d, s) = (i.d() + j.d(), i.s() + j.s());
        let source;
        let mut value;
        if let (Some(a), Some(b)) = (i.as_singleton(), j.as_singleton()) {
            value = restrict(lift(&singleton_product(g, a, b)));
            source = Source::PairFormula;
        } else {
            value = restrict(lift(&Cycle::basis(g, i.union(&j), 0)));
            let keys = correction_keys(g, &columns, d, s);
            source = if keys.is_empty() {
                if value.is_zero() {
                    Source::GradingZero
                } else {
                    Source::LeadingTerm
                }
            } else {
                Source::Declared
            };
            for target in keys {
                let u = Unknown { i: i.clone(), j: j.clone(), target: target.clone() };
                value.add_term(target, LinearExpression::unknown(u.clone()));
                unknowns.push(u);
            }
        }
        provenance.insert((i.clone(), j.clone()), source);
        products.insert((i, j), value);
    }
    let model = Model::from_parts(admissible.clone(), relations.clone(), products, provenance)?;
    unknowns.sort();
    Ok((model, unknowns))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn pair_formula_values() {
        let g5 = singleton_product(5, 1, 1);
        assert_eq!(g5.coeff(&BasisKey::new(MultiIndex::of(&[2]), 1)), Some(&q(-6, 1)));
        let g8 = singleton_product(8, 1, 1);
        assert_eq!(g8.coeff(&BasisKey::new(MultiIndex::of(&[2]), 1)), Some(&q(-3, 2)));
        assert_eq!(g8.coeff(&BasisKey::new(MultiIndex::of(&[1, 1]), 0)), Some(&q(1, 1)));
        assert!(singleton_product(6, 2, 2).is_zero());
        assert!(singleton_product(6, 1, 3).is_zero());
    }

    #[test]
    fn declared_unknowns() {
        let g7 = AdmissibleSet::maximal(7, None).unwrap();
        let (_, u) = declare_unknown_products(&g7, &BTreeMap::new()).unwrap();
        let names: Vec<String> = u.iter().map(Unknown::name).collect();
        assert_eq!(names, ["u_{{1},{1,1},{3},2}"]);

        let g8 = AdmissibleSet::maximal(8, None).unwrap();
        let (_, u) = declare_unknown_products(&g8, &BTreeMap::new()).unwrap();
        let names: Vec<String> = u.iter().map(Unknown::name).collect();
        assert_eq!(names, ["u_{{1},{1,1},{2,1},1}", "u_{{1},{1,1},{3},2}"]);

        let g6 = AdmissibleSet::maximal(6, None).unwrap();
        assert!(declare_unknown_products(&g6, &BTreeMap::new()).unwrap().1.is_empty());
    }
}
