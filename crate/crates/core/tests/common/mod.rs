#![allow(dead_code)]

use std::path::PathBuf;

use serde_json::json;
use tautring::catalog::case_by_label;
use tautring::json::{product_table, to_canonical, Product};
use tautring::{admissible_top, binomial, Cycle, Model, MultiIndex, Rational};

pub const G6_CASES: [&str; 3] = ["c", "d", "e"];

pub fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/g6_products.json")
}

pub fn g6_model(label: &str) -> Model {
    case_by_label(6, label).unwrap().resolve().unwrap().model
}

/// Star and dot tables for the three g=6 cases with a nonzero `λ_{1}`
/// square, in canonical form.
pub fn g6_golden_text() -> String {
    let cases: Vec<_> = G6_CASES
        .iter()
        .map(|l| {
            let m = g6_model(l);
            json!({
                "case": l,
                "star": product_table(&m, Product::Star, false),
                "dot": product_table(&m, Product::Dot, false),
            })
        })
        .collect();
    to_canonical(&json!({ "genus": 6, "cases": cases })).unwrap()
}

fn lam(idx: &[u32], m: i64) -> Cycle {
    Cycle::basis(6, MultiIndex::of(idx), m)
}

fn q(n: i64) -> Rational {
    Rational::from(n)
}

/// The printed g=6 products, checked one by one. The second intersection
/// product is printed with a stray `[2]`; the dimension count forces `λ_{2}`.
pub fn g6_printed_mismatches() -> Vec<String> {
    let mut bad = Vec::new();
    let mut expect = |label: &str, what: &str, got: Cycle, want: Cycle| {
        if got != want {
            bad.push(format!("({label}) {what}: got {got}, want {want}"));
        }
    };
    for label in G6_CASES {
        let m = g6_model(label);
        let (l2, l11) = (label != "c", label != "d");
        let on = |b: bool, c: Cycle| if b { c } else { Cycle::zero(6) };

        let sq = on(l2, lam(&[2], 1).scale(&q(-3))).add(&on(l11, lam(&[1, 1], 0)));
        expect(label, "λ1★λ1", m.star(&lam(&[1], 0), &lam(&[1], 0)), sq);
        expect(label, "λ1^[1]★λ1", m.star(&lam(&[1], 1), &lam(&[1], 0)), on(l2, lam(&[2], 2).scale(&q(-6))));

        let dsq = on(l2, lam(&[2], 1).scale(&q(3))).add(&on(l11, lam(&[1, 1], 0)));
        expect(label, "λ1^[3]•λ1^[3]", m.dot(&lam(&[1], 3), &lam(&[1], 3)), dsq);
        expect(label, "λ1^[3]•λ1^[2]", m.dot(&lam(&[1], 3), &lam(&[1], 2)), on(l2, lam(&[2], 0).scale(&q(6))));

        for key in m.basis_keys() {
            let idx: Vec<u32> = key.index.entries().to_vec();
            let top = admissible_top(6, &key.index);
            let h = key.m as i64;
            for a in 0..=6i64 {
                let want = lam(&idx, a + h).scale(&binomial(a + h, a));
                expect(label, &format!("λ∅^[{a}]★{key}"), m.star(&lam(&[], a), &lam(&idx, h)), want);
                let want = lam(&idx, h - a).scale(&binomial(top - h + a, a));
                expect(label, &format!("λ∅^[{}]•{key}", 6 - a), m.dot(&lam(&[], 6 - a), &lam(&idx, h)), want);
            }
        }
    }
    bad
}
