//! Brute-force coefficient sums, used as independent checks on the closed
//! forms that the builder and solver rely on.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::scalar::{binomial, factorial, Rational};

/// `[s; n] = (−1)^{s+n} C(s+2, n) / (s+2)!`.
pub fn bracket(s: u32, n: i64) -> Rational {
    let s = s as i64;
    if n < 0 || n > s + 2 {
        return Rational::zero();
    }
    let b = binomial(s + 2, n) / &Rational::from_int(factorial(s + 2));
    &Rational::sign(s + n) * &b
}

fn pow(base: i64, exp: u32) -> Rational {
    Rational::int_pow(base, exp)
}

/// `ξ_{i,j}^[t]`: coefficient of `C_(t)` in `(C_(i) ★ C_(j)) • Θ`.
pub fn xi_pair(g: u32, i: u32, j: u32, t: u32) -> Rational {
    let g = g as i64;
    let mut acc = Rational::zero();
    for m in 1..=(i as i64 + 2) {
        for n in 1..=(j as i64 + 2) {
            let w = &bracket(i, m) * &bracket(j, n);
            let mut inner = &Rational::from(m * m * g + m * n) * &pow(n, t + 2);
            inner += &(&Rational::from(n * n * g + m * n) * &pow(m, t + 2));
            inner -= &(&Rational::from(m * n) * &pow(m + n, t + 2));
            acc += &(&w * &inner);
        }
    }
    acc
}

/// The piecewise closed form of `ξ_{i,j}^[i+j]`.
pub fn xi_pair_closed_form(g: u32, i: u32, j: u32) -> Rational {
    let g = g as i64;
    match (i, j) {
        (0, 0) => Rational::from(2 * g - 2),
        (0, j) => Rational::from(g - j as i64 - 2),
        (i, 0) => Rational::from(g - i as i64 - 2),
        (i, j) => -binomial((i + j + 2) as i64, (i + 1) as i64),
    }
}

/// Coefficients `ξ_{h,i,j}^[r,t]` of `C_(r) ★ C_(t)` in
/// `(C_(h) ★ C_(i) ★ C_(j)) • Θ`, keyed by `(r, t)` with `r ≥ t` and
/// `r + t ≤ h+i+j`. Zero entries are omitted.
pub fn xi_triple(g: u32, h: u32, i: u32, j: u32) -> BTreeMap<(u32, u32), Rational> {
    let gi = g as i64;
    let top = h + i + j;
    let mut out: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
    for l in 1..=(h as i64 + 2) {
        for m in 1..=(i as i64 + 2) {
            for n in 1..=(j as i64 + 2) {
                let w = &(&bracket(h, l) * &bracket(i, m)) * &bracket(j, n);
                let terms = [
                    (n * n * gi + n * l + n * m, l, m),
                    (l * l * gi + l * m + l * n, m, n),
                    (m * m * gi + m * n + m * l, n, l),
                    (-l * m, l + m, n),
                    (-m * n, m + n, l),
                    (-n * l, n + l, m),
                ];
                for (c, a, b) in terms {
                    let wc = &w * &Rational::from(c);
                    for r in 0..=top {
                        for t in 0..=(top - r) {
                            let v = &(&wc * &pow(a, r + 2)) * &pow(b, t + 2);
                            let entry = out.entry((r.max(t), r.min(t))).or_insert_with(Rational::zero);
                            *entry += &v;
                        }
                    }
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// The three-term prediction on the top stratum, with colliding pairs
/// summed.
pub fn xi_triple_expected(h: u32, i: u32, j: u32) -> BTreeMap<(u32, u32), Rational> {
    let mut out: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
    for (x, y, z) in [(h, i, j), (i, j, h), (j, h, i)] {
        let key = (x.max(y + z), x.min(y + z));
        let c = -binomial((y + z + 2) as i64, (y + 1) as i64);
        *out.entry(key).or_insert_with(Rational::zero) += &c;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Entries where the brute-force table differs from the three-term
/// prediction, including any nonzero entry below the top stratum.
pub fn xi_triple_flagged(g: u32, h: u32, i: u32, j: u32) -> Vec<(u32, u32)> {
    let table = xi_triple(g, h, i, j);
    let expected = xi_triple_expected(h, i, j);
    let mut keys: Vec<(u32, u32)> = table.keys().chain(expected.keys()).cloned().collect();
    keys.sort();
    keys.dedup();
    keys.into_iter().filter(|k| table.get(k) != expected.get(k)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairTableJson {
    pub g: u32,
    pub i: u32,
    pub j: u32,
    pub xi: BTreeMap<String, Rational>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TripleTableJson {
    pub g: u32,
    pub h: u32,
    pub i: u32,
    pub j: u32,
    pub xi: BTreeMap<String, Rational>,
    pub flagged: Vec<String>,
}

/// `ξ_{i,j}^[t]` for `0 ≤ t ≤ i+j`.
pub fn pair_table(g: u32, i: u32, j: u32) -> PairTableJson {
    let xi = (0..=i + j).map(|t| (t.to_string(), xi_pair(g, i, j, t))).collect();
    PairTableJson { g, i, j, xi }
}

pub fn triple_table(g: u32, h: u32, i: u32, j: u32) -> TripleTableJson {
    let xi = xi_triple(g, h, i, j).into_iter().map(|((r, t), v)| (format!("{r},{t}"), v)).collect();
    let flagged = xi_triple_flagged(g, h, i, j).into_iter().map(|(r, t)| format!("{r},{t}")).collect();
    TripleTableJson { g, h, i, j, xi, flagged }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_values() {
        assert_eq!(bracket(0, 1), Rational::from(-1));
        assert_eq!(bracket(0, 2), Rational::new(1, 2).unwrap());
        assert!(bracket(1, 4).is_zero());
        assert!(bracket(1, -1).is_zero());
    }

    #[test]
    fn pair_small_values() {
        assert_eq!(xi_pair(7, 0, 0, 0), Rational::from(12));
        assert_eq!(xi_pair(7, 1, 1, 2), Rational::from(-6));
        assert_eq!(xi_pair(9, 0, 3, 3), Rational::from(4));
        assert!(xi_pair(9, 2, 3, 4).is_zero());
    }

    #[test]
    fn triple_known_instances() {
        let t = xi_triple(10, 1, 1, 1);
        assert_eq!(t.len(), 1);
        assert_eq!(t[&(2, 1)], Rational::from(-18));
        let t = xi_triple(11, 2, 1, 1);
        assert_eq!(t.len(), 2);
        assert_eq!(t[&(2, 2)], Rational::from(-6));
        assert_eq!(t[&(3, 1)], Rational::from(-20));
        assert!(xi_triple_flagged(12, 2, 1, 1).is_empty());
    }
}
