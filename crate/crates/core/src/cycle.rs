//! Bigraded cycles in the `λ_I^[m]` basis and the operators that do not
//! depend on a product table.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::index::{admissible_top, MultiIndex};
use crate::scalar::{binomial, Rational};

/// Coefficient ring for cycles: plain rationals, or affine expressions in
/// unknowns while a product table is being solved.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: Rational) -> Self;
    fn add_assign(&mut self, other: &Self);
    fn scale(&self, r: &Rational) -> Self;
    /// Product of two coefficients; fails when the result would be nonlinear.
    fn try_mul(&self, other: &Self) -> Result<Self, Error>;
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn try_mul(&self, other: &Self) -> Result<Self, Error> {
        Ok(self * other)
    }
}

/// The label `(I, m)` of the basis cycle `λ_I^[m]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BasisKey {
    pub index: MultiIndex,
    pub m: u32,
}

impl BasisKey {
    pub fn new(index: MultiIndex, m: u32) -> Self {
        BasisKey { index, m }
    }

    pub fn dimension(&self) -> u32 {
        self.index.d() + self.m
    }

    /// Beauville degree.
    pub fn degree(&self) -> u32 {
        self.index.s()
    }

    pub fn codimension(&self, g: u32) -> i64 {
        g as i64 - self.dimension() as i64
    }

    /// `0 <= m <= g - s - 2d`.
    pub fn is_valid(&self, g: u32) -> bool {
        (self.m as i64) <= admissible_top(g, &self.index)
    }

    fn sort_key(&self) -> (u32, u32, &MultiIndex, u32) {
        (self.dimension(), self.degree(), &self.index, self.m)
    }
}

impl Ord for BasisKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for BasisKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = if self.index.is_empty() {
            "∅".to_string()
        } else {
            let parts: Vec<String> = self.index.entries().iter().map(u32::to_string).collect();
            format!("{{{}}}", parts.join(","))
        };
        if self.m == 0 {
            write!(f, "λ_{idx}")
        } else {
            write!(f, "λ_{idx}^[{}]", self.m)
        }
    }
}

impl fmt::Debug for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Finite combination of valid basis keys with nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct Cycle<C = Rational> {
    genus: u32,
    terms: BTreeMap<BasisKey, C>,
}

impl<C: Coefficient> Cycle<C> {
    pub fn zero(genus: u32) -> Self {
        Cycle { genus, terms: BTreeMap::new() }
    }

    /// `λ_I^[m]`, or zero when `m` is out of range.
    pub fn basis(genus: u32, index: MultiIndex, m: i64) -> Self {
        let mut c = Cycle::zero(genus);
        if m >= 0 {
            c.add_term(BasisKey::new(index, m as u32), C::from_rational(Rational::one()));
        }
        c
    }

    pub fn from_terms(genus: u32, terms: impl IntoIterator<Item = (BasisKey, C)>) -> Self {
        let mut c = Cycle::zero(genus);
        for (k, v) in terms {
            c.add_term(k, v);
        }
        c
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &C)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &BasisKey> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &BasisKey) -> Option<&C> {
        self.terms.get(key)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Adds `coeff · key`; invalid keys and zero results are dropped.
    pub fn add_term(&mut self, key: BasisKey, coeff: C) {
        if coeff.is_zero() || !key.is_valid(self.genus) {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                v.add_assign(&coeff);
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Cycle<C>, factor: &Rational) {
        assert_eq!(self.genus, other.genus, "genus mismatch");
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.scale(factor));
        }
    }

    pub fn add(&self, other: &Cycle<C>) -> Cycle<C> {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &Cycle<C>) -> Cycle<C> {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, factor: &Rational) -> Cycle<C> {
        let mut out = Cycle::zero(self.genus);
        out.add_scaled(self, factor);
        out
    }

    pub fn neg(&self) -> Cycle<C> {
        self.scale(&-Rational::one())
    }

    /// Multiplies every coefficient by `c`.
    pub fn mul_coeff(&self, c: &C) -> Result<Cycle<C>, Error> {
        let mut out = Cycle::zero(self.genus);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), c.try_mul(v)?);
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> Cycle<D> {
        Cycle::from_terms(self.genus, self.terms.iter().map(|(k, v)| (k.clone(), f(v))))
    }

    /// Applies a key-wise linear map `λ_I^[m] ↦ factor · λ_I^[m']`.
    fn map_keys(&self, f: impl Fn(&BasisKey) -> Option<(BasisKey, Rational)>) -> Cycle<C> {
        let mut out = Cycle::zero(self.genus);
        for (k, v) in &self.terms {
            if let Some((k2, factor)) = f(k) {
                out.add_term(k2, v.scale(&factor));
            }
        }
        out
    }

    /// `λ_I^[m] ↦ (-1)^m λ_I^[g-s-2d-m]`.
    pub fn fourier(&self) -> Cycle<C> {
        let g = self.genus;
        self.map_keys(|k| {
            let top = admissible_top(g, &k.index);
            let m2 = top - k.m as i64;
            Some((BasisKey::new(k.index.clone(), m2 as u32), Rational::sign(k.m as i64)))
        })
    }

    /// Push-forward along multiplication by `n`: scales by `n^(2d+2m+s)`.
    pub fn mult_pushforward(&self, n: i64) -> Cycle<C> {
        self.map_keys(|k| {
            let e = 2 * k.index.d() + 2 * k.m + k.index.s();
            Some((k.clone(), Rational::int_pow(n, e)))
        })
    }

    /// Pull-back along multiplication by `n`: scales by `n^(2g-2d-2m-s)`.
    pub fn mult_pullback(&self, n: i64) -> Cycle<C> {
        let g = self.genus;
        self.map_keys(|k| {
            let e = 2 * g - 2 * k.index.d() - 2 * k.m - k.index.s();
            Some((k.clone(), Rational::int_pow(n, e)))
        })
    }

    /// Pontryagin product with `λ_∅^[k] = Γ^{★k}/k!`.
    pub fn star_gamma(&self, k: u32) -> Cycle<C> {
        self.map_keys(|key| {
            let m = key.m as i64;
            let factor = binomial(m + k as i64, m);
            Some((BasisKey::new(key.index.clone(), key.m + k), factor))
        })
    }

    /// Intersection with the divided power `Θ^h/h!`.
    pub fn dot_theta(&self, h: u32) -> Cycle<C> {
        let g = self.genus;
        self.map_keys(|key| {
            if key.m < h {
                return None;
            }
            let top = admissible_top(g, &key.index);
            let factor = binomial(top - key.m as i64 + h as i64, h as i64);
            Some((BasisKey::new(key.index.clone(), key.m - h), factor))
        })
    }

    /// Terms grouped by Beauville degree, in increasing degree.
    pub fn beauville_components(&self) -> Vec<(u32, Cycle<C>)> {
        let mut parts: BTreeMap<u32, Cycle<C>> = BTreeMap::new();
        for (k, v) in &self.terms {
            parts
                .entry(k.degree())
                .or_insert_with(|| Cycle::zero(self.genus))
                .terms
                .insert(k.clone(), v.clone());
        }
        parts.into_iter().collect()
    }

    /// `(dimension, degree)` when every term shares both; `None` for zero or
    /// mixed cycles.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let bd = (first.dimension(), first.degree());
        it.all(|k| (k.dimension(), k.degree()) == bd).then_some(bd)
    }
}

impl<C: Coefficient> fmt::Display for Cycle<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, v)| {
                let c = v.to_string();
                if c == "1" {
                    k.to_string()
                } else if c.contains(' ') {
                    format!("({c})·{k}")
                } else {
                    format!("{c}·{k}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Coefficient> fmt::Debug for Cycle<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle(g={}: {})", self.genus, self)
    }
}

/// `Θ^k/k! = λ_∅^[g-k]` for `0 <= k <= g`, zero otherwise.
pub fn theta_power(g: u32, k: i64) -> Cycle {
    if k < 0 || k > g as i64 {
        return Cycle::zero(g);
    }
    Cycle::basis(g, MultiIndex::empty(), g as i64 - k)
}

/// One term of the JSON cycle form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub index: MultiIndex,
    pub m: u32,
    pub coeff: Rational,
}

/// JSON cycle form `{"genus": g, "terms": [...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleJson {
    pub genus: u32,
    pub terms: Vec<TermJson>,
}

impl Cycle<Rational> {
    pub fn to_term_list(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(k, v)| TermJson { index: k.index.clone(), m: k.m, coeff: v.clone() })
            .collect()
    }

    /// Strict inverse of [`Cycle::to_term_list`]: rejects invalid keys,
    /// zero coefficients and repeated keys.
    pub fn from_term_list(genus: u32, terms: &[TermJson]) -> Result<Self, Error> {
        if genus == 0 {
            return Err(Error::InvalidGenus(0));
        }
        let mut out = Cycle::zero(genus);
        for t in terms {
            let key = BasisKey::new(t.index.clone(), t.m);
            if !key.is_valid(genus) {
                return Err(Error::InvalidKey { genus, key: key.to_string() });
            }
            if t.coeff.is_zero() {
                return Err(Error::InvalidInput(format!("zero coefficient on {key}")));
            }
            if out.terms.insert(key.clone(), t.coeff.clone()).is_some() {
                return Err(Error::InvalidInput(format!("repeated key {key}")));
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> CycleJson {
        CycleJson { genus: self.genus, terms: self.to_term_list() }
    }

    pub fn from_json(json: &CycleJson) -> Result<Self, Error> {
        Cycle::from_term_list(json.genus, &json.terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(g: u32, idx: &[u32], m: i64) -> Cycle {
        Cycle::basis(g, MultiIndex::of(idx), m)
    }

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn basis_range() {
        assert_eq!(lam(3, &[1], 0).len(), 1);
        assert!(lam(3, &[1], 1).is_zero());
        assert_eq!(lam(4, &[], 4).len(), 1);
        assert!(lam(4, &[], -1).is_zero());
    }

    #[test]
    fn theta_powers() {
        assert_eq!(theta_power(5, 0), lam(5, &[], 5));
        assert_eq!(theta_power(5, 5), lam(5, &[], 0));
        assert!(theta_power(5, 6).is_zero());
    }

    #[test]
    fn fourier_examples() {
        assert_eq!(lam(6, &[], 2).fourier(), lam(6, &[], 4));
        assert_eq!(lam(6, &[], 1).fourier(), lam(6, &[], 5).neg());
        assert_eq!(lam(6, &[1, 1], 0).fourier(), lam(6, &[1, 1], 0));
        assert_eq!(lam(7, &[2], 1).fourier(), lam(7, &[2], 2).neg());
    }

    #[test]
    fn multiplication_maps() {
        let c = lam(3, &[1], 0);
        assert_eq!(c.mult_pushforward(1), c);
        assert_eq!(lam(3, &[], 0).mult_pushforward(2), lam(3, &[], 0));
        assert_eq!(c.mult_pushforward(-1), c.neg());
        assert_eq!(c.mult_pullback(-1), c.neg());
        assert_eq!(c.mult_pullback(2), c.scale(&q(8)));
    }

    #[test]
    fn gamma_and_theta_actions() {
        assert_eq!(lam(6, &[1], 1).star_gamma(1), lam(6, &[1], 2).scale(&q(2)));
        assert!(lam(3, &[1], 0).star_gamma(1).is_zero());
        assert_eq!(lam(4, &[], 2).dot_theta(1), lam(4, &[], 1).scale(&q(3)));
        assert_eq!(lam(6, &[2], 1).dot_theta(1), lam(6, &[2], 0).scale(&q(2)));
        let c = lam(6, &[1], 2).add(&lam(6, &[2], 1));
        assert_eq!(c.dot_theta(0), c);
        assert_eq!(c.star_gamma(0), c);
    }

    #[test]
    fn components() {
        let c = lam(5, &[], 1).add(&lam(5, &[2], 0));
        let parts = c.beauville_components();
        assert_eq!(parts, vec![(0, lam(5, &[], 1)), (2, lam(5, &[2], 0))]);
        assert!(Cycle::<Rational>::zero(5).beauville_components().is_empty());
        let same = lam(5, &[1], 0).add(&lam(5, &[1], 1));
        assert_eq!(same.beauville_components(), vec![(1, same.clone())]);
    }

    #[test]
    fn json_terms_sorted_and_strict() {
        let c = lam(8, &[3, 1], 0).add(&lam(8, &[1], 1).scale(&Rational::new(-3, 2).unwrap()));
        let json = serde_json::to_string(&c.to_json()).unwrap();
        assert_eq!(
            json,
            r#"{"genus":8,"terms":[{"index":[1],"m":1,"coeff":"-3/2"},{"index":[3,1],"m":0,"coeff":"1"}]}"#
        );
        let bad = CycleJson {
            genus: 3,
            terms: vec![TermJson { index: MultiIndex::of(&[1]), m: 1, coeff: q(1) }],
        };
        assert!(matches!(Cycle::from_json(&bad), Err(Error::InvalidKey { .. })));
    }
}
