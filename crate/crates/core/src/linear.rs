//! Affine expressions in named unknowns, used as cycle coefficients while
//! a product table still has undetermined entries.

use std::collections::BTreeMap;
use std::fmt;

use crate::cycle::{BasisKey, Coefficient};
use crate::error::Error;
use crate::index::MultiIndex;
use crate::scalar::Rational;

/// Coefficient of `λ_K^[m]` in the basic product `λ_I ★ λ_J`.
/// The derived order is the fixed elimination order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Unknown {
    pub i: MultiIndex,
    pub j: MultiIndex,
    pub target: BasisKey,
}

impl Unknown {
    pub fn name(&self) -> String {
        format!("u_{{{},{},{},{}}}", self.i, self.j, self.target.index, self.target.m)
    }
}

impl fmt::Display for Unknown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for Unknown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// `constant + Σ coeff·unknown`, with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LinearExpression {
    constant: Rational,
    coeffs: BTreeMap<Unknown, Rational>,
}

impl LinearExpression {
    pub fn constant(c: Rational) -> Self {
        LinearExpression { constant: c, coeffs: BTreeMap::new() }
    }

    pub fn unknown(u: Unknown) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(u, Rational::one());
        LinearExpression { constant: Rational::zero(), coeffs }
    }

    pub fn constant_term(&self) -> &Rational {
        &self.constant
    }

    pub fn coefficients(&self) -> &BTreeMap<Unknown, Rational> {
        &self.coeffs
    }

    pub fn coefficient(&self, u: &Unknown) -> Rational {
        self.coeffs.get(u).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_constant(&self) -> Option<&Rational> {
        self.is_constant().then_some(&self.constant)
    }

    pub fn unknowns(&self) -> impl Iterator<Item = &Unknown> {
        self.coeffs.keys()
    }

    pub fn add_unknown(&mut self, u: &Unknown, c: &Rational) {
        let entry = self.coeffs.entry(u.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(u);
        }
    }

    pub fn add_expr(&mut self, other: &LinearExpression, factor: &Rational) {
        self.constant += &(&other.constant * factor);
        for (u, c) in &other.coeffs {
            self.add_unknown(u, &(c * factor));
        }
    }

    /// Replaces each unknown found in `values` by its expression.
    pub fn substitute(&self, values: &BTreeMap<Unknown, LinearExpression>) -> LinearExpression {
        let mut out = LinearExpression::constant(self.constant.clone());
        for (u, c) in &self.coeffs {
            match values.get(u) {
                Some(e) => out.add_expr(e, c),
                None => out.add_unknown(u, c),
            }
        }
        out
    }

    /// Value when every unknown is assigned; `None` if one is missing.
    pub fn evaluate(&self, values: &BTreeMap<Unknown, Rational>) -> Option<Rational> {
        let mut acc = self.constant.clone();
        for (u, c) in &self.coeffs {
            acc += &(c * values.get(u)?);
        }
        Some(acc)
    }
}

impl Coefficient for LinearExpression {
    fn zero() -> Self {
        LinearExpression::default()
    }
    fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.is_empty()
    }
    fn from_rational(r: Rational) -> Self {
        LinearExpression::constant(r)
    }
    fn add_assign(&mut self, other: &Self) {
        self.add_expr(other, &Rational::one());
    }
    fn scale(&self, r: &Rational) -> Self {
        let mut out = LinearExpression::zero();
        out.add_expr(self, r);
        out
    }
    fn try_mul(&self, other: &Self) -> Result<Self, Error> {
        match (self.as_constant(), other.as_constant()) {
            (Some(a), _) => Ok(other.scale(a)),
            (_, Some(b)) => Ok(self.scale(b)),
            _ => Err(Error::NonLinear),
        }
    }
}

impl fmt::Display for LinearExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.constant.is_zero() || self.coeffs.is_empty() {
            parts.push(self.constant.to_string());
        }
        for (u, c) in &self.coeffs {
            if c.is_one() {
                parts.push(u.name());
            } else {
                parts.push(format!("{c}·{}", u.name()));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for LinearExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
