//! Models: an admissible set plus a basic Pontryagin product table, which
//! together determine both products on the whole cycle space.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::admissible::AdmissibleSet;
use crate::cycle::{theta_power, BasisKey, Coefficient, Cycle, TermJson};
use crate::error::Error;
use crate::index::{admissible_top, MultiIndex};
use crate::scalar::{binomial, factorial, Rational};

/// Where a basic product entry came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Closed formula for two singleton columns.
    PairFormula,
    /// No valid target key exists, so the product vanishes.
    GradingZero,
    /// Only the union column `λ_{I∪J}` is available.
    LeadingTerm,
    /// Carries unknown coefficients that are not solved yet.
    Declared,
    /// Unknown coefficients fixed by the relation solver.
    Solved,
}

/// Ordered key for an unordered pair of non-empty indexes.
pub fn pair_key(i: &MultiIndex, j: &MultiIndex) -> (MultiIndex, MultiIndex) {
    if i <= j {
        (i.clone(), j.clone())
    } else {
        (j.clone(), i.clone())
    }
}

/// Linear relation expressing a column through others of the same `(d, s)`.
pub type ColumnRelation = Vec<(MultiIndex, Rational)>;

#[derive(Clone, Debug, PartialEq)]
pub struct Model<C: Coefficient = Rational> {
    admissible: AdmissibleSet,
    relations: BTreeMap<MultiIndex, ColumnRelation>,
    products: BTreeMap<(MultiIndex, MultiIndex), Cycle<C>>,
    provenance: BTreeMap<(MultiIndex, MultiIndex), Source>,
}

impl<C: Coefficient> Model<C> {
    /// Assembles a model, validating column relations and the bidegree of
    /// every basic product entry.
    pub fn from_parts(
        admissible: AdmissibleSet,
        relations: BTreeMap<MultiIndex, ColumnRelation>,
        products: BTreeMap<(MultiIndex, MultiIndex), Cycle<C>>,
        provenance: BTreeMap<(MultiIndex, MultiIndex), Source>,
    ) -> Result<Self, Error> {
        let g = admissible.genus();
        for (idx, rel) in &relations {
            if idx.is_empty() || !admissible.contains(idx) {
                return Err(Error::InvalidInput(format!("relation for non-member column {idx}")));
            }
            for (t, c) in rel {
                if !admissible.contains(t) || relations.contains_key(t) || c.is_zero() {
                    return Err(Error::InvalidInput(format!("relation {idx} → {t} targets a non-basis column")));
                }
                if t.degree_stats() != idx.degree_stats() {
                    return Err(Error::InvalidInput(format!("relation {idx} → {t} mixes bidegrees")));
                }
            }
        }
        let mut model = Model { admissible, relations, products: BTreeMap::new(), provenance };
        for ((i, j), value) in products {
            if value.genus() != g {
                return Err(Error::GenusMismatch(value.genus(), g));
            }
            for idx in [&i, &j] {
                if idx.is_empty() || !model.is_basis_column(idx) {
                    return Err(Error::InvalidInput(format!("basic product factor {idx} is not a basis column")));
                }
            }
            let (d, s) = (i.d() + j.d(), i.s() + j.s());
            for key in value.keys() {
                if key.dimension() != d || key.degree() != s {
                    return Err(Error::InvalidInput(format!(
                        "entry {i}★{j} has term {key} outside bidegree ({d}, {s})"
                    )));
                }
                if !model.is_basis_column(&key.index) {
                    return Err(Error::InvalidInput(format!("entry {i}★{j} uses non-basis column {key}")));
                }
            }
            if !value.is_zero() {
                model.products.insert(pair_key(&i, &j), value);
            }
        }
        Ok(model)
    }

    pub fn genus(&self) -> u32 {
        self.admissible.genus()
    }

    pub fn admissible(&self) -> &AdmissibleSet {
        &self.admissible
    }

    pub fn relations(&self) -> &BTreeMap<MultiIndex, ColumnRelation> {
        &self.relations
    }

    pub fn provenance(&self) -> &BTreeMap<(MultiIndex, MultiIndex), Source> {
        &self.provenance
    }

    pub fn stored_products(&self) -> &BTreeMap<(MultiIndex, MultiIndex), Cycle<C>> {
        &self.products
    }

    /// Member of `A` that is not rewritten through a column relation.
    pub fn is_basis_column(&self, index: &MultiIndex) -> bool {
        self.admissible.contains(index) && !self.relations.contains_key(index)
    }

    /// Basis columns in display order.
    pub fn basis_columns(&self) -> Vec<MultiIndex> {
        self.admissible
            .display_order()
            .into_iter()
            .filter(|i| !self.relations.contains_key(i))
            .collect()
    }

    /// Every valid basis key `λ_I^[m]` of the model, in canonical order.
    pub fn basis_keys(&self) -> Vec<BasisKey> {
        let mut keys: Vec<BasisKey> = self
            .basis_columns()
            .into_iter()
            .flat_map(|i| {
                let top = admissible_top(self.genus(), &i);
                (0..=top.max(-1)).map(move |m| BasisKey::new(i.clone(), m as u32))
            })
            .collect();
        keys.sort();
        keys
    }

    /// Sum of column heights over basis columns.
    pub fn dimension(&self) -> u64 {
        self.basis_columns()
            .iter()
            .map(|i| (admissible_top(self.genus(), i) + 1).max(0) as u64)
            .sum()
    }

    /// Drops non-member columns and rewrites related columns.
    pub fn normalize(&self, c: &Cycle<C>) -> Cycle<C> {
        let mut out = Cycle::zero(c.genus());
        for (k, v) in c.terms() {
            if !self.admissible.contains(&k.index) {
                continue;
            }
            match self.relations.get(&k.index) {
                None => out.add_term(k.clone(), v.clone()),
                Some(rel) => {
                    for (t, r) in rel {
                        out.add_term(BasisKey::new(t.clone(), k.m), v.scale(r));
                    }
                }
            }
        }
        out
    }

    /// `λ_I^[m]` in this model: zero outside `A` or out of range.
    pub fn make_basis(&self, index: &MultiIndex, m: i64) -> Cycle<C> {
        self.normalize(&Cycle::basis(self.genus(), index.clone(), m))
    }

    /// `λ_I ★ λ_J` for basis columns, with `λ_∅` acting as the unit.
    pub fn basic(&self, i: &MultiIndex, j: &MultiIndex) -> Cycle<C> {
        if i.is_empty() {
            return self.make_basis(j, 0);
        }
        if j.is_empty() {
            return self.make_basis(i, 0);
        }
        self.products.get(&pair_key(i, j)).cloned().unwrap_or_else(|| Cycle::zero(self.genus()))
    }

    /// Pontryagin product, extended bilinearly from
    /// `λ_I^[m] ★ λ_J^[h] = C(m+h, m) · Γ-shift_{m+h}(λ_I ★ λ_J)`.
    pub fn pontryagin(&self, x: &Cycle<C>, y: &Cycle<C>) -> Result<Cycle<C>, Error> {
        self.check_genus(x)?;
        self.check_genus(y)?;
        let mut out = Cycle::zero(self.genus());
        for (kx, a) in x.terms() {
            for (ky, b) in y.terms() {
                let ab = a.try_mul(b)?;
                let shift = kx.m + ky.m;
                let factor = binomial(shift as i64, kx.m as i64);
                let term = self.basic(&kx.index, &ky.index).star_gamma(shift).mul_coeff(&ab)?;
                out.add_scaled(&term, &factor);
            }
        }
        Ok(self.normalize(&out))
    }

    /// Intersection product, defined through Fourier duality:
    /// `x • y = (-1)^{s(x)+s(y)} F(F(x) ★ F(y))` on pure degrees.
    pub fn intersect(&self, x: &Cycle<C>, y: &Cycle<C>) -> Result<Cycle<C>, Error> {
        self.check_genus(x)?;
        self.check_genus(y)?;
        let mut out = Cycle::zero(self.genus());
        for (sx, xs) in x.beauville_components() {
            for (sy, ys) in y.beauville_components() {
                let p = self.pontryagin(&xs.fourier(), &ys.fourier())?.fourier();
                out.add_scaled(&p, &Rational::sign((sx + sy) as i64));
            }
        }
        Ok(out)
    }

    fn check_genus(&self, c: &Cycle<C>) -> Result<(), Error> {
        if c.genus() != self.genus() {
            return Err(Error::GenusMismatch(c.genus(), self.genus()));
        }
        Ok(())
    }
}

/// One failing triple of an associativity check.
#[derive(Debug, Clone, PartialEq)]
pub struct AssociativityFailure {
    pub triple: [MultiIndex; 3],
    pub left: Cycle,
    pub right: Cycle,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AssociativityReport {
    pub triples_checked: usize,
    pub failures: Vec<AssociativityFailure>,
}

impl AssociativityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Model<Rational> {
    /// Infallible Pontryagin product for concrete models.
    pub fn star(&self, x: &Cycle, y: &Cycle) -> Cycle {
        self.pontryagin(x, y).expect("genus-matched rational product")
    }

    /// Infallible intersection product for concrete models.
    pub fn dot(&self, x: &Cycle, y: &Cycle) -> Cycle {
        self.intersect(x, y).expect("genus-matched rational product")
    }

    /// `Ω_{k;t}(W)` for `W` pure of dimension `d` and degree `s`:
    /// `Σ_{j=0}^{d} (-1)^{k+t+j} [(W • Θ^j/j!) ★ Θ^e/e!] • Θ^t/t!`
    /// with `e = s+2d-j-t-k`.
    pub fn omega(&self, w: &Cycle, k: i64, t: i64) -> Result<Cycle, Error> {
        self.check_genus(w)?;
        if w.is_zero() {
            return Ok(Cycle::zero(self.genus()));
        }
        let (d, s) = w.bidegree().ok_or(Error::NotHomogeneous)?;
        let g = self.genus();
        let mut out = Cycle::zero(g);
        if t < 0 || t > g as i64 {
            return Ok(out);
        }
        for j in 0..=d as i64 {
            let e = s as i64 + 2 * d as i64 - j - t - k;
            if e < 0 || e > g as i64 {
                continue;
            }
            let inner = self.dot(w, &theta_power(g, j));
            let term = self.dot(&self.star(&inner, &theta_power(g, e)), &theta_power(g, t));
            out.add_scaled(&term, &Rational::sign(k + t + j));
        }
        Ok(out)
    }

    /// `ρ_h(c) = (c • Θ^h) ★ Γ^{★h}` with undivided powers.
    pub fn rho(&self, h: u32, c: &Cycle) -> Cycle {
        let g = self.genus();
        let hf = Rational::from_int(factorial(h as i64));
        let theta_h = theta_power(g, h as i64).scale(&hf);
        let gamma_h = Cycle::basis(g, MultiIndex::empty(), h as i64).scale(&hf);
        self.star(&self.dot(c, &theta_h), &gamma_h)
    }

    /// Checks `(λ_I ★ λ_J) ★ λ_K = λ_I ★ (λ_J ★ λ_K)` over all ordered
    /// triples of non-empty basis columns.
    pub fn check_associativity(&self) -> AssociativityReport {
        let cols: Vec<MultiIndex> = self.basis_columns().into_iter().filter(|i| !i.is_empty()).collect();
        let mut failures = Vec::new();
        let mut checked = 0;
        for i in &cols {
            for j in &cols {
                for k in &cols {
                    checked += 1;
                    let (li, lj, lk) = (self.make_basis(i, 0), self.make_basis(j, 0), self.make_basis(k, 0));
                    let left = self.star(&self.star(&li, &lj), &lk);
                    let right = self.star(&li, &self.star(&lj, &lk));
                    if left != right {
                        failures.push(AssociativityFailure { triple: [i.clone(), j.clone(), k.clone()], left, right });
                    }
                }
            }
        }
        AssociativityReport { triples_checked: checked, failures }
    }

    /// Replaces one basic product without any validation. Intended for
    /// fault-injection tests of the checkers.
    pub fn replace_basic_product_unchecked(&mut self, i: &MultiIndex, j: &MultiIndex, value: Cycle) {
        let key = pair_key(i, j);
        if value.is_zero() {
            self.products.remove(&key);
        } else {
            self.products.insert(key, value);
        }
    }

    pub fn to_json(&self) -> ModelJson {
        ModelJson {
            genus: self.genus(),
            gonality: self.admissible.gonality(),
            admissible: self.admissible.iter().cloned().collect(),
            column_relations: self
                .relations
                .iter()
                .map(|(index, rel)| RelationJson {
                    index: index.clone(),
                    value: rel.iter().map(|(t, c)| RelationTermJson { index: t.clone(), coeff: c.clone() }).collect(),
                })
                .collect(),
            basic_products: self
                .products
                .iter()
                .map(|((i, j), v)| ProductJson { i: i.clone(), j: j.clone(), value: v.to_term_list() })
                .collect(),
            provenance: ProvenanceJson {
                basic_products: self
                    .provenance
                    .iter()
                    .map(|((i, j), s)| ProvenanceEntryJson { i: i.clone(), j: j.clone(), source: *s })
                    .collect(),
            },
        }
    }

    pub fn from_json(json: &ModelJson) -> Result<Self, Error> {
        let admissible = AdmissibleSet::new(json.genus, json.gonality, json.admissible.iter().cloned())?;
        let mut relations = BTreeMap::new();
        for r in &json.column_relations {
            let rel: ColumnRelation = r.value.iter().map(|t| (t.index.clone(), t.coeff.clone())).collect();
            if relations.insert(r.index.clone(), rel).is_some() {
                return Err(Error::InvalidInput(format!("repeated relation for {}", r.index)));
            }
        }
        let mut products = BTreeMap::new();
        for p in &json.basic_products {
            let value = Cycle::from_term_list(json.genus, &p.value)?;
            if products.insert(pair_key(&p.i, &p.j), value).is_some() {
                return Err(Error::InvalidInput(format!("repeated basic product {}★{}", p.i, p.j)));
            }
        }
        let provenance = json
            .provenance
            .basic_products
            .iter()
            .map(|e| (pair_key(&e.i, &e.j), e.source))
            .collect();
        Model::from_parts(admissible, relations, products, provenance)
    }

    /// Lifts to linear-expression coefficients (all constant).
    pub fn to_symbolic(&self) -> Model<crate::linear::LinearExpression> {
        Model {
            admissible: self.admissible.clone(),
            relations: self.relations.clone(),
            products: self
                .products
                .iter()
                .map(|(k, v)| (k.clone(), v.map_coeffs(|c| crate::linear::LinearExpression::constant(c.clone()))))
                .collect(),
            provenance: self.provenance.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationTermJson {
    pub index: MultiIndex,
    pub coeff: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationJson {
    pub index: MultiIndex,
    pub value: Vec<RelationTermJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductJson {
    pub i: MultiIndex,
    pub j: MultiIndex,
    pub value: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProvenanceEntryJson {
    pub i: MultiIndex,
    pub j: MultiIndex,
    pub source: Source,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProvenanceJson {
    pub basic_products: Vec<ProvenanceEntryJson>,
}

/// Persistent model form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelJson {
    pub genus: u32,
    pub gonality: Option<u32>,
    pub admissible: Vec<MultiIndex>,
    pub column_relations: Vec<RelationJson>,
    pub basic_products: Vec<ProductJson>,
    pub provenance: ProvenanceJson,
}
