//! Canonical JSON output and product tables.

use serde::{Deserialize, Serialize};

use crate::cycle::{BasisKey, Cycle, TermJson};
use crate::error::Error;
use crate::index::MultiIndex;
use crate::model::Model;

/// Pretty JSON with object keys sorted, newline-terminated.
pub fn to_canonical<T: Serialize>(value: &T) -> Result<String, Error> {
    let v = serde_json::to_value(value)?;
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Product {
    Star,
    Dot,
}

impl std::str::FromStr for Product {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "star" => Ok(Product::Star),
            "dot" => Ok(Product::Dot),
            _ => Err(Error::InvalidInput(format!("unknown product `{s}` (star|dot)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KeyJson {
    pub index: MultiIndex,
    pub m: u32,
}

impl From<&BasisKey> for KeyJson {
    fn from(k: &BasisKey) -> Self {
        KeyJson { index: k.index.clone(), m: k.m }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntryJson {
    pub left: KeyJson,
    pub right: KeyJson,
    pub value: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductTableJson {
    pub genus: u32,
    pub product: Product,
    pub entries: Vec<ProductEntryJson>,
}

/// Every nonzero product `x·y` with `x ≤ y` over basis keys. With
/// `basis_only`, only the generators `λ_I` (for `★`) or their Fourier
/// duals (for `•`) are paired.
pub fn product_table(model: &Model, product: Product, basis_only: bool) -> ProductTableJson {
    let g = model.genus();
    let keys: Vec<BasisKey> = model
        .basis_keys()
        .into_iter()
        .filter(|k| {
            !basis_only || {
                let top = crate::index::admissible_top(g, &k.index) as u32;
                match product {
                    Product::Star => k.m == 0,
                    Product::Dot => k.m == top,
                }
            }
        })
        .collect();
    let mut entries = Vec::new();
    for (a, x) in keys.iter().enumerate() {
        for y in &keys[a..] {
            let cx = Cycle::basis(g, x.index.clone(), x.m as i64);
            let cy = Cycle::basis(g, y.index.clone(), y.m as i64);
            let v = match product {
                Product::Star => model.star(&cx, &cy),
                Product::Dot => model.dot(&cx, &cy),
            };
            if !v.is_zero() {
                entries.push(ProductEntryJson { left: x.into(), right: y.into(), value: v.to_term_list() });
            }
        }
    }
    ProductTableJson { genus: g, product, entries }
}
