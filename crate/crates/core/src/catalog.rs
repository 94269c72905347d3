//! The per-genus case lists for `3 ≤ g ≤ 8`, the trigonal and `g¹₄`
//! dimension formulas, and text pictures of models.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::admissible::AdmissibleSet;
use crate::error::Error;
use crate::index::{admissible_top, MultiIndex};
use crate::model::Model;
use crate::solver::{resolve, Resolution};

/// One listed case: which columns vanish and which do not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseDescriptor {
    pub genus: u32,
    pub label: String,
    /// Columns assumed nonzero.
    pub nonzero: Vec<MultiIndex>,
    /// Columns assumed zero; closure removes what they force.
    pub zero: Vec<MultiIndex>,
    /// Columns the list says must vanish as a consequence; checked, not assumed.
    pub implied_zero: Vec<MultiIndex>,
    pub expected_dimension: u64,
}

fn idx(v: &[&[u32]]) -> Vec<MultiIndex> {
    v.iter().map(|e| MultiIndex::of(e)).collect()
}

fn case(g: u32, label: &str, nonzero: &[&[u32]], zero: &[&[u32]], implied: &[&[u32]], dim: u64) -> CaseDescriptor {
    CaseDescriptor {
        genus: g,
        label: label.to_string(),
        nonzero: idx(nonzero),
        zero: idx(zero),
        implied_zero: idx(implied),
        expected_dimension: dim,
    }
}

/// The listed cases for genus `g`, in printed order.
pub fn cases(g: u32) -> Result<Vec<CaseDescriptor>, Error> {
    const O: &[u32] = &[1];
    const T: &[u32] = &[2];
    const H: &[u32] = &[3];
    const OO: &[u32] = &[1, 1];
    const TO: &[u32] = &[2, 1];
    const HO: &[u32] = &[3, 1];
    Ok(match g {
        3 => vec![case(3, "a", &[], &[O], &[], 4), case(3, "b", &[O], &[], &[], 5)],
        4 => vec![case(4, "a", &[], &[O], &[], 5), case(4, "b", &[O], &[], &[], 7)],
        5 => vec![
            case(5, "a", &[], &[O], &[T], 6),
            case(5, "b", &[O], &[T], &[], 9),
            case(5, "c", &[O, T], &[], &[], 11),
        ],
        6 => vec![
            case(6, "a", &[], &[O], &[T, OO], 7),
            case(6, "b", &[O], &[T, OO], &[], 11),
            case(6, "c", &[O, OO], &[T], &[], 12),
            case(6, "d", &[O, T], &[OO], &[], 14),
            case(6, "e", &[O, T, OO], &[], &[], 15),
        ],
        7 => vec![
            case(7, "a", &[], &[O], &[], 8),
            case(7, "b", &[O], &[T, OO], &[], 13),
            case(7, "c", &[O, OO], &[T], &[], 15),
            case(7, "d", &[O, T], &[H, OO], &[TO], 17),
            case(7, "e", &[O, T, OO], &[H], &[TO], 19),
            case(7, "f", &[O, T, H, OO], &[], &[TO], 22),
        ],
        8 => vec![
            case(8, "a", &[], &[O], &[TO], 9),
            case(8, "b", &[O], &[T, OO], &[], 15),
            case(8, "c", &[O, OO], &[T], &[], 18),
            case(8, "d", &[O, T], &[H, OO], &[TO], 20),
            case(8, "e", &[O, T, OO], &[H, TO], &[], 23),
            case(8, "f", &[O, T, OO, TO], &[H], &[], 25),
            case(8, "g", &[O, T, H, OO], &[TO, HO], &[], 27),
            case(8, "h", &[O, T, H, OO, TO], &[HO], &[], 29),
            case(8, "i", &[O, T, H, OO, TO, HO], &[], &[], 30),
        ],
        _ => return Err(Error::InvalidInput(format!("no case list for genus {g} (3 ≤ g ≤ 8)"))),
    })
}

/// Looks up one case by its letter.
pub fn case_by_label(g: u32, label: &str) -> Result<CaseDescriptor, Error> {
    cases(g)?
        .into_iter()
        .find(|c| c.label == label)
        .ok_or_else(|| Error::UnknownCase { genus: g, label: label.to_string() })
}

impl CaseDescriptor {
    /// The admissible set left after removing the zero columns. Rejects
    /// flag sets where a nonzero column is removed by closure.
    pub fn admissible(&self) -> Result<AdmissibleSet, Error> {
        let mut a = AdmissibleSet::maximal(self.genus, None)?;
        for z in &self.zero {
            if self.nonzero.contains(z) {
                return Err(Error::InvalidInput(format!("{z} is flagged both zero and nonzero")));
            }
            if a.contains(z) {
                a = a.without(z);
            }
        }
        for k in &self.nonzero {
            if !a.contains(k) {
                return Err(Error::InvalidInput(format!("{k} is flagged nonzero but its flags force it to vanish")));
            }
        }
        Ok(a)
    }

    /// Builds and solves the model, then checks implied zeros.
    pub fn resolve(&self) -> Result<Resolution, Error> {
        let r = resolve(&self.admissible()?, &self.nonzero)?;
        for k in &self.implied_zero {
            if r.model.is_basis_column(k) {
                return Err(Error::Inconsistent(format!(
                    "g={} case ({}): column {k} should vanish but survives",
                    self.genus, self.label
                )));
            }
        }
        Ok(r)
    }
}

/// A case together with its resolved model.
#[derive(Debug, Clone)]
pub struct ResolvedCase {
    pub descriptor: CaseDescriptor,
    pub resolution: Resolution,
}

impl ResolvedCase {
    pub fn model(&self) -> &Model {
        &self.resolution.model
    }

    pub fn dimension(&self) -> u64 {
        self.resolution.model.dimension()
    }
}

/// Resolves every case of genus `g`; fails on the first dimension that
/// differs from the listed value.
pub fn enumerate_cases(g: u32) -> Result<Vec<ResolvedCase>, Error> {
    let mut out = Vec::new();
    for descriptor in cases(g)? {
        let resolution = descriptor.resolve()?;
        let computed = resolution.model.dimension();
        if computed != descriptor.expected_dimension {
            return Err(Error::DimensionMismatch {
                genus: g,
                label: descriptor.label.clone(),
                expected: descriptor.expected_dimension,
                computed,
            });
        }
        out.push(ResolvedCase { descriptor, resolution });
    }
    Ok(out)
}

/// Every catalog model for `3 ≤ g ≤ 8`.
pub fn all_catalog_cases() -> Result<Vec<ResolvedCase>, Error> {
    let mut out = Vec::new();
    for g in 3..=8 {
        out.extend(enumerate_cases(g)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseJson {
    pub genus: u32,
    pub label: String,
    pub nonzero: Vec<MultiIndex>,
    pub zero: Vec<MultiIndex>,
    pub forced: Vec<String>,
    pub unknowns: BTreeMap<String, crate::scalar::Rational>,
    pub dimension: u64,
}

impl ResolvedCase {
    pub fn to_json(&self) -> CaseJson {
        CaseJson {
            genus: self.descriptor.genus,
            label: self.descriptor.label.clone(),
            nonzero: self.descriptor.nonzero.clone(),
            zero: self.descriptor.zero.clone(),
            forced: self.resolution.forced.iter().map(|f| f.to_string()).collect(),
            unknowns: self.resolution.values.iter().map(|(u, v)| (u.name(), v.clone())).collect(),
            dimension: self.dimension(),
        }
    }
}

/// Columns `{1^j}` for `j ≤ k`, the admissible set of a trigonal curve.
pub fn trigonal_admissible(g: u32, k: u32) -> Result<AdmissibleSet, Error> {
    if 3 * k > g {
        return Err(Error::InvalidInput(format!("trigonal family needs k ≤ g/3, got k={k}, g={g}")));
    }
    AdmissibleSet::new(g, Some(3), (0..=k).map(|j| MultiIndex::of(&vec![1; j as usize])))
}

/// `Σ_{j=0}^{k} (g+1−3j)`.
pub fn trigonal_dimension(g: u32, k: u32) -> Result<u64, Error> {
    if 3 * k > g {
        return Err(Error::InvalidInput(format!("trigonal family needs k ≤ g/3, got k={k}, g={g}")));
    }
    Ok((0..=k).map(|j| (g + 1 - 3 * j) as u64).sum())
}

/// Dimension of a model with no products, counted from its columns.
pub fn column_count_dimension(admissible: &AdmissibleSet) -> Result<u64, Error> {
    Ok(Model::<crate::scalar::Rational>::from_parts(
        admissible.clone(),
        BTreeMap::new(),
        BTreeMap::new(),
        BTreeMap::new(),
    )?
    .dimension())
}

/// Both values for a `g¹₄` pattern `k_0 ≥ k_1 ≥ …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Gonality4Dimension {
    /// `Σ_h (g − 4h − 3k_h)`.
    pub formula_value: i64,
    /// `Σ_h Σ_{k ≤ k_h} (g − 4h − 3k + 1)`.
    pub column_count: i64,
}

impl Gonality4Dimension {
    pub fn agrees(&self) -> bool {
        self.formula_value == self.column_count
    }
}

/// Columns `{2^h, 1^k}` for `k ≤ k_h`. An empty list means `[0]`.
pub fn gonality4_dimension(g: u32, k_list: &[u32]) -> Result<Gonality4Dimension, Error> {
    let ks: Vec<u32> = if k_list.is_empty() { vec![0] } else { k_list.to_vec() };
    if ks.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput("k list must be non-increasing".into()));
    }
    let g = g as i64;
    let mut formula_value = 0;
    let mut column_count = 0;
    for (h, &kh) in ks.iter().enumerate() {
        let (h, kh) = (h as i64, kh as i64);
        if 4 * h + 3 * kh > g {
            return Err(Error::InvalidInput(format!("4h + 3k_h ≤ g fails at h={h}: 4·{h} + 3·{kh} > {g}")));
        }
        formula_value += g - 4 * h - 3 * kh;
        column_count += (0..=kh).map(|k| g - 4 * h - 3 * k + 1).sum::<i64>();
    }
    Ok(Gonality4Dimension { formula_value, column_count })
}

/// The admissible set behind [`gonality4_dimension`], when it is one.
pub fn gonality4_admissible(g: u32, k_list: &[u32]) -> Result<AdmissibleSet, Error> {
    let ks: Vec<u32> = if k_list.is_empty() { vec![0] } else { k_list.to_vec() };
    let mut indexes = Vec::new();
    for (h, &kh) in ks.iter().enumerate() {
        for k in 0..=kh {
            let mut e = vec![2; h];
            e.extend(std::iter::repeat_n(1, k as usize));
            indexes.push(MultiIndex::of(&e));
        }
    }
    AdmissibleSet::new(g, Some(4), indexes)
}

fn cell_label(g: u32, index: &MultiIndex, m: u32) -> String {
    if !index.is_empty() {
        return crate::cycle::BasisKey::new(index.clone(), m).to_string();
    }
    match m {
        0 => "{o}".to_string(),
        m if m == g => "J(C)".to_string(),
        m if m + 1 == g => "Θ".to_string(),
        1 => "Γ".to_string(),
        m => format!("Γ^★{m}/{m}!"),
    }
}

/// One row per dimension from `g` down to `0`, one column per basis column.
pub fn render_picture(model: &Model) -> String {
    let g = model.genus();
    let columns = model.basis_columns();
    let mut grid: Vec<Vec<String>> = Vec::new();
    for dim in (0..=g).rev() {
        let mut row = vec![dim.to_string()];
        for c in &columns {
            let top = admissible_top(g, c);
            let cell = if dim >= c.d() && (dim - c.d()) as i64 <= top {
                cell_label(g, c, dim - c.d())
            } else {
                String::new()
            };
            row.push(cell);
        }
        grid.push(row);
    }
    let ncols = columns.len() + 1;
    let widths: Vec<usize> =
        (0..ncols).map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in &grid {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trigonal_examples() {
        assert_eq!(trigonal_dimension(6, 2).unwrap(), 12);
        assert_eq!(trigonal_dimension(9, 3).unwrap(), 22);
        assert_eq!(trigonal_dimension(11, 0).unwrap(), 12);
        assert!(trigonal_dimension(6, 3).is_err());
    }

    #[test]
    fn gonality4_examples() {
        let v = gonality4_dimension(8, &[2, 1]).unwrap();
        assert_eq!((v.formula_value, v.column_count), (3, 25));
        assert_eq!(gonality4_dimension(6, &[2]).unwrap().column_count, 12);
        assert_eq!(gonality4_dimension(9, &[]).unwrap().column_count, 10);
        assert!(gonality4_dimension(8, &[1, 2]).is_err());
        assert!(gonality4_dimension(8, &[3]).is_err());
    }

    #[test]
    fn inconsistent_flags_rejected() {
        let c = case(6, "x", &[&[2]], &[&[1]], &[], 0);
        assert!(c.admissible().is_err());
    }
}
