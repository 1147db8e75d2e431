//! Validated character tables of finite groups.
//!
//! A table is rejected at construction unless it passes the exact axioms:
//! class sizes sum to the group order, row orthogonality `⟨χ_i, χ_j⟩ = δ_ij`
//! holds in cyclotomic arithmetic with no tolerance, degrees are positive
//! rational integers, and `Σ d² = |G|`. Inner products accumulate
//! `(class size)·value·conjugate(value)` exactly and divide by `|G|` at the
//! end; floating point never appears.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::cyclotomic::{Cyclotomic, CyclotomicError};

#[derive(Error, Debug)]
pub enum TableError {
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("size mismatch: class sizes sum to {got} but the group order is {order}")]
    ClassSizeSum { got: BigUint, order: BigUint },
    #[error("size mismatch: {rows} characters against {classes} classes")]
    NotSquare { rows: usize, classes: usize },
    #[error("row orthogonality fails: ⟨χ_{i}, χ_{j}⟩ = {value} ≠ {expected}")]
    Orthogonality {
        i: usize,
        j: usize,
        value: String,
        expected: u8,
    },
    #[error("character {row} has non-positive-integer degree {value}")]
    BadDegree { row: usize, value: String },
    #[error("degree column squares to {got}, expected the group order {order}")]
    DegreeSum { got: BigUint, order: BigUint },
    #[error("inner product is not rational: {0}")]
    IrrationalInnerProduct(String),
    #[error("inner product is not integral: ⟨·,·⟩ = {0}")]
    NonIntegralInnerProduct(String),
    #[error(transparent)]
    Cyclotomic(#[from] CyclotomicError),
    #[error("json: {0}")]
    Json(String),
    #[error("character index {index} out of range ({count} irreducibles)")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("combo refers to a different table ({got} vs {expected})")]
    TableMismatch { got: String, expected: String },
    #[error("operation requires a nontrivial character")]
    TrivialCharacter,
    #[error("{0}")]
    InvalidParameter(String),
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub size: BigUint,
    pub label: String,
}

/// An exact character table: conjugacy classes across, irreducible
/// characters down, values in cyclotomic fields. Immutable once validated.
#[derive(Debug)]
pub struct CharacterTable {
    group_name: String,
    order: BigUint,
    classes: Vec<ConjugacyClass>,
    rows: Vec<Vec<Cyclotomic>>,
    degrees: Vec<BigUint>,
    trivial_index: Option<usize>,
    // caches for the integer fast path of inner products
    sizes_rational: Vec<BigRational>,
    sizes_u64: Option<Vec<u64>>,
    compiled_rows: OnceLock<Vec<Option<CompiledValues>>>,
}

impl Clone for CharacterTable {
    fn clone(&self) -> Self {
        CharacterTable {
            group_name: self.group_name.clone(),
            order: self.order.clone(),
            classes: self.classes.clone(),
            rows: self.rows.clone(),
            degrees: self.degrees.clone(),
            trivial_index: self.trivial_index,
            sizes_rational: self.sizes_rational.clone(),
            sizes_u64: self.sizes_u64.clone(),
            compiled_rows: OnceLock::new(),
        }
    }
}

/// A class-function value vector in integer form: per class a list of
/// `(exponent, scaled numerator)` over a common conductor and denominator.
/// Only values with small conductors and coefficients compile; everything
/// else takes the generic cyclotomic path.
#[derive(Clone, Debug)]
pub(crate) struct CompiledValues {
    conductor: u64,
    denominator: u64,
    classes: Vec<Vec<(u64, i64)>>,
}

const FAST_CONDUCTOR_LIMIT: u64 = 1 << 16;

pub(crate) fn compile_values(values: &[Cyclotomic]) -> Option<CompiledValues> {
    let mut conductor: u64 = 1;
    let mut denominator: u64 = 1;
    for v in values {
        conductor = conductor.lcm(&v.conductor());
        if conductor > FAST_CONDUCTOR_LIMIT {
            return None;
        }
        for c in v.raw_terms().values() {
            let d = c.denom().to_u64()?;
            denominator = denominator.lcm(&d);
            if denominator > 1 << 16 {
                return None;
            }
        }
    }
    let mut classes = Vec::with_capacity(values.len());
    for v in values {
        let f = conductor / v.conductor();
        let mut terms = Vec::with_capacity(v.raw_terms().len());
        for (e, c) in v.raw_terms() {
            let num = c.numer().to_i64()?;
            let d = c.denom().to_u64().expect("checked above");
            let scaled = num.checked_mul((denominator / d) as i64)?;
            terms.push((e * f % conductor, scaled));
        }
        classes.push(terms);
    }
    Some(CompiledValues {
        conductor,
        denominator,
        classes,
    })
}

impl CharacterTable {
    /// Validates and freezes a table. The first class must be the identity
    /// (size 1); degrees are read from its column.
    pub fn new(
        group_name: String,
        order: BigUint,
        classes: Vec<ConjugacyClass>,
        rows: Vec<Vec<Cyclotomic>>,
    ) -> Result<Self, TableError> {
        if classes.is_empty() {
            return Err(TableError::Schema("empty classes list".into()));
        }
        if order.is_zero() {
            return Err(TableError::Schema("group order must be positive".into()));
        }
        if rows.len() != classes.len() {
            return Err(TableError::NotSquare {
                rows: rows.len(),
                classes: classes.len(),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != classes.len() {
                return Err(TableError::Schema(format!(
                    "character {i} has {} values for {} classes",
                    row.len(),
                    classes.len()
                )));
            }
        }
        if !classes[0].size.is_one() {
            return Err(TableError::Schema(
                "first class must be the identity (size 1)".into(),
            ));
        }
        let size_sum: BigUint = classes.iter().map(|c| c.size.clone()).sum();
        if size_sum != order {
            return Err(TableError::ClassSizeSum {
                got: size_sum,
                order,
            });
        }

        // degrees: positive rational integers in the identity column
        let mut degrees = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let d = row[0].to_integer().ok_or_else(|| TableError::BadDegree {
                row: i,
                value: row[0].to_string(),
            })?;
            if d.sign() != Sign::Plus {
                return Err(TableError::BadDegree {
                    row: i,
                    value: d.to_string(),
                });
            }
            degrees.push(d.to_biguint().expect("positive"));
        }
        let degree_sq_sum: BigUint = degrees.iter().map(|d| d * d).sum();
        if degree_sq_sum != order {
            return Err(TableError::DegreeSum {
                got: degree_sq_sum,
                order,
            });
        }

        let sizes_rational: Vec<BigRational> = classes
            .iter()
            .map(|c| BigRational::from(BigInt::from_biguint(Sign::Plus, c.size.clone())))
            .collect();
        let sizes_u64: Option<Vec<u64>> = classes.iter().map(|c| c.size.to_u64()).collect();
        let mut table = CharacterTable {
            group_name,
            order,
            classes,
            rows,
            degrees,
            trivial_index: None,
            sizes_rational,
            sizes_u64,
            compiled_rows: OnceLock::new(),
        };

        // exact row orthonormality, all pairs (i ≤ j; the reverse pair is the
        // complex conjugate)
        let k = table.rows.len();
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (i..k).map(move |j| (i, j)))
            .collect();
        pairs.par_iter().try_for_each(|&(i, j)| {
            let value = table.row_inner_product(i, j)?;
            let expected = if i == j { 1u8 } else { 0 };
            let ok = if expected == 1 {
                value.is_one()
            } else {
                value.is_zero()
            };
            if ok {
                Ok(())
            } else {
                Err(TableError::Orthogonality {
                    i,
                    j,
                    value: value.to_string(),
                    expected,
                })
            }
        })?;

        table.trivial_index = table
            .rows
            .iter()
            .position(|row| row.iter().all(|v| *v == Cyclotomic::one()));
        Ok(table)
    }

    fn compiled_rows(&self) -> &[Option<CompiledValues>] {
        self.compiled_rows
            .get_or_init(|| self.rows.iter().map(|r| compile_values(r)).collect())
    }

    pub fn group_name(&self) -> &str {
        &self.group_name
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    /// `k(G)`: the number of conjugacy classes = number of irreducibles.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn degrees(&self) -> &[BigUint] {
        &self.degrees
    }

    pub fn value(&self, row: usize, class: usize) -> &Cyclotomic {
        &self.rows[row][class]
    }

    pub fn row(&self, row: usize) -> &[Cyclotomic] {
        &self.rows[row]
    }

    pub fn trivial_index(&self) -> Option<usize> {
        self.trivial_index
    }

    pub fn check_index(&self, index: usize) -> Result<(), TableError> {
        if index >= self.rows.len() {
            return Err(TableError::IndexOutOfRange {
                index,
                count: self.rows.len(),
            });
        }
        Ok(())
    }

    /// `⟨v, w⟩ = (1/|G|) Σ_g v(g)·conj(w(g))` over class functions given by
    /// their values per class; exact, and required to be rational.
    pub fn inner_product_values(
        &self,
        v: &[Cyclotomic],
        w: &[Cyclotomic],
    ) -> Result<BigRational, TableError> {
        if let (Some(cv), Some(cw)) = (compile_values(v), compile_values(w)) {
            if let Some(result) = self.fast_inner(&cv, &cw) {
                return result;
            }
        }
        self.slow_inner(v, w)
    }

    pub fn row_inner_product(&self, i: usize, j: usize) -> Result<BigRational, TableError> {
        let compiled = self.compiled_rows();
        if let (Some(ci), Some(cj)) = (&compiled[i], &compiled[j]) {
            if let Some(result) = self.fast_inner(ci, cj) {
                return result;
            }
        }
        self.slow_inner(&self.rows[i], &self.rows[j])
    }

    /// Inner product of a value vector against one table row, reusing a
    /// pre-compiled form of the vector across many rows.
    pub(crate) fn inner_against_row(
        &self,
        values: &[Cyclotomic],
        compiled: Option<&CompiledValues>,
        gamma: usize,
    ) -> Result<BigRational, TableError> {
        if let Some(cv) = compiled {
            if let Some(crow) = &self.compiled_rows()[gamma] {
                if let Some(result) = self.fast_inner(cv, crow) {
                    return result;
                }
            }
        }
        self.slow_inner(values, &self.rows[gamma])
    }

    /// Generic exact path: sparse cyclotomic accumulation.
    fn slow_inner(&self, v: &[Cyclotomic], w: &[Cyclotomic]) -> Result<BigRational, TableError> {
        let mut acc = Cyclotomic::zero();
        for ((size, a), b) in self.sizes_rational.iter().zip(v).zip(w) {
            if a.is_raw_zero() || b.is_raw_zero() {
                continue;
            }
            acc.add_scaled_product(a, b, true, size);
        }
        let total = acc
            .to_rational()
            .ok_or_else(|| TableError::IrrationalInnerProduct(acc.to_string()))?;
        Ok(total / BigRational::from(BigInt::from_biguint(Sign::Plus, self.order.clone())))
    }

    /// Integer fast path: accumulates `size·a·conj(b)` into a dense `i128`
    /// exponent vector. Returns `None` (fall back to the generic path) when
    /// anything risks overflow or exceeds the size limits; exactness is
    /// never traded away.
    fn fast_inner(
        &self,
        a: &CompiledValues,
        b: &CompiledValues,
    ) -> Option<Result<BigRational, TableError>> {
        let sizes = self.sizes_u64.as_ref()?;
        let n = a.conductor.lcm(&b.conductor);
        if n > FAST_CONDUCTOR_LIMIT {
            return None;
        }
        let fa = n / a.conductor;
        let fb = n / b.conductor;
        let mut acc = vec![0i128; n as usize];
        for ((ta, tb), &size) in a.classes.iter().zip(&b.classes).zip(sizes) {
            if ta.is_empty() || tb.is_empty() {
                continue;
            }
            let size = size as i128;
            for &(ea, ca) in ta {
                let ea = ea * fa;
                let ca = size.checked_mul(ca as i128)?;
                for &(eb, cb) in tb {
                    // conjugation of b negates its exponent
                    let e = (ea + (n - eb * fb % n) % n) % n;
                    let add = ca.checked_mul(cb as i128)?;
                    let slot = &mut acc[e as usize];
                    *slot = slot.checked_add(add)?;
                }
            }
        }
        let den = BigInt::from(a.denominator) * BigInt::from(b.denominator);
        let total = match Cyclotomic::from_terms(
            n,
            acc.iter().enumerate().filter(|(_, c)| **c != 0).map(|(e, c)| {
                (
                    e as u64,
                    BigRational::new(BigInt::from(*c), den.clone()),
                )
            }),
        ) {
            Ok(t) => t,
            Err(e) => return Some(Err(e.into())),
        };
        let rational = match total.to_rational() {
            Some(r) => r,
            None => {
                return Some(Err(TableError::IrrationalInnerProduct(total.to_string())));
            }
        };
        Some(Ok(rational
            / BigRational::from(BigInt::from_biguint(Sign::Plus, self.order.clone()))))
    }

    pub fn to_json(&self) -> String {
        let doc = TableDoc {
            group: self.group_name.clone(),
            order: self.order.to_string(),
            classes: self
                .classes
                .iter()
                .map(|c| ClassDoc {
                    size: c.size.to_string(),
                    label: c.label.clone(),
                })
                .collect(),
            characters: self
                .rows
                .iter()
                .map(|row| row.iter().map(value_to_doc).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("table serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, TableError> {
        let doc: TableDoc =
            serde_json::from_str(text).map_err(|e| TableError::Json(e.to_string()))?;
        let order: BigUint = doc
            .order
            .parse()
            .map_err(|_| TableError::Schema(format!("bad order {:?}", doc.order)))?;
        let mut classes = Vec::with_capacity(doc.classes.len());
        for c in &doc.classes {
            let size: BigUint = c
                .size
                .parse()
                .map_err(|_| TableError::Schema(format!("bad class size {:?}", c.size)))?;
            classes.push(ConjugacyClass {
                size,
                label: c.label.clone(),
            });
        }
        let mut rows = Vec::with_capacity(doc.characters.len());
        for row in &doc.characters {
            let mut values = Vec::with_capacity(row.len());
            for v in row {
                values.push(value_from_doc(v)?);
            }
            rows.push(values);
        }
        CharacterTable::new(doc.group, order, classes, rows)
    }
}

#[derive(Serialize, Deserialize)]
struct TableDoc {
    group: String,
    order: String,
    classes: Vec<ClassDoc>,
    characters: Vec<Vec<ValueDoc>>,
}

#[derive(Serialize, Deserialize)]
struct ClassDoc {
    size: String,
    label: String,
}

/// JSON spelling of a cyclotomic value: a plain integer, `"q(a/b)"` for a
/// non-integral rational, or `{"conductor": n, "coeffs": {"e": "a/b"}}`.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ValueDoc {
    Int(serde_json::Number),
    Scalar(String),
    Sum {
        conductor: u64,
        coeffs: BTreeMap<String, String>,
    },
}

fn value_to_doc(v: &Cyclotomic) -> ValueDoc {
    if let Some(r) = v.to_rational() {
        if r.is_integer() {
            return ValueDoc::Int(serde_json::Number::from_string_unchecked(
                r.to_integer().to_string(),
            ));
        }
        return ValueDoc::Scalar(format!("q({}/{})", r.numer(), r.denom()));
    }
    let canon = v.canonical();
    let coeffs = canon
        .raw_terms()
        .iter()
        .map(|(e, c)| (e.to_string(), format!("{}/{}", c.numer(), c.denom())))
        .collect();
    ValueDoc::Sum {
        conductor: canon.conductor(),
        coeffs,
    }
}

fn value_from_doc(doc: &ValueDoc) -> Result<Cyclotomic, TableError> {
    match doc {
        ValueDoc::Int(n) => {
            let i: BigInt = n
                .to_string()
                .parse()
                .map_err(|_| TableError::Schema(format!("bad integer value {n}")))?;
            Ok(Cyclotomic::from_integer(i))
        }
        ValueDoc::Scalar(s) => Ok(Cyclotomic::parse_scalar(s)?),
        ValueDoc::Sum { conductor, coeffs } => {
            let mut terms = Vec::with_capacity(coeffs.len());
            for (e, c) in coeffs {
                let exp: u64 = e
                    .parse()
                    .map_err(|_| TableError::Schema(format!("bad exponent {e:?}")))?;
                let (a, b) = c
                    .split_once('/')
                    .ok_or_else(|| TableError::Schema(format!("bad coefficient {c:?}")))?;
                let num: BigInt = a
                    .parse()
                    .map_err(|_| TableError::Schema(format!("bad coefficient {c:?}")))?;
                let den: BigInt = b
                    .parse()
                    .map_err(|_| TableError::Schema(format!("bad coefficient {c:?}")))?;
                if den.is_zero() {
                    return Err(TableError::Schema(format!("zero denominator in {c:?}")));
                }
                terms.push((exp, BigRational::new(num, den)));
            }
            Ok(Cyclotomic::from_terms(*conductor, terms)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(v: i64) -> Cyclotomic {
        Cyclotomic::from_integer(v)
    }

    /// The character table of S₃ written by hand.
    fn s3() -> CharacterTable {
        let classes = vec![
            ConjugacyClass {
                size: BigUint::from(1u32),
                label: "1".into(),
            },
            ConjugacyClass {
                size: BigUint::from(3u32),
                label: "2a".into(),
            },
            ConjugacyClass {
                size: BigUint::from(2u32),
                label: "3a".into(),
            },
        ];
        let rows = vec![
            vec![cyc(1), cyc(1), cyc(1)],
            vec![cyc(1), cyc(-1), cyc(1)],
            vec![cyc(2), cyc(0), cyc(-1)],
        ];
        CharacterTable::new("S3".into(), BigUint::from(6u32), classes, rows).unwrap()
    }

    #[test]
    fn s3_table_validates() {
        let t = s3();
        assert_eq!(t.class_count(), 3);
        assert_eq!(t.trivial_index(), Some(0));
        assert_eq!(
            t.degrees(),
            &[BigUint::from(1u32), BigUint::from(1u32), BigUint::from(2u32)]
        );
    }

    #[test]
    fn perturbed_value_fails_orthogonality() {
        let classes = vec![
            ConjugacyClass {
                size: BigUint::from(1u32),
                label: "1".into(),
            },
            ConjugacyClass {
                size: BigUint::from(3u32),
                label: "2a".into(),
            },
            ConjugacyClass {
                size: BigUint::from(2u32),
                label: "3a".into(),
            },
        ];
        let rows = vec![
            vec![cyc(1), cyc(1), cyc(1)],
            vec![cyc(1), cyc(-1), cyc(1)],
            vec![cyc(2), cyc(1), cyc(-1)],
        ];
        let err = CharacterTable::new("bad".into(), BigUint::from(6u32), classes, rows)
            .unwrap_err();
        assert!(matches!(err, TableError::Orthogonality { .. }));
    }

    #[test]
    fn wrong_class_sum_is_rejected() {
        let classes = vec![
            ConjugacyClass {
                size: BigUint::from(1u32),
                label: "1".into(),
            },
            ConjugacyClass {
                size: BigUint::from(4u32),
                label: "2a".into(),
            },
        ];
        let rows = vec![vec![cyc(1), cyc(1)], vec![cyc(1), cyc(-1)]];
        let err =
            CharacterTable::new("bad".into(), BigUint::from(6u32), classes, rows).unwrap_err();
        assert!(matches!(err, TableError::ClassSizeSum { .. }));
    }

    #[test]
    fn empty_classes_is_a_schema_error() {
        let err =
            CharacterTable::new("bad".into(), BigUint::one(), Vec::new(), Vec::new()).unwrap_err();
        assert!(matches!(err, TableError::Schema(_)));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let t = s3();
        let json = t.to_json();
        let back = CharacterTable::from_json(&json).unwrap();
        assert_eq!(back.to_json(), json);
        assert_eq!(back.order(), t.order());
    }

    #[test]
    fn json_rejects_tampered_table() {
        let t = s3();
        let json = t.to_json().replace("-1", "-2");
        assert!(CharacterTable::from_json(&json).is_err());
    }
}
