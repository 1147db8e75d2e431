//! Non-negative integer combinations of irreducible characters and the
//! operations the growth measure needs: exact product decomposition,
//! Plancherel measure, multiplicity sums, covering numbers and the
//! product-measure inequality report.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;

use super::cyclotomic::Cyclotomic;
use super::table::{CharacterTable, TableError};

/// `Σ m_i χ_i` with `m_i ≥ 1`, tied to the table it was built against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunctionCombo {
    table_id: String,
    mults: BTreeMap<usize, BigUint>,
}

fn table_id(table: &CharacterTable) -> String {
    format!("{}#{}", table.group_name(), table.order())
}

impl ClassFunctionCombo {
    pub fn new<I>(table: &CharacterTable, entries: I) -> Result<Self, TableError>
    where
        I: IntoIterator<Item = (usize, BigUint)>,
    {
        let mut mults = BTreeMap::new();
        for (index, mult) in entries {
            table.check_index(index)?;
            if mult.is_zero() {
                continue;
            }
            *mults.entry(index).or_insert_with(BigUint::zero) += mult;
        }
        Ok(ClassFunctionCombo {
            table_id: table_id(table),
            mults,
        })
    }

    pub fn single(table: &CharacterTable, index: usize) -> Result<Self, TableError> {
        ClassFunctionCombo::new(table, [(index, BigUint::one())])
    }

    /// The combo containing every irreducible once.
    pub fn full(table: &CharacterTable) -> Self {
        ClassFunctionCombo {
            table_id: table_id(table),
            mults: (0..table.class_count())
                .map(|i| (i, BigUint::one()))
                .collect(),
        }
    }

    pub fn mults(&self) -> &BTreeMap<usize, BigUint> {
        &self.mults
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.mults.keys().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// Empty, or supported only on the trivial character.
    pub fn is_trivial(&self, table: &CharacterTable) -> bool {
        self.mults
            .keys()
            .all(|&i| Some(i) == table.trivial_index())
    }

    /// `𝝈`: the sum of all constituent multiplicities.
    pub fn multiplicity_sum(&self) -> BigUint {
        self.mults.values().sum()
    }

    pub fn degree(&self, table: &CharacterTable) -> BigUint {
        self.mults
            .iter()
            .map(|(&i, m)| &table.degrees()[i] * m)
            .sum()
    }
}

impl CharacterTable {
    fn check_combo(&self, combo: &ClassFunctionCombo) -> Result<(), TableError> {
        let expected = table_id(self);
        if combo.table_id != expected {
            return Err(TableError::TableMismatch {
                got: combo.table_id.clone(),
                expected,
            });
        }
        Ok(())
    }

    /// Values of the combo as a class function.
    pub fn combo_values(&self, combo: &ClassFunctionCombo) -> Result<Vec<Cyclotomic>, TableError> {
        self.check_combo(combo)?;
        let k = self.class_count();
        let mut values = vec![Cyclotomic::zero(); k];
        for (&i, m) in combo.mults() {
            let f = BigRational::from(BigInt::from_biguint(Sign::Plus, m.clone()));
            for (acc, v) in values.iter_mut().zip(self.row(i)) {
                acc.add_scaled_product(v, &Cyclotomic::one(), false, &f);
            }
        }
        Ok(values)
    }

    /// Decomposes a genuine character given by its class-function values:
    /// `m_γ = ⟨v, χ_γ⟩`, which must come out a non-negative integer.
    pub fn decompose_values(
        &self,
        values: &[Cyclotomic],
    ) -> Result<ClassFunctionCombo, TableError> {
        let compiled = super::table::compile_values(values);
        let entries: Vec<(usize, BigUint)> = (0..self.class_count())
            .into_par_iter()
            .map(|gamma| {
                let m = self.inner_against_row(values, compiled.as_ref(), gamma)?;
                if !m.is_integer() {
                    return Err(TableError::NonIntegralInnerProduct(m.to_string()));
                }
                let m = m.to_integer();
                if m.is_negative() {
                    return Err(TableError::InvalidParameter(format!(
                        "negative multiplicity {m} at irreducible {gamma}: not a character"
                    )));
                }
                Ok((gamma, m.to_biguint().expect("non-negative")))
            })
            .collect::<Result<_, _>>()?;
        ClassFunctionCombo::new(self, entries)
    }

    /// Exact decomposition of a product of combos into irreducibles.
    pub fn decompose_product(
        &self,
        factors: &[ClassFunctionCombo],
    ) -> Result<ClassFunctionCombo, TableError> {
        if factors.is_empty() {
            return Err(TableError::InvalidParameter(
                "product of zero factors".into(),
            ));
        }
        let mut values = self.combo_values(&factors[0])?;
        for f in &factors[1..] {
            let vf = self.combo_values(f)?;
            for (a, b) in values.iter_mut().zip(&vf) {
                *a = a.mul(b);
            }
        }
        self.decompose_values(&values)
    }

    /// `|χ| = Σ d_i²` over the distinct irreducible constituents.
    pub fn plancherel_measure(&self, combo: &ClassFunctionCombo) -> Result<BigUint, TableError> {
        self.check_combo(combo)?;
        Ok(combo
            .support()
            .map(|i| {
                let d = &self.degrees()[i];
                d * d
            })
            .sum())
    }

    /// Smallest `N ≤ max_n` with `|χ^N| = |G|`, i.e. `χ^N` contains every
    /// irreducible character; `None` if no such `N` exists in range.
    pub fn covering_number(
        &self,
        combo: &ClassFunctionCombo,
        max_n: u64,
    ) -> Result<Option<u64>, TableError> {
        self.check_combo(combo)?;
        if combo.is_trivial(self) {
            return Err(TableError::TrivialCharacter);
        }
        if max_n < 1 {
            return Err(TableError::InvalidParameter("max_n must be ≥ 1".into()));
        }
        let base = self.combo_values(combo)?;
        let mut power = base.clone();
        for n in 1..=max_n {
            if n > 1 {
                for (a, b) in power.iter_mut().zip(&base) {
                    *a = a.mul(b);
                }
            }
            let decomposed = self.decompose_values(&power)?;
            if decomposed.mults().len() == self.class_count() {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }

    /// Both sides of the product-measure inequality
    /// `|χ_{i₁}⋯χ_{i_n}| ≥ max |χ_{i_j}|` for irreducible factors.
    pub fn verify_bound1(&self, factor_indices: &[usize]) -> Result<Bound1Report, TableError> {
        if factor_indices.is_empty() {
            return Err(TableError::InvalidParameter(
                "product of zero factors".into(),
            ));
        }
        for &i in factor_indices {
            self.check_index(i)?;
        }
        let factors: Vec<ClassFunctionCombo> = factor_indices
            .iter()
            .map(|&i| ClassFunctionCombo::single(self, i))
            .collect::<Result<_, _>>()?;
        let product = self.decompose_product(&factors)?;
        let product_measure = self.plancherel_measure(&product)?;
        let max_factor_measure = factor_indices
            .iter()
            .map(|&i| {
                let d = &self.degrees()[i];
                d * d
            })
            .max()
            .expect("non-empty");
        let has_trivial_factor = factor_indices
            .iter()
            .any(|&i| Some(i) == self.trivial_index());
        Ok(Bound1Report {
            holds_weak: product_measure >= max_factor_measure,
            holds_strict: product_measure > max_factor_measure,
            product_measure,
            max_factor_measure,
            has_trivial_factor,
        })
    }
}

/// Report of one product-measure inequality instance.
#[derive(Clone, Debug)]
pub struct Bound1Report {
    pub product_measure: BigUint,
    pub max_factor_measure: BigUint,
    pub holds_weak: bool,
    pub holds_strict: bool,
    pub has_trivial_factor: bool,
}

/// A reproducible random combo: support of 1–3 irreducibles with
/// multiplicities 1–3. Used by the randomized inequality searches.
pub fn random_combo<R: Rng>(
    table: &CharacterTable,
    rng: &mut R,
) -> Result<ClassFunctionCombo, TableError> {
    let k = table.class_count();
    let support = rng.gen_range(1..=3usize.min(k));
    let entries: Vec<(usize, BigUint)> = (0..support)
        .map(|_| {
            (
                rng.gen_range(0..k),
                BigUint::from(rng.gen_range(1..=3u32)),
            )
        })
        .collect();
    ClassFunctionCombo::new(table, entries)
}
