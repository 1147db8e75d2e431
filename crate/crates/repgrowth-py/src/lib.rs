//! Python bindings for the repgrowth library.
//!
//! Exposes the two computational worlds behind one small surface:
//! `RootSystem` for compact semisimple Lie groups (weights are plain lists
//! of ints, multiplicities and dimensions arrive as exact Python ints) and
//! `CharacterTable` for finite groups (combos are `{index: multiplicity}`
//! dicts). See `python/smoke_test.py` for a tour.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use repgrowth::growth;
use repgrowth::root_system::Weight;
use repgrowth::weyl_char::Irrep;

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational_pair(r: &num_rational::BigRational) -> (BigInt, BigInt) {
    (r.numer().clone(), r.denom().clone())
}

/// Cartan data plus exact Weyl-character operations for one compact
/// semisimple Lie group. Weights are lists of fundamental-weight coords.
#[pyclass(frozen)]
struct RootSystem {
    inner: repgrowth::RootSystem,
}

impl RootSystem {
    fn irrep(&self, coords: Vec<i64>) -> PyResult<Irrep<'_>> {
        Irrep::new(&self.inner, Weight::new(coords)).map_err(value_err)
    }
}

fn terms_to_pairs(vc: &repgrowth::VirtualCharacter) -> Vec<(Vec<i64>, BigUint)> {
    vc.terms()
        .iter()
        .map(|(w, m)| (w.coords().to_vec(), m.clone()))
        .collect()
}

#[pymethods]
impl RootSystem {
    /// Parse a Cartan type such as "A2", "B3" or "A1xA1".
    #[new]
    fn new(cartan_type: &str) -> PyResult<Self> {
        let t: repgrowth::CartanType = cartan_type.parse().map_err(value_err)?;
        Ok(RootSystem {
            inner: repgrowth::RootSystem::new(t),
        })
    }

    fn __repr__(&self) -> String {
        format!("RootSystem({:?})", self.inner.cartan_type().to_string())
    }

    #[getter]
    fn cartan_type(&self) -> String {
        self.inner.cartan_type().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.inner.cartan_matrix().to_vec()
    }

    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner
            .positive_roots()
            .iter()
            .map(|r| r.weight().coords().to_vec())
            .collect()
    }

    fn weyl_vector(&self) -> Vec<i64> {
        self.inner.weyl_vector().coords().to_vec()
    }

    /// Exact invariant form (x, y) as a (numerator, denominator) pair.
    fn inner_product(&self, x: Vec<i64>, y: Vec<i64>) -> PyResult<(BigInt, BigInt)> {
        let r = self
            .inner
            .inner(&Weight::new(x), &Weight::new(y))
            .map_err(value_err)?;
        Ok(rational_pair(&r))
    }

    /// ⟨λ, α⟩ = 2(λ,α)/(α,α) for a root α, as (numerator, denominator).
    fn pairing(&self, lam: Vec<i64>, alpha: Vec<i64>) -> PyResult<(BigInt, BigInt)> {
        let r = self
            .inner
            .pairing(&Weight::new(lam), &Weight::new(alpha))
            .map_err(value_err)?;
        Ok(rational_pair(&r))
    }

    /// Weyl dimension of the irreducible with this highest weight.
    fn dimension(&self, weight: Vec<i64>) -> PyResult<BigUint> {
        Ok(self.irrep(weight)?.dimension())
    }

    /// Full weight system with multiplicities.
    fn weight_multiplicities(&self, weight: Vec<i64>) -> PyResult<Vec<(Vec<i64>, BigUint)>> {
        let wm = self.irrep(weight)?.weight_multiplicities();
        Ok(wm
            .entries()
            .iter()
            .map(|(w, m)| (w.coords().to_vec(), m.clone()))
            .collect())
    }

    /// Decomposition of χ_a ⊗ χ_b as [(weight, multiplicity)].
    fn tensor(&self, a: Vec<i64>, b: Vec<i64>) -> PyResult<Vec<(Vec<i64>, BigUint)>> {
        let x = self.irrep(a)?;
        let y = self.irrep(b)?;
        Ok(terms_to_pairs(&x.tensor(&y).map_err(value_err)?))
    }

    /// Decomposition of χ^k.
    fn power(&self, weight: Vec<i64>, k: u32) -> PyResult<Vec<(Vec<i64>, BigUint)>> {
        Ok(terms_to_pairs(&self.irrep(weight)?.power(k)))
    }

    /// The dominant weights 2λ − kα_i for 0 ≤ k ≤ a_i, all constituents
    /// of χ_λ².
    fn brauer_family(&self, weight: Vec<i64>, i: usize) -> PyResult<Vec<Vec<i64>>> {
        Ok(self
            .irrep(weight)?
            .brauer_family(i)
            .map_err(value_err)?
            .iter()
            .map(|w| w.coords().to_vec())
            .collect())
    }

    /// |χ|, |χ²|, the growth exponent and the constituent count of χ².
    fn growth_report(&self, weight: Vec<i64>) -> PyResult<GrowthReport> {
        let rep = self.irrep(weight)?;
        let r = growth::growth_report(&rep, growth::DEFAULT_EXPONENT_BITS);
        Ok(GrowthReport {
            measure: r.measure,
            measure_sq: r.measure_sq,
            exponent: r.exponent,
            constituents_sq: r.constituents_sq,
        })
    }

    /// True iff |χ_a·χ_b| > max(|χ_a|, |χ_b|); both weights must be nonzero.
    fn strict_growth_check(&self, a: Vec<i64>, b: Vec<i64>) -> PyResult<bool> {
        let x = self.irrep(a)?;
        let y = self.irrep(b)?;
        Ok(growth::strict_growth_check(&x, &y)
            .map_err(value_err)?
            .holds)
    }
}

/// Growth data of one irreducible character.
#[pyclass(frozen, get_all)]
struct GrowthReport {
    measure: BigUint,
    measure_sq: BigUint,
    exponent: Option<f64>,
    constituents_sq: usize,
}

#[pymethods]
impl GrowthReport {
    fn __repr__(&self) -> String {
        format!(
            "GrowthReport(measure={}, measure_sq={}, exponent={:?}, constituents_sq={})",
            self.measure, self.measure_sq, self.exponent, self.constituents_sq
        )
    }
}

/// A validated character table of a finite group. Class-function combos are
/// dicts mapping irreducible index → multiplicity.
#[pyclass(frozen)]
struct CharacterTable {
    inner: repgrowth::CharacterTable,
}

impl CharacterTable {
    fn combo(
        &self,
        mults: BTreeMap<usize, BigUint>,
    ) -> PyResult<repgrowth::ClassFunctionCombo> {
        repgrowth::ClassFunctionCombo::new(&self.inner, mults).map_err(value_err)
    }
}

#[pymethods]
impl CharacterTable {
    /// The table of PSL₂(q) for an odd prime power q ≥ 5.
    #[staticmethod]
    fn psl2(q: u64) -> PyResult<Self> {
        Ok(CharacterTable {
            inner: repgrowth::finite_char::psl2(q).map_err(value_err)?,
        })
    }

    /// The table of an extraspecial group of order p^(1+2n).
    #[staticmethod]
    fn extraspecial(p: u64, n: u32) -> PyResult<Self> {
        Ok(CharacterTable {
            inner: repgrowth::finite_char::extraspecial(p, n).map_err(value_err)?,
        })
    }

    /// Load and fully validate a table from its JSON document.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(CharacterTable {
            inner: repgrowth::CharacterTable::from_json(text).map_err(value_err)?,
        })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __repr__(&self) -> String {
        format!(
            "CharacterTable({:?}, order={}, classes={})",
            self.inner.group_name(),
            self.inner.order(),
            self.inner.class_count()
        )
    }

    #[getter]
    fn group_name(&self) -> String {
        self.inner.group_name().to_string()
    }

    #[getter]
    fn order(&self) -> BigUint {
        self.inner.order().clone()
    }

    #[getter]
    fn num_classes(&self) -> usize {
        self.inner.class_count()
    }

    fn degrees(&self) -> Vec<BigUint> {
        self.inner.degrees().to_vec()
    }

    fn class_sizes(&self) -> Vec<BigUint> {
        self.inner.classes().iter().map(|c| c.size.clone()).collect()
    }

    fn class_labels(&self) -> Vec<String> {
        self.inner
            .classes()
            .iter()
            .map(|c| c.label.clone())
            .collect()
    }

    /// Index of the trivial character, if present.
    fn trivial_index(&self) -> Option<usize> {
        self.inner.trivial_index()
    }

    /// Exact decomposition of a product of combos into irreducibles.
    fn decompose_product(
        &self,
        factors: Vec<BTreeMap<usize, BigUint>>,
    ) -> PyResult<BTreeMap<usize, BigUint>> {
        let combos: Vec<_> = factors
            .into_iter()
            .map(|f| self.combo(f))
            .collect::<PyResult<_>>()?;
        let product = self.inner.decompose_product(&combos).map_err(value_err)?;
        Ok(product.mults().clone().into_iter().collect())
    }

    /// |χ| = Σ d² over the distinct constituents of the combo.
    fn plancherel_measure(&self, combo: BTreeMap<usize, BigUint>) -> PyResult<BigUint> {
        let c = self.combo(combo)?;
        self.inner.plancherel_measure(&c).map_err(value_err)
    }

    /// σ(χ): the sum of all constituent multiplicities.
    fn multiplicity_sum(&self, combo: BTreeMap<usize, BigUint>) -> PyResult<BigUint> {
        Ok(self.combo(combo)?.multiplicity_sum())
    }

    /// Smallest N ≤ max_n with |χ^N| = |G|, or None.
    fn covering_number(
        &self,
        combo: BTreeMap<usize, BigUint>,
        max_n: u64,
    ) -> PyResult<Option<u64>> {
        let c = self.combo(combo)?;
        self.inner.covering_number(&c, max_n).map_err(value_err)
    }

    /// (product measure, max factor measure, holds ≥, holds >) for a product
    /// of irreducibles given by row indices.
    fn verify_bound1(&self, indices: Vec<usize>) -> PyResult<(BigUint, BigUint, bool, bool)> {
        let r = self.inner.verify_bound1(&indices).map_err(value_err)?;
        Ok((
            r.product_measure,
            r.max_factor_measure,
            r.holds_weak,
            r.holds_strict,
        ))
    }
}

/// Closed-form SU(2) measures (|χ_n|, |χ_n²|) = ((n+1)², C(2n+3,3)).
#[pyfunction]
fn su2_closed_form(n: u64) -> (BigUint, BigUint) {
    growth::su2_closed_form(n)
}

/// Growth report for SU(n) with highest weight kδ; returns
/// (dimension, expected dimension (k+1)^(n(n−1)/2), report).
#[pyfunction]
fn weyl_delta_family(n: usize, k: i64) -> PyResult<(BigUint, BigUint, GrowthReport)> {
    let r = growth::weyl_delta_family(n, k, growth::DEFAULT_EXPONENT_BITS).map_err(value_err)?;
    Ok((
        r.dimension,
        r.expected_dimension,
        GrowthReport {
            measure: r.report.measure,
            measure_sq: r.report.measure_sq,
            exponent: r.report.exponent,
            constituents_sq: r.report.constituents_sq,
        },
    ))
}

#[pymodule]
fn repgrowth_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<RootSystem>()?;
    m.add_class::<GrowthReport>()?;
    m.add_class::<CharacterTable>()?;
    m.add_function(wrap_pyfunction!(su2_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_delta_family, m)?)?;
    Ok(())
}
