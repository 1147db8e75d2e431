//! The Plancherel-normalized growth measure `|χ| = Σ χ_i(1)²` over distinct
//! irreducible constituents, and growth-exponent computations for compact
//! semisimple Lie groups.
//!
//! Measures are exact big integers. The growth exponent `log|χ²|/log|χ|` is
//! the only floating quantity, computed from the exact integers at the very
//! last step with a controllable number of significant bits.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::root_system::{CartanType, Family, RootSystem, Weight};
use crate::weyl_char::{dimension_of, Irrep, VirtualCharacter, WeylError};

/// Default number of significant bits taken from each exact measure when a
/// logarithm ratio is formed (an f64 mantissa is the ceiling anyway).
pub const DEFAULT_EXPONENT_BITS: u32 = 53;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GrowthError {
    #[error("the trivial character has no growth exponent")]
    TrivialCharacter,
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Growth data of one irreducible character: `|χ|`, `|χ²|`, the exponent
/// `log|χ²|/log|χ|` (absent when `|χ| = 1`), and the number of distinct
/// constituents of `χ²`.
#[derive(Clone, Debug)]
pub struct GrowthReport {
    pub measure: BigUint,
    pub measure_sq: BigUint,
    pub exponent: Option<f64>,
    pub constituents_sq: usize,
}

/// `Σ dim(μ)²` over the distinct constituents: the measure of the empty
/// character is 0, of the trivial character 1.
pub fn plancherel_measure(chi: &VirtualCharacter) -> BigUint {
    let mut acc = BigUint::zero();
    for w in chi.terms().keys() {
        let d = dimension_of(chi.system(), w);
        acc += &d * &d;
    }
    acc
}

/// Natural log of a positive big integer using the top `bits` significant
/// bits, accurate to roughly one part in `2^min(bits, 53)`.
pub fn big_ln(x: &BigUint, bits: u32) -> f64 {
    assert!(!x.is_zero(), "log of zero");
    let bits = bits.clamp(10, 53) as u64;
    let total = x.bits();
    let shift = total.saturating_sub(bits);
    let mantissa = (x >> shift).to_f64().expect("≤ 53 bits fit in f64");
    mantissa.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `log(measure_sq)/log(measure)` from exact integers; `None` when the base
/// measure is 1 (trivial character) and the ratio is undefined.
pub fn exponent_from_measures(measure: &BigUint, measure_sq: &BigUint, bits: u32) -> Option<f64> {
    if measure <= &BigUint::one() {
        return None;
    }
    Some(big_ln(measure_sq, bits) / big_ln(measure, bits))
}

/// Computes `χ²` by the generic decomposition pipeline and reports both
/// measures and the exponent.
pub fn growth_report(rep: &Irrep, bits: u32) -> GrowthReport {
    let measure = {
        let d = rep.dimension();
        &d * &d
    };
    let square = rep.power(2);
    let measure_sq = plancherel_measure(&square);
    GrowthReport {
        exponent: exponent_from_measures(&measure, &measure_sq, bits),
        constituents_sq: square.constituent_count(),
        measure,
        measure_sq,
    }
}

/// Closed-form `(|χ_n|, |χ_n²|) = ((n+1)², C(2n+3, 3))` for SU(2), no
/// decomposition involved.
pub fn su2_closed_form(n: u64) -> (BigUint, BigUint) {
    let np1 = BigUint::from(n + 1);
    let measure = &np1 * &np1;
    let m = BigUint::from(2 * n + 3);
    let measure_sq =
        &m * (&m - 1u32) * (&m - 2u32) / BigUint::from(6u32);
    (measure, measure_sq)
}

/// Growth data for the SU(n) family with highest weight `kδ`, whose
/// dimension is exactly `(k+1)^{n(n−1)/2}`.
#[derive(Clone, Debug)]
pub struct DeltaFamilyReport {
    pub n: usize,
    pub k: i64,
    pub dimension: BigUint,
    pub expected_dimension: BigUint,
    pub report: GrowthReport,
}

pub fn weyl_delta_family(n: usize, k: i64, bits: u32) -> Result<DeltaFamilyReport, GrowthError> {
    if n < 2 {
        return Err(GrowthError::InvalidParameter(format!(
            "SU(n) family needs n ≥ 2, got {n}"
        )));
    }
    if k < 1 {
        return Err(GrowthError::InvalidParameter(format!(
            "the δ-family exponent k must be ≥ 1, got {k}"
        )));
    }
    let cartan = CartanType::simple(Family::A, n - 1).expect("rank ≥ 1");
    let system = RootSystem::new(cartan);
    let lam = Weight::new(vec![k; n - 1]);
    let rep = Irrep::new(&system, lam)?;
    let dimension = rep.dimension();
    let expected_dimension = BigUint::from((k + 1) as u64).pow((n * (n - 1) / 2) as u32);
    let report = growth_report(&rep, bits);
    Ok(DeltaFamilyReport {
        n,
        k,
        dimension,
        expected_dimension,
        report,
    })
}

/// Witness that `|χ_{λ₁}χ_{λ₂}| > max(|χ_{λ₁}|, |χ_{λ₂}|)`.
///
/// The fast path uses the Cartan component `λ₁+λ₂` alone: its squared
/// dimension already exceeds both measures for nontrivial dominant weights.
/// If the witness bound were ever insufficient the full decomposition is
/// consulted, so `holds = false` genuinely means the inequality fails.
#[derive(Clone, Debug)]
pub struct StrictGrowthWitness {
    pub cartan_component: Weight,
    pub witness_measure: BigUint,
    pub max_measure: BigUint,
    pub used_fast_path: bool,
    pub holds: bool,
}

pub fn strict_growth_check(
    rep1: &Irrep,
    rep2: &Irrep,
) -> Result<StrictGrowthWitness, GrowthError> {
    if rep1.is_trivial() || rep2.is_trivial() {
        return Err(GrowthError::TrivialCharacter);
    }
    let cartan_component = rep1.highest_weight().add(rep2.highest_weight());
    let wd = dimension_of(rep1.system(), &cartan_component);
    let witness_measure = &wd * &wd;
    let m1 = {
        let d = rep1.dimension();
        &d * &d
    };
    let m2 = {
        let d = rep2.dimension();
        &d * &d
    };
    let max_measure = m1.max(m2);
    if witness_measure > max_measure {
        return Ok(StrictGrowthWitness {
            cartan_component,
            witness_measure,
            max_measure,
            used_fast_path: true,
            holds: true,
        });
    }
    let product = rep1.tensor(rep2)?;
    let full = plancherel_measure(&product);
    Ok(StrictGrowthWitness {
        cartan_component,
        witness_measure,
        holds: full > max_measure,
        max_measure,
        used_fast_path: false,
    })
}

/// One row of a growth sweep, as emitted in CSV output.
#[derive(Clone, Debug)]
pub struct SweepRow {
    pub cartan_type: String,
    pub lambda: Weight,
    pub dim: BigUint,
    pub measure: BigUint,
    pub measure_sq: BigUint,
    pub exponent: Option<f64>,
    pub constituents_sq: usize,
}

pub const SWEEP_CSV_HEADER: &str =
    "cartan_type,lambda_coords,dim,measure,measure_sq,exponent,constituents_sq";

impl SweepRow {
    pub fn csv_line(&self) -> String {
        let coords: Vec<String> = self
            .lambda
            .coords()
            .iter()
            .map(|c| c.to_string())
            .collect();
        let exponent = match self.exponent {
            Some(e) => format!("{e:.10}"),
            None => String::new(),
        };
        format!(
            "{},{},{},{},{},{},{}",
            self.cartan_type,
            coords.join(" "),
            self.dim,
            self.measure,
            self.measure_sq,
            exponent,
            self.constituents_sq
        )
    }
}

/// All nontrivial dominant weights with coordinates `≤ max_coord`, in
/// lexicographic order (the deterministic sweep order).
pub fn dominant_weights_up_to(rank: usize, max_coord: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut coords = vec![0i64; rank];
    loop {
        // advance odometer
        let mut i = rank;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if coords[i] < max_coord {
                coords[i] += 1;
                for c in coords.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                break;
            }
        }
        out.push(Weight::new(coords.clone()));
    }
}

pub fn sweep_row(system: &RootSystem, lambda: Weight, bits: u32) -> Result<SweepRow, GrowthError> {
    let rep = Irrep::new(system, lambda)?;
    let report = growth_report(&rep, bits);
    Ok(SweepRow {
        cartan_type: system.cartan_type().to_string(),
        lambda: rep.highest_weight().clone(),
        dim: rep.dimension(),
        measure: report.measure,
        measure_sq: report.measure_sq,
        exponent: report.exponent,
        constituents_sq: report.constituents_sq,
    })
}

/// `C(n, k)` for big arguments, used by tests and the SU(2) limit checks.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    (num / den).to_biguint().expect("binomial is positive")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse::<CartanType>().unwrap())
    }

    fn irrep<'a>(system: &'a RootSystem, coords: &[i64]) -> Irrep<'a> {
        Irrep::new(system, Weight::new(coords.to_vec())).unwrap()
    }

    #[test]
    fn su2_closed_form_values() {
        assert_eq!(su2_closed_form(0), (BigUint::one(), BigUint::one()));
        assert_eq!(
            su2_closed_form(1),
            (BigUint::from(4u32), BigUint::from(10u32))
        );
        assert_eq!(
            su2_closed_form(2),
            (BigUint::from(9u32), BigUint::from(35u32))
        );
    }

    #[test]
    fn su2_closed_form_is_the_binomial() {
        for n in 0..200 {
            let (_, msq) = su2_closed_form(n);
            assert_eq!(msq, binomial(2 * n + 3, 3));
        }
    }

    #[test]
    fn plancherel_measure_examples() {
        let a1 = rs("A1");
        for n in [1i64, 2, 5] {
            let rep = irrep(&a1, &[n]);
            let single = VirtualCharacter::irreducible(&a1, Weight::new(vec![n]));
            assert_eq!(
                plancherel_measure(&single),
                BigUint::from(((n + 1) * (n + 1)) as u64)
            );
            let sq = rep.power(2);
            assert_eq!(plancherel_measure(&sq), binomial(2 * n as u64 + 3, 3));
        }
        let trivial = VirtualCharacter::trivial(&a1);
        assert_eq!(plancherel_measure(&trivial), BigUint::one());
    }

    #[test]
    fn growth_report_a1() {
        let a1 = rs("A1");
        let report = growth_report(&irrep(&a1, &[1]), DEFAULT_EXPONENT_BITS);
        assert_eq!(report.measure, BigUint::from(4u32));
        assert_eq!(report.measure_sq, BigUint::from(10u32));
        let e = report.exponent.unwrap();
        assert!((e - 10f64.ln() / 4f64.ln()).abs() < 1e-12);
        assert!((e - 1.6609).abs() < 1e-3);
        assert_eq!(report.constituents_sq, 2);
    }

    #[test]
    fn growth_report_trivial_has_no_exponent() {
        let a1 = rs("A1");
        let report = growth_report(&irrep(&a1, &[0]), DEFAULT_EXPONENT_BITS);
        assert_eq!(report.measure, BigUint::one());
        assert_eq!(report.measure_sq, BigUint::one());
        assert!(report.exponent.is_none());
    }

    #[test]
    fn growth_report_a2_fundamental() {
        let a2 = rs("A2");
        let report = growth_report(&irrep(&a2, &[1, 0]), DEFAULT_EXPONENT_BITS);
        assert_eq!(report.measure, BigUint::from(9u32));
        // 3⊗3 = 6 ⊕ 3̄, so |χ²| = 36 + 9
        assert_eq!(report.measure_sq, BigUint::from(45u32));
    }

    #[test]
    fn big_ln_accuracy() {
        let x = BigUint::from(10u32).pow(30);
        let expected = 30.0 * 10f64.ln();
        assert!((big_ln(&x, 53) - expected).abs() / expected < 1e-12);
        // low precision still lands within the advertised tolerance
        assert!((big_ln(&x, 10) - expected).abs() / expected < 1e-3);
    }

    #[test]
    fn delta_family_examples() {
        let r = weyl_delta_family(2, 3, DEFAULT_EXPONENT_BITS).unwrap();
        assert_eq!(r.dimension, BigUint::from(4u32));
        assert_eq!(r.dimension, r.expected_dimension);

        let r = weyl_delta_family(3, 1, DEFAULT_EXPONENT_BITS).unwrap();
        assert_eq!(r.dimension, BigUint::from(8u32));

        // n = 2, k = 1 coincides with the SU(2) report at n = 1
        let r = weyl_delta_family(2, 1, DEFAULT_EXPONENT_BITS).unwrap();
        assert_eq!(r.report.measure, BigUint::from(4u32));
        assert_eq!(r.report.measure_sq, BigUint::from(10u32));

        assert!(weyl_delta_family(1, 1, DEFAULT_EXPONENT_BITS).is_err());
        assert!(weyl_delta_family(3, 0, DEFAULT_EXPONENT_BITS).is_err());
    }

    #[test]
    fn strict_growth_examples() {
        let a1 = rs("A1");
        let chi1 = irrep(&a1, &[1]);
        let w = strict_growth_check(&chi1, &chi1).unwrap();
        assert!(w.holds);
        assert_eq!(w.cartan_component, Weight::new(vec![2]));
        assert_eq!(w.witness_measure, BigUint::from(9u32));
        assert_eq!(w.max_measure, BigUint::from(4u32));

        let a2 = rs("A2");
        let v = irrep(&a2, &[1, 0]);
        let dual = irrep(&a2, &[0, 1]);
        let w = strict_growth_check(&v, &dual).unwrap();
        assert!(w.holds);
        assert_eq!(w.witness_measure, BigUint::from(64u32));

        let g2 = rs("G2");
        let f = irrep(&g2, &[1, 0]);
        assert!(strict_growth_check(&f, &f).unwrap().holds);

        let triv = irrep(&a1, &[0]);
        assert!(matches!(
            strict_growth_check(&chi1, &triv),
            Err(GrowthError::TrivialCharacter)
        ));
    }

    #[test]
    fn sweep_enumeration_is_lexicographic_and_nontrivial() {
        let ws = dominant_weights_up_to(2, 2);
        assert_eq!(ws.len(), 8);
        assert_eq!(ws[0], Weight::new(vec![0, 1]));
        assert_eq!(ws[1], Weight::new(vec![0, 2]));
        assert_eq!(ws[2], Weight::new(vec![1, 0]));
        assert_eq!(ws.last().unwrap(), &Weight::new(vec![2, 2]));
        assert!(ws.iter().all(|w| !w.is_zero()));
    }

    #[test]
    fn sweep_row_matches_closed_form() {
        let a1 = rs("A1");
        for n in [1i64, 7, 40] {
            let row = sweep_row(&a1, Weight::new(vec![n]), DEFAULT_EXPONENT_BITS).unwrap();
            let (m, msq) = su2_closed_form(n as u64);
            assert_eq!(row.measure, m);
            assert_eq!(row.measure_sq, msq);
            assert_eq!(row.constituents_sq, (n + 1) as usize);
        }
    }
}
