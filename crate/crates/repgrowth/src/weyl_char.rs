//! Exact dimension, weight multiplicity and tensor-product decomposition for
//! irreducible highest-weight representations.
//!
//! Dimensions come from the Weyl product formula, weight multiplicities from
//! Freudenthal's recursion, and tensor products from the Brauer–Klimyk rule:
//! shift `λ₁ + δ` by every weight of the smaller factor, reduce to the
//! dominant chamber with signs, and drop anything that lands on a wall.
//! Everything is exact; multiplicities and dimensions are big integers.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde_json::json;
use thiserror::Error;

use crate::root_system::{RootSystem, Weight};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("operands live on different root systems ({0} vs {1})")]
    SystemMismatch(String, String),
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("weight has {got} coordinates but the root system has rank {expected}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// An irreducible character of the compact group, labeled by its dominant
/// highest weight.
#[derive(Clone, Debug)]
pub struct Irrep<'a> {
    system: &'a RootSystem,
    highest: Weight,
}

/// The weights of a representation with their multiplicities, closed under
/// the Weyl group.
#[derive(Clone, Debug, Default)]
pub struct WeightMultiset {
    entries: BTreeMap<Weight, BigUint>,
}

impl WeightMultiset {
    pub fn entries(&self) -> &BTreeMap<Weight, BigUint> {
        &self.entries
    }

    pub fn multiplicity(&self, w: &Weight) -> BigUint {
        self.entries.get(w).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A non-negative integer combination of irreducible characters, keyed by
/// dominant highest weight. Zero multiplicities are never stored.
#[derive(Clone, Debug)]
pub struct VirtualCharacter<'a> {
    system: &'a RootSystem,
    terms: BTreeMap<Weight, BigUint>,
}

impl<'a> Irrep<'a> {
    pub fn new(system: &'a RootSystem, highest: Weight) -> Result<Self, WeylError> {
        if highest.len() != system.rank() {
            return Err(WeylError::DimensionMismatch {
                expected: system.rank(),
                got: highest.len(),
            });
        }
        if !highest.is_dominant() {
            return Err(WeylError::NotDominant(highest));
        }
        Ok(Irrep { system, highest })
    }

    pub fn system(&self) -> &'a RootSystem {
        self.system
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest
    }

    pub fn is_trivial(&self) -> bool {
        self.highest.is_zero()
    }

    /// Weyl dimension formula `∏_{α≻0} (λ+δ, α)/(δ, α)`, evaluated as one
    /// exact integer quotient.
    pub fn dimension(&self) -> BigUint {
        dimension_of(self.system, &self.highest)
    }

    /// Dominant weights of the representation with their Freudenthal
    /// multiplicities.
    pub fn dominant_multiplicities(&self) -> BTreeMap<Weight, BigUint> {
        freudenthal(self.system, &self.highest)
    }

    /// The full Weyl-symmetric weight system.
    pub fn weight_multiplicities(&self) -> WeightMultiset {
        let mut entries = BTreeMap::new();
        for (mu, mult) in freudenthal(self.system, &self.highest) {
            for w in weyl_orbit(self.system, &mu) {
                entries.insert(w, mult.clone());
            }
        }
        WeightMultiset { entries }
    }

    /// Exact decomposition of `χ_{λ₁}·χ_{λ₂}` into irreducibles by the
    /// Brauer–Klimyk rule over the weight system of the smaller factor.
    pub fn tensor(&self, other: &Irrep<'a>) -> Result<VirtualCharacter<'a>, WeylError> {
        self.check_same_system(other)?;
        let (anchor, expanded) = if self.dimension() >= other.dimension() {
            (self, other)
        } else {
            (other, self)
        };
        let weights = expanded.weight_multiplicities();
        let terms = klimyk_shift(self.system, &anchor.highest, weights.entries());
        Ok(VirtualCharacter {
            system: self.system,
            terms,
        })
    }

    /// Decomposition of `χ_λ^k` by iterated tensoring. `k = 0` yields the
    /// trivial character.
    pub fn power(&self, k: u32) -> VirtualCharacter<'a> {
        if k == 0 {
            return VirtualCharacter::trivial(self.system);
        }
        let mut result = VirtualCharacter::irreducible(self.system, self.highest.clone());
        for _ in 1..k {
            result = result
                .tensor_irrep(self)
                .expect("same root system by construction");
        }
        result
    }

    /// The Brauer constituent family `[2λ − kα_i | 0 ≤ k ≤ a_i]`: dominant
    /// highest weights guaranteed to occur in `χ_λ²`.
    pub fn brauer_family(&self, i: usize) -> Result<Vec<Weight>, WeylError> {
        if i >= self.system.rank() {
            return Err(WeylError::IndexOutOfRange {
                index: i,
                rank: self.system.rank(),
            });
        }
        let a_i = self.highest.coords()[i];
        let alpha = self.system.simple_root(i).expect("index checked");
        let doubled = self.highest.scale(2);
        let mut family = Vec::with_capacity(a_i as usize + 1);
        for k in 0..=a_i {
            let w = doubled.sub(&alpha.scale(k));
            debug_assert!(w.is_dominant());
            family.push(w);
        }
        Ok(family)
    }

    fn check_same_system(&self, other: &Irrep<'a>) -> Result<(), WeylError> {
        check_same_system(self.system, other.system)
    }
}

fn check_same_system(a: &RootSystem, b: &RootSystem) -> Result<(), WeylError> {
    if !std::ptr::eq(a, b) && a.cartan_type() != b.cartan_type() {
        return Err(WeylError::SystemMismatch(
            a.cartan_type().to_string(),
            b.cartan_type().to_string(),
        ));
    }
    Ok(())
}

impl<'a> VirtualCharacter<'a> {
    pub fn trivial(system: &'a RootSystem) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Weight::zero(system.rank()), BigUint::one());
        VirtualCharacter { system, terms }
    }

    pub fn irreducible(system: &'a RootSystem, highest: Weight) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(highest, BigUint::one());
        VirtualCharacter { system, terms }
    }

    pub fn system(&self) -> &'a RootSystem {
        self.system
    }

    /// Constituents sorted lexicographically by highest weight.
    pub fn terms(&self) -> &BTreeMap<Weight, BigUint> {
        &self.terms
    }

    pub fn multiplicity(&self, w: &Weight) -> BigUint {
        self.terms.get(w).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn constituent_count(&self) -> usize {
        self.terms.len()
    }

    /// `Σ m_μ·dim(μ)`, the dimension of the underlying representation.
    pub fn total_dimension(&self) -> BigUint {
        let mut acc = BigUint::zero();
        for (w, m) in &self.terms {
            acc += dimension_of(self.system, w) * m;
        }
        acc
    }

    /// Tensors every constituent with one irreducible, expanding whichever
    /// side has the smaller weight system.
    pub fn tensor_irrep(&self, rep: &Irrep<'a>) -> Result<VirtualCharacter<'a>, WeylError> {
        check_same_system(self.system, rep.system)?;
        let rep_dim = rep.dimension();
        let mut rep_weights: Option<WeightMultiset> = None;
        let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
        for (mu, mult) in &self.terms {
            let factor = Irrep {
                system: self.system,
                highest: mu.clone(),
            };
            let partial = if factor.dimension() >= rep_dim {
                let w = rep_weights.get_or_insert_with(|| rep.weight_multiplicities());
                klimyk_shift(self.system, mu, w.entries())
            } else {
                klimyk_shift(
                    self.system,
                    rep.highest_weight(),
                    factor.weight_multiplicities().entries(),
                )
            };
            let m = BigInt::from_biguint(Sign::Plus, mult.clone());
            for (w, c) in partial {
                let entry = acc.entry(w).or_insert_with(BigInt::zero);
                *entry += BigInt::from_biguint(Sign::Plus, c) * &m;
            }
        }
        Ok(VirtualCharacter {
            system: self.system,
            terms: finalize_signed(acc),
        })
    }

    /// Tensor product of two decomposed characters.
    pub fn tensor_virtual(
        &self,
        other: &VirtualCharacter<'a>,
    ) -> Result<VirtualCharacter<'a>, WeylError> {
        let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
        for (nu, n) in &other.terms {
            let rep = Irrep {
                system: other.system,
                highest: nu.clone(),
            };
            let partial = self.tensor_irrep(&rep)?;
            let n = BigInt::from_biguint(Sign::Plus, n.clone());
            for (w, c) in partial.terms {
                let entry = acc.entry(w).or_insert_with(BigInt::zero);
                *entry += BigInt::from_biguint(Sign::Plus, c) * &n;
            }
        }
        Ok(VirtualCharacter {
            system: self.system,
            terms: finalize_signed(acc),
        })
    }

    /// Serializes as a list of `{"weight": [...], "mult": n}` objects sorted
    /// lexicographically by weight.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, m)| {
                json!({
                    "weight": w.coords(),
                    "mult": serde_json::Number::from_string_unchecked(m.to_string()),
                })
            })
            .collect();
        serde_json::Value::Array(items)
    }
}

/// Collapses a signed accumulation into positive multiplicities; exact
/// cancellations disappear, negative totals are impossible for genuine
/// characters.
fn finalize_signed(terms: BTreeMap<Weight, BigInt>) -> BTreeMap<Weight, BigUint> {
    let mut out = BTreeMap::new();
    for (w, m) in terms {
        match m.sign() {
            Sign::NoSign => {}
            Sign::Plus => {
                out.insert(w, m.to_biguint().expect("positive"));
            }
            Sign::Minus => panic!("negative multiplicity {m} at {w}: decomposition bug"),
        }
    }
    out
}

/// The Brauer–Klimyk shift of `anchor` by a weight multiset: for each weight
/// `ν`, reduce `anchor + ν + δ` strictly to the dominant chamber and
/// accumulate `sign·m_ν` at the shifted-back weight.
fn klimyk_shift(
    system: &RootSystem,
    anchor: &Weight,
    weights: &BTreeMap<Weight, BigUint>,
) -> BTreeMap<Weight, BigUint> {
    let delta = system.weyl_vector();
    let shift = anchor.add(delta);
    let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (nu, mult) in weights {
        let target = shift.add(nu);
        if let Some((dom, sign)) = system.reduce_strict(target) {
            let constituent = dom.sub(delta);
            let entry = acc.entry(constituent).or_insert_with(BigInt::zero);
            let m = BigInt::from_biguint(Sign::Plus, mult.clone());
            if sign > 0 {
                *entry += m;
            } else {
                *entry -= m;
            }
        }
    }
    finalize_signed(acc)
}

/// Weyl dimension formula for a dominant weight.
pub(crate) fn dimension_of(system: &RootSystem, highest: &Weight) -> BigUint {
    debug_assert!(highest.is_dominant());
    let delta = system.weyl_vector();
    let shifted = highest.add(delta);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for root in system.positive_roots() {
        num *= BigInt::from(system.scaled_root_inner(shifted.coords(), root));
        den *= BigInt::from(system.scaled_root_inner(delta.coords(), root));
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero(), "Weyl dimension must be integral");
    let _ = r;
    q.to_biguint().expect("dimension is positive")
}

/// All dominant weights of `V_λ` with the simple-root coordinates of
/// `λ − μ`, found by walking down from `λ` along positive roots inside the
/// dominant chamber.
fn dominant_weights(system: &RootSystem, highest: &Weight) -> Vec<(Weight, Vec<i64>)> {
    let rank = system.rank();
    let mut seen: HashMap<Weight, Vec<i64>> = HashMap::new();
    seen.insert(highest.clone(), vec![0; rank]);
    let mut queue: Vec<Weight> = vec![highest.clone()];
    while let Some(mu) = queue.pop() {
        let dist = seen[&mu].clone();
        for root in system.positive_roots() {
            let next = mu.sub(root.weight());
            if !next.is_dominant() || seen.contains_key(&next) {
                continue;
            }
            let mut nd = dist.clone();
            for (d, c) in nd.iter_mut().zip(root.simple_coords()) {
                *d += c;
            }
            seen.insert(next.clone(), nd);
            queue.push(next);
        }
    }
    let mut out: Vec<(Weight, Vec<i64>)> = seen.into_iter().collect();
    out.sort_by_key(|(w, dist)| (dist.iter().sum::<i64>(), w.clone()));
    out
}

/// Freudenthal's recursion over the dominant weights, processed by
/// increasing distance from the highest weight.
fn freudenthal(system: &RootSystem, highest: &Weight) -> BTreeMap<Weight, BigUint> {
    let delta = system.weyl_vector();
    let doms = dominant_weights(system, highest);
    let mut mults: HashMap<Weight, BigUint> = HashMap::with_capacity(doms.len());
    for (mu, dist) in &doms {
        let height: i64 = dist.iter().sum();
        if height == 0 {
            mults.insert(mu.clone(), BigUint::one());
            continue;
        }
        let mut numerator = BigInt::zero();
        for root in system.positive_roots() {
            let mut nu = mu.add(root.weight());
            loop {
                let dom = system.dominant_representative(&nu);
                match mults.get(&dom) {
                    Some(m) => {
                        let scaled = system.scaled_root_inner(nu.coords(), root);
                        numerator +=
                            BigInt::from(scaled) * BigInt::from_biguint(Sign::Plus, m.clone());
                        nu = nu.add(root.weight());
                    }
                    None => break,
                }
            }
        }
        // denominator: (λ+μ+2δ, λ−μ) with λ−μ = Σ dist_i α_i
        let sum = highest.add(mu).add(&delta.scale(2));
        let den = BigInt::from(system.scaled_inner_simple_combo(sum.coords(), dist));
        let (q, r) = num_integer::Integer::div_rem(&(numerator * BigInt::from(2)), &den);
        assert!(r.is_zero(), "Freudenthal division must be exact");
        mults.insert(
            mu.clone(),
            q.to_biguint().expect("multiplicity is positive"),
        );
    }
    doms.into_iter()
        .map(|(w, _)| {
            let m = mults[&w].clone();
            (w, m)
        })
        .collect()
}

/// The Weyl orbit of a weight, generated by simple reflections.
fn weyl_orbit(system: &RootSystem, w: &Weight) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut stack = vec![w.clone()];
    seen.insert(w.clone());
    let mut out = Vec::new();
    while let Some(v) = stack.pop() {
        for i in 0..system.rank() {
            let img = system.reflect(&v, i);
            if seen.insert(img.clone()) {
                stack.push(img);
            }
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::CartanType;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse::<CartanType>().unwrap())
    }

    fn irrep<'a>(system: &'a RootSystem, coords: &[i64]) -> Irrep<'a> {
        Irrep::new(system, Weight::new(coords.to_vec())).unwrap()
    }

    fn dim_u64(system: &RootSystem, coords: &[i64]) -> u64 {
        use num_traits::ToPrimitive;
        irrep(system, coords).dimension().to_u64().unwrap()
    }

    #[test]
    fn dimensions_match_textbook_values() {
        let a1 = rs("A1");
        for n in 0..20 {
            assert_eq!(dim_u64(&a1, &[n]), (n + 1) as u64);
        }
        let a2 = rs("A2");
        assert_eq!(dim_u64(&a2, &[1, 0]), 3);
        assert_eq!(dim_u64(&a2, &[0, 1]), 3);
        assert_eq!(dim_u64(&a2, &[1, 1]), 8);
        assert_eq!(dim_u64(&a2, &[2, 0]), 6);
        assert_eq!(dim_u64(&a2, &[3, 0]), 10);
        let b2 = rs("B2");
        assert_eq!(dim_u64(&b2, &[1, 0]), 5);
        assert_eq!(dim_u64(&b2, &[0, 1]), 4);
        assert_eq!(dim_u64(&b2, &[1, 1]), 16);
        let g2 = rs("G2");
        assert_eq!(dim_u64(&g2, &[1, 0]), 7);
        assert_eq!(dim_u64(&g2, &[0, 1]), 14);
        let b3 = rs("B3");
        assert_eq!(dim_u64(&b3, &[1, 0, 0]), 7);
        assert_eq!(dim_u64(&b3, &[0, 0, 1]), 8);
        let f4 = rs("F4");
        assert_eq!(dim_u64(&f4, &[0, 0, 0, 1]), 26);
        assert_eq!(dim_u64(&f4, &[1, 0, 0, 0]), 52);
        let e8 = rs("E8");
        assert_eq!(dim_u64(&e8, &[0; 8]), 1);
        // adjoint of E8 sits at the end of the chain in Bourbaki numbering
        assert_eq!(dim_u64(&e8, &[0, 0, 0, 0, 0, 0, 0, 1]), 248);
    }

    #[test]
    fn dimension_of_delta_power_family() {
        // A_{n−1} with λ = kδ has dimension (k+1)^{n(n−1)/2}
        for (n, k) in [(2usize, 3i64), (3, 1), (3, 4), (4, 2)] {
            let sys = RootSystem::new(CartanType::simple(crate::root_system::Family::A, n - 1).unwrap());
            let lam = Weight::new(vec![k; n - 1]);
            let dim = Irrep::new(&sys, lam).unwrap().dimension();
            let expected = BigUint::from((k + 1) as u64).pow((n * (n - 1) / 2) as u32);
            assert_eq!(dim, expected, "n={n} k={k}");
        }
    }

    #[test]
    fn non_dominant_is_rejected() {
        let a2 = rs("A2");
        assert!(matches!(
            Irrep::new(&a2, Weight::new(vec![-1, 0])),
            Err(WeylError::NotDominant(_))
        ));
        assert!(matches!(
            Irrep::new(&a2, Weight::new(vec![1])),
            Err(WeylError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn weight_multiplicities_a1() {
        let a1 = rs("A1");
        let rep = irrep(&a1, &[2]);
        let wm = rep.weight_multiplicities();
        assert_eq!(wm.len(), 3);
        for c in [-2i64, 0, 2] {
            assert_eq!(wm.multiplicity(&Weight::new(vec![c])), BigUint::one());
        }
        assert_eq!(wm.total(), BigUint::from(3u32));
    }

    #[test]
    fn adjoint_zero_weight_multiplicity_equals_rank() {
        for t in ["A2", "B2", "G2"] {
            let sys = rs(t);
            // adjoint = highest root; for these types the highest root is the
            // unique positive root of maximal height
            let adjoint = sys.positive_roots().last().unwrap().weight().clone();
            let rep = Irrep::new(&sys, adjoint).unwrap();
            let wm = rep.weight_multiplicities();
            assert_eq!(
                wm.multiplicity(&Weight::zero(sys.rank())),
                BigUint::from(sys.rank()),
                "type {t}"
            );
            assert_eq!(wm.total(), rep.dimension(), "type {t}");
        }
    }

    #[test]
    fn highest_weight_has_multiplicity_one() {
        let g2 = rs("G2");
        for coords in [[1, 0], [0, 1], [2, 1], [1, 2]] {
            let rep = irrep(&g2, &coords);
            let wm = rep.weight_multiplicities();
            assert_eq!(wm.multiplicity(rep.highest_weight()), BigUint::one());
        }
    }

    #[test]
    fn freudenthal_total_matches_dimension() {
        for (t, coords) in [
            ("A2", vec![2, 2]),
            ("B2", vec![1, 2]),
            ("G2", vec![1, 1]),
            ("A3", vec![1, 0, 2]),
            ("B3", vec![0, 1, 1]),
            ("A1xA1", vec![3, 2]),
        ] {
            let sys = rs(t);
            let rep = Irrep::new(&sys, Weight::new(coords)).unwrap();
            assert_eq!(rep.weight_multiplicities().total(), rep.dimension(), "{t}");
        }
    }

    #[test]
    fn weyl_orbit_symmetry_of_multiplicities() {
        let b2 = rs("B2");
        let rep = irrep(&b2, &[2, 1]);
        let wm = rep.weight_multiplicities();
        for (w, m) in wm.entries() {
            for i in 0..2 {
                let img = b2.reflect(w, i);
                assert_eq!(wm.multiplicity(&img), m.clone());
            }
        }
    }

    #[test]
    fn a1_clebsch_gordan_closed_form() {
        let a1 = rs("A1");
        for n in 0..=50i64 {
            let rep = irrep(&a1, &[n]);
            let sq = rep.tensor(&rep).unwrap();
            assert_eq!(sq.constituent_count(), (n + 1) as usize);
            for i in 0..=n {
                assert_eq!(sq.multiplicity(&Weight::new(vec![2 * i])), BigUint::one());
            }
        }
    }

    #[test]
    fn tensor_with_trivial_is_identity() {
        let g2 = rs("G2");
        let rep = irrep(&g2, &[1, 1]);
        let triv = irrep(&g2, &[0, 0]);
        let prod = rep.tensor(&triv).unwrap();
        assert_eq!(prod.constituent_count(), 1);
        assert_eq!(prod.multiplicity(rep.highest_weight()), BigUint::one());
    }

    #[test]
    fn a2_fundamental_times_dual() {
        let a2 = rs("A2");
        let v = irrep(&a2, &[1, 0]);
        let dual = irrep(&a2, &[0, 1]);
        let prod = v.tensor(&dual).unwrap();
        assert_eq!(prod.constituent_count(), 2);
        assert_eq!(prod.multiplicity(&Weight::new(vec![1, 1])), BigUint::one());
        assert_eq!(prod.multiplicity(&Weight::new(vec![0, 0])), BigUint::one());
        assert_eq!(prod.total_dimension(), BigUint::from(9u32));
    }

    #[test]
    fn a2_fundamental_squared() {
        // 3 ⊗ 3 = 6 ⊕ 3̄
        let a2 = rs("A2");
        let v = irrep(&a2, &[1, 0]);
        let sq = v.tensor(&v).unwrap();
        assert_eq!(sq.constituent_count(), 2);
        assert_eq!(sq.multiplicity(&Weight::new(vec![2, 0])), BigUint::one());
        assert_eq!(sq.multiplicity(&Weight::new(vec![0, 1])), BigUint::one());
    }

    #[test]
    fn tensor_commutes() {
        let g2 = rs("G2");
        let x = irrep(&g2, &[2, 0]);
        let y = irrep(&g2, &[0, 1]);
        let xy = x.tensor(&y).unwrap();
        let yx = y.tensor(&x).unwrap();
        assert_eq!(xy.terms(), yx.terms());
    }

    #[test]
    fn cartan_component_has_multiplicity_one() {
        for (t, a, b) in [
            ("A2", vec![2, 1], vec![1, 1]),
            ("B2", vec![1, 2], vec![2, 0]),
            ("G2", vec![1, 1], vec![0, 2]),
        ] {
            let sys = rs(t);
            let x = Irrep::new(&sys, Weight::new(a.clone())).unwrap();
            let y = Irrep::new(&sys, Weight::new(b.clone())).unwrap();
            let prod = x.tensor(&y).unwrap();
            let cartan = Weight::new(a.iter().zip(&b).map(|(p, q)| p + q).collect());
            assert_eq!(prod.multiplicity(&cartan), BigUint::one(), "{t}");
            assert_eq!(
                prod.total_dimension(),
                x.dimension() * y.dimension(),
                "dimension conservation in {t}"
            );
        }
    }

    #[test]
    fn tensor_rejects_mismatched_systems() {
        let a2 = rs("A2");
        let b2 = rs("B2");
        let x = irrep(&a2, &[1, 0]);
        let y = irrep(&b2, &[1, 0]);
        assert!(matches!(
            x.tensor(&y),
            Err(WeylError::SystemMismatch(..))
        ));
    }

    #[test]
    fn power_examples() {
        let a1 = rs("A1");
        let chi1 = irrep(&a1, &[1]);
        // χ₁⁴ = 2χ₀ + 3χ₂ + χ₄
        let p4 = chi1.power(4);
        assert_eq!(p4.multiplicity(&Weight::new(vec![0])), BigUint::from(2u32));
        assert_eq!(p4.multiplicity(&Weight::new(vec![2])), BigUint::from(3u32));
        assert_eq!(p4.multiplicity(&Weight::new(vec![4])), BigUint::one());
        assert_eq!(p4.constituent_count(), 3);

        let chi3 = irrep(&a1, &[3]);
        assert_eq!(chi3.power(2).terms(), chi3.tensor(&chi3).unwrap().terms());
        let p1 = chi3.power(1);
        assert_eq!(p1.constituent_count(), 1);
        assert_eq!(p1.multiplicity(&Weight::new(vec![3])), BigUint::one());
        let p0 = chi3.power(0);
        assert_eq!(p0.constituent_count(), 1);
        assert_eq!(p0.multiplicity(&Weight::new(vec![0])), BigUint::one());
    }

    #[test]
    fn power_preserves_dimension() {
        let b2 = rs("B2");
        let rep = irrep(&b2, &[1, 1]);
        let d = rep.dimension();
        for k in 0..=3u32 {
            assert_eq!(rep.power(k).total_dimension(), d.pow(k));
        }
    }

    #[test]
    fn brauer_family_examples() {
        let a1 = rs("A1");
        let rep = irrep(&a1, &[3]);
        let fam = rep.brauer_family(0).unwrap();
        let coords: Vec<i64> = fam.iter().map(|w| w.coords()[0]).collect();
        assert_eq!(coords, vec![6, 4, 2, 0]);

        let triv = irrep(&a1, &[0]);
        assert_eq!(triv.brauer_family(0).unwrap(), vec![Weight::new(vec![0])]);

        let a2 = rs("A2");
        let rep = irrep(&a2, &[2, 0]);
        let fam = rep.brauer_family(0).unwrap();
        assert_eq!(
            fam,
            vec![
                Weight::new(vec![4, 0]),
                Weight::new(vec![2, 1]),
                Weight::new(vec![0, 2])
            ]
        );
        assert!(rep.brauer_family(5).is_err());
    }

    #[test]
    fn brauer_family_members_occur_in_square() {
        for (t, coords) in [("A2", vec![2, 1]), ("B2", vec![1, 2]), ("G2", vec![2, 2])] {
            let sys = rs(t);
            let rep = Irrep::new(&sys, Weight::new(coords)).unwrap();
            let sq = rep.power(2);
            for i in 0..sys.rank() {
                for w in rep.brauer_family(i).unwrap() {
                    assert!(w.is_dominant());
                    assert!(
                        !sq.multiplicity(&w).is_zero(),
                        "{t}: {w} missing from the square"
                    );
                }
            }
        }
    }

    #[test]
    fn virtual_character_json_is_sorted() {
        let a1 = rs("A1");
        let rep = irrep(&a1, &[2]);
        let sq = rep.tensor(&rep).unwrap();
        let v = sq.to_json();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 3);
        assert_eq!(arr[0]["weight"][0], 0);
        assert_eq!(arr[2]["weight"][0], 4);
        assert_eq!(arr[0]["mult"], serde_json::json!(1));
    }
}
