//! Cartan data for compact semisimple Lie groups: simple roots, positive
//! roots, the Weyl vector and the invariant inner form.
//!
//! Weights live in fundamental-weight coordinates, so a weight is dominant
//! iff all coordinates are non-negative and the pairing `⟨λ, α_i⟩` against a
//! simple coroot is just the `i`-th coordinate. Simple roots are rows of the
//! Cartan matrix in this basis. Within each simple factor long roots are
//! normalized to `(α, α) = 2`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Simple Lie type families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Validates the rank against the classification constraints.
    ///
    /// Low ranks that coincide with other families (B₁ ≅ A₁, C₂ ≅ B₂,
    /// D₃ ≅ A₃, ...) are rejected so every type has one spelling.
    fn check_rank(self, rank: usize) -> Result<(), CartanError> {
        let ok = match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(CartanError::InvalidRank {
                family: self.letter(),
                rank,
                constraint: match self {
                    Family::A => "n ≥ 1",
                    Family::B => "n ≥ 2",
                    Family::C => "n ≥ 3",
                    Family::D => "n ≥ 4",
                    Family::E => "n ∈ {6, 7, 8}",
                    Family::F => "n = 4",
                    Family::G => "n = 2",
                },
            })
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CartanError {
    #[error("rank {rank} is invalid for family {family} (requires {constraint})")]
    InvalidRank {
        family: char,
        rank: usize,
        constraint: &'static str,
    },
    #[error("empty Cartan type")]
    Empty,
    #[error("cannot parse Cartan type from {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("weight has {got} coordinates but the root system has rank {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0:?} is not a root of this system")]
    NotARoot(Weight),
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
}

/// A (possibly reducible) Cartan type: a non-empty list of simple factors.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CartanType {
    factors: Vec<(Family, usize)>,
}

impl CartanType {
    pub fn new(factors: Vec<(Family, usize)>) -> Result<Self, CartanError> {
        if factors.is_empty() {
            return Err(CartanError::Empty);
        }
        for &(family, rank) in &factors {
            family.check_rank(rank)?;
        }
        Ok(CartanType { factors })
    }

    pub fn simple(family: Family, rank: usize) -> Result<Self, CartanError> {
        CartanType::new(vec![(family, rank)])
    }

    pub fn factors(&self) -> &[(Family, usize)] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|&(_, r)| r).sum()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(family, rank)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{}{}", family.letter(), rank)?;
        }
        Ok(())
    }
}

impl FromStr for CartanType {
    type Err = CartanError;

    /// Parses strings like `"A2"`, `"b3"`, `"A1xA1"` (case-insensitive,
    /// `x` joins factors).
    fn from_str(s: &str) -> Result<Self, CartanError> {
        let parse_err = |reason: &str| CartanError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut factors = Vec::new();
        for part in s.split(['x', 'X']) {
            let part = part.trim();
            if part.is_empty() {
                return Err(parse_err("empty factor"));
            }
            let mut chars = part.chars();
            let letter = chars.next().expect("non-empty");
            let family = match letter.to_ascii_uppercase() {
                'A' => Family::A,
                'B' => Family::B,
                'C' => Family::C,
                'D' => Family::D,
                'E' => Family::E,
                'F' => Family::F,
                'G' => Family::G,
                other => {
                    return Err(parse_err(&format!("unknown family letter {other:?}")));
                }
            };
            let digits = chars.as_str();
            let rank: usize = digits
                .parse()
                .map_err(|_| parse_err(&format!("bad rank {digits:?}")))?;
            factors.push((family, rank));
        }
        CartanType::new(factors)
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A positive root, stored both in fundamental-weight coordinates and in
/// simple-root coordinates.
#[derive(Clone, Debug)]
pub struct Root {
    weight: Weight,
    simple_coords: Vec<i64>,
    // scaled linear form: scale*(x, α) = Σ_i form[i]·x_i for x in ϖ-coords
    form: Vec<i64>,
    // scale*(α, α)
    norm: i64,
    height: i64,
}

impl Root {
    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    /// Coordinates of the root in the simple-root basis.
    pub fn simple_coords(&self) -> &[i64] {
        &self.simple_coords
    }

    pub fn height(&self) -> i64 {
        self.height
    }
}

/// Cartan data of a compact semisimple Lie group, immutable after
/// construction.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    // rows = simple roots in fundamental-weight coordinates
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    weyl_vector: Weight,
    // scale·(α_i, α_i)/2, an integer for every simple root
    half_norms: Vec<i64>,
    scale: i64,
    gram: Vec<Vec<BigRational>>,
    cartan_inverse: Vec<Vec<BigRational>>,
}

/// Cartan matrix rows and half-norms `(α_i, α_i)/2` (as numerator over
/// `denom`) for one simple factor, long roots normalized to norm 2.
fn factor_data(family: Family, n: usize) -> (Vec<Vec<i64>>, Vec<i64>, i64) {
    let mut cartan = vec![vec![0i64; n]; n];
    for (i, row) in cartan.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut chain = |i: usize, j: usize| {
        cartan[i][j] = -1;
        cartan[j][i] = -1;
    };
    match family {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                chain(i, i + 1);
            }
            (cartan, vec![1; n], 1)
        }
        Family::B => {
            // last simple root short: (α_n, α_n) = 1
            for i in 0..n - 1 {
                chain(i, i + 1);
            }
            cartan[n - 2][n - 1] = -2;
            let mut half = vec![2; n];
            half[n - 1] = 1;
            (cartan, half, 2)
        }
        Family::C => {
            // last simple root long, the rest short
            for i in 0..n - 1 {
                chain(i, i + 1);
            }
            cartan[n - 1][n - 2] = -2;
            let mut half = vec![1; n];
            half[n - 1] = 2;
            (cartan, half, 2)
        }
        Family::D => {
            for i in 0..n - 2 {
                chain(i, i + 1);
            }
            chain(n - 3, n - 1);
            (cartan, vec![1; n], 1)
        }
        Family::E => {
            // Bourbaki numbering: chain 1-3-4-5-6(-7)(-8), node 2 on node 4
            let edges: &[(usize, usize)] = &[(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
            for &(i, j) in edges {
                if i < n && j < n {
                    chain(i, j);
                }
            }
            (cartan, vec![1; n], 1)
        }
        Family::F => {
            // α₁, α₂ long; α₃, α₄ short
            chain(0, 1);
            chain(1, 2);
            chain(2, 3);
            cartan[1][2] = -2;
            (cartan, vec![2, 2, 1, 1], 2)
        }
        Family::G => {
            // α₁ short, α₂ long: (α₁,α₁) = 2/3
            chain(0, 1);
            cartan[1][0] = -3;
            (cartan, vec![1, 3], 3)
        }
    }
}

/// Gauss-Jordan inverse over exact rationals. The input matrices here are
/// Cartan matrices, always invertible.
fn invert_rational(m: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= p.clone();
            inv[col][j] /= p.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let av = a[col][j].clone() * f.clone();
                    a[r][j] -= av;
                    let iv = inv[col][j].clone() * f.clone();
                    inv[r][j] -= iv;
                }
            }
        }
    }
    inv
}

impl RootSystem {
    /// Builds the full Cartan data for a type. Positive roots are generated
    /// from the simple roots by closure under root-string addition.
    pub fn new(cartan_type: CartanType) -> Self {
        let rank = cartan_type.rank();

        // Assemble block-diagonal Cartan matrix and half-norm data.
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut half_raw: Vec<(i64, i64)> = Vec::with_capacity(rank); // (numerator, factor denom)
        let mut scale: i64 = 1;
        let mut offset = 0;
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        for &(family, n) in cartan_type.factors() {
            let (block, half, denom) = factor_data(family, n);
            for i in 0..n {
                for j in 0..n {
                    cartan[offset + i][offset + j] = block[i][j];
                }
            }
            for &h in &half {
                half_raw.push((h, denom));
            }
            scale = num_integer::lcm(scale, denom);
            blocks.push((offset, n));
            offset += n;
        }
        // half_norms[i] = scale·(α_i, α_i)/2
        let half_norms: Vec<i64> = half_raw.iter().map(|&(h, d)| h * (scale / d)).collect();

        // Positive roots by closure: q = p − ⟨β, α_i⟩ ≥ 1 means β + α_i is a
        // root, where p counts how far the string extends downwards.
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut roots: Vec<(Vec<i64>, Vec<i64>)> = Vec::new(); // (ϖ-coords, simple coords)
        for i in 0..rank {
            let mut sc = vec![0i64; rank];
            sc[i] = 1;
            index.insert(cartan[i].clone(), roots.len());
            roots.push((cartan[i].clone(), sc));
        }
        let mut queue: VecDeque<usize> = (0..rank).collect();
        while let Some(r) = queue.pop_front() {
            for i in 0..rank {
                let (beta, beta_sc) = roots[r].clone();
                let pairing = beta[i];
                let mut p = 0i64;
                let mut down: Vec<i64> = beta
                    .iter()
                    .zip(&cartan[i])
                    .map(|(b, a)| b - a)
                    .collect();
                while index.contains_key(&down) {
                    p += 1;
                    down = down
                        .iter()
                        .zip(&cartan[i])
                        .map(|(b, a)| b - a)
                        .collect();
                }
                if p - pairing >= 1 {
                    let up: Vec<i64> = beta
                        .iter()
                        .zip(&cartan[i])
                        .map(|(b, a)| b + a)
                        .collect();
                    if !index.contains_key(&up) {
                        let mut sc = beta_sc.clone();
                        sc[i] += 1;
                        index.insert(up.clone(), roots.len());
                        queue.push_back(roots.len());
                        roots.push((up, sc));
                    }
                }
            }
        }

        let mut positive_roots: Vec<Root> = roots
            .into_iter()
            .map(|(w, sc)| {
                let form: Vec<i64> = (0..rank).map(|i| sc[i] * half_norms[i]).collect();
                let weight = Weight::new(w);
                let norm: i64 = weight
                    .coords()
                    .iter()
                    .zip(&form)
                    .map(|(c, f)| c * f)
                    .sum();
                let height: i64 = sc.iter().sum();
                Root {
                    weight,
                    simple_coords: sc,
                    form,
                    norm,
                    height,
                }
            })
            .collect();
        positive_roots.sort_by(|a, b| {
            a.height
                .cmp(&b.height)
                .then_with(|| a.weight.cmp(&b.weight))
        });

        // Gram matrix of fundamental weights: (ϖ_i, ϖ_k) = (C⁻¹)_{ki}·d_i,
        // assembled per factor.
        let mut gram = vec![vec![BigRational::zero(); rank]; rank];
        let mut cartan_inverse = vec![vec![BigRational::zero(); rank]; rank];
        for &(off, n) in &blocks {
            let block: Vec<Vec<BigRational>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| BigRational::from(BigInt::from(cartan[off + i][off + j])))
                        .collect()
                })
                .collect();
            let inv = invert_rational(&block);
            let scale_rat = BigRational::from(BigInt::from(scale));
            for i in 0..n {
                for k in 0..n {
                    cartan_inverse[off + i][off + k] = inv[i][k].clone();
                    // d_i = half_norms[i]/scale
                    gram[off + i][off + k] = inv[k][i].clone()
                        * BigRational::from(BigInt::from(half_norms[off + i]))
                        / scale_rat.clone();
                }
            }
        }

        RootSystem {
            weyl_vector: Weight::new(vec![1; rank]),
            cartan_type,
            rank,
            cartan,
            positive_roots,
            half_norms,
            scale,
            gram,
            cartan_inverse,
        }
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Rows are the simple roots in fundamental-weight coordinates.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_root(&self, i: usize) -> Result<Weight, CartanError> {
        if i >= self.rank {
            return Err(CartanError::IndexOutOfRange {
                index: i,
                rank: self.rank,
            });
        }
        Ok(Weight::new(self.cartan[i].clone()))
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn weyl_vector(&self) -> &Weight {
        &self.weyl_vector
    }

    fn check_dims(&self, w: &Weight) -> Result<(), CartanError> {
        if w.len() != self.rank {
            return Err(CartanError::DimensionMismatch {
                expected: self.rank,
                got: w.len(),
            });
        }
        Ok(())
    }

    /// The common denominator scale of the inner form: `scale·(x, α)` is an
    /// integer for integer weights and roots.
    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// `scale·(x, α)` for a positive root, an exact integer.
    pub(crate) fn scaled_root_inner(&self, x: &[i64], root: &Root) -> i64 {
        x.iter().zip(&root.form).map(|(c, f)| c * f).sum()
    }

    /// `scale·(α, α)` for a positive root.
    pub fn scaled_root_norm(&self, root: &Root) -> i64 {
        root.norm
    }

    /// `scale·(x, Σ c_i α_i)` for integer simple-root coordinates `c`.
    pub(crate) fn scaled_inner_simple_combo(&self, x: &[i64], combo: &[i64]) -> i64 {
        combo
            .iter()
            .zip(&self.half_norms)
            .zip(x)
            .map(|((c, h), xi)| c * h * xi)
            .sum()
    }

    /// The invariant symmetric bilinear form on the weight space.
    pub fn inner(&self, x: &Weight, y: &Weight) -> Result<BigRational, CartanError> {
        self.check_dims(x)?;
        self.check_dims(y)?;
        let mut acc = BigRational::zero();
        for (i, &xi) in x.coords().iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.coords().iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                acc += self.gram[i][j].clone() * BigRational::from(BigInt::from(xi * yj));
            }
        }
        Ok(acc)
    }

    /// `⟨λ, α⟩ = 2(λ, α)/(α, α)` for `α` a root (positive or negative) of
    /// this system.
    pub fn pairing(&self, lambda: &Weight, alpha: &Weight) -> Result<BigRational, CartanError> {
        self.check_dims(lambda)?;
        self.check_dims(alpha)?;
        let neg = alpha.scale(-1);
        let (root, sign) = match self
            .positive_roots
            .iter()
            .find(|r| r.weight == *alpha)
        {
            Some(r) => (r, 1),
            None => match self.positive_roots.iter().find(|r| r.weight == neg) {
                Some(r) => (r, -1),
                None => return Err(CartanError::NotARoot(alpha.clone())),
            },
        };
        let num = 2 * sign * self.scaled_root_inner(lambda.coords(), root);
        Ok(BigRational::new(
            BigInt::from(num),
            BigInt::from(root.norm),
        ))
    }

    /// Simple reflection `s_i(w) = w − ⟨w, α_i⟩ α_i`, a coordinate operation.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let c = w.coords()[i];
        if c == 0 {
            return w.clone();
        }
        Weight::new(
            w.coords()
                .iter()
                .zip(&self.cartan[i])
                .map(|(x, a)| x - c * a)
                .collect(),
        )
    }

    /// The dominant Weyl-chamber representative of a weight.
    pub fn dominant_representative(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        loop {
            match cur.coords().iter().position(|&c| c < 0) {
                Some(i) => cur = self.reflect(&cur, i),
                None => return cur,
            }
        }
    }

    /// Reduces `w` to the dominant chamber tracking the sign of the Weyl
    /// element used; returns `None` when the orbit touches a wall (some
    /// coordinate hits zero), the discard case of the Brauer–Klimyk rule.
    pub(crate) fn reduce_strict(&self, w: Weight) -> Option<(Weight, i8)> {
        let mut cur = w;
        let mut sign = 1i8;
        loop {
            let mut neg = None;
            for (i, &c) in cur.coords().iter().enumerate() {
                if c == 0 {
                    return None;
                }
                if c < 0 && neg.is_none() {
                    neg = Some(i);
                }
            }
            match neg {
                Some(i) => {
                    cur = self.reflect(&cur, i);
                    sign = -sign;
                }
                None => return Some((cur, sign)),
            }
        }
    }

    /// Coordinates of a weight in the simple-root basis (exact rationals).
    pub fn root_coordinates(&self, w: &Weight) -> Result<Vec<BigRational>, CartanError> {
        self.check_dims(w)?;
        // w = c·C in row convention, so c = w·C⁻¹
        Ok((0..self.rank)
            .map(|j| {
                let mut acc = BigRational::zero();
                for (i, &wi) in w.coords().iter().enumerate() {
                    if wi != 0 {
                        acc += self.cartan_inverse[i][j].clone()
                            * BigRational::from(BigInt::from(wi));
                    }
                }
                acc
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("A2".parse::<CartanType>().unwrap().to_string(), "A2");
        assert_eq!("a1xg2".parse::<CartanType>().unwrap().to_string(), "A1xG2");
        assert!("H3".parse::<CartanType>().is_err());
        assert!("A0".parse::<CartanType>().is_err());
        assert!("".parse::<CartanType>().is_err());
        assert!("A".parse::<CartanType>().is_err());
    }

    #[test]
    fn rank_constraints() {
        assert!(CartanType::simple(Family::B, 1).is_err());
        assert!(CartanType::simple(Family::C, 2).is_err());
        assert!(CartanType::simple(Family::D, 3).is_err());
        assert!(CartanType::simple(Family::E, 5).is_err());
        assert!(CartanType::simple(Family::F, 3).is_err());
        assert!(CartanType::simple(Family::G, 3).is_err());
        assert!(CartanType::simple(Family::E, 8).is_ok());
        let err = CartanType::simple(Family::C, 2).unwrap_err();
        assert!(err.to_string().contains("n ≥ 3"));
    }

    #[test]
    fn positive_root_counts() {
        // A₁ is the rank-1 sanity case; the rest are the classical counts.
        for (t, count) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("A1xA1", 2),
            ("A2xB2", 7),
        ] {
            assert_eq!(rs(t).positive_roots().len(), count, "type {t}");
        }
    }

    #[test]
    fn weyl_vector_is_half_sum_of_positive_roots() {
        for t in ["A1", "A2", "B2", "B3", "C3", "D4", "G2", "F4", "E6"] {
            let sys = rs(t);
            let mut sum = vec![0i64; sys.rank()];
            for r in sys.positive_roots() {
                for (s, c) in sum.iter_mut().zip(r.weight().coords()) {
                    *s += c;
                }
            }
            let twice_delta: Vec<i64> = sys.weyl_vector().coords().iter().map(|c| 2 * c).collect();
            assert_eq!(sum, twice_delta, "type {t}");
        }
    }

    #[test]
    fn pairing_of_simple_roots_recovers_cartan_matrix() {
        for t in ["A2", "B3", "C3", "D4", "G2", "F4", "E6", "A1xG2"] {
            let sys = rs(t);
            for i in 0..sys.rank() {
                let ai = sys.simple_root(i).unwrap();
                for j in 0..sys.rank() {
                    let aj = sys.simple_root(j).unwrap();
                    let p = sys.pairing(&ai, &aj).unwrap();
                    assert_eq!(
                        p,
                        BigRational::from(BigInt::from(sys.cartan_matrix()[i][j])),
                        "type {t} entry ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn long_roots_have_norm_two() {
        for t in ["A2", "B3", "C3", "G2", "F4"] {
            let sys = rs(t);
            let norms: std::collections::BTreeSet<i64> = sys
                .positive_roots()
                .iter()
                .map(|r| sys.scaled_root_norm(r))
                .collect();
            let max = *norms.iter().max().unwrap();
            assert_eq!(max, 2 * sys.scale(), "long norm is 2 in type {t}");
            assert!(norms.len() <= 2, "at most two root lengths in type {t}");
        }
    }

    #[test]
    fn reflection_closure() {
        for t in ["A2", "B2", "G2", "F4", "A1xA1"] {
            let sys = rs(t);
            for r in sys.positive_roots() {
                for i in 0..sys.rank() {
                    let image = sys.reflect(r.weight(), i);
                    let neg = image.scale(-1);
                    let hit = sys
                        .positive_roots()
                        .iter()
                        .any(|s| *s.weight() == image || *s.weight() == neg);
                    assert!(hit, "reflected root stays a root in {t}");
                }
            }
        }
    }

    #[test]
    fn inner_form_examples() {
        let a1 = rs("A1");
        let delta = a1.weyl_vector().clone();
        let alpha = a1.simple_root(0).unwrap();
        // (δ, α) = (α, α)/2 = 1 in rank 1
        assert_eq!(
            a1.inner(&delta, &alpha).unwrap(),
            BigRational::from(BigInt::from(1))
        );
        assert_eq!(
            a1.inner(&alpha, &alpha).unwrap(),
            BigRational::from(BigInt::from(2))
        );

        let a2 = rs("A2");
        let w1 = Weight::new(vec![1, 0]);
        let a = a2.simple_root(0).unwrap();
        let b = a2.simple_root(1).unwrap();
        assert_eq!(
            a2.pairing(&w1, &a).unwrap(),
            BigRational::from(BigInt::from(1))
        );
        assert_eq!(a2.pairing(&w1, &b).unwrap(), BigRational::zero());
    }

    #[test]
    fn pairing_examples() {
        let b3 = rs("B3");
        let lam = Weight::new(vec![2, 5, 7]);
        for i in 0..3 {
            let ai = b3.simple_root(i).unwrap();
            assert_eq!(
                b3.pairing(&lam, &ai).unwrap(),
                BigRational::from(BigInt::from(lam.coords()[i]))
            );
            assert_eq!(
                b3.pairing(b3.weyl_vector(), &ai).unwrap(),
                BigRational::from(BigInt::from(1))
            );
            assert_eq!(
                b3.pairing(&Weight::zero(3), &ai).unwrap(),
                BigRational::zero()
            );
        }
        let not_root = Weight::new(vec![1, 1, 1]);
        assert!(matches!(
            b3.pairing(&lam, &not_root),
            Err(CartanError::NotARoot(_))
        ));
    }

    #[test]
    fn inner_symmetry_and_positivity() {
        use num_traits::Signed;
        let g2 = rs("G2");
        let xs = [
            Weight::new(vec![1, 0]),
            Weight::new(vec![0, 1]),
            Weight::new(vec![3, -2]),
            Weight::new(vec![-1, 4]),
        ];
        for x in &xs {
            for y in &xs {
                assert_eq!(g2.inner(x, y).unwrap(), g2.inner(y, x).unwrap());
            }
            if !x.is_zero() {
                assert!(g2.inner(x, x).unwrap().is_positive());
            }
        }
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a2 = rs("A2");
        let bad = Weight::new(vec![1]);
        assert!(matches!(
            a2.inner(&bad, &bad),
            Err(CartanError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn dominant_representative_fixes_dominant() {
        let b2 = rs("B2");
        let w = Weight::new(vec![2, 1]);
        assert_eq!(b2.dominant_representative(&w), w);
        let img = b2.reflect(&b2.reflect(&w, 0), 1);
        assert_eq!(b2.dominant_representative(&img), w);
    }

    #[test]
    fn root_coordinates_of_roots_are_integral() {
        let f4 = rs("F4");
        for r in f4.positive_roots() {
            let rc = f4.root_coordinates(r.weight()).unwrap();
            for (exact, &stored) in rc.iter().zip(r.simple_coords()) {
                assert_eq!(*exact, BigRational::from(BigInt::from(stored)));
            }
        }
    }

    #[test]
    fn semisimple_types_are_direct_sums() {
        let prod = rs("A1xA1");
        assert_eq!(prod.rank(), 2);
        assert_eq!(prod.cartan_matrix()[0], vec![2, 0]);
        assert_eq!(prod.cartan_matrix()[1], vec![0, 2]);
        assert_eq!(prod.weyl_vector().coords(), &[1, 1]);
        // inner form is block diagonal
        let w1 = Weight::new(vec![1, 0]);
        let w2 = Weight::new(vec![0, 1]);
        assert_eq!(prod.inner(&w1, &w2).unwrap(), BigRational::zero());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn inner_form_is_symmetric_and_bilinear(
                x in prop::collection::vec(-5i64..=5, 2),
                y in prop::collection::vec(-5i64..=5, 2),
                z in prop::collection::vec(-5i64..=5, 2),
            ) {
                let g2 = rs("G2");
                let (x, y, z) = (Weight::new(x), Weight::new(y), Weight::new(z));
                prop_assert_eq!(g2.inner(&x, &y).unwrap(), g2.inner(&y, &x).unwrap());
                prop_assert_eq!(
                    g2.inner(&x.add(&y), &z).unwrap(),
                    g2.inner(&x, &z).unwrap() + g2.inner(&y, &z).unwrap()
                );
            }

            #[test]
            fn pairing_against_simple_roots_reads_coordinates(
                coords in prop::collection::vec(-6i64..=6, 3),
                i in 0usize..3,
            ) {
                let b3 = rs("B3");
                let lam = Weight::new(coords);
                let alpha = b3.simple_root(i).unwrap();
                prop_assert_eq!(
                    b3.pairing(&lam, &alpha).unwrap(),
                    BigRational::from(BigInt::from(lam.coords()[i]))
                );
            }

            #[test]
            fn reflections_preserve_the_form(
                x in prop::collection::vec(-5i64..=5, 2),
                i in 0usize..2,
            ) {
                let b2 = rs("B2");
                let x = Weight::new(x);
                let rx = b2.reflect(&x, i);
                prop_assert_eq!(b2.inner(&x, &x).unwrap(), b2.inner(&rx, &rx).unwrap());
            }
        }
    }
}
