//! Exact arithmetic in cyclotomic fields `ℚ(ζ_n)`.
//!
//! A value is a sparse rational combination of roots of unity `Σ c_e ζ_n^e`.
//! Sums and products only shuffle exponents (lifting to the lcm conductor
//! when needed), so the hot paths never touch polynomial division. Canonical
//! form uses the tensor-product basis over the prime-power components of the
//! conductor: writing `n = q_1⋯q_r` with `q_i = p_i^{k_i}`, every `ζ_n^e`
//! factors as `Π ζ_{q_i}^{b_i}`, and the relation
//! `Σ_{t<p} ζ_q^{x + t·q/p} = 0` rewrites each factor until its top base-`p`
//! digit is at most `p−2`. The surviving exponents form a `ℚ`-basis of size
//! `φ(n)`, which makes equality, zero tests and rationality decidable.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CyclotomicError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("conductor {0} exceeds the supported bound {MAX_CONDUCTOR}")]
    ConductorTooLarge(u64),
    #[error("cannot parse {input:?} as a cyclotomic value: {reason}")]
    Parse { input: String, reason: String },
}

/// Conductors are kept small; character tables of the supported groups never
/// get anywhere near this.
pub const MAX_CONDUCTOR: u64 = 1 << 24;

/// An element of `ℚ(ζ_conductor)` as a sparse sum of roots of unity.
///
/// Invariants: exponents lie in `0..conductor`, no zero coefficients are
/// stored, and the conductor is never `≡ 2 (mod 4)` (such fields equal the
/// odd-conductor field, and construction descends automatically).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    terms: BTreeMap<u64, BigRational>,
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .map(|(p, k)| p.pow(k - 1) * (p - 1))
        .product::<u64>()
        .max(1)
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended Euclid; gcd(a, m) = 1 by construction
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m as i128) as u64
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Cyclotomic::from_rational(BigRational::one())
    }

    pub fn from_integer<T: Into<BigInt>>(value: T) -> Self {
        Cyclotomic::from_rational(BigRational::from(value.into()))
    }

    pub fn from_rational(value: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(0, value);
        }
        Cyclotomic {
            conductor: 1,
            terms,
        }
    }

    /// `ζ_n^e`, with the conductor descended when `n ≡ 2 (mod 4)` or the
    /// value is rational.
    pub fn root_of_unity(n: u64, e: u64) -> Result<Self, CyclotomicError> {
        if n == 0 {
            return Err(CyclotomicError::ZeroConductor);
        }
        if n > MAX_CONDUCTOR {
            return Err(CyclotomicError::ConductorTooLarge(n));
        }
        let e = e % n;
        if n == 1 {
            return Ok(Cyclotomic::one());
        }
        if n == 2 {
            return Ok(if e == 0 {
                Cyclotomic::one()
            } else {
                Cyclotomic::from_integer(-1)
            });
        }
        if n % 4 == 2 {
            // ζ_{2m} = −ζ_m^{(m+1)/2} for odd m
            let m = n / 2;
            let sign = if e.is_multiple_of(2) {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            let exp = (e % m) * m.div_ceil(2) % m;
            let mut terms = BTreeMap::new();
            terms.insert(exp, sign);
            return Ok(Cyclotomic { conductor: m, terms });
        }
        let mut terms = BTreeMap::new();
        terms.insert(e, BigRational::one());
        Ok(Cyclotomic { conductor: n, terms })
    }

    /// Builds `Σ c_e ζ_n^e` from raw terms.
    pub fn from_terms<I>(n: u64, entries: I) -> Result<Self, CyclotomicError>
    where
        I: IntoIterator<Item = (u64, BigRational)>,
    {
        let mut acc = Cyclotomic::zero();
        for (e, c) in entries {
            let mut t = Cyclotomic::root_of_unity(n, e)?;
            t.scale_assign(&c);
            acc.add_assign_ref(&t);
        }
        Ok(acc)
    }

    /// The quadratic Gauss sum `Σ_k (k|p) ζ_p^k`, whose square is
    /// `(−1)^{(p−1)/2}·p`; powers of it give exact `√(±q)` for prime powers.
    pub fn gauss_sum(p: u64) -> Result<Self, CyclotomicError> {
        let mut terms: Vec<(u64, BigRational)> = Vec::new();
        for k in 1..p {
            let mut pow = 1u64;
            let mut base = k % p;
            let mut exp = (p - 1) / 2;
            // k^{(p−1)/2} mod p decides the Legendre symbol
            while exp > 0 {
                if exp & 1 == 1 {
                    pow = pow * base % p;
                }
                base = base * base % p;
                exp >>= 1;
            }
            let sign = if pow == 1 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            terms.push((k, sign));
        }
        Cyclotomic::from_terms(p, terms)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Raw sparse view; exponents are not necessarily in the canonical basis.
    pub fn raw_terms(&self) -> &BTreeMap<u64, BigRational> {
        &self.terms
    }

    /// Fast emptiness check: an empty term list is exactly zero. A non-empty
    /// list may still cancel to zero; use [`Cyclotomic::is_zero`] for the
    /// exact answer.
    pub fn is_raw_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().terms.is_empty()
    }

    fn lift_in_place(&mut self, n: u64) {
        if self.conductor == n {
            return;
        }
        debug_assert!(n.is_multiple_of(self.conductor));
        let f = n / self.conductor;
        let terms = std::mem::take(&mut self.terms);
        self.terms = terms.into_iter().map(|(e, c)| (e * f, c)).collect();
        self.conductor = n;
    }

    fn common_conductor(&self, other: &Cyclotomic) -> u64 {
        self.conductor.lcm(&other.conductor)
    }

    pub fn add_assign_ref(&mut self, other: &Cyclotomic) {
        let n = self.common_conductor(other);
        self.lift_in_place(n);
        let f = n / other.conductor;
        for (e, c) in &other.terms {
            let key = e * f;
            match self.terms.get_mut(&key) {
                Some(existing) => {
                    *existing += c;
                    if existing.is_zero() {
                        self.terms.remove(&key);
                    }
                }
                None => {
                    self.terms.insert(key, c.clone());
                }
            }
        }
    }

    pub fn sub_assign_ref(&mut self, other: &Cyclotomic) {
        let n = self.common_conductor(other);
        self.lift_in_place(n);
        let f = n / other.conductor;
        for (e, c) in &other.terms {
            let key = e * f;
            match self.terms.get_mut(&key) {
                Some(existing) => {
                    *existing -= c;
                    if existing.is_zero() {
                        self.terms.remove(&key);
                    }
                }
                None => {
                    self.terms.insert(key, -c.clone());
                }
            }
        }
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let mut out = self.clone();
        out.add_assign_ref(other);
        out
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        let mut out = self.clone();
        out.sub_assign_ref(other);
        out
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        if self.is_raw_zero() || other.is_raw_zero() {
            return Cyclotomic::zero();
        }
        let n = self.common_conductor(other);
        let fa = n / self.conductor;
        let fb = n / other.conductor;
        let mut terms: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = (ea * fa + eb * fb) % n;
                let c = ca * cb;
                match terms.get_mut(&e) {
                    Some(existing) => {
                        *existing += c;
                        if existing.is_zero() {
                            terms.remove(&e);
                        }
                    }
                    None => {
                        terms.insert(e, c);
                    }
                }
            }
        }
        Cyclotomic { conductor: n, terms }
    }

    pub fn scale_assign(&mut self, factor: &BigRational) {
        if factor.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= factor;
        }
    }

    pub fn scaled(&self, factor: &BigRational) -> Cyclotomic {
        let mut out = self.clone();
        out.scale_assign(factor);
        out
    }

    /// Accumulates `scale · a · conj(b)` into `self` without building
    /// intermediates; the workhorse of character inner products.
    pub fn add_scaled_product(
        &mut self,
        a: &Cyclotomic,
        b_conjugated: &Cyclotomic,
        conjugate_b: bool,
        scale: &BigRational,
    ) {
        if a.is_raw_zero() || b_conjugated.is_raw_zero() || scale.is_zero() {
            return;
        }
        let n = self
            .conductor
            .lcm(&a.conductor)
            .lcm(&b_conjugated.conductor);
        self.lift_in_place(n);
        let fa = n / a.conductor;
        let fb = n / b_conjugated.conductor;
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b_conjugated.terms {
                let eb = if conjugate_b {
                    (b_conjugated.conductor - eb) % b_conjugated.conductor
                } else {
                    *eb
                };
                let e = (ea * fa + eb * fb) % n;
                let c = ca * cb * scale;
                match self.terms.get_mut(&e) {
                    Some(existing) => {
                        *existing += c;
                        if existing.is_zero() {
                            self.terms.remove(&e);
                        }
                    }
                    None => {
                        self.terms.insert(e, c);
                    }
                }
            }
        }
    }

    /// Complex conjugation `ζ^e ↦ ζ^{−e}`.
    pub fn conjugate(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ((self.conductor - e) % self.conductor, c.clone()))
                .collect(),
        }
    }

    /// Rewrites into the canonical tensor-product basis. Idempotent; the
    /// result represents the same number with exponents whose top base-`p`
    /// digit is `≤ p−2` in every prime-power component.
    pub fn canonical(&self) -> Cyclotomic {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor;
        let comps: Vec<(u64, u64)> = prime_factors(n)
            .into_iter()
            .map(|(p, k)| (p, p.pow(k)))
            .collect();
        // u_i = n/q_i, v_i = u_i⁻¹ mod q_i; ζ_n^e = Π ζ_{q_i}^{e·v_i}
        let parts: Vec<(u64, u64, u64, u64)> = comps
            .iter()
            .map(|&(p, q)| {
                let u = n / q;
                let v = if q == 1 { 0 } else { mod_inverse(u % q, q) };
                (p, q, u, v)
            })
            .collect();
        let mut out: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (e, coeff) in &self.terms {
            let digits: Vec<u64> = parts.iter().map(|&(_, q, _, v)| e % q * v % q).collect();
            let mut expansion: Vec<(Vec<u64>, BigRational)> = vec![(digits, coeff.clone())];
            for (i, &(p, q, _, _)) in parts.iter().enumerate() {
                let step = q / p;
                let mut next = Vec::with_capacity(expansion.len());
                for (digits, c) in expansion {
                    if digits[i] / step <= p - 2 {
                        next.push((digits, c));
                    } else {
                        let x = digits[i] % step;
                        for t in 0..p - 1 {
                            let mut d = digits.clone();
                            d[i] = x + t * step;
                            next.push((d, -c.clone()));
                        }
                    }
                }
                expansion = next;
            }
            for (digits, c) in expansion {
                let mut exp = 0u64;
                for (d, &(_, q, u, _)) in digits.iter().zip(&parts) {
                    exp = (exp + d % q * (u % n)) % n;
                }
                match out.get_mut(&exp) {
                    Some(existing) => {
                        *existing += c;
                        if existing.is_zero() {
                            out.remove(&exp);
                        }
                    }
                    None => {
                        if !c.is_zero() {
                            out.insert(exp, c);
                        }
                    }
                }
            }
        }
        Cyclotomic {
            conductor: n,
            terms: out,
        }
    }

    /// Exact rational value, when the number is rational.
    pub fn to_rational(&self) -> Option<BigRational> {
        let canon = self.canonical();
        match canon.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (e, c) = canon.terms.iter().next().unwrap();
                if *e == 0 {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        let r = self.to_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    /// Parses the JSON scalar forms: a plain integer, or `"q(a/b)"`.
    pub fn parse_scalar(text: &str) -> Result<Self, CyclotomicError> {
        let parse_err = |reason: &str| CyclotomicError::Parse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let inner = text
            .strip_prefix("q(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| parse_err("expected q(a/b)"))?;
        let (a, b) = inner
            .split_once('/')
            .ok_or_else(|| parse_err("expected a/b inside q()"))?;
        let num: BigInt = a
            .parse()
            .map_err(|_| parse_err("bad numerator"))?;
        let den: BigInt = b
            .parse()
            .map_err(|_| parse_err("bad denominator"))?;
        if den.is_zero() {
            return Err(parse_err("zero denominator"));
        }
        Ok(Cyclotomic::from_rational(BigRational::new(num, den)))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let n = self.common_conductor(other);
        let mut a = self.clone();
        a.lift_in_place(n);
        let mut b = other.clone();
        b.lift_in_place(n);
        a.canonical().terms == b.canonical().terms
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let canon = self.canonical();
        if canon.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &canon.terms {
            if first {
                first = false;
            } else if c.is_positive() {
                write!(f, "+")?;
            }
            if *e == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "z{}^{e}", canon.conductor)?;
            } else {
                write!(f, "{c}*z{}^{e}", canon.conductor)?;
            }
        }
        Ok(())
    }
}
