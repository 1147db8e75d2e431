//! Built-in character tables: `PSL₂(q)` for odd prime powers `q ≥ 5` and
//! extraspecial `p`-groups of order `p^{1+2n}`.
//!
//! The `PSL₂(q)` table is produced from the classical generic table of
//! `SL₂(q)` by keeping the center-trivial rows and fusing classes under
//! multiplication by the central involution. Both the intermediate `SL₂`
//! table and the quotient run through full exact validation, so a
//! transcription error in the generic values cannot survive construction.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use super::cyclotomic::Cyclotomic;
use super::table::{CharacterTable, ConjugacyClass, TableError};

fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut m = q;
            let mut f = 0;
            while m.is_multiple_of(p) {
                m /= p;
                f += 1;
            }
            return if m == 1 { Some((p, f)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// Exact `√(εq)` where `ε = (−1)^{(q−1)/2}`: the Davenport–Hasse power of
/// the quadratic Gauss sum of the base prime.
fn sqrt_eps_q(p: u64, f: u32) -> Result<Cyclotomic, TableError> {
    let g = Cyclotomic::gauss_sum(p)?;
    let mut acc = Cyclotomic::one();
    for _ in 0..f {
        acc = acc.mul(&g);
    }
    if f.is_multiple_of(2) {
        acc = acc.neg();
    }
    Ok(acc)
}

struct Sl2Data {
    classes: Vec<ConjugacyClass>,
    rows: Vec<Vec<Cyclotomic>>,
    // partner[j] = index of the class of z·g for class j of g
    partner: Vec<usize>,
    // center_trivial[i] for row i
    center_trivial: Vec<bool>,
}

/// The generic character table of `SL₂(q)`, q an odd prime power.
///
/// Classes: 1, z = −1, the unipotent classes c, d and their z-translates,
/// split torus classes a^ℓ (1 ≤ ℓ ≤ (q−3)/2) and nonsplit torus classes
/// b^m (1 ≤ m ≤ (q−1)/2). Characters: trivial, Steinberg, principal series
/// χ_i of degree q+1, discrete series θ_j of degree q−1, and the two split
/// pairs ξ₁, ξ₂ of degree (q+1)/2 and η₁, η₂ of degree (q−1)/2 whose
/// irrational values come from the Gauss sum.
fn sl2_table(q: u64) -> Result<Sl2Data, TableError> {
    let (p, f) = factor_prime_power(q).ok_or_else(|| {
        TableError::InvalidParameter(format!("{q} is not a prime power"))
    })?;
    if p == 2 || q < 5 {
        return Err(TableError::InvalidParameter(format!(
            "PSL2 builtin requires an odd prime power q ≥ 5, got {q}"
        )));
    }
    let eps: i64 = if ((q - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let s = sqrt_eps_q(p, f)?;

    let n_a = ((q - 3) / 2) as usize;
    let n_b = ((q - 1) / 2) as usize;
    let uni_size = BigUint::from((q * q - 1) / 2);

    let mut classes = vec![
        ConjugacyClass {
            size: BigUint::one(),
            label: "1".into(),
        },
        ConjugacyClass {
            size: BigUint::one(),
            label: "z".into(),
        },
        ConjugacyClass {
            size: uni_size.clone(),
            label: "c".into(),
        },
        ConjugacyClass {
            size: uni_size.clone(),
            label: "d".into(),
        },
        ConjugacyClass {
            size: uni_size.clone(),
            label: "zc".into(),
        },
        ConjugacyClass {
            size: uni_size,
            label: "zd".into(),
        },
    ];
    for l in 1..=n_a {
        classes.push(ConjugacyClass {
            size: BigUint::from(q * (q + 1)),
            label: format!("a{l}"),
        });
    }
    for m in 1..=n_b {
        classes.push(ConjugacyClass {
            size: BigUint::from(q * (q - 1)),
            label: format!("b{m}"),
        });
    }

    // class of z·g: swaps 1↔z, c↔zc, d↔zd, a^ℓ ↦ a^{(q−1)/2−ℓ},
    // b^m ↦ b^{(q+1)/2−m} (after folding into the stored range)
    let a_index = |l: usize| 6 + l - 1;
    let b_index = |m: usize| 6 + n_a + m - 1;
    let mut partner = vec![0usize; classes.len()];
    partner[0] = 1;
    partner[1] = 0;
    partner[2] = 4;
    partner[4] = 2;
    partner[3] = 5;
    partner[5] = 3;
    for l in 1..=n_a {
        let t = (q as usize - 1) / 2 - l;
        partner[a_index(l)] = a_index(t);
    }
    for m in 1..=n_b {
        let t = (q as usize).div_ceil(2) - m;
        partner[b_index(m)] = b_index(t);
    }

    let int = |v: i64| Cyclotomic::from_integer(v);
    let sign = |cond: bool| if cond { 1i64 } else { -1 };
    // ρ^{iℓ} + ρ^{−iℓ} for ρ = ζ_{q−1}
    let rho_sum = |i: u64, l: u64| -> Result<Cyclotomic, TableError> {
        let e = i * l % (q - 1);
        Ok(Cyclotomic::root_of_unity(q - 1, e)?
            .add(&Cyclotomic::root_of_unity(q - 1, (q - 1 - e) % (q - 1))?))
    };
    let sigma_sum = |j: u64, m: u64| -> Result<Cyclotomic, TableError> {
        let e = j * m % (q + 1);
        Ok(Cyclotomic::root_of_unity(q + 1, e)?
            .add(&Cyclotomic::root_of_unity(q + 1, (q + 1 - e) % (q + 1))?))
    };

    let mut rows: Vec<Vec<Cyclotomic>> = Vec::new();
    let mut center_trivial: Vec<bool> = Vec::new();

    // trivial
    rows.push(vec![Cyclotomic::one(); classes.len()]);
    center_trivial.push(true);

    // Steinberg: q on the center, 0 on unipotents, ±1 on the tori
    {
        let mut row = vec![int(q as i64), int(q as i64), int(0), int(0), int(0), int(0)];
        row.extend((1..=n_a).map(|_| int(1)));
        row.extend((1..=n_b).map(|_| int(-1)));
        rows.push(row);
        center_trivial.push(true);
    }

    // principal series χ_i, degree q+1
    for i in 1..=n_a as u64 {
        let si = sign(i % 2 == 0);
        let mut row = vec![
            int((q + 1) as i64),
            int(si * (q + 1) as i64),
            int(1),
            int(1),
            int(si),
            int(si),
        ];
        for l in 1..=n_a as u64 {
            row.push(rho_sum(i, l)?);
        }
        row.extend((1..=n_b).map(|_| int(0)));
        rows.push(row);
        center_trivial.push(si == 1);
    }

    // discrete series θ_j, degree q−1
    for j in 1..=n_b as u64 {
        let sj = sign(j % 2 == 0);
        let mut row = vec![
            int((q - 1) as i64),
            int(sj * (q - 1) as i64),
            int(-1),
            int(-1),
            int(-sj),
            int(-sj),
        ];
        row.extend((1..=n_a).map(|_| int(0)));
        for m in 1..=n_b as u64 {
            row.push(sigma_sum(j, m)?.neg());
        }
        rows.push(row);
        center_trivial.push(sj == 1);
    }

    // split principal pair ξ₁, ξ₂ of degree (q+1)/2
    for flip in [false, true] {
        let s_here = if flip { s.neg() } else { s.clone() };
        let plus = Cyclotomic::one().add(&s_here).scaled(&half());
        let minus = Cyclotomic::one().sub(&s_here).scaled(&half());
        let deg = q.div_ceil(2) as i64;
        let mut row = vec![
            int(deg),
            int(eps * deg),
            plus.clone(),
            minus.clone(),
            plus.scaled(&BigRational::from(num_bigint::BigInt::from(eps))),
            minus.scaled(&BigRational::from(num_bigint::BigInt::from(eps))),
        ];
        for l in 1..=n_a as u64 {
            row.push(int(sign(l % 2 == 0)));
        }
        row.extend((1..=n_b).map(|_| int(0)));
        rows.push(row);
        center_trivial.push(eps == 1);
    }

    // split discrete pair η₁, η₂ of degree (q−1)/2
    for flip in [false, true] {
        let s_here = if flip { s.neg() } else { s.clone() };
        let plus = s_here.sub(&Cyclotomic::one()).scaled(&half()); // (−1+s)/2
        let minus = s_here.neg().sub(&Cyclotomic::one()).scaled(&half()); // (−1−s)/2
        let deg = ((q - 1) / 2) as i64;
        let me = BigRational::from(num_bigint::BigInt::from(-eps));
        let mut row = vec![
            int(deg),
            int(-eps * deg),
            plus.clone(),
            minus.clone(),
            plus.scaled(&me),
            minus.scaled(&me),
        ];
        row.extend((1..=n_a).map(|_| int(0)));
        for m in 1..=n_b as u64 {
            row.push(int(sign(m % 2 == 1)));
        }
        rows.push(row);
        center_trivial.push(eps == -1);
    }

    Ok(Sl2Data {
        classes,
        rows,
        partner,
        center_trivial,
    })
}

/// The validated character table of `SL₂(q)` itself.
pub fn sl2(q: u64) -> Result<CharacterTable, TableError> {
    let data = sl2_table(q)?;
    CharacterTable::new(
        format!("SL2({q})"),
        BigUint::from(q * (q - 1) * (q + 1)),
        data.classes,
        data.rows,
    )
}

/// The validated character table of `PSL₂(q)` for an odd prime power
/// `q ≥ 5`, by central quotient of the `SL₂(q)` table.
pub fn psl2(q: u64) -> Result<CharacterTable, TableError> {
    let data = sl2_table(q)?;
    // validate the intermediate table as well; transcription errors die here
    CharacterTable::new(
        format!("SL2({q})"),
        BigUint::from(q * (q - 1) * (q + 1)),
        data.classes.clone(),
        data.rows.clone(),
    )?;

    // fused classes: keep the smaller index of each {j, partner(j)} pair
    let mut kept_classes = Vec::new();
    let mut class_map = Vec::new(); // indices into the SL₂ class list
    for (j, class) in data.classes.iter().enumerate() {
        let t = data.partner[j];
        if t < j {
            continue;
        }
        let size = if t == j {
            // z·g lands back in the same class: it halves in the quotient
            class.size.clone() / BigUint::from(2u32)
        } else {
            // distinct pair of equal-size classes fuses to one of that size
            class.size.clone()
        };
        kept_classes.push(ConjugacyClass {
            size,
            label: class.label.clone(),
        });
        class_map.push(j);
    }

    let mut kept_rows = Vec::new();
    for (i, row) in data.rows.iter().enumerate() {
        if !data.center_trivial[i] {
            continue;
        }
        kept_rows.push(class_map.iter().map(|&j| row[j].clone()).collect());
    }

    CharacterTable::new(
        format!("PSL2({q})"),
        BigUint::from(q * (q - 1) * (q + 1) / 2),
        kept_classes,
        kept_rows,
    )
}

/// The character table of an extraspecial group of order `p^{1+2n}`:
/// `p^{2n}` linear characters through the abelianization and `p−1`
/// characters of degree `p^n` supported on the center. (Both extraspecial
/// groups of a given order share this table.)
pub fn extraspecial(p: u64, n: u32) -> Result<CharacterTable, TableError> {
    if factor_prime_power(p) != Some((p, 1)) {
        return Err(TableError::InvalidParameter(format!("{p} is not prime")));
    }
    if n < 1 {
        return Err(TableError::InvalidParameter("n must be ≥ 1".into()));
    }
    let dim = 2 * n as usize;
    let abelian = p.checked_pow(2 * n).filter(|&a| a <= 1_000_000).ok_or_else(|| {
        TableError::InvalidParameter(format!(
            "table would have p^(2n) = {p}^{} > 10^6 linear characters",
            2 * n
        ))
    })?;
    let order = BigUint::from(p).pow(1 + 2 * n);

    // classes: the p central singletons, then one class of size p per
    // nonzero vector of the abelianization
    let mut classes = Vec::with_capacity(p as usize + abelian as usize - 1);
    classes.push(ConjugacyClass {
        size: BigUint::one(),
        label: "1".into(),
    });
    for k in 1..p {
        classes.push(ConjugacyClass {
            size: BigUint::one(),
            label: format!("z{k}"),
        });
    }
    let vectors: Vec<Vec<u64>> = {
        let mut out = Vec::with_capacity(abelian as usize);
        let mut v = vec![0u64; dim];
        'outer: loop {
            out.push(v.clone());
            let mut i = dim;
            loop {
                if i == 0 {
                    break 'outer;
                }
                i -= 1;
                if v[i] + 1 < p {
                    v[i] += 1;
                    for c in v.iter_mut().skip(i + 1) {
                        *c = 0;
                    }
                    break;
                }
            }
        }
        out
    };
    for v in vectors.iter().skip(1) {
        let digits: Vec<String> = v.iter().map(|d| d.to_string()).collect();
        classes.push(ConjugacyClass {
            size: BigUint::from(p),
            label: format!("g({})", digits.join(",")),
        });
    }

    let mut rows = Vec::with_capacity(abelian as usize + p as usize - 1);
    // linear characters, trivial first (w = 0)
    for w in &vectors {
        let mut row = Vec::with_capacity(classes.len());
        row.extend((0..p).map(|_| Cyclotomic::one()));
        for v in vectors.iter().skip(1) {
            let dot: u64 = w.iter().zip(v).map(|(a, b)| a * b % p).sum::<u64>() % p;
            row.push(Cyclotomic::root_of_unity(p, dot)?);
        }
        rows.push(row);
    }
    // the p−1 characters of degree p^n, supported on the center
    let degree = BigUint::from(p).pow(n);
    let degree_rat = BigRational::from(num_bigint::BigInt::from_biguint(
        num_bigint::Sign::Plus,
        degree,
    ));
    for u in 1..p {
        let mut row = Vec::with_capacity(classes.len());
        for k in 0..p {
            row.push(Cyclotomic::root_of_unity(p, u * k % p)?.scaled(&degree_rat));
        }
        row.extend((1..abelian).map(|_| Cyclotomic::zero()));
        rows.push(row);
    }

    CharacterTable::new(format!("extraspecial({p},{n})"), order, classes, rows)
}

/// Resolves builtin specs of the form `psl2:7` or `extraspecial:3:1`.
pub fn builtin(spec: &str) -> Result<CharacterTable, TableError> {
    let lower = spec.to_ascii_lowercase();
    let parts: Vec<&str> = lower.split(':').collect();
    match parts.as_slice() {
        ["psl2", q] => {
            let q: u64 = q
                .parse()
                .map_err(|_| TableError::InvalidParameter(format!("bad q in {spec:?}")))?;
            psl2(q)
        }
        ["sl2", q] => {
            let q: u64 = q
                .parse()
                .map_err(|_| TableError::InvalidParameter(format!("bad q in {spec:?}")))?;
            sl2(q)
        }
        ["extraspecial", p, n] => {
            let p: u64 = p
                .parse()
                .map_err(|_| TableError::InvalidParameter(format!("bad p in {spec:?}")))?;
            let n: u32 = n
                .parse()
                .map_err(|_| TableError::InvalidParameter(format!("bad n in {spec:?}")))?;
            extraspecial(p, n)
        }
        _ => Err(TableError::InvalidParameter(format!(
            "unknown builtin {spec:?} (expected psl2:<q> or extraspecial:<p>:<n>)"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees_sorted(t: &CharacterTable) -> Vec<u64> {
        use num_traits::ToPrimitive;
        let mut d: Vec<u64> = t.degrees().iter().map(|x| x.to_u64().unwrap()).collect();
        d.sort();
        d
    }

    #[test]
    fn psl2_5_is_a5() {
        let t = psl2(5).unwrap();
        assert_eq!(t.order(), &BigUint::from(60u32));
        assert_eq!(t.class_count(), 5);
        assert_eq!(degrees_sorted(&t), vec![1, 3, 3, 4, 5]);
    }

    #[test]
    fn psl2_7_shape() {
        let t = psl2(7).unwrap();
        assert_eq!(t.order(), &BigUint::from(168u32));
        assert_eq!(t.class_count(), 6);
        assert_eq!(degrees_sorted(&t), vec![1, 3, 3, 6, 7, 8]);
    }

    #[test]
    fn psl2_9_is_a6() {
        let t = psl2(9).unwrap();
        assert_eq!(t.order(), &BigUint::from(360u32));
        assert_eq!(t.class_count(), 7);
        assert_eq!(degrees_sorted(&t), vec![1, 5, 5, 8, 8, 9, 10]);
    }

    #[test]
    fn psl2_rejects_bad_q() {
        assert!(psl2(8).is_err());
        assert!(psl2(6).is_err());
        assert!(psl2(3).is_err());
        assert!(psl2(15).is_err());
    }

    #[test]
    fn steinberg_row_has_degree_q() {
        use num_traits::ToPrimitive;
        for q in [5u64, 7, 9, 11, 13] {
            let t = psl2(q).unwrap();
            let st = t
                .degrees()
                .iter()
                .position(|d| d.to_u64() == Some(q))
                .expect("St degree q present");
            // |St(g)| takes only the values q, 0, 1 across the classes
            let allowed: Vec<Cyclotomic> = vec![
                Cyclotomic::from_integer(q as i64),
                Cyclotomic::zero(),
                Cyclotomic::one(),
                Cyclotomic::from_integer(-1),
            ];
            for class in 0..t.class_count() {
                let v = t.value(st, class);
                assert!(
                    allowed.iter().any(|a| a == v),
                    "St value {v} at class {class} of q={q}"
                );
            }
        }
    }

    #[test]
    fn sl2_table_validates_too() {
        let t = sl2(7).unwrap();
        assert_eq!(t.class_count(), 11); // q + 4
        assert_eq!(t.order(), &BigUint::from(336u32));
    }

    #[test]
    fn extraspecial_small() {
        let t = extraspecial(2, 1).unwrap();
        assert_eq!(t.order(), &BigUint::from(8u32));
        assert_eq!(degrees_sorted(&t), vec![1, 1, 1, 1, 2]);

        let t = extraspecial(3, 1).unwrap();
        assert_eq!(t.order(), &BigUint::from(27u32));
        let d = degrees_sorted(&t);
        assert_eq!(d.iter().filter(|&&x| x == 1).count(), 9);
        assert_eq!(d.iter().filter(|&&x| x == 3).count(), 2);
    }

    #[test]
    fn extraspecial_guards() {
        assert!(extraspecial(4, 1).is_err());
        assert!(extraspecial(3, 0).is_err());
        assert!(extraspecial(11, 3).is_err()); // 11^6 > 10^6
    }

    #[test]
    fn builtin_spec_parsing() {
        assert!(builtin("psl2:5").is_ok());
        assert!(builtin("PSL2:5").is_ok());
        assert!(builtin("extraspecial:2:1").is_ok());
        assert!(builtin("nope").is_err());
        assert!(builtin("psl2:abc").is_err());
    }
}
