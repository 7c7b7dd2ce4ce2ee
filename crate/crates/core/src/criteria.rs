//! Cobordism criteria for algebraic knots of weighted homogeneous polynomials.
//!
//! The exact test for Witt equivalence over the reals compares `P_f` and
//! `P_g` modulo `t + 1`. The remaining criteria are necessary conditions
//! (mod-2 divisor congruence, odd-multiple sets, the Fox–Milnor square
//! condition) or independent cross-checks (cotangent products, equivariant
//! signatures).
//!
//! Eigenvalues `λ = exp(-2πiα)` are keyed by the rotation number
//! `q = α mod 1`; only equality of tables matters to the criteria, so the
//! sign in the exponent is never flipped.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::divisor::{Divisor, Rotation};
use crate::error::{Error, Result};
use crate::fracpoly::FracExpPoly;
use crate::singularity::{
    char_divisor, pf_polynomial, stabilize, BrieskornExponents, WeightSystem,
};

pub const DEFAULT_COT_TOLERANCE: f64 = 1e-9;

/// Equivariant signatures `σ_λ` for `λ ≠ 1`; absent entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SignatureTable {
    entries: BTreeMap<Rotation, i64>,
}

impl SignatureTable {
    /// `σ` at rotation number `q`; always 0 at `q = 0`.
    pub fn get(&self, q: Rotation) -> i64 {
        self.entries.get(&q).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Rotation, i64)> + '_ {
        self.entries.iter().map(|(&q, &s)| (q, s))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for SignatureTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (q, s)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{q}: {s}")?;
        }
        Ok(())
    }
}

impl Serialize for SignatureTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (q, s) in self.iter() {
            seq.serialize_element(&serde_json::json!({
                "num": q.num(),
                "den": q.den(),
                "sigma": s,
            }))?;
        }
        seq.end()
    }
}

/// Steenbrink's parity formula: each term `c_α t^α` of `P_f` contributes
/// `+c_α` (`⌊α⌋` even) or `-c_α` (`⌊α⌋` odd) at `q = α mod 1`.
///
/// Only valid for an odd number of variables; stabilize first otherwise.
pub fn equivariant_signatures(ws: &WeightSystem) -> Result<SignatureTable> {
    if ws.variables() % 2 == 0 {
        return Err(Error::ParityError(ws.variables()));
    }
    let p = pf_polynomial(ws)?;
    let m = p.denom();
    let mut acc: BTreeMap<Rotation, BigInt> = BTreeMap::new();
    for (k, c) in p.terms() {
        let (floor, r) = k.div_rem(&m);
        if r == 0 {
            continue;
        }
        let entry = acc.entry(Rotation::new(r as i64, m)).or_default();
        if floor % 2 == 0 {
            *entry += c;
        } else {
            *entry -= c;
        }
    }
    let entries = acc
        .into_iter()
        .filter(|(_, s)| !s.is_zero())
        .map(|(q, s)| {
            s.to_i64()
                .map(|s| (q, s))
                .ok_or_else(|| Error::Overflow(s.to_string()))
        })
        .collect::<Result<_>>()?;
    Ok(SignatureTable { entries })
}

pub fn total_signature(tab: &SignatureTable) -> i64 {
    tab.entries.values().sum()
}

/// Canonical representative of `P_f` modulo `t + 1` (exponents in `[0, 1)`).
///
/// Two weight systems with the same number of variables are Witt
/// equivalent over the reals exactly when these agree.
pub fn witt_class(ws: &WeightSystem) -> Result<FracExpPoly> {
    let p = pf_polynomial(ws)?;
    p.reduce_mod_t_plus_1(p.denom())
}

fn same_variables(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::VariableCountMismatch { left, right })
    }
}

/// `P_f(t) ≡ P_g(t) mod t + 1`, decided exactly.
pub fn witt_equivalent_over_r(ws1: &WeightSystem, ws2: &WeightSystem) -> Result<bool> {
    same_variables(ws1.variables(), ws2.variables())?;
    let p = pf_polynomial(ws1)?;
    let q = pf_polynomial(ws2)?;
    let m = p.denom().lcm(&q.denom());
    Ok((&p - &q).reduce_mod_t_plus_1(m)?.is_zero())
}

/// `prod_j cot(π ℓ / 2a_j)`.
pub fn cot_product(e: &BrieskornExponents, ell: i64) -> f64 {
    e.exponents()
        .iter()
        .map(|&a| {
            let period = 2 * a as i64;
            let x = std::f64::consts::PI * ell.rem_euclid(period) as f64 / period as f64;
            x.cos() / x.sin()
        })
        .product()
}

/// Numerical check of `prod cot(πℓ/2a_j) = prod cot(πℓ/2b_j)` over every odd
/// `ℓ` in `[1, 2L)`, `L` the lcm of all exponents. Each factor has period
/// `2a` in `ℓ` and odd `ℓ` never hits a pole.
pub fn cot_product_test(
    e1: &BrieskornExponents,
    e2: &BrieskornExponents,
    tol: f64,
) -> Result<bool> {
    same_variables(e1.variables(), e2.variables())?;
    let l = e1
        .exponents()
        .iter()
        .chain(e2.exponents())
        .fold(1u64, |l, a| l.lcm(a)) as i64;
    Ok((1..2 * l)
        .step_by(2)
        .all(|ell| (cot_product(e1, ell) - cot_product(e2, ell)).abs() < tol))
}

/// `prod ((1/v_j)Λ_{u_j} - 1) ≡ prod ((1/v'_j)Λ_{u'_j} - 1) (mod 2)`.
pub fn mod2_divisor_congruent(ws1: &WeightSystem, ws2: &WeightSystem) -> Result<bool> {
    let d = &char_divisor(ws1)? - &char_divisor(ws2)?;
    Ok(d.mod2()?.is_empty())
}

/// Whether the sets of odd integers that are multiples of some exponent agree.
///
/// An odd `ℓ` is a multiple of `a` iff `a` is odd and `ℓ/a` is odd, so the
/// two sets agree iff every odd exponent on one side is an odd multiple of
/// an odd exponent on the other.
pub fn odd_multiples_sets_equal(e1: &BrieskornExponents, e2: &BrieskornExponents) -> bool {
    let covered = |xs: &BrieskornExponents, ys: &BrieskornExponents| {
        xs.exponents().iter().filter(|a| *a % 2 == 1).all(|&a| {
            ys.exponents()
                .iter()
                .any(|&b| b % 2 == 1 && a % b == 0 && (a / b) % 2 == 1)
        })
    };
    covered(e1, e2) && covered(e2, e1)
}

pub fn minimal_odd_exponent(e: &BrieskornExponents) -> Option<u64> {
    e.exponents().iter().copied().filter(|a| a % 2 == 1).min()
}

fn require_nonnegative(d: &Divisor) -> Result<()> {
    match d.iter().find(|(_, c)| c.is_negative()) {
        Some((r, c)) => Err(Error::NegativeMultiplicity {
            at: r.to_string(),
            coeff: c.to_string(),
        }),
        None => Ok(()),
    }
}

/// `Δ_f Δ_g` is a square: every root multiplicity of the product is even.
///
/// For conjugation-invariant divisors on roots of unity this is the
/// Fox–Milnor condition `Δ_f Δ_g = ±t^deg(γ) γ(t) γ(1/t)`.
pub fn fox_milnor_square(ws1: &WeightSystem, ws2: &WeightSystem) -> Result<bool> {
    let d1 = char_divisor(ws1)?;
    let d2 = char_divisor(ws2)?;
    require_nonnegative(&d1)?;
    require_nonnegative(&d2)?;
    Ok((&d1 + &d2).mod2()?.is_empty())
}

/// Exponents recovered from a mod-2 characteristic divisor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recovery {
    pub exponents: Vec<u64>,
    /// Some recovered exponent divides another; the answer is then not
    /// guaranteed to be unique.
    pub hypothesis_violated: bool,
}

/// Inverts `D = prod (Λ_{a_j} - 1) mod 2` for `count` factors.
///
/// Mod 2 the product is `sum_S gcd-weights · Λ_{lcm S}` over subsets `S`.
/// After peeling `a_1..a_k`, the smallest Λ-index left in
/// `D - prod_{j<=k}(Λ_{a_j} - 1)` is `a_{k+1}` whenever no exponent
/// divides another.
pub fn recover_exponents(d: &Divisor, count: usize) -> Result<Recovery> {
    if d.iter().any(|(_, c)| !c.is_one()) {
        return Err(Error::NotReducedMod2);
    }
    let unit = Divisor::unit();
    let mut partial = unit.clone();
    let mut found = Vec::with_capacity(count);
    for step in 0..count {
        let residual = (d - &partial.mod2()?).mod2()?;
        let lambdas = residual.lambda_coefficients().ok_or_else(|| {
            Error::Inconsistent(format!(
                "residual after {step} factors is not Galois invariant"
            ))
        })?;
        let next = lambdas
            .iter()
            .find(|(&a, c)| a >= 2 && c.to_integer().is_odd())
            .map(|(&a, _)| a)
            .ok_or_else(|| {
                Error::Inconsistent(format!("support exhausted after {step} of {count} factors"))
            })?;
        found.push(next);
        partial = &partial * &(&Divisor::lambda(next) - &unit);
    }
    let residual = (d - &partial.mod2()?).mod2()?;
    if !residual.is_empty() {
        return Err(Error::Inconsistent(format!(
            "nonzero residual {residual} after {count} factors"
        )));
    }
    found.sort_unstable();
    let hypothesis_violated =
        (0..found.len()).any(|i| (0..found.len()).any(|j| i != j && found[j] % found[i] == 0));
    Ok(Recovery {
        exponents: found,
        hypothesis_violated,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Cobordant,
    NotCobordant,
    UnknownHypothesisNotMet,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Cobordant => "Cobordant",
            Verdict::NotCobordant => "NotCobordant",
            Verdict::UnknownHypothesisNotMet => "UnknownHypothesisNotMet",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionReport {
    pub schema_version: u32,
    pub input_a: String,
    pub input_b: String,
    #[serde(rename = "witt_over_R")]
    pub witt_over_r: bool,
    pub cot_test: bool,
    pub mod2_congruent: bool,
    pub odd_sets_equal: bool,
    pub fox_milnor: bool,
    pub signatures_equal: bool,
    /// Both inputs were stabilized once before computing signatures.
    pub stabilized: bool,
    /// Sign `(-1)^(n+1)` relating the stabilized Seifert form to the original.
    pub seifert_sign: i32,
    pub verdict: Verdict,
    pub warnings: Vec<String>,
}

impl CriterionReport {
    pub const CSV_HEADER: [&'static str; 8] = [
        "input_a",
        "input_b",
        "witt",
        "cot",
        "mod2",
        "odd_sets",
        "fox_milnor",
        "verdict",
    ];

    pub fn csv_record(&self) -> [String; 8] {
        [
            self.input_a.clone(),
            self.input_b.clone(),
            self.witt_over_r.to_string(),
            self.cot_test.to_string(),
            self.mod2_congruent.to_string(),
            self.odd_sets_equal.to_string(),
            self.fox_milnor.to_string(),
            self.verdict.to_string(),
        ]
    }
}

fn signature_tables(
    ws1: &WeightSystem,
    ws2: &WeightSystem,
) -> Result<(SignatureTable, SignatureTable, bool)> {
    if ws1.variables() % 2 == 1 {
        Ok((
            equivariant_signatures(ws1)?,
            equivariant_signatures(ws2)?,
            false,
        ))
    } else {
        Ok((
            equivariant_signatures(&stabilize(ws1))?,
            equivariant_signatures(&stabilize(ws2))?,
            true,
        ))
    }
}

/// Runs every criterion on two Brieskorn polynomials.
///
/// Equal exponent multisets give isotopic, hence cobordant, knots. A failed
/// necessary criterion rules cobordism out. When every criterion passes on
/// distinct multisets the answer is only settled if neither input has an
/// exponent dividing another one.
pub fn decide_brieskorn_cobordism(
    e1: &BrieskornExponents,
    e2: &BrieskornExponents,
) -> Result<CriterionReport> {
    decide_brieskorn_cobordism_with_tolerance(e1, e2, DEFAULT_COT_TOLERANCE)
}

/// As [`decide_brieskorn_cobordism`], with an explicit cotangent tolerance.
pub fn decide_brieskorn_cobordism_with_tolerance(
    e1: &BrieskornExponents,
    e2: &BrieskornExponents,
    tol: f64,
) -> Result<CriterionReport> {
    same_variables(e1.variables(), e2.variables())?;
    let (w1, w2) = (e1.to_weights(), e2.to_weights());
    let witt = witt_equivalent_over_r(&w1, &w2)?;
    let cot = cot_product_test(e1, e2, tol)?;
    let mod2 = mod2_divisor_congruent(&w1, &w2)?;
    let odd = odd_multiples_sets_equal(e1, e2);
    let fox_milnor = fox_milnor_square(&w1, &w2)?;
    let (s1, s2, stabilized) = signature_tables(&w1, &w2)?;

    let mut warnings = Vec::new();
    let seifert_sign = if stabilized {
        let sign = if e1.variables() % 2 == 1 { -1 } else { 1 };
        warnings.push(format!(
            "signatures computed after adding z^2; stabilized Seifert form is {sign:+} times the original"
        ));
        sign
    } else {
        1
    };
    for (name, e) in [("a", e1), ("b", e2)] {
        if !e.has_no_multiple() {
            warnings.push(format!(
                "input {name} ({e}) has an exponent dividing another one"
            ));
        }
    }
    if witt != cot {
        warnings.push("exact and cotangent tests disagree".into());
    }

    let verdict = if e1.sorted() == e2.sorted() {
        Verdict::Cobordant
    } else if !(witt && mod2 && odd) {
        Verdict::NotCobordant
    } else if !(e1.has_no_multiple() && e2.has_no_multiple()) {
        Verdict::UnknownHypothesisNotMet
    } else {
        warnings.push(
            "criteria pass on distinct exponents satisfying the no-multiple hypothesis".into(),
        );
        Verdict::NotCobordant
    };

    Ok(CriterionReport {
        schema_version: crate::SCHEMA_VERSION,
        input_a: e1.to_string(),
        input_b: e2.to_string(),
        witt_over_r: witt,
        cot_test: cot,
        mod2_congruent: mod2,
        odd_sets_equal: odd,
        fox_milnor,
        signatures_equal: s1 == s2,
        stabilized,
        seifert_sign,
        verdict,
        warnings,
    })
}

/// `sum 1/w_j + sum 1/w'_j - 2 min{1/w_j, 1/w'_j} < 1`, exactly.
pub fn weight_rigidity_hypothesis(ws1: &WeightSystem, ws2: &WeightSystem) -> bool {
    let inverses: Vec<BigRational> = ws1.inverse_weights().chain(ws2.inverse_weights()).collect();
    let total: BigRational = inverses.iter().sum();
    let min = inverses
        .iter()
        .min()
        .cloned()
        .unwrap_or_else(BigRational::zero);
    total - min * BigRational::from_integer(BigInt::from(2)) < BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::singularity::{char_divisor_brieskorn, parse_input};

    fn ex(v: &[u64]) -> BrieskornExponents {
        BrieskornExponents::new(v.to_vec()).unwrap()
    }

    fn ws(v: &[u64]) -> WeightSystem {
        ex(v).to_weights()
    }

    #[test]
    fn signature_examples() {
        let t = equivariant_signatures(&ws(&[2, 3, 2])).unwrap();
        assert_eq!(t.get(Rotation::new(1, 3)), -1);
        assert_eq!(t.get(Rotation::new(2, 3)), -1);
        assert_eq!(t.get(Rotation::ZERO), 0);
        assert_eq!(total_signature(&t), -2);

        let t = equivariant_signatures(&ws(&[2, 2, 2])).unwrap();
        assert_eq!(t.get(Rotation::new(1, 2)), -1);
        assert_eq!(total_signature(&t), -1);

        // P = t + 3t^(4/3) + 3t^(5/3) + t^2: integer exponents never show up.
        let t = equivariant_signatures(&ws(&[3, 3, 3])).unwrap();
        assert_eq!(t.get(Rotation::ZERO), 0);
        assert_eq!(t.len(), 2);

        assert_eq!(total_signature(&SignatureTable::default()), 0);
        assert_eq!(
            equivariant_signatures(&ws(&[2, 3])),
            Err(Error::ParityError(2))
        );
    }

    #[test]
    fn witt_examples() {
        assert!(witt_equivalent_over_r(&ws(&[2, 3]), &ws(&[2, 3])).unwrap());
        assert!(!witt_equivalent_over_r(&ws(&[2, 3]), &ws(&[2, 5])).unwrap());
        assert_eq!(
            witt_equivalent_over_r(&ws(&[2, 3]), &ws(&[2])),
            Err(Error::VariableCountMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn witt_negative_example_has_numeric_witness() {
        // At ξ = exp(πi/30), a root of s^30 = -1.
        let p = pf_polynomial(&ws(&[2, 3])).unwrap();
        let q = pf_polynomial(&ws(&[2, 5])).unwrap();
        assert!((p.eval_unit(1) - q.eval_unit(1)).norm() > 0.1);
    }

    #[test]
    fn example3_witt_pin() {
        // Regression pin: the Fox–Milnor pair is not Witt equivalent over R.
        assert!(!witt_equivalent_over_r(&ws(&[8, 8, 4, 4]), &ws(&[6, 6, 6, 6])).unwrap());
    }

    #[test]
    fn cot_examples() {
        assert!(cot_product(&ex(&[3]), 3).abs() < 1e-12);
        assert!(cot_product_test(&ex(&[3]), &ex(&[3]), DEFAULT_COT_TOLERANCE).unwrap());
        assert!(cot_product_test(&ex(&[2, 3]), &ex(&[3, 2]), DEFAULT_COT_TOLERANCE).unwrap());
        assert!(!cot_product_test(&ex(&[2, 3]), &ex(&[2, 5]), DEFAULT_COT_TOLERANCE).unwrap());
        assert!((cot_product(&ex(&[2, 3]), 1) - 3f64.sqrt()).abs() < 1e-12);
        assert!((cot_product(&ex(&[2, 5]), 1) - 3.0776835).abs() < 1e-6);
        assert!(cot_product_test(&ex(&[2]), &ex(&[2, 3]), 1e-9).is_err());
    }

    #[test]
    fn mod2_examples() {
        assert!(mod2_divisor_congruent(&ws(&[2, 3, 7]), &ws(&[2, 3, 7])).unwrap());
        assert!(mod2_divisor_congruent(&ws(&[8, 8, 4, 4]), &ws(&[6, 6, 6, 6])).unwrap());
        assert!(!mod2_divisor_congruent(&ws(&[2, 3]), &ws(&[2, 5])).unwrap());
        let non_integral = parse_input("5/2,10/3").unwrap().weights();
        assert!(mod2_divisor_congruent(&non_integral, &ws(&[2, 2])).is_err());
    }

    #[test]
    fn odd_multiple_sets() {
        assert!(odd_multiples_sets_equal(&ex(&[2, 4]), &ex(&[2, 6])));
        assert!(odd_multiples_sets_equal(&ex(&[3, 4]), &ex(&[3, 8])));
        assert!(!odd_multiples_sets_equal(&ex(&[3, 5]), &ex(&[15, 2])));
        assert!(odd_multiples_sets_equal(&ex(&[3, 9]), &ex(&[3, 2])));
        assert!(!odd_multiples_sets_equal(&ex(&[3, 5]), &ex(&[3, 2])));
        assert_eq!(minimal_odd_exponent(&ex(&[2, 3, 7])), Some(3));
        assert_eq!(minimal_odd_exponent(&ex(&[2, 4, 8])), None);
        assert_eq!(minimal_odd_exponent(&ex(&[9, 3, 6])), Some(3));
    }

    /// Brute-force oracle: scan odd ℓ for zeros of the cotangent product.
    #[test]
    fn odd_multiple_sets_match_brute_force() {
        let odd_set = |e: &BrieskornExponents| -> Vec<u64> {
            (1..2000u64)
                .step_by(2)
                .filter(|l| e.exponents().iter().any(|a| l % a == 0))
                .collect()
        };
        let all: Vec<_> = (2..=9u64)
            .flat_map(|a| (a..=9).map(move |b| ex(&[a, b])))
            .collect();
        for x in &all {
            for y in &all {
                assert_eq!(
                    odd_multiples_sets_equal(x, y),
                    odd_set(x) == odd_set(y),
                    "{x} {y}"
                );
            }
        }
    }

    #[test]
    fn fox_milnor_examples() {
        assert!(fox_milnor_square(&ws(&[2, 3, 7]), &ws(&[2, 3, 7])).unwrap());
        assert!(fox_milnor_square(&ws(&[8, 8, 4, 4]), &ws(&[6, 6, 6, 6])).unwrap());
        assert!(!fox_milnor_square(&ws(&[2, 3]), &ws(&[2, 5])).unwrap());
    }

    fn mod2_of(e: &[u64]) -> Divisor {
        char_divisor_brieskorn(&ex(e)).mod2().unwrap()
    }

    #[test]
    fn recovery_examples() {
        let r = recover_exponents(&mod2_of(&[2, 3]), 2).unwrap();
        assert_eq!(r.exponents, vec![2, 3]);
        assert!(!r.hypothesis_violated);
        let r = recover_exponents(&mod2_of(&[7, 2, 3]), 3).unwrap();
        assert_eq!(r.exponents, vec![2, 3, 7]);
        assert!(matches!(
            recover_exponents(&mod2_of(&[5]), 2),
            Err(Error::Inconsistent(_))
        ));
        assert!(matches!(
            recover_exponents(&mod2_of(&[2, 3, 5]), 2),
            Err(Error::Inconsistent(_))
        ));
        assert_eq!(
            recover_exponents(&char_divisor_brieskorn(&ex(&[4, 6])), 2),
            Err(Error::NotReducedMod2)
        );
    }

    #[test]
    fn recovery_flags_multiples() {
        // (2, 4): the peeling still lands on a valid factorization.
        let r = recover_exponents(&mod2_of(&[2, 4]), 2).unwrap();
        assert_eq!(
            char_divisor_brieskorn(&ex(&r.exponents)).mod2().unwrap(),
            mod2_of(&[2, 4])
        );
        assert!(r.hypothesis_violated);
    }

    #[test]
    fn decisions() {
        let r = decide_brieskorn_cobordism(&ex(&[2, 3, 7]), &ex(&[7, 3, 2])).unwrap();
        assert_eq!(r.verdict, Verdict::Cobordant);
        assert!(
            r.witt_over_r && r.cot_test && r.mod2_congruent && r.odd_sets_equal && r.fox_milnor
        );
        assert!(r.signatures_equal && !r.stabilized);

        let r = decide_brieskorn_cobordism(&ex(&[2, 3, 7]), &ex(&[2, 3, 11])).unwrap();
        assert_eq!(r.verdict, Verdict::NotCobordant);
        assert!(!r.witt_over_r);

        // Regression pin: witt fails here, so the multiple pair never matters.
        let r = decide_brieskorn_cobordism(&ex(&[4, 6, 8]), &ex(&[4, 6, 10])).unwrap();
        assert_eq!(r.verdict, Verdict::NotCobordant);
        assert!(!r.witt_over_r);
        assert!(r.warnings.iter().any(|w| w.contains("input a")));

        let r = decide_brieskorn_cobordism(&ex(&[8, 8, 4, 4]), &ex(&[6, 6, 6, 6])).unwrap();
        assert_eq!(r.verdict, Verdict::NotCobordant);
        assert!(r.fox_milnor && r.mod2_congruent && !r.witt_over_r);
        assert!(r.stabilized);
        assert_eq!(r.seifert_sign, 1);

        let r = decide_brieskorn_cobordism(&ex(&[2, 3]), &ex(&[2, 5])).unwrap();
        assert!(r.stabilized);
        assert_eq!(r.seifert_sign, 1);
        assert!(decide_brieskorn_cobordism(&ex(&[2, 3]), &ex(&[2, 3, 5])).is_err());
    }

    #[test]
    fn report_json_fields() {
        let r = decide_brieskorn_cobordism(&ex(&[2, 3]), &ex(&[2, 5])).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        for key in [
            "witt_over_R",
            "cot_test",
            "mod2_congruent",
            "odd_sets_equal",
            "fox_milnor",
            "verdict",
            "warnings",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["verdict"], "NotCobordant");
        assert_eq!(r.csv_record()[7], "NotCobordant");
    }

    #[test]
    fn rigidity_hypothesis() {
        assert!(!weight_rigidity_hypothesis(&ws(&[2, 3]), &ws(&[2, 3])));
        assert!(weight_rigidity_hypothesis(&ws(&[5, 7]), &ws(&[5, 7])));
        assert!(!weight_rigidity_hypothesis(&ws(&[2, 2]), &ws(&[2, 2])));
    }

    #[test]
    fn signatures_bounded_by_multiplicity() {
        for e in [[2u64, 3, 5], [3, 4, 4], [2, 6, 9], [5, 5, 5]] {
            let w = ws(&e);
            let d = char_divisor(&w).unwrap();
            let t = equivariant_signatures(&w).unwrap();
            for (q, s) in t.iter() {
                let mult = d.get(q).to_integer();
                assert!(BigInt::from(s.abs()) <= mult, "{e:?} at {q}");
            }
        }
    }
}
