//! The group ring over roots of unity.
//!
//! A root of unity `exp(2 pi i q)` is identified by its rotation number
//! `q` in `Q/Z`, so the product `<x><y> = <xy>` becomes addition of
//! fractions mod 1. Coefficients are rationals so that formal elements such
//! as `(1/v) Λ_u` are representable; integrality is checked only where an
//! operation needs it.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fracpoly::bigint_json;

/// A reduced fraction `num/den` in `[0, 1)`, standing for `exp(2 pi i num/den)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rotation {
    num: u64,
    den: u64,
}

impl Rotation {
    pub const ZERO: Rotation = Rotation { num: 0, den: 1 };

    /// `num/den mod 1`, reduced. Panics if `den` is zero.
    pub fn new(num: i64, den: u64) -> Self {
        assert!(den > 0, "rotation denominator must be positive");
        let r = (num as i128).rem_euclid(den as i128) as u64;
        let g = r.gcd(&den);
        Rotation {
            num: r / g,
            den: den / g,
        }
    }

    /// Fractional part of a nonnegative rational.
    pub fn from_ratio(q: Ratio<u64>) -> Self {
        let den = *q.denom();
        Rotation {
            num: q.numer() % den,
            den,
        }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    /// Multiplicative order of the root of unity.
    pub fn order(self) -> u64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Add for Rotation {
    type Output = Rotation;
    fn add(self, rhs: Rotation) -> Rotation {
        let l = self.den.lcm(&rhs.den);
        let n = (self.num as u128 * (l / self.den) as u128
            + rhs.num as u128 * (l / rhs.den) as u128)
            % l as u128;
        let g = (n as u64).gcd(&l);
        Rotation {
            num: n as u64 / g,
            den: l / g,
        }
    }
}

impl Neg for Rotation {
    type Output = Rotation;
    fn neg(self) -> Rotation {
        if self.num == 0 {
            self
        } else {
            Rotation {
                num: self.den - self.num,
                den: self.den,
            }
        }
    }
}

impl Ord for Rotation {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Rotation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            f.write_str("0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// A finite formal sum `sum c_q <exp(2 pi i q)>` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Divisor {
    entries: BTreeMap<Rotation, BigRational>,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Divisor {
    pub fn new() -> Self {
        Self::default()
    }

    /// The unit `<1> = Λ_1`.
    pub fn unit() -> Self {
        Self::point(Rotation::ZERO, int(1))
    }

    pub fn point(at: Rotation, coeff: BigRational) -> Self {
        let mut d = Self::new();
        d.accumulate(at, coeff);
        d
    }

    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (Rotation, BigRational)>,
    {
        let mut d = Self::new();
        for (r, c) in entries {
            d.accumulate(r, c);
        }
        d
    }

    /// `Λ_a`, the divisor of `t^a - 1`. Panics if `a` is zero.
    pub fn lambda(a: u64) -> Self {
        assert!(a > 0, "Λ_a needs a positive index");
        Self {
            entries: (0..a)
                .map(|k| (Rotation::new(k as i64, a), int(1)))
                .collect(),
        }
    }

    /// The formal element `(1/v) Λ_u`.
    pub fn scaled_lambda(u: u64, v: u64) -> Result<Self> {
        if u == 0 || v == 0 || u.gcd(&v) != 1 {
            return Err(Error::NotCoprime { u, v });
        }
        let scale = BigRational::new(BigInt::one(), BigInt::from(v));
        Ok(Self::lambda(u).scale(&scale))
    }

    /// `sum_a c_a Λ_a`.
    pub fn from_lambda_combination<'a, I>(combination: I) -> Self
    where
        I: IntoIterator<Item = (u64, &'a BigRational)>,
    {
        let mut d = Self::new();
        for (a, c) in combination {
            for k in 0..a {
                d.accumulate(Rotation::new(k as i64, a), c.clone());
            }
        }
        d
    }

    fn accumulate(&mut self, at: Rotation, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.entries.entry(at).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.entries.remove(&at);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, at: Rotation) -> BigRational {
        self.entries
            .get(&at)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Rotation, &BigRational)> + '_ {
        self.entries.iter().map(|(&r, c)| (r, c))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::new();
        }
        Self {
            entries: self.entries.iter().map(|(&k, c)| (k, c * r)).collect(),
        }
    }

    /// Sum of all coefficients; the degree of the polynomial it divides.
    pub fn total_mass(&self) -> BigRational {
        self.entries.values().sum()
    }

    pub fn is_integral(&self) -> bool {
        self.entries.values().all(|c| c.is_integer())
    }

    fn integral_entries(&self) -> Result<impl Iterator<Item = (Rotation, BigInt)> + '_> {
        if let Some(bad) = self.entries.values().find(|c| !c.is_integer()) {
            return Err(Error::NonIntegralCoefficient(bad.to_string()));
        }
        Ok(self.entries.iter().map(|(&r, c)| (r, c.to_integer())))
    }

    /// Reduction of an integral divisor modulo 2, with coefficients in `{0, 1}`.
    pub fn mod2(&self) -> Result<Self> {
        let entries = self
            .integral_entries()?
            .filter(|(_, c)| c.is_odd())
            .map(|(r, _)| (r, int(1)))
            .collect();
        Ok(Self { entries })
    }

    /// Common coefficient of the primitive roots of each order present.
    fn order_coefficients(&self) -> Result<BTreeMap<u64, BigRational>> {
        let mut by_order: BTreeMap<u64, (usize, &BigRational)> = BTreeMap::new();
        for (r, c) in &self.entries {
            match by_order.get_mut(&r.den) {
                Some((count, first)) => {
                    if *first != c {
                        return Err(Error::NotGaloisInvariant(r.den));
                    }
                    *count += 1;
                }
                None => {
                    by_order.insert(r.den, (1, c));
                }
            }
        }
        by_order
            .into_iter()
            .map(|(d, (count, c))| {
                if count as u64 == euler_phi(d) {
                    Ok((d, c.clone()))
                } else {
                    Err(Error::NotGaloisInvariant(d))
                }
            })
            .collect()
    }

    /// Coefficients `c_a` with `self = sum c_a Λ_a`, if the divisor is
    /// Galois invariant (every such divisor is a unique Λ-combination).
    pub fn lambda_coefficients(&self) -> Option<BTreeMap<u64, BigRational>> {
        let orders = self.order_coefficients().ok()?;
        let mut out: BTreeMap<u64, BigRational> = BTreeMap::new();
        // Möbius inversion of e_d = sum_{d | a} c_a.
        for (&b, e) in &orders {
            for a in divisors(b) {
                match mobius(b / a) {
                    0 => {}
                    mu => *out.entry(a).or_insert_with(BigRational::zero) += e * int(mu),
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Some(out)
    }

    pub fn to_cyclotomic(&self) -> Result<CyclotomicProduct> {
        let orders = self.order_coefficients()?;
        let mut multiplicities = BTreeMap::new();
        for (d, e) in orders {
            if !e.is_integer() {
                return Err(Error::NonIntegralCoefficient(e.to_string()));
            }
            if e.is_negative() {
                return Err(Error::NegativeMultiplicity {
                    at: format!("order {d}"),
                    coeff: e.to_string(),
                });
            }
            let e: u64 = e
                .to_integer()
                .try_into()
                .map_err(|_| Error::Overflow(e.to_string()))?;
            multiplicities.insert(d, e);
        }
        Ok(CyclotomicProduct::new(multiplicities))
    }

    fn mul_integral(&self, rhs: &Self) -> Option<Self> {
        if !self.is_integral() || !rhs.is_integral() {
            return None;
        }
        let mut acc: BTreeMap<Rotation, BigInt> = BTreeMap::new();
        for (&r1, c1) in &self.entries {
            let c1 = c1.numer();
            for (&r2, c2) in &rhs.entries {
                *acc.entry(r1 + r2).or_default() += c1 * c2.numer();
            }
        }
        Some(Self {
            entries: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(r, c)| (r, BigRational::from_integer(c)))
                .collect(),
        })
    }
}

impl Add for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (&r, c) in &rhs.entries {
            out.accumulate(r, c.clone());
        }
        out
    }
}

impl Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (&r, c) in &rhs.entries {
            out.accumulate(r, -c);
        }
        out
    }
}

impl Neg for &Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        Divisor {
            entries: self.entries.iter().map(|(&r, c)| (r, -c)).collect(),
        }
    }
}

impl Mul for &Divisor {
    type Output = Divisor;
    /// Convolution: `<q1> <q2> = <q1 + q2 mod 1>`, extended bilinearly.
    fn mul(self, rhs: &Divisor) -> Divisor {
        if let Some(out) = self.mul_integral(rhs) {
            return out;
        }
        let mut out = Divisor::new();
        for (&r1, c1) in &self.entries {
            for (&r2, c2) in &rhs.entries {
                out.accumulate(r1 + r2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Divisor {
            type Output = Divisor;
            fn $method(self, rhs: Divisor) -> Divisor {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn write_coeff(f: &mut fmt::Formatter<'_>, first: bool, c: &BigRational) -> fmt::Result {
    match (first, c.is_negative()) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let abs = c.abs();
    if !abs.is_one() {
        write!(f, "{abs}\u{b7}")?;
    }
    Ok(())
}

impl fmt::Display for Divisor {
    /// `c·Λ_a` terms (descending `a`) when the divisor is a Λ-combination,
    /// otherwise `c·⟨k/d⟩` terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        if let Some(lambdas) = self.lambda_coefficients() {
            for (i, (a, c)) in lambdas.iter().rev().enumerate() {
                write_coeff(f, i == 0, c)?;
                write!(f, "\u{39b}_{a}")?;
            }
        } else {
            for (i, (r, c)) in self.entries.iter().enumerate() {
                write_coeff(f, i == 0, c)?;
                write!(f, "\u{27e8}{r}\u{27e9}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Divisor {
    /// A list of `{num, den, coeff_num, coeff_den}` objects.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (r, c) in &self.entries {
            seq.serialize_element(&serde_json::json!({
                "num": r.num,
                "den": r.den,
                "coeff_num": bigint_json(c.numer()),
                "coeff_den": bigint_json(c.denom()),
            }))?;
        }
        seq.end()
    }
}

/// `prod_d Φ_d(t)^(e_d)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct CyclotomicProduct {
    multiplicities: BTreeMap<u64, u64>,
}

impl CyclotomicProduct {
    pub fn new(mut multiplicities: BTreeMap<u64, u64>) -> Self {
        multiplicities.retain(|&d, e| d > 0 && *e > 0);
        Self { multiplicities }
    }

    pub fn multiplicity(&self, d: u64) -> u64 {
        self.multiplicities.get(&d).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.multiplicities.iter().map(|(&d, &e)| (d, e))
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.iter().map(|(d, e)| euler_phi(d) * e).sum()
    }

    /// Coefficients in ascending degree.
    pub fn expand(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::one()];
        for (d, e) in self.iter() {
            let phi = cyclotomic_polynomial(d);
            for _ in 0..e {
                out = dense_mul(&out, &phi);
            }
        }
        out
    }

    pub fn to_divisor(&self) -> Divisor {
        let mut out = Divisor::new();
        for (d, e) in self.iter() {
            for k in 0..d {
                if k.gcd(&d) == 1 {
                    out.accumulate(Rotation::new(k as i64, d), int(e as i64));
                }
            }
        }
        out
    }
}

impl fmt::Display for CyclotomicProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (i, (d, e)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "\u{3a6}_{d}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Coefficients of the `d`-th cyclotomic polynomial, ascending.
pub fn cyclotomic_polynomial(d: u64) -> Vec<BigInt> {
    assert!(d > 0, "cyclotomic index must be positive");
    // Φ_d = prod_{e | d} (t^e - 1)^μ(d/e)
    let binomial = |e: u64| {
        let mut v = vec![BigInt::zero(); e as usize + 1];
        v[0] = BigInt::from(-1);
        v[e as usize] = BigInt::one();
        v
    };
    let mut num = vec![BigInt::one()];
    let mut den = vec![BigInt::one()];
    for e in divisors(d) {
        match mobius(d / e) {
            1 => num = dense_mul(&num, &binomial(e)),
            -1 => den = dense_mul(&den, &binomial(e)),
            _ => {}
        }
    }
    dense_div_exact(&num, &den)
}

fn dense_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial.
fn dense_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dl = den.len() - 1;
    debug_assert!(den[dl].is_one());
    let mut quot = vec![BigInt::zero(); num.len() - dl];
    for i in (0..quot.len()).rev() {
        let q = rem[i + dl].clone();
        if q.is_zero() {
            continue;
        }
        for (j, c) in den.iter().enumerate() {
            rem[i + j] -= &q * c;
        }
        quot[i] = q;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn mobius(n: u64) -> i64 {
    let factors = prime_factors(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        0
    } else if factors.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub(crate) fn euler_phi(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn lam(a: u64) -> Divisor {
        Divisor::lambda(a)
    }

    #[test]
    fn rotation_arithmetic() {
        assert_eq!(Rotation::new(3, 6), Rotation::new(1, 2));
        assert_eq!(Rotation::new(-1, 3), Rotation::new(2, 3));
        assert_eq!(Rotation::new(1, 2) + Rotation::new(1, 2), Rotation::ZERO);
        assert_eq!(
            Rotation::new(1, 2) + Rotation::new(1, 3),
            Rotation::new(5, 6)
        );
        assert_eq!(-Rotation::new(1, 5), Rotation::new(4, 5));
        assert!(Rotation::new(1, 3) < Rotation::new(1, 2));
        assert_eq!(Rotation::new(2, 3).to_string(), "2/3");
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lam(1), Divisor::unit());
        assert_eq!(
            lam(2),
            Divisor::from_entries([(Rotation::ZERO, q(1, 1)), (Rotation::new(1, 2), q(1, 1))])
        );
        let l6 = lam(6);
        assert_eq!(l6.len(), 6);
        assert!((0..6).all(|k| l6.get(Rotation::new(k, 6)) == q(1, 1)));
    }

    #[test]
    fn scaled_lambda_examples() {
        assert_eq!(Divisor::scaled_lambda(3, 1).unwrap(), lam(3));
        let s = Divisor::scaled_lambda(5, 2).unwrap();
        assert_eq!(s.len(), 5);
        assert!(s.iter().all(|(_, c)| *c == q(1, 2)));
        assert_eq!(
            Divisor::scaled_lambda(4, 2),
            Err(Error::NotCoprime { u: 4, v: 2 })
        );
    }

    #[test]
    fn module_operations() {
        assert!((&lam(2) - &lam(2)).is_empty());
        let doubled = lam(3).scale(&q(2, 1));
        assert!(doubled.iter().all(|(_, c)| *c == q(2, 1)) && doubled.len() == 3);
        let sum = &lam(2) + &lam(3);
        let expected = Divisor::from_entries([
            (Rotation::ZERO, q(2, 1)),
            (Rotation::new(1, 2), q(1, 1)),
            (Rotation::new(1, 3), q(1, 1)),
            (Rotation::new(2, 3), q(1, 1)),
        ]);
        assert_eq!(sum, expected);
    }

    #[test]
    fn products_of_lambdas() {
        assert_eq!(&lam(2) * &lam(3), lam(6));
        assert_eq!(&lam(4) * &lam(6), lam(12).scale(&q(2, 1)));
        let x = &lam(5) - &Divisor::scaled_lambda(7, 3).unwrap();
        assert_eq!(&lam(1) * &x, x);
    }

    #[test]
    fn lambda_law_small_range() {
        for a in 1..=12u64 {
            for b in 1..=12u64 {
                let g = BigRational::from_integer(BigInt::from(a.gcd(&b)));
                assert_eq!(&lam(a) * &lam(b), lam(a.lcm(&b)).scale(&g), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn mod2_examples() {
        assert!(lam(12).scale(&q(2, 1)).mod2().unwrap().is_empty());
        let x = &(&lam(2) + &lam(2)) + &lam(3);
        assert_eq!(x.mod2().unwrap(), lam(3));
        assert!(matches!(
            Divisor::scaled_lambda(5, 2).unwrap().mod2(),
            Err(Error::NonIntegralCoefficient(_))
        ));
    }

    #[test]
    fn cyclotomic_conversion() {
        let trefoil = &(&(&lam(6) - &lam(3)) - &lam(2)) + &lam(1);
        let c = trefoil.to_cyclotomic().unwrap();
        assert_eq!(c, CyclotomicProduct::new(BTreeMap::from([(6, 1)])));
        assert_eq!(
            lam(1).to_cyclotomic().unwrap(),
            CyclotomicProduct::new(BTreeMap::from([(1, 1)]))
        );
        let lone = Divisor::point(Rotation::new(1, 5), q(1, 1));
        assert_eq!(lone.to_cyclotomic(), Err(Error::NotGaloisInvariant(5)));
        let neg = -&lam(2);
        assert!(matches!(
            neg.to_cyclotomic(),
            Err(Error::NegativeMultiplicity { .. })
        ));
    }

    #[test]
    fn cyclotomic_expansion() {
        let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let c6 = CyclotomicProduct::new(BTreeMap::from([(6, 1)]));
        assert_eq!(c6.expand(), b(&[1, -1, 1]));
        let c1 = CyclotomicProduct::new(BTreeMap::from([(1, 1)]));
        assert_eq!(c1.expand(), b(&[-1, 1]));
        assert_eq!(CyclotomicProduct::default().expand(), b(&[1]));
        assert_eq!(cyclotomic_polynomial(12), b(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(105).len() - 1, 48);
        assert_eq!(cyclotomic_polynomial(105)[7], BigInt::from(-2));
    }

    #[test]
    fn lambda_combination_text() {
        let trefoil = &(&(&lam(6) - &lam(3)) - &lam(2)) + &lam(1);
        assert_eq!(
            trefoil.to_string(),
            "\u{39b}_6 - \u{39b}_3 - \u{39b}_2 + \u{39b}_1"
        );
        assert_eq!(lam(12).scale(&q(2, 1)).to_string(), "2\u{b7}\u{39b}_12");
        assert_eq!(
            Divisor::scaled_lambda(5, 2).unwrap().to_string(),
            "1/2\u{b7}\u{39b}_5"
        );
        let lone = Divisor::point(Rotation::new(1, 5), q(-3, 1));
        assert_eq!(lone.to_string(), "-3\u{b7}\u{27e8}1/5\u{27e9}");
        assert_eq!(Divisor::new().to_string(), "0");
    }

    #[test]
    fn json_entries() {
        let v = serde_json::to_value(Divisor::scaled_lambda(2, 3).unwrap()).unwrap();
        assert_eq!(
            v,
            serde_json::json!([
                {"num": 0, "den": 1, "coeff_num": 1, "coeff_den": 3},
                {"num": 1, "den": 2, "coeff_num": 1, "coeff_den": 3},
            ])
        );
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(42), 12);
    }

    /// Multiplicity of `exp(2 pi i r)` as a root of an integer polynomial:
    /// the number of times its minimal polynomial divides it.
    fn exact_multiplicity(coeffs: &[BigInt], r: Rotation) -> u64 {
        let phi = cyclotomic_polynomial(r.order());
        let dl = phi.len() - 1;
        let mut f = coeffs.to_vec();
        let mut mult = 0;
        while f.len() > dl {
            let mut rem = f.clone();
            let mut quot = vec![BigInt::zero(); f.len() - dl];
            for i in (0..quot.len()).rev() {
                let q = rem[i + dl].clone();
                for (j, c) in phi.iter().enumerate() {
                    rem[i + j] -= &q * c;
                }
                quot[i] = q;
            }
            if !rem.iter().all(Zero::is_zero) {
                break;
            }
            f = quot;
            mult += 1;
        }
        mult
    }

    fn arbitrary_orders() -> impl Strategy<Value = BTreeMap<u64, u64>> {
        prop::collection::btree_map(1u64..=12, 1u64..=3, 0..4)
    }

    fn arb_divisor() -> impl Strategy<Value = Divisor> {
        prop::collection::vec(
            (
                (1u64..=24).prop_flat_map(|d| (0..d, Just(d))),
                -3i64..=3,
                1i64..=2,
            ),
            0..8,
        )
        .prop_map(|v| {
            Divisor::from_entries(
                v.into_iter()
                    .map(|((k, d), n, den)| (Rotation::new(k as i64, d), q(n, den))),
            )
        })
    }

    proptest! {
        #[test]
        fn multiplication_laws(x in arb_divisor(), y in arb_divisor(), z in arb_divisor()) {
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&Divisor::unit() * &x, x.clone());
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        }

        #[test]
        fn cyclotomic_round_trip(orders in arbitrary_orders()) {
            let product = CyclotomicProduct::new(orders);
            let divisor = product.to_divisor();
            prop_assert_eq!(divisor.to_cyclotomic().unwrap(), product.clone());
            let coeffs = product.expand();
            prop_assert_eq!(coeffs.len() as u64 - 1, product.degree());
            let mut total = 0;
            for (r, c) in divisor.iter() {
                let m = exact_multiplicity(&coeffs, r);
                prop_assert_eq!(BigRational::from_integer(BigInt::from(m)), c.clone());
                total += m;
            }
            prop_assert_eq!(total, product.degree());
        }

        #[test]
        fn lambda_sums_match_root_multiplicities(a in prop::collection::vec(1u64..=6, 1..=3)) {
            // Expand prod (t^a - 1) directly and compare root multiplicities.
            let mut coeffs = vec![BigInt::one()];
            let mut divisor = Divisor::new();
            for &ai in &a {
                let mut f = vec![BigInt::zero(); ai as usize + 1];
                f[0] = BigInt::from(-1);
                f[ai as usize] = BigInt::one();
                coeffs = dense_mul(&coeffs, &f);
                divisor = &divisor + &lam(ai);
            }
            let l = a.iter().fold(1, |l, x| l.lcm(x));
            for k in 0..l {
                let r = Rotation::new(k as i64, l);
                let m = exact_multiplicity(&coeffs, r);
                prop_assert_eq!(BigRational::from_integer(BigInt::from(m)), divisor.get(r));
            }
        }

        #[test]
        fn lambda_combination_round_trip(
            combo in prop::collection::btree_map(1u64..=30, (-4i64..=4, 1i64..=3), 0..6)
        ) {
            let combo: BTreeMap<u64, BigRational> = combo
                .into_iter()
                .map(|(a, (n, d))| (a, q(n, d)))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            let d = Divisor::from_lambda_combination(combo.iter().map(|(&a, c)| (a, c)));
            prop_assert_eq!(d.lambda_coefficients(), Some(combo));
        }

        #[test]
        fn lambda_coefficients_rebuild_invariant_divisors(x in arb_divisor()) {
            if let Some(c) = x.lambda_coefficients() {
                prop_assert_eq!(Divisor::from_lambda_combination(c.iter().map(|(&a, c)| (a, c))), x);
            }
        }
    }
}
