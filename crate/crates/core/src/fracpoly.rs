//! Sparse polynomials with nonnegative rational exponents.
//!
//! A [`FracExpPoly`] is an element of `Z[t^(1/m)]`. It is stored as a map
//! from integer keys `k` to coefficients over an explicit denominator `m`, so
//! the term `c * t^(k/m)` is the monomial `c * s^k` with `s = t^(1/m)`.
//! Every value is kept in canonical form: no zero coefficients and
//! `gcd(m, keys) = 1`, which makes structural equality semantic equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FracExpPoly {
    denom: u64,
    terms: BTreeMap<u64, BigInt>,
}

impl Default for FracExpPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl FracExpPoly {
    pub fn zero() -> Self {
        Self {
            denom: 1,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `coeff * t^(num/den)`.
    ///
    /// Panics if `den` is zero.
    pub fn monomial(coeff: impl Into<BigInt>, num: u64, den: u64) -> Self {
        Self::from_terms(den, [(num, coeff.into())])
    }

    /// Builds `sum c * t^(k/denom)`; repeated keys are summed.
    ///
    /// Panics if `denom` is zero.
    pub fn from_terms<I, C>(denom: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, C)>,
        C: Into<BigInt>,
    {
        assert!(denom > 0, "denominator must be positive");
        let mut map: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (k, c) in terms {
            *map.entry(k).or_default() += c.into();
        }
        Self::canonical(denom, map)
    }

    fn canonical(denom: u64, mut terms: BTreeMap<u64, BigInt>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        if terms.is_empty() {
            return Self::zero();
        }
        let g = terms.keys().fold(denom, |g, &k| g.gcd(&k));
        if g > 1 {
            terms = terms.into_iter().map(|(k, c)| (k / g, c)).collect();
        }
        Self {
            denom: denom / g,
            terms,
        }
    }

    /// The common denominator `m` of the exponents.
    pub fn denom(&self) -> u64 {
        self.denom
    }

    /// Terms as `(k, c)` meaning `c * t^(k/denom)`, ascending in `k`.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// Terms with their exponents as reduced fractions, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (Ratio<u64>, &BigInt)> + '_ {
        self.terms
            .iter()
            .map(move |(&k, c)| (Ratio::new(k, self.denom), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `t^(num/den)`.
    pub fn coeff(&self, num: u64, den: u64) -> BigInt {
        if (num * self.denom) % den != 0 {
            return BigInt::zero();
        }
        let k = num * self.denom / den;
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    /// Largest exponent, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<Ratio<u64>> {
        self.terms
            .keys()
            .next_back()
            .map(|&k| Ratio::new(k, self.denom))
    }

    /// Keys rescaled to denominator `m`; `self.denom` must divide `m`.
    fn keys_over(&self, m: u64) -> impl Iterator<Item = (u64, &BigInt)> + '_ {
        let scale = m / self.denom;
        self.terms.iter().map(move |(&k, c)| (k * scale, c))
    }

    /// Multiplies by `t^(num/den)`.
    pub fn shift(&self, num: u64, den: u64) -> Self {
        self * &Self::monomial(1, num, den)
    }

    /// Exact quotient `self / den`.
    ///
    /// Both operands are rewritten over the lcm of their denominators and
    /// divided as univariate polynomials in `s`.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        let Some((&lead_key, lead_coeff)) = den.terms.iter().next_back() else {
            return Err(Error::DivisionByZero);
        };
        let m = self.denom.lcm(&den.denom);
        let divisor: Vec<(u64, BigInt)> = den.keys_over(m).map(|(k, c)| (k, c.clone())).collect();
        let lead_key = lead_key * (m / den.denom);
        let lead_coeff = lead_coeff.clone();

        let mut rem: BTreeMap<u64, BigInt> =
            self.keys_over(m).map(|(k, c)| (k, c.clone())).collect();
        let mut quot: BTreeMap<u64, BigInt> = BTreeMap::new();
        while let Some((&k, c)) = rem.iter().next_back() {
            if k < lead_key {
                break;
            }
            let (q, r) = c.div_rem(&lead_coeff);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let shift = k - lead_key;
            for (dk, dc) in &divisor {
                let key = dk + shift;
                let entry = rem.entry(key).or_default();
                *entry -= &q * dc;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            *quot.entry(shift).or_default() += q;
        }
        if !rem.is_empty() {
            return Err(Error::NotDivisible);
        }
        Ok(Self::canonical(m, quot))
    }

    /// Reduces modulo `t + 1`, i.e. modulo `s^m + 1` with `s = t^(1/m)`.
    ///
    /// Returns the unique representative whose keys over `m` are all below
    /// `m` (all exponents in `[0, 1)`).
    pub fn reduce_mod_t_plus_1(&self, m: u64) -> Result<Self> {
        if m == 0 || m % self.denom != 0 {
            return Err(Error::DenominatorMismatch {
                denom: self.denom,
                m,
            });
        }
        let mut out: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (k, c) in self.keys_over(m) {
            let (wraps, r) = k.div_rem(&m);
            let entry = out.entry(r).or_default();
            if wraps % 2 == 0 {
                *entry += c;
            } else {
                *entry -= c;
            }
        }
        Ok(Self::canonical(m, out))
    }

    /// Evaluates at `t = exp(pi i ell)` with the branch `t^a = exp(pi i ell a)`.
    ///
    /// For odd `ell` this is the evaluation of `Q(s)` at a root of
    /// `s^m = -1`. Floating point, for cross-checks only.
    pub fn eval_unit(&self, ell: i64) -> Complex64 {
        let two_m = 2 * self.denom as i128;
        self.terms
            .iter()
            .map(|(&k, c)| {
                let phase = (ell as i128 * k as i128).rem_euclid(two_m);
                let angle = std::f64::consts::PI * phase as f64 / self.denom as f64;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }

    /// Value at `t = 1`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_negative_coefficient(&self) -> Option<&BigInt> {
        self.terms.values().find(|c| c.is_negative())
    }

    fn binary_over_lcm(&self, other: &Self, negate_other: bool) -> Self {
        let m = self.denom.lcm(&other.denom);
        let mut map: BTreeMap<u64, BigInt> =
            self.keys_over(m).map(|(k, c)| (k, c.clone())).collect();
        for (k, c) in other.keys_over(m) {
            let e = map.entry(k).or_default();
            if negate_other {
                *e -= c;
            } else {
                *e += c;
            }
        }
        Self::canonical(m, map)
    }
}

impl Add for &FracExpPoly {
    type Output = FracExpPoly;
    fn add(self, rhs: &FracExpPoly) -> FracExpPoly {
        self.binary_over_lcm(rhs, false)
    }
}

impl Sub for &FracExpPoly {
    type Output = FracExpPoly;
    fn sub(self, rhs: &FracExpPoly) -> FracExpPoly {
        self.binary_over_lcm(rhs, true)
    }
}

impl Mul for &FracExpPoly {
    type Output = FracExpPoly;
    fn mul(self, rhs: &FracExpPoly) -> FracExpPoly {
        let m = self.denom.lcm(&rhs.denom);
        let mut map: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (k1, c1) in self.keys_over(m) {
            for (k2, c2) in rhs.keys_over(m) {
                *map.entry(k1 + k2).or_default() += c1 * c2;
            }
        }
        FracExpPoly::canonical(m, map)
    }
}

impl Neg for &FracExpPoly {
    type Output = FracExpPoly;
    fn neg(self) -> FracExpPoly {
        FracExpPoly {
            denom: self.denom,
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for FracExpPoly {
            type Output = FracExpPoly;
            fn $method(self, rhs: FracExpPoly) -> FracExpPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FracExpPoly {
    type Output = FracExpPoly;
    fn neg(self) -> FracExpPoly {
        -&self
    }
}

impl fmt::Display for FracExpPoly {
    /// Renders `c1*t^(a/b) + ...` in ascending exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exp, c)) in self.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if exp.is_zero() {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            if exp.is_one() {
                f.write_str("t")?;
            } else if exp.is_integer() {
                write!(f, "t^{}", exp.numer())?;
            } else {
                write!(f, "t^({}/{})", exp.numer(), exp.denom())?;
            }
        }
        Ok(())
    }
}

impl FromStr for FracExpPoly {
    type Err = Error;

    /// Parses the grammar produced by `Display`; whitespace is ignored and
    /// exponents may be written `t^k`, `t^(k)` or `t^(a/b)`.
    fn from_str(s: &str) -> Result<Self> {
        let normalized: Vec<char> = s
            .chars()
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        TermParser {
            chars: normalized,
            pos: 0,
        }
        .parse()
    }
}

struct TermParser {
    chars: Vec<char>,
    pos: usize,
}

impl TermParser {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.err("invalid number"))
    }

    fn small(&mut self) -> Result<u64> {
        let n = self.number()?;
        n.to_u64().ok_or_else(|| self.err("exponent too large"))
    }

    fn exponent(&mut self) -> Result<(u64, u64)> {
        if self.eat('(') {
            let num = self.small()?;
            let den = if self.eat('/') { self.small()? } else { 1 };
            self.expect(')')?;
            if den == 0 {
                return Err(self.err("zero exponent denominator"));
            }
            Ok((num, den))
        } else {
            Ok((self.small()?, 1))
        }
    }

    fn term(&mut self) -> Result<(BigInt, u64, u64)> {
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.number()?;
            if !self.eat('*') {
                return Ok((c, 0, 1));
            }
            c
        } else {
            BigInt::one()
        };
        if !self.eat('t') {
            return Err(self.err("expected 't'"));
        }
        let (num, den) = if self.eat('^') {
            self.exponent()?
        } else {
            (1, 1)
        };
        Ok((coeff, num, den))
    }

    fn parse(mut self) -> Result<FracExpPoly> {
        let mut terms = Vec::new();
        let mut negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        loop {
            let (c, num, den) = self.term()?;
            terms.push((if negative { -c } else { c }, num, den));
            match self.peek() {
                None => break,
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.pos += 1;
        }
        let m = terms.iter().fold(1u64, |m, &(_, _, den)| m.lcm(&den));
        Ok(FracExpPoly::from_terms(
            m,
            terms.into_iter().map(|(c, num, den)| (num * (m / den), c)),
        ))
    }
}

/// Integer rendered as a JSON number when it fits in `i64`, else a string.
pub(crate) fn bigint_json(n: &BigInt) -> serde_json::Value {
    match n.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(n.to_string()),
    }
}

struct Terms<'a>(&'a FracExpPoly);

impl Serialize for Terms<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (exp, c) in self.0.iter() {
            seq.serialize_element(&serde_json::json!({
                "num": exp.numer(),
                "den": exp.denom(),
                "coeff": bigint_json(c),
            }))?;
        }
        seq.end()
    }
}

impl Serialize for FracExpPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("denom", &self.denom)?;
        map.serialize_entry("terms", &Terms(self))?;
        map.serialize_entry("text", &self.to_string())?;
        map.end()
    }
}
