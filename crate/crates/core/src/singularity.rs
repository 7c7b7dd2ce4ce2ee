//! Weight systems, Brieskorn exponents and their classical invariants.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::divisor::{CyclotomicProduct, Divisor};
use crate::error::{Error, Result};
use crate::fracpoly::FracExpPoly;

/// A weight `u/v` in lowest terms with `u/v >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    u: u64,
    v: u64,
}

impl Weight {
    /// Reduces `u/v`; fails unless `u/v >= 2`.
    pub fn new(u: u64, v: u64) -> Result<Self> {
        if v == 0 {
            return Err(Error::Validation {
                position: 0,
                message: "weight has zero denominator".into(),
            });
        }
        let g = u.gcd(&v);
        let (u, v) = (u / g, v / g);
        if u < 2 * v {
            return Err(Error::Validation {
                position: 0,
                message: format!("weight {u}/{v} is smaller than 2"),
            });
        }
        Ok(Self { u, v })
    }

    pub fn integer(a: u64) -> Result<Self> {
        Self::new(a, 1)
    }

    pub fn u(self) -> u64 {
        self.u
    }

    pub fn v(self) -> u64 {
        self.v
    }

    pub fn as_ratio(self) -> Ratio<u64> {
        Ratio::new_raw(self.u, self.v)
    }

    pub fn is_integer(self) -> bool {
        self.v == 1
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.u as u128 * other.v as u128).cmp(&(other.u as u128 * self.v as u128))
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.u, self.v)
    }
}

fn at_position(err: Error, position: usize) -> Error {
    match err {
        Error::Validation { message, .. } => Error::Validation { position, message },
        other => other,
    }
}

/// Ordered weights `(w_1, ..., w_{n+1})`, each at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    weights: Vec<Weight>,
}

impl WeightSystem {
    pub fn new(weights: Vec<Weight>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Validation {
                position: 0,
                message: "at least one weight is required".into(),
            });
        }
        Ok(Self { weights })
    }

    /// Builds from `(u, v)` pairs; errors carry the index of the bad pair.
    pub fn from_pairs(pairs: &[(u64, u64)]) -> Result<Self> {
        let weights = pairs
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| Weight::new(u, v).map_err(|e| at_position(e, i)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(weights)
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Number of variables `n + 1`.
    pub fn variables(&self) -> usize {
        self.weights.len()
    }

    pub fn sorted(&self) -> Vec<Weight> {
        let mut w = self.weights.clone();
        w.sort();
        w
    }

    /// Weights of the Thom–Sebastiani sum `f(x) + g(y)`.
    pub fn join(&self, other: &WeightSystem) -> WeightSystem {
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        WeightSystem { weights }
    }

    /// Inverse weights `1/w_j` as exact rationals.
    pub fn inverse_weights(&self) -> impl Iterator<Item = BigRational> + '_ {
        self.weights
            .iter()
            .map(|w| BigRational::new(BigInt::from(w.v), BigInt::from(w.u)))
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl Serialize for WeightSystem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[u64; 2]> = self.weights.iter().map(|w| [w.u, w.v]).collect();
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry("weights", &pairs)?;
        map.end()
    }
}

/// Exponents `(a_1, ..., a_{n+1})` of `z_1^a_1 + ... + z_{n+1}^a_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrieskornExponents {
    exponents: Vec<u64>,
}

impl BrieskornExponents {
    pub fn new(exponents: Vec<u64>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::Validation {
                position: 0,
                message: "at least one exponent is required".into(),
            });
        }
        if let Some(i) = exponents.iter().position(|&a| a < 2) {
            return Err(Error::Validation {
                position: i,
                message: format!("exponent {} is smaller than 2", exponents[i]),
            });
        }
        Ok(Self { exponents })
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn variables(&self) -> usize {
        self.exponents.len()
    }

    pub fn sorted(&self) -> Vec<u64> {
        let mut e = self.exponents.clone();
        e.sort_unstable();
        e
    }

    /// A Brieskorn polynomial is weighted homogeneous with weights equal to
    /// its exponents.
    pub fn to_weights(&self) -> WeightSystem {
        WeightSystem {
            weights: self
                .exponents
                .iter()
                .map(|&a| Weight { u: a, v: 1 })
                .collect(),
        }
    }

    /// No exponent divides another one (equal exponents count as multiples).
    pub fn has_no_multiple(&self) -> bool {
        let e = &self.exponents;
        (0..e.len()).all(|i| (0..e.len()).all(|j| i == j || e[j] % e[i] != 0))
    }

    pub fn pairwise_distinct(&self) -> bool {
        let s = self.sorted();
        s.windows(2).all(|w| w[0] != w[1])
    }

    pub fn stabilize(&self) -> Self {
        let mut exponents = self.exponents.clone();
        exponents.push(2);
        Self { exponents }
    }
}

impl fmt::Display for BrieskornExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.exponents.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl Serialize for BrieskornExponents {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry("exponents", &self.exponents)?;
        map.end()
    }
}

/// A parsed command-line input list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Exponents(BrieskornExponents),
    Weights(WeightSystem),
}

impl Input {
    pub fn weights(&self) -> WeightSystem {
        match self {
            Input::Exponents(e) => e.to_weights(),
            Input::Weights(w) => w.clone(),
        }
    }

    pub fn variables(&self) -> usize {
        match self {
            Input::Exponents(e) => e.variables(),
            Input::Weights(w) => w.variables(),
        }
    }

    pub fn as_exponents(&self) -> Option<&BrieskornExponents> {
        match self {
            Input::Exponents(e) => Some(e),
            Input::Weights(_) => None,
        }
    }
}

impl fmt::Display for Input {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Input::Exponents(e) => e.fmt(f),
            Input::Weights(w) => w.fmt(f),
        }
    }
}

impl Serialize for Input {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Input::Exponents(e) => e.serialize(serializer),
            Input::Weights(w) => w.serialize(serializer),
        }
    }
}

/// Parses `"2,3,7"` as exponents and `"5/2,3"` as weights.
///
/// A single `/` anywhere makes every item a weight. Error positions are
/// byte offsets into `text`.
pub fn parse_input(text: &str) -> Result<Input> {
    let mut items = Vec::new();
    let mut offset = 0;
    for raw in text.split(',') {
        let lead = raw.len() - raw.trim_start().len();
        items.push((offset + lead, raw.trim()));
        offset += raw.len() + 1;
    }
    let number = |s: &str, pos: usize| -> Result<u64> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse {
                position: pos,
                message: format!("expected a positive integer, found {s:?}"),
            });
        }
        s.parse().map_err(|_| Error::Parse {
            position: pos,
            message: format!("integer {s:?} is too large"),
        })
    };
    if text.contains('/') {
        let mut weights = Vec::with_capacity(items.len());
        for (pos, item) in items {
            let (u, v) = match item.split_once('/') {
                Some((u, v)) => {
                    let upos = pos;
                    let vpos = pos + u.len() + 1 + (v.len() - v.trim_start().len());
                    (number(u.trim(), upos)?, number(v.trim(), vpos)?)
                }
                None => (number(item, pos)?, 1),
            };
            weights.push(Weight::new(u, v).map_err(|e| at_position(e, pos))?);
        }
        Ok(Input::Weights(WeightSystem::new(weights)?))
    } else {
        let mut exponents = Vec::with_capacity(items.len());
        for (pos, item) in items {
            let a = number(item, pos)?;
            if a < 2 {
                return Err(Error::Validation {
                    position: pos,
                    message: format!("exponent {a} is smaller than 2"),
                });
            }
            exponents.push(a);
        }
        Ok(Input::Exponents(BrieskornExponents::new(exponents)?))
    }
}

/// `P_f(t) = prod (t - t^(1/w_j)) / (t^(1/w_j) - 1)`.
///
/// Numerator and denominator are multiplied out over `m = lcm(u_j)` and
/// divided once; individual factors need not be polynomials.
pub fn pf_polynomial(ws: &WeightSystem) -> Result<FracExpPoly> {
    let m = ws.weights.iter().fold(1u64, |m, w| m.lcm(&w.u));
    let mut num = FracExpPoly::one();
    let mut den = FracExpPoly::one();
    for w in &ws.weights {
        let e = m / w.u * w.v;
        num = &num * &FracExpPoly::from_terms(m, [(m, 1), (e, -1)]);
        den = &den * &FracExpPoly::from_terms(m, [(e, 1), (0, -1)]);
    }
    let p = num.exact_div(&den).map_err(|e| match e {
        Error::NotDivisible => Error::NotPolynomial,
        other => other,
    })?;
    if let Some(c) = p.has_negative_coefficient() {
        return Err(Error::NegativeCoefficient(c.to_string()));
    }
    Ok(p)
}

/// `mu = prod (w_j - 1)`.
pub fn milnor_number(ws: &WeightSystem) -> Result<BigInt> {
    let mu: BigRational = ws
        .weights
        .iter()
        .map(|w| BigRational::new(BigInt::from(w.u - w.v), BigInt::from(w.v)))
        .product();
    if mu.is_integer() {
        Ok(mu.to_integer())
    } else {
        Err(Error::NonIntegralMilnorNumber(mu.to_string()))
    }
}

/// Milnor–Orlik divisor `prod ((1/v_j) Λ_{u_j} - 1)`; must come out integral.
pub fn char_divisor(ws: &WeightSystem) -> Result<Divisor> {
    let unit = Divisor::unit();
    let mut d = unit.clone();
    for w in &ws.weights {
        d = &d * &(&Divisor::scaled_lambda(w.u, w.v)? - &unit);
    }
    if let Some((_, c)) = d.iter().find(|(_, c)| !c.is_integer()) {
        return Err(Error::NonIntegralCoefficient(c.to_string()));
    }
    Ok(d)
}

/// Brieskorn–Pham divisor `prod (Λ_{a_j} - 1)`.
pub fn char_divisor_brieskorn(exps: &BrieskornExponents) -> Divisor {
    let unit = Divisor::unit();
    exps.exponents
        .iter()
        .fold(unit.clone(), |d, &a| &d * &(&Divisor::lambda(a) - &unit))
}

/// Characteristic polynomial of the monodromy as a product of cyclotomic factors.
pub fn char_polynomial(ws: &WeightSystem) -> Result<CyclotomicProduct> {
    char_divisor(ws)?.to_cyclotomic()
}

/// Adds the variable `z_{n+2}^2`, i.e. appends the weight 2.
pub fn stabilize(ws: &WeightSystem) -> WeightSystem {
    let mut weights = ws.weights.clone();
    weights.push(Weight { u: 2, v: 1 });
    WeightSystem { weights }
}
