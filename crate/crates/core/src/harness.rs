//! Brute-force verification over enumerated Brieskorn tuples.
//!
//! Every run is deterministic: pairs are processed in parallel but
//! violations are merged in enumeration order, and randomized properties
//! draw from a seeded ChaCha stream.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::criteria::{
    cot_product_test, equivariant_signatures, fox_milnor_square, mod2_divisor_congruent,
    odd_multiples_sets_equal, recover_exponents, witt_equivalent_over_r, DEFAULT_COT_TOLERANCE,
};
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::fracpoly::FracExpPoly;
use crate::singularity::{
    char_divisor, char_divisor_brieskorn, milnor_number, pf_polynomial, stabilize,
    BrieskornExponents,
};

/// Violations beyond this count are tallied but not recorded individually.
pub const MAX_RECORDED_VIOLATIONS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HypothesisFilter {
    /// No exponent divides another one.
    NoMultiple,
    PairwiseDistinct,
    None,
}

impl HypothesisFilter {
    pub fn accepts(self, e: &BrieskornExponents) -> bool {
        match self {
            HypothesisFilter::NoMultiple => e.has_no_multiple(),
            HypothesisFilter::PairwiseDistinct => e.pairwise_distinct(),
            HypothesisFilter::None => true,
        }
    }
}

fn normalize_token(s: &str) -> String {
    s.chars()
        .filter(|c| !matches!(c, '-' | '_' | ' '))
        .flat_map(char::to_lowercase)
        .collect()
}

impl FromStr for HypothesisFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match normalize_token(s).as_str() {
            "nomultiple" => Ok(HypothesisFilter::NoMultiple),
            "pairwisedistinct" | "distinct" => Ok(HypothesisFilter::PairwiseDistinct),
            "none" => Ok(HypothesisFilter::None),
            _ => Err(Error::Parse {
                position: 0,
                message: format!("unknown hypothesis filter '{s}'"),
            }),
        }
    }
}

impl fmt::Display for HypothesisFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Check {
    /// Witt equivalence over R iff equal multisets, under the no-multiple hypothesis.
    Theorem2,
    TwoVar,
    ThreeVar,
    NecessityChain,
    CriterionEquivalence,
    Example3,
    /// Seeded randomized cross-checks.
    Properties,
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match normalize_token(s).as_str() {
            "theorem2" => Ok(Check::Theorem2),
            "twovar" => Ok(Check::TwoVar),
            "threevar" => Ok(Check::ThreeVar),
            "necessitychain" | "necessity" => Ok(Check::NecessityChain),
            "criterionequivalence" | "equivalence" => Ok(Check::CriterionEquivalence),
            "example3" => Ok(Check::Example3),
            "properties" | "propertysuite" => Ok(Check::Properties),
            _ => Err(Error::Parse {
                position: 0,
                message: format!("unknown check '{s}'"),
            }),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub variables: usize,
    pub max_exponent: u64,
    pub hypothesis_filter: HypothesisFilter,
    pub check: Check,
    pub seed: u64,
    pub trials: usize,
    /// Extra exponents `p_1..p_(n-3)` for [`Check::Example3`].
    #[serde(default)]
    pub ps: Vec<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            variables: 3,
            max_exponent: 12,
            hypothesis_filter: HypothesisFilter::NoMultiple,
            check: Check::Theorem2,
            seed: 0,
            trials: 200,
            ps: Vec::new(),
        }
    }
}

impl SearchConfig {
    pub fn new(check: Check, variables: usize, max_exponent: u64) -> Self {
        Self {
            check,
            variables,
            max_exponent,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |message: String| {
            Err(Error::Validation {
                position: 0,
                message,
            })
        };
        if self.variables == 0 {
            return fail("variables must be positive".into());
        }
        if self.max_exponent < 2 {
            return fail(format!(
                "max_exponent {} is smaller than 2",
                self.max_exponent
            ));
        }
        if self.trials == 0 {
            return fail("trials must be at least 1".into());
        }
        if self.check == Check::Example3 {
            if self.variables < 3 {
                return fail(format!("n = {} is smaller than 3", self.variables));
            }
            if self.ps.len() != self.variables - 3 {
                return fail(format!(
                    "expected {} extra exponents, got {}",
                    self.variables - 3,
                    self.ps.len()
                ));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub name: String,
    pub checked: u64,
    pub violations: u64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Position of the pair (or sample) in enumeration order.
    pub index: u64,
    pub property: String,
    pub input_a: String,
    pub input_b: String,
    pub detail: String,
    /// CLI invocation that recomputes the criteria for this pair.
    pub reproduce: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub config: SearchConfig,
    pub tuples: u64,
    pub pairs_checked: u64,
    pub properties: Vec<PropertyOutcome>,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
    pub elapsed_seconds: f64,
    pub pass: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per property: `property,checked,violations,pass`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["property", "checked", "violations", "pass"])
            .expect("in-memory write");
        for p in &self.properties {
            w.write_record([
                p.name.clone(),
                p.checked.to_string(),
                p.violations.to_string(),
                p.pass.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
    }

    /// One row per recorded violation.
    pub fn violations_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "index",
            "property",
            "input_a",
            "input_b",
            "detail",
            "reproduce",
        ])
        .expect("in-memory write");
        for v in &self.violations {
            w.write_record([
                v.index.to_string(),
                v.property.clone(),
                v.input_a.clone(),
                v.input_b.clone(),
                v.detail.clone(),
                v.reproduce.clone(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
    }
}

/// Nondecreasing tuples in `[2, max]^vars`, lexicographic.
pub struct Tuples {
    current: Option<Vec<u64>>,
    max: u64,
    filter: HypothesisFilter,
}

impl Iterator for Tuples {
    type Item = BrieskornExponents;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let cur = self.current.as_mut()?;
            let out = cur.clone();
            match cur.iter().rposition(|&a| a < self.max) {
                Some(i) => {
                    let v = cur[i] + 1;
                    cur[i..].iter_mut().for_each(|a| *a = v);
                }
                None => self.current = None,
            }
            let e = BrieskornExponents::new(out).expect("exponents are at least 2");
            if self.filter.accepts(&e) {
                return Some(e);
            }
        }
    }
}

pub fn enumerate_tuples(vars: usize, max: u64, filter: HypothesisFilter) -> Tuples {
    Tuples {
        current: (vars > 0 && max >= 2).then(|| vec![2; vars]),
        max,
        filter,
    }
}

struct Prepared {
    e: BrieskornExponents,
    p: FracExpPoly,
    mod2: Divisor,
}

impl Prepared {
    fn new(e: BrieskornExponents) -> Self {
        let w = e.to_weights();
        let p = pf_polynomial(&w).expect("Brieskorn P_f is a polynomial");
        let mod2 = char_divisor_brieskorn(&e).mod2().expect("integral divisor");
        Self { e, p, mod2 }
    }

    fn witt(&self, other: &Prepared) -> bool {
        let m = num_integer::lcm(self.p.denom(), other.p.denom());
        (&self.p - &other.p)
            .reduce_mod_t_plus_1(m)
            .expect("lcm is a multiple of both denominators")
            .is_zero()
    }
}

type Failure = (&'static str, String);

fn reproduce_cmd(a: &BrieskornExponents, b: &BrieskornExponents) -> String {
    format!("algknot report --a {a} --b {b}")
}

/// Tallies failures per property and records violations in index order.
struct Collector {
    names: Vec<&'static str>,
    checked: Vec<u64>,
    failed: Vec<u64>,
    violations: Vec<Violation>,
}

impl Collector {
    fn new(names: &[&'static str]) -> Self {
        Self {
            names: names.to_vec(),
            checked: vec![0; names.len()],
            failed: vec![0; names.len()],
            violations: Vec::new(),
        }
    }

    fn slot(&self, name: &str) -> usize {
        self.names
            .iter()
            .position(|n| *n == name)
            .unwrap_or_else(|| panic!("unregistered property {name}"))
    }

    fn checked(&mut self, name: &str, n: u64) {
        let i = self.slot(name);
        self.checked[i] += n;
    }

    fn fail(
        &mut self,
        index: u64,
        name: &str,
        a: String,
        b: String,
        detail: String,
        reproduce: String,
    ) {
        let i = self.slot(name);
        self.failed[i] += 1;
        if self.violations.len() < MAX_RECORDED_VIOLATIONS {
            self.violations.push(Violation {
                index,
                property: name.to_string(),
                input_a: a,
                input_b: b,
                detail,
                reproduce,
            });
        }
    }

    fn finish(
        self,
        config: SearchConfig,
        tuples: u64,
        pairs: u64,
        notes: Vec<String>,
        start: Instant,
    ) -> VerificationReport {
        let properties: Vec<PropertyOutcome> = self
            .names
            .iter()
            .zip(self.checked.iter().zip(&self.failed))
            .map(|(name, (&checked, &violations))| PropertyOutcome {
                name: name.to_string(),
                checked,
                violations,
                pass: violations == 0,
            })
            .collect();
        let pass = properties.iter().all(|p| p.pass);
        VerificationReport {
            schema_version: crate::SCHEMA_VERSION,
            config,
            tuples,
            pairs_checked: pairs,
            properties,
            violations: self.violations,
            notes,
            elapsed_seconds: start.elapsed().as_secs_f64(),
            pass,
        }
    }
}

/// Runs `check` on all unordered pairs `i <= j` of each tuple batch.
fn run_pairs<F>(
    batches: &[Vec<Prepared>],
    names: &[&'static str],
    check: F,
    c: &mut Collector,
) -> u64
where
    F: Fn(&Prepared, &Prepared, bool) -> Vec<Failure> + Sync,
{
    let mut offset = 0u64;
    for tuples in batches {
        let n = tuples.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let results: Vec<Vec<Failure>> = pairs
            .par_iter()
            .map(|&(i, j)| check(&tuples[i], &tuples[j], i == j))
            .collect();
        for name in names {
            c.checked(name, pairs.len() as u64);
        }
        for (k, (failures, &(i, j))) in results.into_iter().zip(&pairs).enumerate() {
            let (a, b) = (&tuples[i].e, &tuples[j].e);
            for (name, detail) in failures {
                c.fail(
                    offset + k as u64,
                    name,
                    a.to_string(),
                    b.to_string(),
                    detail,
                    reproduce_cmd(a, b),
                );
            }
        }
        offset += pairs.len() as u64;
    }
    offset
}

fn prepare(vars: usize, max: u64, filter: HypothesisFilter) -> Vec<Prepared> {
    let tuples: Vec<_> = enumerate_tuples(vars, max, filter).collect();
    tuples.into_par_iter().map(Prepared::new).collect()
}

fn ensure_check(cfg: &SearchConfig, allowed: &[Check]) -> Result<()> {
    cfg.validate()?;
    if allowed.contains(&cfg.check) {
        Ok(())
    } else {
        Err(Error::Validation {
            position: 0,
            message: format!("check {} is not handled here", cfg.check),
        })
    }
}

/// Under the no-multiple hypothesis, Witt equivalence over R holds exactly
/// for equal multisets. The hypothesis filter is always `NoMultiple`.
pub fn verify_theorem2(cfg: &SearchConfig) -> Result<VerificationReport> {
    ensure_check(cfg, &[Check::Theorem2])?;
    let start = Instant::now();
    let mut config = cfg.clone();
    config.hypothesis_filter = HypothesisFilter::NoMultiple;
    let batch = prepare(
        cfg.variables,
        cfg.max_exponent,
        HypothesisFilter::NoMultiple,
    );
    let tuples = batch.len() as u64;
    const NAME: &str = "witt_iff_equal_multisets";
    let mut c = Collector::new(&[NAME]);
    let pairs = run_pairs(
        &[batch],
        &[NAME],
        |a, b, same| {
            let witt = a.witt(b);
            if witt != same {
                vec![(
                    NAME,
                    format!("witt_over_R = {witt}, equal multisets = {same}"),
                )]
            } else {
                vec![]
            }
        },
        &mut c,
    );
    Ok(c.finish(config, tuples, pairs, vec![], start))
}

/// With two or three variables and no hypothesis, Witt equivalence over R
/// still forces equal multisets. The variable count comes from the check.
pub fn verify_low_variables(cfg: &SearchConfig) -> Result<VerificationReport> {
    ensure_check(cfg, &[Check::TwoVar, Check::ThreeVar])?;
    let start = Instant::now();
    let mut config = cfg.clone();
    config.variables = if cfg.check == Check::TwoVar { 2 } else { 3 };
    config.hypothesis_filter = HypothesisFilter::None;
    let batch = prepare(config.variables, cfg.max_exponent, HypothesisFilter::None);
    let tuples = batch.len() as u64;
    const NAME: &str = "witt_implies_equal_multisets";
    let mut c = Collector::new(&[NAME]);
    let pairs = run_pairs(
        &[batch],
        &[NAME],
        |a, b, same| {
            if !same && a.witt(b) {
                vec![(NAME, "witt_over_R holds for distinct multisets".into())]
            } else {
                vec![]
            }
        },
        &mut c,
    );
    Ok(c.finish(config, tuples, pairs, vec![], start))
}

fn batches_up_to(cfg: &SearchConfig) -> Vec<Vec<Prepared>> {
    (1..=cfg.variables)
        .map(|v| prepare(v, cfg.max_exponent, cfg.hypothesis_filter))
        .collect()
}

/// Witt over R implies mod-2 congruence and equal odd-multiple sets, for
/// every variable count up to `cfg.variables`.
pub fn verify_necessity_chain(cfg: &SearchConfig) -> Result<VerificationReport> {
    ensure_check(cfg, &[Check::NecessityChain])?;
    let start = Instant::now();
    let batches = batches_up_to(cfg);
    let tuples = batches.iter().map(|b| b.len() as u64).sum();
    const MOD2: &str = "witt_implies_mod2";
    const ODD: &str = "witt_implies_odd_sets";
    let names = [MOD2, ODD];
    let mut c = Collector::new(&names);
    let pairs = run_pairs(
        &batches,
        &names,
        |a, b, _| {
            let mut out = vec![];
            if a.witt(b) {
                if a.mod2 != b.mod2 {
                    out.push((MOD2, "mod-2 divisors differ".into()));
                }
                if !odd_multiples_sets_equal(&a.e, &b.e) {
                    out.push((ODD, "odd-multiple sets differ".into()));
                }
            }
            out
        },
        &mut c,
    );
    Ok(c.finish(cfg.clone(), tuples, pairs, vec![], start))
}

/// The cotangent-product test agrees with the exact reduction on every pair.
pub fn verify_criterion_equivalence(cfg: &SearchConfig) -> Result<VerificationReport> {
    ensure_check(cfg, &[Check::CriterionEquivalence])?;
    let start = Instant::now();
    let batches = batches_up_to(cfg);
    let tuples = batches.iter().map(|b| b.len() as u64).sum();
    const NAME: &str = "cot_equals_witt";
    let mut c = Collector::new(&[NAME]);
    let pairs = run_pairs(
        &batches,
        &[NAME],
        |a, b, _| {
            let witt = a.witt(b);
            let cot =
                cot_product_test(&a.e, &b.e, DEFAULT_COT_TOLERANCE).expect("same variable count");
            if witt != cot {
                vec![(NAME, format!("witt_over_R = {witt}, cot_test = {cot}"))]
            } else {
                vec![]
            }
        },
        &mut c,
    );
    Ok(c.finish(cfg.clone(), tuples, pairs, vec![], start))
}

/// `(p.., 8, 8, 4, 4)` against `(p.., 6, 6, 6, 6)`: the product of the
/// characteristic polynomials is a square while the exponents differ.
pub fn reproduce_example3(n: usize, ps: &[u64]) -> Result<VerificationReport> {
    let cfg = SearchConfig {
        variables: n,
        ps: ps.to_vec(),
        max_exponent: ps.iter().copied().chain([8]).max().unwrap_or(8),
        hypothesis_filter: HypothesisFilter::None,
        check: Check::Example3,
        trials: 1,
        ..SearchConfig::default()
    };
    cfg.validate()?;
    let start = Instant::now();
    let build = |tail: [u64; 4]| BrieskornExponents::new(ps.iter().copied().chain(tail).collect());
    let a = build([8, 8, 4, 4])?;
    let b = build([6, 6, 6, 6])?;
    let (wa, wb) = (a.to_weights(), b.to_weights());

    const FOX: &str = "fox_milnor_square";
    const MOD2: &str = "mod2_congruent";
    const DISTINCT: &str = "multisets_differ";
    let mut c = Collector::new(&[FOX, MOD2, DISTINCT]);
    let mut check = |name: &'static str, ok: bool, detail: &str| {
        c.checked(name, 1);
        if !ok {
            c.fail(
                0,
                name,
                a.to_string(),
                b.to_string(),
                detail.into(),
                reproduce_cmd(&a, &b),
            );
        }
    };
    check(
        FOX,
        fox_milnor_square(&wa, &wb)?,
        "product of divisors is not a square",
    );
    check(
        MOD2,
        mod2_divisor_congruent(&wa, &wb)?,
        "divisors differ mod 2",
    );
    check(
        DISTINCT,
        a.sorted() != b.sorted(),
        "exponent multisets coincide",
    );
    let witt = witt_equivalent_over_r(&wa, &wb)?;
    let notes = vec![format!("witt_over_R = {witt}")];
    Ok(c.finish(cfg, 2, 1, notes, start))
}

const SUITE: [&str; 8] = [
    "criterion_equivalence",
    "necessity_chain",
    "milnor_orlik_vs_brieskorn_pham",
    "milnor_number_is_pf_at_one",
    "stabilization_invariance",
    "recovery_round_trip",
    "signatures_iff_witt",
    "symmetry",
];

fn random_tuple(rng: &mut ChaCha8Rng, vars: usize, max: u64) -> BrieskornExponents {
    BrieskornExponents::new((0..vars).map(|_| rng.gen_range(2..=max)).collect())
        .expect("exponents are at least 2")
}

/// Seeded randomized cross-checks: `cfg.trials` samples per property, with
/// variable counts in `1..=cfg.variables` and exponents in `2..=cfg.max_exponent`.
pub fn run_property_suite(cfg: &SearchConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (vmax, emax) = (cfg.variables, cfg.max_exponent);
    let mut c = Collector::new(&SUITE);
    let mut notes = Vec::new();

    for t in 0..cfg.trials as u64 {
        let vars = rng.gen_range(1..=vmax);
        let a = random_tuple(&mut rng, vars, emax);
        let b = random_tuple(&mut rng, vars, emax);
        let (wa, wb) = (a.to_weights(), b.to_weights());
        let (ea, eb) = (a.to_string(), b.to_string());
        let repro = reproduce_cmd(&a, &b);
        let record = |c: &mut Collector, name: &'static str, ok: bool, detail: String| {
            c.checked(name, 1);
            if !ok {
                c.fail(t, name, ea.clone(), eb.clone(), detail, repro.clone());
            }
        };

        let witt = witt_equivalent_over_r(&wa, &wb)?;
        let cot = cot_product_test(&a, &b, DEFAULT_COT_TOLERANCE)?;
        record(
            &mut c,
            SUITE[0],
            witt == cot,
            format!("witt = {witt}, cot = {cot}"),
        );

        let mod2 = mod2_divisor_congruent(&wa, &wb)?;
        let odd = odd_multiples_sets_equal(&a, &b);
        record(
            &mut c,
            SUITE[1],
            !witt || (mod2 && odd),
            format!("mod2 = {mod2}, odd_sets = {odd}"),
        );

        let mo = char_divisor(&wa)?;
        let bp = char_divisor_brieskorn(&a);
        record(&mut c, SUITE[2], mo == bp, format!("{mo} vs {bp}"));

        let mu = milnor_number(&wa)?;
        let at_one = pf_polynomial(&wa)?.eval_at_one();
        record(
            &mut c,
            SUITE[3],
            mu == at_one,
            format!("mu = {mu}, P(1) = {at_one}"),
        );

        let (sa, sb) = (stabilize(&wa), stabilize(&wb));
        let shifted = pf_polynomial(&wa)?.shift(1, 2);
        let stab_ok = pf_polynomial(&sa)? == shifted && witt_equivalent_over_r(&sa, &sb)? == witt;
        record(
            &mut c,
            SUITE[4],
            stab_ok,
            "stabilization changed P or the verdict".into(),
        );

        let (oa, ob) = if vars % 2 == 1 {
            (wa.clone(), wb.clone())
        } else {
            (sa, sb)
        };
        let sig = equivariant_signatures(&oa)? == equivariant_signatures(&ob)?;
        record(
            &mut c,
            SUITE[6],
            sig == witt,
            format!("signatures equal = {sig}, witt = {witt}"),
        );

        let sym = witt_equivalent_over_r(&wb, &wa)? == witt
            && cot_product_test(&b, &a, DEFAULT_COT_TOLERANCE)? == cot
            && mod2_divisor_congruent(&wb, &wa)? == mod2
            && odd_multiples_sets_equal(&b, &a) == odd
            && fox_milnor_square(&wa, &wb)? == fox_milnor_square(&wb, &wa)?;
        record(&mut c, SUITE[7], sym, "criterion is not symmetric".into());
    }

    let mut skipped = 0u64;
    for t in 0..cfg.trials as u64 {
        let vars = rng.gen_range(1..=vmax);
        let found = (0..1000)
            .map(|_| random_tuple(&mut rng, vars, emax))
            .find(|e| e.has_no_multiple());
        let Some(e) = found else {
            skipped += 1;
            continue;
        };
        c.checked(SUITE[5], 1);
        let d = char_divisor_brieskorn(&e).mod2()?;
        let got = recover_exponents(&d, vars);
        if got.as_ref().map(|r| &r.exponents) != Ok(&e.sorted()) {
            c.fail(
                t,
                SUITE[5],
                e.to_string(),
                String::new(),
                format!("recovered {got:?}"),
                format!("algknot recover --exponents {e}"),
            );
        }
    }
    if skipped > 0 {
        notes.push(format!(
            "recovery_round_trip: {skipped} samples without a no-multiple tuple"
        ));
    }
    let trials = cfg.trials as u64;
    Ok(c.finish(cfg.clone(), 0, trials, notes, start))
}

/// Dispatches on `cfg.check`.
pub fn verify(cfg: &SearchConfig) -> Result<VerificationReport> {
    match cfg.check {
        Check::Theorem2 => verify_theorem2(cfg),
        Check::TwoVar | Check::ThreeVar => verify_low_variables(cfg),
        Check::NecessityChain => verify_necessity_chain(cfg),
        Check::CriterionEquivalence => verify_criterion_equivalence(cfg),
        Check::Example3 => reproduce_example3(cfg.variables, &cfg.ps),
        Check::Properties => run_property_suite(cfg),
    }
}
