//! Exact invariants of algebraic knots attached to weighted homogeneous and
//! Brieskorn polynomials, together with decision procedures for Witt
//! equivalence of their Seifert forms over the reals and a brute-force
//! verification harness.
//!
//! The layers build on each other:
//!
//! * [`fracpoly`]: sparse polynomials in `t^(1/m)` with integer coefficients.
//! * [`divisor`]: the group ring over roots of unity (`Λ_a` calculus).
//! * [`singularity`]: weight systems, `P_f(t)`, Milnor numbers and
//!   characteristic divisors.
//! * [`criteria`]: equivariant signatures and the cobordism criteria.
//! * [`harness`]: enumeration and batch verification with JSON/CSV reports.

pub mod criteria;
pub mod divisor;
pub mod error;
pub mod fracpoly;
pub mod harness;
pub mod singularity;

pub use criteria::{
    cot_product, cot_product_test, decide_brieskorn_cobordism,
    decide_brieskorn_cobordism_with_tolerance, equivariant_signatures, fox_milnor_square,
    minimal_odd_exponent, mod2_divisor_congruent, odd_multiples_sets_equal, recover_exponents,
    total_signature, weight_rigidity_hypothesis, witt_class, witt_equivalent_over_r,
    CriterionReport, Recovery, SignatureTable, Verdict, DEFAULT_COT_TOLERANCE,
};
pub use divisor::{CyclotomicProduct, Divisor, Rotation};
pub use error::{Error, Result};
pub use fracpoly::FracExpPoly;
pub use singularity::{
    char_divisor, char_divisor_brieskorn, char_polynomial, milnor_number, parse_input,
    pf_polynomial, stabilize, BrieskornExponents, Input, Weight, WeightSystem,
};

/// Version tag embedded in every JSON document produced by this crate.
pub const SCHEMA_VERSION: u32 = 1;
