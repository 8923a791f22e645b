//! Trace codes `C_{D_i}` over `F_p` built from the defining sets
//! `D_i = {(x1, x2) : Tr(x1^{p^l+1}) = 1, Tr(x2) in C_i}`.
//!
//! The crate computes weight distributions three ways (exhaustive
//! enumeration, per-codeword closed forms, and the closed-form tables) and
//! cross-checks them, together with the finite-field, Weil-sum and Gauss-sum
//! machinery the closed forms rest on.

pub mod analytic;
pub mod bounds;
pub mod construction;
pub mod cyclotomic;
pub mod distribution;
pub mod error;
pub mod field;
pub mod linalg;
pub mod linearized;
pub mod parallel;
pub mod report;
pub mod spec;
pub mod sums;
pub mod theory;

pub use analytic::{
    analytic_distribution, analytic_weight, classify_codeword, length_formula, t_value, AClass, BClass, EquationStatus,
    GammaTraceClass, WeightCase,
};
pub use bounds::{classify_optimality, griesmer_lower_bound, GriesmerClass};
pub use construction::{
    brute_distribution, build_defining_set, code_dimension, codeword, codeword_weight_brute, BruteConfig, Codeword,
    DefiningSet, DEFAULT_SYMBOL_BUDGET,
};
pub use cyclotomic::CycInt;
pub use distribution::{DistributionDiff, WeightDistribution};
pub use error::{Error, Result};
pub use field::{make_field, CyclotomicClass, FieldParams, FqElement};
pub use linearized::{linearized_solve, LinearizedSolution};
pub use parallel::EnumerationMode;
pub use report::{run_report, Check, CodeReport, Method, Refusal, RunConfig};
pub use spec::{CodeSpec, Parity};
pub use sums::{
    gauss_sum_p, gauss_sum_q, new_sum, new_sum_closed, solvable_set_count, weil_sum_closed, weil_sum_direct,
};
pub use theory::{pless_check, theoretical_distribution, PlessReport, TheoryRow};
