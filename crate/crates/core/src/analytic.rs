//! Closed-form lengths and per-codeword weights.
//!
//! The weight of `c(a, b)` is `n - T`, where `T` counts the points of `D_i`
//! at which the codeword vanishes. `T` depends only on a handful of facts
//! about `(a, b)`, collected in [`WeightCase`]: whether `a` and `b` are zero,
//! whether `b` lies in the prime field, whether `X^{p^{2l}} + X = -a^{p^l}`
//! is solvable, and the quadratic class of `Tr(gamma^{p^l+1})` for a
//! solution `gamma`.

use rayon::prelude::*;
use serde::Serialize;

use crate::construction::merge_histograms;
use crate::distribution::WeightDistribution;
use crate::error::{param, Error, Result};
use crate::field::{CyclotomicClass, FieldParams, FqElement};
use crate::linearized::{LinearizedMap, LinearizedSolution};
use crate::parallel::{for_each_pair_with_a, leading_coefficients, with_pool, EnumerationMode};
use crate::spec::{CodeSpec, Parity};

fn pow(p: u32, k: usize) -> Result<u128> {
    (p as u128).checked_pow(k as u32).ok_or_else(|| Error::Parameter(format!("{p}^{k} does not fit in 128 bits")))
}

// Exponent shift between the two families: the m/s even case carries an
// extra p^s on every term that involves p^m.
fn shifted_m(spec: &CodeSpec) -> usize {
    match spec.parity() {
        Parity::Odd => spec.m,
        Parity::Even => spec.m + spec.s,
    }
}

/// `n_i = (p-1)/2 (p^{2e-2} + p^{e+m-2})` for `m/s` odd, with `m + s` in
/// place of `m` for `m/s` even.
pub fn length_formula(spec: &CodeSpec) -> Result<u128> {
    spec.require_admissible("closed-form length")?;
    let half = (spec.p as u128 - 1) / 2;
    let e = spec.e;
    let t = shifted_m(spec);
    let sum = pow(spec.p, 2 * e - 2)?
        .checked_add(pow(spec.p, e + t - 2)?)
        .ok_or_else(|| Error::Parameter("length overflows 128 bits".into()))?;
    sum.checked_mul(half).ok_or_else(|| Error::Parameter("length overflows 128 bits".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AClass {
    Zero,
    Nonzero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BClass {
    Zero,
    /// `b` in `F_p^*`.
    PrimeField,
    /// `b` in `F_q^* \ F_p^*`.
    Extension,
}

impl BClass {
    pub fn of(b: &FqElement) -> Self {
        match b.as_prime_field() {
            Some(0) => Self::Zero,
            Some(_) => Self::PrimeField,
            None => Self::Extension,
        }
    }
}

/// Status of `X^{p^{2l}} + X = -a^{p^l}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EquationStatus {
    PermutationUniqueSolution,
    SolvableWithKernel,
    Unsolvable,
    NotApplicable,
}

/// Class of `Tr(gamma^{p^l+1})` in `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GammaTraceClass {
    Zero,
    Squares,
    NonSquares,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct WeightCase {
    pub a_class: AClass,
    pub b_class: BClass,
    pub equation_status: EquationStatus,
    pub gamma_trace_class: GammaTraceClass,
}

// The part of the case that depends on `a` only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct ACase {
    a_class: AClass,
    equation_status: EquationStatus,
    gamma_trace_class: GammaTraceClass,
}

impl ACase {
    fn with_b(self, b_class: BClass) -> WeightCase {
        WeightCase {
            a_class: self.a_class,
            b_class,
            equation_status: self.equation_status,
            gamma_trace_class: self.gamma_trace_class,
        }
    }
}

fn classify_a(a: &FqElement, spec: &CodeSpec, map: &LinearizedMap<'_>, fp: &FieldParams) -> Result<ACase> {
    if a.is_zero() {
        return Ok(ACase {
            a_class: AClass::Zero,
            equation_status: EquationStatus::NotApplicable,
            gamma_trace_class: GammaTraceClass::NotApplicable,
        });
    }
    let rhs = fp.neg(&fp.frobenius(a, spec.l));
    let solution = map.solve(&rhs);
    let equation_status = match (&solution, spec.parity()) {
        (LinearizedSolution::Unique(_), Parity::Odd) => EquationStatus::PermutationUniqueSolution,
        (LinearizedSolution::Affine { .. }, Parity::Even) => EquationStatus::SolvableWithKernel,
        (LinearizedSolution::Unsolvable, Parity::Even) => EquationStatus::Unsolvable,
        (sol, parity) => {
            return Err(Error::Internal(format!(
                "X^(p^2l) + X = -a^(p^l) has kernel dimension {:?} with m/s {parity:?}",
                sol.kernel_dimension()
            )))
        }
    };
    let gamma_trace_class = match solution.representative() {
        None => GammaTraceClass::NotApplicable,
        Some(gamma) => {
            let t = fp.trace(&fp.mul(&fp.frobenius(gamma, spec.l), gamma));
            match CyclotomicClass::of(t, fp.p()) {
                None => GammaTraceClass::Zero,
                Some(CyclotomicClass::Squares) => GammaTraceClass::Squares,
                Some(CyclotomicClass::NonSquares) => GammaTraceClass::NonSquares,
            }
        }
    };
    Ok(ACase { a_class: AClass::Nonzero, equation_status, gamma_trace_class })
}

fn check_field(spec: &CodeSpec, fp: &FieldParams) -> Result<()> {
    spec.require_admissible("analytic weights")?;
    if spec.p != fp.p() || spec.e != fp.e() {
        return param("field does not match the code parameters");
    }
    Ok(())
}

pub fn classify_codeword(a: &FqElement, b: &FqElement, spec: &CodeSpec, fp: &FieldParams) -> Result<WeightCase> {
    check_field(spec, fp)?;
    let map = LinearizedMap::new(&fp.one(), spec.l, fp)?;
    Ok(classify_a(a, spec, &map, fp)?.with_b(BClass::of(b)))
}

/// Number of points of `D_i` where `c(a, b)` vanishes, for the given case.
pub fn t_value(case: &WeightCase, spec: &CodeSpec) -> Result<u128> {
    use EquationStatus as Eq;
    use GammaTraceClass as G;

    let parity = spec.parity();
    match (case.equation_status, parity) {
        (Eq::PermutationUniqueSolution, Parity::Even) | (Eq::SolvableWithKernel | Eq::Unsolvable, Parity::Odd) => {
            return param(format!("{:?} cannot occur when m/s is {parity:?}", case.equation_status));
        }
        _ => {}
    }
    let solvable = matches!(case.equation_status, Eq::PermutationUniqueSolution | Eq::SolvableWithKernel);
    if solvable == (case.gamma_trace_class == G::NotApplicable) {
        return param("gamma trace class must be set exactly when the equation is solvable");
    }
    if (case.a_class == AClass::Zero) != (case.equation_status == Eq::NotApplicable) {
        return param("equation status must be not-applicable exactly when a = 0");
    }

    let p = spec.p;
    let half = (p as u128 - 1) / 2;
    let t = shifted_m(spec);
    let big = pow(p, 2 * spec.e - 3)?;
    let mid = pow(p, spec.e + t - 2)?;
    let low = pow(p, spec.e + t - 3)?;

    let value = match (case.a_class, case.b_class) {
        (AClass::Zero, BClass::Zero) => length_formula(spec)?,
        (AClass::Zero, BClass::PrimeField) => 0,
        (AClass::Zero, BClass::Extension) | (AClass::Nonzero, BClass::Extension) => half * (big + low),
        (AClass::Nonzero, BClass::Zero) => match case.gamma_trace_class {
            G::NotApplicable => half * (big + low),
            G::Zero | G::Squares => half * (big + mid),
            G::NonSquares => half * (big - mid),
        },
        (AClass::Nonzero, BClass::PrimeField) => match case.gamma_trace_class {
            G::NotApplicable => half * (big + low),
            G::Zero | G::Squares => half * big,
            G::NonSquares => half * big + mid,
        },
    };
    Ok(value)
}

/// `n - T` for the codeword `c(a, b)`.
pub fn analytic_weight(a: &FqElement, b: &FqElement, spec: &CodeSpec, fp: &FieldParams) -> Result<u128> {
    let case = classify_codeword(a, b, spec, fp)?;
    Ok(length_formula(spec)? - t_value(&case, spec)?)
}

/// Aggregates `n - T` over every codeword (or one per scaling orbit).
///
/// The part of the classification that depends on `a` alone (the linear
/// solve) is computed once per `a` and reused across all `b`.
pub fn analytic_distribution(
    spec: &CodeSpec,
    fp: &FieldParams,
    mode: EnumerationMode,
    threads: Option<usize>,
) -> Result<WeightDistribution> {
    check_field(spec, fp)?;
    if fp.q() > u32::MAX as u64 {
        return param("field too large for exhaustive analytic enumeration");
    }
    let n = length_formula(spec)?;
    let q = fp.q() as usize;
    let p = fp.p();
    with_pool(threads, || -> Result<WeightDistribution> {
        let map = LinearizedMap::new(&fp.one(), spec.l, fp)?;
        let a_cases: Vec<ACase> = (0..q as u64)
            .into_par_iter()
            .map(|r| classify_a(&fp.element_from_rank(r), spec, &map, fp))
            .collect::<Result<_>>()?;
        let b_classes: Vec<BClass> = fp.elements().map(|b| BClass::of(&b)).collect();

        // weights of every case that can occur, looked up per codeword
        let mut distinct: Vec<ACase> = a_cases.clone();
        distinct.sort_by_key(|c| format!("{c:?}"));
        distinct.dedup();
        let weight_of = |c: &ACase, b: BClass| -> Result<u128> { Ok(n - t_value(&c.with_b(b), spec)?) };
        let mut weights: Vec<u128> = Vec::new();
        let mut table = std::collections::HashMap::new();
        for c in &distinct {
            for b in [BClass::Zero, BClass::PrimeField, BClass::Extension] {
                let w = weight_of(c, b)?;
                let slot = match weights.iter().position(|&x| x == w) {
                    Some(i) => i,
                    None => {
                        weights.push(w);
                        weights.len() - 1
                    }
                };
                table.insert((*c, b), slot);
            }
        }
        let a_slots: Vec<[usize; 3]> = a_cases
            .iter()
            .map(|c| [table[&(*c, BClass::Zero)], table[&(*c, BClass::PrimeField)], table[&(*c, BClass::Extension)]])
            .collect();
        let b_index: Vec<usize> = b_classes
            .iter()
            .map(|b| match b {
                BClass::Zero => 0,
                BClass::PrimeField => 1,
                BClass::Extension => 2,
            })
            .collect();
        let lead = leading_coefficients(fp);
        let hist = (0..q)
            .into_par_iter()
            .fold(
                || vec![0u64; weights.len()],
                |mut hist, a| {
                    for_each_pair_with_a(a, q, p, &lead, mode, |a, b, mult| {
                        hist[a_slots[a][b_index[b]]] += mult;
                    });
                    hist
                },
            )
            .reduce(|| vec![0u64; weights.len()], merge_histograms);
        Ok(WeightDistribution::from_counts(weights.iter().zip(&hist).map(|(&w, &c)| (w, c as u128))))
    })?
}
