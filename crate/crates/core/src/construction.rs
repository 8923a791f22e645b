//! The defining sets `D_i` and the codes `C_{D_i}` they generate, plus
//! exhaustive weight enumeration.
//!
//! `D_i = {(x1, x2) in F_q^2 : Tr(x1^{p^l+1}) = 1, Tr(x2) in C_i}` and the
//! codeword for `(a, b)` is `(Tr(a x1 + b x2))` over `D_i` in canonical
//! order.

use rayon::prelude::*;
use serde::Serialize;

use crate::analytic::length_formula;
use crate::distribution::WeightDistribution;
use crate::error::{param, Error, Result};
use crate::field::{CyclotomicClass, FieldParams, FqElement};
use crate::parallel::{for_each_pair_with_a, leading_coefficients, with_pool, EnumerationMode};
use crate::spec::CodeSpec;

/// Default cap on `codewords visited * code length` for exhaustive
/// enumeration. Roughly a minute of single-core work.
pub const DEFAULT_SYMBOL_BUDGET: u64 = 20_000_000_000;

/// `D_i` in canonical order (lexicographic in `(x1, x2)`).
///
/// Points are held as element ranks; [`DefiningSet::point`] decodes them.
#[derive(Debug, Clone)]
pub struct DefiningSet {
    spec: CodeSpec,
    points: Vec<(u32, u32)>,
}

impl DefiningSet {
    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, j: usize, fp: &FieldParams) -> (FqElement, FqElement) {
        let (x1, x2) = self.points[j];
        (fp.element_from_rank(x1 as u64), fp.element_from_rank(x2 as u64))
    }

    pub fn points<'a>(&'a self, fp: &'a FieldParams) -> impl Iterator<Item = (FqElement, FqElement)> + 'a {
        (0..self.points.len()).map(move |j| self.point(j, fp))
    }

    /// Element ranks of each point.
    pub fn point_ranks(&self) -> &[(u32, u32)] {
        &self.points
    }
}

fn check_field(spec: &CodeSpec, fp: &FieldParams) -> Result<()> {
    if spec.p != fp.p() || spec.e != fp.e() {
        return param(format!("code is over F_{}^{} but field is F_{}^{}", spec.p, spec.e, fp.p(), fp.e()));
    }
    Ok(())
}

/// Scans `F_q x F_q` for the points of `D_i`. For admissible specs the size
/// must agree with the closed-form length, otherwise an internal error is
/// returned.
pub fn build_defining_set(spec: &CodeSpec, fp: &FieldParams) -> Result<DefiningSet> {
    check_field(spec, fp)?;
    if fp.q() > u32::MAX as u64 {
        return param("field too large for an explicit defining set");
    }
    let p = fp.p();
    let class = spec.class();
    let first: Vec<bool> = fp.elements().map(|x| fp.trace(&fp.mul(&fp.frobenius(&x, spec.l), &x)) == 1).collect();
    let second: Vec<bool> = fp.elements().map(|x| CyclotomicClass::of(fp.trace(&x), p) == Some(class)).collect();

    let mut points = Vec::new();
    for (x1, &in1) in first.iter().enumerate() {
        for (x2, &in2) in second.iter().enumerate() {
            if in1 && in2 {
                points.push((x1 as u32, x2 as u32));
            }
        }
    }
    if spec.is_admissible() {
        let expected = length_formula(spec)?;
        if points.len() as u128 != expected {
            return Err(Error::Internal(format!(
                "defining set has {} points, closed-form length is {expected}",
                points.len()
            )));
        }
    }
    Ok(DefiningSet { spec: *spec, points })
}

/// The codeword `c(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Codeword {
    pub a: FqElement,
    pub b: FqElement,
    pub symbols: Vec<u32>,
}

impl Codeword {
    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|&&s| s != 0).count()
    }
}

pub fn codeword(a: &FqElement, b: &FqElement, d: &DefiningSet, fp: &FieldParams) -> Codeword {
    let symbols = d.points(fp).map(|(x1, x2)| fp.trace(&fp.add(&fp.mul(a, &x1), &fp.mul(b, &x2)))).collect();
    Codeword { a: a.clone(), b: b.clone(), symbols }
}

/// Hamming weight of `c(a, b)`, evaluating `Tr(a x1 + b x2)` at every point
/// with full field arithmetic.
pub fn codeword_weight_brute(a: &FqElement, b: &FqElement, d: &DefiningSet, fp: &FieldParams) -> u64 {
    d.points(fp).filter(|(x1, x2)| fp.trace(&fp.add(&fp.mul(a, x1), &fp.mul(b, x2))) != 0).count() as u64
}

/// Settings for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteConfig {
    pub mode: EnumerationMode,
    /// Maximum `codewords visited * n`.
    pub budget: u64,
    /// Worker count; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for BruteConfig {
    fn default() -> Self {
        Self { mode: EnumerationMode::default(), budget: DEFAULT_SYMBOL_BUDGET, threads: None }
    }
}

/// Number of codewords the given mode visits.
pub fn codewords_visited(fp: &FieldParams, mode: EnumerationMode) -> u128 {
    let q = fp.q() as u128;
    match mode {
        EnumerationMode::Full => q * q,
        EnumerationMode::OrbitReduced => (q * q - 1) / (fp.p() as u128 - 1) + 1,
    }
}

/// Per-point symbol tables: row `a` holds `Tr(a x1_j)` and row `b` holds
/// `-Tr(b x2_j)`, so position `j` of `c(a, b)` is zero exactly when the two
/// rows agree there.
struct SymbolTables {
    n: usize,
    first: Vec<u8>,
    second_neg: Vec<u8>,
}

impl SymbolTables {
    fn new(d: &DefiningSet, fp: &FieldParams) -> Self {
        let n = d.len();
        let e = fp.e();
        let p = fp.p();
        // Tr(x^k * point), so Tr(a * point) = sum_k a_k Tr(x^k * point)
        let functionals = |rank: u32| -> Vec<u32> {
            let x = fp.element_from_rank(rank as u64);
            (0..e).map(|k| fp.trace(&fp.mul(&fp.monomial(k), &x))).collect()
        };
        let f1: Vec<Vec<u32>> = d.points.iter().map(|&(x1, _)| functionals(x1)).collect();
        let f2: Vec<Vec<u32>> = d.points.iter().map(|&(_, x2)| functionals(x2)).collect();
        let fill = |fs: &[Vec<u32>], negate: bool| -> Vec<u8> {
            let mut table = vec![0u8; fp.q() as usize * n];
            table.par_chunks_mut(n.max(1)).enumerate().for_each(|(rank, row)| {
                let a = fp.element_from_rank(rank as u64);
                for (slot, f) in row.iter_mut().zip(fs) {
                    let t = a.coeffs().iter().zip(f).map(|(&c, &t)| c * t).sum::<u32>() % p;
                    *slot = if negate { ((p - t) % p) as u8 } else { t as u8 };
                }
            });
            table
        };
        Self { n, first: fill(&f1, false), second_neg: fill(&f2, true) }
    }

    fn weight(&self, a: usize, b: usize) -> usize {
        let x = &self.first[a * self.n..(a + 1) * self.n];
        let y = &self.second_neg[b * self.n..(b + 1) * self.n];
        x.iter().zip(y).map(|(u, v)| (u != v) as usize).sum()
    }
}

/// Exact weight distribution by visiting every codeword (or one per
/// scaling orbit). Refuses when `codewords * n` exceeds the budget.
pub fn brute_distribution(spec: &CodeSpec, fp: &FieldParams, config: &BruteConfig) -> Result<WeightDistribution> {
    check_field(spec, fp)?;
    if fp.p() > u8::MAX as u32 {
        return param("exhaustive enumeration supports p < 256");
    }
    let length = length_estimate(spec, fp)?;
    let cost = codewords_visited(fp, config.mode).saturating_mul(length);
    if cost > config.budget as u128 {
        return Err(Error::Budget(format!(
            "{cost} codeword symbols exceed the budget of {}; try orbit-reduced mode, a larger budget, or the analytic method",
            config.budget
        )));
    }
    let d = build_defining_set(spec, fp)?;
    let mode = config.mode;
    with_pool(config.threads, || {
        let tables = SymbolTables::new(&d, fp);
        let q = fp.q() as usize;
        let p = fp.p();
        let n = d.len();
        let lead = leading_coefficients(fp);
        let hist = (0..q)
            .into_par_iter()
            .fold(
                || vec![0u64; n + 1],
                |mut hist, a| {
                    for_each_pair_with_a(a, q, p, &lead, mode, |a, b, mult| {
                        hist[tables.weight(a, b)] += mult;
                    });
                    hist
                },
            )
            .reduce(|| vec![0u64; n + 1], merge_histograms);
        WeightDistribution::from_histogram(&hist)
    })
}

// Size of D_i without building it: the closed form when admissible, else an
// exact count of the two trace conditions.
fn length_estimate(spec: &CodeSpec, fp: &FieldParams) -> Result<u128> {
    if spec.is_admissible() {
        return length_formula(spec);
    }
    let class = spec.class();
    let first = fp.elements().filter(|x| fp.trace(&fp.mul(&fp.frobenius(x, spec.l), x)) == 1).count() as u128;
    let second = fp.elements().filter(|x| CyclotomicClass::of(fp.trace(x), fp.p()) == Some(class)).count() as u128;
    Ok(first * second)
}

pub(crate) fn merge_histograms(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Rank over `F_p` of the generator matrix with rows `c(x^k, 0)` and
/// `c(0, x^k)`, `k < e`.
pub fn generator_rank(d: &DefiningSet, fp: &FieldParams) -> usize {
    let e = fp.e();
    let p = fp.p() as u64;
    // columns are fed one at a time into an echelon basis (pivot, row with
    // a 1 at the pivot); stop as soon as the rank is full
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    for (x1, x2) in d.points(fp) {
        let mut v: Vec<u64> = (0..e)
            .map(|k| fp.trace(&fp.mul(&fp.monomial(k), &x1)) as u64)
            .chain((0..e).map(|k| fp.trace(&fp.mul(&fp.monomial(k), &x2)) as u64))
            .collect();
        for (pivot, row) in &basis {
            let c = v[*pivot];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = (*x + (p - c) * r) % p;
                }
            }
        }
        if let Some(pivot) = v.iter().position(|&x| x != 0) {
            let inv = crate::field::inv_mod(v[pivot] as u32, p as u32) as u64;
            v.iter_mut().for_each(|x| *x = *x * inv % p);
            basis.push((pivot, v));
            if basis.len() == 2 * e {
                break;
            }
        }
    }
    basis.len()
}

/// Dimension of `C_{D_i}` over `F_p`: the rank of its generator matrix.
pub fn code_dimension(spec: &CodeSpec, fp: &FieldParams) -> Result<usize> {
    let d = build_defining_set(spec, fp)?;
    Ok(generator_rank(&d, fp))
}
