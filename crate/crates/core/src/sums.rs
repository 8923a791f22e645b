//! Additive-character sums over `F_p` and `F_q`, evaluated exactly in
//! `Z[zeta_p]`.
//!
//! Each sum has a direct evaluation (summing over the whole field) and, where
//! a closed form is known, a second routine that evaluates it. Tests and the
//! acceptance suite hold the two against each other.

use crate::cyclotomic::CycInt;
use crate::error::{param, Error, Result};
use crate::field::{eta_p, is_prime, CyclotomicClass, FieldParams, FqElement};
use crate::linearized::{linearized_solve, LinearizedMap, LinearizedSolution};
use crate::spec::{CodeSpec, Parity};

/// `sum zeta_p^{f(x)}` over the given residues.
pub fn additive_char_sum<I>(p: u32, values: I) -> CycInt
where
    I: IntoIterator<Item = u32>,
{
    let mut counts = vec![0i64; p as usize];
    for v in values {
        counts[(v % p) as usize] += 1;
    }
    CycInt::from_exponent_counts(&counts)
}

/// Quadratic Gauss sum `G(eta) = sum_{v in F_p} eta(v) zeta^v`.
pub fn gauss_sum_p(p: u32) -> Result<CycInt> {
    if p < 3 || !is_prime(p as u64) {
        return param(format!("p = {p} must be an odd prime"));
    }
    let counts: Vec<i64> = (0..p).map(|v| eta_p(v, p) as i64).collect();
    Ok(CycInt::from_exponent_counts(&counts))
}

/// `G'(eta') = (-1)^{e-1} G(eta)^e`, expanded inside `Z[zeta_p]`.
pub fn gauss_sum_q(fp: &FieldParams) -> CycInt {
    let g = gauss_sum_p(fp.p()).expect("field characteristic is an odd prime");
    let ge = g.pow(fp.e() as u32);
    if fp.e() % 2 == 1 {
        ge
    } else {
        ge.scale(-1)
    }
}

/// `sum_{v in F_q} eta'(v) zeta^{Tr(v)}` by direct summation.
pub fn gauss_sum_q_direct(fp: &FieldParams) -> CycInt {
    let mut counts = vec![0i64; fp.p() as usize];
    for v in fp.elements() {
        counts[fp.trace(&v) as usize] += fp.eta_q(&v) as i64;
    }
    CycInt::from_exponent_counts(&counts)
}

fn quadratic_value(a2: &FqElement, a1: &FqElement, a0: &FqElement, x: &FqElement, fp: &FieldParams) -> FqElement {
    let x2 = fp.square(x);
    fp.add(&fp.add(&fp.mul(a2, &x2), &fp.mul(a1, x)), a0)
}

/// `sum_{x in F_q} zeta^{Tr(a2 x^2 + a1 x + a0)}` by direct summation.
pub fn quadratic_sum(a2: &FqElement, a1: &FqElement, a0: &FqElement, fp: &FieldParams) -> Result<CycInt> {
    if a2.is_zero() {
        return param("leading coefficient a2 must be nonzero");
    }
    Ok(additive_char_sum(fp.p(), fp.elements().map(|x| fp.trace(&quadratic_value(a2, a1, a0, &x, fp)))))
}

/// Completed-square evaluation:
/// `zeta^{Tr(a0 - a1^2 (4 a2)^{-1})} eta'(a2) G'`.
pub fn quadratic_sum_closed(a2: &FqElement, a1: &FqElement, a0: &FqElement, fp: &FieldParams) -> Result<CycInt> {
    let inv =
        fp.inv(&fp.scale(4, a2)).ok_or_else(|| Error::Parameter("leading coefficient a2 must be nonzero".into()))?;
    let shift = fp.sub(a0, &fp.mul(&fp.square(a1), &inv));
    let phase = CycInt::zeta_pow(fp.trace(&shift) as i64, fp.p());
    Ok((&phase * &gauss_sum_q(fp)).scale(fp.eta_q(a2) as i64))
}

/// `sum_{x in F_q} eta'(a2 x^2 + a1 x + a0)` by direct summation.
pub fn quadratic_char_sum(a2: &FqElement, a1: &FqElement, a0: &FqElement, fp: &FieldParams) -> Result<i64> {
    if a2.is_zero() {
        return param("leading coefficient a2 must be nonzero");
    }
    Ok(fp.elements().map(|x| fp.eta_q(&quadratic_value(a2, a1, a0, &x, fp)) as i64).sum())
}

/// `-eta'(a2)` for a nonzero discriminant, `(q-1) eta'(a2)` otherwise.
pub fn quadratic_char_sum_closed(a2: &FqElement, a1: &FqElement, a0: &FqElement, fp: &FieldParams) -> Result<i64> {
    if a2.is_zero() {
        return param("leading coefficient a2 must be nonzero");
    }
    let disc = fp.sub(&fp.square(a1), &fp.scale(4, &fp.mul(a0, a2)));
    let eta = fp.eta_q(a2) as i64;
    Ok(if disc.is_zero() { (fp.q() as i64 - 1) * eta } else { -eta })
}

/// `S(alpha, beta) = sum_{x in F_q} zeta^{Tr(alpha x^{p^l+1} + beta x)}`,
/// summed over every `x`.
pub fn weil_sum_direct(alpha: &FqElement, beta: &FqElement, l: u64, fp: &FieldParams) -> CycInt {
    additive_char_sum(
        fp.p(),
        fp.elements().map(|x| {
            let xq = fp.mul(&fp.frobenius(&x, l), &x);
            fp.trace(&fp.add(&fp.mul(alpha, &xq), &fp.mul(beta, &x)))
        }),
    )
}

fn checked_pow(p: u32, k: usize) -> Result<i64> {
    (p as i64).checked_pow(k as u32).ok_or_else(|| Error::Parameter(format!("{p}^{k} overflows the coefficient range")))
}

/// Whether `alpha^{(q-1)/(p^s+1)} = (-1)^{m/s}`, the condition that splits
/// the Weil-sum closed forms.
pub fn alpha_condition(alpha: &FqElement, spec: &CodeSpec, fp: &FieldParams) -> bool {
    let ps1 = (fp.p() as u64).pow(spec.s as u32) + 1;
    let lhs = fp.pow(alpha, ((fp.q() - 1) / ps1) as u128);
    let rhs = match spec.parity() {
        Parity::Even => fp.one(),
        Parity::Odd => fp.constant(fp.p() - 1),
    };
    lhs == rhs
}

// Signed magnitude in front of the phase: (-1)^{m/s} p^m, or
// (-1)^{m/s+1} p^{m+s} when the alpha condition holds.
fn weil_coefficient(alpha: &FqElement, spec: &CodeSpec, fp: &FieldParams) -> Result<(i64, bool)> {
    let sign = match spec.parity() {
        Parity::Even => 1,
        Parity::Odd => -1,
    };
    if alpha_condition(alpha, spec, fp) {
        Ok((-sign * checked_pow(fp.p(), spec.m + spec.s)?, true))
    } else {
        Ok((sign * checked_pow(fp.p(), spec.m)?, false))
    }
}

fn check_inputs(alpha: &FqElement, spec: &CodeSpec, fp: &FieldParams) -> Result<()> {
    if alpha.is_zero() {
        return param("alpha must be nonzero");
    }
    spec.require_admissible("closed-form Weil sum")?;
    if spec.p != fp.p() || spec.e != fp.e() {
        return param(format!("code is over F_{}^{} but field is F_{}^{}", spec.p, spec.e, fp.p(), fp.e()));
    }
    Ok(())
}

/// `S(alpha, beta)` from the closed forms: the two-case value for
/// `beta = 0`, otherwise zero or a signed power of `p` times
/// `zeta^{Tr(-alpha x0^{p^l+1})}` depending on the linearized equation.
/// `l` is taken from `spec`.
pub fn weil_sum_closed(alpha: &FqElement, beta: &FqElement, spec: &CodeSpec, fp: &FieldParams) -> Result<CycInt> {
    check_inputs(alpha, spec, fp)?;
    let (coefficient, condition) = weil_coefficient(alpha, spec, fp)?;
    if beta.is_zero() {
        return Ok(CycInt::from_int(coefficient, fp.p()));
    }
    let solution = linearized_solve(alpha, spec.l, beta, fp)?;
    match (&solution, condition) {
        (LinearizedSolution::Unsolvable, _) => Ok(CycInt::zero(fp.p())),
        (LinearizedSolution::Affine { .. }, false) => {
            Err(Error::Internal("linearized map has a kernel although the alpha condition fails".into()))
        }
        (sol, _) => Ok(phase_term(alpha, sol.representative().unwrap(), spec.l, coefficient, fp)),
    }
}

/// Closed form evaluated at a caller-chosen solution `x0` of the linearized
/// equation. Rejects an `x0` that is not a solution.
pub fn weil_sum_closed_at(
    alpha: &FqElement,
    beta: &FqElement,
    x0: &FqElement,
    spec: &CodeSpec,
    fp: &FieldParams,
) -> Result<CycInt> {
    check_inputs(alpha, spec, fp)?;
    let map = LinearizedMap::new(alpha, spec.l, fp)?;
    if map.apply(x0) != fp.neg(&fp.frobenius(beta, spec.l)) {
        return param(format!("{x0} does not solve the linearized equation"));
    }
    let (coefficient, _) = weil_coefficient(alpha, spec, fp)?;
    Ok(phase_term(alpha, x0, spec.l, coefficient, fp))
}

fn phase_term(alpha: &FqElement, x0: &FqElement, l: u64, coefficient: i64, fp: &FieldParams) -> CycInt {
    let x_pow = fp.mul(&fp.frobenius(x0, l), x0);
    let t = fp.trace(&fp.neg(&fp.mul(alpha, &x_pow)));
    CycInt::zeta_pow(t as i64, fp.p()).scale(coefficient)
}

/// `sum_{x in C_i} eta(x^2 - y)` over `F_p`, by direct summation.
pub fn new_sum(y: u32, i: u8, p: u32) -> Result<i64> {
    check_new_sum(y, p)?;
    let class = CyclotomicClass::from_index(i)?;
    Ok((1..p)
        .filter(|&x| CyclotomicClass::of(x, p) == Some(class))
        .map(|x| eta_p(((x as u64 * x as u64 + p as u64 - y as u64) % p as u64) as u32, p) as i64)
        .sum())
}

/// `0` for `y` a square, `-1` for `y` a non-square.
pub fn new_sum_closed(y: u32, p: u32) -> Result<i64> {
    check_new_sum(y, p)?;
    Ok(match CyclotomicClass::of(y, p) {
        Some(CyclotomicClass::Squares) => 0,
        _ => -1,
    })
}

fn check_new_sum(y: u32, p: u32) -> Result<()> {
    if !is_prime(p as u64) || p % 4 != 3 {
        return param(format!("p = {p} must be a prime with p = 3 (mod 4)"));
    }
    if y.is_multiple_of(p) {
        return param("y must be a nonzero residue");
    }
    Ok(())
}

/// Number of `beta in F_q` for which `X^{p^{2l}} + X = -beta^{p^l}` has a
/// solution. Refused unless `m/s` is even.
pub fn solvable_set_count(spec: &CodeSpec, fp: &FieldParams) -> Result<u64> {
    spec.require_admissible("solvable-set count")?;
    if spec.parity() == Parity::Odd {
        return Err(Error::Refused("m/s is odd: X^{p^{2l}} + X permutes F_q, every beta is solvable".into()));
    }
    let map = LinearizedMap::new(&fp.one(), spec.l, fp)?;
    Ok(fp.elements().filter(|beta| map.solve(&fp.neg(&fp.frobenius(beta, spec.l))).is_solvable()).count() as u64)
}
