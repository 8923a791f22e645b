//! Theoretical weight distributions and the Pless power-moment checks.
//!
//! Every formula is evaluated over arbitrary-precision integers. The
//! `p^{1-2s}` factor of the `m/s` even table is folded into integer powers
//! (`p^e (p^e - p^{1-2s}) = p^{2e} - p^{e+1-2s}`), so no rational value is
//! ever formed.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::distribution::WeightDistribution;
use crate::error::{Error, Result};
use crate::spec::{CodeSpec, Parity};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoryRow {
    pub weight: BigInt,
    pub multiplicity: BigInt,
}

fn big_pow(p: u32, k: i64) -> Result<BigInt> {
    if k < 0 {
        return Err(Error::Internal(format!("negative exponent {k} in closed form")));
    }
    Ok(num_traits::pow(BigInt::from(p), k as usize))
}

fn halve(x: BigInt, what: &str) -> Result<BigInt> {
    if (&x % 2u32).is_zero() {
        Ok(x / 2u32)
    } else {
        Err(Error::Internal(format!("{what} = {x} is not even")))
    }
}

/// The seven rows of the applicable table, before merging equal weights.
/// Row 0 is the zero codeword.
pub fn theory_rows(spec: &CodeSpec) -> Result<Vec<TheoryRow>> {
    spec.require_admissible("theoretical distribution")?;
    let p = spec.p;
    let e = spec.e as i64;
    let m = spec.m as i64;
    let s = spec.s as i64;
    let (t, e1, m1, r2) = match spec.parity() {
        Parity::Odd => (m, e, m, big_pow(p, 2 * e)? - big_pow(p, e + 1)?),
        Parity::Even => {
            if m < s + 1 {
                return Err(Error::Refused(format!("m = {m} must be at least s + 1 = {}", s + 1)));
            }
            (m + s, e - 2 * s, m - s, big_pow(p, 2 * e)? - big_pow(p, e + 1 - 2 * s)?)
        }
    };
    let pm1 = BigInt::from(p - 1);
    let base = halve(&pm1 * &pm1 * big_pow(p, 2 * e - 3)?, "(p-1)^2 p^(2e-3)")?;
    let shift = big_pow(p, e + t - 2)?;

    let r3 = halve(
        big_pow(p, e1)? + big_pow(p, e1 - 1)? - big_pow(p, m1)? + big_pow(p, m1 - 1)? - 2,
        "row 3 multiplicity numerator",
    )?;
    let r4 = halve(
        big_pow(p, e1)? - big_pow(p, e1 - 1)? + big_pow(p, m1)? - big_pow(p, m1 - 1)?,
        "row 4 multiplicity numerator",
    )?;

    let rows = vec![
        TheoryRow { weight: BigInt::zero(), multiplicity: BigInt::from(1) },
        TheoryRow {
            weight: halve(&pm1 * (big_pow(p, 2 * e - 2)? + &shift), "row 1 weight")?,
            multiplicity: pm1.clone(),
        },
        TheoryRow {
            weight: halve(&pm1 * &pm1 * (big_pow(p, 2 * e - 3)? + big_pow(p, e + t - 3)?), "row 2 weight")?,
            multiplicity: r2,
        },
        TheoryRow { weight: base.clone(), multiplicity: r3.clone() },
        TheoryRow { weight: &base + &pm1 * &shift, multiplicity: r4.clone() },
        TheoryRow { weight: &base + halve(&pm1 * &shift, "row 5 weight shift")?, multiplicity: &pm1 * &r3 },
        TheoryRow {
            weight: &base + halve(BigInt::from(p - 3) * &shift, "row 6 weight shift")?,
            multiplicity: &pm1 * &r4,
        },
    ];
    for (k, row) in rows.iter().enumerate() {
        if row.multiplicity.is_negative() {
            return Err(Error::Internal(format!("row {k} multiplicity {} is negative", row.multiplicity)));
        }
    }
    Ok(rows)
}

/// Table rows with equal weights merged.
pub fn theoretical_distribution(spec: &CodeSpec) -> Result<WeightDistribution> {
    let rows = theory_rows(spec)?;
    let to_u128 = |x: &BigInt| x.to_u128().ok_or_else(|| Error::Parameter(format!("{x} does not fit in 128 bits")));
    let pairs =
        rows.iter().map(|r| Ok((to_u128(&r.weight)?, to_u128(&r.multiplicity)?))).collect::<Result<Vec<_>>>()?;
    Ok(WeightDistribution::from_counts(pairs))
}

/// One Pless identity: `expected` is the closed form, `actual` the moment of
/// the distribution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MomentCheck {
    pub order: u32,
    pub expected: String,
    pub actual: String,
    pub residual: String,
}

impl MomentCheck {
    pub fn passed(&self) -> bool {
        self.residual == "0"
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlessReport {
    pub moments: Vec<MomentCheck>,
}

impl PlessReport {
    pub fn passed(&self) -> bool {
        self.moments.iter().all(MomentCheck::passed)
    }
}

/// First three Pless power moments over the nonzero weights, for a code of
/// length `n` and dimension `2e` over `F_p`.
pub fn pless_check(dist: &WeightDistribution, n: u128, spec: &CodeSpec) -> PlessReport {
    let p = BigInt::from(spec.p);
    let e = spec.e;
    let n = BigInt::from(n);
    let pp = |k: usize| num_traits::pow(p.clone(), k);
    let expected: [BigInt; 3] =
        [pp(2 * e) - 1, pp(2 * e - 1) * (&p - 1) * &n, pp(2 * e - 2) * (&p - 1) * &n * (&p * &n - &n + 1)];
    let mut actual = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
    for (w, a) in dist.nonzero() {
        let w = BigInt::from(w);
        let a = BigInt::from(a);
        actual[0] += &a;
        actual[1] += &w * &a;
        actual[2] += &w * &w * &a;
    }
    let moments = (0..3)
        .map(|k| MomentCheck {
            order: k as u32,
            expected: expected[k].to_string(),
            actual: actual[k].to_string(),
            residual: (&actual[k] - &expected[k]).to_string(),
        })
        .collect();
    PlessReport { moments }
}
