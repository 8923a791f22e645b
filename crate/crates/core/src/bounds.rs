//! Griesmer bound and the optimality classes derived from it.

use serde::Serialize;

use crate::error::{param, Result};

/// `sum_{i<k} ceil(d / q^i)`.
pub fn griesmer_lower_bound(k: u32, d: u128, q: u128) -> Result<u128> {
    if k == 0 || d == 0 {
        return param("Griesmer bound needs k >= 1 and d >= 1");
    }
    if q < 2 {
        return param(format!("q = {q} is not a field size"));
    }
    let mut total = 0u128;
    let mut qi = 1u128;
    for _ in 0..k {
        total += d.div_ceil(qi);
        // once q^i exceeds d every further term is 1
        match qi.checked_mul(q) {
            Some(next) => qi = next,
            None => qi = u128::MAX,
        }
    }
    Ok(total)
}

/// Optimality measured against the Griesmer bound only. A code marked
/// griesmer-optimal cannot be improved to `d + 1` without violating the
/// bound; almost-optimal means `d + 2` is excluded but `d + 1` is not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GriesmerClass {
    GriesmerOptimal,
    AlmostOptimal,
    Neither,
}

impl std::fmt::Display for GriesmerClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::GriesmerOptimal => "griesmer-optimal",
            Self::AlmostOptimal => "almost-optimal",
            Self::Neither => "neither",
        })
    }
}

pub fn classify_optimality(n: u128, k: u32, d: u128, q: u128) -> Result<GriesmerClass> {
    if griesmer_lower_bound(k, d + 1, q)? > n {
        Ok(GriesmerClass::GriesmerOptimal)
    } else if griesmer_lower_bound(k, d + 2, q)? > n {
        Ok(GriesmerClass::AlmostOptimal)
    } else {
        Ok(GriesmerClass::Neither)
    }
}
