//! Exact arithmetic in `Z[zeta_p]`.
//!
//! Elements are stored in the basis `1, zeta, ..., zeta^{p-2}`; `zeta^{p-1}`
//! is always rewritten as `-(1 + zeta + ... + zeta^{p-2})`, so two elements
//! are equal exactly when their coefficient vectors are.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{param, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    p: u32,
    coeffs: Vec<i64>,
}

impl CycInt {
    pub fn zero(p: u32) -> Self {
        Self { p, coeffs: vec![0; p as usize - 1] }
    }

    pub fn from_int(n: i64, p: u32) -> Self {
        let mut out = Self::zero(p);
        out.coeffs[0] = n;
        out
    }

    /// `zeta_p^k`.
    pub fn zeta_pow(k: i64, p: u32) -> Self {
        let mut counts = vec![0i64; p as usize];
        counts[k.rem_euclid(p as i64) as usize] = 1;
        Self::from_exponent_counts(&counts)
    }

    /// `sum_k counts[k] * zeta^k` for a length-`p` count vector.
    pub fn from_exponent_counts(counts: &[i64]) -> Self {
        let p = counts.len();
        let top = counts[p - 1];
        Self { p: p as u32, coeffs: counts[..p - 1].iter().map(|&c| c - top).collect() }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The rational integer this element equals, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        match self.coeffs.split_first() {
            Some((&n, rest)) if rest.iter().all(|&c| c == 0) => Some(n),
            _ => None,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            param(format!("mixed Z[zeta_{}] and Z[zeta_{}] operands", self.p, other.p))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { p: self.p, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { p: self.p, coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let p = self.p as usize;
        let mut full = vec![0i64; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                full[(i + j) % p] += a * b;
            }
        }
        Ok(Self::from_exponent_counts(&full))
    }

    pub fn scale(&self, k: i64) -> Self {
        Self { p: self.p, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = Self::from_int(1, self.p);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Complex value under `zeta -> exp(2 pi i / p)`, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let p = self.p as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, &c)| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / p;
            (re + c as f64 * t.cos(), im + c as f64 * t.sin())
        })
    }
}

// The operator forms panic on mismatched p; use the try_* methods when the
// operands come from different sources.
impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        self.try_add(rhs).expect("CycInt operands over different p")
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        self.try_sub(rhs).expect("CycInt operands over different p")
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.try_mul(rhs).expect("CycInt operands over different p")
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        self.scale(-1)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match k {
                0 => c.to_string(),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
