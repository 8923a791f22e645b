//! Code parameters `(p, e, l, i)` and the hypotheses the closed forms need.

use serde::Serialize;

use crate::error::{param, Result};
use crate::field::{is_prime, CyclotomicClass};

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Parity of `m/s`, which selects between the two families of closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// Validated parameters of one code `C_{D_i}`.
///
/// Construction enforces `p = 3 (mod 4)`, `e = 2m` and `e/s` even, where
/// `s = gcd(l, e)`. Use [`CodeSpec::unchecked`] to describe parameters
/// outside those hypotheses for brute-force work only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeSpec {
    pub p: u32,
    pub e: usize,
    pub l: u64,
    pub i: u8,
    pub m: usize,
    pub s: usize,
    #[serde(skip)]
    admissible: bool,
}

impl CodeSpec {
    pub fn new(p: u32, e: usize, l: u64, i: u8) -> Result<Self> {
        let spec = Self::unchecked(p, e, l, i)?;
        if p % 4 != 3 {
            return param(format!("p = {p} must satisfy p = 3 (mod 4)"));
        }
        if !e.is_multiple_of(2) {
            return param(format!("e = {e} must be even"));
        }
        if !(e / spec.s).is_multiple_of(2) {
            return param(format!("e/s = {e}/{} must be even", spec.s));
        }
        Ok(Self { admissible: true, ..spec })
    }

    /// Basic sanity only: `p` an odd prime, `e, l >= 1`, `i` in `{0, 1}`.
    /// Closed-form operations refuse specs built this way unless they
    /// happen to satisfy the hypotheses.
    pub fn unchecked(p: u32, e: usize, l: u64, i: u8) -> Result<Self> {
        if p < 3 || !is_prime(p as u64) {
            return param(format!("p = {p} must be an odd prime"));
        }
        if e == 0 {
            return param("e must be positive");
        }
        if l == 0 {
            return param("l must be positive");
        }
        CyclotomicClass::from_index(i)?;
        let s = gcd(l, e as u64) as usize;
        let admissible = p % 4 == 3 && e.is_multiple_of(2) && (e / s).is_multiple_of(2);
        Ok(Self { p, e, l, i, m: e / 2, s, admissible })
    }

    pub fn is_admissible(&self) -> bool {
        self.admissible
    }

    pub fn class(&self) -> CyclotomicClass {
        CyclotomicClass::from_index(self.i).expect("validated at construction")
    }

    /// Parity of `m/s`. Only meaningful for admissible specs.
    pub fn parity(&self) -> Parity {
        if (self.m / self.s) % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Same `(p, e, l)`, the other cyclotomic class.
    pub fn with_class(&self, i: u8) -> Result<Self> {
        if self.admissible {
            Self::new(self.p, self.e, self.l, i)
        } else {
            Self::unchecked(self.p, self.e, self.l, i)
        }
    }

    pub(crate) fn require_admissible(&self, what: &str) -> Result<()> {
        if self.admissible {
            Ok(())
        } else {
            Err(crate::Error::Refused(format!(
                "{what} needs p = 3 (mod 4), e even and e/s even; got p = {}, e = {}, s = {}",
                self.p, self.e, self.s
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_quantities() {
        let s = CodeSpec::new(3, 4, 2, 0).unwrap();
        assert_eq!((s.m, s.s, s.parity()), (2, 2, Parity::Odd));
        let s = CodeSpec::new(3, 4, 1, 1).unwrap();
        assert_eq!((s.m, s.s, s.parity()), (2, 1, Parity::Even));
        let s = CodeSpec::new(3, 2, 11, 0).unwrap();
        assert_eq!((s.m, s.s, s.parity()), (1, 1, Parity::Odd));
    }

    #[test]
    fn hypotheses_are_enforced() {
        assert!(CodeSpec::new(5, 2, 1, 0).is_err());
        assert!(CodeSpec::new(3, 3, 1, 0).is_err());
        // e/s = 3
        assert!(CodeSpec::new(3, 6, 2, 0).is_err());
        assert!(CodeSpec::new(3, 2, 1, 2).is_err());
        assert!(CodeSpec::new(9, 2, 1, 0).is_err());
        let loose = CodeSpec::unchecked(5, 2, 1, 0).unwrap();
        assert!(!loose.is_admissible());
    }
}
