//! Arithmetic in `F_p` and `F_q = F_p[x]/(f)`, `q = p^e`.
//!
//! Elements of `F_q` are coefficient vectors in the polynomial basis
//! `1, x, ..., x^{e-1}`. The prime field sits inside `F_q` as the constant
//! polynomials; the rest of the crate relies on that embedding.
//!
//! Everything here is deterministic: [`make_field`] always returns the same
//! modulus and generator for the same `(p, e)`.

use serde::Serialize;

use crate::error::{param, Error, Result};

/// Largest field order this crate will construct. All enumeration in the
/// crate is exhaustive over `F_q`, so anything beyond this is out of reach.
pub const MAX_FIELD_ORDER: u64 = 1 << 40;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    mod_pow(a as u64, p as u64 - 2, p as u64) as u32
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Quadratic character of `F_p`, extended by `eta(0) = 0`.
pub fn eta_p(a: u32, p: u32) -> i32 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    match mod_pow(a as u64, (p as u64 - 1) / 2, p as u64) {
        1 => 1,
        _ => -1,
    }
}

/// Index of a cyclotomic class of order 2 in `F_p^*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CyclotomicClass {
    /// `C_0`: the nonzero squares.
    Squares,
    /// `C_1`: the non-squares.
    NonSquares,
}

impl CyclotomicClass {
    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            0 => Ok(Self::Squares),
            1 => Ok(Self::NonSquares),
            _ => param(format!("cyclotomic class index must be 0 or 1, got {i}")),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Self::Squares => 0,
            Self::NonSquares => 1,
        }
    }

    /// Class of a nonzero residue; `None` for zero.
    pub fn of(a: u32, p: u32) -> Option<Self> {
        match eta_p(a, p) {
            1 => Some(Self::Squares),
            -1 => Some(Self::NonSquares),
            _ => None,
        }
    }
}

/// Members of `C_i^{(2,p)}` in increasing order.
pub fn cyclotomic_class(i: u8, p: u32) -> Result<Vec<u32>> {
    let class = CyclotomicClass::from_index(i)?;
    if p < 3 || !is_prime(p as u64) {
        return param(format!("p must be an odd prime, got {p}"));
    }
    Ok((1..p).filter(|&a| CyclotomicClass::of(a, p) == Some(class)).collect())
}

/// An element of `F_q`: `e` residues, coefficient of `x^0` first.
///
/// The derived ordering is lexicographic starting from the constant term,
/// which is the canonical order used for every enumeration in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FqElement {
    coeffs: Vec<u32>,
}

impl FqElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The residue `c` if this element is the embedded constant `c`.
    pub fn as_prime_field(&self) -> Option<u32> {
        match self.coeffs.split_first() {
            Some((&c, rest)) if rest.iter().all(|&x| x == 0) => Some(c),
            _ => None,
        }
    }
}

impl std::fmt::Display for FqElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

// Dense polynomials over F_p, lowest degree first, used only while searching
// for the modulus.
mod poly {
    use super::inv_mod;

    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p) as u64;
        while r.len() > dm {
            let d = r.len() - 1;
            let c = r[d] as u64 * lead_inv % p as u64;
            for (k, &mk) in m.iter().enumerate() {
                let idx = d - dm + k;
                r[idx] = ((r[idx] as u64 + (p as u64 - c) * mk as u64) % p as u64) as u32;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
            }
        }
        rem(&prod, m, p)
    }

    pub fn powmod(base: &[u32], mut exp: u64, m: &[u32], p: u32) -> Vec<u32> {
        let mut acc = vec![1u32];
        let mut b = rem(base, m, p);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(&acc, &b, m, p);
            }
            b = mulmod(&b, &b, m, p);
            exp >>= 1;
        }
        acc
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let len = a.len().max(b.len());
        let mut out: Vec<u32> = (0..len)
            .map(|k| {
                let x = a.get(k).copied().unwrap_or(0);
                let y = b.get(k).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(&mut out);
        out
    }

    /// Irreducibility of a monic `f` of degree `e`: `gcd(f, x^{p^k} - x) = 1`
    /// for every `k <= e/2`.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let e = f.len() - 1;
        if e <= 1 {
            return e == 1;
        }
        let x = [0u32, 1];
        let mut h = x.to_vec();
        for _ in 0..e / 2 {
            h = powmod(&h, p as u64, f, p);
            let g = gcd(f, &sub(&h, &x, p), p);
            if g.len() != 1 {
                return false;
            }
        }
        true
    }
}

/// A realization of `F_{p^e}` together with the tables every other module
/// leans on. Immutable once built.
#[derive(Debug, Clone)]
pub struct FieldParams {
    p: u32,
    e: usize,
    q: u64,
    modulus: Vec<u32>,
    generator: FqElement,
    // column j holds (x^j)^p
    frobenius: Vec<Vec<u32>>,
    // Tr(x^j)
    trace_basis: Vec<u32>,
}

/// Builds `F_{p^e}` with the lexicographically smallest monic irreducible
/// modulus and the lexicographically smallest primitive element (both
/// compared constant term first).
pub fn make_field(p: u32, e: usize) -> Result<FieldParams> {
    if !is_prime(p as u64) {
        return param(format!("p = {p} is not prime"));
    }
    if e == 0 {
        return param("extension degree e must be at least 1");
    }
    let q = (p as u64)
        .checked_pow(e as u32)
        .filter(|&q| q <= MAX_FIELD_ORDER)
        .ok_or_else(|| Error::Parameter(format!("field order {p}^{e} is too large")))?;

    let mut modulus = None;
    for rank in 0..q {
        let mut f = digits(rank, p, e);
        f.push(1);
        if poly::is_irreducible(&f, p) {
            modulus = Some(f);
            break;
        }
    }
    let modulus = modulus.ok_or_else(|| Error::Internal(format!("no irreducible of degree {e} over F_{p}")))?;

    let mut field = FieldParams {
        p,
        e,
        q,
        modulus,
        generator: FqElement { coeffs: vec![0; e] },
        frobenius: Vec::new(),
        trace_basis: Vec::new(),
    };
    field.frobenius = (0..e).map(|j| field.pow(&field.monomial(j), p as u128).coeffs).collect();
    field.trace_basis = (0..e)
        .map(|j| {
            let t = field.trace_by_frobenius(&field.monomial(j));
            t.as_prime_field().ok_or_else(|| Error::Internal(format!("Tr(x^{j}) is not in F_{p}")))
        })
        .collect::<Result<_>>()?;

    let factors = prime_factors(q - 1);
    let generator = (1..q)
        .map(|r| field.element_from_rank(r))
        .find(|g| factors.iter().all(|&r| !field.is_one(&field.pow(g, ((q - 1) / r) as u128))))
        .ok_or_else(|| Error::Internal(format!("no primitive element in F_{q}")))?;
    field.generator = generator;
    Ok(field)
}

// Base-p digits of `rank`, most significant first, so increasing rank walks
// coefficient vectors in lexicographic order starting from the constant term.
fn digits(mut rank: u64, p: u32, e: usize) -> Vec<u32> {
    let mut out = vec![0u32; e];
    for k in (0..e).rev() {
        out[k] = (rank % p as u64) as u32;
        rank /= p as u64;
    }
    out
}

impl FieldParams {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Monic modulus, `e + 1` coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn generator(&self) -> &FqElement {
        &self.generator
    }

    pub fn zero(&self) -> FqElement {
        FqElement { coeffs: vec![0; self.e] }
    }

    pub fn one(&self) -> FqElement {
        self.constant(1)
    }

    /// The embedded prime-field constant `c mod p`.
    pub fn constant(&self, c: u32) -> FqElement {
        let mut coeffs = vec![0; self.e];
        coeffs[0] = c % self.p;
        FqElement { coeffs }
    }

    /// `x^j` for `j < e`.
    pub fn monomial(&self, j: usize) -> FqElement {
        assert!(j < self.e, "monomial degree {j} out of range for e = {}", self.e);
        let mut coeffs = vec![0; self.e];
        coeffs[j] = 1;
        FqElement { coeffs }
    }

    pub fn element(&self, coeffs: &[u32]) -> Result<FqElement> {
        if coeffs.len() != self.e {
            return param(format!("expected {} coefficients, got {}", self.e, coeffs.len()));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.p) {
            return param(format!("coefficient {c} is not reduced mod {}", self.p));
        }
        Ok(FqElement { coeffs: coeffs.to_vec() })
    }

    /// Position of `x` in the canonical order; inverse of
    /// [`element_from_rank`](Self::element_from_rank).
    pub fn rank(&self, x: &FqElement) -> u64 {
        x.coeffs.iter().fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }

    pub fn element_from_rank(&self, rank: u64) -> FqElement {
        FqElement { coeffs: digits(rank, self.p, self.e) }
    }

    /// All of `F_q` in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FqElement> + '_ {
        (0..self.q).map(move |r| self.element_from_rank(r))
    }

    pub fn is_one(&self, x: &FqElement) -> bool {
        x.as_prime_field() == Some(1)
    }

    pub fn add(&self, a: &FqElement, b: &FqElement) -> FqElement {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| (x + y) % self.p).collect();
        FqElement { coeffs }
    }

    pub fn sub(&self, a: &FqElement, b: &FqElement) -> FqElement {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| (x + self.p - y) % self.p).collect();
        FqElement { coeffs }
    }

    pub fn neg(&self, a: &FqElement) -> FqElement {
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FqElement { coeffs }
    }

    /// `c * a` for a prime-field scalar `c`.
    pub fn scale(&self, c: u32, a: &FqElement) -> FqElement {
        let c = (c % self.p) as u64;
        let coeffs = a.coeffs.iter().map(|&x| (x as u64 * c % self.p as u64) as u32).collect();
        FqElement { coeffs }
    }

    pub fn mul(&self, a: &FqElement, b: &FqElement) -> FqElement {
        let e = self.e;
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for d in (e..2 * e - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            // x^e = -(f_0 + ... + f_{e-1} x^{e-1})
            for k in 0..e {
                let idx = d - e + k;
                prod[idx] = (prod[idx] + (p - c) * self.modulus[k] as u64) % p;
            }
        }
        prod.truncate(e);
        FqElement { coeffs: prod.into_iter().map(|c| c as u32).collect() }
    }

    pub fn square(&self, a: &FqElement) -> FqElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: &FqElement, mut exp: u128) -> FqElement {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.square(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &FqElement) -> Option<FqElement> {
        if a.is_zero() {
            None
        } else {
            Some(self.pow(a, (self.q - 2) as u128))
        }
    }

    /// `a^{p^k}` through the precomputed Frobenius matrix.
    pub fn frobenius(&self, a: &FqElement, k: u64) -> FqElement {
        let p = self.p as u64;
        let mut cur = a.clone();
        for _ in 0..k % self.e as u64 {
            let mut next = vec![0u64; self.e];
            for (j, &c) in cur.coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (row, &f) in self.frobenius[j].iter().enumerate() {
                    next[row] = (next[row] + c as u64 * f as u64) % p;
                }
            }
            cur = FqElement { coeffs: next.into_iter().map(|c| c as u32).collect() };
        }
        cur
    }

    /// `a^{p^k}` by square-and-multiply only.
    pub fn frobenius_by_pow(&self, a: &FqElement, k: u64) -> FqElement {
        let mut cur = a.clone();
        for _ in 0..k % self.e as u64 {
            cur = self.pow(&cur, self.p as u128);
        }
        cur
    }

    /// Absolute trace `Tr: F_q -> F_p`.
    pub fn trace(&self, a: &FqElement) -> u32 {
        let p = self.p as u64;
        let t = a.coeffs.iter().zip(&self.trace_basis).fold(0u64, |acc, (&c, &t)| (acc + c as u64 * t as u64) % p);
        t as u32
    }

    /// `sum_k a^{p^k}` evaluated literally in `F_q`.
    pub fn trace_by_frobenius(&self, a: &FqElement) -> FqElement {
        let mut acc = self.zero();
        let mut cur = a.clone();
        for _ in 0..self.e {
            acc = self.add(&acc, &cur);
            cur = self.pow(&cur, self.p as u128);
        }
        acc
    }

    /// `Tr(x^j)` for the polynomial basis.
    pub fn trace_basis(&self) -> &[u32] {
        &self.trace_basis
    }

    /// Quadratic character of `F_q`, `eta'(0) = 0`.
    pub fn eta_q(&self, a: &FqElement) -> i32 {
        if a.is_zero() {
            return 0;
        }
        if self.is_one(&self.pow(a, ((self.q - 1) / 2) as u128)) {
            1
        } else {
            -1
        }
    }

    /// Multiplicative order of a nonzero element, by exhaustive stepping.
    pub fn order_by_scan(&self, a: &FqElement) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let mut cur = a.clone();
        let mut k = 1;
        while !self.is_one(&cur) {
            cur = self.mul(&cur, a);
            k += 1;
        }
        Some(k)
    }
}

/// Trace of the prime-field constant `c` viewed in `F_{p^e}`: `e * c`.
pub fn trace_of_constant(c: u32, p: u32, e: usize) -> u32 {
    ((c as u64 * e as u64) % p as u64) as u32
}
