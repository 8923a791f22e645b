//! Solving `alpha^{p^l} X^{p^{2l}} + alpha X = -beta^{p^l}` over `F_q`.
//!
//! The left side is `F_p`-linear in `X`, so it is written down as an `e x e`
//! matrix over `F_p` (column `j` is the image of `x^j`) and solved by dense
//! elimination.

use crate::error::{param, Result};
use crate::field::{FieldParams, FqElement};
use crate::linalg::solve_mod_p;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearizedSolution {
    Unsolvable,
    /// Trivial kernel: the map is a permutation of `F_q`.
    Unique(FqElement),
    /// A representative plus a basis of the kernel; the full solution set is
    /// `representative + span(kernel_basis)`.
    Affine {
        representative: FqElement,
        kernel_basis: Vec<FqElement>,
    },
}

impl LinearizedSolution {
    pub fn is_solvable(&self) -> bool {
        !matches!(self, Self::Unsolvable)
    }

    pub fn representative(&self) -> Option<&FqElement> {
        match self {
            Self::Unsolvable => None,
            Self::Unique(x) => Some(x),
            Self::Affine { representative, .. } => Some(representative),
        }
    }

    pub fn kernel_dimension(&self) -> Option<usize> {
        match self {
            Self::Unsolvable => None,
            Self::Unique(_) => Some(0),
            Self::Affine { kernel_basis, .. } => Some(kernel_basis.len()),
        }
    }

    /// Every solution, by expanding the kernel span. Intended for small
    /// kernels only.
    pub fn all_solutions(&self, fp: &FieldParams) -> Vec<FqElement> {
        match self {
            Self::Unsolvable => Vec::new(),
            Self::Unique(x) => vec![x.clone()],
            Self::Affine { representative, kernel_basis } => {
                let mut out = vec![representative.clone()];
                for v in kernel_basis {
                    let mut next = Vec::with_capacity(out.len() * fp.p() as usize);
                    for base in &out {
                        for c in 0..fp.p() {
                            next.push(fp.add(base, &fp.scale(c, v)));
                        }
                    }
                    out = next;
                }
                out
            }
        }
    }
}

/// The linear map `X -> alpha^{p^l} X^{p^{2l}} + alpha X` as a matrix.
#[derive(Debug, Clone)]
pub struct LinearizedMap<'a> {
    fp: &'a FieldParams,
    alpha: FqElement,
    l: u64,
    rows: Vec<Vec<u32>>,
}

impl<'a> LinearizedMap<'a> {
    pub fn new(alpha: &FqElement, l: u64, fp: &'a FieldParams) -> Result<Self> {
        if alpha.is_zero() {
            return param("alpha must be nonzero");
        }
        let e = fp.e();
        let mut rows = vec![vec![0u32; e]; e];
        let map = LinearizedMap { fp, alpha: alpha.clone(), l, rows: Vec::new() };
        for j in 0..e {
            let image = map.apply(&fp.monomial(j));
            for (row, &c) in rows.iter_mut().zip(image.coeffs()) {
                row[j] = c;
            }
        }
        Ok(LinearizedMap { rows, ..map })
    }

    /// Evaluates the polynomial directly in `F_q`.
    pub fn apply(&self, x: &FqElement) -> FqElement {
        let fp = self.fp;
        let lead = fp.frobenius(&self.alpha, self.l);
        let x_pow = fp.frobenius(x, 2 * self.l);
        fp.add(&fp.mul(&lead, &x_pow), &fp.mul(&self.alpha, x))
    }

    /// Solves `map(X) = rhs`.
    pub fn solve(&self, rhs: &FqElement) -> LinearizedSolution {
        let fp = self.fp;
        match solve_mod_p(&self.rows, rhs.coeffs(), fp.e(), fp.p()) {
            None => LinearizedSolution::Unsolvable,
            Some(sol) => {
                let representative = fp.element(&sol.particular).expect("reduced coefficients");
                if sol.kernel.is_empty() {
                    LinearizedSolution::Unique(representative)
                } else {
                    let kernel_basis =
                        sol.kernel.iter().map(|v| fp.element(v).expect("reduced coefficients")).collect();
                    LinearizedSolution::Affine { representative, kernel_basis }
                }
            }
        }
    }

    pub fn kernel_dimension(&self) -> usize {
        self.fp.e() - crate::linalg::rank_mod_p(self.rows.clone(), self.fp.p())
    }
}

/// Solves `alpha^{p^l} X^{p^{2l}} + alpha X = -beta^{p^l}`.
pub fn linearized_solve(alpha: &FqElement, l: u64, beta: &FqElement, fp: &FieldParams) -> Result<LinearizedSolution> {
    let map = LinearizedMap::new(alpha, l, fp)?;
    let rhs = fp.neg(&fp.frobenius(beta, l));
    Ok(map.solve(&rhs))
}
