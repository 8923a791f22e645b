//! Worker-pool plumbing shared by the enumerators.

use crate::error::{Error, Result};

/// Runs `f` inside a dedicated pool of `threads` workers, or on the global
/// pool when `threads` is `None`.
pub fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(0) => Err(Error::Parameter("thread count must be at least 1".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Internal(format!("cannot build worker pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// How the codeword space `F_q x F_q` is walked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnumerationMode {
    /// Every pair `(a, b)`.
    Full,
    /// One pair per `F_p^*`-scaling orbit, counted `p - 1` times.
    #[default]
    OrbitReduced,
}

// First nonzero coefficient of each element, by rank; 0 for the zero element.
pub(crate) fn leading_coefficients(fp: &crate::field::FieldParams) -> Vec<u32> {
    fp.elements().map(|x| x.coeffs().iter().copied().find(|&c| c != 0).unwrap_or(0)).collect()
}

/// Calls `visit(a_rank, b_rank, multiplicity)` for the pairs with
/// `a_rank == a`, in the given mode. The zero pair is visited once with
/// multiplicity 1.
pub(crate) fn for_each_pair_with_a(
    a: usize,
    q: usize,
    p: u32,
    lead: &[u32],
    mode: EnumerationMode,
    mut visit: impl FnMut(usize, usize, u64),
) {
    match mode {
        EnumerationMode::Full => (0..q).for_each(|b| visit(a, b, 1)),
        EnumerationMode::OrbitReduced => {
            if a == 0 {
                visit(0, 0, 1);
                (1..q).filter(|&b| lead[b] == 1).for_each(|b| visit(0, b, p as u64 - 1));
            } else if lead[a] == 1 {
                (0..q).for_each(|b| visit(a, b, p as u64 - 1));
            }
        }
    }
}
