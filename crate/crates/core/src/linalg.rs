//! Dense Gaussian elimination over `F_p`.

/// Solution set of `A x = b` over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    /// Particular solution with every free variable set to zero.
    pub particular: Vec<u32>,
    /// Basis of the kernel of `A`.
    pub kernel: Vec<Vec<u32>>,
}

fn reduce(rows: &mut [Vec<u32>], cols: usize, p: u32) -> Vec<usize> {
    let p64 = p as u64;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(found) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = crate::field::inv_mod(rows[r][c], p) as u64;
        for v in rows[r].iter_mut() {
            *v = (*v as u64 * inv % p64) as u32;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c] == 0 {
                continue;
            }
            let factor = rows[i][c] as u64;
            for j in 0..rows[i].len() {
                let sub = factor * rows[r][j] as u64 % p64;
                rows[i][j] = ((rows[i][j] as u64 + p64 - sub) % p64) as u32;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank_mod_p(mut rows: Vec<Vec<u32>>, p: u32) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    reduce(&mut rows, cols, p).len()
}

/// Solves `A x = b` for a row-major `A` with `cols` unknowns. `None` when the
/// system is inconsistent.
pub fn solve_mod_p(a: &[Vec<u32>], b: &[u32], cols: usize, p: u32) -> Option<AffineSolution> {
    let mut rows: Vec<Vec<u32>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    let pivots = reduce(&mut rows, cols, p);
    // an inconsistent row reduces to 0 = nonzero
    if pivots.len() < rows.len() && rows[pivots.len()..].iter().any(|r| r[cols] != 0) {
        return None;
    }
    let mut particular = vec![0u32; cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = rows[r][cols];
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![0u32; cols];
            v[f] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = (p - rows[r][f]) % p;
            }
            v
        })
        .collect();
    Some(AffineSolution { particular, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn apply(a: &[Vec<u32>], x: &[u32], p: u32) -> Vec<u32> {
        a.iter()
            .map(|row| (row.iter().zip(x).map(|(&r, &v)| r as u64 * v as u64).sum::<u64>() % p as u64) as u32)
            .collect()
    }

    #[test]
    fn solves_and_reports_kernel() {
        let p = 5;
        let a = vec![vec![1, 2, 3], vec![2, 1, 1]];
        let b = vec![1, 2];
        let sol = solve_mod_p(&a, &b, 3, p).unwrap();
        assert_eq!(apply(&a, &sol.particular, p), b);
        assert_eq!(sol.kernel.len(), 1);
        assert_eq!(apply(&a, &sol.kernel[0], p), vec![0, 0]);
    }

    #[test]
    fn detects_inconsistency() {
        let a = vec![vec![1, 1], vec![2, 2]];
        assert!(solve_mod_p(&a, &[1, 1], 2, 3).is_none());
        assert_eq!(rank_mod_p(a, 3), 1);
    }
}
