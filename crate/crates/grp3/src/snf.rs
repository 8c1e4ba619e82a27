//! Internal integer diagonalization used to compute kernels and cokernels of
//! maps between finitely generated abelian groups. Matrices here are tiny
//! (tens of rows at most), so a dense i128 implementation is plenty.

/// Result of diagonalizing `a` by unimodular row and column operations.
///
/// * `diag` — the diagonal entries (nonnegative, possibly zero),
/// * `rank` — number of nonzero diagonal entries,
/// * `companion` — the companion matrix with the same row operations applied
///   (i.e. U * companion where U * a * V is diagonal),
/// * `v` — the accumulated column transformation V (columns past `rank` form
///   a lattice basis of the integer kernel of `a`).
pub struct Diagonalized {
    pub diag: Vec<i128>,
    pub rank: usize,
    pub companion: Vec<Vec<i128>>,
    pub v: Vec<Vec<i128>>,
}

/// Diagonalize `a` (rows x cols) by integer row/column operations, mirroring
/// the row operations onto `companion` (which must have the same row count).
pub fn diagonalize_with(mut a: Vec<Vec<i128>>, mut companion: Vec<Vec<i128>>) -> Diagonalized {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    assert!(companion.len() == rows, "companion row count mismatch");
    let mut v: Vec<Vec<i128>> = (0..cols)
        .map(|i| (0..cols).map(|j| i128::from(i == j)).collect())
        .collect();

    let mut t = 0usize;
    while t < rows.min(cols) {
        // Find the entry of smallest nonzero magnitude in the remaining block.
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if a[r][c] != 0
                    && pivot.map_or(true, |(pr, pc)| a[r][c].abs() < a[pr][pc].abs())
                {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        a.swap(t, pr);
        companion.swap(t, pr);
        if pc != t {
            for row in a.iter_mut() {
                row.swap(t, pc);
            }
            for row in v.iter_mut() {
                row.swap(t, pc);
            }
        }
        // Clear row and column t; repeated reduction handles non-divisibility.
        loop {
            let mut clean = true;
            for r in (t + 1)..rows {
                let q = a[r][t] / a[t][t];
                if q != 0 {
                    for c in 0..cols {
                        a[r][c] -= q * a[t][c];
                    }
                    for c in 0..companion[r].len() {
                        companion[r][c] -= q * companion[t][c];
                    }
                }
                if a[r][t] != 0 {
                    clean = false;
                }
            }
            for c in (t + 1)..cols {
                let q = a[t][c] / a[t][t];
                if q != 0 {
                    for r in 0..rows {
                        a[r][c] -= q * a[r][t];
                    }
                    for r in 0..cols {
                        v[r][c] -= q * v[r][t];
                    }
                }
                if a[t][c] != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // Some entry in row/column t is a nonzero remainder smaller than
            // the pivot; swap it into the pivot position and iterate.
            let mut best: Option<(usize, usize)> = None;
            for r in (t + 1)..rows {
                if a[r][t] != 0 {
                    best = Some((r, t));
                }
            }
            for c in (t + 1)..cols {
                if a[t][c] != 0 {
                    best = Some((t, c));
                }
            }
            if let Some((r, c)) = best {
                if r != t {
                    a.swap(t, r);
                    companion.swap(t, r);
                } else if c != t {
                    for row in a.iter_mut() {
                        row.swap(t, c);
                    }
                    for row in v.iter_mut() {
                        row.swap(t, c);
                    }
                }
            }
        }
        t += 1;
    }

    let mut diag = Vec::new();
    for i in 0..rows.min(cols) {
        diag.push(a[i][i].abs());
    }
    let rank = diag.iter().filter(|&&d| d != 0).count();
    // Nonzero entries always come first with this elimination order.
    debug_assert!(diag.iter().take(rank).all(|&d| d != 0));
    Diagonalized {
        diag,
        rank,
        companion,
        v,
    }
}

/// 3-adic valuation of |n| (n must be nonzero).
pub fn val3(mut n: i128) -> u32 {
    n = n.abs();
    debug_assert!(n != 0);
    let mut v = 0;
    while n % 3 == 0 {
        n /= 3;
        v += 1;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonalizes_simple_matrix() {
        let a = vec![vec![2, 4], vec![6, 8]];
        let d = diagonalize_with(a, vec![vec![], vec![]]);
        assert_eq!(d.rank, 2);
        let prod: i128 = d.diag.iter().product();
        assert_eq!(prod.abs(), 8); // |det| preserved
    }

    #[test]
    fn kernel_columns_of_v() {
        // x + y + z = 0 has a rank-2 kernel.
        let a = vec![vec![1, 1, 1]];
        let d = diagonalize_with(a.clone(), vec![vec![]]);
        assert_eq!(d.rank, 1);
        for c in d.rank..3 {
            let mut img = 0i128;
            for j in 0..3 {
                img += a[0][j] * d.v[j][c];
            }
            assert_eq!(img, 0);
        }
    }

    #[test]
    fn val3_basic() {
        assert_eq!(val3(9), 2);
        assert_eq!(val3(-27), 3);
        assert_eq!(val3(2), 0);
        assert_eq!(val3(18), 2);
    }
}
