//! Sparse matrices over F3 with Gaussian elimination, kernels, homology of a
//! two-step complex, and deterministic linear solving.

use std::collections::BTreeMap;

use crate::Grp3Error;

/// A sparse matrix over the field F3 = {0, 1, 2}. Only nonzero entries are
/// stored; all arithmetic is performed mod 3 eagerly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F3Matrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), u8>,
}

/// Result of row reduction: the echelon form, its rank, pivot columns and a
/// basis of the right kernel.
#[derive(Clone, Debug)]
pub struct RowReduced {
    pub reduced: F3Matrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    pub kernel: Vec<Vec<u8>>,
}

/// Homology of `d_in` followed by `d_out` at the middle term: its dimension
/// and a set of representative cycles independent modulo boundaries.
#[derive(Clone, Debug)]
pub struct Homology {
    pub dim: usize,
    pub representatives: Vec<Vec<u8>>,
}

fn norm3(v: i64) -> u8 {
    v.rem_euclid(3) as u8
}

impl F3Matrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        F3Matrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = F3Matrix::new(n, n);
        for i in 0..n {
            m.set(i, i, 1).unwrap();
        }
        m
    }

    /// Build a matrix from dense rows; entries reduced mod 3.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
        let mut m = F3Matrix::new(nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, norm3(v)).unwrap();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        *self.entries.get(&(r, c)).unwrap_or(&0)
    }

    pub fn set(&mut self, r: usize, c: usize, v: u8) -> Result<(), Grp3Error> {
        if r >= self.rows || c >= self.cols {
            return Err(Grp3Error::IndexOutOfBounds(r, c, self.rows, self.cols));
        }
        let v = v % 3;
        if v == 0 {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
        Ok(())
    }

    /// Add `v` to the entry at (r, c), mod 3.
    pub fn add_at(&mut self, r: usize, c: usize, v: u8) -> Result<(), Grp3Error> {
        let cur = self.get(r, c);
        self.set(r, c, (cur + v) % 3)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> F3Matrix {
        let mut t = F3Matrix::new(self.cols, self.rows);
        for (&(r, c), &v) in &self.entries {
            t.entries.insert((c, r), v);
        }
        t
    }

    /// Matrix product self * rhs over F3.
    pub fn mul(&self, rhs: &F3Matrix) -> Result<F3Matrix, Grp3Error> {
        if self.cols != rhs.rows {
            return Err(Grp3Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = F3Matrix::new(self.rows, rhs.cols);
        // Index rhs by row for sparse traversal.
        let mut rhs_rows: BTreeMap<usize, Vec<(usize, u8)>> = BTreeMap::new();
        for (&(r, c), &v) in &rhs.entries {
            rhs_rows.entry(r).or_default().push((c, v));
        }
        for (&(r, k), &a) in &self.entries {
            if let Some(row) = rhs_rows.get(&k) {
                for &(c, b) in row {
                    out.add_at(r, c, (a * b) % 3)?;
                }
            }
        }
        Ok(out)
    }

    /// Apply the matrix to a column vector.
    pub fn apply(&self, v: &[u8]) -> Result<Vec<u8>, Grp3Error> {
        if v.len() != self.cols {
            return Err(Grp3Error::DimensionMismatch(format!(
                "matrix has {} cols, vector has {}",
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![0u8; self.rows];
        for (&(r, c), &a) in &self.entries {
            out[r] = (out[r] + a * (v[c] % 3)) % 3;
        }
        Ok(out)
    }

    /// Gaussian elimination to reduced row echelon form, returning the rank,
    /// the pivot columns and a basis of the right kernel. Deterministic:
    /// pivots are chosen left-to-right, top-to-bottom.
    pub fn row_reduce(&self) -> RowReduced {
        // Work on a dense copy of the rows; matrices in this workspace stay
        // small enough for that to be the fastest option in practice.
        let mut m: Vec<Vec<u8>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c)).collect())
            .collect();
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            let Some(sel) = (pivot_row..self.rows).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(pivot_row, sel);
            // Normalize pivot to 1 (multiply row by inverse; 2 is its own inverse mod 3).
            let inv = if m[pivot_row][col] == 2 { 2 } else { 1 };
            if inv != 1 {
                for x in m[pivot_row].iter_mut() {
                    *x = (*x * inv) % 3;
                }
            }
            for r in 0..self.rows {
                if r != pivot_row && m[r][col] != 0 {
                    let f = m[r][col];
                    for c in col..self.cols {
                        m[r][c] = (m[r][c] + (3 - f % 3) * m[pivot_row][c]) % 3;
                    }
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
            if pivot_row == self.rows {
                break;
            }
        }
        let rank = pivot_cols.len();
        // Kernel basis: one vector per free column.
        let mut kernel = Vec::new();
        let pivot_of_col: BTreeMap<usize, usize> = pivot_cols
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i))
            .collect();
        for free in 0..self.cols {
            if pivot_of_col.contains_key(&free) {
                continue;
            }
            let mut v = vec![0u8; self.cols];
            v[free] = 1;
            for (&pc, &pr) in &pivot_of_col {
                // pivot row pr has 1 in column pc; entry in the free column
                // dictates the compensating coefficient.
                let coeff = m[pr][free];
                v[pc] = (3 - coeff) % 3;
            }
            kernel.push(v);
        }
        let mut reduced = F3Matrix::new(self.rows, self.cols);
        for (r, row) in m.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    reduced.entries.insert((r, c), v);
                }
            }
        }
        RowReduced {
            reduced,
            rank,
            pivot_cols,
            kernel,
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    /// Rank by bit-sliced elimination: each row is a pair of bit planes
    /// (plane 1 marks entries equal to 1, plane 2 entries equal to 2), so one
    /// row operation costs two words per 64 columns. Used for large matrices
    /// where only the rank matters.
    pub fn rank_fast(&self) -> usize {
        let words = self.cols.div_ceil(64);
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut p1 = vec![vec![0u64; words]; self.rows];
        let mut p2 = vec![vec![0u64; words]; self.rows];
        for (&(r, c), &v) in &self.entries {
            match v {
                1 => p1[r][c / 64] |= 1 << (c % 64),
                2 => p2[r][c / 64] |= 1 << (c % 64),
                _ => {}
            }
        }
        // z = x + y mod 3 on one-hot planes.
        #[inline]
        fn add_planes(x1: u64, x2: u64, y1: u64, y2: u64) -> (u64, u64) {
            let xz = !(x1 | x2);
            let yz = !(y1 | y2);
            ((x1 & yz) | (y1 & xz) | (x2 & y2), (x2 & yz) | (y2 & xz) | (x1 & y1))
        }
        let mut rank = 0usize;
        for col in 0..self.cols {
            let (w, b) = (col / 64, 1u64 << (col % 64));
            let Some(sel) = (rank..self.rows).find(|&r| (p1[r][w] | p2[r][w]) & b != 0) else {
                continue;
            };
            p1.swap(rank, sel);
            p2.swap(rank, sel);
            // Normalize the pivot entry to 1 (scaling by 2 swaps the planes).
            if p2[rank][w] & b != 0 {
                std::mem::swap(&mut p1[rank], &mut p2[rank]);
            }
            for r in (rank + 1)..self.rows {
                let coeff = if p1[r][w] & b != 0 {
                    2 // subtract the pivot row: add 2x
                } else if p2[r][w] & b != 0 {
                    1
                } else {
                    continue;
                };
                for k in 0..words {
                    let (q1, q2) = if coeff == 1 {
                        (p1[rank][k], p2[rank][k])
                    } else {
                        (p2[rank][k], p1[rank][k])
                    };
                    let (z1, z2) = add_planes(p1[r][k], p2[r][k], q1, q2);
                    p1[r][k] = z1;
                    p2[r][k] = z2;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Solve `self * x = target`. Free variables are set to zero, which makes
    /// the answer deterministic (lexicographically least assignment).
    pub fn solve_preimage(&self, target: &[u8]) -> Option<Vec<u8>> {
        if target.len() != self.rows {
            return None;
        }
        // Augment with the target column and eliminate.
        let mut aug = F3Matrix::new(self.rows, self.cols + 1);
        for (&(r, c), &v) in &self.entries {
            aug.entries.insert((r, c), v);
        }
        for (r, &v) in target.iter().enumerate() {
            if v % 3 != 0 {
                aug.entries.insert((r, self.cols), v % 3);
            }
        }
        let rr = aug.row_reduce();
        // Inconsistent iff the augmented column is a pivot.
        if rr.pivot_cols.contains(&self.cols) {
            return None;
        }
        let mut x = vec![0u8; self.cols];
        for (i, &pc) in rr.pivot_cols.iter().enumerate() {
            x[pc] = rr.reduced.get(i, self.cols);
        }
        Some(x)
    }
}

/// Homology at the middle of `source --d_in--> middle --d_out--> target`.
///
/// `d_in` maps into the middle term (its rows index the middle basis) and
/// `d_out` maps out of it (its columns index the middle basis). Rejects input
/// whose composite is nonzero, which always signals a differential bug
/// upstream.
pub fn homology_at(d_in: &F3Matrix, d_out: &F3Matrix) -> Result<Homology, Grp3Error> {
    if d_in.rows() != d_out.cols() {
        return Err(Grp3Error::DimensionMismatch(format!(
            "d_in has {} rows but d_out has {} cols",
            d_in.rows(),
            d_out.cols()
        )));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(Grp3Error::NotAComplex);
    }
    let cycles = d_out.row_reduce().kernel;
    let boundary_rank = d_in.rank();
    let dim = cycles.len() - boundary_rank;
    // Representatives: cycles that extend the boundary space to the full
    // cycle space. Stack boundaries first, then greedily add cycles that
    // raise the rank.
    let n = d_in.rows();
    let mut cols: Vec<Vec<u8>> = Vec::new();
    // Boundary columns.
    for c in 0..d_in.cols() {
        let col: Vec<u8> = (0..n).map(|r| d_in.get(r, c)).collect();
        cols.push(col);
    }
    let mut current_rank = columns_matrix(n, &cols).rank();
    let mut representatives = Vec::new();
    for z in &cycles {
        if representatives.len() == dim {
            break;
        }
        cols.push(z.clone());
        let r = columns_matrix(n, &cols).rank();
        if r > current_rank {
            current_rank = r;
            representatives.push(z.clone());
        } else {
            cols.pop();
        }
    }
    Ok(Homology {
        dim,
        representatives,
    })
}

fn columns_matrix(n: usize, cols: &[Vec<u8>]) -> F3Matrix {
    let mut m = F3Matrix::new(n, cols.len());
    for (c, col) in cols.iter().enumerate() {
        for (r, &v) in col.iter().enumerate() {
            if v % 3 != 0 {
                m.set(r, c, v % 3).unwrap();
            }
        }
    }
    m
}
