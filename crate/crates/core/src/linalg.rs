//! Dense exact linear algebra: row reduction, rank and kernels.

use crate::field::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub field: Field,
    pub cols: usize,
    pub rows: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn new(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Matrix {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        Matrix { field, cols, rows }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    /// Zero rows are dropped.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows.len()).find(|&i| !self.rows[i][c].is_zero()) else {
                continue;
            };
            self.rows.swap(r, p);
            let inv = self.rows[r][c].inv().unwrap();
            for v in self.rows[r].iter_mut().skip(c) {
                *v = &*v * &inv;
            }
            let pivot_row = self.rows[r].clone();
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !pv.is_zero() {
                        *v = &*v - &(&factor * pv);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows.len() {
                break;
            }
        }
        self.rows.truncate(r);
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{v : M v = 0}`, one vector per free column, with a 1 in
    /// that column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        (0..self.cols)
            .filter(|&j| is_pivot[j].is_none())
            .map(|j| {
                let mut v = vec![self.field.zero(); self.cols];
                v[j] = self.field.one();
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = -&m.rows[r][j];
                }
                v
            })
            .collect()
    }
}

/// Reduces `v` against rows of a matrix already in RREF with the given
/// pivots; the result is zero iff `v` lies in the row span.
pub fn reduce_against(rref_rows: &[Vec<Scalar>], pivots: &[usize], v: &[Scalar]) -> Vec<Scalar> {
    let mut out = v.to_vec();
    for (row, &c) in rref_rows.iter().zip(pivots) {
        if out[c].is_zero() {
            continue;
        }
        let factor = out[c].clone();
        for (o, rv) in out.iter_mut().zip(row) {
            if !rv.is_zero() {
                *o = &*o - &(&factor * rv);
            }
        }
    }
    out
}
