//! Dense row reduction over F_ℓ.
//!
//! Matrices are `Vec<Vec<u32>>` with entries already reduced into `0..p`.
//! Elimination skips zero entries, so the mostly-unit-vector matrices that
//! come out of the wedge-space computations stay cheap.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::Prime;

/// Reduced row-echelon form. Returns the nonzero rows and their pivot columns.
/// The result is unique for the row space, which makes it a canonical key.
pub fn rref(mut rows: Vec<Vec<u32>>, ncols: usize, p: Prime) -> (Vec<Vec<u32>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = p.inv(rows[r][col]).expect("nonzero pivot");
        if inv != 1 {
            for x in rows[r].iter_mut() {
                *x = p.mul(*x, inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                if y != 0 {
                    *x = p.sub(*x, p.mul(factor, y));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: Vec<Vec<u32>>, ncols: usize, p: Prime) -> usize {
    rref(rows, ncols, p).1.len()
}

/// Basis of `{x : A x = 0}` for `A` given by rows, one basis vector per free
/// column, in increasing free-column order.
pub fn nullspace(rows: Vec<Vec<u32>>, ncols: usize, p: Prime) -> Vec<Vec<u32>> {
    let (reduced, pivots) = rref(rows, ncols, p);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (row, &pc) in reduced.iter().zip(&pivots) {
            v[pc] = p.neg(row[free]);
        }
        basis.push(v);
    }
    basis
}

/// Reduce `v` against an RREF basis; the remainder is zero iff `v` lies in the span.
pub fn reduce_against(v: &mut [u32], rows: &[Vec<u32>], pivots: &[usize], p: Prime) {
    for (row, &pc) in rows.iter().zip(pivots) {
        let factor = v[pc];
        if factor == 0 {
            continue;
        }
        for (x, &y) in v.iter_mut().zip(row) {
            if y != 0 {
                *x = p.sub(*x, p.mul(factor, y));
            }
        }
    }
}

/// An echelon basis grown one vector at a time.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: Prime,
    ncols: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize, p: Prime) -> Echelon {
        Echelon {
            p,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` modulo the current span.
    pub fn remainder(&self, v: &[u32]) -> Vec<u32> {
        let mut w = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let factor = w[pc];
            if factor == 0 {
                continue;
            }
            for (x, &y) in w.iter_mut().zip(row) {
                if y != 0 {
                    *x = self.p.sub(*x, self.p.mul(factor, y));
                }
            }
        }
        w
    }

    pub fn is_independent(&self, v: &[u32]) -> bool {
        self.remainder(v).iter().any(|&x| x != 0)
    }

    /// Adds `v` if it is independent of the current span; reports whether it was.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        let mut w = self.remainder(v);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.p.inv(w[pc]).expect("nonzero pivot");
        for x in w.iter_mut() {
            *x = self.p.mul(*x, inv);
        }
        self.rows.push(w);
        self.pivots.push(pc);
        true
    }
}
