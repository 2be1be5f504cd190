//! Small helpers for matrices of polynomials, stored row-major.

use crate::field::Field;
use crate::groebner::VectorElem;
use crate::poly::Polynomial;
use crate::ring::QuotientRing;

pub type Matrix<F> = Vec<Vec<Polynomial<F>>>;

pub fn zero_matrix<F: Field>(rows: usize, cols: usize) -> Matrix<F> {
    vec![vec![Polynomial::zero(); cols]; rows]
}

pub fn transpose<F: Field>(m: &Matrix<F>, rows: usize, cols: usize) -> Matrix<F> {
    let mut out = zero_matrix(cols, rows);
    for (i, row) in m.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            out[j][i] = e.clone();
        }
    }
    debug_assert_eq!(m.len(), rows);
    out
}

/// Column `j` as a free-module element.
pub fn column<F: Field>(m: &Matrix<F>, j: usize) -> VectorElem<F> {
    m.iter().map(|row| row[j].clone()).collect()
}

pub fn columns<F: Field>(m: &Matrix<F>, cols: usize) -> Vec<VectorElem<F>> {
    (0..cols).map(|j| column(m, j)).collect()
}

/// Assemble a matrix with the given rank from column vectors.
pub fn from_columns<F: Field>(rank: usize, cols: &[VectorElem<F>]) -> Matrix<F> {
    let mut out = zero_matrix(rank, cols.len());
    for (j, c) in cols.iter().enumerate() {
        debug_assert_eq!(c.len(), rank);
        for (i, e) in c.iter().enumerate() {
            out[i][j] = e.clone();
        }
    }
    out
}

/// Matrix product with entries reduced to canonical form in the ring.
pub fn mat_mul<F: Field>(
    ring: &QuotientRing<F>,
    a: &Matrix<F>,
    b: &Matrix<F>,
    rows: usize,
    mid: usize,
    cols: usize,
) -> Matrix<F> {
    let amb = ring.ambient();
    let mut out = zero_matrix(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            let mut acc = Polynomial::zero();
            for (k, _) in (0..mid).enumerate() {
                if a[i][k].is_zero() || b[k][j].is_zero() {
                    continue;
                }
                acc = amb.add(&acc, &amb.mul(&a[i][k], &b[k][j]));
            }
            out[i][j] = ring.reduce(&acc);
        }
    }
    out
}

pub fn is_zero_matrix<F: Field>(m: &Matrix<F>) -> bool {
    m.iter().all(|row| row.iter().all(|e| e.is_zero()))
}
