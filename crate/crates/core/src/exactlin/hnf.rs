//! Hermite-style column elimination: integral kernels, exact linear solves,
//! and lattice membership.
//!
//! The workhorse is a column echelon form computed by unimodular column
//! operations with smallest-absolute-value pivot selection (keeps entry
//! growth tame on the small structured matrices this crate produces).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::matrix::IntegerMatrix;

/// Column echelon data for a fixed matrix: `mat * transform == echelon`,
/// `transform` unimodular, pivot rows strictly increasing across the leading
/// columns, and all columns past the last pivot identically zero.
pub struct EchelonForm {
    rows: usize,
    cols: usize,
    /// echelon, column-major
    ech: Vec<Vec<BigInt>>,
    /// unimodular transform, column-major
    trans: Vec<Vec<BigInt>>,
    /// (pivot_row, column) pairs
    pivots: Vec<(usize, usize)>,
}

impl EchelonForm {
    pub fn new(m: &IntegerMatrix) -> Self {
        let rows = m.rows();
        let cols = m.cols();
        let mut ech: Vec<Vec<BigInt>> = (0..cols).map(|c| m.column(c)).collect();
        let mut trans: Vec<Vec<BigInt>> = (0..cols)
            .map(|c| {
                let mut v = vec![BigInt::zero(); cols];
                v[c] = BigInt::from(1);
                v
            })
            .collect();
        let mut pivots = Vec::new();
        let mut next = 0usize; // next pivot column slot
        for r in 0..rows {
            if next == cols {
                break;
            }
            loop {
                // smallest nonzero |entry| in row r among columns next..
                let mut best: Option<usize> = None;
                for (j, col) in ech.iter().enumerate().skip(next) {
                    if !col[r].is_zero()
                        && best.is_none_or(|b| col[r].abs() < ech[b][r].abs())
                    {
                        best = Some(j);
                    }
                }
                let Some(b) = best else { break };
                ech.swap(next, b);
                trans.swap(next, b);
                let mut clean = true;
                for j in next + 1..cols {
                    if ech[j][r].is_zero() {
                        continue;
                    }
                    let q = &ech[j][r] / &ech[next][r];
                    if !q.is_zero() {
                        for i in 0..rows {
                            let t = &ech[next][i] * &q;
                            ech[j][i] -= t;
                        }
                        for i in 0..cols {
                            let t = &trans[next][i] * &q;
                            trans[j][i] -= t;
                        }
                    }
                    if !ech[j][r].is_zero() {
                        clean = false;
                    }
                }
                if clean {
                    break;
                }
            }
            if !ech[next][r].is_zero() {
                if ech[next][r].is_negative() {
                    for v in ech[next].iter_mut() {
                        *v = -std::mem::take(v);
                    }
                    for v in trans[next].iter_mut() {
                        *v = -std::mem::take(v);
                    }
                }
                pivots.push((r, next));
                next += 1;
            }
        }
        EchelonForm { rows, cols, ech, trans, pivots }
    }

    /// Rank over the rationals (= number of pivots).
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the integral kernel lattice {x : M x = 0}, as matrix columns.
    /// Because the transform is unimodular the basis is complete: every
    /// integer kernel vector is an integer combination of these columns.
    pub fn kernel(&self) -> IntegerMatrix {
        let free: Vec<Vec<BigInt>> =
            self.trans.iter().skip(self.pivots.len()).cloned().collect();
        IntegerMatrix::from_columns(self.cols, &free)
    }

    /// Solve M x = b exactly over the integers; None when no integral
    /// solution exists.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut resid = b.to_vec();
        let mut coeffs = vec![BigInt::zero(); self.pivots.len()];
        let mut pk = 0usize;
        for r in 0..self.rows {
            if pk < self.pivots.len() && self.pivots[pk].0 == r {
                let col = pk; // pivot columns are 0..npivots in order
                let piv = &self.ech[col][r];
                let (q, rem) = num_integer::Integer::div_rem(&resid[r], piv);
                if !rem.is_zero() {
                    return None;
                }
                if !q.is_zero() {
                    for i in 0..self.rows {
                        let t = &self.ech[col][i] * &q;
                        resid[i] -= t;
                    }
                }
                coeffs[col] = q;
                pk += 1;
            } else if !resid[r].is_zero() {
                return None;
            }
        }
        // x = transform[..npivots] . coeffs
        let mut x = vec![BigInt::zero(); self.cols];
        for (col, q) in coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for i in 0..self.cols {
                x[i] += &self.trans[col][i] * q;
            }
        }
        Some(x)
    }

    /// Solve M X = B columnwise; None if any column fails.
    pub fn solve_matrix(&self, b: &IntegerMatrix) -> Option<IntegerMatrix> {
        assert_eq!(b.rows(), self.rows, "rhs rows mismatch");
        let mut cols = Vec::with_capacity(b.cols());
        for c in 0..b.cols() {
            cols.push(self.solve(&b.column(c))?);
        }
        Some(IntegerMatrix::from_columns(self.cols, &cols))
    }

    /// Does the column lattice of M contain v?
    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.solve(v).is_some()
    }
}

/// Complete basis of the integral kernel of `m`.
pub fn kernel_basis(m: &IntegerMatrix) -> IntegerMatrix {
    EchelonForm::new(m).kernel()
}

/// One-shot exact solve of m x = b over the integers.
pub fn solve(m: &IntegerMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    EchelonForm::new(m).solve(b)
}

/// One-shot exact solve of m X = B over the integers.
pub fn solve_matrix(m: &IntegerMatrix, b: &IntegerMatrix) -> Option<IntegerMatrix> {
    EchelonForm::new(m).solve_matrix(b)
}
