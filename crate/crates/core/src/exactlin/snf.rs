//! Smith normal form over the integers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntegerMatrix;

/// Smith invariant factors of an integer matrix: d_1 | d_2 | ... | d_r
/// followed by zeros, always of length min(rows, cols).
///
/// Fraction-free elimination with smallest-absolute-value pivot selection;
/// a divisibility sweep afterwards restores the chain condition.
pub fn smith_normal_form(m: &IntegerMatrix) -> Vec<BigUint> {
    let rows = m.rows();
    let cols = m.cols();
    let n = rows.min(cols);
    let mut a = m.to_dense();
    let mut t = 0usize;
    while t < n {
        let Some((pi, pj)) = min_abs_entry(&a, t) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            // clear column t below the pivot
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[i][t], &a[t][t]);
                if !q.is_zero() {
                    for j in t..cols {
                        let s = &a[t][j] * &q;
                        a[i][j] -= s;
                    }
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i); // strictly smaller remainder becomes pivot
                    clean = false;
                }
            }
            // clear row t to the right of the pivot
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[t][j], &a[t][t]);
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let s = &row[t] * &q;
                        row[j] -= s;
                    }
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        // pivot must divide every remaining entry; if not, fold the offending
        // row into row t and re-eliminate
        let piv = a[t][t].clone();
        let mut redo = false;
        'search: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&a[i][j] % &piv).is_zero() {
                    for jj in t..cols {
                        let add = a[i][jj].clone();
                        a[t][jj] += add;
                    }
                    redo = true;
                    break 'search;
                }
            }
        }
        if !redo {
            t += 1;
        }
    }
    let mut out: Vec<BigUint> = (0..n).map(|i| a[i][i].abs().to_biguint().unwrap()).collect();
    // nonzero invariants first (elimination already guarantees this, but be
    // canonical even for degenerate inputs)
    out.sort_by_key(|d| d.is_zero() as u8);
    out
}

fn min_abs_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Quotient rounded to nearest (ties toward zero), which keeps remainders at
/// most half the pivot during elimination.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if r.abs() * 2u8 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}
