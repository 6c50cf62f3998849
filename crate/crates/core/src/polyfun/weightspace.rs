//! Weight spaces of functor expressions: canonical bases indexed by
//! per-factor labels, and the elementary coordinate moves (merge two adjacent
//! coordinates, insert a fresh zero coordinate) on those labels.

use std::collections::HashMap;
use std::fmt;

use crate::combinat::bounded_compositions;
use crate::error::{Error, Result};

use super::expr::{Atom, FunctorExpr};

/// Basis label of one tensor factor inside a weight space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FactorLabel {
    /// Divided or symmetric power: exponent vector, one entry per coordinate.
    Monomial(Vec<u64>),
    /// Exterior power: the increasing list of coordinates in the wedge
    /// (1-based).
    Wedge(Vec<usize>),
    /// Weyl functor, general shape: a semistandard tableau (rows).
    Tableau(Vec<Vec<u64>>),
    /// Weyl functor, hook shape: a standard pair of a divided-power exponent
    /// vector and a wedge.
    HookMonomial(Vec<u64>, Vec<usize>),
}

impl fmt::Display for FactorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorLabel::Monomial(v) => {
                let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "m[{}]", s.join(","))
            }
            FactorLabel::Wedge(s) => {
                let t: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                write!(f, "w{{{}}}", t.join(","))
            }
            FactorLabel::Tableau(rows) => {
                let t: Vec<String> = rows
                    .iter()
                    .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                    .collect();
                write!(f, "t[{}]", t.join("|"))
            }
            FactorLabel::HookMonomial(a, b) => {
                let s: Vec<String> = a.iter().map(|x| x.to_string()).collect();
                let t: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                write!(f, "h[{};{{{}}}]", s.join(","), t.join(","))
            }
        }
    }
}

/// Merge coordinates i and i+1 (1-based) of a weight vector.
pub fn merge_weight(w: &[u64], i: usize) -> Vec<u64> {
    assert!(i >= 1 && i < w.len(), "merge index out of range");
    let mut out = Vec::with_capacity(w.len() - 1);
    out.extend_from_slice(&w[..i - 1]);
    out.push(w[i - 1] + w[i]);
    out.extend_from_slice(&w[i + 1..]);
    out
}

/// Insert a zero after position i (0-based slot, 0 <= i <= len).
pub fn insert_zero(w: &[u64], i: usize) -> Vec<u64> {
    assert!(i <= w.len(), "insertion slot out of range");
    let mut out = Vec::with_capacity(w.len() + 1);
    out.extend_from_slice(&w[..i]);
    out.push(0);
    out.extend_from_slice(&w[i..]);
    out
}

/// Relabel a wedge under merging of coordinates i, i+1: None when both occur
/// (the merged coordinate would repeat); otherwise the monotone reindexing,
/// which carries no sign.
pub fn wedge_merge_vars(set: &[usize], i: usize) -> Option<Vec<usize>> {
    if set.contains(&i) && set.contains(&(i + 1)) {
        return None;
    }
    Some(set.iter().map(|&v| if v > i { v - 1 } else { v }).collect())
}

/// Relabel a wedge under inserting a fresh zero coordinate after slot i:
/// coordinates above i shift up by one; monotone, so no sign.
pub fn wedge_shift_vars(set: &[usize], i: usize) -> Vec<usize> {
    set.iter().map(|&v| if v > i { v + 1 } else { v }).collect()
}

/// Adjoin e_i to an increasing wedge from the right: e_beta ∧ e_i sorted.
/// None when i is already present; else the sign (-1)^{#(elements > i)}.
pub fn wedge_adjoin(beta: &[usize], i: usize) -> Option<(Vec<usize>, i64)> {
    if beta.contains(&i) {
        return None;
    }
    let above = beta.iter().filter(|&&b| b > i).count();
    let mut out = beta.to_vec();
    out.push(i);
    out.sort_unstable();
    let sign = if above % 2 == 0 { 1 } else { -1 };
    Some((out, sign))
}

/// Sort a sequence of coordinates, returning None on a repeat, else the
/// sorted sequence and the sign of the permutation.
pub fn sort_with_sign(seq: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v = seq.to_vec();
    let mut sign = 1i64;
    // insertion sort, counting swaps
    for k in 1..v.len() {
        let mut j = k;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// Valid weights for one atom, bounded pointwise by `bound`, in
/// lexicographically decreasing order.  Exterior factors are multilinear, so
/// their weights are 0/1 vectors.
pub fn atom_weights(atom: &Atom, bound: &[u64]) -> Result<Vec<Vec<u64>>> {
    let deg = atom.degree();
    match atom {
        Atom::Schur(l) => Err(Error::FormalAtom(format!(
            "Schur({l}) has no weight spaces; rewrite the query first"
        ))),
        Atom::Exterior(_) => {
            let caps: Vec<u64> = bound.iter().map(|&b| b.min(1)).collect();
            Ok(bounded_compositions(deg, &caps))
        }
        _ => Ok(bounded_compositions(deg, bound)),
    }
}

/// A weight space with its canonical ordered basis.  Basis elements are
/// tuples of factor labels; the order is splitting-major (first factor's
/// weight lexicographically decreasing), then per-factor label order.
#[derive(Clone, Debug)]
pub struct WeightSpace {
    pub expr: FunctorExpr,
    pub weight: Vec<u64>,
    pub basis: Vec<Vec<FactorLabel>>,
    index: HashMap<Vec<FactorLabel>, usize>,
}

impl WeightSpace {
    /// Enumerate the basis; `label_fn` supplies the ordered label list of one
    /// factor at one factor-weight.
    pub fn build(
        expr: &FunctorExpr,
        weight: &[u64],
        label_fn: &dyn Fn(&Atom, &[u64]) -> Result<Vec<FactorLabel>>,
    ) -> Result<WeightSpace> {
        let mut basis = Vec::new();
        if expr.total_degree() == weight.iter().sum::<u64>() {
            let mut splitting: Vec<Vec<u64>> = Vec::new();
            enumerate_splittings(
                expr.factors(),
                weight,
                &mut splitting,
                &mut |split: &[Vec<u64>]| -> Result<()> {
                    let mut lists = Vec::with_capacity(split.len());
                    for (atom, w) in expr.factors().iter().zip(split) {
                        lists.push(label_fn(atom, w)?);
                    }
                    cartesian(&lists, &mut basis);
                    Ok(())
                },
            )?;
        }
        let index = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        Ok(WeightSpace { expr: expr.clone(), weight: weight.to_vec(), basis, index })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, labels: &[FactorLabel]) -> Option<usize> {
        self.index.get(labels).copied()
    }

    /// Human-readable label of a basis element, factors joined by '*'.
    pub fn label_string(&self, j: usize) -> String {
        if self.basis[j].is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = self.basis[j].iter().map(|l| l.to_string()).collect();
        parts.join("*")
    }
}

fn enumerate_splittings(
    factors: &[Atom],
    remaining: &[u64],
    current: &mut Vec<Vec<u64>>,
    visit: &mut dyn FnMut(&[Vec<u64>]) -> Result<()>,
) -> Result<()> {
    let Some((atom, rest)) = factors.split_first() else {
        if remaining.iter().all(|&r| r == 0) {
            visit(current)?;
        }
        return Ok(());
    };
    if rest.is_empty() {
        // last factor must absorb the remainder exactly
        let ok = remaining.iter().sum::<u64>() == atom.degree()
            && match atom {
                Atom::Exterior(_) => remaining.iter().all(|&r| r <= 1),
                Atom::Schur(l) => {
                    return Err(Error::FormalAtom(format!(
                        "Schur({l}) has no weight spaces; rewrite the query first"
                    )))
                }
                _ => true,
            };
        if ok {
            current.push(remaining.to_vec());
            visit(current)?;
            current.pop();
        }
        return Ok(());
    }
    for w in atom_weights(atom, remaining)? {
        let next: Vec<u64> = remaining.iter().zip(&w).map(|(&r, &x)| r - x).collect();
        current.push(w);
        enumerate_splittings(rest, &next, current, visit)?;
        current.pop();
    }
    Ok(())
}

/// Cartesian product of per-factor label lists, first factor outermost.
fn cartesian(lists: &[Vec<FactorLabel>], out: &mut Vec<Vec<FactorLabel>>) {
    if lists.iter().any(|l| l.is_empty()) {
        return;
    }
    let mut idx = vec![0usize; lists.len()];
    loop {
        out.push(lists.iter().zip(&idx).map(|(l, &i)| l[i].clone()).collect());
        // odometer increment, last factor fastest
        let mut k = lists.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < lists[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Labels for the non-Weyl atoms; Weyl and Schur atoms are dispatched at a
/// higher level.
pub fn plain_factor_labels(atom: &Atom, w: &[u64]) -> Result<Vec<FactorLabel>> {
    match atom {
        Atom::Divided(_) | Atom::Symmetric(_) => Ok(vec![FactorLabel::Monomial(w.to_vec())]),
        Atom::Exterior(_) => {
            let supp: Vec<usize> =
                w.iter().enumerate().filter(|(_, &x)| x == 1).map(|(i, _)| i + 1).collect();
            Ok(vec![FactorLabel::Wedge(supp)])
        }
        Atom::Weyl(l) | Atom::Schur(l) => {
            Err(Error::Internal(format!("plain labels requested for shape {l}")))
        }
    }
}
