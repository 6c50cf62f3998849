//! Weyl functors of hook shape, presented as a quotient of a divided power
//! tensor an exterior power by one layer of straightening relations.
//!
//! An ambient monomial at a fixed weight is a pair (α, β): the exterior part
//! takes one letter from each coordinate in β, and α = weight − 1_β is the
//! divided-power part.  A monomial is standard when some letter of α is
//! strictly smaller than every letter of β; standard monomials descend to a
//! basis of the quotient.  The relation map sends e^α ⊗ e_β to
//! Σ_i e^{α−e_i} ⊗ (e_β ∧ e_i), wedging on the right with sorting signs, and
//! arbitrary vectors are straightened by one exact solve against
//! [standard columns | relation columns].
//!
//! This route keeps hook weight spaces at binomial-coefficient size where the
//! conjugate-shape exterior model would be exponentially larger, which is what
//! makes long one-row/one-column complexes tractable.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{EchelonForm, IntegerMatrix};

use super::weightspace::{insert_zero, merge_weight, wedge_adjoin, wedge_merge_vars, wedge_shift_vars};

/// One hook weight space: ambient monomials, the standard subset, and the
/// echelon form used to straighten ambient vectors into standard coordinates.
pub(crate) struct HookSpace {
    pub ambient_labels: Vec<(Vec<u64>, Vec<usize>)>,
    pub std_labels: Vec<(Vec<u64>, Vec<usize>)>,
    ambient_index: HashMap<(Vec<u64>, Vec<usize>), usize>,
    std_index: HashMap<(Vec<u64>, Vec<usize>), usize>,
    reducer: EchelonForm,
}

impl HookSpace {
    pub fn rank(&self) -> usize {
        self.std_labels.len()
    }

    pub fn std_index_of(&self, alpha: &[u64], beta: &[usize]) -> Option<usize> {
        self.std_index.get(&(alpha.to_vec(), beta.to_vec())).copied()
    }

    pub fn ambient_index_of(&self, alpha: &[u64], beta: &[usize]) -> Option<usize> {
        self.ambient_index.get(&(alpha.to_vec(), beta.to_vec())).copied()
    }

    /// Standard coordinates of ambient column vectors.
    pub fn reduce(&self, ambient_cols: &IntegerMatrix) -> Result<IntegerMatrix> {
        let z = self.reducer.solve_matrix(ambient_cols).ok_or_else(|| {
            Error::Internal("straightening failed: vector outside standard + relation span".into())
        })?;
        let keep: Vec<usize> = (0..self.std_labels.len()).collect();
        Ok(z.select_rows(&keep))
    }
}

/// All k-subsets of `items`, in lexicographic order.
fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[usize], start: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..items.len() {
            if items.len() - j < k - cur.len() {
                break;
            }
            cur.push(items[j]);
            rec(items, j + 1, k, cur, out);
            cur.pop();
        }
    }
    rec(items, 0, k, &mut cur, &mut out);
    out
}

/// Ambient monomials (α, β) with α + 1_β = weight, |β| = legs, sorted by α
/// lexicographically decreasing.
fn ambient_label_list(arm: u64, legs: usize, weight: &[u64]) -> Vec<(Vec<u64>, Vec<usize>)> {
    if weight.iter().sum::<u64>() != arm + legs as u64 {
        return Vec::new();
    }
    let supp: Vec<usize> = (1..=weight.len()).filter(|&j| weight[j - 1] > 0).collect();
    if supp.len() < legs {
        return Vec::new();
    }
    let mut labels: Vec<(Vec<u64>, Vec<usize>)> = subsets(&supp, legs)
        .into_iter()
        .map(|beta| {
            let mut alpha = weight.to_vec();
            for &b in &beta {
                alpha[b - 1] -= 1;
            }
            (alpha, beta)
        })
        .collect();
    labels.sort_by(|a, b| b.0.cmp(&a.0));
    labels
}

fn is_standard(alpha: &[u64], beta: &[usize]) -> bool {
    match beta.first() {
        None => true,
        Some(&b0) => alpha.iter().position(|&a| a > 0).is_some_and(|j| j + 1 < b0),
    }
}

type SpaceKey = (u64, usize, Vec<u64>);
type MapKey = (u64, usize, Vec<u64>, usize, bool);

fn space_cache() -> &'static Mutex<HashMap<SpaceKey, Arc<HookSpace>>> {
    static CACHE: OnceLock<Mutex<HashMap<SpaceKey, Arc<HookSpace>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn map_cache() -> &'static Mutex<HashMap<MapKey, Arc<IntegerMatrix>>> {
    static CACHE: OnceLock<Mutex<HashMap<MapKey, Arc<IntegerMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn space(arm: u64, legs: usize, weight: &[u64]) -> Result<Arc<HookSpace>> {
    let key = (arm, legs, weight.to_vec());
    if let Some(s) = space_cache().lock().unwrap().get(&key) {
        return Ok(s.clone());
    }
    let built = Arc::new(build_space(arm, legs, weight)?);
    space_cache().lock().unwrap().insert(key, built.clone());
    Ok(built)
}

fn build_space(arm: u64, legs: usize, weight: &[u64]) -> Result<HookSpace> {
    let ambient_labels = ambient_label_list(arm, legs, weight);
    let ambient_index: HashMap<_, _> =
        ambient_labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
    let std_labels: Vec<_> =
        ambient_labels.iter().filter(|(a, b)| is_standard(a, b)).cloned().collect();
    let std_index: HashMap<_, _> =
        std_labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();

    let n_amb = ambient_labels.len();
    let n_std = std_labels.len();
    // standard unit columns, then relation columns
    let mut stacked = IntegerMatrix::zero(n_amb, n_std);
    for (j, l) in std_labels.iter().enumerate() {
        stacked.set(ambient_index[l], j, BigInt::one());
    }
    let relation_domain = if legs == 0 {
        Vec::new()
    } else {
        ambient_label_list(arm + 1, legs - 1, weight)
    };
    let mut relations = IntegerMatrix::zero(n_amb, relation_domain.len());
    for (j, (alpha, beta)) in relation_domain.iter().enumerate() {
        for i in 1..=alpha.len() {
            if alpha[i - 1] == 0 {
                continue;
            }
            let (new_beta, sign) = match wedge_adjoin(beta, i) {
                Some(x) => x,
                None => continue,
            };
            let mut new_alpha = alpha.clone();
            new_alpha[i - 1] -= 1;
            let row = ambient_index[&(new_alpha, new_beta)];
            relations.add_to(row, j, &BigInt::from(sign));
        }
    }
    let reducer = EchelonForm::new(&stacked.hstack(&relations));
    if reducer.rank() != n_amb {
        return Err(Error::Internal(format!(
            "standard + relation columns do not span: hook ({arm},1^{legs}), weight {weight:?}"
        )));
    }
    let kernel = reducer.kernel();
    for j in 0..kernel.cols() {
        if kernel.column(j).iter().take(n_std).any(|x| !x.is_zero()) {
            return Err(Error::Internal(format!(
                "standard monomials meet the relation span: hook ({arm},1^{legs}), weight {weight:?}"
            )));
        }
    }
    Ok(HookSpace { ambient_labels, std_labels, ambient_index, std_index, reducer })
}

/// Matrix of the merge of coordinates i, i+1 on standard monomials.
pub(crate) fn specialization(
    arm: u64,
    legs: usize,
    weight: &[u64],
    i: usize,
) -> Result<Arc<IntegerMatrix>> {
    let key = (arm, legs, weight.to_vec(), i, false);
    if let Some(m) = map_cache().lock().unwrap().get(&key) {
        return Ok(m.clone());
    }
    let src = space(arm, legs, weight)?;
    let tgt = space(arm, legs, &merge_weight(weight, i))?;
    let mut img = IntegerMatrix::zero(tgt.ambient_labels.len(), src.rank());
    for (col, (alpha, beta)) in src.std_labels.iter().enumerate() {
        let merged_beta = match wedge_merge_vars(beta, i) {
            Some(b) => b,
            None => continue,
        };
        let a = alpha[i - 1];
        let b = alpha[i];
        let coeff = num_integer::binomial(BigInt::from(a + b), BigInt::from(a));
        let row = *tgt
            .ambient_index
            .get(&(merge_weight(alpha, i), merged_beta))
            .ok_or_else(|| Error::Internal("merged hook monomial missing from target".into()))?;
        img.add_to(row, col, &coeff);
    }
    let built = Arc::new(tgt.reduce(&img)?);
    map_cache().lock().unwrap().insert(key, built.clone());
    Ok(built)
}

/// Matrix of inserting a zero coordinate after slot i on standard monomials.
pub(crate) fn generization(
    arm: u64,
    legs: usize,
    weight: &[u64],
    i: usize,
) -> Result<Arc<IntegerMatrix>> {
    let key = (arm, legs, weight.to_vec(), i, true);
    if let Some(m) = map_cache().lock().unwrap().get(&key) {
        return Ok(m.clone());
    }
    let src = space(arm, legs, weight)?;
    let tgt = space(arm, legs, &insert_zero(weight, i))?;
    let mut img = IntegerMatrix::zero(tgt.ambient_labels.len(), src.rank());
    for (col, (alpha, beta)) in src.std_labels.iter().enumerate() {
        let row = *tgt
            .ambient_index
            .get(&(insert_zero(alpha, i), wedge_shift_vars(beta, i)))
            .ok_or_else(|| Error::Internal("shifted hook monomial missing from target".into()))?;
        img.add_to(row, col, &BigInt::one());
    }
    let built = Arc::new(tgt.reduce(&img)?);
    map_cache().lock().unwrap().insert(key, built.clone());
    Ok(built)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{bounded_compositions, kostka_number, Partition};

    fn unit_ambient(space: &HookSpace, alpha: &[u64], beta: &[usize]) -> IntegerMatrix {
        let idx = space.ambient_index[&(alpha.to_vec(), beta.to_vec())];
        let mut m = IntegerMatrix::zero(space.ambient_labels.len(), 1);
        m.set(idx, 0, BigInt::one());
        m
    }

    #[test]
    fn frozen_straightenings() {
        // weight (4,1,1) on the hook (4,1,1): unique standard monomial
        let s = space(4, 2, &[4, 1, 1]).unwrap();
        assert_eq!(s.std_labels, vec![(vec![4, 0, 0], vec![2, 3])]);
        let r = s.reduce(&unit_ambient(&s, &[3, 1, 0], &[1, 3])).unwrap();
        assert_eq!(r, IntegerMatrix::from_rows(1, 1, &[&[-1]]));

        // weight (3,1,1,1) on the hook (3,1,1,1)
        let s = space(3, 3, &[3, 1, 1, 1]).unwrap();
        assert_eq!(s.std_labels, vec![(vec![3, 0, 0, 0], vec![2, 3, 4])]);
        let r = s.reduce(&unit_ambient(&s, &[2, 0, 1, 0], &[1, 2, 4])).unwrap();
        assert_eq!(r, IntegerMatrix::from_rows(1, 1, &[&[1]]));
    }

    #[test]
    fn standard_count_matches_kostka() {
        for (arm, legs) in [(1u64, 0usize), (2, 0), (3, 0), (2, 1), (3, 1), (2, 2), (1, 3)] {
            let shape = Partition::hook(arm, legs).unwrap();
            let total = arm + legs as u64;
            for n in 1..=(total as usize + 1) {
                for w in bounded_compositions(total, &vec![total; n]) {
                    let s = space(arm, legs, &w).unwrap();
                    assert_eq!(
                        s.rank() as u64,
                        kostka_number(&shape, &w),
                        "({arm},1^{legs}) weight {w:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn one_row_merge_is_binomial() {
        let m = specialization(3, 0, &[1, 2], 1).unwrap();
        assert_eq!(*m, IntegerMatrix::from_rows(1, 1, &[&[3]]));
        let g = generization(3, 0, &[3], 0).unwrap();
        assert_eq!(*g, IntegerMatrix::from_rows(1, 1, &[&[1]]));
    }

    #[test]
    fn frozen_hook_merge() {
        // hook (2,1), weight (1,1,1): standard basis is
        // (α=(1,1,0), β={3}) then (α=(1,0,1), β={2})
        let s = space(2, 1, &[1, 1, 1]).unwrap();
        assert_eq!(
            s.std_labels,
            vec![(vec![1, 1, 0], vec![3]), (vec![1, 0, 1], vec![2])]
        );
        let m = specialization(2, 1, &[1, 1, 1], 1).unwrap();
        assert_eq!(*m, IntegerMatrix::from_rows(1, 2, &[&[2, -1]]));
    }
}
