//! Weyl functors of arbitrary shape, modeled as the image of row
//! comultiplication into the exterior tensor algebra of the conjugate shape.
//!
//! A basis monomial of the divided-power row tensor comultiplies each row
//! into all words of its content; the j-th letter of every row word lands in
//! column j, and each column is wedged in row order (sorting signs only).
//! Images of semistandard tableaux form a basis of the image lattice; the
//! coordinate merge and insert moves act on the ambient exterior tensor and
//! are solved back into that basis exactly.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinat::{semistandard_tableaux, Partition};
use crate::error::{Error, Result};
use crate::exactlin::{EchelonForm, IntegerMatrix};

use super::expr::{Atom, FunctorExpr};
use super::weightspace::{
    insert_zero, merge_weight, plain_factor_labels, sort_with_sign, FactorLabel, WeightSpace,
};

/// The weight-space data of one Weyl functor at one content: tableaux, their
/// image vectors in ambient coordinates, and an echelon form for solving
/// coordinates of new vectors.
pub(crate) struct BoxSpace {
    pub tableaux: Vec<Vec<Vec<u64>>>,
    pub vectors: IntegerMatrix,
    #[cfg_attr(not(test), allow(dead_code))]
    pub ambient: WeightSpace,
    pub ech: EchelonForm,
    tableau_index: HashMap<Vec<Vec<u64>>, usize>,
}

impl BoxSpace {
    #[cfg_attr(not(test), allow(dead_code))]
    pub fn rank(&self) -> usize {
        self.tableaux.len()
    }

    pub fn index_of(&self, t: &[Vec<u64>]) -> Option<usize> {
        self.tableau_index.get(t).copied()
    }
}

/// Exterior tensor expression of the conjugate shape, one factor per column.
pub(crate) fn conjugate_expr(lambda: &Partition) -> FunctorExpr {
    FunctorExpr::new(lambda.conjugate().parts().iter().map(|&c| Atom::Exterior(c)).collect())
}

type SpaceKey = (Vec<u64>, Vec<u64>);
type MapKey = (Vec<u64>, Vec<u64>, usize, bool);

fn space_cache() -> &'static Mutex<HashMap<SpaceKey, Arc<BoxSpace>>> {
    static CACHE: OnceLock<Mutex<HashMap<SpaceKey, Arc<BoxSpace>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn map_cache() -> &'static Mutex<HashMap<MapKey, Arc<IntegerMatrix>>> {
    static CACHE: OnceLock<Mutex<HashMap<MapKey, Arc<IntegerMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn space(lambda: &Partition, content: &[u64]) -> Result<Arc<BoxSpace>> {
    let key = (lambda.parts().to_vec(), content.to_vec());
    if let Some(s) = space_cache().lock().unwrap().get(&key) {
        return Ok(s.clone());
    }
    let built = Arc::new(build_space(lambda, content)?);
    space_cache().lock().unwrap().insert(key, built.clone());
    Ok(built)
}

fn build_space(lambda: &Partition, content: &[u64]) -> Result<BoxSpace> {
    let ambient = WeightSpace::build(&conjugate_expr(lambda), content, &plain_factor_labels)?;
    let tableaux = semistandard_tableaux(lambda, content);
    let mut cols = Vec::with_capacity(tableaux.len());
    for t in &tableaux {
        cols.push(box_vector(lambda, t, &ambient)?);
    }
    let vectors = IntegerMatrix::from_columns(ambient.rank(), &cols);
    let ech = EchelonForm::new(&vectors);
    if ech.rank() != tableaux.len() {
        return Err(Error::Internal(format!(
            "tableau images are dependent for shape {lambda}, content {content:?}"
        )));
    }
    let tableau_index = tableaux.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    Ok(BoxSpace { tableaux, vectors, ambient, ech, tableau_index })
}

/// All distinct orderings of a sorted multiset of letters.
pub(crate) fn multiset_permutations(sorted: &[u64]) -> Vec<Vec<u64>> {
    let mut letters: Vec<u64> = sorted.to_vec();
    letters.dedup();
    let mut counts: Vec<usize> =
        letters.iter().map(|&l| sorted.iter().filter(|&&x| x == l).count()).collect();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(sorted.len());
    fn rec(
        letters: &[u64],
        counts: &mut Vec<usize>,
        word: &mut Vec<u64>,
        total: usize,
        out: &mut Vec<Vec<u64>>,
    ) {
        if word.len() == total {
            out.push(word.clone());
            return;
        }
        for k in 0..letters.len() {
            if counts[k] > 0 {
                counts[k] -= 1;
                word.push(letters[k]);
                rec(letters, counts, word, total, out);
                word.pop();
                counts[k] += 1;
            }
        }
    }
    rec(&letters, &mut counts, &mut word, sorted.len(), &mut out);
    out
}

/// Ambient coordinates of the image of one row monomial.  `rows` need only be
/// sorted multisets (semistandardness is not required), so the same routine
/// evaluates the map on every monomial of the row tensor.
pub(crate) fn box_vector(
    lambda: &Partition,
    rows: &[Vec<u64>],
    ambient: &WeightSpace,
) -> Result<Vec<BigInt>> {
    let word_lists: Vec<Vec<Vec<u64>>> =
        rows.iter().map(|r| multiset_permutations(r)).collect();
    let mut v = vec![BigInt::zero(); ambient.rank()];
    let mut idx = vec![0usize; word_lists.len()];
    if word_lists.iter().any(|l| l.is_empty()) && !word_lists.is_empty() {
        return Err(Error::Internal("empty row in box map".into()));
    }
    loop {
        // assemble the columns of this word choice
        let ncols = lambda.part(0) as usize;
        let mut labels = Vec::with_capacity(ncols);
        let mut sign = 1i64;
        let mut dead = false;
        for c in 0..ncols {
            let letters: Vec<usize> = (0..rows.len())
                .filter(|&r| (rows[r].len()) > c)
                .map(|r| word_lists[r][idx[r]][c] as usize)
                .collect();
            match sort_with_sign(&letters) {
                Some((sorted, s)) => {
                    sign *= s;
                    labels.push(FactorLabel::Wedge(sorted));
                }
                None => {
                    dead = true;
                    break;
                }
            }
        }
        if !dead {
            let pos = ambient.index_of(&labels).ok_or_else(|| {
                Error::Internal("box image missed the ambient weight basis".into())
            })?;
            v[pos] += BigInt::from(sign);
        }
        // odometer
        let mut k = word_lists.len();
        loop {
            if k == 0 {
                return Ok(v);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < word_lists[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn cached_map(
    key: MapKey,
    compute: impl FnOnce() -> Result<IntegerMatrix>,
) -> Result<Arc<IntegerMatrix>> {
    if let Some(m) = map_cache().lock().unwrap().get(&key) {
        return Ok(m.clone());
    }
    let built = Arc::new(compute()?);
    map_cache().lock().unwrap().insert(key, built.clone());
    Ok(built)
}

/// Matrix of the merge of coordinates i, i+1 on the tableau basis: act on the
/// ambient exterior tensor, then solve back into the target tableau basis.
pub(crate) fn specialization(
    lambda: &Partition,
    content: &[u64],
    i: usize,
) -> Result<Arc<IntegerMatrix>> {
    let key = (lambda.parts().to_vec(), content.to_vec(), i, false);
    cached_map(key, || {
        let src = space(lambda, content)?;
        let tgt = space(lambda, &merge_weight(content, i))?;
        let amb = super::specialization_matrix(&conjugate_expr(lambda), content, i)?;
        let images = amb.mul(&src.vectors);
        tgt.ech.solve_matrix(&images).ok_or_else(|| {
            Error::Internal(format!(
                "merge image left the Weyl lattice for shape {lambda}, content {content:?}"
            ))
        })
    })
}

/// Matrix of inserting a zero coordinate after slot i on the tableau basis.
pub(crate) fn generization(
    lambda: &Partition,
    content: &[u64],
    i: usize,
) -> Result<Arc<IntegerMatrix>> {
    let key = (lambda.parts().to_vec(), content.to_vec(), i, true);
    cached_map(key, || {
        let src = space(lambda, content)?;
        let tgt = space(lambda, &insert_zero(content, i))?;
        let amb = super::generization_matrix(&conjugate_expr(lambda), content, i)?;
        let images = amb.mul(&src.vectors);
        tgt.ech.solve_matrix(&images).ok_or_else(|| {
            Error::Internal(format!(
                "insert image left the Weyl lattice for shape {lambda}, content {content:?}"
            ))
        })
    })
}
