//! Polynomial functors on free modules: atoms (divided, symmetric, exterior
//! powers; Weyl functors), tensor expressions, their weight spaces with
//! canonical ordered bases, and the two elementary natural maps between
//! weight spaces — merging two adjacent coordinates and inserting a fresh
//! zero coordinate.
//!
//! Weyl atoms are realized by one of two interchangeable models picked by
//! shape: hooks use the quotient-by-straightening presentation
//! ([`hook`]), everything else the row-comultiplication image inside the
//! conjugate exterior tensor ([`weyl`]).  All coefficients are exact
//! integers, so every matrix produced here reduces honestly to any prime
//! field.

mod expr;
mod hook;
mod weightspace;
mod weyl;

pub use expr::{Atom, FunctorExpr};
pub use weightspace::{
    insert_zero, merge_weight, sort_with_sign, wedge_adjoin, wedge_merge_vars, wedge_shift_vars,
    FactorLabel, WeightSpace,
};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::IntegerMatrix;

/// Ordered labels of one atom at one factor-weight.
fn factor_labels(atom: &Atom, w: &[u64]) -> Result<Vec<FactorLabel>> {
    match atom {
        Atom::Divided(_) | Atom::Symmetric(_) | Atom::Exterior(_) => {
            weightspace::plain_factor_labels(atom, w)
        }
        Atom::Weyl(l) => match l.is_hook() {
            Some((arm, legs)) => Ok(hook::space(arm, legs, w)?
                .std_labels
                .iter()
                .map(|(a, b)| FactorLabel::HookMonomial(a.clone(), b.clone()))
                .collect()),
            None => Ok(weyl::space(l, w)?
                .tableaux
                .iter()
                .map(|t| FactorLabel::Tableau(t.clone()))
                .collect()),
        },
        Atom::Schur(l) => Err(Error::FormalAtom(format!(
            "Schur({l}) has no weight spaces; rewrite the query first"
        ))),
    }
}

/// The weight space of a functor expression with its canonical ordered basis.
pub fn weight_space(expr: &FunctorExpr, weight: &[u64]) -> Result<WeightSpace> {
    WeightSpace::build(expr, weight, &factor_labels)
}

/// Standard-basis coordinates of one ambient monomial e^alpha ⊗ e_beta in
/// the weight space of the hook-shape Weyl functor (arm, 1^legs) whose
/// weight is alpha plus the indicator of beta.
pub fn hook_straighten(
    arm: u64,
    legs: usize,
    weight: &[u64],
    alpha: &[u64],
    beta: &[usize],
) -> Result<Vec<BigInt>> {
    let hs = hook::space(arm, legs, weight)?;
    let col = hs.ambient_index_of(alpha, beta).ok_or_else(|| {
        Error::IndexOutOfRange(format!(
            "({alpha:?}, {beta:?}) is not an ambient monomial of weight {weight:?}"
        ))
    })?;
    let mut unit = IntegerMatrix::zero(hs.ambient_labels.len(), 1);
    unit.set(col, 0, BigInt::one());
    let reduced = hs.reduce(&unit)?;
    Ok(reduced.column(0))
}

fn tableau_content(rows: &[Vec<u64>], n: usize) -> Vec<u64> {
    let mut c = vec![0u64; n];
    for row in rows {
        for &e in row {
            c[e as usize - 1] += 1;
        }
    }
    c
}

fn hook_label_weight(alpha: &[u64], beta: &[usize]) -> Vec<u64> {
    let mut w = alpha.to_vec();
    for &b in beta {
        w[b - 1] += 1;
    }
    w
}

/// Expansion of the merge of coordinates i, i+1 on one factor basis label;
/// `n` is the number of coordinates before the merge.
fn factor_specialize(
    atom: &Atom,
    label: &FactorLabel,
    i: usize,
    n: usize,
) -> Result<Vec<(FactorLabel, BigInt)>> {
    match (atom, label) {
        (Atom::Divided(_), FactorLabel::Monomial(v)) => {
            let coeff =
                num_integer::binomial(BigInt::from(v[i - 1] + v[i]), BigInt::from(v[i - 1]));
            Ok(vec![(FactorLabel::Monomial(merge_weight(v, i)), coeff)])
        }
        (Atom::Symmetric(_), FactorLabel::Monomial(v)) => {
            Ok(vec![(FactorLabel::Monomial(merge_weight(v, i)), BigInt::one())])
        }
        (Atom::Exterior(_), FactorLabel::Wedge(s)) => Ok(match wedge_merge_vars(s, i) {
            Some(t) => vec![(FactorLabel::Wedge(t), BigInt::one())],
            None => vec![],
        }),
        (Atom::Weyl(l), FactorLabel::HookMonomial(alpha, beta)) => {
            let (arm, legs) = l
                .is_hook()
                .ok_or_else(|| Error::Internal("hook label on non-hook shape".into()))?;
            let w = hook_label_weight(alpha, beta);
            let src = hook::space(arm, legs, &w)?;
            let tgt = hook::space(arm, legs, &merge_weight(&w, i))?;
            let m = hook::specialization(arm, legs, &w, i)?;
            let col = src
                .std_index_of(alpha, beta)
                .ok_or_else(|| Error::Internal("unknown hook basis label".into()))?;
            Ok(m.column(col)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(r, c)| {
                    let (a, b) = &tgt.std_labels[r];
                    (FactorLabel::HookMonomial(a.clone(), b.clone()), c)
                })
                .collect())
        }
        (Atom::Weyl(l), FactorLabel::Tableau(t)) => {
            let content = tableau_content(t, n);
            let src = weyl::space(l, &content)?;
            let tgt = weyl::space(l, &merge_weight(&content, i))?;
            let m = weyl::specialization(l, &content, i)?;
            let col = src
                .index_of(t)
                .ok_or_else(|| Error::Internal("unknown tableau basis label".into()))?;
            Ok(m.column(col)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(r, c)| (FactorLabel::Tableau(tgt.tableaux[r].clone()), c))
                .collect())
        }
        (Atom::Schur(l), _) => Err(Error::FormalAtom(format!(
            "Schur({l}) has no weight spaces; rewrite the query first"
        ))),
        _ => Err(Error::Internal("factor label does not match its atom".into())),
    }
}

/// Expansion of inserting a zero coordinate after slot i on one factor label;
/// `n` is the number of coordinates before the insertion.
fn factor_generize(
    atom: &Atom,
    label: &FactorLabel,
    i: usize,
    n: usize,
) -> Result<Vec<(FactorLabel, BigInt)>> {
    match (atom, label) {
        (Atom::Divided(_) | Atom::Symmetric(_), FactorLabel::Monomial(v)) => {
            Ok(vec![(FactorLabel::Monomial(insert_zero(v, i)), BigInt::one())])
        }
        (Atom::Exterior(_), FactorLabel::Wedge(s)) => {
            Ok(vec![(FactorLabel::Wedge(wedge_shift_vars(s, i)), BigInt::one())])
        }
        (Atom::Weyl(l), FactorLabel::HookMonomial(alpha, beta)) => {
            let (arm, legs) = l
                .is_hook()
                .ok_or_else(|| Error::Internal("hook label on non-hook shape".into()))?;
            let w = hook_label_weight(alpha, beta);
            let src = hook::space(arm, legs, &w)?;
            let tgt = hook::space(arm, legs, &insert_zero(&w, i))?;
            let m = hook::generization(arm, legs, &w, i)?;
            let col = src
                .std_index_of(alpha, beta)
                .ok_or_else(|| Error::Internal("unknown hook basis label".into()))?;
            Ok(m.column(col)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(r, c)| {
                    let (a, b) = &tgt.std_labels[r];
                    (FactorLabel::HookMonomial(a.clone(), b.clone()), c)
                })
                .collect())
        }
        (Atom::Weyl(l), FactorLabel::Tableau(t)) => {
            let content = tableau_content(t, n);
            let src = weyl::space(l, &content)?;
            let tgt = weyl::space(l, &insert_zero(&content, i))?;
            let m = weyl::generization(l, &content, i)?;
            let col = src
                .index_of(t)
                .ok_or_else(|| Error::Internal("unknown tableau basis label".into()))?;
            Ok(m.column(col)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(r, c)| (FactorLabel::Tableau(tgt.tableaux[r].clone()), c))
                .collect())
        }
        (Atom::Schur(l), _) => Err(Error::FormalAtom(format!(
            "Schur({l}) has no weight spaces; rewrite the query first"
        ))),
        _ => Err(Error::Internal("factor label does not match its atom".into())),
    }
}

/// Assemble a whole-expression matrix from per-factor expansions.
fn assemble(
    expr: &FunctorExpr,
    src: &WeightSpace,
    tgt: &WeightSpace,
    expand: impl Fn(&Atom, &FactorLabel) -> Result<Vec<(FactorLabel, BigInt)>>,
) -> Result<IntegerMatrix> {
    let mut m = IntegerMatrix::zero(tgt.rank(), src.rank());
    for (col, labels) in src.basis.iter().enumerate() {
        let mut terms: Vec<(Vec<FactorLabel>, BigInt)> = vec![(Vec::new(), BigInt::one())];
        for (atom, label) in expr.factors().iter().zip(labels) {
            let expansion = expand(atom, label)?;
            let mut next = Vec::with_capacity(terms.len() * expansion.len());
            for (tuple, c) in &terms {
                for (fl, fc) in &expansion {
                    let mut t = tuple.clone();
                    t.push(fl.clone());
                    next.push((t, c * fc));
                }
            }
            terms = next;
            if terms.is_empty() {
                break;
            }
        }
        for (tuple, c) in terms {
            let row = tgt
                .index_of(&tuple)
                .ok_or_else(|| Error::Internal("image label missing from target basis".into()))?;
            m.add_to(row, col, &c);
        }
    }
    Ok(m)
}

/// Matrix of the natural map merging coordinates i and i+1 (1-based), from
/// the weight space at `weight` to the one at the merged weight.  Rows and
/// columns follow the canonical basis orders of the two spaces.
pub fn specialization_matrix(
    expr: &FunctorExpr,
    weight: &[u64],
    i: usize,
) -> Result<IntegerMatrix> {
    if i < 1 || i >= weight.len() {
        return Err(Error::IndexOutOfRange(format!(
            "merge index {i} for a weight of length {}",
            weight.len()
        )));
    }
    let src = weight_space(expr, weight)?;
    let tgt = weight_space(expr, &merge_weight(weight, i))?;
    let n = weight.len();
    assemble(expr, &src, &tgt, |atom, label| factor_specialize(atom, label, i, n))
}

/// Matrix of the natural map inserting a zero coordinate after slot i
/// (0-based, 0 ≤ i ≤ n), from the weight space at `weight` to the one at the
/// extended weight.
pub fn generization_matrix(
    expr: &FunctorExpr,
    weight: &[u64],
    i: usize,
) -> Result<IntegerMatrix> {
    if i > weight.len() {
        return Err(Error::IndexOutOfRange(format!(
            "insertion slot {i} for a weight of length {}",
            weight.len()
        )));
    }
    let src = weight_space(expr, weight)?;
    let tgt = weight_space(expr, &insert_zero(weight, i))?;
    let n = weight.len();
    assemble(expr, &src, &tgt, |atom, label| factor_generize(atom, label, i, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::bounded_compositions;
    use crate::exactlin::EchelonForm;

    fn merge_at(expr: &str, w: &[u64], i: usize) -> IntegerMatrix {
        specialization_matrix(&expr.parse().unwrap(), w, i).unwrap()
    }

    fn gen(expr: &str, w: &[u64], i: usize) -> IntegerMatrix {
        generization_matrix(&expr.parse().unwrap(), w, i).unwrap()
    }

    #[test]
    fn divided_power_merge_is_binomial() {
        assert_eq!(merge_at("D2", &[1, 1], 1), IntegerMatrix::from_rows(1, 1, &[&[2]]));
        assert_eq!(merge_at("D3", &[1, 2], 1), IntegerMatrix::from_rows(1, 1, &[&[3]]));
        assert_eq!(merge_at("S3", &[1, 2], 1), IntegerMatrix::from_rows(1, 1, &[&[1]]));
        assert_eq!(merge_at("L1*L1", &[1, 1], 1), IntegerMatrix::from_rows(1, 2, &[&[1, 1]]));
    }

    #[test]
    fn insert_then_merge_is_identity() {
        for (e, w) in [("D3", vec![1, 2]), ("W(2,1)", vec![1, 1, 1]), ("D1*L2", vec![1, 1, 1])] {
            let expr: FunctorExpr = e.parse().unwrap();
            let rank = weight_space(&expr, &w).unwrap().rank();
            for slot in 0..w.len() {
                let up = generization_matrix(&expr, &w, slot).unwrap();
                let down = specialization_matrix(&expr, &insert_zero(&w, slot), slot + 1).unwrap();
                assert_eq!(down.mul(&up), IntegerMatrix::identity(rank), "{e} slot {slot}");
            }
        }
    }

    #[test]
    fn frozen_weyl_merges_via_dispatch() {
        // non-hook shape goes through the conjugate exterior model
        assert_eq!(merge_at("W(2,2)", &[1, 1, 1, 1], 1), IntegerMatrix::from_rows(1, 2, &[&[2, -1]]));
        assert_eq!(merge_at("W(2,2)", &[1, 1, 1, 1], 2), IntegerMatrix::from_rows(1, 2, &[&[1, 1]]));
        assert_eq!(merge_at("W(2,2)", &[1, 1, 1, 1], 3), IntegerMatrix::from_rows(1, 2, &[&[2, -1]]));
        // hook shape goes through the straightening model
        assert_eq!(merge_at("W(2,1)", &[1, 1, 1], 1), IntegerMatrix::from_rows(1, 2, &[&[2, -1]]));
    }

    #[test]
    fn one_row_weyl_agrees_with_divided_power() {
        for w in [vec![1, 1, 1], vec![2, 1], vec![1, 2], vec![3, 0]] {
            for i in 1..w.len() {
                assert_eq!(merge_at("W(3)", &w, i), merge_at("D3", &w, i), "{w:?} merge {i}");
            }
            for slot in 0..=w.len() {
                assert_eq!(gen("W(3)", &w, slot), gen("D3", &w, slot), "{w:?} slot {slot}");
            }
        }
    }

    #[test]
    fn one_column_weyl_agrees_with_exterior_power() {
        for w in [vec![1, 1, 1], vec![1, 1, 1, 0], vec![0, 1, 1, 1]] {
            for i in 1..w.len() {
                assert_eq!(merge_at("W(1,1,1)", &w, i), merge_at("L3", &w, i), "{w:?} merge {i}");
            }
        }
    }

    #[test]
    fn tensor_with_weyl_factor_has_the_right_rank() {
        // D1 ⊗ (hook 2,1) at full multilinear weight: 3 + 2 + 3 = 8 by the
        // Littlewood–Richardson expansion of the product character
        let ws = weight_space(&"D1*W(2,1)".parse().unwrap(), &[1, 1, 1, 1]).unwrap();
        assert_eq!(ws.rank(), 8);
    }

    /// The two Weyl models describe the same functor: the comparison map that
    /// comultiplies one letter out of the divided power and wedges it in
    /// front intertwines all merges, and is a unimodular change of basis.
    #[test]
    fn hook_and_box_models_agree() {
        for (arm, legs, weight) in [
            (2u64, 1usize, vec![1u64, 1, 1]),
            (2, 1, vec![2, 1]),
            (3, 1, vec![1, 1, 1, 1]),
            (3, 1, vec![2, 1, 1]),
            (2, 2, vec![1, 1, 1, 1]),
            (2, 2, vec![2, 1, 1]),
        ] {
            let shape = crate::combinat::Partition::hook(arm, legs).unwrap();
            let hs = hook::space(arm, legs, &weight).unwrap();
            let bs = weyl::space(&shape, &weight).unwrap();
            let c_src = comparison(&hs, &bs, arm);
            assert_eq!(
                EchelonForm::new(&c_src).rank(),
                hs.rank(),
                "comparison degenerate at ({arm},1^{legs}) {weight:?}"
            );
            assert!(
                EchelonForm::new(&c_src)
                    .solve_matrix(&IntegerMatrix::identity(hs.rank()))
                    .is_some(),
                "comparison not unimodular at ({arm},1^{legs}) {weight:?}"
            );
            for i in 1..weight.len() {
                let merged = merge_weight(&weight, i);
                let ht = hook::space(arm, legs, &merged).unwrap();
                let bt = weyl::space(&shape, &merged).unwrap();
                let c_tgt = comparison(&ht, &bt, arm);
                let lhs = c_tgt.mul(&hook::specialization(arm, legs, &weight, i).unwrap());
                let rhs = weyl::specialization(&shape, &weight, i).unwrap().mul(&c_src);
                assert_eq!(lhs, rhs, "merge {i} at ({arm},1^{legs}) {weight:?}");
            }
        }
    }

    /// Hook-model standard monomials expressed in box-model tableau
    /// coordinates, via e^α ⊗ e_β ↦ Σ_words (v_1 ∧ e_β) ⊗ e_{v_2} ⊗ … .
    fn comparison(hs: &hook::HookSpace, bs: &weyl::BoxSpace, arm: u64) -> IntegerMatrix {
        let mut cols = Vec::new();
        for (alpha, beta) in &hs.std_labels {
            let mut letters = Vec::new();
            for (j, &a) in alpha.iter().enumerate() {
                letters.extend(std::iter::repeat_n(j as u64 + 1, a as usize));
            }
            let mut v = vec![BigInt::zero(); bs.ambient.rank()];
            for word in weyl::multiset_permutations(&letters) {
                let front = word[0] as usize;
                if beta.contains(&front) {
                    continue;
                }
                let sign = if beta.iter().filter(|&&b| b < front).count() % 2 == 0 {
                    1i64
                } else {
                    -1
                };
                let mut wedge = beta.clone();
                wedge.push(front);
                wedge.sort_unstable();
                let mut labels = vec![FactorLabel::Wedge(wedge)];
                for &x in &word[1..] {
                    labels.push(FactorLabel::Wedge(vec![x as usize]));
                }
                debug_assert_eq!(labels.len(), arm as usize);
                let pos = bs.ambient.index_of(&labels).expect("comparison image off-basis");
                v[pos] += BigInt::from(sign);
            }
            cols.push(
                bs.ech
                    .solve(&v)
                    .expect("comparison image outside the tableau lattice"),
            );
        }
        IntegerMatrix::from_columns(bs.rank(), &cols)
    }

    /// The merge and insert maps satisfy the simplicial relations on every
    /// small expression and weight we throw at them.
    #[test]
    fn simplicial_relations_hold() {
        let cases: Vec<(&str, u64, usize)> = vec![
            ("D2*L1", 3, 4),
            ("S2*D1", 3, 4),
            ("L2*L1", 3, 4),
            ("W(2,1)", 3, 4),
            ("W(2,2)", 4, 4),
            ("D1*W(2,1)", 4, 4),
        ];
        for (e, d, maxlen) in cases {
            let expr: FunctorExpr = e.parse().unwrap();
            for n in 2..=maxlen {
                for w in bounded_compositions(d, &vec![d; n]) {
                    check_simplicial(&expr, &w);
                }
            }
        }
    }

    fn check_simplicial(expr: &FunctorExpr, w: &[u64]) {
        let n = w.len();
        let sp = |w: &[u64], i: usize| specialization_matrix(expr, w, i).unwrap();
        let ge = |w: &[u64], i: usize| generization_matrix(expr, w, i).unwrap();
        // merge ∘ merge
        for i in 1..n {
            for j in i..n - 1 {
                let lhs = sp(&merge_weight(w, i), j).mul(&sp(w, i));
                let rhs = sp(&merge_weight(w, j + 1), i).mul(&sp(w, j + 1));
                assert_eq!(lhs, rhs, "merge/merge i={i} j={j} at {w:?}");
            }
        }
        // insert ∘ insert
        for i in 0..=n {
            for j in (i + 1)..=(n + 1) {
                let lhs = ge(&insert_zero(w, i), j).mul(&ge(w, i));
                let rhs = ge(&insert_zero(w, j - 1), i).mul(&ge(w, j - 1));
                assert_eq!(lhs, rhs, "insert/insert i={i} j={j} at {w:?}");
            }
        }
        // merge after insert
        for i in 0..=n {
            for j in 1..=n {
                let lhs = sp(&insert_zero(w, i), j).mul(&ge(w, i));
                let rhs = if i + 1 < j {
                    // the inserted slot sits left of the merge
                    ge(&merge_weight(w, j - 1), i).mul(&sp(w, j - 1))
                } else if i == j - 1 || i == j {
                    IntegerMatrix::identity(weight_space(expr, w).unwrap().rank())
                } else {
                    // i >= j + 1: the merge happens left of the inserted slot
                    ge(&merge_weight(w, j), i - 1).mul(&sp(w, j))
                };
                assert_eq!(lhs, rhs, "merge/insert i={i} j={j} at {w:?}");
            }
        }
    }
}
