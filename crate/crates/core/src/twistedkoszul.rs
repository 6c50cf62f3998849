//! Operator calculus on divided-power ⊗ exterior monomials: contractions,
//! the Koszul map, its coordinate-twisted variant Φ that inserts a fresh
//! coordinate, divided powers Φ^[B] indexed by ordered set partitions, and
//! the retraction Θ_[B] that inverts them on graded pieces.  The operators
//! are packaged as chain maps between the weight-tower complexes, where a
//! degree shift by s negates s copies of the target differential — the
//! standard shift convention already enforced by [`ChainMap`].
//!
//! Everything here acts on explicit integer combinations of monomials
//! e^α ⊗ e_β, so the operator identities (anticommutation with the Koszul
//! map, the boundary identity, the divided-power relation, the retraction
//! identity) are verified by exhaustive expansion rather than proved.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::combinat::{ordered_set_partitions_bounded, Partition};
use crate::error::{Error, Result};
use crate::exactlin::{ChainMap, IntegerMatrix, RingSelector};
use crate::polyfun::{
    hook_straighten, insert_zero, merge_weight, wedge_adjoin, wedge_merge_vars, wedge_shift_vars,
    weight_space, FactorLabel, FunctorExpr,
};
use crate::speccomplex::{build_complex, BuiltComplex, FilteredFamily};

/// An integer combination of monomials e^α ⊗ e_β with |α| = `divided`,
/// |β| = `wedge`, β ⊆ {1..coords}, each β strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientElement {
    divided: u64,
    wedge: usize,
    coords: usize,
    terms: BTreeMap<(Vec<u64>, Vec<usize>), BigInt>,
}

impl AmbientElement {
    pub fn zero(divided: u64, wedge: usize, coords: usize) -> AmbientElement {
        AmbientElement { divided, wedge, coords, terms: BTreeMap::new() }
    }

    pub fn monomial(alpha: Vec<u64>, beta: Vec<usize>) -> Result<AmbientElement> {
        let coords = alpha.len();
        if !beta.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::ShapeMismatch(format!("wedge letters {beta:?} not increasing")));
        }
        if beta.iter().any(|&b| b < 1 || b > coords) {
            return Err(Error::IndexOutOfRange(format!(
                "wedge letters {beta:?} escape 1..={coords}"
            )));
        }
        let divided = alpha.iter().sum();
        let wedge = beta.len();
        let mut e = AmbientElement::zero(divided, wedge, coords);
        e.add_term(alpha, beta, BigInt::one());
        Ok(e)
    }

    /// Convenience for spelling out expected test values.
    pub fn combination(
        coords: usize,
        parts: &[(&[u64], &[usize], i64)],
    ) -> Result<AmbientElement> {
        let (first_a, first_b, _) =
            parts.first().ok_or_else(|| Error::ShapeMismatch("empty combination".into()))?;
        let mut e = AmbientElement::zero(first_a.iter().sum(), first_b.len(), coords);
        for (alpha, beta, c) in parts {
            if alpha.len() != coords {
                return Err(Error::ShapeMismatch("coordinate count mismatch".into()));
            }
            e.add_term(alpha.to_vec(), beta.to_vec(), BigInt::from(*c));
        }
        Ok(e)
    }

    /// (divided degree, wedge degree, coordinate count).
    pub fn params(&self) -> (u64, usize, usize) {
        (self.divided, self.wedge, self.coords)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<u64>, Vec<usize>), &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, alpha: &[u64], beta: &[usize]) -> BigInt {
        self.terms
            .get(&(alpha.to_vec(), beta.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, alpha: Vec<u64>, beta: Vec<usize>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (alpha, beta);
        let entry = self.terms.entry(key.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn accumulate(&mut self, other: &AmbientElement, scale: i64) -> Result<()> {
        if self.params() != other.params() {
            return Err(Error::Internal(format!(
                "parameter mismatch accumulating {:?} into {:?}",
                other.params(),
                self.params()
            )));
        }
        for ((a, b), c) in &other.terms {
            self.add_term(a.clone(), b.clone(), c * scale);
        }
        Ok(())
    }

    pub fn plus(&self, other: &AmbientElement) -> Result<AmbientElement> {
        let mut out = self.clone();
        out.accumulate(other, 1)?;
        Ok(out)
    }

    pub fn scaled(&self, k: i64) -> AmbientElement {
        let mut out = AmbientElement::zero(self.divided, self.wedge, self.coords);
        for ((a, b), c) in &self.terms {
            out.add_term(a.clone(), b.clone(), c * k);
        }
        out
    }

    /// Drop all terms whose weight α + 1_β has a zero entry.
    pub fn full_support_part(&self) -> AmbientElement {
        let mut out = AmbientElement::zero(self.divided, self.wedge, self.coords);
        for ((a, b), c) in &self.terms {
            if term_weight(a, b).iter().all(|&x| x > 0) {
                out.add_term(a.clone(), b.clone(), c.clone());
            }
        }
        out
    }
}

/// The weight of e^α ⊗ e_β: α plus the indicator vector of β.
pub fn term_weight(alpha: &[u64], beta: &[usize]) -> Vec<u64> {
    let mut w = alpha.to_vec();
    for &b in beta {
        w[b - 1] += 1;
    }
    w
}

/// Lower the j-th divided exponent by one (1-based j); monomials with a
/// vanishing exponent there are killed.
pub fn contraction_eta(j: usize, x: &AmbientElement) -> Result<AmbientElement> {
    let (a, b, n) = x.params();
    if j < 1 || j > n {
        return Err(Error::IndexOutOfRange(format!("contraction index {j} outside 1..={n}")));
    }
    let mut out = AmbientElement::zero(a.saturating_sub(1), b, n);
    for ((alpha, beta), c) in x.terms() {
        if alpha[j - 1] > 0 {
            let mut na = alpha.clone();
            na[j - 1] -= 1;
            out.add_term(na, beta.clone(), c.clone());
        }
    }
    Ok(out)
}

/// Right exterior multiplication by e_i, normalized to increasing wedges.
pub fn wedge_multiply(i: usize, x: &AmbientElement) -> Result<AmbientElement> {
    let (a, b, n) = x.params();
    if i < 1 || i > n {
        return Err(Error::IndexOutOfRange(format!("wedge index {i} outside 1..={n}")));
    }
    let mut out = AmbientElement::zero(a, b + 1, n);
    for ((alpha, beta), c) in x.terms() {
        if let Some((nb, sign)) = wedge_adjoin(beta, i) {
            out.add_term(alpha.clone(), nb, c * sign);
        }
    }
    Ok(out)
}

/// The Koszul map: Σ_i η_i(x) ∧ e_i.
pub fn koszul_upsilon(x: &AmbientElement) -> Result<AmbientElement> {
    let (a, b, n) = x.params();
    let mut out = AmbientElement::zero(a.saturating_sub(1), b + 1, n);
    for i in 1..=n {
        out.accumulate(&wedge_multiply(i, &contraction_eta(i, x)?)?, 1)?;
    }
    Ok(out)
}

/// Merge coordinates i, i+1 (1-based): binomial coefficient on the divided
/// factor, collision-killing reindex on the wedge factor.
pub fn ambient_specialize(i: usize, x: &AmbientElement) -> Result<AmbientElement> {
    let (a, b, n) = x.params();
    if i < 1 || i + 1 > n {
        return Err(Error::IndexOutOfRange(format!("merge index {i} outside 1..{n}")));
    }
    let mut out = AmbientElement::zero(a, b, n - 1);
    for ((alpha, beta), c) in x.terms() {
        if let Some(nb) = wedge_merge_vars(beta, i) {
            let coeff = binomial(BigInt::from(alpha[i - 1] + alpha[i]), BigInt::from(alpha[i - 1]));
            out.add_term(merge_weight(alpha, i), nb, c * coeff);
        }
    }
    Ok(out)
}

/// Insert a fresh zero coordinate after the first `s` coordinates.
pub fn ambient_generize(s: usize, x: &AmbientElement) -> Result<AmbientElement> {
    let (a, b, n) = x.params();
    if s > n {
        return Err(Error::IndexOutOfRange(format!("insertion slot {s} outside 0..={n}")));
    }
    let mut out = AmbientElement::zero(a, b, n + 1);
    for ((alpha, beta), c) in x.terms() {
        out.add_term(insert_zero(alpha, s), wedge_shift_vars(beta, s), c.clone());
    }
    Ok(out)
}

/// The alternating sum of all adjacent merges.
pub fn boundary(x: &AmbientElement) -> Result<AmbientElement> {
    let (a, b, n) = x.params();
    if n == 0 {
        return Ok(AmbientElement::zero(a, b, 0));
    }
    let mut out = AmbientElement::zero(a, b, n - 1);
    for i in 1..n {
        let sign = if (i - 1) % 2 == 1 { -1 } else { 1 };
        out.accumulate(&ambient_specialize(i, x)?, sign)?;
    }
    Ok(out)
}

/// The coordinate-twisted Koszul map:
/// Φ(x) = Σ_{1≤t≤s≤n} (-1)^s ψ^s(η_t(x)) ∧ e_{s+1}.
pub fn phi(x: &AmbientElement) -> Result<AmbientElement> {
    let (a, b, n) = x.params();
    let mut out = AmbientElement::zero(a.saturating_sub(1), b + 1, n + 1);
    for t in 1..=n {
        let e = contraction_eta(t, x)?;
        if e.is_zero() {
            continue;
        }
        for s in t..=n {
            let w = wedge_multiply(s + 1, &ambient_generize(s, &e)?)?;
            out.accumulate(&w, if s % 2 == 1 { -1 } else { 1 })?;
        }
    }
    Ok(out)
}

/// The data attached to one ordered set partition in the divided-power
/// expansion: per-block leftover exponents, the non-minima, the sign, and
/// the resulting ambient exponent vector (exponent at each block minimum).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedBlockData {
    pub alpha: Vec<u64>,
    pub beta: Vec<usize>,
    pub sign: i64,
    pub exponents: Vec<u64>,
}

/// Ordered set partitions of {1..upto} into `dbar.len()` nonempty blocks
/// with strictly increasing minima and block k of size at most dbar[k].
pub fn par(dbar: &[u64], upto: usize) -> Vec<Vec<Vec<usize>>> {
    let caps: Vec<usize> = dbar.iter().map(|&d| d as usize).collect();
    ordered_set_partitions_bounded(upto, &caps)
        .into_iter()
        .filter(|blocks| blocks.windows(2).all(|w| w[0][0] < w[1][0]))
        .collect()
}

/// Expand one ordered set partition into its signed monomial data for the
/// exponent vector `dbar`.  Block k (minimum i_k, size m_k ≤ dbar[k])
/// contributes the exponent dbar[k] + 1 - m_k at coordinate i_k; the
/// non-minima become the wedge letters; the sign is (-1)^{Σ (β_i - 1)}.
pub fn signed_block(dbar: &[u64], blocks: &[Vec<usize>]) -> Result<SignedBlockData> {
    if blocks.len() != dbar.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} blocks against {} exponents",
            blocks.len(),
            dbar.len()
        )));
    }
    let upto: usize = blocks.iter().map(|b| b.len()).sum();
    let mut alpha = Vec::with_capacity(blocks.len());
    let mut minima = Vec::with_capacity(blocks.len());
    for (k, block) in blocks.iter().enumerate() {
        if block.is_empty() || block.len() as u64 > dbar[k] {
            return Err(Error::ShapeMismatch(format!(
                "block {:?} violates the size cap {}",
                block, dbar[k]
            )));
        }
        alpha.push(dbar[k] + 1 - block.len() as u64);
        minima.push(block[0]);
    }
    if !minima.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::ShapeMismatch(format!("block minima {minima:?} not increasing")));
    }
    let beta: Vec<usize> = (1..=upto).filter(|i| !minima.contains(i)).collect();
    let parity: usize = beta.iter().map(|&b| b - 1).sum();
    let sign = if parity % 2 == 1 { -1 } else { 1 };
    let mut exponents = vec![0u64; upto];
    for (k, &m) in minima.iter().enumerate() {
        exponents[m - 1] = alpha[k];
    }
    Ok(SignedBlockData { alpha, beta, sign, exponents })
}

/// The B-th divided power of Φ applied to the one-coordinate-per-exponent
/// monomial e^dbar (coordinate k carries exponent dbar[k]): the signed sum
/// over all admissible ordered set partitions of {1..n+B}.  Every output
/// term automatically has full support.
pub fn phi_divided(bb: usize, dbar: &[u64]) -> Result<AmbientElement> {
    if dbar.contains(&0) {
        return Err(Error::ShapeMismatch(format!(
            "exponent vector {dbar:?} must have full support"
        )));
    }
    let n = dbar.len();
    let total: u64 = dbar.iter().sum();
    let divided = total.checked_sub(bb as u64).ok_or_else(|| {
        Error::IndexOutOfRange(format!("order {bb} exceeds the total degree {total}"))
    })?;
    let mut out = AmbientElement::zero(divided, bb, n + bb);
    for blocks in par(dbar, n + bb) {
        let data = signed_block(dbar, &blocks)?;
        out.add_term(data.exponents, data.beta, BigInt::from(data.sign));
    }
    Ok(out)
}

/// Push one admissible partition forward along the s-th coordinate
/// insertion, growing block k by the inserted letter: letters above s shift
/// up by one and s+1 joins block k (1-based k).  Requires |I_k| < dbar[k]
/// and min(I_k) ≤ s.
pub fn sigma_ks(blocks: &[Vec<usize>], dbar: &[u64], k: usize, s: usize) -> Result<Vec<Vec<usize>>> {
    if k < 1 || k > blocks.len() {
        return Err(Error::IndexOutOfRange(format!("block index {k} outside 1..={}", blocks.len())));
    }
    let upto: usize = blocks.iter().map(|b| b.len()).sum();
    if blocks[k - 1].len() as u64 >= dbar[k - 1] {
        return Err(Error::ShapeMismatch(format!(
            "block {} is already at its size cap {}",
            k,
            dbar[k - 1]
        )));
    }
    if blocks[k - 1][0] > s || s > upto {
        return Err(Error::IndexOutOfRange(format!(
            "insertion slot {s} outside {}..={upto}",
            blocks[k - 1][0]
        )));
    }
    let mut out: Vec<Vec<usize>> = blocks
        .iter()
        .map(|block| block.iter().map(|&x| if x > s { x + 1 } else { x }).collect())
        .collect();
    out[k - 1].push(s + 1);
    out[k - 1].sort_unstable();
    Ok(out)
}

/// Collapse a degree-(n+B) monomial of the graded tower back to its
/// originating exponent vector.  Writing n = coords - B, the monomial is
/// terminal when its wedge letters are exactly {n+1,…,n+B} and its divided
/// exponents vanish beyond coordinate n; a terminal e^α ⊗ e_β maps to
/// (-1)^{Σ (β_i - 1)} times the exponent vector (α_1 + B, α_2, …, α_n),
/// and every other monomial maps to zero (returned as None).
pub fn theta_retraction(
    bb: usize,
    alpha: &[u64],
    beta: &[usize],
) -> Result<Option<(Vec<u64>, i64)>> {
    if beta.len() != bb {
        return Err(Error::ShapeMismatch(format!(
            "wedge degree {} does not match the divided-power order {bb}",
            beta.len()
        )));
    }
    if alpha.len() < bb {
        return Err(Error::ShapeMismatch(format!(
            "{} coordinates cannot carry {bb} wedge letters here",
            alpha.len()
        )));
    }
    let standard = match beta.first() {
        None => true,
        Some(&b0) => alpha.iter().position(|&a| a > 0).is_some_and(|j| j + 1 < b0),
    };
    if !standard {
        return Err(Error::ShapeMismatch(format!(
            "e^{alpha:?} ⊗ e_{beta:?} is not a standard monomial"
        )));
    }
    let n = alpha.len() - bb;
    if n == 0 {
        return Ok(None);
    }
    let expected: Vec<usize> = (n + 1..=n + bb).collect();
    let terminal = beta == expected.as_slice() && alpha[n..].iter().all(|&x| x == 0);
    if !terminal {
        return Ok(None);
    }
    let mut dbar = alpha[..n].to_vec();
    dbar[0] += bb as u64;
    let parity: usize = beta.iter().map(|&b| b - 1).sum();
    Ok(Some((dbar, if parity % 2 == 1 { -1 } else { 1 })))
}

/// Assemble an operator on ambient monomials into a chain map between two
/// built weight towers.  `op` receives each source basis monomial (α, β)
/// and returns its image; output weights absent from the target layout must
/// be flagged `droppable` (quotient towers legitimately forget them).
fn operator_chain_map(
    src: &BuiltComplex,
    tgt: &BuiltComplex,
    shift: i64,
    tgt_hook: (u64, usize),
    op: &dyn Fn(&[u64], &[usize]) -> Result<AmbientElement>,
    droppable: &dyn Fn(&[u64]) -> bool,
) -> Result<ChainMap> {
    let mut blocks = BTreeMap::new();
    for n in src.complex.lo()..=src.complex.hi() {
        let cols = src.complex.rank(n);
        if cols == 0 {
            continue;
        }
        let rows = tgt.complex.rank(n + shift);
        let mut big = IntegerMatrix::zero(rows, cols);
        let tgt_offsets: HashMap<&Vec<u64>, usize> = tgt
            .layout
            .get(&(n + shift))
            .map(|entries| entries.iter().map(|(w, off, _)| (w, *off)).collect())
            .unwrap_or_default();
        let empty = Vec::new();
        for (w, src_off, src_rank) in src.layout.get(&n).unwrap_or(&empty) {
            if *src_rank == 0 {
                continue;
            }
            let ws = weight_space(&src.family.expr, w)?;
            for j in 0..*src_rank {
                let (alpha, beta) = match ws.basis[j].as_slice() {
                    [FactorLabel::HookMonomial(alpha, beta)] => (alpha.clone(), beta.clone()),
                    other => {
                        return Err(Error::Internal(format!(
                            "operator towers need single hook monomial labels, found {other:?}"
                        )))
                    }
                };
                let image = op(&alpha, &beta)?;
                for ((ta, tb), c) in image.terms() {
                    let tw = term_weight(ta, tb);
                    match tgt_offsets.get(&tw) {
                        Some(&to) => {
                            let coords = hook_straighten(tgt_hook.0, tgt_hook.1, &tw, ta, tb)?;
                            for (r, v) in coords.iter().enumerate() {
                                if !v.is_zero() {
                                    big.add_to(to + r, src_off + j, &(v * c));
                                }
                            }
                        }
                        None => {
                            if !droppable(&tw) {
                                return Err(Error::Internal(format!(
                                    "operator image left the index set at weight {tw:?}"
                                )));
                            }
                        }
                    }
                }
            }
        }
        if !big.is_zero() {
            blocks.insert(n, big);
        }
    }
    let map = ChainMap::new(src.complex.clone(), tgt.complex.clone(), shift, blocks)?;
    map.validate_strict()?;
    Ok(map)
}

/// Φ as a degree-one chain map from the level-`level` tower of the hook
/// (arm, 1^legs) to the level-(level-1) tower of (arm-1, 1^{legs+1}).
///
/// The level must be at least 2.  At level 1 the full-support projection is
/// not a chain map: the composite lands in weights whose first entry may be
/// zero, and that part of the ambient tower leaks back into full support
/// under the differential, so only the operator-level boundary identity
/// survives there (it is checked exhaustively in the tests).
pub fn phi_chain_map(arm: u64, legs: usize, level: u64, ring: RingSelector) -> Result<ChainMap> {
    if arm < 2 {
        return Err(Error::ShapeMismatch(format!(
            "first row {arm} cannot shrink; need at least 2"
        )));
    }
    if level < 2 {
        return Err(Error::IndexOutOfRange(
            "the projected map only commutes with the differentials from level 2 up".into(),
        ));
    }
    let src_hook = Partition::hook(arm, legs)?;
    let tgt_hook = Partition::hook(arm - 1, legs + 1)?;
    let src = build_complex(
        &FilteredFamily::full(FunctorExpr::weyl(src_hook), level)?,
        ring,
    )?;
    let tgt = build_complex(
        &FilteredFamily::full(FunctorExpr::weyl(tgt_hook), level - 1)?,
        ring,
    )?;
    let op = |alpha: &[u64], beta: &[usize]| -> Result<AmbientElement> {
        phi(&AmbientElement::monomial(alpha.to_vec(), beta.to_vec())?)
    };
    let droppable = |w: &[u64]| w.contains(&0);
    operator_chain_map(&src, &tgt, 1, (arm - 1, legs + 1), &op, &droppable)
}

fn phib_params(d: u64, delta: u64, bb: usize) -> Result<(u64, u64)> {
    let aa = d
        .checked_sub(bb as u64)
        .filter(|&aa| aa >= 1)
        .ok_or_else(|| Error::IndexOutOfRange(format!("order {bb} too large for degree {d}")))?;
    if delta >= aa {
        return Err(Error::IndexOutOfRange(format!(
            "drop {delta} must stay below the divided degree {aa}"
        )));
    }
    Ok((aa, aa - delta))
}

/// Φ^[B] as a degree-B chain map from the level-(a+B) tower of Sym-degree-d
/// divided powers to the level-a tower of the hook (d-B, 1^B), where
/// a = d - B - delta.
pub fn phib_chain_map(d: u64, delta: u64, bb: usize, ring: RingSelector) -> Result<ChainMap> {
    let (aa, a) = phib_params(d, delta, bb)?;
    let src = build_complex(
        &FilteredFamily::full(FunctorExpr::weyl(Partition::hook(d, 0)?), a + bb as u64)?,
        ring,
    )?;
    let tgt = build_complex(
        &FilteredFamily::full(FunctorExpr::weyl(Partition::hook(aa, bb)?), a)?,
        ring,
    )?;
    let op = |alpha: &[u64], _beta: &[usize]| -> Result<AmbientElement> { phi_divided(bb, alpha) };
    let droppable = |w: &[u64]| w.contains(&0);
    operator_chain_map(&src, &tgt, bb as i64, (aa, bb), &op, &droppable)
}

/// The graded-quotient version of [`phib_chain_map`].
pub fn phib_graded_chain_map(
    d: u64,
    delta: u64,
    bb: usize,
    ring: RingSelector,
) -> Result<ChainMap> {
    let (aa, a) = phib_params(d, delta, bb)?;
    let src = build_complex(
        &FilteredFamily::graded(FunctorExpr::weyl(Partition::hook(d, 0)?), a + bb as u64)?,
        ring,
    )?;
    let tgt = build_complex(
        &FilteredFamily::graded(FunctorExpr::weyl(Partition::hook(aa, bb)?), a)?,
        ring,
    )?;
    let op = |alpha: &[u64], _beta: &[usize]| -> Result<AmbientElement> { phi_divided(bb, alpha) };
    let droppable = move |w: &[u64]| w.contains(&0) || w[0] > a;
    operator_chain_map(&src, &tgt, bb as i64, (aa, bb), &op, &droppable)
}

/// Θ_[B] as a degree-(-B) chain map between the graded towers, retracting
/// [`phib_graded_chain_map`]: terminal monomials collapse back to their
/// exponent vectors, everything else dies.
pub fn theta_chain_map(d: u64, delta: u64, bb: usize, ring: RingSelector) -> Result<ChainMap> {
    let (aa, a) = phib_params(d, delta, bb)?;
    let src = build_complex(
        &FilteredFamily::graded(FunctorExpr::weyl(Partition::hook(aa, bb)?), a)?,
        ring,
    )?;
    let tgt = build_complex(
        &FilteredFamily::graded(FunctorExpr::weyl(Partition::hook(d, 0)?), a + bb as u64)?,
        ring,
    )?;
    let op = move |alpha: &[u64], beta: &[usize]| -> Result<AmbientElement> {
        let n = alpha.len().saturating_sub(bb);
        let mut out = AmbientElement::zero(alpha.iter().sum::<u64>() + bb as u64, 0, n);
        if let Some((dbar, sign)) = theta_retraction(bb, alpha, beta)? {
            out.add_term(dbar, Vec::new(), BigInt::from(sign));
        }
        Ok(out)
    };
    let droppable = |_: &[u64]| false;
    operator_chain_map(&src, &tgt, -(bb as i64), (d, 0), &op, &droppable)
}
