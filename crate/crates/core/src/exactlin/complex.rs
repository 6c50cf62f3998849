//! Chain complexes of labeled free modules, chain maps, mapping cones.

use std::collections::BTreeMap;

use serde_json::json;

use crate::error::{Error, Result};

use super::matrix::{IntegerMatrix, RingSelector};

/// A bounded chain complex: free terms at degrees lo..=hi and differentials
/// lowering degree by one.  Matrices are stored integrally regardless of the
/// ring; the ring selector controls validation and homology.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ring: RingSelector,
    lo: i64,
    ranks: Vec<usize>,
    labels: Vec<Vec<String>>,
    /// diffs[k] is the differential out of degree lo+1+k, of shape
    /// ranks[k] x ranks[k+1].
    diffs: Vec<IntegerMatrix>,
}

impl ChainComplex {
    pub fn new(
        ring: RingSelector,
        lo: i64,
        ranks: Vec<usize>,
        labels: Option<Vec<Vec<String>>>,
        diffs: Vec<IntegerMatrix>,
    ) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::MalformedComplex("a complex needs at least one degree".into()));
        }
        if diffs.len() + 1 != ranks.len() {
            return Err(Error::MalformedComplex(format!(
                "expected {} differentials for {} terms, got {}",
                ranks.len() - 1,
                ranks.len(),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.rows() != ranks[k] || d.cols() != ranks[k + 1] {
                return Err(Error::MalformedComplex(format!(
                    "differential out of degree {} has shape {}x{}, expected {}x{}",
                    lo + 1 + k as i64,
                    d.rows(),
                    d.cols(),
                    ranks[k],
                    ranks[k + 1]
                )));
            }
        }
        let labels = match labels {
            Some(ls) => {
                if ls.len() != ranks.len()
                    || ls.iter().zip(&ranks).any(|(l, &r)| l.len() != r)
                {
                    return Err(Error::MalformedComplex("label count mismatch".into()));
                }
                ls
            }
            None => ranks.iter().map(|&r| (0..r).map(|i| format!("b{i}")).collect()).collect(),
        };
        Ok(ChainComplex { ring, lo, ranks, labels, diffs })
    }

    /// Complex concentrated in a single degree with zero differential.
    pub fn single(ring: RingSelector, degree: i64, rank: usize) -> Self {
        ChainComplex::new(ring, degree, vec![rank], None, vec![]).unwrap()
    }

    pub fn ring(&self) -> RingSelector {
        self.ring
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn rank(&self, n: i64) -> usize {
        if n < self.lo || n > self.hi() {
            0
        } else {
            self.ranks[(n - self.lo) as usize]
        }
    }

    pub fn labels(&self, n: i64) -> &[String] {
        if n < self.lo || n > self.hi() {
            &[]
        } else {
            &self.labels[(n - self.lo) as usize]
        }
    }

    /// Differential out of degree n (shape rank(n-1) x rank(n)); zero-shaped
    /// outside the stored range.
    pub fn diff(&self, n: i64) -> IntegerMatrix {
        if n > self.lo && n <= self.hi() {
            self.diffs[(n - self.lo - 1) as usize].clone()
        } else {
            IntegerMatrix::zero(self.rank(n - 1), self.rank(n))
        }
    }

    /// True iff all consecutive composites vanish over the selected ring.
    pub fn validate(&self) -> bool {
        for n in self.lo + 2..=self.hi() {
            if !self.diff(n - 1).mul(&self.diff(n)).is_zero_over(self.ring) {
                return false;
            }
        }
        true
    }

    /// Same check but as a Result with a located error message.
    pub fn validate_strict(&self) -> Result<()> {
        for n in self.lo + 2..=self.hi() {
            if !self.diff(n - 1).mul(&self.diff(n)).is_zero_over(self.ring) {
                return Err(Error::MalformedComplex(format!(
                    "d∘d != 0 out of degree {n} over {}",
                    self.ring
                )));
            }
        }
        Ok(())
    }

    /// Reindex the complex by adding `s` to every degree, multiplying every
    /// differential by (-1)^s (the usual shift convention).
    pub fn shifted(&self, s: i64) -> Self {
        let mut out = self.clone();
        out.lo += s;
        if s.rem_euclid(2) == 1 {
            out.diffs = out.diffs.iter().map(|d| d.neg()).collect();
        }
        out
    }

    /// JSON debug dump: degree window, term ranks, dense differentials.
    pub fn to_debug_json(&self) -> serde_json::Value {
        let terms: BTreeMap<String, usize> = (self.lo..=self.hi())
            .map(|n| (n.to_string(), self.rank(n)))
            .collect();
        let diffs: BTreeMap<String, Vec<Vec<i64>>> = (self.lo + 1..=self.hi())
            .map(|n| (n.to_string(), self.diff(n).to_dense_i64()))
            .collect();
        json!({
            "degrees": [self.lo, self.hi()],
            "terms": terms,
            "diffs": diffs,
        })
    }
}

/// A chain map of pure degree `shift`: blocks(n) maps source term n to
/// target term n+shift, and commutation holds up to the sign (-1)^shift:
/// target.diff(n+shift) ∘ blocks(n) == (-1)^shift blocks(n-1) ∘ source.diff(n).
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: ChainComplex,
    pub target: ChainComplex,
    pub shift: i64,
    blocks: BTreeMap<i64, IntegerMatrix>,
}

impl ChainMap {
    pub fn new(
        source: ChainComplex,
        target: ChainComplex,
        shift: i64,
        blocks: BTreeMap<i64, IntegerMatrix>,
    ) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::ShapeMismatch("chain map between different rings".into()));
        }
        for (&n, b) in &blocks {
            if b.rows() != target.rank(n + shift) || b.cols() != source.rank(n) {
                return Err(Error::ShapeMismatch(format!(
                    "block at degree {n} has shape {}x{}, expected {}x{}",
                    b.rows(),
                    b.cols(),
                    target.rank(n + shift),
                    source.rank(n)
                )));
            }
        }
        Ok(ChainMap { source, target, shift, blocks })
    }

    /// Identity chain map of a complex.
    pub fn identity(c: &ChainComplex) -> Self {
        let blocks = (c.lo()..=c.hi())
            .map(|n| (n, IntegerMatrix::identity(c.rank(n))))
            .collect();
        ChainMap::new(c.clone(), c.clone(), 0, blocks).unwrap()
    }

    /// Zero chain map between two complexes.
    pub fn zero(source: &ChainComplex, target: &ChainComplex, shift: i64) -> Result<Self> {
        ChainMap::new(source.clone(), target.clone(), shift, BTreeMap::new())
    }

    pub fn block(&self, n: i64) -> IntegerMatrix {
        self.blocks
            .get(&n)
            .cloned()
            .unwrap_or_else(|| IntegerMatrix::zero(self.target.rank(n + self.shift), self.source.rank(n)))
    }

    fn sign(&self) -> i64 {
        if self.shift.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// Check the commutation invariant over the shared ring.
    pub fn validate(&self) -> bool {
        let s = self.shift;
        for n in self.source.lo()..=self.source.hi() + 1 {
            let lhs = self.target.diff(n + s).mul(&self.block(n));
            let mut rhs = self.block(n - 1).mul(&self.source.diff(n));
            if self.sign() < 0 {
                rhs = rhs.neg();
            }
            if !lhs.eq_over(&rhs, self.source.ring()) {
                return false;
            }
        }
        true
    }

    pub fn validate_strict(&self) -> Result<()> {
        if self.validate() {
            Ok(())
        } else {
            Err(Error::MalformedComplex(format!(
                "chain map commutation fails (shift {})",
                self.shift
            )))
        }
    }

    /// Composition g ∘ f (f first); shifts add.
    pub fn compose(g: &ChainMap, f: &ChainMap) -> Result<ChainMap> {
        let mut blocks = BTreeMap::new();
        for n in f.source.lo()..=f.source.hi() {
            let b = g.block(n + f.shift).mul(&f.block(n));
            if !b.is_zero() {
                blocks.insert(n, b);
            }
        }
        ChainMap::new(f.source.clone(), g.target.clone(), f.shift + g.shift, blocks)
    }

    /// Scalar multiple of a chain map.
    pub fn scale(&self, k: i64) -> ChainMap {
        let kk = num_bigint::BigInt::from(k);
        let blocks = self.blocks.iter().map(|(&n, b)| (n, b.scale(&kk))).collect();
        ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            shift: self.shift,
            blocks,
        }
    }

    /// Blockwise equality over the shared ring.
    pub fn eq_over_ring(&self, other: &ChainMap) -> bool {
        if self.shift != other.shift {
            return false;
        }
        let lo = self.source.lo().min(other.source.lo());
        let hi = self.source.hi().max(other.source.hi());
        (lo..=hi).all(|n| self.block(n).eq_over(&other.block(n), self.source.ring()))
    }
}

/// Mapping cone of a chain map f: S -> T (with shift s): term n is
/// S_{n-1} ⊕ T_{n+s}, differential (x, y) ↦ (-dS x, f(x) + (-1)^s dT y).
/// The cone is acyclic exactly when f is a quasi-isomorphism.
pub fn mapping_cone(f: &ChainMap) -> Result<ChainComplex> {
    let s = f.shift;
    let src = &f.source;
    let tgt = &f.target;
    let lo = (src.lo() + 1).min(tgt.lo() - s);
    let hi = (src.hi() + 1).max(tgt.hi() - s);
    let sign = if s.rem_euclid(2) == 0 { 1 } else { -1 };
    let mut ranks = Vec::new();
    for n in lo..=hi {
        ranks.push(src.rank(n - 1) + tgt.rank(n + s));
    }
    let mut diffs = Vec::new();
    for n in lo + 1..=hi {
        let sr = src.rank(n - 2);
        let tr = tgt.rank(n - 1 + s);
        let rows = sr + tr;
        let cols = src.rank(n - 1) + tgt.rank(n + s);
        let mut d = IntegerMatrix::zero(rows, cols);
        d.paste(0, 0, &src.diff(n - 1).neg());
        d.paste(sr, 0, &f.block(n - 1));
        let dt = tgt.diff(n + s);
        d.paste(sr, src.rank(n - 1), &if sign < 0 { dt.neg() } else { dt });
        diffs.push(d);
    }
    let labels = (lo..=hi)
        .map(|n| {
            let mut l: Vec<String> =
                src.labels(n - 1).iter().map(|x| format!("s:{x}")).collect();
            l.extend(tgt.labels(n + s).iter().map(|x| format!("t:{x}")));
            l
        })
        .collect();
    ChainComplex::new(src.ring(), lo, ranks, Some(labels), diffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::homology::{homology, HomologyGroup};

    fn two_term(ring: RingSelector, m: i64) -> ChainComplex {
        // degree 1: Z --m--> degree 0: Z
        ChainComplex::new(
            ring,
            0,
            vec![1, 1],
            None,
            vec![IntegerMatrix::from_rows(1, 1, &[&[m]])],
        )
        .unwrap()
    }

    #[test]
    fn validation_catches_bad_composites() {
        let d2 = IntegerMatrix::from_rows(1, 1, &[&[3]]);
        let d1 = IntegerMatrix::from_rows(1, 1, &[&[2]]);
        let c = ChainComplex::new(RingSelector::Integers, 0, vec![1, 1, 1], None, vec![d1, d2])
            .unwrap();
        assert!(!c.validate());
        // the same data is a complex mod 2 (2*3 = 6 ≡ 0 mod 2)
        let c2 = ChainComplex::new(
            RingSelector::PrimeField(2),
            0,
            vec![1, 1, 1],
            None,
            vec![
                IntegerMatrix::from_rows(1, 1, &[&[2]]),
                IntegerMatrix::from_rows(1, 1, &[&[3]]),
            ],
        )
        .unwrap();
        assert!(c2.validate());
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let c = two_term(RingSelector::Integers, 4);
        let cone = mapping_cone(&ChainMap::identity(&c)).unwrap();
        assert!(cone.validate());
        for n in cone.lo()..=cone.hi() {
            assert!(homology(&cone, n).is_zero(), "H_{n} nonzero");
        }
    }

    #[test]
    fn cone_of_zero_map_duplicates_homology() {
        let c = two_term(RingSelector::Integers, 4);
        let z = ChainMap::zero(&c, &c, 0).unwrap();
        let cone = mapping_cone(&z).unwrap();
        assert!(cone.validate());
        // cone = C[1] ⊕ C: H_1 picks up H_0(C) = Z/4 and H_1(C[1]) = H_0...
        // degrees: cone has terms at 0,1,2; H_0 = Z/4, H_1 = Z/4 (from shifted copy)
        assert_eq!(
            homology(&cone, 0),
            HomologyGroup::Integral { free_rank: 0, invariant_factors: vec![4u32.into()] }
        );
        assert_eq!(
            homology(&cone, 1),
            HomologyGroup::Integral { free_rank: 0, invariant_factors: vec![4u32.into()] }
        );
    }

    #[test]
    fn chain_map_sign_convention() {
        // shift-1 map between two-term complexes: f: S -> T[1] needs
        // dT ∘ f = - f ∘ dS; build S with d=2, T with d=-2 and f = id blocks.
        let s = two_term(RingSelector::Integers, 2);
        let t = ChainComplex::new(
            RingSelector::Integers,
            1,
            vec![1, 1],
            None,
            vec![IntegerMatrix::from_rows(1, 1, &[&[-2]])],
        )
        .unwrap();
        let mut blocks = BTreeMap::new();
        blocks.insert(0i64, IntegerMatrix::identity(1));
        blocks.insert(1i64, IntegerMatrix::identity(1));
        let f = ChainMap::new(s, t, 1, blocks).unwrap();
        assert!(f.validate());
    }

    #[test]
    fn shifted_negates_differential() {
        let c = two_term(RingSelector::Integers, 5);
        let sh = c.shifted(1);
        assert_eq!(sh.lo(), 1);
        assert_eq!(sh.diff(2), IntegerMatrix::from_rows(1, 1, &[&[-5]]));
        assert_eq!(c.shifted(2).diff(3), IntegerMatrix::from_rows(1, 1, &[&[5]]));
    }

    #[test]
    fn debug_json_shape() {
        let c = two_term(RingSelector::Integers, 3);
        let v = c.to_debug_json();
        assert_eq!(v["degrees"], serde_json::json!([0, 1]));
        assert_eq!(v["terms"]["0"], 1);
        assert_eq!(v["diffs"]["1"], serde_json::json!([[3]]));
    }
}
