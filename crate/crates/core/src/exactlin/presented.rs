//! Finitely presented abelian groups (generators + relations) and the long
//! exact homology sequence of a short exact sequence of complexes.
//!
//! Homology groups computed by this crate come with concrete coordinates: a
//! basis of cycles inside the ambient term and the boundaries written in that
//! basis.  Packaging those as presented groups lets induced maps, connecting
//! homomorphisms, and exactness checks all reduce to exact linear algebra.

use crate::error::{Error, Result};

use super::complex::{ChainComplex, ChainMap};
use super::hnf::EchelonForm;
use super::homology::{homology_data, HomologyData};
use super::matrix::{IntegerMatrix, RingSelector};

/// Solve m * X = b over the selected ring; None when no solution exists.
pub fn ring_solve_matrix(
    m: &IntegerMatrix,
    b: &IntegerMatrix,
    ring: RingSelector,
) -> Option<IntegerMatrix> {
    match ring {
        RingSelector::Integers => EchelonForm::new(m).solve_matrix(b),
        RingSelector::PrimeField(p) => m.reduce_mod(p).solve_matrix(&b.reduce_mod(p)),
    }
}

/// Basis of the right kernel over the selected ring (a complete lattice basis
/// over Z, a vector-space basis mod p).
pub fn ring_kernel_basis(m: &IntegerMatrix, ring: RingSelector) -> IntegerMatrix {
    match ring {
        RingSelector::Integers => super::hnf::kernel_basis(m),
        RingSelector::PrimeField(p) => m.reduce_mod(p).kernel_basis(),
    }
}

/// Rank of the matrix over the selected ring.
pub fn ring_rank(m: &IntegerMatrix, ring: RingSelector) -> usize {
    match ring {
        RingSelector::Integers => EchelonForm::new(m).rank(),
        RingSelector::PrimeField(p) => m.reduce_mod(p).rank(),
    }
}

/// An abelian group (or F_p vector space) presented by generator columns
/// living in an ambient free module and relation columns written in
/// generator coordinates.
#[derive(Clone, Debug)]
pub struct PresentedGroup {
    ring: RingSelector,
    /// ambient_rank x g: generator representatives.
    generators: IntegerMatrix,
    /// g x r: relations among the generators.
    relations: IntegerMatrix,
}

impl PresentedGroup {
    pub fn new(ring: RingSelector, generators: IntegerMatrix, relations: IntegerMatrix) -> Result<Self> {
        if relations.rows() != generators.cols() {
            return Err(Error::ShapeMismatch(format!(
                "relations have {} rows but there are {} generators",
                relations.rows(),
                generators.cols()
            )));
        }
        Ok(PresentedGroup { ring, generators, relations })
    }

    pub fn from_data(data: &HomologyData) -> Self {
        PresentedGroup {
            ring: data.ring,
            generators: data.cycles.clone(),
            relations: data.boundary_coords.clone(),
        }
    }

    pub fn ring(&self) -> RingSelector {
        self.ring
    }

    pub fn num_generators(&self) -> usize {
        self.generators.cols()
    }

    pub fn generators(&self) -> &IntegerMatrix {
        &self.generators
    }

    pub fn relations(&self) -> &IntegerMatrix {
        &self.relations
    }

    /// Write an ambient vector in generator coordinates, if possible.
    pub fn coordinates(&self, ambient: &IntegerMatrix) -> Option<IntegerMatrix> {
        ring_solve_matrix(&self.generators, ambient, self.ring)
    }
}

/// A homomorphism between presented groups, stored as its matrix on
/// generators (target generators x source generators).
#[derive(Clone, Debug)]
pub struct PresentedMap {
    pub source: PresentedGroup,
    pub target: PresentedGroup,
    pub matrix: IntegerMatrix,
}

impl PresentedMap {
    /// Columns generating the image subgroup, in target generator
    /// coordinates.
    pub fn image(&self) -> IntegerMatrix {
        self.matrix.clone()
    }

    /// Columns generating the kernel subgroup, in source generator
    /// coordinates: projections of the kernel of [matrix | target relations].
    pub fn kernel(&self) -> IntegerMatrix {
        let aug = self.matrix.hstack(self.target.relations());
        let k = ring_kernel_basis(&aug, self.source.ring());
        let rows: Vec<usize> = (0..self.source.num_generators()).collect();
        k.select_rows(&rows)
    }
}

/// Induced map on presented groups from an ambient-level block: solves the
/// generator images into target coordinates and checks well-definedness on
/// relations.
pub fn induced_map(
    block: &IntegerMatrix,
    source: &PresentedGroup,
    target: &PresentedGroup,
) -> Result<PresentedMap> {
    let ring = source.ring();
    if target.ring() != ring {
        return Err(Error::ShapeMismatch("induced map between different rings".into()));
    }
    let images = block.mul(source.generators());
    let matrix = ring_solve_matrix(target.generators(), &images, ring).ok_or_else(|| {
        Error::Internal("induced map does not carry generators into the target group".into())
    })?;
    let rel_images = matrix.mul(source.relations());
    if ring_solve_matrix(target.relations(), &rel_images, ring).is_none() {
        return Err(Error::Internal("induced map is not well defined on relations".into()));
    }
    Ok(PresentedMap { source: source.clone(), target: target.clone(), matrix })
}

/// Do two column sets generate the same subgroup of the presented group?
/// Both are given in generator coordinates; relations are adjoined to both
/// sides so the comparison happens in the quotient.
pub fn subgroup_equal(pg: &PresentedGroup, a: &IntegerMatrix, b: &IntegerMatrix) -> bool {
    assert_eq!(a.rows(), pg.num_generators(), "subgroup columns in wrong coordinates");
    assert_eq!(b.rows(), pg.num_generators(), "subgroup columns in wrong coordinates");
    let a_aug = a.hstack(pg.relations());
    let b_aug = b.hstack(pg.relations());
    match pg.ring() {
        RingSelector::Integers => {
            let ea = EchelonForm::new(&a_aug);
            let eb = EchelonForm::new(&b_aug);
            (0..b_aug.cols()).all(|j| ea.contains(&b_aug.column(j)))
                && (0..a_aug.cols()).all(|j| eb.contains(&a_aug.column(j)))
        }
        RingSelector::PrimeField(p) => {
            let ra = a_aug.reduce_mod(p).rank();
            let rb = b_aug.reduce_mod(p).rank();
            let rab = a_aug.hstack(&b_aug).reduce_mod(p).rank();
            ra == rab && rb == rab
        }
    }
}

fn same_complex(x: &ChainComplex, y: &ChainComplex) -> bool {
    x.ring() == y.ring()
        && x.lo() == y.lo()
        && x.hi() == y.hi()
        && (x.lo()..=x.hi()).all(|n| x.rank(n) == y.rank(n))
        && (x.lo() + 1..=x.hi()).all(|n| x.diff(n).eq_over(&y.diff(n), x.ring()))
}

/// Verify that `inc` and `proj` form a degreewise short exact sequence of
/// complexes 0 -> A -> B -> C -> 0, then verify the induced long exact
/// sequence in homology, connecting homomorphisms included, over the
/// complexes' common ring.
pub fn check_long_exact_sequence(inc: &ChainMap, proj: &ChainMap) -> Result<()> {
    if inc.shift != 0 || proj.shift != 0 {
        return Err(Error::ShapeMismatch("short exact sequences need shift-0 maps".into()));
    }
    if !same_complex(&inc.target, &proj.source) {
        return Err(Error::ShapeMismatch(
            "middle complex of the short exact sequence does not match".into(),
        ));
    }
    let a = &inc.source;
    let b = &inc.target;
    let c = &proj.target;
    let ring = a.ring();
    inc.validate_strict()?;
    proj.validate_strict()?;

    let lo = a.lo().min(b.lo()).min(c.lo());
    let hi = a.hi().max(b.hi()).max(c.hi());

    // Degreewise exactness of 0 -> A_n -> B_n -> C_n -> 0.
    for n in lo..=hi {
        let i_n = inc.block(n);
        let p_n = proj.block(n);
        if !p_n.mul(&i_n).is_zero_over(ring) {
            return Err(Error::MalformedComplex(format!("p∘i nonzero at degree {n}")));
        }
        if ring_kernel_basis(&i_n, ring).cols() != 0 {
            return Err(Error::MalformedComplex(format!("inclusion not injective at degree {n}")));
        }
        let onto = match ring {
            RingSelector::Integers => {
                EchelonForm::new(&p_n).solve_matrix(&IntegerMatrix::identity(c.rank(n))).is_some()
            }
            RingSelector::PrimeField(_) => ring_rank(&p_n, ring) == c.rank(n),
        };
        if !onto {
            return Err(Error::MalformedComplex(format!("projection not surjective at degree {n}")));
        }
        // im(i) = ker(p): the composite being zero puts the image inside the
        // kernel; the reverse containment is the real check.
        let ker_p = ring_kernel_basis(&p_n, ring);
        let contained = match ring {
            RingSelector::Integers => {
                let ei = EchelonForm::new(&i_n);
                (0..ker_p.cols()).all(|j| ei.contains(&ker_p.column(j)))
            }
            RingSelector::PrimeField(_) => {
                ring_rank(&i_n, ring) == ker_p.cols()
            }
        };
        if !contained {
            return Err(Error::MalformedComplex(format!(
                "image of inclusion is smaller than kernel of projection at degree {n}"
            )));
        }
    }

    // Homology groups with coordinates, one degree past each end so the
    // boundary cases are covered.
    let window: Vec<i64> = (lo - 1..=hi + 1).collect();
    let data_a: Vec<HomologyData> = window.iter().map(|&n| homology_data(a, n)).collect();
    let data_b: Vec<HomologyData> = window.iter().map(|&n| homology_data(b, n)).collect();
    let data_c: Vec<HomologyData> = window.iter().map(|&n| homology_data(c, n)).collect();
    let pg_a: Vec<PresentedGroup> = data_a.iter().map(PresentedGroup::from_data).collect();
    let pg_b: Vec<PresentedGroup> = data_b.iter().map(PresentedGroup::from_data).collect();
    let pg_c: Vec<PresentedGroup> = data_c.iter().map(PresentedGroup::from_data).collect();
    let idx = |n: i64| (n - (lo - 1)) as usize;

    // Connecting homomorphism H_n(C) -> H_{n-1}(A): lift a cycle through the
    // projection, push through the differential, pull back along the
    // inclusion, and read off cycle coordinates.
    let connecting = |n: i64| -> Result<PresentedMap> {
        let src = &pg_c[idx(n)];
        let tgt = &pg_a[idx(n - 1)];
        let mut cols = Vec::new();
        for j in 0..src.num_generators() {
            let z = IntegerMatrix::from_columns(c.rank(n), &[src.generators().column(j)]);
            let lift = ring_solve_matrix(&proj.block(n), &z, ring)
                .ok_or_else(|| Error::Internal(format!("cycle lift failed at degree {n}")))?;
            let db = b.diff(n).mul(&lift);
            let pulled = ring_solve_matrix(&inc.block(n - 1), &db, ring)
                .ok_or_else(|| Error::Internal(format!("boundary pullback failed at degree {n}")))?;
            let coords = tgt.coordinates(&pulled).ok_or_else(|| {
                Error::Internal(format!("connecting image is not a cycle at degree {n}"))
            })?;
            cols.push(coords.column(0));
        }
        let matrix = IntegerMatrix::from_columns(tgt.num_generators(), &cols);
        Ok(PresentedMap { source: src.clone(), target: tgt.clone(), matrix })
    };

    for &n in &window {
        if n == lo - 1 {
            continue;
        }
        let i_star = induced_map(&inc.block(n), &pg_a[idx(n)], &pg_b[idx(n)])?;
        let p_star = induced_map(&proj.block(n), &pg_b[idx(n)], &pg_c[idx(n)])?;
        let delta = connecting(n)?;
        if !subgroup_equal(&pg_b[idx(n)], &i_star.image(), &p_star.kernel()) {
            return Err(Error::MalformedComplex(format!(
                "long exact sequence fails at H_{n} of the middle complex"
            )));
        }
        if !subgroup_equal(&pg_c[idx(n)], &p_star.image(), &delta.kernel()) {
            return Err(Error::MalformedComplex(format!(
                "long exact sequence fails at H_{n} of the quotient complex"
            )));
        }
        let i_star_prev = induced_map(&inc.block(n - 1), &pg_a[idx(n - 1)], &pg_b[idx(n - 1)])?;
        if !subgroup_equal(&pg_a[idx(n - 1)], &delta.image(), &i_star_prev.kernel()) {
            return Err(Error::MalformedComplex(format!(
                "long exact sequence fails at H_{} of the subcomplex",
                n - 1
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn pres(ring: RingSelector, gens: IntegerMatrix, rels: IntegerMatrix) -> PresentedGroup {
        PresentedGroup::new(ring, gens, rels).unwrap()
    }

    #[test]
    fn subgroup_comparison_in_quotient() {
        // Z ⊕ Z/2 on generators e1, e2 with relation 2e2
        let pg = pres(
            RingSelector::Integers,
            IntegerMatrix::identity(2),
            IntegerMatrix::from_rows(2, 1, &[&[0], &[2]]),
        );
        let e1 = IntegerMatrix::from_rows(2, 1, &[&[1], &[0]]);
        let e1_plus_2e2 = IntegerMatrix::from_rows(2, 1, &[&[1], &[2]]);
        let two_e1 = IntegerMatrix::from_rows(2, 1, &[&[2], &[0]]);
        assert!(subgroup_equal(&pg, &e1, &e1_plus_2e2));
        assert!(!subgroup_equal(&pg, &e1, &two_e1));
        // mod 2 the relation collapses and 2e1 becomes zero
        let pg2 = pres(
            RingSelector::PrimeField(2),
            IntegerMatrix::identity(2),
            IntegerMatrix::from_rows(2, 1, &[&[0], &[2]]),
        );
        let zero = IntegerMatrix::zero(2, 1);
        assert!(subgroup_equal(&pg2, &two_e1, &zero));
    }

    #[test]
    fn induced_map_checks_well_definedness() {
        // Z/2 -> Z sending the generator to a generator is not a group map
        let z_mod_2 = pres(
            RingSelector::Integers,
            IntegerMatrix::identity(1),
            IntegerMatrix::from_rows(1, 1, &[&[2]]),
        );
        let z = pres(RingSelector::Integers, IntegerMatrix::identity(1), IntegerMatrix::zero(1, 0));
        assert!(induced_map(&IntegerMatrix::identity(1), &z_mod_2, &z).is_err());
        // the other direction is fine
        assert!(induced_map(&IntegerMatrix::identity(1), &z, &z_mod_2).is_ok());
    }

    /// 0 -> A -> B -> C -> 0 with A = (Z at degree 0), B = (Z --2--> Z),
    /// C = (Z at degree 1); the connecting map H_1(C) -> H_0(A) is
    /// multiplication by 2 and the whole long exact sequence must verify.
    fn doubling_ses(ring: RingSelector) -> (ChainMap, ChainMap) {
        let a = ChainComplex::single(ring, 0, 1);
        let b = ChainComplex::new(
            ring,
            0,
            vec![1, 1],
            None,
            vec![IntegerMatrix::from_rows(1, 1, &[&[2]])],
        )
        .unwrap();
        let c = ChainComplex::single(ring, 1, 1);
        let mut i_blocks = BTreeMap::new();
        i_blocks.insert(0i64, IntegerMatrix::identity(1));
        let inc = ChainMap::new(a, b.clone(), 0, i_blocks).unwrap();
        let mut p_blocks = BTreeMap::new();
        p_blocks.insert(1i64, IntegerMatrix::identity(1));
        let proj = ChainMap::new(b, c, 0, p_blocks).unwrap();
        (inc, proj)
    }

    #[test]
    fn long_exact_sequence_with_connecting_map() {
        for ring in [
            RingSelector::Integers,
            RingSelector::PrimeField(2),
            RingSelector::PrimeField(3),
        ] {
            let (inc, proj) = doubling_ses(ring);
            check_long_exact_sequence(&inc, &proj).unwrap();
        }
    }

    #[test]
    fn unsaturated_inclusion_is_rejected() {
        // "0 -> Z --2--> Z -> 0 -> 0" is not exact: coker is Z/2, not zero.
        let ring = RingSelector::Integers;
        let a = ChainComplex::single(ring, 0, 1);
        let b = ChainComplex::single(ring, 0, 1);
        let c = ChainComplex::single(ring, 0, 0);
        let mut i_blocks = BTreeMap::new();
        i_blocks.insert(0i64, IntegerMatrix::from_rows(1, 1, &[&[2]]));
        let inc = ChainMap::new(a, b.clone(), 0, i_blocks).unwrap();
        let proj = ChainMap::zero(&b, &c, 0).unwrap();
        let err = check_long_exact_sequence(&inc, &proj).unwrap_err();
        assert!(err.to_string().contains("kernel of projection"));
    }
}
