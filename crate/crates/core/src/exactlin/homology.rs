//! Homology of chain complexes: exact over the integers (with invariant
//! factors) and dimension counts over prime fields.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::complex::ChainComplex;
use super::hnf::EchelonForm;
use super::matrix::{IntegerMatrix, RingSelector};
use super::snf::smith_normal_form;

/// An isomorphism class of finitely generated homology: a free part plus a
/// divisibility chain of cyclic torsion factors over Z, or a dimension over
/// F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomologyGroup {
    Integral { free_rank: usize, invariant_factors: Vec<BigUint> },
    ModP { p: u64, dimension: usize },
}

impl HomologyGroup {
    pub fn zero(ring: RingSelector) -> Self {
        match ring {
            RingSelector::Integers => {
                HomologyGroup::Integral { free_rank: 0, invariant_factors: vec![] }
            }
            RingSelector::PrimeField(p) => HomologyGroup::ModP { p, dimension: 0 },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            HomologyGroup::Integral { free_rank, invariant_factors } => {
                *free_rank == 0 && invariant_factors.is_empty()
            }
            HomologyGroup::ModP { dimension, .. } => *dimension == 0,
        }
    }

    /// Dimension when the group lives over a prime field; free rank over Z.
    pub fn rank(&self) -> usize {
        match self {
            HomologyGroup::Integral { free_rank, .. } => *free_rank,
            HomologyGroup::ModP { dimension, .. } => *dimension,
        }
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyGroup::Integral { free_rank, invariant_factors } => {
                let mut parts = Vec::new();
                match free_rank {
                    0 => {}
                    1 => parts.push("Z".to_string()),
                    r => parts.push(format!("Z^{r}")),
                }
                for d in invariant_factors {
                    parts.push(format!("Z/{d}"));
                }
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join(" + "))
                }
            }
            HomologyGroup::ModP { p, dimension } => match dimension {
                0 => write!(f, "0"),
                1 => write!(f, "F_{p}"),
                d => write!(f, "F_{p}^{d}"),
            },
        }
    }
}

/// Homology of a complex at one degree, with the concrete data the long-exact
/// -sequence machinery needs: a basis of the cycle lattice (or cycle space)
/// and the boundaries expressed in that basis.
#[derive(Clone, Debug)]
pub struct HomologyData {
    pub ring: RingSelector,
    pub group: HomologyGroup,
    /// Columns are a basis of cycles at this degree inside the ambient term.
    pub cycles: IntegerMatrix,
    /// Image of the incoming differential written in cycle coordinates; its
    /// columns generate the relations of the homology group.
    pub boundary_coords: IntegerMatrix,
}

/// Compute the homology of `c` at degree `n` over the complex's ring.
///
/// Panics if the incoming boundaries do not lie in the cycle lattice, i.e.
/// when the input is not actually a complex (use `validate` first when in
/// doubt).
pub fn homology(c: &ChainComplex, n: i64) -> HomologyGroup {
    homology_data(c, n).group
}

/// As `homology`, but also returns cycle and boundary coordinates.
pub fn homology_data(c: &ChainComplex, n: i64) -> HomologyData {
    let ring = c.ring();
    let d_out = c.diff(n);
    let d_in = c.diff(n + 1);
    match ring {
        RingSelector::Integers => {
            let cycles = super::hnf::kernel_basis(&d_out);
            let boundary_coords = EchelonForm::new(&cycles)
                .solve_matrix(&d_in)
                .expect("boundaries do not lie in the cycle lattice: not a complex");
            let invariants = smith_normal_form(&boundary_coords);
            let relation_rank = invariants.iter().filter(|d| !d.is_zero()).count();
            let free_rank = cycles.cols() - relation_rank;
            let invariant_factors =
                invariants.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect();
            HomologyData {
                ring,
                group: HomologyGroup::Integral { free_rank, invariant_factors },
                cycles,
                boundary_coords,
            }
        }
        RingSelector::PrimeField(p) => {
            let cycles = d_out.reduce_mod(p).kernel_basis();
            let boundary_coords = cycles
                .reduce_mod(p)
                .solve_matrix(&d_in.reduce_mod(p))
                .expect("boundaries do not lie in the cycle space: not a complex");
            let dimension = cycles.cols() - boundary_coords.reduce_mod(p).rank();
            HomologyData {
                ring,
                group: HomologyGroup::ModP { p, dimension },
                cycles,
                boundary_coords,
            }
        }
    }
}
