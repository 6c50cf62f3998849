//! Exact linear algebra over the integers and prime fields.
//!
//! Matrices are sparse maps from positions to arbitrary-precision integers.
//! All decisions (ranks, kernels, normal forms) are exact: integral questions
//! go through Hermite/Smith elimination, prime-field questions through
//! Gaussian elimination on reduced copies.  No floating point is involved
//! anywhere.

mod complex;
mod hnf;
mod homology;
mod matrix;
mod presented;
mod snf;

pub use complex::{mapping_cone, ChainComplex, ChainMap};
pub use hnf::{kernel_basis, solve, solve_matrix, EchelonForm};
pub use homology::{homology, homology_data, HomologyData, HomologyGroup};
pub use matrix::{IntegerMatrix, ModMatrix, RingSelector};
pub use presented::{
    check_long_exact_sequence, induced_map, ring_kernel_basis, ring_rank, ring_solve_matrix,
    subgroup_equal, PresentedGroup, PresentedMap,
};
pub use snf::smith_normal_form;
