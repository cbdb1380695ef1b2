//! Convolutional codes from split parity-check matrices: polynomial
//! generator matrices, rank conditions, basicity, Hermitian duals and free
//! distance.

mod basic;
mod dual;
mod free_distance;
mod polymatrix;

pub use basic::{is_reduced, minor, polynomial_rank, verify_basic, BasicReport, BasicStatus};
pub use dual::{
    cross_orthogonal, dual_basis, dual_basis_bounded, shifted_hermitian_orthogonal, DualBasis, MAX_DUAL_CAP,
};
pub use free_distance::{
    free_distance_exact, theorem_a_bracket, trellis_edges, FreeDistanceMethod, FreeDistanceResult,
};
pub use polymatrix::{
    check_rank_conditions, generalized_singleton, split_and_pad, ConvolutionalCode, PolyMatrix, RankConditions,
};
