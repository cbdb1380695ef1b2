//! Negacyclic codes over GF(q²): cyclotomic cosets mod `2n`, BCH-type
//! defining sets, generator and parity-check matrices, minimum distances and
//! Hermitian dual containment.

mod code;
mod cosets;
mod distance;
mod duality;

pub use code::{
    bch_defining_set, bch_designed_distance, bch_exponents, build_bch_code, build_code, default_parity_check,
    generator_matrix, is_codeword, parity_check_matrix, BchParams, DefiningSet, NegacyclicCode, ParityCheck,
};
pub use cosets::{all_odd_cosets, coset_of, verify_coset_structure, CosetLemma, CosetReport, CyclotomicCoset};
pub use distance::{
    certify_distance, dependent_columns, dependent_columns_cost, enumerate_min_weight, enumeration_cost, mds_columns,
    mds_columns_cost, min_distance_exact, DistanceMethod, DistanceMode, DistanceReport, DistanceStatus,
};
pub use duality::{hermitian_dual_containment, ContainmentReport};
