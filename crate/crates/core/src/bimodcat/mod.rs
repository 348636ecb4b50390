//! Bimodule category: carriers, natural transformations and relation suites.

mod carrier;
mod context;
mod crossing;
mod example;
mod free;
mod h10;
mod map;
mod nat;
mod suites;

pub use carrier::{BiDegree, BimoduleHandle, Carrier, CarrierVec, Functor, Key};
pub use context::{BimodContext, BimodFaults};
pub use crossing::{
    alpha_closed, beta_closed, crossing_coefficient_check, dual_scalar, normalizer, peel_expansion, PairExpansion,
    MAX_CROSSING_BOUND,
};
pub use example::{example_decomposition, example_maps, truncate_pq, truncate_qp, ExampleMaps};
pub use free::{decompose_right, decompose_right_in, Coset, FreeBasisCoords, FreeIndex};
pub use h10::{correction_character, graded_trace, h10_projection_decomposition};
pub use map::{generators, BimodMap, Mismatch};
pub use nat::*;
pub use suites::{
    admissible, cases, constructors, dual_label, h10_corrections, h10_lhs, h10_rhs, run_suite, verify_all, verify_h,
    verify_isotopy, verify_linearity, Case, Relation, MAX_SOURCE_DIM,
};
