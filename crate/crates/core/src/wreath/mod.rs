//! Graded superalgebras: symmetric groups, Clifford algebras, B^Gamma and the wreath products B_n^Gamma.

mod algebra;
mod bgamma;
mod cartan;
mod clifford;
mod elem;
mod perm;
mod phase;
mod psi;
mod word;

pub use algebra::{SignFaults, WreathAlgebra};
pub use bgamma::{dual_basis, dual_basis_oriented, BGammaBasisElem, DualBasisTable, DualOrientation, Ext};
pub use cartan::CartanData;
pub use clifford::CliffordMono;
pub use elem::{mult, trace, WreathElem};
pub use perm::{Permutation, MAX_RANK};
pub use phase::Phase;
pub use psi::{
    char_idempotent, dimension, e_candidate, graded_dimension, in_slot, psi, psi_shift, verify_psi_suite, PSI_AMBIENT,
};
pub use word::WreathBasisWord;
