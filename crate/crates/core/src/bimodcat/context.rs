//! Shared algebra tables, dual basis and injected faults for one group order.

use std::sync::Arc;

use crate::error::Result;
use crate::wreath::{dual_basis_oriented, DualBasisTable, DualOrientation, SignFaults, WreathAlgebra};

/// Deliberate convention flips used as negative controls.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct BimodFaults {
    /// Sign faults inside the algebra product.
    pub algebra: SignFaults,
    /// Drop (-1)^{|x||b|} from the dot x -> xb.
    pub drop_dot_koszul: bool,
    /// Drop (-1)^{||x||} from the Clifford dot x -> x c_{n+1}.
    pub drop_clifford_dot_sign: bool,
    /// Drop the sign of moving a map past the factors on its left.
    pub drop_whisker_koszul: bool,
    /// Normalization side of the dual basis used by the unit of P Q.
    pub orientation: DualOrientation,
}

impl BimodFaults {
    pub fn any(&self) -> bool {
        self.algebra.any()
            || self.drop_dot_koszul
            || self.drop_clifford_dot_sign
            || self.drop_whisker_koszul
            || self.orientation != DualOrientation::Right
    }
}

/// Everything a map needs to evaluate: the (possibly faulted) algebra and the dual basis.
#[derive(Clone, Debug)]
pub struct BimodContext {
    alg: Arc<WreathAlgebra>,
    dual: Arc<DualBasisTable>,
    faults: BimodFaults,
}

impl BimodContext {
    pub fn new(ell: u32) -> Result<Self> {
        Self::with_faults(ell, BimodFaults::default())
    }

    pub fn with_faults(ell: u32, faults: BimodFaults) -> Result<Self> {
        let alg = if faults.algebra.any() {
            Arc::new(WreathAlgebra::with_faults(ell, faults.algebra)?)
        } else {
            WreathAlgebra::standard(ell)
        };
        let dual = Arc::new(dual_basis_oriented(ell, faults.orientation)?);
        Ok(BimodContext { alg, dual, faults })
    }

    pub fn ell(&self) -> u32 {
        self.alg.ell()
    }

    pub fn algebra(&self) -> &WreathAlgebra {
        &self.alg
    }

    pub fn dual(&self) -> &DualBasisTable {
        &self.dual
    }

    pub fn faults(&self) -> BimodFaults {
        self.faults
    }
}
