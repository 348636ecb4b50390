//! Signed roots of unity, the structure constants of basis-word products.

use crate::scalars::CycloScalar;

/// The scalar (-1)^neg zeta^rot.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Phase {
    pub neg: bool,
    pub rot: u32,
}

impl Phase {
    pub const ONE: Phase = Phase { neg: false, rot: 0 };
    pub const MINUS_ONE: Phase = Phase { neg: true, rot: 0 };

    pub fn new(neg: bool, rot: i64, ell: u32) -> Self {
        Phase { neg, rot: rot.rem_euclid(ell as i64) as u32 }
    }

    pub fn sign(neg: bool) -> Self {
        Phase { neg, rot: 0 }
    }

    pub fn mul(self, other: Phase, ell: u32) -> Phase {
        Phase { neg: self.neg ^ other.neg, rot: (self.rot + other.rot) % ell }
    }

    pub fn negate(self) -> Phase {
        Phase { neg: !self.neg, rot: self.rot }
    }

    pub fn inverse(self, ell: u32) -> Phase {
        Phase { neg: self.neg, rot: (ell - self.rot) % ell }
    }

    pub fn scalar(self, ell: u32) -> CycloScalar {
        let z = CycloScalar::zeta_pow(ell, self.rot as i64);
        if self.neg {
            -z
        } else {
            z
        }
    }
}
