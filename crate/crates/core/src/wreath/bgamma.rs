//! The algebra B^Gamma = Lambda*(V) x C[Gamma] for cyclic Gamma, its trace and dual basis.

use std::fmt;

use super::phase::Phase;
use crate::error::{Error, Result};
use crate::scalars::CycloScalar;

/// Exterior part of a B^Gamma basis element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Ext {
    One,
    V1,
    V2,
    Omega,
}

impl Ext {
    pub const ALL: [Ext; 4] = [Ext::One, Ext::V1, Ext::V2, Ext::Omega];

    /// Z-degree: 0, 1, 1, 2.
    pub fn degree(self) -> u32 {
        match self {
            Ext::One => 0,
            Ext::V1 | Ext::V2 => 1,
            Ext::Omega => 2,
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    fn name(self) -> &'static str {
        match self {
            Ext::One => "1",
            Ext::V1 => "v1",
            Ext::V2 => "v2",
            Ext::Omega => "w",
        }
    }

    pub fn parse(s: &str) -> Option<Ext> {
        match s {
            "1" => Some(Ext::One),
            "v1" => Some(Ext::V1),
            "v2" => Some(Ext::V2),
            "w" => Some(Ext::Omega),
            _ => None,
        }
    }
}

/// A basis element f g^k of B^Gamma.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BGammaBasisElem {
    pub ext: Ext,
    pub g: u32,
}

impl BGammaBasisElem {
    pub const ONE: BGammaBasisElem = BGammaBasisElem { ext: Ext::One, g: 0 };
    pub const OMEGA: BGammaBasisElem = BGammaBasisElem { ext: Ext::Omega, g: 0 };

    pub fn new(ext: Ext, g: u32) -> Self {
        BGammaBasisElem { ext, g }
    }

    /// Dense index ext * l + g.
    pub fn index(&self, ell: u32) -> u8 {
        (self.ext.index() as u32 * ell + self.g) as u8
    }

    pub fn from_index(idx: u8, ell: u32) -> Self {
        let idx = idx as u32;
        BGammaBasisElem { ext: Ext::ALL[(idx / ell) as usize], g: idx % ell }
    }

    pub fn degree(&self) -> u32 {
        self.ext.degree()
    }

    /// All 4l basis elements in index order.
    pub fn all(ell: u32) -> Vec<Self> {
        (0..4 * ell).map(|i| Self::from_index(i as u8, ell)).collect()
    }
}

impl fmt::Display for BGammaBasisElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.g == 0 {
            write!(f, "{}", self.ext.name())
        } else {
            write!(f, "{}*g^{}", self.ext.name(), self.g)
        }
    }
}

/// Degree of a dense basis index.
pub(crate) fn index_degree(idx: u8, ell: u32) -> u32 {
    Ext::ALL[(idx as u32 / ell) as usize].degree()
}

/// Product of two basis elements, as a phase times a basis element, or zero.
pub(crate) fn basis_product(a: BGammaBasisElem, b: BGammaBasisElem, ell: u32) -> Option<(BGammaBasisElem, Phase)> {
    // g^a acts on v1 by zeta^a and on v2 by zeta^-a
    let act = match b.ext {
        Ext::V1 => a.g as i64,
        Ext::V2 => -(a.g as i64),
        Ext::One | Ext::Omega => 0,
    };
    let (ext, neg) = match (a.ext, b.ext) {
        (Ext::One, e) | (e, Ext::One) => (e, false),
        (Ext::V1, Ext::V2) => (Ext::Omega, false),
        (Ext::V2, Ext::V1) => (Ext::Omega, true),
        _ => return None,
    };
    let phase = Phase::new(neg, act, ell);
    Some((BGammaBasisElem { ext, g: (a.g + b.g) % ell }, phase))
}

/// Trace picking the omega component at the group identity.
pub(crate) fn basis_trace(b: BGammaBasisElem) -> bool {
    b.ext == Ext::Omega && b.g == 0
}

/// Which side the dual basis is normalized on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum DualOrientation {
    /// tr(b * dual(b')) = delta(b, b').
    #[default]
    Right,
    /// tr(dual(b') * b) = delta(b, b').
    Left,
}

/// Basis, Gram matrix of tr(ab) and dual basis of B^Gamma.
#[derive(Clone, Debug)]
pub struct DualBasisTable {
    ell: u32,
    orientation: DualOrientation,
    basis: Vec<BGammaBasisElem>,
    gram: Vec<Vec<CycloScalar>>,
    dual: Vec<Vec<CycloScalar>>,
}

impl DualBasisTable {
    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn orientation(&self) -> DualOrientation {
        self.orientation
    }

    pub fn basis(&self) -> &[BGammaBasisElem] {
        &self.basis
    }

    /// Gram entry tr(b_a b_b).
    pub fn gram(&self, a: usize, b: usize) -> &CycloScalar {
        &self.gram[a][b]
    }

    /// Coordinates of dual(b) over the basis.
    pub fn dual_coords(&self, b: BGammaBasisElem) -> &[CycloScalar] {
        &self.dual[b.index(self.ell) as usize]
    }

    /// Nonzero (basis element, coefficient) pairs of dual(b).
    pub fn dual_terms(&self, b: BGammaBasisElem) -> Vec<(BGammaBasisElem, CycloScalar)> {
        self.dual_coords(b)
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (BGammaBasisElem::from_index(i as u8, self.ell), c.clone()))
            .collect()
    }
}

/// Gauss-Jordan inverse over the cyclotomic field.
pub(crate) fn invert_matrix(m: &[Vec<CycloScalar>], ell: u32) -> Result<Vec<Vec<CycloScalar>>> {
    let n = m.len();
    let mut aug: Vec<Vec<CycloScalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { CycloScalar::one(ell) } else { CycloScalar::zero(ell) }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !aug[r][col].is_zero()).ok_or(Error::Singular)?;
        aug.swap(col, piv);
        let inv = aug[col][col].inv().ok_or(Error::Singular)?;
        for v in aug[col].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                let prow = aug[col].clone();
                for (v, p) in aug[r].iter_mut().zip(prow.iter()) {
                    *v -= &(&f * p);
                }
            }
        }
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Builds the dual basis by inverting the Gram matrix of tr(ab).
pub fn dual_basis(ell: u32) -> Result<DualBasisTable> {
    dual_basis_oriented(ell, DualOrientation::Right)
}

/// Dual basis with an explicit orientation (the left one serves as a negative control).
pub fn dual_basis_oriented(ell: u32, orientation: DualOrientation) -> Result<DualBasisTable> {
    if ell == 0 {
        return Err(Error::OutOfRange("group order must be positive".into()));
    }
    let basis = BGammaBasisElem::all(ell);
    let n = basis.len();
    let mut gram = vec![vec![CycloScalar::zero(ell); n]; n];
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            if let Some((p, ph)) = basis_product(*a, *b, ell) {
                if basis_trace(p) {
                    gram[i][j] = ph.scalar(ell);
                }
            }
        }
    }
    // Right: D G^T = I, Left: D G = I.
    let target: Vec<Vec<CycloScalar>> = match orientation {
        DualOrientation::Right => (0..n).map(|i| (0..n).map(|j| gram[j][i].clone()).collect()).collect(),
        DualOrientation::Left => gram.clone(),
    };
    let dual = invert_matrix(&target, ell)?;
    Ok(DualBasisTable { ell, orientation, basis, gram, dual })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_follow_the_exterior_and_group_rules() {
        let v1 = BGammaBasisElem::new(Ext::V1, 0);
        let v2 = BGammaBasisElem::new(Ext::V2, 0);
        let g = BGammaBasisElem::new(Ext::One, 1);
        assert_eq!(basis_product(v1, v2, 1), Some((BGammaBasisElem::OMEGA, Phase::ONE)));
        assert_eq!(basis_product(v2, v1, 1), Some((BGammaBasisElem::OMEGA, Phase::MINUS_ONE)));
        assert_eq!(basis_product(v1, v1, 3), None);
        let (e, ph) = basis_product(g, v1, 3).unwrap();
        assert_eq!(e, BGammaBasisElem::new(Ext::V1, 1));
        assert_eq!(ph, Phase::new(false, 1, 3));
        let (_, ph2) = basis_product(g, v2, 3).unwrap();
        assert_eq!(ph2, Phase::new(false, -1, 3));
    }

    #[test]
    fn dims_and_degrees() {
        assert_eq!(BGammaBasisElem::all(3).len(), 12);
        for (i, b) in BGammaBasisElem::all(3).iter().enumerate() {
            assert_eq!(b.index(3) as usize, i);
            assert_eq!(index_degree(i as u8, 3), b.degree());
        }
    }
}
