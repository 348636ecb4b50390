//! Clifford monomials c_S with the ascending-order sign convention.

use std::fmt;

use super::perm::{Permutation, MAX_RANK};

/// c_S = product of c_i for i in S in ascending order; bit i-1 of `mask` marks i in S.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CliffordMono {
    n: u8,
    mask: u16,
}

impl CliffordMono {
    pub fn one(n: usize) -> Self {
        CliffordMono { n: n as u8, mask: 0 }
    }

    /// Support of the product of the given generators; signs are not tracked here.
    pub fn from_indices(n: usize, indices: &[usize]) -> Option<Self> {
        let mut m = Self::one(n);
        for &i in indices {
            if i == 0 || i > n || i > MAX_RANK {
                return None;
            }
            m.mask ^= 1 << (i - 1);
        }
        Some(m)
    }

    pub(crate) fn from_mask(n: usize, mask: u16) -> Self {
        CliffordMono { n: n as u8, mask }
    }

    pub fn mask(&self) -> u16 {
        self.mask
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && self.mask & (1 << (i - 1)) != 0
    }

    pub fn indices(&self) -> Vec<usize> {
        (1..=MAX_RANK).filter(|&i| self.contains(i)).collect()
    }

    /// Z2-degree |S| mod 2.
    pub fn parity(&self) -> u8 {
        (self.mask.count_ones() % 2) as u8
    }

    /// c_S c_T = sign c_{S xor T}; the boolean is true for a minus sign.
    pub fn mul(&self, other: &Self) -> (bool, Self) {
        (clifford_sign(self.mask, other.mask), CliffordMono { n: self.n.max(other.n), mask: self.mask ^ other.mask })
    }

    /// w c_S w^-1 = sign c_{w(S)}.
    pub fn permute(&self, w: &Permutation) -> (bool, Self) {
        let (neg, mask) = permute_mask(self.mask, w.raw());
        (neg, CliffordMono { n: self.n, mask })
    }
}

/// Sign of c_S c_T when rewritten in ascending order.
pub(crate) fn clifford_sign(s: u16, t: u16) -> bool {
    let mut swaps = 0u32;
    let mut rest = t;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        rest &= rest - 1;
        // elements of S strictly greater than this element of T
        let above = if bit >= 15 { 0 } else { s & (!0u16 << (bit + 1)) };
        swaps += above.count_ones();
    }
    swaps % 2 == 1
}

/// Image of a Clifford support under a 0-based one-line permutation, with reordering sign.
pub(crate) fn permute_mask(mask: u16, img: &[u8; MAX_RANK]) -> (bool, u16) {
    let mut out = 0u16;
    let mut inversions = 0u32;
    let mut rest = mask;
    while rest != 0 {
        let j = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let wj = img[j];
        out |= 1 << wj;
        let mut later = rest;
        while later != 0 {
            let k = later.trailing_zeros() as usize;
            later &= later - 1;
            if img[k] < wj {
                inversions += 1;
            }
        }
    }
    (inversions % 2 == 1, out)
}

impl fmt::Display for CliffordMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|i| format!("c{i}")).collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}
