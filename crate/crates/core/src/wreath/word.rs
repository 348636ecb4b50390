//! Normal-form basis words (b-tensor) c_S w of B_n^Gamma.

use super::bgamma::{index_degree, BGammaBasisElem};
use super::clifford::CliffordMono;
use super::perm::{Permutation, MAX_RANK};

/// The word (b_1 x ... x b_n) c_S w; tensor slots hold dense B^Gamma indices, unused slots are 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WreathBasisWord {
    pub(crate) n: u8,
    pub(crate) tensor: [u8; MAX_RANK],
    pub(crate) cliff: u16,
    pub(crate) perm: [u8; MAX_RANK],
}

const ID_PERM: [u8; MAX_RANK] = [0, 1, 2, 3, 4, 5, 6, 7];

impl WreathBasisWord {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_RANK, "rank {n} exceeds {MAX_RANK}");
        WreathBasisWord { n: n as u8, tensor: [0; MAX_RANK], cliff: 0, perm: ID_PERM }
    }

    /// Assembles a word from 1-based parts; `tensor` has length n.
    pub fn new(tensor: &[BGammaBasisElem], ell: u32, cliff: CliffordMono, perm: Permutation) -> Self {
        let n = tensor.len();
        assert!(perm.rank() <= n, "permutation rank exceeds tensor length");
        let mut t = [0u8; MAX_RANK];
        for (slot, b) in t.iter_mut().zip(tensor) {
            *slot = b.index(ell);
        }
        WreathBasisWord { n: n as u8, tensor: t, cliff: cliff.mask(), perm: *perm.raw() }
    }

    /// s_i in B_n.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.perm = *Permutation::simple(n, i).raw();
        w
    }

    /// c_i in B_n.
    pub fn clifford(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n);
        let mut w = Self::identity(n);
        w.cliff = 1 << (i - 1);
        w
    }

    /// b placed in slot j of B_n.
    pub fn slot(n: usize, j: usize, b: BGammaBasisElem, ell: u32) -> Self {
        assert!(j >= 1 && j <= n);
        let mut w = Self::identity(n);
        w.tensor[j - 1] = b.index(ell);
        w
    }

    pub fn from_perm(n: usize, p: &Permutation) -> Self {
        let mut w = Self::identity(n);
        w.perm = *p.raw();
        w
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    pub fn perm(&self) -> Permutation {
        Permutation::from_raw(self.rank(), self.perm)
    }

    pub fn cliff(&self) -> CliffordMono {
        CliffordMono::from_mask(self.rank(), self.cliff)
    }

    /// B^Gamma element in 1-based slot j.
    pub fn tensor_entry(&self, j: usize, ell: u32) -> BGammaBasisElem {
        BGammaBasisElem::from_index(self.tensor[j - 1], ell)
    }

    /// Z-degree, the sum of the exterior degrees.
    pub fn z_degree(&self, ell: u32) -> u32 {
        (0..self.rank()).map(|j| index_degree(self.tensor[j], ell)).sum()
    }

    /// Z2-degree, the parity of the Clifford support.
    pub fn parity(&self) -> u8 {
        (self.cliff.count_ones() % 2) as u8
    }

    /// The same word viewed in B_m for m at least the rank.
    pub fn embed(&self, m: usize) -> Self {
        assert!(m >= self.rank() && m <= MAX_RANK);
        WreathBasisWord { n: m as u8, ..*self }
    }

    /// True when the word lies in the subalgebra B_m (slots, Clifford and permutation beyond m trivial).
    pub fn lies_in(&self, m: usize) -> bool {
        (m..MAX_RANK).all(|j| self.tensor[j] == 0 && self.perm[j] as usize == j) && (self.cliff >> m) == 0
    }

    /// Restriction to rank m, valid when `lies_in(m)`.
    pub fn restrict(&self, m: usize) -> Self {
        debug_assert!(self.lies_in(m));
        WreathBasisWord { n: m as u8, ..*self }
    }

    pub fn is_identity(&self) -> bool {
        self.tensor.iter().all(|&t| t == 0) && self.cliff == 0 && self.perm == ID_PERM
    }

    /// Renders using the element grammar, e.g. `[v1,1] c2 s1`.
    pub fn render(&self, ell: u32) -> String {
        let mut parts = Vec::new();
        if self.tensor[..self.rank()].iter().any(|&t| t != 0) {
            let entries: Vec<String> = (1..=self.rank()).map(|j| self.tensor_entry(j, ell).to_string()).collect();
            parts.push(format!("[{}]", entries.join(",")));
        }
        if self.cliff != 0 {
            parts.push(self.cliff().to_string());
        }
        let p = self.perm();
        if !p.is_identity() {
            parts.push(p.to_string());
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }

    /// Every basis word of B_n^Gamma: tensor odometer, then Clifford subsets, then permutations.
    pub fn all(n: usize, ell: u32) -> Vec<Self> {
        let perms = Permutation::all(n);
        let per_slot = 4 * ell as usize;
        let tensor_count = per_slot.pow(n as u32);
        let mut out = Vec::with_capacity(tensor_count << n);
        for t in 0..tensor_count {
            let mut tensor = [0u8; MAX_RANK];
            let mut rest = t;
            for slot in tensor.iter_mut().take(n) {
                *slot = (rest % per_slot) as u8;
                rest /= per_slot;
            }
            for cliff in 0..(1u16 << n) {
                for p in &perms {
                    out.push(WreathBasisWord { n: n as u8, tensor, cliff, perm: *p.raw() });
                }
            }
        }
        out
    }
}
