//! Structure constants of B_n^Gamma: the product of two basis words is a phase times a word, or zero.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::bgamma::{basis_product, index_degree, BGammaBasisElem};
use super::clifford::{clifford_sign, permute_mask};
use super::perm::MAX_RANK;
use super::phase::Phase;
use super::word::WreathBasisWord;
use crate::error::{Error, Result};
use crate::scalars::{CycloScalar, MAX_TABLE_LEVEL};

/// Deliberate sign faults for negative controls.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct SignFaults {
    /// Ignore the Koszul sign when S_n permutes tensor slots.
    pub drop_action_koszul: bool,
    /// Ignore the Koszul sign when two tensors are multiplied slotwise.
    pub drop_tensor_koszul: bool,
}

impl SignFaults {
    pub fn any(&self) -> bool {
        self.drop_action_koszul || self.drop_tensor_koszul
    }
}

/// Multiplication tables of B^Gamma and the word product of B_n^Gamma for one group order.
#[derive(Debug)]
pub struct WreathAlgebra {
    ell: u32,
    prod: Vec<Option<(u8, Phase)>>,
    odd: Vec<bool>,
    phases: Vec<CycloScalar>,
    faults: SignFaults,
}

impl WreathAlgebra {
    pub fn new(ell: u32) -> Result<Self> {
        Self::with_faults(ell, SignFaults::default())
    }

    pub fn with_faults(ell: u32, faults: SignFaults) -> Result<Self> {
        if ell == 0 || ell > MAX_TABLE_LEVEL || 4 * ell > u8::MAX as u32 {
            return Err(Error::LevelTooLarge { level: ell, cap: MAX_TABLE_LEVEL });
        }
        let basis = BGammaBasisElem::all(ell);
        let size = basis.len();
        let mut prod = vec![None; size * size];
        for a in &basis {
            for b in &basis {
                prod[a.index(ell) as usize * size + b.index(ell) as usize] =
                    basis_product(*a, *b, ell).map(|(e, ph)| (e.index(ell), ph));
            }
        }
        let odd = (0..size).map(|i| index_degree(i as u8, ell) % 2 == 1).collect();
        let phases = (0..2 * ell).map(|k| Phase { neg: k >= ell, rot: k % ell }.scalar(ell)).collect();
        Ok(WreathAlgebra { ell, prod, odd, phases, faults })
    }

    /// Shared fault-free algebra for a group order.
    pub fn standard(ell: u32) -> Arc<WreathAlgebra> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<WreathAlgebra>>>> = OnceLock::new();
        let map = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = map.lock().expect("algebra cache poisoned");
        guard.entry(ell).or_insert_with(|| Arc::new(WreathAlgebra::new(ell).expect("valid group order"))).clone()
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn faults(&self) -> SignFaults {
        self.faults
    }

    /// The scalar value of a phase.
    pub fn phase_scalar(&self, ph: Phase) -> &CycloScalar {
        &self.phases[(ph.neg as u32 * self.ell + ph.rot) as usize]
    }

    /// Multiplies a coefficient by a phase.
    pub fn apply_phase(&self, c: &CycloScalar, ph: Phase) -> CycloScalar {
        if ph.rot == 0 {
            if ph.neg {
                -c
            } else {
                c.clone()
            }
        } else {
            c * self.phase_scalar(ph)
        }
    }

    /// Product of two B^Gamma basis indices.
    pub(crate) fn bgamma_product(&self, a: u8, b: u8) -> Option<(u8, Phase)> {
        self.prod[a as usize * (4 * self.ell as usize) + b as usize]
    }

    /// Permutes tensor slots (slot j moves to w(j)) with the Koszul sign from inversions of odd entries.
    fn act_tensor(&self, img: &[u8; MAX_RANK], t: &[u8; MAX_RANK], n: usize) -> (bool, [u8; MAX_RANK]) {
        let mut out = [0u8; MAX_RANK];
        let mut neg = false;
        for j in 0..n {
            out[img[j] as usize] = t[j];
        }
        if !self.faults.drop_action_koszul {
            for j in 0..n {
                if !self.odd[t[j] as usize] {
                    continue;
                }
                for k in j + 1..n {
                    if self.odd[t[k] as usize] && img[j] > img[k] {
                        neg = !neg;
                    }
                }
            }
        }
        (neg, out)
    }

    /// The same action computed one simple transposition at a time along a reduced word of w.
    pub fn act_tensor_by_word(&self, word: &[usize], t: &[u8; MAX_RANK]) -> (bool, [u8; MAX_RANK]) {
        let mut cur = *t;
        let mut neg = false;
        for &i in word.iter().rev() {
            if !self.faults.drop_action_koszul && self.odd[cur[i - 1] as usize] && self.odd[cur[i] as usize] {
                neg = !neg;
            }
            cur.swap(i - 1, i);
        }
        (neg, cur)
    }

    /// Product of two basis words of equal rank.
    pub fn mul_words(&self, x: &WreathBasisWord, y: &WreathBasisWord) -> Option<(WreathBasisWord, Phase)> {
        let n = x.n.max(y.n) as usize;
        let mut neg = false;
        let (t_neg, t) = self.act_tensor(&x.perm, &y.tensor, n);
        neg ^= t_neg;
        let (c_neg, cmask) = permute_mask(y.cliff, &x.perm);
        neg ^= c_neg;
        let mut tensor = [0u8; MAX_RANK];
        let mut rot = 0u32;
        let mut odd_prefix = false;
        for j in 0..n {
            let xo = self.odd[x.tensor[j] as usize];
            if xo && odd_prefix && !self.faults.drop_tensor_koszul {
                neg = !neg;
            }
            if self.odd[t[j] as usize] {
                odd_prefix = !odd_prefix;
            }
            let (e, ph) = self.bgamma_product(x.tensor[j], t[j])?;
            tensor[j] = e;
            neg ^= ph.neg;
            rot += ph.rot;
        }
        neg ^= clifford_sign(x.cliff, cmask);
        let mut perm = [0u8; MAX_RANK];
        for (j, p) in perm.iter_mut().enumerate() {
            *p = x.perm[y.perm[j] as usize];
        }
        let word = WreathBasisWord { n: n as u8, tensor, cliff: x.cliff ^ cmask, perm };
        Some((word, Phase { neg, rot: rot % self.ell }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wreath::bgamma::Ext;
    use crate::wreath::perm::Permutation;

    #[test]
    fn transposition_moves_clifford_index() {
        let alg = WreathAlgebra::new(1).unwrap();
        let (w, ph) = alg.mul_words(&WreathBasisWord::simple(2, 1), &WreathBasisWord::clifford(2, 1)).unwrap();
        assert_eq!(ph, Phase::ONE);
        assert_eq!(w.render(1), "c2 s1");
    }

    #[test]
    fn koszul_sign_on_swapping_odd_entries() {
        let alg = WreathAlgebra::new(1).unwrap();
        let v1 = BGammaBasisElem::new(Ext::V1, 0);
        let v2 = BGammaBasisElem::new(Ext::V2, 0);
        let t = WreathBasisWord::new(&[v1, v2], 1, crate::wreath::CliffordMono::one(2), Permutation::identity(2));
        let (w, ph) = alg.mul_words(&WreathBasisWord::simple(2, 1), &t).unwrap();
        assert_eq!(ph, Phase::MINUS_ONE);
        assert_eq!(w.render(1), "[v2,v1] s1");
    }

    #[test]
    fn action_sign_agrees_across_reduced_words() {
        let alg = WreathAlgebra::new(2).unwrap();
        for w in Permutation::all(3) {
            for word in WreathBasisWord::all(3, 2).iter().filter(|x| x.cliff == 0 && x.perm().is_identity()) {
                let fast = alg.act_tensor(w.raw(), &word.tensor, 3);
                assert_eq!(fast, alg.act_tensor_by_word(&w.reduced_word(), &word.tensor));
                assert_eq!(fast, alg.act_tensor_by_word(&w.reduced_word_alt(), &word.tensor));
            }
        }
    }
}
