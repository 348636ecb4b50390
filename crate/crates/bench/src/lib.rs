//! Deterministic inputs shared by the benchmarks.

use heiscat::heisenberg::HeisenGen;
use heiscat::wreath::{BGammaBasisElem, CliffordMono, Permutation};
use heiscat::{CycloScalar, WreathBasisWord, WreathElem};

/// A dense element of the cyclotomic field of the given level.
pub fn dense_scalar(level: u32, seed: i64) -> CycloScalar {
    let mut acc = CycloScalar::zero(level);
    for k in 0..level as i64 {
        let c = CycloScalar::from_frac(seed * (k + 1) - 3, k + 2, level);
        acc += &(&c * &CycloScalar::zeta_pow(level, k));
    }
    acc
}

/// A basis word with every tensor slot, Clifford generator and permutation nontrivial.
pub fn busy_word(n: usize, ell: u32, shift: u8) -> WreathBasisWord {
    let tensor: Vec<BGammaBasisElem> =
        (0..n).map(|j| BGammaBasisElem::from_index((j as u8 * 3 + shift) % (4 * ell as u8), ell)).collect();
    let odd: Vec<usize> = (1..=n).filter(|i| (i + shift as usize).is_multiple_of(2)).collect();
    let cliff = CliffordMono::from_indices(n, &odd).expect("indices in range");
    let perms = Permutation::all(n);
    let perm = perms[(shift as usize * 7) % perms.len()];
    WreathBasisWord::new(&tensor, ell, cliff, perm)
}

/// Sum of `terms` busy words.
pub fn busy_element(n: usize, ell: u32, terms: u8) -> WreathElem {
    (0..terms).fold(WreathElem::zero(ell, n), |acc, s| &acc + &WreathElem::from_word(ell, busy_word(n, ell, s)))
}

/// An anti-normal-ordered word: every q to the left of every p.
pub fn reversed_word(len: usize, level: u32) -> Vec<HeisenGen> {
    let half = len / 2;
    let node = |k: usize| 1 + k % 2;
    (0..half)
        .map(|k| HeisenGen::q(node(k), level))
        .chain((0..len - half).map(|k| HeisenGen::p(node(k), level)))
        .collect()
}
