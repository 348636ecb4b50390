//! The free right B_n-module basis of B_{n+1} and coset decompositions built from it.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::wreath::{BGammaBasisElem, Phase, WreathAlgebra, WreathBasisWord, WreathElem, MAX_RANK};

/// Index (i, eps, b) of the basis element s_i ... s_n c_{n+1}^eps b_{n+1}; b is a dense B^Gamma index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct FreeIndex {
    pub i: u8,
    pub eps: u8,
    pub b: u8,
}

impl FreeIndex {
    /// The index of 1, i.e. (n+1, 0, 1).
    pub fn unit(n: usize) -> Self {
        FreeIndex { i: (n + 1) as u8, eps: 0, b: 0 }
    }

    /// All 2(n+1)4l indices for B_{n+1} over B_n.
    pub fn all(n: usize, ell: u32) -> Vec<Self> {
        let mut out = Vec::with_capacity(2 * (n + 1) * 4 * ell as usize);
        for i in 1..=n + 1 {
            for eps in 0..2 {
                for b in 0..4 * ell {
                    out.push(FreeIndex { i: i as u8, eps, b: b as u8 });
                }
            }
        }
        out
    }

    pub fn elem(&self, ell: u32) -> BGammaBasisElem {
        BGammaBasisElem::from_index(self.b, ell)
    }

    /// (Z-degree, Z2-degree) of the basis element.
    pub fn degree(&self, ell: u32) -> (u32, u8) {
        (self.elem(ell).degree(), self.eps)
    }

    pub fn render(&self, n: usize, ell: u32) -> String {
        let mut parts = Vec::new();
        if self.i as usize <= n {
            let s: Vec<String> = (self.i as usize..=n).map(|k| format!("s{k}")).collect();
            parts.push(s.join(" "));
        }
        if self.eps == 1 {
            parts.push(format!("c{}", n + 1));
        }
        if self.b != 0 {
            parts.push(format!("{}_{}", self.elem(ell), n + 1));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }
}

/// Images of 0-based positions under s_i ... s_n acting on {0..n}.
fn sigma(i0: usize, n: usize, k: usize) -> usize {
    if k == n {
        i0
    } else if k >= i0 && k < n {
        k + 1
    } else {
        k
    }
}

fn sigma_inv(i0: usize, n: usize, v: usize) -> usize {
    if v == i0 {
        n
    } else if v > i0 && v <= n {
        v - 1
    } else {
        v
    }
}

/// The free basis element of B_{n+1} as a phase times a word.
pub fn free_basis_word(alg: &WreathAlgebra, n: usize, fi: FreeIndex) -> (WreathBasisWord, Phase) {
    let ell = alg.ell();
    let mut s = WreathBasisWord::identity(n + 1);
    let i0 = fi.i as usize - 1;
    for k in 0..=n {
        s.perm[k] = sigma(i0, n, k) as u8;
    }
    let mut acc = (s, Phase::ONE);
    if fi.eps == 1 {
        acc = times(alg, acc, &WreathBasisWord::clifford(n + 1, n + 1));
    }
    if fi.b != 0 {
        acc = times(alg, acc, &WreathBasisWord::slot(n + 1, n + 1, fi.elem(ell), ell));
    }
    acc
}

fn times(alg: &WreathAlgebra, (w, ph): (WreathBasisWord, Phase), y: &WreathBasisWord) -> (WreathBasisWord, Phase) {
    let (out, ph2) = alg.mul_words(&w, y).expect("free basis factors multiply to a nonzero word");
    (out, ph.mul(ph2, alg.ell()))
}

/// Splits a word x of B_{n+1} as x = phase * u_fi * y with y a word of B_n.
pub fn decompose_word(alg: &WreathAlgebra, n: usize, x: &WreathBasisWord) -> (FreeIndex, WreathBasisWord, Phase) {
    debug_assert_eq!(x.rank(), n + 1);
    let i0 = x.perm[n] as usize;
    let fi = FreeIndex { i: (i0 + 1) as u8, eps: ((x.cliff >> i0) & 1) as u8, b: x.tensor[i0] };
    let mut y = WreathBasisWord::identity(n);
    for k in 0..n {
        y.tensor[k] = x.tensor[sigma(i0, n, k)];
        y.perm[k] = sigma_inv(i0, n, x.perm[k] as usize) as u8;
    }
    for v in 0..=n {
        if v != i0 && (x.cliff >> v) & 1 == 1 {
            y.cliff |= 1 << sigma_inv(i0, n, v);
        }
    }
    let (u, ph_u) = free_basis_word(alg, n, fi);
    let (back, ph_uy) = alg.mul_words(&u, &y.embed(n + 1)).expect("coset product is nonzero");
    assert_eq!(back, *x, "free basis decomposition must reproduce the word");
    (fi, y, ph_u.mul(ph_uy, alg.ell()).inverse(alg.ell()))
}

/// Coordinates of x in B_{n+1} over the free right B_n-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeBasisCoords {
    n: usize,
    ell: u32,
    coords: BTreeMap<FreeIndex, WreathElem>,
}

impl FreeBasisCoords {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> impl Iterator<Item = (&FreeIndex, &WreathElem)> {
        self.coords.iter()
    }

    pub fn get(&self, fi: &FreeIndex) -> Option<&WreathElem> {
        self.coords.get(fi)
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Total number of (index, word) coordinates.
    pub fn coordinate_count(&self) -> usize {
        self.coords.values().map(|e| e.len()).sum()
    }

    /// Sum of u_fi * coefficient in the given algebra.
    pub fn recombine_in(&self, alg: &WreathAlgebra) -> WreathElem {
        let mut out = WreathElem::zero(self.ell, self.n + 1);
        for (fi, y) in &self.coords {
            let (u, ph) = free_basis_word(alg, self.n, *fi);
            for (w, c) in y.terms() {
                if let Some((prod, ph2)) = alg.mul_words(&u, &w.embed(self.n + 1)) {
                    out.add_term(prod, &alg.apply_phase(c, ph.mul(ph2, self.ell)));
                }
            }
        }
        out
    }

    pub fn recombine(&self) -> WreathElem {
        self.recombine_in(&WreathAlgebra::standard(self.ell))
    }
}

impl fmt::Display for FreeBasisCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.coords.iter().map(|(fi, y)| format!("({}) * ({})", fi.render(self.n, self.ell), y)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Decomposes x in B_{n+1} over the free right B_n-basis in the given algebra.
pub fn decompose_right_in(x: &WreathElem, alg: &WreathAlgebra) -> Result<FreeBasisCoords> {
    if x.rank() == 0 || x.rank() > MAX_RANK {
        return Err(Error::OutOfRange(format!("decomposition needs rank in 1..={MAX_RANK}, got {}", x.rank())));
    }
    let x = x.relevel(alg.ell())?;
    let n = x.rank() - 1;
    let mut coords: BTreeMap<FreeIndex, WreathElem> = BTreeMap::new();
    for (w, c) in x.terms() {
        let (fi, y, ph) = decompose_word(alg, n, w);
        coords.entry(fi).or_insert_with(|| WreathElem::zero(alg.ell(), n)).add_term(y, &alg.apply_phase(c, ph));
    }
    coords.retain(|_, y| !y.is_zero());
    Ok(FreeBasisCoords { n, ell: alg.ell(), coords })
}

/// Decomposes x in B_{n+1} over the free right B_n-basis.
pub fn decompose_right(x: &WreathElem) -> Result<FreeBasisCoords> {
    decompose_right_in(x, &WreathAlgebra::standard(x.ell()))
}

/// A product of free indices u^(R-1)_{p0} u^(R-2)_{p1} ... spanning B_R over B_{R-len}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Coset {
    len: u8,
    parts: [FreeIndex; MAX_GAP],
}

/// Largest rank gap a coset may span.
pub const MAX_GAP: usize = 3;

impl Coset {
    pub fn new(parts: &[FreeIndex]) -> Self {
        assert!(parts.len() <= MAX_GAP, "coset gap exceeds {MAX_GAP}");
        let mut c = Coset { len: parts.len() as u8, parts: [FreeIndex::default(); MAX_GAP] };
        c.parts[..parts.len()].copy_from_slice(parts);
        c
    }

    pub fn parts(&self) -> &[FreeIndex] {
        &self.parts[..self.len as usize]
    }

    pub fn degree(&self, ell: u32) -> (u32, u8) {
        self.parts().iter().fold((0, 0), |(z, p), fi| {
            let (a, b) = fi.degree(ell);
            (z + a, (p + b) % 2)
        })
    }

    /// Every coset of B_rank over B_sub.
    pub fn all(rank: usize, sub: usize, ell: u32) -> Vec<Self> {
        let mut out = vec![Vec::new()];
        for level in (sub..rank).rev() {
            let idx = FreeIndex::all(level, ell);
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<FreeIndex>| {
                    idx.iter().map(move |fi| {
                        let mut p = prefix.clone();
                        p.push(*fi);
                        p
                    })
                })
                .collect();
        }
        out.iter().map(|p| Coset::new(p)).collect()
    }

    /// The representative as a phase times a word of B_rank.
    pub fn word(&self, alg: &WreathAlgebra, rank: usize) -> (WreathBasisWord, Phase) {
        let mut acc = (WreathBasisWord::identity(rank), Phase::ONE);
        for (k, fi) in self.parts().iter().enumerate() {
            let (u, ph) = free_basis_word(alg, rank - 1 - k, *fi);
            let (w, ph2) = times(alg, acc, &u.embed(rank));
            acc = (w, ph2.mul(ph, alg.ell()));
        }
        acc
    }

    pub fn render(&self, rank: usize, ell: u32) -> String {
        let parts: Vec<String> = self.parts().iter().enumerate().map(|(k, fi)| fi.render(rank - 1 - k, ell)).collect();
        parts.join(" . ")
    }
}

/// Splits a word of B_rank as phase * coset rep * y with y a word of B_sub.
pub fn coset_decompose(alg: &WreathAlgebra, sub: usize, x: &WreathBasisWord) -> (Coset, WreathBasisWord, Phase) {
    let mut parts = [FreeIndex::default(); MAX_GAP];
    let mut y = *x;
    let mut ph = Phase::ONE;
    let gap = x.rank() - sub;
    for (k, part) in parts.iter_mut().enumerate().take(gap) {
        let (fi, rest, p) = decompose_word(alg, x.rank() - 1 - k, &y);
        *part = fi;
        y = rest;
        ph = ph.mul(p, alg.ell());
    }
    (Coset::new(&parts[..gap]), y, ph)
}
