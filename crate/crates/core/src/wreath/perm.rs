//! Permutations in one-line notation and their reduced words.

use std::fmt;

use crate::error::{Error, Result};

/// Largest rank any word may have.
pub const MAX_RANK: usize = 8;

/// A permutation of {1..n}, stored 0-based in one-line notation and padded with fixed points.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    n: u8,
    img: [u8; MAX_RANK],
}

const IDENTITY_IMG: [u8; MAX_RANK] = [0, 1, 2, 3, 4, 5, 6, 7];

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_RANK, "rank {n} exceeds {MAX_RANK}");
        Permutation { n: n as u8, img: IDENTITY_IMG }
    }

    /// Builds a permutation from 1-based images w(1), ..., w(n).
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_RANK {
            return Err(Error::OutOfRange(format!("rank {n} exceeds {MAX_RANK}")));
        }
        let mut seen = [false; MAX_RANK];
        let mut img = IDENTITY_IMG;
        for (j, &v) in images.iter().enumerate() {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::OutOfRange(format!("not a permutation: {images:?}")));
            }
            seen[v - 1] = true;
            img[j] = (v - 1) as u8;
        }
        Ok(Permutation { n: n as u8, img })
    }

    /// The simple transposition s_i swapping i and i+1.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} not in S_{n}");
        let mut p = Self::identity(n);
        p.img.swap(i - 1, i);
        p
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    /// Same permutation viewed in a larger symmetric group.
    pub fn embed(&self, n: usize) -> Self {
        assert!(n >= self.rank() && n <= MAX_RANK);
        Permutation { n: n as u8, img: self.img }
    }

    /// w(j) for 1-based j.
    pub fn apply(&self, j: usize) -> usize {
        self.img[j - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        (1..=self.rank()).map(|j| self.apply(j)).collect()
    }

    pub(crate) fn raw(&self) -> &[u8; MAX_RANK] {
        &self.img
    }

    pub(crate) fn from_raw(n: usize, img: [u8; MAX_RANK]) -> Self {
        Permutation { n: n as u8, img }
    }

    /// (self o other)(j) = self(other(j)).
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.n.max(other.n);
        let mut img = IDENTITY_IMG;
        for (j, slot) in img.iter_mut().enumerate() {
            *slot = self.img[other.img[j] as usize];
        }
        Permutation { n, img }
    }

    pub fn inverse(&self) -> Self {
        let mut img = IDENTITY_IMG;
        for j in 0..MAX_RANK {
            img[self.img[j] as usize] = j as u8;
        }
        Permutation { n: self.n, img }
    }

    pub fn is_identity(&self) -> bool {
        self.img == IDENTITY_IMG
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.rank();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.img[a] > self.img[b] {
                    count += 1;
                }
            }
        }
        count
    }

    fn reduced_word_by(&self, pick_last: bool) -> Vec<usize> {
        let mut w = *self;
        let mut rev = Vec::with_capacity(self.length());
        loop {
            let n = w.rank();
            let mut descents = (1..n).filter(|&i| w.img[i - 1] > w.img[i]);
            let next = if pick_last { descents.next_back() } else { descents.next() };
            match next {
                Some(i) => {
                    w.img.swap(i - 1, i);
                    rev.push(i);
                }
                None => break,
            }
        }
        rev.reverse();
        rev
    }

    /// A reduced word i_1..i_k with w = s_{i_1} ... s_{i_k}, peeling the leftmost right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        self.reduced_word_by(false)
    }

    /// A second reduced word, peeling the rightmost right descent.
    pub fn reduced_word_alt(&self) -> Vec<usize> {
        self.reduced_word_by(true)
    }

    /// All elements of S_n in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self::from_images(&cur).expect("valid"));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Reduced word such as `s1 s2`, or `1` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rw = self.reduced_word();
        if rw.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = rw.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_word(n: usize, word: &[usize]) -> Permutation {
        word.iter().fold(Permutation::identity(n), |acc, &i| acc.compose(&Permutation::simple(n, i)))
    }

    #[test]
    fn reduced_words_rebuild_the_permutation() {
        for n in 0..=5 {
            for w in Permutation::all(n) {
                for rw in [w.reduced_word(), w.reduced_word_alt()] {
                    assert_eq!(rw.len(), w.length());
                    assert_eq!(from_word(n, &rw), w);
                }
            }
        }
    }

    #[test]
    fn symmetric_group_sizes() {
        assert_eq!(Permutation::all(0).len(), 1);
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(6).len(), 720);
    }

    #[test]
    fn simple_transpositions_square_to_one() {
        for i in 1..5 {
            let s = Permutation::simple(5, i);
            assert!(s.compose(&s).is_identity());
        }
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = Permutation::from_images(&[2, 3, 1]).unwrap();
        let b = Permutation::from_images(&[1, 3, 2]).unwrap();
        let ab = a.compose(&b);
        for j in 1..=3 {
            assert_eq!(ab.apply(j), a.apply(b.apply(j)));
        }
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
    }
}
