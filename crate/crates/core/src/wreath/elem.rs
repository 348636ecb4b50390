//! Sparse linear combinations of basis words.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::algebra::WreathAlgebra;
use super::bgamma::{basis_trace, BGammaBasisElem};
use super::word::WreathBasisWord;
use crate::error::{Error, Result};
use crate::scalars::{coeff_prefix, CycloScalar};

/// An element of B_n^Gamma with no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathElem {
    ell: u32,
    n: usize,
    terms: BTreeMap<WreathBasisWord, CycloScalar>,
}

impl WreathElem {
    pub fn zero(ell: u32, n: usize) -> Self {
        WreathElem { ell, n, terms: BTreeMap::new() }
    }

    pub fn one(ell: u32, n: usize) -> Self {
        Self::from_word(ell, WreathBasisWord::identity(n))
    }

    pub fn scalar(ell: u32, n: usize, c: CycloScalar) -> Self {
        Self::from_term(ell, WreathBasisWord::identity(n), c)
    }

    pub fn from_word(ell: u32, w: WreathBasisWord) -> Self {
        Self::from_term(ell, w, CycloScalar::one(ell))
    }

    pub fn from_term(ell: u32, w: WreathBasisWord, c: CycloScalar) -> Self {
        let mut e = Self::zero(ell, w.rank());
        e.add_term(w, &c);
        e
    }

    /// s_i in B_n.
    pub fn s(ell: u32, n: usize, i: usize) -> Self {
        Self::from_word(ell, WreathBasisWord::simple(n, i))
    }

    /// c_i in B_n.
    pub fn c(ell: u32, n: usize, i: usize) -> Self {
        Self::from_word(ell, WreathBasisWord::clifford(n, i))
    }

    /// b in slot j of B_n.
    pub fn slot(ell: u32, n: usize, j: usize, b: BGammaBasisElem) -> Self {
        Self::from_word(ell, WreathBasisWord::slot(n, j, b, ell))
    }

    /// A B^Gamma element (given by coordinates) placed in slot j of B_n.
    pub fn slot_combination(ell: u32, n: usize, j: usize, coords: &[(BGammaBasisElem, CycloScalar)]) -> Self {
        let mut e = Self::zero(ell, n);
        for (b, c) in coords {
            e.add_term(WreathBasisWord::slot(n, j, *b, ell), c);
        }
        e
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WreathBasisWord, &CycloScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &WreathBasisWord) -> Option<&CycloScalar> {
        self.terms.get(w)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: WreathBasisWord, c: &CycloScalar) {
        if c.is_zero() {
            return;
        }
        let w = if w.rank() < self.n { w.embed(self.n) } else { w };
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        let mut out = Self::zero(self.ell, self.n);
        for (w, v) in &self.terms {
            out.add_term(*w, &(v * c));
        }
        out
    }

    /// The same element in B_m for m at least the rank.
    pub fn embed(&self, m: usize) -> Self {
        WreathElem { ell: self.ell, n: m, terms: self.terms.iter().map(|(w, c)| (w.embed(m), c.clone())).collect() }
    }

    /// Re-expresses the element over a different group order; only group-free tensor entries transfer.
    pub fn relevel(&self, ell: u32) -> Result<Self> {
        if ell == self.ell {
            return Ok(self.clone());
        }
        let mut out = Self::zero(ell, self.n);
        for (w, c) in &self.terms {
            let mut nw = *w;
            for j in 1..=self.n {
                let b = w.tensor_entry(j, self.ell);
                if b.g != 0 {
                    return Err(Error::WrongCarrier(format!("{} involves the group", w.render(self.ell))));
                }
                nw.tensor[j - 1] = b.index(ell);
            }
            out.add_term(nw, c);
        }
        Ok(out)
    }

    /// Bidegree (Z, Z2) when homogeneous; zero has no degree.
    pub fn bidegree(&self) -> Option<(u32, u8)> {
        let mut it = self.terms.keys().map(|w| (w.z_degree(self.ell), w.parity()));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Product in the given algebra (which may carry sign faults).
    pub fn mul_in(&self, other: &Self, alg: &WreathAlgebra) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch { left: self.n, right: other.n });
        }
        let (lhs, rhs) = (self.relevel(alg.ell())?, other.relevel(alg.ell())?);
        let mut out = Self::zero(alg.ell(), self.n);
        for (x, a) in &lhs.terms {
            for (y, b) in &rhs.terms {
                if let Some((w, ph)) = alg.mul_words(x, y) {
                    out.add_term(w, &alg.apply_phase(&(a * b), ph));
                }
            }
        }
        Ok(out)
    }

    /// Renders with the element grammar, e.g. `1/2 + 1/2 s1`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let (neg, body) = coeff_prefix(c);
            let word = w.render(self.ell);
            let term = match (body.is_empty(), word == "1") {
                (true, _) => word,
                (false, true) => body,
                (false, false) => format!("{body} {word}"),
            };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&term);
        }
        out
    }
}

/// Product of two elements of equal rank.
pub fn mult(x: &WreathElem, y: &WreathElem) -> Result<WreathElem> {
    x.mul_in(y, &WreathAlgebra::standard(x.ell.max(y.ell)))
}

/// Trace of a pure B^Gamma element.
pub fn trace(x: &WreathElem) -> Result<CycloScalar> {
    if x.n != 1 {
        return Err(Error::WrongCarrier(format!("trace needs rank 1, got {}", x.n)));
    }
    let mut acc = CycloScalar::zero(x.ell);
    for (w, c) in &x.terms {
        if w.cliff != 0 || !w.perm().is_identity() {
            return Err(Error::WrongCarrier(format!("{} is not in B^Gamma", w.render(x.ell))));
        }
        if basis_trace(w.tensor_entry(1, x.ell)) {
            acc += c;
        }
    }
    Ok(acc)
}

impl fmt::Display for WreathElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl<'a> Add<&'a WreathElem> for &'a WreathElem {
    type Output = WreathElem;
    fn add(self, rhs: &WreathElem) -> WreathElem {
        assert_eq!(self.n, rhs.n, "rank mismatch in addition");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, c);
        }
        out
    }
}

impl<'a> Sub<&'a WreathElem> for &'a WreathElem {
    type Output = WreathElem;
    fn sub(self, rhs: &WreathElem) -> WreathElem {
        self + &(-rhs)
    }
}

impl Neg for &WreathElem {
    type Output = WreathElem;
    fn neg(self) -> WreathElem {
        WreathElem { ell: self.ell, n: self.n, terms: self.terms.iter().map(|(w, c)| (*w, -c)).collect() }
    }
}

impl<'a> Mul<&'a WreathElem> for &'a WreathElem {
    type Output = WreathElem;
    /// Panics on rank mismatch; use [`mult`] for a checked product.
    fn mul(self, rhs: &WreathElem) -> WreathElem {
        mult(self, rhs).expect("rank mismatch in product")
    }
}
