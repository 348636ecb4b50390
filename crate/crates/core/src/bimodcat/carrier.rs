//! Bimodules attached to composites of P(n) and Q(n), realized over free-basis coordinates.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;
use std::sync::Arc;

use super::free::{coset_decompose, Coset};
use crate::error::{Error, Result};
use crate::scalars::{CycloScalar, GradedDim};
use crate::wreath::{dimension, Phase, WreathAlgebra, WreathBasisWord, WreathElem};

/// Bigrading (Z-shift, Z2-shift).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct BiDegree {
    pub z: i32,
    pub parity: u8,
}

impl BiDegree {
    pub const ZERO: BiDegree = BiDegree { z: 0, parity: 0 };

    pub fn new(z: i32, parity: u8) -> Self {
        BiDegree { z, parity: parity % 2 }
    }

    /// Sign exponent of moving something of this degree past something of degree `other`.
    pub fn koszul(&self, other: BiDegree) -> bool {
        (self.z.rem_euclid(2) as u8 * other.z.rem_euclid(2) as u8 + self.parity * other.parity) % 2 == 1
    }
}

impl Add for BiDegree {
    type Output = BiDegree;
    fn add(self, rhs: BiDegree) -> BiDegree {
        BiDegree::new(self.z + rhs.z, self.parity + rhs.parity)
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.z, self.parity)
    }
}

/// Degree of a basis word.
pub(crate) fn word_degree(w: &WreathBasisWord, ell: u32) -> BiDegree {
    BiDegree::new(w.z_degree(ell) as i32, w.parity())
}

/// One factor of a composite: induction P(n): C_n -> C_{n+1}, restriction Q(n): C_{n+1} -> C_n, or the identity of C_n.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Functor {
    P(usize),
    Q(usize),
    Id(usize),
}

impl Functor {
    pub fn target(&self) -> usize {
        match *self {
            Functor::P(n) => n + 1,
            Functor::Q(n) | Functor::Id(n) => n,
        }
    }

    pub fn source(&self) -> usize {
        match *self {
            Functor::P(n) | Functor::Id(n) => n,
            Functor::Q(n) => n + 1,
        }
    }

    /// Rank of the algebra realizing the factor.
    pub fn block(&self) -> usize {
        match *self {
            Functor::P(n) | Functor::Q(n) => n + 1,
            Functor::Id(n) => n,
        }
    }
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Functor::P(n) => write!(f, "P({n})"),
            Functor::Q(n) => write!(f, "Q({n})"),
            Functor::Id(n) => write!(f, "Id({n})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Junction {
    /// The accumulated left part lies in the junction subalgebra and is pushed into the next factor.
    AbsorbRight,
    /// The next factor lies in the junction subalgebra and is multiplied onto the accumulated part.
    AbsorbLeft,
    /// A genuine tensor product over B_sub.
    Boundary { sub: usize },
}

#[derive(Clone, Debug)]
struct Segment {
    rank: usize,
    holder: usize,
    sub: Option<usize>,
}

/// How the factors of a composite collapse into algebras separated by tensor products over subalgebras.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    factors: Vec<Functor>,
    junctions: Vec<Junction>,
    segments: Vec<Segment>,
}

/// Most tensor products over subalgebras a carrier may contain.
pub const MAX_JUNCTIONS: usize = 2;

impl Layout {
    pub(crate) fn new(factors: &[Functor]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::WrongCarrier("empty composite".into()));
        }
        for pair in factors.windows(2) {
            if pair[0].source() != pair[1].target() {
                return Err(Error::RankMismatch { left: pair[0].source(), right: pair[1].target() });
            }
        }
        let mut junctions = Vec::new();
        let mut segments = Vec::new();
        let mut rank = factors[0].block();
        let mut holder = 0;
        for i in 0..factors.len() - 1 {
            let j = factors[i].source();
            let next = factors[i + 1].block();
            if rank == j {
                junctions.push(Junction::AbsorbRight);
                rank = next;
                holder = i + 1;
            } else if next == j {
                junctions.push(Junction::AbsorbLeft);
            } else {
                junctions.push(Junction::Boundary { sub: j });
                segments.push(Segment { rank, holder, sub: Some(j) });
                rank = next;
                holder = i + 1;
            }
        }
        segments.push(Segment { rank, holder, sub: None });
        if segments.len() > MAX_JUNCTIONS + 1 {
            return Err(Error::WrongCarrier(format!("more than {MAX_JUNCTIONS} tensor products over subalgebras")));
        }
        Ok(Layout { factors: factors.to_vec(), junctions, segments })
    }

    pub(crate) fn factors(&self) -> &[Functor] {
        &self.factors
    }
}

/// Basis element of a carrier: a coset representative for each tensor product, then a word of the last algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Key {
    cosets: [Coset; MAX_JUNCTIONS],
    word: WreathBasisWord,
}

impl Key {
    pub fn word(&self) -> &WreathBasisWord {
        &self.word
    }

    /// Key of a single-algebra carrier.
    pub fn plain(word: WreathBasisWord) -> Self {
        Key { cosets: [Coset::default(); MAX_JUNCTIONS], word }
    }

    pub fn coset(&self, k: usize) -> &Coset {
        &self.cosets[k]
    }
}

/// Finite linear combination of carrier keys.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CarrierVec {
    terms: BTreeMap<Key, CycloScalar>,
}

impl CarrierVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, k: Key, c: &CycloScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &CarrierVec, c: &CycloScalar) {
        for (k, v) in &other.terms {
            self.add_term(*k, &(v * c));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &CycloScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &Key) -> Option<&CycloScalar> {
        self.terms.get(k)
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
}

/// Description of a carrier as algebras and tensor products over subalgebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Carrier {
    Algebra(usize),
    TensorOverSub { left: Box<Carrier>, sub: usize, right: Box<Carrier> },
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::Algebra(k) => write!(f, "B{k}"),
            Carrier::TensorOverSub { left, sub, right } => write!(f, "{left} (x)_B{sub} {right}"),
        }
    }
}

/// A composite of P's and Q's (or an identity) together with its bimodule and group order.
#[derive(Clone, Debug)]
pub struct BimoduleHandle {
    word: Arc<[Functor]>,
    ell: u32,
    layout: Arc<Layout>,
}

impl PartialEq for BimoduleHandle {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word && self.ell == other.ell
    }
}

impl Eq for BimoduleHandle {}

impl BimoduleHandle {
    /// Builds the composite F_1 ... F_k (F_k applied first); identities are dropped unless alone.
    pub fn new(word: &[Functor], ell: u32) -> Result<Self> {
        let mut w: Vec<Functor> = word.iter().copied().filter(|f| !matches!(f, Functor::Id(_))).collect();
        if w.is_empty() {
            let first = word.first().ok_or_else(|| Error::WrongCarrier("empty composite".into()))?;
            w.push(Functor::Id(first.target()));
        }
        Layout::new(word)?;
        let layout = Arc::new(Layout::new(&w)?);
        Ok(BimoduleHandle { word: w.into(), ell, layout })
    }

    pub fn p(n: usize, ell: u32) -> Self {
        Self::new(&[Functor::P(n)], ell).expect("single factor")
    }

    pub fn q(n: usize, ell: u32) -> Self {
        Self::new(&[Functor::Q(n)], ell).expect("single factor")
    }

    pub fn id(n: usize, ell: u32) -> Self {
        Self::new(&[Functor::Id(n)], ell).expect("single factor")
    }

    pub fn word(&self) -> &[Functor] {
        &self.word
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub(crate) fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn is_identity(&self) -> bool {
        matches!(self.word[0], Functor::Id(_))
    }

    /// Rank of the category the composite starts from.
    pub fn source_rank(&self) -> usize {
        self.word[self.word.len() - 1].source()
    }

    /// Rank of the category the composite lands in.
    pub fn target_rank(&self) -> usize {
        self.word[0].target()
    }

    /// Largest algebra rank among the factors.
    pub fn max_rank(&self) -> usize {
        self.layout.segments.iter().map(|s| s.rank).max().unwrap_or(0)
    }

    /// The grading shift: one unit per induction factor.
    pub fn shift(&self) -> BiDegree {
        BiDegree::new(self.word.iter().filter(|f| matches!(f, Functor::P(_))).count() as i32, 0)
    }

    pub fn carrier(&self) -> Carrier {
        let segs = &self.layout.segments;
        let mut c = Carrier::Algebra(segs[segs.len() - 1].rank);
        for s in segs[..segs.len() - 1].iter().rev() {
            c = Carrier::TensorOverSub {
                left: Box::new(Carrier::Algebra(s.rank)),
                sub: s.sub.expect("inner segment has a junction"),
                right: Box::new(c),
            };
        }
        c
    }

    pub fn dim(&self) -> u64 {
        let mut d = 1u64;
        for s in &self.layout.segments {
            match s.sub {
                Some(sub) => d *= dimension(s.rank, self.ell) / dimension(sub, self.ell),
                None => d *= dimension(s.rank, self.ell),
            }
        }
        d
    }

    /// Concatenation self * other (other applied first).
    pub fn then(&self, other: &BimoduleHandle) -> Result<Self> {
        let w: Vec<Functor> = self.word.iter().chain(other.word.iter()).copied().collect();
        Self::new(&w, self.ell)
    }

    /// All keys, cosets in lexicographic order followed by words of the last algebra.
    pub fn basis(&self) -> Vec<Key> {
        let segs = &self.layout.segments;
        let mut prefixes: Vec<[Coset; MAX_JUNCTIONS]> = vec![[Coset::default(); MAX_JUNCTIONS]];
        for (k, s) in segs[..segs.len() - 1].iter().enumerate() {
            let cosets = Coset::all(s.rank, s.sub.expect("junction"), self.ell);
            prefixes = prefixes
                .into_iter()
                .flat_map(|p| {
                    cosets.iter().map(move |c| {
                        let mut q = p;
                        q[k] = *c;
                        q
                    })
                })
                .collect();
        }
        let words = WreathBasisWord::all(segs[segs.len() - 1].rank, self.ell);
        let mut out = Vec::with_capacity(prefixes.len() * words.len());
        for p in &prefixes {
            for w in &words {
                out.push(Key { cosets: *p, word: *w });
            }
        }
        out
    }

    pub fn key_degree(&self, k: &Key) -> BiDegree {
        let mut d = word_degree(&k.word, self.ell);
        for c in &k.cosets[..self.layout.segments.len() - 1] {
            let (z, p) = c.degree(self.ell);
            d = d + BiDegree::new(z as i32, p);
        }
        d
    }

    /// Graded dimension of the carrier, read off the key degrees.
    pub fn graded_dimension(&self) -> GradedDim {
        let mut g = GradedDim::zero();
        let one = num_bigint::BigInt::from(1);
        for k in self.basis() {
            let d = self.key_degree(&k);
            g.add_term(d.z as i64, d.parity, &one);
        }
        g
    }

    pub fn render_key(&self, k: &Key) -> String {
        let segs = &self.layout.segments;
        let mut parts = Vec::new();
        for (i, s) in segs[..segs.len() - 1].iter().enumerate() {
            parts.push(format!("[{}]", k.cosets[i].render(s.rank, self.ell)));
        }
        parts.push(k.word.render(self.ell));
        parts.join(" (x) ")
    }

    pub fn render_vec(&self, v: &CarrierVec) -> String {
        if v.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = v.terms().map(|(k, c)| format!("({c}) {}", self.render_key(k))).collect();
        parts.join(" + ")
    }
}

impl fmt::Display for BimoduleHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.word.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", names.join(""))
    }
}

/// Product of elements of possibly different ranks, in the larger rank.
pub(crate) fn mul(alg: &WreathAlgebra, x: &WreathElem, y: &WreathElem) -> WreathElem {
    let n = x.rank().max(y.rank());
    if is_unit(y) {
        return if x.rank() == n { x.clone() } else { x.embed(n) };
    }
    if is_unit(x) {
        return if y.rank() == n { y.clone() } else { y.embed(n) };
    }
    let mut out = WreathElem::zero(alg.ell(), n);
    for (a, c) in x.terms() {
        let a = a.embed(n);
        for (b, d) in y.terms() {
            if let Some((w, ph)) = alg.mul_words(&a, &b.embed(n)) {
                out.add_term(w, &alg.apply_phase(&(c * d), ph));
            }
        }
    }
    out
}

fn is_unit(x: &WreathElem) -> bool {
    x.len() == 1 && x.terms().all(|(w, c)| w.is_identity() && c.is_one())
}

/// A basis word with a root-of-unity coefficient.
pub(crate) type Mono = (WreathBasisWord, Phase);

/// Product of two monomials in the larger of their ranks; `None` when it vanishes.
pub(crate) fn mono_mul(alg: &WreathAlgebra, x: &Mono, y: &Mono) -> Option<Mono> {
    let n = x.0.rank().max(y.0.rank());
    let ph = x.1.mul(y.1, alg.ell());
    if y.0.is_identity() {
        return Some((x.0.embed(n), ph));
    }
    if x.0.is_identity() {
        return Some((y.0.embed(n), ph));
    }
    let (w, p) = alg.mul_words(&x.0.embed(n), &y.0.embed(n))?;
    Some((w, ph.mul(p, alg.ell())))
}

impl Layout {
    /// Adds coeff times the canonical form of the pure tensor `factors` (one element per factor) to `out`.
    pub(crate) fn canonicalize(
        &self,
        alg: &WreathAlgebra,
        factors: &[WreathElem],
        coeff: &CycloScalar,
        out: &mut CarrierVec,
    ) {
        debug_assert_eq!(factors.len(), self.factors.len());
        let mut monos = Vec::with_capacity(factors.len());
        self.expand(alg, factors, &mut monos, coeff.clone(), out);
    }

    fn expand(
        &self,
        alg: &WreathAlgebra,
        factors: &[WreathElem],
        monos: &mut Vec<Mono>,
        coeff: CycloScalar,
        out: &mut CarrierVec,
    ) {
        let i = monos.len();
        if i == factors.len() {
            self.canonicalize_monos(alg, monos, &coeff, out);
            return;
        }
        for (w, c) in factors[i].terms() {
            monos.push((*w, Phase::ONE));
            let c = if c.is_one() { coeff.clone() } else { &coeff * c };
            self.expand(alg, factors, monos, c, out);
            monos.pop();
        }
    }

    /// As `canonicalize`, for a tensor of monomials.
    pub(crate) fn canonicalize_monos(
        &self,
        alg: &WreathAlgebra,
        factors: &[Mono],
        coeff: &CycloScalar,
        out: &mut CarrierVec,
    ) {
        debug_assert_eq!(factors.len(), self.factors.len());
        let mut cosets = [Coset::default(); MAX_JUNCTIONS];
        let mut acc = factors[0];
        let mut seg = 0;
        for (i, next) in factors.iter().enumerate().skip(1) {
            if let Junction::Boundary { sub } = self.junctions[i - 1] {
                let (coset, y, ph) = coset_decompose(alg, sub, &acc.0);
                cosets[seg] = coset;
                seg += 1;
                acc = (y, acc.1.mul(ph, alg.ell()));
            }
            match mono_mul(alg, &acc, next) {
                Some(m) => acc = m,
                None => return,
            }
        }
        out.add_term(Key { cosets, word: acc.0 }, &alg.apply_phase(coeff, acc.1));
    }

    /// A pure tensor representing a key: each segment's element sits at its holder factor, ones elsewhere.
    pub(crate) fn split_monos(&self, alg: &WreathAlgebra, k: &Key) -> Vec<Mono> {
        let mut factors: Vec<Mono> =
            self.factors.iter().map(|f| (WreathBasisWord::identity(f.block()), Phase::ONE)).collect();
        let last = self.segments.len() - 1;
        for (s, seg) in self.segments.iter().enumerate() {
            let m = if s == last { (k.word, Phase::ONE) } else { k.cosets[s].word(alg, seg.rank) };
            debug_assert_eq!(m.0.rank(), self.factors[seg.holder].block());
            factors[seg.holder] = m;
        }
        factors
    }

    /// `split_monos` as algebra elements.
    pub(crate) fn split(&self, alg: &WreathAlgebra, k: &Key) -> Vec<WreathElem> {
        let ell = alg.ell();
        self.split_monos(alg, k).into_iter().map(|(w, ph)| WreathElem::from_term(ell, w, ph.scalar(ell))).collect()
    }
}
