//! The quantized twisted Heisenberg algebra as a normal-ordering rewriting system.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::report::{Record, Report};
use crate::scalars::{coeff_prefix, eval_minus_one, fmt_q_power, quantum_integer, CycloScalar, LaurentPoly};
use crate::wreath::CartanData;

/// Creation (p) or annihilation (q) generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum GenKind {
    P,
    Q,
}

/// p_i^(m) or q_i^(m); level 0 is the unit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HeisenGen {
    pub kind: GenKind,
    pub node: usize,
    pub level: u32,
}

impl HeisenGen {
    pub fn p(node: usize, level: u32) -> Self {
        HeisenGen { kind: GenKind::P, node, level }
    }

    pub fn q(node: usize, level: u32) -> Self {
        HeisenGen { kind: GenKind::Q, node, level }
    }
}

impl fmt::Display for HeisenGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            GenKind::P => "p",
            GenKind::Q => "q",
        };
        write!(f, "{k}[{},{}]", self.node, self.level)
    }
}

/// A p-block followed by a q-block, each sorted by (node, level).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct NormalMonomial {
    p: Vec<(usize, u32)>,
    q: Vec<(usize, u32)>,
}

impl NormalMonomial {
    pub fn unit() -> Self {
        NormalMonomial::default()
    }

    /// Sorts a word that contains no q before a p.
    fn from_ordered(word: &[HeisenGen]) -> Self {
        let mut p: Vec<(usize, u32)> =
            word.iter().filter(|g| g.kind == GenKind::P).map(|g| (g.node, g.level)).collect();
        let mut q: Vec<(usize, u32)> =
            word.iter().filter(|g| g.kind == GenKind::Q).map(|g| (g.node, g.level)).collect();
        p.sort_unstable();
        q.sort_unstable();
        NormalMonomial { p, q }
    }

    pub fn p_part(&self) -> &[(usize, u32)] {
        &self.p
    }

    pub fn q_part(&self) -> &[(usize, u32)] {
        &self.q
    }

    pub fn total_level(&self) -> u32 {
        self.p.iter().chain(&self.q).map(|(_, l)| l).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.p.is_empty() && self.q.is_empty()
    }

    /// The monomial as a generator word.
    pub fn word(&self) -> Vec<HeisenGen> {
        self.p.iter().map(|&(i, m)| HeisenGen::p(i, m)).chain(self.q.iter().map(|&(i, m)| HeisenGen::q(i, m))).collect()
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.word().iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Normal-ordered element: monomials with nonzero Laurent coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeisenNF {
    terms: BTreeMap<NormalMonomial, LaurentPoly>,
}

impl HeisenNF {
    pub fn zero() -> Self {
        HeisenNF::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(NormalMonomial::unit(), LaurentPoly::one())
    }

    pub fn from_monomial(m: NormalMonomial, c: LaurentPoly) -> Self {
        let mut x = HeisenNF::default();
        x.add_term(m, &c);
        x
    }

    /// A single generator as an element (it is already normal).
    pub fn generator(g: HeisenGen) -> Self {
        Self::from_monomial(NormalMonomial::from_ordered(&[g]), LaurentPoly::one())
    }

    pub fn add_term(&mut self, m: NormalMonomial, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_default();
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = HeisenNF::default();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), &(v * c));
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalMonomial, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &NormalMonomial) -> Option<&LaurentPoly> {
        self.terms.get(m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for HeisenNF {
    /// Monomials by descending total level, each coefficient expanded by descending q-power.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut monos: Vec<(&NormalMonomial, &LaurentPoly)> = self.terms.iter().collect();
        monos.sort_by(|a, b| b.0.total_level().cmp(&a.0.total_level()).then_with(|| a.0.cmp(b.0)));
        let mut first = true;
        for (m, poly) in monos {
            for (exp, c) in poly.terms().rev() {
                let (neg, body) = coeff_prefix(c);
                let scalar = format!("{body}{}", fmt_q_power(exp));
                let term = match (scalar.is_empty(), m.is_unit()) {
                    (true, true) => "1".to_string(),
                    (true, false) => m.to_string(),
                    (false, true) => scalar,
                    (false, false) => format!("{scalar} {m}"),
                };
                match (first, neg) {
                    (true, true) => write!(f, "-")?,
                    (true, false) => {}
                    (false, true) => write!(f, " - ")?,
                    (false, false) => write!(f, " + ")?,
                }
                first = false;
                write!(f, "{term}")?;
            }
        }
        Ok(())
    }
}

/// Which reducible q.p adjacency is rewritten first.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// Structure constants of the same-node relation: generic q, or the specialization q = -1.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Coefficients {
    #[default]
    Generic,
    Specialized,
}

/// Counters collected while normal ordering.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RewriteStats {
    /// Total rewrite steps over all branches.
    pub rewrites: u64,
    /// Longest chain of rewrites along a single branch.
    pub max_chain: u64,
}

/// Correction coefficient of p_i^(m-k) q_i^(n-k) in q_i^(n) p_i^(m).
pub fn same_node_coefficient(k: u32, coeffs: Coefficients) -> LaurentPoly {
    match coeffs {
        Coefficients::Generic => {
            (&quantum_integer(k + 1) + &quantum_integer(k - 1)).scale(&CycloScalar::from_int(2, 1))
        }
        Coefficients::Specialized => {
            let sign = if k.is_multiple_of(2) { 1 } else { -1 };
            LaurentPoly::from_int(sign * 4 * k as i64)
        }
    }
}

fn validate(word: &[HeisenGen], cartan: &CartanData) -> Result<()> {
    for g in word {
        cartan.check_node(g.node)?;
    }
    Ok(())
}

/// Normal ordering with an explicit strategy and coefficient set.
pub fn normal_form_with(
    word: &[HeisenGen],
    cartan: &CartanData,
    strategy: Strategy,
    coeffs: Coefficients,
) -> Result<(HeisenNF, RewriteStats)> {
    validate(word, cartan)?;
    let mut out = HeisenNF::zero();
    let mut stats = RewriteStats::default();
    let mut stack: Vec<(Vec<HeisenGen>, LaurentPoly, u64)> = vec![(word.to_vec(), LaurentPoly::one(), 0)];
    while let Some((mut w, c, depth)) = stack.pop() {
        w.retain(|g| g.level > 0);
        stats.max_chain = stats.max_chain.max(depth);
        let mut spots =
            (0..w.len().saturating_sub(1)).filter(|&t| w[t].kind == GenKind::Q && w[t + 1].kind == GenKind::P);
        let spot = match strategy {
            Strategy::Leftmost => spots.next(),
            Strategy::Rightmost => spots.next_back(),
        };
        let Some(t) = spot else {
            out.add_term(NormalMonomial::from_ordered(&w), &c);
            continue;
        };
        stats.rewrites += 1;
        let (qg, pg) = (w[t], w[t + 1]);
        let (i, n, j, m) = (qg.node, qg.level, pg.node, pg.level);
        let mut swapped = w.clone();
        swapped.swap(t, t + 1);
        stack.push((swapped, c.clone(), depth + 1));
        let a = cartan.a(i, j);
        if a == 0 {
            continue;
        }
        for k in 1..=n.min(m) {
            let coeff = if a == 2 { same_node_coefficient(k, coeffs) } else { LaurentPoly::from_int(2) };
            let mut next = Vec::with_capacity(w.len());
            next.extend_from_slice(&w[..t]);
            next.push(HeisenGen::p(j, m - k));
            next.push(HeisenGen::q(i, n - k));
            next.extend_from_slice(&w[t + 2..]);
            stack.push((next, &c * &coeff, depth + 1));
        }
    }
    Ok((out, stats))
}

/// Normal ordering with generic coefficients.
pub fn normal_form(word: &[HeisenGen], cartan: &CartanData) -> Result<HeisenNF> {
    Ok(normal_form_with(word, cartan, Strategy::Leftmost, Coefficients::Generic)?.0)
}

/// Normal ordering directly at q = -1.
pub fn normal_form_specialized(word: &[HeisenGen], cartan: &CartanData) -> Result<HeisenNF> {
    Ok(normal_form_with(word, cartan, Strategy::Leftmost, Coefficients::Specialized)?.0)
}

/// Bilinear product of normal-ordered elements.
pub fn product(x: &HeisenNF, y: &HeisenNF, cartan: &CartanData) -> Result<HeisenNF> {
    let mut out = HeisenNF::zero();
    for (mx, cx) in x.terms() {
        for (my, cy) in y.terms() {
            let mut w = mx.word();
            w.extend(my.word());
            out = out.add(&normal_form(&w, cartan)?.scale(&(cx * cy)));
        }
    }
    Ok(out)
}

/// Coefficients sent through q = -1.
pub fn specialize(x: &HeisenNF) -> HeisenNF {
    let mut out = HeisenNF::zero();
    for (m, c) in x.terms() {
        out.add_term(m.clone(), &LaurentPoly::constant(eval_minus_one(c)));
    }
    out
}

/// Random word of the given maximum length with levels in 1..=max_level.
pub fn random_word(rng: &mut ChaCha8Rng, max_len: usize, max_level: u32, nodes: usize) -> Vec<HeisenGen> {
    let len = rng.gen_range(1..=max_len.max(1));
    (0..len)
        .map(|_| {
            let node = rng.gen_range(1..=nodes);
            let level = rng.gen_range(1..=max_level);
            if rng.gen_bool(0.5) {
                HeisenGen::p(node, level)
            } else {
                HeisenGen::q(node, level)
            }
        })
        .collect()
}

fn render_word(w: &[HeisenGen]) -> String {
    w.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Rewrites random words under both strategies and compares the results.
pub fn confluence_probe(trials: usize, max_len: usize, cartan: &CartanData, seed: u64) -> Report {
    const MAX_LEVEL: u32 = 3;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rec = Record::new("heisenberg-confluence")
        .with_param("trials", trials)
        .with_param("max_len", max_len)
        .with_param("seed", seed);
    for _ in 0..trials {
        let w = random_word(&mut rng, max_len, MAX_LEVEL, cartan.nodes());
        let left = normal_form_with(&w, cartan, Strategy::Leftmost, Coefficients::Generic);
        let right = normal_form_with(&w, cartan, Strategy::Rightmost, Coefficients::Generic);
        let ok = matches!((&left, &right), (Ok((a, _)), Ok((b, _))) if a == b);
        rec.check(ok, || format!("strategies disagree on {}", render_word(&w)));
    }
    Report::single(rec.timed(start))
}
