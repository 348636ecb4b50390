//! Bimodule maps between carriers, applied lazily column by column.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use super::carrier::{mono_mul, word_degree, BiDegree, BimoduleHandle, CarrierVec, Functor, Key, Layout, Mono};
use super::context::BimodContext;
use crate::error::{Error, Result};
use crate::scalars::CycloScalar;
use crate::wreath::{Phase, WreathBasisWord, WreathElem};

type Column = dyn Fn(&Key) -> CarrierVec + Send + Sync;

/// A bimodule map: source and target handles, a column function on source keys, and its degree.
#[derive(Clone)]
pub struct BimodMap {
    name: String,
    source: BimoduleHandle,
    target: BimoduleHandle,
    weight: BiDegree,
    column: Arc<Column>,
}

impl fmt::Debug for BimodMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BimodMap({}: {} -> {}, {})", self.name, self.source, self.target, self.degree())
    }
}

/// A source key where two maps disagree, with both images rendered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub key: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "on {}: lhs = {}, rhs = {}", self.key, self.lhs, self.rhs)
    }
}

impl BimodMap {
    /// A map given by its action on source keys; `weight` is the change of element degree.
    pub fn from_fn(
        name: impl Into<String>,
        source: BimoduleHandle,
        target: BimoduleHandle,
        weight: BiDegree,
        f: impl Fn(&Key) -> CarrierVec + Send + Sync + 'static,
    ) -> Self {
        BimodMap { name: name.into(), source, target, weight, column: Arc::new(f) }
    }

    pub fn identity(h: &BimoduleHandle) -> Self {
        let one = CycloScalar::one(h.ell());
        Self::from_fn("Id", h.clone(), h.clone(), BiDegree::ZERO, move |k| {
            let mut v = CarrierVec::new();
            v.add_term(*k, &one);
            v
        })
    }

    pub fn zero(source: &BimoduleHandle, target: &BimoduleHandle, weight: BiDegree) -> Self {
        Self::from_fn("0", source.clone(), target.clone(), weight, |_| CarrierVec::new())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn source(&self) -> &BimoduleHandle {
        &self.source
    }

    pub fn target(&self) -> &BimoduleHandle {
        &self.target
    }

    /// Degree change on carrier elements.
    pub fn weight(&self) -> BiDegree {
        self.weight
    }

    /// Declared degree as a map P -> Q<r>{s}: the weight corrected by the handle shifts.
    pub fn degree(&self) -> BiDegree {
        let s = self.source.shift();
        let t = self.target.shift();
        BiDegree::new(self.weight.z + s.z - t.z, self.weight.parity)
    }

    pub fn apply(&self, k: &Key) -> CarrierVec {
        (self.column)(k)
    }

    pub fn apply_vec(&self, v: &CarrierVec) -> CarrierVec {
        let mut out = CarrierVec::new();
        for (k, c) in v.terms() {
            out.add_scaled(&self.apply(k), c);
        }
        out
    }

    /// self after other.
    pub fn compose(&self, other: &BimodMap) -> Result<BimodMap> {
        if other.target != self.source {
            return Err(Error::WrongCarrier(format!(
                "cannot compose {} after {}: {} vs {}",
                self.name, other.name, self.source, other.target
            )));
        }
        let (g, f) = (self.clone(), other.clone());
        Ok(Self::from_fn(
            format!("{} . {}", self.name, other.name),
            other.source.clone(),
            self.target.clone(),
            self.weight + other.weight,
            move |k| g.apply_vec(&f.apply(k)),
        ))
    }

    /// Composite of a chain given outermost first.
    pub fn chain(maps: &[BimodMap]) -> Result<BimodMap> {
        let (last, rest) = maps.split_last().ok_or_else(|| Error::WrongCarrier("empty composite".into()))?;
        rest.iter().rev().try_fold(last.clone(), |acc, g| g.compose(&acc))
    }

    /// Sum of scalar multiples of parallel maps of equal weight.
    pub fn linear_combination(terms: &[(CycloScalar, BimodMap)]) -> Result<BimodMap> {
        let first = &terms.first().ok_or_else(|| Error::WrongCarrier("empty sum".into()))?.1;
        for (_, m) in terms {
            if m.source != first.source || m.target != first.target || m.weight != first.weight {
                return Err(Error::WrongCarrier(format!("{} and {} are not parallel", first.name, m.name)));
            }
        }
        let names: Vec<String> = terms.iter().map(|(c, m)| format!("({c}) {}", m.name)).collect();
        let terms = terms.to_vec();
        Ok(Self::from_fn(names.join(" + "), first.source.clone(), first.target.clone(), first.weight, move |k| {
            let mut out = CarrierVec::new();
            for (c, m) in &terms {
                out.add_scaled(&m.apply(k), c);
            }
            out
        }))
    }

    pub fn scale(&self, c: &CycloScalar) -> BimodMap {
        Self::linear_combination(&[(c.clone(), self.clone())]).expect("single term")
    }

    pub fn neg(&self) -> BimodMap {
        self.scale(&CycloScalar::from_int(-1, self.source.ell())).renamed(format!("-{}", self.name))
    }

    pub fn sub(&self, other: &BimodMap) -> Result<BimodMap> {
        let ell = self.source.ell();
        Self::linear_combination(&[
            (CycloScalar::one(ell), self.clone()),
            (CycloScalar::from_int(-1, ell), other.clone()),
        ])
    }

    /// Id_left * self * Id_right, with the Koszul sign of moving self past the left factors.
    pub fn whisker(&self, ctx: &BimodContext, left: &[Functor], right: &[Functor]) -> Result<BimodMap> {
        let ell = ctx.ell();
        let wrap = |inner: &BimoduleHandle| -> Vec<Functor> {
            left.iter().chain(inner.word().iter()).chain(right.iter()).copied().collect()
        };
        let source = BimoduleHandle::new(&wrap(&self.source), ell)?;
        let target = BimoduleHandle::new(&wrap(&self.target), ell)?;
        let combined = Arc::new(Layout::new(&wrap(&self.target))?);
        let (nl, nr) = (left.len(), right.len());
        let inner_source_len = if self.source.is_identity() { 0 } else { self.source.word().len() };
        let inner_source_rank = self.source.target_rank();
        let alpha = self.clone();
        let ctx2 = ctx.clone();
        let src = source.clone();
        let name = format!(
            "{}{}{}",
            if left.is_empty() { String::new() } else { format!("{} ", render_word(left)) },
            self.name,
            if right.is_empty() { String::new() } else { format!(" {}", render_word(right)) }
        );
        Ok(Self::from_fn(name, source, target, self.weight, move |k| {
            let alg = ctx2.algebra();
            let factors = src.layout().split_monos(alg, k);
            let lpart = &factors[..nl];
            let rpart = &factors[nl + inner_source_len..];
            debug_assert_eq!(rpart.len(), nr);
            let mut svec = CarrierVec::new();
            if inner_source_len == 0 {
                let unit = (WreathBasisWord::identity(inner_source_rank), Phase::ONE);
                alpha.source.layout().canonicalize_monos(alg, &[unit], &CycloScalar::one(ell), &mut svec);
            } else {
                let spart = &factors[nl..nl + inner_source_len];
                alpha.source.layout().canonicalize_monos(alg, spart, &CycloScalar::one(ell), &mut svec);
            }
            let ldeg = lpart.iter().fold(BiDegree::ZERO, |d, (w, _)| d + word_degree(w, ell));
            let negate = alpha.weight.koszul(ldeg) && !ctx2.faults().drop_whisker_koszul;
            let mut out = CarrierVec::new();
            let mut all = Vec::with_capacity(combined.factors().len());
            for (sk, sc) in svec.terms() {
                let image = alpha.apply(sk);
                for (tk, tc) in image.terms() {
                    all.clear();
                    all.extend_from_slice(lpart);
                    all.extend(alpha.target.layout().split_monos(alg, tk));
                    all.extend_from_slice(rpart);
                    let c = sc * tc;
                    combined.canonicalize_monos(alg, &all, &if negate { -c } else { c }, &mut out);
                }
            }
            out
        }))
    }

    /// Evaluates on every source key (in parallel) and returns the images in basis order.
    pub fn materialize(&self) -> Vec<(Key, CarrierVec)> {
        self.source
            .basis()
            .into_par_iter()
            .map(|k| {
                let v = self.apply(&k);
                (k, v)
            })
            .collect()
    }

    /// First source key where self and other differ; both maps must be parallel.
    pub fn first_difference(&self, other: &BimodMap) -> Result<Option<Mismatch>> {
        self.check_parallel(other)?;
        Ok(self.source.basis().into_par_iter().find_map_first(|k| {
            let (a, b) = (self.apply(&k), other.apply(&k));
            (a != b).then(|| Mismatch {
                key: self.source.render_key(&k),
                lhs: self.target.render_vec(&a),
                rhs: self.target.render_vec(&b),
            })
        }))
    }

    /// First source key whose image is not homogeneous of degree key degree + weight.
    pub fn first_inhomogeneity(&self) -> Option<String> {
        self.source.basis().into_par_iter().find_map_first(|k| self.inhomogeneity_at(&k))
    }

    fn inhomogeneity_at(&self, k: &Key) -> Option<String> {
        let want = self.source.key_degree(k) + self.weight;
        let v = self.apply(k);
        let bad = v.terms().find(|(t, _)| self.target.key_degree(t) != want).map(|(t, _)| {
            format!(
                "{} maps {} to a term {} of degree {} instead of {}",
                self.name,
                self.source.render_key(k),
                self.target.render_key(t),
                self.target.key_degree(t),
                want
            )
        });
        bad
    }

    /// Compares on every source key and checks both sides are homogeneous of the same weight.
    pub fn agree_with(&self, other: &BimodMap) -> Result<(u64, Option<String>)> {
        self.check_parallel(other)?;
        if self.weight != other.weight {
            return Ok((0, Some(format!("weights differ: {} vs {}", self.weight, other.weight))));
        }
        let basis = self.source.basis();
        let n = basis.len() as u64;
        let failure = basis.into_par_iter().find_map_first(|k| {
            let (a, b) = (self.apply(&k), other.apply(&k));
            if a != b {
                return Some(format!(
                    "on {}: lhs = {}, rhs = {}",
                    self.source.render_key(&k),
                    self.target.render_vec(&a),
                    self.target.render_vec(&b)
                ));
            }
            let want = self.source.key_degree(&k) + self.weight;
            let bad = a.terms().find(|(t, _)| self.target.key_degree(t) != want).map(|(t, _)| {
                format!(
                    "image of {} has a term {} of degree {} instead of {}",
                    self.source.render_key(&k),
                    self.target.render_key(t),
                    self.target.key_degree(t),
                    want
                )
            });
            bad
        });
        Ok((n, failure))
    }

    fn check_parallel(&self, other: &BimodMap) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::WrongCarrier(format!(
                "{}: {} -> {} and {}: {} -> {} are not parallel",
                self.name, self.source, self.target, other.name, other.source, other.target
            )));
        }
        Ok(())
    }

    /// Checks f(a x) = (-1)^{|f||a|} a f(x) and f(x a) = f(x) a for algebra generators a on every source key.
    pub fn first_nonlinearity(&self, ctx: &BimodContext) -> (u64, Option<String>) {
        let alg = ctx.algebra();
        let ell = ctx.ell();
        let left_rank = self.source.target_rank();
        let right_rank = self.source.source_rank();
        let lgens = generators(left_rank, ell);
        let rgens = generators(right_rank, ell);
        let slay = self.source.layout();
        let tlay = self.target.layout();
        let basis = self.source.basis();
        let checked = (basis.len() * (lgens.len() + rgens.len())) as u64;
        let as_mono = |g: &WreathElem| -> Mono {
            let (w, c) = g.terms().next().expect("generator");
            debug_assert!(g.len() == 1 && c.is_one());
            (*w, Phase::ONE)
        };
        let lgens: Vec<Mono> = lgens.iter().map(as_mono).collect();
        let rgens: Vec<Mono> = rgens.iter().map(as_mono).collect();
        let one = CycloScalar::one(ell);
        let failure = basis.into_par_iter().find_map_first(|k| {
            let image = self.apply(&k);
            let xs = slay.split_monos(alg, &k);
            let act = |lay: &Layout, f: &[Mono], a: &Mono, left: bool, c: &CycloScalar, out: &mut CarrierVec| {
                let mut f = f.to_vec();
                let i = if left { 0 } else { f.len() - 1 };
                let prod = if left { mono_mul(alg, a, &f[i]) } else { mono_mul(alg, &f[i], a) };
                if let Some(m) = prod {
                    f[i] = m;
                    lay.canonicalize_monos(alg, &f, c, out);
                }
            };
            for (a, left) in lgens.iter().map(|a| (a, true)).chain(rgens.iter().map(|a| (a, false))) {
                let mut ax = CarrierVec::new();
                act(slay, &xs, a, left, &one, &mut ax);
                let lhs = self.apply_vec(&ax);
                let negate = left && self.weight.koszul(word_degree(&a.0, ell));
                let mut rhs = CarrierVec::new();
                for (t, c) in image.terms() {
                    let c = if negate { -c } else { c.clone() };
                    act(tlay, &tlay.split_monos(alg, t), a, left, &c, &mut rhs);
                }
                if lhs != rhs {
                    let side = if left { "left" } else { "right" };
                    return Some(format!(
                        "{} fails {side} linearity at {} for {}",
                        self.name,
                        self.source.render_key(&k),
                        a.0.render(ell)
                    ));
                }
            }
            None
        });
        (checked, failure)
    }
}

fn render_word(w: &[Functor]) -> String {
    w.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("")
}

/// Algebra generators of B_n: s_i, c_i and every basis element of B^Gamma in every slot.
pub fn generators(n: usize, ell: u32) -> Vec<WreathElem> {
    let mut out = Vec::new();
    for i in 1..n {
        out.push(WreathElem::s(ell, n, i));
    }
    for i in 1..=n {
        out.push(WreathElem::c(ell, n, i));
        for b in crate::wreath::BGammaBasisElem::all(ell).into_iter().skip(1) {
            out.push(WreathElem::from_word(ell, WreathBasisWord::slot(n, i, b, ell)));
        }
    }
    out
}
