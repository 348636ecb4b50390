//! The generating natural transformations as bimodule maps.

use super::carrier::{mono_mul, mul, BiDegree, BimoduleHandle, CarrierVec, Functor, Key, Mono};
use super::context::BimodContext;
use super::free::{decompose_word, free_basis_word};
use super::map::BimodMap;
use crate::error::{Error, Result};
use crate::scalars::CycloScalar;
use crate::wreath::{in_slot, BGammaBasisElem, Phase, WreathAlgebra, WreathBasisWord, WreathElem};

/// Validates a dot label: a nonzero homogeneous element of B^Gamma; returns its Z-degree.
fn label_degree(b: &WreathElem) -> Result<u32> {
    if b.rank() != 1 || b.terms().any(|(w, _)| w.parity() != 0 || !w.perm().is_identity()) {
        return Err(Error::WrongCarrier(format!("{b} is not an element of B^Gamma")));
    }
    match b.bidegree() {
        Some((z, _)) => Ok(z),
        None => Err(Error::WrongCarrier(format!("{b} is zero or not homogeneous"))),
    }
}

fn plain_vec(x: &WreathElem, sign: bool) -> CarrierVec {
    let mut v = CarrierVec::new();
    for (w, c) in x.terms() {
        if sign {
            v.add_term(Key::plain(*w), &-c);
        } else {
            v.add_term(Key::plain(*w), c);
        }
    }
    v
}

fn plain_mono(alg: &WreathAlgebra, m: Option<Mono>) -> CarrierVec {
    let mut v = CarrierVec::new();
    if let Some((w, ph)) = m {
        v.add_term(Key::plain(w), &ph.scalar(alg.ell()));
    }
    v
}

fn simple(n: usize, i: usize) -> Mono {
    (WreathBasisWord::simple(n, i), Phase::ONE)
}

fn handle(word: &[Functor], ctx: &BimodContext) -> Result<BimoduleHandle> {
    BimoduleHandle::new(word, ctx.ell())
}

fn need_positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange(format!("{what} needs n >= 1")));
    }
    Ok(())
}

/// The B^Gamma basis element b as a rank-one element.
pub fn label(b: BGammaBasisElem, ell: u32) -> WreathElem {
    WreathElem::slot(ell, 1, 1, b)
}

/// X(b) on P(n): x -> (-1)^{|x||b|} x b_{n+1}.
pub fn nat_x(ctx: &BimodContext, n: usize, b: &WreathElem) -> Result<BimodMap> {
    let ell = ctx.ell();
    let deg = label_degree(b)?;
    let bb = in_slot(&b.relevel(ell)?, n + 1, n + 1);
    let h = handle(&[Functor::P(n)], ctx)?;
    let c = ctx.clone();
    let sign_on = deg % 2 == 1 && !ctx.faults().drop_dot_koszul;
    Ok(BimodMap::from_fn(format!("X({b})"), h.clone(), h, BiDegree::new(deg as i32, 0), move |k| {
        let x = WreathElem::from_word(ell, *k.word());
        let neg = sign_on && k.word().z_degree(ell) % 2 == 1;
        plain_vec(&mul(c.algebra(), &x, &bb), neg)
    }))
}

/// X(c) on P(n): x -> (-1)^{||x||} x c_{n+1}.
pub fn nat_xc(ctx: &BimodContext, n: usize) -> Result<BimodMap> {
    let ell = ctx.ell();
    let cc = WreathElem::c(ell, n + 1, n + 1);
    let h = handle(&[Functor::P(n)], ctx)?;
    let c = ctx.clone();
    let sign_on = !ctx.faults().drop_clifford_dot_sign;
    Ok(BimodMap::from_fn("Xc", h.clone(), h, BiDegree::new(0, 1), move |k| {
        let x = WreathElem::from_word(ell, *k.word());
        plain_vec(&mul(c.algebra(), &x, &cc), sign_on && k.word().parity() == 1)
    }))
}

/// Y(b) on Q(n): x -> b_{n+1} x.
pub fn nat_y(ctx: &BimodContext, n: usize, b: &WreathElem) -> Result<BimodMap> {
    let ell = ctx.ell();
    let deg = label_degree(b)?;
    let bb = in_slot(&b.relevel(ell)?, n + 1, n + 1);
    let h = handle(&[Functor::Q(n)], ctx)?;
    let c = ctx.clone();
    Ok(BimodMap::from_fn(format!("Y({b})"), h.clone(), h, BiDegree::new(deg as i32, 0), move |k| {
        plain_vec(&mul(c.algebra(), &bb, &WreathElem::from_word(ell, *k.word())), false)
    }))
}

/// Y(c) on Q(n): x -> c_{n+1} x.
pub fn nat_yc(ctx: &BimodContext, n: usize) -> Result<BimodMap> {
    let ell = ctx.ell();
    let cc = WreathElem::c(ell, n + 1, n + 1);
    let h = handle(&[Functor::Q(n)], ctx)?;
    let c = ctx.clone();
    Ok(BimodMap::from_fn("Yc", h.clone(), h, BiDegree::new(0, 1), move |k| {
        plain_vec(&mul(c.algebra(), &cc, &WreathElem::from_word(ell, *k.word())), false)
    }))
}

/// T on P(n+1)P(n) = B_{n+2}: x -> x s_{n+1}.
pub fn nat_t(ctx: &BimodContext, n: usize) -> Result<BimodMap> {
    let s = simple(n + 2, n + 1);
    let h = handle(&[Functor::P(n + 1), Functor::P(n)], ctx)?;
    let c = ctx.clone();
    Ok(BimodMap::from_fn("T", h.clone(), h, BiDegree::ZERO, move |k| {
        let alg = c.algebra();
        plain_mono(alg, mono_mul(alg, &(*k.word(), Phase::ONE), &s))
    }))
}

/// T on Q(n)Q(n+1) = B_{n+2}: x -> s_{n+1} x.
pub fn nat_tqq(ctx: &BimodContext, n: usize) -> Result<BimodMap> {
    let s = simple(n + 2, n + 1);
    let h = handle(&[Functor::Q(n), Functor::Q(n + 1)], ctx)?;
    let c = ctx.clone();
    Ok(BimodMap::from_fn("Tqq", h.clone(), h, BiDegree::ZERO, move |k| {
        let alg = c.algebra();
        plain_mono(alg, mono_mul(alg, &s, &(*k.word(), Phase::ONE)))
    }))
}

/// T_{-+}: Q(n)P(n) = B_{n+1} -> P(n-1)Q(n-1) = B_n (x)_{B_{n-1}} B_n, killing B_n (B^Gamma x Cl_1)_{n+1}
/// and sending g s_n h to g (x) h.
pub fn nat_tmp(ctx: &BimodContext, n: usize) -> Result<BimodMap> {
    need_positive(n, "T_{-+}")?;
    let ell = ctx.ell();
    let source = handle(&[Functor::Q(n), Functor::P(n)], ctx)?;
    let target = handle(&[Functor::P(n - 1), Functor::Q(n - 1)], ctx)?;
    let c = ctx.clone();
    let tgt = target.clone();
    Ok(BimodMap::from_fn("T-+", source, target, BiDegree::ZERO, move |k| {
        let alg = c.algebra();
        let (fi, y, ph) = decompose_word(alg, n, k.word());
        let mut out = CarrierVec::new();
        if fi.i as usize == n + 1 {
            return out;
        }
        let (u, ph_u) = free_basis_word(alg, n - 1, fi);
        let factors = [(u, ph.mul(ph_u, ell)), (y, Phase::ONE)];
        tgt.layout().canonicalize_monos(alg, &factors, &CycloScalar::one(ell), &mut out);
        out
    }))
}

/// T_{+-}: P(n-1)Q(n-1) -> Q(n)P(n), g (x) h -> g s_n h.
pub fn nat_tpm(ctx: &BimodContext, n: usize) -> Result<BimodMap> {
    need_positive(n, "T_{+-}")?;
    let source = handle(&[Functor::P(n - 1), Functor::Q(n - 1)], ctx)?;
    let target = handle(&[Functor::Q(n), Functor::P(n)], ctx)?;
    let s = simple(n + 1, n);
    let c = ctx.clone();
    let src = source.clone();
    Ok(BimodMap::from_fn("T+-", source, target, BiDegree::ZERO, move |k| {
        let alg = c.algebra();
        let f = src.layout().split_monos(alg, k);
        plain_mono(alg, mono_mul(alg, &f[0], &s).and_then(|x| mono_mul(alg, &x, &f[1])))
    }))
}

/// Counit Q(n)P(n) = B_{n+1} -> B_n: keeps words with w in S_n, no c_{n+1}, and slot n+1 in C omega,
/// applying the trace to slot n+1.
pub fn adj_qp_counit(ctx: &BimodContext, n: usize) -> Result<BimodMap> {
    let ell = ctx.ell();
    let source = handle(&[Functor::Q(n), Functor::P(n)], ctx)?;
    let target = handle(&[Functor::Id(n)], ctx)?;
    let omega = BGammaBasisElem::OMEGA.index(ell);
    let one = CycloScalar::one(ell);
    Ok(BimodMap::from_fn("counit_qp", source, target, BiDegree::new(-2, 0), move |k| {
        let w = k.word();
        let mut out = CarrierVec::new();
        if w.perm[n] as usize == n && (w.cliff >> n) & 1 == 0 && w.tensor[n] == omega {
            let mut y = WreathBasisWord::identity(n);
            y.tensor[..n].copy_from_slice(&w.tensor[..n]);
            y.perm[..n].copy_from_slice(&w.perm[..n]);
            y.cliff = w.cliff;
            out.add_term(Key::plain(y), &one);
        }
        out
    }))
}

/// Unit B_n -> Q(n)P(n) = B_{n+1}, the subalgebra inclusion.
pub fn adj_qp_unit(ctx: &BimodContext, n: usize) -> Result<BimodMap> {
    let ell = ctx.ell();
    let source = handle(&[Functor::Id(n)], ctx)?;
    let target = handle(&[Functor::Q(n), Functor::P(n)], ctx)?;
    let one = CycloScalar::one(ell);
    Ok(BimodMap::from_fn("unit_qp", source, target, BiDegree::ZERO, move |k| {
        let mut out = CarrierVec::new();
        out.add_term(Key::plain(k.word().embed(n + 1)), &one);
        out
    }))
}

/// Counit P(n)Q(n) = B_{n+1} (x)_{B_n} B_{n+1} -> B_{n+1}, a (x) b -> ab.
pub fn adj_pq_counit(ctx: &BimodContext, n: usize) -> Result<BimodMap> {
    let source = handle(&[Functor::P(n), Functor::Q(n)], ctx)?;
    let target = handle(&[Functor::Id(n + 1)], ctx)?;
    let c = ctx.clone();
    let src = source.clone();
    Ok(BimodMap::from_fn("counit_pq", source, target, BiDegree::ZERO, move |k| {
        let alg = c.algebra();
        let f = src.layout().split_monos(alg, k);
        plain_mono(alg, mono_mul(alg, &f[0], &f[1]))
    }))
}

/// s_i s_{i+1} ... s_n in B_{n+1}, or its reverse.
fn descending(ctx: &BimodContext, n: usize, i: usize, reverse: bool) -> WreathElem {
    let ell = ctx.ell();
    let mut acc = WreathElem::one(ell, n + 1);
    let mut idx: Vec<usize> = (i..=n).collect();
    if reverse {
        idx.reverse();
    }
    for k in idx {
        acc = mul(ctx.algebra(), &acc, &WreathElem::s(ell, n + 1, k));
    }
    acc
}

/// The image of 1 under the unit of P(n)Q(n):
/// sum over b and i of s_i..s_n dual(b) (x) b s_n..s_i + s_i..s_n c dual(b) (x) b c s_n..s_i.
pub fn pq_unit_element(ctx: &BimodContext, n: usize) -> Result<CarrierVec> {
    let ell = ctx.ell();
    let alg = ctx.algebra();
    let target = handle(&[Functor::P(n), Functor::Q(n)], ctx)?;
    let c = WreathElem::c(ell, n + 1, n + 1);
    let one = CycloScalar::one(ell);
    let mut out = CarrierVec::new();
    for b in BGammaBasisElem::all(ell) {
        let bb = WreathElem::slot(ell, n + 1, n + 1, b);
        let dual = WreathElem::slot_combination(ell, n + 1, n + 1, &ctx.dual().dual_terms(b));
        for i in 1..=n + 1 {
            let up = descending(ctx, n, i, false);
            let down = descending(ctx, n, i, true);
            let left = mul(alg, &up, &dual);
            let right = mul(alg, &bb, &down);
            target.layout().canonicalize(alg, &[left, right], &one, &mut out);
            let left = mul(alg, &mul(alg, &up, &c), &dual);
            let right = mul(alg, &mul(alg, &bb, &c), &down);
            target.layout().canonicalize(alg, &[left, right], &one, &mut out);
        }
    }
    Ok(out)
}

/// Unit B_{n+1} -> P(n)Q(n), x -> x times the element above.
pub fn adj_pq_unit(ctx: &BimodContext, n: usize) -> Result<BimodMap> {
    let source = handle(&[Functor::Id(n + 1)], ctx)?;
    let target = handle(&[Functor::P(n), Functor::Q(n)], ctx)?;
    let rho = pq_unit_element(ctx, n)?;
    let pieces: Vec<(Vec<Mono>, CycloScalar)> =
        rho.terms().map(|(k, c)| (target.layout().split_monos(ctx.algebra(), k), c.clone())).collect();
    let c = ctx.clone();
    let tgt = target.clone();
    Ok(BimodMap::from_fn("unit_pq", source, target, BiDegree::new(2, 0), move |k| {
        let alg = c.algebra();
        let x = (*k.word(), Phase::ONE);
        let mut out = CarrierVec::new();
        for (f, coeff) in &pieces {
            if let Some(left) = mono_mul(alg, &x, &f[0]) {
                tgt.layout().canonicalize_monos(alg, &[left, f[1]], coeff, &mut out);
            }
        }
        out
    }))
}
