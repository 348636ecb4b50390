//! The five-map splitting of the truncated Q P into P Q plus four shifted copies of the identity.

use std::time::Instant;

use super::carrier::{mul, BiDegree, BimoduleHandle, CarrierVec, Functor, Key};
use super::context::BimodContext;
use super::map::BimodMap;
use super::nat::*;
use crate::error::{Error, Result};
use crate::report::{Record, Report};
use crate::scalars::{quantum_integer, CycloScalar, LaurentPoly};
use crate::wreath::{char_idempotent, in_slot, mult, trace, BGammaBasisElem, WreathElem};

use Functor::{P, Q};

/// x -> e_{n+1} x e_{n+1} on Q(n)P(n) = B_{n+1}.
pub fn truncate_qp(ctx: &BimodContext, n: usize, e: &WreathElem) -> Result<BimodMap> {
    let h = BimoduleHandle::new(&[Q(n), P(n)], ctx.ell())?;
    let e = in_slot(e, n + 1, n + 1);
    let c = ctx.clone();
    Ok(BimodMap::from_fn("pi_QP", h.clone(), h, BiDegree::ZERO, move |k| {
        let alg = c.algebra();
        let x = WreathElem::from_word(c.ell(), *k.word());
        let y = mul(alg, &mul(alg, &e, &x), &e);
        let mut out = CarrierVec::new();
        for (w, coeff) in y.terms() {
            out.add_term(Key::plain(*w), coeff);
        }
        out
    }))
}

/// a (x) b -> a e_n (x) e_n b on P(n-1)Q(n-1) = B_n (x)_{B_{n-1}} B_n.
pub fn truncate_pq(ctx: &BimodContext, n: usize, e: &WreathElem) -> Result<BimodMap> {
    if n == 0 {
        return Err(Error::OutOfRange("P(n-1)Q(n-1) needs n >= 1".into()));
    }
    let h = BimoduleHandle::new(&[P(n - 1), Q(n - 1)], ctx.ell())?;
    let e = in_slot(e, n, n);
    let c = ctx.clone();
    let src = h.clone();
    Ok(BimodMap::from_fn("pi_PQ", h.clone(), h, BiDegree::ZERO, move |k| {
        let alg = c.algebra();
        let f = src.layout().split(alg, k);
        let factors = [mul(alg, &f[0], &e), mul(alg, &e, &f[1])];
        let mut out = CarrierVec::new();
        src.layout().canonicalize(alg, &factors, &CycloScalar::one(c.ell()), &mut out);
        out
    }))
}

/// The maps f_0..f_4 out of the truncated Q(n)P(n) and g_0..g_4 into it.
pub struct ExampleMaps {
    pub f: Vec<BimodMap>,
    pub g: Vec<BimodMap>,
    pub pi_qp: BimodMap,
    pub pi_pq: BimodMap,
    /// The dot normalization: the inverse of tr(omega e).
    pub lambda: CycloScalar,
}

/// Builds the ten maps for the character idempotent of index `i`.
pub fn example_maps(ctx: &BimodContext, n: usize, i: u32) -> Result<ExampleMaps> {
    let ell = ctx.ell();
    let e = char_idempotent(ell, i)?;
    let omega = label(BGammaBasisElem::OMEGA, ell);
    let lambda = trace(&mult(&omega, &e)?)?.inv().ok_or(Error::Singular)?;
    let wh = |m: BimodMap, l: &[Functor], r: &[Functor]| m.whisker(ctx, l, r);
    let pi = truncate_qp(ctx, n, &e)?;
    let pi_pq = truncate_pq(ctx, n, &e)?;
    let counit = adj_qp_counit(ctx, n)?;
    let unit = adj_qp_unit(ctx, n)?;
    let r_omega = wh(nat_x(ctx, n, &omega)?, &[Q(n)], &[])?.scale(&lambda);
    let r_c = wh(nat_xc(ctx, n)?, &[Q(n)], &[])?;
    let l_c = wh(nat_yc(ctx, n)?, &[], &[P(n)])?;
    let chain = BimodMap::chain;
    let f = vec![
        chain(&[pi_pq.clone(), nat_tmp(ctx, n)?, pi.clone()])?.renamed("f0"),
        chain(&[counit.clone(), pi.clone()])?.renamed("f1"),
        chain(&[counit.clone(), r_omega.clone(), pi.clone()])?.renamed("f2"),
        chain(&[counit.clone(), r_c.clone(), pi.clone()])?.renamed("f3"),
        chain(&[counit.clone(), r_omega.clone(), r_c.clone(), pi.clone()])?.renamed("f4"),
    ];
    let g = vec![
        chain(&[pi.clone(), nat_tpm(ctx, n)?, pi_pq.clone()])?.renamed("g0"),
        chain(&[pi.clone(), r_omega.clone(), unit.clone()])?.renamed("g1"),
        chain(&[pi.clone(), unit.clone()])?.renamed("g2"),
        chain(&[pi.clone(), l_c.clone(), r_omega.clone(), unit.clone()])?.neg().renamed("g3"),
        chain(&[pi.clone(), l_c.clone(), unit.clone()])?.neg().renamed("g4"),
    ];
    Ok(ExampleMaps { f, g, pi_qp: pi, pi_pq, lambda })
}

/// Checks f_a g_b = delta_ab, sum_a g_a f_a = pi_QP and the degree bookkeeping of the four corrections.
pub fn example_decomposition(ctx: &BimodContext, n: usize) -> Result<Report> {
    let ell = ctx.ell();
    let maps = example_maps(ctx, n, 0)?;
    let mut rep = Report::new();
    let rec = |name: &str| Record::new(format!("example/{name}")).with_n(n).with_ell(ell);

    let t = Instant::now();
    let mut r = rec("biorthogonality").with_param("lambda", &maps.lambda);
    for (a, fa) in maps.f.iter().enumerate() {
        for (b, gb) in maps.g.iter().enumerate() {
            let lhs = fa.compose(gb)?;
            let rhs = match (a == b, a) {
                (true, 0) => maps.pi_pq.clone(),
                (true, _) => BimodMap::identity(lhs.source()),
                (false, _) => BimodMap::zero(lhs.source(), lhs.target(), lhs.weight()),
            };
            let (checked, failure) = lhs.agree_with(&rhs)?;
            r.absorb(checked, failure.map(|f| format!("f{a} g{b}: {f}")));
        }
    }
    rep.push(r.timed(t));

    let t = Instant::now();
    let mut r = rec("completeness");
    let one = CycloScalar::one(ell);
    let terms: Vec<(CycloScalar, BimodMap)> =
        maps.g.iter().zip(&maps.f).map(|(g, f)| Ok((one.clone(), g.compose(f)?))).collect::<Result<_>>()?;
    let sum = BimodMap::linear_combination(&terms)?;
    let (checked, failure) = sum.agree_with(&maps.pi_qp)?;
    r.absorb(checked, failure.map(|f| format!("sum g_a f_a != pi_QP: {f}")));
    rep.push(r.timed(t));

    let t = Instant::now();
    let mut r = rec("degrees");
    let degrees: Vec<BiDegree> = maps.g[1..].iter().map(|g| g.degree()).collect();
    let mut sorted = degrees.clone();
    sorted.sort_by_key(|d| (d.parity, d.z));
    let want = [BiDegree::new(-1, 0), BiDegree::new(1, 0), BiDegree::new(-1, 1), BiDegree::new(1, 1)];
    r.check(sorted == want, || format!("correction degrees {sorted:?}, expected {want:?}"));
    for (a, (f, g)) in maps.f.iter().zip(&maps.g).enumerate().skip(1) {
        let total = f.degree() + g.degree();
        r.check(total == BiDegree::ZERO, || format!("f{a} g{a} has degree {total}"));
    }
    let mut k0 = LaurentPoly::zero();
    for d in &degrees {
        k0 = &k0 + &LaurentPoly::q_pow(d.z as i64);
    }
    let two = LaurentPoly::from_int(2);
    let expected = &two * &quantum_integer(2);
    r.check(k0 == expected, || format!("K0 sum {k0}, expected 2[2] = {expected}"));
    let shown: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
    rep.push(r.with_param("degrees", shown.join(" ")).with_param("k0", &k0).timed(t));
    Ok(rep)
}
