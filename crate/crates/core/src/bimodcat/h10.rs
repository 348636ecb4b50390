//! The H10 splitting of Q(n)P(n) into the image of T_{+-}T_{-+} and the correction summands.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;

use super::carrier::{BimoduleHandle, Functor};
use super::context::BimodContext;
use super::map::BimodMap;
use super::suites::{h10_corrections, h10_lhs};
use crate::error::{Error, Result};
use crate::report::{Record, Report};
use crate::scalars::{CycloScalar, GradedDim};
use crate::wreath::{dimension, graded_dimension};

/// Graded trace of an endomorphism of a plain algebra carrier; `None` if a diagonal entry is not an integer.
pub fn graded_trace(map: &BimodMap) -> Option<GradedDim> {
    let mut g = GradedDim::zero();
    for (k, image) in map.materialize() {
        let Some(c) = image.coeff(&k) else { continue };
        let q = c.as_rational()?;
        if !q.is_integer() {
            return None;
        }
        let d = map.source().key_degree(&k);
        g.add_term(d.z as i64, d.parity, &q.to_integer());
    }
    Some(g)
}

/// gdim B^Gamma (1 + pi) = l (1 + q)^2 (1 + pi).
pub fn correction_character(ell: u32) -> GradedDim {
    let l = ell as i64;
    let bg = &(&GradedDim::monomial(0, 0, l) + &GradedDim::monomial(1, 0, 2 * l)) + &GradedDim::monomial(2, 0, l);
    let cl = &GradedDim::one() + &GradedDim::monomial(0, 1, 1);
    &bg * &cl
}

/// Projections pi1 = T_{+-}T_{-+} and pi2 (the correction sums) on Q(n)P(n), with ranks and character identities.
pub fn h10_projection_decomposition(ctx: &BimodContext, n: usize) -> Result<Report> {
    if n == 0 {
        return Err(Error::OutOfRange("the H10 decomposition needs n >= 1".into()));
    }
    let ell = ctx.ell();
    let mut rep = Report::new();
    let pi1 = h10_lhs(ctx, n)?;
    let pi2 = h10_corrections(ctx, n)?;
    let id = BimodMap::identity(pi1.source());
    let rec = |name: &str| Record::new(format!("h10/{name}")).with_n(n).with_ell(ell);

    let pairs: [(&str, BimodMap, BimodMap); 5] = [
        ("pi1_idempotent", pi1.compose(&pi1)?, pi1.clone()),
        ("pi2_idempotent", pi2.compose(&pi2)?, pi2.clone()),
        ("pi1_pi2_orthogonal", pi1.compose(&pi2)?, BimodMap::zero(pi1.source(), pi1.target(), pi1.weight())),
        ("pi2_pi1_orthogonal", pi2.compose(&pi1)?, BimodMap::zero(pi1.source(), pi1.target(), pi1.weight())),
        ("sum_is_identity", BimodMap::linear_combination(&[(one(ell), pi1.clone()), (one(ell), pi2.clone())])?, id),
    ];
    for (name, lhs, rhs) in pairs {
        let t = Instant::now();
        let (checked, failure) = lhs.agree_with(&rhs)?;
        let mut r = rec(name);
        r.absorb(checked, failure);
        rep.push(r.timed(t));
    }

    let t = Instant::now();
    let pq = BimoduleHandle::new(&[Functor::P(n - 1), Functor::Q(n - 1)], ell)?;
    let want1 = pq.graded_dimension();
    let want2 = &graded_dimension(n, ell) * &correction_character(ell);
    let mut r = rec("graded_ranks");
    match (graded_trace(&pi1), graded_trace(&pi2)) {
        (Some(g1), Some(g2)) => {
            let (rank1, rank2) = (g1.total(), g2.total());
            r = r.with_param("rank_pi1", &rank1).with_param("rank_pi2", &rank2);
            let expect2 = BigInt::from(2 * 4 * ell as u64 * dimension(n, ell));
            r.check(rank2 == expect2, || format!("rank(pi2) = {rank2}, expected 2*4l*dim B_n = {expect2}"));
            r.check(g1 == want1, || format!("graded rank of pi1 is {g1}, expected gdim of {pq} = {want1}"));
            r.check(g2 == want2, || format!("graded rank of pi2 is {g2}, expected {want2}"));
        }
        _ => r.fail("a diagonal entry of a projection is not an integer"),
    }
    rep.push(r.timed(t));

    let t = Instant::now();
    let mut r = rec("dimension_identity");
    let (l, m) = (4 * ell as u64, n as u64 + 1);
    let lhs = BigInt::from(l).pow(m as u32) * BigInt::from(2u32).pow(m as u32) * factorial(m);
    let dn = BigInt::from(dimension(n, ell));
    let rhs = &dn * &dn / BigInt::from(dimension(n - 1, ell)) + BigInt::from(2 * l) * &dn;
    r.check(lhs == BigInt::from(dimension(n + 1, ell)), || {
        format!("(4l)^(n+1) 2^(n+1) (n+1)! = {lhs} is not dim B_(n+1)")
    });
    r.check(lhs == rhs, || format!("{lhs} != {rhs}"));
    let gl = graded_dimension(n + 1, ell);
    let gr = &want1 + &want2;
    r.check(gl == gr, || format!("gdim B_(n+1) = {gl} but gdim PQ + gdim B_n (corrections) = {gr}"));
    rep.push(r.with_param("identity", format!("{lhs} = {}", rhs)).timed(t));
    Ok(rep)
}

fn one(ell: u32) -> CycloScalar {
    CycloScalar::one(ell)
}

fn factorial(m: u64) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}
