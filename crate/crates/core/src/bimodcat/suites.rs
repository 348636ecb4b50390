//! Relation suites: each identifier binds a source handle and the two composites to compare.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use super::carrier::{BiDegree, BimoduleHandle, Functor};
use super::context::BimodContext;
use super::map::BimodMap;
use super::nat::*;
use crate::error::{Error, Result};
use crate::report::{Record, Report};
use crate::scalars::CycloScalar;
use crate::wreath::{mult, trace, BGammaBasisElem, WreathElem};

use Functor::{P, Q};

/// A relation suite: one of H1..H20 or one of the six isotopy identities.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Relation {
    H(u8),
    Isotopy(u8),
}

impl Relation {
    /// H1..H20 followed by isotopy1..isotopy6.
    pub fn all() -> Vec<Relation> {
        (1..=20).map(Relation::H).chain((1..=6).map(Relation::Isotopy)).collect()
    }

    pub fn name(&self) -> String {
        match self {
            Relation::H(k) => format!("H{k}"),
            Relation::Isotopy(k) => format!("isotopy{k}"),
        }
    }

    /// Largest algebra rank any carrier of the suite uses at rank n.
    fn max_rank(&self, n: usize) -> usize {
        match self {
            Relation::H(7) => n + 3,
            Relation::H(1 | 2 | 6 | 8 | 12 | 13 | 14 | 19) => n + 2,
            Relation::Isotopy(4 | 5) => n + 2,
            Relation::Isotopy(6) => n + 4,
            _ => n + 1,
        }
    }

    /// Smallest rank at which every part of the suite is defined.
    fn min_rank(&self) -> usize {
        match self {
            Relation::H(9 | 10) | Relation::Isotopy(2 | 3) => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        let parse = |digits: &str, max: u8| digits.parse::<u8>().ok().filter(|k| (1..=max).contains(k));
        let rel = if let Some(d) = lower.strip_prefix("isotopy").or_else(|| lower.strip_prefix("iso")) {
            parse(d, 6).map(Relation::Isotopy)
        } else if let Some(d) = lower.strip_prefix('h') {
            parse(d, 20).map(Relation::H)
        } else {
            None
        };
        rel.ok_or_else(|| Error::UnknownRelation(s.to_string()))
    }
}

/// Largest source carrier a suite may sweep.
pub const MAX_SOURCE_DIM: u64 = 131_072;

/// Whether the suite is defined at rank n and small enough to sweep exhaustively.
pub fn admissible(rel: Relation, n: usize, ell: u32) -> bool {
    let rank_cap = if rel == Relation::Isotopy(6) { 4 } else { 3 };
    if n < rel.min_rank() || rel.max_rank(n) > rank_cap {
        return false;
    }
    match source_handle(rel, n, ell) {
        Ok(h) => h.dim() <= MAX_SOURCE_DIM,
        Err(_) => false,
    }
}

fn source_handle(rel: Relation, n: usize, ell: u32) -> Result<BimoduleHandle> {
    let w: Vec<Functor> = match rel {
        Relation::H(1 | 2 | 6 | 8 | 13 | 14 | 19) => vec![P(n + 1), P(n)],
        Relation::H(3 | 15) => vec![Q(n), P(n)],
        Relation::H(4 | 11 | 16 | 20) => vec![Functor::Id(n)],
        Relation::H(5 | 12 | 17 | 18) => vec![P(n)],
        Relation::H(7) => vec![P(n + 2), P(n + 1), P(n)],
        Relation::H(9) => vec![P(n - 1), Q(n - 1)],
        Relation::H(10) => vec![Q(n), P(n)],
        Relation::Isotopy(1 | 4) => vec![P(n)],
        Relation::Isotopy(2 | 3) => vec![P(n), P(n - 1), Q(n - 1)],
        Relation::Isotopy(5) => vec![Q(n + 1), P(n + 1), P(n)],
        Relation::Isotopy(6) => vec![P(n + 3), P(n + 2), P(n + 1), P(n)],
        _ => return Err(Error::UnknownRelation(rel.name())),
    };
    BimoduleHandle::new(&w, ell)
}

/// One equation to check: a label and the two sides.
pub struct Case {
    pub label: String,
    pub lhs: BimodMap,
    pub rhs: BimodMap,
}

impl Case {
    fn new(label: impl Into<String>, lhs: BimodMap, rhs: BimodMap) -> Self {
        Case { label: label.into(), lhs, rhs }
    }
}

fn basis_labels(ell: u32) -> Vec<(BGammaBasisElem, WreathElem)> {
    BGammaBasisElem::all(ell).into_iter().map(|b| (b, label(b, ell))).collect()
}

fn sign(ell: u32, neg: bool) -> CycloScalar {
    CycloScalar::from_int(if neg { -1 } else { 1 }, ell)
}

/// The dual basis element of b as a rank-one element.
pub fn dual_label(ctx: &BimodContext, b: BGammaBasisElem) -> WreathElem {
    WreathElem::slot_combination(ctx.ell(), 1, 1, &ctx.dual().dual_terms(b))
}

/// X(b) for a possibly zero label, as the zero map of the right weight when b vanishes.
fn nat_x_or_zero(ctx: &BimodContext, n: usize, b: &WreathElem, z: i32) -> Result<BimodMap> {
    if b.is_zero() {
        let h = BimoduleHandle::p(n, ctx.ell());
        return Ok(BimodMap::zero(&h, &h, BiDegree::new(z, 0)));
    }
    nat_x(ctx, n, b)
}

fn nat_y_or_zero(ctx: &BimodContext, n: usize, b: &WreathElem, z: i32) -> Result<BimodMap> {
    if b.is_zero() {
        let h = BimoduleHandle::q(n, ctx.ell());
        return Ok(BimodMap::zero(&h, &h, BiDegree::new(z, 0)));
    }
    nat_y(ctx, n, b)
}

/// Builds the cases of a suite at rank n.
pub fn cases(ctx: &BimodContext, rel: Relation, n: usize) -> Result<Vec<Case>> {
    let ell = ctx.ell();
    let wh = |m: BimodMap, l: &[Functor], r: &[Functor]| m.whisker(ctx, l, r);
    let chain = BimodMap::chain;
    let mut out = Vec::new();
    match rel {
        Relation::H(1) | Relation::H(2) => {
            let t = nat_t(ctx, n)?;
            for (b, lb) in basis_labels(ell) {
                let outer = wh(nat_x(ctx, n + 1, &lb)?, &[], &[P(n)])?;
                let inner = wh(nat_x(ctx, n, &lb)?, &[P(n + 1)], &[])?;
                let (lhs, rhs) = if rel == Relation::H(1) {
                    (chain(&[t.clone(), outer])?, chain(&[inner, t.clone()])?)
                } else {
                    (chain(&[outer, t.clone()])?, chain(&[t.clone(), inner])?)
                };
                out.push(Case::new(format!("b={b}"), lhs, rhs));
            }
        }
        Relation::H(3) => {
            let cqp = adj_qp_counit(ctx, n)?;
            let cpq = adj_pq_counit(ctx, n)?;
            for (b, lb) in basis_labels(ell) {
                let lhs = chain(&[cqp.clone(), wh(nat_y(ctx, n, &lb)?, &[], &[P(n)])?])?;
                let rhs = chain(&[cqp.clone(), wh(nat_x(ctx, n, &lb)?, &[Q(n)], &[])?])?;
                out.push(Case::new(format!("counit_qp b={b}"), lhs, rhs));
                let lhs = chain(&[cpq.clone(), wh(nat_x(ctx, n, &lb)?, &[], &[Q(n)])?])?;
                let rhs = chain(&[cpq.clone(), wh(nat_y(ctx, n, &lb)?, &[P(n)], &[])?])?;
                out.push(Case::new(format!("counit_pq b={b}"), lhs, rhs));
            }
        }
        Relation::H(4) => {
            let uqp = adj_qp_unit(ctx, n)?;
            let upq = adj_pq_unit(ctx, n)?;
            for (b, lb) in basis_labels(ell) {
                let lhs = chain(&[wh(nat_y(ctx, n, &lb)?, &[], &[P(n)])?, uqp.clone()])?;
                let rhs = chain(&[wh(nat_x(ctx, n, &lb)?, &[Q(n)], &[])?, uqp.clone()])?;
                out.push(Case::new(format!("unit_qp b={b}"), lhs, rhs));
                let lhs = chain(&[wh(nat_x(ctx, n, &lb)?, &[], &[Q(n)])?, upq.clone()])?;
                let rhs = chain(&[wh(nat_y(ctx, n, &lb)?, &[P(n)], &[])?, upq.clone()])?;
                out.push(Case::new(format!("unit_pq b={b}"), lhs, rhs));
            }
        }
        Relation::H(5) => {
            for (b, lb) in basis_labels(ell) {
                for (bp, lbp) in basis_labels(ell) {
                    let prod = mult(&lbp, &lb)?;
                    let z = (b.degree() + bp.degree()) as i32;
                    let koszul = b.degree() * bp.degree() % 2 == 1;
                    let lhs = nat_x_or_zero(ctx, n, &prod, z)?;
                    let rhs = chain(&[nat_x(ctx, n, &lb)?, nat_x(ctx, n, &lbp)?])?.scale(&sign(ell, koszul));
                    out.push(Case::new(format!("X b={b} b'={bp}"), lhs, rhs));
                    let lhs = nat_y_or_zero(ctx, n, &prod, z)?;
                    let rhs = chain(&[nat_y(ctx, n, &lbp)?, nat_y(ctx, n, &lb)?])?;
                    out.push(Case::new(format!("Y b={b} b'={bp}"), lhs, rhs));
                }
            }
        }
        Relation::H(6) => {
            for (b, lb) in basis_labels(ell) {
                for (bp, lbp) in basis_labels(ell) {
                    let outer = wh(nat_x(ctx, n + 1, &lbp)?, &[], &[P(n)])?;
                    let inner = wh(nat_x(ctx, n, &lb)?, &[P(n + 1)], &[])?;
                    let koszul = b.degree() * bp.degree() % 2 == 1;
                    let lhs = chain(&[outer.clone(), inner.clone()])?;
                    let rhs = chain(&[inner, outer])?.scale(&sign(ell, koszul));
                    out.push(Case::new(format!("b={b} b'={bp}"), lhs, rhs));
                }
            }
        }
        Relation::H(7) => {
            let a = wh(nat_t(ctx, n + 1)?, &[], &[P(n)])?;
            let b = wh(nat_t(ctx, n)?, &[P(n + 2)], &[])?;
            out.push(Case::new("braid", chain(&[a.clone(), b.clone(), a.clone()])?, chain(&[b.clone(), a, b])?));
        }
        Relation::H(8) => {
            let t = nat_t(ctx, n)?;
            out.push(Case::new("T T", chain(&[t.clone(), t.clone()])?, BimodMap::identity(t.source())));
        }
        Relation::H(9) => {
            let lhs = chain(&[nat_tmp(ctx, n)?, nat_tpm(ctx, n)?])?;
            let id = BimodMap::identity(lhs.source());
            out.push(Case::new("T-+ T+-", lhs, id));
        }
        Relation::H(10) => {
            out.push(Case::new("T+- T-+", h10_lhs(ctx, n)?, h10_rhs(ctx, n)?));
        }
        Relation::H(11) => {
            let unit = adj_qp_unit(ctx, n)?;
            let counit = adj_qp_counit(ctx, n)?;
            for (b, lb) in basis_labels(ell) {
                let lhs = chain(&[counit.clone(), wh(nat_x(ctx, n, &lb)?, &[Q(n)], &[])?, unit.clone()])?;
                let tr = trace(&lb)?;
                let rhs = if tr.is_zero() {
                    BimodMap::zero(lhs.source(), lhs.target(), lhs.weight())
                } else {
                    BimodMap::identity(lhs.source()).scale(&tr)
                };
                out.push(Case::new(format!("b={b}"), lhs, rhs));
            }
        }
        Relation::H(12) => {
            let lhs = chain(&[
                wh(adj_qp_counit(ctx, n + 1)?, &[], &[P(n)])?,
                wh(nat_t(ctx, n)?, &[Q(n + 1)], &[])?,
                wh(adj_qp_unit(ctx, n + 1)?, &[], &[P(n)])?,
            ])?;
            let zero = BimodMap::zero(lhs.source(), lhs.target(), lhs.weight());
            out.push(Case::new("left curl", lhs, zero));
        }
        Relation::H(13) | Relation::H(14) => {
            let t = nat_t(ctx, n)?;
            let outer = wh(nat_xc(ctx, n + 1)?, &[], &[P(n)])?;
            let inner = wh(nat_xc(ctx, n)?, &[P(n + 1)], &[])?;
            let (lhs, rhs) = if rel == Relation::H(13) {
                (chain(&[t.clone(), outer])?, chain(&[inner, t])?)
            } else {
                (chain(&[outer, t.clone()])?, chain(&[t, inner])?)
            };
            out.push(Case::new("Xc", lhs, rhs));
        }
        Relation::H(15) => {
            let cpq = adj_pq_counit(ctx, n)?;
            let cqp = adj_qp_counit(ctx, n)?;
            let lhs = chain(&[cpq.clone(), wh(nat_xc(ctx, n)?, &[], &[Q(n)])?])?;
            let rhs = chain(&[cpq, wh(nat_yc(ctx, n)?, &[P(n)], &[])?])?;
            out.push(Case::new("counit_pq", lhs, rhs));
            let lhs = chain(&[cqp.clone(), wh(nat_yc(ctx, n)?, &[], &[P(n)])?])?;
            let rhs = chain(&[cqp, wh(nat_xc(ctx, n)?, &[Q(n)], &[])?])?.neg();
            out.push(Case::new("counit_qp", lhs, rhs));
        }
        Relation::H(16) => {
            let uqp = adj_qp_unit(ctx, n)?;
            let upq = adj_pq_unit(ctx, n)?;
            let lhs = chain(&[wh(nat_yc(ctx, n)?, &[], &[P(n)])?, uqp.clone()])?;
            let rhs = chain(&[wh(nat_xc(ctx, n)?, &[Q(n)], &[])?, uqp])?;
            out.push(Case::new("unit_qp", lhs, rhs));
            let lhs = chain(&[wh(nat_xc(ctx, n)?, &[], &[Q(n)])?, upq.clone()])?;
            let rhs = chain(&[wh(nat_yc(ctx, n)?, &[P(n)], &[])?, upq])?.neg();
            out.push(Case::new("unit_pq", lhs, rhs));
        }
        Relation::H(17) => {
            let xc = nat_xc(ctx, n)?;
            out.push(Case::new("Xc Xc", chain(&[xc.clone(), xc.clone()])?, BimodMap::identity(xc.source()).neg()));
            let yc = nat_yc(ctx, n)?;
            out.push(Case::new("Yc Yc", chain(&[yc.clone(), yc.clone()])?, BimodMap::identity(yc.source())));
        }
        Relation::H(18) => {
            let xc = nat_xc(ctx, n)?;
            for (b, lb) in basis_labels(ell) {
                let xb = nat_x(ctx, n, &lb)?;
                out.push(Case::new(format!("b={b}"), chain(&[xb.clone(), xc.clone()])?, chain(&[xc.clone(), xb])?));
            }
        }
        Relation::H(19) => {
            let outer = wh(nat_xc(ctx, n + 1)?, &[], &[P(n)])?;
            let inner = wh(nat_xc(ctx, n)?, &[P(n + 1)], &[])?;
            out.push(Case::new(
                "Xc anticommute",
                chain(&[outer.clone(), inner.clone()])?,
                chain(&[inner, outer])?.neg(),
            ));
        }
        Relation::H(20) => {
            let unit = adj_qp_unit(ctx, n)?;
            let counit = adj_qp_counit(ctx, n)?;
            let xc = wh(nat_xc(ctx, n)?, &[Q(n)], &[])?;
            for (b, lb) in basis_labels(ell) {
                let lhs = chain(&[counit.clone(), xc.clone(), wh(nat_x(ctx, n, &lb)?, &[Q(n)], &[])?, unit.clone()])?;
                let zero = BimodMap::zero(lhs.source(), lhs.target(), lhs.weight());
                out.push(Case::new(format!("b={b}"), lhs, zero));
            }
        }
        Relation::Isotopy(1) => {
            let p = BimoduleHandle::p(n, ell);
            let q = BimoduleHandle::q(n, ell);
            let zig = chain(&[wh(adj_pq_counit(ctx, n)?, &[], &[P(n)])?, wh(adj_qp_unit(ctx, n)?, &[P(n)], &[])?])?;
            out.push(Case::new("P counit_pq/unit_qp", zig, BimodMap::identity(&p)));
            let zag = chain(&[wh(adj_qp_counit(ctx, n)?, &[P(n)], &[])?, wh(adj_pq_unit(ctx, n)?, &[], &[P(n)])?])?;
            out.push(Case::new("P counit_qp/unit_pq", zag, BimodMap::identity(&p)));
            let zig = chain(&[wh(adj_qp_counit(ctx, n)?, &[], &[Q(n)])?, wh(adj_pq_unit(ctx, n)?, &[Q(n)], &[])?])?;
            out.push(Case::new("Q counit_qp/unit_pq", zig, BimodMap::identity(&q)));
            let zag = chain(&[wh(adj_pq_counit(ctx, n)?, &[Q(n)], &[])?, wh(adj_qp_unit(ctx, n)?, &[], &[Q(n)])?])?;
            out.push(Case::new("Q counit_pq/unit_qp", zag, BimodMap::identity(&q)));
        }
        Relation::Isotopy(2) => {
            let lhs = chain(&[wh(nat_t(ctx, n - 1)?, &[], &[Q(n - 1)])?, wh(adj_pq_unit(ctx, n - 1)?, &[P(n)], &[])?])?;
            let rhs = chain(&[wh(nat_tmp(ctx, n)?, &[P(n)], &[])?, wh(adj_pq_unit(ctx, n)?, &[], &[P(n)])?])?;
            out.push(Case::new("T / T-+", lhs, rhs));
            let lhs = chain(&[wh(nat_tmp(ctx, n)?, &[], &[Q(n)])?, wh(adj_pq_unit(ctx, n)?, &[Q(n)], &[])?])?;
            let rhs =
                chain(&[wh(nat_tqq(ctx, n - 1)?, &[P(n - 1)], &[])?, wh(adj_pq_unit(ctx, n - 1)?, &[], &[Q(n)])?])?;
            out.push(Case::new("T-+ / Tqq", lhs, rhs));
        }
        Relation::Isotopy(3) => {
            let lhs = chain(&[wh(adj_pq_counit(ctx, n)?, &[], &[P(n)])?, wh(nat_tpm(ctx, n)?, &[P(n)], &[])?])?;
            let rhs =
                chain(&[wh(adj_pq_counit(ctx, n - 1)?, &[P(n)], &[])?, wh(nat_t(ctx, n - 1)?, &[], &[Q(n - 1)])?])?;
            out.push(Case::new("T+- / T", lhs, rhs));
            let lhs =
                chain(&[wh(adj_pq_counit(ctx, n - 1)?, &[], &[Q(n)])?, wh(nat_tqq(ctx, n - 1)?, &[P(n - 1)], &[])?])?;
            let rhs = chain(&[wh(adj_pq_counit(ctx, n)?, &[Q(n)], &[])?, wh(nat_tpm(ctx, n)?, &[], &[Q(n)])?])?;
            out.push(Case::new("Tqq / T+-", lhs, rhs));
        }
        Relation::Isotopy(4) => {
            let lhs = chain(&[wh(nat_tpm(ctx, n + 1)?, &[], &[P(n)])?, wh(adj_qp_unit(ctx, n)?, &[P(n)], &[])?])?;
            let rhs = chain(&[wh(nat_t(ctx, n)?, &[Q(n + 1)], &[])?, wh(adj_qp_unit(ctx, n + 1)?, &[], &[P(n)])?])?;
            out.push(Case::new("T+- / T", lhs, rhs));
            let lhs = chain(&[wh(nat_tqq(ctx, n)?, &[], &[P(n + 1)])?, wh(adj_qp_unit(ctx, n + 1)?, &[Q(n)], &[])?])?;
            let rhs = chain(&[wh(nat_tpm(ctx, n + 1)?, &[Q(n)], &[])?, wh(adj_qp_unit(ctx, n)?, &[], &[Q(n)])?])?;
            out.push(Case::new("Tqq / T+-", lhs, rhs));
        }
        Relation::Isotopy(5) => {
            let lhs = chain(&[wh(adj_qp_counit(ctx, n + 1)?, &[], &[P(n)])?, wh(nat_t(ctx, n)?, &[Q(n + 1)], &[])?])?;
            let rhs = chain(&[wh(adj_qp_counit(ctx, n)?, &[P(n)], &[])?, wh(nat_tmp(ctx, n + 1)?, &[], &[P(n)])?])?;
            out.push(Case::new("T / T-+", lhs, rhs));
            if n >= 1 {
                let lhs = chain(&[
                    wh(adj_qp_counit(ctx, n - 1)?, &[], &[Q(n - 1)])?,
                    wh(nat_tmp(ctx, n)?, &[Q(n - 1)], &[])?,
                ])?;
                let rhs =
                    chain(&[wh(adj_qp_counit(ctx, n)?, &[Q(n - 1)], &[])?, wh(nat_tqq(ctx, n - 1)?, &[], &[P(n)])?])?;
                out.push(Case::new("T-+ / Tqq", lhs, rhs));
            }
        }
        Relation::Isotopy(6) => {
            let a = wh(nat_t(ctx, n + 2)?, &[], &[P(n + 1), P(n)])?;
            let b = wh(nat_t(ctx, n)?, &[P(n + 3), P(n + 2)], &[])?;
            out.push(Case::new("far commutation", chain(&[a.clone(), b.clone()])?, chain(&[b, a])?));
        }
        _ => return Err(Error::UnknownRelation(rel.name())),
    }
    Ok(out)
}

/// T_{+-} T_{-+} on Q(n)P(n).
pub fn h10_lhs(ctx: &BimodContext, n: usize) -> Result<BimodMap> {
    BimodMap::chain(&[nat_tpm(ctx, n)?, nat_tmp(ctx, n)?])
}

/// The two correction sums of H10 without the identity:
/// sum_b Y(dual b) unit counit Y(b) - sum_b Yc Y(dual b) unit counit Y(b) (Id Xc).
pub fn h10_corrections(ctx: &BimodContext, n: usize) -> Result<BimodMap> {
    let ell = ctx.ell();
    let wh = |m: BimodMap, l: &[Functor], r: &[Functor]| m.whisker(ctx, l, r);
    let unit = adj_qp_unit(ctx, n)?;
    let counit = adj_qp_counit(ctx, n)?;
    let yc = wh(nat_yc(ctx, n)?, &[], &[P(n)])?;
    let xc = wh(nat_xc(ctx, n)?, &[Q(n)], &[])?;
    let mut terms = Vec::new();
    for b in BGammaBasisElem::all(ell) {
        let yb = wh(nat_y(ctx, n, &label(b, ell))?, &[], &[P(n)])?;
        let ydual = wh(nat_y(ctx, n, &dual_label(ctx, b))?, &[], &[P(n)])?;
        let core = BimodMap::chain(&[ydual, unit.clone(), counit.clone(), yb])?;
        terms.push((CycloScalar::one(ell), core.clone()));
        terms.push((CycloScalar::from_int(-1, ell), BimodMap::chain(&[yc.clone(), core, xc.clone()])?));
    }
    Ok(BimodMap::linear_combination(&terms)?.renamed("corrections"))
}

/// Id minus the corrections.
pub fn h10_rhs(ctx: &BimodContext, n: usize) -> Result<BimodMap> {
    let corr = h10_corrections(ctx, n)?;
    BimodMap::identity(corr.source()).sub(&corr)
}

/// Runs every case of a suite and folds them into one record.
pub fn run_suite(ctx: &BimodContext, rel: Relation, n: usize) -> Result<Record> {
    let ell = ctx.ell();
    if !admissible(rel, n, ell) {
        return Err(Error::OutOfRange(format!("{rel} is not admissible at n={n}, l={ell}")));
    }
    let start = Instant::now();
    let mut rec = Record::new(rel.name()).with_n(n).with_ell(ell);
    for case in cases(ctx, rel, n)? {
        let (checked, failure) = case.lhs.agree_with(&case.rhs)?;
        rec.absorb(checked, failure.map(|f| format!("{} [{}]: {f}", rel, case.label)));
    }
    if rel == Relation::H(11) {
        let om = label(BGammaBasisElem::OMEGA, ell);
        let lhs = BimodMap::chain(&[
            adj_qp_counit(ctx, n)?,
            nat_x(ctx, n, &om)?.whisker(ctx, &[Q(n)], &[])?,
            adj_qp_unit(ctx, n)?,
        ])?;
        let one = crate::wreath::WreathBasisWord::identity(n);
        let image = lhs.apply(&super::carrier::Key::plain(one));
        let scalar = image.coeff(&super::carrier::Key::plain(one)).cloned().unwrap_or_else(|| CycloScalar::zero(ell));
        rec = rec.with_param("trace_omega", scalar.to_string());
    }
    Ok(rec.timed(start))
}

/// verify_H: the suite H1..H20 at rank n.
pub fn verify_h(ctx: &BimodContext, k: u8, n: usize) -> Result<Report> {
    if !(1..=20).contains(&k) {
        return Err(Error::UnknownRelation(format!("H{k}")));
    }
    Ok(Report::single(run_suite(ctx, Relation::H(k), n)?))
}

/// verify_isotopy: identity 1..6 at rank n.
pub fn verify_isotopy(ctx: &BimodContext, k: u8, n: usize) -> Result<Report> {
    if !(1..=6).contains(&k) {
        return Err(Error::UnknownRelation(format!("isotopy{k}")));
    }
    Ok(Report::single(run_suite(ctx, Relation::Isotopy(k), n)?))
}

/// Every admissible suite for the given ranks and group orders.
pub fn verify_all(ranks: &[usize], ells: &[u32], faults: super::context::BimodFaults) -> Result<Report> {
    let mut rep = Report::new();
    for &ell in ells {
        let ctx = BimodContext::with_faults(ell, faults)?;
        for rel in Relation::all() {
            for &n in ranks {
                if admissible(rel, n, ell) {
                    rep.push(run_suite(&ctx, rel, n)?);
                }
            }
        }
    }
    Ok(rep)
}

/// Every constructor at rank n, for linearity sweeps.
pub fn constructors(ctx: &BimodContext, n: usize) -> Result<Vec<BimodMap>> {
    let ell = ctx.ell();
    let mut out = Vec::new();
    for (b, lb) in basis_labels(ell) {
        out.push(nat_x(ctx, n, &lb)?.renamed(format!("X({b})")));
        out.push(nat_y(ctx, n, &lb)?.renamed(format!("Y({b})")));
    }
    out.extend([nat_xc(ctx, n)?, nat_yc(ctx, n)?]);
    out.extend([adj_qp_counit(ctx, n)?, adj_qp_unit(ctx, n)?, adj_pq_counit(ctx, n)?, adj_pq_unit(ctx, n)?]);
    if n >= 1 {
        out.extend([nat_t(ctx, n - 1)?, nat_tqq(ctx, n - 1)?, nat_tmp(ctx, n)?, nat_tpm(ctx, n)?]);
    }
    Ok(out)
}

/// Left and right linearity of every constructor at rank n, over all generators and source keys.
pub fn verify_linearity(ctx: &BimodContext, n: usize) -> Result<Report> {
    let mut rep = Report::new();
    for m in constructors(ctx, n)? {
        let start = Instant::now();
        let mut rec = Record::new(format!("linearity/{}", m.name())).with_n(n).with_ell(ctx.ell());
        let (checked, failure) = m.first_nonlinearity(ctx);
        rec.absorb(checked, failure);
        rep.push(rec.timed(start));
    }
    Ok(rep)
}
