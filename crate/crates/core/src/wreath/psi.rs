//! Symmetrizers, character idempotents and graded dimensions.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::bgamma::{BGammaBasisElem, Ext};
use super::elem::{mult, WreathElem};
use super::perm::{Permutation, MAX_RANK};
use super::word::WreathBasisWord;
use crate::error::{Error, Result};
use crate::report::{Record, Report};
use crate::scalars::{CycloScalar, GradedDim};

/// Rank of the symmetric group the slide and nested identities are embedded in.
pub const PSI_AMBIENT: usize = 6;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// (1/n!) times the sum of all permutations of {i+1, ..., i+n}, inside S_ambient.
pub fn psi_shift(i: usize, n: usize, ambient: usize) -> Result<WreathElem> {
    if i + n > ambient || ambient > MAX_RANK {
        return Err(Error::OutOfRange(format!("offset {i} + rank {n} exceeds ambient rank {ambient}")));
    }
    let coeff = CycloScalar::from_rational(BigRational::new(1.into(), factorial(n)), 1);
    let mut out = WreathElem::zero(1, ambient);
    for p in Permutation::all(n) {
        let mut images: Vec<usize> = (1..=ambient).collect();
        for j in 1..=n {
            images[i + j - 1] = i + p.apply(j);
        }
        let w = Permutation::from_images(&images)?;
        out.add_term(WreathBasisWord::from_perm(ambient, &w), &coeff);
    }
    Ok(out)
}

/// The symmetrizer of S_n.
pub fn psi(n: usize) -> WreathElem {
    psi_shift(0, n, n).expect("valid rank")
}

fn chain(ambient: usize, from: usize, to: usize) -> WreathElem {
    // s_from s_{from+1} ... s_to when from <= to, descending otherwise
    let mut acc = WreathElem::one(1, ambient);
    let steps: Vec<usize> = if from <= to { (from..=to).collect() } else { (to..=from).rev().collect() };
    for k in steps {
        acc = &acc * &WreathElem::s(1, ambient, k);
    }
    acc
}

/// Idempotency, absorption, slide and nested absorption of the symmetrizer.
pub fn verify_psi_suite(n: usize) -> Report {
    let mut report = Report::new();
    let t = Instant::now();
    let p = psi(n);
    let mut idem = Record::new("psi-idempotent").with_n(n);
    idem.check(&p * &p == p, || format!("psi({n})^2 != psi({n})"));
    report.push(idem.timed(t));

    let t = Instant::now();
    let mut absorb = Record::new("psi-absorb").with_n(n);
    for k in 1..n {
        let s = WreathElem::s(1, n, k);
        absorb.check(&s * &p == p, || format!("s{k} psi != psi"));
        absorb.check(&p * &s == p, || format!("psi s{k} != psi"));
    }
    if n == 1 {
        absorb.check(p == WreathElem::one(1, 1), || "psi(1) != 1".into());
    }
    report.push(absorb.timed(t));

    let t = Instant::now();
    let ambient = PSI_AMBIENT.max(n + 1);
    let mut slide = Record::new("psi-slide").with_n(n).with_param("ambient", ambient);
    for i in 0..ambient - n {
        let lo = psi_shift(i, n, ambient).expect("in range");
        let hi = psi_shift(i + 1, n, ambient).expect("in range");
        let up = chain(ambient, i + 1, i + n);
        let down = chain(ambient, i + n, i + 1);
        slide.check(&up * &lo == &hi * &up, || format!("ascending slide fails at offset {i}"));
        slide.check(&down * &hi == &lo * &down, || format!("descending slide fails at offset {i}"));
    }
    report.push(slide.timed(t));

    let t = Instant::now();
    let mut nested = Record::new("psi-nested").with_n(n).with_param("ambient", ambient);
    for m in 0..=ambient - n {
        let big = psi(m + n).embed(ambient);
        for i in 0..=m {
            let small = psi_shift(i, n, ambient).expect("in range");
            nested.check(&big * &small == big, || format!("psi({}) psi^{i}({n}) != psi({})", m + n, m + n));
            nested.check(&small * &big == big, || format!("psi^{i}({n}) psi({}) != psi({})", m + n, m + n));
        }
    }
    report.push(nested.timed(t));
    report
}

/// The character idempotent (1/l) sum_k zeta^{-ik} g^k of C[Gamma] inside B^Gamma.
pub fn char_idempotent(ell: u32, i: u32) -> Result<WreathElem> {
    if i >= ell {
        return Err(Error::OutOfRange(format!("character {i} of a group of order {ell}")));
    }
    let inv = CycloScalar::from_frac(1, ell as i64, ell);
    let mut out = WreathElem::zero(ell, 1);
    for k in 0..ell {
        let c = &CycloScalar::zeta_pow(ell, -((i * k) as i64)) * &inv;
        out.add_term(WreathBasisWord::slot(1, 1, BGammaBasisElem::new(Ext::One, k), ell), &c);
    }
    Ok(out)
}

/// Places a rank-one element in slot j of B_n.
pub fn in_slot(x: &WreathElem, n: usize, j: usize) -> WreathElem {
    let ell = x.ell();
    let mut out = WreathElem::zero(ell, n);
    for (w, c) in x.terms() {
        debug_assert!(w.rank() == 1 && w.cliff == 0);
        out.add_term(WreathBasisWord::slot(n, j, w.tensor_entry(1, ell), ell), c);
    }
    out
}

/// Candidate for e_{i,1,(n)}: the symmetrizer times e_i in every slot.
pub fn e_candidate(ell: u32, i: u32, n: usize) -> Result<WreathElem> {
    let e = char_idempotent(ell, i)?;
    let mut acc = psi(n).relevel(ell)?;
    for j in 1..=n {
        acc = mult(&acc, &in_slot(&e, n, j))?;
    }
    Ok(acc)
}

/// Sum over all basis words of q^{Z-degree} pi^{Z2-degree}.
pub fn graded_dimension(n: usize, ell: u32) -> GradedDim {
    let mut g = GradedDim::zero();
    for w in WreathBasisWord::all(n, ell) {
        g.add_term(w.z_degree(ell) as i64, w.parity(), &BigInt::from(1));
    }
    g
}

/// (4l)^n 2^n n!.
pub fn dimension(n: usize, ell: u32) -> u64 {
    (4 * ell as u64).pow(n as u32) * (1u64 << n) * (1..=n as u64).product::<u64>()
}
