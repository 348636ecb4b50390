//! Coefficients of the crossing expansion: strand-peeling recurrence against the closed forms.

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::report::{Record, Report};

/// Largest bound accepted by the check.
pub const MAX_CROSSING_BOUND: usize = 8;

/// Coefficients (alpha_k, beta_k) of a sum of alpha_k H^k + beta_k P H^(k-1),
/// where H is a hollow pair, P a plain pair, and two plain pairs multiply to zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairExpansion {
    pub alpha: Vec<BigInt>,
    pub beta: Vec<BigInt>,
}

impl PairExpansion {
    fn one() -> Self {
        PairExpansion { alpha: vec![BigInt::one()], beta: vec![BigInt::zero()] }
    }

    fn coeff(v: &[BigInt], k: usize) -> BigInt {
        v.get(k).cloned().unwrap_or_default()
    }
}

/// Expansion for b strands against d strands, peeling one of the d strands per step:
/// D(b, d) = D(b, d-1) + b eps H D(b-1, d-1) - b eps P D(b-1, d-1).
pub fn peel_expansion(
    b: usize,
    d: usize,
    eps: i64,
    memo: &mut HashMap<(usize, usize), PairExpansion>,
) -> PairExpansion {
    if b == 0 || d == 0 {
        return PairExpansion::one();
    }
    if let Some(x) = memo.get(&(b, d)) {
        return x.clone();
    }
    let keep = peel_expansion(b, d - 1, eps, memo);
    let inner = peel_expansion(b - 1, d - 1, eps, memo);
    let w = BigInt::from(b as i64 * eps);
    let len = keep.alpha.len().max(inner.alpha.len() + 1);
    let mut out = PairExpansion { alpha: vec![BigInt::zero(); len], beta: vec![BigInt::zero(); len] };
    for k in 0..len {
        let mut a = PairExpansion::coeff(&keep.alpha, k);
        let mut bt = PairExpansion::coeff(&keep.beta, k);
        if k >= 1 {
            let ia = PairExpansion::coeff(&inner.alpha, k - 1);
            let ib = PairExpansion::coeff(&inner.beta, k - 1);
            // H H^(k-1) = H^k, H P H^(k-2) = P H^(k-1), P H^(k-1) = P H^(k-1), P P = 0.
            a += &w * &ia;
            bt += &w * &ib;
            bt -= &w * &ia;
        }
        out.alpha[k] = a;
        out.beta[k] = bt;
    }
    memo.insert((b, d), out.clone());
    out
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// alpha_{b,d,k} = eps^k k! C(b,k) C(d,k).
pub fn alpha_closed(b: usize, d: usize, k: usize, eps: i64) -> BigInt {
    BigInt::from(eps).pow(k as u32) * factorial(k) * binomial(b, k) * binomial(d, k)
}

/// beta_{b,d,k} = -k alpha_{b,d,k}.
pub fn beta_closed(b: usize, d: usize, k: usize, eps: i64) -> BigInt {
    -BigInt::from(k) * alpha_closed(b, d, k, eps)
}

/// g_k = k! C(n,k) C(m,k) (-eps)^k.
pub fn normalizer(n: usize, m: usize, k: usize, eps: i64) -> BigRational {
    BigRational::from_integer(factorial(k) * binomial(n, k) * binomial(m, k) * BigInt::from(-eps).pow(k as u32))
}

/// (-1)^k eps^k / (k! C(r,k) C(s,k)).
pub fn dual_scalar(r: usize, s: usize, k: usize, eps: i64) -> Option<BigRational> {
    let den = factorial(k) * binomial(r, k) * binomial(s, k);
    if den.is_zero() {
        return None;
    }
    let num = BigInt::from(-1).pow(k as u32) * BigInt::from(eps).pow(k as u32);
    Some(BigRational::new(num, den))
}

/// Recurrence versus closed forms for all b <= bmax, d <= dmax and eps = +-1, plus the biorthogonality products.
pub fn crossing_coefficient_check(bmax: usize, dmax: usize) -> Result<Report> {
    if bmax > MAX_CROSSING_BOUND || dmax > MAX_CROSSING_BOUND {
        return Err(Error::OutOfRange(format!("crossing bounds must be at most {MAX_CROSSING_BOUND}")));
    }
    let mut rep = Report::new();
    for eps in [1i64, -1] {
        let t = Instant::now();
        let mut ra = Record::new("crossing/alpha").with_param("eps", eps).with_param("bound", format!("{bmax}x{dmax}"));
        let mut rb = Record::new("crossing/beta").with_param("eps", eps).with_param("bound", format!("{bmax}x{dmax}"));
        let mut memo = HashMap::new();
        for b in 0..=bmax {
            for d in 0..=dmax {
                let x = peel_expansion(b, d, eps, &mut memo);
                for k in 0..=b.max(d) + 1 {
                    let (a, want_a) = (PairExpansion::coeff(&x.alpha, k), alpha_closed(b, d, k, eps));
                    ra.check(a == want_a, || format!("alpha[{b},{d},{k}] = {a}, closed form {want_a}"));
                    let (be, want_b) = (PairExpansion::coeff(&x.beta, k), beta_closed(b, d, k, eps));
                    rb.check(be == want_b, || format!("beta[{b},{d},{k}] = {be}, closed form {want_b}"));
                }
            }
        }
        rep.push(ra.timed(t));
        rep.push(rb.timed(t));

        let t = Instant::now();
        let mut r = Record::new("crossing/biorthogonality").with_param("eps", eps);
        for n in 0..=bmax {
            for m in 0..=dmax {
                for k in 0..=n.min(m) {
                    let g = normalizer(n, m, k, eps);
                    match dual_scalar(n, m, k, eps) {
                        Some(s) => {
                            let p = &g * &s;
                            r.check(p.is_one(), || format!("g_{k} * scalar = {p} for (n, m) = ({n}, {m})"));
                        }
                        None => r.fail(format!("scalar undefined at k={k}, (n, m) = ({n}, {m})")),
                    }
                }
            }
        }
        rep.push(r.timed(t));
    }
    Ok(rep)
}
