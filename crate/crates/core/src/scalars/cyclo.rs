//! Exact elements of the cyclotomic field Q(zeta_l) in the power basis.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest level for which reduction tables are built (levels of mixed operands embed into their lcm).
pub const MAX_TABLE_LEVEL: u32 = 60;

/// Default configuration cap on the group order.
pub const DEFAULT_LEVEL_CAP: u32 = 6;

pub(crate) struct LevelTable {
    /// Monic cyclotomic polynomial, ascending coefficients.
    phi: Vec<BigInt>,
    degree: usize,
    /// Reduced coordinates of zeta^k for k in 0..level.
    zeta_pows: Vec<Vec<BigRational>>,
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Ascending coefficients of the l-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(level: u32) -> Vec<BigInt> {
    assert!(level >= 1, "cyclotomic level must be positive");
    let mut num = vec![BigInt::zero(); level as usize + 1];
    num[0] = -BigInt::one();
    num[level as usize] = BigInt::one();
    for d in 1..level {
        if level.is_multiple_of(d) {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

impl LevelTable {
    fn build(level: u32) -> Self {
        let phi = cyclotomic_polynomial(level);
        let degree = phi.len() - 1;
        let mut zeta_pows = Vec::with_capacity(level as usize);
        let mut cur = vec![BigRational::zero(); degree];
        cur[0] = BigRational::one();
        for _ in 0..level {
            zeta_pows.push(cur.clone());
            let mut next = vec![BigRational::zero(); degree + 1];
            for (j, c) in cur.iter().enumerate() {
                next[j + 1] = c.clone();
            }
            cur = reduce_with(&phi, degree, next);
        }
        LevelTable { phi, degree, zeta_pows }
    }
}

fn reduce_with(phi: &[BigInt], degree: usize, mut poly: Vec<BigRational>) -> Vec<BigRational> {
    while poly.len() > degree {
        let top = poly.len() - 1;
        let c = poly.pop().expect("nonempty");
        if c.is_zero() {
            continue;
        }
        for (j, p) in phi.iter().enumerate().take(degree) {
            if !p.is_zero() {
                poly[top - degree + j] -= &c * BigRational::from_integer(p.clone());
            }
        }
    }
    poly.resize(degree, BigRational::zero());
    poly
}

pub(crate) fn table(level: u32) -> &'static LevelTable {
    static TABLES: [OnceLock<LevelTable>; MAX_TABLE_LEVEL as usize + 1] =
        [const { OnceLock::new() }; MAX_TABLE_LEVEL as usize + 1];
    assert!((1..=MAX_TABLE_LEVEL).contains(&level), "cyclotomic level {level} outside 1..={MAX_TABLE_LEVEL}");
    TABLES[level as usize].get_or_init(|| LevelTable::build(level))
}

/// Euler totient, the dimension of Q(zeta_l) over Q.
pub fn totient(level: u32) -> usize {
    table(level).degree
}

/// An exact element of Q(zeta_l).
#[derive(Clone, Debug)]
pub struct CycloScalar {
    level: u32,
    coeffs: Vec<BigRational>,
}

impl CycloScalar {
    pub fn zero(level: u32) -> Self {
        let d = table(level).degree;
        CycloScalar { level, coeffs: vec![BigRational::zero(); d] }
    }

    pub fn one(level: u32) -> Self {
        Self::from_rational(BigRational::one(), level)
    }

    pub fn from_rational(q: BigRational, level: u32) -> Self {
        let mut s = Self::zero(level);
        s.coeffs[0] = q;
        s
    }

    pub fn from_int(n: i64, level: u32) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()), level)
    }

    pub fn from_frac(num: i64, den: i64, level: u32) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()), level)
    }

    /// zeta_l^k for any integer k.
    pub fn zeta_pow(level: u32, k: i64) -> Self {
        let t = table(level);
        let idx = k.rem_euclid(level as i64) as usize;
        CycloScalar { level, coeffs: t.zeta_pows[idx].clone() }
    }

    /// Builds an element from power-basis coordinates of any length, reducing modulo the cyclotomic polynomial.
    pub fn from_power_coeffs(level: u32, coeffs: Vec<BigRational>) -> Self {
        let t = table(level);
        let mut acc = Self::zero(level);
        for (k, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < t.degree {
                acc.coeffs[k] += c;
            } else {
                let z = &t.zeta_pows[k % level as usize];
                for (a, b) in acc.coeffs.iter_mut().zip(z) {
                    *a += &c * b;
                }
            }
        }
        acc
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Re-expresses the element at a level that is a multiple of the current one.
    pub fn embed(&self, level: u32) -> Self {
        if level == self.level {
            return self.clone();
        }
        assert!(level.is_multiple_of(self.level), "cannot embed level {} into {}", self.level, level);
        let step = (level / self.level) as usize;
        let mut spread = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            spread[k * step] = c.clone();
        }
        Self::from_power_coeffs(level, spread)
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        if a.level == b.level {
            return (a.clone(), b.clone());
        }
        let l = a.level.lcm(&b.level);
        (a.embed(l), b.embed(l))
    }

    fn mul_same(&self, other: &Self) -> Self {
        let t = table(self.level);
        match (self.as_rational(), other.as_rational()) {
            (Some(a), _) => return other.scale_unit_or_rational(a),
            (None, Some(b)) => return self.scale_unit_or_rational(b),
            (None, None) => {}
        }
        let mut prod = vec![BigRational::zero(); 2 * t.degree - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        CycloScalar { level: self.level, coeffs: reduce_with(&t.phi, t.degree, prod) }
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Self::from_rational(q.recip(), self.level));
        }
        let t = table(self.level);
        let d = t.degree;
        // Columns are zeta^j * self; solve M x = e_0.
        let mut cols = Vec::with_capacity(d);
        for j in 0..d {
            cols.push(self.mul_same(&Self::zeta_pow(self.level, j as i64)).coeffs);
        }
        let mut m: Vec<Vec<BigRational>> = (0..d)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..d).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        let sol = solve_augmented(&mut m)?;
        Some(CycloScalar { level: self.level, coeffs: sol })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let inv = other.inv().ok_or(Error::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut acc = Self::one(self.level);
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            k >>= 1;
        }
        acc
    }

    /// Complex conjugate, zeta to zeta^-1.
    pub fn conj(&self) -> Self {
        let mut acc = Self::zero(self.level);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += &(&Self::zeta_pow(self.level, -(k as i64)) * &Self::from_rational(c.clone(), self.level));
            }
        }
        acc
    }

    fn scale_unit_or_rational(&self, q: &BigRational) -> Self {
        if q.is_one() {
            self.clone()
        } else if (-q).is_one() {
            -self
        } else {
            self.scale_rational(q)
        }
    }

    fn scale_rational(&self, q: &BigRational) -> Self {
        CycloScalar { level: self.level, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }
}

/// Solves an augmented square system in place by Gauss-Jordan elimination.
fn solve_augmented(m: &mut [Vec<BigRational>]) -> Option<Vec<BigRational>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for v in m[col].iter_mut() {
            *v /= &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (v, pv) in m[r].iter_mut().zip(pivot_row.iter()) {
                    *v -= &f * pv;
                }
            }
        }
    }
    Some(m.iter().map(|row| row[n].clone()).collect())
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.level == other.level {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloScalar {}

impl<'a> Add<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: &CycloScalar) -> CycloScalar {
        if self.level == rhs.level {
            let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
            return CycloScalar { level: self.level, coeffs };
        }
        let (a, b) = CycloScalar::aligned(self, rhs);
        &a + &b
    }
}

impl<'a> Sub<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: &CycloScalar) -> CycloScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        if self.level == rhs.level {
            return self.mul_same(rhs);
        }
        if let Some(q) = rhs.as_rational() {
            return self.scale_rational(q).embed_to_lcm(rhs.level);
        }
        if let Some(q) = self.as_rational() {
            return rhs.scale_rational(q).embed_to_lcm(self.level);
        }
        let (a, b) = CycloScalar::aligned(self, rhs);
        a.mul_same(&b)
    }
}

impl CycloScalar {
    fn embed_to_lcm(self, other_level: u32) -> Self {
        let l = self.level.lcm(&other_level);
        if l == self.level {
            self
        } else {
            self.embed(l)
        }
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar { level: self.level, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: CycloScalar) -> CycloScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: &CycloScalar) -> CycloScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&CycloScalar> for CycloScalar {
    fn add_assign(&mut self, rhs: &CycloScalar) {
        if self.level == rhs.level {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&CycloScalar> for CycloScalar {
    fn sub_assign(&mut self, rhs: &CycloScalar) {
        if self.level == rhs.level {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a -= b;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&CycloScalar> for CycloScalar {
    fn mul_assign(&mut self, rhs: &CycloScalar) {
        *self = &*self * rhs;
    }
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycloScalar {
    /// Renders as a sum in the power basis with `z` standing for zeta, e.g. `1/2 - 3z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = c.is_negative();
            if first {
                if sign {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if sign { " - " } else { " + " })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if k == 0 || !mag.is_one() {
                write!(f, "{}", fmt_rational(&mag))?;
            }
            write!(f, "{var}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
