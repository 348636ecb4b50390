//! Truncated formal power series in one variable t over Q.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclo::fmt_rational;
use crate::error::{Error, Result};

/// Coefficients of t^0..=t^N; everything above N is discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Builds a series from leading coefficients, padding or truncating to the order.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<BigRational>) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        PowerSeries { coeffs }
    }

    pub fn from_ints(order: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(order, coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inv(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        out[0] = c0.recip();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -acc / c0;
        }
        Ok(PowerSeries { coeffs: out })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.order());
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

impl<'a> Mul<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }
}

impl<'a> Add<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect() }
    }
}

impl<'a> Sub<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        self + &(-rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// ((1 - t)/(1 + t))^a truncated at order N, for the Cartan values a in {-1, 0, 1, 2}.
pub fn series_quotient_power(a: i64, order: usize) -> Result<PowerSeries> {
    if !(-1..=2).contains(&a) {
        return Err(Error::InvalidExponent(a));
    }
    let num = PowerSeries::from_ints(order, &[1, -1]);
    let den = PowerSeries::from_ints(order, &[1, 1]);
    num.checked_div(&den)?.powi(a)
}

impl fmt::Display for PowerSeries {
    /// Ascending powers, e.g. `1 - 4t + 8t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
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

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c.to_integer()).unwrap()).collect()
    }

    #[test]
    fn quotient_powers_expand() {
        assert_eq!(ints(&series_quotient_power(0, 3).unwrap()), vec![1, 0, 0, 0]);
        assert_eq!(ints(&series_quotient_power(-1, 3).unwrap()), vec![1, 2, 2, 2]);
        assert_eq!(ints(&series_quotient_power(2, 3).unwrap()), vec![1, -4, 8, -12]);
        assert_eq!(ints(&series_quotient_power(1, 3).unwrap()), vec![1, -2, 2, -2]);
    }

    #[test]
    fn other_exponents_are_rejected() {
        assert_eq!(series_quotient_power(3, 4), Err(Error::InvalidExponent(3)));
        assert_eq!(series_quotient_power(-2, 4), Err(Error::InvalidExponent(-2)));
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(series_quotient_power(2, 3).unwrap().to_string(), "1 - 4t + 8t^2 - 12t^3");
    }
}
