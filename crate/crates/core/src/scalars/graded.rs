//! Bivariate graded characters in q and a parity variable pi with pi^2 = 1.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cyclo::CycloScalar;
use super::laurent::LaurentPoly;

/// Integer combination of q^a pi^s with s in {0, 1}.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedDim {
    terms: BTreeMap<(i64, u8), BigInt>,
}

impl GradedDim {
    pub fn zero() -> Self {
        GradedDim::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(qexp: i64, parity: u8, coeff: i64) -> Self {
        let mut g = GradedDim::default();
        g.add_term(qexp, parity, &BigInt::from(coeff));
        g
    }

    pub fn add_term(&mut self, qexp: i64, parity: u8, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (qexp, parity % 2);
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, u8), &BigInt)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut g = GradedDim::default();
        for ((a, s), v) in &self.terms {
            g.add_term(*a, *s, &(v * c));
        }
        g
    }

    /// Value at q = pi = 1, the total dimension.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// K0 image with the parity collapsed, as a Laurent polynomial in q.
    pub fn collapse_parity(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for ((a, _), v) in &self.terms {
            p.add_term(*a, &CycloScalar::from_rational(num_rational::BigRational::from_integer(v.clone()), 1));
        }
        p
    }
}

impl<'a> Add<&'a GradedDim> for &'a GradedDim {
    type Output = GradedDim;
    fn add(self, rhs: &GradedDim) -> GradedDim {
        let mut g = self.clone();
        for ((a, s), v) in &rhs.terms {
            g.add_term(*a, *s, v);
        }
        g
    }
}

impl<'a> Sub<&'a GradedDim> for &'a GradedDim {
    type Output = GradedDim;
    fn sub(self, rhs: &GradedDim) -> GradedDim {
        let mut g = self.clone();
        for ((a, s), v) in &rhs.terms {
            g.add_term(*a, *s, &-v);
        }
        g
    }
}

impl<'a> Mul<&'a GradedDim> for &'a GradedDim {
    type Output = GradedDim;
    fn mul(self, rhs: &GradedDim) -> GradedDim {
        let mut g = GradedDim::default();
        for ((a, s), v) in &self.terms {
            for ((b, t), w) in &rhs.terms {
                g.add_term(a + b, (s + t) % 2, &(v * w));
            }
        }
        g
    }
}

impl fmt::Display for GradedDim {
    /// Ascending q-degree, even part first, e.g. `1 + 2q + q^2 + pi + 2q pi + q^2 pi`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(a, s)| (s, a));
        for (i, key) in keys.iter().enumerate() {
            let c = &self.terms[key];
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let var = match (key.0, key.1) {
                (0, 0) => String::new(),
                (0, _) => "pi".to_string(),
                (a, 0) => super::laurent::fmt_q_power(a),
                (a, _) => format!("{} pi", super::laurent::fmt_q_power(a)),
            };
            if var.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{var}")?;
        }
        Ok(())
    }
}
