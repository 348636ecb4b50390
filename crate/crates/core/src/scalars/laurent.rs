//! Laurent polynomials in q with cyclotomic coefficients, and quantum integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::cyclo::{fmt_rational, CycloScalar};

/// A finite sum of c_k q^k with no stored zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, CycloScalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(CycloScalar::one(1))
    }

    pub fn constant(c: CycloScalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(CycloScalar::from_int(n, 1))
    }

    pub fn monomial(c: CycloScalar, exp: i64) -> Self {
        let mut p = LaurentPoly::default();
        p.add_term(exp, &c);
        p
    }

    /// q^k.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(CycloScalar::one(1), k)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &CycloScalar)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, exp: i64) -> Option<&CycloScalar> {
        self.terms.get(&exp)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: i64, c: &CycloScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        let mut out = LaurentPoly::default();
        for (k, v) in &self.terms {
            out.add_term(*k, &(v * c));
        }
        out
    }

    /// Multiplies by q^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect() }
    }

    /// Substitutes q = x for a cyclotomic x (x must be invertible when negative exponents occur).
    pub fn eval(&self, x: &CycloScalar) -> CycloScalar {
        let mut acc = CycloScalar::zero(x.level());
        for (k, v) in &self.terms {
            acc += &(v * &x.pow(*k));
        }
        acc
    }

    /// Image under q -> q^-1.
    pub fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, v)| (-e, v.clone())).collect() }
    }
}

/// The balanced quantum integer [k] = q^{k-1} + q^{k-3} + ... + q^{1-k}.
pub fn quantum_integer(k: u32) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    let k = k as i64;
    for j in 0..k {
        p.add_term(k - 1 - 2 * j, &CycloScalar::one(1));
    }
    p
}

/// Specialization q = -1, a ring homomorphism to the coefficient field.
pub fn eval_minus_one(p: &LaurentPoly) -> CycloScalar {
    p.eval(&CycloScalar::from_int(-1, 1))
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, v);
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, &-v);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, &(x * y));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Renders one coefficient for use in front of a variable: `""`, `"-"`, `"2"`, `"(1 + z)"`.
pub(crate) fn coeff_prefix(c: &CycloScalar) -> (bool, String) {
    match c.as_rational() {
        Some(q) => {
            let neg = q.is_negative();
            let mag = q.abs();
            let body = if num_traits::One::is_one(&mag) { String::new() } else { fmt_rational(&mag) };
            (neg, body)
        }
        None => (false, format!("({c})")),
    }
}

pub(crate) fn fmt_q_power(k: i64) -> String {
    match k {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{k}"),
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, e.g. `q^-1 + 2 + q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let (neg, body) = coeff_prefix(c);
            let var = fmt_q_power(*k);
            let body = if var.is_empty() && body.is_empty() { "1".to_string() } else { body };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{body}{var}")?;
        }
        Ok(())
    }
}
