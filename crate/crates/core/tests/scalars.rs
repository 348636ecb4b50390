use heiscat::scalars::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn q(n: i64) -> CycloScalar {
    CycloScalar::from_int(n, 1)
}

fn int_series(s: &PowerSeries) -> Vec<i64> {
    s.coeffs().iter().map(|c| i64::try_from(c.to_integer()).unwrap()).collect()
}

#[test]
fn quantum_integer_examples() {
    assert!(quantum_integer(0).is_zero());
    assert_eq!(quantum_integer(2), &LaurentPoly::q_pow(1) + &LaurentPoly::q_pow(-1));
    let mut four = LaurentPoly::zero();
    for e in [3, 1, -1, -3] {
        four = &four + &LaurentPoly::q_pow(e);
    }
    assert_eq!(quantum_integer(4), four);
    assert_eq!(quantum_integer(2).to_string(), "q^-1 + q");
}

#[test]
fn quantum_integers_at_special_points() {
    let i = CycloScalar::zeta_pow(4, 1);
    for k in 1..=20u32 {
        let qk = quantum_integer(k);
        assert_eq!(qk.eval(&q(1)), q(k as i64));
        let sign = if k % 2 == 1 { 1 } else { -1 };
        assert_eq!(eval_minus_one(&qk), q(sign * k as i64), "[{k}] at -1");
        // the period-four pattern 0, 1, -1 appears at q^2 = -1
        let want = match k % 4 {
            1 => 1,
            3 => -1,
            _ => 0,
        };
        assert_eq!(qk.eval(&i), CycloScalar::from_int(want, 4), "[{k}] at i");
    }
}

#[test]
fn specialized_correction_coefficients() {
    assert_eq!(eval_minus_one(&(&LaurentPoly::q_pow(1) + &LaurentPoly::q_pow(-1))), q(-2));
    let two = LaurentPoly::from_int(2);
    for k in 1..=20u32 {
        let p = &two * &(&quantum_integer(k + 1) + &quantum_integer(k - 1));
        let sign = if k % 2 == 0 { 1 } else { -1 };
        assert_eq!(eval_minus_one(&p), q(sign * 4 * k as i64), "k={k}");
    }
}

#[test]
fn quotient_power_examples() {
    assert_eq!(int_series(&series_quotient_power(0, 3).unwrap()), [1, 0, 0, 0]);
    assert_eq!(int_series(&series_quotient_power(-1, 3).unwrap()), [1, 2, 2, 2]);
    assert_eq!(int_series(&series_quotient_power(2, 3).unwrap()), [1, -4, 8, -12]);
}

#[test]
fn quotient_powers_to_order_ten() {
    let inv = series_quotient_power(-1, 10).unwrap();
    let sq = series_quotient_power(2, 10).unwrap();
    let base = series_quotient_power(1, 10).unwrap();
    assert_eq!(&inv * &base, PowerSeries::one(10));
    assert_eq!(&base * &base, sq);
    assert_eq!(&base * &PowerSeries::from_ints(10, &[1, 1]), PowerSeries::from_ints(10, &[1, -1]));
    for k in 0..=10 {
        let want_inv = if k == 0 { 1 } else { 2 };
        assert_eq!(inv.coeff(k), &BigRational::from_integer(want_inv.into()));
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let want_sq = if k == 0 { 1 } else { sign * 4 * k as i64 };
        assert_eq!(sq.coeff(k), &BigRational::from_integer(want_sq.into()), "t^{k}");
    }
}

#[test]
fn series_coefficient_matches_specialized_correction() {
    let sq = series_quotient_power(2, 10).unwrap();
    let two = LaurentPoly::from_int(2);
    for k in 1..=10u32 {
        let p = &two * &(&quantum_integer(k + 1) + &quantum_integer(k - 1));
        let c = eval_minus_one(&p);
        assert_eq!(c.as_rational(), Some(sq.coeff(k as usize)));
    }
}

#[test]
fn roots_of_unity_have_exact_order() {
    for level in 1..=6 {
        let z = CycloScalar::zeta_pow(level, 1);
        assert!(z.pow(level as i64).is_one());
        let mut sum = CycloScalar::zero(level);
        for k in 0..level as i64 {
            sum += &CycloScalar::zeta_pow(level, k);
        }
        assert_eq!(sum.is_zero(), level > 1);
        // Phi evaluated at zeta
        let phi = cyclotomic_polynomial(level);
        let mut acc = CycloScalar::zero(level);
        for (k, c) in phi.iter().enumerate() {
            acc += &CycloScalar::zeta_pow(level, k as i64).scale_int(c);
        }
        assert!(acc.is_zero(), "level {level}");
    }
}

trait ScaleInt {
    fn scale_int(&self, c: &BigInt) -> CycloScalar;
}

impl ScaleInt for CycloScalar {
    fn scale_int(&self, c: &BigInt) -> CycloScalar {
        self * &CycloScalar::from_rational(BigRational::from_integer(c.clone()), self.level())
    }
}

fn cyclo(level: u32) -> impl Strategy<Value = CycloScalar> {
    let n = totient(level);
    prop::collection::vec((-6i64..=6, 1i64..=4), n).prop_map(move |v| {
        let coeffs = v.into_iter().map(|(a, b)| BigRational::new(a.into(), b.into())).collect();
        CycloScalar::from_power_coeffs(level, coeffs)
    })
}

fn cyclo_triple() -> impl Strategy<Value = (CycloScalar, CycloScalar, CycloScalar)> {
    (1u32..=4).prop_flat_map(|l| (cyclo(l), cyclo(l), cyclo(l)))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -5i64..=5), 0..5).prop_map(|v| {
        let mut p = LaurentPoly::zero();
        for (e, c) in v {
            p.add_term(e, &CycloScalar::from_int(c, 1));
        }
        p
    })
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in cyclo_triple()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.inv().is_none());
        }
    }

    #[test]
    fn evaluation_at_minus_one_is_a_ring_map(a in laurent(), b in laurent()) {
        prop_assert_eq!(eval_minus_one(&(&a * &b)), &eval_minus_one(&a) * &eval_minus_one(&b));
        prop_assert_eq!(eval_minus_one(&(&a + &b)), &eval_minus_one(&a) + &eval_minus_one(&b));
    }

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn quotient_powers_multiply(a in -1i64..=1, b in 0i64..=1, order in 1usize..=8) {
        let x = series_quotient_power(a, order).unwrap();
        let y = series_quotient_power(b, order).unwrap();
        prop_assert_eq!(&x * &y, series_quotient_power(a + b, order).unwrap());
    }
}
