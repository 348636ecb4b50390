use heiscat::scalars::{CycloScalar, GradedDim};
use heiscat::wreath::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn v1() -> BGammaBasisElem {
    BGammaBasisElem::new(Ext::V1, 0)
}

fn v2() -> BGammaBasisElem {
    BGammaBasisElem::new(Ext::V2, 0)
}

fn s(n: usize, i: usize) -> WreathElem {
    WreathElem::s(1, n, i)
}

fn c(n: usize, i: usize) -> WreathElem {
    WreathElem::c(1, n, i)
}

fn half(x: &WreathElem) -> WreathElem {
    x.scale(&CycloScalar::from_frac(1, 2, 1))
}

#[test]
fn permutations_move_clifford_indices() {
    assert_eq!(&s(2, 1) * &c(2, 1), &c(2, 2) * &s(2, 1));
    assert_eq!(&s(2, 1) * &s(2, 1), WreathElem::one(1, 2));
}

#[test]
fn clifford_generators_cancel() {
    let c12 = &c(2, 1) * &c(2, 2);
    let c21 = &c(2, 2) * &c(2, 1);
    assert_eq!(&c12 * &c21, WreathElem::one(1, 2));
    assert_eq!(&c12 + &c21, WreathElem::zero(1, 2));
}

#[test]
fn permutation_action_on_odd_tensors_is_signed() {
    let t12 = &WreathElem::slot(1, 2, 1, v1()) * &WreathElem::slot(1, 2, 2, v2());
    let t21 = &WreathElem::slot(1, 2, 1, v2()) * &WreathElem::slot(1, 2, 2, v1());
    assert_eq!(&s(2, 1) * &t12, -&(&t21 * &s(2, 1)));
}

#[test]
fn symmetrizer_examples() {
    assert_eq!(psi(1), WreathElem::one(1, 1));
    assert_eq!(psi(2), half(&(&WreathElem::one(1, 2) + &s(2, 1))));
    assert_eq!(psi_shift(1, 2, 3).unwrap(), half(&(&WreathElem::one(1, 3) + &s(3, 2))));
    assert!(psi_shift(2, 2, 3).is_err());
}

#[test]
fn symmetrizer_suite_up_to_five() {
    for n in 1..=5 {
        let rep = verify_psi_suite(n);
        assert!(rep.holds(), "{rep}");
    }
}

#[test]
fn symmetrizer_cuts_the_group_algebra_to_a_line() {
    for n in 1..=4 {
        let p = psi(n);
        for w in Permutation::all(n) {
            let x = WreathElem::from_word(1, WreathBasisWord::from_perm(n, &w));
            assert_eq!(&(&p * &x) * &p, p, "n={n}, w={w}");
        }
    }
}

#[test]
fn trace_examples() {
    let b = |e: BGammaBasisElem, ell| WreathElem::slot(ell, 1, 1, e);
    assert!(trace(&b(BGammaBasisElem::OMEGA, 1)).unwrap().is_one());
    assert!(trace(&b(v1(), 1)).unwrap().is_zero());
    assert!(trace(&b(BGammaBasisElem::new(Ext::Omega, 1), 3)).unwrap().is_zero());
    assert!(trace(&WreathElem::one(1, 2)).is_err());
}

#[test]
fn dual_basis_at_level_one() {
    let d = dual_basis(1).unwrap();
    let one = CycloScalar::one(1);
    assert_eq!(d.dual_terms(BGammaBasisElem::ONE), vec![(BGammaBasisElem::OMEGA, one.clone())]);
    assert_eq!(d.dual_terms(v1()), vec![(v2(), one.clone())]);
    assert_eq!(d.dual_terms(v2()), vec![(v1(), -&one)]);
}

#[test]
fn dual_basis_pairs_to_delta() {
    for ell in 1..=3 {
        let d = dual_basis(ell).unwrap();
        for b in BGammaBasisElem::all(ell) {
            let dual = WreathElem::slot_combination(ell, 1, 1, &d.dual_terms(b));
            for b2 in BGammaBasisElem::all(ell) {
                let t = trace(&mult(&WreathElem::slot(ell, 1, 1, b2), &dual).unwrap()).unwrap();
                assert_eq!(t.is_one(), b == b2, "tr({b2} dual({b})) = {t}");
                assert!(t.is_zero() || b == b2);
            }
        }
    }
}

#[test]
fn trace_is_supersymmetric() {
    for ell in 1..=3 {
        for a in BGammaBasisElem::all(ell) {
            for b in BGammaBasisElem::all(ell) {
                let (x, y) = (WreathElem::slot(ell, 1, 1, a), WreathElem::slot(ell, 1, 1, b));
                let ab = trace(&mult(&x, &y).unwrap()).unwrap();
                let ba = trace(&mult(&y, &x).unwrap()).unwrap();
                let sign = if a.degree() % 2 == 1 && b.degree() % 2 == 1 { -&ba } else { ba };
                assert_eq!(ab, sign, "{a}, {b}");
            }
        }
    }
}

#[test]
fn character_idempotents() {
    assert_eq!(char_idempotent(1, 0).unwrap(), WreathElem::one(1, 1));
    let g = WreathElem::slot(2, 1, 1, BGammaBasisElem::new(Ext::One, 1));
    let e0 = char_idempotent(2, 0).unwrap();
    let e1 = char_idempotent(2, 1).unwrap();
    let want = (&WreathElem::one(2, 1) + &g).scale(&CycloScalar::from_frac(1, 2, 2));
    assert_eq!(e0, want);
    assert!(mult(&e0, &e1).unwrap().is_zero());
    assert_eq!(mult(&e1, &e1).unwrap(), e1);
    for n in 1..=3 {
        let e = e_candidate(2, 1, n).unwrap();
        assert_eq!(mult(&e, &e).unwrap(), e);
    }
}

#[test]
fn graded_dimension_examples() {
    assert_eq!(graded_dimension(0, 1), GradedDim::one());
    let bg = &(&GradedDim::monomial(0, 0, 1) + &GradedDim::monomial(1, 0, 2)) + &GradedDim::monomial(2, 0, 1);
    let cl = &GradedDim::one() + &GradedDim::monomial(0, 1, 1);
    let b1 = &bg * &cl;
    assert_eq!(graded_dimension(1, 1), b1);
    assert_eq!(graded_dimension(1, 2), b1.scale(2));
}

#[test]
fn dimensions_by_enumeration() {
    for ell in 1..=2 {
        for n in 0..=3 {
            let count = WreathBasisWord::all(n, ell).len() as u64;
            assert_eq!(count, dimension(n, ell));
            assert_eq!(graded_dimension(n, ell).total(), BigInt::from(count));
        }
    }
    assert_eq!(dimension(3, 2), 24576);
}

#[test]
fn braid_words_agree_on_every_tensor() {
    let along = |word: &[usize]| word.iter().fold(WreathElem::one(1, 3), |acc, &i| &acc * &s(3, i));
    for w in Permutation::all(3) {
        let (r1, r2) = (along(&w.reduced_word()), along(&w.reduced_word_alt()));
        assert_eq!(r1, WreathElem::from_word(1, WreathBasisWord::from_perm(3, &w)));
        for t in WreathBasisWord::all(3, 1).into_iter().filter(|x| x.cliff().mask() == 0 && x.perm().is_identity()) {
            let t = WreathElem::from_word(1, t);
            assert_eq!(&r1 * &t, &r2 * &t, "{w}");
        }
    }
}

fn basis_word(n: usize, ell: u32) -> impl Strategy<Value = WreathBasisWord> {
    let perms = Permutation::all(n);
    (prop::collection::vec(0..4 * ell as u8, n), prop::collection::vec(any::<bool>(), n), 0..perms.len()).prop_map(
        move |(t, cl, p)| {
            let tensor: Vec<BGammaBasisElem> = t.iter().map(|&i| BGammaBasisElem::from_index(i, ell)).collect();
            let idx: Vec<usize> = (1..=n).filter(|&i| cl[i - 1]).collect();
            let cliff = CliffordMono::from_indices(n, &idx).unwrap();
            WreathBasisWord::new(&tensor, ell, cliff, perms[p])
        },
    )
}

fn word_triple() -> impl Strategy<Value = (WreathElem, WreathElem, WreathElem)> {
    (1usize..=3, 1u32..=2).prop_flat_map(|(n, ell)| {
        let el = move |w: WreathBasisWord| WreathElem::from_word(ell, w);
        (basis_word(n, ell).prop_map(el), basis_word(n, ell).prop_map(el), basis_word(n, ell).prop_map(el))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn multiplication_is_associative((x, y, z) in word_triple()) {
        let left = mult(&mult(&x, &y).unwrap(), &z).unwrap();
        let right = mult(&x, &mult(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn degrees_add((x, y, _) in word_triple()) {
        let xy = mult(&x, &y).unwrap();
        if !xy.is_zero() {
            let (dx, dy) = (x.bidegree().unwrap(), y.bidegree().unwrap());
            prop_assert_eq!(xy.bidegree(), Some((dx.0 + dy.0, (dx.1 + dy.1) % 2)));
        }
    }

    #[test]
    fn products_of_basis_words_are_monomial((x, y, _) in word_triple()) {
        prop_assert!(mult(&x, &y).unwrap().len() <= 1);
    }
}
