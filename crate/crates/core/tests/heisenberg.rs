use heiscat::heisenberg::Strategy as Order;
use heiscat::heisenberg::*;
use heiscat::scalars::{eval_minus_one, quantum_integer, series_quotient_power, LaurentPoly};
use heiscat::{CartanData, Error};
use proptest::prelude::*;
use proptest::strategy::Strategy as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn p(i: usize, m: u32) -> HeisenGen {
    HeisenGen::p(i, m)
}

fn q(i: usize, m: u32) -> HeisenGen {
    HeisenGen::q(i, m)
}

fn mono(word: &[HeisenGen]) -> HeisenNF {
    word.iter().fold(HeisenNF::one(), |acc, g| product(&acc, &HeisenNF::generator(*g), &CartanData::type_a(3)).unwrap())
}

fn int(n: i64) -> LaurentPoly {
    LaurentPoly::from_int(n)
}

fn two_quantum_two() -> LaurentPoly {
    &int(2) * &quantum_integer(2)
}

#[test]
fn same_node_exchange() {
    let a2 = CartanData::type_a(2);
    let nf = normal_form(&[q(1, 1), p(1, 1)], &a2).unwrap();
    let want = mono(&[p(1, 1), q(1, 1)]).add(&HeisenNF::one().scale(&two_quantum_two()));
    assert_eq!(nf, want);
    assert_eq!(nf.to_string(), "p[1,1] q[1,1] + 2q + 2q^-1");
}

#[test]
fn creators_commute() {
    let nf = normal_form(&[p(1, 2), p(1, 1)], &CartanData::type_a(2)).unwrap();
    assert_eq!(nf.len(), 1);
    let (m, c) = nf.terms().next().unwrap();
    assert_eq!(m.p_part(), &[(1, 1), (1, 2)]);
    assert_eq!(c, &int(1));
}

#[test]
fn adjacent_exchange() {
    let nf = normal_form(&[q(1, 2), p(2, 1)], &CartanData::type_a(2)).unwrap();
    let want = mono(&[p(2, 1), q(1, 2)]).add(&mono(&[q(1, 1)]).scale(&int(2)));
    assert_eq!(nf, want);
}

#[test]
fn product_examples() {
    let a2 = CartanData::type_a(2);
    let x = normal_form(&[p(2, 2), q(1, 1)], &a2).unwrap();
    assert_eq!(product(&HeisenNF::one(), &x, &a2).unwrap(), x);
    let pq = product(&HeisenNF::generator(p(1, 1)), &HeisenNF::generator(q(1, 1)), &a2).unwrap();
    assert_eq!(pq, mono(&[p(1, 1), q(1, 1)]));
    let pp = normal_form(&[p(1, 1), p(1, 1)], &a2).unwrap();
    let out = product(&HeisenNF::generator(q(1, 1)), &pp, &a2).unwrap();
    let want = mono(&[p(1, 1), p(1, 1), q(1, 1)]).add(&mono(&[p(1, 1)]).scale(&(&int(2) * &two_quantum_two())));
    assert_eq!(out, want);
}

#[test]
fn specialization_examples() {
    let x = HeisenNF::one().scale(&two_quantum_two());
    assert_eq!(specialize(&x), HeisenNF::one().scale(&int(-4)));
    assert!(specialize(&HeisenNF::zero()).is_zero());
}

#[test]
fn specialization_commutes_with_rewriting() {
    let a2 = CartanData::type_a(2);
    let mut gens = Vec::new();
    for i in 1..=2 {
        for m in 1..=4 {
            gens.push(p(i, m));
            gens.push(q(i, m));
        }
    }
    for x in &gens {
        for y in &gens {
            let w = [*x, *y];
            let generic = specialize(&normal_form(&w, &a2).unwrap());
            assert_eq!(generic, normal_form_specialized(&w, &a2).unwrap(), "{x} {y}");
        }
    }
}

#[test]
fn specialized_coefficients_follow_the_series() {
    let sq = series_quotient_power(2, 10).unwrap();
    for k in 1..=10u32 {
        let generic = same_node_coefficient(k, Coefficients::Generic);
        let special = same_node_coefficient(k, Coefficients::Specialized);
        assert_eq!(LaurentPoly::constant(eval_minus_one(&generic)), special);
        assert_eq!(eval_minus_one(&generic).as_rational(), Some(sq.coeff(k as usize)));
    }
}

#[test]
fn strategies_agree_on_small_words() {
    let a2 = CartanData::type_a(2);
    for w in [vec![p(1, 1), q(1, 1)], vec![q(1, 1), p(1, 1), p(1, 1)]] {
        let (l, _) = normal_form_with(&w, &a2, Order::Leftmost, Coefficients::Generic).unwrap();
        let (r, _) = normal_form_with(&w, &a2, Order::Rightmost, Coefficients::Generic).unwrap();
        assert_eq!(l, r);
    }
    let normal = [p(1, 1), p(2, 3), q(1, 2)];
    let nf = normal_form(&normal, &a2).unwrap();
    assert_eq!(nf, mono(&normal));
}

#[test]
fn confluence_probe_finds_no_mismatch() {
    let rep = confluence_probe(200, 6, &CartanData::type_a(2), 7);
    assert!(rep.holds(), "{rep}");
    assert_eq!(rep.records[0].checked_dimension, 200);
}

#[test]
fn unknown_nodes_are_rejected() {
    let err = normal_form(&[p(3, 1)], &CartanData::type_a(2)).unwrap_err();
    assert_eq!(err, Error::NodeOutOfRange { node: 3, nodes: 2 });
}

fn word(nodes: &'static [usize]) -> impl proptest::strategy::Strategy<Value = Vec<HeisenGen>> {
    bounded_word(nodes, 6, 3)
}

fn bounded_word(
    nodes: &'static [usize],
    len: usize,
    level: u32,
) -> impl proptest::strategy::Strategy<Value = Vec<HeisenGen>> {
    prop::collection::vec((prop::sample::select(nodes), 1u32..=level, any::<bool>()), 1..=len)
        .prop_map(|v| v.into_iter().map(|(i, m, is_p)| if is_p { p(i, m) } else { q(i, m) }).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rewriting_chains_are_bounded(w in word(&[1, 2])) {
        let (_, stats) = normal_form_with(&w, &CartanData::type_a(2), Order::Leftmost, Coefficients::Generic).unwrap();
        let total: u64 = w.iter().map(|g| g.level as u64).sum();
        prop_assert!(stats.max_chain <= total * total);
    }

    #[test]
    fn strategies_agree(w in word(&[1, 2])) {
        let a2 = CartanData::type_a(2);
        let (l, _) = normal_form_with(&w, &a2, Order::Leftmost, Coefficients::Generic).unwrap();
        let (r, _) = normal_form_with(&w, &a2, Order::Rightmost, Coefficients::Generic).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn orthogonal_nodes_decouple(w in word(&[1, 3])) {
        let a3 = CartanData::type_a(3);
        let part = |i: usize| -> Vec<HeisenGen> { w.iter().copied().filter(|g| g.node == i).collect() };
        let whole = normal_form(&w, &a3).unwrap();
        let split = product(&normal_form(&part(1), &a3).unwrap(), &normal_form(&part(3), &a3).unwrap(), &a3).unwrap();
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn products_are_associative(x in bounded_word(&[1, 2], 3, 2), y in bounded_word(&[1, 2], 3, 2), z in bounded_word(&[1, 2], 3, 2)) {
        let a2 = CartanData::type_a(2);
        let (x, y, z) = (normal_form(&x, &a2).unwrap(), normal_form(&y, &a2).unwrap(), normal_form(&z, &a2).unwrap());
        let left = product(&product(&x, &y, &a2).unwrap(), &z, &a2).unwrap();
        let right = product(&x, &product(&y, &z, &a2).unwrap(), &a2).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn random_words_respect_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..50 {
        let w = random_word(&mut rng, 6, 3, 2);
        assert!((1..=6).contains(&w.len()));
        assert!(w.iter().all(|g| (1..=3).contains(&g.level) && (1..=2).contains(&g.node)));
    }
}
