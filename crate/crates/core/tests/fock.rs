use heiscat::fock_oracle::{
    oscillator, pq_operators, verify_brackets, verify_engine_agreement, verify_low_levels, verify_presentation,
    FockModel, FockSpace,
};
use heiscat::heisenberg::HeisenGen;
use heiscat::{CartanData, Error};
use num_rational::BigRational;
use std::collections::BTreeMap;

fn vacuum() -> BTreeMap<usize, BigRational> {
    [(0usize, BigRational::from_integer(1.into()))].into_iter().collect()
}

#[test]
fn vacuum_pairing_by_hand() {
    // q^(1) p^(1) 1 = 2h(1/2) (-2 x_1) = -4 on a single node
    let model = FockModel::new(&CartanData::type_a(1), 2, 1).unwrap();
    let word = [HeisenGen::q(1, 1), HeisenGen::p(1, 1)];
    let out = model.apply_word(&word, &vacuum());
    assert_eq!(out.len(), 1);
    assert_eq!(out[&0], BigRational::from_integer((-4).into()));
}

#[test]
fn neighbouring_nodes_pair_with_opposite_sign() {
    // a_12 = -1, so q_1^(1) p_2^(1) 1 = -4 * (1/2) * (-1) = 2
    let model = FockModel::new(&CartanData::type_a(2), 2, 1).unwrap();
    let out = model.apply_word(&[HeisenGen::q(1, 1), HeisenGen::p(2, 1)], &vacuum());
    assert_eq!(out[&0], BigRational::from_integer(2.into()));
}

#[test]
fn annihilators_kill_the_vacuum() {
    let space = FockSpace::new(&CartanData::type_a(2), 6);
    let (_, q) = pq_operators(&space, 2, 4).unwrap();
    for qk in &q[1..=4] {
        assert!(qk.apply(&vacuum()).is_empty());
    }
    assert!(oscillator(&space, 1, 3).unwrap().apply(&vacuum()).is_empty());
}

#[test]
fn truncation_must_cover_levels() {
    let space = FockSpace::new(&CartanData::type_a(1), 3);
    assert!(matches!(pq_operators(&space, 1, 4), Err(Error::TruncationTooSmall { .. })));
    assert_eq!(verify_presentation(3, &CartanData::type_a(1), 5).unwrap_err(), Error::EmptyWindow);
}

#[test]
fn oscillator_brackets() {
    let rep = verify_brackets(&CartanData::type_a(2), 7).unwrap();
    assert!(rep.holds(), "{rep}");
}

#[test]
fn low_level_closed_forms() {
    let rep = verify_low_levels(&CartanData::type_a(2), 6).unwrap();
    assert!(rep.holds(), "{rep}");
}

#[test]
fn presentation_holds_on_a2() {
    let rep = verify_presentation(4, &CartanData::type_a(2), 8).unwrap();
    assert_eq!(rep.records.len(), 5);
    assert!(rep.holds(), "{rep}");
}

#[test]
fn presentation_holds_with_disconnected_nodes() {
    let cartan = CartanData::from_matrix(vec![vec![2, 0], vec![0, 2]]).unwrap();
    let rep = verify_presentation(3, &cartan, 6).unwrap();
    assert!(rep.holds(), "{rep}");
}

#[test]
fn engine_agrees_on_short_words() {
    let rep = verify_engine_agreement(&CartanData::type_a(2), 8, 3, 2).unwrap();
    assert!(rep.holds(), "{rep}");
    assert!(rep.records[0].checked_dimension > 0);
}
