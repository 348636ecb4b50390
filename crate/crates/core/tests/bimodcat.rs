use heiscat::bimodcat::*;
use heiscat::wreath::*;
use heiscat::{CycloScalar, WreathElem};
use num_bigint::BigInt;

fn ctx(ell: u32) -> BimodContext {
    BimodContext::new(ell).unwrap()
}

fn faulty(f: BimodFaults) -> BimodContext {
    BimodContext::with_faults(1, f).unwrap()
}

/// s_i ... s_n c_{n+1}^eps b_{n+1} built from generators with the checked product.
fn free_element(n: usize, ell: u32, fi: FreeIndex) -> WreathElem {
    let mut u = WreathElem::one(ell, n + 1);
    for k in fi.i as usize..=n {
        u = mult(&u, &WreathElem::s(ell, n + 1, k)).unwrap();
    }
    if fi.eps == 1 {
        u = mult(&u, &WreathElem::c(ell, n + 1, n + 1)).unwrap();
    }
    mult(&u, &WreathElem::slot(ell, n + 1, n + 1, fi.elem(ell))).unwrap()
}

fn rebuild(coords: &FreeBasisCoords, ell: u32) -> WreathElem {
    let n = coords.n();
    let mut acc = WreathElem::zero(ell, n + 1);
    for (fi, y) in coords.coords() {
        acc = &acc + &mult(&free_element(n, ell, *fi), &y.embed(n + 1)).unwrap();
    }
    acc
}

#[test]
fn free_decomposition_round_trips_on_every_word() {
    for ell in [1, 2] {
        for n in 0..=1 {
            for w in WreathBasisWord::all(n + 1, ell) {
                let x = WreathElem::from_word(ell, w);
                let d = decompose_right(&x).unwrap();
                assert_eq!(d.coordinate_count(), 1, "{x}");
                assert_eq!(rebuild(&d, ell), x, "{x} = {d}");
                assert_eq!(d.recombine(), x);
            }
        }
    }
}

#[test]
fn free_decomposition_of_sums() {
    let ell = 1;
    let words = WreathBasisWord::all(2, ell);
    assert_eq!(words.len() as u64, dimension(2, ell));
    let mut x = WreathElem::zero(ell, 2);
    for (k, w) in words.iter().enumerate().step_by(7) {
        x.add_term(*w, &CycloScalar::from_int(k as i64 - 40, ell));
    }
    let d = decompose_right(&x).unwrap();
    assert_eq!(rebuild(&d, ell), x);
}

#[test]
fn free_index_count() {
    for ell in [1, 2] {
        for n in 0..=2 {
            let all = FreeIndex::all(n, ell);
            assert_eq!(all.len() as u64 * dimension(n, ell), dimension(n + 1, ell));
        }
    }
}

#[test]
fn subalgebra_elements_sit_at_the_unit_index() {
    let ell = 2;
    for n in 0..=1 {
        for w in WreathBasisWord::all(n, ell) {
            let x = WreathElem::from_word(ell, w).embed(n + 1);
            let d = decompose_right(&x).unwrap();
            assert_eq!(d.len(), 1);
            assert_eq!(d.get(&FreeIndex::unit(n)), Some(&WreathElem::from_word(ell, w)));
        }
        let c = WreathElem::c(ell, n + 1, n + 1);
        let d = decompose_right(&c).unwrap();
        let want = FreeIndex { i: (n + 1) as u8, eps: 1, b: 0 };
        assert_eq!(d.get(&want), Some(&WreathElem::one(ell, n)));
    }
}

#[test]
fn decomposition_rejects_rank_zero() {
    assert!(decompose_right(&WreathElem::one(1, 0)).is_err());
}

#[test]
fn clifford_dots_square_to_signs() {
    let c = ctx(1);
    for n in 0..=1 {
        let xc = nat_xc(&c, n).unwrap();
        let sq = xc.compose(&xc).unwrap();
        let (_, bad) = sq.agree_with(&BimodMap::identity(xc.source()).neg()).unwrap();
        assert!(bad.is_none(), "{bad:?}");
        let yc = nat_yc(&c, n).unwrap();
        let sq = yc.compose(&yc).unwrap();
        let (_, bad) = sq.agree_with(&BimodMap::identity(yc.source())).unwrap();
        assert!(bad.is_none(), "{bad:?}");
    }
}

#[test]
fn counit_reads_the_trace() {
    let c = ctx(1);
    let counit = adj_qp_counit(&c, 0).unwrap();
    let omega = WreathBasisWord::slot(1, 1, BGammaBasisElem::OMEGA, 1);
    let out = counit.apply(&Key::plain(omega));
    assert_eq!(out.len(), 1);
    assert_eq!(out.coeff(&Key::plain(WreathBasisWord::identity(0))), Some(&CycloScalar::one(1)));
    let one = counit.apply(&Key::plain(WreathBasisWord::identity(1)));
    assert!(one.is_zero());
    assert_eq!(counit.weight(), BiDegree::new(-2, 0));
    assert_eq!(counit.degree(), BiDegree::new(-1, 0));
}

#[test]
fn adjunction_degrees() {
    let c = ctx(1);
    let d = |m: BimodMap| (m.weight().z, m.degree().z);
    // the weight of the underlying map and the degree after the shift on P
    assert_eq!(d(adj_qp_counit(&c, 0).unwrap()), (-2, -1));
    assert_eq!(d(adj_qp_unit(&c, 0).unwrap()), (0, -1));
    assert_eq!(d(adj_pq_counit(&c, 0).unwrap()), (0, 1));
    assert_eq!(d(adj_pq_unit(&c, 0).unwrap()), (2, 1));
}

#[test]
fn relation_names_parse() {
    assert_eq!("h3".parse::<Relation>().unwrap(), Relation::H(3));
    assert_eq!("iso2".parse::<Relation>().unwrap(), Relation::Isotopy(2));
    assert_eq!("Isotopy6".parse::<Relation>().unwrap(), Relation::Isotopy(6));
    assert!("h21".parse::<Relation>().is_err());
    assert_eq!(Relation::all().len(), 26);
}

#[test]
fn small_suites_hold() {
    let c = ctx(1);
    let rep = verify_h(&c, 8, 0).unwrap();
    assert!(rep.holds(), "{rep}");
    let rep = verify_h(&c, 11, 1).unwrap();
    assert!(rep.holds(), "{rep}");
    assert_eq!(rep.records[0].params.extra.get("trace_omega").map(String::as_str), Some("1"));
    let rep = verify_isotopy(&c, 1, 1).unwrap();
    assert!(rep.holds(), "{rep}");
    let rep = verify_isotopy(&c, 6, 0).unwrap();
    assert!(rep.holds(), "{rep}");
}

#[test]
fn h10_at_level_two() {
    let rep = verify_h(&ctx(2), 10, 1).unwrap();
    assert!(rep.holds(), "{rep}");
}

#[test]
fn inadmissible_ranks_are_refused() {
    let c = ctx(1);
    assert!(verify_h(&c, 10, 0).is_err());
    assert!(verify_isotopy(&c, 6, 1).is_err());
    assert!(!admissible(Relation::H(3), 3, 1));
}

#[test]
fn flipped_orientation_breaks_isotopy() {
    let c = faulty(BimodFaults { orientation: DualOrientation::Left, ..Default::default() });
    let rep = verify_isotopy(&c, 1, 1).unwrap();
    assert!(!rep.holds());
}

#[test]
fn each_koszul_fault_breaks_a_low_suite() {
    let mut faults = Vec::new();
    for k in 0..5 {
        let mut f = BimodFaults::default();
        match k {
            0 => f.drop_dot_koszul = true,
            1 => f.drop_whisker_koszul = true,
            2 => f.drop_clifford_dot_sign = true,
            3 => f.algebra.drop_action_koszul = true,
            _ => f.algebra.drop_tensor_koszul = true,
        }
        faults.push(f);
    }
    for f in faults {
        let c = faulty(f);
        let broken =
            Relation::all().into_iter().filter(|r| admissible(*r, 1, 1)).any(|r| !run_suite(&c, r, 1).unwrap().holds);
        assert!(broken, "{f:?} broke nothing");
    }
}

#[test]
fn generators_are_bimodule_maps() {
    let rep = verify_linearity(&ctx(1), 1).unwrap();
    assert!(rep.holds(), "{rep}");
    let rep = verify_linearity(&ctx(2), 0).unwrap();
    assert!(rep.holds(), "{rep}");
}

#[test]
fn unsigned_dot_is_not_linear() {
    let c = faulty(BimodFaults { drop_dot_koszul: true, ..Default::default() });
    let v1 = label(BGammaBasisElem::new(Ext::V1, 0), 1);
    let (_, bad) = nat_x(&c, 1, &v1).unwrap().first_nonlinearity(&c);
    assert!(bad.is_some());
}

#[test]
fn h10_projections_split_the_identity() {
    for (n, ell) in [(1, 1), (1, 2)] {
        let rep = h10_projection_decomposition(&ctx(ell), n).unwrap();
        assert!(rep.holds(), "{rep}");
    }
    let rep = h10_projection_decomposition(&ctx(1), 1).unwrap();
    let ranks = rep.records.iter().find(|r| r.suite == "h10/graded_ranks").unwrap();
    // 128 = 64 + 64
    assert_eq!(ranks.params.extra["rank_pi1"], "64");
    assert_eq!(ranks.params.extra["rank_pi2"], "64");
    assert!(h10_projection_decomposition(&ctx(1), 0).is_err());
}

#[test]
fn correction_character_total() {
    for ell in 1..=3 {
        assert_eq!(correction_character(ell).total(), BigInt::from(8 * ell));
    }
}

#[test]
fn example_at_level_two_is_complete() {
    let rep = example_decomposition(&ctx(2), 1).unwrap();
    assert!(rep.holds(), "{rep}");
}

#[test]
fn example_at_level_one_is_biorthogonal_but_short() {
    let rep = example_decomposition(&ctx(1), 1).unwrap();
    let get = |s: &str| rep.records.iter().find(|r| r.suite == s).unwrap();
    assert!(get("example/biorthogonality").holds);
    assert!(get("example/degrees").holds);
    // five summands of total dimension 64 + 4 * 8 cannot fill 128
    assert!(!get("example/completeness").holds);
}

#[test]
fn crossing_coefficients() {
    for eps in [1i64, -1] {
        let mut memo = std::collections::HashMap::new();
        let x = peel_expansion(1, 1, eps, &mut memo);
        assert_eq!(x.alpha[1], BigInt::from(eps));
        assert_eq!(x.beta[1], BigInt::from(-eps));
    }
    // k! C(3,2) C(4,2) = 2 * 3 * 6
    assert_eq!(alpha_closed(3, 4, 2, -1), BigInt::from(36));
    let rep = crossing_coefficient_check(6, 6).unwrap();
    assert!(rep.holds(), "{rep}");
    assert!(crossing_coefficient_check(9, 1).is_err());
}
