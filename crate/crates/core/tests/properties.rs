mod common;

use std::sync::OnceLock;

use common::perm_corpus;
use grp_core::atlas::{class2_group, Class2Model};
use grp_core::bounds::{cn_bounds, cs_bounds, g89_min_length, g89_real, BigUint, CR_TABLE, CS_TABLE};
use grp_core::fpalgebra::{mat_invert, FpMatrix, QuadraticFormF2};
use grp_core::group::{derived_series, enumerate_closure, omega, quotient_on_cosets, MAX_INDEX};
use grp_core::lift::{quadratic_correction, AutPair};
use grp_core::perm::schreier_sims;
use grp_core::{Element, Group, GroupContext, GroupError, Permutation};
use proptest::prelude::*;

fn minus_model() -> Class2Model {
    Class2Model::extraspecial2_standard(3, true).unwrap()
}

/// Corrected transvections `v -> v + B(v, u) u` for every `u` with `q(u) = 1`.
fn orthogonal_generators() -> &'static [AutPair] {
    static GENS: OnceLock<Vec<AutPair>> = OnceLock::new();
    GENS.get_or_init(|| {
        let form = QuadraticFormF2::standard(3, true);
        let m = minus_model();
        (1..64u32)
            .filter(|&u| form.eval(u) == 1)
            .map(|u| {
                let rows: Vec<u32> = (0..6).map(|i| (1 << i) ^ if form.polar(1 << i, u) == 1 { u } else { 0 }).collect();
                quadratic_correction(&rows, &m).unwrap()
            })
            .collect()
    })
}

fn aut_pair() -> impl Strategy<Value = AutPair> {
    (prop::collection::vec(0..36usize, 1..6), 0..64u32).prop_map(|(word, offset)| {
        let gens = orthogonal_generators();
        word.iter()
            .fold(AutPair::identity(6), |acc, &i| acc.op(&gens[i]))
            .with_offset(offset)
    })
}

fn invertible(p: u32, n: usize) -> impl Strategy<Value = FpMatrix> {
    prop::collection::vec(0..p as i64, n * n)
        .prop_map(move |e| FpMatrix::new(p, n, &e).unwrap())
        .prop_filter("invertible", |a| a.det() != 0)
}

fn small_perm_group() -> impl Strategy<Value = Group<Permutation>> {
    (3..8usize).prop_flat_map(|m| {
        prop::collection::vec(Just((0..m as u32).collect::<Vec<_>>()).prop_shuffle(), 1..4)
            .prop_map(move |gens| {
                let gens = gens.into_iter().map(|g| Permutation::new(g).unwrap()).collect();
                Group::new(Permutation::identity(m), gens)
            })
    })
}

#[test]
fn transvection_count() {
    // 2^{1+6}_- has 28 singular vectors including 0, hence 36 nonsingular ones.
    assert_eq!(orthogonal_generators().len(), 36);
}

#[test]
fn corrections_satisfy_the_automorphism_law() {
    let g = class2_group(minus_model());
    let els = g.elements().unwrap();
    for x in orthogonal_generators() {
        assert_eq!(x.correction().linear_part(), 0);
        for a in els.iter() {
            for b in els.iter() {
                assert_eq!(x.apply(&a.op(b)), x.apply(a).op(&x.apply(b)));
            }
        }
    }
}

#[test]
fn singular_transvections_are_not_orthogonal() {
    let form = QuadraticFormF2::standard(3, true);
    let m = minus_model();
    for u in (1..64u32).filter(|&u| form.eval(u) == 0) {
        let rows: Vec<u32> = (0..6).map(|i| (1 << i) ^ if form.polar(1 << i, u) == 1 { u } else { 0 }).collect();
        assert!(matches!(quadratic_correction(&rows, &m), Err(GroupError::NotOrthogonal { .. })));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn aut_pair_composition_is_associative(a in aut_pair(), b in aut_pair(), c in aut_pair()) {
        prop_assert_eq!(a.op(&b).op(&c), a.op(&b.op(&c)));
        let id = AutPair::identity(6);
        prop_assert_eq!(a.op(&id), a.clone());
        prop_assert_eq!(id.op(&a), a.clone());
        prop_assert_eq!(a.op(&a.inv()), id);
    }

    #[test]
    fn aut_pair_composition_matches_action(a in aut_pair(), b in aut_pair(), v in 0..64u32, z in 0..2u32) {
        let model = std::sync::Arc::new(minus_model());
        let x = grp_core::atlas::Class2Element::from_mask(&model, v, z);
        prop_assert_eq!(a.op(&b).apply(&x), b.apply(&a.apply(&x)));
    }

    #[test]
    fn matrix_inverse(a in prop_oneof![invertible(2, 4), invertible(3, 3), invertible(5, 3), invertible(7, 4)]) {
        let (inv, det) = mat_invert(&a).unwrap();
        prop_assert_eq!(det, a.det());
        prop_assert!(a.mul(&inv).is_identity());
        prop_assert!(inv.mul(&a).is_identity());
    }

    #[test]
    fn bfs_matches_bsgs(g in small_perm_group()) {
        let bfs = enumerate_closure(g.identity(), g.generators(), &GroupContext::default()).unwrap().len() as u128;
        prop_assert_eq!(bfs, schreier_sims(g.generators()).unwrap().order());
    }

    #[test]
    fn series_accounts_for_the_order(g in small_perm_group()) {
        let r = derived_series(&g).unwrap().report;
        let product: u128 = r.derived_orders.windows(2).map(|w| w[0] / w[1]).product();
        prop_assert_eq!(product * r.derived_orders.last().unwrap(), r.order());
        if r.solvable {
            prop_assert_eq!(r.c, Some(omega(r.order())));
            prop_assert!(r.n.iter().all(|&x| x >= 1));
        }
    }

    #[test]
    fn g89_is_nondecreasing(d in 0u32..120) {
        prop_assert!(g89_min_length(d) <= g89_min_length(d + 1));
    }

    #[test]
    fn bounds_are_ordered(d in 0u32..200) {
        let s = cs_bounds(d);
        prop_assert!(s.lower <= s.upper);
        prop_assert!(cs_bounds(d + 1).lower > s.lower);
        let n = cn_bounds(d);
        prop_assert!(n.lower <= n.upper);
    }
}

#[test]
fn g89_agrees_with_floating_point_away_from_integers() {
    for d in 0..60 {
        let x = g89_real(d);
        if (x - x.round()).abs() < 1e-9 {
            continue;
        }
        let expect = if x <= 1.0 { 1 } else { x.ceil() as u64 };
        assert_eq!(g89_min_length(d), BigUint::from(expect), "d = {d}");
    }
}

#[test]
fn exponential_bracket() {
    for d in 1..=30 {
        assert!(0.088 * 1.3f64.powi(d as i32) < g89_real(d), "d = {d}");
    }
    for (d, &c) in CS_TABLE.iter().enumerate().skip(1) {
        assert!(0.088 * 1.3f64.powi(d as i32) < c as f64, "d = {d}");
    }
    assert!((CS_TABLE[5] as f64) < 7.0 / 8.0 * 1.56f64.powi(5));
}

#[test]
fn table_recurrence() {
    for d in 0..8 {
        assert!(CS_TABLE[d] + 1 <= CS_TABLE[d + 1]);
        assert!(CS_TABLE[d + 1] <= 2 * CS_TABLE[d] + 1);
    }
    assert!(CR_TABLE.windows(2).all(|w| w[0] <= w[1]));
    for d in 0..=8u32 {
        let b = cs_bounds(d);
        assert!(b.is_exact());
        assert_eq!(b.lower, BigUint::from(CS_TABLE[d as usize]));
    }
}

#[test]
fn quotients_by_derived_terms_have_the_right_length() {
    for (name, g, order) in perm_corpus() {
        if order > 20_000 {
            continue;
        }
        let s = derived_series(&g).unwrap();
        let Some(d) = s.report.d else { continue };
        for k in 0..=d {
            if order / s.report.derived_orders[k] > MAX_INDEX {
                continue;
            }
            let q = quotient_on_cosets(&g, &s.terms[k]).unwrap();
            assert_eq!(derived_series(&q).unwrap().report.d, Some(k), "{name}, k = {k}");
        }
    }
}
