mod common;

use common::{perm, perm_corpus};
use grp_core::atlas::{cyclic, gl, regular, sym, wreath};
use grp_core::group::enumerate_closure;
use grp_core::perm::{contains, group_order, normal_closure_perm, schreier_sims};
use grp_core::{Element, GroupContext, GroupError, Permutation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn schreier_sims_examples() {
    let s4 = sym(4).unwrap();
    assert_eq!(schreier_sims(s4.generators()).unwrap().order(), 24);
    let w = wreath(&s4, &s4).unwrap();
    assert_eq!(w.identity().degree(), 16);
    let b = schreier_sims(w.generators()).unwrap();
    assert_eq!(b.order(), 7_962_624);
    assert!(b.verify());
}

#[test]
fn group_order_examples() {
    assert_eq!(group_order(&schreier_sims(&[Permutation::identity(5)]).unwrap()), 1);
    let c3 = cyclic(3).unwrap();
    let w = wreath(&c3, &wreath(&c3, &c3).unwrap()).unwrap();
    assert_eq!(w.identity().degree(), 27);
    assert_eq!(group_order(&schreier_sims(w.generators()).unwrap()), 1_594_323);
    let r = regular(&gl(2, 3).unwrap()).unwrap();
    assert_eq!(group_order(&schreier_sims(r.generators()).unwrap()), 48);
}

#[test]
fn contains_examples() {
    let a4 = schreier_sims(&[perm(4, &[&[0, 1, 2]]), perm(4, &[&[1, 2, 3]])]).unwrap();
    assert_eq!(a4.order(), 12);
    assert!(!contains(&a4, &perm(4, &[&[0, 1]])).unwrap());
    assert!(contains(&a4, &Permutation::identity(4)).unwrap());
    assert!(matches!(
        contains(&a4, &Permutation::identity(5)),
        Err(GroupError::DegreeMismatch { expected: 4, found: 5 })
    ));
}

#[test]
fn normal_closure_examples() {
    let s4 = sym(4).unwrap();
    let b = schreier_sims(s4.generators()).unwrap();
    assert_eq!(normal_closure_perm(&b, &[perm(4, &[&[0, 1], &[2, 3]])]).unwrap().order(), 4);

    let w = wreath(&s4, &s4).unwrap();
    let b = schreier_sims(w.generators()).unwrap();
    let gens = w.generators();
    let mut comms = Vec::new();
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i + 1..] {
            comms.push(x.commutator(y));
        }
    }
    // The abelianization is C2 x C2: the sign of the base and the sign of the top.
    let d = normal_closure_perm(&b, &comms).unwrap();
    assert_eq!(d.order(), 7_962_624 / 4);
}

#[test]
fn bfs_and_bsgs_agree_on_corpus() {
    let corpus = perm_corpus();
    assert!(corpus.len() >= 20);
    let ctx = GroupContext::default();
    for (name, g, order) in &corpus {
        let bfs = enumerate_closure(g.identity(), g.generators(), &ctx).unwrap().len() as u128;
        let bsgs = schreier_sims(g.generators()).unwrap().order();
        assert_eq!((bfs, bsgs), (*order, *order), "{name}");
    }
}

#[test]
fn random_words_sift() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, g, _) in perm_corpus() {
        let b = schreier_sims(g.generators()).unwrap();
        let gens = g.generators();
        if gens.is_empty() {
            continue;
        }
        for _ in 0..100 {
            let len = rng.gen_range(0..=20);
            let mut w = g.identity().clone();
            for _ in 0..len {
                let x = &gens[rng.gen_range(0..gens.len())];
                w = if rng.gen_bool(0.5) { w.op(x) } else { w.op(&x.inv()) };
            }
            assert!(b.contains(&w), "{name}");
        }
    }
}

#[test]
fn rebuild_from_strong_generators() {
    for (name, g, order) in perm_corpus() {
        let b = schreier_sims(g.generators()).unwrap();
        let strong = b.strong_generators().to_vec();
        if strong.is_empty() {
            continue;
        }
        assert_eq!(schreier_sims(&strong).unwrap().order(), order, "{name}");
    }
}

#[test]
fn wreath_order_formula() {
    let small: Vec<_> = perm_corpus()
        .into_iter()
        .filter(|(_, g, o)| *o > 1 && *o <= 24 && g.identity().degree() <= 8)
        .collect();
    for (hn, h, ho) in &small {
        for (kn, k, ko) in &small {
            let m = k.identity().degree() as u32;
            let w = wreath(h, k).unwrap();
            assert_eq!(w.order().unwrap(), ho.pow(m) * ko, "{hn} wr {kn}");
        }
    }
}
