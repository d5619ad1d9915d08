mod common;

use common::perm;
use grp_core::atlas::{
    binary_octahedral, class2_group, cyclic, exterior_square_group, extraspecial, gl, gsp_extension, holomorph_perm,
    involution_count, metacyclic, metacyclic_multiplier, natural_semidirect, qutrit_normalizer, s3_matrices, sl, sym,
    upper_triangular, wreath, AutMap, Class2Element, Class2Kind, Class2Model,
};
use grp_core::fpalgebra::{spin_all_lines, wedge, FpMatrix};
use grp_core::group::{center, derived_series, derived_subgroup};
use grp_core::{Element, Group, GroupError, Permutation, SeriesReport};

fn report<E: Element>(g: &Group<E>) -> SeriesReport {
    derived_series(g).unwrap().report
}

fn exponent<E: Element>(g: &Group<E>) -> u64 {
    let id = g.identity();
    g.elements().unwrap().iter().map(|x| x.element_order(id)).max().unwrap()
}

const THEOREM2_PATTERNS: [&[u32]; 6] = [&[1, 1, 2], &[1, 2, 1], &[1, 1, 2, 1], &[1, 1, 2, 1, 2], &[1, 2, 1, 2, 1], &[1, 1, 2, 1, 2, 1]];

#[test]
fn basic_groups() {
    let r = report(&sym(4).unwrap());
    assert_eq!((r.order(), r.d, r.c), (24, Some(3), Some(4)));
    let r = report(&gl(2, 3).unwrap());
    assert_eq!(r.derived_orders, vec![48, 24, 8, 2, 1]);
    let r = report(&upper_triangular(4, 3).unwrap());
    assert_eq!((r.order(), r.d), (11664, Some(3)));
    for (n, p) in [(1, 5), (2, 2), (2, 5), (3, 2), (3, 3)] {
        let gl_order: u128 = (0..n).map(|i| (p as u128).pow(n) - (p as u128).pow(i)).product();
        assert_eq!(gl(n as usize, p).unwrap().order().unwrap(), gl_order);
        assert_eq!(sl(n as usize, p).unwrap().order().unwrap(), gl_order / (p as u128 - 1));
        let ut = (p as u128 - 1).pow(n) * (p as u128).pow(n * (n - 1) / 2);
        assert_eq!(upper_triangular(n as usize, p).unwrap().order().unwrap(), ut);
    }
    assert_eq!(cyclic(9).unwrap().order().unwrap(), 9);
    assert_eq!(sym(5).unwrap().order().unwrap(), 120);
    assert!(matches!(gl(2, 4), Err(GroupError::BadParameter(_))));
}

#[test]
fn metacyclic_examples() {
    let r = report(&metacyclic(2, 3).unwrap());
    assert_eq!((r.order(), r.d), (6, Some(2)));
    let r = report(&metacyclic(3, 7).unwrap());
    assert_eq!((r.order(), r.n.clone()), (21, vec![1, 1]));
    assert_eq!(metacyclic_multiplier(3, 7), Some(2));
    assert_eq!(metacyclic(2, 5).unwrap().order().unwrap(), 10);
    assert_eq!(metacyclic_multiplier(2, 5), Some(4));
    assert!(matches!(metacyclic(3, 5), Err(GroupError::BadCongruence(_))));
}

#[test]
fn extraspecial_examples() {
    let h = extraspecial(3, 1, None).unwrap();
    assert_eq!(h.order().unwrap(), 27);
    assert_eq!(center(&h).unwrap().order().unwrap(), 3);
    assert_eq!(exponent(&h), 3);

    let q8 = extraspecial(2, 1, Some(true)).unwrap();
    assert_eq!(involution_count(&q8).unwrap(), 1);
    let d8 = extraspecial(2, 1, Some(false)).unwrap();
    assert_eq!(involution_count(&d8).unwrap(), 5);

    let e = extraspecial(2, 3, Some(true)).unwrap();
    assert_eq!(e.order().unwrap(), 128);
    let model = e.identity().model().clone();
    let Class2Kind::Extraspecial2 { form, .. } = model.kind() else {
        panic!("wrong kind")
    };
    assert_eq!(form.arf(), Some(1));
    let id = e.identity();
    for v in 0..64u32 {
        let x = Class2Element::from_mask(&model, v, 0);
        let sq = x.op(&x);
        assert!(sq.v().iter().all(|&c| c == 0));
        assert_eq!(sq.z()[0] as u32, form.eval(v), "squaring form at {v:#b}");
        assert_eq!(x.pow(id, 4), *id);
    }
    assert!(matches!(extraspecial(2, 1, None), Err(GroupError::BadParameter(_))));
}

#[test]
fn binary_octahedral_examples() {
    let bo = binary_octahedral().unwrap();
    let r = report(&bo);
    assert_eq!((r.order(), r.d), (48, Some(4)));
    assert_eq!(involution_count(&bo).unwrap(), 1);
    assert!(bo.contains(&FpMatrix::scalar(7, 2, 6)).unwrap());
    assert_eq!(involution_count(&gl(2, 3).unwrap()).unwrap(), 13);
}

#[test]
fn natural_semidirect_examples() {
    let r = report(&natural_semidirect(&gl(2, 3).unwrap()).unwrap());
    assert_eq!((r.order(), r.d, r.c), (432, Some(5), Some(7)));
    let r = report(&natural_semidirect(&s3_matrices(5).unwrap()).unwrap());
    assert_eq!((r.order(), r.d, r.c), (150, Some(3), Some(4)));
    let trivial = Group::new(FpMatrix::identity(2, 2), vec![]);
    let g = natural_semidirect(&trivial).unwrap();
    assert_eq!(g.order().unwrap(), 4);
    assert!(g.is_abelian());
}

#[test]
fn gsp_examples() {
    let r = report(&gsp_extension(&gl(2, 3).unwrap(), 3, 1).unwrap());
    assert_eq!((r.order(), r.d, r.c), (1296, Some(6), Some(8)));
    assert_eq!(r.n, vec![1, 1, 2, 1, 2, 1]);
    let r = report(&gsp_extension(&sl(2, 3).unwrap(), 3, 1).unwrap());
    assert_eq!((r.order(), r.d, r.c), (648, Some(5), Some(7)));
    let minus = Group::new(FpMatrix::identity(3, 2), vec![FpMatrix::scalar(3, 2, 2)]);
    let r = report(&gsp_extension(&minus, 3, 1).unwrap());
    assert_eq!((r.order(), r.d, r.c), (54, Some(3), Some(4)));
    let bad = Group::new(FpMatrix::identity(5, 4), vec![FpMatrix::diag(5, &[1, 1, 1, 2])]);
    assert_eq!(gsp_extension(&bad, 5, 2).unwrap_err(), GroupError::NotSimilitude);
}

#[test]
fn gsp_order_is_product() {
    for (s, p) in [(gl(2, 3).unwrap(), 3), (sl(2, 5).unwrap(), 5), (binary_octahedral().unwrap(), 7), (s3_matrices(5).unwrap(), 5)] {
        let expected = s.order().unwrap() * (p as u128).pow(3);
        assert_eq!(gsp_extension(&s, p, 1).unwrap().order().unwrap(), expected);
    }
}

#[test]
fn qutrit_examples() {
    for p in [7, 13] {
        let (k, model) = qutrit_normalizer(p).unwrap();
        let r = report(&k);
        assert_eq!((r.order(), r.d, r.c), (648, Some(5), Some(7)), "p = {p}");
        let e = Group::new(FpMatrix::identity(p, 3), vec![model.x.clone(), model.z.clone()]);
        assert_eq!(e.order().unwrap(), 27);
        assert_eq!(exponent(&e), 3);
    }
    assert!(matches!(qutrit_normalizer(5), Err(GroupError::BadCongruence(_))));
}

#[test]
fn exterior_square_examples() {
    let p3 = exterior_square_group(3).unwrap();
    assert_eq!(p3.order().unwrap(), 729);
    let d = derived_subgroup(&p3).unwrap();
    assert_eq!(d.order().unwrap(), 27);
    assert!(d.elements().unwrap().iter().all(|x| x.v().iter().all(|&c| c == 0)));
    assert_eq!(exponent(&p3), 3);
    assert_eq!(report(&exterior_square_group(7).unwrap()).c, Some(6));
}

#[test]
fn exterior_square_commutator_law() {
    let model = std::sync::Arc::new(Class2Model::ext_sq(3).unwrap());
    let vecs: Vec<[u8; 3]> = (0..27u8).map(|c| [c % 3, c / 3 % 3, c / 9]).collect();
    for v1 in &vecs {
        for v2 in &vecs {
            let a = Class2Element::new(&model, v1, &[0, 0, 0]);
            let b = Class2Element::new(&model, v2, &[0, 0, 0]);
            let w: Vec<u8> = wedge(3, v1, v2).iter().map(|&x| 2 * x % 3).collect();
            assert_eq!(a.commutator(&b), Class2Element::new(&model, &[0, 0, 0], &w));
        }
    }
}

#[test]
fn wreath_examples() {
    let s4 = sym(4).unwrap();
    let r = report(&wreath(&s4, &s4).unwrap());
    assert_eq!((r.order(), r.c, r.d), (24u128.pow(5), Some(20), Some(6)));
    let c2 = cyclic(2).unwrap();
    let r = report(&wreath(&c2, &c2).unwrap());
    assert_eq!((r.order(), r.d), (8, Some(2)));
    let c3 = cyclic(3).unwrap();
    let r = report(&wreath(&c3, &wreath(&c3, &c3).unwrap()).unwrap());
    assert_eq!((r.order(), r.d), (3u128.pow(13), Some(3)));
}

#[test]
fn holomorph_examples() {
    let v4 = Group::new(Permutation::identity(4), vec![perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]])]);
    let by = [perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2]])];
    let auts: Vec<AutMap<Permutation>> = by.iter().map(|t| -> AutMap<Permutation> { Box::new(move |x| x.conj(t)) }).collect();
    assert_eq!(holomorph_perm(&v4, &auts).unwrap().order().unwrap(), 24);

    let h = extraspecial(3, 1, None).unwrap();
    let neg: AutMap<Class2Element> = Box::new(|x| {
        let v: Vec<u8> = x.v().iter().map(|&c| (3 - c) % 3).collect();
        Class2Element::new(x.model(), &v, x.z())
    });
    assert_eq!(holomorph_perm(&h, &[neg]).unwrap().order().unwrap(), 54);

    assert_eq!(holomorph_perm(&h, &[]).unwrap().order().unwrap(), 27);

    let model = std::sync::Arc::new(Class2Model::extraspecial_odd(3, 1).unwrap());
    let h = class2_group((*model).clone());
    let bad: AutMap<Class2Element> = Box::new(|x| {
        let v = [x.v()[0], 0];
        Class2Element::new(x.model(), &v, x.z())
    });
    assert!(matches!(holomorph_perm(&h, &[bad]), Err(GroupError::NotAutomorphism(_))));
}

#[test]
fn theorem2_witness_shapes() {
    let cs = grp_core::bounds::CS_TABLE;
    let witnesses: Vec<(usize, SeriesReport)> = vec![
        (0, report(&cyclic(1).unwrap())),
        (1, report(&cyclic(2).unwrap())),
        (2, report(&metacyclic(2, 3).unwrap())),
        (3, report(&natural_semidirect(&s3_matrices(5).unwrap()).unwrap())),
        (3, report(&gsp_extension(&Group::new(FpMatrix::identity(3, 2), vec![FpMatrix::scalar(3, 2, 2)]), 3, 1).unwrap())),
        (4, report(&gl(2, 3).unwrap())),
        (5, report(&qutrit_normalizer(7).unwrap().0)),
        (5, report(&natural_semidirect(&gl(2, 3).unwrap()).unwrap())),
        (5, report(&gsp_extension(&sl(2, 3).unwrap(), 3, 1).unwrap())),
        (6, report(&gsp_extension(&gl(2, 3).unwrap(), 3, 1).unwrap())),
    ];
    for (d, r) in witnesses {
        assert_eq!((r.d, r.c.map(u64::from)), (Some(d), Some(cs[d])), "{r:?}");
        if d >= 3 {
            assert!(THEOREM2_PATTERNS.contains(&r.n.as_slice()), "n = {:?}", r.n);
        }
    }
}

#[test]
fn natural_modules_are_irreducible() {
    let (_, model) = qutrit_normalizer(7).unwrap();
    let groups = [
        s3_matrices(5).unwrap().generators().to_vec(),
        gl(2, 3).unwrap().generators().to_vec(),
        sl(2, 3).unwrap().generators().to_vec(),
        binary_octahedral().unwrap().generators().to_vec(),
        model.generators(),
    ];
    for gens in &groups {
        assert!(spin_all_lines(gens).unwrap().irreducible);
    }
    let ut = upper_triangular(3, 3).unwrap();
    let r = spin_all_lines(ut.generators()).unwrap();
    assert!(!r.irreducible);
    assert!(r.witness.is_some());
}
