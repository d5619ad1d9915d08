#![allow(dead_code)]

use grp_core::atlas::{
    binary_octahedral, cyclic, direct_perm, extraspecial, gl, gsp_extension, metacyclic, natural_semidirect, regular,
    s3_matrices, sl, sym, upper_triangular, wreath,
};
use grp_core::{Group, Permutation};

pub fn perm(m: usize, cycles: &[&[u32]]) -> Permutation {
    Permutation::from_cycles(m, cycles).unwrap()
}

pub fn a5() -> Group<Permutation> {
    Group::new(Permutation::identity(5), vec![perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[0, 1, 2]])])
}

/// Permutation groups of order at most 10^5 with their known orders.
pub fn perm_corpus() -> Vec<(&'static str, Group<Permutation>, u128)> {
    let c = |n| cyclic(n).unwrap();
    let s = |n| sym(n).unwrap();
    vec![
        ("C1", c(1), 1),
        ("C7", c(7), 7),
        ("C12", c(12), 12),
        ("S3", s(3), 6),
        ("S4", s(4), 24),
        ("S5", s(5), 120),
        ("S6", s(6), 720),
        ("S7", s(7), 5040),
        ("A5", a5(), 60),
        ("M(2,3)", metacyclic(2, 3).unwrap(), 6),
        ("M(3,7)", metacyclic(3, 7).unwrap(), 21),
        ("M(5,11)", metacyclic(5, 11).unwrap(), 55),
        ("C2 wr C2", wreath(&c(2), &c(2)).unwrap(), 8),
        ("C3 wr C3", wreath(&c(3), &c(3)).unwrap(), 81),
        ("S3 wr C2", wreath(&s(3), &c(2)).unwrap(), 72),
        ("S4 wr C2", wreath(&s(4), &c(2)).unwrap(), 1152),
        ("C2 wr C2 wr C2", wreath(&c(2), &wreath(&c(2), &c(2)).unwrap()).unwrap(), 128),
        ("S3 wr S3", wreath(&s(3), &s(3)).unwrap(), 1296),
        ("GL2(3) x C3^2", natural_semidirect(&gl(2, 3).unwrap()).unwrap(), 432),
        ("S3 x C5^2", natural_semidirect(&s3_matrices(5).unwrap()).unwrap(), 150),
        ("SL2(5) x C5^2", natural_semidirect(&sl(2, 5).unwrap()).unwrap(), 3000),
        ("UT3(3) x C3^3", natural_semidirect(&upper_triangular(3, 3).unwrap()).unwrap(), 5832),
        ("GSp2(3) ext", gsp_extension(&gl(2, 3).unwrap(), 3, 1).unwrap(), 1296),
        ("Sp2(3) ext", gsp_extension(&sl(2, 3).unwrap(), 3, 1).unwrap(), 648),
        ("BO ext", gsp_extension(&binary_octahedral().unwrap(), 7, 1).unwrap(), 48 * 343),
        ("reg GL2(3)", regular(&gl(2, 3).unwrap()).unwrap(), 48),
        ("reg E27", regular(&extraspecial(3, 1, None).unwrap()).unwrap(), 27),
        ("S3 x C5", direct_perm(&s(3), &c(5)).unwrap(), 30),
    ]
}
