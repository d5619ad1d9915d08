use rayon::prelude::*;

use super::{lift_generators, AutPair};
use crate::atlas::{class2_group, holomorph_perm, AutMap, Class2Element, Class2Model};
use crate::error::{GroupError, Result};
use crate::fpalgebra::{apply_rows_f2, f2_matrix, f2_rows, FpMatrix, QuadraticFormF2};
use crate::group::{
    derived_series, minimal_normal_subgroups, Group, GroupContext, SeriesReport,
};
use crate::perm::Permutation;

const LINEAR_ORDER: u128 = 1296;
const ORDER: u128 = 165_888;

// F_4 = {a + bω} encoded a | b << 1, with ω^2 = ω + 1.
fn f4_mul(x: u8, y: u8) -> u8 {
    let (a, b, c, d) = (x & 1, x >> 1, y & 1, y >> 1);
    ((a & c) ^ (b & d)) | (((a & d) ^ (b & c) ^ (b & d)) << 1)
}

const OMEGA: u8 = 2;
const OMEGA2: u8 = 3;

/// Restriction of scalars of a 3 x 3 matrix over F_4 (acting on row vectors)
/// to a 6 x 6 matrix over F_2, in the basis `e_0, ωe_0, e_1, ωe_1, e_2, ωe_2`.
pub fn restrict_f4(m: &[[u8; 3]; 3]) -> Vec<u32> {
    let mut rows = Vec::with_capacity(6);
    for row in m {
        for scalar in [1, OMEGA] {
            let mut mask = 0u32;
            for (k, &entry) in row.iter().enumerate() {
                let y = f4_mul(scalar, entry) as u32;
                mask |= (y & 1) << (2 * k) | (y >> 1) << (2 * k + 1);
            }
            rows.push(mask);
        }
    }
    rows
}

/// Field automorphism `a + bω -> a + bω^2 = (a + b) + bω` coordinatewise.
fn frobenius() -> Vec<u32> {
    (0..6)
        .map(|j| if j % 2 == 0 { 1 << j } else { (1 << j) | (1 << (j - 1)) })
        .collect()
}

fn f4_generators() -> Vec<Vec<u32>> {
    let shift = [[0, 1, 0], [0, 0, 1], [1, 0, 0]];
    let phase = [[1, 0, 0], [0, OMEGA, 0], [0, 0, OMEGA2]];
    let w = [1, OMEGA, OMEGA2];
    let mut fourier = [[0u8; 3]; 3];
    for (j, row) in fourier.iter_mut().enumerate() {
        for (k, e) in row.iter_mut().enumerate() {
            *e = w[(j * k) % 3];
        }
    }
    let diag = [[1, 0, 0], [0, 1, 0], [0, 0, OMEGA]];
    let mut gens: Vec<Vec<u32>> = [shift, phase, fourier, diag].iter().map(restrict_f4).collect();
    gens.push(frobenius());
    gens
}

fn linear_group(gens: &[Vec<u32>], cap: usize) -> Group<FpMatrix> {
    Group::with_context(
        FpMatrix::identity(2, 6),
        gens.iter().map(|r| f2_matrix(r)).collect(),
        GroupContext::with_cap(cap),
    )
}

/// First pair `(a, b)` in lexicographic row order generating the whole group.
fn two_generators(q: &Group<FpMatrix>) -> Result<(FpMatrix, FpMatrix)> {
    let order = q.order()?;
    let mut els: Vec<Vec<u32>> = q.elements()?.iter().map(f2_rows).collect();
    els.sort();
    let cap = order as usize;
    for (i, a) in els.iter().enumerate().skip(1) {
        let hit = els[i + 1..].par_iter().find_first(|b| {
            linear_group(&[a.clone(), (*b).clone()], cap).order().ok() == Some(order)
        });
        if let Some(b) = hit {
            return Ok((f2_matrix(a), f2_matrix(b)));
        }
    }
    Err(GroupError::SearchFailed("no generating pair".into()))
}

/// Null space over F_2 of the equations given as bit rows over `m` unknowns.
fn nullspace_f2(mut rows: Vec<u32>, m: usize) -> Vec<u32> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..m {
        let Some(pos) = (rank..rows.len()).find(|&r| (rows[r] >> col) & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pos);
        for r in 0..rows.len() {
            if r != rank && (rows[r] >> col) & 1 == 1 {
                rows[r] ^= rows[rank];
            }
        }
        pivots.push(col);
        rank += 1;
    }
    (0..m)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut sol = 1u32 << free;
            for (i, &pc) in pivots.iter().enumerate() {
                if (rows[i] >> free) & 1 == 1 {
                    sol |= 1 << pc;
                }
            }
            sol
        })
        .collect()
}

/// The nondegenerate quadratic forms fixed by every generator, in the order
/// of their coefficient vectors over the null space basis.
fn invariant_forms(gens: &[Vec<u32>], dim: usize) -> Vec<QuadraticFormF2> {
    let pairs: Vec<(usize, usize)> = (0..dim).flat_map(|i| (i..dim).map(move |j| (i, j))).collect();
    let monomials = |v: u32| -> u32 {
        pairs
            .iter()
            .enumerate()
            .filter(|(_, &(i, j))| (v >> i) & 1 == 1 && (v >> j) & 1 == 1)
            .fold(0, |m, (k, _)| m | (1 << k))
    };
    let mut eqs = Vec::new();
    for a in gens {
        for v in 0..1u32 << dim {
            let e = monomials(v) ^ monomials(apply_rows_f2(v, a));
            if e != 0 {
                eqs.push(e);
            }
        }
    }
    let basis = nullspace_f2(eqs, pairs.len());
    let to_form = |c: u32| {
        let mut q = QuadraticFormF2::zero(dim);
        for (k, &(i, j)) in pairs.iter().enumerate() {
            q.set_coeff(i, j, (c >> k) & 1);
        }
        q
    };
    (1u32..1 << basis.len())
        .map(|s| {
            basis
                .iter()
                .enumerate()
                .filter(|(i, _)| (s >> i) & 1 == 1)
                .fold(0, |c, (_, &b)| c ^ b)
        })
        .map(to_form)
        .filter(QuadraticFormF2::is_nondegenerate)
        .collect()
}

/// The degree-128 witness `GL_2(3) ⋉ E_3 ⋉ 2^{6+1}` and the data it was built from.
pub struct D8Witness {
    pub group: Group<Permutation>,
    pub report: SeriesReport,
    /// The linear group on `F_2^6`.
    pub linear: Group<FpMatrix>,
    pub generators: (FpMatrix, FpMatrix),
    /// The invariant form, which is the squaring map of the extraspecial group.
    pub form: QuadraticFormF2,
    pub lifts: Vec<AutPair>,
}

fn check(stage: &'static str, ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(GroupError::SearchFailed(format!("postcondition failed: {what}")).at_stage(stage))
    }
}

pub fn d8_group() -> Result<D8Witness> {
    let gens = f4_generators();
    let linear = linear_group(&gens, 1 << 20);
    let order = linear.order().map_err(|e| e.at_stage("f4-model"))?;
    check("f4-model", order == LINEAR_ORDER, "|Q| = 1296")?;

    let (a, b) = two_generators(&linear).map_err(|e| e.at_stage("two-generators"))?;
    let pair = vec![f2_rows(&a), f2_rows(&b)];

    let form = invariant_forms(&gens, 6)
        .into_iter()
        .next()
        .ok_or_else(|| GroupError::SearchFailed("no invariant form".into()).at_stage("invariant-form"))?;
    check("invariant-form", form.arf() == Some(1), "minus type")?;

    let model = Class2Model::extraspecial2(form.clone()).map_err(|e| e.at_stage("lift"))?;
    let lifts = lift_generators(&pair, &model, LINEAR_ORDER).map_err(|e| e.at_stage("lift"))?;

    let p = class2_group(model);
    let auts: Vec<AutMap<Class2Element>> = lifts
        .iter()
        .map(|x| -> AutMap<Class2Element> {
            let x = x.clone();
            Box::new(move |e: &Class2Element| x.apply(e))
        })
        .collect();
    let group = holomorph_perm(&p, &auts).map_err(|e| e.at_stage("holomorph"))?;

    let series = derived_series(&group).map_err(|e| e.at_stage("verify"))?;
    let report = series.report.clone();
    check("verify", report.order() == ORDER, "order 165888")?;
    check("verify", report.d == Some(8) && report.c == Some(15), "d = 8, c = 15")?;
    let mins = minimal_normal_subgroups(&group).map_err(|e| e.at_stage("verify"))?;
    let unique = mins.len() == 1
        && mins[0].order().map_err(|e| e.at_stage("verify"))? == 2
        && mins[0].includes(&series.terms[7]).map_err(|e| e.at_stage("verify"))?;
    check("verify", unique, "unique minimal normal subgroup G^(7) of order 2")?;

    Ok(D8Witness {
        group,
        report,
        linear,
        generators: (a, b),
        form,
        lifts,
    })
}
