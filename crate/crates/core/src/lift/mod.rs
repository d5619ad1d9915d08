//! Lifting orthogonal matrices over F_2 to automorphisms of `2^{1+2n}`.

mod d8;

use rayon::prelude::*;

use crate::atlas::{Class2Element, Class2Kind, Class2Model};
use crate::error::{GroupError, Result};
use crate::fpalgebra::{apply_rows_f2, f2_matrix, f2_rows, QuadraticFormF2};
use crate::group::{Element, Group, GroupContext};

pub use d8::{d8_group, restrict_f4, D8Witness};

/// `(v, z) -> (vA, z + q(v))` on an extraspecial 2-group, `A` given by row masks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AutPair {
    rows: Vec<u32>,
    q: QuadraticFormF2,
}

impl AutPair {
    pub fn new(rows: Vec<u32>, q: QuadraticFormF2) -> Self {
        assert_eq!(rows.len(), q.dim(), "matrix and correction dimensions differ");
        AutPair { rows, q }
    }

    pub fn identity(dim: usize) -> Self {
        AutPair {
            rows: (0..dim).map(|i| 1 << i).collect(),
            q: QuadraticFormF2::zero(dim),
        }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn correction(&self) -> &QuadraticFormF2 {
        &self.q
    }

    /// The same matrix with `l` added to the linear part of the correction.
    pub fn with_offset(&self, l: u32) -> Self {
        let mut q = self.q.clone();
        for i in 0..q.dim() {
            if (l >> i) & 1 == 1 {
                q.set_coeff(i, i, q.coeff(i, i) ^ 1);
            }
        }
        AutPair {
            rows: self.rows.clone(),
            q,
        }
    }

    pub fn apply(&self, x: &Class2Element) -> Class2Element {
        let v = x.v_mask();
        Class2Element::from_mask(
            x.model(),
            apply_rows_f2(v, &self.rows),
            x.z()[0] as u32 ^ self.q.eval(v),
        )
    }
}

impl Element for AutPair {
    /// `self` then `rhs`: `(A1 A2, v -> q1(v) + q2(v A1))`.
    fn op(&self, rhs: &Self) -> Self {
        let rows = self.rows.iter().map(|&r| apply_rows_f2(r, &rhs.rows)).collect();
        let q = self.q.add(&rhs.q.precompose(&self.rows));
        AutPair { rows, q }
    }

    fn inv(&self) -> Self {
        let inv = f2_rows(&f2_matrix(&self.rows).inverse().expect("invertible"));
        let q = self.q.precompose(&inv);
        AutPair { rows: inv, q }
    }

    fn footprint(&self) -> usize {
        8 * self.rows.len() + 64
    }
}

fn squaring_form(model: &Class2Model) -> Result<&QuadraticFormF2> {
    match model.kind() {
        Class2Kind::Extraspecial2 { form, .. } => Ok(form),
        _ => Err(GroupError::KindMismatch(
            "quadratic corrections need an extraspecial 2-group model".into(),
        )),
    }
}

/// The correction with zero linear part making `A` an automorphism, i.e.
/// `q(v1+v2) + q(v1) + q(v2) = B(v1 A, v2 A) + B(v1, v2)`.
pub fn quadratic_correction(rows: &[u32], model: &Class2Model) -> Result<AutPair> {
    let form = squaring_form(model)?;
    let n = form.dim();
    if rows.len() != n || rows.iter().any(|&r| r >> n != 0) {
        return Err(GroupError::BadParameter(format!(
            "expected a {n} x {n} matrix over F_2"
        )));
    }
    f2_matrix(rows).inverse()?;
    let image = |v: u32| apply_rows_f2(v, rows);
    if let Some(v) = (0..1u32 << n).find(|&v| form.eval(image(v)) != form.eval(v)) {
        return Err(GroupError::NotOrthogonal { witness: v });
    }
    let mut q = QuadraticFormF2::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (1u32 << i, 1u32 << j);
            q.set_coeff(i, j, form.cocycle(image(a), image(b)) ^ form.cocycle(a, b));
        }
    }
    for v in 0..1u32 << n {
        for w in 0..1u32 << n {
            let lhs = q.polar(v, w);
            let rhs = form.cocycle(image(v), image(w)) ^ form.cocycle(v, w);
            if lhs != rhs {
                return Err(GroupError::NotOrthogonal { witness: v });
            }
        }
    }
    Ok(AutPair {
        rows: rows.to_vec(),
        q,
    })
}

fn pair_order_divides(x: &AutPair, k: u64) -> bool {
    x.pow(&AutPair::identity(x.rows.len()), k) == AutPair::identity(x.rows.len())
}

/// Lifts generators of a linear group of order `linear_order` to a complement
/// in `Aut(2^{1+2n})`.
///
/// Each generator is corrected by [`quadratic_correction`]; the linear parts
/// are then searched over all `2^{2n}` offsets per generator, keeping only
/// offsets that preserve the generator's order, in lexicographic order of the
/// offset tuple. The first tuple whose lifts generate a group of exactly
/// `linear_order` elements is returned; with the translations of the model
/// they then generate a group of order `linear_order * 2^{1+2n}`.
pub fn lift_generators(
    mats: &[Vec<u32>],
    model: &Class2Model,
    linear_order: u128,
) -> Result<Vec<AutPair>> {
    let n = squaring_form(model)?.dim();
    let base: Vec<AutPair> = mats
        .iter()
        .map(|m| quadratic_correction(m, model))
        .collect::<Result<_>>()?;
    let id = AutPair::identity(n);
    let candidates: Vec<Vec<u32>> = base
        .iter()
        .map(|x| {
            let o = x.element_order(&id);
            (0..1u32 << n)
                .filter(|&l| pair_order_divides(&x.with_offset(l), o))
                .collect()
        })
        .collect();
    let total: usize = candidates.iter().map(Vec::len).product();
    let tuple = |mut k: usize| -> Vec<AutPair> {
        let mut out = vec![id.clone(); base.len()];
        for i in (0..base.len()).rev() {
            let c = &candidates[i];
            out[i] = base[i].with_offset(c[k % c.len()]);
            k /= c.len();
        }
        out
    };
    let cap = usize::try_from(linear_order).unwrap_or(usize::MAX);
    let attempt = |k: usize| -> (usize, Option<u128>) {
        let gens = tuple(k);
        let g = Group::with_context(id.clone(), gens, GroupContext::with_cap(cap));
        (k, g.order().ok())
    };
    let hit = (0..total)
        .into_par_iter()
        .map(attempt)
        .find_first(|&(_, o)| o == Some(linear_order));
    if let Some((k, _)) = hit {
        return Ok(tuple(k));
    }
    let mut achieved: Vec<u128> = (0..total).into_par_iter().filter_map(|k| attempt(k).1).collect();
    achieved.sort_unstable();
    achieved.dedup();
    Err(GroupError::SearchExhausted { achieved })
}
