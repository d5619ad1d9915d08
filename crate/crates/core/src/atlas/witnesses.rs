use std::sync::Arc;

use super::basic::sl;
use super::class2::{class2_group, Class2Element, Class2Model};
use super::holomorph::{holomorph_perm, AutMap};
use crate::error::{GroupError, Result};
use crate::fpalgebra::{
    check_prime, similitude_factor, spin_all_lines, wedge_square, FpMatrix, SymplecticForm,
};
use crate::group::{center, derived_series, Element, Group, GroupContext};
use crate::perm::{Permutation, MAX_DEGREE};

/// Construction-time invariant checks enumerate only up to this order.
const VERIFY_LIMIT: u128 = 200_000;

fn verify(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(GroupError::SearchFailed(format!("postcondition failed: {what}")))
    }
}

/// `p^{1+2n}`: exponent `p` for odd `p`; for `p = 2` the type is `minus`.
pub fn extraspecial(p: u32, n: usize, minus: Option<bool>) -> Result<Group<Class2Element>> {
    check_prime(p)?;
    let model = if p == 2 {
        let minus = minus.ok_or_else(|| {
            GroupError::BadParameter("p = 2 needs a type (plus or minus)".into())
        })?;
        Class2Model::extraspecial2_standard(n, minus)?
    } else {
        Class2Model::extraspecial_odd(p, n)?
    };
    let order = model.order();
    let g = class2_group(model);
    if order <= VERIFY_LIMIT {
        verify(g.order()? == order, "order p^(1+2n)")?;
        verify(center(&g)?.order()? == p as u128, "center of order p")?;
        if p != 2 {
            let id = g.identity().clone();
            verify(
                g.elements()?.iter().all(|x| x.pow(&id, p as u64) == id),
                "exponent p",
            )?;
        }
    }
    Ok(g)
}

/// Number of elements of order 2.
pub fn involution_count<E: Element>(g: &Group<E>) -> Result<usize> {
    let id = g.identity();
    Ok(g.elements()?
        .iter()
        .filter(|x| *x != id && &x.op(x) == id)
        .count())
}

fn lex_elements(g: &Group<FpMatrix>) -> Result<Vec<FpMatrix>> {
    let mut els: Vec<FpMatrix> = g.elements()?.iter().cloned().collect();
    els.sort_by(|a, b| a.entries().cmp(b.entries()));
    Ok(els)
}

/// The binary octahedral group inside `SL_2(7)`: an `SL_2(3)` copy `⟨a, b⟩`
/// found in lexicographic order, extended by the first normalizing element of
/// order 8.
pub fn binary_octahedral() -> Result<Group<FpMatrix>> {
    let s = sl(2, 7)?;
    let els = lex_elements(&s)?;
    let id = s.identity().clone();
    let of_order = |k: u64| -> Vec<&FpMatrix> {
        els.iter().filter(|x| x.element_order(&id) == k).collect()
    };
    let (fours, threes, eights) = (of_order(4), of_order(3), of_order(8));
    for a in &fours {
        for b in &threes {
            let h = s.subgroup(vec![(*a).clone(), (*b).clone()]);
            if h.order()? != 24 {
                continue;
            }
            for c in &eights {
                let normalizes = [*a, *b].iter().all(|x| h.contains(&x.conj(c)).unwrap_or(false));
                if !normalizes {
                    continue;
                }
                let g = s.subgroup(vec![(*a).clone(), (*b).clone(), (*c).clone()]);
                if g.order()? == 48 {
                    let g = Group::new(id.clone(), g.generators().to_vec());
                    verify(involution_count(&g)? == 1, "unique involution")?;
                    return Ok(g);
                }
            }
        }
    }
    Err(GroupError::SearchFailed("no binary octahedral subgroup in SL_2(7)".into()))
}

/// The split extension `⟨S⟩ ⋉ p^{1+2n}` acting on the extraspecial group:
/// translations together with `(v, z) -> (vA, λ_A z)`.
pub fn gsp_extension(s: &Group<FpMatrix>, p: u32, n: usize) -> Result<Group<Permutation>> {
    check_prime(p)?;
    if p == 2 {
        return Err(GroupError::BadParameter("gsp extension needs odd p".into()));
    }
    let form = SymplecticForm::standard(p, n);
    let mut maps: Vec<(FpMatrix, u32)> = Vec::new();
    for a in s.generators() {
        if a.modulus() != p || a.dim() != 2 * n {
            return Err(GroupError::BadParameter(format!(
                "generator is not in GL_{}({p})",
                2 * n
            )));
        }
        maps.push((a.clone(), similitude_factor(a, &form)?));
    }
    let model = Arc::new(Class2Model::extraspecial_odd(p, n)?);
    let e = {
        let m = (*model).clone();
        class2_group(m)
    };
    let auts: Vec<AutMap<Class2Element>> = maps
        .into_iter()
        .map(|(a, lambda)| -> AutMap<Class2Element> {
            Box::new(move |x: &Class2Element| {
                let z = (x.z()[0] as u32 * lambda % p) as u8;
                Class2Element::new(x.model(), &a.apply_row(x.v()), &[z])
            })
        })
        .collect();
    let g = holomorph_perm(&e, &auts)?;
    let expect = s.order()? * model.order();
    verify(g.order()? == expect, "order |S| p^(1+2n)")?;
    Ok(g)
}

/// Generator data of the monomial group `K ≤ GL_3(p)`.
#[derive(Debug, Clone)]
pub struct QutritModel {
    pub p: u32,
    /// Smallest cube root of unity greater than 1.
    pub omega: u32,
    /// Scalar applied to the Fourier matrix.
    pub scalar: u32,
    pub x: FpMatrix,
    pub z: FpMatrix,
    pub fourier: FpMatrix,
    pub s: FpMatrix,
}

impl QutritModel {
    pub fn generators(&self) -> Vec<FpMatrix> {
        vec![self.x.clone(), self.z.clone(), self.fourier.clone(), self.s.clone()]
    }

    pub fn omega_scalar(&self) -> FpMatrix {
        FpMatrix::scalar(self.p, 3, self.omega)
    }
}

fn qutrit_model(p: u32, c: u32) -> QutritModel {
    let w = (2..p).find(|&x| x * x % p * x % p == 1).expect("p = 1 mod 3");
    let pw = |k: u32| crate::fpalgebra::pow_mod(w, k as u64, p);
    let mut fourier = FpMatrix::zero(p, 3);
    for j in 0..3 {
        for k in 0..3 {
            fourier.set(j, k, c * pw((j * k) as u32) % p);
        }
    }
    QutritModel {
        p,
        omega: w,
        scalar: c,
        x: FpMatrix::new(p, 3, &[0, 1, 0, 0, 0, 1, 1, 0, 0]).unwrap(),
        z: FpMatrix::diag(p, &[1, w, w * w % p]),
        fourier,
        s: FpMatrix::diag(p, &[1, 1, w]),
    }
}

/// `K ≅ Sp_2(3) ⋉ 3^{1+2}` in `GL_3(p)` for `p = 1 mod 3`, searching the
/// smallest Fourier scalar giving order 648.
pub fn qutrit_normalizer(p: u32) -> Result<(Group<FpMatrix>, QutritModel)> {
    check_prime(p)?;
    if p % 3 != 1 {
        return Err(GroupError::BadCongruence(format!("{p} is not 1 mod 3")));
    }
    if p > 31 {
        return Err(GroupError::BadParameter(format!("p = {p} exceeds 31")));
    }
    let mut orders = Vec::new();
    for c in 1..p {
        let model = qutrit_model(p, c);
        let k = Group::with_context(
            FpMatrix::identity(p, 3),
            model.generators(),
            GroupContext::with_cap(648),
        );
        match k.order() {
            Ok(648) => {}
            Ok(o) => {
                orders.push(Some(o));
                continue;
            }
            Err(GroupError::CapExceeded { .. }) => {
                orders.push(None);
                continue;
            }
            Err(e) => return Err(e),
        }
        let k = Group::new(FpMatrix::identity(p, 3), model.generators());
        let ds = derived_series(&k)?;
        verify(ds.report.d == Some(5) && ds.report.c == Some(7), "d(K) = 5, c(K) = 7")?;
        let k4 = &ds.terms[4];
        verify(
            k4.order()? == 3 && k4.contains(&model.omega_scalar())?,
            "K^(4) = <ωI>",
        )?;
        if p <= 7 {
            verify(spin_all_lines(&model.generators())?.irreducible, "irreducible on F_p^3")?;
        }
        return Ok((k, model));
    }
    Err(GroupError::ScalarSearchFailed { orders })
}

/// `P = V x Λ²V` for `V = F_p^3`, product `(v1 + v2, w1 + w2 + v1 ∧ v2)`.
pub fn exterior_square_group(p: u32) -> Result<Group<Class2Element>> {
    check_prime(p)?;
    if p == 2 || p > 7 {
        return Err(GroupError::BadParameter(format!(
            "exterior square group needs odd p <= 7, got {p}"
        )));
    }
    let g = class2_group(Class2Model::ext_sq(p)?);
    let p6 = (p as u128).pow(6);
    verify(g.order()? == p6, "order p^6")?;
    let d = crate::group::derived_subgroup(&g)?;
    verify(d.order()? == (p as u128).pow(3), "|P'| = p^3")?;
    verify(
        d.generators().iter().all(|x| x.v().iter().all(|&t| t == 0)),
        "P' = 0 x Λ²V",
    )?;
    let id = g.identity().clone();
    if p6 <= VERIFY_LIMIT {
        verify(
            g.elements()?.iter().all(|x| x.pow(&id, p as u64) == id),
            "exponent p",
        )?;
    }
    Ok(g)
}

/// `K ⋉ P` of degree `p^6`, with `K` acting by `(v, w) -> (vA, w Λ(A))`.
pub struct Prop8 {
    pub group: Group<Permutation>,
    pub k: QutritModel,
    /// The permutation induced by the scalar `ωI` of `K^(4)`.
    pub z: Permutation,
    p_group: Group<Class2Element>,
}

fn ext_sq_aut(a: &FpMatrix) -> Result<AutMap<'static, Class2Element>> {
    let lam = wedge_square(a)?;
    let a = a.clone();
    Ok(Box::new(move |x: &Class2Element| {
        Class2Element::new(x.model(), &a.apply_row(x.v()), &lam.apply_row(x.z()))
    }))
}

pub fn prop8_group(p: u32) -> Result<Prop8> {
    check_prime(p)?;
    if p % 3 != 1 {
        return Err(GroupError::BadCongruence(format!("{p} is not 1 mod 3")));
    }
    let degree = (p as u64).pow(6);
    if p > 7 {
        return Err(GroupError::DegreeTooLarge {
            degree: degree as usize,
            max: MAX_DEGREE,
        });
    }
    let (_, k) = qutrit_normalizer(p)?;
    let pg = exterior_square_group(p)?;
    let mut auts = Vec::new();
    for a in k.generators() {
        auts.push(ext_sq_aut(&a)?);
    }
    let zmap = ext_sq_aut(&k.omega_scalar())?;
    let group = holomorph_perm(&pg, &auts)?;
    let elems = pg.elements()?;
    let z = Permutation::new(
        elems
            .iter()
            .map(|x| elems.index_of(&zmap(x)).expect("closed") as u32)
            .collect(),
    )?;
    Ok(Prop8 {
        group,
        k,
        z,
        p_group: pg,
    })
}

impl Prop8 {
    /// The scalar `s` with `z^-1 t_x z = t_(x^s)` for every translation by a
    /// basis element `x` of `P' = 0 x Λ²V`, if one exists.
    pub fn z_action_on_derived(&self) -> Result<Option<u32>> {
        let pg = &self.p_group;
        let elems = pg.elements()?;
        let model = pg.identity().model().clone();
        let p = model.modulus();
        let translation = |x: &Class2Element| {
            Permutation::new(
                elems
                    .iter()
                    .map(|y| elems.index_of(&y.op(x)).expect("closed") as u32)
                    .collect(),
            )
        };
        'scalar: for s in 1..p {
            for k in 0..3 {
                let mut w = [0u8; 3];
                w[k] = 1;
                let x = Class2Element::new(&model, &[], &w);
                let mut ws = [0u8; 3];
                ws[k] = s as u8;
                let xs = Class2Element::new(&model, &[], &ws);
                if translation(&x)?.conj(&self.z) != translation(&xs)? {
                    continue 'scalar;
                }
            }
            return Ok(Some(s));
        }
        Ok(None)
    }
}
