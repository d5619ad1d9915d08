use crate::error::{GroupError, Result};
use crate::fpalgebra::{check_prime, mult_order, primitive_root, FpMatrix};
use crate::group::{Element, Group, GroupContext};
use crate::perm::{Permutation, MAX_DEGREE};

impl Element for FpMatrix {
    fn op(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }

    fn inv(&self) -> Self {
        self.inverse().expect("group elements are invertible")
    }

    fn footprint(&self) -> usize {
        self.dim() * self.dim() + 48
    }
}

fn check_positive(name: &str, n: usize) -> Result<()> {
    if n == 0 {
        return Err(GroupError::BadParameter(format!("{name} needs n >= 1")));
    }
    Ok(())
}

fn check_degree(m: usize) -> Result<()> {
    if m > MAX_DEGREE {
        return Err(GroupError::DegreeTooLarge {
            degree: m,
            max: MAX_DEGREE,
        });
    }
    Ok(())
}

/// `C_n` as the regular cyclic permutation group of degree `n`.
pub fn cyclic(n: usize) -> Result<Group<Permutation>> {
    check_positive("cyclic", n)?;
    check_degree(n)?;
    let shift = (0..n as u32).map(|x| (x + 1) % n as u32).collect();
    Ok(Group::new(
        Permutation::identity(n),
        vec![Permutation::new(shift)?],
    ))
}

/// `Sym(n)` generated by `(0 1)` and `(0 1 ... n-1)`.
pub fn sym(n: usize) -> Result<Group<Permutation>> {
    check_positive("sym", n)?;
    check_degree(n)?;
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[&[0, 1]])?);
        let cycle: Vec<u32> = (0..n as u32).collect();
        gens.push(Permutation::from_cycles(n, &[&cycle])?);
    }
    Ok(Group::new(Permutation::identity(n), gens))
}

fn elementary(p: u32, n: usize, i: usize, j: usize, c: u32) -> FpMatrix {
    let mut m = FpMatrix::identity(p, n);
    m.set(i, j, c);
    m
}

fn check_matrix_params(n: usize, p: u32) -> Result<()> {
    check_prime(p)?;
    if n == 0 || n > crate::fpalgebra::MAX_DIM {
        return Err(GroupError::BadParameter(format!("dimension {n} out of range")));
    }
    Ok(())
}

/// Transvections `I + E_(i,i+1)` and `I + E_(i+1,i)`, generating `SL_n(p)`.
fn transvections(n: usize, p: u32) -> Vec<FpMatrix> {
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        gens.push(elementary(p, n, i, i + 1, 1));
        gens.push(elementary(p, n, i + 1, i, 1));
    }
    gens
}

pub fn sl(n: usize, p: u32) -> Result<Group<FpMatrix>> {
    check_matrix_params(n, p)?;
    Ok(Group::new(FpMatrix::identity(p, n), transvections(n, p)))
}

/// `GL_n(p)`: the `SL_n(p)` transvections and `diag(ζ, 1, ..., 1)`.
pub fn gl(n: usize, p: u32) -> Result<Group<FpMatrix>> {
    check_matrix_params(n, p)?;
    let mut d = vec![1u32; n];
    d[0] = primitive_root(p);
    let mut gens = vec![FpMatrix::diag(p, &d)];
    gens.extend(transvections(n, p));
    Ok(Group::new(FpMatrix::identity(p, n), gens))
}

/// Invertible upper-triangular matrices.
pub fn upper_triangular(n: usize, p: u32) -> Result<Group<FpMatrix>> {
    check_matrix_params(n, p)?;
    let z = primitive_root(p);
    let mut gens = Vec::new();
    for i in 0..n {
        let mut d = vec![1u32; n];
        d[i] = z;
        gens.push(FpMatrix::diag(p, &d));
    }
    for i in 0..n.saturating_sub(1) {
        gens.push(elementary(p, n, i, i + 1, 1));
    }
    Ok(Group::new(FpMatrix::identity(p, n), gens))
}

/// `{[[0, -1], [1, -1]], [[0, 1], [1, 0]]}`, a faithful copy of `S_3` in `GL_2(p)`.
pub fn s3_matrices(p: u32) -> Result<Group<FpMatrix>> {
    check_prime(p)?;
    let m = p as i64;
    Ok(Group::new(
        FpMatrix::identity(p, 2),
        vec![
            FpMatrix::new(p, 2, &[0, m - 1, 1, m - 1])?,
            FpMatrix::new(p, 2, &[0, 1, 1, 0])?,
        ],
    ))
}

/// `M_{p,q}` acting on `F_q`: `b: x -> x + 1` and `a: x -> kx` with `k` the
/// smallest residue of multiplicative order `p`.
pub fn metacyclic(p: u32, q: u32) -> Result<Group<Permutation>> {
    check_prime(p)?;
    check_prime(q)?;
    if q % p != 1 {
        return Err(GroupError::BadCongruence(format!("{q} is not 1 mod {p}")));
    }
    let k = (2..q)
        .find(|&k| mult_order(k, q) == p)
        .expect("F_q^* is cyclic of order divisible by p");
    let b = Permutation::new((0..q).map(|x| (x + 1) % q).collect())?;
    let a = Permutation::new((0..q).map(|x| x * k % q).collect())?;
    let ctx = GroupContext::default().with_base(vec![0, 1]);
    Ok(Group::with_context(Permutation::identity(q as usize), vec![a, b], ctx))
}

/// The multiplier `k` used by [`metacyclic`].
pub fn metacyclic_multiplier(p: u32, q: u32) -> Option<u32> {
    (q % p == 1).then(|| (2..q).find(|&k| mult_order(k, q) == p)).flatten()
}

/// Right-regular permutation representation on the enumerated elements.
pub fn regular<E: Element>(g: &Group<E>) -> Result<Group<Permutation>> {
    let elems = g.elements()?;
    check_degree(elems.len())?;
    let gens = g
        .generators()
        .iter()
        .map(|h| {
            let images = elems
                .iter()
                .map(|x| elems.index_of(&x.op(h)).expect("closed") as u32)
                .collect();
            Permutation::new(images)
        })
        .collect::<Result<Vec<_>>>()?;
    let ctx = GroupContext {
        known_base: None,
        ..g.context().clone()
    }
    .with_base(vec![0]);
    Ok(Group::with_context(Permutation::identity(elems.len()), gens, ctx))
}

/// Direct product of permutation groups on the disjoint union of their points.
pub fn direct_perm(a: &Group<Permutation>, b: &Group<Permutation>) -> Result<Group<Permutation>> {
    let (m, n) = (a.identity().degree(), b.identity().degree());
    check_degree(m + n)?;
    let lift = |g: &Permutation, offset: usize, total: usize| {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &x) in g.images().iter().enumerate() {
            images[i + offset] = x + offset as u32;
        }
        Permutation::new(images)
    };
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(lift(g, 0, m + n)?);
    }
    for g in b.generators() {
        gens.push(lift(g, m, m + n)?);
    }
    Ok(Group::new(Permutation::identity(m + n), gens))
}

/// Direct product of matrix groups over the same field, as block diagonal matrices.
pub fn direct_matrix(a: &Group<FpMatrix>, b: &Group<FpMatrix>) -> Result<Group<FpMatrix>> {
    let (p, m, n) = (a.identity().modulus(), a.identity().dim(), b.identity().dim());
    if b.identity().modulus() != p {
        return Err(GroupError::KindMismatch("matrix groups over different fields".into()));
    }
    if m + n > crate::fpalgebra::MAX_DIM {
        return Err(GroupError::BadParameter("block dimension too large".into()));
    }
    let block = |g: &FpMatrix, offset: usize| {
        let mut out = FpMatrix::identity(p, m + n);
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                out.set(i + offset, j + offset, g.get(i, j));
            }
        }
        out
    };
    let mut gens: Vec<FpMatrix> = a.generators().iter().map(|g| block(g, 0)).collect();
    gens.extend(b.generators().iter().map(|g| block(g, m)));
    Ok(Group::new(FpMatrix::identity(p, m + n), gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::derived_series;

    #[test]
    fn classical_orders() {
        assert_eq!(gl(2, 3).unwrap().order().unwrap(), 48);
        assert_eq!(sl(2, 3).unwrap().order().unwrap(), 24);
        assert_eq!(gl(3, 2).unwrap().order().unwrap(), 168);
        assert_eq!(sl(2, 5).unwrap().order().unwrap(), 120);
        assert_eq!(upper_triangular(4, 3).unwrap().order().unwrap(), 11664);
        assert_eq!(sym(4).unwrap().order().unwrap(), 24);
        assert_eq!(cyclic(1).unwrap().order().unwrap(), 1);
        assert_eq!(s3_matrices(5).unwrap().order().unwrap(), 6);
    }

    #[test]
    fn gl23_derived_series() {
        let r = derived_series(&gl(2, 3).unwrap()).unwrap().report;
        assert_eq!(r.derived_orders, vec![48, 24, 8, 2, 1]);
        assert_eq!(r.n, vec![1, 1, 2, 1]);
    }

    #[test]
    fn metacyclic_groups() {
        assert_eq!(metacyclic(2, 3).unwrap().order().unwrap(), 6);
        assert_eq!(metacyclic(3, 7).unwrap().order().unwrap(), 21);
        assert_eq!(metacyclic_multiplier(3, 7), Some(2));
        assert_eq!(metacyclic_multiplier(2, 5), Some(4));
        assert!(matches!(metacyclic(3, 5), Err(GroupError::BadCongruence(_))));
    }

    #[test]
    fn regular_representation() {
        let r = regular(&gl(2, 3).unwrap()).unwrap();
        assert_eq!(r.identity().degree(), 48);
        assert_eq!(r.order().unwrap(), 48);
    }
}
