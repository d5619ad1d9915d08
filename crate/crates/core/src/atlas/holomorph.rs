use crate::error::{GroupError, Result};
use crate::fpalgebra::FpMatrix;
use crate::group::{Element, Group, GroupContext};
use crate::perm::{Permutation, MAX_DEGREE};

/// An element map offered as an automorphism to [`holomorph_perm`].
pub type AutMap<'a, E> = Box<dyn Fn(&E) -> E + Send + Sync + 'a>;

/// The permutation group on the elements of `P` generated by the right
/// translations by generators of `P` and the automorphisms `auts`.
///
/// Each map is checked to satisfy `φ(xg) = φ(x)φ(g)` for every element `x` and
/// generator `g`, which together with bijectivity makes it an automorphism.
/// The identity and the generators of `P` form a base, attached to the result.
pub fn holomorph_perm<E: Element>(p: &Group<E>, auts: &[AutMap<'_, E>]) -> Result<Group<Permutation>> {
    let elems = p.elements()?;
    let m = elems.len();
    if m > MAX_DEGREE {
        return Err(GroupError::DegreeTooLarge {
            degree: m,
            max: MAX_DEGREE,
        });
    }
    let index = |x: &E| elems.index_of(x).expect("closed") as u32;
    let mut gens = Vec::new();
    for g in p.generators() {
        gens.push(Permutation::new(elems.iter().map(|x| index(&x.op(g))).collect())?);
    }
    for (k, phi) in auts.iter().enumerate() {
        let images: Vec<E> = elems.iter().map(phi).collect();
        let mut pos = Vec::with_capacity(m);
        for y in &images {
            match elems.index_of(y) {
                Some(i) => pos.push(i as u32),
                None => {
                    return Err(GroupError::NotAutomorphism(format!(
                        "map {k} sends an element outside the group: {y:?}"
                    )))
                }
            }
        }
        for g in p.generators() {
            let gi = index(g) as usize;
            for (xi, x) in elems.iter().enumerate() {
                let xg = index(&x.op(g)) as usize;
                if images[xg] != images[xi].op(&images[gi]) {
                    return Err(GroupError::NotAutomorphism(format!(
                        "map {k}: image of {x:?} * {g:?} is not the product of images"
                    )));
                }
            }
        }
        let perm = Permutation::new(pos)
            .map_err(|_| GroupError::NotAutomorphism(format!("map {k} is not injective")))?;
        gens.push(perm);
    }
    let mut base = vec![index(p.identity())];
    base.extend(p.generators().iter().map(index));
    let ctx = GroupContext {
        known_base: None,
        ..p.context().clone()
    }
    .with_base(base);
    Ok(Group::with_context(Permutation::identity(m), gens, ctx))
}

/// Index of a vector of `F_p^n` with the first coordinate least significant.
pub fn vector_code(p: u32, v: &[u8]) -> u32 {
    v.iter().rev().fold(0, |acc, &x| acc * p + x as u32)
}

pub fn vector_from_code(p: u32, n: usize, mut code: u32) -> Vec<u8> {
    (0..n)
        .map(|_| {
            let x = (code % p) as u8;
            code /= p;
            x
        })
        .collect()
}

/// The affine group `M ⋉ F_p^n` acting on the `p^n` vectors by `x -> xA + t`.
pub fn natural_semidirect(m: &Group<FpMatrix>) -> Result<Group<Permutation>> {
    let (p, n) = (m.identity().modulus(), m.identity().dim());
    let size = (p as u64).pow(n as u32);
    if size > MAX_DEGREE as u64 {
        return Err(GroupError::DegreeTooLarge {
            degree: size as usize,
            max: MAX_DEGREE,
        });
    }
    let points: Vec<Vec<u8>> = (0..size as u32).map(|c| vector_from_code(p, n, c)).collect();
    let mut gens = Vec::new();
    for i in 0..n {
        let images = points
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w[i] = ((w[i] as u32 + 1) % p) as u8;
                vector_code(p, &w)
            })
            .collect();
        gens.push(Permutation::new(images)?);
    }
    for a in m.generators() {
        let images = points.iter().map(|v| vector_code(p, &a.apply_row(v))).collect();
        gens.push(Permutation::new(images)?);
    }
    let mut base = vec![0u32];
    base.extend((0..n).map(|i| (p as u32).pow(i as u32)));
    let ctx = GroupContext {
        known_base: None,
        ..m.context().clone()
    }
    .with_base(base);
    Ok(Group::with_context(Permutation::identity(size as usize), gens, ctx))
}

/// Imprimitive wreath product `H wr K` on `deg(H) * deg(K)` points, point
/// `(b, i)` numbered `b * deg(H) + i`.
pub fn wreath(h: &Group<Permutation>, k: &Group<Permutation>) -> Result<Group<Permutation>> {
    let (m, n) = (h.identity().degree(), k.identity().degree());
    let total = m * n;
    if total > MAX_DEGREE {
        return Err(GroupError::DegreeTooLarge {
            degree: total,
            max: MAX_DEGREE,
        });
    }
    // One copy of H per orbit of K on blocks.
    let mut rep_blocks = Vec::new();
    let mut seen = vec![false; n];
    for b in 0..n {
        if seen[b] {
            continue;
        }
        rep_blocks.push(b);
        let mut stack = vec![b];
        seen[b] = true;
        while let Some(x) = stack.pop() {
            for g in k.generators() {
                let y = g.apply(x as u32) as usize;
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    let mut gens = Vec::new();
    for &b in &rep_blocks {
        for g in h.generators() {
            let mut images: Vec<u32> = (0..total as u32).collect();
            for i in 0..m {
                images[b * m + i] = (b * m) as u32 + g.apply(i as u32);
            }
            gens.push(Permutation::new(images)?);
        }
    }
    for g in k.generators() {
        let images = (0..total)
            .map(|x| g.apply((x / m) as u32) * m as u32 + (x % m) as u32)
            .collect();
        gens.push(Permutation::new(images)?);
    }
    Ok(Group::new(Permutation::identity(total), gens))
}
