use crate::error::{GroupError, Result};
use crate::fpalgebra::matrix::{inv_mod, FpMatrix};

const MAX_SPIN_DIM: usize = 6;
const MAX_SPIN_PRIME: u32 = 7;

/// Subspace of F_p^n held as a reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    p: u32,
    n: usize,
    basis: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(p: u32, n: usize) -> Self {
        Subspace {
            p,
            n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }

    fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let p = self.p;
        let mut v = v.to_vec();
        for (b, &piv) in self.basis.iter().zip(&self.pivots) {
            let f = v[piv] as u32;
            if f != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = ((*x as u32 + p * p - f * y as u32) % p) as u8;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u8]) -> bool {
        let p = self.p;
        let mut r = self.reduce(v);
        let Some(piv) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(r[piv] as u32, p).unwrap();
        for x in r.iter_mut() {
            *x = (*x as u32 * inv % p) as u8;
        }
        for b in self.basis.iter_mut() {
            let f = b[piv] as u32;
            if f != 0 {
                for (x, &y) in b.iter_mut().zip(&r) {
                    *x = ((*x as u32 + p * p - f * y as u32) % p) as u8;
                }
            }
        }
        self.basis.push(r);
        self.pivots.push(piv);
        true
    }
}

/// Smallest subspace containing `v` and invariant under every generator.
pub fn spin(generators: &[FpMatrix], v: &[u8]) -> Subspace {
    let a = &generators[0];
    let mut space = Subspace::new(a.modulus(), a.dim());
    let mut queue = vec![v.to_vec()];
    while let Some(w) = queue.pop() {
        if space.insert(&w) {
            for g in generators {
                queue.push(g.apply_row(&w));
            }
        }
    }
    space
}

/// Outcome of spinning every line of the natural module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinResult {
    pub irreducible: bool,
    /// A proper nonzero invariant subspace when the module is reducible.
    pub witness: Option<Subspace>,
    pub lines_checked: usize,
}

/// Decides irreducibility of the natural module of `⟨generators⟩` by spinning
/// each one-dimensional subspace; a proper invariant subspace is returned when
/// one exists.
pub fn spin_all_lines(generators: &[FpMatrix]) -> Result<SpinResult> {
    let first = generators
        .first()
        .ok_or_else(|| GroupError::BadParameter("no generators".into()))?;
    let (p, n) = (first.modulus(), first.dim());
    if n > MAX_SPIN_DIM || p > MAX_SPIN_PRIME {
        return Err(GroupError::DimensionTooLarge { dim: n, p });
    }
    let mut lines = 0;
    for v in projective_points(p, n) {
        lines += 1;
        let s = spin(generators, &v);
        if s.dim() < n {
            return Ok(SpinResult {
                irreducible: false,
                witness: Some(s),
                lines_checked: lines,
            });
        }
    }
    Ok(SpinResult {
        irreducible: true,
        witness: None,
        lines_checked: lines,
    })
}

/// Normalized representatives of the lines of F_p^n (first nonzero entry 1),
/// ordered by base-p code with the first coordinate least significant, so
/// e_1 comes first.
pub fn projective_points(p: u32, n: usize) -> impl Iterator<Item = Vec<u8>> {
    let total = (p as u64).pow(n as u32);
    (1..total).filter_map(move |mut code| {
        let mut v = vec![0u8; n];
        for x in v.iter_mut() {
            *x = (code % p as u64) as u8;
            code /= p as u64;
        }
        let lead = v.iter().find(|&&x| x != 0).copied();
        (lead == Some(1)).then_some(v)
    })
}
