use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{GroupError, Result};
use crate::fpalgebra::{check_prime, QuadraticFormF2};
use crate::group::{Element, Group, GroupContext};

pub const MAX_V: usize = 8;
pub const MAX_Z: usize = 4;

/// Which class-two construction a [`Class2Model`] realizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Class2Kind {
    /// `p^{1+2n}` of exponent `p`, cocycle `h<v1, v2>` with `h = (p+1)/2`.
    ExtraspecialOdd { n: usize },
    /// `2^{1+2n}`, cocycle the upper-triangular part of a quadratic form.
    Extraspecial2 { n: usize, form: QuadraticFormF2 },
    /// `V x Λ²V` for `V = F_p^3`, cocycle `v1 ∧ v2`.
    ExtSq,
}

/// Group law `(v1, z1)(v2, z2) = (v1 + v2, z1 + z2 + T(v1, v2))` on
/// `F_p^dv x F_p^dz` for a bilinear `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Class2Model {
    p: u32,
    dv: usize,
    dz: usize,
    /// `tensor[(k * dv + i) * dv + j]` is the coefficient of `v1_i v2_j` in `z_k`.
    tensor: Vec<u8>,
    kind: Class2Kind,
}

impl Class2Model {
    fn with_tensor(p: u32, dv: usize, dz: usize, kind: Class2Kind, f: impl Fn(usize, usize, usize) -> u32) -> Self {
        let mut tensor = vec![0u8; dz * dv * dv];
        for k in 0..dz {
            for i in 0..dv {
                for j in 0..dv {
                    tensor[(k * dv + i) * dv + j] = (f(k, i, j) % p) as u8;
                }
            }
        }
        Class2Model {
            p,
            dv,
            dz,
            tensor,
            kind,
        }
    }

    /// The exponent-`p` extraspecial group of order `p^{1+2n}`, relative to the
    /// standard symplectic form on coordinates `(x_1..x_n, y_1..y_n)`.
    pub fn extraspecial_odd(p: u32, n: usize) -> Result<Self> {
        check_prime(p)?;
        if p == 2 || n == 0 || 2 * n > MAX_V {
            return Err(GroupError::BadParameter(format!(
                "extraspecial model needs odd p and 1 <= n <= {}",
                MAX_V / 2
            )));
        }
        let h = (p + 1) / 2;
        Ok(Self::with_tensor(p, 2 * n, 1, Class2Kind::ExtraspecialOdd { n }, |_, i, j| {
            if i < n && j == i + n {
                h
            } else if i >= n && j + n == i {
                p - h
            } else {
                0
            }
        }))
    }

    /// `2^{1+2n}` whose squaring map is the nondegenerate form `q`.
    pub fn extraspecial2(form: QuadraticFormF2) -> Result<Self> {
        let dim = form.dim();
        if dim == 0 || dim > MAX_V || !form.is_nondegenerate() {
            return Err(GroupError::BadParameter(
                "extraspecial 2-group needs a nondegenerate form of dimension <= 8".into(),
            ));
        }
        let f = form.clone();
        Ok(Self::with_tensor(
            2,
            dim,
            1,
            Class2Kind::Extraspecial2 { n: dim / 2, form },
            move |_, i, j| if i <= j { f.coeff(i, j) } else { 0 },
        ))
    }

    /// `2^{1+2n}` of type `+` (`minus = false`) or `-`.
    pub fn extraspecial2_standard(n: usize, minus: bool) -> Result<Self> {
        if n == 0 || 2 * n > MAX_V {
            return Err(GroupError::BadParameter(format!(
                "rank {n} outside 1..={}",
                MAX_V / 2
            )));
        }
        Self::extraspecial2(QuadraticFormF2::standard(n, minus))
    }

    pub fn ext_sq(p: u32) -> Result<Self> {
        check_prime(p)?;
        if p == 2 {
            return Err(GroupError::BadParameter("exterior square model needs odd p".into()));
        }
        // z0 = v1 w2 - v2 w1, z1 = v2 w0 - v0 w2, z2 = v0 w1 - v1 w0
        Ok(Self::with_tensor(p, 3, 3, Class2Kind::ExtSq, |k, i, j| {
            let (a, b) = ((k + 1) % 3, (k + 2) % 3);
            if i == a && j == b {
                1
            } else if i == b && j == a {
                p - 1
            } else {
                0
            }
        }))
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn dv(&self) -> usize {
        self.dv
    }

    pub fn dz(&self) -> usize {
        self.dz
    }

    pub fn kind(&self) -> &Class2Kind {
        &self.kind
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow((self.dv + self.dz) as u32)
    }

    /// `T(v, w)`.
    pub fn cocycle(&self, v: &[u8], w: &[u8]) -> [u8; MAX_Z] {
        let mut z = [0u8; MAX_Z];
        let dv = self.dv;
        for (k, zk) in z.iter_mut().enumerate().take(self.dz) {
            let mut acc = 0u32;
            for i in 0..dv {
                if v[i] == 0 {
                    continue;
                }
                let row = &self.tensor[(k * dv + i) * dv..(k * dv + i + 1) * dv];
                let mut s = 0u32;
                for j in 0..dv {
                    s += row[j] as u32 * w[j] as u32;
                }
                acc += v[i] as u32 * (s % self.p);
            }
            *zk = (acc % self.p) as u8;
        }
        z
    }
}

/// Element `(v, z)` of a [`Class2Model`] group.
#[derive(Clone)]
pub struct Class2Element {
    v: [u8; MAX_V],
    z: [u8; MAX_Z],
    model: Arc<Class2Model>,
}

impl PartialEq for Class2Element {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && self.z == other.z
    }
}

impl Eq for Class2Element {}

impl Hash for Class2Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.v.hash(state);
        self.z.hash(state);
    }
}

impl fmt::Debug for Class2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:?}, {:?})",
            &self.v[..self.model.dv],
            &self.z[..self.model.dz]
        )
    }
}

impl Class2Element {
    pub fn new(model: &Arc<Class2Model>, v: &[u8], z: &[u8]) -> Self {
        let p = model.p;
        let mut e = Class2Element {
            v: [0; MAX_V],
            z: [0; MAX_Z],
            model: model.clone(),
        };
        for (i, &x) in v.iter().enumerate().take(model.dv) {
            e.v[i] = (x as u32 % p) as u8;
        }
        for (k, &x) in z.iter().enumerate().take(model.dz) {
            e.z[k] = (x as u32 % p) as u8;
        }
        e
    }

    pub fn identity(model: &Arc<Class2Model>) -> Self {
        Self::new(model, &[], &[])
    }

    pub fn v(&self) -> &[u8] {
        &self.v[..self.model.dv]
    }

    pub fn z(&self) -> &[u8] {
        &self.z[..self.model.dz]
    }

    pub fn model(&self) -> &Arc<Class2Model> {
        &self.model
    }

    /// Bit mask of `v` (for models over F_2).
    pub fn v_mask(&self) -> u32 {
        self.v()
            .iter()
            .enumerate()
            .fold(0, |m, (i, &x)| m | ((x as u32 & 1) << i))
    }

    pub fn from_mask(model: &Arc<Class2Model>, v: u32, z: u32) -> Self {
        let bits: Vec<u8> = (0..model.dv).map(|i| ((v >> i) & 1) as u8).collect();
        Self::new(model, &bits, &[(z & 1) as u8])
    }
}

impl Element for Class2Element {
    fn op(&self, rhs: &Self) -> Self {
        let m = &self.model;
        let p = m.p as u16;
        let t = m.cocycle(&self.v, &rhs.v);
        let mut out = self.clone();
        for i in 0..m.dv {
            out.v[i] = ((self.v[i] as u16 + rhs.v[i] as u16) % p) as u8;
        }
        for k in 0..m.dz {
            out.z[k] = ((self.z[k] as u16 + rhs.z[k] as u16 + t[k] as u16) % p) as u8;
        }
        out
    }

    fn inv(&self) -> Self {
        // (v, z)^-1 = (-v, -z + T(v, v))
        let m = &self.model;
        let p = m.p as u16;
        let t = m.cocycle(&self.v, &self.v);
        let mut out = self.clone();
        for i in 0..m.dv {
            out.v[i] = ((p - self.v[i] as u16) % p) as u8;
        }
        for k in 0..m.dz {
            out.z[k] = ((2 * p - self.z[k] as u16 + t[k] as u16) % p) as u8;
        }
        out
    }
}

/// The group of a model, generated by the `(e_i, 0)`.
pub fn class2_group(model: Class2Model) -> Group<Class2Element> {
    let model = Arc::new(model);
    let gens = (0..model.dv)
        .map(|i| {
            let mut v = vec![0u8; model.dv];
            v[i] = 1;
            Class2Element::new(&model, &v, &[])
        })
        .collect();
    Group::with_context(Class2Element::identity(&model), gens, GroupContext::default())
}
