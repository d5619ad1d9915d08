use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{GroupError, Result};

pub const MAX_PRIME: u32 = 251;
pub const MAX_DIM: usize = 16;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn pow_mod(mut base: u32, mut exp: u64, p: u32) -> u32 {
    let mut acc = 1u64 % p as u64;
    let mut b = base as u64 % p as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u64;
        }
        b = b * b % p as u64;
        exp >>= 1;
    }
    base = acc as u32;
    base
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub fn inv_mod(a: u32, p: u32) -> Option<u32> {
    let a = a % p;
    if a == 0 {
        None
    } else {
        Some(pow_mod(a, (p - 2) as u64, p))
    }
}

/// Multiplicative order of `a` modulo `p` (`a` nonzero).
pub fn mult_order(a: u32, p: u32) -> u32 {
    let a = a % p;
    assert!(a != 0, "zero has no multiplicative order");
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = (x as u64 * a as u64 % p as u64) as u32;
        k += 1;
    }
    k
}

pub fn primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    (2..p).find(|&g| mult_order(g, p) == p - 1).expect("primes have primitive roots")
}

pub(crate) fn check_prime(p: u32) -> Result<()> {
    if !is_prime(p as u64) || p > MAX_PRIME {
        return Err(GroupError::BadParameter(format!(
            "modulus {p} must be a prime at most {MAX_PRIME}"
        )));
    }
    Ok(())
}

/// Square matrix over the prime field F_p, entries stored row-major as residues.
#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: u32,
    n: usize,
    entries: Vec<u8>,
}

impl Hash for FpMatrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.p.hash(state);
        self.packed().hash(state);
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}[", self.p)?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl FpMatrix {
    /// Builds a matrix from row-major entries, reducing each entry mod `p`.
    pub fn new(p: u32, n: usize, entries: &[i64]) -> Result<Self> {
        check_prime(p)?;
        if n == 0 || n > MAX_DIM {
            return Err(GroupError::BadParameter(format!(
                "dimension {n} outside 1..={MAX_DIM}"
            )));
        }
        if entries.len() != n * n {
            return Err(GroupError::BadParameter(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        let entries = entries
            .iter()
            .map(|&e| e.rem_euclid(p as i64) as u8)
            .collect();
        Ok(FpMatrix { p, n, entries })
    }

    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        Self::new(p, n, &flat)
    }

    pub fn identity(p: u32, n: usize) -> Self {
        Self::scalar(p, n, 1)
    }

    pub fn scalar(p: u32, n: usize, c: u32) -> Self {
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            entries[i * n + i] = (c % p) as u8;
        }
        FpMatrix { p, n, entries }
    }

    pub fn diag(p: u32, d: &[u32]) -> Self {
        let n = d.len();
        let mut m = Self::scalar(p, n, 0);
        for (i, &x) in d.iter().enumerate() {
            m.entries[i * n + i] = (x % p) as u8;
        }
        m
    }

    pub fn zero(p: u32, n: usize) -> Self {
        Self::scalar(p, n, 0)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j] as u32
    }

    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.entries[i * self.n + j] = (value % self.p) as u8;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// Canonical packed encoding: row-major, `ceil(log2 p)` bits per entry.
    pub fn packed(&self) -> Vec<u8> {
        let bits = 32 - (self.p - 1).leading_zeros();
        let bits = bits.max(1) as usize;
        let mut out = vec![0u8; (self.entries.len() * bits).div_ceil(8)];
        let mut pos = 0usize;
        for &e in &self.entries {
            for b in 0..bits {
                if (e >> b) & 1 == 1 {
                    out[pos / 8] |= 1 << (pos % 8);
                }
                pos += 1;
            }
        }
        out
    }

    pub fn mul(&self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        let n = self.n;
        let p = self.p;
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u32;
                for k in 0..n {
                    acc += self.entries[i * n + k] as u32 * rhs.entries[k * n + j] as u32;
                }
                entries[i * n + j] = (acc % p) as u8;
            }
        }
        FpMatrix { p, n, entries }
    }

    pub fn transpose(&self) -> FpMatrix {
        let n = self.n;
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        FpMatrix {
            p: self.p,
            n,
            entries,
        }
    }

    pub fn scale(&self, c: u32) -> FpMatrix {
        let p = self.p;
        let entries = self
            .entries
            .iter()
            .map(|&e| ((e as u32 * (c % p)) % p) as u8)
            .collect();
        FpMatrix {
            p,
            n: self.n,
            entries,
        }
    }

    pub fn pow(&self, mut k: u64) -> FpMatrix {
        let mut acc = FpMatrix::identity(self.p, self.n);
        let mut b = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == (i == j) as u32))
    }

    /// Returns `Some(c)` when the matrix is the scalar `c * I`.
    pub fn as_scalar(&self) -> Option<u32> {
        let c = self.get(0, 0);
        (0..self.n)
            .all(|i| (0..self.n).all(|j| self.get(i, j) == if i == j { c } else { 0 }))
            .then_some(c)
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[u8]) -> Vec<u8> {
        let n = self.n;
        let mut out = vec![0u8; n];
        for (j, o) in out.iter_mut().enumerate() {
            let mut acc = 0u32;
            for (i, &vi) in v.iter().enumerate().take(n) {
                acc += vi as u32 * self.entries[i * n + j] as u32;
            }
            *o = (acc % self.p) as u8;
        }
        out
    }

    /// Gaussian elimination: returns the inverse and the determinant.
    pub fn invert(&self) -> Result<(FpMatrix, u32)> {
        let n = self.n;
        let p = self.p;
        let mut a: Vec<u32> = self.entries.iter().map(|&e| e as u32).collect();
        let mut inv: Vec<u32> = FpMatrix::identity(p, n)
            .entries
            .iter()
            .map(|&e| e as u32)
            .collect();
        let mut det = 1u32;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| a[r * n + col] != 0)
                .ok_or(GroupError::Singular { p })?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
                det = (p - det) % p;
            }
            let pv = a[col * n + col];
            det = det * pv % p;
            let pinv = inv_mod(pv, p).expect("pivot nonzero");
            for j in 0..n {
                a[col * n + j] = a[col * n + j] * pinv % p;
                inv[col * n + j] = inv[col * n + j] * pinv % p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col];
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = (a[r * n + j] + p * p - f * a[col * n + j]) % p;
                    inv[r * n + j] = (inv[r * n + j] + p * p - f * inv[col * n + j]) % p;
                }
            }
        }
        let entries = inv.into_iter().map(|e| e as u8).collect();
        Ok((FpMatrix { p, n, entries }, det))
    }

    pub fn det(&self) -> u32 {
        match self.invert() {
            Ok((_, d)) => d,
            Err(_) => 0,
        }
    }

    pub fn inverse(&self) -> Result<FpMatrix> {
        self.invert().map(|(m, _)| m)
    }
}

/// Inverse and determinant of `a`; fails with `Singular` when `det(a) = 0`.
pub fn mat_invert(a: &FpMatrix) -> Result<(FpMatrix, u32)> {
    a.invert()
}

/// The action of `a` on the exterior square of F_p^3 in the basis
/// e2^e3, e3^e1, e1^e2, namely `det(a) * (a^-1)^T`.
pub fn wedge_square(a: &FpMatrix) -> Result<FpMatrix> {
    if a.dim() != 3 {
        return Err(GroupError::BadParameter(format!(
            "wedge square is defined here for dimension 3, got {}",
            a.dim()
        )));
    }
    let (inv, det) = a.invert()?;
    Ok(inv.transpose().scale(det))
}

/// Coordinates of `v ^ w` in the basis e2^e3, e3^e1, e1^e2.
pub fn wedge(p: u32, v: &[u8], w: &[u8]) -> [u8; 3] {
    let m = |a: u8, b: u8| a as u32 * b as u32;
    let sub = |x: u32, y: u32| ((x + p * p - y) % p) as u8;
    [
        sub(m(v[1], w[2]), m(v[2], w[1])),
        sub(m(v[2], w[0]), m(v[0], w[2])),
        sub(m(v[0], w[1]), m(v[1], w[0])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cofactor_det(m: &FpMatrix) -> u32 {
        // Laplace expansion along the first row.
        fn rec(rows: &[Vec<i64>]) -> i64 {
            let n = rows.len();
            if n == 1 {
                return rows[0][0];
            }
            let mut acc = 0;
            for j in 0..n {
                let minor: Vec<Vec<i64>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                acc += sign * rows[0][j] * rec(&minor);
            }
            acc
        }
        let rows: Vec<Vec<i64>> = (0..m.dim())
            .map(|i| (0..m.dim()).map(|j| m.get(i, j) as i64).collect())
            .collect();
        rec(&rows).rem_euclid(m.modulus() as i64) as u32
    }

    fn random_matrix(rng: &mut ChaCha8Rng, p: u32, n: usize) -> FpMatrix {
        let e: Vec<i64> = (0..n * n).map(|_| rng.gen_range(0..p as i64)).collect();
        FpMatrix::new(p, n, &e).unwrap()
    }

    fn random_invertible(rng: &mut ChaCha8Rng, p: u32, n: usize) -> FpMatrix {
        loop {
            let m = random_matrix(rng, p, n);
            if m.det() != 0 {
                return m;
            }
        }
    }

    #[test]
    fn identity_inverts_to_itself() {
        let i = FpMatrix::identity(3, 3);
        let (inv, det) = mat_invert(&i).unwrap();
        assert_eq!(inv, i);
        assert_eq!(det, 1);
    }

    #[test]
    fn diagonal_inverse_over_f7() {
        let a = FpMatrix::diag(7, &[2, 3]);
        let (inv, det) = mat_invert(&a).unwrap();
        assert_eq!(inv, FpMatrix::diag(7, &[4, 5]));
        assert_eq!(det, 6);
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let a = FpMatrix::new(5, 2, &[1, 2, 2, 4]).unwrap();
        assert_eq!(mat_invert(&a), Err(GroupError::Singular { p: 5 }));
    }

    #[test]
    fn random_inverses_and_cofactor_determinants() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..100 {
            let n = 1 + trial % 3;
            let a = random_invertible(&mut rng, 7, n);
            let (inv, det) = mat_invert(&a).unwrap();
            assert!(a.mul(&inv).is_identity());
            assert_eq!(det, cofactor_det(&a));
        }
        for _ in 0..50 {
            let a = random_matrix(&mut rng, 3, 3);
            assert_eq!(a.det(), cofactor_det(&a));
        }
    }

    #[test]
    fn wedge_square_of_identity_and_diagonal() {
        let i = FpMatrix::identity(7, 3);
        assert_eq!(wedge_square(&i).unwrap(), i);
        let (a, b, c) = (2u32, 3u32, 5u32);
        let d = FpMatrix::diag(7, &[a, b, c]);
        assert_eq!(
            wedge_square(&d).unwrap(),
            FpMatrix::diag(7, &[b * c, c * a, a * b])
        );
    }

    #[test]
    fn wedge_square_is_multiplicative_and_intertwines() {
        for p in [3u32, 5, 7] {
            let mut rng = ChaCha8Rng::seed_from_u64(p as u64);
            for _ in 0..100 {
                let a = random_invertible(&mut rng, p, 3);
                let b = random_invertible(&mut rng, p, 3);
                let la = wedge_square(&a).unwrap();
                let lb = wedge_square(&b).unwrap();
                assert_eq!(wedge_square(&a.mul(&b)).unwrap(), la.mul(&lb));
                for i in 0..3 {
                    for j in 0..3 {
                        let mut v = [0u8; 3];
                        let mut w = [0u8; 3];
                        v[i] = 1;
                        w[j] = 1;
                        let lhs = wedge(p, &a.apply_row(&v), &a.apply_row(&w));
                        let rhs = la.apply_row(&wedge(p, &v, &w));
                        assert_eq!(lhs.to_vec(), rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn packed_encoding_distinguishes_matrices() {
        let a = FpMatrix::new(7, 2, &[1, 2, 3, 4]).unwrap();
        let b = FpMatrix::new(7, 2, &[1, 2, 3, 5]).unwrap();
        assert_eq!(a.packed().len(), 2);
        assert_ne!(a.packed(), b.packed());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(FpMatrix::new(9, 2, &[1, 0, 0, 1]).is_err());
    }
}
