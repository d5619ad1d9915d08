use crate::error::{GroupError, Result};
use crate::fpalgebra::matrix::{inv_mod, FpMatrix};

/// Nondegenerate alternating form on F_p^{2n}, stored by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticForm {
    gram: FpMatrix,
}

impl SymplecticForm {
    /// The standard form with Gram matrix `[[0, I], [-I, 0]]`.
    pub fn standard(p: u32, half_dim: usize) -> Self {
        let n = 2 * half_dim;
        let mut gram = FpMatrix::zero(p, n);
        for i in 0..half_dim {
            gram.set(i, half_dim + i, 1);
            gram.set(half_dim + i, i, p - 1);
        }
        SymplecticForm { gram }
    }

    pub fn from_gram(gram: FpMatrix) -> Result<Self> {
        let n = gram.dim();
        let p = gram.modulus();
        for i in 0..n {
            if gram.get(i, i) != 0 {
                return Err(GroupError::BadParameter("form has nonzero diagonal".into()));
            }
            for j in 0..n {
                if (gram.get(i, j) + gram.get(j, i)) % p != 0 {
                    return Err(GroupError::BadParameter("form is not antisymmetric".into()));
                }
            }
        }
        if gram.det() == 0 {
            return Err(GroupError::BadParameter("form is degenerate".into()));
        }
        Ok(SymplecticForm { gram })
    }

    pub fn gram(&self) -> &FpMatrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.dim()
    }

    pub fn modulus(&self) -> u32 {
        self.gram.modulus()
    }

    pub fn eval(&self, v: &[u8], w: &[u8]) -> u32 {
        let gw = self.gram.transpose().apply_row(w);
        let p = self.modulus();
        v.iter()
            .zip(gw.iter())
            .map(|(&a, &b)| a as u32 * b as u32)
            .sum::<u32>()
            % p
    }
}

/// Returns the scalar `l` with `A J A^T = l J`, or `NotSimilitude`.
pub fn similitude_factor(a: &FpMatrix, form: &SymplecticForm) -> Result<u32> {
    if a.dim() != form.dim() || a.modulus() != form.modulus() {
        return Err(GroupError::BadParameter(
            "matrix and form dimensions differ".into(),
        ));
    }
    let p = a.modulus();
    let j = form.gram();
    let image = a.mul(j).mul(&a.transpose());
    let n = a.dim();
    let (i0, j0) = (0..n)
        .flat_map(|i| (0..n).map(move |k| (i, k)))
        .find(|&(i, k)| j.get(i, k) != 0)
        .expect("nondegenerate form has a nonzero entry");
    let lambda = image.get(i0, j0) * inv_mod(j.get(i0, j0), p).unwrap() % p;
    if lambda == 0 || image != j.scale(lambda) {
        return Err(GroupError::NotSimilitude);
    }
    Ok(lambda)
}

/// Quadratic form on F_2^m (m <= 16): `q(v) = sum_{i<=j} c_ij v_i v_j`.
///
/// Vectors are bit masks, bit `i` holding coordinate `i`. Row `i` of the
/// coefficient table is the mask of those `j >= i` with `c_ij = 1`, so the
/// diagonal bits form the linear part.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticFormF2 {
    dim: usize,
    upper: Vec<u32>,
}

impl QuadraticFormF2 {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= 16, "quadratic forms are supported up to dimension 16");
        QuadraticFormF2 {
            dim,
            upper: vec![0; dim],
        }
    }

    /// Builds a form from its upper-triangular coefficient rows; bits below the
    /// diagonal are discarded.
    pub fn from_upper(dim: usize, rows: &[u32]) -> Self {
        let mut q = Self::zero(dim);
        for (i, &r) in rows.iter().enumerate().take(dim) {
            q.upper[i] = r & !((1u32 << i) - 1) & ((1u32 << dim) - 1);
        }
        q
    }

    /// The hyperbolic form `x_1y_1 + ... + x_ny_n` on coordinates
    /// `(x_1..x_n, y_1..y_n)`, plus `x_1^2 + y_1^2` when `minus` is set.
    pub fn standard(n: usize, minus: bool) -> Self {
        let mut q = Self::zero(2 * n);
        for i in 0..n {
            q.upper[i] |= 1 << (n + i);
        }
        if minus {
            q.upper[0] |= 1;
            q.upper[n] |= 1 << n;
        }
        q
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn upper_rows(&self) -> &[u32] {
        &self.upper
    }

    pub fn coeff(&self, i: usize, j: usize) -> u32 {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        (self.upper[i] >> j) & 1
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, value: u32) {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        if value & 1 == 1 {
            self.upper[i] |= 1 << j;
        } else {
            self.upper[i] &= !(1 << j);
        }
    }

    /// The upper-triangular cocycle `B(v, w) = sum_{i<=j} c_ij v_i w_j`;
    /// `B(v, v) = q(v)`.
    pub fn cocycle(&self, v: u32, w: u32) -> u32 {
        let mut acc = 0;
        for i in 0..self.dim {
            if (v >> i) & 1 == 1 {
                acc ^= (w & self.upper[i]).count_ones() & 1;
            }
        }
        acc
    }

    pub fn eval(&self, v: u32) -> u32 {
        self.cocycle(v, v)
    }

    /// Polarization `q(v+w) + q(v) + q(w)`.
    pub fn polar(&self, v: u32, w: u32) -> u32 {
        self.cocycle(v, w) ^ self.cocycle(w, v)
    }

    pub fn linear_part(&self) -> u32 {
        (0..self.dim)
            .filter(|&i| (self.upper[i] >> i) & 1 == 1)
            .fold(0, |m, i| m | (1 << i))
    }

    pub fn is_nondegenerate(&self) -> bool {
        if self.dim % 2 == 1 {
            return false;
        }
        // Rank of the polarization via elimination on bit rows.
        let mut rows: Vec<u32> = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .filter(|&j| self.polar(1 << i, 1 << j) == 1)
                    .fold(0, |m, j| m | (1 << j))
            })
            .collect();
        let mut rank = 0;
        for bit in 0..self.dim {
            if let Some(pos) = (rank..rows.len()).find(|&r| (rows[r] >> bit) & 1 == 1) {
                rows.swap(rank, pos);
                for r in 0..rows.len() {
                    if r != rank && (rows[r] >> bit) & 1 == 1 {
                        rows[r] ^= rows[rank];
                    }
                }
                rank += 1;
            }
        }
        rank == self.dim
    }

    /// Number of zeros of `q` on F_2^m, counted exhaustively.
    pub fn zero_count(&self) -> u64 {
        (0..1u32 << self.dim).filter(|&v| self.eval(v) == 0).count() as u64
    }

    /// Arf invariant of a nondegenerate form: 1 exactly when `q` has
    /// `2^{2n-1} - 2^{n-1}` zeros (minus type).
    pub fn arf(&self) -> Option<u32> {
        if !self.is_nondegenerate() {
            return None;
        }
        let half = self.dim / 2;
        let plus = (1u64 << (self.dim - 1)) + (1u64 << (half - 1));
        Some(if self.zero_count() == plus { 0 } else { 1 })
    }

    /// Precomposition `v -> q(v A)` with a matrix over F_2 given by row masks.
    pub fn precompose(&self, rows: &[u32]) -> QuadraticFormF2 {
        let image = |v: u32| apply_rows_f2(v, rows);
        let mut out = QuadraticFormF2::zero(self.dim);
        for i in 0..self.dim {
            out.set_coeff(i, i, self.eval(image(1 << i)));
            for j in i + 1..self.dim {
                out.set_coeff(i, j, self.polar(image(1 << i), image(1 << j)));
            }
        }
        out
    }

    pub fn add(&self, other: &QuadraticFormF2) -> QuadraticFormF2 {
        QuadraticFormF2 {
            dim: self.dim,
            upper: self
                .upper
                .iter()
                .zip(&other.upper)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }
}

/// Row vector (bit mask) times a matrix over F_2 given by row masks.
pub fn apply_rows_f2(v: u32, rows: &[u32]) -> u32 {
    rows.iter()
        .enumerate()
        .filter(|&(i, _)| (v >> i) & 1 == 1)
        .fold(0, |acc, (_, &r)| acc ^ r)
}

/// Row masks of a matrix over F_2.
pub fn f2_rows(a: &FpMatrix) -> Vec<u32> {
    assert_eq!(a.modulus(), 2, "expected a matrix over F_2");
    (0..a.dim())
        .map(|i| {
            a.row(i)
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e == 1)
                .fold(0, |m, (j, _)| m | (1 << j))
        })
        .collect()
}

pub fn f2_matrix(rows: &[u32]) -> FpMatrix {
    let n = rows.len();
    let mut m = FpMatrix::zero(2, n);
    for (i, &r) in rows.iter().enumerate() {
        for j in 0..n {
            m.set(i, j, (r >> j) & 1);
        }
    }
    m
}
