//! Dense exact linear algebra: generic integer matrices and prime-field
//! elimination.
//!
//! The matrix container is generic over the scalar; integer instantiations
//! get ring arithmetic through `num-traits`, while arithmetic mod p is done
//! through an explicit [`PrimeField`] context so the modulus can be chosen
//! at run time.

use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(rows * cols, data.len());
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                out.push(self[(i, j)].clone());
            }
        }
        Matrix::from_vec(self.cols, self.rows, out)
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, T::zero())
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Ring scalars the generic matrix arithmetic works over.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

impl<T: Scalar> Matrix<T> {
    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows);
        let mut out: Matrix<T> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = out[(i, j)].clone() + a.clone() * other[(k, j)].clone();
                    out[(i, j)] = t;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc = acc + self[(i, j)].clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    pub fn sub(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Matrix::from_vec(self.rows, self.cols, data)
    }

}

impl<T: Clone + Zero + One + PartialEq> Matrix<T> {
    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }
}

/// Exact rank of an integer matrix via fraction-free (Bareiss) elimination.
///
/// Intermediate values are kept in i128; fine for the small lattice and
/// Cartan-sized matrices this crate works with.
pub fn int_rank(m: &Matrix<i64>) -> usize {
    let rows = m.rows;
    let cols = m.cols;
    let mut a: Vec<i128> = m.data.iter().map(|&x| x as i128).collect();
    let at = |a: &[i128], i: usize, j: usize| a[i * cols + j];
    let mut rank = 0;
    let mut prev = 1i128;
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let pivot = (row..rows).find(|&r| at(&a, r, col) != 0);
        let Some(p) = pivot else { continue };
        if p != row {
            for j in 0..cols {
                a.swap(row * cols + j, p * cols + j);
            }
        }
        let piv = at(&a, row, col);
        for r in row + 1..rows {
            let lead = at(&a, r, col);
            for j in 0..cols {
                let v = (piv * at(&a, r, j) - lead * at(&a, row, j)) / prev;
                a[r * cols + j] = v;
            }
        }
        prev = piv;
        row += 1;
        rank += 1;
    }
    rank
}

/// Rank of the stacked matrix [rows of `base`; `extra`].
pub fn int_rank_with_row(base: &[&[i64]], extra: Option<&[i64]>) -> usize {
    let cols = base.first().map(|r| r.len()).unwrap_or_else(|| {
        extra.map(|e| e.len()).unwrap_or(0)
    });
    let mut data = Vec::new();
    let mut rows = 0;
    for r in base {
        data.extend_from_slice(r);
        rows += 1;
    }
    if let Some(e) = extra {
        data.extend_from_slice(e);
        rows += 1;
    }
    if rows == 0 {
        return 0;
    }
    int_rank(&Matrix::from_vec(rows, cols, data))
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Solves sum_i x_i cols[i] = target exactly over Q.  The columns must be
/// linearly independent; returns the coefficients as reduced fractions
/// (num, den) with den > 0, or None when the target is outside the span.
pub fn solve_columns_exact(cols: &[&[i64]], target: &[i64]) -> Option<Vec<(i128, i128)>> {
    let m = target.len();
    let k = cols.len();
    if k == 0 {
        return if target.iter().all(|&t| t == 0) {
            Some(vec![])
        } else {
            None
        };
    }
    // Augmented system [cols | target] over Q, stored as (num, den).
    let mut a: Vec<(i128, i128)> = Vec::with_capacity(m * (k + 1));
    for i in 0..m {
        for c in cols {
            a.push((c[i] as i128, 1));
        }
        a.push((target[i] as i128, 1));
    }
    let w = k + 1;
    let norm = |(n, d): (i128, i128)| -> (i128, i128) {
        if n == 0 {
            return (0, 1);
        }
        let g = gcd128(n, d);
        let s = if d < 0 { -1 } else { 1 };
        (s * n / g, s * d / g)
    };
    let sub = |x: (i128, i128), y: (i128, i128)| norm((x.0 * y.1 - y.0 * x.1, x.1 * y.1));
    let mul = |x: (i128, i128), y: (i128, i128)| norm((x.0 * y.0, x.1 * y.1));
    let div = |x: (i128, i128), y: (i128, i128)| norm((x.0 * y.1, x.1 * y.0));

    let mut pivot_rows = vec![usize::MAX; k];
    let mut row = 0;
    for col in 0..k {
        let p = (row..m).find(|&r| a[r * w + col].0 != 0)?;
        for j in 0..w {
            a.swap(row * w + j, p * w + j);
        }
        let piv = a[row * w + col];
        for r in 0..m {
            if r == row || a[r * w + col].0 == 0 {
                continue;
            }
            let f = div(a[r * w + col], piv);
            for j in col..w {
                let t = sub(a[r * w + j], mul(f, a[row * w + j]));
                a[r * w + j] = t;
            }
        }
        pivot_rows[col] = row;
        row += 1;
    }
    // Any leftover rows must be 0 = 0.
    for r in row..m {
        if a[r * w + k].0 != 0 {
            return None;
        }
    }
    let mut sol = Vec::with_capacity(k);
    for col in 0..k {
        let r = pivot_rows[col];
        let piv = a[r * w + col];
        let (n, d) = div(a[r * w + k], piv);
        sol.push((n, d));
    }
    Some(sol)
}

/// Arithmetic context for the prime field F_p.
///
/// Entries of mod-p matrices are stored as `u64` already reduced into
/// `0..p`; all ops go through this context so the modulus is explicit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        PrimeField { p }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "division by zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    /// A square root of `a`, if one exists (p is tiny; linear scan).
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        (0..self.p).find(|&x| self.mul(x, x) == a)
    }

    pub fn mat_mul(&self, a: &Matrix<u64>, b: &Matrix<u64>) -> Matrix<u64> {
        assert_eq!(a.cols, b.rows);
        let mut out = Matrix::zeros(a.rows, b.cols);
        for i in 0..a.rows {
            for k in 0..a.cols {
                let s = a[(i, k)];
                if s == 0 {
                    continue;
                }
                for j in 0..b.cols {
                    out[(i, j)] = (out[(i, j)] + s * b[(k, j)]) % self.p;
                }
            }
        }
        out
    }

    pub fn mat_vec(&self, a: &Matrix<u64>, v: &[u64]) -> Vec<u64> {
        assert_eq!(a.cols, v.len());
        (0..a.rows)
            .map(|i| {
                let mut acc = 0u64;
                for j in 0..a.cols {
                    acc = (acc + a[(i, j)] * v[j]) % self.p;
                }
                acc
            })
            .collect()
    }

    /// Gaussian-elimination rank; the input is consumed by value.
    pub fn rank(&self, mut m: Matrix<u64>) -> usize {
        let rows = m.rows;
        let cols = m.cols;
        let mut rank = 0;
        let mut row = 0;
        for col in 0..cols {
            if row >= rows {
                break;
            }
            let pivot = (row..rows).find(|&r| m[(r, col)] != 0);
            let Some(p) = pivot else { continue };
            if p != row {
                for j in 0..cols {
                    let t = m[(p, j)];
                    m[(p, j)] = m[(row, j)];
                    m[(row, j)] = t;
                }
            }
            let inv = self.inv(m[(row, col)]);
            for r in row + 1..rows {
                let lead = self.mul(m[(r, col)], inv);
                if lead == 0 {
                    continue;
                }
                for j in col..cols {
                    let v = self.sub(m[(r, j)], self.mul(lead, m[(row, j)]));
                    m[(r, j)] = v;
                }
            }
            row += 1;
            rank += 1;
        }
        rank
    }

    /// Inverse of a square matrix; None if singular.
    pub fn mat_inv(&self, m: &Matrix<u64>) -> Option<Matrix<u64>> {
        assert_eq!(m.rows, m.cols);
        let n = m.rows;
        let mut a = m.clone();
        let mut inv = Matrix::<u64>::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[(r, col)] != 0)?;
            if pivot != col {
                for j in 0..n {
                    let t = a[(pivot, j)];
                    a[(pivot, j)] = a[(col, j)];
                    a[(col, j)] = t;
                    let t = inv[(pivot, j)];
                    inv[(pivot, j)] = inv[(col, j)];
                    inv[(col, j)] = t;
                }
            }
            let piv_inv = self.inv(a[(col, col)]);
            for j in 0..n {
                a[(col, j)] = self.mul(a[(col, j)], piv_inv);
                inv[(col, j)] = self.mul(inv[(col, j)], piv_inv);
            }
            for r in 0..n {
                if r == col || a[(r, col)] == 0 {
                    continue;
                }
                let lead = a[(r, col)];
                for j in 0..n {
                    let v = self.sub(a[(r, j)], self.mul(lead, a[(col, j)]));
                    a[(r, j)] = v;
                    let v = self.sub(inv[(r, j)], self.mul(lead, inv[(col, j)]));
                    inv[(r, j)] = v;
                }
            }
        }
        Some(inv)
    }

    pub fn mat_pow(&self, m: &Matrix<u64>, mut e: u128) -> Matrix<u64> {
        let mut base = m.clone();
        let mut acc = Matrix::<u64>::identity(m.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mat_mul(&acc, &base);
            }
            base = self.mat_mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_rank_basics() {
        let m = Matrix::from_vec(2, 2, vec![1i64, 2, 2, 4]);
        assert_eq!(int_rank(&m), 1);
        let id = Matrix::<i64>::identity(4);
        assert_eq!(int_rank(&id), 4);
        let z = Matrix::<i64>::zeros(3, 3);
        assert_eq!(int_rank(&z), 0);
    }

    #[test]
    fn fp_rank_and_inverse() {
        let f = PrimeField::new(5);
        let m = Matrix::from_vec(2, 2, vec![1u64, 2, 3, 4]);
        assert_eq!(f.rank(m.clone()), 2);
        let inv = f.mat_inv(&m).unwrap();
        assert!(f.mat_mul(&m, &inv).is_identity());
        // det = 1*4 - 2*3 = -2 = 3 mod 5, invertible; a singular case:
        let s = Matrix::from_vec(2, 2, vec![1u64, 2, 2, 4]);
        assert_eq!(f.rank(s.clone()), 1);
        assert!(f.mat_inv(&s).is_none());
    }

    #[test]
    fn generic_mul_matches_fp() {
        let f = PrimeField::new(7);
        let a = Matrix::from_vec(2, 3, vec![1i64, -2, 3, 4, 5, -6]);
        let b = Matrix::from_vec(3, 2, vec![2i64, 0, 1, -1, 3, 3]);
        let c = a.mul(&b);
        let fa = a.map(|&x| f.reduce(x));
        let fb = b.map(|&x| f.reduce(x));
        let fc = f.mat_mul(&fa, &fb);
        assert_eq!(c.map(|&x| f.reduce(x)), fc);
    }
}
