//! Dense linear algebra over a prime field F_p.
//!
//! Vectors are rows. A matrix `A` of shape `r x c` acts on row vectors of
//! length `r` by `x -> x A`, which matches the right-module convention used
//! throughout the crate.

use std::fmt;

/// A prime field F_p with `p < 2^16`, so products fit comfortably in `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
}

impl Fp {
    /// Returns `None` unless `p` is a prime below 65536.
    pub fn new(p: u32) -> Option<Self> {
        if is_prime(p) && p < (1 << 16) {
            Some(Fp { p })
        } else {
            None
        }
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn pow(self, mut a: u32, mut e: u32) -> u32 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Maps a signed integer into `[0, p)`.
    pub fn from_i64(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            m.row_mut(i).copy_from_slice(r);
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, f: Fp) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        let p = f.p() as u64;
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for (k, &a) in self.row(r).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    *slot += a as u64 * b as u64;
                }
                // keep the accumulator bounded
                if k % 1024 == 1023 {
                    acc.iter_mut().for_each(|x| *x %= p);
                }
            }
            for (dst, &a) in out.row_mut(r).iter_mut().zip(&acc) {
                *dst = (a % p) as u32;
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[u32], f: Fp) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let p = f.p() as u64;
        let mut acc = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (slot, &b) in acc.iter_mut().zip(self.row(k)) {
                *slot += a as u64 * b as u64;
            }
        }
        acc.into_iter().map(|x| (x % p) as u32).collect()
    }

    pub fn add(&self, other: &Matrix, f: Fp) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: u32, f: Fp) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, s)).collect(),
        }
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            m.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
            m.row_mut(r)[self.cols..].copy_from_slice(other.row(r));
        }
        m
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            m.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
        }
        for r in 0..other.rows {
            m.row_mut(self.rows + r)[self.cols..].copy_from_slice(other.row(r));
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(idx.len(), self.cols);
        for (i, &r) in idx.iter().enumerate() {
            m.row_mut(i).copy_from_slice(self.row(r));
        }
        m
    }

    pub fn push_row(&mut self, row: &[u32]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    /// Zero rows are dropped so the result has exactly `rank` rows.
    pub fn rref(&mut self, f: Fp) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead == self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            self.swap_rows(pr, lead);
            let inv = f.inv(self.get(lead, c));
            if inv != 1 {
                for x in self.row_mut(lead) {
                    *x = f.mul(*x, inv);
                }
            }
            let pivot_row = self.row(lead).to_vec();
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self.get(r, c);
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for (x, &y) in self.row_mut(r)[c..].iter_mut().zip(&pivot_row[c..]) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(neg, y));
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        self.rows = lead;
        self.data.truncate(lead * self.cols);
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self, f: Fp) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    /// Basis (as rows, in reduced echelon form) of the row space.
    pub fn row_space(&self, f: Fp) -> Matrix {
        let mut m = self.clone();
        m.rref(f);
        m
    }

    /// Basis of `{x : A x = 0}`, returned as rows.
    pub fn right_kernel(&self, f: Fp) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            k.set(i, fc, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                let v = m.get(r, fc);
                if v != 0 {
                    k.set(i, pc, f.neg(v));
                }
            }
        }
        k
    }

    /// Basis of `{x : x A = 0}`, returned as rows.
    pub fn left_kernel(&self, f: Fp) -> Matrix {
        self.transpose().right_kernel(f)
    }

    /// Solves `X A = B` for `X`, where the rows of `A` are linearly
    /// independent. Returns `None` if some row of `B` is not in the row space.
    pub fn solve_left(&self, b: &Matrix, f: Fp) -> Option<Matrix> {
        assert_eq!(self.cols, b.cols);
        // A^T X^T = B^T, solved column by column through one elimination.
        let at = self.transpose();
        let aug = at.hstack(&b.transpose());
        let mut m = aug;
        let pivots = m.rref(f);
        let n = self.rows;
        if pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut x = Matrix::zeros(b.rows, n);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.rows {
                x.set(j, pc, m.get(r, n + j));
            }
        }
        Some(x)
    }

    pub fn is_invertible(&self, f: Fp) -> bool {
        self.rows == self.cols && self.rank(f) == self.rows
    }

    /// Intersection of the row spaces of `self` and `other`, as a basis.
    pub fn row_space_intersection(&self, other: &Matrix, f: Fp) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let a = self.row_space(f);
        let b = other.row_space(f);
        if a.rows == 0 || b.rows == 0 {
            return Matrix::zeros(0, self.cols);
        }
        let stacked = a.vstack(&b);
        let k = stacked.left_kernel(f);
        let mut rows = Matrix::zeros(0, self.cols);
        for i in 0..k.rows() {
            let coeffs = &k.row(i)[..a.rows];
            rows.push_row(&a.apply(coeffs, f));
        }
        rows.row_space(f)
    }

    /// Standard basis vectors spanning a complement of the row space.
    pub fn complement_basis(&self, f: Fp) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(free.len(), self.cols);
        for (i, &c) in free.iter().enumerate() {
            out.set(i, c, 1);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Fp {
        Fp::new(p).unwrap()
    }

    #[test]
    fn field_inverses() {
        for p in [2, 3, 5, 7, 101] {
            let k = f(p);
            for a in 1..p {
                assert_eq!(k.mul(a, k.inv(a)), 1);
            }
        }
        assert!(Fp::new(4).is_none());
        assert!(Fp::new(1).is_none());
    }

    #[test]
    fn kernels_are_annihilated() {
        let k = f(3);
        let a = Matrix::from_rows(4, &[vec![1, 2, 0, 1], vec![2, 1, 0, 2], vec![0, 0, 1, 1]]);
        let rk = a.right_kernel(k);
        assert_eq!(rk.rows() + a.rank(k), 4);
        assert!(a.mul(&rk.transpose(), k).is_zero());
        let lk = a.left_kernel(k);
        assert_eq!(lk.rows() + a.rank(k), 3);
        assert!(lk.mul(&a, k).is_zero());
    }

    #[test]
    fn solve_left_roundtrip() {
        let k = f(5);
        let a = Matrix::from_rows(3, &[vec![1, 0, 2], vec![0, 1, 3]]);
        let x = Matrix::from_rows(2, &[vec![4, 1], vec![2, 2]]);
        let b = x.mul(&a, k);
        assert_eq!(a.solve_left(&b, k).unwrap(), x);
        let outside = Matrix::from_rows(3, &[vec![0, 0, 1]]);
        assert!(a.solve_left(&outside, k).is_none());
    }

    #[test]
    fn intersection_of_planes() {
        let k = f(2);
        let a = Matrix::from_rows(3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Matrix::from_rows(3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let i = a.row_space_intersection(&b, k);
        assert_eq!(i, Matrix::from_rows(3, &[vec![0, 1, 0]]));
        assert_eq!(a.complement_basis(k), Matrix::from_rows(3, &[vec![0, 0, 1]]));
    }
}
