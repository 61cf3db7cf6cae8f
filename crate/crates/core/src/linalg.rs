//! Dense linear algebra over a prime field.

use crate::field::PrimeField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
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

    pub fn from_rows(rows: &[Vec<u32>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(cols: &[Vec<u32>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v);
            }
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
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, f: &PrimeField, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let p = f.modulus() as u64;
        let mut out = Self::zeros(self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                let row = other.row(k);
                for (slot, &b) in acc.iter_mut().zip(row) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
            for (j, &v) in acc.iter().enumerate() {
                out.set(i, j, v as u32);
            }
        }
        out
    }

    pub fn mul_vec(&self, f: &PrimeField, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = f.modulus() as u64;
        (0..self.rows)
            .map(|i| {
                let mut s = 0u64;
                for (a, b) in self.row(i).iter().zip(v) {
                    s = (s + *a as u64 * *b as u64) % p;
                }
                s as u32
            })
            .collect()
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        DenseMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j));
            }
        }
        m
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self, f: &PrimeField) -> Vec<usize> {
        let p = f.modulus() as u64;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)) as u64;
            for j in c..self.cols {
                let v = self.get(r, j) as u64 * inv % p;
                self.set(r, j, v as u32);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c) as u64;
                if factor == 0 {
                    continue;
                }
                let neg = p - factor;
                for j in c..self.cols {
                    let pv = self.data[r * self.cols + j] as u64;
                    if pv == 0 {
                        continue;
                    }
                    let idx = i * self.cols + j;
                    self.data[idx] = ((self.data[idx] as u64 + neg * pv) % p) as u32;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &PrimeField) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Eliminate along the shorter side.
        if self.rows > self.cols {
            return self.transpose().rank(f);
        }
        let mut m = self.clone();
        m.row_echelon(f)
    }

    /// Forward elimination only; returns the rank.
    fn row_echelon(&mut self, f: &PrimeField) -> usize {
        let p = f.modulus() as u64;
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)) as u64;
            for i in r + 1..self.rows {
                let factor = self.get(i, c) as u64;
                if factor == 0 {
                    continue;
                }
                let scale = factor * inv % p;
                let neg = p - scale;
                for j in c..self.cols {
                    let pv = self.data[r * self.cols + j] as u64;
                    if pv == 0 {
                        continue;
                    }
                    let idx = i * self.cols + j;
                    self.data[idx] = ((self.data[idx] as u64 + neg * pv) % p) as u32;
                }
            }
            r += 1;
        }
        r
    }

    /// Basis of the right kernel `{v : self * v = 0}`, as column vectors.
    pub fn kernel(&self, f: &PrimeField) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = b` if consistent.
    pub fn solve(&self, f: &PrimeField, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let bm = DenseMatrix::from_columns(&[b.to_vec()], self.rows);
        let mut aug = self.hstack(&bm);
        let pivots = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols);
        }
        Some(x)
    }
}

/// Rank of a set of vectors of a common length.
pub fn rank_of(f: &PrimeField, vectors: &[Vec<u32>], len: usize) -> usize {
    if vectors.is_empty() || len == 0 {
        return 0;
    }
    DenseMatrix::from_rows(vectors, len).rank(f)
}
