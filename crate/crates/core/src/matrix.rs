//! Graded matrices: degree-zero maps between twisted free modules.

use crate::error::{AlgebraError, Result};
use crate::poly::Poly;
use crate::ring::PolyRing;
use crate::vector::Vector;

/// A map `F_1 -> F_0` where `F_0 = ⊕ R(-row_degs[i])` and
/// `F_1 = ⊕ R(-col_degs[j])`. Entry `(i, j)` is zero or homogeneous of
/// degree `col_degs[j] - row_degs[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    row_degs: Vec<i32>,
    col_degs: Vec<i32>,
    entries: Vec<Vec<Poly>>,
}

impl GradedMatrix {
    pub fn new(row_degs: Vec<i32>, col_degs: Vec<i32>, entries: Vec<Vec<Poly>>) -> Result<Self> {
        if entries.len() != row_degs.len() {
            return Err(AlgebraError::LengthMismatch {
                left: entries.len(),
                right: row_degs.len(),
            });
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != col_degs.len() {
                return Err(AlgebraError::LengthMismatch {
                    left: row.len(),
                    right: col_degs.len(),
                });
            }
            for (j, e) in row.iter().enumerate() {
                if !e.is_homogeneous() {
                    return Err(AlgebraError::Inhomogeneous);
                }
                if let Some(d) = e.degree() {
                    if d as i32 != col_degs[j] - row_degs[i] {
                        return Err(AlgebraError::EntryDegree(i, j));
                    }
                }
            }
        }
        Ok(GradedMatrix {
            row_degs,
            col_degs,
            entries,
        })
    }

    /// Matrix whose columns are the given homogeneous vectors of `F_0`.
    pub fn from_columns(row_degs: &[i32], cols: &[Vector]) -> Result<Self> {
        let rank = row_degs.len();
        let mut entries = vec![vec![Poly::zero(); cols.len()]; rank];
        let mut col_degs = Vec::with_capacity(cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.max_comp().is_some_and(|m| m as usize >= rank) {
                return Err(AlgebraError::AmbientMismatch);
            }
            if !c.is_homogeneous(row_degs) {
                return Err(AlgebraError::Inhomogeneous);
            }
            col_degs.push(c.degree(row_degs).unwrap_or(0));
            for (i, p) in c.to_polys(rank).into_iter().enumerate() {
                entries[i][j] = p;
            }
        }
        Ok(GradedMatrix {
            row_degs: row_degs.to_vec(),
            col_degs,
            entries,
        })
    }

    pub fn zero(row_degs: Vec<i32>, col_degs: Vec<i32>) -> Self {
        let entries = vec![vec![Poly::zero(); col_degs.len()]; row_degs.len()];
        GradedMatrix {
            row_degs,
            col_degs,
            entries,
        }
    }

    pub fn nrows(&self) -> usize {
        self.row_degs.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_degs.len()
    }

    pub fn row_degs(&self) -> &[i32] {
        &self.row_degs
    }

    pub fn col_degs(&self) -> &[i32] {
        &self.col_degs
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i][j]
    }

    pub fn column(&self, j: usize) -> Vector {
        let polys: Vec<Poly> = self.entries.iter().map(|r| r[j].clone()).collect();
        Vector::from_polys(&polys)
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.ncols()).map(|j| self.column(j)).collect()
    }

    /// The dual map `F_0^* -> F_1^*`.
    pub fn transpose(&self) -> GradedMatrix {
        let entries = (0..self.ncols())
            .map(|j| (0..self.nrows()).map(|i| self.entries[i][j].clone()).collect())
            .collect();
        GradedMatrix {
            row_degs: self.col_degs.iter().map(|d| -d).collect(),
            col_degs: self.row_degs.iter().map(|d| -d).collect(),
            entries,
        }
    }

    /// `self * other`; requires `other`'s rows to match `self`'s columns.
    pub fn compose(&self, ring: &PolyRing, other: &GradedMatrix) -> Result<GradedMatrix> {
        if self.col_degs != other.row_degs {
            return Err(AlgebraError::AmbientMismatch);
        }
        let mut entries = vec![vec![Poly::zero(); other.ncols()]; self.nrows()];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let mut acc = Poly::zero();
                for k in 0..self.ncols() {
                    let a = &self.entries[i][k];
                    let b = &other.entries[k][j];
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(ring, &a.mul(ring, b))?;
                }
                *slot = acc;
            }
        }
        Ok(GradedMatrix {
            row_degs: self.row_degs.clone(),
            col_degs: other.col_degs.clone(),
            entries,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    /// True when some entry is a nonzero constant.
    pub fn has_unit_entry(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .any(|e| e.is_constant())
    }

    /// Apply to a vector of `F_1`.
    pub fn apply(&self, ring: &PolyRing, v: &Vector) -> Vector {
        let mut acc = Vector::zero();
        for (j, p) in v.to_polys(self.ncols()).iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            acc = acc.add(ring, &self.column(j).mul_poly(ring, p));
        }
        acc
    }
}

/// Pfaffian of a skew-symmetric matrix of even size, by expansion along the
/// first row.
pub fn pfaffian(ring: &PolyRing, a: &[Vec<Poly>]) -> Result<Poly> {
    let size = a.len();
    if size % 2 == 1 {
        return Err(AlgebraError::OddSize(size));
    }
    for i in 0..size {
        if a[i].len() != size {
            return Err(AlgebraError::LengthMismatch {
                left: a[i].len(),
                right: size,
            });
        }
        if !a[i][i].is_zero() {
            return Err(AlgebraError::NotSkew(i, i));
        }
        for j in i + 1..size {
            if a[i][j].add(ring, &a[j][i]).map(|s| !s.is_zero()).unwrap_or(true) {
                return Err(AlgebraError::NotSkew(i, j));
            }
        }
    }
    let idx: Vec<usize> = (0..size).collect();
    let pf = pf_rec(ring, a, &idx);
    if !pf.is_homogeneous() {
        return Err(AlgebraError::Inhomogeneous);
    }
    Ok(pf)
}

fn pf_rec(ring: &PolyRing, a: &[Vec<Poly>], idx: &[usize]) -> Poly {
    if idx.is_empty() {
        return Poly::constant(ring, 1);
    }
    let first = idx[0];
    let mut acc = Poly::zero();
    for (k, &j) in idx.iter().enumerate().skip(1) {
        let entry = &a[first][j];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx
            .iter()
            .copied()
            .filter(|&t| t != first && t != j)
            .collect();
        let sub = pf_rec(ring, a, &rest);
        let term = entry.mul(ring, &sub);
        let term = if k % 2 == 1 {
            term
        } else {
            term.scale(ring, ring.field().neg(1))
        };
        acc = acc.merge(ring, 1, &crate::monomial::Monomial::one(), &term);
    }
    acc
}
