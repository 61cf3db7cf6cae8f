//! Independent oracle: the Čech complex on `x_0, ..., x_n`, truncated by
//! the exponent of the denominators.
//!
//! For `S` a set of variables write `M_S = M / Γ_{x_S}(M)`, on which `x_S`
//! is a nonzerodivisor. Fractions `m / x_S^t` with `m ∈ (M_S)_{j + t|S|}`
//! form a subcomplex `C_t` of the degree-`j` Čech complex, and the complex
//! is the increasing union of these. Starting near `reg + 1 - j`, the level
//! is doubled until two consecutive levels give the same dimension.

use crate::error::{AlgebraError, Result};
use crate::groebner::{module_colon, GroebnerBasis};
use crate::homology::{betti_table, free_resolution, ModuleView, PresentedModule};
use crate::linalg::DenseMatrix;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::PolyRing;
use crate::vector::Vector;

pub struct CechOracle {
    nvars: usize,
    /// Quotient by the `x_S`-torsion, indexed by the bitmask of `S`.
    views: Vec<ModuleView>,
    reg: i32,
    cap: u32,
}

fn saturate_module(ring: &PolyRing, gens: &[i32], rels: &[Vector], f: &Poly) -> Vec<Vector> {
    let mut cur = rels.to_vec();
    let mut gb = GroebnerBasis::compute(ring, gens, &cur);
    loop {
        let next = module_colon(ring, gens, &cur, f);
        let next_gb = GroebnerBasis::compute(ring, gens, &next);
        if next_gb == gb {
            return cur;
        }
        cur = next;
        gb = next_gb;
    }
}

impl CechOracle {
    pub fn new(ring: &PolyRing, m: &PresentedModule) -> Self {
        let m = m.prune(ring).module;
        let nv = ring.nvars();
        let reg = betti_table(&free_resolution(ring, &m)).regularity().unwrap_or(0);
        let views = (0u32..1 << nv)
            .map(|mask| {
                let mut xs = Poly::constant(ring, 1);
                for v in 0..nv {
                    if mask & (1 << v) != 0 {
                        xs = xs.mul(ring, &ring.var(v));
                    }
                }
                let rels = if mask == 0 {
                    m.relations().to_vec()
                } else {
                    saturate_module(ring, m.gens(), m.relations(), &xs)
                };
                ModuleView::new(ring, &PresentedModule::new(m.gens().to_vec(), rels).unwrap())
            })
            .collect();
        CechOracle {
            nvars: nv,
            views,
            reg,
            cap: (2 * (reg + ring.n() as i32 + 4)).max(2) as u32,
        }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// The cap counts exponents beyond `-j`, the least level at which a
    /// degree `j` fraction can have a nonzero numerator.
    pub fn cap_at(&self, j: i32) -> u32 {
        self.cap + 2 * (-j).max(0) as u32
    }

    fn subsets(&self, k: usize) -> Vec<u32> {
        (0u32..1 << self.nvars)
            .filter(|m| m.count_ones() as usize == k)
            .collect()
    }

    /// Matrix of `C_t^k -> C_t^{k+1}` in degree `j`.
    fn differential(&self, ring: &PolyRing, k: usize, t: u32, j: i32) -> (usize, usize, DenseMatrix) {
        let f = ring.field();
        let src_sets = self.subsets(k);
        let dst_sets = self.subsets(k + 1);
        let deg_src = j + (t as i32) * k as i32;
        let deg_dst = deg_src + t as i32;
        let src_bases: Vec<Vec<(u32, Monomial)>> =
            src_sets.iter().map(|&s| self.views[s as usize].basis(ring, deg_src)).collect();
        let dst_bases: Vec<Vec<(u32, Monomial)>> =
            dst_sets.iter().map(|&s| self.views[s as usize].basis(ring, deg_dst)).collect();
        let rows: usize = dst_bases.iter().map(|b| b.len()).sum();
        let cols: usize = src_bases.iter().map(|b| b.len()).sum();
        let mut mat = DenseMatrix::zeros(rows, cols);
        let dst_offsets: Vec<usize> = dst_bases
            .iter()
            .scan(0, |acc, b| {
                let o = *acc;
                *acc += b.len();
                Some(o)
            })
            .collect();
        let dst_index: Vec<_> = dst_bases.iter().map(|b| ModuleView::index(b)).collect();
        let mut col = 0;
        for (si, &s) in src_sets.iter().enumerate() {
            for b in &src_bases[si] {
                for v in 0..self.nvars {
                    if s & (1 << v) != 0 {
                        continue;
                    }
                    let tset = s | (1 << v);
                    let ti = dst_sets.iter().position(|&x| x == tset).unwrap();
                    let pos = (tset & ((1 << v) - 1)).count_ones();
                    let sign = if pos % 2 == 0 { 1 } else { f.neg(1) };
                    let mut e = [0u32; crate::monomial::MAX_VARS];
                    e[v] = t;
                    let xt = Monomial::from_exponents(&e[..self.nvars]);
                    let w = Vector::from_poly(&Poly::monomial(b.1.mul(&xt), sign), b.0 as usize);
                    let coords = self.views[tset as usize].coordinates(ring, &w, &dst_index[ti]);
                    for (r, c) in coords.iter().enumerate() {
                        if *c != 0 {
                            let row = dst_offsets[ti] + r;
                            mat.set(row, col, f.add(mat.get(row, col), *c));
                        }
                    }
                }
                col += 1;
            }
        }
        (cols, rows, mat)
    }

    fn level_dim(&self, ring: &PolyRing, i: usize, t: u32, j: i32) -> usize {
        let f = ring.field();
        let deg = j + (t as i32) * i as i32;
        let dim_ci: usize = self
            .subsets(i)
            .iter()
            .map(|&s| self.views[s as usize].dim(ring, deg))
            .sum();
        if dim_ci == 0 {
            return 0;
        }
        let out_rank = if i < self.nvars {
            self.differential(ring, i, t, j).2.rank(f)
        } else {
            0
        };
        let in_rank = if i > 0 {
            self.differential(ring, i - 1, t, j).2.rank(f)
        } else {
            0
        };
        dim_ci - out_rank - in_rank
    }

    /// `dim H^i_m(M)_j`.
    pub fn dim(&self, ring: &PolyRing, i: usize, j: i32) -> Result<usize> {
        if i > self.nvars {
            return Ok(0);
        }
        if i == 0 {
            return Ok(self.level_dim(ring, 0, 1, j));
        }
        // Low levels can agree by accident; the ramp ends near reg + 1 - j.
        let mut t = (self.reg + 1 - j).max(1) as u32;
        let cap = self.cap_at(j);
        let mut prev = self.level_dim(ring, i, t, j);
        loop {
            let next_t = 2 * t;
            if next_t > cap {
                return Err(AlgebraError::CechCapExceeded { cap, degree: j });
            }
            let cur = self.level_dim(ring, i, next_t, j);
            if cur == prev {
                return Ok(cur);
            }
            prev = cur;
            t = next_t;
        }
    }
}

/// One-shot form of [`CechOracle::dim`].
pub fn local_cohomology_cech(ring: &PolyRing, m: &PresentedModule, i: usize, j: i32) -> Result<usize> {
    CechOracle::new(ring, m).dim(ring, i, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skew_lines_first_cohomology() {
        let ring = PolyRing::default_p3();
        let x = ring.vars();
        let skew = vec![
            x[0].mul(&ring, &x[2]),
            x[0].mul(&ring, &x[3]),
            x[1].mul(&ring, &x[2]),
            x[1].mul(&ring, &x[3]),
        ];
        let o = CechOracle::new(&ring, &PresentedModule::quotient_ring(&skew));
        assert_eq!(o.dim(&ring, 1, 0).unwrap(), 1);
        assert_eq!(o.dim(&ring, 1, 1).unwrap(), 0);
        assert_eq!(o.dim(&ring, 1, -1).unwrap(), 0);
        assert_eq!(o.dim(&ring, 0, 0).unwrap(), 0);
    }

    #[test]
    fn ring_top_cohomology() {
        let ring = PolyRing::default_p3();
        let o = CechOracle::new(&ring, &PresentedModule::free(vec![0]));
        assert_eq!(o.dim(&ring, 4, -4).unwrap(), 1);
        assert_eq!(o.dim(&ring, 4, -5).unwrap(), 4);
        assert_eq!(o.dim(&ring, 4, -3).unwrap(), 0);
        assert_eq!(o.dim(&ring, 2, -2).unwrap(), 0);
        assert_eq!(o.dim(&ring, 0, 1).unwrap(), 0);
    }
}
