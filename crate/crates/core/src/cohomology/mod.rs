//! Graded local cohomology through local duality, deficiency modules,
//! socles, a-invariants and sheaf cohomology tables.

mod cech;

pub use cech::{local_cohomology_cech, CechOracle};

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::homology::{
    ext_from_resolution, free_resolution, hilbert_invariants, FreeResolution, ModuleView,
    PresentedModule,
};
use crate::linalg::DenseMatrix;
use crate::poly::Poly;
use crate::ring::PolyRing;

/// A graded vector space `⊕_{lo <= j <= hi} V_j` with the action of each
/// variable, `actions[v][j - lo]: V_j -> V_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPieceModule {
    pub lo: i32,
    pub hi: i32,
    pub dims: Vec<usize>,
    pub actions: Vec<Vec<DenseMatrix>>,
    /// The module is finite length and vanishes outside `[lo, hi]`.
    pub complete: bool,
}

impl GradedPieceModule {
    pub fn zero(nvars: usize) -> Self {
        GradedPieceModule {
            lo: 0,
            hi: -1,
            dims: Vec::new(),
            actions: vec![Vec::new(); nvars],
            complete: true,
        }
    }

    pub fn dim(&self, j: i32) -> usize {
        if j < self.lo || j > self.hi {
            0
        } else {
            self.dims[(j - self.lo) as usize]
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// `(j, dim V_j)` for the nonzero pieces.
    pub fn table(&self) -> Vec<(i32, usize)> {
        (self.lo..=self.hi)
            .map(|j| (j, self.dim(j)))
            .filter(|(_, d)| *d > 0)
            .collect()
    }

    /// Map `V_j -> V_{j+1}` for variable `v`; zero when either side is
    /// outside the window.
    pub fn action(&self, v: usize, j: i32) -> DenseMatrix {
        if j >= self.lo && j < self.hi {
            self.actions[v][(j - self.lo) as usize].clone()
        } else {
            DenseMatrix::zeros(self.dim(j + 1), self.dim(j))
        }
    }

    /// `(0 :_V R_+)` degree by degree, as a multiset `(j, dim)`.
    pub fn socle_degrees(&self, ring: &PolyRing) -> Result<Vec<(i32, usize)>> {
        if !self.complete {
            return Err(AlgebraError::IncompleteWindow);
        }
        let f = ring.field();
        let mut out = Vec::new();
        for j in self.lo..=self.hi {
            let d = self.dim(j);
            if d == 0 {
                continue;
            }
            let mut stacked = DenseMatrix::zeros(0, d);
            for v in 0..ring.nvars() {
                stacked = stacked.vstack(&self.action(v, j));
            }
            let s = d - stacked.rank(f);
            if s > 0 {
                out.push((j, s));
            }
        }
        Ok(out)
    }

    /// Whether every product of `k` variables acts as zero.
    pub fn killed_by_power(&self, ring: &PolyRing, k: usize) -> Result<bool> {
        if !self.complete {
            return Err(AlgebraError::IncompleteWindow);
        }
        let f = ring.field();
        let nv = ring.nvars();
        for j in self.lo..=self.hi {
            if self.dim(j) == 0 {
                continue;
            }
            // all words of length k in nondecreasing variable order suffice
            // since the actions commute
            let mut stack: Vec<(usize, i32, DenseMatrix)> = (0..nv)
                .map(|v| (v, j + 1, self.action(v, j)))
                .collect();
            while let Some((last, deg, m)) = stack.pop() {
                if m.is_zero() {
                    continue;
                }
                if (deg - j) as usize == k {
                    return Ok(false);
                }
                for v in last..nv {
                    stack.push((v, deg + 1, self.action(v, deg).mul(f, &m)));
                }
            }
        }
        Ok(true)
    }

    /// Checks `x_v x_w = x_w x_v` on every piece.
    pub fn actions_commute(&self, ring: &PolyRing) -> bool {
        let f = ring.field();
        let nv = ring.nvars();
        (self.lo..=self.hi).all(|j| {
            (0..nv).all(|v| {
                (v + 1..nv).all(|w| {
                    let a = self.action(w, j + 1).mul(f, &self.action(v, j));
                    let b = self.action(v, j + 1).mul(f, &self.action(w, j));
                    a == b
                })
            })
        })
    }

    /// Whether `V_j` lies in the socle.
    pub fn piece_in_socle(&self, ring: &PolyRing, j: i32) -> bool {
        (0..ring.nvars()).all(|v| self.action(v, j).is_zero())
    }
}

/// `H^i_m(M)` through `H^i_m(M)_j ≅ Ext^{n+1-i}(M, R)_{-j-n-1}^∨`. When the
/// Ext module has finite length the window is its full support; otherwise
/// `window` (or `[-n-1, n+1]`) is used and the result is flagged incomplete.
pub fn local_cohomology_from_resolution(
    ring: &PolyRing,
    res: &FreeResolution,
    i: usize,
    window: Option<(i32, i32)>,
) -> GradedPieceModule {
    let nv = ring.nvars();
    if i > nv {
        return GradedPieceModule::zero(nv);
    }
    let shift = nv as i32;
    let ext = ext_from_resolution(ring, res, nv - i);
    if ext.module.gens().is_empty() {
        return GradedPieceModule::zero(nv);
    }
    let view = ModuleView::new(ring, &ext.module);
    let finite = view.is_finite_length(ring);
    let (lo, hi) = if finite {
        match view.support(ring) {
            Some((a, b)) => (-b - shift, -a - shift),
            None => return GradedPieceModule::zero(nv),
        }
    } else {
        window.unwrap_or((-shift, shift))
    };
    let dims: Vec<usize> = (lo..=hi).map(|j| view.dim(ring, -j - shift)).collect();
    let actions = (0..nv)
        .map(|v| {
            let x = ring.var(v);
            (lo..hi)
                .map(|j| view.multiplication_matrix(ring, &x, -j - shift - 1).transpose())
                .collect()
        })
        .collect();
    GradedPieceModule {
        lo,
        hi,
        dims,
        actions,
        complete: finite,
    }
}

pub fn local_cohomology_window(
    ring: &PolyRing,
    m: &PresentedModule,
    i: usize,
    window: Option<(i32, i32)>,
) -> GradedPieceModule {
    local_cohomology_from_resolution(ring, &free_resolution(ring, m), i, window)
}

/// `dim H^i_m(M)_j` for `j` in `[lo, hi]`, from the duality route.
pub fn local_cohomology_dims(ring: &PolyRing, res: &FreeResolution, i: usize, lo: i32, hi: i32) -> Vec<usize> {
    let nv = ring.nvars();
    if i > nv {
        return vec![0; (hi - lo + 1).max(0) as usize];
    }
    let ext = ext_from_resolution(ring, res, nv - i);
    let view = ModuleView::new(ring, &ext.module);
    (lo..=hi).map(|j| view.dim(ring, -j - nv as i32)).collect()
}

/// `M_1 = H^1_m(R/I)` of a saturated ideal.
pub fn deficiency_module(ring: &PolyRing, ideal: &[Poly]) -> GradedPieceModule {
    local_cohomology_window(ring, &PresentedModule::quotient_ring(ideal), 1, None)
}

/// `a(S) = max{j : H^{dim S}_m(S)_j ≠ 0}`, read off the initial degree of
/// `Ext^{codim}(S, R)`.
pub fn a_invariant(ring: &PolyRing, s: &PresentedModule) -> Result<i32> {
    let res = free_resolution(ring, s);
    let h = crate::homology::hilbert_from_resolution(ring, &res)?;
    a_invariant_from_resolution(ring, &res, h.dimension)
}

pub fn a_invariant_from_resolution(ring: &PolyRing, res: &FreeResolution, dim: usize) -> Result<i32> {
    let nv = ring.nvars();
    let ext = ext_from_resolution(ring, res, nv - dim);
    let init = ext
        .module
        .gens()
        .iter()
        .min()
        .copied()
        .ok_or(AlgebraError::ZeroModule)?;
    Ok(-init - nv as i32)
}

/// `h^i(F(j))` for `0 <= i <= n` and `j` in `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTable {
    pub lo: i32,
    pub hi: i32,
    pub rows: Vec<Vec<usize>>,
}

impl CohomologyTable {
    pub fn get(&self, i: usize, j: i32) -> Option<usize> {
        if j < self.lo || j > self.hi {
            return None;
        }
        self.rows.get(i).map(|r| r[(j - self.lo) as usize])
    }
}

/// Sheaf cohomology of `M~` via `0 -> H^0_m -> M -> Γ_*(M~) -> H^1_m -> 0`
/// and `H^i_*(M~) = H^{i+1}_m(M)` for `i >= 1`.
pub fn sheaf_cohomology_table(ring: &PolyRing, m: &PresentedModule, lo: i32, hi: i32) -> CohomologyTable {
    let res = free_resolution(ring, m);
    sheaf_cohomology_from_resolution(ring, m, &res, lo, hi)
}

pub fn sheaf_cohomology_from_resolution(
    ring: &PolyRing,
    m: &PresentedModule,
    res: &FreeResolution,
    lo: i32,
    hi: i32,
) -> CohomologyTable {
    let n = ring.n();
    let view = ModuleView::new(ring, m);
    let h: Vec<Vec<usize>> = (0..=n + 1)
        .map(|i| local_cohomology_dims(ring, res, i, lo, hi))
        .collect();
    let mut rows = Vec::with_capacity(n + 1);
    rows.push(
        (lo..=hi)
            .enumerate()
            .map(|(k, j)| view.dim(ring, j) - h[0][k] + h[1][k])
            .collect(),
    );
    for i in 1..=n {
        rows.push(h[i + 1].clone());
    }
    CohomologyTable { lo, hi, rows }
}

/// Dimension of the quotient ring, for callers holding an ideal.
pub fn quotient_dimension(ring: &PolyRing, ideal: &[Poly]) -> Result<usize> {
    Ok(hilbert_invariants(ring, &PresentedModule::quotient_ring(ideal))?.dimension)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::count_monomials;

    fn skew_lines(ring: &PolyRing) -> Vec<Poly> {
        let x = ring.vars();
        vec![
            x[0].mul(ring, &x[2]),
            x[0].mul(ring, &x[3]),
            x[1].mul(ring, &x[2]),
            x[1].mul(ring, &x[3]),
        ]
    }

    #[test]
    fn top_cohomology_of_ring() {
        let ring = PolyRing::default_p3();
        let h = local_cohomology_window(&ring, &PresentedModule::free(vec![0]), 4, Some((-8, 0)));
        assert!(!h.complete);
        assert_eq!(h.dim(-4), 1);
        assert_eq!(h.dim(-3), 0);
        assert_eq!(h.dim(-5), 4);
    }

    #[test]
    fn skew_lines_deficiency() {
        let ring = PolyRing::default_p3();
        let m1 = deficiency_module(&ring, &skew_lines(&ring));
        assert!(m1.complete);
        assert_eq!(m1.table(), vec![(0, 1)]);
        assert_eq!(m1.socle_degrees(&ring).unwrap(), vec![(0, 1)]);
        assert!(m1.killed_by_power(&ring, 1).unwrap());
    }

    #[test]
    fn complete_intersection_has_no_deficiency() {
        let ring = PolyRing::default_p3();
        let x = ring.vars();
        let ci = vec![x[0].mul(&ring, &x[1]), x[2].mul(&ring, &x[3]).mul(&ring, &x[3])];
        assert!(deficiency_module(&ring, &ci).is_zero());
    }

    #[test]
    fn a_invariant_examples() {
        let ring = PolyRing::default_p3();
        let x = ring.vars();
        let lin = PresentedModule::quotient_ring(&[x[0].clone(), x[1].clone()]);
        assert_eq!(a_invariant(&ring, &lin).unwrap(), -2);
        let f = x[0].mul(&ring, &x[1]).mul(&ring, &x[2]).mul(&ring, &x[3]).mul(&ring, &x[0]);
        let hyp = PresentedModule::quotient_ring(&[f]);
        assert_eq!(a_invariant(&ring, &hyp).unwrap(), 5 - 4);
    }

    #[test]
    fn line_bundle_table() {
        let ring = PolyRing::default_p3();
        let t = sheaf_cohomology_table(&ring, &PresentedModule::free(vec![0]), -7, 3);
        for j in -7..=3 {
            assert_eq!(t.get(0, j).unwrap() as u64, count_monomials(4, j as i64));
            assert_eq!(t.get(3, j).unwrap() as u64, count_monomials(4, (-j - 4) as i64));
            assert_eq!(t.get(1, j), Some(0));
            assert_eq!(t.get(2, j), Some(0));
        }
    }

    #[test]
    fn socle_needs_complete_window() {
        let ring = PolyRing::default_p3();
        let h = local_cohomology_window(&ring, &PresentedModule::free(vec![0]), 4, Some((-6, -4)));
        assert_eq!(h.socle_degrees(&ring), Err(AlgebraError::IncompleteWindow));
    }
}
