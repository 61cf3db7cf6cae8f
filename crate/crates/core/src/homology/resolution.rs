//! Minimal graded free resolutions and Betti tables.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::PresentedModule;
use crate::groebner::{macaulay_module_dim, syzygies_with_degrees};
use crate::linalg::DenseMatrix;
use crate::matrix::GradedMatrix;
use crate::monomial::monomials_of_degree;
use crate::ring::PolyRing;
use crate::vector::Vector;

/// `0 <- F_0 <- F_1 <- ... <- F_L`, with `maps[k]: F_{k+1} -> F_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeResolution {
    pub twists: Vec<Vec<i32>>,
    pub maps: Vec<GradedMatrix>,
    pub minimal: bool,
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.twists.iter().rposition(|t| !t.is_empty()).unwrap_or(0)
    }

    /// `F_i^*` degrees.
    pub fn dual_twists(&self, i: usize) -> Vec<i32> {
        self.twists
            .get(i)
            .map(|t| t.iter().map(|d| -d).collect())
            .unwrap_or_default()
    }
}

/// Minimal free resolution of `M`; its first differential is the pruned
/// presentation.
pub fn free_resolution(ring: &PolyRing, m: &PresentedModule) -> FreeResolution {
    let pruned = m.prune(ring).module;
    let mut twists = vec![pruned.gens().to_vec()];
    let mut maps = Vec::new();
    if pruned.gens().is_empty() {
        return FreeResolution {
            twists,
            maps,
            minimal: true,
        };
    }
    let mut cols: Vec<Vector> = pruned.relations().to_vec();
    let mut row_degs = pruned.gens().to_vec();
    while !cols.is_empty() {
        let mat = GradedMatrix::from_columns(&row_degs, &cols).expect("homogeneous differential");
        let col_degs = mat.col_degs().to_vec();
        twists.push(col_degs.clone());
        maps.push(mat);
        assert!(maps.len() <= ring.nvars(), "resolution longer than the number of variables");
        let syz = syzygies_with_degrees(ring, &row_degs, &cols, &col_degs);
        cols = syz.gens;
        row_degs = col_degs;
    }
    FreeResolution {
        twists,
        maps,
        minimal: true,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i32), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `t_i = min{j : β_{i,j} ≠ 0}`.
    pub fn t(&self, i: usize) -> Option<i32> {
        self.entries
            .iter()
            .filter(|((k, _), v)| *k == i && **v > 0)
            .map(|((_, j), _)| *j)
            .min()
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, v)| v)
            .sum()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    pub fn regularity(&self) -> Option<i32> {
        self.entries.keys().map(|(i, j)| j - *i as i32).max()
    }

    /// Degrees at level `i` with multiplicity, sorted.
    pub fn degrees(&self, i: usize) -> Vec<i32> {
        let mut out = Vec::new();
        for ((k, j), v) in &self.entries {
            if *k == i {
                out.extend(std::iter::repeat(*j).take(*v));
            }
        }
        out
    }
}

pub fn betti_table(res: &FreeResolution) -> BettiTable {
    let mut entries = BTreeMap::new();
    for (i, tw) in res.twists.iter().enumerate() {
        for &j in tw {
            *entries.entry((i, j)).or_insert(0) += 1;
        }
    }
    BettiTable { entries }
}

/// `dim Tor_i(k, M)_j`.
pub fn tor_dimension(ring: &PolyRing, i: usize, j: i32, m: &PresentedModule) -> usize {
    betti_table(&free_resolution(ring, m)).get(i, j)
}

/// The degree-`d` piece of a graded matrix as a map of vector spaces,
/// bases ordered by component then descending monomial.
pub fn graded_piece_matrix(ring: &PolyRing, m: &GradedMatrix, d: i32) -> DenseMatrix {
    let f = ring.field();
    let basis = |degs: &[i32]| -> Vec<(usize, crate::monomial::Monomial)> {
        let mut out = Vec::new();
        for (c, &g) in degs.iter().enumerate() {
            if d >= g {
                for mono in monomials_of_degree(ring.nvars(), (d - g) as u32) {
                    out.push((c, mono));
                }
            }
        }
        out
    };
    let src = basis(m.col_degs());
    let dst = basis(m.row_degs());
    let idx: std::collections::HashMap<_, _> =
        dst.iter().enumerate().map(|(k, b)| (*b, k)).collect();
    let mut out = DenseMatrix::zeros(dst.len(), src.len());
    for (col, (j, mono)) in src.iter().enumerate() {
        for i in 0..m.nrows() {
            for (tm, tc) in m.entry(i, *j).terms() {
                let k = idx[&(i, tm.mul(mono))];
                out.set(k, col, f.add(out.get(k, col), *tc));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionCheck {
    pub window: (i32, i32),
    pub d_squared_zero: bool,
    pub minimal: bool,
    pub exact: bool,
    pub euler: bool,
}

impl ResolutionCheck {
    pub fn ok(&self) -> bool {
        self.d_squared_zero && self.minimal && self.exact && self.euler
    }
}

/// Checks `d∘d = 0`, minimality, and exactness plus the Euler identity
/// degree by degree, with `dim M_j` from the Macaulay oracle.
pub fn verify_resolution(ring: &PolyRing, res: &FreeResolution, m: &PresentedModule) -> ResolutionCheck {
    let betti = betti_table(res);
    let lo = res.twists.iter().flatten().copied().min().unwrap_or(0) - 1;
    let reg = betti.regularity().unwrap_or(0);
    let top = res.twists.iter().flatten().copied().max().unwrap_or(0);
    let hi = (reg + 2).max(top);
    let d_squared_zero = res
        .maps
        .windows(2)
        .all(|w| w[0].compose(ring, &w[1]).map(|c| c.is_zero()).unwrap_or(false));
    let minimal = res.maps.iter().all(|d| !d.has_unit_entry());
    let f = ring.field();
    let free_dim = |tw: &[i32], d: i32| -> i64 {
        tw.iter()
            .map(|&g| crate::monomial::count_monomials(ring.nvars(), (d - g) as i64) as i64)
            .sum()
    };
    let mut exact = true;
    let mut euler = true;
    for d in lo..=hi {
        let ranks: Vec<i64> = res
            .maps
            .iter()
            .map(|mat| graded_piece_matrix(ring, mat, d).rank(f) as i64)
            .collect();
        // exact at F_k for k >= 1
        for k in 1..res.twists.len() {
            let rk_in = ranks[k - 1];
            let rk_out = ranks.get(k).copied().unwrap_or(0);
            if free_dim(&res.twists[k], d) != rk_in + rk_out {
                exact = false;
            }
        }
        let oracle = macaulay_module_dim(ring, m.gens(), m.relations(), d) as i64;
        let m_dim = free_dim(m.gens(), d) - oracle;
        let alt: i64 = res
            .twists
            .iter()
            .enumerate()
            .map(|(i, tw)| if i % 2 == 0 { free_dim(tw, d) } else { -free_dim(tw, d) })
            .sum();
        if alt != m_dim {
            euler = false;
        }
    }
    ResolutionCheck {
        window: (lo, hi),
        d_squared_zero,
        minimal,
        exact,
        euler,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn twisted_cubic(ring: &PolyRing) -> Vec<Poly> {
        vec![
            ring.poly(&[(1, &[1, 0, 1, 0]), (-1, &[0, 2, 0, 0])]).unwrap(),
            ring.poly(&[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]).unwrap(),
            ring.poly(&[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2, 0])]).unwrap(),
        ]
    }

    #[test]
    fn koszul_on_two_variables() {
        let ring = PolyRing::default_p3();
        let m = PresentedModule::quotient_ring(&[ring.var(0), ring.var(1)]);
        let res = free_resolution(&ring, &m);
        let b = betti_table(&res);
        assert_eq!((b.get(0, 0), b.get(1, 1), b.get(2, 2)), (1, 2, 1));
        assert_eq!(b.projective_dimension(), Some(2));
        assert!(verify_resolution(&ring, &res, &m).ok());
    }

    #[test]
    fn twisted_cubic_betti() {
        let ring = PolyRing::default_p3();
        let m = PresentedModule::quotient_ring(&twisted_cubic(&ring));
        let res = free_resolution(&ring, &m);
        let b = betti_table(&res);
        assert_eq!((b.get(0, 0), b.get(1, 2), b.get(2, 3)), (1, 3, 2));
        assert_eq!(b.total(1) + b.total(2), 5);
        assert!(verify_resolution(&ring, &res, &m).ok());
    }

    #[test]
    fn free_module_has_length_zero() {
        let ring = PolyRing::default_p3();
        let res = free_resolution(&ring, &PresentedModule::free(vec![0, 3]));
        assert_eq!(res.length(), 0);
        assert!(res.maps.is_empty());
    }

    #[test]
    fn complete_intersection_ideal() {
        let ring = PolyRing::default_p3();
        let x = ring.vars();
        let f = x[0].mul(&ring, &x[1]);
        let g = x[2].mul(&ring, &x[2]).mul(&ring, &x[3]);
        let res = free_resolution(&ring, &PresentedModule::ideal(&ring, &[f, g]));
        let b = betti_table(&res);
        assert_eq!((b.get(0, 2), b.get(0, 3), b.get(1, 5)), (1, 1, 1));
    }
}
