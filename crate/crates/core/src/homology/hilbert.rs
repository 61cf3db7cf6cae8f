//! Hilbert series data read off a free resolution.

use serde::{Deserialize, Serialize};

use super::resolution::{betti_table, free_resolution, FreeResolution};
use super::PresentedModule;
use crate::error::{AlgebraError, Result};
use crate::ring::PolyRing;

/// `HS_M(t) = K(t) / (1-t)^{n+1} = h(t) / (1-t)^dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// `K(t)` coefficients, the first one being the coefficient of `t^offset`.
    pub numerator: Vec<i64>,
    pub offset: i32,
    /// `h(t)` after removing all factors `1-t`, same offset.
    pub reduced: Vec<i64>,
    pub dimension: usize,
    pub multiplicity: i64,
    pub depth: usize,
    pub regularity: i32,
    pub projective_dimension: usize,
}

pub fn hilbert_invariants(ring: &PolyRing, m: &PresentedModule) -> Result<HilbertData> {
    let res = free_resolution(ring, m);
    hilbert_from_resolution(ring, &res)
}

pub fn hilbert_from_resolution(ring: &PolyRing, res: &FreeResolution) -> Result<HilbertData> {
    let betti = betti_table(res);
    if betti.entries.is_empty() {
        return Err(AlgebraError::ZeroModule);
    }
    let lo = betti.entries.keys().map(|(_, j)| *j).min().unwrap();
    let hi = betti.entries.keys().map(|(_, j)| *j).max().unwrap();
    let mut k = vec![0i64; (hi - lo + 1) as usize];
    for (&(i, j), &b) in &betti.entries {
        let s = if i % 2 == 0 { 1 } else { -1 };
        k[(j - lo) as usize] += s * b as i64;
    }
    let mut h = k.clone();
    let mut divisions = 0;
    while h.iter().sum::<i64>() == 0 && h.iter().any(|&c| c != 0) {
        // synthetic division by (1 - t)
        let mut q = vec![0i64; h.len() - 1];
        let mut acc = 0;
        for (idx, c) in h.iter().enumerate().take(h.len() - 1) {
            acc += c;
            q[idx] = acc;
        }
        h = q;
        divisions += 1;
    }
    let nvars = ring.nvars();
    let dimension = nvars - divisions;
    let pd = betti.projective_dimension().unwrap();
    Ok(HilbertData {
        multiplicity: h.iter().sum(),
        numerator: k,
        offset: lo,
        reduced: h,
        dimension,
        depth: nvars - pd,
        regularity: betti.regularity().unwrap(),
        projective_dimension: pd,
    })
}

impl HilbertData {
    pub fn codimension(&self, nvars: usize) -> usize {
        nvars - self.dimension
    }

    /// `dim M_d` from the series.
    pub fn hilbert_function(&self, nvars: usize, d: i32) -> i64 {
        self.numerator
            .iter()
            .enumerate()
            .map(|(k, c)| {
                c * crate::monomial::count_monomials(nvars, (d - self.offset - k as i32) as i64) as i64
            })
            .sum()
    }

    /// Value of the Hilbert polynomial at `d`.
    pub fn hilbert_polynomial(&self, d: i32) -> i128 {
        if self.dimension == 0 {
            return 0;
        }
        let r = self.dimension as i128 - 1;
        self.reduced
            .iter()
            .enumerate()
            .map(|(k, &c)| {
                let x = (d - self.offset - k as i32) as i128;
                // C(x + r, r) as a polynomial in x
                let mut num: i128 = 1;
                let mut den: i128 = 1;
                for i in 1..=r {
                    num *= x + i;
                    den *= i;
                }
                c as i128 * (num / den)
            })
            .sum()
    }

    /// Equality of Hilbert polynomials, comparing enough values.
    pub fn same_polynomial(&self, other: &HilbertData, shift: i32) -> bool {
        self.dimension == other.dimension
            && (0..=self.dimension as i32 + 1)
                .all(|d| self.hilbert_polynomial(d + shift) == other.hilbert_polynomial(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    #[test]
    fn polynomial_ring() {
        let ring = PolyRing::default_p3();
        let h = hilbert_invariants(&ring, &PresentedModule::free(vec![0])).unwrap();
        assert_eq!((h.dimension, h.multiplicity, h.depth, h.regularity), (4, 1, 4, 0));
        assert_eq!(h.hilbert_function(4, 2), 10);
        assert_eq!(h.hilbert_polynomial(2), 10);
    }

    #[test]
    fn twisted_cubic_data() {
        let ring = PolyRing::default_p3();
        let g = vec![
            ring.poly(&[(1, &[1, 0, 1, 0]), (-1, &[0, 2, 0, 0])]).unwrap(),
            ring.poly(&[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]).unwrap(),
            ring.poly(&[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2, 0])]).unwrap(),
        ];
        let h = hilbert_invariants(&ring, &PresentedModule::quotient_ring(&g)).unwrap();
        assert_eq!((h.dimension, h.multiplicity, h.depth, h.regularity), (2, 3, 2, 1));
        for d in 0..6 {
            assert_eq!(h.hilbert_polynomial(d), 3 * d as i128 + 1);
        }
    }

    #[test]
    fn zero_module_is_flagged() {
        let ring = PolyRing::default_p3();
        let m = PresentedModule::quotient_ring(&[Poly::constant(&ring, 1)]);
        assert_eq!(hilbert_invariants(&ring, &m), Err(AlgebraError::ZeroModule));
    }
}
