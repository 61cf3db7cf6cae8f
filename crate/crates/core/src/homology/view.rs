//! Degreewise linear algebra on a presented module through a Gröbner basis
//! of its relations.

use std::collections::HashMap;

use super::{monomial_vector, PresentedModule};
use crate::groebner::GroebnerBasis;
use crate::linalg::DenseMatrix;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::PolyRing;
use crate::vector::Vector;

/// Bases of the graded pieces `M_d` given by standard monomials.
#[derive(Clone, Debug)]
pub struct ModuleView {
    gb: GroebnerBasis,
}

impl ModuleView {
    pub fn new(ring: &PolyRing, m: &PresentedModule) -> Self {
        ModuleView {
            gb: GroebnerBasis::compute(ring, m.gens(), m.relations()),
        }
    }

    pub fn gens(&self) -> &[i32] {
        self.gb.ambient()
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn basis(&self, ring: &PolyRing, d: i32) -> Vec<(u32, Monomial)> {
        self.gb.standard_monomials(ring, d)
    }

    pub fn dim(&self, ring: &PolyRing, d: i32) -> usize {
        self.gb.quotient_dim(ring, d)
    }

    /// True when every component's leading monomials include a pure power of
    /// each variable.
    pub fn is_finite_length(&self, ring: &PolyRing) -> bool {
        (0..self.gens().len() as u32).all(|c| {
            (0..ring.nvars()).all(|v| {
                self.gb.leads().iter().any(|(lc, m)| {
                    *lc == c && m.exp(v) == m.degree() && m.degree() > 0
                }) || self.gb.leads().iter().any(|(lc, m)| *lc == c && m.degree() == 0)
            })
        })
    }

    /// For finite-length modules, the degrees `[lo, hi]` outside of which all
    /// pieces vanish; `None` for the zero module.
    pub fn support(&self, ring: &PolyRing) -> Option<(i32, i32)> {
        assert!(self.is_finite_length(ring));
        let gens = self.gens();
        let lo = *gens.iter().min()?;
        let top_gen = *gens.iter().max()?;
        let mut first = None;
        let mut last = None;
        let mut d = lo;
        loop {
            let dim = self.dim(ring, d);
            if dim > 0 {
                first.get_or_insert(d);
                last = Some(d);
            } else if d >= top_gen {
                break;
            }
            d += 1;
        }
        Some((first?, last?))
    }

    /// Coordinates of `v` (homogeneous of degree `d`) in the standard basis.
    pub fn coordinates(&self, ring: &PolyRing, v: &Vector, basis: &HashMap<(u32, Monomial), usize>) -> Vec<u32> {
        let nf = self.gb.normal_form(ring, v).expect("element of the ambient module");
        let mut out = vec![0u32; basis.len()];
        for t in nf.terms() {
            out[basis[&(t.comp, t.mono)]] = t.coef;
        }
        out
    }

    pub fn index(basis: &[(u32, Monomial)]) -> HashMap<(u32, Monomial), usize> {
        basis.iter().enumerate().map(|(k, b)| (*b, k)).collect()
    }

    /// Matrix of multiplication by a form `f` of degree `e` from `M_d` to
    /// `M_{d+e}`; columns indexed by `basis(d)`.
    pub fn multiplication_matrix(&self, ring: &PolyRing, f: &Poly, d: i32) -> DenseMatrix {
        let e = f.degree().unwrap_or(0) as i32;
        let src = self.basis(ring, d);
        let dst = self.basis(ring, d + e);
        let idx = Self::index(&dst);
        let cols: Vec<Vec<u32>> = src
            .iter()
            .map(|&(c, m)| {
                let v = Vector::from_poly(&f.mul_monomial(ring, &m, 1), c as usize);
                self.coordinates(ring, &v, &idx)
            })
            .collect();
        DenseMatrix::from_columns(&cols, dst.len())
    }

    /// The standard basis element as a vector of the ambient free module.
    pub fn basis_vector(b: &(u32, Monomial)) -> Vector {
        monomial_vector(b.0, b.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_of_quotient_ring() {
        let ring = PolyRing::default_p3();
        let m = PresentedModule::quotient_ring(&[ring.var(0), ring.var(1)]);
        let v = ModuleView::new(&ring, &m);
        assert_eq!(v.dim(&ring, 0), 1);
        assert_eq!(v.dim(&ring, 3), 4);
        assert!(!v.is_finite_length(&ring));
        let art = PresentedModule::quotient_ring(&ring.vars());
        let va = ModuleView::new(&ring, &art);
        assert!(va.is_finite_length(&ring));
        assert_eq!(va.support(&ring), Some((0, 0)));
    }

    #[test]
    fn multiplication_by_variable() {
        let ring = PolyRing::default_p3();
        let m = PresentedModule::quotient_ring(&[ring.var(0)]);
        let v = ModuleView::new(&ring, &m);
        let x0 = v.multiplication_matrix(&ring, &ring.var(0), 1);
        assert!(x0.is_zero());
        let x1 = v.multiplication_matrix(&ring, &ring.var(1), 1);
        assert_eq!(x1.rank(ring.field()), 3);
    }
}
