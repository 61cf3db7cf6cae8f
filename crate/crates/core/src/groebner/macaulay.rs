//! Degreewise linear-algebra oracle: the span of all monomial multiples of
//! the generators in a fixed degree, row-reduced. Independent of Buchberger.

use std::collections::HashMap;

use crate::linalg::DenseMatrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Poly;
use crate::ring::PolyRing;
use crate::vector::Vector;

/// Echelonized basis of `I_d`, rows over the monomials of degree `d`
/// (ordered as [`monomials_of_degree`]).
pub fn macaulay_graded_piece(ring: &PolyRing, gens: &[Poly], d: u32) -> Vec<Vec<u32>> {
    let vecs: Vec<Vector> = gens.iter().map(|g| Vector::from_poly(g, 0)).collect();
    macaulay_module_piece(ring, &[0], &vecs, d as i32)
}

/// Echelonized basis of `N_d` for `N ⊆ ⊕ R(-free[c])`, columns indexed by
/// `(component, monomial)` pairs of degree `d`.
pub fn macaulay_module_piece(ring: &PolyRing, free: &[i32], gens: &[Vector], d: i32) -> Vec<Vec<u32>> {
    let mut cols: Vec<(u32, Monomial)> = Vec::new();
    for (c, &g) in free.iter().enumerate() {
        if d - g >= 0 {
            for m in monomials_of_degree(ring.nvars(), (d - g) as u32) {
                cols.push((c as u32, m));
            }
        }
    }
    let index: HashMap<(u32, Monomial), usize> =
        cols.iter().enumerate().map(|(k, key)| (*key, k)).collect();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for g in gens {
        let Some(gd) = g.degree(free) else { continue };
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(ring.nvars(), (d - gd) as u32) {
            let mut row = vec![0u32; cols.len()];
            for t in g.terms() {
                row[index[&(t.comp, t.mono.mul(&m))]] = t.coef;
            }
            rows.push(row);
        }
    }
    if rows.is_empty() || cols.is_empty() {
        return Vec::new();
    }
    let mut mat = DenseMatrix::from_rows(&rows, cols.len());
    let rank = mat.rref(ring.field()).len();
    (0..rank).map(|i| mat.row(i).to_vec()).collect()
}

pub fn macaulay_module_dim(ring: &PolyRing, free: &[i32], gens: &[Vector], d: i32) -> usize {
    macaulay_module_piece(ring, free, gens, d).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperplane_in_degree_one() {
        let ring = PolyRing::default_p3();
        assert_eq!(macaulay_graded_piece(&ring, &[ring.var(0)], 1).len(), 1);
        assert_eq!(macaulay_graded_piece(&ring, &[ring.var(0)], 2).len(), 4);
    }

    #[test]
    fn twisted_cubic_quadrics_are_independent() {
        let ring = PolyRing::default_p3();
        let g = vec![
            ring.poly(&[(1, &[1, 0, 1, 0]), (-1, &[0, 2, 0, 0])]).unwrap(),
            ring.poly(&[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]).unwrap(),
            ring.poly(&[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2, 0])]).unwrap(),
        ];
        assert_eq!(macaulay_graded_piece(&ring, &g, 2).len(), 3);
        // Hilbert function of the cubic is 3d + 1, so dim I_3 = 20 - 10.
        assert_eq!(macaulay_graded_piece(&ring, &g, 3).len(), 10);
    }

    #[test]
    fn dimension_is_order_independent() {
        let ring = PolyRing::default_p3();
        let a = ring.poly(&[(1, &[1, 1, 0, 0]), (1, &[0, 0, 1, 1])]).unwrap();
        let b = ring.poly(&[(1, &[2, 0, 0, 0]), (-1, &[0, 0, 0, 2])]).unwrap();
        for d in 0..6 {
            assert_eq!(
                macaulay_graded_piece(&ring, &[a.clone(), b.clone()], d).len(),
                macaulay_graded_piece(&ring, &[b.clone(), a.clone()], d).len()
            );
        }
    }
}
