//! Syzygies and the ideal operations built on them.

use super::{minimal_generators, minimal_generators_ideal, GroebnerBasis};
use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::PolyRing;
use crate::vector::{Term, Vector};

/// Generators of a syzygy module, living in `⊕ R(-free[i])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syzygies {
    pub free: Vec<i32>,
    pub gens: Vec<Vector>,
}

/// Minimal generators of `{a : sum a_i g_i = 0}` with `deg e_i = degs[i]`.
///
/// Computed by eliminating the first block of `F ⊕ R^r` from the module
/// generated by the `(g_i, e_i)`.
pub fn syzygies_with_degrees(ring: &PolyRing, free: &[i32], gens: &[Vector], degs: &[i32]) -> Syzygies {
    assert_eq!(gens.len(), degs.len());
    let k = free.len() as u32;
    let mut ambient = free.to_vec();
    ambient.extend_from_slice(degs);
    let lifted: Vec<Vector> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            debug_assert!(g.is_zero() || g.degree(free) == Some(degs[i]));
            let mut terms: Vec<Term> = g.terms().to_vec();
            terms.push(Term {
                comp: k + i as u32,
                mono: Monomial::one(),
                coef: 1,
            });
            Vector::from_sorted(terms)
        })
        .collect();
    let gb = GroebnerBasis::compute(ring, &ambient, &lifted);
    let syz: Vec<Vector> = gb
        .elements()
        .iter()
        .filter(|v| v.lead().is_some_and(|t| t.comp >= k))
        .map(|v| v.shift_components(-(k as i64)))
        .collect();
    let gens = minimal_generators(ring, degs, &syz);
    Syzygies {
        free: degs.to_vec(),
        gens,
    }
}

/// Syzygies of homogeneous generators; zero generators get degree 0.
pub fn syzygy_module(ring: &PolyRing, free: &[i32], gens: &[Vector]) -> Syzygies {
    let degs: Vec<i32> = gens.iter().map(|g| g.degree(free).unwrap_or(0)).collect();
    syzygies_with_degrees(ring, free, gens, &degs)
}

fn nonzero(polys: &[Poly]) -> Vec<Poly> {
    polys.iter().filter(|p| !p.is_zero()).cloned().collect()
}

fn first_coordinates(syz: &Syzygies) -> Vec<Poly> {
    syz.gens
        .iter()
        .map(|s| s.component(0))
        .filter(|p| !p.is_zero())
        .collect()
}

/// `(I : f)`.
pub fn ideal_quotient(ring: &PolyRing, ideal: &[Poly], f: &Poly) -> Result<Vec<Poly>> {
    if f.is_zero() {
        return Err(AlgebraError::QuotientByZero);
    }
    let mut gens = vec![Vector::from_poly(f, 0)];
    gens.extend(nonzero(ideal).iter().map(|g| Vector::from_poly(g, 0)));
    let syz = syzygy_module(ring, &[0], &gens);
    Ok(minimal_generators_ideal(ring, &first_coordinates(&syz)))
}

/// `(I : J)` as the intersection of `(I : h)` over generators `h` of `J`.
pub fn ideal_quotient_ideal(ring: &PolyRing, ideal: &[Poly], by: &[Poly]) -> Result<Vec<Poly>> {
    let by = nonzero(by);
    if by.is_empty() {
        return Ok(vec![Poly::constant(ring, 1)]);
    }
    let mut acc: Option<Vec<Poly>> = None;
    for h in &by {
        let q = ideal_quotient(ring, ideal, h)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(ring, &a, &q),
        });
    }
    Ok(acc.unwrap())
}

/// `{a ∈ R : a v ∈ N}` for `N ⊆ F` generated by `sub`.
pub fn module_quotient(ring: &PolyRing, free: &[i32], sub: &[Vector], v: &Vector) -> Vec<Poly> {
    if v.is_zero() {
        return vec![Poly::constant(ring, 1)];
    }
    let mut gens = vec![v.clone()];
    gens.extend(sub.iter().filter(|s| !s.is_zero()).cloned());
    let syz = syzygy_module(ring, free, &gens);
    minimal_generators_ideal(ring, &first_coordinates(&syz))
}

/// `{w ∈ F : f w ∈ N}`.
pub fn module_colon(ring: &PolyRing, free: &[i32], sub: &[Vector], f: &Poly) -> Vec<Vector> {
    let r = free.len();
    let fd = f.degree().unwrap_or(0) as i32;
    let mut gens: Vec<Vector> = (0..r).map(|c| Vector::from_poly(f, c)).collect();
    let mut degs: Vec<i32> = free.iter().map(|g| g + fd).collect();
    for s in sub.iter().filter(|s| !s.is_zero()) {
        degs.push(s.degree(free).unwrap());
        gens.push(s.clone());
    }
    let syz = syzygies_with_degrees(ring, free, &gens, &degs);
    let proj: Vec<Vector> = syz
        .gens
        .iter()
        .map(|s| s.restrict(0, r as u32))
        .filter(|v| !v.is_zero())
        .collect();
    minimal_generators(ring, free, &proj)
}

/// `I ∩ J`, read off the syzygies of `(1,1), (g_i, 0), (0, h_j)` in `R^2`.
pub fn intersect(ring: &PolyRing, a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let (a, b) = (nonzero(a), nonzero(b));
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let one = Poly::constant(ring, 1);
    let mut gens = vec![Vector::from_polys(&[one.clone(), one])];
    gens.extend(a.iter().map(|g| Vector::from_poly(g, 0)));
    gens.extend(b.iter().map(|h| Vector::from_poly(h, 1)));
    let syz = syzygy_module(ring, &[0, 0], &gens);
    minimal_generators_ideal(ring, &first_coordinates(&syz))
}

/// `I : f^∞` together with the exponent at which the chain stabilized.
pub fn saturation_by_poly(ring: &PolyRing, ideal: &[Poly], f: &Poly) -> Result<(Vec<Poly>, u32)> {
    let mut cur = minimal_generators_ideal(ring, &nonzero(ideal));
    let mut gb = GroebnerBasis::of_ideal(ring, &cur);
    let mut k = 0;
    loop {
        let next = ideal_quotient(ring, &cur, f)?;
        let next_gb = GroebnerBasis::of_ideal(ring, &next);
        if next_gb == gb {
            return Ok((cur, k));
        }
        cur = next;
        gb = next_gb;
        k += 1;
    }
}

/// `I : (R_+)^∞ = ∩_i (I : x_i^∞)`.
pub fn saturation_irrelevant(ring: &PolyRing, ideal: &[Poly]) -> Vec<Poly> {
    let ideal = nonzero(ideal);
    if ideal.is_empty() {
        return Vec::new();
    }
    let mut acc: Option<Vec<Poly>> = None;
    for x in ring.vars() {
        let (s, _) = saturation_by_poly(ring, &ideal, &x).expect("variables are nonzero");
        acc = Some(match acc {
            None => s,
            Some(a) => intersect(ring, &a, &s),
        });
    }
    let out = acc.unwrap();
    let gb = GroebnerBasis::of_ideal(ring, &out);
    if gb.contains_unit() {
        return vec![Poly::constant(ring, 1)];
    }
    out
}

/// Equality of ideals via reduced Gröbner bases.
pub fn ideal_equal(ring: &PolyRing, a: &[Poly], b: &[Poly]) -> bool {
    GroebnerBasis::of_ideal(ring, a) == GroebnerBasis::of_ideal(ring, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::macaulay_graded_piece;

    fn ring() -> PolyRing {
        PolyRing::default_p3()
    }

    fn mono(ring: &PolyRing, e: &[u32]) -> Poly {
        ring.poly(&[(1, e)]).unwrap()
    }

    fn same_pieces(ring: &PolyRing, a: &[Poly], b: &[Poly], top: u32) -> bool {
        (0..=top).all(|d| {
            macaulay_graded_piece(ring, a, d) == macaulay_graded_piece(ring, b, d)
        })
    }

    #[test]
    fn koszul_syzygy() {
        let ring = ring();
        let gens = vec![Vector::from_poly(&ring.var(0), 0), Vector::from_poly(&ring.var(1), 0)];
        let syz = syzygy_module(&ring, &[0], &gens);
        assert_eq!(syz.gens.len(), 1);
        let s = &syz.gens[0];
        // evaluates to zero
        let ev = gens[0]
            .mul_poly(&ring, &s.component(0))
            .add(&ring, &gens[1].mul_poly(&ring, &s.component(1)));
        assert!(ev.is_zero());
        assert_eq!(s.degree(&syz.free), Some(2));
    }

    #[test]
    fn principal_has_no_syzygies() {
        let ring = ring();
        let f = mono(&ring, &[1, 1, 0, 0]);
        let syz = syzygy_module(&ring, &[0], &[Vector::from_poly(&f, 0)]);
        assert!(syz.gens.is_empty());
    }

    #[test]
    fn quotient_examples() {
        let ring = ring();
        let x = ring.vars();
        let q = ideal_quotient(&ring, &[mono(&ring, &[1, 1, 0, 0])], &x[0]).unwrap();
        assert!(ideal_equal(&ring, &q, &[x[1].clone()]));
        let q = ideal_quotient(&ring, &[x[0].clone(), x[1].clone()], &x[0]).unwrap();
        assert!(GroebnerBasis::of_ideal(&ring, &q).contains_unit());
        let i = vec![mono(&ring, &[2, 0, 0, 0]), mono(&ring, &[1, 1, 0, 0])];
        let q = ideal_quotient_ideal(&ring, &i, &[x[0].clone()]).unwrap();
        let expected = vec![x[0].clone(), x[1].clone()];
        assert!(same_pieces(&ring, &q, &expected, 6));
        assert_eq!(
            ideal_quotient(&ring, &i, &Poly::zero()),
            Err(AlgebraError::QuotientByZero)
        );
    }

    #[test]
    fn intersection_examples() {
        let ring = ring();
        let x = ring.vars();
        let i = intersect(&ring, &[x[0].clone()], &[x[1].clone()]);
        assert!(ideal_equal(&ring, &i, &[mono(&ring, &[1, 1, 0, 0])]));
        let a = vec![x[0].clone(), x[1].clone()];
        let b = vec![x[2].clone(), x[3].clone()];
        let i = intersect(&ring, &a, &b);
        let expected = vec![
            mono(&ring, &[1, 0, 1, 0]),
            mono(&ring, &[1, 0, 0, 1]),
            mono(&ring, &[0, 1, 1, 0]),
            mono(&ring, &[0, 1, 0, 1]),
        ];
        assert!(same_pieces(&ring, &i, &expected, 5));
        let self_int = intersect(&ring, &a, &a);
        assert!(same_pieces(&ring, &self_int, &a, 4));
    }

    #[test]
    fn saturation_examples() {
        let ring = ring();
        let x = ring.vars();
        let i = vec![
            mono(&ring, &[2, 0, 0, 0]),
            mono(&ring, &[1, 1, 0, 0]),
            mono(&ring, &[1, 0, 1, 0]),
            mono(&ring, &[1, 0, 0, 1]),
        ];
        let s = saturation_irrelevant(&ring, &i);
        assert!(ideal_equal(&ring, &s, &[x[0].clone()]));
        let s2 = saturation_irrelevant(&ring, &s);
        assert!(ideal_equal(&ring, &s, &s2));
    }
}
