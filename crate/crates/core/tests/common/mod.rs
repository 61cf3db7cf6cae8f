#![allow(dead_code)]

use proptest::prelude::*;
use subcanon::{Poly, PolyRing};

/// Sparse form of degree `d` in four variables: a list of coefficients
/// with exponent vectors.
pub fn sparse_form(d: u32) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    proptest::collection::vec(
        (1i64..32003, proptest::collection::vec(0usize..4, d as usize)),
        1..=4,
    )
    .prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, picks)| {
                let mut e = vec![0u32; 4];
                for v in picks {
                    e[v] += 1;
                }
                (c, e)
            })
            .collect()
    })
}

pub fn build(ring: &PolyRing, t: &[(i64, Vec<u32>)]) -> Poly {
    let v: Vec<(i64, &[u32])> = t.iter().map(|(c, e)| (*c, &e[..])).collect();
    ring.poly(&v).unwrap()
}

/// Up to four sparse forms of degrees 1..=3 in P^3.
pub fn small_ideal() -> impl Strategy<Value = Vec<Vec<(i64, Vec<u32>)>>> {
    proptest::collection::vec((1u32..=3).prop_flat_map(sparse_form), 1..=4)
}

pub fn realize(ring: &PolyRing, shape: &[Vec<(i64, Vec<u32>)>]) -> Vec<Poly> {
    shape.iter()
        .map(|t| build(ring, t))
        .filter(|p| !p.is_zero())
        .collect()
}

pub fn mono(ring: &PolyRing, e: &[u32]) -> Poly {
    ring.poly(&[(1, e)]).unwrap()
}

pub fn skew_lines(ring: &PolyRing) -> Vec<Poly> {
    vec![
        mono(ring, &[1, 0, 1, 0]),
        mono(ring, &[1, 0, 0, 1]),
        mono(ring, &[0, 1, 1, 0]),
        mono(ring, &[0, 1, 0, 1]),
    ]
}

pub fn twisted_cubic(ring: &PolyRing) -> Vec<Poly> {
    let x = ring.vars();
    vec![
        x[1].pow(ring, 2).sub(ring, &x[0].mul(ring, &x[2])).unwrap(),
        x[1].mul(ring, &x[2]).sub(ring, &x[0].mul(ring, &x[3])).unwrap(),
        x[2].pow(ring, 2).sub(ring, &x[1].mul(ring, &x[3])).unwrap(),
    ]
}

/// `(x0^2, x0*x1, x1^2, x0*x2^m - x1*x3^m)`.
pub fn double_line(ring: &PolyRing, m: u32) -> Vec<Poly> {
    let x = ring.vars();
    let q = x[0]
        .mul(ring, &x[2].pow(ring, m))
        .sub(ring, &x[1].mul(ring, &x[3].pow(ring, m)))
        .unwrap();
    vec![
        mono(ring, &[2, 0, 0, 0]),
        mono(ring, &[1, 1, 0, 0]),
        mono(ring, &[0, 2, 0, 0]),
        q,
    ]
}

/// Powers of the first two variables, `x0^d1, x1^d2`, in `P^n`.
pub fn monomial_ci(n: usize, d1: u32, d2: u32) -> (PolyRing, Vec<Poly>) {
    let ring = PolyRing::new(32003, n).unwrap();
    let x = ring.vars();
    let g = vec![x[0].pow(&ring, d1), x[1].pow(&ring, d2)];
    (ring, g)
}
