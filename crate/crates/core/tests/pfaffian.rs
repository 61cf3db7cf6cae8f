mod common;

use proptest::prelude::*;
use subcanon::{pfaffian, AlgebraError, Poly, PolyRing};

/// Leibniz expansion, an oracle independent of the Pfaffian recursion.
fn det(ring: &PolyRing, a: &[Vec<Poly>]) -> Poly {
    let n = a.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut acc = Poly::zero();
    permute(ring, a, &mut perm, 0, &mut acc);
    acc
}

fn permute(ring: &PolyRing, a: &[Vec<Poly>], perm: &mut Vec<usize>, k: usize, acc: &mut Poly) {
    let n = perm.len();
    if k == n {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut term = Poly::constant(ring, if inversions % 2 == 0 { 1 } else { -1 });
        for (i, &j) in perm.iter().enumerate() {
            term = term.mul(ring, &a[i][j]);
        }
        *acc = acc.add(ring, &term).unwrap();
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(ring, a, perm, k + 1, acc);
        perm.swap(k, i);
    }
}

fn skew(ring: &PolyRing, upper: &[Poly], n: usize) -> Vec<Vec<Poly>> {
    let mut a = vec![vec![Poly::zero(); n]; n];
    let mut it = upper.iter();
    for i in 0..n {
        for j in i + 1..n {
            let e = it.next().unwrap().clone();
            a[j][i] = e.scale(ring, ring.field().neg(1));
            a[i][j] = e;
        }
    }
    a
}

fn linear(ring: &PolyRing, c: &[i64]) -> Poly {
    let e: [[u32; 4]; 4] = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
    let t: Vec<(i64, &[u32])> = c.iter().zip(&e).map(|(c, e)| (*c, &e[..])).collect();
    ring.poly(&t).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn square_is_determinant_linear_4x4(c in proptest::collection::vec(proptest::collection::vec(-9i64..9, 4), 6)) {
        let ring = PolyRing::default_p3();
        let upper: Vec<Poly> = c.iter().map(|c| linear(&ring, c)).collect();
        let a = skew(&ring, &upper, 4);
        let pf = pfaffian(&ring, &a).unwrap();
        prop_assert_eq!(pf.mul(&ring, &pf), det(&ring, &a));
    }

    #[test]
    fn square_is_determinant_constant_6x6(c in proptest::collection::vec(-50i64..50, 15)) {
        let ring = PolyRing::default_p3();
        let upper: Vec<Poly> = c.iter().map(|&c| Poly::constant(&ring, c)).collect();
        let a = skew(&ring, &upper, 6);
        let pf = pfaffian(&ring, &a).unwrap();
        prop_assert_eq!(pf.mul(&ring, &pf), det(&ring, &a));
    }
}

#[test]
fn rejects_bad_shapes() {
    let ring = PolyRing::default_p3();
    let x = ring.vars();
    let odd = vec![vec![Poly::zero(); 3]; 3];
    assert_eq!(pfaffian(&ring, &odd), Err(AlgebraError::OddSize(3)));
    let not_skew = vec![
        vec![Poly::zero(), x[0].clone()],
        vec![x[0].clone(), Poly::zero()],
    ];
    assert!(matches!(pfaffian(&ring, &not_skew), Err(AlgebraError::NotSkew(0, 1))));
    let a = skew(&ring, &[x[0].clone()], 2);
    assert_eq!(pfaffian(&ring, &a).unwrap(), x[0]);
}
