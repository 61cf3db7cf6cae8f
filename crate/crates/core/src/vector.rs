//! Elements of graded free modules `F = ⊕ R(-a_i)`.
//!
//! Terms are ordered position-over-term: a smaller component index is the
//! larger position, ties broken by grevlex on the monomial.

use std::cmp::Ordering;

use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::PolyRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub comp: u32,
    pub mono: Monomial,
    pub coef: u32,
}

#[inline]
pub fn pot_cmp(ac: u32, am: &Monomial, bc: u32, bm: &Monomial) -> Ordering {
    match bc.cmp(&ac) {
        Ordering::Equal => am.cmp(bm),
        o => o,
    }
}

/// Sparse free-module element, terms sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    terms: Vec<Term>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn basis(comp: usize) -> Self {
        Vector {
            terms: vec![Term {
                comp: comp as u32,
                mono: Monomial::one(),
                coef: 1,
            }],
        }
    }

    pub fn from_poly(p: &Poly, comp: usize) -> Self {
        Vector {
            terms: p
                .terms()
                .iter()
                .map(|(m, c)| Term {
                    comp: comp as u32,
                    mono: *m,
                    coef: *c,
                })
                .collect(),
        }
    }

    /// Builds a vector from per-component polynomials.
    pub fn from_polys(polys: &[Poly]) -> Self {
        let mut terms = Vec::new();
        for (i, p) in polys.iter().enumerate() {
            terms.extend(p.terms().iter().map(|(m, c)| Term {
                comp: i as u32,
                mono: *m,
                coef: *c,
            }));
        }
        Vector { terms }
    }

    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| pot_cmp(w[0].comp, &w[0].mono, w[1].comp, &w[1].mono) == Ordering::Greater));
        Vector { terms }
    }

    /// Sorts and merges arbitrary terms.
    pub fn from_unsorted(ring: &PolyRing, mut terms: Vec<Term>) -> Self {
        let f = ring.field();
        terms.sort_by(|a, b| pot_cmp(b.comp, &b.mono, a.comp, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(l) if l.comp == t.comp && l.mono == t.mono => l.coef = f.add(l.coef, t.coef),
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coef != 0);
        Vector { terms: out }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree with respect to the generator degrees of the ambient module.
    pub fn degree(&self, gens: &[i32]) -> Option<i32> {
        self.terms
            .first()
            .map(|t| t.mono.degree() as i32 + gens[t.comp as usize])
    }

    pub fn is_homogeneous(&self, gens: &[i32]) -> bool {
        match self.degree(gens) {
            None => true,
            Some(d) => self
                .terms
                .iter()
                .all(|t| t.mono.degree() as i32 + gens[t.comp as usize] == d),
        }
    }

    pub fn max_comp(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.comp).max()
    }

    /// Component `i` as a polynomial.
    pub fn component(&self, i: usize) -> Poly {
        Poly::from_sorted(
            self.terms
                .iter()
                .filter(|t| t.comp as usize == i)
                .map(|t| (t.mono, t.coef))
                .collect(),
        )
    }

    pub fn to_polys(&self, rank: usize) -> Vec<Poly> {
        let mut buckets: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.comp as usize].push((t.mono, t.coef));
        }
        buckets.into_iter().map(Poly::from_sorted).collect()
    }

    pub fn scale(&self, ring: &PolyRing, c: u32) -> Vector {
        if c == 0 {
            return Vector::zero();
        }
        let f = ring.field();
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: f.mul(t.coef, c),
                    ..*t
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, ring: &PolyRing, m: &Monomial, c: u32) -> Vector {
        if c == 0 {
            return Vector::zero();
        }
        let f = ring.field();
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    comp: t.comp,
                    mono: t.mono.mul(m),
                    coef: f.mul(t.coef, c),
                })
                .collect(),
        }
    }

    pub fn mul_poly(&self, ring: &PolyRing, p: &Poly) -> Vector {
        let mut acc = Vector::zero();
        for (m, c) in p.terms() {
            acc = acc.axpy(ring, *c, m, self);
        }
        acc
    }

    pub fn add(&self, ring: &PolyRing, other: &Vector) -> Vector {
        self.axpy(ring, 1, &Monomial::one(), other)
    }

    pub fn sub(&self, ring: &PolyRing, other: &Vector) -> Vector {
        self.axpy(ring, ring.field().neg(1), &Monomial::one(), other)
    }

    /// `self + c * m * other`.
    pub fn axpy(&self, ring: &PolyRing, c: u32, m: &Monomial, other: &Vector) -> Vector {
        Vector {
            terms: merge_terms(ring, &self.terms, c, m, &other.terms),
        }
    }

    /// Moves component `i` to `map[i]`. The map must be order preserving.
    pub fn remap_components(&self, map: &[Option<u32>]) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter_map(|t| map[t.comp as usize].map(|c| Term { comp: c, ..*t }))
                .collect(),
        }
    }

    /// Shifts every component index by `offset` (positive or negative).
    pub fn shift_components(&self, offset: i64) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    comp: (t.comp as i64 + offset) as u32,
                    ..*t
                })
                .collect(),
        }
    }

    /// Keeps components in `[lo, hi)`.
    pub fn restrict(&self, lo: u32, hi: u32) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| t.comp >= lo && t.comp < hi)
                .copied()
                .collect(),
        }
    }

    pub fn make_monic(&self, ring: &PolyRing) -> Vector {
        match self.terms.first() {
            None => Vector::zero(),
            Some(t) => self.scale(ring, ring.field().inv(t.coef)),
        }
    }
}

pub(crate) fn merge_terms(
    ring: &PolyRing,
    a: &[Term],
    c: u32,
    m: &Monomial,
    b: &[Term],
) -> Vec<Term> {
    let f = ring.field();
    let mut out = Vec::with_capacity(a.len() + b.len());
    if c == 0 {
        out.extend_from_slice(a);
        return out;
    }
    let (mut i, mut j) = (0, 0);
    while j < b.len() {
        let bt = &b[j];
        let bm = bt.mono.mul(m);
        if i == a.len() {
            out.push(Term {
                comp: bt.comp,
                mono: bm,
                coef: f.mul(bt.coef, c),
            });
            j += 1;
            continue;
        }
        let at = &a[i];
        match pot_cmp(at.comp, &at.mono, bt.comp, &bm) {
            Ordering::Greater => {
                out.push(*at);
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    comp: bt.comp,
                    mono: bm,
                    coef: f.mul(bt.coef, c),
                });
                j += 1;
            }
            Ordering::Equal => {
                let v = f.add(at.coef, f.mul(bt.coef, c));
                if v != 0 {
                    out.push(Term {
                        comp: at.comp,
                        mono: at.mono,
                        coef: v,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out
}
