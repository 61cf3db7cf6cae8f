//! Homogeneous polynomials in canonical sparse form.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::ring::PolyRing;

/// A homogeneous polynomial: terms sorted by decreasing grevlex monomial,
/// no zero coefficients. The zero polynomial has no terms and no degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, u32)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn monomial(m: Monomial, c: u32) -> Self {
        if c == 0 {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn constant(ring: &PolyRing, c: i64) -> Self {
        Poly::monomial(Monomial::one(), ring.field().from_i64(c))
    }

    /// Canonicalizes arbitrary terms; fails if the result is inhomogeneous.
    pub fn from_terms(ring: &PolyRing, terms: Vec<(Monomial, u32)>) -> Result<Self> {
        let f = ring.field();
        let mut acc: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(0);
            *e = f.add(*e, c % f.modulus());
        }
        let mut out: Vec<(Monomial, u32)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        out.reverse();
        let p = Poly { terms: out };
        if !p.is_homogeneous() {
            return Err(AlgebraError::Inhomogeneous);
        }
        Ok(p)
    }

    /// Trusted constructor: terms already sorted descending and nonzero.
    pub(crate) fn from_sorted(terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.degree())
    }

    pub fn leading(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Canonical-form check: sorted strictly descending, no zeros, homogeneous.
    pub fn is_canonical(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0 > w[1].0)
            && self.terms.iter().all(|t| t.1 != 0)
            && self.is_homogeneous()
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == Some(0)
    }

    pub fn add(&self, ring: &PolyRing, other: &Poly) -> Result<Poly> {
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a != b {
                return Err(AlgebraError::MixedDegrees(a, b));
            }
        }
        Ok(self.merge(ring, 1, &Monomial::one(), other))
    }

    pub fn sub(&self, ring: &PolyRing, other: &Poly) -> Result<Poly> {
        self.add(ring, &other.scale(ring, ring.field().neg(1)))
    }

    pub fn scale(&self, ring: &PolyRing, c: u32) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        let f = ring.field();
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, f.mul(*a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, ring: &PolyRing, m: &Monomial, c: u32) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        let f = ring.field();
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), f.mul(*a, c)))
                .collect(),
        }
    }

    /// `self + c * m * other`, merging sorted term lists.
    pub fn merge(&self, ring: &PolyRing, c: u32, m: &Monomial, other: &Poly) -> Poly {
        let f = ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            if j == other.terms.len() {
                out.extend_from_slice(&self.terms[i..]);
                break;
            }
            let (om, oc) = other.terms[j];
            let om = om.mul(m);
            if i == self.terms.len() {
                let v = f.mul(oc, c);
                if v != 0 {
                    out.push((om, v));
                }
                j += 1;
                continue;
            }
            let (sm, sc) = self.terms[i];
            match sm.cmp(&om) {
                std::cmp::Ordering::Greater => {
                    out.push((sm, sc));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let v = f.mul(oc, c);
                    if v != 0 {
                        out.push((om, v));
                    }
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = f.add(sc, f.mul(oc, c));
                    if v != 0 {
                        out.push((sm, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    pub fn mul(&self, ring: &PolyRing, other: &Poly) -> Poly {
        let mut acc = Poly::zero();
        // Multiply by the shorter operand termwise.
        let (a, b) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (m, c) in &a.terms {
            acc = acc.merge(ring, *c, m, b);
        }
        acc
    }

    pub fn pow(&self, ring: &PolyRing, e: u32) -> Poly {
        let mut acc = Poly::constant(ring, 1);
        for _ in 0..e {
            acc = acc.mul(ring, self);
        }
        acc
    }

    pub fn make_monic(&self, ring: &PolyRing) -> Poly {
        match self.terms.first() {
            None => Poly::zero(),
            Some((_, c)) => self.scale(ring, ring.field().inv(*c)),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|t| t.1)
            .unwrap_or(0)
    }

    /// Renders with symmetric coefficients, e.g. `x0*x2 - x1^2`.
    pub fn display(&self, ring: &PolyRing) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let f = ring.field();
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let sc = f.to_signed(*c);
            let (neg, abs) = (sc < 0, sc.unsigned_abs());
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = ring.format_monomial(m);
            if m.degree() == 0 {
                let _ = write!(s, "{abs}");
            } else if abs == 1 {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{abs}*{mono}");
            }
        }
        s
    }
}

/// Linear combination `sum c_i f_i` of polynomials of a common degree.
pub fn poly_combine(ring: &PolyRing, coeffs: &[u32], polys: &[Poly]) -> Result<Poly> {
    if coeffs.len() != polys.len() {
        return Err(AlgebraError::LengthMismatch {
            left: coeffs.len(),
            right: polys.len(),
        });
    }
    let mut deg = None;
    for p in polys {
        if let Some(d) = p.degree() {
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return Err(AlgebraError::MixedDegrees(d0, d)),
                _ => {}
            }
        }
    }
    let mut acc = Poly::zero();
    for (c, p) in coeffs.iter().zip(polys) {
        acc = acc.merge(ring, *c % ring.p(), &Monomial::one(), p);
    }
    Ok(acc)
}

pub fn poly_multiply(ring: &PolyRing, f: &Poly, g: &Poly) -> Poly {
    f.mul(ring, g)
}
