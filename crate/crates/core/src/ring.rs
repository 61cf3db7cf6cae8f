//! The standard graded polynomial ring `k[x_0, ..., x_n]` over a prime field.

use crate::error::{AlgebraError, Result};
use crate::field::{is_prime, PrimeField, DEFAULT_PRIME};
use crate::monomial::{Monomial, MAX_VARS};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    n: usize,
    names: Vec<String>,
}

impl PolyRing {
    /// Ring of projective dimension `n` (so `n + 1` variables named `x0..xn`).
    pub fn new(p: u32, n: usize) -> Result<Self> {
        let names = (0..=n).map(|i| format!("x{i}")).collect();
        Self::with_names(p, n, names)
    }

    pub fn with_names(p: u32, n: usize, names: Vec<String>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(AlgebraError::NotPrime(p as u64));
        }
        if n < 3 {
            return Err(AlgebraError::DimensionTooSmall(n));
        }
        if n + 1 > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(n + 1));
        }
        if names.len() != n + 1 {
            return Err(AlgebraError::Precondition(format!(
                "expected {} variable names, got {}",
                n + 1,
                names.len()
            )));
        }
        Ok(PolyRing {
            field: PrimeField::new(p),
            n,
            names,
        })
    }

    pub fn default_p3() -> Self {
        Self::new(DEFAULT_PRIME, 3).unwrap()
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.modulus()
    }

    /// Projective dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var(&self, i: usize) -> Poly {
        assert!(i <= self.n);
        Poly::monomial(Monomial::var(i), 1)
    }

    pub fn vars(&self) -> Vec<Poly> {
        (0..=self.n).map(|i| self.var(i)).collect()
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs.
    pub fn poly(&self, terms: &[(i64, &[u32])]) -> Result<Poly> {
        let f = self.field;
        let raw = terms
            .iter()
            .map(|(c, e)| {
                if e.len() != self.nvars() {
                    return Err(AlgebraError::LengthMismatch {
                        left: e.len(),
                        right: self.nvars(),
                    });
                }
                Ok((Monomial::from_exponents(e), f.from_i64(*c)))
            })
            .collect::<Result<Vec<_>>>()?;
        Poly::from_terms(self, raw)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for i in 0..self.nvars() {
            match m.exp(i) {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                e => parts.push(format!("{}^{}", self.names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}
