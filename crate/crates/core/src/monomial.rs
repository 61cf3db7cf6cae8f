//! Exponent vectors and the degree reverse lexicographic order.

use std::cmp::Ordering;

use crate::error::AlgebraError;

/// Maximum number of ring variables supported by the packed representation.
pub const MAX_VARS: usize = 8;

/// A monomial `x^e` stored as a fixed-width exponent array.
///
/// Unused trailing slots are always zero, so comparisons never need the
/// variable count.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::default();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::default();
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
            m.deg += e;
        }
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m.deg += other.deg;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, assuming `self | other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut m = *other;
        for i in 0..MAX_VARS {
            m.exps[i] -= self.exps[i];
        }
        m.deg -= self.deg;
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::default();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Support as a bit mask over variables.
    pub fn support(&self) -> u32 {
        let mut s = 0;
        for i in 0..MAX_VARS {
            if self.exps[i] > 0 {
                s |= 1 << i;
            }
        }
        s
    }
}

impl Ord for Monomial {
    /// Degree reverse lexicographic: higher degree wins, ties are broken by
    /// the last variable, where the smaller exponent is the larger monomial.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..MAX_VARS).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compare two exponent vectors in grevlex.
pub fn term_order_compare(a: &[u32], b: &[u32]) -> Result<Ordering, AlgebraError> {
    if a.len() != b.len() {
        return Err(AlgebraError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.len() > MAX_VARS {
        return Err(AlgebraError::TooManyVariables(a.len()));
    }
    Ok(Monomial::from_exponents(a).cmp(&Monomial::from_exponents(b)))
}

/// All monomials of total degree `d` in `nvars` variables, largest first.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = exps.len();
        if i + 1 == n {
            exps[i] = left;
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    rec(0, d, &mut exps, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Number of monomials of degree `d` in `nvars` variables (zero for negative `d`).
pub fn count_monomials(nvars: usize, d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    binomial(d as u64 + nvars as u64 - 1, nvars as u64 - 1)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
