//! Example inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subcanon::construction::{random_section, section_zero_locus, serre_extension_module};
use subcanon::groebner::{intersect, GroebnerBasis};
use subcanon::linalg::DenseMatrix;
use subcanon::monomial::{monomials_of_degree, Monomial};
use subcanon::subcanonical::{codimension, subcanonical_twist};
use subcanon::{pfaffian, Poly, PolyRing, DEFAULT_PRIME};
use thiserror::Error;

use crate::input::InputDocument;

/// Seeds tried by the randomized generators before giving up.
pub const SEED_RETRIES: u64 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("unknown kind `{0}`")]
    UnknownKind(String),
    #[error("bad parameters for `{kind}`: {reason}")]
    BadParams { kind: String, reason: String },
    #[error("no valid example after {0} seeds")]
    RetriesExhausted(u64),
    #[error(transparent)]
    Algebra(#[from] subcanon::AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Ci,
    TwistedCubic,
    SkewLines,
    DoubleLine,
    PfaffianQuintic,
    /// Zero scheme of a random section of the bundle attached to a double
    /// line, twisted up.
    BundleSection,
    QuadSquare,
    QuadMixed,
    QuadReduced,
}

impl Kind {
    pub const ALL: [(&'static str, Kind); 9] = [
        ("ci", Kind::Ci),
        ("twisted-cubic", Kind::TwistedCubic),
        ("skew-lines", Kind::SkewLines),
        ("double-line", Kind::DoubleLine),
        ("pfaffian-quintic", Kind::PfaffianQuintic),
        ("bundle-section", Kind::BundleSection),
        ("quad-square", Kind::QuadSquare),
        ("quad-mixed", Kind::QuadMixed),
        ("quad-reduced", Kind::QuadReduced),
    ];

    pub fn parse(s: &str) -> Result<Kind, CorpusError> {
        Self::ALL
            .iter()
            .find(|(name, _)| *name == s)
            .map(|(_, k)| *k)
            .ok_or_else(|| CorpusError::UnknownKind(s.to_string()))
    }

    pub fn name(self) -> &'static str {
        Self::ALL.iter().find(|(_, k)| *k == self).unwrap().0
    }

    pub fn usage(self) -> &'static str {
        match self {
            Kind::Ci => "ci D1 D2 [N]",
            Kind::DoubleLine => "double-line M",
            Kind::BundleSection => "bundle-section M K",
            _ => self.name(),
        }
    }
}

fn bad(kind: Kind, reason: impl Into<String>) -> CorpusError {
    CorpusError::BadParams {
        kind: kind.name().to_string(),
        reason: reason.into(),
    }
}

fn random_form(ring: &PolyRing, rng: &mut ChaCha8Rng, d: u32) -> Poly {
    let p = ring.p();
    let terms = monomials_of_degree(ring.nvars(), d)
        .into_iter()
        .map(|m| (m, rng.gen_range(0..p)))
        .collect();
    Poly::from_terms(ring, terms).expect("homogeneous")
}

fn mono(ring: &PolyRing, e: &[u32]) -> Poly {
    let mut exps = e.to_vec();
    exps.resize(ring.nvars(), 0);
    Poly::monomial(Monomial::from_exponents(&exps), 1)
}

fn p3() -> PolyRing {
    PolyRing::default_p3()
}

pub fn twisted_cubic() -> InputDocument {
    let r = p3();
    let x = r.vars();
    let sq = |i: usize| x[i].mul(&r, &x[i]);
    let pr = |i: usize, j: usize| x[i].mul(&r, &x[j]);
    let gens = vec![
        pr(0, 2).sub(&r, &sq(1)).unwrap(),
        pr(0, 3).sub(&r, &pr(1, 2)).unwrap(),
        pr(1, 3).sub(&r, &sq(2)).unwrap(),
    ];
    InputDocument::new(r, gens).with_comment("twisted cubic")
}

pub fn skew_lines() -> InputDocument {
    let r = p3();
    let gens = vec![
        mono(&r, &[1, 0, 1, 0]),
        mono(&r, &[1, 0, 0, 1]),
        mono(&r, &[0, 1, 1, 0]),
        mono(&r, &[0, 1, 0, 1]),
    ];
    InputDocument::new(r, gens).with_comment("two skew lines")
}

/// `(x0^2, x0*x1, x1^2, x0*x2^m - x1*x3^m)`.
pub fn double_line(m: u32) -> Result<InputDocument, CorpusError> {
    if m == 0 {
        return Err(bad(Kind::DoubleLine, "m must be positive"));
    }
    let r = p3();
    let x = r.vars();
    let q = x[0]
        .mul(&r, &x[2].pow(&r, m))
        .sub(&r, &x[1].mul(&r, &x[3].pow(&r, m)))
        .unwrap();
    let gens = vec![
        mono(&r, &[2, 0, 0, 0]),
        mono(&r, &[1, 1, 0, 0]),
        mono(&r, &[0, 2, 0, 0]),
        q,
    ];
    Ok(InputDocument::new(r, gens).with_comment(format!("double line, m = {m}")))
}

/// Two random forms of the given degrees cutting out a codimension two
/// scheme in `P^n`.
pub fn complete_intersection(d1: u32, d2: u32, n: usize, seed: u64) -> Result<InputDocument, CorpusError> {
    if d1 == 0 || d2 == 0 {
        return Err(bad(Kind::Ci, "degrees must be positive"));
    }
    let r = PolyRing::new(DEFAULT_PRIME, n)?;
    for s in seed..seed + SEED_RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let gens = vec![random_form(&r, &mut rng, d1.min(d2)), random_form(&r, &mut rng, d1.max(d2))];
        if codimension(&r, &gens)? == 2 {
            return Ok(InputDocument::new(r, gens).with_comment(format!(
                "complete intersection of type ({}, {})",
                d1.min(d2),
                d1.max(d2)
            )));
        }
    }
    Err(CorpusError::RetriesExhausted(SEED_RETRIES))
}

/// Pfaffians of a random skew 5x5 matrix of linear forms cut out an
/// elliptic normal quintic in `P^4`; a random projection to `P^3` gives a
/// quintic curve whose ideal is read off in degree 3.
pub fn pfaffian_quintic(seed: u64) -> Result<InputDocument, CorpusError> {
    let r4 = PolyRing::new(DEFAULT_PRIME, 4)?;
    let r3 = p3();
    for s in seed..seed + SEED_RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let mut a = vec![vec![Poly::zero(); 5]; 5];
        for i in 0..5 {
            for j in i + 1..5 {
                let l = random_form(&r4, &mut rng, 1);
                a[j][i] = l.scale(&r4, r4.field().neg(1));
                a[i][j] = l;
            }
        }
        let mut pf = Vec::new();
        for skip in 0..5 {
            let idx: Vec<usize> = (0..5).filter(|&k| k != skip).collect();
            let sub: Vec<Vec<Poly>> = idx
                .iter()
                .map(|&i| idx.iter().map(|&j| a[i][j].clone()).collect())
                .collect();
            pf.push(pfaffian(&r4, &sub)?);
        }
        let proj: Vec<Poly> = (0..4).map(|_| random_form(&r4, &mut rng, 1)).collect();
        let gens = project_degree(&r4, &r3, &pf, &proj, 3);
        if gens.len() != 5 || codimension(&r3, &gens)? != 2 {
            continue;
        }
        return Ok(InputDocument::new(r3, gens).with_comment("projected elliptic quintic"));
    }
    Err(CorpusError::RetriesExhausted(SEED_RETRIES))
}

/// Basis of `{f ∈ k[y]_d : f(proj) ∈ I}`, as forms in `target`.
fn project_degree(src: &PolyRing, target: &PolyRing, ideal: &[Poly], proj: &[Poly], d: u32) -> Vec<Poly> {
    let gb = GroebnerBasis::of_ideal(src, ideal);
    let std = gb.standard_monomials(src, d as i32);
    let pos: std::collections::HashMap<Monomial, usize> =
        std.iter().enumerate().map(|(k, (_, m))| (*m, k)).collect();
    let monos = monomials_of_degree(target.nvars(), d);
    let cols: Vec<Vec<u32>> = monos
        .iter()
        .map(|m| {
            let mut f = Poly::constant(src, 1);
            for (v, l) in proj.iter().enumerate() {
                f = f.mul(src, &l.pow(src, m.exp(v)));
            }
            let nf = gb.normal_form_poly(src, &f);
            let mut col = vec![0u32; std.len()];
            for (t, c) in nf.terms() {
                col[pos[t]] = *c;
            }
            col
        })
        .collect();
    let mat = DenseMatrix::from_columns(&cols, std.len());
    mat.kernel(target.field())
        .into_iter()
        .map(|v| {
            let terms = monos.iter().zip(v).map(|(m, c)| (*m, c)).collect();
            Poly::from_terms(target, terms).unwrap()
        })
        .collect()
}

/// Zero scheme of a seeded random section of `E(k)`, where `E` is the rank
/// two bundle with `Γ_*(E)` the extension module of the double line `m`.
pub fn bundle_section(m: u32, k: i32, seed: u64) -> Result<InputDocument, CorpusError> {
    let dl = double_line(m)?;
    let r = dl.ring.clone();
    let tw = subcanonical_twist(&r, &dl.gens, seed)?;
    let a = tw
        .a
        .ok_or_else(|| bad(Kind::BundleSection, "double line without canonical twist"))?;
    let pkg = serre_extension_module(&r, &dl.gens, a, seed)
        .map_err(|e| bad(Kind::BundleSection, e.to_string()))?;
    let degree = k;
    for s in seed..seed + SEED_RETRIES {
        let Some(xi) = random_section(&r, &pkg.module, degree, s) else {
            return Err(bad(Kind::BundleSection, "no sections in that degree"));
        };
        let j = section_zero_locus(&r, &pkg.module, &xi);
        if j.iter().any(|g| g.is_constant()) || codimension(&r, &j)? != 2 {
            continue;
        }
        return Ok(InputDocument::new(r, j).with_comment(format!(
            "zero scheme of a section of E({k}), E from the double line m = {m}"
        )));
    }
    Err(CorpusError::RetriesExhausted(SEED_RETRIES))
}

/// `(x0, x1)^2`.
pub fn quad_square() -> InputDocument {
    let r = p3();
    let gens = vec![
        mono(&r, &[2, 0, 0, 0]),
        mono(&r, &[1, 1, 0, 0]),
        mono(&r, &[0, 2, 0, 0]),
    ];
    InputDocument::new(r, gens).with_comment("square of the ideal of a line")
}

/// `(x0, x1^2) ∩ (x1, x3)`: a double line and a line through it, the second
/// pair sharing `x1` with the first.
pub fn quad_mixed() -> InputDocument {
    let r = p3();
    let x = r.vars();
    let a = vec![x[0].clone(), x[1].pow(&r, 2)];
    let b = vec![x[1].clone(), x[3].clone()];
    let gens = subcanon::homology::sorted_minimal_generators(&r, &intersect(&r, &a, &b));
    InputDocument::new(r, gens).with_comment("double line meeting a line")
}

/// `(x0, x1) ∩ (x1, x2) ∩ (x0, x2)`: three non-coplanar lines through a point.
pub fn quad_reduced() -> InputDocument {
    let r = p3();
    let x = r.vars();
    let l01 = vec![x[0].clone(), x[1].clone()];
    let l12 = vec![x[1].clone(), x[2].clone()];
    let l02 = vec![x[0].clone(), x[2].clone()];
    let j = intersect(&r, &intersect(&r, &l01, &l12), &l02);
    let gens = subcanon::homology::sorted_minimal_generators(&r, &j);
    InputDocument::new(r, gens).with_comment("three lines through a point")
}

/// Reduced union of coordinate subspaces of `P^n`; each entry lists the
/// variables vanishing on one component.
pub fn coordinate_union(n: usize, components: &[&[usize]]) -> Result<InputDocument, CorpusError> {
    let r = PolyRing::new(DEFAULT_PRIME, n)?;
    let mut acc: Option<Vec<Poly>> = None;
    for comp in components {
        let ideal: Vec<Poly> = comp.iter().map(|&i| r.var(i)).collect();
        acc = Some(match acc {
            None => ideal,
            Some(a) => intersect(&r, &a, &ideal),
        });
    }
    let gens = subcanon::homology::sorted_minimal_generators(&r, &acc.unwrap_or_default());
    Ok(InputDocument::new(r, gens).with_comment("union of coordinate subspaces"))
}

/// The fixed example set used by the test suites: every generator kind
/// plus a few complete intersections in higher dimension.
pub fn standard_corpus() -> Result<Vec<(String, InputDocument)>, CorpusError> {
    let mut out = vec![
        ("ci-2-2".to_string(), complete_intersection(2, 2, 3, 0)?),
        ("ci-2-3".to_string(), complete_intersection(2, 3, 3, 0)?),
        ("ci-3-3".to_string(), complete_intersection(3, 3, 3, 0)?),
        ("ci-2-4".to_string(), complete_intersection(2, 4, 3, 0)?),
        ("ci-2-3-p4".to_string(), complete_intersection(2, 3, 4, 0)?),
        ("ci-2-2-p5".to_string(), complete_intersection(2, 2, 5, 0)?),
        ("twisted-cubic".to_string(), twisted_cubic()),
        ("skew-lines".to_string(), skew_lines()),
    ];
    for m in 1..=3 {
        out.push((format!("double-line-{m}"), double_line(m)?));
    }
    out.push(("pfaffian-quintic".to_string(), pfaffian_quintic(0)?));
    out.push(("bundle-section-2-2".to_string(), bundle_section(2, 2, 0)?));
    out.push(("bundle-section-2-3".to_string(), bundle_section(2, 3, 0)?));
    out.push(("quad-square".to_string(), quad_square()));
    out.push(("quad-mixed".to_string(), quad_mixed()));
    out.push(("quad-reduced".to_string(), quad_reduced()));
    out.push((
        "three-skew-lines".to_string(),
        coordinate_union(3, &[&[0, 1], &[2, 3]])
            .map(|d| {
                let r = d.ring.clone();
                let x = r.vars();
                let third = vec![
                    x[0].sub(&r, &x[2]).unwrap(),
                    x[1].sub(&r, &x[3]).unwrap(),
                ];
                let j = intersect(&r, &d.gens, &third);
                InputDocument::new(r.clone(), subcanon::homology::sorted_minimal_generators(&r, &j))
                    .with_comment("three pairwise skew lines")
            })?,
    ));
    out.push(("planes-p4".to_string(), coordinate_union(4, &[&[0, 1], &[2, 3]])?));
    Ok(out)
}

fn int_param<T: std::str::FromStr>(kind: Kind, params: &[String], i: usize, default: Option<T>) -> Result<T, CorpusError> {
    match params.get(i) {
        Some(s) => s
            .parse()
            .map_err(|_| bad(kind, format!("`{s}` is not a valid integer"))),
        None => default.ok_or_else(|| bad(kind, format!("usage: {}", kind.usage()))),
    }
}

pub fn generate_example(kind: Kind, params: &[String], seed: u64) -> Result<InputDocument, CorpusError> {
    let max = match kind {
        Kind::Ci => 3,
        Kind::DoubleLine => 1,
        Kind::BundleSection => 2,
        _ => 0,
    };
    if params.len() > max {
        return Err(bad(kind, format!("usage: {}", kind.usage())));
    }
    match kind {
        Kind::Ci => {
            let d1 = int_param(kind, params, 0, None)?;
            let d2 = int_param(kind, params, 1, None)?;
            let n = int_param(kind, params, 2, Some(3))?;
            complete_intersection(d1, d2, n, seed)
        }
        Kind::TwistedCubic => Ok(twisted_cubic()),
        Kind::SkewLines => Ok(skew_lines()),
        Kind::DoubleLine => double_line(int_param(kind, params, 0, None)?),
        Kind::PfaffianQuintic => pfaffian_quintic(seed),
        Kind::BundleSection => {
            let m = int_param(kind, params, 0, None)?;
            let k = int_param(kind, params, 1, None)?;
            bundle_section(m, k, seed)
        }
        Kind::QuadSquare => Ok(quad_square()),
        Kind::QuadMixed => Ok(quad_mixed()),
        Kind::QuadReduced => Ok(quad_reduced()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use subcanon::homology::{hilbert_invariants, PresentedModule};

    #[test]
    fn quintic_has_five_cubics_and_degree_five() {
        let doc = pfaffian_quintic(0).unwrap();
        assert_eq!(doc.gens.len(), 5);
        assert!(doc.gens.iter().all(|g| g.degree() == Some(3)));
        let h = hilbert_invariants(&doc.ring, &PresentedModule::quotient_ring(&doc.gens)).unwrap();
        assert_eq!((h.dimension, h.multiplicity), (2, 5));
        // Hilbert polynomial 5t
        assert_eq!(h.hilbert_polynomial(7), 35);
    }

    #[test]
    fn quadric_patterns() {
        assert_eq!(quad_mixed().gens.iter().filter(|g| g.degree() == Some(2)).count(), 3);
        assert_eq!(quad_reduced().gens.len(), 3);
    }

    #[test]
    fn kinds_round_trip_names() {
        for (name, k) in Kind::ALL {
            assert_eq!(Kind::parse(name).unwrap(), k);
        }
        assert!(Kind::parse("nope").is_err());
    }
}
