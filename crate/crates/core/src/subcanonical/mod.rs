//! Analysis of codimension two subschemes: d-vector, canonical twist,
//! complete-intersection status and the complete-intersection criteria.

mod verdict;

pub use verdict::{check_theorems, gap_chain_holds, Criterion, HypothesisStatus, ConclusionStatus, TheoremInputs, TheoremVerdict};

use serde::{Deserialize, Serialize};

use crate::cohomology::{local_cohomology_from_resolution, GradedPieceModule};
use crate::construction::serre_extension_module;
use crate::error::{AlgebraError, Result};
use crate::groebner::{ideal_equal, saturation_irrelevant, GroebnerBasis};
use crate::homology::{
    ext_from_resolution, free_resolution, hilbert_from_resolution, minimal_generator_degrees,
    sheaves_isomorphic, FreeResolution, PresentedModule,
};
use crate::poly::Poly;
use crate::ring::PolyRing;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CiCertificate {
    pub ci: bool,
    pub degrees: Vec<u32>,
}

/// Codimension of `V(I)`, from the Hilbert series of `R/I`.
pub fn codimension(ring: &PolyRing, ideal: &[Poly]) -> Result<usize> {
    let res = free_resolution(ring, &PresentedModule::quotient_ring(ideal));
    Ok(ring.nvars() - hilbert_from_resolution(ring, &res)?.dimension)
}

/// A saturated codimension two ideal defines a complete intersection exactly
/// when it has two minimal generators.
pub fn is_complete_intersection(ring: &PolyRing, ideal: &[Poly]) -> Result<CiCertificate> {
    let c = codimension(ring, ideal)?;
    if c != 2 {
        return Err(AlgebraError::WrongCodimension(c));
    }
    let degrees = minimal_generator_degrees(ring, ideal)?;
    Ok(CiCertificate {
        ci: degrees.len() == 2,
        degrees,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistSearch {
    pub a: Option<i32>,
    pub candidates: Vec<i32>,
    pub confirmed: Vec<i32>,
}

impl TwistSearch {
    pub fn anomaly(&self) -> bool {
        self.confirmed.len() > 1
    }
}

/// Searches for `a` with `Ext^2(R/I, R(-n-1)) ~ (R/I)(a)` as sheaves.
/// Candidates come from matching Hilbert polynomials and are tried in order
/// of increasing `|a|`.
pub fn subcanonical_twist(ring: &PolyRing, ideal: &[Poly], seed: u64) -> Result<TwistSearch> {
    let s = PresentedModule::quotient_ring(ideal);
    let res = free_resolution(ring, &s);
    subcanonical_twist_from_resolution(ring, ideal, &res, seed)
}

pub fn subcanonical_twist_from_resolution(
    ring: &PolyRing,
    ideal: &[Poly],
    res: &FreeResolution,
    seed: u64,
) -> Result<TwistSearch> {
    let hs = hilbert_from_resolution(ring, res)?;
    let nv = ring.nvars() as i32;
    if hs.codimension(ring.nvars()) != 2 {
        return Err(AlgebraError::WrongCodimension(hs.codimension(ring.nvars())));
    }
    let k = ext_from_resolution(ring, res, 2).module.twist(-nv);
    let k_res = free_resolution(ring, &k);
    let hk = hilbert_from_resolution(ring, &k_res)?;
    let top = *res.twists.iter().flatten().max().unwrap_or(&0);
    let bound = 2 * (hs.regularity + nv + 2) + top;
    let mut order: Vec<i32> = vec![0];
    for a in 1..=bound {
        order.push(a);
        order.push(-a);
    }
    let candidates: Vec<i32> = order
        .into_iter()
        .filter(|&a| hs.same_polynomial(&hk, a))
        .collect();
    let s = PresentedModule::quotient_ring(ideal);
    let confirmed: Vec<i32> = candidates
        .iter()
        .copied()
        .filter(|&a| sheaves_isomorphic(ring, &s.twist(a), &k, seed).is_some())
        .collect();
    Ok(TwistSearch {
        a: confirmed.first().copied(),
        candidates,
        confirmed,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateStatus {
    Certified,
    NotCertified,
    NotAttempted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportStatus {
    Ok,
    HypothesesNotCertified,
    CounterexampleOrBug,
    WrongCodimension,
    UnitIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub p: u32,
    pub n: usize,
    pub input_saturated: bool,
    pub saturated_generators: Vec<String>,
    pub codim: usize,
    pub d_vector: Vec<u32>,
    pub m: usize,
    pub a_x: Option<i32>,
    pub twist_candidates: Vec<i32>,
    pub twist_confirmed: Vec<i32>,
    pub twist_anomaly: bool,
    pub ci: bool,
    pub ci_degrees: Option<(u32, u32)>,
    pub m1: Vec<(i32, usize)>,
    pub m1_complete: bool,
    pub socle: Vec<(i32, usize)>,
    pub lci_subcanonical: CertificateStatus,
    pub verdicts: Vec<TheoremVerdict>,
    pub status: ReportStatus,
}

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    pub seed: u64,
    /// Degrees shown for `M_1` when it is not of finite length.
    pub window: Option<(i32, i32)>,
    /// Skip the rank two bundle certificate (faster, leaves theorem
    /// verdicts uncertified).
    pub skip_serre: bool,
}

/// Saturation, d-vector, canonical twist, `M_1`, socle, bundle certificate
/// and verdicts, in that order.
pub fn analyze(ring: &PolyRing, gens: &[Poly], opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let sat = saturation_irrelevant(ring, gens);
    let input_saturated = ideal_equal(ring, gens, &sat);
    let mut report = AnalysisReport {
        p: ring.p(),
        n: ring.n(),
        input_saturated,
        saturated_generators: Vec::new(),
        codim: 0,
        d_vector: Vec::new(),
        m: 0,
        a_x: None,
        twist_candidates: Vec::new(),
        twist_confirmed: Vec::new(),
        twist_anomaly: false,
        ci: false,
        ci_degrees: None,
        m1: Vec::new(),
        m1_complete: false,
        socle: Vec::new(),
        lci_subcanonical: CertificateStatus::NotAttempted,
        verdicts: Vec::new(),
        status: ReportStatus::Ok,
    };
    if sat.is_empty() || GroebnerBasis::of_ideal(ring, &sat).contains_unit() {
        report.status = ReportStatus::UnitIdeal;
        return Ok(report);
    }
    let sorted = crate::homology::sorted_minimal_generators(ring, &sat);
    report.saturated_generators = sorted.iter().map(|g| g.display(ring)).collect();
    let s = PresentedModule::quotient_ring(&sorted);
    let res = free_resolution(ring, &s);
    let hs = hilbert_from_resolution(ring, &res)?;
    report.codim = hs.codimension(ring.nvars());
    if report.codim != 2 {
        report.status = ReportStatus::WrongCodimension;
        return Ok(report);
    }
    report.d_vector = minimal_generator_degrees(ring, &sorted)?;
    report.m = report.d_vector.len();
    report.ci = report.m == 2;
    if report.ci {
        report.ci_degrees = Some((report.d_vector[0], report.d_vector[1]));
    }
    let twist = subcanonical_twist_from_resolution(ring, &sorted, &res, opts.seed)?;
    report.a_x = twist.a;
    report.twist_anomaly = twist.anomaly();
    report.twist_candidates = twist.candidates;
    report.twist_confirmed = twist.confirmed;

    let m1 = local_cohomology_from_resolution(ring, &res, 1, opts.window);
    report.m1 = m1.table();
    report.m1_complete = m1.complete;
    if m1.complete {
        report.socle = m1.socle_degrees(ring)?;
    }

    if let Some(a) = report.a_x {
        if !opts.skip_serre {
            report.lci_subcanonical = match serre_extension_module(ring, &sorted, a, opts.seed) {
                Ok(_) => CertificateStatus::Certified,
                Err(_) => CertificateStatus::NotCertified,
            };
        }
    }
    let inputs = TheoremInputs {
        n: ring.n(),
        d1: report.d_vector[0] as i32,
        a_x: report.a_x,
        lci_certified: report.lci_subcanonical == CertificateStatus::Certified,
        ci: report.ci,
        m1: &m1,
    };
    report.verdicts = check_theorems(ring, &inputs);
    report.status = summarize(&report.verdicts);
    Ok(report)
}

fn summarize(verdicts: &[TheoremVerdict]) -> ReportStatus {
    if verdicts.iter().any(|v| !v.consistent) {
        ReportStatus::CounterexampleOrBug
    } else if verdicts
        .iter()
        .any(|v| v.hypotheses == HypothesisStatus::NotCertified)
    {
        ReportStatus::HypothesesNotCertified
    } else {
        ReportStatus::Ok
    }
}

/// `h^1(I_X(j)) = dim M_1(X)_j` as a lookup.
pub fn h1(m1: &GradedPieceModule, j: i32) -> usize {
    m1.dim(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn skew_lines(ring: &PolyRing) -> Vec<Poly> {
        let x = ring.vars();
        vec![
            x[0].mul(ring, &x[2]),
            x[0].mul(ring, &x[3]),
            x[1].mul(ring, &x[2]),
            x[1].mul(ring, &x[3]),
        ]
    }

    #[test]
    fn ci_certificates() {
        let ring = PolyRing::default_p3();
        let x = ring.vars();
        let ci = vec![x[0].mul(&ring, &x[1]), x[2].pow(&ring, 3)];
        let c = is_complete_intersection(&ring, &ci).unwrap();
        assert!(c.ci);
        assert_eq!(c.degrees, vec![2, 3]);
        assert!(!is_complete_intersection(&ring, &skew_lines(&ring)).unwrap().ci);
        assert_eq!(
            is_complete_intersection(&ring, &[x[0].clone()]),
            Err(AlgebraError::WrongCodimension(1))
        );
    }

    #[test]
    fn twist_of_complete_intersection() {
        let ring = PolyRing::default_p3();
        let x = ring.vars();
        let ci = vec![x[0].mul(&ring, &x[1]), x[2].pow(&ring, 3)];
        assert_eq!(subcanonical_twist(&ring, &ci, 0).unwrap().a, Some(1));
    }

    #[test]
    fn twist_of_skew_lines() {
        let ring = PolyRing::default_p3();
        let t = subcanonical_twist(&ring, &skew_lines(&ring), 0).unwrap();
        assert_eq!(t.a, Some(-2));
        assert!(!t.anomaly());
    }

    #[test]
    fn twisted_cubic_is_not_subcanonical() {
        let ring = PolyRing::default_p3();
        let g = vec![
            ring.poly(&[(1, &[1, 0, 1, 0]), (-1, &[0, 2, 0, 0])]).unwrap(),
            ring.poly(&[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]).unwrap(),
            ring.poly(&[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2, 0])]).unwrap(),
        ];
        assert_eq!(subcanonical_twist(&ring, &g, 0).unwrap().a, None);
        let r = analyze(&ring, &g, &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.status, ReportStatus::HypothesesNotCertified);
        assert!(r
            .verdicts
            .iter()
            .all(|v| v.hypotheses == HypothesisStatus::NotCertified));
    }

    #[test]
    fn skew_lines_report() {
        let ring = PolyRing::default_p3();
        let r = analyze(&ring, &skew_lines(&ring), &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.a_x, Some(-2));
        assert_eq!(r.m1, vec![(0, 1)]);
        assert_eq!(r.socle, vec![(0, 1)]);
        assert_eq!(r.lci_subcanonical, CertificateStatus::Certified);
        assert_eq!(r.status, ReportStatus::Ok);
    }
}
