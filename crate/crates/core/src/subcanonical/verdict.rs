//! The four complete-intersection criteria, each evaluated as hypotheses
//! plus conclusion, with a consistency flag.

use serde::{Deserialize, Serialize};

use crate::cohomology::GradedPieceModule;
use crate::ring::PolyRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    /// `2 d_1 <= a + n + 2` and `h^1(I_X(j)) = 0` for `j < d_1 - 1` force CI.
    H1Bound,
    /// `2 d_1 <= a + n + 2` forces CI or a socle vanishing below
    /// `a + n + 2 - d_1`.
    SocleDichotomy,
    /// `n >= 6`, `(R_+)^3 M_1 = 0` and `2 d_1 <= a + n + 1` force CI.
    CubeAnnihilated,
    /// `2 d_1 <= a + n + 2` and one vanishing `h^1(I_X(j))` with
    /// `d_1 - 2 <= j <= a + n + 2 - d_1` force CI.
    H1Gap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HypothesisStatus {
    Satisfied,
    Violated,
    NotCertified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConclusionStatus {
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub criterion: Criterion,
    pub hypotheses: HypothesisStatus,
    pub conclusion: ConclusionStatus,
    pub consistent: bool,
    pub detail: String,
}

pub struct TheoremInputs<'a> {
    pub n: usize,
    pub d1: i32,
    pub a_x: Option<i32>,
    pub lci_certified: bool,
    pub ci: bool,
    pub m1: &'a GradedPieceModule,
}

fn verdict(criterion: Criterion, hyp: bool, concl: bool, detail: String) -> TheoremVerdict {
    if hyp {
        TheoremVerdict {
            criterion,
            hypotheses: HypothesisStatus::Satisfied,
            conclusion: if concl { ConclusionStatus::Holds } else { ConclusionStatus::Fails },
            consistent: concl,
            detail,
        }
    } else {
        TheoremVerdict {
            criterion,
            hypotheses: HypothesisStatus::Violated,
            conclusion: ConclusionStatus::NotApplicable,
            consistent: true,
            detail,
        }
    }
}

pub fn check_theorems(ring: &PolyRing, inp: &TheoremInputs) -> Vec<TheoremVerdict> {
    let all = [
        Criterion::H1Bound,
        Criterion::SocleDichotomy,
        Criterion::CubeAnnihilated,
        Criterion::H1Gap,
    ];
    let a = match inp.a_x {
        Some(a) if inp.lci_certified && inp.m1.complete => a,
        _ => {
            let why = if inp.a_x.is_none() {
                "not subcanonical"
            } else if !inp.lci_certified {
                "rank two bundle not certified"
            } else {
                "M_1 is not of finite length"
            };
            return all
                .iter()
                .map(|&c| TheoremVerdict {
                    criterion: c,
                    hypotheses: HypothesisStatus::NotCertified,
                    conclusion: ConclusionStatus::NotApplicable,
                    consistent: true,
                    detail: why.to_string(),
                })
                .collect();
        }
    };
    let n = inp.n as i32;
    let d1 = inp.d1;
    let m1 = inp.m1;
    let bound = a + n + 2 - d1;
    let base = 2 * d1 <= a + n + 2;
    let first_h1 = m1.table().first().map(|(j, _)| *j);

    let h1_ok = first_h1.map_or(true, |j| j >= d1 - 1);
    let v1 = verdict(
        Criterion::H1Bound,
        base && h1_ok,
        inp.ci,
        format!(
            "2d1={} vs a+n+2={}; first nonzero h1 at {:?}, needed >= {}",
            2 * d1,
            a + n + 2,
            first_h1,
            d1 - 1
        ),
    );

    let socle = m1.socle_degrees(ring).unwrap_or_default();
    let low_socle: Vec<i32> = socle.iter().map(|(j, _)| *j).filter(|&j| j < bound).collect();
    let v2 = verdict(
        Criterion::SocleDichotomy,
        base,
        inp.ci || low_socle.is_empty(),
        format!("socle degrees below {}: {:?}", bound, low_socle),
    );

    let cube = m1.killed_by_power(ring, 3).unwrap_or(false);
    let v3 = verdict(
        Criterion::CubeAnnihilated,
        n >= 6 && cube && 2 * d1 <= a + n + 1,
        inp.ci,
        format!("n={}, cube kills M_1: {}, 2d1={} vs a+n+1={}", n, cube, 2 * d1, a + n + 1),
    );

    let gap = (d1 - 2..=bound).find(|&j| m1.dim(j) == 0);
    let v4 = verdict(
        Criterion::H1Gap,
        base && gap.is_some(),
        inp.ci,
        format!("vanishing h1 in [{}, {}] at {:?}", d1 - 2, bound, gap),
    );
    vec![v1, v2, v3, v4]
}

/// For a vanishing degree `j` of `M_1`, the last nonzero piece below it is
/// killed by every variable.
pub fn gap_chain_holds(ring: &PolyRing, m1: &GradedPieceModule, j: i32) -> bool {
    match (m1.lo..j).rev().find(|&k| m1.dim(k) > 0) {
        Some(k) => m1.piece_in_socle(ring, k),
        None => true,
    }
}
