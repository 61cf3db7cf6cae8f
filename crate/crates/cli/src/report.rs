//! Machine-readable reports (JSON, schema `subcanon-report`) and their
//! plain-text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use subcanon::construction::{Certification, SelfDuality, VerificationRecord};
use subcanon::subcanonical::{AnalysisReport, ReportStatus};

pub const SCHEMA: &str = "subcanon-report";
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
/// Bad arguments or an unparsable input file (also clap's usage code).
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_CERTIFIED: i32 = 3;
pub const EXIT_COUNTEREXAMPLE_OR_BUG: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: String,
    pub version: u32,
    pub seed: u64,
    pub input: InputSummary,
    pub body: ReportBody,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSummary {
    pub p: u32,
    pub n: usize,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum ReportBody {
    Analyze(AnalysisReport),
    Construct(ConstructionReport),
    Betti(BettiReport),
    Cohom(CohomologyReport),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionStatus {
    /// `X` is a complete intersection; the section splits off.
    Degenerate,
    NonDegenerate,
    HypothesisViolated,
    NoCanonicalTwist,
    NotCertified,
    WrongCodimension,
    UnitIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackageSummary {
    pub class_attempt: usize,
    pub certification: Certification,
    pub generator_degrees: Vec<i32>,
    pub relation_count: usize,
    pub free: bool,
    pub sequence_dims: bool,
    pub self_duality: SelfDuality,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub saturated_generators: Vec<String>,
    pub codim: usize,
    pub d_vector: Vec<u32>,
    pub a_x: Option<i32>,
    pub package: Option<PackageSummary>,
    pub xi_degree: Option<i32>,
    pub z_generators: Vec<String>,
    pub verification: Option<VerificationRecord>,
    pub status: ConstructionStatus,
    pub detail: String,
}

impl ConstructionReport {
    /// Every recorded check passed.
    pub fn consistent(&self) -> bool {
        self.package
            .as_ref()
            .map_or(true, |p| p.sequence_dims && p.self_duality.witness)
            && self.verification.as_ref().map_or(true, |v| v.all_pass())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: i32,
    pub beta: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub entries: Vec<BettiEntry>,
    pub projective_dimension: Option<usize>,
    pub regularity: Option<i32>,
}

/// `h^i(I~(j))` for `0 <= i <= max_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub lo: i32,
    pub hi: i32,
    pub rows: Vec<Vec<usize>>,
}

impl ReportDocument {
    pub fn exit_code(&self) -> i32 {
        match &self.body {
            ReportBody::Analyze(a) => match a.status {
                ReportStatus::Ok => EXIT_OK,
                ReportStatus::CounterexampleOrBug => EXIT_COUNTEREXAMPLE_OR_BUG,
                ReportStatus::HypothesesNotCertified
                | ReportStatus::WrongCodimension
                | ReportStatus::UnitIdeal => EXIT_NOT_CERTIFIED,
            },
            ReportBody::Construct(c) => {
                if !c.consistent() {
                    return EXIT_COUNTEREXAMPLE_OR_BUG;
                }
                match c.status {
                    ConstructionStatus::Degenerate | ConstructionStatus::NonDegenerate => EXIT_OK,
                    _ => EXIT_NOT_CERTIFIED,
                }
            }
            ReportBody::Betti(_) | ReportBody::Cohom(_) => EXIT_OK,
        }
    }

    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_machine(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_human(&self) -> String {
        let mut s = String::new();
        let inp = &self.input;
        let _ = writeln!(s, "ring: P^{} over F_{} ({})", inp.n, inp.p, inp.variables.join(", "));
        match &self.body {
            ReportBody::Analyze(a) => human_analysis(&mut s, a),
            ReportBody::Construct(c) => human_construction(&mut s, c),
            ReportBody::Betti(b) => human_betti(&mut s, b),
            ReportBody::Cohom(c) => human_cohom(&mut s, c),
        }
        s
    }
}

fn table(pairs: &[(i32, usize)]) -> String {
    if pairs.is_empty() {
        return "0".to_string();
    }
    pairs
        .iter()
        .map(|(j, d)| format!("{j}:{d}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn kebab<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|x| x.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn human_analysis(s: &mut String, a: &AnalysisReport) {
    let _ = writeln!(s, "saturated input: {}", a.input_saturated);
    for g in &a.saturated_generators {
        let _ = writeln!(s, "  {g}");
    }
    let _ = writeln!(s, "codimension: {}", a.codim);
    if a.codim == 2 {
        let _ = writeln!(s, "d-vector: {:?} (m = {})", a.d_vector, a.m);
        match a.a_x {
            Some(v) => {
                let _ = writeln!(s, "canonical twist a_X: {v}");
            }
            None => {
                let _ = writeln!(s, "canonical twist a_X: none (candidates {:?})", a.twist_candidates);
            }
        }
        let _ = writeln!(s, "complete intersection: {}", a.ci);
        let _ = writeln!(
            s,
            "M_1 (degree:dim){}: {}",
            if a.m1_complete { "" } else { " [window only]" },
            table(&a.m1)
        );
        let _ = writeln!(s, "socle: {}", table(&a.socle));
        let _ = writeln!(s, "lci/subcanonical certificate: {}", kebab(&a.lci_subcanonical));
        for v in &a.verdicts {
            let _ = writeln!(
                s,
                "  {:<16} hypotheses {:<14} conclusion {:<14} {}",
                kebab(&v.criterion),
                kebab(&v.hypotheses),
                kebab(&v.conclusion),
                if v.consistent { "consistent" } else { "INCONSISTENT" }
            );
        }
    }
    let _ = writeln!(s, "status: {}", kebab(&a.status));
}

fn human_construction(s: &mut String, c: &ConstructionReport) {
    let _ = writeln!(s, "d-vector: {:?}", c.d_vector);
    if let Some(a) = c.a_x {
        let _ = writeln!(s, "canonical twist a_X: {a}");
    }
    if let Some(p) = &c.package {
        let _ = writeln!(
            s,
            "bundle module: generators in degrees {:?}, {} relations{}",
            p.generator_degrees,
            p.relation_count,
            if p.free { " (free)" } else { "" }
        );
        let _ = writeln!(
            s,
            "certified: {} (class #{}), self-duality witness: {}",
            p.certification.passed, p.class_attempt, p.self_duality.witness
        );
    }
    if !c.z_generators.is_empty() {
        let _ = writeln!(s, "J:");
        for g in &c.z_generators {
            let _ = writeln!(s, "  {g}");
        }
    }
    if let Some(v) = &c.verification {
        for ch in v.checks.iter().chain(&v.supporting) {
            let _ = writeln!(
                s,
                "  {:<24} {}  {}",
                ch.name,
                if ch.pass { "pass" } else { "FAIL" },
                ch.detail
            );
        }
    }
    let _ = writeln!(s, "status: {}", kebab(&c.status));
    if !c.detail.is_empty() {
        let _ = writeln!(s, "{}", c.detail);
    }
}

fn human_betti(s: &mut String, b: &BettiReport) {
    let Some(pd) = b.projective_dimension else {
        let _ = writeln!(s, "zero module");
        return;
    };
    let rows: Vec<i32> = {
        let mut r: Vec<i32> = b.entries.iter().map(|e| e.j - e.i as i32).collect();
        r.sort();
        r.dedup();
        r
    };
    let _ = write!(s, "{:>6}", "");
    for i in 0..=pd {
        let _ = write!(s, "{i:>6}");
    }
    s.push('\n');
    for r in rows {
        let _ = write!(s, "{:>5}:", r);
        for i in 0..=pd {
            let v = b
                .entries
                .iter()
                .find(|e| e.i == i && e.j - i as i32 == r)
                .map(|e| e.beta.to_string())
                .unwrap_or_else(|| "-".into());
            let _ = write!(s, "{v:>6}");
        }
        s.push('\n');
    }
    if let Some(reg) = b.regularity {
        let _ = writeln!(s, "projective dimension {pd}, regularity {reg}");
    }
}

fn human_cohom(s: &mut String, c: &CohomologyReport) {
    let _ = write!(s, "{:>8}", "j");
    for j in c.lo..=c.hi {
        let _ = write!(s, "{j:>6}");
    }
    s.push('\n');
    for (i, row) in c.rows.iter().enumerate() {
        let _ = write!(s, "{:>8}", format!("h^{i}"));
        for v in row {
            let _ = write!(s, "{v:>6}");
        }
        s.push('\n');
    }
}
