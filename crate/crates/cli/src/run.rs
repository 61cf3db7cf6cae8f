//! Commands, as pure functions from documents to reports.

use subcanon::cohomology::sheaf_cohomology_table;
use subcanon::construction::{
    construct_z, serre_extension_module, verify_construction, verify_m_self_duality, ConstructionError,
};
use subcanon::groebner::saturation_irrelevant;
use subcanon::homology::{
    betti_table, free_resolution, hilbert_from_resolution, minimal_generator_degrees,
    sorted_minimal_generators, PresentedModule,
};
use subcanon::subcanonical::{analyze, subcanonical_twist_from_resolution, AnalyzeOptions};
use subcanon::{AlgebraError, GroebnerBasis};

use crate::input::InputDocument;
use crate::report::{
    BettiEntry, BettiReport, CohomologyReport, ConstructionReport, ConstructionStatus, InputSummary,
    PackageSummary, ReportBody, ReportDocument, SCHEMA, SCHEMA_VERSION,
};

fn document(doc: &InputDocument, seed: u64, body: ReportBody) -> ReportDocument {
    ReportDocument {
        schema: SCHEMA.to_string(),
        version: SCHEMA_VERSION,
        seed,
        input: InputSummary {
            p: doc.ring.p(),
            n: doc.ring.n(),
            variables: doc.ring.names().to_vec(),
            generators: doc.gens.iter().map(|g| g.display(&doc.ring)).collect(),
        },
        body,
    }
}

pub fn run_analyze(doc: &InputDocument, seed: u64, window: Option<(i32, i32)>) -> Result<ReportDocument, AlgebraError> {
    let opts = AnalyzeOptions {
        seed,
        window,
        skip_serre: false,
    };
    let report = analyze(&doc.ring, &doc.gens, &opts)?;
    Ok(document(doc, seed, ReportBody::Analyze(report)))
}

pub fn run_construct(doc: &InputDocument, seed: u64) -> Result<ReportDocument, AlgebraError> {
    let ring = &doc.ring;
    let mut rep = ConstructionReport {
        saturated_generators: Vec::new(),
        codim: 0,
        d_vector: Vec::new(),
        a_x: None,
        package: None,
        xi_degree: None,
        z_generators: Vec::new(),
        verification: None,
        status: ConstructionStatus::UnitIdeal,
        detail: String::new(),
    };
    let done = |rep: ConstructionReport| Ok(document(doc, seed, ReportBody::Construct(rep)));
    let sat = saturation_irrelevant(ring, &doc.gens);
    if sat.is_empty() || GroebnerBasis::of_ideal(ring, &sat).contains_unit() {
        return done(rep);
    }
    let gens = sorted_minimal_generators(ring, &sat);
    rep.saturated_generators = gens.iter().map(|g| g.display(ring)).collect();
    let s = PresentedModule::quotient_ring(&gens);
    let res = free_resolution(ring, &s);
    rep.codim = hilbert_from_resolution(ring, &res)?.codimension(ring.nvars());
    if rep.codim != 2 {
        rep.status = ConstructionStatus::WrongCodimension;
        return done(rep);
    }
    rep.d_vector = minimal_generator_degrees(ring, &gens)?;
    let tw = subcanonical_twist_from_resolution(ring, &gens, &res, seed)?;
    rep.a_x = tw.a;
    let Some(a) = tw.a else {
        rep.status = ConstructionStatus::NoCanonicalTwist;
        return done(rep);
    };
    let pkg = match serre_extension_module(ring, &gens, a, seed) {
        Ok(p) => p,
        Err(ConstructionError::Algebra(e)) => return Err(e),
        Err(e) => {
            rep.status = ConstructionStatus::NotCertified;
            rep.detail = e.to_string();
            return done(rep);
        }
    };
    let top = pkg.pruned.gens().iter().max().copied().unwrap_or(0);
    rep.package = Some(PackageSummary {
        class_attempt: pkg.attempt,
        certification: pkg.certification.clone(),
        generator_degrees: pkg.pruned.gens().to_vec(),
        relation_count: pkg.pruned.relations().len(),
        free: pkg.pruned.relations().is_empty(),
        sequence_dims: pkg.sequence_dims_hold(ring, 0, top + a.abs() + ring.nvars() as i32 + 4),
        self_duality: verify_m_self_duality(ring, &pkg, seed),
    });
    let z = match construct_z(ring, &pkg) {
        Ok(z) => z,
        Err(ConstructionError::Algebra(e)) => return Err(e),
        Err(e) => {
            rep.status = ConstructionStatus::HypothesisViolated;
            rep.detail = e.to_string();
            return done(rep);
        }
    };
    rep.xi_degree = Some(z.xi_degree);
    rep.z_generators = z.j.iter().map(|g| g.display(ring)).collect();
    if z.degenerate {
        rep.status = ConstructionStatus::Degenerate;
        return done(rep);
    }
    rep.verification = Some(verify_construction(ring, &pkg, &z, seed)?);
    rep.status = ConstructionStatus::NonDegenerate;
    done(rep)
}

/// Graded Betti numbers of `R/I`.
pub fn run_betti(doc: &InputDocument) -> ReportDocument {
    let res = free_resolution(&doc.ring, &PresentedModule::quotient_ring(&doc.gens));
    let bt = betti_table(&res);
    let entries = bt
        .entries
        .iter()
        .map(|(&(i, j), &beta)| BettiEntry { i, j, beta })
        .collect();
    let body = ReportBody::Betti(BettiReport {
        entries,
        projective_dimension: bt.projective_dimension(),
        regularity: bt.regularity(),
    });
    document(doc, 0, body)
}

/// `h^i(I~(j))` for the ideal sheaf.
pub fn run_cohom(doc: &InputDocument, max_i: usize, lo: i32, hi: i32) -> ReportDocument {
    let m = PresentedModule::ideal(&doc.ring, &doc.gens);
    let t = sheaf_cohomology_table(&doc.ring, &m, lo, hi);
    let rows = t.rows.into_iter().take(max_i + 1).collect();
    document(doc, 0, ReportBody::Cohom(CohomologyReport { lo, hi, rows }))
}
