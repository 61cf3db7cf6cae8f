//! Checks on the output of the construction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{ConstructionResult, SerrePackage};
use crate::cohomology::{
    a_invariant_from_resolution, deficiency_module, sheaf_cohomology_from_resolution,
    sheaf_cohomology_table, GradedPieceModule,
};
use crate::groebner::{ideal_equal, ideal_quotient, GroebnerBasis};
use crate::homology::{
    ext_from_resolution, free_resolution, hilbert_from_resolution, hilbert_invariants, ModuleView,
    PresentedModule,
};
use crate::monomial::{count_monomials, monomials_of_degree};
use crate::poly::Poly;
use crate::ring::PolyRing;
use crate::subcanonical::{is_complete_intersection, subcanonical_twist};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: String) -> Self {
        Check {
            name: name.to_string(),
            pass,
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    /// Canonical twist, deficiency-module translate, non-CI, no linear
    /// forms, degreewise dimensions of `I_Z`.
    pub checks: Vec<Check>,
    /// a-invariant bound, the epsilon chain, bundle duality table,
    /// unmixedness and local Cohen-Macaulayness.
    pub supporting: Vec<Check>,
    pub random_forms: Vec<String>,
}

impl VerificationRecord {
    pub fn five_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn all_pass(&self) -> bool {
        self.five_checks_pass() && self.supporting.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().chain(&self.supporting).find(|c| c.name == name)
    }
}

fn translate_holds(mx: &GradedPieceModule, mz: &GradedPieceModule, s: i32) -> (bool, (i32, i32)) {
    let lo = mz.lo.min(mx.lo - s);
    let hi = mz.hi.max(mx.hi - s);
    let ok = mx.complete && mz.complete && (lo..=hi).all(|j| mz.dim(j) == mx.dim(j + s));
    (ok, (lo, hi))
}

fn random_form(ring: &PolyRing, rng: &mut ChaCha8Rng, d: u32) -> Poly {
    let p = ring.field().modulus();
    let terms = monomials_of_degree(ring.nvars(), d)
        .into_iter()
        .map(|m| (m, rng.gen_range(0..p)))
        .collect();
    Poly::from_terms(ring, terms).expect("homogeneous by construction")
}

/// Runs the checks on a non-degenerate construction.
pub fn verify_construction(
    ring: &PolyRing,
    pkg: &SerrePackage,
    z: &ConstructionResult,
    seed: u64,
) -> crate::error::Result<VerificationRecord> {
    let n = ring.n() as i32;
    let nv = ring.nvars();
    let a = pkg.a_x;
    let d1 = pkg.d1();
    let j = &z.j;
    let mut checks = Vec::new();

    let expected = 2 * d1 - a - 2 * n - 2;
    let tw = subcanonical_twist(ring, j, seed)?;
    checks.push(Check::new(
        "omega-twist",
        tw.a == Some(expected),
        format!("expected {expected}, found {:?}", tw.a),
    ));

    let s = a + n + 1 - d1;
    let mx = deficiency_module(ring, &pkg.ideal);
    let mz = deficiency_module(ring, j);
    let (ok, (lo, hi)) = translate_holds(&mx, &mz, s);
    checks.push(Check::new(
        "m1-translate",
        ok,
        format!("shift {s} over [{lo}, {hi}]"),
    ));

    let x_ci = is_complete_intersection(ring, &pkg.ideal)?.ci;
    let z_ci = is_complete_intersection(ring, j)?.ci;
    checks.push(Check::new(
        "z-not-ci",
        x_ci || !z_ci,
        format!("X ci {x_ci}, Z ci {z_ci}"),
    ));

    let sj = PresentedModule::quotient_ring(j);
    let vj = ModuleView::new(ring, &sj);
    let j1 = nv - vj.dim(ring, 1);
    checks.push(Check::new("no-linear-forms", j1 == 0, format!("dim J_1 = {j1}")));

    let vm = ModuleView::new(ring, &pkg.pruned);
    let top = j.iter().filter_map(|g| g.degree()).max().unwrap_or(0) as i32;
    let window_hi = top + (a + n + 1).abs() + 2 * d1 + 2;
    let seq = (0..=window_hi).all(|t| {
        let iz = count_monomials(nv, t as i64) as usize - vj.dim(ring, t);
        let m = vm.dim(ring, t - d1 + a + n + 1);
        let r = count_monomials(nv, (t - 2 * d1 + a + n + 1) as i64) as usize;
        iz + r == m
    });
    checks.push(Check::new(
        "sequence-dims",
        seq,
        format!("degrees 0..={window_hi}"),
    ));

    let mut supporting = Vec::new();
    let res_j = free_resolution(ring, &sj);
    let hj = hilbert_from_resolution(ring, &res_j)?;
    let a_rj = a_invariant_from_resolution(ring, &res_j, hj.dimension)?;
    supporting.push(Check::new(
        "a-invariant-bound",
        a_rj >= -n + 1,
        format!("a(R/J) = {a_rj}"),
    ));

    let e_lo = -(hj.regularity + n + 4);
    let table = sheaf_cohomology_from_resolution(ring, &sj, &res_j, e_lo, 0);
    let eps = (e_lo..=0).find(|&t| table.get(0, t).unwrap_or(0) != 0);
    supporting.push(Check::new(
        "epsilon-chain",
        eps.is_some_and(|e| a_rj == expected - e) && table.get(0, e_lo) == Some(0),
        format!("epsilon {eps:?}, a(R/J) {a_rj}, 2d1-a-2n-2 = {expected}"),
    ));

    let lo = a.div_euclid(2) - (n + 3);
    let hi = a - lo;
    let e_table = sheaf_cohomology_table(ring, &pkg.pruned, lo, hi);
    let nn = n as usize;
    let dual = (0..=nn).all(|i| {
        (lo..=hi).all(|t| e_table.get(i, t) == e_table.get(nn - i, a - t))
    });
    supporting.push(Check::new(
        "bundle-duality",
        dual,
        format!("window [{lo}, {hi}]"),
    ));

    let gb = GroebnerBasis::of_ideal(ring, j);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut forms = Vec::new();
    let mut unmixed = true;
    for d in [1u32, 1, 2] {
        let f = loop {
            let f = random_form(ring, &mut rng, d);
            if !f.is_zero() && !gb.normal_form_poly(ring, &f).is_zero() {
                break f;
            }
        };
        let q = ideal_quotient(ring, j, &f)?;
        unmixed &= ideal_equal(ring, &q, j);
        forms.push(f.display(ring));
    }
    supporting.push(Check::new(
        "unmixed",
        unmixed,
        format!("{} random forms", forms.len()),
    ));

    let lcm = (3..nv).all(|i| {
        let e = ext_from_resolution(ring, &res_j, i);
        e.module.gens().is_empty() || ModuleView::new(ring, &e.module).is_finite_length(ring)
    });
    supporting.push(Check::new(
        "locally-cohen-macaulay",
        lcm,
        "Ext^i(R/J, R) of finite length for 3 <= i <= n".to_string(),
    ));

    Ok(VerificationRecord {
        checks,
        supporting,
        random_forms: forms,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadProbe {
    pub quadrics: usize,
    pub multiplicity: i64,
    pub depth: usize,
    pub dimension: usize,
    pub reduced: bool,
    /// Non-reduced with at least three independent quadrics.
    pub demand: bool,
    pub pass: bool,
}

/// Records `dim J_2`, `e(R/J)`, depth and dimension; when `J` is not reduced
/// and has three quadrics, demands `e <= 3` and `depth = dim = n - 1`.
pub fn lemma_3quad_probe(ring: &PolyRing, j: &[Poly], reduced: bool) -> crate::error::Result<QuadProbe> {
    let s = PresentedModule::quotient_ring(j);
    let h = hilbert_invariants(ring, &s)?;
    let quadrics = count_monomials(ring.nvars(), 2) as usize - ModuleView::new(ring, &s).dim(ring, 2);
    let demand = !reduced && quadrics >= 3;
    let n = ring.n();
    let pass = !demand || (h.multiplicity <= 3 && h.depth == h.dimension && h.dimension + 1 == n);
    Ok(QuadProbe {
        quadrics,
        multiplicity: h.multiplicity,
        depth: h.depth,
        dimension: h.dimension,
        reduced,
        demand,
        pass,
    })
}
