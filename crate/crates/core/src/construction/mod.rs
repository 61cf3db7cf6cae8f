//! Rank two bundles from subcanonical codimension two schemes, and the
//! scheme `Z` cut out by the annihilator of the cokernel of `M* -> R(d_1)`.

mod verify;

pub use verify::{lemma_3quad_probe, verify_construction, Check, QuadProbe, VerificationRecord};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::AlgebraError;
use crate::groebner::{saturation_irrelevant, syzygies_with_degrees, GroebnerBasis};
use crate::homology::{
    annihilator, ext_from_resolution, free_resolution, hilbert_from_resolution,
    modules_isomorphic, sorted_minimal_generators, FreeResolution, ModuleView, PresentedModule,
};
use crate::monomial::count_monomials;
use crate::poly::Poly;
use crate::ring::PolyRing;
use crate::vector::{Term, Vector};

/// Extension classes tried before giving up.
pub const MAX_CLASS_ATTEMPTS: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("no extension class of degree zero gives a rank two bundle ({attempts} tried)")]
    NoCertifiedClass { attempts: usize },
    #[error("2*d1 = {lhs} exceeds a + n + 2 = {rhs}")]
    HypothesisViolated { lhs: i32, rhs: i32 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certification {
    /// `Ext^i(M, R)` has finite length, for `i = 1..=n+1`.
    pub ext_finite_length: Vec<bool>,
    pub dimension: usize,
    pub multiplicity: i64,
    pub passed: bool,
}

/// `0 -> R(-a-n-1) -> M -> I -> 0` with `M~` locally free of rank two.
#[derive(Clone, Debug)]
pub struct SerrePackage {
    pub a_x: i32,
    /// Minimal generators of `I`, sorted by degree.
    pub ideal: Vec<Poly>,
    /// Presentation on `F_0 ⊕ R(-a-n-1)`: the first generators map to those
    /// of `I`, the last one spans the copy of `R(-a-n-1)`.
    pub module: PresentedModule,
    pub pruned: PresentedModule,
    pub resolution: FreeResolution,
    /// Cocycle in `F_1^*` giving the class.
    pub class: Vector,
    pub attempt: usize,
    pub certification: Certification,
}

impl SerrePackage {
    pub fn d1(&self) -> i32 {
        self.ideal[0].degree().unwrap() as i32
    }

    /// Degreewise exactness of the defining sequence:
    /// `dim M_j = dim I_j + dim R_{j-a-n-1}`.
    pub fn sequence_dims_hold(&self, ring: &PolyRing, lo: i32, hi: i32) -> bool {
        let vm = ModuleView::new(ring, &self.module);
        let vi = ModuleView::new(ring, &PresentedModule::quotient_ring(&self.ideal));
        let nv = ring.nvars();
        let shift = self.a_x + nv as i32;
        (lo..=hi).all(|j| {
            let ij = count_monomials(nv, j as i64) as usize - vi.dim(ring, j);
            vm.dim(ring, j) == ij + count_monomials(nv, (j - shift) as i64) as usize
        })
    }
}

fn certify(ring: &PolyRing, res: &FreeResolution) -> Certification {
    let nv = ring.nvars();
    let ext_finite_length: Vec<bool> = (1..=nv)
        .map(|i| {
            let e = ext_from_resolution(ring, res, i);
            e.module.gens().is_empty() || ModuleView::new(ring, &e.module).is_finite_length(ring)
        })
        .collect();
    let (dimension, multiplicity) = match hilbert_from_resolution(ring, res) {
        Ok(h) => (h.dimension, h.multiplicity),
        Err(_) => (0, 0),
    };
    let passed = ext_finite_length.iter().all(|&b| b) && dimension == nv && multiplicity == 2;
    Certification {
        ext_finite_length,
        dimension,
        multiplicity,
        passed,
    }
}

/// Realizes degree-zero classes of `Ext^1(I, R(-a-n-1))` as extension
/// modules and returns the first whose sheafification is locally free of
/// rank two. Basis classes are tried first, then seeded random combinations.
pub fn serre_extension_module(
    ring: &PolyRing,
    ideal: &[Poly],
    a_x: i32,
    seed: u64,
) -> Result<SerrePackage, ConstructionError> {
    let f = ring.field();
    let nv = ring.nvars() as i32;
    let gens = sorted_minimal_generators(ring, ideal);
    if gens.is_empty() || gens.iter().any(|g| g.is_constant()) {
        return Err(AlgebraError::UnitIdeal.into());
    }
    let i_mod = PresentedModule::ideal(ring, &gens);
    let i_mod = PresentedModule::new(
        gens.iter().map(|g| g.degree().unwrap() as i32).collect(),
        i_mod.relations().to_vec(),
    )?;
    let res_i = free_resolution(ring, &i_mod);
    let phi = i_mod.relations().to_vec();
    let f1: Vec<i32> = phi.iter().map(|v| v.degree(i_mod.gens()).unwrap()).collect();
    let ext1 = ext_from_resolution(ring, &res_i, 1);
    let target = -a_x - nv;
    let view = ModuleView::new(ring, &ext1.module);
    let basis: Vec<Vector> = view
        .basis(ring, target)
        .iter()
        .map(|&(c, m)| ext1.cocycles[c as usize].mul_monomial(ring, &m, 1))
        .collect();
    if basis.is_empty() {
        return Err(ConstructionError::NoCertifiedClass { attempts: 0 });
    }
    let mut classes: Vec<Vector> = basis.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while classes.len() < MAX_CLASS_ATTEMPTS && basis.len() > 1 {
        let mut acc = Vector::zero();
        for b in &basis {
            acc = acc.add(ring, &b.scale(ring, rng.gen_range(1..f.modulus())));
        }
        classes.push(acc);
    }
    classes.truncate(MAX_CLASS_ATTEMPTS);
    let r = gens.len();
    let mut m_gens = i_mod.gens().to_vec();
    m_gens.push(a_x + nv);
    for (attempt, class) in classes.iter().enumerate() {
        let neg = class.scale(ring, f.neg(1));
        let cols: Vec<Vector> = phi
            .iter()
            .enumerate()
            .map(|(j, col)| {
                let mut terms: Vec<Term> = col.terms().to_vec();
                for (mono, c) in neg.component(j).terms() {
                    terms.push(Term {
                        comp: r as u32,
                        mono: *mono,
                        coef: *c,
                    });
                }
                Vector::from_unsorted(ring, terms)
            })
            .collect();
        debug_assert!(cols.iter().zip(&f1).all(|(c, d)| c.is_zero() || c.degree(&m_gens) == Some(*d)));
        let module = PresentedModule::new(m_gens.clone(), cols)?;
        let pruned = module.prune(ring).module;
        let resolution = free_resolution(ring, &pruned);
        let certification = certify(ring, &resolution);
        if certification.passed {
            return Ok(SerrePackage {
                a_x,
                ideal: gens,
                module,
                pruned,
                resolution,
                class: class.clone(),
                attempt,
                certification,
            });
        }
    }
    Err(ConstructionError::NoCertifiedClass {
        attempts: classes.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfDuality {
    pub hilbert_precheck: bool,
    pub witness: bool,
}

/// `M* ≅ M(a + n + 1)`.
pub fn verify_m_self_duality(ring: &PolyRing, pkg: &SerrePackage, seed: u64) -> SelfDuality {
    let nv = ring.nvars() as i32;
    let dual = ext_from_resolution(ring, &pkg.resolution, 0).module;
    let shifted = pkg.pruned.twist(pkg.a_x + nv);
    let vd = ModuleView::new(ring, &dual);
    let vs = ModuleView::new(ring, &shifted);
    let lo = dual.gens().iter().chain(shifted.gens()).min().copied().unwrap_or(0) - 1;
    let hi = dual.gens().iter().chain(shifted.gens()).max().copied().unwrap_or(0) + 3;
    let hilbert_precheck = (lo..=hi).all(|j| vd.dim(ring, j) == vs.dim(ring, j));
    let witness = hilbert_precheck && modules_isomorphic(ring, &dual, &shifted, seed).is_some();
    SelfDuality {
        hilbert_precheck,
        witness,
    }
}

#[derive(Clone, Debug)]
pub struct ConstructionResult {
    /// The generator of `M` lifting the first minimal generator of `I`.
    pub xi: Vector,
    pub xi_degree: i32,
    /// `Ann(coker(M* -> R(d_1)))`, saturated.
    pub j: Vec<Poly>,
    pub degenerate: bool,
}

/// Saturated ideal of the zero scheme of the section `R(-deg ξ) -> M`,
/// read off as `Ann(coker(M* -> R(deg ξ)))`. The image of the dual map is
/// the ideal of values `u(ξ)` over `u ∈ M*`. Returns `(1)` when the map is
/// split.
pub fn section_zero_locus(ring: &PolyRing, m: &PresentedModule, xi: &Vector) -> Vec<Poly> {
    let rel = m.relation_matrix().transpose();
    let duals = syzygies_with_degrees(ring, rel.row_degs(), &rel.columns(), rel.col_degs());
    let deg = xi.degree(m.gens()).expect("nonzero section");
    let values: Vec<Poly> = duals
        .gens
        .iter()
        .map(|u| {
            let mut acc = Poly::zero();
            for t in xi.terms() {
                let c = u.component(t.comp as usize).mul_monomial(ring, &t.mono, t.coef);
                acc = acc.add(ring, &c).expect("same degree");
            }
            acc
        })
        .filter(|p| !p.is_zero())
        .collect();
    let coker = PresentedModule::quotient_ring(&values).twist(deg);
    let ann = annihilator(ring, &coker);
    if GroebnerBasis::of_ideal(ring, &ann).contains_unit() {
        return vec![Poly::constant(ring, 1)];
    }
    sorted_minimal_generators(ring, &saturation_irrelevant(ring, &ann))
}

/// A seeded random element of `M_k`, or `None` when the piece is zero.
pub fn random_section(ring: &PolyRing, m: &PresentedModule, k: i32, seed: u64) -> Option<Vector> {
    let view = ModuleView::new(ring, m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = ring.field().modulus();
    let mut xi = Vector::zero();
    for b in view.basis(ring, k) {
        xi = xi.add(ring, &ModuleView::basis_vector(&b).scale(ring, rng.gen_range(1..p)));
    }
    (!xi.is_zero()).then_some(xi)
}

/// `J = Ann(coker i*)` for `i: R(-d_1) -> M` sending `1` to `ξ`. The image
/// of `i*` is the ideal of values `u(ξ)` over `u ∈ M*`.
pub fn construct_z(ring: &PolyRing, pkg: &SerrePackage) -> Result<ConstructionResult, ConstructionError> {
    let n = ring.n() as i32;
    let d1 = pkg.d1();
    if 2 * d1 > pkg.a_x + n + 2 {
        return Err(ConstructionError::HypothesisViolated {
            lhs: 2 * d1,
            rhs: pkg.a_x + n + 2,
        });
    }
    let j = section_zero_locus(ring, &pkg.module, &Vector::basis(0));
    let degenerate = j.len() == 1 && j[0].is_constant();
    Ok(ConstructionResult {
        xi: Vector::basis(0),
        xi_degree: d1,
        j,
        degenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_intersection_gives_split_bundle() {
        let ring = PolyRing::default_p3();
        let x = ring.vars();
        let ci = vec![x[0].mul(&ring, &x[1]), x[2].pow(&ring, 3)];
        let pkg = serre_extension_module(&ring, &ci, 1, 0).unwrap();
        assert!(pkg.certification.passed);
        let mut g = pkg.pruned.gens().to_vec();
        g.sort();
        assert_eq!(g, vec![2, 3]);
        assert!(pkg.pruned.relations().is_empty());
        assert!(pkg.sequence_dims_hold(&ring, 0, 8));
        assert!(verify_m_self_duality(&ring, &pkg, 0).witness);
        let z = construct_z(&ring, &pkg).unwrap();
        assert!(z.degenerate);
    }

    #[test]
    fn skew_lines_bundle() {
        let ring = PolyRing::default_p3();
        let x = ring.vars();
        let skew = vec![
            x[0].mul(&ring, &x[2]),
            x[0].mul(&ring, &x[3]),
            x[1].mul(&ring, &x[2]),
            x[1].mul(&ring, &x[3]),
        ];
        let pkg = serre_extension_module(&ring, &skew, -2, 0).unwrap();
        assert!(!pkg.pruned.relations().is_empty());
        assert!(pkg.sequence_dims_hold(&ring, 0, 6));
        assert!(verify_m_self_duality(&ring, &pkg, 0).witness);
        // 2 d1 = 4 > a + n + 2 = 3
        assert!(matches!(
            construct_z(&ring, &pkg),
            Err(ConstructionError::HypothesisViolated { .. })
        ));
    }
}
