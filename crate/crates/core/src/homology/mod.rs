//! Finitely presented graded modules and what can be read off their
//! resolutions.

mod ext;
mod hilbert;
mod resolution;
mod view;

pub use ext::{
    ext_from_resolution, ext_module, find_degree_zero_iso, hom_module, modules_isomorphic,
    sheaves_isomorphic, ExtModule, HomWitness,
};
pub use hilbert::{hilbert_from_resolution, hilbert_invariants, HilbertData};
pub use resolution::{
    betti_table, free_resolution, graded_piece_matrix, tor_dimension, verify_resolution,
    BettiTable, FreeResolution, ResolutionCheck,
};
pub use view::ModuleView;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::groebner::{minimal_generators, minimal_generators_ideal, module_quotient, intersect, syzygy_module};
use crate::matrix::GradedMatrix;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::PolyRing;
use crate::vector::{Term, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModuleTag {
    Abstract,
    Ideal,
    QuotientRing,
}

/// `coker(F_1 -> F_0)` with `F_0 = ⊕ R(-gens[i])`; the relations are the
/// images of the basis of `F_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedModule {
    gens: Vec<i32>,
    relations: Vec<Vector>,
    tag: ModuleTag,
}

/// Result of [`PresentedModule::prune`]: the minimal presentation, which of
/// the old generators survived, and where every old generator went.
#[derive(Clone, Debug)]
pub struct Pruned {
    pub module: PresentedModule,
    pub kept: Vec<usize>,
    pub images: Vec<Vector>,
}

impl PresentedModule {
    pub fn new(gens: Vec<i32>, relations: Vec<Vector>) -> Result<Self> {
        for r in &relations {
            if r.max_comp().is_some_and(|c| c as usize >= gens.len()) {
                return Err(AlgebraError::AmbientMismatch);
            }
            if !r.is_homogeneous(&gens) {
                return Err(AlgebraError::Inhomogeneous);
            }
        }
        let relations = relations.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(PresentedModule {
            gens,
            relations,
            tag: ModuleTag::Abstract,
        })
    }

    pub fn from_matrix(m: &GradedMatrix) -> Self {
        PresentedModule {
            gens: m.row_degs().to_vec(),
            relations: m.columns().into_iter().filter(|c| !c.is_zero()).collect(),
            tag: ModuleTag::Abstract,
        }
    }

    pub fn free(gens: Vec<i32>) -> Self {
        PresentedModule {
            gens,
            relations: Vec::new(),
            tag: ModuleTag::Abstract,
        }
    }

    pub fn zero() -> Self {
        Self::free(Vec::new())
    }

    /// `R/I`.
    pub fn quotient_ring(ideal: &[Poly]) -> Self {
        PresentedModule {
            gens: vec![0],
            relations: ideal
                .iter()
                .filter(|p| !p.is_zero())
                .map(|p| Vector::from_poly(p, 0))
                .collect(),
            tag: ModuleTag::QuotientRing,
        }
    }

    /// `I` itself, presented by its minimal generators and their syzygies.
    pub fn ideal(ring: &PolyRing, ideal: &[Poly]) -> Self {
        let gens = minimal_generators_ideal(ring, ideal);
        let degs: Vec<i32> = gens.iter().map(|g| g.degree().unwrap() as i32).collect();
        let vecs: Vec<Vector> = gens.iter().map(|g| Vector::from_poly(g, 0)).collect();
        let syz = syzygy_module(ring, &[0], &vecs);
        PresentedModule {
            gens: degs,
            relations: syz.gens,
            tag: ModuleTag::Ideal,
        }
    }

    pub fn with_tag(mut self, tag: ModuleTag) -> Self {
        self.tag = tag;
        self
    }

    pub fn tag(&self) -> ModuleTag {
        self.tag
    }

    pub fn gens(&self) -> &[i32] {
        &self.gens
    }

    pub fn relations(&self) -> &[Vector] {
        &self.relations
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn relation_matrix(&self) -> GradedMatrix {
        GradedMatrix::from_columns(&self.gens, &self.relations).expect("relations are homogeneous")
    }

    /// `M(k)`: every generator moves to degree `deg - k`.
    pub fn twist(&self, k: i32) -> Self {
        PresentedModule {
            gens: self.gens.iter().map(|g| g - k).collect(),
            relations: self.relations.clone(),
            tag: self.tag,
        }
    }

    /// True when some relation has a nonzero constant entry, i.e. the
    /// presentation is not minimal.
    pub fn has_unit_relation(&self) -> bool {
        self.relations
            .iter()
            .any(|r| r.terms().iter().any(|t| t.mono.degree() == 0))
    }

    /// Minimal presentation: unit entries are used to eliminate generators,
    /// then redundant relations are dropped.
    pub fn prune(&self, ring: &PolyRing) -> Pruned {
        let f = ring.field();
        let r = self.gens.len();
        let mut cols: Vec<Vector> = self.relations.clone();
        let mut images: Vec<Vector> = (0..r).map(Vector::basis).collect();
        let mut removed = vec![false; r];
        loop {
            // Largest component carrying a unit entry, so earlier generators
            // are the ones kept.
            let mut pick: Option<(usize, Term)> = None;
            for (j, c) in cols.iter().enumerate() {
                for t in c.terms() {
                    if t.mono.degree() == 0 && pick.map_or(true, |(_, p)| t.comp > p.comp) {
                        pick = Some((j, *t));
                    }
                }
            }
            let Some((j, unit)) = pick else { break };
            let i = unit.comp as usize;
            let pivot = cols.swap_remove(j).scale(ring, f.inv(unit.coef));
            let eliminate = |v: &Vector| -> Vector {
                let p = v.component(i);
                if p.is_zero() {
                    return v.clone();
                }
                v.sub(ring, &pivot.mul_poly(ring, &p))
            };
            for c in cols.iter_mut() {
                *c = eliminate(c);
            }
            for img in images.iter_mut() {
                *img = eliminate(img);
            }
            removed[i] = true;
        }
        let kept: Vec<usize> = (0..r).filter(|&i| !removed[i]).collect();
        let mut map = vec![None; r];
        for (new, &old) in kept.iter().enumerate() {
            map[old] = Some(new as u32);
        }
        let gens: Vec<i32> = kept.iter().map(|&i| self.gens[i]).collect();
        let cols: Vec<Vector> = cols
            .iter()
            .map(|c| c.remap_components(&map))
            .filter(|c| !c.is_zero())
            .collect();
        let relations = minimal_generators(ring, &gens, &cols);
        let images = images.iter().map(|v| v.remap_components(&map)).collect();
        Pruned {
            module: PresentedModule {
                gens,
                relations,
                tag: self.tag,
            },
            kept,
            images,
        }
    }

    /// Decides `M = 0`.
    pub fn is_zero(&self, ring: &PolyRing) -> bool {
        self.prune(ring).module.gens.is_empty()
    }

    pub fn is_free(&self, ring: &PolyRing) -> bool {
        self.prune(ring).module.relations.is_empty()
    }
}

/// `Ann(coker φ) = ∩_i (im φ :_R e_i)`.
pub fn annihilator(ring: &PolyRing, m: &PresentedModule) -> Vec<Poly> {
    let one = Poly::constant(ring, 1);
    let mut acc: Option<Vec<Poly>> = None;
    for i in 0..m.gens.len() {
        let q = module_quotient(ring, &m.gens, &m.relations, &Vector::basis(i));
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(ring, &a, &q),
        });
        if acc.as_ref().is_some_and(|a| a.is_empty()) {
            break;
        }
    }
    let out = acc.unwrap_or_else(|| vec![one.clone()]);
    if out.iter().any(|p| p.is_constant()) {
        return vec![one];
    }
    minimal_generators_ideal(ring, &out)
}

/// Sorted degrees of a minimal generating set of a (saturated) ideal.
pub fn minimal_generator_degrees(ring: &PolyRing, ideal: &[Poly]) -> Result<Vec<u32>> {
    let gens = minimal_generators_ideal(ring, ideal);
    if gens.iter().any(|g| g.is_constant()) {
        return Err(AlgebraError::UnitIdeal);
    }
    let mut degs: Vec<u32> = gens.iter().map(|g| g.degree().unwrap()).collect();
    degs.sort_unstable();
    Ok(degs)
}

/// Minimal generators sorted by degree, ties kept in input order.
pub fn sorted_minimal_generators(ring: &PolyRing, ideal: &[Poly]) -> Vec<Poly> {
    let mut gens = minimal_generators_ideal(ring, ideal);
    gens.sort_by_key(|g| g.degree().unwrap_or(0));
    gens
}

pub(crate) fn monomial_vector(comp: u32, mono: Monomial) -> Vector {
    Vector::from_sorted(vec![Term { comp, mono, coef: 1 }])
}
