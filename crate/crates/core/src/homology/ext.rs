//! Ext into the ring, Hom between presented modules, and degree-zero
//! isomorphism search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hilbert::hilbert_from_resolution;
use super::resolution::{free_resolution, FreeResolution};
use super::view::ModuleView;
use super::PresentedModule;
use crate::groebner::syzygies_with_degrees;
use crate::linalg::DenseMatrix;
use crate::poly::Poly;
use crate::ring::PolyRing;
use crate::vector::{Term, Vector};

/// `Ext^i(M, R)` with a minimal presentation whose generators are also
/// recorded as cocycles in `F_i^*`.
#[derive(Clone, Debug)]
pub struct ExtModule {
    pub module: PresentedModule,
    pub ambient: Vec<i32>,
    pub cocycles: Vec<Vector>,
}

/// `<gens> / <sub>` inside a free module, assuming `sub ⊆ <gens>`.
pub(crate) fn subquotient(
    ring: &PolyRing,
    ambient: &[i32],
    gens: &[Vector],
    gen_degs: &[i32],
    sub: &[Vector],
) -> (PresentedModule, Vec<Vector>) {
    let s = gens.len();
    let identity = s == ambient.len() && gens.iter().enumerate().all(|(i, g)| *g == Vector::basis(i));
    let sub: Vec<Vector> = sub.iter().filter(|v| !v.is_zero()).cloned().collect();
    let relations: Vec<Vector> = if identity {
        sub
    } else {
        let mut all = gens.to_vec();
        let mut degs = gen_degs.to_vec();
        for v in &sub {
            degs.push(v.degree(ambient).unwrap());
            all.push(v.clone());
        }
        syzygies_with_degrees(ring, ambient, &all, &degs)
            .gens
            .iter()
            .map(|z| z.restrict(0, s as u32))
            .filter(|z| !z.is_zero())
            .collect()
    };
    let m = PresentedModule::new(gen_degs.to_vec(), relations).expect("graded subquotient");
    let pruned = m.prune(ring);
    let kept = pruned.kept.iter().map(|&k| gens[k].clone()).collect();
    (pruned.module, kept)
}

pub fn ext_from_resolution(ring: &PolyRing, res: &FreeResolution, i: usize) -> ExtModule {
    let ambient = res.dual_twists(i);
    if ambient.is_empty() {
        return ExtModule {
            module: PresentedModule::zero(),
            ambient,
            cocycles: Vec::new(),
        };
    }
    let (kernel, kernel_degs): (Vec<Vector>, Vec<i32>) = match res.maps.get(i) {
        Some(d) => {
            let dt = d.transpose();
            let syz = syzygies_with_degrees(ring, dt.row_degs(), &dt.columns(), dt.col_degs());
            let degs = syz.gens.iter().map(|g| g.degree(&ambient).unwrap()).collect();
            (syz.gens, degs)
        }
        None => ((0..ambient.len()).map(Vector::basis).collect(), ambient.clone()),
    };
    let boundary: Vec<Vector> = if i == 0 {
        Vec::new()
    } else {
        res.maps[i - 1].transpose().columns()
    };
    let (module, cocycles) = subquotient(ring, &ambient, &kernel, &kernel_degs, &boundary);
    ExtModule {
        module,
        ambient,
        cocycles,
    }
}

pub fn ext_module(ring: &PolyRing, i: usize, m: &PresentedModule) -> ExtModule {
    ext_from_resolution(ring, &free_resolution(ring, m), i)
}

/// `Hom(M, N)` as the homomorphisms `F_0 -> G_0` carrying relations into
/// relations, modulo those factoring through `G_1`.
pub fn hom_module(ring: &PolyRing, m: &PresentedModule, n: &PresentedModule) -> PresentedModule {
    let (a, c) = (m.gens(), m.relations());
    let b = n.gens();
    let psi = n.relations();
    let (r0, r1, s0, s1) = (a.len(), c.len(), b.len(), psi.len());
    let c_degs: Vec<i32> = c.iter().map(|v| v.degree(a).unwrap()).collect();
    let h_degs: Vec<i32> = psi.iter().map(|v| v.degree(b).unwrap()).collect();
    // Hom(F_0, G_0): index i*s0 + k, degree b_k - a_i
    let hom00: Vec<i32> = (0..r0).flat_map(|i| (0..s0).map(move |k| b[k] - a[i])).collect();
    let cd = &c_degs;
    let hom10: Vec<i32> = (0..r1).flat_map(|j| (0..s0).map(move |k| b[k] - cd[j])).collect();
    let psi_polys: Vec<Vec<Poly>> = psi.iter().map(|v| v.to_polys(s0)).collect();
    // Φ: h ↦ h∘φ
    let mut gens: Vec<Vector> = Vec::new();
    let mut degs: Vec<i32> = Vec::new();
    for i in 0..r0 {
        for k in 0..s0 {
            let polys: Vec<(usize, Poly)> = c
                .iter()
                .enumerate()
                .map(|(j, col)| (j * s0 + k, col.component(i)))
                .collect();
            gens.push(assemble(ring, &polys));
            degs.push(b[k] - a[i]);
        }
    }
    // ψ_*: Hom(F_1, G_1) -> Hom(F_1, G_0)
    for j in 0..r1 {
        for l in 0..s1 {
            let polys: Vec<(usize, Poly)> = (0..s0).map(|k| (j * s0 + k, psi_polys[l][k].clone())).collect();
            gens.push(assemble(ring, &polys));
            degs.push(h_degs[l] - c_degs[j]);
        }
    }
    let n_hom = r0 * s0;
    let kernel: Vec<Vector> = if r1 == 0 {
        (0..n_hom).map(Vector::basis).collect()
    } else {
        syzygies_with_degrees(ring, &hom10, &gens, &degs)
            .gens
            .iter()
            .map(|z| z.restrict(0, n_hom as u32))
            .filter(|z| !z.is_zero())
            .collect()
    };
    let kernel_degs: Vec<i32> = kernel
        .iter()
        .map(|v| v.degree(&hom00).unwrap())
        .collect();
    // ψ_*: Hom(F_0, G_1) -> Hom(F_0, G_0)
    let mut sub = Vec::new();
    for i in 0..r0 {
        for l in 0..s1 {
            let polys: Vec<(usize, Poly)> = (0..s0).map(|k| (i * s0 + k, psi_polys[l][k].clone())).collect();
            sub.push(assemble(ring, &polys));
        }
    }
    subquotient(ring, &hom00, &kernel, &kernel_degs, &sub).0
}

fn assemble(ring: &PolyRing, parts: &[(usize, Poly)]) -> Vector {
    let mut terms = Vec::new();
    for (comp, p) in parts {
        for (m, c) in p.terms() {
            terms.push(Term {
                comp: *comp as u32,
                mono: *m,
                coef: *c,
            });
        }
    }
    Vector::from_unsorted(ring, terms)
}

/// A degree-zero homomorphism `M -> N`, given by the images of the
/// generators of `M` in the ambient free module of `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomWitness {
    pub images: Vec<Vector>,
}

impl HomWitness {
    /// Whether the induced map `M_d -> N_d` is bijective.
    pub fn bijective_in(&self, ring: &PolyRing, vm: &ModuleView, vn: &ModuleView, d: i32) -> bool {
        let src = vm.basis(ring, d);
        let dst = vn.basis(ring, d);
        if src.len() != dst.len() {
            return false;
        }
        if src.is_empty() {
            return true;
        }
        let idx = ModuleView::index(&dst);
        let cols: Vec<Vec<u32>> = src
            .iter()
            .map(|&(c, m)| {
                let v = self.images[c as usize].mul_monomial(ring, &m, 1);
                vn.coordinates(ring, &v, &idx)
            })
            .collect();
        DenseMatrix::from_columns(&cols, dst.len()).rank(ring.field()) == dst.len()
    }
}

/// Searches `Hom_0(M, N)` for a map that is bijective on every graded
/// piece in `window`.
pub fn find_degree_zero_iso(
    ring: &PolyRing,
    m: &PresentedModule,
    n: &PresentedModule,
    window: (i32, i32),
    seed: u64,
) -> Option<HomWitness> {
    let vm = ModuleView::new(ring, m);
    let vn = ModuleView::new(ring, n);
    let f = ring.field();
    // unknowns: coordinates of each generator image in N_{a_i}
    let blocks: Vec<Vec<(u32, crate::monomial::Monomial)>> =
        m.gens().iter().map(|&a| vn.basis(ring, a)).collect();
    let nunk: usize = blocks.iter().map(|b| b.len()).sum();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for rel in m.relations() {
        let c = rel.degree(m.gens()).unwrap();
        let dst = vn.basis(ring, c);
        if dst.is_empty() {
            continue;
        }
        let idx = ModuleView::index(&dst);
        let mut cols: Vec<Vec<u32>> = Vec::with_capacity(nunk);
        for (i, block) in blocks.iter().enumerate() {
            let ri = rel.component(i);
            for b in block {
                let v = Vector::from_poly(&ri.mul_monomial(ring, &b.1, 1), b.0 as usize);
                cols.push(vn.coordinates(ring, &v, &idx));
            }
        }
        let mat = DenseMatrix::from_columns(&cols, dst.len());
        for r in 0..mat.rows() {
            rows.push(mat.row(r).to_vec());
        }
    }
    let kernel: Vec<Vec<u32>> = if rows.is_empty() {
        (0..nunk)
            .map(|k| {
                let mut e = vec![0; nunk];
                e[k] = 1;
                e
            })
            .collect()
    } else {
        DenseMatrix::from_rows(&rows, nunk).kernel(f)
    };
    if kernel.is_empty() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attempts = if kernel.len() == 1 { 1 } else { 4 };
    for _ in 0..attempts {
        let coeffs: Vec<u32> = if kernel.len() == 1 {
            vec![1]
        } else {
            (0..kernel.len()).map(|_| rng.gen_range(1..f.modulus())).collect()
        };
        let mut sol = vec![0u32; nunk];
        for (k, c) in kernel.iter().zip(&coeffs) {
            for (s, v) in sol.iter_mut().zip(k) {
                *s = f.add(*s, f.mul(*c, *v));
            }
        }
        let mut images = Vec::with_capacity(blocks.len());
        let mut pos = 0;
        for block in &blocks {
            let mut terms = Vec::new();
            for b in block {
                if sol[pos] != 0 {
                    terms.push(Term {
                        comp: b.0,
                        mono: b.1,
                        coef: sol[pos],
                    });
                }
                pos += 1;
            }
            images.push(Vector::from_unsorted(ring, terms));
        }
        let w = HomWitness { images };
        if (window.0..=window.1).all(|d| w.bijective_in(ring, &vm, &vn, d)) {
            return Some(w);
        }
    }
    None
}

fn trimmed(v: &[i64], offset: i32) -> (Vec<i64>, i32) {
    let first = v.iter().position(|&c| c != 0);
    let last = v.iter().rposition(|&c| c != 0);
    match (first, last) {
        (Some(a), Some(b)) => (v[a..=b].to_vec(), offset + a as i32),
        _ => (Vec::new(), 0),
    }
}

/// Module isomorphism certificate: equal Hilbert series plus a degree-zero
/// map bijective in all generator degrees of both modules.
pub fn modules_isomorphic(ring: &PolyRing, m: &PresentedModule, n: &PresentedModule, seed: u64) -> Option<HomWitness> {
    let m = m.prune(ring).module;
    let n = n.prune(ring).module;
    if m.gens().is_empty() || n.gens().is_empty() {
        return (m.gens().is_empty() && n.gens().is_empty()).then(|| HomWitness { images: Vec::new() });
    }
    let hm = hilbert_from_resolution(ring, &free_resolution(ring, &m)).ok()?;
    let hn = hilbert_from_resolution(ring, &free_resolution(ring, &n)).ok()?;
    if trimmed(&hm.numerator, hm.offset) != trimmed(&hn.numerator, hn.offset) {
        return None;
    }
    let all = m.gens().iter().chain(n.gens());
    let lo = *all.clone().min().unwrap();
    let hi = *all.max().unwrap();
    find_degree_zero_iso(ring, &m, &n, (lo, hi), seed)
}

/// Sheaf isomorphism certificate: equal Hilbert polynomials plus a
/// degree-zero map bijective in degrees `d0` and `d0 + 1`, where `d0`
/// exceeds both regularities and the generator degrees of `N`, so that the
/// map is bijective in every degree `>= d0`.
pub fn sheaves_isomorphic(ring: &PolyRing, m: &PresentedModule, n: &PresentedModule, seed: u64) -> Option<HomWitness> {
    let m = m.prune(ring).module;
    let n = n.prune(ring).module;
    if m.gens().is_empty() || n.gens().is_empty() {
        return None;
    }
    let hm = hilbert_from_resolution(ring, &free_resolution(ring, &m)).ok()?;
    let hn = hilbert_from_resolution(ring, &free_resolution(ring, &n)).ok()?;
    if !hm.same_polynomial(&hn, 0) {
        return None;
    }
    let d0 = hm.regularity.max(hn.regularity).max(*n.gens().iter().max().unwrap()) + 1;
    find_degree_zero_iso(ring, &m, &n, (d0, d0 + 1), seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::hilbert_invariants;

    #[test]
    fn ext_of_free_module() {
        let ring = PolyRing::default_p3();
        let m = PresentedModule::free(vec![0, 2]);
        let e0 = ext_module(&ring, 0, &m);
        assert_eq!(e0.module.gens(), &[0, -2]);
        assert!(e0.module.relations().is_empty());
        assert!(ext_module(&ring, 1, &m).module.gens().is_empty());
    }

    #[test]
    fn ext_of_hypersurface() {
        let ring = PolyRing::default_p3();
        let x = ring.vars();
        let f = x[0].mul(&ring, &x[1]).mul(&ring, &x[2]);
        let e1 = ext_module(&ring, 1, &PresentedModule::quotient_ring(&[f.clone()]));
        assert_eq!(e1.module.gens(), &[-3]);
        assert_eq!(e1.module.relations().len(), 1);
        assert_eq!(e1.module.relations()[0].component(0).degree(), Some(3));
    }

    #[test]
    fn hom_of_free_modules() {
        let ring = PolyRing::default_p3();
        let h = hom_module(&ring, &PresentedModule::free(vec![1]), &PresentedModule::free(vec![3]));
        assert_eq!(h.gens(), &[2]);
        assert!(h.relations().is_empty());
    }

    #[test]
    fn hom_into_quotient() {
        let ring = PolyRing::default_p3();
        let q = PresentedModule::quotient_ring(&[ring.var(0)]);
        let h = hom_module(&ring, &q, &q);
        let a = hilbert_invariants(&ring, &h).unwrap();
        let b = hilbert_invariants(&ring, &q).unwrap();
        assert_eq!(a.numerator, b.numerator);
    }

    #[test]
    fn identity_is_found() {
        let ring = PolyRing::default_p3();
        let g = vec![
            ring.poly(&[(1, &[1, 0, 1, 0]), (-1, &[0, 2, 0, 0])]).unwrap(),
            ring.poly(&[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]).unwrap(),
            ring.poly(&[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2, 0])]).unwrap(),
        ];
        let m = PresentedModule::ideal(&ring, &g);
        assert!(modules_isomorphic(&ring, &m, &m, 0).is_some());
        assert!(find_degree_zero_iso(&ring, &m, &m, (0, 4), 0).is_some());
        assert!(modules_isomorphic(&ring, &m, &m.twist(1), 0).is_none());
    }
}
