//! Gröbner bases of homogeneous submodules of graded free modules.
//!
//! The module order is position-over-term with grevlex inside each
//! component. Buchberger runs degree by degree (normal strategy), which
//! also yields, for free, which input generators are minimal.

mod macaulay;
mod ops;

pub use macaulay::{macaulay_graded_piece, macaulay_module_piece, macaulay_module_dim};
pub use ops::{
    ideal_equal, ideal_quotient, ideal_quotient_ideal, intersect, module_colon, module_quotient,
    saturation_by_poly, saturation_irrelevant, syzygies_with_degrees, syzygy_module, Syzygies,
};

use crate::error::{AlgebraError, Result};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Poly;
use crate::ring::PolyRing;
use crate::vector::{merge_terms, pot_cmp, Term, Vector};

/// A reduced Gröbner basis of a submodule of `⊕ R(-gens[i])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    gens: Vec<i32>,
    elems: Vec<Vector>,
    leads: Vec<(u32, Monomial)>,
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    comp: u32,
    lcm: Monomial,
    deg: i32,
}

impl GroebnerBasis {
    pub fn compute(ring: &PolyRing, gens: &[i32], vecs: &[Vector]) -> GroebnerBasis {
        Self::compute_flagged(ring, gens, vecs).0
    }

    /// Ideal case: a single component of degree zero.
    pub fn of_ideal(ring: &PolyRing, polys: &[Poly]) -> GroebnerBasis {
        let vecs: Vec<Vector> = polys.iter().map(|p| Vector::from_poly(p, 0)).collect();
        Self::compute(ring, &[0], &vecs)
    }

    /// Computes the basis and flags the inputs that belong to a minimal
    /// generating set (processed in degree order, earlier inputs preferred).
    pub fn compute_flagged(ring: &PolyRing, gens: &[i32], vecs: &[Vector]) -> (GroebnerBasis, Vec<bool>) {
        let mut st = Builder {
            ring,
            gens,
            elems: Vec::new(),
            leads: Vec::new(),
            pairs: Vec::new(),
        };
        let mut minimal = vec![false; vecs.len()];
        let mut order: Vec<(i32, usize)> = vecs
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| {
                debug_assert!(v.is_homogeneous(gens), "inhomogeneous generator");
                (v.degree(gens).unwrap(), k)
            })
            .collect();
        order.sort();
        let mut next = 0;
        loop {
            let pair_deg = st.pairs.iter().map(|p| p.deg).min();
            let gen_deg = order.get(next).map(|o| o.0);
            match (pair_deg, gen_deg) {
                (None, None) => break,
                (Some(dp), g) if g.map_or(true, |dg| dp <= dg) => {
                    let pos = st.next_pair();
                    let pair = st.pairs.swap_remove(pos);
                    let s = st.spoly(&pair);
                    let r = st.reduce(s);
                    if !r.is_zero() {
                        st.insert(r);
                    }
                }
                _ => {
                    let k = order[next].1;
                    next += 1;
                    let r = st.reduce(vecs[k].clone());
                    if !r.is_zero() {
                        minimal[k] = true;
                        st.insert(r);
                    }
                }
            }
        }
        (st.finish(), minimal)
    }

    pub fn ambient(&self) -> &[i32] {
        &self.gens
    }

    pub fn elements(&self) -> &[Vector] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn leads(&self) -> &[(u32, Monomial)] {
        &self.leads
    }

    /// Ideal-case view of the elements.
    pub fn polys(&self) -> Vec<Poly> {
        self.elems.iter().map(|v| v.component(0)).collect()
    }

    pub fn contains_unit(&self) -> bool {
        self.leads.iter().any(|(_, m)| m.degree() == 0)
    }

    fn find_reducer(&self, comp: u32, m: &Monomial) -> Option<usize> {
        self.leads
            .iter()
            .position(|(c, l)| *c == comp && l.divides(m))
    }

    pub fn normal_form(&self, ring: &PolyRing, v: &Vector) -> Result<Vector> {
        if v.max_comp().is_some_and(|c| c as usize >= self.gens.len()) {
            return Err(AlgebraError::AmbientMismatch);
        }
        Ok(reduce_with(ring, &self.elems, &self.leads, v.clone()))
    }

    pub fn normal_form_poly(&self, ring: &PolyRing, p: &Poly) -> Poly {
        reduce_with(ring, &self.elems, &self.leads, Vector::from_poly(p, 0)).component(0)
    }

    pub fn contains(&self, ring: &PolyRing, v: &Vector) -> bool {
        reduce_with(ring, &self.elems, &self.leads, v.clone()).is_zero()
    }

    pub fn contains_poly(&self, ring: &PolyRing, p: &Poly) -> bool {
        self.normal_form_poly(ring, p).is_zero()
    }

    /// True when `(comp, m)` is not a leading term.
    pub fn is_standard(&self, comp: u32, m: &Monomial) -> bool {
        self.find_reducer(comp, m).is_none()
    }

    /// Standard monomials `m e_c` of degree `d`, largest first.
    pub fn standard_monomials(&self, ring: &PolyRing, d: i32) -> Vec<(u32, Monomial)> {
        let mut out = Vec::new();
        for (c, &g) in self.gens.iter().enumerate() {
            let e = d - g;
            if e < 0 {
                continue;
            }
            for m in monomials_of_degree(ring.nvars(), e as u32) {
                if self.is_standard(c as u32, &m) {
                    out.push((c as u32, m));
                }
            }
        }
        out
    }

    /// `dim (F/N)_d` by counting standard monomials.
    pub fn quotient_dim(&self, ring: &PolyRing, d: i32) -> usize {
        self.standard_monomials(ring, d).len()
    }

    /// `dim N_d`.
    pub fn submodule_dim(&self, ring: &PolyRing, d: i32) -> usize {
        let total: u64 = self
            .gens
            .iter()
            .map(|&g| crate::monomial::count_monomials(ring.nvars(), (d - g) as i64))
            .sum();
        total as usize - self.quotient_dim(ring, d)
    }

    /// Checks Buchberger's criterion directly: every S-pair reduces to zero.
    pub fn satisfies_buchberger_criterion(&self, ring: &PolyRing) -> bool {
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                let (ci, mi) = self.leads[i];
                let (cj, mj) = self.leads[j];
                if ci != cj {
                    continue;
                }
                let l = mi.lcm(&mj);
                let s = spoly(ring, &self.elems[i], &mi, &self.elems[j], &mj, &l);
                if !reduce_with(ring, &self.elems, &self.leads, s).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

fn spoly(ring: &PolyRing, a: &Vector, am: &Monomial, b: &Vector, bm: &Monomial, l: &Monomial) -> Vector {
    let f = ring.field();
    let ua = am.quotient_of(l);
    let ub = bm.quotient_of(l);
    // Both are monic: drop the cancelling leads.
    let left: Vec<Term> = a.terms()[1..]
        .iter()
        .map(|t| Term {
            comp: t.comp,
            mono: t.mono.mul(&ua),
            coef: t.coef,
        })
        .collect();
    Vector::from_sorted(merge_terms(ring, &left, f.neg(1), &ub, &b.terms()[1..]))
}

/// Full reduction of `v` modulo the given monic elements.
fn reduce_with(ring: &PolyRing, elems: &[Vector], leads: &[(u32, Monomial)], v: Vector) -> Vector {
    let f = ring.field();
    let mut rem: Vec<Term> = Vec::new();
    let mut cur: Vec<Term> = v.terms().to_vec();
    let mut pos = 0;
    while pos < cur.len() {
        let t = cur[pos];
        let reducer = leads
            .iter()
            .position(|(c, l)| *c == t.comp && l.divides(&t.mono));
        match reducer {
            None => {
                rem.push(t);
                pos += 1;
            }
            Some(k) => {
                let g = &elems[k];
                let q = leads[k].1.quotient_of(&t.mono);
                cur = merge_terms(ring, &cur[pos + 1..], f.neg(t.coef), &q, &g.terms()[1..]);
                pos = 0;
            }
        }
    }
    Vector::from_sorted(rem)
}

struct Builder<'a> {
    ring: &'a PolyRing,
    gens: &'a [i32],
    elems: Vec<Vector>,
    leads: Vec<(u32, Monomial)>,
    pairs: Vec<Pair>,
}

impl Builder<'_> {
    fn next_pair(&self) -> usize {
        let mut best = 0;
        for (k, p) in self.pairs.iter().enumerate() {
            let b = &self.pairs[best];
            if (p.deg, p.i, p.j) < (b.deg, b.i, b.j) {
                best = k;
            }
        }
        best
    }

    fn spoly(&self, p: &Pair) -> Vector {
        spoly(
            self.ring,
            &self.elems[p.i],
            &self.leads[p.i].1,
            &self.elems[p.j],
            &self.leads[p.j].1,
            &p.lcm,
        )
    }

    fn reduce(&self, v: Vector) -> Vector {
        reduce_with(self.ring, &self.elems, &self.leads, v)
    }

    fn insert(&mut self, v: Vector) {
        let v = v.make_monic(self.ring);
        let lt = v.lead().copied().unwrap();
        let (hc, hm) = (lt.comp, lt.mono);
        let h = self.elems.len();
        let cdeg = self.gens[hc as usize];

        // Gebauer-Möller: drop old pairs made redundant by the new lead.
        let leads = &self.leads;
        self.pairs.retain(|p| {
            !(p.comp == hc
                && hm.divides(&p.lcm)
                && leads[p.i].1.lcm(&hm) != p.lcm
                && leads[p.j].1.lcm(&hm) != p.lcm)
        });

        let mut cands: Vec<Pair> = Vec::new();
        for (g, (gc, gm)) in self.leads.iter().enumerate() {
            if *gc != hc {
                continue;
            }
            let l = gm.lcm(&hm);
            cands.push(Pair {
                i: g,
                j: h,
                comp: hc,
                lcm: l,
                deg: l.degree() as i32 + cdeg,
            });
        }
        // Chain criterion among the new pairs: drop proper multiples and
        // keep one representative per lcm.
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            for b in 0..cands.len() {
                if a == b || !keep[b] {
                    continue;
                }
                let (la, lb) = (cands[a].lcm, cands[b].lcm);
                if lb.divides(&la) && (lb != la || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        self.pairs
            .extend(cands.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p));

        self.leads.push((hc, hm));
        self.elems.push(v);
    }

    fn finish(self) -> GroebnerBasis {
        let ring = self.ring;
        let mut elems = self.elems;
        let mut leads = self.leads;
        // Drop elements whose lead is divisible by another lead.
        let n = elems.len();
        let mut alive = vec![true; n];
        for i in 0..n {
            for j in 0..n {
                if i != j
                    && alive[j]
                    && leads[j].0 == leads[i].0
                    && leads[j].1.divides(&leads[i].1)
                    && (leads[j].1 != leads[i].1 || j < i)
                {
                    alive[i] = false;
                    break;
                }
            }
        }
        let mut idx: Vec<usize> = (0..n).filter(|&i| alive[i]).collect();
        elems = idx.iter().map(|&i| elems[i].clone()).collect();
        leads = idx.iter().map(|&i| leads[i]).collect();
        // Tail-reduce each element against the others.
        for i in 0..elems.len() {
            let head = elems[i].terms()[0];
            let tail = Vector::from_sorted(elems[i].terms()[1..].to_vec());
            let mut others_e = Vec::with_capacity(elems.len() - 1);
            let mut others_l = Vec::with_capacity(elems.len() - 1);
            for k in 0..elems.len() {
                if k != i {
                    others_e.push(elems[k].clone());
                    others_l.push(leads[k]);
                }
            }
            let red = reduce_with(ring, &others_e, &others_l, tail);
            let mut terms = vec![head];
            terms.extend_from_slice(red.terms());
            elems[i] = Vector::from_sorted(terms);
        }
        idx = (0..elems.len()).collect();
        idx.sort_by(|&a, &b| pot_cmp(leads[b].0, &leads[b].1, leads[a].0, &leads[a].1));
        let elems: Vec<Vector> = idx.iter().map(|&i| elems[i].clone()).collect();
        let leads: Vec<(u32, Monomial)> = idx.iter().map(|&i| leads[i]).collect();
        GroebnerBasis {
            gens: self.gens.to_vec(),
            elems,
            leads,
        }
    }
}

/// Minimal generating subset of a homogeneous generating set.
pub fn minimal_generators(ring: &PolyRing, gens: &[i32], vecs: &[Vector]) -> Vec<Vector> {
    let (_, flags) = GroebnerBasis::compute_flagged(ring, gens, vecs);
    vecs.iter()
        .zip(flags)
        .filter(|(_, f)| *f)
        .map(|(v, _)| v.clone())
        .collect()
}

pub fn minimal_generators_ideal(ring: &PolyRing, polys: &[Poly]) -> Vec<Poly> {
    let vecs: Vec<Vector> = polys.iter().map(|p| Vector::from_poly(p, 0)).collect();
    minimal_generators(ring, &[0], &vecs)
        .into_iter()
        .map(|v| v.component(0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn twisted_cubic(ring: &PolyRing) -> Vec<Poly> {
        vec![
            ring.poly(&[(1, &[1, 0, 1, 0]), (-1, &[0, 2, 0, 0])]).unwrap(),
            ring.poly(&[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]).unwrap(),
            ring.poly(&[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2, 0])]).unwrap(),
        ]
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let ring = PolyRing::default_p3();
        let gb = GroebnerBasis::of_ideal(&ring, &[ring.var(0), ring.var(1)]);
        assert_eq!(gb.polys(), vec![ring.var(0), ring.var(1)]);
    }

    #[test]
    fn principal_ideal_is_normalized() {
        let ring = PolyRing::default_p3();
        let f = ring.poly(&[(3, &[1, 1, 0, 0]), (5, &[0, 0, 1, 1])]).unwrap();
        let gb = GroebnerBasis::of_ideal(&ring, &[f.clone()]);
        assert_eq!(gb.polys(), vec![f.make_monic(&ring)]);
    }

    #[test]
    fn normal_form_examples() {
        let ring = PolyRing::default_p3();
        let x = ring.vars();
        let gb = GroebnerBasis::of_ideal(&ring, &[x[0].clone()]);
        assert!(gb.normal_form_poly(&ring, &x[0].mul(&ring, &x[0])).is_zero());
        let gb2 = GroebnerBasis::of_ideal(&ring, &[x[0].clone(), x[1].clone()]);
        let x22 = x[2].mul(&ring, &x[2]);
        assert_eq!(gb2.normal_form_poly(&ring, &x22), x22);
        // ambient mismatch
        assert!(gb2.normal_form(&ring, &Vector::basis(1)).is_err());
    }

    #[test]
    fn twisted_cubic_basis_passes_criterion() {
        let ring = PolyRing::default_p3();
        let gb = GroebnerBasis::of_ideal(&ring, &twisted_cubic(&ring));
        assert!(gb.satisfies_buchberger_criterion(&ring));
        for d in 0..=8 {
            assert_eq!(
                gb.submodule_dim(&ring, d),
                macaulay_graded_piece(&ring, &twisted_cubic(&ring), d as u32).len()
            );
        }
    }

    #[test]
    fn normal_form_is_idempotent() {
        let ring = PolyRing::default_p3();
        let gb = GroebnerBasis::of_ideal(&ring, &twisted_cubic(&ring));
        let v = ring
            .poly(&[(1, &[3, 0, 0, 0]), (2, &[0, 1, 2, 0]), (7, &[1, 1, 0, 1])])
            .unwrap();
        let once = gb.normal_form_poly(&ring, &v);
        assert_eq!(gb.normal_form_poly(&ring, &once), once);
    }

    #[test]
    fn minimal_flags_drop_redundant_generators() {
        let ring = PolyRing::default_p3();
        let x = ring.vars();
        let gens = vec![
            x[0].clone(),
            x[0].mul(&ring, &x[1]),
            x[1].clone(),
            x[0].add(&ring, &x[1]).unwrap(),
        ];
        let min = minimal_generators_ideal(&ring, &gens);
        assert_eq!(min, vec![x[0].clone(), x[1].clone()]);
    }
}
