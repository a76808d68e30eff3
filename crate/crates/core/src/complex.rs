//! Simplicial complexes and the Stanley–Reisner correspondence.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal, PrimeSupport};
use crate::ring::RingDescriptor;
use crate::varset::VarSet;

/// Default vertex cap for facet enumeration.
pub const DEFAULT_VERTEX_CAP: usize = 24;

/// A simplicial complex on the ground set `{0, .., n-1}`, stored by facets.
///
/// The void complex (no faces at all) is not representable; the smallest
/// complex is `{∅}`, stored as a single empty facet.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    /// Builds a complex from generating faces; non-maximal ones are dropped.
    pub fn from_facets(n: usize, faces: impl IntoIterator<Item = VarSet>) -> Result<Self> {
        let faces: Vec<VarSet> = faces.into_iter().collect();
        if faces.is_empty() {
            return Err(Error::Malformed("the void complex is not supported; use {∅}".into()));
        }
        let ground = VarSet::full(n);
        if let Some(f) = faces.iter().find(|f| !f.is_subset(ground)) {
            return Err(Error::Malformed(format!("face {f:?} outside the ground set of size {n}")));
        }
        Ok(SimplicialComplex { n, facets: maximal_sets(faces) })
    }

    /// The complex `{∅}`.
    pub fn empty_face(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![VarSet::EMPTY] }
    }

    pub fn simplex(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![VarSet::full(n)] }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn vertices(&self) -> VarSet {
        self.facets.iter().fold(VarSet::EMPTY, |a, &f| a.union(f))
    }

    /// `max |F| - 1`; `-1` for `{∅}`.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        let d = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == d)
    }

    pub fn is_face(&self, s: VarSet) -> bool {
        self.facets.iter().any(|&f| s.is_subset(f))
    }

    /// All faces, grouped by size (`result[k]` holds the faces with `k`
    /// vertices), each group in canonical order.
    pub fn faces_by_size(&self) -> Vec<Vec<VarSet>> {
        let top = (self.dim() + 1) as usize;
        let mut seen: HashSet<VarSet> = HashSet::new();
        for &f in &self.facets {
            for s in f.subsets() {
                seen.insert(s);
            }
        }
        let mut out = vec![Vec::new(); top + 1];
        for s in seen {
            out[s.len()].push(s);
        }
        for group in &mut out {
            group.sort();
        }
        out
    }

    pub fn faces(&self) -> Vec<VarSet> {
        self.faces_by_size().into_iter().flatten().collect()
    }

    /// f-vector `(f_{-1}, f_0, .., f_dim)`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(Vec::len).collect()
    }

    /// Stanley–Reisner complex of a squarefree ideal, default vertex cap.
    pub fn from_squarefree_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        Self::from_squarefree_ideal_capped(ideal, DEFAULT_VERTEX_CAP)
    }

    /// Faces are the vertex sets containing no generator support; the facets
    /// are found by exhaustive maximal-independent-set search.
    pub fn from_squarefree_ideal_capped(ideal: &MonomialIdeal, vertex_cap: usize) -> Result<Self> {
        ideal.require_proper()?;
        if !ideal.is_squarefree() {
            return Err(Error::SquarefreeRequired);
        }
        let n = ideal.nvars();
        if n > vertex_cap {
            return Err(Error::CapExceeded { what: "vertex count", size: n as u128, cap: vertex_cap as u128 });
        }
        let edges: Vec<VarSet> = ideal.gens().iter().map(Monomial::support).collect();
        let mut facets = Vec::new();
        independent_sets(n, &edges, 0, VarSet::EMPTY, &mut facets);
        Ok(SimplicialComplex { n, facets: maximal_sets(facets) })
    }

    /// Minimal non-faces.
    pub fn minimal_nonfaces(&self) -> Vec<VarSet> {
        let faces: HashSet<VarSet> = self.faces().into_iter().collect();
        let mut out = BTreeSet::new();
        for &f in &faces {
            for v in f.complement(self.n).iter() {
                let cand = f.with(v);
                if !faces.contains(&cand) && cand.iter().all(|w| faces.contains(&cand.without(w))) {
                    out.insert(cand);
                }
            }
        }
        out.into_iter().collect()
    }

    /// The Stanley–Reisner ideal in `ring` (which must have `n` variables).
    pub fn to_ideal(&self, ring: &RingDescriptor) -> Result<MonomialIdeal> {
        if ring.nvars() != self.n {
            return Err(Error::RingMismatch(format!(
                "complex on {} vertices, ring with {} variables",
                self.n,
                ring.nvars()
            )));
        }
        let gens = self.minimal_nonfaces().into_iter().map(|s| Monomial::from_support(self.n, s)).collect();
        MonomialIdeal::new(ring.clone(), gens)
    }

    /// Facet complements.
    pub fn minimal_primes(&self) -> BTreeSet<PrimeSupport> {
        self.facets.iter().map(|&f| PrimeSupport::of_face(f, self.n)).collect()
    }

    pub fn link(&self, sigma: VarSet) -> Result<Self> {
        if !self.is_face(sigma) {
            return Err(Error::NotAFace(format!("{sigma:?}")));
        }
        Ok(self.link_unchecked(sigma))
    }

    pub(crate) fn link_unchecked(&self, sigma: VarSet) -> Self {
        let facets = self.facets.iter().filter(|f| sigma.is_subset(**f)).map(|f| f.difference(sigma));
        SimplicialComplex { n: self.n, facets: maximal_sets(facets.collect()) }
    }

    /// Subcomplex generated by the `i`-dimensional faces, `-1 <= i <= dim`.
    pub fn pure_skeleton(&self, i: i64) -> Result<Self> {
        if i < -1 || i > self.dim() {
            return Err(Error::OutOfRange { index: i, lo: -1, hi: self.dim() });
        }
        let k = (i + 1) as usize;
        let mut faces: BTreeSet<VarSet> = BTreeSet::new();
        for &f in self.facets.iter().filter(|f| f.len() >= k) {
            faces.extend(f.subsets_of_size(k));
        }
        Ok(SimplicialComplex { n: self.n, facets: faces.into_iter().collect() })
    }

    /// Subcomplex generated by the facets with more than `i` vertices;
    /// `None` when no facet qualifies (the empty family).
    pub fn facet_subcomplex_min_dim(&self, i: i64) -> Option<Self> {
        let facets: Vec<VarSet> = self.facets.iter().copied().filter(|f| f.len() as i64 > i).collect();
        if facets.is_empty() {
            None
        } else {
            Some(SimplicialComplex { n: self.n, facets })
        }
    }

    /// Vertices lying in every facet.
    pub fn cone_vertices(&self) -> VarSet {
        self.facets.iter().fold(VarSet::full(self.n), |a, &f| a.intersection(f))
    }

    /// Cone with apex a fresh vertex `n`.
    pub fn cone(&self) -> Self {
        let apex = self.n;
        SimplicialComplex { n: self.n + 1, facets: self.facets.iter().map(|f| f.with(apex)).collect() }
    }
}

fn maximal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort();
    sets.dedup();
    // larger sets first so containment only needs to look backwards
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let mut keep: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !keep.iter().any(|k| s.is_subset(*k)) {
            keep.push(s);
        }
    }
    keep.sort();
    keep
}

/// Depth-first search over include/exclude decisions for each vertex,
/// emitting maximal sets containing no edge.
fn independent_sets(n: usize, edges: &[VarSet], v: usize, cur: VarSet, out: &mut Vec<VarSet>) {
    if v == n {
        let maximal = cur
            .complement(n)
            .iter()
            .all(|w| edges.iter().any(|e| e.is_subset(cur.with(w))));
        if maximal {
            out.push(cur);
        }
        return;
    }
    let with = cur.with(v);
    if !edges.iter().any(|e| e.is_subset(with)) {
        independent_sets(n, edges, v + 1, with, out);
    }
    // Excluding v only pays off if some edge through v can still be completed.
    let later = VarSet::full(n).difference(VarSet::full(v + 1));
    let blockable = edges.iter().any(|e| e.contains(v) && e.without(v).is_subset(cur.union(later)));
    if blockable {
        independent_sets(n, edges, v + 1, cur, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FieldSpec;

    fn vs(ix: &[usize]) -> VarSet {
        VarSet::from_indices(ix.iter().copied())
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(3, [vs(&[0, 1]), vs(&[1, 2]), vs(&[0, 2])]).unwrap()
    }

    #[test]
    fn zero_and_maximal_ideals() {
        let r = RingDescriptor::standard(4, FieldSpec::Rationals).unwrap();
        let full = SimplicialComplex::from_squarefree_ideal(&MonomialIdeal::zero(r.clone())).unwrap();
        assert_eq!(full, SimplicialComplex::simplex(4));
        let m = SimplicialComplex::from_squarefree_ideal(&MonomialIdeal::maximal(r.clone())).unwrap();
        assert_eq!(m, SimplicialComplex::empty_face(4));
        assert_eq!(m.dim(), -1);
        assert_eq!(m.minimal_primes().into_iter().collect::<Vec<_>>(), vec![PrimeSupport::new(VarSet::full(4))]);
        assert_eq!(full.minimal_primes().into_iter().collect::<Vec<_>>(), vec![PrimeSupport::new(VarSet::EMPTY)]);
        assert!(SimplicialComplex::simplex(4).to_ideal(&r).unwrap().is_zero());
    }

    #[test]
    fn hollow_triangle_ideal_and_links() {
        let r = RingDescriptor::standard(3, FieldSpec::Rationals).unwrap();
        let t = hollow_triangle();
        assert_eq!(t.to_ideal(&r).unwrap().gen_strings(), ["x1*x2*x3"]);
        assert_eq!(t.link(VarSet::EMPTY).unwrap(), t);
        assert_eq!(t.link(vs(&[0, 1])).unwrap(), SimplicialComplex::empty_face(3));
        let lk = t.link(vs(&[0])).unwrap();
        assert_eq!(lk.facets(), &[vs(&[1]), vs(&[2])]);
        assert_eq!(t.link(vs(&[0, 1, 2])).unwrap_err().kind(), "not-in-support");
    }

    #[test]
    fn skeletons_and_cones() {
        let t = hollow_triangle();
        assert_eq!(t.pure_skeleton(0).unwrap().facets().len(), 3);
        assert_eq!(t.pure_skeleton(1).unwrap(), t);
        assert!(t.pure_skeleton(2).is_err());
        assert!(t.cone_vertices().is_empty());
        let c = t.cone();
        assert_eq!(c.cone_vertices(), vs(&[3]));
        assert_eq!(SimplicialComplex::simplex(3).cone_vertices(), VarSet::full(3));
        assert_eq!(t.facet_subcomplex_min_dim(-1).unwrap(), t);
        assert!(t.facet_subcomplex_min_dim(2).is_none());
    }

    #[test]
    fn rejects_non_squarefree() {
        let r = RingDescriptor::standard(2, FieldSpec::Rationals).unwrap();
        let i = MonomialIdeal::new(r, vec![Monomial::new(vec![2, 0])]).unwrap();
        assert_eq!(SimplicialComplex::from_squarefree_ideal(&i).unwrap_err(), Error::SquarefreeRequired);
    }
}
