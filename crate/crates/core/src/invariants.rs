//! Module invariants of `M = S/I`: dimension, depth (face scan and lcm-lattice
//! Betti numbers), mdepth, local cohomology tables and the maximal-depth flags.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideal::{odometer_step, Monomial, MonomialIdeal, PrimeSupport};
use crate::linalg::{reduced_homology, HomologyVector};
use crate::ring::FieldSpec;
use crate::varset::VarSet;

/// Reduced homology of the link of every face of a complex.
pub struct LinkHomology {
    complex: SimplicialComplex,
    field: FieldSpec,
    links: BTreeMap<VarSet, HomologyVector>,
}

impl LinkHomology {
    pub fn new(complex: &SimplicialComplex, field: FieldSpec) -> Self {
        let links = complex
            .faces()
            .into_iter()
            .map(|f| (f, reduced_homology(&complex.link_unchecked(f), field)))
            .collect();
        LinkHomology { complex: complex.clone(), field, links }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// `H̃(lk σ)`, or `None` if `σ` is not a face.
    pub fn get(&self, sigma: VarSet) -> Option<&HomologyVector> {
        self.links.get(&sigma)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarSet, &HomologyVector)> {
        self.links.iter().map(|(f, h)| (*f, h))
    }

    /// Degrees `i` with `H^i_m(k[Δ]) ≠ 0`, from `i = |σ| + 1 + r`.
    pub fn nonvanishing_degrees(&self) -> BTreeSet<usize> {
        self.iter()
            .flat_map(|(f, h)| h.nonzero_degrees().map(move |r| (f.len() as i64 + 1 + r) as usize))
            .collect()
    }

    /// Least `i` with `H^i_m ≠ 0`: the depth of `k[Δ]`.
    pub fn depth(&self) -> usize {
        *self.nonvanishing_degrees().iter().next().expect("top local cohomology never vanishes")
    }

    /// Reisner's criterion: every link `lk σ` has homology only in its top
    /// degree. Returns a violating `(σ, degree)` if there is one.
    pub fn cohen_macaulay_witness(&self) -> Option<(VarSet, i64)> {
        for (f, h) in self.iter() {
            let top = self.complex.link_unchecked(f).dim();
            if let Some(r) = h.nonzero_degrees().find(|&r| r < top) {
                return Some((f, r));
            }
        }
        None
    }
}

/// One `(face, dimension)` contribution to `H^i_m(M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contribution {
    /// Index of the summand (0 for a cyclic module).
    pub summand: usize,
    /// `σ` in the face scan; the negative support of the degree in general.
    pub face: VarSet,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HochsterEntry {
    pub degree: usize,
    pub nonzero: bool,
    pub finite_length: bool,
    pub contributions: Vec<Contribution>,
    /// Total `K`-dimension, when finite length.
    pub k_dim: Option<u64>,
}

/// Local cohomology `H^i_m(M)` for `0 <= i <= dim M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HochsterTable {
    pub entries: Vec<HochsterEntry>,
}

impl HochsterTable {
    fn from_contributions(dim: usize, mut contribs: Vec<Vec<Contribution>>) -> Self {
        contribs.resize(dim + 1, Vec::new());
        let entries = contribs
            .into_iter()
            .enumerate()
            .map(|(degree, mut contributions)| {
                contributions.sort_by(|a, b| a.summand.cmp(&b.summand).then(a.face.cmp(&b.face)));
                let nonzero = contributions.iter().any(|c| c.dim > 0);
                let finite_length = contributions.iter().all(|c| c.face.is_empty() || c.dim == 0);
                let k_dim = finite_length.then(|| contributions.iter().map(|c| c.dim).sum());
                HochsterEntry { degree, nonzero, finite_length, contributions, k_dim }
            })
            .collect();
        HochsterTable { entries }
    }

    pub fn entry(&self, i: usize) -> Option<&HochsterEntry> {
        self.entries.get(i)
    }

    pub fn nonzero_degrees(&self) -> Vec<usize> {
        self.entries.iter().filter(|e| e.nonzero).map(|e| e.degree).collect()
    }

    pub fn min_nonzero(&self) -> Option<usize> {
        self.nonzero_degrees().first().copied()
    }

    pub fn max_nonzero(&self) -> Option<usize> {
        self.nonzero_degrees().last().copied()
    }

    /// Hochster's formula on the face scan of a squarefree quotient.
    pub fn from_links(links: &LinkHomology, dim: usize) -> Self {
        let mut contribs = vec![Vec::new(); dim + 1];
        for (face, h) in links.iter() {
            for (i, slot) in contribs.iter_mut().enumerate().skip(face.len()) {
                let d = h.get(i as i64 - face.len() as i64 - 1);
                if d > 0 {
                    slot.push(Contribution { summand: 0, face, dim: d });
                }
            }
        }
        HochsterTable::from_contributions(dim, contribs)
    }

    /// Degree-complex formula for an arbitrary monomial quotient: for a degree
    /// `a` with negative support `G` and `a_j < ρ_j` elsewhere,
    /// `dim H^i_m(S/I)_a = dim H̃_{i-|G|-1}(Δ_a)`, where `Δ_a` consists of the
    /// `F ⊆ [n] \ G` such that every generator `u` has some `j ∉ F ∪ G` with
    /// `u_j > a_j`. Contributions are summed over `a` for each `G`.
    pub fn from_degree_complexes(ideal: &MonomialIdeal, dim: usize) -> Self {
        let n = ideal.nvars();
        let field = ideal.ring().field();
        let rho = ideal.lcm_of_gens();
        let mut acc: Vec<BTreeMap<VarSet, u64>> = vec![BTreeMap::new(); dim + 1];
        for g in VarSet::full(n).subsets() {
            let free = g.complement(n);
            if free.iter().any(|j| rho.exponents()[j] == 0) {
                continue;
            }
            let bound: Vec<u32> =
                (0..n).map(|j| if free.contains(j) { rho.exponents()[j] - 1 } else { 0 }).collect();
            let mut a = vec![0u32; n];
            loop {
                if let Some(cx) = degree_complex(ideal, g, &a) {
                    let h = reduced_homology(&cx, field);
                    for r in h.nonzero_degrees() {
                        let i = r + g.len() as i64 + 1;
                        if i >= 0 && (i as usize) <= dim {
                            *acc[i as usize].entry(g).or_insert(0) += h.get(r);
                        }
                    }
                }
                if !odometer_step(&mut a, &bound) {
                    break;
                }
            }
        }
        let contribs = acc
            .into_iter()
            .map(|m| m.into_iter().map(|(face, dim)| Contribution { summand: 0, face, dim }).collect())
            .collect();
        HochsterTable::from_contributions(dim, contribs)
    }
}

/// `Δ_a` for the negative support `g` and the non-negative part `a`; `None`
/// when it is the void complex.
fn degree_complex(ideal: &MonomialIdeal, g: VarSet, a: &[u32]) -> Option<SimplicialComplex> {
    let n = ideal.nvars();
    let free = g.complement(n);
    let is_face = |f: VarSet| {
        let outside = free.difference(f);
        ideal.gens().iter().all(|u| outside.iter().any(|j| u.exponents()[j] > a[j]))
    };
    let faces: Vec<VarSet> = free.subsets().filter(|&f| is_face(f)).collect();
    if faces.is_empty() {
        return None;
    }
    SimplicialComplex::from_facets(n, faces).ok()
}

/// Krull dimension of `S/I`.
pub fn krull_dim(ideal: &MonomialIdeal) -> Result<usize> {
    let n = ideal.nvars();
    Ok(ideal.minimal_primes()?.iter().map(|p| p.dim(n)).max().expect("proper ideal has a minimal prime"))
}

/// Depth via the local cohomology face scan (after polarization for
/// non-squarefree ideals).
pub fn depth(ideal: &MonomialIdeal) -> Result<usize> {
    ideal.require_proper()?;
    if ideal.is_squarefree() {
        let cx = SimplicialComplex::from_squarefree_ideal(ideal)?;
        Ok(LinkHomology::new(&cx, ideal.ring().field()).depth())
    } else {
        let pol = ideal.polarize()?;
        let cx = SimplicialComplex::from_squarefree_ideal(&pol.ideal)?;
        Ok(LinkHomology::new(&cx, ideal.ring().field()).depth() - pol.added_vars)
    }
}

/// Elements of the lcm lattice of the generators (lcms of non-empty subsets).
pub fn lcm_lattice(ideal: &MonomialIdeal) -> BTreeSet<Monomial> {
    let mut seen: BTreeSet<Monomial> = ideal.gens().iter().cloned().collect();
    let mut frontier: Vec<Monomial> = seen.iter().cloned().collect();
    while let Some(m) = frontier.pop() {
        for g in ideal.gens() {
            let l = m.lcm(g);
            if seen.insert(l.clone()) {
                frontier.push(l);
            }
        }
    }
    seen
}

/// Upper Koszul complex `K^b(I) = {τ ⊆ supp b : x^{b-τ} ∈ I}`.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, b: &Monomial) -> Option<SimplicialComplex> {
    let n = ideal.nvars();
    let faces: Vec<VarSet> = b
        .support()
        .subsets()
        .filter(|t| ideal.contains(&b.strip(&Monomial::from_support(n, *t))))
        .collect();
    if faces.is_empty() {
        None
    } else {
        SimplicialComplex::from_facets(n, faces).ok()
    }
}

/// Multigraded Betti numbers `β_{i,b}(S/I)`, keyed by `(i, b)`, from
/// `β_{i,b}(I) = dim H̃_{i-1}(K^b(I))` over the lcm lattice.
pub fn betti_numbers(ideal: &MonomialIdeal) -> Result<BTreeMap<(usize, Monomial), u64>> {
    ideal.require_proper()?;
    let field = ideal.ring().field();
    let mut out = BTreeMap::new();
    out.insert((0, Monomial::one(ideal.nvars())), 1);
    for b in lcm_lattice(ideal) {
        if let Some(k) = upper_koszul_complex(ideal, &b) {
            let h = reduced_homology(&k, field);
            for r in h.nonzero_degrees() {
                // β_{i}(I) sits in homological degree i + 1 of S/I
                out.insert(((r + 2) as usize, b.clone()), h.get(r));
            }
        }
    }
    Ok(out)
}

/// Projective dimension of `S/I` from the lcm-lattice Betti numbers.
pub fn projdim(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(betti_numbers(ideal)?.keys().map(|(i, _)| *i).max().unwrap_or(0))
}

pub fn mdepth(ideal: &MonomialIdeal) -> Result<usize> {
    let n = ideal.nvars();
    Ok(ideal.associated_primes()?.iter().map(|p| p.dim(n)).min().expect("proper ideal has an associated prime"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Flags {
    pub maximal_depth: bool,
    pub cohen_macaulay: bool,
    pub unmixed: bool,
    pub generalized_cm: bool,
}

/// Computed invariants of `S/I` (or of a formal direct sum of such quotients).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleProfile {
    /// One ideal per summand.
    pub ideals: Vec<MonomialIdeal>,
    pub field: FieldSpec,
    pub dim: usize,
    pub depth: usize,
    pub mdepth: usize,
    pub ass: BTreeSet<PrimeSupport>,
    pub assd: BTreeSet<PrimeSupport>,
    pub flags: Flags,
    pub hochster: HochsterTable,
}

impl ModuleProfile {
    pub fn nvars(&self) -> usize {
        self.ideals[0].nvars()
    }

    pub fn names(&self) -> &[String] {
        self.ideals[0].ring().names()
    }

    /// `Ass^i`: associated primes with `dim S/p = i`.
    pub fn ass_of_dim(&self, i: usize) -> BTreeSet<PrimeSupport> {
        let n = self.nvars();
        self.ass.iter().copied().filter(|p| p.dim(n) == i).collect()
    }

    /// `Assh`: associated primes of maximal dimension.
    pub fn assh(&self) -> BTreeSet<PrimeSupport> {
        self.ass_of_dim(self.dim)
    }
}

fn assemble(
    ideals: Vec<MonomialIdeal>,
    dim: usize,
    depth: usize,
    ass: BTreeSet<PrimeSupport>,
    hochster: HochsterTable,
    maximal_depth: bool,
) -> ModuleProfile {
    let n = ideals[0].nvars();
    let field = ideals[0].ring().field();
    let mdepth = ass.iter().map(|p| p.dim(n)).min().unwrap_or(0);
    let assd = ass.iter().copied().filter(|p| p.dim(n) == depth).collect();
    let unmixed = ass.iter().all(|p| p.dim(n) == dim);
    let generalized_cm = hochster.entries.iter().filter(|e| e.degree < dim).all(|e| e.finite_length);
    let flags = Flags { maximal_depth, cohen_macaulay: depth == dim, unmixed, generalized_cm };
    ModuleProfile { ideals, field, dim, depth, mdepth, ass, assd, flags, hochster }
}

/// Full profile of `S/I`.
pub fn profile(ideal: &MonomialIdeal) -> Result<ModuleProfile> {
    ideal.require_proper()?;
    let ass = ideal.associated_primes()?;
    let n = ideal.nvars();
    let (dim, depth, hochster) = if ideal.is_squarefree() {
        let cx = SimplicialComplex::from_squarefree_ideal(ideal)?;
        let links = LinkHomology::new(&cx, ideal.ring().field());
        let dim = (cx.dim() + 1) as usize;
        (dim, links.depth(), HochsterTable::from_links(&links, dim))
    } else {
        let dim = krull_dim(ideal)?;
        let table = HochsterTable::from_degree_complexes(ideal, dim);
        (dim, depth(ideal)?, table)
    };
    debug_assert_eq!(table_min(&hochster), Some(depth));
    let mdepth = ass.iter().map(|p| p.dim(n)).min().unwrap_or(0);
    Ok(assemble(vec![ideal.clone()], dim, depth, ass, hochster, depth == mdepth))
}

fn table_min(t: &HochsterTable) -> Option<usize> {
    t.min_nonzero()
}

/// Profile of the localization `M_{p_F}` at the face prime of `F`, realized
/// as `k[lk F]`, together with the checks that tie it to `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizationProfile {
    pub face: VarSet,
    /// `dim S/p_F = |F|`.
    pub face_size: usize,
    pub profile: ModuleProfile,
    pub global_depth: usize,
    /// `p_F` contains some prime of `Assd(M)`.
    pub contains_assd: bool,
}

pub fn localization_profile(ideal: &MonomialIdeal, face: VarSet) -> Result<LocalizationProfile> {
    ideal.require_proper()?;
    if !ideal.is_squarefree() {
        return Err(Error::SquarefreeRequired);
    }
    localization_profile_with(ideal, face, &profile(ideal)?)
}

/// As [`localization_profile`], reusing an already computed profile of `ideal`.
pub fn localization_profile_with(ideal: &MonomialIdeal, face: VarSet, global: &ModuleProfile) -> Result<LocalizationProfile> {
    if !ideal.is_squarefree() {
        return Err(Error::SquarefreeRequired);
    }
    if global.ideals.len() != 1 || &global.ideals[0] != ideal {
        return Err(Error::RingMismatch("profile belongs to a different ideal".into()));
    }
    let cx = SimplicialComplex::from_squarefree_ideal(ideal)?;
    if !cx.is_face(face) {
        return Err(Error::NotAFace(face.display(ideal.ring().names())));
    }
    let link_ideal = cx.link_unchecked(face).to_ideal(ideal.ring())?;
    let local = profile(&link_ideal)?;
    let n = ideal.nvars();
    let pf = PrimeSupport::of_face(face, n);
    let contains_assd = global.assd.iter().any(|q| q.is_subset(pf));

    let face_size = face.len();
    if global.depth > local.depth + face_size {
        return Err(Error::Consistency(format!(
            "depth inequality fails at {}: {} > {} + {}",
            face.display(ideal.ring().names()),
            global.depth,
            local.depth,
            face_size
        )));
    }
    if contains_assd && (global.depth != local.depth + face_size || !local.flags.maximal_depth) {
        return Err(Error::Consistency(format!(
            "localization at {} contains an Assd prime but is not depth-additive with maximal depth",
            face.display(ideal.ring().names())
        )));
    }
    Ok(LocalizationProfile { face, face_size, profile: local, global_depth: global.depth, contains_assd })
}

/// Formal direct sum `⊕ M_k` of profiles over a common ring.
pub fn direct_sum_profile(profiles: &[ModuleProfile]) -> Result<ModuleProfile> {
    let first = profiles.first().ok_or(Error::EmptySum)?;
    for p in &profiles[1..] {
        p.ideals[0].ring().check_same(first.ideals[0].ring())?;
    }
    let depth = profiles.iter().map(|p| p.depth).min().unwrap();
    let dim = profiles.iter().map(|p| p.dim).max().unwrap();
    let ass: BTreeSet<PrimeSupport> = profiles.iter().flat_map(|p| p.ass.iter().copied()).collect();
    let maximal_depth = profiles.iter().any(|p| p.depth == depth && p.flags.maximal_depth);

    let mut ideals = Vec::new();
    let mut contribs: Vec<Vec<Contribution>> = vec![Vec::new(); dim + 1];
    let mut offset = 0;
    for p in profiles {
        for e in &p.hochster.entries {
            for c in &e.contributions {
                contribs[e.degree].push(Contribution { summand: c.summand + offset, ..c.clone() });
            }
        }
        offset += p.ideals.len();
        ideals.extend(p.ideals.iter().cloned());
    }
    let hochster = HochsterTable::from_contributions(dim, contribs);
    Ok(assemble(ideals, dim, depth, ass, hochster, maximal_depth))
}
