//! Dimension filtration `0 = M_0 ⊂ M_1 ⊂ .. ⊂ M_d = M` of `M = S/I` and the
//! reports built on it.
//!
//! Each level is stored as an ideal `I^(i) ⊇ I` with `M_i = I^(i)/I`. The
//! level ideal is the intersection of the primary components whose prime has
//! dimension `> i`; the empty intersection is the unit ideal (`M_i = M`).

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, PrimeSupport};
use crate::invariants::{self, LinkHomology, ModuleProfile};
use crate::random::{random_complex, RandomComplexConfig};
use crate::varset::VarSet;

/// Closed interval of possible depths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DepthInterval {
    pub lo: usize,
    pub hi: usize,
}

impl DepthInterval {
    pub fn exact(d: usize) -> Self {
        DepthInterval { lo: d, hi: d }
    }

    pub fn is_exact(self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(self, d: usize) -> bool {
        self.lo <= d && d <= self.hi
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationLevel {
    pub i: usize,
    /// `I^(i)`, so that `M_i = I^(i)/I`.
    pub ideal: MonomialIdeal,
    /// `M_i ≠ 0`, i.e. `I^(i) ≠ I`.
    pub nonzero: bool,
    /// `Ass^i(M)`.
    pub ass_i: BTreeSet<PrimeSupport>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelIntervals {
    /// Depth of `M_i` (`None` when `M_i = 0`).
    pub module: Option<DepthInterval>,
    /// Depth of `M_i/M_{i-1}` (`None` when the quotient is zero).
    pub quotient: Option<DepthInterval>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionFiltration {
    pub base: MonomialIdeal,
    pub dim: usize,
    pub depth: usize,
    pub levels: Vec<FiltrationLevel>,
    /// `min{i : M_i ≠ 0}`.
    pub t: usize,
    pub intervals: Vec<LevelIntervals>,
}

impl DimensionFiltration {
    pub fn level(&self, i: usize) -> &FiltrationLevel {
        &self.levels[i]
    }

    /// `Ass(M) \ Ass(S/I^(t))`, which must equal `Ass(M_t) = Ass^t(M)`.
    pub fn ass_difference_at_t(&self) -> Result<BTreeSet<PrimeSupport>> {
        let ass = self.base.associated_primes()?;
        let level = &self.levels[self.t].ideal;
        let outer = if level.is_unit() { BTreeSet::new() } else { level.associated_primes()? };
        Ok(ass.difference(&outer).copied().collect())
    }
}

/// Level ideals from the Stanley–Reisner facets (squarefree) or from the
/// primary decomposition (general).
pub fn level_ideals(ideal: &MonomialIdeal, dim: usize) -> Result<Vec<MonomialIdeal>> {
    let ring = ideal.ring();
    let n = ideal.nvars();
    if ideal.is_squarefree() {
        let cx = SimplicialComplex::from_squarefree_ideal(ideal)?;
        (0..=dim)
            .map(|i| match cx.facet_subcomplex_min_dim(i as i64) {
                Some(sub) => sub.to_ideal(ring),
                None => Ok(MonomialIdeal::unit(ring.clone())),
            })
            .collect()
    } else {
        level_ideals_from_components(ideal, dim, n)
    }
}

/// `I^(i) = ⋂_{dim S/p_j > i} N_j` over the primary components.
pub fn level_ideals_from_components(ideal: &MonomialIdeal, dim: usize, n: usize) -> Result<Vec<MonomialIdeal>> {
    let comps = ideal.primary_decomposition()?;
    (0..=dim)
        .map(|i| MonomialIdeal::intersect_all(ideal.ring(), comps.iter().filter(|(p, _)| p.dim(n) > i).map(|(_, q)| q)))
        .collect()
}

pub fn dimension_filtration(ideal: &MonomialIdeal) -> Result<DimensionFiltration> {
    ideal.require_proper()?;
    let n = ideal.nvars();
    let dim = invariants::krull_dim(ideal)?;
    let depth = invariants::depth(ideal)?;
    let ass = ideal.associated_primes()?;
    let levels: Vec<FiltrationLevel> = level_ideals(ideal, dim)?
        .into_iter()
        .enumerate()
        .map(|(i, level)| FiltrationLevel {
            i,
            nonzero: &level != ideal,
            ideal: level,
            ass_i: ass.iter().copied().filter(|p| p.dim(n) == i).collect(),
        })
        .collect();
    let t = levels.iter().find(|l| l.nonzero).map(|l| l.i).expect("M_d = M is nonzero");
    let mut f = DimensionFiltration { base: ideal.clone(), dim, depth, levels, t, intervals: Vec::new() };
    f.intervals = quotient_depth_intervals(&f)?;
    Ok(f)
}

/// `mdepth M_i` for every nonzero level, from `Ass(M_i) = ⋃_{j<=i} Ass^j`.
pub fn mdepth_chain(f: &DimensionFiltration) -> Vec<(usize, usize)> {
    f.levels
        .iter()
        .filter(|l| l.nonzero)
        .map(|l| {
            let m = f.levels[..=l.i].iter().filter(|k| !k.ass_i.is_empty()).map(|k| k.i).min();
            (l.i, m.expect("a nonzero level has an associated prime"))
        })
        .collect()
}

/// Depth-lemma bounds, in one pass: first `M_i` against `M` and `M/M_i`
/// (whose depths are computed exactly), then `M_i/M_{i-1}` from consecutive
/// levels.
pub fn quotient_depth_intervals(f: &DimensionFiltration) -> Result<Vec<LevelIntervals>> {
    let d = f.depth;
    // dim M_i = largest j <= i with Ass^j nonempty
    let dim_upto = |i: usize| f.levels[..=i].iter().rev().find(|l| !l.ass_i.is_empty()).map(|l| l.i);

    let mut modules: Vec<Option<DepthInterval>> = Vec::with_capacity(f.levels.len());
    for level in &f.levels {
        if !level.nonzero {
            modules.push(None);
            continue;
        }
        if level.ideal.is_unit() {
            modules.push(Some(DepthInterval::exact(d)));
            continue;
        }
        let top = dim_upto(level.i).expect("nonzero level").min(f.t);
        let outer = invariants::depth(&level.ideal)?;
        let iv = if outer < d {
            DepthInterval::exact(outer + 1)
        } else if outer > d {
            DepthInterval::exact(d)
        } else {
            DepthInterval { lo: d, hi: top.max(d) }
        };
        modules.push(Some(iv));
    }

    let mut out = Vec::with_capacity(f.levels.len());
    for (i, level) in f.levels.iter().enumerate() {
        let quotient = if level.ass_i.is_empty() {
            None
        } else {
            let cur = modules[i].expect("level with Ass^i is nonzero");
            match i.checked_sub(1).and_then(|k| modules[k]) {
                None => Some(cur),
                Some(prev) => Some(quotient_interval(prev, cur, i)),
            }
        };
        out.push(LevelIntervals { module: modules[i], quotient });
    }
    Ok(out)
}

/// Bounds on `depth C` in `0 → A → B → C → 0` given intervals for `A` and
/// `B`, with `dim C = cap`.
fn quotient_interval(a: DepthInterval, b: DepthInterval, cap: usize) -> DepthInterval {
    let mut lo = usize::MAX;
    let mut hi = 0usize;
    // depth A < depth B: depth C = depth A - 1
    if a.lo < b.hi {
        let top = a.hi.min(b.hi - 1);
        lo = lo.min(a.lo.saturating_sub(1));
        hi = hi.max(top.saturating_sub(1));
    }
    // depth A > depth B: depth C = depth B
    if a.hi > b.lo {
        let top = b.hi.min(a.hi - 1);
        lo = lo.min(b.lo);
        hi = hi.max(top);
    }
    // depth A = depth B: depth C >= depth B
    let (elo, ehi) = (a.lo.max(b.lo), a.hi.min(b.hi));
    if elo <= ehi {
        lo = lo.min(elo);
        hi = cap;
    }
    let hi = hi.min(cap);
    DepthInterval { lo: lo.min(hi), hi }
}

/// Why a complex fails to be sequentially Cohen–Macaulay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqCmWitness {
    /// Dimension of the pure skeleton that is not Cohen–Macaulay.
    pub skeleton_dim: i64,
    pub face: VarSet,
    /// Degree of the offending reduced homology of the link.
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeqCmVerdict {
    Decided { sequentially_cm: bool, witness: Option<SeqCmWitness> },
    Undecided(String),
}

impl SeqCmVerdict {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            SeqCmVerdict::Decided { sequentially_cm, .. } => Some(*sequentially_cm),
            SeqCmVerdict::Undecided(_) => None,
        }
    }
}

/// Pure-skeleton criterion: `k[Δ]` is sequentially CM iff every pure
/// `i`-skeleton is CM, each tested with Reisner's link criterion.
pub fn is_sequentially_cm(ideal: &MonomialIdeal) -> Result<SeqCmVerdict> {
    ideal.require_proper()?;
    if !ideal.is_squarefree() {
        return Ok(SeqCmVerdict::Undecided("non-squarefree input; the skeleton criterion needs a complex".into()));
    }
    let cx = SimplicialComplex::from_squarefree_ideal(ideal)?;
    Ok(complex_sequentially_cm(&cx, ideal.ring().field()))
}

pub fn complex_sequentially_cm(cx: &SimplicialComplex, field: crate::ring::FieldSpec) -> SeqCmVerdict {
    for i in 0..=cx.dim() {
        let skel = cx.pure_skeleton(i).expect("i in range");
        let links = LinkHomology::new(&skel, field);
        if let Some((face, degree)) = links.cohen_macaulay_witness() {
            return SeqCmVerdict::Decided {
                sequentially_cm: false,
                witness: Some(SeqCmWitness { skeleton_dim: i, face, degree }),
            };
        }
    }
    SeqCmVerdict::Decided { sequentially_cm: true, witness: None }
}

/// Filtration-side reading of sequential CM-ness: every nonzero quotient
/// `M_i/M_{i-1}` is unmixed of dimension `i`, so it is CM iff its depth is `i`.
/// `None` when some interval leaves the answer open.
pub fn filtration_sequentially_cm(f: &DimensionFiltration) -> Option<bool> {
    let mut open = false;
    for (lvl, iv) in f.levels.iter().zip(&f.intervals) {
        let Some(q) = iv.quotient else { continue };
        if q.hi < lvl.i {
            return Some(false);
        }
        if !(q.is_exact() && q.lo == lvl.i) {
            open = true;
        }
    }
    if open {
        None
    } else {
        Some(true)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AttTag {
    /// `Att(H^dim) = Assh`.
    TopAssh,
    /// `min Att(H^depth) = Assd`, hypothesis verified.
    DepthMinAtt,
    /// `Att(H^i) = Ass^i` for sequentially CM modules.
    SeqCmLevel,
    /// `Ass^i ⊆ Att(H^i)`.
    LowerBoundOnly,
}

impl AttTag {
    pub fn as_str(self) -> &'static str {
        match self {
            AttTag::TopAssh => "top-assh",
            AttTag::DepthMinAtt => "depth-min-att",
            AttTag::SeqCmLevel => "seqcm-level",
            AttTag::LowerBoundOnly => "lower-bound-only",
        }
    }

    /// Whether the claimed set is the full attached-prime set.
    pub fn is_full_set(self) -> bool {
        matches!(self, AttTag::TopAssh | AttTag::SeqCmLevel)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttClaim {
    pub tag: AttTag,
    pub primes: BTreeSet<PrimeSupport>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttDegree {
    pub degree: usize,
    pub nonzero: bool,
    pub claims: Vec<AttClaim>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttReport {
    pub depth: usize,
    pub dim: usize,
    /// Every minimal prime contains an element of `Assd`.
    pub hypothesis_every: bool,
    /// Some prime of the support contains an element of `Assd` (maximal depth).
    pub hypothesis_exists: bool,
    pub sequentially_cm: Option<bool>,
    pub notes: Vec<String>,
    pub degrees: Vec<AttDegree>,
}

impl AttReport {
    pub fn claim(&self, degree: usize, tag: AttTag) -> Option<&BTreeSet<PrimeSupport>> {
        self.degrees.get(degree)?.claims.iter().find(|c| c.tag == tag).map(|c| &c.primes)
    }
}

pub fn att_report(ideal: &MonomialIdeal) -> Result<AttReport> {
    let prof = invariants::profile(ideal)?;
    let seq = is_sequentially_cm(ideal)?.as_bool();
    Ok(att_report_from(&prof, ideal, seq))
}

pub(crate) fn att_report_from(prof: &ModuleProfile, ideal: &MonomialIdeal, seq: Option<bool>) -> AttReport {
    let minimal = ideal.minimal_primes().expect("proper ideal");
    let hypothesis_every = minimal.iter().all(|p| prof.assd.iter().any(|q| q.is_subset(*p)));
    let hypothesis_exists = !prof.assd.is_empty();

    let mut notes = vec![
        "min-Att at the depth degree is claimed only when every minimal prime (hence every prime of the support) contains an Assd prime".to_string(),
        format!(
            "alternative reading (some prime of the support contains an Assd prime) holds: {hypothesis_exists}"
        ),
    ];
    // a minimal prime can only contain an Assd prime by being one
    notes.push("the every-prime hypothesis holds exactly when the module is Cohen-Macaulay".to_string());

    let degrees = (0..=prof.dim)
        .map(|i| {
            let ass_i = prof.ass_of_dim(i);
            let nonzero = prof.hochster.entry(i).map(|e| e.nonzero).unwrap_or(false);
            let mut claims = vec![AttClaim { tag: AttTag::LowerBoundOnly, primes: ass_i.clone() }];
            if i == prof.dim {
                claims.push(AttClaim { tag: AttTag::TopAssh, primes: prof.assh() });
            }
            if i == prof.depth && hypothesis_every {
                claims.push(AttClaim { tag: AttTag::DepthMinAtt, primes: prof.assd.clone() });
            }
            if seq == Some(true) {
                claims.push(AttClaim { tag: AttTag::SeqCmLevel, primes: ass_i });
            }
            claims.sort_by_key(|c| c.tag);
            AttDegree { degree: i, nonzero, claims }
        })
        .collect();
    AttReport {
        depth: prof.depth,
        dim: prof.dim,
        hypothesis_every,
        hypothesis_exists,
        sequentially_cm: seq,
        notes,
        degrees,
    }
}

/// Faces `F` with `H^{i-|F|}_m(k[lk F]) ≠ 0`: the monomial primes `p_F` in
/// `Psupp^i`.
pub fn psupp_monomial(ideal: &MonomialIdeal, i: usize) -> Result<Vec<VarSet>> {
    ideal.require_proper()?;
    if !ideal.is_squarefree() {
        return Err(Error::SquarefreeRequired);
    }
    let cx = SimplicialComplex::from_squarefree_ideal(ideal)?;
    let field = ideal.ring().field();
    let mut out = Vec::new();
    for face in cx.faces() {
        let Some(j) = i.checked_sub(face.len()) else { continue };
        let link = cx.link_unchecked(face);
        if LinkHomology::new(&link, field).nonvanishing_degrees().contains(&j) {
            out.push(face);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeConfig {
    pub seed: u64,
    pub samples: usize,
    pub max_vertices: usize,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig { seed: 0, samples: 200, max_vertices: 9 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeHit {
    pub sample: usize,
    pub ideal: MonomialIdeal,
    pub degree: usize,
    pub depth: usize,
    pub dim: usize,
    pub k_dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub config: ProbeConfig,
    pub examined: usize,
    /// Samples with maximal depth and positive depth.
    pub qualifying: usize,
    pub hits: Vec<ProbeHit>,
}

/// Searches random squarefree quotients with maximal depth and positive
/// depth for a nonvanishing `H^i_m` of finite length.
pub fn probe_open_question(config: &ProbeConfig, field: crate::ring::FieldSpec) -> Result<ProbeReport> {
    if config.max_vertices > crate::complex::DEFAULT_VERTEX_CAP || config.max_vertices < 1 {
        return Err(Error::CapExceeded {
            what: "probe vertex count",
            size: config.max_vertices as u128,
            cap: crate::complex::DEFAULT_VERTEX_CAP as u128,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let gen = RandomComplexConfig { max_vertices: config.max_vertices, ..Default::default() };
    let mut qualifying = 0;
    let mut hits = Vec::new();
    for sample in 0..config.samples {
        let cx = random_complex(&mut rng, &gen);
        let ring = crate::ring::RingDescriptor::standard(cx.ground_size(), field)?;
        let ideal = cx.to_ideal(&ring)?;
        let prof = invariants::profile(&ideal)?;
        if !(prof.flags.maximal_depth && prof.depth > 0) {
            continue;
        }
        qualifying += 1;
        for e in &prof.hochster.entries {
            if e.nonzero && e.finite_length {
                hits.push(ProbeHit {
                    sample,
                    ideal: ideal.clone(),
                    degree: e.degree,
                    depth: prof.depth,
                    dim: prof.dim,
                    k_dim: e.k_dim.unwrap_or(0),
                });
            }
        }
    }
    Ok(ProbeReport { config: config.clone(), examined: config.samples, qualifying, hits })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_interval_cases() {
        let e = DepthInterval::exact;
        // depth A < depth B pins C to depth A - 1
        assert_eq!(quotient_interval(e(2), e(3), 4), e(1));
        // depth A > depth B pins C to depth B
        assert_eq!(quotient_interval(e(3), e(2), 4), e(2));
        // equal depths leave [depth, cap]
        assert_eq!(quotient_interval(e(2), e(2), 4), DepthInterval { lo: 2, hi: 4 });
    }
}
