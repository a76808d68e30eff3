//! Seeded generators for random complexes and monomial ideals.

use rand::Rng;

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::ideal::{Monomial, MonomialIdeal};
use crate::ring::RingDescriptor;
use crate::varset::VarSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomComplexConfig {
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub max_facets: usize,
    /// Percent chance of coning off the result with an extra vertex.
    pub cone_percent: u32,
}

impl Default for RandomComplexConfig {
    fn default() -> Self {
        RandomComplexConfig { min_vertices: 2, max_vertices: 9, max_facets: 6, cone_percent: 15 }
    }
}

/// A random complex whose ground set is exactly its vertex set, so the
/// Stanley–Reisner ideal has no linear generators.
pub fn random_complex<R: Rng>(rng: &mut R, cfg: &RandomComplexConfig) -> SimplicialComplex {
    let hi = cfg.max_vertices.max(1);
    let lo = cfg.min_vertices.clamp(1, hi);
    let cone = hi >= 2 && rng.gen_ratio(cfg.cone_percent.min(100), 100);
    let n = rng.gen_range(lo..=hi);
    let base_n = if cone { (n - 1).max(1) } else { n };
    let nfacets = rng.gen_range(1..=cfg.max_facets.max(1));
    let mut facets: Vec<VarSet> = (0..nfacets)
        .map(|_| {
            let size = rng.gen_range(1..=base_n.min(4));
            let mut f = VarSet::EMPTY;
            while f.len() < size {
                f = f.with(rng.gen_range(0..base_n));
            }
            f
        })
        .collect();
    // every vertex of the ground set appears somewhere
    for v in 0..base_n {
        if !facets.iter().any(|f| f.contains(v)) {
            let k = rng.gen_range(0..facets.len());
            facets.push(facets[k].with(v));
        }
    }
    let cx = SimplicialComplex::from_facets(base_n, facets).expect("faces inside ground set");
    if cone && base_n < n {
        cx.cone()
    } else {
        cx
    }
}

/// A random squarefree ideal: the Stanley–Reisner ideal of a random complex.
pub fn random_squarefree<R: Rng>(rng: &mut R, cfg: &RandomComplexConfig, ring_of: impl Fn(usize) -> Result<RingDescriptor>) -> Result<MonomialIdeal> {
    let cx = random_complex(rng, cfg);
    cx.to_ideal(&ring_of(cx.ground_size())?)
}

/// A random proper monomial ideal with small exponents.
pub fn random_ideal<R: Rng>(rng: &mut R, ring: &RingDescriptor, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let n = ring.nvars();
    let k = rng.gen_range(1..=max_gens.max(1));
    let gens = (0..k)
        .map(|_| {
            let mut e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
            if e.iter().all(|&x| x == 0) {
                e[rng.gen_range(0..n)] = 1;
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(ring.clone(), gens).expect("exponent vectors match the ring")
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn generated_complexes_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cfg = RandomComplexConfig::default();
        for _ in 0..300 {
            let cx = random_complex(&mut rng, &cfg);
            assert!(cx.ground_size() <= cfg.max_vertices);
            assert_eq!(cx.vertices(), VarSet::full(cx.ground_size()));
        }
    }

    #[test]
    fn same_seed_same_stream() {
        let cfg = RandomComplexConfig::default();
        let a: Vec<_> = {
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            (0..20).map(|_| random_complex(&mut rng, &cfg)).collect()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let b: Vec<_> = (0..20).map(|_| random_complex(&mut rng, &cfg)).collect();
        assert_eq!(a, b);
    }
}
