//! Monomials, monomial ideals and their decompositions.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::RingDescriptor;
use crate::varset::VarSet;

/// Default cap on the number of monomials visited by the colon search.
pub const DEFAULT_SEARCH_CAP: u128 = 1 << 24;

/// An exponent vector over the ambient variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_support(n: usize, s: VarSet) -> Self {
        Monomial((0..n).map(|i| s.contains(i) as u32).collect())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    /// `self / gcd(self, other)`.
    pub fn strip(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.saturating_sub(b)).collect())
    }

    pub fn support(&self) -> VarSet {
        VarSet::from_indices(self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i))
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// `Some(i)` when this is `x_i^k` for some `k >= 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let s = self.support();
        if s.len() == 1 {
            s.iter().next()
        } else {
            None
        }
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
            .collect();
        parts.join("*")
    }
}

/// Graded lex: total degree first, then `x1 > x2 > ..` lexicographically.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial prime, stored as the set of variables generating it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeSupport(VarSet);

impl PrimeSupport {
    pub fn new(vars: VarSet) -> Self {
        PrimeSupport(vars)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        PrimeSupport(VarSet::from_indices(it))
    }

    /// The prime `p_F` generated by the variables outside the face `F`.
    pub fn of_face(face: VarSet, n: usize) -> Self {
        PrimeSupport(face.complement(n))
    }

    pub fn vars(self) -> VarSet {
        self.0
    }

    /// `dim S/p = n - |p|`.
    pub fn dim(self, n: usize) -> usize {
        n - self.0.len()
    }

    /// The face of the Stanley–Reisner complex this prime corresponds to.
    pub fn face(self, n: usize) -> VarSet {
        self.0.complement(n)
    }

    pub fn is_subset(self, other: PrimeSupport) -> bool {
        self.0.is_subset(other.0)
    }

    pub fn to_ideal(self, ring: &RingDescriptor) -> MonomialIdeal {
        let n = ring.nvars();
        MonomialIdeal::from_minimal(ring.clone(), self.0.iter().map(|i| Monomial::var(n, i)).collect())
    }

    pub fn display(self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<&str> = self.0.iter().map(|i| names[i].as_str()).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Debug for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{:?}", self.0)
    }
}

/// A monomial ideal in canonical form: minimal generators sorted graded-lex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    ring: RingDescriptor,
    gens: Vec<Monomial>,
}

/// Minimal generators of the ideal spanned by `gens`, in canonical order.
pub fn minimalize(n: usize, gens: Vec<Monomial>) -> Result<Vec<Monomial>> {
    if let Some(bad) = gens.iter().find(|g| g.nvars() != n) {
        return Err(Error::Malformed(format!(
            "exponent vector of length {} in a ring with {n} variables",
            bad.nvars()
        )));
    }
    Ok(minimalize_unchecked(gens))
}

fn minimalize_unchecked(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    // Sorted by degree, so a divisor always precedes its multiples.
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl MonomialIdeal {
    pub fn new(ring: RingDescriptor, gens: Vec<Monomial>) -> Result<Self> {
        let gens = minimalize(ring.nvars(), gens)?;
        Ok(MonomialIdeal { ring, gens })
    }

    pub(crate) fn from_minimal(ring: RingDescriptor, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { ring, gens: minimalize_unchecked(gens) }
    }

    pub fn zero(ring: RingDescriptor) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: RingDescriptor) -> Self {
        let n = ring.nvars();
        MonomialIdeal { ring, gens: vec![Monomial::one(n)] }
    }

    /// The maximal ideal `(x_1, .., x_n)`.
    pub fn maximal(ring: RingDescriptor) -> Self {
        let n = ring.nvars();
        PrimeSupport::new(VarSet::full(n)).to_ideal(&ring)
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub(crate) fn require_proper(&self) -> Result<()> {
        if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Exponentwise lcm of all generators (`1` for the zero ideal).
    pub fn lcm_of_gens(&self) -> Monomial {
        self.gens.iter().fold(Monomial::one(self.nvars()), |acc, g| acc.lcm(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal::from_minimal(self.ring.clone(), gens))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        Ok(self.intersect_unchecked(other))
    }

    fn intersect_unchecked(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.lcm(v));
            }
        }
        MonomialIdeal::from_minimal(self.ring.clone(), gens)
    }

    /// Intersection of a non-empty family; the empty family yields the unit ideal.
    pub fn intersect_all<'a, I>(ring: &RingDescriptor, ideals: I) -> Result<MonomialIdeal>
    where
        I: IntoIterator<Item = &'a MonomialIdeal>,
    {
        let mut acc = MonomialIdeal::unit(ring.clone());
        for j in ideals {
            acc = acc.intersect(j)?;
        }
        Ok(acc)
    }

    /// `(I : u)`.
    pub fn colon(&self, u: &Monomial) -> Result<MonomialIdeal> {
        if u.nvars() != self.nvars() {
            return Err(Error::RingMismatch(format!(
                "monomial with {} exponents in a ring with {} variables",
                u.nvars(),
                self.nvars()
            )));
        }
        Ok(self.colon_unchecked(u))
    }

    fn colon_unchecked(&self, u: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.strip(u)).collect();
        MonomialIdeal::from_minimal(self.ring.clone(), gens)
    }

    /// The prime `(I : u)` when it is generated by variables.
    fn colon_prime(&self, u: &Monomial) -> Option<PrimeSupport> {
        let mut vars = VarSet::EMPTY;
        for g in &self.gens {
            let q = g.strip(u);
            if q.is_one() {
                return None;
            }
            if q.degree() == 1 {
                vars = vars.union(q.support());
            }
        }
        // (I:u) is prime iff every quotient is divisible by one of the variables found.
        let prime = self.gens.iter().all(|g| !g.strip(u).support().intersection(vars).is_empty());
        prime.then_some(PrimeSupport(vars))
    }

    /// Number of monomials the colon search visits.
    pub fn colon_search_size(&self) -> u128 {
        self.lcm_of_gens().exponents().iter().map(|&e| e as u128 + 1).product()
    }

    /// Associated primes of `S/I`, with the default search cap.
    pub fn associated_primes(&self) -> Result<BTreeSet<PrimeSupport>> {
        self.associated_primes_capped(DEFAULT_SEARCH_CAP)
    }

    /// All monomial primes of the form `(I : u)` with `u` dividing the lcm of
    /// the generators.
    pub fn associated_primes_capped(&self, cap: u128) -> Result<BTreeSet<PrimeSupport>> {
        self.require_proper()?;
        let size = self.colon_search_size();
        if size > cap {
            return Err(Error::CapExceeded { what: "colon search space", size, cap });
        }
        let bound = self.lcm_of_gens();
        let mut out = BTreeSet::new();
        let mut u = Monomial::one(self.nvars());
        loop {
            if !self.contains(&u) {
                if let Some(p) = self.colon_prime(&u) {
                    out.insert(p);
                }
            }
            if !odometer_step(&mut u.0, bound.exponents()) {
                break;
            }
        }
        Ok(out)
    }

    /// Minimal primes, read off the radical's Stanley–Reisner complex.
    pub fn minimal_primes(&self) -> Result<BTreeSet<PrimeSupport>> {
        self.require_proper()?;
        let rad = self.radical();
        let cx = crate::complex::SimplicialComplex::from_squarefree_ideal(&rad)?;
        Ok(cx.minimal_primes())
    }

    pub fn radical(&self) -> MonomialIdeal {
        let n = self.nvars();
        let gens = self.gens.iter().map(|g| Monomial::from_support(n, g.support())).collect();
        MonomialIdeal::from_minimal(self.ring.clone(), gens)
    }

    /// Irredundant decomposition into ideals generated by pure powers.
    ///
    /// Splits on the first generator (graded-lex) that is not a pure power,
    /// at its lowest-index variable: `I = (I + x_i^a) ∩ (I + g / x_i^a)`.
    pub fn irreducible_decomposition(&self) -> Result<Vec<MonomialIdeal>> {
        self.require_proper()?;
        let mut done: BTreeSet<Vec<Monomial>> = BTreeSet::new();
        let mut work = vec![self.clone()];
        while let Some(j) = work.pop() {
            match j.gens.iter().find(|g| g.pure_power_var().is_none() && !g.is_one()) {
                None => {
                    done.insert(j.gens);
                }
                Some(g) => {
                    let n = j.nvars();
                    let i = g.support().iter().next().expect("non-constant generator");
                    let mut power = Monomial::one(n);
                    power.0[i] = g.0[i];
                    let rest = g.strip(&power);
                    for extra in [power, rest] {
                        let mut gens = j.gens.clone();
                        gens.push(extra);
                        work.push(MonomialIdeal::from_minimal(j.ring.clone(), gens));
                    }
                }
            }
        }
        let comps: Vec<MonomialIdeal> = done
            .into_iter()
            .map(|gens| MonomialIdeal { ring: self.ring.clone(), gens })
            .collect();
        let mut minimal: Vec<MonomialIdeal> = comps
            .iter()
            .filter(|c| !comps.iter().any(|d| d != *c && d.is_subset(c)))
            .cloned()
            .collect();
        minimal.sort_by(|a, b| a.gens.cmp(&b.gens));
        Ok(minimal)
    }

    /// Primary components, grouped by radical, in canonical prime order.
    pub fn primary_decomposition(&self) -> Result<Vec<(PrimeSupport, MonomialIdeal)>> {
        let comps = self.irreducible_decomposition()?;
        let mut groups: std::collections::BTreeMap<PrimeSupport, MonomialIdeal> = Default::default();
        for c in comps {
            let p = PrimeSupport(c.gens.iter().fold(VarSet::EMPTY, |s, g| s.union(g.support())));
            let entry = groups.entry(p).or_insert_with(|| MonomialIdeal::unit(self.ring.clone()));
            *entry = entry.intersect_unchecked(&c);
        }
        Ok(groups.into_iter().collect())
    }

    /// Standard polarization `x_i^k ↦ x_{i,1}⋯x_{i,k}`.
    pub fn polarize(&self) -> Result<Polarization> {
        let n = self.nvars();
        let rho = self.lcm_of_gens();
        let mut names = self.ring.names().to_vec();
        let mut origin: Vec<usize> = (0..n).collect();
        // copy_index[i][k-2] = index of x_{i,k}
        let mut copy_index: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, copies) in copy_index.iter_mut().enumerate() {
            for k in 2..=rho.0[i] {
                let mut name = format!("{}_{}", self.ring.names()[i], k);
                while names.contains(&name) {
                    name.push('\'');
                }
                copies.push(names.len());
                names.push(name);
                origin.push(i);
            }
        }
        let ring = RingDescriptor::new(names, self.ring.field())?;
        let m = ring.nvars();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0u32; m];
                for i in 0..n {
                    if g.0[i] >= 1 {
                        e[i] = 1;
                    }
                    for k in 2..=g.0[i] {
                        e[copy_index[i][k as usize - 2]] = 1;
                    }
                }
                Monomial(e)
            })
            .collect();
        Ok(Polarization {
            ideal: MonomialIdeal::from_minimal(ring, gens),
            added_vars: m - n,
            origin,
        })
    }

    /// Join with an ideal in a disjoint set of variables: the ideal of
    /// `S/I ⊗_K T/J` in `S ⊗_K T`.
    pub fn tensor_join(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.require_proper()?;
        other.require_proper()?;
        if self.ring.field() != other.ring.field() {
            return Err(Error::RingMismatch("tensor factors over different fields".into()));
        }
        let (n, m) = (self.nvars(), other.nvars());
        let disjoint = other.ring.names().iter().all(|x| self.ring.index_of(x).is_none());
        let ring = if disjoint {
            let names = self.ring.names().iter().chain(other.ring.names()).cloned().collect();
            RingDescriptor::new(names, self.ring.field())?
        } else {
            RingDescriptor::standard(n + m, self.ring.field())?
        };
        let left = self.gens.iter().map(|g| {
            let mut e = g.0.clone();
            e.resize(n + m, 0);
            Monomial(e)
        });
        let right = other.gens.iter().map(|g| {
            let mut e = vec![0; n];
            e.extend_from_slice(&g.0);
            Monomial(e)
        });
        Ok(MonomialIdeal::from_minimal(ring, left.chain(right).collect()))
    }

    /// Image of `I + (x_v)` in the remaining `n - 1` variables; `x_v` must be
    /// regular on `S/I`.
    pub fn quotient_by_variable(&self, v: usize) -> Result<MonomialIdeal> {
        self.require_proper()?;
        let n = self.nvars();
        if v >= n {
            return Err(Error::OutOfRange { index: v as i64 + 1, lo: 1, hi: n as i64 });
        }
        if n == 1 {
            return Err(Error::OutOfRange { index: 0, lo: 1, hi: 1 });
        }
        let ass = self.associated_primes()?;
        if let Some(p) = ass.iter().find(|p| p.vars().contains(v)) {
            return Err(Error::zero_divisor(&self.ring.names()[v], p, self.ring.names()));
        }
        let names: Vec<String> =
            self.ring.names().iter().enumerate().filter(|&(i, _)| i != v).map(|(_, x)| x.clone()).collect();
        let ring = RingDescriptor::new(names, self.ring.field())?;
        let gens = self
            .gens
            .iter()
            .filter(|g| g.0[v] == 0)
            .map(|g| Monomial(g.0.iter().enumerate().filter(|&(i, _)| i != v).map(|(_, &e)| e).collect()))
            .collect();
        Ok(MonomialIdeal::from_minimal(ring, gens))
    }

    pub fn with_ring(&self, ring: RingDescriptor) -> Result<MonomialIdeal> {
        MonomialIdeal::new(ring, self.gens.clone())
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.display(self.ring.names())).collect();
        format!("({})", parts.join(", "))
    }

    pub fn gen_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.display(self.ring.names())).collect()
    }
}

/// Output of [`MonomialIdeal::polarize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    pub added_vars: usize,
    /// For every variable of the polarized ring, the original variable it copies.
    pub origin: Vec<usize>,
}

impl Polarization {
    /// Substitutes every copy `x_{i,j} ↦ x_i`, landing back in `ring`.
    pub fn specialize(&self, ring: &RingDescriptor) -> Result<MonomialIdeal> {
        let n = ring.nvars();
        let gens = self
            .ideal
            .gens()
            .iter()
            .map(|g| {
                let mut e = vec![0u32; n];
                for (j, &x) in g.exponents().iter().enumerate() {
                    e[self.origin[j]] += x;
                }
                Monomial(e)
            })
            .collect();
        MonomialIdeal::new(ring.clone(), gens)
    }
}

/// Advances `e` to the next vector in the box `0 <= e <= bound`; false once wrapped.
pub(crate) fn odometer_step(e: &mut [u32], bound: &[u32]) -> bool {
    for i in 0..e.len() {
        if e[i] < bound[i] {
            e[i] += 1;
            return true;
        }
        e[i] = 0;
    }
    false
}
