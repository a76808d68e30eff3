//! Built-in regression pins for the reference examples.

use std::collections::BTreeSet;

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::filtration::{self, AttTag, DepthInterval, ProbeConfig};
use crate::ideal::{MonomialIdeal, PrimeSupport};
use crate::invariants;
use crate::parse::{parse_ideal_text, Graph};
use crate::ring::{FieldSpec, RingDescriptor};
use crate::varset::VarSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn eq<T: std::fmt::Debug>(&mut self, name: &str, expected: T, actual: Result<T>) {
        let actual = match actual {
            Ok(v) => format!("{v:?}"),
            Err(e) => format!("error: {e}"),
        };
        self.0.push(Check { name: name.to_string(), expected: format!("{expected:?}"), actual });
    }
}

fn cycle(n: usize) -> MonomialIdeal {
    Graph::cycle(n).edge_ideal(FieldSpec::Rationals).expect("cycle edge ideal")
}

fn prime(one_based: &[usize]) -> PrimeSupport {
    PrimeSupport::from_indices(one_based.iter().map(|v| v - 1))
}

fn show(ps: &BTreeSet<PrimeSupport>, ring: &RingDescriptor) -> Vec<String> {
    ps.iter().map(|p| p.display(ring.names())).collect()
}

/// The ten associated primes of the 8-cycle edge ideal, in listed order.
pub fn octagon_primes() -> Vec<PrimeSupport> {
    [
        &[1, 3, 5, 7][..],
        &[2, 4, 6, 8],
        &[2, 3, 5, 7, 8],
        &[2, 3, 5, 6, 8],
        &[1, 3, 5, 6, 8],
        &[1, 3, 4, 6, 8],
        &[1, 2, 4, 5, 7],
        &[1, 2, 4, 6, 7],
        &[1, 3, 4, 6, 7],
        &[2, 4, 5, 7, 8],
    ]
    .iter()
    .map(|p| prime(p))
    .collect()
}

/// Six-vertex triangulation of the real projective plane.
pub fn projective_plane() -> SimplicialComplex {
    let tris: [[usize; 3]; 10] = [
        [1, 2, 3],
        [1, 2, 4],
        [1, 3, 5],
        [1, 4, 6],
        [1, 5, 6],
        [2, 3, 6],
        [2, 4, 5],
        [2, 5, 6],
        [3, 4, 5],
        [3, 4, 6],
    ];
    SimplicialComplex::from_facets(6, tris.iter().map(|t| VarSet::from_indices(t.iter().map(|v| v - 1))))
        .expect("triangles on six vertices")
}

fn octagon(c: &mut Checks) {
    let i = cycle(8);
    let ring = i.ring().clone();
    let prof = invariants::profile(&i);
    let listed: BTreeSet<PrimeSupport> = octagon_primes().into_iter().collect();
    c.eq("C8 associated primes", show(&listed, &ring), prof.as_ref().map(|p| show(&p.ass, &ring)).map_err(Clone::clone));
    c.eq("C8 dim", 4, invariants::krull_dim(&i));
    c.eq("C8 depth", 3, invariants::depth(&i));
    c.eq("C8 mdepth", 3, invariants::mdepth(&i));
    c.eq("C8 maximal depth", true, prof.as_ref().map(|p| p.flags.maximal_depth).map_err(Clone::clone));
    c.eq("C8 projdim", 5, invariants::projdim(&i));

    let f = filtration::dimension_filtration(&i);
    c.eq(
        "C8 R_1 = R_2 = 0",
        [false, false],
        f.as_ref().map(|f| [f.level(1).nonzero, f.level(2).nonzero]).map_err(Clone::clone),
    );
    let p12 = prime(&[1, 3, 5, 7]).to_ideal(&ring).intersect(&prime(&[2, 4, 6, 8]).to_ideal(&ring));
    c.eq(
        "C8 level-3 ideal = p1 ∩ p2",
        p12.map(|p| p.display()).unwrap_or_default(),
        f.as_ref().map(|f| f.level(3).ideal.display()).map_err(Clone::clone),
    );
    c.eq("C8 level 4 is the whole ring", true, f.as_ref().map(|f| f.level(4).ideal.is_unit()).map_err(Clone::clone));
    c.eq("C8 t", 3, f.as_ref().map(|f| f.t).map_err(Clone::clone));
    let ass3: BTreeSet<PrimeSupport> = octagon_primes()[2..].iter().copied().collect();
    c.eq("C8 Ass(R_3) = Ass(R) - Ass(R/R_3)", show(&ass3, &ring), f.as_ref().map_err(Clone::clone).and_then(|f| f.ass_difference_at_t().map(|a| show(&a, &ring))));
    c.eq(
        "C8 mdepth R_3 = mdepth R",
        vec![(3, 3), (4, 3)],
        f.as_ref().map(filtration::mdepth_chain).map_err(Clone::clone),
    );
    c.eq(
        "C8 depth R/R_3",
        1,
        f.as_ref().map_err(Clone::clone).and_then(|f| invariants::depth(&f.level(3).ideal)),
    );
    c.eq(
        "C8 depth R_3 interval",
        Some(DepthInterval::exact(2)),
        f.as_ref().map(|f| f.intervals[3].module).map_err(Clone::clone),
    );
    c.eq("C8 sequentially CM", Some(false), filtration::is_sequentially_cm(&i).map(|v| v.as_bool()));
    c.eq(
        "C8 Att(H^4) = Assh",
        show(&[prime(&[1, 3, 5, 7]), prime(&[2, 4, 6, 8])].into_iter().collect(), &ring),
        filtration::att_report(&i).map(|r| r.claim(4, AttTag::TopAssh).map(|s| show(s, &ring)).unwrap_or_default()),
    );
    c.eq(
        "C8 psupp degree 3 contains the empty face",
        true,
        filtration::psupp_monomial(&i, 3).map(|fs| fs.contains(&VarSet::EMPTY)),
    );
}

fn skew_lines(c: &mut Checks) {
    let i = parse_ideal_text("x1*x3,x1*x4,x2*x3,x2*x4", None, FieldSpec::Rationals).expect("literal ideal");
    let p = invariants::profile(&i);
    let get = |f: fn(&invariants::ModuleProfile) -> String| p.as_ref().map(f).map_err(Clone::clone);
    c.eq("two planes: dim", "2".to_string(), get(|p| p.dim.to_string()));
    c.eq("two planes: depth", "1".to_string(), get(|p| p.depth.to_string()));
    c.eq("two planes: mdepth", "2".to_string(), get(|p| p.mdepth.to_string()));
    c.eq("two planes: maximal depth", "false".to_string(), get(|p| p.flags.maximal_depth.to_string()));
    c.eq("two planes: generalized CM", "true".to_string(), get(|p| p.flags.generalized_cm.to_string()));
    c.eq("two planes: H^0 = 0", "false".to_string(), get(|p| p.hochster.entries[0].nonzero.to_string()));
    c.eq(
        "two planes: H^1 finite length of dimension 1",
        "(true, Some(1))".to_string(),
        get(|p| format!("({}, {:?})", p.hochster.entries[1].finite_length, p.hochster.entries[1].k_dim)),
    );
}

fn cycles(c: &mut Checks) {
    for (n, expected) in [(3, true), (4, false), (5, true), (6, false), (7, false), (8, false)] {
        c.eq(&format!("C{n} sequentially CM"), Some(expected), filtration::is_sequentially_cm(&cycle(n)).map(|v| v.as_bool()));
    }
    let c5 = cycle(5);
    c.eq(
        "C5 Att(H^i) = Ass^i at every degree",
        true,
        filtration::att_report(&c5).map(|r| {
            r.degrees.iter().all(|d| {
                let lb = d.claims.iter().find(|x| x.tag == AttTag::LowerBoundOnly).map(|x| &x.primes);
                let full = d.claims.iter().find(|x| x.tag == AttTag::SeqCmLevel).map(|x| &x.primes);
                full.is_some() && full == lb
            })
        }),
    );
}

fn small_rules(c: &mut Checks) {
    let q = FieldSpec::Rationals;
    // depth 0 always has maximal depth
    let i = parse_ideal_text("x^2, x*y", None, q).expect("literal ideal");
    c.eq("depth 0 has maximal depth", (0, true), invariants::profile(&i).map(|p| (p.depth, p.flags.maximal_depth)));

    // a Cohen-Macaulay summand of strictly smallest depth forces maximal depth
    let ring = RingDescriptor::standard(4, q).expect("ring");
    let cm = parse_ideal_text("x1,x2,x3", Some(ring.names()), q).expect("literal ideal");
    let other = parse_ideal_text("x1*x3,x1*x4,x2*x3,x2*x4", Some(ring.names()), q).expect("literal ideal");
    let sum = invariants::profile(&cm)
        .and_then(|a| invariants::profile(&other).and_then(|b| invariants::direct_sum_profile(&[a, b])));
    c.eq("CM summand of least depth gives maximal depth", true, sum.map(|p| p.flags.maximal_depth));

    // Cohen-Macaulay: Att(H^d) = Assd = Ass
    let tri = cycle(3);
    c.eq(
        "CM instance: min Att(H^d) = Ass",
        true,
        filtration::att_report(&tri).and_then(|r| {
            let p = invariants::profile(&tri)?;
            Ok(r.claim(p.dim, AttTag::DepthMinAtt) == Some(&p.ass) && r.claim(p.dim, AttTag::TopAssh) == Some(&p.ass))
        }),
    );

    // characteristic dependence of the projective plane
    let rp2 = projective_plane();
    for (field, depth) in [(FieldSpec::Rationals, 3), (FieldSpec::Prime(2), 2)] {
        let r = RingDescriptor::standard(6, field).expect("ring");
        let i = rp2.to_ideal(&r).expect("sr ideal");
        c.eq(&format!("projective plane depth over {field}"), (depth, depth), invariants::depth(&i).and_then(|d| Ok((d, 6 - invariants::projdim(&i)?))));
    }
}

fn prober(c: &mut Checks) {
    let cfg = ProbeConfig { seed: 1, samples: 120, max_vertices: 8 };
    let r = filtration::probe_open_question(&cfg, FieldSpec::Rationals);
    c.eq(
        "finite-length probe never lists the depth or top degree",
        true,
        r.map(|r| r.hits.iter().all(|h| h.degree != h.depth && h.degree != h.dim)),
    );
}

/// Runs every pin; a check passes when its printed value matches.
pub fn run() -> Vec<Check> {
    let mut c = Checks(Vec::new());
    octagon(&mut c);
    skew_lines(&mut c);
    cycles(&mut c);
    small_rules(&mut c);
    prober(&mut c);
    c.0
}
