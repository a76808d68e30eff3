use std::collections::BTreeSet;

use mdepth::filtration::{self, DepthInterval};
use mdepth::invariants;
use mdepth::parse::{parse_ideal_text, Graph};
use mdepth::{FieldSpec, MonomialIdeal, PrimeSupport};

fn cycle(n: usize) -> MonomialIdeal {
    Graph::cycle(n).edge_ideal(FieldSpec::Rationals).unwrap()
}

fn prime(one_based: &[usize]) -> PrimeSupport {
    PrimeSupport::from_indices(one_based.iter().map(|v| v - 1))
}

fn c8_primes() -> BTreeSet<PrimeSupport> {
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

#[test]
fn octagon_profile() {
    let i = cycle(8);
    let p = invariants::profile(&i).unwrap();
    assert_eq!(p.ass, c8_primes());
    assert_eq!((p.dim, p.depth, p.mdepth), (4, 3, 3));
    assert!(p.flags.maximal_depth);
    assert!(!p.flags.cohen_macaulay);
    assert_eq!(invariants::projdim(&i).unwrap(), 5);
}

#[test]
fn octagon_filtration() {
    let i = cycle(8);
    let f = filtration::dimension_filtration(&i).unwrap();
    assert_eq!(f.t, 3);
    for k in 0..3 {
        assert_eq!(f.level(k).ideal, i);
        assert!(!f.level(k).nonzero);
    }
    let p12 = prime(&[1, 3, 5, 7]).to_ideal(i.ring()).intersect(&prime(&[2, 4, 6, 8]).to_ideal(i.ring())).unwrap();
    assert_eq!(f.level(3).ideal, p12);
    assert!(f.level(4).ideal.is_unit());
    assert_eq!(f.intervals[3].module, Some(DepthInterval::exact(2)));
    assert_eq!(f.intervals[3].quotient, Some(DepthInterval::exact(2)));
    assert_eq!(f.intervals[4].quotient, Some(DepthInterval::exact(1)));
    assert_eq!(filtration::mdepth_chain(&f), vec![(3, 3), (4, 3)]);
    let expected: BTreeSet<_> = c8_primes().into_iter().filter(|p| p.vars().len() == 5).collect();
    assert_eq!(f.ass_difference_at_t().unwrap(), expected);
    assert_eq!(filtration::filtration_sequentially_cm(&f), Some(false));
}

#[test]
fn cycle_family_sequential_cm() {
    for (n, expected) in [(3, true), (4, false), (5, true), (6, false), (7, false), (8, false)] {
        let v = filtration::is_sequentially_cm(&cycle(n)).unwrap();
        assert_eq!(v.as_bool(), Some(expected), "C{n}");
    }
}

#[test]
fn two_skew_lines() {
    let i = parse_ideal_text("x1*x3,x1*x4,x2*x3,x2*x4", None, FieldSpec::Rationals).unwrap();
    let p = invariants::profile(&i).unwrap();
    assert_eq!((p.dim, p.depth, p.mdepth), (2, 1, 2));
    assert!(!p.flags.maximal_depth);
    assert!(p.flags.generalized_cm);
    let h0 = p.hochster.entry(0).unwrap();
    assert!(!h0.nonzero);
    let h1 = p.hochster.entry(1).unwrap();
    assert!(h1.nonzero && h1.finite_length);
    assert_eq!(h1.k_dim, Some(1));
}

#[test]
fn mixed_ideal_filtration() {
    let i = parse_ideal_text("x^2, x*y", None, FieldSpec::Rationals).unwrap();
    let f = filtration::dimension_filtration(&i).unwrap();
    assert_eq!(f.level(0).ideal.gen_strings(), ["x"]);
    assert!(f.level(1).ideal.is_unit());
    let p = invariants::profile(&i).unwrap();
    assert_eq!((p.dim, p.depth), (1, 0));
    assert!(p.flags.maximal_depth);
    assert!(p.hochster.entry(0).unwrap().finite_length);
    assert_eq!(p.hochster.entry(0).unwrap().k_dim, Some(1));
    assert!(!p.hochster.entry(1).unwrap().finite_length);
}

#[test]
fn octagon_attached_primes() {
    let r = filtration::att_report(&cycle(8)).unwrap();
    let top = r.claim(4, filtration::AttTag::TopAssh).unwrap();
    assert_eq!(*top, [prime(&[1, 3, 5, 7]), prime(&[2, 4, 6, 8])].into_iter().collect());
    assert!(r.claim(3, filtration::AttTag::DepthMinAtt).is_none());
    let ps = filtration::psupp_monomial(&cycle(8), 3).unwrap();
    assert!(ps.contains(&mdepth::VarSet::EMPTY));
}
