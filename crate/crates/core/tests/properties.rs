use proptest::prelude::*;

use mdepth::invariants::{self, HochsterTable, LinkHomology};
use mdepth::linalg::{boundary_matrix, rank_of_rows, reduced_homology, SparseMatrix};
use mdepth::parse::parse_ideal_text;
use mdepth::{FieldSpec, Monomial, MonomialIdeal, RingDescriptor, SimplicialComplex, VarSet};

fn complex() -> impl Strategy<Value = SimplicialComplex> {
    (2usize..=7).prop_flat_map(|n| {
        prop::collection::vec(1u64..(1u64 << n), 1..6)
            .prop_map(move |fs| SimplicialComplex::from_facets(n, fs.into_iter().map(VarSet::from_bits)).unwrap())
    })
}

fn ideal(max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..5).prop_map(move |gs| {
            let ring = RingDescriptor::standard(n, FieldSpec::Rationals).unwrap();
            let gens = gs
                .into_iter()
                .map(|mut e| {
                    if e.iter().all(|&x| x == 0) {
                        e[0] = 1;
                    }
                    Monomial::new(e)
                })
                .collect();
            MonomialIdeal::new(ring, gens).unwrap()
        })
    })
}

fn sr_ideal(cx: &SimplicialComplex, field: FieldSpec) -> MonomialIdeal {
    cx.to_ideal(&RingDescriptor::standard(cx.ground_size(), field).unwrap()).unwrap()
}

fn product(a: &SparseMatrix, b: &SparseMatrix) -> Vec<i64> {
    let mut out = vec![0i64; a.rows() * b.cols()];
    for &(r, k, x) in a.entries() {
        for &(k2, c, y) in b.entries() {
            if k == k2 {
                out[r * b.cols() + c] += x * y;
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn euler_identity(cx in complex()) {
        let f = cx.f_vector();
        let chi: i64 = f.iter().enumerate().map(|(k, &c)| if k % 2 == 1 { c as i64 } else { -(c as i64) }).sum();
        for field in [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3)] {
            prop_assert_eq!(reduced_homology(&cx, field).euler_characteristic(), chi);
        }
    }

    #[test]
    fn boundary_squares_to_zero(cx in complex()) {
        for i in 1..=cx.dim() {
            let hi = boundary_matrix(&cx, i).unwrap();
            let lo = boundary_matrix(&cx, i - 1).unwrap();
            prop_assert!(product(&lo, &hi).iter().all(|&v| v == 0));
        }
    }

    #[test]
    fn rank_ignores_row_order_and_transpose(
        rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..6),
        shift in 0usize..6,
    ) {
        let sparse = |rs: &[Vec<i64>]| -> Vec<Vec<(usize, i64)>> {
            rs.iter().map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c, v)).collect()).collect()
        };
        let mut rotated = rows.clone();
        let len = rotated.len();
        rotated.rotate_left(shift % len);
        let transposed: Vec<Vec<i64>> = (0..5).map(|c| rows.iter().map(|r| r[c]).collect()).collect();
        for field in [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(5)] {
            let r = rank_of_rows(sparse(&rows), field);
            prop_assert_eq!(r, rank_of_rows(sparse(&rotated), field));
            prop_assert_eq!(r, rank_of_rows(sparse(&transposed), field));
        }
    }

    #[test]
    fn ideal_text_round_trip(i in ideal(3)) {
        let back = parse_ideal_text(&i.display(), Some(i.ring().names()), FieldSpec::Rationals).unwrap();
        prop_assert_eq!(back, i);
    }

    #[test]
    fn intersection_and_sum_laws(i in ideal(2), j in ideal(2)) {
        prop_assume!(i.nvars() == j.nvars());
        let j = j.with_ring(i.ring().clone()).unwrap();
        let cap = i.intersect(&j).unwrap();
        prop_assert_eq!(&cap, &j.intersect(&i).unwrap());
        prop_assert!(cap.is_subset(&i) && cap.is_subset(&j));
        for a in i.gens() {
            for b in j.gens() {
                prop_assert!(cap.contains(&a.lcm(b)));
            }
        }
        let sum = i.sum(&j).unwrap();
        prop_assert!(i.is_subset(&sum) && j.is_subset(&sum));
    }

    #[test]
    fn polarization_specializes_back(i in ideal(3)) {
        let p = i.polarize().unwrap();
        prop_assert!(p.ideal.is_squarefree());
        prop_assert_eq!(p.specialize(i.ring()).unwrap(), i);
    }

    #[test]
    fn degree_complexes_match_link_scan(cx in complex()) {
        let i = sr_ideal(&cx, FieldSpec::Rationals);
        let dim = (cx.dim() + 1) as usize;
        let links = HochsterTable::from_links(&LinkHomology::new(&cx, FieldSpec::Rationals), dim);
        let degrees = HochsterTable::from_degree_complexes(&i, dim);
        for (a, b) in links.entries.iter().zip(&degrees.entries) {
            prop_assert_eq!((a.nonzero, a.finite_length, a.k_dim), (b.nonzero, b.finite_length, b.k_dim));
        }
    }

    #[test]
    fn mixed_ideals_agree_with_polarization(i in ideal(3)) {
        prop_assume!(!i.is_unit());
        let p = invariants::profile(&i).unwrap();
        prop_assert_eq!(p.hochster.min_nonzero(), Some(p.depth));
        prop_assert_eq!(p.hochster.max_nonzero(), Some(p.dim));
        prop_assert_eq!(p.depth, i.nvars() - invariants::projdim(&i).unwrap());
        prop_assert!(p.depth <= p.mdepth && p.mdepth <= p.dim);
    }

    #[test]
    fn primary_components_recover_the_ideal(i in ideal(3)) {
        prop_assume!(!i.is_unit());
        let comps = i.primary_decomposition().unwrap();
        let back = MonomialIdeal::intersect_all(i.ring(), comps.iter().map(|(_, q)| q)).unwrap();
        prop_assert_eq!(back, i.clone());
        let primes: std::collections::BTreeSet<_> = comps.iter().map(|(p, _)| *p).collect();
        prop_assert_eq!(primes, i.associated_primes().unwrap());
    }
}
