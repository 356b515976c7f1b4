use proptest::prelude::*;

use og4_core::classify::classify_independent;
use og4_core::document::PairDocument;
use og4_core::families::{Family, FamilySpec, Orientation, Variant};
use og4_core::oracle::normal_subgroups_oracle;
use og4_core::pair::{check_og4, pair_isomorphic, verify_witness, IsoOptions};
use og4_core::quotient::cyclic_quotient_census;
use og4_core::{OrientedGraph, OrientedPair, Partition, Perm, PermGroup};

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<u32>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

fn perms(n: usize, k: usize) -> impl Strategy<Value = Vec<Perm>> {
    prop::collection::vec(perm(n), 1..=k)
}

/// Small valid family members.
fn family() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (3usize..=6).prop_map(FamilySpec::lex_cycle),
        (3usize..=6, 3usize..=6)
            .prop_filter("one odd", |(r, s)| r % 2 == 1 || s % 2 == 1)
            .prop_map(|(r, s)| FamilySpec::gamma(r, s, Variant::G, Orientation::Con1)),
        (1usize..=3, 2usize..=3).prop_map(|(a, b)| FamilySpec::gamma(2 * a + 1, 2 * b, Variant::H, Orientation::Con2c)),
        (2usize..=3, 2usize..=3).prop_map(|(a, b)| FamilySpec::gamma_plus(2 * a, 2 * b, Variant::G, Orientation::Con1)),
        (2usize..=3, 2usize..=3).prop_map(|(a, b)| FamilySpec::gamma_plus(2 * a, 2 * b, Variant::H, Orientation::Con2c)),
        (1usize..=2, 1usize..=2).prop_map(|(a, b)| FamilySpec::double(2 * a + 1, 2 * b + 1)),
    ]
}

/// The same pair with vertex v renamed f(v).
fn relabel(pair: &OrientedPair, f: &Perm) -> OrientedPair {
    let n = pair.graph().n();
    let graph = OrientedGraph::new(n, pair.delta().iter().map(|&(u, v)| (f.image(u), f.image(v)))).unwrap();
    let gens = pair.group().generators().iter().map(|g| g.conjugate_by(f)).collect();
    OrientedPair::new(graph, PermGroup::new(n, gens).unwrap()).unwrap()
}

fn permuted(n: usize) -> impl Strategy<Value = (FamilySpec, Vec<u32>)> {
    family().prop_flat_map(move |spec| {
        let v = spec.build().unwrap().graph().n();
        (Just(spec), Just((0..v as u32).collect::<Vec<u32>>()).prop_shuffle())
    })
    .prop_filter("size", move |(spec, _)| spec.build().unwrap().graph().n() <= n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn composition_is_associative_with_inverses(a in perm(7), b in perm(7), c in perm(7)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.conjugate_by(&b), b.inverse().compose(&a).compose(&b));
        for x in 0..7 {
            prop_assert_eq!(a.compose(&b).image(x), b.image(a.image(x)));
        }
        prop_assert!(a.pow(a.order() as i64).is_identity());
    }

    #[test]
    fn orbits_partition_the_points_and_are_invariant(gens in perms(7, 3)) {
        let g = PermGroup::new(7, gens.clone()).unwrap();
        let orbits = g.orbits();
        prop_assert_eq!(orbits.points(), 7);
        for x in &gens {
            prop_assert!(orbits.is_invariant_under(x));
        }
        let total: usize = orbits.cells().iter().map(Vec::len).sum();
        prop_assert_eq!(total, 7);
    }

    #[test]
    fn orbit_stabiliser_counting(gens in perms(6, 2), point in 0usize..6) {
        let g = PermGroup::new(6, gens).unwrap();
        let order = g.order().unwrap();
        prop_assert_eq!(order, g.orbit(point).len() * g.stabilizer(point).unwrap().order().unwrap());
    }

    #[test]
    fn normal_subgroups_match_the_oracle(gens in perms(5, 2)) {
        let g = PermGroup::new(5, gens.clone()).unwrap();
        let fast: std::collections::BTreeSet<Vec<Perm>> =
            g.normal_subgroups().unwrap().iter().map(|n| n.sorted_elements().unwrap()).collect();
        let slow: std::collections::BTreeSet<Vec<Perm>> =
            normal_subgroups_oracle(5, &gens).unwrap().into_iter().collect();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn orbit_kernels_of_normal_subgroups(gens in perms(6, 2)) {
        let g = PermGroup::new(6, gens).unwrap();
        for n in g.normal_subgroups().unwrap() {
            let k = g.kernel_on_partition(&n.orbits()).unwrap();
            prop_assert!(n.is_subgroup_of(&k).unwrap());
            prop_assert!(g.has_normal_subgroup(&k).unwrap());
            prop_assert_eq!(k.orbits(), n.orbits());
        }
    }

    #[test]
    fn refinement_is_a_partial_order(labels in prop::collection::vec(0u8..3, 8), coarse in prop::collection::vec(0u8..2, 8)) {
        let fine = Partition::from_labels(labels.iter().zip(&coarse).map(|(a, b)| (*a, *b)));
        let coarse = Partition::from_labels(coarse);
        prop_assert!(fine.refines(&fine));
        prop_assert!(fine.refines(&coarse));
        prop_assert!(Partition::discrete(8).refines(&fine));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn family_members_are_half_transitive_pairs(spec in family()) {
        let pair = spec.build().unwrap();
        let report = check_og4(&pair).unwrap();
        prop_assert!(report.member());
        // The wreath products have stabilisers of order 2^(r-1).
        let stab = if spec.family == Family::LexCycle { 1 << (spec.r - 1) } else { 2 };
        prop_assert_eq!(report.stabilizer_order, stab);
        prop_assert_eq!(report.group_order, stab * pair.graph().n());
    }

    #[test]
    fn reversal_gives_an_isomorphic_pair(spec in family()) {
        let pair = spec.build().unwrap();
        let rev = pair.with_reversed_delta();
        let w = pair_isomorphic(&pair, &rev, IsoOptions { strict_delta: true }).unwrap();
        prop_assert!(w.is_some());
        prop_assert!(verify_witness(&pair, &rev, &w.unwrap()).unwrap());
    }

    #[test]
    fn documents_round_trip(spec in family()) {
        let doc = PairDocument::from_family(&spec).unwrap();
        let back = PairDocument::parse(&doc.to_json()).unwrap();
        prop_assert_eq!(&doc, &back);
        let (a, b) = (spec.build().unwrap(), back.to_pair().unwrap());
        prop_assert_eq!(a.delta(), b.delta());
        prop_assert_eq!(a.group().generators(), b.group().generators());
    }

    #[test]
    fn relabelling_preserves_census_and_classification((spec, images) in permuted(32)) {
        let pair = spec.build().unwrap();
        let f = Perm::from_images(images).unwrap();
        let moved = relabel(&pair, &f);
        let w = pair_isomorphic(&pair, &moved, IsoOptions { strict_delta: true }).unwrap();
        prop_assert!(w.is_some());
        let shape = |p: &OrientedPair| {
            let mut v: Vec<(usize, bool, bool)> = cyclic_quotient_census(p, 10_000)
                .unwrap()
                .iter()
                .map(|r| (r.length, r.oriented, r.maximal))
                .collect();
            v.sort();
            v
        };
        prop_assert_eq!(shape(&pair), shape(&moved));
        match (classify_independent(&pair, 10_000), classify_independent(&moved, 10_000)) {
            (Ok(a), Ok(b)) => {
                let lines = |r: &og4_core::ClassificationReport| {
                    let mut v: Vec<_> = r.matched_lines.iter().map(|l| (l.line, l.r, l.s)).collect();
                    v.sort();
                    v
                };
                prop_assert_eq!(lines(&a), lines(&b));
            }
            (Err(a), Err(b)) => prop_assert_eq!(a.to_string(), b.to_string()),
            (a, b) => prop_assert!(false, "classification differs: {:?} vs {:?}", a.map(|r| r.table_line), b.map(|r| r.table_line)),
        }
    }
}
