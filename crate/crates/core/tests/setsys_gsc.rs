mod support;

use cubeideal::graphapps::{cycle_space, fixtures};
use cubeideal::gsc::{self, GscIneq};
use cubeideal::setsys::{Point, SetSystem};
use cubeideal::Extended;
use proptest::prelude::*;
use support::{minimal_gsc_oracle, set_system, vc_oracle};

fn ss(n: usize, rows: &[&str]) -> SetSystem {
    SetSystem::from_bitstrings(n, rows.iter().copied()).unwrap()
}

fn arb_system(max_n: usize) -> impl Strategy<Value = SetSystem> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::btree_set(0..1u64 << n, 1..=(1usize << n)).prop_map(move |pts| set_system(n, pts))
    })
}

fn pairs(gs: &[GscIneq]) -> Vec<(u64, u64)> {
    let mut v: Vec<(u64, u64)> = gs.iter().map(|g| (g.positive(), g.negative())).collect();
    v.sort_unstable();
    v
}

#[test]
fn twist_examples() {
    let s = ss(3, &["000"]);
    assert_eq!(s.twist(Point(0b111)).unwrap(), ss(3, &["111"]));
    let chain = fixtures::chain(3);
    let q = Point::from_bitstring("101").unwrap().0;
    assert_eq!(chain.twist(q).unwrap().twist(q).unwrap(), chain);
    assert_eq!(chain.twist(Point::zero()).unwrap(), chain);
}

#[test]
fn project_examples() {
    assert_eq!(SetSystem::full_cube(2).unwrap().project(&[0]).unwrap(), ss(1, &["0", "1"]));
    assert_eq!(ss(3, &["000", "111"]).project(&[0, 1]).unwrap(), ss(2, &["00", "11"]));
    assert_eq!(fixtures::chain(3).project(&[0, 2]).unwrap(), ss(2, &["00", "10", "11"]));
}

#[test]
fn vc_examples() {
    assert_eq!(SetSystem::empty(3).unwrap().vc_dimension(), 0);
    assert_eq!(SetSystem::full_cube(5).unwrap().vc_dimension(), 5);
    assert_eq!(cycle_space(&fixtures::k4()).unwrap().vc_dimension(), 3);
}

#[test]
fn validity_examples() {
    let g1 = GscIneq::from_indices(&[0], &[]).unwrap();
    assert!(!gsc::is_valid(&SetSystem::full_cube(2).unwrap(), &g1).unwrap());
    assert!(gsc::is_valid(&ss(2, &["11"]), &g1).unwrap());
    let g = GscIneq::from_indices(&[0], &[1]).unwrap();
    assert!(gsc::is_valid(&fixtures::chain(3), &g).unwrap());
}

#[test]
fn minimal_valid_examples() {
    assert!(gsc::minimal_valid_gsc(&SetSystem::full_cube(4).unwrap()).unwrap().is_empty());
    let chain = gsc::minimal_valid_gsc(&fixtures::chain(3)).unwrap();
    assert_eq!(pairs(&chain), vec![(0b001, 0b010), (0b001, 0b100), (0b010, 0b100)]);
    let diag = gsc::minimal_valid_gsc(&ss(2, &["00", "11"])).unwrap();
    assert_eq!(pairs(&diag), vec![(0b01, 0b10), (0b10, 0b01)]);
}

#[test]
fn connectivity_examples() {
    assert_eq!(gsc::connectivity(&SetSystem::full_cube(3).unwrap()).unwrap(), Extended::Infinity);
    assert_eq!(gsc::connectivity(&fixtures::chain(3)).unwrap(), Extended::Finite(2));
    assert_eq!(gsc::connectivity(&cycle_space(&fixtures::k4()).unwrap()).unwrap(), Extended::Finite(3));
}

#[test]
fn cover_graph_examples() {
    let c3 = gsc::cover_graph(&cycle_space(&fixtures::triangle()).unwrap()).unwrap();
    assert_eq!(c3.edges, vec![(0, 1), (0, 2), (1, 2)]);
    assert_eq!(c3.components, 1);
    let cube = gsc::cover_graph(&SetSystem::full_cube(3).unwrap()).unwrap();
    assert!(cube.edges.is_empty());
    assert_eq!(cube.components, 3);
    let chain = gsc::cover_graph(&fixtures::chain(3)).unwrap();
    assert_eq!(chain.edges, vec![(0, 1), (0, 2), (1, 2)]);
    assert_eq!(chain.components, 1);
}

#[test]
fn core_examples() {
    assert_eq!(gsc::core_points(&fixtures::chain(3)).unwrap(), ss(3, &["000", "111"]));
    let no_two = ss(3, &["100", "010", "001", "111"]);
    assert_eq!(gsc::core_points(&no_two).unwrap(), no_two);
    let diag = ss(2, &["00", "11"]);
    assert_eq!(gsc::core_points(&diag).unwrap(), diag);
}

#[test]
fn rainbow_and_kappa_examples() {
    let punctured = SetSystem::full_cube(3).unwrap().filter(|p| p.0 != 0);
    let all = GscIneq::from_indices(&[0, 1, 2], &[]).unwrap();
    assert!(gsc::is_rainbow(&punctured, &all).unwrap());
    assert_eq!(gsc::kappa(&punctured).unwrap(), Extended::Finite(3));
    let chain = fixtures::chain(3);
    for g in gsc::valid_two_gsc(&chain).unwrap() {
        assert!(!gsc::is_rainbow(&chain, &g).unwrap());
    }
    assert_eq!(gsc::kappa(&chain).unwrap(), Extended::Infinity);
    assert_eq!(gsc::kappa(&cycle_space(&fixtures::triangle()).unwrap()).unwrap(), Extended::Infinity);
    let k4 = cycle_space(&fixtures::k4()).unwrap();
    assert_eq!(gsc::kappa(&k4).unwrap(), gsc::connectivity(&k4).unwrap());
}

#[test]
fn canonical_twist_examples() {
    let chain = gsc::canonical_twist(&fixtures::chain(3)).unwrap();
    assert_eq!(chain.q, Point::zero());
    assert!(chain.comparability_matches);
    let diag = gsc::canonical_twist(&ss(2, &["00", "11"])).unwrap();
    assert_eq!(diag.q, Point::zero());
    assert!(diag.succeeds(0, 1) && diag.succeeds(1, 0));
    let cube = gsc::canonical_twist(&SetSystem::full_cube(3).unwrap()).unwrap();
    assert_eq!(cube.q, Point::zero());
    assert_eq!(cube.dominates, vec![0b001, 0b010, 0b100]);
}

#[test]
fn canonical_twist_rejects_missing_center() {
    assert!(gsc::canonical_twist(&ss(2, &["00", "01"])).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn minimal_valid_matches_oracle(s in arb_system(4)) {
        prop_assert_eq!(pairs(&gsc::minimal_valid_gsc(&s).unwrap()), {
            let mut v = minimal_gsc_oracle(&s);
            v.sort_unstable();
            v
        });
    }

    #[test]
    fn vc_matches_oracle_and_sauer_shelah(s in arb_system(5)) {
        let vc = s.vc_dimension();
        prop_assert_eq!(vc, vc_oracle(&s));
        prop_assert!(1usize << vc <= s.len());
    }

    #[test]
    fn twist_is_an_involution(s in arb_system(5), q in any::<u64>()) {
        let q = Point(q & ((1 << s.dim()) - 1));
        prop_assert_eq!(s.twist(q).unwrap().twist(q).unwrap(), s);
    }

    #[test]
    fn twisting_preserves_invariants(s in arb_system(4), q in any::<u64>()) {
        let q = Point(q & ((1 << s.dim()) - 1));
        let t = s.twist(q).unwrap();
        prop_assert_eq!(t.vc_dimension(), s.vc_dimension());
        let lambda = gsc::connectivity(&s).unwrap();
        prop_assert_eq!(gsc::connectivity(&t).unwrap(), lambda);
        prop_assume!(lambda >= Extended::Finite(2));
        prop_assert_eq!(gsc::cover_graph(&t).unwrap(), gsc::cover_graph(&s).unwrap());
        prop_assert_eq!(gsc::core_points(&t).unwrap(), gsc::core_points(&s).unwrap().twist(q).unwrap());
        let twisted: Vec<(u64, u64)> = {
            let mut v = pairs(&gsc::minimal_valid_gsc(&s).unwrap().iter().map(|g| g.twist(q)).collect::<Vec<_>>());
            v.sort_unstable();
            v
        };
        prop_assert_eq!(pairs(&gsc::minimal_valid_gsc(&t).unwrap()), twisted);
    }

    #[test]
    fn connectivity_is_shortest_minimal_row(s in arb_system(4)) {
        let shortest: Extended = gsc::minimal_valid_gsc(&s).unwrap().iter().map(|g| g.len()).min().into();
        prop_assert_eq!(gsc::connectivity(&s).unwrap(), shortest);
    }

    #[test]
    fn core_points_are_tight(s in arb_system(4)) {
        prop_assume!(gsc::connectivity(&s).unwrap() >= Extended::Finite(2));
        let twos = gsc::valid_two_gsc(&s).unwrap();
        let core = gsc::core_points(&s).unwrap();
        for p in s.points() {
            let tight = twos.iter().all(|g| g.lhs(*p) == 1);
            prop_assert_eq!(core.contains(*p), tight);
        }
    }

    #[test]
    fn parse_round_trip(s in arb_system(5)) {
        prop_assert_eq!(SetSystem::parse(&s.to_text()).unwrap(), s);
    }
}
