mod support;

use cubeideal::graphapps::{cycle_space, fixtures};
use cubeideal::gsc::{self, GscIneq};
use cubeideal::polytope::{self, hull, Description, IneqSystem};
use cubeideal::rational::{frac, int, parse_vector, Rational};
use cubeideal::setsys::{Point, SetSystem};
use cubeideal::{Error, Extended};
use proptest::prelude::*;
use support::{basis, cube_ideal_oracle, set_system};

fn ss(n: usize, rows: &[&str]) -> SetSystem {
    SetSystem::from_bitstrings(n, rows.iter().copied()).unwrap()
}

fn uniform(n: usize, v: Rational) -> Vec<Rational> {
    vec![v; n]
}

fn oracle_rows(sys: &IneqSystem) -> Vec<basis::Row> {
    sys.rows().iter().map(|r| (r.coeffs.clone(), r.rhs)).collect()
}

fn arb_gsc_system() -> impl Strategy<Value = IneqSystem> {
    (1usize..=4).prop_flat_map(|n| {
        let row = prop::collection::vec(0u8..3, n);
        prop::collection::vec(row, 0..=5).prop_map(move |rows| {
            let mut sys = IneqSystem::unit_box(n);
            for signs in rows {
                let (mut i, mut j) = (0u64, 0u64);
                for (k, s) in signs.iter().enumerate() {
                    match s {
                        1 => i |= 1 << k,
                        2 => j |= 1 << k,
                        _ => {}
                    }
                }
                if let Ok(g) = GscIneq::new(i, j) {
                    sys.push_gsc(&g).unwrap();
                }
            }
            sys
        })
    })
}

fn arb_system(max_n: usize) -> impl Strategy<Value = SetSystem> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::btree_set(0..1u64 << n, 1..=(1usize << n)).prop_map(move |pts| set_system(n, pts))
    })
}

/// `S ∩ F` for the minimal face `F ∋ x`, as the points `p` that `x` can be
/// pushed away from while staying in `conv(S)`.
fn face_oracle(s: &SetSystem, x: &[Rational]) -> SetSystem {
    let eps = frac(1, 64);
    s.filter(|p| {
        let pv = polytope::point_vector(p, s.dim());
        let y: Vec<Rational> = x.iter().zip(&pv).map(|(xi, pi)| xi + &eps * (xi - pi)).collect();
        hull::convex_combination(s, &y).unwrap().is_some()
    })
}

#[test]
fn vertex_examples() {
    let unit = polytope::enumerate_vertices(&IneqSystem::unit_box(1)).unwrap();
    assert_eq!(unit, vec![vec![int(0)], vec![int(1)]]);
    let mut clipped = IneqSystem::unit_box(2);
    clipped.push_covering(0b11).unwrap();
    let v = polytope::enumerate_vertices(&clipped).unwrap();
    assert_eq!(v, vec![vec![int(0), int(1)], vec![int(1), int(0)], vec![int(1), int(1)]]);
    let mut chain = IneqSystem::unit_box(3);
    chain.push_gsc(&GscIneq::implication(0, 1).unwrap()).unwrap();
    chain.push_gsc(&GscIneq::implication(1, 2).unwrap()).unwrap();
    let v = polytope::enumerate_vertices(&chain).unwrap();
    assert_eq!(v, polytope::point_vectors(&fixtures::chain(3)));
}

#[test]
fn cube_ideal_examples() {
    assert!(polytope::is_cube_ideal(&fixtures::chain(3)).unwrap().verdict);
    for g in [fixtures::triangle(), fixtures::k4()] {
        assert!(polytope::is_cube_ideal(&cycle_space(&g).unwrap()).unwrap().verdict);
    }
}

#[test]
fn punctured_even_weight_regression() {
    let even = SetSystem::full_cube(4).unwrap().filter(|p| p.weight() % 2 == 0);
    let mut fractional = 0;
    for p in even.points() {
        let s = even.filter(|q| q != *p);
        let v = polytope::is_cube_ideal(&s).unwrap();
        assert_eq!(v.verdict, cube_ideal_oracle(&s));
        fractional += usize::from(!v.verdict);
    }
    assert!(fractional > 0);
    let s = even.filter(|q| q.0 != 0);
    let v = polytope::is_cube_ideal(&s).unwrap();
    assert!(!v.verdict);
    assert_eq!(v.witness, Some(parse_vector("0,1/2,1/2,1/2").unwrap()));
    assert!(matches!(Description::certify(&s), Err(Error::Precondition(_))));
}

#[test]
fn membership_examples() {
    let k4 = Description::certify(&cycle_space(&fixtures::k4()).unwrap()).unwrap();
    assert!(k4.membership(&uniform(6, frac(1, 3))).unwrap());
    for p in k4.set_system().points() {
        assert!(k4.membership(&polytope::point_vector(*p, 6)).unwrap());
    }
    let no_top = Description::certify(&ss(2, &["00", "01", "10"])).unwrap();
    assert!(!no_top.membership(&[int(1), int(1)]).unwrap());
}

#[test]
fn subcube_examples() {
    let k4 = Description::certify(&cycle_space(&fixtures::k4()).unwrap()).unwrap();
    assert_eq!(k4.check_subcube(3).unwrap(), (true, None));
    for n in 1..=4 {
        let cube = Description::certify(&SetSystem::full_cube(n).unwrap()).unwrap();
        for l in 2..6 {
            assert!(cube.check_subcube(l).unwrap().0);
        }
    }
    let chain = Description::certify(&fixtures::chain(3)).unwrap();
    let (ok, corner) = chain.check_subcube(3).unwrap();
    assert!(!ok);
    assert!(!chain.membership(&corner.unwrap()).unwrap());
}

#[test]
fn minimal_face_of_a_vertex() {
    let d = Description::certify(&fixtures::chain(4)).unwrap();
    for p in d.set_system().points() {
        let f = d.minimal_face(&polytope::point_vector(*p, 4)).unwrap();
        assert_eq!(f.dim, 0);
        assert_eq!(f.lattice_points.points(), &[*p]);
    }
}

#[test]
fn half_face_matches_core_and_components() {
    let mut fixtures_two: Vec<SetSystem> = (2..=6).map(fixtures::chain).collect();
    fixtures_two.push(ss(2, &["00", "11"]));
    fixtures_two.push(cycle_space(&fixtures::triangle()).unwrap());
    for s in fixtures_two {
        assert_eq!(gsc::connectivity(&s).unwrap(), Extended::Finite(2));
        let d = Description::certify(&s).unwrap();
        let half = uniform(s.dim(), frac(1, 2));
        let f = d.minimal_face(&half).unwrap();
        assert_eq!(f.dim, gsc::cover_graph(&s).unwrap().components);
        assert_eq!(f.lattice_points, gsc::core_points(&s).unwrap());
        assert_eq!(f.lattice_points, face_oracle(&s, &half));
    }
}

#[test]
fn third_face_of_k4_cycle_space() {
    let s = cycle_space(&fixtures::k4()).unwrap();
    let d = Description::certify(&s).unwrap();
    let x = uniform(6, frac(1, 3));
    let f = d.minimal_face(&x).unwrap();
    assert_eq!(f.lattice_points, face_oracle(&s, &x));
    assert_eq!(f.affine_hull_rank, f.dim + 1);
}

#[test]
fn minimal_face_rejects_outside_points() {
    let d = Description::certify(&fixtures::chain(3)).unwrap();
    let x = [int(0), int(1), int(0)];
    assert!(matches!(d.minimal_face(&x), Err(Error::Precondition(_))));
}

#[test]
fn core_cube_ideal_examples() {
    assert!(polytope::core_is_cube_ideal(&fixtures::chain(3)).unwrap());
    assert!(polytope::core_is_cube_ideal(&cycle_space(&fixtures::triangle()).unwrap()).unwrap());
    for n in 1..=4 {
        assert!(polytope::core_is_cube_ideal(&SetSystem::full_cube(n).unwrap()).unwrap());
    }
}

#[test]
fn convex_combination_reconstructs_the_point() {
    let s = cycle_space(&fixtures::k4()).unwrap();
    let x = uniform(6, frac(1, 3));
    let weights = hull::convex_combination(&s, &x).unwrap().unwrap();
    let total: Rational = weights.iter().map(|(_, w)| w.clone()).sum();
    assert_eq!(total, int(1));
    for (k, xk) in x.iter().enumerate() {
        let v: Rational = weights.iter().filter(|(p, _)| p.get(k)).map(|(_, w)| w.clone()).sum();
        assert_eq!(&v, xk);
    }
    assert!(hull::convex_combination(&ss(2, &["00", "11"]), &[int(1), int(0)]).unwrap().is_none());
}

#[test]
fn empty_system_is_rejected() {
    assert!(polytope::is_cube_ideal(&SetSystem::empty(2).unwrap()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn double_description_matches_basis_enumeration(sys in arb_gsc_system()) {
        let dd = polytope::enumerate_vertices(&sys).unwrap();
        prop_assert_eq!(dd, basis::vertices(sys.dim(), &oracle_rows(&sys)));
    }

    #[test]
    fn cube_ideal_matches_oracle(s in arb_system(4)) {
        prop_assert_eq!(polytope::is_cube_ideal(&s).unwrap().verdict, cube_ideal_oracle(&s));
    }

    #[test]
    fn cube_idealness_is_twist_invariant(s in arb_system(4), q in any::<u64>()) {
        let t = s.twist(Point(q & ((1 << s.dim()) - 1))).unwrap();
        prop_assert_eq!(polytope::is_cube_ideal(&t).unwrap().verdict, polytope::is_cube_ideal(&s).unwrap().verdict);
    }

    #[test]
    fn witnesses_are_feasible_fractional_vertices(s in arb_system(4)) {
        let v = polytope::is_cube_ideal(&s).unwrap();
        if let Some(w) = v.witness {
            let sys = IneqSystem::describe(&s).unwrap();
            prop_assert!(sys.satisfies(&w).unwrap());
            prop_assert!(!w.iter().all(|x| x.is_integer()));
            prop_assert!(hull::convex_combination(&s, &w).unwrap().is_none());
        }
    }
}
