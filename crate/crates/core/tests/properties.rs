mod common;

use common::*;
use proptest::prelude::*;
use txray::document::{Document, Payload};
use txray::geometry::{
    clip2, cone_member, faces3, hull2, ratio, segment_union_covers, strict_feasible, HalfSpace,
    Point2, Point3, Rational,
};
use txray::group::{weyl_reflect, Lambda};
use txray::obstruction::tolman_check;
use txray::scenarios::{gelfand_cetlin, hirzebruch, m2_toric, HnParams};
use txray::xray::{chamber_to_xray, flag_xray, XRay};
use txray::Error;

fn lambda() -> impl Strategy<Value = Lambda> {
    (-6i64..6, 1i64..6, 1i64..6, 1i64..4).prop_map(|(c, b, a, d)| {
        Lambda::new(ratio(c + b + a, d), ratio(c + b, d), ratio(c, d)).unwrap()
    })
}

fn scenario_xrays() -> Vec<XRay> {
    let mut out: Vec<XRay> = (-3..=6)
        .map(|n| hirzebruch(&HnParams::defaults(n).unwrap()).unwrap().xray)
        .collect();
    out.push(m2_toric().unwrap().1);
    out.push(flag_xray(&Lambda::int(5, 1, 0).unwrap()).unwrap());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn hull_matches_extreme_points(pts in prop::collection::vec(half_point(4), 1..10)) {
        let h = hull2(&pts).unwrap();
        let mut got = h.vertices().to_vec();
        got.sort();
        prop_assert_eq!(got, extreme_points(&pts));
        let v = h.vertices();
        if v.len() >= 3 {
            for i in 0..v.len() {
                let (a, b, c) = (v[i], v[(i + 1) % v.len()], v[(i + 2) % v.len()]);
                prop_assert!((b - a).cross(&(c - b)) > Rational::from(0));
            }
        }
    }

    #[test]
    fn hull_is_idempotent(pts in prop::collection::vec(half_point(5), 1..12)) {
        let h = hull2(&pts).unwrap();
        let again = hull2(h.vertices()).unwrap();
        prop_assert_eq!(&again, &h);
        for q in &pts {
            prop_assert!(h.contains(q));
        }
    }

    #[test]
    fn weyl_reflection_is_an_involution(q in half_point(8)) {
        prop_assert_eq!(weyl_reflect(&weyl_reflect(&q)), q);
    }

    #[test]
    fn flag_xray_is_weyl_symmetric(l in lambda()) {
        let x = flag_xray(&l).unwrap();
        prop_assert_eq!(x.reflected().reflected(), x.clone());
        prop_assert_eq!(positions_sorted(&x.reflected()), positions_sorted(&x));
    }

    #[test]
    fn chamber_builder_matches_flag(l in lambda()) {
        let a = chamber_to_xray(&gelfand_cetlin(&l).unwrap()).unwrap();
        prop_assert_eq!(a.canonical(), flag_xray(&l).unwrap().canonical());
    }

    #[test]
    fn euler_characteristic_is_two(pts in prop::collection::vec((-3i64..=3, -3i64..=3, -3i64..=3), 4..14)) {
        let pts: Vec<Point3> = pts.into_iter().map(|(x, y, z)| Point3::int(x, y, z)).collect();
        match faces3(&pts) {
            Ok(p) => prop_assert_eq!(p.euler_characteristic(), 2),
            Err(e) => prop_assert_eq!(e, Error::NotFullDimensional),
        }
    }

    #[test]
    fn cone_member_matches_search(a in small_vector(4), b in small_vector(4), g in small_vector(4)) {
        prop_assume!(!a.is_parallel(&b));
        let inside = cone_member(a, b, g).unwrap();
        prop_assert_eq!(!inside, feasible_by_search(&[a, b], &[g]));
        prop_assert_eq!(!inside, strict_feasible(&[a, b], &[g]));
    }

    #[test]
    fn strict_feasible_matches_search(
        neg in prop::collection::vec(small_vector(3), 0..3),
        pos in prop::collection::vec(small_vector(3), 0..3),
    ) {
        prop_assert_eq!(strict_feasible(&neg, &pos), feasible_by_search(&neg, &pos));
    }

    #[test]
    fn union_cover_matches_midpoints(
        a in small_point(6), b in small_point(6),
        cuts in prop::collection::vec((0i64..=6, 0i64..=6), 0..5),
    ) {
        prop_assume!(a != b);
        let face = txray::geometry::Segment::new(a, b);
        let at = |t: i64| a + (b - a).scale(Rational::new(t, 6));
        let pieces: Vec<_> = cuts.iter().map(|&(s, t)| txray::geometry::Segment::new(at(s), at(t))).collect();
        prop_assert_eq!(segment_union_covers(&face, &pieces), covered_by_midpoints(&face, &pieces));
    }

    #[test]
    fn chamber_round_trip(l in lambda()) {
        let d = Document::new(Payload::Chamber(gelfand_cetlin(&l).unwrap()), "prop");
        prop_assert_eq!(Document::decode(&d.encode()).unwrap(), d);
        let x = Document::new(Payload::XRay(flag_xray(&l).unwrap()), "prop");
        prop_assert_eq!(Document::decode(&x.encode()).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn clip_matches_classification(
        pts in prop::collection::vec(small_point(5), 3..9),
        nx in -3i64..=3, ny in -3i64..=3, level in -10i64..=10, den in 1i64..=3,
    ) {
        let poly = hull2(&pts).unwrap();
        prop_assume!(poly.dimension() == 2 && (nx, ny) != (0, 0));
        let n = txray::geometry::LatticeVector::new(nx, ny).primitive().unwrap();
        let hs = HalfSpace::new(n, ratio(level, den)).unwrap();
        let oracle = hull2(&clip_candidates(&poly, &hs));
        match clip2(&poly, &hs) {
            Ok(c) => {
                let want = oracle.unwrap();
                prop_assert_eq!(c.vertices(), want.vertices());
                for v in c.vertices() {
                    prop_assert!(hs.contains(v) && poly.contains(v));
                }
            }
            Err(Error::EmptyCut) => prop_assert!(oracle.is_err()),
            Err(Error::DegenerateCut) => prop_assert!(oracle.unwrap().dimension() < 2),
            Err(e) => prop_assert!(false, "unexpected {e:?}"),
        }
    }

    #[test]
    fn edge_deletion_is_monotone(which in 0usize..12, k in 0usize..32) {
        let xs = scenario_xrays();
        let x = &xs[which % xs.len()];
        let before = tolman_check(x).unwrap();
        let k = k % x.edges().len();
        let after = tolman_check(&x.without_edge(k)).unwrap();
        if before.is_obstructed() {
            prop_assert!(after.is_obstructed());
        }
        for c in before.certificates() {
            prop_assert!(after.certificates().iter().any(|d| d.same_geometry(c)));
        }
    }
}

#[test]
fn certificates_are_sound() {
    for x in scenario_xrays() {
        let pieces = x.segments();
        for c in tolman_check(&x).unwrap().certificates() {
            assert!(!covered_by_midpoints(&c.uncovered_face, &pieces), "{c}");
            assert!(!pieces
                .iter()
                .any(|s| s.contains(&c.uncovered_face.a) && s.contains(&c.uncovered_face.b)));
            assert_eq!(hull2(&c.contained_points).unwrap(), c.delta_cand);
            assert!(c.delta_cand.vertices().contains(&c.candidate.apex));
            let face = [c.uncovered_face.a, c.uncovered_face.b];
            assert!(!face.contains(&c.candidate.apex), "face at the apex in {c}");
        }
    }
}

#[test]
fn certificates_come_in_weyl_pairs() {
    for n in 2..=6 {
        let v = hirzebruch(&HnParams::defaults(n).unwrap()).unwrap().verdict;
        for c in v.certificates() {
            let m = c.reflected();
            assert!(
                v.certificates().iter().any(|d| d.same_geometry(&m)),
                "n = {n}: {c}"
            );
        }
    }
}

#[test]
fn hull_oracle_on_collinear_and_repeated_points() {
    let pts = [
        p(0, 0),
        p(2, 2),
        p(1, 1),
        p(2, 2),
        Point2::new(ratio(1, 2), ratio(1, 2)),
    ];
    let mut got = hull2(&pts).unwrap().vertices().to_vec();
    got.sort();
    assert_eq!(got, extreme_points(&pts));
}
