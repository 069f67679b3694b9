mod common;

use std::f64::consts::{FRAC_PI_2, PI};

use proptest::prelude::*;

use common::{arc_tangent, closing_sides_oracle, geodesic_distance, vector_angle};
use hypbill::hypgeo::{dist, HPoint, Isometry};
use hypbill::polygon::{
    glue_lambert, green_diagonals, lambert_quad, polygon_from_sides, regular_lambert,
    regular_lambert_parameter, regular_polygon, regular_side_length, GlueRole, LambertQuad,
};
use hypbill::Error;

/// Interior angle at `v` between the arcs to `prev` and `next`.
fn corner_angle(prev: HPoint, v: HPoint, next: HPoint) -> f64 {
    vector_angle(arc_tangent(v, prev), arc_tangent(v, next))
}

#[test]
fn hexagon_law_of_cosines() {
    for free in [[1.2, 1.4, 1.1], [1.3, 1.3, 1.3], [0.9, 1.6, 1.5]] {
        let p = polygon_from_sides(3, &free, None).unwrap();
        let s = p.side_lengths();
        for i in 0..6 {
            let (a, g, b, opp) = (s[i], s[(i + 1) % 6], s[(i + 2) % 6], s[(i + 4) % 6]);
            let rhs = a.sinh() * b.sinh() * g.cosh() - a.cosh() * b.cosh();
            assert!(
                (opp.cosh() - rhs).abs() < 1e-9 * rhs.abs().max(1.0),
                "free {free:?}, side {i}"
            );
        }
    }
}

#[test]
fn octagon_angles_are_right() {
    let p = polygon_from_sides(4, &[1.5, 1.6, 1.45, 1.55, 1.52], None).unwrap();
    let v = p.table().vertices();
    for i in 0..8 {
        let a = corner_angle(v[(i + 7) % 8], v[i], v[(i + 1) % 8]);
        assert!((a - FRAC_PI_2).abs() < 1e-9, "vertex {i}: {a}");
    }
}

#[test]
fn huge_sides_are_rejected() {
    let r = polygon_from_sides(3, &[1e3, 1.0, 1.0], None);
    assert!(r.is_err());
    assert!(matches!(
        polygon_from_sides(3, &[-1.0, 1.0, 1.0], None),
        Err(Error::Domain(_))
    ));
}

#[test]
fn regular_polygon_has_rotational_symmetry() {
    for k in 3..=6 {
        let p = regular_polygon(k).unwrap();
        let rotated = p.table().image(&Isometry::rotation(PI / k as f64)).unwrap();
        for v in rotated.vertices() {
            let nearest = p
                .table()
                .vertices()
                .iter()
                .map(|w| dist(*v, *w))
                .fold(f64::MAX, f64::min);
            assert!(nearest < 1e-10);
        }
        let area = p.table().area();
        assert!((area - (k as f64 - 2.0) * PI).abs() < 1e-9);
    }
}

#[test]
fn green_arcs_are_orthogeodesics() {
    let p = polygon_from_sides(5, &[1.6, 1.55, 1.65, 1.6, 1.58, 1.62, 1.57], None).unwrap();
    let t = p.table();
    let arcs = green_diagonals(&p).unwrap().arcs;
    assert_eq!(
        arcs.iter().map(|a| a.target).collect::<Vec<_>>(),
        vec![5, 7]
    );
    for arc in arcs {
        let (s1, sj) = (t.side(1), t.side(arc.target));
        let oracle = geodesic_distance(&s1.geodesic(), &sj.geodesic());
        assert!((arc.length - oracle).abs() < 1e-8);
        assert!((dist(arc.foot1, arc.foot2) - arc.length).abs() < 1e-10);
        let a1 = vector_angle(
            arc_tangent(arc.foot1, arc.foot2),
            arc_tangent(arc.foot1, s1.end()),
        );
        let a2 = vector_angle(
            arc_tangent(arc.foot2, arc.foot1),
            arc_tangent(arc.foot2, sj.end()),
        );
        assert!((a1 - FRAC_PI_2).abs() < 1e-8 && (a2 - FRAC_PI_2).abs() < 1e-8);
    }
}

#[test]
fn regular_green_arcs_agree() {
    let p = regular_polygon(6).unwrap();
    let arcs = green_diagonals(&p).unwrap().arcs;
    assert_eq!(arcs.len(), 3);
    // Targets 5 and 9 sit symmetrically about side 1.
    assert!((arcs[0].length - arcs[2].length).abs() < 1e-10);
}

#[test]
fn lambert_quadrilateral_geometry() {
    for k in [3usize, 4, 6] {
        for t in [0.4, 0.7, 1.2] {
            let q = lambert_quad(k, t).unwrap();
            assert!((q.a() - t).abs() < 1e-10);
            let acute = PI / k as f64;
            assert!((q.a().sinh() * q.b().sinh() - acute.cos()).abs() < 1e-10);
            let v = q.table().vertices();
            let i = q.acute_vertex_index();
            for j in 0..4 {
                let a = corner_angle(v[(j + 3) % 4], v[j], v[(j + 1) % 4]);
                let want = if j == i { acute } else { FRAC_PI_2 };
                assert!((a - want).abs() < 1e-9, "k = {k}, t = {t}, vertex {j}");
            }
            assert!((q.table().area() - (FRAC_PI_2 - acute)).abs() < 1e-9);
            assert_eq!(LambertQuad::expected_angles(k)[i], acute);
        }
    }
}

#[test]
fn symmetric_lambert_has_equal_legs() {
    for k in [3usize, 4, 5] {
        let q = regular_lambert(k).unwrap();
        assert!((q.a() - q.b()).abs() < 1e-10);
        assert!((q.t().sinh().powi(2) - (PI / k as f64).cos()).abs() < 1e-12);
        assert_eq!(q.t(), regular_lambert_parameter(k));
    }
    assert!(lambert_quad(3, -0.1).is_err());
}

#[test]
fn glued_lambert_gives_alternating_polygon() {
    let q = lambert_quad(4, 0.8).unwrap();
    let g = glue_lambert(&q).unwrap();
    assert_eq!(g.num_copies(), 8);
    let sides = g.polygon().side_lengths();
    for (i, s) in sides.iter().enumerate() {
        let want = if i % 2 == 0 { 2.0 * q.a() } else { 2.0 * q.b() };
        assert!((s - want).abs() < 1e-9, "side {}: {s} vs {want}", i + 1);
    }
    let centre = g
        .copy(0)
        .apply(q.table().vertices()[q.acute_vertex_index()]);
    for j in 0..8 {
        let c = g
            .copy(j)
            .apply(q.table().vertices()[q.acute_vertex_index()]);
        assert!(dist(c, centre) < 1e-9);
        for label in 1..=4 {
            if let GlueRole::Spoke { neighbor } = g.role(j, label) {
                assert!(
                    matches!(g.role(neighbor, label), GlueRole::Spoke { neighbor: back } if back == j)
                );
            }
        }
    }
}

#[test]
fn glued_symmetric_lambert_is_regular() {
    for k in [3usize, 4] {
        let g = glue_lambert(&regular_lambert(k).unwrap()).unwrap();
        let p = regular_polygon(k).unwrap();
        for (a, b) in g.polygon().side_lengths().iter().zip(p.side_lengths()) {
            assert!((a - b).abs() < 1e-9);
        }
        let rotated = g
            .polygon()
            .table()
            .image(&Isometry::rotation(2.0 * PI / k as f64))
            .unwrap();
        for v in rotated.vertices() {
            let nearest = g
                .polygon()
                .table()
                .vertices()
                .iter()
                .map(|w| dist(*v, *w))
                .fold(f64::MAX, f64::min);
            assert!(nearest < 1e-9);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solver_agrees_with_hyperboloid_construction(k in 3usize..6, eps in prop::collection::vec(-0.08..0.08f64, 7)) {
        let s0 = regular_side_length(k);
        let free: Vec<f64> = eps[..2 * k - 3].iter().map(|e| s0 * (1.0 + e)).collect();
        let solved = polygon_from_sides(k, &free, None);
        match closing_sides_oracle(&free) {
            None => prop_assert!(solved.is_err()),
            Some(want) => {
                let p = solved.unwrap();
                let s = p.side_lengths();
                for i in 0..3 {
                    prop_assert!((s[2 * k - 3 + i] - want[i]).abs() < 1e-9);
                }
                prop_assert!(p.holonomy_residual() < 1e-10);
            }
        }
    }

    #[test]
    fn side_vector_round_trips(k in 3usize..6, eps in prop::collection::vec(-0.05..0.05f64, 7)) {
        let s0 = regular_side_length(k);
        let free: Vec<f64> = eps[..2 * k - 3].iter().map(|e| s0 * (1.0 + e)).collect();
        prop_assume!(closing_sides_oracle(&free).is_some());
        let p = polygon_from_sides(k, &free, None).unwrap();
        for (a, b) in p.free_sides().iter().zip(&free) {
            prop_assert!((a - b).abs() < 1e-9);
        }
    }
}
