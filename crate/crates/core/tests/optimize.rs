mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::seq;
use hypbill::billiard::rotate_sequence;
use hypbill::optimize::{
    avg_length_objective, golden_section, lambert_objective, minimize_lambert, minimize_polygon,
    minimize_polygon_from, nelder_mead, NelderMeadOptions, ObjectiveSpec,
};
use hypbill::polygon::regular_lambert_parameter;
use hypbill::Error;

#[test]
fn nelder_mead_finds_rosenbrock_minimum() {
    let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
    let opts = NelderMeadOptions {
        initial_step: 0.5,
        x_tol: 1e-10,
        max_iterations: 20_000,
    };
    let r = nelder_mead(f, &[-1.2, 1.0], &opts);
    assert!(r.converged);
    assert!((r.x[0] - 1.0).abs() < 1e-6 && (r.x[1] - 1.0).abs() < 1e-6);
}

#[test]
fn golden_section_on_parabola() {
    let (x, v, _) = golden_section(|t| (t - 0.3).powi(2), -1.0, 2.0, 1e-10);
    assert!((x - 0.3).abs() < 1e-8);
    assert!(v < 1e-16);
}

#[test]
fn regular_point_beats_nearby_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (k, s) in [
        (3usize, &[1usize, 4][..]),
        (3, &[1, 3, 5]),
        (4, &[1, 3, 5, 7]),
    ] {
        let spec = ObjectiveSpec::new(k, seq(s)).unwrap();
        let x0 = spec.regular_point();
        let f0 = avg_length_objective(&spec, &x0);
        for eps in [0.01, 0.05, 0.1] {
            for _ in 0..10 {
                let x: Vec<f64> = x0
                    .iter()
                    .map(|v| v * (1.0 + rng.gen_range(-eps..eps)))
                    .collect();
                let f = avg_length_objective(&spec, &x);
                assert!(f >= f0 - 1e-12, "k = {k}, {s:?}, eps = {eps}: {f} < {f0}");
            }
        }
    }
}

#[test]
fn penalty_outside_box_and_domain() {
    let spec = ObjectiveSpec::new(3, seq(&[1, 4])).unwrap();
    let mut x = spec.regular_point();
    x[0] = 0.1;
    assert_eq!(avg_length_objective(&spec, &x), spec.penalty);
    assert_eq!(avg_length_objective(&spec, &[1.0, 1.0]), spec.penalty);
    let octagon = ObjectiveSpec::new(4, seq(&[1, 5])).unwrap();
    let far = [1.58, 1.48, 1.41, 1.51, 1.6];
    assert_eq!(avg_length_objective(&octagon, &far), octagon.penalty);
    assert!(ObjectiveSpec::new(3, seq(&[1, 8])).is_err());
}

#[test]
fn restarting_at_the_minimum_stays_put() {
    let spec = ObjectiveSpec::new(3, seq(&[1, 4])).unwrap();
    let r = minimize_polygon(&spec, 1).unwrap();
    let again = minimize_polygon_from(&spec, &r.argmin).unwrap();
    assert!((again.value - r.value).abs() < 1e-10);
    assert!(again.distance_to_regular < 1e-4);
}

#[test]
fn objective_is_rotation_invariant_at_regular_point() {
    let spec = ObjectiveSpec::new(4, seq(&[1, 4, 7])).unwrap();
    let f0 = avg_length_objective(&spec, &spec.regular_point());
    for j in 1..8 {
        let rotated = ObjectiveSpec::new(4, rotate_sequence(&spec.sequence, j, 8)).unwrap();
        assert!((avg_length_objective(&rotated, &rotated.regular_point()) - f0).abs() < 1e-10);
    }
}

/// Along random lines through the regular hexagon the objective decreases
/// then increases: no interior local maximum among 41 samples.
#[test]
fn objective_is_unimodal_along_lines() {
    let spec = ObjectiveSpec::new(3, seq(&[1, 4])).unwrap();
    let x0 = spec.regular_point();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let mut d: Vec<f64> = (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let n = d.iter().map(|v| v * v).sum::<f64>().sqrt();
        d.iter_mut().for_each(|v| *v /= n);
        let values: Vec<f64> = (0..41)
            .map(|i| {
                let s = -0.2 + 0.4 * i as f64 / 40.0;
                let x: Vec<f64> = x0.iter().zip(&d).map(|(a, b)| a + s * b).collect();
                avg_length_objective(&spec, &x)
            })
            .filter(|v| *v < spec.penalty)
            .collect();
        let descents = values
            .windows(2)
            .skip_while(|w| w[1] <= w[0])
            .filter(|w| w[1] < w[0])
            .count();
        assert_eq!(descents, 0, "{values:?}");
    }
}

#[test]
fn lambert_search_finds_symmetric_parameter() {
    let a = seq(&[1, 3, 1, 3, 1, 4, 3, 4]);
    let r = minimize_lambert(3, &a, (0.2, 2.0)).unwrap();
    let t_star = regular_lambert_parameter(3);
    assert!((r.result.argmin[0] - t_star).abs() < 1e-4);
    assert!(r.result.value <= lambert_objective(3, &a, t_star + 0.01).unwrap());
}

#[test]
fn lambert_search_reports_empty_range() {
    let r = minimize_lambert(3, &seq(&[2, 3, 4]), (0.05, 3.0));
    assert!(matches!(r, Err(Error::EmptyValidRange(_))));
}
