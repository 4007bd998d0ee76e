use cnext::extend2d::{
    normal_continuity, parse_boundary_samples, tube_project, Extension2D, ParametricCurve, Point2, Region,
};
use cnext::scheme::ExtensionScheme;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

type Field = Box<dyn Fn(Point2) -> f64>;

fn curves() -> Vec<(&'static str, ParametricCurve)> {
    let c = Point2::new(0.1, -0.2);
    vec![
        ("circle", ParametricCurve::circle(c, 1.0).unwrap()),
        ("ellipse", ParametricCurve::ellipse(c, 1.5, 1.0).unwrap()),
        ("star", ParametricCurve::star(c, 1.0, 0.2, 5).unwrap()),
    ]
}

/// A point in the tube: `(theta, signed distance, position)`.
fn tube_point(rng: &mut ChaCha8Rng, curve: &ParametricCurve, reach: f64, outside_only: bool) -> (f64, f64, Point2) {
    let theta = rng.gen_range(0.0..TAU);
    let lo = if outside_only { 0.0 } else { -reach };
    let x = rng.gen_range(lo..reach);
    (theta, x, curve.position(theta) + curve.normal(theta) * x)
}

fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

#[test]
fn chart_is_consistent_on_random_tube_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, curve) in curves() {
        let reach = curve.default_reach();
        for _ in 0..1000 {
            let (theta, x, q) = tube_point(&mut rng, &curve, 0.99 * reach, false);
            let tc = tube_project(&curve, q, reach).unwrap();
            assert!(tc.valid);
            assert!((tc.x - x).abs() <= 1e-10, "{name}: x {x} -> {}", tc.x);
            let back = curve.position(tc.theta) + curve.normal(tc.theta) * tc.x;
            assert!((back - q).norm() <= 1e-10, "{name}: reconstruct {q:?} -> {back:?}");
            let speed = curve.jet(theta).dp.norm();
            assert!(angle_gap(tc.theta, theta) * speed <= 1e-9, "{name}: theta {theta} -> {}", tc.theta);
        }
    }
}

/// Random polynomial of total degree `deg` with coefficients in [-1, 1].
fn random_poly(rng: &mut ChaCha8Rng, deg: usize) -> Vec<(f64, i32, i32)> {
    let mut terms = Vec::new();
    for i in 0..=deg {
        for j in 0..=deg - i {
            terms.push((rng.gen_range(-1.0..1.0), i as i32, j as i32));
        }
    }
    terms
}

fn eval_poly(terms: &[(f64, i32, i32)], p: Point2) -> f64 {
    terms.iter().map(|&(c, i, j)| c * p.x.powi(i) * p.y.powi(j)).sum()
}

#[test]
fn total_degree_polynomials_are_reproduced_in_the_tube() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, curve) in curves() {
        for n in [1, 3, 5] {
            let ext = Extension2D::with_default_reach(curve.clone(), ExtensionScheme::optimal(n, 2.0).unwrap(), None).unwrap();
            for _ in 0..20 {
                let poly = random_poly(&mut rng, n);
                let f = |p: Point2| eval_poly(&poly, p);
                let scale = poly.iter().map(|t| t.0.abs()).sum::<f64>() * 2.5f64.powi(n as i32);
                for _ in 0..20 {
                    let (_, _, q) = tube_point(&mut rng, &curve, 0.99 * ext.reach(), true);
                    let (v, r) = ext.value_at(&f, q).unwrap();
                    assert_eq!(r, Region::Tube);
                    assert!((v - f(q)).abs() <= 1e-8 * scale, "{name} n={n}: {v} vs {}", f(q));
                }
            }
        }
    }
}

#[test]
fn extension_commutes_with_rotation() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let angle = 0.7;
    let f = |p: Point2| (1.3 * p.x).sin() * (0.4 * p.y).exp() + p.x * p.y;
    let f_rot = |p: Point2| f(p.rotated(angle));
    for (name, curve) in curves() {
        let scheme = ExtensionScheme::optimal(4, 2.0).unwrap();
        let reach = curve.default_reach();
        let ext = Extension2D::new(curve.clone(), scheme.clone(), reach, None).unwrap();
        let ext_rot = Extension2D::new(curve.rotated(angle).unwrap(), scheme, reach, None).unwrap();
        for _ in 0..200 {
            let (_, _, q) = tube_point(&mut rng, &curve, 0.99 * reach, true);
            let (a, _) = ext.value_at(&f_rot, q).unwrap();
            let (b, _) = ext_rot.value_at(&f, q.rotated(angle)).unwrap();
            assert!((a - b).abs() <= 1e-11 * (1.0 + a.abs()), "{name}: {a} vs {b}");
        }
    }
}

#[test]
fn demo_continuity_reports_pass() {
    let o = Point2::default();
    let cases: Vec<(ParametricCurve, usize, Field)> = vec![
        (ParametricCurve::circle(o, 1.0).unwrap(), 3, Box::new(|_| 1.0)),
        (ParametricCurve::ellipse(o, 1.5, 1.0).unwrap(), 3, Box::new(|p: Point2| p.x + 2.0 * p.y)),
        (ParametricCurve::star(o, 1.0, 0.2, 5).unwrap(), 4, Box::new(|p: Point2| p.x.sin() * p.y.exp())),
    ];
    for (curve, n, f) in cases {
        let ext = Extension2D::with_default_reach(curve, ExtensionScheme::optimal(n, 2.0).unwrap(), None).unwrap();
        let report = normal_continuity(&ext, &*f, 32).unwrap();
        assert_eq!(report.orders.len(), n + 1);
        assert!(report.passes(), "{report:?}");
    }
}

#[test]
fn sampled_curve_matches_analytic_curve() {
    let m = 64;
    let text: String = (0..m)
        .map(|j| {
            let t = TAU * j as f64 / m as f64;
            format!("{:.17e} {:.17e}\n", 1.5 * t.cos(), t.sin())
        })
        .collect();
    let pts = parse_boundary_samples(&text).unwrap();
    let sampled = ParametricCurve::from_samples(&pts).unwrap();
    let exact = ParametricCurve::ellipse(Point2::default(), 1.5, 1.0).unwrap();
    assert!((sampled.max_curvature() - exact.max_curvature()).abs() < 1e-10);
    let f = |p: Point2| p.x * p.x - p.y;
    let scheme = ExtensionScheme::optimal(3, 2.0).unwrap();
    let e1 = Extension2D::new(sampled, scheme.clone(), 0.3, None).unwrap();
    let e2 = Extension2D::new(exact, scheme, 0.3, None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let q = Point2::new(rng.gen_range(-2.0..2.0), rng.gen_range(-1.5..1.5));
        let (a, ra) = e1.value_at(&f, q).unwrap();
        let (b, rb) = e2.value_at(&f, q).unwrap();
        assert_eq!(ra, rb);
        assert!((a - b).abs() < 1e-9, "{q:?}: {a} vs {b}");
    }
    // clockwise input describes the same domain
    let rev: Vec<Point2> = pts.iter().rev().cloned().collect();
    let c = ParametricCurve::from_samples(&rev).unwrap();
    let e3 = Extension2D::new(c, ExtensionScheme::optimal(3, 2.0).unwrap(), 0.3, None).unwrap();
    assert!(e3.contains(Point2::default()).unwrap());
    assert!(!e3.contains(Point2::new(1.6, 0.0)).unwrap());
}
