use std::f64::consts::{FRAC_PI_2, PI};

use eigenbound::barrier::{TestFunctionKind, TestFunctionSpec};
use eigenbound::model::{
    check_comparison, compute_z, comparison_spec, richardson_ratio, solve_first_neumann, ModelProblem, Theorem,
    DEFAULT_B,
};

fn sphere(n: u32, mesh: usize) -> ModelProblem {
    ModelProblem::new(n, 1.0, -FRAC_PI_2 + 1e-9, FRAC_PI_2 - 1e-9, mesh).unwrap()
}

// closed form of 1 - pi^2/4 + 2 t sin cos / cos^2 + ... evaluated independently of the library
fn xi_closed(t: f64) -> f64 {
    let c = t.cos();
    (c * c + 2.0 * t * t.sin() * c + t * t - PI * PI / 4.0) / (c * c)
}

#[test]
fn flat_profile_is_one() {
    let sol = solve_first_neumann(&ModelProblem::symmetric(2, 1e-12, 2.0, 4096).unwrap()).unwrap();
    let zs = compute_z(&sol, 1.0).unwrap();
    let worst = zs.z.iter().map(|z| (z - 1.0).abs()).fold(0.0, f64::max);
    assert!(worst < 1e-6, "max |Z - 1| = {worst:e}");
    // the cosine profile
    let d = 2.0;
    for (s, v) in sol.s.iter().zip(sol.centered()).step_by(97) {
        assert!((v - (PI * s / d).sin()).abs() < 1e-6, "v({s}) = {v}");
    }
}

#[test]
fn sphere_profile_is_one_over_n() {
    for n in [2u32, 3, 5] {
        let target = 1.0 / n as f64;
        let mut layer = Vec::new();
        for mesh in [1024, 4096] {
            let sol = solve_first_neumann(&sphere(n, mesh)).unwrap();
            let zs = compute_z(&sol, 1.0).unwrap();
            let err: Vec<f64> = zs.z.iter().map(|z| (z - target).abs()).collect();
            assert!(err.iter().cloned().fold(0.0, f64::max) < 5e-2, "n = {n}, mesh {mesh}");
            // the pole layer where Z departs from 1/n is a fixed number of cells
            layer.push(err.iter().filter(|&&e| e > 1e-3).count());
            let m = err.len();
            let interior = err[64..m - 64].iter().cloned().fold(0.0, f64::max);
            assert!(interior < 5e-4, "n = {n}, mesh {mesh}: interior error {interior:e}");
            assert!(err[m / 2] < 2e-5);
        }
        assert!(layer[0] == layer[1] && layer[1] < 64, "n = {n}: layer widths {layer:?}");
    }
}

#[test]
fn sphere_three_against_symmetric_comparison() {
    let sol = solve_first_neumann(&sphere(3, 2048)).unwrap();
    assert_eq!(sol.a, 0.0);
    let delta = 1.0 / 3.0;
    assert!((sol.delta - delta).abs() < 1e-6);
    let spec = comparison_spec(0.0, delta, 3, DEFAULT_B, Some(Theorem::Symmetric)).unwrap();
    assert_eq!(spec.kind, TestFunctionKind::XiOnly);
    let min_z = spec.value(0.0).unwrap();
    assert!((min_z - (1.0 + delta * xi_closed(0.0))).abs() < 1e-14);
    assert!((min_z - 0.5109).abs() < 1e-4);
    assert!(check_comparison(&sol, &spec, DEFAULT_B, 1e-6).unwrap().pass);
}

#[test]
fn flat_profile_touches_its_comparison() {
    let sol = solve_first_neumann(&ModelProblem::symmetric(2, 1e-12, 2.0, 4096).unwrap()).unwrap();
    let spec = TestFunctionSpec::xi_only(sol.delta).unwrap();
    let check = check_comparison(&sol, &spec, 1.0, 1e-6).unwrap();
    assert!(check.pass);
    assert!(check.max_violation > -1e-6, "equality expected, margin {}", check.max_violation);
}

#[test]
fn asymmetric_model_shift_and_comparison() {
    let sol = solve_first_neumann(&ModelProblem::new(3, 1.0, -0.6, 1.0, 2048).unwrap()).unwrap();
    assert!(sol.a > 0.1);
    let spec = comparison_spec(sol.a, sol.delta.min(1.0 / 3.0), 3, DEFAULT_B, Some(Theorem::Mu)).unwrap();
    assert!(check_comparison(&sol, &spec, DEFAULT_B, 1e-6).unwrap().pass);
}

#[test]
fn second_order_convergence() {
    let problems = [
        ModelProblem::symmetric(2, 1e-12, 2.0, 256).unwrap(),
        ModelProblem::new(3, 1.0, -0.6, 1.0, 256).unwrap(),
        ModelProblem::new(5, 0.25, -1.0, 2.5, 256).unwrap(),
        sphere(2, 256),
    ];
    for p in problems {
        let ratio = richardson_ratio(&p).unwrap();
        assert!((3.0..=5.0).contains(&ratio), "{p:?}: ratio {ratio}");
    }
}

#[test]
fn gradient_estimate_shadow() {
    for p in [
        ModelProblem::new(3, 1.0, -0.6, 1.0, 2048).unwrap(),
        ModelProblem::new(2, 4.0, -0.7, 0.2, 2048).unwrap(),
        sphere(5, 2048),
    ] {
        let sol = solve_first_neumann(&p).unwrap();
        let zs = compute_z(&sol, DEFAULT_B).unwrap();
        let cap = sol.lambda1 * (1.0 + sol.a) * (1.0 + 1e-6);
        let worst = zs.gradient_ratio.iter().cloned().fold(0.0, f64::max);
        assert!(worst <= cap, "{p:?}: {worst} > {cap}");
        assert!(sol.residual < 1e-6);
    }
}
