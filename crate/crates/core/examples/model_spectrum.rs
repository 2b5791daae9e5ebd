//! First Neumann eigenvalue of the weighted interval -(w v')' = lambda w v,
//! w = cos^{n-1}(sqrt(K) s), against the flat and sphere oracles.
//!
//! cargo run --release --example model_spectrum

use std::f64::consts::{FRAC_PI_2, PI};

use eigenbound::model::{richardson_ratio, solve_first_neumann, ModelProblem};

fn main() -> eigenbound::Result<()> {
    let mesh = 4096;

    let d = 2.0;
    let flat = solve_first_neumann(&ModelProblem::symmetric(2, 1e-12, d, mesh)?)?;
    let exact = PI * PI / (d * d);
    println!(
        "flat d = {d}: lambda {:.12} (extrapolated {:.12}), pi^2/d^2 = {exact:.12}",
        flat.lambda1, flat.lambda1_extrapolated
    );

    for n in [2u32, 3, 5] {
        let p = ModelProblem::new(n, 1.0, -FRAC_PI_2 + 1e-9, FRAC_PI_2 - 1e-9, mesh)?;
        let sol = solve_first_neumann(&p)?;
        println!(
            "sphere n = {n}: lambda {:.12}, extrapolated {:.12}, relative error {:.2e}, Richardson ratio {:.4}",
            sol.lambda1,
            sol.lambda1_extrapolated,
            (sol.lambda1 - n as f64) / n as f64,
            richardson_ratio(&p)?
        );
    }

    // shifting the interval breaks the odd symmetry, so a > 0
    let p = ModelProblem::new(3, 1.0, -0.6, 1.0, mesh)?;
    let sol = solve_first_neumann(&p)?;
    println!(
        "n = 3 on [-0.6, 1.0]: lambda {:.12}, sup v = 1, inf v = -{:.9}, a = {:.9}, delta = {:.9}",
        sol.lambda1, sol.k, sol.a, sol.delta
    );
    Ok(())
}
