//! The barrier inequality at a touching point, the two corollary forms with
//! their dropped terms, and the barrier suite.
//!
//! cargo run --release --example barrier

use eigenbound::barrier::{
    barrier_rhs, corollary_rhs, verify_barrier, z_equation_residual, z_min_bound, BarrierPoint, Corollary,
    TestFunctionKind, TestFunctionSpec, DEFAULT_SEED,
};
use eigenbound::check::GridSpec;

fn main() -> eigenbound::Result<()> {
    let p = BarrierPoint::new(0.5, 1.2, 0.1, -0.3, 0.2, 0.1);
    println!("barrier rhs at t0 = {}: {:.15}", p.t0, barrier_rhs(&p)?);
    let shifted = corollary_rhs(&p, Corollary::Shifted)?;
    println!(
        "shifted form: rhs {:.12}, dropped term {:.3e} (nonnegative: {})",
        shifted.rhs, shifted.dropped, shifted.dropped_nonnegative
    );

    let sym = BarrierPoint::new(-0.4, 0.9, -0.2, 0.5, 0.0, 0.2);
    let centred = corollary_rhs(&sym, Corollary::Centered)?;
    println!("centred form (c = 0): rhs {:.12}, dropped {:.3e}", centred.rhs, centred.dropped);

    // z = 1 + c eta + m xi solves its own second-order equation identically
    let spec = TestFunctionSpec::new(TestFunctionKind::MuCombination, 0.3, 0.15)?;
    let worst = (0..=100)
        .map(|i| -1.5 + 0.03 * i as f64)
        .map(|t| z_equation_residual(&spec, t).map(f64::abs))
        .collect::<eigenbound::Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    println!("z-equation residual for c = 0.3, m = 0.15: {worst:.2e}");

    let zb = z_min_bound(0.1, 0.1)?;
    println!(
        "min of 1 + 0.1 eta + 0.1 xi = {:.9} at t = {:.6}, bound B c = {:.9}",
        zb.grid_min, zb.grid_argmin, zb.bound
    );

    let checks = verify_barrier(&GridSpec::chebyshev(1000), 1e-10, DEFAULT_SEED)?;
    for c in &checks {
        println!("  [{}] {:<34} {:>12.3e}", if c.pass { "PASS" } else { "FAIL" }, c.id, c.max_violation);
    }
    Ok(())
}
