//! Main bound against the classical ones as the diameter varies.
//!
//! cargo run --example bounds -- [n] [K]

use std::f64::consts::PI;

use eigenbound::bounds::{classical_bounds, crossover_diameter, main_bound, BoundParams};

fn main() -> eigenbound::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let k: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1.0);

    let d_max = PI / k.sqrt();
    println!("n = {n}, K = {k}; crossover with nK at d = {:.6}", crossover_diameter(n, k)?);
    println!("{:>8} {:>12} {:>12} {:>12} {:>12} {:>12}", "d", "main", "nK", "pi^2/d^2", "yang", "li (ref)");
    for i in 1..=10 {
        let d = d_max * i as f64 / 10.0;
        let p = BoundParams::new(n, k, d)?;
        let c = classical_bounds(&p)?;
        println!(
            "{d:>8.4} {:>12.6} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
            main_bound(&p)?,
            c.lichnerowicz,
            c.zhong_yang,
            c.yang,
            c.li_conjecture
        );
    }
    Ok(())
}
