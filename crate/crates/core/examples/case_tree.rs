//! Which comparison function certifies each (a, delta), and the coefficient
//! of (n - 1) K it yields.
//!
//! cargo run --example case_tree -- [n]

use std::collections::BTreeMap;

use eigenbound::bounds::{case_select, guaranteed_coefficient};

fn main() -> eigenbound::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let delta_max = (n - 1) as f64 / (2 * n) as f64;
    let steps = 200;

    let mut counts = BTreeMap::new();
    let mut worst = f64::INFINITY;
    for i in 0..steps {
        let a = i as f64 / steps as f64;
        for j in 1..=steps {
            let delta = delta_max * j as f64 / steps as f64;
            match case_select(a, delta, n) {
                Ok(dec) => {
                    *counts.entry(dec.label.as_str()).or_insert(0) += 1;
                    worst = worst.min(dec.coefficient);
                }
                Err(_) => *counts.entry("error").or_insert(0) += 1,
            }
        }
    }
    println!("n = {n}, {steps} x {steps} grid over a in [0, 1), delta in (0, {delta_max:.4}]");
    for (label, count) in &counts {
        println!("  {label:<12} {count:>6}");
    }
    println!("smallest coefficient {worst:.9} (guaranteed {})", guaranteed_coefficient(n));

    let dec = case_select(0.3, 0.25, n)?;
    println!("\na = 0.3, delta = 0.25: case {} with coefficient {:.12}", dec.label.as_str(), dec.coefficient);
    println!("  {}", dec.applicable_theorem);
    for (k, v) in &dec.chain {
        println!("  {k} = {v:.12}");
    }
    Ok(())
}
