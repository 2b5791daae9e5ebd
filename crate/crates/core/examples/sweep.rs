//! Every bound and the comparison claim over n in {2, 3, 5}, K in
//! {0.25, 1, 4}, symmetric and shifted intervals.
//!
//! cargo run --release --example sweep -- [mesh]

use eigenbound::model::{default_sweep, sweep};

fn main() {
    let mesh: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2048);
    let problems = default_sweep(mesh);
    let start = std::time::Instant::now();
    let outcomes = sweep(&problems);
    println!("{} problems at mesh {mesh} in {:.2?}", problems.len(), start.elapsed());
    println!("{:>2} {:>5} {:>9} {:>9} {:>12} {:>10} {:>8}  failed", "n", "K", "left", "right", "lambda1", "a", "delta");
    for (p, r) in problems.iter().zip(outcomes) {
        match r {
            Ok(o) => {
                let failed: Vec<_> = o.checks.iter().filter(|c| !c.pass).map(|c| c.id.as_str()).collect();
                println!(
                    "{:>2} {:>5} {:>9.5} {:>9.5} {:>12.8} {:>10.3e} {:>8.5}  {failed:?}",
                    p.n, p.k, p.left, p.right, o.lambda1_extrapolated, o.a, o.delta
                );
            }
            Err(e) => println!("{:>2} {:>5} {:>9.5} {:>9.5}  error: {e}", p.n, p.k, p.left, p.right),
        }
    }
}
