//! Runs every identity and inequality about xi, eta and r on a Chebyshev
//! grid and prints the checks with the smallest margin.
//!
//! cargo run --release --example lemma_suite -- [nodes] [tol]

use eigenbound::check::GridSpec;
use eigenbound::lemmas::verify_lemmas;

fn main() -> eigenbound::Result<()> {
    let mut args = std::env::args().skip(1);
    let nodes: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(10_000);
    let tol: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1e-9);

    let start = std::time::Instant::now();
    let mut checks = verify_lemmas(&GridSpec::chebyshev(nodes), tol)?;
    let elapsed = start.elapsed();

    let failed = checks.iter().filter(|c| !c.pass).count();
    println!("{} checks on {nodes} nodes in {elapsed:.2?}, {failed} failed", checks.len());

    checks.sort_by(|a, b| (b.max_violation - b.tolerance).total_cmp(&(a.max_violation - a.tolerance)));
    println!("\ntightest margins:");
    for c in checks.iter().take(8) {
        println!(
            "  {:<28} {:>12.3e} at t = {:>9.5}  {}",
            c.id, c.max_violation, c.worst_t, c.anchor
        );
    }
    Ok(())
}
