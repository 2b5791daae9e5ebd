//! Derived constants next to the values printed with them.
//!
//! cargo run --example constants

use eigenbound::bounds::{constants, crossover_diameter, guaranteed_coefficient, n2_threshold_identity, printed};

fn main() {
    let k = constants();
    println!("tau                         {:.15}", k.tau);
    println!("mu                          {:.15}  (printed range [{}, {}])", k.mu, printed::MU_LOW, printed::MU_HIGH);
    println!(
        "B in min z >= B c           {:.15}  (printed {})",
        k.z_min_coefficient,
        printed::Z_MIN_COEFFICIENT
    );
    println!("sigma c^2/delta at c=1.53d  {:.15}  (printed {})", k.sigma_ratio_at_nu, printed::SIGMA_RATIO);
    println!(
        "delta - sigma c^2           {:.15}  (printed {})",
        k.delta_minus_sigma_coefficient,
        printed::DELTA_MINUS_SIGMA_FULL
    );
    println!("sigma-tilde c^2 / delta <=  {:.15}", k.sigma_tilde_bound_coefficient);

    let (lhs, rhs, holds) = n2_threshold_identity();
    println!("(20 - pi^2)/16 = {lhs:.12} > pi^2/16 = {rhs:.12}: {holds}");

    for n in [2, 3, 5, 10] {
        println!(
            "n = {n:>2}: coefficient {:.3}, main bound beats nK for d < {:.6} at K = 1",
            guaranteed_coefficient(n),
            crossover_diameter(n, 1.0).unwrap()
        );
    }
}
