//! Values and derivative jets of xi, eta and r = xi'/eta', including the
//! endpoint limits where the closed forms are 0/0.
//!
//! cargo run --example test_functions

use std::f64::consts::FRAC_PI_2;

use eigenbound::special::{eta_jet, ratio_r, xi_jet, xi_jet_ode_route, ENDPOINT};

fn main() -> eigenbound::Result<()> {
    println!("{:>10} {:>16} {:>16} {:>16} {:>16} {:>16}", "t", "xi", "xi'", "eta", "eta'", "r");
    for i in 0..=8 {
        let t = -FRAC_PI_2 + i as f64 * FRAC_PI_2 / 4.0;
        let (x, e) = (xi_jet(t)?, eta_jet(t)?);
        println!(
            "{t:>10.6} {:>16.12} {:>16.12} {:>16.12} {:>16.12} {:>16.12}",
            x.f,
            x.f1,
            e.f,
            e.f1,
            ratio_r(t)?
        );
    }

    println!("\nlimits at pi/2:");
    println!("  xi'   = {:.15}", ENDPOINT.xi1_end);
    println!("  xi''  = {:.15}", ENDPOINT.xi2_end);
    println!("  eta'' = {:.15}", ENDPOINT.eta2_end);
    println!("  r     = {:.15}", ENDPOINT.r_end);
    println!("  r'    = {:.15}", ENDPOINT.r1_end);

    // the ODE route reproduces the Taylor-mode jet away from the ends
    let t = 0.9;
    let (direct, ode) = (xi_jet(t)?, xi_jet_ode_route(t)?);
    println!(
        "\nxi''' at t = {t}: jet {:.15}, ODE route {:.15}, difference {:.2e}",
        direct.f3,
        ode.f3,
        (direct.f3 - ode.f3).abs()
    );
    Ok(())
}
