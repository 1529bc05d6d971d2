//! Jump conditions for shocks in conservative and nonconservative form.
//!
//! A conservation law pins its shock speed through the Rankine-Hugoniot
//! ratio. A nonconservative system stated with association pins it through
//! mean-value relations instead, and a system stated with strong equality
//! pins the whole ramp profile. All three appear here on small examples.

use gfshock::gf::Profile;
use gfshock::jump::{
    assoc_jump_residual, integral_jump_speed, k2_jump_residuals, rh_speed, strong_profile_relation,
    AssocEquation, ProfileOde, ShockAnsatz,
};
use gfshock::systems::k2::{k2_riemann, K2State};

fn main() {
    // Burgers: flux u^2/2, so a 1 -> 0 shock moves at 1/2.
    let c = rh_speed(0.5 * (1.0f64 * 1.0 - 0.0), 1.0 - 0.0).unwrap();
    println!("burgers shock speed [u^2/2]/[u] = {c}");

    // Stress model (v, u, sigma): take the left wave of a solved Riemann fan
    // and feed it back through the mean-value jump conditions. The residuals
    // vanish at the wave speed and at no other.
    let k = 0.7;
    let fan = k2_riemann(
        K2State::new(1.2, 0.4, 0.5),
        K2State::new(1.0, 0.0, 0.0),
        k,
    )
    .unwrap();
    let wave = &fan.waves[0];
    println!("\nstress model, left wave of a solved fan (speed {:+.6}):", wave.speed);
    for shift in [0.0, 0.25, -0.25] {
        let ansatz = ShockAnsatz::with_shared_profile(
            wave.left.clone(),
            (0..3).map(|i| wave.jump(i)).collect(),
            wave.speed + shift,
            Profile::linear(),
        );
        let res = k2_jump_residuals(&ansatz, k).unwrap();
        println!("  speed {:+.6}  max residual {:.3e}", wave.speed + shift, res.max_abs());
    }

    // The same check phrased through the generic machinery: the stress
    // equation sigma_t + u sigma_x = k^2 u_x as one AssocEquation, its
    // residual computed from segment means of the coefficients.
    let ansatz = ShockAnsatz::with_shared_profile(
        wave.left.clone(),
        (0..3).map(|i| wave.jump(i)).collect(),
        wave.speed,
        Profile::linear(),
    );
    let eq = AssocEquation {
        target: 2,
        advection: Box::new(|w: &[f64]| w[1]),
        sources: vec![(1, Box::new(move |_: &[f64]| k * k))],
    };
    println!(
        "  stress equation residual via segment means: {:.3e}",
        assoc_jump_residual(&eq, &ansatz).unwrap()
    );

    // Logarithmic model u_t + u u_x = sigma_x, sigma = log rho, stated with
    // strong equality: the speed comes from an integral condition over the
    // whole ramp, and it differs from any endpoint-difference guess.
    let (u_l, u_r, ds) = (0.8, 0.2, -0.9);
    let c_strong = integral_jump_speed(u_l, u_r, ds).unwrap();
    let c_naive = rh_speed(0.5 * (u_r * u_r - u_l * u_l) - ds, u_r - u_l).unwrap();
    println!("\nlog model, u {u_l} -> {u_r}, [sigma] = {ds}:");
    println!("  integral condition speed {c_strong:.8}");
    println!("  naive conservative guess {c_naive:.8}");

    // Strong equality chains profiles. Inserting the traveling-wave ansatz
    // into y_t + u y_x = b u_x with speed c gives
    // (u(t) - c) [y] H_y' = b [u] H_u' on the ramp. The equation fixes both
    // the jump [y] (so that H_y can reach 1) and the shape of H_y, which
    // comes out genuinely different from the driving H_u.
    let (c, b) = (1.1f64, 0.35);
    let (ul, du) = (0.2, 0.5);
    let dy = b * ((ul + du - c) / (ul - c)).ln();
    let driver = Profile::linear();
    let ode = ProfileOde {
        lead: Box::new(move |_t, hu| (ul + du * hu - c) * dy),
        forcing: Box::new(move |_, _| b * du),
        coupling: Box::new(|_, _| 0.0),
    };
    let chained = strong_profile_relation(&ode, &driver).unwrap();
    println!("\nchained profile from a linear driver (values at t = 0.25, 0.5, 0.75):");
    println!(
        "  driver  {:.6} {:.6} {:.6}",
        driver.value(0.25),
        driver.value(0.5),
        driver.value(0.75)
    );
    println!(
        "  chained {:.6} {:.6} {:.6}",
        chained.value(0.25),
        chained.value(0.5),
        chained.value(0.75)
    );
}
