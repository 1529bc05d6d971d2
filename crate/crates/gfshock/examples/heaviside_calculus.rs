//! Ramp calculus on regularized Heaviside steps: which moments depend on the
//! ramp shape, which do not, and what association does and does not see.

use gfshock::gf::{
    association_check, moment_integral, Profile, RampPoly, RegularizedExpr, RegularizedStep,
    TestFunction,
};

fn main() {
    let shapes = [
        ("linear ramp", Profile::linear()),
        (
            "cubic ramp",
            Profile::from_fn(64, |t| t * t * (3.0 - 2.0 * t)).unwrap(),
        ),
        ("random ramp", Profile::random_monotone(48, 7)),
    ];

    // integral (H^2 - H) H' dx: the basic obstruction to H^2 = H. The value
    // is -1/6 for every ramp shape because both factors share the profile.
    let h2_minus_h = RampPoly::new(vec![(1.0, 0, 2), (-1.0, 0, 1)]);
    println!("shared-profile moment integral (H^2 - H) H' dx:");
    for (name, p) in &shapes {
        println!("  {name:12} {:+.12}", moment_integral(&h2_minus_h, p, p));
    }
    println!("  exact        {:+.12}", h2_minus_h.diagonal_integral());

    // The same moment with two different profiles is shape-dependent: there
    // is no substitution rule for integral (H_a^2 - H_a) H_b' dx.
    let a = &shapes[0].1;
    println!("\nmixed-profile moment integral (H_a^2 - H_a) H_b' dx:");
    let f_mixed = RampPoly::new(vec![(1.0, 2, 0), (-1.0, 1, 0)]);
    for (name, b) in &shapes {
        println!("  a = linear, b = {name:12} {:+.12}", moment_integral(&f_mixed, a, b));
    }

    // Association: H^2 and H have the same weak limit even though they are
    // not strongly equal. The pairing against a bump decays like epsilon.
    let widths = [0.1, 0.05, 0.025, 0.0125, 0.00625];
    let phi = TestFunction::bump(0.0, 0.5);
    let report = association_check(
        &RegularizedExpr::step_power(Profile::linear(), 2),
        &RegularizedExpr::step_power(Profile::linear(), 1),
        &phi,
        &widths,
    )
    .unwrap();
    println!("\nassociation H^2 ~ H: decay order {:.3}, associated: {}", report.decay_order, report.tends_to_zero);

    // Multiplying by H' destroys the association: H^2 H' and H H' pair to
    // values differing by phi(0)/6 in the limit.
    let report = association_check(
        &RegularizedExpr::step_power_times_dirac(Profile::linear(), 2, Profile::linear()),
        &RegularizedExpr::step_power_times_dirac(Profile::linear(), 1, Profile::linear()),
        &phi,
        &widths,
    )
    .unwrap();
    println!(
        "association H^2 H' ~ H H': associated: {} (pairings stall near {:+.6}, phi(0)/6 = {:+.6})",
        report.tends_to_zero,
        report.pairings.last().unwrap().1,
        -phi.value(0.0) / 6.0
    );

    // A regularized step concentrates its derivative on the ramp; the pairing
    // of H' with a test function converges to phi(0).
    println!("\ndelta pairing <H', phi> as the width shrinks:");
    for eps in [0.2, 0.05, 0.0125] {
        let step = RegularizedStep::new(Profile::random_monotone(32, 3), eps).unwrap();
        println!("  eps = {eps:7} {:+.8}", gfshock::gf::delta_pairing(&step, &phi));
    }
    println!("  phi(0)        {:+.8}", phi.value(0.0));
}
