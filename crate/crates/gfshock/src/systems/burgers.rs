//! Inviscid Burgers equation u_t + u u_x = 0.
//!
//! A traveling-wave ansatz u = u_l + [u] H(x - ct) satisfies the equation in
//! the association sense exactly when c = u_l + [u]/2, independent of the
//! Heaviside profile: the nonlinear term contributes the half moment
//! int H H' = 1/2. The Riemann fan is therefore a single discontinuity at the
//! midpoint speed, for expansive data as well as compressive; under repeated
//! projection an expansive jump spreads into a fan of small jumps on its own.

use crate::gf::{self, Profile, RampPoly};
use super::{RiemannFan, RiemannSolver, SolverError, Wave};

/// Fan for Burgers Riemann data: one wave at the midpoint speed, or an empty
/// fan for equal states.
pub fn burgers_riemann(u_left: f64, u_right: f64) -> RiemannFan {
    if u_left == u_right {
        return RiemannFan::empty();
    }
    let speed = 0.5 * (u_left + u_right);
    RiemannFan::single(Wave::new(speed, vec![u_left], vec![u_right]))
}

/// Regularized residual of the Burgers equation for one wave, integrated over
/// the smoothing ramp with the given profile:
/// -c [u] + int (u_l + [u] H) [u] H' dx.
pub fn ramp_residual(wave: &Wave, profile: &Profile) -> f64 {
    let du = wave.jump(0);
    let poly = RampPoly::new(vec![(wave.left[0] * du, 0, 0), (du * du, 0, 1)]);
    -wave.speed * du + gf::moment_integral(&poly, profile, profile)
}

pub struct BurgersSolver;

impl RiemannSolver for BurgersSolver {
    fn components(&self) -> usize {
        1
    }

    fn component_names(&self) -> &'static [&'static str] {
        &["u"]
    }

    fn reflect_indices(&self) -> &'static [usize] {
        &[0]
    }

    fn solve(&self, left: &[f64], right: &[f64]) -> Result<RiemannFan, SolverError> {
        Ok(burgers_riemann(left[0], right[0]))
    }
}
