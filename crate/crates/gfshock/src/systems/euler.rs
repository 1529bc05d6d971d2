//! Fractional-step Euler gas dynamics: pressureless transport plus a
//! frozen-density pressure step.
//!
//! The full system
//!
//! ```text
//!     rho_t + (rho u)_x = 0
//!     (rho u)_t + (rho u^2)_x + p_x = 0
//!     (rho e)_t + (rho e u)_x + (p u)_x = 0
//! ```
//!
//! with p = (gamma - 1) rho (e - u^2/2) splits into a pressureless step, in
//! which colliding streams concentrate mass on a moving line (a delta shock),
//! and a pressure step in which the density is frozen in place and only the
//! pressure works on momentum and energy. Fans carry conserved states
//! (rho, rho u, rho e) so the projection engine conserves them by averaging.

use super::{DeltaRate, RiemannFan, RiemannSolver, SolverError, Wave};
use crate::numeric;

/// Pressure law p = (gamma - 1) rho (e - u^2/2), with e the specific total
/// energy.
pub fn gamma_law(rho: f64, e: f64, u: f64, gamma: f64) -> f64 {
    (gamma - 1.0) * rho * (e - 0.5 * u * u)
}

/// Primitive gas state. `e` is the specific total energy, kinetic part
/// included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerState {
    pub rho: f64,
    pub u: f64,
    pub e: f64,
    /// False for vacuum, where the velocity carries no information.
    pub velocity_defined: bool,
}

impl EulerState {
    pub fn new(rho: f64, u: f64, e: f64) -> Self {
        assert!(rho > 0.0, "use EulerState::vacuum() for rho = 0");
        Self { rho, u, e, velocity_defined: true }
    }

    pub fn vacuum() -> Self {
        Self { rho: 0.0, u: 0.0, e: 0.0, velocity_defined: false }
    }

    pub fn is_vacuum(&self) -> bool {
        self.rho == 0.0
    }

    pub fn pressure(&self, gamma: f64) -> f64 {
        gamma_law(self.rho, self.e, self.u, gamma)
    }

    pub fn conserved(&self) -> [f64; 3] {
        [self.rho, self.rho * self.u, self.rho * self.e]
    }

    pub fn from_conserved(w: &[f64]) -> Self {
        if w[0] > 0.0 {
            Self { rho: w[0], u: w[1] / w[0], e: w[2] / w[0], velocity_defined: true }
        } else {
            Self::vacuum()
        }
    }
}

/// Flux (rho u, rho u^2, rho e u) of the pressureless subsystem for a
/// conserved state; zero for vacuum.
fn pressureless_flux(w: &[f64]) -> [f64; 3] {
    if w[0] == 0.0 {
        return [0.0, 0.0, 0.0];
    }
    let u = w[1] / w[0];
    [w[1], w[1] * u, w[2] * u]
}

/// Riemann fan of the pressureless step.
///
/// Colliding data (u_l > u_r) produce a single discontinuity carrying a
/// traveling point mass. Its speed is the root of
/// `[rho] c^2 - 2 [rho u] c + [rho u^2] = 0` lying between the velocities,
/// in closed form
///
/// ```text
///     c = (sqrt(rho_l) u_l + sqrt(rho_r) u_r) / (sqrt(rho_l) + sqrt(rho_r)),
/// ```
///
/// which makes the momentum accumulation rate equal c times the mass rate.
/// Accumulation rates are stored in conservation-deficit form
/// `rate_i = c [U_i] - [F_i]`, so cell averages plus the point mass ledger
/// conserve to the last bit. Separating data (u_l < u_r) produce two contacts
/// with vacuum in between; equal velocities give a single contact.
pub fn pressureless_riemann(left: &EulerState, right: &EulerState) -> RiemannFan {
    assert!(left.rho >= 0.0 && right.rho >= 0.0, "density must be nonnegative");
    if left == right {
        return RiemannFan::empty();
    }
    let lc = left.conserved().to_vec();
    let rc = right.conserved().to_vec();

    // One-sided vacuum: the remaining stream advects at its own velocity.
    if left.is_vacuum() || right.is_vacuum() {
        if left.is_vacuum() && right.is_vacuum() {
            return RiemannFan::empty();
        }
        let speed = if left.is_vacuum() { right.u } else { left.u };
        return RiemannFan::single(Wave::new(speed, lc, rc));
    }

    if left.u > right.u {
        let sl = left.rho.sqrt();
        let sr = right.rho.sqrt();
        let c = (sl * left.u + sr * right.u) / (sl + sr);
        let fl = pressureless_flux(&lc);
        let fr = pressureless_flux(&rc);
        let rates: Vec<f64> = (0..3).map(|i| c * (rc[i] - lc[i]) - (fr[i] - fl[i])).collect();
        return RiemannFan {
            waves: vec![Wave::new(c, lc, rc)],
            delta: Some(DeltaRate { speed: c, rates }),
        };
    }
    if left.u == right.u {
        return RiemannFan::single(Wave::new(left.u, lc, rc));
    }
    let vac = vec![0.0, 0.0, 0.0];
    RiemannFan {
        waves: vec![
            Wave::new(left.u, lc, vac.clone()),
            Wave::new(right.u, vac, rc),
        ],
        delta: None,
    }
}

/// Conservation residuals `-c [U] + [F] + rate` of one pressureless wave, per
/// conserved component. `delta` is the point mass carried by that wave, if
/// any. The regularized traveling-wave substitution integrates the flux
/// exactly across the ramp, so these are the ramp residuals of this
/// conservation-form subsystem.
pub fn pressureless_wave_residuals(wave: &Wave, delta: Option<&DeltaRate>) -> [f64; 3] {
    let fl = pressureless_flux(&wave.left);
    let fr = pressureless_flux(&wave.right);
    let mut r = [0.0; 3];
    for i in 0..3 {
        let rate = delta.map_or(0.0, |d| d.rates[i]);
        r[i] = -wave.speed * wave.jump(i) + (fr[i] - fl[i]) + rate;
    }
    r
}

// ============================================================================
// Pressure step
// ============================================================================

/// Riemann fan of the pressure step with one frozen density on both sides.
/// `left` and `right` are `(u, e)` pairs.
pub fn pressure_step_riemann(
    rho: f64,
    left: (f64, f64),
    right: (f64, f64),
    gamma: f64,
) -> Result<RiemannFan, SolverError> {
    pressure_interface_riemann(rho, rho, left, right, gamma)
}

/// Pressure step across an interface where the frozen density itself jumps.
///
/// The subsystem evolves momentum and energy with fluxes (p, p u) while
/// rho(x) stays piecewise constant; a density jump is a standing wave across
/// which p and p u, hence p and u, are continuous. Unknowns are the middle
/// velocity and pressure and the two wave speeds; the middle energies follow
/// from the state law on each side. The four jump conditions
///
/// ```text
///     -c [rho u] + [p] = 0,    -c [rho e] + [p u] = 0
/// ```
///
/// across the two moving waves close the system. Sharing one middle pressure
/// makes the standing wave conservative by construction.
pub fn pressure_interface_riemann(
    rho_l: f64,
    rho_r: f64,
    left: (f64, f64),
    right: (f64, f64),
    gamma: f64,
) -> Result<RiemannFan, SolverError> {
    if !(gamma > 1.0) {
        return Err(SolverError::Inadmissible(format!("gamma must exceed 1, got {gamma}")));
    }
    if !(rho_l > 0.0) || !(rho_r > 0.0) {
        return Err(SolverError::NonPositive { what: "frozen density", value: rho_l.min(rho_r) });
    }
    let (u_l, e_l) = left;
    let (u_r, e_r) = right;
    let p_l = gamma_law(rho_l, e_l, u_l, gamma);
    let p_r = gamma_law(rho_r, e_r, u_r, gamma);
    if !(p_l > 0.0) || !(p_r > 0.0) {
        return Err(SolverError::NonPositive { what: "pressure", value: p_l.min(p_r) });
    }
    if rho_l == rho_r && left == right {
        return Ok(RiemannFan::empty());
    }

    let e_mid = |p_m: f64, u_m: f64, rho: f64| p_m / ((gamma - 1.0) * rho) + 0.5 * u_m * u_m;
    // The wave speeds are carried as square roots so the iteration cannot
    // reach mirror roots with flipped speeds; near a standing density jump
    // the (u, p) jumps are tiny and leave the speeds almost unconstrained,
    // which would otherwise let Newton park them on the wrong side of zero.
    let to_x = |z: &[f64]| [z[0], z[1], -z[2] * z[2], z[3] * z[3]];
    let residual = |z: &[f64]| -> Vec<f64> {
        let [u_m, p_m, c_left, c_right] = to_x(z);
        let e_ml = e_mid(p_m, u_m, rho_l);
        let e_mr = e_mid(p_m, u_m, rho_r);
        vec![
            -c_left * rho_l * (u_m - u_l) + (p_m - p_l),
            -c_left * rho_l * (e_ml - e_l) + (p_m * u_m - p_l * u_l),
            -c_right * rho_r * (u_r - u_m) + (p_r - p_m),
            -c_right * rho_r * (e_r - e_mr) + (p_r * u_r - p_m * u_m),
        ]
    };
    // Acoustic starting point: impedance-weighted middle velocity and the
    // matching pressure, exact to second order in the jumps, so small waves
    // start essentially converged with correctly signed speeds.
    let a_l = ((gamma - 1.0) * p_l / rho_l).sqrt();
    let a_r = ((gamma - 1.0) * p_r / rho_r).sqrt();
    let (z_l, z_r) = (a_l * rho_l, a_r * rho_r);
    let u_ac = (z_l * u_l + z_r * u_r + p_l - p_r) / (z_l + z_r);
    let p_ac = p_l - z_l * (u_ac - u_l);
    let guess = if p_ac > 0.0 {
        [u_ac, p_ac, a_l.sqrt(), a_r.sqrt()]
    } else {
        [0.5 * (u_l + u_r), 0.5 * (p_l + p_r), a_l.sqrt(), a_r.sqrt()]
    };
    let scale = [p_l, p_r, u_l, u_r, e_l, e_r].iter().fold(1.0f64, |m, x| m.max(x.abs()));
    let z = numeric::newton_solve(&residual, &guess, 1e-12 * scale, 100)
        .map_err(|e| SolverError::NoMiddleState(format!("pressure-step Newton: {e}")))?;
    let [u_m, p_m, c_left, c_right] = to_x(&z);
    if !(p_m > 0.0) {
        return Err(SolverError::NoMiddleState(format!("middle pressure {p_m} not positive")));
    }
    if !(c_left < 0.0 && c_right > 0.0) {
        return Err(SolverError::SpeedOrdering(format!(
            "pressure waves must straddle the interface, got {c_left}, {c_right}"
        )));
    }

    let lc = vec![rho_l, rho_l * u_l, rho_l * e_l];
    let ml = vec![rho_l, rho_l * u_m, rho_l * e_mid(p_m, u_m, rho_l)];
    let mr = vec![rho_r, rho_r * u_m, rho_r * e_mid(p_m, u_m, rho_r)];
    let rc = vec![rho_r, rho_r * u_r, rho_r * e_r];
    let mut waves = vec![Wave::new(c_left, lc, ml.clone())];
    if ml != mr {
        waves.push(Wave::new(0.0, ml, mr.clone()));
    }
    waves.push(Wave::new(c_right, mr, rc));
    Ok(RiemannFan { waves, delta: None })
}

/// Jump-condition residuals of one pressure-step wave on conserved states:
/// frozen density, momentum against [p], energy against [p u]. The density of
/// each side is read from the state itself, so standing density jumps are
/// checked with their own side's pressure.
pub fn pressure_wave_residuals(wave: &Wave, gamma: f64) -> [f64; 3] {
    let pu = |w: &[f64]| {
        let u = w[1] / w[0];
        let p = (gamma - 1.0) * (w[2] - 0.5 * w[1] * u);
        (p, u)
    };
    let (p_l, u_l) = pu(&wave.left);
    let (p_r, u_r) = pu(&wave.right);
    [
        -wave.speed * wave.jump(0),
        -wave.speed * wave.jump(1) + (p_r - p_l),
        -wave.speed * wave.jump(2) + (p_r * u_r - p_l * u_l),
    ]
}

// ============================================================================
// Engine adapters
// ============================================================================

/// Pressureless transport over conserved slices (rho, rho u, rho e).
pub struct PressurelessSolver;

impl RiemannSolver for PressurelessSolver {
    fn components(&self) -> usize {
        3
    }

    fn component_names(&self) -> &'static [&'static str] {
        &["rho", "momentum", "energy"]
    }

    fn reflect_indices(&self) -> &'static [usize] {
        &[1]
    }

    fn solve(&self, left: &[f64], right: &[f64]) -> Result<RiemannFan, SolverError> {
        Ok(pressureless_riemann(
            &EulerState::from_conserved(left),
            &EulerState::from_conserved(right),
        ))
    }
}

/// Frozen-density pressure step over conserved slices; each side keeps its
/// own density. Vacuum on either side leaves the data untouched (no pressure
/// without gas), which keeps split Euler runs defined even if transport has
/// emptied a cell.
pub struct PressureStepSolver {
    pub gamma: f64,
}

impl RiemannSolver for PressureStepSolver {
    fn components(&self) -> usize {
        3
    }

    fn component_names(&self) -> &'static [&'static str] {
        &["rho", "momentum", "energy"]
    }

    fn reflect_indices(&self) -> &'static [usize] {
        &[1]
    }

    fn solve(&self, left: &[f64], right: &[f64]) -> Result<RiemannFan, SolverError> {
        if left[0] == 0.0 || right[0] == 0.0 {
            if left == right {
                return Ok(RiemannFan::empty());
            }
            return Ok(RiemannFan::single(Wave::new(0.0, left.to_vec(), right.to_vec())));
        }
        let l = EulerState::from_conserved(left);
        let r = EulerState::from_conserved(right);
        pressure_interface_riemann(l.rho, r.rho, (l.u, l.e), (r.u, r.e), self.gamma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_law_reference_values() {
        assert!((gamma_law(1.0, 1.0, 0.0, 1.4) - 0.4).abs() <= 1e-15);
        assert_eq!(gamma_law(2.0, 0.5, 1.0, 1.4), 0.0);
        let base = gamma_law(1.0, 2.0, 0.6, 1.4);
        assert!((gamma_law(2.0, 2.0, 0.6, 1.4) - 2.0 * base).abs() <= 1e-14);
    }

    #[test]
    fn symmetric_collision_speed_is_exactly_zero() {
        let l = EulerState::new(1.7, 0.9, 2.0);
        let r = EulerState::new(1.7, -0.9, 2.0);
        let fan = pressureless_riemann(&l, &r);
        let d = fan.delta.as_ref().unwrap();
        assert_eq!(d.speed, 0.0);
        assert_eq!(fan.waves[0].speed, 0.0);
        // Mass accumulates at -[rho u] = 2 rho u > 0.
        assert!((d.rates[0] - 2.0 * 1.7 * 0.9).abs() <= 1e-14);
    }

    #[test]
    fn equal_density_collision_speed_is_midpoint() {
        let l = EulerState::new(0.8, 2.0, 1.0);
        let r = EulerState::new(0.8, 0.5, 3.0);
        let fan = pressureless_riemann(&l, &r);
        assert!((fan.delta.as_ref().unwrap().speed - 1.25).abs() <= 1e-14);
    }

    #[test]
    fn delta_speed_solves_the_quadratic_between_the_velocities() {
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..200 {
            let l = EulerState::new(0.1 + 3.0 * next(), 2.0 * next(), 1.0 + next());
            let r = EulerState::new(0.1 + 3.0 * next(), l.u - 0.1 - 2.0 * next(), 1.0 + next());
            let fan = pressureless_riemann(&l, &r);
            let c = fan.delta.as_ref().unwrap().speed;
            assert!(r.u <= c && c <= l.u, "speed {c} outside [{}, {}]", r.u, l.u);
            let drho = r.rho - l.rho;
            let dm = r.rho * r.u - l.rho * l.u;
            let dmu = r.rho * r.u * r.u - l.rho * l.u * l.u;
            let quad = drho * c * c - 2.0 * dm * c + dmu;
            let scale = drho.abs() * c * c + 2.0 * dm.abs() * c.abs() + dmu.abs();
            assert!(quad.abs() <= 1e-12 * scale.max(1.0), "quadratic residual {quad}");
            // The quadratic is exactly the statement that momentum accumulates
            // at c times the mass rate.
            let d = fan.delta.as_ref().unwrap();
            assert!((d.rates[1] - c * d.rates[0]).abs() <= 1e-12 * scale.max(1.0));
        }
    }

    #[test]
    fn wave_residuals_vanish_by_construction() {
        let l = EulerState::new(2.0, 1.0, 3.0);
        let r = EulerState::new(0.5, -1.5, 1.0);
        let fan = pressureless_riemann(&l, &r);
        let res = pressureless_wave_residuals(&fan.waves[0], fan.delta.as_ref());
        for v in res {
            assert_eq!(v, 0.0);
        }
    }

    #[test]
    fn separating_data_produce_vacuum_fan_conserving_mass() {
        let l = EulerState::new(1.2, -0.7, 2.0);
        let r = EulerState::new(0.6, 1.1, 1.5);
        let fan = pressureless_riemann(&l, &r);
        assert_eq!(fan.waves.len(), 2);
        assert!(fan.delta.is_none());
        assert_eq!(fan.waves[0].speed, l.u);
        assert_eq!(fan.waves[1].speed, r.u);
        assert_eq!(fan.waves[0].right, vec![0.0, 0.0, 0.0]);

        // Balance over [-big, big] at time t against the boundary fluxes.
        let (big, t) = (10.0, 1.0);
        let lc = l.conserved();
        let rc = r.conserved();
        let fl = pressureless_flux(&lc);
        let fr = pressureless_flux(&rc);
        for i in 0..3 {
            let before = big * (lc[i] + rc[i]);
            let after = lc[i] * (big + l.u * t) + rc[i] * (big - r.u * t);
            let boundary = t * (fl[i] - fr[i]);
            assert!(
                (after - before - boundary).abs() <= 1e-13 * before.abs().max(1.0),
                "component {i}"
            );
        }
    }

    #[test]
    fn collision_fan_conserves_including_the_point_mass() {
        let l = EulerState::new(1.4, 1.3, 2.2);
        let r = EulerState::new(0.9, -0.4, 1.1);
        let fan = pressureless_riemann(&l, &r);
        let d = fan.delta.as_ref().unwrap();
        let (big, t) = (10.0, 1.0);
        let lc = l.conserved();
        let rc = r.conserved();
        let fl = pressureless_flux(&lc);
        let fr = pressureless_flux(&rc);
        for i in 0..3 {
            let before = big * (lc[i] + rc[i]);
            let after = lc[i] * (big + d.speed * t) + rc[i] * (big - d.speed * t) + t * d.rates[i];
            let boundary = t * (fl[i] - fr[i]);
            assert!((after - before - boundary).abs() <= 1e-13 * before.abs().max(1.0));
        }
    }

    #[test]
    fn vacuum_side_advects_the_other_stream() {
        let r = EulerState::new(0.6, 1.1, 1.5);
        let fan = pressureless_riemann(&EulerState::vacuum(), &r);
        assert_eq!(fan.waves.len(), 1);
        assert_eq!(fan.waves[0].speed, r.u);
        let fan = pressureless_riemann(&r, &EulerState::vacuum());
        assert_eq!(fan.waves[0].speed, r.u);
    }

    #[test]
    fn from_conserved_flags_vacuum() {
        let w = EulerState::from_conserved(&[0.0, 0.0, 0.0]);
        assert!(w.is_vacuum());
        assert!(!w.velocity_defined);
        let w = EulerState::from_conserved(&[2.0, 1.0, 4.0]);
        assert!((w.u - 0.5).abs() <= 1e-15);
        assert!((w.e - 2.0).abs() <= 1e-15);
    }

    #[test]
    fn pressure_step_equal_states_empty_fan() {
        let fan = pressure_step_riemann(1.0, (0.3, 2.0), (0.3, 2.0), 1.4).unwrap();
        assert!(fan.waves.is_empty());
    }

    #[test]
    fn pressure_step_symmetric_compression_centers_at_rest() {
        let fan = pressure_step_riemann(1.0, (0.5, 2.0), (-0.5, 2.0), 1.4).unwrap();
        assert_eq!(fan.waves.len(), 2, "equal densities need no standing wave");
        let u_m = fan.waves[0].right[1] / fan.waves[0].right[0];
        assert!(u_m.abs() <= 1e-10, "middle velocity {u_m}");
        assert!(fan.waves[0].speed < 0.0 && fan.waves[1].speed > 0.0);
    }

    #[test]
    fn pressure_step_waves_satisfy_their_jump_conditions() {
        let fan = pressure_step_riemann(2.0, (0.4, 3.0), (-0.1, 1.8), 1.4).unwrap();
        for wave in &fan.waves {
            let r = pressure_wave_residuals(wave, 1.4);
            let worst = r.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            assert!(worst <= 1e-10, "speed {}: {r:?}", wave.speed);
        }
    }

    #[test]
    fn pressure_interface_standing_wave_keeps_p_and_u_continuous() {
        let fan = pressure_interface_riemann(1.0, 0.125, (0.0, 2.5), (0.0, 2.0), 1.4).unwrap();
        assert_eq!(fan.waves.len(), 3);
        let standing = &fan.waves[1];
        assert_eq!(standing.speed, 0.0);
        let u_l = standing.left[1] / standing.left[0];
        let u_r = standing.right[1] / standing.right[0];
        assert!((u_l - u_r).abs() <= 1e-13);
        let p = |w: &[f64]| (1.4 - 1.0) * (w[2] - 0.5 * w[1] * w[1] / w[0]);
        assert!((p(&standing.left) - p(&standing.right)).abs() <= 1e-13);
        fan.validate(
            &[1.0, 0.0, 2.5],
            &[0.125, 0.0, 0.125 * 2.0],
        )
        .unwrap();
        for wave in &fan.waves {
            let r = pressure_wave_residuals(wave, 1.4);
            assert!(r.iter().all(|x| x.abs() <= 1e-10), "{r:?}");
        }
    }

    #[test]
    fn pressure_step_round_trip_recovery() {
        // Construct outer states wave by wave from a chosen middle state:
        // pick the velocity on the far side, then solve the two jump
        // conditions of that wave for the far energy and the speed.
        let (rho, gamma) = (1.3, 1.4);
        let (u_m, e_m) = (0.2, 2.0);
        let p_m = gamma_law(rho, e_m, u_m, gamma);

        let back_solve = |u_far: f64, going_left: bool| -> (f64, f64) {
            // Per-wave unknowns (e_far, c); states oriented left to right.
            let residual = move |x: &[f64]| -> Vec<f64> {
                let (e_far, c) = (x[0], x[1]);
                let p_far = gamma_law(rho, e_far, u_far, gamma);
                if going_left {
                    vec![
                        -c * rho * (u_m - u_far) + (p_m - p_far),
                        -c * rho * (e_m - e_far) + (p_m * u_m - p_far * u_far),
                    ]
                } else {
                    vec![
                        -c * rho * (u_far - u_m) + (p_far - p_m),
                        -c * rho * (e_far - e_m) + (p_far * u_far - p_m * u_m),
                    ]
                }
            };
            let sgn = if going_left { -1.0 } else { 1.0 };
            let sound = sgn * ((gamma - 1.0) * p_m / rho).sqrt();
            let x = numeric::newton_solve(&residual, &[e_m, sound], 1e-13, 100).unwrap();
            (x[0], x[1])
        };

        for (du_l, du_r) in [(0.3, -0.25), (0.15, 0.1), (-0.1, -0.2)] {
            let u_l = u_m + du_l;
            let u_r = u_m + du_r;
            let (e_l, c_l) = back_solve(u_l, true);
            let (e_r, c_r) = back_solve(u_r, false);
            if !(c_l < 0.0 && c_r > 0.0) {
                continue;
            }
            let fan = pressure_step_riemann(rho, (u_l, e_l), (u_r, e_r), gamma).unwrap();
            let mid = &fan.waves[0].right;
            let got_u = mid[1] / mid[0];
            let got_e = mid[2] / mid[0];
            assert!((got_u - u_m).abs() <= 1e-8, "u {got_u} vs {u_m}");
            assert!((got_e - e_m).abs() <= 1e-8, "e {got_e} vs {e_m}");
        }
    }

    #[test]
    fn pressure_step_rejects_bad_inputs() {
        assert!(pressure_step_riemann(1.0, (0.0, 1.0), (0.0, 2.0), 1.0).is_err());
        assert!(pressure_step_riemann(-1.0, (0.0, 1.0), (0.0, 2.0), 1.4).is_err());
        // e = u^2/2 means zero pressure.
        assert!(pressure_step_riemann(1.0, (1.0, 0.5), (0.0, 2.0), 1.4).is_err());
    }

    #[test]
    fn solver_adapters_expose_conserved_components() {
        let ps = PressurelessSolver;
        let fan = ps.solve(&[1.0, 1.0, 2.0], &[1.0, -1.0, 2.0]).unwrap();
        assert!(fan.delta.is_some());
        fan.validate(&[1.0, 1.0, 2.0], &[1.0, -1.0, 2.0]).unwrap();

        let pr = PressureStepSolver { gamma: 1.4 };
        let fan = pr.solve(&[1.0, 0.0, 2.5], &[1.0, 0.0, 2.0]).unwrap();
        fan.validate(&[1.0, 0.0, 2.5], &[1.0, 0.0, 2.0]).unwrap();
    }

    #[test]
    fn pressure_solver_passes_vacuum_through() {
        let pr = PressureStepSolver { gamma: 1.4 };
        let fan = pr.solve(&[0.0, 0.0, 0.0], &[1.0, 0.0, 2.0]).unwrap();
        assert_eq!(fan.waves.len(), 1);
        assert_eq!(fan.waves[0].speed, 0.0);
    }
}
