//! Three-equation stress model: specific volume, velocity, stress, coupled
//! through a constant k > 0.
//!
//! ```text
//!     v_t + u v_x = v u_x
//!     u_t + u u_x = v sigma_x
//!     sigma_t + u sigma_x = k^2 u_x
//! ```
//!
//! The system is nonconservative; its shock conditions come from the shared
//! profile mean-value rule in [`crate::jump`]. Characteristic speeds are
//! u - k sqrt(v), u, u + k sqrt(v): two acoustic families and a contact that
//! carries only the specific volume. Each acoustic wave is parameterized by
//! its velocity jump xi. Writing s = [sigma]/[u] for the stress-to-velocity
//! jump ratio, the jump relations collapse to
//!
//! ```text
//!     v_b s^2 + (xi/2) s - k^2 = 0,
//!     [sigma] = s xi,   [v] = xi / s,   c = u_b - v_b s,
//! ```
//!
//! with base state (v_b, u_b, sigma_b) on the left of the wave. The
//! left-facing family takes the positive root in s, the right-facing family
//! the negative one. A Riemann fan is left wave, contact, right wave; the two
//! wave strengths and the contact volume jump are found by Newton iteration.

use super::{RiemannFan, RiemannSolver, SolverError, Wave};
use crate::gf::{self, Profile, RampPoly};
use crate::numeric;

/// State of the stress model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct K2State {
    /// Specific volume, 1/density.
    pub v: f64,
    pub u: f64,
    pub sigma: f64,
}

impl K2State {
    pub fn new(v: f64, u: f64, sigma: f64) -> Self {
        Self { v, u, sigma }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.v, self.u, self.sigma]
    }

    pub fn from_slice(w: &[f64]) -> Self {
        Self { v: w[0], u: w[1], sigma: w[2] }
    }
}

/// State on the far side of one acoustic wave of velocity jump `xi`, and the
/// wave's speed. The base state sits on the left of the wave.
///
/// This is the wave-family parameterization described in the module docs; it
/// is exact, so it doubles as the construction oracle for round-trip tests.
pub fn acoustic_extend(base: &K2State, xi: f64, k: f64, left_facing: bool) -> (K2State, f64) {
    let sign = if left_facing { 1.0 } else { -1.0 };
    let s = (-xi / 2.0 + sign * (xi * xi / 4.0 + 4.0 * base.v * k * k).sqrt()) / (2.0 * base.v);
    let beyond = K2State {
        v: base.v + xi / s,
        u: base.u + xi,
        sigma: base.sigma + s * xi,
    };
    (beyond, base.u - base.v * s)
}

/// Characteristic speed of the left- or right-facing acoustic family at a
/// state, `u -+ k sqrt(v)`.
pub fn acoustic_speed(state: &K2State, k: f64, left_facing: bool) -> f64 {
    let sign = if left_facing { -1.0 } else { 1.0 };
    state.u + sign * k * state.v.sqrt()
}

/// Riemann fan for the stress model: left-facing wave, contact carrying the
/// specific volume, right-facing wave. Zero-strength waves are omitted.
pub fn k2_riemann(left: K2State, right: K2State, k: f64) -> Result<RiemannFan, SolverError> {
    if !(left.v > 0.0) || !(right.v > 0.0) {
        return Err(SolverError::NonPositive {
            what: "specific volume",
            value: left.v.min(right.v),
        });
    }
    if !(k > 0.0) {
        return Err(SolverError::NonPositive { what: "coupling constant", value: k });
    }
    if left == right {
        return Ok(RiemannFan::empty());
    }

    // Unknowns: left wave strength, right wave strength, specific volume on
    // the right of the contact. The middle velocity and stress are continuous
    // across the contact.
    let residual = |x: &[f64]| -> Vec<f64> {
        let (m1, _) = acoustic_extend(&left, x[0], k, true);
        let base2 = K2State { v: x[2], u: m1.u, sigma: m1.sigma };
        let (tail, _) = acoustic_extend(&base2, x[1], k, false);
        vec![tail.u - right.u, tail.sigma - right.sigma, tail.v - right.v]
    };
    let scale = [left.v, right.v, left.u, right.u, left.sigma, right.sigma]
        .iter()
        .fold(1.0f64, |m, x| m.max(x.abs()));
    let x = numeric::newton_solve(&residual, &[0.0, 0.0, right.v], 1e-12 * scale, 100)
        .map_err(|e| SolverError::NoMiddleState(format!("stress-model Newton: {e}")))?;
    let (xi1, xi2, v_mr) = (x[0], x[1], x[2]);

    let (m1, c1) = acoustic_extend(&left, xi1, k, true);
    if !(m1.v > 0.0) || !(v_mr > 0.0) {
        return Err(SolverError::NoMiddleState(format!(
            "middle specific volumes ({}, {}) not positive",
            m1.v, v_mr
        )));
    }
    let m2 = K2State { v: v_mr, u: m1.u, sigma: m1.sigma };
    let (_, c2) = acoustic_extend(&m2, xi2, k, false);
    let tol = 1e-9 * scale;
    if c1 > m1.u + tol || c2 < m2.u - tol {
        return Err(SolverError::SpeedOrdering(format!(
            "acoustic speeds {c1}, {c2} straddle the contact speed {} incorrectly",
            m1.u
        )));
    }

    let la = left.as_array().to_vec();
    let m1a = m1.as_array().to_vec();
    let m2a = m2.as_array().to_vec();
    let ra = right.as_array().to_vec();
    let mut waves = Vec::new();
    if la != m1a {
        waves.push(Wave::new(c1, la, m1a.clone()));
    }
    if m1a != m2a {
        waves.push(Wave::new(m1.u, m1a, m2a.clone()));
    }
    if m2a != ra {
        waves.push(Wave::new(c2, m2a, ra));
    }
    Ok(RiemannFan { waves, delta: None })
}

/// Regularized residuals of the three equations for one wave, all variables
/// on the shared `profile`:
///
/// ```text
///     r1 = -c [v] + int u H' dx [v] - int v H' dx [u]
///     r2 = -c [u] + int u H' dx [u] - int v H' dx [sigma]
///     r3 = -c [sigma] + int u H' dx [sigma] - k^2 [u]
/// ```
///
/// where u, v under the integrals are the regularized fields of the ansatz.
pub fn ramp_residuals(wave: &Wave, k: f64, profile: &Profile) -> [f64; 3] {
    let (dv, du, ds) = (wave.jump(0), wave.jump(1), wave.jump(2));
    let c = wave.speed;
    let m_v = gf::moment_integral(
        &RampPoly::new(vec![(wave.left[0], 0, 0), (dv, 0, 1)]),
        profile,
        profile,
    );
    let m_u = gf::moment_integral(
        &RampPoly::new(vec![(wave.left[1], 0, 0), (du, 0, 1)]),
        profile,
        profile,
    );
    [
        -c * dv + m_u * dv - m_v * du,
        -c * du + m_u * du - m_v * ds,
        -c * ds + m_u * ds - k * k * du,
    ]
}

pub struct K2Solver {
    pub k: f64,
}

impl RiemannSolver for K2Solver {
    fn components(&self) -> usize {
        3
    }

    fn component_names(&self) -> &'static [&'static str] {
        &["v", "u", "sigma"]
    }

    fn reflect_indices(&self) -> &'static [usize] {
        &[1]
    }

    fn solve(&self, left: &[f64], right: &[f64]) -> Result<RiemannFan, SolverError> {
        k2_riemann(K2State::from_slice(left), K2State::from_slice(right), self.k)
    }
}
