//! Jump conditions extracted from the ramp calculus.
//!
//! A traveling discontinuity is described by a `ShockAnsatz`: left state,
//! jump vector, speed, and one ramp profile per variable. Substituting the
//! ansatz into an equation turns every term into a multiple of a step
//! derivative, and the coefficient must vanish. How the coefficient is
//! evaluated depends on the equality notion the equation is stated with:
//!
//! * Association: any composite `f(H) H'` may be replaced by its ramp mean
//!   `(integral_0^1 f(s) ds) H'`, which is profile independent as long as all
//!   variables share one profile. [`assoc_jump_residual`] evaluates the
//!   resulting scalar relation.
//! * Strong equality: no averaging is allowed. The equation becomes a linear
//!   first-order ODE linking the profiles themselves, solved by
//!   [`strong_profile_relation`], or, for the logarithmic model handled by
//!   [`integral_jump_speed`], an integral condition that pins the speed.
//!
//! The mean-value residuals here and the regularized integrals in [`crate::gf`]
//! are two routes to the same number; the test suites drive both and compare.

use crate::gf::Profile;
use crate::numeric::{self, NumericError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JumpError {
    #[error("state jump is zero; no unique speed")]
    NoJump,
    #[error("variables carry different profiles; the mean-value rule needs a shared profile")]
    MixedProfiles,
    #[error("leading coefficient vanishes on the ramp (|a| = {magnitude:.3e} at t = {at:.4})")]
    ResonantProfile { at: f64, magnitude: f64 },
    #[error("profile equation is inconsistent: ramp endpoint integrates to {value} instead of 1")]
    EndpointMismatch { value: f64 },
    #[error("no traveling-wave speed: {0}")]
    NoTravelingWaveSpeed(String),
    #[error("degenerate jump: {0}")]
    DegenerateJump(String),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

/// Classical Rankine-Hugoniot speed `c = [f] / [w]` for a conservation law.
pub fn rh_speed(flux_jump: f64, state_jump: f64) -> Result<f64, JumpError> {
    if state_jump == 0.0 {
        return Err(JumpError::NoJump);
    }
    Ok(flux_jump / state_jump)
}

// ============================================================================
// Shock ansatz
// ============================================================================

/// Traveling-wave ansatz `w_i(x, t) = left_i + delta_i * H_i(x - speed t)`.
#[derive(Debug, Clone)]
pub struct ShockAnsatz {
    pub left: Vec<f64>,
    pub delta: Vec<f64>,
    pub speed: f64,
    /// One profile per variable, same order as `left` and `delta`.
    pub profiles: Vec<Profile>,
}

impl ShockAnsatz {
    /// Ansatz in which every variable rides the same profile.
    pub fn with_shared_profile(left: Vec<f64>, delta: Vec<f64>, speed: f64, profile: Profile) -> Self {
        assert_eq!(left.len(), delta.len());
        let profiles = vec![profile; left.len()];
        Self { left, delta, speed, profiles }
    }

    pub fn right(&self) -> Vec<f64> {
        self.left.iter().zip(&self.delta).map(|(l, d)| l + d).collect()
    }

    /// The common profile, if all variables share one.
    pub fn shared_profile(&self) -> Option<&Profile> {
        let first = self.profiles.first()?;
        if self.profiles.iter().all(|p| p == first) {
            Some(first)
        } else {
            None
        }
    }
}

/// Per-equation residual values of a jump-condition check.
#[derive(Debug, Clone)]
pub struct JumpResidual {
    pub values: Vec<f64>,
}

impl JumpResidual {
    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }
}

// ============================================================================
// Association (mean-value) residual
// ============================================================================

pub type Coefficient = Box<dyn Fn(&[f64]) -> f64>;

/// Scalar equation in advection-source form,
/// `y_t + a(w) y_x = sum_j b_j(w) (w_{v_j})_x`, stated with association.
pub struct AssocEquation {
    /// Index of `y` in the state vector.
    pub target: usize,
    /// Advection coefficient `a(w)`.
    pub advection: Coefficient,
    /// Source terms `(variable index, coefficient b(w))`.
    pub sources: Vec<(usize, Coefficient)>,
}

/// Mean of `f` along the straight segment from `left` to `left + delta`,
/// which is the mean-value substitute for `f(w(H)) H'` under a shared
/// profile. Composite Gauss panels keep polynomial coefficients exact well
/// beyond the degrees that occur in practice.
pub(crate) fn segment_mean(f: &dyn Fn(&[f64]) -> f64, left: &[f64], delta: &[f64]) -> f64 {
    let rule = numeric::gauss_legendre(8);
    let panels = 16;
    let mut state = vec![0.0; left.len()];
    let mut acc = 0.0;
    for k in 0..panels {
        let a = k as f64 / panels as f64;
        let b = (k + 1) as f64 / panels as f64;
        acc += numeric::integrate_gl(
            &mut |lambda: f64| {
                for i in 0..left.len() {
                    state[i] = left[i] + lambda * delta[i];
                }
                f(&state)
            },
            a,
            b,
            &rule,
        );
    }
    acc
}

/// Association residual of one advection-source equation for a shared-profile
/// ansatz:
///
/// ```text
///     -c [y] + mean(a) [y] - sum_j mean(b_j) [w_{v_j}]
/// ```
///
/// where `mean` averages the coefficient along the state segment. The value
/// is what multiplies the (common) step derivative after substitution; a
/// valid jump makes it vanish. Profile independence per variable is exactly
/// the content of the mean-value rule, so no profile enters the formula; the
/// shared-profile requirement is still enforced because mixed profiles would
/// produce genuinely profile-dependent cross moments.
pub fn assoc_jump_residual(eq: &AssocEquation, ansatz: &ShockAnsatz) -> Result<f64, JumpError> {
    if ansatz.shared_profile().is_none() {
        return Err(JumpError::MixedProfiles);
    }
    let dy = ansatz.delta[eq.target];
    let mut residual = (-ansatz.speed + segment_mean(&eq.advection, &ansatz.left, &ansatz.delta)) * dy;
    for (var, coef) in &eq.sources {
        residual -= segment_mean(coef, &ansatz.left, &ansatz.delta) * ansatz.delta[*var];
    }
    Ok(residual)
}

// ============================================================================
// Strong profile relation
// ============================================================================

/// Linear first-order profile equation
/// `a(t, H_u) y' = (b0(t, H_u) + b1(t, H_u) y) H_u'`
/// obtained by inserting a traveling-wave ansatz into an equation stated with
/// strong equality. The coefficients receive both the ramp coordinate `t`
/// and the driving profile value `H_u(t)`, so previously solved profiles can
/// be captured by closure when equations are chained.
pub struct ProfileOde {
    pub lead: Box<dyn Fn(f64, f64) -> f64>,
    pub forcing: Box<dyn Fn(f64, f64) -> f64>,
    pub coupling: Box<dyn Fn(f64, f64) -> f64>,
}

/// Solves the profile equation across the ramp, returning the dependent
/// profile `y` with `y(0) = 0`, `y(1) = 1`.
///
/// Classical fourth-order stepping, with steps aligned to the driver's node
/// grid so that the piecewise-constant `H_u'` never changes inside a step.
/// A leading coefficient that vanishes anywhere on the ramp is rejected, and
/// an equation whose solution fails to reach 1 at the ramp end (within 1e-6)
/// is reported as inconsistent.
pub fn strong_profile_relation(ode: &ProfileOde, driver: &Profile) -> Result<Profile, JumpError> {
    let m = driver.resolution();
    // At least 1024 total steps, a whole number of them per node interval.
    let per_panel = (1024 + m - 1) / m;

    // Resonance scan at nodes and midpoints.
    for j in 0..=2 * m {
        let t = j as f64 / (2 * m) as f64;
        let a = (ode.lead)(t, driver.value(t));
        if a.abs() < 1e-10 {
            return Err(JumpError::ResonantProfile { at: t, magnitude: a.abs() });
        }
    }

    let mut samples = Vec::with_capacity(m + 1);
    let mut y = 0.0;
    samples.push(0.0);
    for j in 0..m {
        let slope = driver.slope(j);
        let t0 = j as f64 / m as f64;
        let dt = 1.0 / (m as f64 * per_panel as f64);
        for sub in 0..per_panel {
            let t = t0 + sub as f64 * dt;
            let f = |t: f64, y: f64| {
                let h = driver.value(t);
                ((ode.forcing)(t, h) + (ode.coupling)(t, h) * y) * slope / (ode.lead)(t, h)
            };
            let k1 = f(t, y);
            let k2 = f(t + 0.5 * dt, y + 0.5 * dt * k1);
            let k3 = f(t + 0.5 * dt, y + 0.5 * dt * k2);
            let k4 = f(t + dt, y + dt * k3);
            y += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        samples.push(y);
    }

    let end = *samples.last().unwrap();
    if (end - 1.0).abs() > 1e-6 {
        return Err(JumpError::EndpointMismatch { value: end });
    }
    // Snap to an exactly valid profile; the adjustments are within the
    // integration error.
    samples[m] = 1.0;
    let mut running = 0.0f64;
    for s in samples.iter_mut() {
        running = running.max(s.clamp(0.0, 1.0));
        *s = running;
    }
    Profile::from_samples(samples).map_err(|_| JumpError::EndpointMismatch { value: end })
}

// ============================================================================
// Integral jump condition for the logarithmic model
// ============================================================================

/// Speed of the traveling wave that satisfies, with strong equality, the
/// integral jump condition
///
/// ```text
///     1 = ([u] / [sigma]) * integral_0^1 dl / (-c + u_l + [u] l)
/// ```
///
/// for data `(u_l, u_r)` and stress jump `[sigma]`. The admissible speed
/// lies strictly outside `[min(u_l, u_r), max(u_l, u_r)]`. The equation is
/// solved as stated, by quadrature plus bracketed root refinement; the
/// equivalent closed form `u_l - [u] / expm1([sigma])` only seeds the
/// bracket, and doubles as an independent oracle in the tests.
pub fn integral_jump_speed(u_l: f64, u_r: f64, sigma_jump: f64) -> Result<f64, JumpError> {
    let du = u_r - u_l;
    if du == 0.0 {
        return Err(JumpError::NoTravelingWaveSpeed(
            "velocity jump is zero; the integral condition cannot reach 1".into(),
        ));
    }
    if sigma_jump == 0.0 {
        return Err(JumpError::NoTravelingWaveSpeed(
            "stress jump is zero; the speed escapes to infinity".into(),
        ));
    }

    let lo = u_l.min(u_r);
    let hi = u_l.max(u_r);

    let quad = |c: f64| -> f64 {
        let rule = numeric::gauss_legendre(12);
        let panels = 64;
        let mut acc = 0.0;
        for k in 0..panels {
            let a = k as f64 / panels as f64;
            let b = (k + 1) as f64 / panels as f64;
            acc += numeric::integrate_gl(&mut |l: f64| 1.0 / (-c + u_l + du * l), a, b, &rule);
        }
        du / sigma_jump * acc - 1.0
    };

    let guess = u_l - du / f64::exp_m1(sigma_jump);
    if !guess.is_finite() {
        return Err(JumpError::NoTravelingWaveSpeed(format!(
            "no finite speed for stress jump {sigma_jump}"
        )));
    }

    // Expand a bracket around the seed without touching the forbidden band.
    let gap = if guess > hi { guess - hi } else { lo - guess };
    if gap <= 0.0 {
        return Err(JumpError::NoTravelingWaveSpeed(
            "seed speed falls inside the data interval".into(),
        ));
    }
    let mut delta = (1e-6 * guess.abs().max(1.0)).min(0.5 * gap);
    for _ in 0..80 {
        let (a, b) = if guess > hi {
            ((guess - delta).max(hi + 0.25 * gap), guess + delta)
        } else {
            (guess - delta, (guess + delta).min(lo - 0.25 * gap))
        };
        let fa = quad(a);
        let fb = quad(b);
        if fa.is_finite() && fb.is_finite() && fa.signum() != fb.signum() {
            let c = numeric::bisect_then_newton(&quad, a, b, 1e-14)?;
            return Ok(c);
        }
        delta *= 4.0;
        if delta > 1e12 * guess.abs().max(1.0) {
            break;
        }
    }
    Err(JumpError::NoTravelingWaveSpeed(
        "failed to bracket the integral condition around the seed".into(),
    ))
}

// ============================================================================
// Three-equation stress model residuals
// ============================================================================

/// Mean-value jump residuals of the three-equation stress model
/// (specific volume, velocity, stress; coupling constant `k`):
///
/// ```text
///     r1 = (c - u_l) + v_l [u] / [v]
///     r2 = [u]^2 - [sigma] [v]
///     r3 = v_l [sigma] / [u] + [u] / 2 - k^2 [u] / [sigma]
/// ```
///
/// A zero jump in every component returns zero residuals; a zero jump in
/// some but not all components is rejected, since the formulas divide by the
/// individual jumps.
pub fn k2_jump_residuals(ansatz: &ShockAnsatz, k: f64) -> Result<JumpResidual, JumpError> {
    assert_eq!(ansatz.left.len(), 3, "stress-model state is (v, u, sigma)");
    let (v_l, _u_l, _s_l) = (ansatz.left[0], ansatz.left[1], ansatz.left[2]);
    let (dv, du, ds) = (ansatz.delta[0], ansatz.delta[1], ansatz.delta[2]);
    if dv == 0.0 && du == 0.0 && ds == 0.0 {
        return Ok(JumpResidual { values: vec![0.0, 0.0, 0.0] });
    }
    if dv == 0.0 || du == 0.0 || ds == 0.0 {
        return Err(JumpError::DegenerateJump(format!(
            "jumps ([v], [u], [sigma]) = ({dv}, {du}, {ds}) are only partially zero"
        )));
    }
    let u_l = ansatz.left[1];
    let r1 = (ansatz.speed - u_l) + v_l * du / dv;
    let r2 = du * du - ds * dv;
    let r3 = v_l * ds / du + du / 2.0 - k * k * du / ds;
    Ok(JumpResidual { values: vec![r1, r2, r3] })
}

// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{integrate_over_ramp, moment_integral, RampPoly, RegularizedStep};

    #[test]
    fn rh_speed_is_flux_over_state() {
        assert_eq!(rh_speed(2.0, 1.0).unwrap(), 2.0);
        assert!(matches!(rh_speed(1.0, 0.0), Err(JumpError::NoJump)));
    }

    #[test]
    fn rh_speed_of_quadratic_flux_is_the_midpoint() {
        for (ul, ur) in [(-1.0, 1.0), (0.3, 2.7), (-2.0, -0.5)] {
            let c = rh_speed((ur * ur - ul * ul) / 2.0, ur - ul).unwrap();
            assert!((c - 0.5 * (ul + ur)).abs() <= 1e-14);
        }
    }

    fn stress_equation(k: f64) -> AssocEquation {
        // sigma_t + u sigma_x = k^2 u_x on the state (v, u, sigma).
        AssocEquation {
            target: 2,
            advection: Box::new(|w| w[1]),
            sources: vec![(1, Box::new(move |_| k * k))],
        }
    }

    #[test]
    fn stress_equation_residual_vanishes_at_the_consistent_speed() {
        let k = 2.0_f64;
        let (u_l, du, ds) = (0.0, 1.0, 0.5);
        // -c ds + (u_l + du/2) ds - k^2 du = 0.
        let c = u_l + du / 2.0 - k * k * du / ds;
        let ansatz = ShockAnsatz::with_shared_profile(
            vec![1.0, u_l, 0.0],
            vec![-0.2, du, ds],
            c,
            Profile::linear(),
        );
        let r = assoc_jump_residual(&stress_equation(k), &ansatz).unwrap();
        assert!(r.abs() <= 1e-12, "residual {r}");
    }

    #[test]
    fn residual_is_profile_shape_independent() {
        let k = 1.3;
        let ansatz_linear = ShockAnsatz::with_shared_profile(
            vec![1.0, 0.4, -0.1],
            vec![0.3, 0.8, 0.6],
            0.9,
            Profile::linear(),
        );
        let mut ansatz_rough = ansatz_linear.clone();
        ansatz_rough.profiles = vec![Profile::random_monotone(512, 77); 3];
        let r1 = assoc_jump_residual(&stress_equation(k), &ansatz_linear).unwrap();
        let r2 = assoc_jump_residual(&stress_equation(k), &ansatz_rough).unwrap();
        assert!((r1 - r2).abs() <= 1e-13);
    }

    #[test]
    fn mixed_profiles_are_rejected() {
        let mut ansatz = ShockAnsatz::with_shared_profile(
            vec![1.0, 0.0, 0.0],
            vec![0.1, 0.2, 0.3],
            1.0,
            Profile::linear(),
        );
        ansatz.profiles[2] = Profile::from_fn(64, |t| t * t).unwrap();
        assert!(matches!(
            assoc_jump_residual(&stress_equation(1.0), &ansatz),
            Err(JumpError::MixedProfiles)
        ));
    }

    #[test]
    fn segment_mean_of_power_matches_moment_integral() {
        // The substituted coefficient for f(u) = u^n with u_l = 0, [u] = 1 is
        // 1/(n+1), the same number the ramp moment produces for any profile.
        for n in 1..=6u32 {
            let mean = segment_mean(&|w: &[f64]| w[0].powi(n as i32), &[0.0], &[1.0]);
            let p = Profile::random_monotone(1024, n as u64);
            let moment = moment_integral(&RampPoly::second_power(n), &p, &p);
            assert!((mean - moment).abs() <= 1e-12, "n = {n}: {mean} vs {moment}");
        }
    }

    #[test]
    fn residual_agrees_with_regularized_ramp_integral() {
        // Same number through the other route: build the regularized fields
        // and integrate the substituted equation across the ramp.
        let k = 1.7_f64;
        let profile = Profile::random_monotone(1024, 12);
        let ansatz = ShockAnsatz::with_shared_profile(
            vec![0.8, 0.4, -0.3],
            vec![0.5, 1.1, 0.9],
            0.25,
            profile.clone(),
        );
        let assoc = assoc_jump_residual(&stress_equation(k), &ansatz).unwrap();

        let eps = 1e-3;
        let step = RegularizedStep::new(profile.clone(), eps).unwrap();
        let (u_l, du, ds, c) = (ansatz.left[1], ansatz.delta[1], ansatz.delta[2], ansatz.speed);
        let integral = integrate_over_ramp(
            &mut |x| {
                let h = step.value(x);
                let hp = step.dirac(x);
                (-c * ds + (u_l + du * h) * ds - k * k * du) * hp
            },
            eps,
            &[&profile],
            &[],
            6,
        );
        assert!((assoc - integral).abs() <= 1e-10, "{assoc} vs {integral}");
    }

    #[test]
    fn shared_ratio_equation_forces_equal_profiles() {
        // (alpha + H_u) H_v' = (alpha + H_v) H_u' propagates the driver
        // unchanged: H_v = H_u.
        for (alpha, seed) in [(2.0, 1u64), (0.7, 2), (-1.6, 3)] {
            let driver = Profile::random_monotone(1024, seed);
            let ode = ProfileOde {
                lead: Box::new(move |_, h| alpha + h),
                forcing: Box::new(move |_, _| alpha),
                coupling: Box::new(|_, _| 1.0),
            };
            let hv = strong_profile_relation(&ode, &driver).unwrap();
            let sup = driver
                .samples()
                .iter()
                .zip(hv.samples())
                .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
            assert!(sup <= 1e-10, "alpha = {alpha}: sup deviation {sup}");
        }
    }

    #[test]
    fn chained_equation_forces_third_profile_equal_too() {
        // (alpha + H_u) H_u' = (alpha + H_v) H_sigma' with H_v from the first
        // equation: the stress profile collapses onto the driver as well.
        let alpha = 1.5;
        let driver = Profile::random_monotone(1024, 8);
        let first = ProfileOde {
            lead: Box::new(move |_, h| alpha + h),
            forcing: Box::new(move |_, _| alpha),
            coupling: Box::new(|_, _| 1.0),
        };
        let hv = strong_profile_relation(&first, &driver).unwrap();
        let hv_closure = hv.clone();
        let second = ProfileOde {
            lead: Box::new(move |t, _| alpha + hv_closure.value(t)),
            forcing: Box::new(move |_, h| alpha + h),
            coupling: Box::new(|_, _| 0.0),
        };
        let hs = strong_profile_relation(&second, &driver).unwrap();
        let sup = driver
            .samples()
            .iter()
            .zip(hs.samples())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        assert!(sup <= 1e-8, "sup deviation {sup}");
    }

    #[test]
    fn vanishing_lead_coefficient_is_resonant() {
        // alpha in (-1, 0) makes alpha + H_u cross zero on the ramp.
        let ode = ProfileOde {
            lead: Box::new(|_, h| -0.5 + h),
            forcing: Box::new(|_, _| -0.5),
            coupling: Box::new(|_, _| 1.0),
        };
        assert!(matches!(
            strong_profile_relation(&ode, &Profile::linear()),
            Err(JumpError::ResonantProfile { .. })
        ));
    }

    #[test]
    fn integral_speed_reference_cases() {
        // For (u_l, u_r) = (0, 1) and [sigma] = ln((u_r - c)/(u_l - c)), the
        // admissible speed c = 2 gives ln(1/2).
        let c = integral_jump_speed(0.0, 1.0, 0.5f64.ln()).unwrap();
        assert!((c - 2.0).abs() <= 1e-10, "got {c}");
        let c = integral_jump_speed(-1.0, 1.0, 3.0f64.ln()).unwrap();
        assert!((c + 2.0).abs() <= 1e-10, "got {c}");
    }

    #[test]
    fn integral_speed_rejects_degenerate_jumps() {
        assert!(integral_jump_speed(1.0, 1.0, 0.5).is_err());
        assert!(integral_jump_speed(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn integral_speed_matches_closed_form_on_random_triples() {
        let mut seed = 0x243f6a8885a308d3u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..40 {
            let u_l = 4.0 * next() - 2.0;
            let u_r = u_l + (0.2 + 3.0 * next()) * if next() < 0.5 { 1.0 } else { -1.0 };
            let ds = (0.1 + 1.9 * next()) * if next() < 0.5 { 1.0 } else { -1.0 };
            let closed = u_l - (u_r - u_l) / f64::exp_m1(ds);
            let got = integral_jump_speed(u_l, u_r, ds).unwrap();
            assert!((got - closed).abs() <= 1e-10 * closed.abs().max(1.0));
        }
    }

    #[test]
    fn stress_model_residuals_vanish_on_constructed_jumps() {
        // Build a jump from the wave-family parameterization: pick [u], get
        // [sigma] from the quadratic branch, [v] and c from the relations.
        let (v_l, u_l, s_l, k) = (1.2f64, 0.3, -0.4, 1.5);
        for xi in [-0.6, -0.05, 0.05, 0.8] {
            for branch in [1.0, -1.0] {
                let s = (-xi / 2.0 + branch * (xi * xi / 4.0 + 4.0 * v_l * k * k).sqrt())
                    / (2.0 * v_l);
                let ansatz = ShockAnsatz::with_shared_profile(
                    vec![v_l, u_l, s_l],
                    vec![xi / s, xi, s * xi],
                    u_l - v_l * s,
                    Profile::linear(),
                );
                let r = k2_jump_residuals(&ansatz, k).unwrap();
                assert!(r.max_abs() <= 1e-12, "xi = {xi}, branch = {branch}: {:?}", r.values);
            }
        }
    }

    #[test]
    fn stress_model_zero_jump_is_trivially_consistent() {
        let ansatz = ShockAnsatz::with_shared_profile(
            vec![1.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0],
            0.7,
            Profile::linear(),
        );
        let r = k2_jump_residuals(&ansatz, 2.0).unwrap();
        assert_eq!(r.values, vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn stress_model_partial_zero_jump_is_degenerate() {
        let ansatz = ShockAnsatz::with_shared_profile(
            vec![1.0, 0.0, 0.0],
            vec![0.5, 0.0, 0.1],
            0.7,
            Profile::linear(),
        );
        assert!(matches!(
            k2_jump_residuals(&ansatz, 2.0),
            Err(JumpError::DegenerateJump(_))
        ));
    }
}
