//! One-dimensional elastoplasticity in (v, u, s, p): specific volume,
//! velocity, stress deviator, pressure, with yield threshold s_0.
//!
//! The model splits into a transport step, which advects every variable with
//! the flow, and a force step
//!
//! ```text
//!     v_t - v u_x = 0
//!     u_t + v (p - s)_x = 0
//!     s_t - k^2(s) u_x = 0,      k^2(s) = k^2 for |s| < s_0, else 0
//!     p_t + gamma p u_x = 0
//! ```
//!
//! All variables share one discontinuity profile, so the mean-value rule
//! turns each equation into a jump relation with arithmetic means as
//! coefficients. The force step has characteristic speeds -a, 0, 0, +a with
//! a = sqrt(v (gamma p + k^2)); its Riemann fan is two facing waves plus a
//! standing wave that carries a free volume jump and equal jumps of s and p.
//!
//! When an elastic solve drives the stress past the yield threshold, the
//! stress inside the wave follows the shared ramp only over the elastic
//! fraction phi = -c [s] / (k^2 [u]) adjacent to the unyielded side and sits
//! at the cap on the rest: its profile is the clamped image of the shared
//! one. The only further change to the jump relations is the v-coefficient
//! of [s] in the velocity equation, which becomes the mean of v over the
//! elastic fraction instead of over the whole ramp.

use super::{RiemannFan, RiemannSolver, SolverError, Wave};
use crate::gf::{integrate_over_ramp, Profile};
use crate::jump::{AssocEquation, Coefficient};
use crate::numeric;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElastoState {
    /// Specific volume, 1/density.
    pub v: f64,
    pub u: f64,
    /// Stress deviator.
    pub s: f64,
    pub p: f64,
}

impl ElastoState {
    pub fn new(v: f64, u: f64, s: f64, p: f64) -> Self {
        Self { v, u, s, p }
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.v, self.u, self.s, self.p]
    }

    pub fn from_slice(w: &[f64]) -> Self {
        Self { v: w[0], u: w[1], s: w[2], p: w[3] }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ElastoParams {
    pub gamma: f64,
    pub k: f64,
    /// Yield threshold for the stress deviator.
    pub s0: f64,
}

impl ElastoParams {
    pub fn new(gamma: f64, k: f64, s0: f64) -> Self {
        assert!(gamma > 1.0, "gamma must exceed 1");
        assert!(k > 0.0, "coupling constant must be positive");
        assert!(s0 > 0.0, "yield threshold must be positive");
        Self { gamma, k, s0 }
    }

    /// The switched coupling k^2(s).
    pub fn k2_of(&self, s: f64) -> f64 {
        if s.abs() < self.s0 {
            self.k * self.k
        } else {
            0.0
        }
    }

    /// Sound speed sqrt(v (gamma p + k^2(s))) of the force step at a state.
    pub fn sound_speed(&self, w: &ElastoState) -> f64 {
        (w.v * (self.gamma * w.p + self.k2_of(w.s))).sqrt()
    }
}

/// Transport-step fan: every variable rides one discontinuity at the
/// Burgers midpoint speed.
pub fn elasto_transport_riemann(left: &ElastoState, right: &ElastoState) -> RiemannFan {
    if left == right {
        return RiemannFan::empty();
    }
    let speed = 0.5 * (left.u + right.u);
    RiemannFan::single(Wave::new(speed, left.as_array().to_vec(), right.as_array().to_vec()))
}

// ============================================================================
// Force step
// ============================================================================

#[derive(Debug, Clone, Copy, PartialEq)]
enum Branch {
    Elastic,
    /// Middle stress pinned at sign * s_0.
    Capped(f64),
    /// Data already at yield: no stress jump at all.
    Frozen,
}

/// Four jump-relation residuals of one force-step wave. `wl`/`wr` are the
/// states left/right of the wave, `data_on_left` says which side is the
/// outer Riemann data (the unyielded side a capped stress ramp hugs).
fn wave_relations(
    wl: &ElastoState,
    wr: &ElastoState,
    c: f64,
    branch: Branch,
    par: &ElastoParams,
    data_on_left: bool,
    out: &mut Vec<f64>,
) {
    let (dv, du, ds, dp) = (wr.v - wl.v, wr.u - wl.u, wr.s - wl.s, wr.p - wl.p);
    let vbar = 0.5 * (wl.v + wr.v);
    let pbar = 0.5 * (wl.p + wr.p);
    let k2 = par.k * par.k;

    // Moment of the specific volume against the stress ramp. For a capped
    // wave the ramp hugs the data side with elastic fraction
    // phi = -c ds / (k^2 du); eliminating phi with the volume relation
    // -c dv = vbar du turns the moment term into a form free of du
    // divisions, which keeps the Jacobian regular for marginal yields.
    let s_term = match branch {
        Branch::Capped(_) => {
            if data_on_left {
                wl.v * ds + vbar * ds * ds / (2.0 * k2)
            } else {
                wr.v * ds - vbar * ds * ds / (2.0 * k2)
            }
        }
        _ => vbar * ds,
    };
    let stress_relation = match branch {
        Branch::Elastic => -c * ds - k2 * du,
        Branch::Capped(sign) => {
            let s_mid = if data_on_left { wr.s } else { wl.s };
            s_mid - sign * par.s0
        }
        Branch::Frozen => ds,
    };

    out.push(-c * dv - vbar * du);
    out.push(-c * du + vbar * dp - s_term);
    out.push(stress_relation);
    out.push(-c * dp + par.gamma * pbar * du);
}

fn unpack(
    x: &[f64],
    left: &ElastoState,
    right: &ElastoState,
) -> (ElastoState, ElastoState, f64, f64) {
    let ml = ElastoState { v: x[0], u: x[5], s: x[2], p: x[4] };
    let p_mr = x[4] - x[2] + x[3];
    let mr = ElastoState { v: x[1], u: x[5], s: x[3], p: p_mr };
    let _ = (left, right);
    (ml, mr, x[6], x[7])
}

/// Riemann fan of the force step: a left-going and a right-going wave around
/// a standing wave, with plastic capping of the stress when an elastic solve
/// would cross the yield threshold.
///
/// Unknowns are the middle volumes, middle stresses, the left middle
/// pressure, the shared middle velocity, and the two speeds; the right middle
/// pressure follows from the standing-wave relation [p] = [s]. Branch
/// selection starts elastic and switches a wave to the capped form (or, for
/// data already at yield, to a frozen stress) when its middle stress lands
/// outside [-s_0, s_0], with at most two re-solve passes.
pub fn elasto_force_riemann(
    left: &ElastoState,
    right: &ElastoState,
    par: &ElastoParams,
) -> Result<RiemannFan, SolverError> {
    if !(left.v > 0.0) || !(right.v > 0.0) {
        return Err(SolverError::NonPositive { what: "specific volume", value: left.v.min(right.v) });
    }
    if !(left.p > 0.0) || !(right.p > 0.0) {
        return Err(SolverError::NonPositive { what: "pressure", value: left.p.min(right.p) });
    }
    let s0 = par.s0;
    if left.s.abs() > s0 * (1.0 + 1e-12) || right.s.abs() > s0 * (1.0 + 1e-12) {
        return Err(SolverError::Inadmissible(format!(
            "stress data ({}, {}) beyond the yield threshold {s0}",
            left.s, right.s
        )));
    }
    if left == right {
        return Ok(RiemannFan::empty());
    }

    let scale = [left.v, right.v, left.u, right.u, left.p, right.p, s0]
        .iter()
        .fold(1.0f64, |m, x| m.max(x.abs()));
    // The wave relations are homogeneous in the speed and velocity jumps, so
    // every root has a mirror with flipped speeds, and near-symmetric data
    // puts both at the same distance from the guess. Carrying the
    // sign-definite unknowns (volumes, pressure, speeds) as square roots
    // keeps the iteration inside the physical orthant where no mirror lives.
    let to_x = |z: &[f64]| -> Vec<f64> {
        let mut x = z.to_vec();
        x[0] = z[0] * z[0];
        x[1] = z[1] * z[1];
        x[4] = z[4] * z[4];
        x[6] = -z[6] * z[6];
        x[7] = z[7] * z[7];
        x
    };
    let solve = |branches: (Branch, Branch), guess: &[f64]| -> Result<Vec<f64>, SolverError> {
        let f = |z: &[f64]| -> Vec<f64> {
            let x = to_x(z);
            let (ml, mr, c_l, c_r) = unpack(&x, left, right);
            let mut out = Vec::with_capacity(8);
            wave_relations(left, &ml, c_l, branches.0, par, true, &mut out);
            wave_relations(&mr, right, c_r, branches.1, par, false, &mut out);
            out
        };
        let mut z0 = guess.to_vec();
        z0[0] = guess[0].max(0.0).sqrt();
        z0[1] = guess[1].max(0.0).sqrt();
        z0[4] = guess[4].max(0.0).sqrt();
        z0[6] = (-guess[6]).max(0.0).sqrt();
        z0[7] = guess[7].max(0.0).sqrt();
        numeric::newton_solve(&f, &z0, 1e-12 * scale, 100)
            .map(|z| to_x(&z))
            .map_err(|e| SolverError::NoMiddleState(format!("force-step Newton: {e}")))
    };

    let decide = |x: &[f64], branches: (Branch, Branch)| -> (Branch, Branch) {
        let (ml, mr, _, _) = unpack(x, left, right);
        let switch = |branch: Branch, s_mid: f64, s_data: f64| -> Branch {
            match branch {
                Branch::Elastic if s_mid.abs() > s0 * (1.0 + 1e-12) => {
                    if s_data.abs() >= s0 * (1.0 - 1e-12) {
                        Branch::Frozen
                    } else {
                        Branch::Capped(s_mid.signum())
                    }
                }
                other => other,
            }
        };
        (switch(branches.0, ml.s, left.s), switch(branches.1, mr.s, right.s))
    };

    // Acoustic starting point. Starting from the raw data would zero several
    // jump factors and with them the speed columns of the Jacobian, so the
    // middle state is predicted from the linearized wave relations instead:
    // impedance-weighted velocity, then pressure, stress and volume carried
    // along each wave at the data sound speeds.
    let guess = {
        let k2 = par.k * par.k;
        let c_gl = -par.sound_speed(left);
        let c_gr = par.sound_speed(right);
        let imp_l = -c_gl / left.v;
        let imp_r = c_gr / right.v;
        let u_g = (imp_l * left.u + imp_r * right.u + left.p - right.p) / (imp_l + imp_r);
        let p_g = left.p - imp_l * (u_g - left.u);
        let v_gl = left.v * (1.0 - (u_g - left.u) / c_gl);
        let v_gr = right.v * (1.0 + (right.u - u_g) / c_gr);
        if p_g > 0.0 && v_gl > 0.0 && v_gr > 0.0 {
            [
                v_gl,
                v_gr,
                left.s - k2 * (u_g - left.u) / c_gl,
                right.s + k2 * (right.u - u_g) / c_gr,
                p_g,
                u_g,
                c_gl,
                c_gr,
            ]
        } else {
            [
                left.v,
                right.v,
                left.s,
                right.s,
                0.5 * (left.p + right.p),
                0.5 * (left.u + right.u),
                c_gl,
                c_gr,
            ]
        }
    };
    // Elastic fraction carried by one wave of a solution vector, from the
    // stress jump and speed actually present there.
    let phi_valid = |sol: &[f64], side: usize| -> bool {
        let (ml, mr, c_l, c_r) = unpack(sol, left, right);
        let phi = if side == 0 {
            -c_l * (ml.s - left.s) / (par.k * par.k * (ml.u - left.u))
        } else {
            -c_r * (right.s - mr.s) / (par.k * par.k * (right.u - mr.u))
        };
        phi > 0.0 && phi <= 1.0 + 1e-6
    };
    // A root is usable only when the waves straddle the standing wave, the
    // middle states are physical, and any capped wave carries a valid
    // elastic fraction; Newton can otherwise settle on mirror roots with
    // flipped speeds, negated volumes, or an unphysical stress split.
    let healthy = |branches: (Branch, Branch), sol: &[f64]| -> bool {
        let (ml, mr, c_l, c_r) = unpack(sol, left, right);
        if !(c_l < 0.0 && c_r > 0.0 && ml.v > 0.0 && mr.v > 0.0 && ml.p > 0.0 && mr.p > 0.0) {
            return false;
        }
        let ok = |branch: Branch, side: usize| match branch {
            Branch::Capped(_) => phi_valid(sol, side),
            _ => true,
        };
        ok(branches.0, 0) && ok(branches.1, 1)
    };
    // Strong shocks run well ahead of the data sound speeds and can pull the
    // iteration onto a bad root; steeper speed guesses recover it.
    let solve_retry = |branches: (Branch, Branch),
                       bases: &[Vec<f64>]|
     -> Result<Vec<f64>, SolverError> {
        let mut fallback: Option<Result<Vec<f64>, SolverError>> = None;
        for base in bases {
            for speed_scale in [1.0, 2.0, 4.0] {
                let mut g = base.clone();
                g[6] *= speed_scale;
                g[7] *= speed_scale;
                match solve(branches, &g) {
                    Ok(sol) => {
                        if healthy(branches, &sol) {
                            return Ok(sol);
                        }
                        if !matches!(fallback, Some(Ok(_))) {
                            fallback = Some(Ok(sol));
                        }
                    }
                    Err(e) => {
                        if fallback.is_none() {
                            fallback = Some(Err(e));
                        }
                    }
                }
            }
        }
        fallback.expect("at least one solve attempt")
    };

    // Speed estimate for a non-elastic wave. Substituting the volume and
    // pressure relations into the moment equation collapses the mixed
    // moment to w = v + vbar ds / (2 k^2), leaving the quadratic
    // c^2 + (w ds / du) c - v gamma p = 0 in the wave speed.
    let branch_speed = |data: &ElastoState, branch: Branch, left_side: bool, u_m: f64| -> Option<f64> {
        let a = data.v * par.gamma * data.p;
        match branch {
            Branch::Elastic => None,
            Branch::Frozen => Some(if left_side { -a.sqrt() } else { a.sqrt() }),
            Branch::Capped(sign) => {
                let (du, ds) = if left_side {
                    (u_m - data.u, sign * s0 - data.s)
                } else {
                    (data.u - u_m, data.s - sign * s0)
                };
                if du.abs() < 1e-13 * scale {
                    return None;
                }
                let w = data.v * (1.0 + (sign * s0 - data.s) / (2.0 * par.k * par.k));
                let b = w * ds / du;
                let disc = (b * b + 4.0 * a).sqrt();
                Some(if left_side { (-b - disc) / 2.0 } else { (-b + disc) / 2.0 })
            }
        }
    };

    let adapt_to_branches = |x: &mut Vec<f64>, branches: (Branch, Branch)| {
        x[2] = match branches.0 {
            Branch::Capped(sign) => sign * s0,
            Branch::Frozen => left.s,
            Branch::Elastic => x[2],
        };
        x[3] = match branches.1 {
            Branch::Capped(sign) => sign * s0,
            Branch::Frozen => right.s,
            Branch::Elastic => x[3],
        };
        let u_m = x[5];
        if let Some(c) = branch_speed(left, branches.0, true, u_m) {
            x[6] = c;
        }
        if let Some(c) = branch_speed(right, branches.1, false, u_m) {
            x[7] = c;
        }
    };

    let mut branches = (Branch::Elastic, Branch::Elastic);
    let mut x = solve_retry(branches, &[guess.to_vec()])?;
    let mut pending = None;
    for _ in 0..2 {
        let wanted = decide(&x, branches);
        if wanted == branches {
            break;
        }
        branches = wanted;
        // Warm start from the previous solution with stresses and speeds
        // moved onto the selected branch; fall back to the data-based guess
        // likewise moved.
        let mut warm = x.clone();
        adapt_to_branches(&mut warm, branches);
        let mut fresh = guess.to_vec();
        adapt_to_branches(&mut fresh, branches);
        match solve_retry(branches, &[warm, fresh]) {
            Ok(sol) => x = sol,
            Err(e) => {
                pending = Some(e);
                break;
            }
        }
    }

    // Near marginal yield the capped system can lack an admissible root even
    // though the elastic solve overshoots the threshold: capping the opposite
    // wave alone shifts the middle velocity enough to pull this side back
    // inside. Demote capped sides to elastic one at a time, starting with any
    // side whose elastic fraction came out invalid, and keep the first
    // self-consistent healthy root.
    let settled = |br: (Branch, Branch), sol: &[f64]| healthy(br, sol) && decide(sol, br) == br;
    if pending.is_some() || !settled(branches, &x) {
        let capped = |side: usize| {
            matches!(
                if side == 0 { branches.0 } else { branches.1 },
                Branch::Capped(_)
            )
        };
        let mut sides: Vec<usize> = Vec::new();
        for side in [0, 1] {
            if capped(side) && !phi_valid(&x, side) {
                sides.push(side);
            }
        }
        for side in [0, 1] {
            if capped(side) && !sides.contains(&side) {
                sides.push(side);
            }
        }
        for side in sides {
            let cand = if side == 0 {
                (Branch::Elastic, branches.1)
            } else {
                (branches.0, Branch::Elastic)
            };
            let mut warm = x.clone();
            adapt_to_branches(&mut warm, cand);
            let mut fresh = guess.to_vec();
            adapt_to_branches(&mut fresh, cand);
            if let Ok(sol) = solve_retry(cand, &[warm, fresh]) {
                if settled(cand, &sol) {
                    branches = cand;
                    x = sol;
                    pending = None;
                    break;
                }
            }
        }
    }
    if let Some(e) = pending {
        return Err(e);
    }
    if decide(&x, branches) != branches {
        return Err(SolverError::Inadmissible(
            "plastic branch selection did not settle within two re-solves".into(),
        ));
    }

    // Clamp roundoff-level threshold crossings so no output state exceeds the
    // yield stress, then rebuild the dependent middle pressure.
    x[2] = x[2].clamp(-s0, s0);
    x[3] = x[3].clamp(-s0, s0);
    let (ml, mr, c_l, c_r) = unpack(&x, left, right);
    if !(ml.v > 0.0) || !(mr.v > 0.0) {
        return Err(SolverError::NoMiddleState(format!(
            "middle specific volumes ({}, {}) not positive",
            ml.v, mr.v
        )));
    }
    if !(ml.p > 0.0) || !(mr.p > 0.0) {
        return Err(SolverError::NoMiddleState(format!(
            "middle pressures ({}, {}) not positive",
            ml.p, mr.p
        )));
    }
    if !(c_l < 0.0 && c_r > 0.0) {
        return Err(SolverError::SpeedOrdering(format!(
            "force-step waves must straddle the standing wave, got {c_l}, {c_r}"
        )));
    }
    for (branch, wl, wr, c) in [
        (branches.0, left, &ml, c_l),
        (branches.1, &mr, right, c_r),
    ] {
        if let Branch::Capped(_) = branch {
            let (du, ds) = (wr.u - wl.u, wr.s - wl.s);
            let phi = -c * ds / (par.k * par.k * du);
            if !(phi > 0.0 && phi <= 1.0 + 1e-6) {
                return Err(SolverError::Inadmissible(format!(
                    "elastic fraction {phi} of a capped wave out of range"
                )));
            }
        }
    }

    let la = left.as_array().to_vec();
    let mla = ml.as_array().to_vec();
    let mra = mr.as_array().to_vec();
    let ra = right.as_array().to_vec();
    let mut waves = vec![Wave::new(c_l, la, mla.clone())];
    if mla != mra {
        waves.push(Wave::new(0.0, mla, mra.clone()));
    }
    waves.push(Wave::new(c_r, mra, ra));
    Ok(RiemannFan { waves, delta: None })
}

/// The four force-step equations in advection-source form for
/// [`crate::jump::assoc_jump_residual`]. The stress source carries the
/// switched coupling, so these relations apply to waves that stay on one
/// side of the yield threshold.
pub fn force_assoc_equations(par: &ElastoParams) -> Vec<AssocEquation> {
    let par = *par;
    let v = |w: &[f64]| w[0];
    vec![
        AssocEquation {
            target: 0,
            advection: Box::new(|_| 0.0),
            sources: vec![(1, Box::new(v) as Coefficient)],
        },
        AssocEquation {
            target: 1,
            advection: Box::new(|_| 0.0),
            sources: vec![
                (2, Box::new(v) as Coefficient),
                (3, Box::new(|w: &[f64]| -w[0]) as Coefficient),
            ],
        },
        AssocEquation {
            target: 2,
            advection: Box::new(|_| 0.0),
            sources: vec![(1, Box::new(move |w: &[f64]| par.k2_of(w[2])) as Coefficient)],
        },
        AssocEquation {
            target: 3,
            advection: Box::new(|_| 0.0),
            sources: vec![(1, Box::new(move |w: &[f64]| -par.gamma * w[3]) as Coefficient)],
        },
    ]
}

/// Regularized residuals of the four force-step equations for one wave.
///
/// v, u, p ride the shared `profile`; the stress rides its clamped image
/// when the wave is plastic, with the elastic fraction recomputed from the
/// wave data and the ramp oriented toward the unyielded side.
pub fn force_ramp_residuals(wave: &Wave, par: &ElastoParams, profile: &Profile) -> [f64; 4] {
    let (dv, du, ds, dp) = (wave.jump(0), wave.jump(1), wave.jump(2), wave.jump(3));
    let (v_l, s_l, p_l) = (wave.left[0], wave.left[2], wave.left[3]);
    let c = wave.speed;
    let k2 = par.k * par.k;

    let phi = if du != 0.0 && ds != 0.0 {
        -c * ds / (k2 * du)
    } else {
        1.0
    };
    // 0 = shared ramp, 1 = elastic part on the left, 2 = on the right.
    let orientation = if !phi.is_finite() || (phi - 1.0).abs() <= 1e-6 || phi <= 0.0 || phi > 1.0 {
        0
    } else if wave.right[2].abs() >= par.s0 * (1.0 - 1e-9) {
        1
    } else {
        2
    };

    // First ramp coordinate where the profile reaches `y`.
    let inverse = |y: f64| -> f64 {
        let samples = profile.samples();
        let m = samples.len() - 1;
        if y <= 0.0 {
            return 0.0;
        }
        if y >= 1.0 {
            return 1.0;
        }
        for j in 0..m {
            if samples[j + 1] >= y && samples[j + 1] > samples[j] {
                let frac = (y - samples[j]) / (samples[j + 1] - samples[j]);
                return (j as f64 + frac.clamp(0.0, 1.0)) / m as f64;
            }
        }
        1.0
    };
    let (t_star, hs, hs_slope): (f64, Box<dyn Fn(f64) -> f64>, Box<dyn Fn(f64) -> f64>) =
        match orientation {
            1 => (
                inverse(phi),
                Box::new(move |t| (profile.value(t) / phi).min(1.0)),
                Box::new(move |t| {
                    if profile.value(t) < phi {
                        profile.slope_at(t) / phi
                    } else {
                        0.0
                    }
                }),
            ),
            2 => (
                inverse(1.0 - phi),
                Box::new(move |t| ((profile.value(t) - (1.0 - phi)) / phi).clamp(0.0, 1.0)),
                Box::new(move |t| {
                    if profile.value(t) > 1.0 - phi {
                        profile.slope_at(t) / phi
                    } else {
                        0.0
                    }
                }),
            ),
            _ => (
                0.5,
                Box::new(|t| profile.value(t)),
                Box::new(|t| profile.slope_at(t)),
            ),
        };

    let breaks = [t_star];
    let quad = |f: &mut dyn FnMut(f64) -> f64| -> f64 {
        integrate_over_ramp(f, 1.0, &[profile], &breaks, 6)
    };
    let r1 = -c * dv
        - quad(&mut |t| (v_l + dv * profile.value(t)) * du * profile.slope_at(t));
    let r2 = -c * du
        + quad(&mut |t| {
            (v_l + dv * profile.value(t)) * (dp * profile.slope_at(t) - ds * hs_slope(t))
        });
    let r3 = -c * ds
        - quad(&mut |t| par.k2_of(s_l + ds * hs(t)) * du * profile.slope_at(t));
    let r4 = -c * dp
        + par.gamma * quad(&mut |t| (p_l + dp * profile.value(t)) * du * profile.slope_at(t));
    [r1, r2, r3, r4]
}

// ============================================================================
// Engine adapters
// ============================================================================

pub struct ElastoTransportSolver;

impl RiemannSolver for ElastoTransportSolver {
    fn components(&self) -> usize {
        4
    }

    fn component_names(&self) -> &'static [&'static str] {
        &["v", "u", "s", "p"]
    }

    fn reflect_indices(&self) -> &'static [usize] {
        &[1]
    }

    fn solve(&self, left: &[f64], right: &[f64]) -> Result<RiemannFan, SolverError> {
        Ok(elasto_transport_riemann(
            &ElastoState::from_slice(left),
            &ElastoState::from_slice(right),
        ))
    }
}

pub struct ElastoForceSolver {
    pub params: ElastoParams,
}

impl RiemannSolver for ElastoForceSolver {
    fn components(&self) -> usize {
        4
    }

    fn component_names(&self) -> &'static [&'static str] {
        &["v", "u", "s", "p"]
    }

    fn reflect_indices(&self) -> &'static [usize] {
        &[1]
    }

    fn solve(&self, left: &[f64], right: &[f64]) -> Result<RiemannFan, SolverError> {
        elasto_force_riemann(
            &ElastoState::from_slice(left),
            &ElastoState::from_slice(right),
            &self.params,
        )
    }
}
