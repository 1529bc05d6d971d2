//! Ramp profiles, regularized steps, and the two notions of equality.
//!
//! A discontinuity is modelled microscopically: a `Profile` is a monotone
//! ramp from 0 to 1 on the unit interval, and a `RegularizedStep` is that
//! ramp compressed to width `epsilon`. Products of steps and of step
//! derivatives are perfectly well defined at finite width, so quantities that
//! are meaningless in distribution theory, such as
//!
//! ```text
//!     integral H^n(x) H'(x) dx           (equals 1/(n+1) for every profile)
//!     integral (H^2(x) - H(x)) H'(x) dx  (equals -1/6 for every profile)
//! ```
//!
//! become ordinary integrals over the ramp. The first family underlies the
//! mean-value substitution rule used by the jump-condition machinery; the
//! second is the canonical example of two fields that agree in the weak limit
//! yet differ when multiplied by a derivative.
//!
//! Association (weak-limit equality) is tested numerically: pair the
//! difference of two regularized fields against a smooth compactly supported
//! test function for a decreasing sequence of widths and examine the decay.

use crate::numeric::{gauss_legendre, integrate_gl};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GfError {
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("invalid width sequence: {0}")]
    InvalidWidthSequence(String),
}

// ============================================================================
// Profiles
// ============================================================================

/// Monotone ramp from 0 to 1 stored as values at equispaced nodes.
///
/// Between nodes the profile is interpolated linearly, so its derivative is
/// piecewise constant. That choice makes every ramp integrand that is
/// polynomial in profile values piecewise polynomial, and therefore exactly
/// integrable by a Gauss rule of matching order.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    samples: Vec<f64>,
}

impl Profile {
    /// Default number of subintervals of the unit interval.
    pub const DEFAULT_RESOLUTION: usize = 1024;

    /// The identity ramp at default resolution.
    pub fn linear() -> Self {
        Self::linear_with_resolution(Self::DEFAULT_RESOLUTION)
    }

    pub fn linear_with_resolution(m: usize) -> Self {
        let samples = (0..=m).map(|j| j as f64 / m as f64).collect();
        Self { samples }
    }

    /// Builds a profile from explicit node values.
    ///
    /// Requirements: at least two samples, first exactly 0, last exactly 1,
    /// nondecreasing, all finite. Flat stretches are allowed.
    pub fn from_samples(samples: Vec<f64>) -> Result<Self, GfError> {
        if samples.len() < 2 {
            return Err(GfError::InvalidProfile(format!(
                "need at least 2 samples, got {}",
                samples.len()
            )));
        }
        if samples.iter().any(|s| !s.is_finite()) {
            return Err(GfError::InvalidProfile("samples must be finite".into()));
        }
        if samples[0] != 0.0 {
            return Err(GfError::InvalidProfile(format!(
                "first sample must be 0, got {}",
                samples[0]
            )));
        }
        if *samples.last().unwrap() != 1.0 {
            return Err(GfError::InvalidProfile(format!(
                "last sample must be 1, got {}",
                samples.last().unwrap()
            )));
        }
        if samples.windows(2).any(|w| w[1] < w[0]) {
            return Err(GfError::InvalidProfile("samples must be nondecreasing".into()));
        }
        Ok(Self { samples })
    }

    /// Samples `f` at `m + 1` equispaced nodes and validates the result.
    /// The endpoint values are snapped to exactly 0 and 1 if within 1e-12.
    pub fn from_fn(m: usize, f: impl Fn(f64) -> f64) -> Result<Self, GfError> {
        let mut samples: Vec<f64> = (0..=m).map(|j| f(j as f64 / m as f64)).collect();
        if samples[0].abs() <= 1e-12 {
            samples[0] = 0.0;
        }
        if (samples[m] - 1.0).abs() <= 1e-12 {
            samples[m] = 1.0;
        }
        Self::from_samples(samples)
    }

    /// Deterministic pseudo-random monotone profile, with occasional flat
    /// subintervals. Intended for tests and demonstrations: the claim that a
    /// ramp integral is profile independent deserves adversarial profiles.
    pub fn random_monotone(m: usize, seed: u64) -> Self {
        let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
        let mut next = move || {
            // splitmix64
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z = z ^ (z >> 31);
            (z >> 11) as f64 / (1u64 << 53) as f64
        };
        let mut increments: Vec<f64> = (0..m).map(|_| next().powi(2)).collect();
        for j in (0..m).step_by(17) {
            increments[j] = 0.0;
        }
        let total: f64 = increments.iter().sum();
        let mut samples = Vec::with_capacity(m + 1);
        let mut acc = 0.0;
        samples.push(0.0);
        for inc in &increments {
            acc += inc / total;
            samples.push(acc.min(1.0));
        }
        samples[m] = 1.0;
        Self { samples }
    }

    /// Number of subintervals.
    pub fn resolution(&self) -> usize {
        self.samples.len() - 1
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    /// Piecewise-linear value at `t`, clamped to 0 below and 1 above the ramp.
    pub fn value(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return 0.0;
        }
        if t >= 1.0 {
            return 1.0;
        }
        let m = self.resolution() as f64;
        let scaled = t * m;
        let j = (scaled.floor() as usize).min(self.resolution() - 1);
        let frac = scaled - j as f64;
        self.samples[j] + frac * (self.samples[j + 1] - self.samples[j])
    }

    /// Constant derivative on subinterval `j` (of the unit-interval ramp).
    pub fn slope(&self, j: usize) -> f64 {
        let m = self.resolution() as f64;
        (self.samples[j + 1] - self.samples[j]) * m
    }

    /// Derivative at `t`, taking the value of the subinterval containing `t`;
    /// zero outside the open unit interval.
    pub fn slope_at(&self, t: f64) -> f64 {
        if t <= 0.0 || t >= 1.0 {
            return 0.0;
        }
        let j = ((t * self.resolution() as f64).floor() as usize).min(self.resolution() - 1);
        self.slope(j)
    }

    /// Node positions of this profile scaled to `[0, width]`.
    fn scaled_nodes(&self, width: f64) -> impl Iterator<Item = f64> + '_ {
        let m = self.resolution() as f64;
        (0..=self.resolution()).map(move |j| width * j as f64 / m)
    }
}

// ============================================================================
// Polynomials in two ramp values
// ============================================================================

/// Polynomial `f(p, q) = sum c_ij p^i q^j` in two ramp values.
///
/// Keeping the terms explicit (rather than accepting a closure) lets the
/// moment integral choose a quadrature order that integrates the ramp
/// integrand exactly.
#[derive(Debug, Clone)]
pub struct RampPoly {
    terms: Vec<(f64, u32, u32)>,
}

impl RampPoly {
    pub fn new(terms: Vec<(f64, u32, u32)>) -> Self {
        Self { terms }
    }

    pub fn constant(c: f64) -> Self {
        Self { terms: vec![(c, 0, 0)] }
    }

    /// The first ramp value, `f(p, q) = p`.
    pub fn first() -> Self {
        Self { terms: vec![(1.0, 1, 0)] }
    }

    /// The second ramp value, `f(p, q) = q`.
    pub fn second() -> Self {
        Self { terms: vec![(1.0, 0, 1)] }
    }

    /// `f(p, q) = q^n`.
    pub fn second_power(n: u32) -> Self {
        Self { terms: vec![(1.0, 0, n)] }
    }

    pub fn eval(&self, p: f64, q: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(c, i, j)| c * p.powi(i as i32) * q.powi(j as i32))
            .sum()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|&(_, i, j)| i + j).max().unwrap_or(0)
    }

    /// Exact value of `integral_0^1 f(t, t) dt`, the substitution oracle for
    /// equal-profile moments.
    pub fn diagonal_integral(&self) -> f64 {
        self.terms.iter().map(|&(c, i, j)| c / (i + j + 1) as f64).sum()
    }
}

/// Ramp moment `integral_0^1 f(P_a(t), P_b(t)) P_b'(t) dt`.
///
/// This is the width-independent value of
/// `integral f(H_a(x), H_b(x)) H_b'(x) dx` when both steps share the width.
/// On every subinterval of the merged node grid both profiles are linear and
/// `P_b'` is constant, so a Gauss rule matched to the polynomial degree makes
/// the computation exact up to rounding. In particular, for `a == b` the
/// result equals `integral_0^1 f(t, t) dt` for every profile, flat stretches
/// included, which is the substitution rule the jump machinery relies on.
pub fn moment_integral(f: &RampPoly, a: &Profile, b: &Profile) -> f64 {
    let mut nodes: Vec<f64> = a
        .scaled_nodes(1.0)
        .chain(b.scaled_nodes(1.0))
        .collect();
    nodes.sort_by(|x, y| x.partial_cmp(y).unwrap());
    nodes.dedup();
    let npts = (f.total_degree() as usize / 2 + 1).max(1);
    let rule = gauss_legendre(npts);
    let mut acc = 0.0;
    for w in nodes.windows(2) {
        if w[1] <= w[0] {
            continue;
        }
        let slope = b.slope_at(0.5 * (w[0] + w[1]));
        if slope == 0.0 {
            continue;
        }
        acc += integrate_gl(
            &mut |t: f64| f.eval(a.value(t), b.value(t)) * slope,
            w[0],
            w[1],
            &rule,
        );
    }
    acc
}

// ============================================================================
// Regularized steps and test functions
// ============================================================================

/// A profile compressed to a ramp of width `epsilon` starting at the origin:
/// 0 for `x <= 0`, 1 for `x >= epsilon`.
#[derive(Debug, Clone)]
pub struct RegularizedStep {
    pub profile: Profile,
    pub epsilon: f64,
}

impl RegularizedStep {
    pub fn new(profile: Profile, epsilon: f64) -> Result<Self, GfError> {
        if !(epsilon > 0.0) || !epsilon.is_finite() {
            return Err(GfError::InvalidProfile(format!("width must be positive, got {epsilon}")));
        }
        Ok(Self { profile, epsilon })
    }

    pub fn value(&self, x: f64) -> f64 {
        self.profile.value(x / self.epsilon)
    }

    /// The derivative of the step: supported on `[0, epsilon]`, of magnitude
    /// `1/epsilon`, integrating to exactly 1.
    pub fn dirac(&self, x: f64) -> f64 {
        self.profile.slope_at(x / self.epsilon) / self.epsilon
    }
}

/// Smooth function with compact support; evaluates to zero outside.
pub struct TestFunction {
    support: (f64, f64),
    eval: Box<dyn Fn(f64) -> f64>,
}

impl TestFunction {
    pub fn new(support: (f64, f64), eval: impl Fn(f64) -> f64 + 'static) -> Self {
        assert!(support.0 < support.1, "support must be a nonempty interval");
        Self { support, eval: Box::new(eval) }
    }

    /// The standard smooth bump, scaled so that `value(center) = 1`.
    pub fn bump(center: f64, halfwidth: f64) -> Self {
        assert!(halfwidth > 0.0);
        Self::new((center - halfwidth, center + halfwidth), move |x| {
            let s = (x - center) / halfwidth;
            let d = 1.0 - s * s;
            if d <= 0.0 {
                0.0
            } else {
                (1.0 - 1.0 / d).exp()
            }
        })
    }

    pub fn support(&self) -> (f64, f64) {
        self.support
    }

    pub fn value(&self, x: f64) -> f64 {
        if x < self.support.0 || x > self.support.1 {
            0.0
        } else {
            (self.eval)(x)
        }
    }
}

/// Pairing `integral H'(x) phi(x) dx` of a step derivative with a test
/// function. Converges to `phi(0)` at first order in the width.
pub fn delta_pairing(step: &RegularizedStep, phi: &TestFunction) -> f64 {
    // Substituted form: integral_0^1 P'(t) phi(eps t) dt, one panel per
    // profile subinterval where P' is constant.
    let rule = gauss_legendre(8);
    let m = step.profile.resolution();
    let mut acc = 0.0;
    for j in 0..m {
        let slope = step.profile.slope(j);
        if slope == 0.0 {
            continue;
        }
        let t0 = j as f64 / m as f64;
        let t1 = (j + 1) as f64 / m as f64;
        acc += integrate_gl(
            &mut |t: f64| slope * phi.value(step.epsilon * t),
            t0,
            t1,
            &rule,
        );
    }
    acc
}

// ============================================================================
// Regularized field expressions and association
// ============================================================================

/// One product term `coef * prod_k H_{p_k}^{e_k} * [H_d']`, where every step
/// shares the same (externally supplied) width.
#[derive(Debug, Clone)]
pub struct FieldTerm {
    pub coef: f64,
    pub steps: Vec<(Profile, u32)>,
    pub dirac: Option<Profile>,
}

/// Sum of product terms; the `epsilon -> 0` family of fields whose weak
/// limits the association check examines.
#[derive(Debug, Clone, Default)]
pub struct RegularizedExpr {
    pub terms: Vec<FieldTerm>,
}

impl RegularizedExpr {
    /// `H^n` built on `profile`.
    pub fn step_power(profile: Profile, n: u32) -> Self {
        Self {
            terms: vec![FieldTerm { coef: 1.0, steps: vec![(profile, n)], dirac: None }],
        }
    }

    /// `H'` built on `profile`.
    pub fn dirac(profile: Profile) -> Self {
        Self { terms: vec![FieldTerm { coef: 1.0, steps: vec![], dirac: Some(profile) }] }
    }

    /// `H^n * H_d'` with independent profiles for the step and the derivative.
    pub fn step_power_times_dirac(step: Profile, n: u32, dirac: Profile) -> Self {
        Self {
            terms: vec![FieldTerm { coef: 1.0, steps: vec![(step, n)], dirac: Some(dirac) }],
        }
    }

    pub fn value(&self, x: f64, epsilon: f64) -> f64 {
        let mut acc = 0.0;
        for term in &self.terms {
            let mut v = term.coef;
            for (profile, power) in &term.steps {
                v *= profile.value(x / epsilon).powi(*power as i32);
            }
            if let Some(d) = &term.dirac {
                v *= d.slope_at(x / epsilon) / epsilon;
            }
            acc += v;
        }
        acc
    }

    fn max_step_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| t.steps.iter().map(|(_, e)| e).sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    fn collect_nodes(&self, width: f64, into: &mut Vec<f64>) {
        for term in &self.terms {
            for (profile, _) in &term.steps {
                into.extend(profile.scaled_nodes(width));
            }
            if let Some(d) = &term.dirac {
                into.extend(d.scaled_nodes(width));
            }
        }
    }
}

/// Decay record of the pairings `integral (g1 - g2) phi dx` over a width
/// sequence, with the fitted order and the association verdict.
#[derive(Debug, Clone)]
pub struct TrendReport {
    /// `(epsilon, pairing value)` in the order supplied.
    pub pairings: Vec<(f64, f64)>,
    /// Least-squares slope of `log |value|` against `log epsilon`;
    /// `f64::INFINITY` when the pairings vanish identically.
    pub decay_order: f64,
    /// True when the pairings tend to zero, i.e. the two fields are
    /// associated as far as this test function can tell.
    pub tends_to_zero: bool,
}

/// Tests association of two regularized fields against one test function.
///
/// For each width the difference is integrated exactly over the ramp panels
/// and with composite Gauss panels over the rest of the support. The verdict
/// combines a fitted decay order of at least 1/2 with an amplitude check that
/// the last pairing has actually decayed, guarding against sequences whose
/// fit is dominated by the first few widths.
pub fn association_check(
    g1: &RegularizedExpr,
    g2: &RegularizedExpr,
    phi: &TestFunction,
    widths: &[f64],
) -> Result<TrendReport, GfError> {
    if widths.len() < 2 {
        return Err(GfError::InvalidWidthSequence("need at least two widths".into()));
    }
    if widths.iter().any(|&e| !(e > 0.0) || !e.is_finite()) {
        return Err(GfError::InvalidWidthSequence("widths must be positive and finite".into()));
    }
    if widths.windows(2).any(|w| w[1] >= w[0]) {
        return Err(GfError::InvalidWidthSequence("widths must be strictly decreasing".into()));
    }

    let degree = g1.max_step_degree().max(g2.max_step_degree()) as usize;
    let ramp_rule = gauss_legendre(degree / 2 + 6);
    let outer_rule = gauss_legendre(8);
    let (lo, hi) = phi.support();

    let mut pairings = Vec::with_capacity(widths.len());
    for &eps in widths {
        let mut integrand = |x: f64| (g1.value(x, eps) - g2.value(x, eps)) * phi.value(x);
        let mut total = 0.0;
        // Left of the ramp: fields are constant, phi is smooth.
        if lo < 0.0 {
            let n = 48;
            for k in 0..n {
                let a = lo + (0.0 - lo) * k as f64 / n as f64;
                let b = lo + (0.0 - lo) * (k + 1) as f64 / n as f64;
                total += integrate_gl(&mut integrand, a, b, &outer_rule);
            }
        }
        // The ramp itself, split at every profile node.
        let mut nodes = vec![0.0, eps];
        g1.collect_nodes(eps, &mut nodes);
        g2.collect_nodes(eps, &mut nodes);
        nodes.retain(|x| x.is_finite());
        nodes.sort_by(|a, b| a.partial_cmp(b).unwrap());
        nodes.dedup();
        for w in nodes.windows(2) {
            if w[1] > w[0] {
                total += integrate_gl(&mut integrand, w[0], w[1], &ramp_rule);
            }
        }
        // Right of the ramp.
        if hi > eps {
            let n = 48;
            for k in 0..n {
                let a = eps + (hi - eps) * k as f64 / n as f64;
                let b = eps + (hi - eps) * (k + 1) as f64 / n as f64;
                total += integrate_gl(&mut integrand, a, b, &outer_rule);
            }
        }
        pairings.push((eps, total));
    }

    Ok(trend_verdict(pairings))
}

fn trend_verdict(pairings: Vec<(f64, f64)>) -> TrendReport {
    const FLOOR: f64 = 1e-300;
    let nonzero: Vec<(f64, f64)> = pairings
        .iter()
        .filter(|(_, v)| v.abs() > FLOOR)
        .map(|&(e, v)| (e.ln(), v.abs().ln()))
        .collect();

    let decay_order = if nonzero.len() < 2 {
        f64::INFINITY
    } else {
        let n = nonzero.len() as f64;
        let mx = nonzero.iter().map(|(x, _)| x).sum::<f64>() / n;
        let my = nonzero.iter().map(|(_, y)| y).sum::<f64>() / n;
        let mut num = 0.0;
        let mut den = 0.0;
        for (x, y) in &nonzero {
            num += (x - mx) * (y - my);
            den += (x - mx) * (x - mx);
        }
        if den == 0.0 {
            f64::INFINITY
        } else {
            num / den
        }
    };

    let (e_first, v_first) = pairings[0];
    let (e_last, v_last) = *pairings.last().unwrap();
    let amplitude_ok = v_last.abs() <= 10.0 * v_first.abs() * (e_last / e_first).sqrt();
    let tends_to_zero = decay_order >= 0.5 && amplitude_ok;

    TrendReport { pairings, decay_order, tends_to_zero }
}

// ============================================================================
// Ramp integration helper for external residual checks
// ============================================================================

/// Integrates an arbitrary integrand over `[0, width]`, splitting panels at
/// the scaled nodes of the supplied profiles and at `extra_breakpoints`.
///
/// Residual checks for traveling-wave ansatzes build their integrand as a
/// closure over regularized fields; this helper gives them the same
/// panel-exact treatment the module uses internally.
pub fn integrate_over_ramp(
    integrand: &mut dyn FnMut(f64) -> f64,
    width: f64,
    profiles: &[&Profile],
    extra_breakpoints: &[f64],
    points_per_panel: usize,
) -> f64 {
    let mut nodes = vec![0.0, width];
    for p in profiles {
        nodes.extend(p.scaled_nodes(width));
    }
    nodes.extend(
        extra_breakpoints
            .iter()
            .copied()
            .filter(|x| x.is_finite() && *x > 0.0 && *x < width),
    );
    nodes.sort_by(|a, b| a.partial_cmp(b).unwrap());
    nodes.dedup();
    let rule = gauss_legendre(points_per_panel);
    let mut acc = 0.0;
    for w in nodes.windows(2) {
        if w[1] > w[0] {
            acc += integrate_gl(integrand, w[0], w[1], &rule);
        }
    }
    acc
}

// ============================================================================
