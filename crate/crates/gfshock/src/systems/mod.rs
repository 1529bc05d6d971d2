//! Riemann solvers for the model systems.
//!
//! Every solver maps a pair of states to a [`RiemannFan`]: an ordered list of
//! discontinuities, each a [`Wave`] with a speed and the constant states on
//! its two sides, plus an optional traveling point mass ([`DeltaRate`]) for
//! solutions that concentrate mass on a moving line. Fans are what the
//! projection engine averages; they are also the objects the jump-condition
//! residual checks re-examine wave by wave.
//!
//! States cross the trait boundary as plain `&[f64]` slices so the engine can
//! drive any system; the typed entry points in the submodules are the
//! documented interface for direct use.

use thiserror::Error;

pub mod burgers;
pub mod elasto;
pub mod euler;
pub mod k2;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("no admissible middle state: {0}")]
    NoMiddleState(String),
    #[error("inadmissible state: {0}")]
    Inadmissible(String),
    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: f64 },
    #[error("wave speeds out of order: {0}")]
    SpeedOrdering(String),
}

/// One discontinuity of a Riemann fan.
#[derive(Debug, Clone)]
pub struct Wave {
    pub speed: f64,
    /// State on the left of the discontinuity.
    pub left: Vec<f64>,
    /// State on the right of the discontinuity.
    pub right: Vec<f64>,
}

impl Wave {
    pub fn new(speed: f64, left: Vec<f64>, right: Vec<f64>) -> Self {
        Self { speed, left, right }
    }

    pub fn jump(&self, component: usize) -> f64 {
        self.right[component] - self.left[component]
    }

    pub fn is_trivial(&self) -> bool {
        self.left == self.right
    }
}

/// A point mass riding on a fan at constant speed, accumulating conserved
/// quantities at fixed rates. The rates are defined as the conservation
/// deficits of the carrying wave, `rate_i = c [U_i] - [F_i]`, so that cell
/// averages plus point masses stay conserved to machine precision.
#[derive(Debug, Clone)]
pub struct DeltaRate {
    pub speed: f64,
    /// Accumulation rate per conserved component, per unit time.
    pub rates: Vec<f64>,
}

/// Solution of a Riemann problem: ordered waves, optional point mass.
#[derive(Debug, Clone, Default)]
pub struct RiemannFan {
    pub waves: Vec<Wave>,
    pub delta: Option<DeltaRate>,
}

impl RiemannFan {
    pub fn empty() -> Self {
        Self { waves: Vec::new(), delta: None }
    }

    pub fn single(wave: Wave) -> Self {
        Self { waves: vec![wave], delta: None }
    }

    /// Largest absolute signal speed, point mass included.
    pub fn max_abs_speed(&self) -> f64 {
        let mut m = 0.0f64;
        for w in &self.waves {
            m = m.max(w.speed.abs());
        }
        if let Some(d) = &self.delta {
            m = m.max(d.speed.abs());
        }
        m
    }

    /// Structural check: speeds nondecreasing, adjacent states chained, and
    /// outermost states equal to the supplied Riemann data.
    pub fn validate(&self, left: &[f64], right: &[f64]) -> Result<(), SolverError> {
        if self.waves.is_empty() {
            if left != right {
                return Err(SolverError::Inadmissible(
                    "empty fan for unequal Riemann data".into(),
                ));
            }
            return Ok(());
        }
        for pair in self.waves.windows(2) {
            if pair[1].speed < pair[0].speed - 1e-12 {
                return Err(SolverError::SpeedOrdering(format!(
                    "{} then {}",
                    pair[0].speed, pair[1].speed
                )));
            }
            if pair[0].right != pair[1].left {
                return Err(SolverError::Inadmissible(
                    "adjacent wave states do not chain".into(),
                ));
            }
        }
        if self.waves.first().unwrap().left != left || self.waves.last().unwrap().right != right {
            return Err(SolverError::Inadmissible(
                "outermost fan states do not match the Riemann data".into(),
            ));
        }
        Ok(())
    }
}

/// A Riemann solver usable by the projection engine.
pub trait RiemannSolver {
    /// Number of state components.
    fn components(&self) -> usize;

    /// Component names, in the order used by state slices and CSV columns.
    fn component_names(&self) -> &'static [&'static str];

    /// Component indices that flip sign across a reflective wall (velocities
    /// and momenta).
    fn reflect_indices(&self) -> &'static [usize];

    fn solve(&self, left: &[f64], right: &[f64]) -> Result<RiemannFan, SolverError>;
}

/// Scalar linear advection at a fixed speed; the simplest solver, used to
/// exercise generic drivers.
pub struct LinearAdvection {
    pub speed: f64,
}

impl RiemannSolver for LinearAdvection {
    fn components(&self) -> usize {
        1
    }

    fn component_names(&self) -> &'static [&'static str] {
        &["q"]
    }

    fn reflect_indices(&self) -> &'static [usize] {
        &[]
    }

    fn solve(&self, left: &[f64], right: &[f64]) -> Result<RiemannFan, SolverError> {
        if left == right {
            return Ok(RiemannFan::empty());
        }
        Ok(RiemannFan::single(Wave::new(self.speed, left.to_vec(), right.to_vec())))
    }
}
