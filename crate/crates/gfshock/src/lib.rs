//! Shock-capturing toolkit built on regularized Heaviside profiles.
//!
//! The classical theory of distributions has no product, so jump conditions
//! for nonconservative systems (multiplication of a discontinuous coefficient
//! by a derivative carrying a Dirac mass) are ambiguous. This crate resolves
//! the ambiguity the constructive way: every discontinuity is modelled by an
//! explicit ramp profile of microscopic width, products are evaluated on the
//! ramp, and only then is the width sent to zero. Two regularized fields can
//! then be compared in two inequivalent ways:
//!
//! * strong equality, which survives multiplication by another field, and
//! * association (weak-limit equality), which does not.
//!
//! `H^2` and `H` are associated but not strongly equal; the moment
//! `integral (H^2 - H) H' dx = -1/6` is the basic obstruction, and it is what
//! makes jump conditions of nonconservative systems depend on the shape of
//! the ramp unless the equations pin the shapes down.
//!
//! Module layout:
//!
//! * [`gf`] - ramp profiles, regularized steps, moments, association checks.
//! * [`jump`] - jump conditions extracted from the ramp calculus: classical
//!   Rankine-Hugoniot, mean-value (association) residuals, strong profile
//!   relations, and the logarithmic traveling-wave speed for a model stated
//!   with strong equality.
//! * [`systems`] - Riemann solvers for the model systems: inviscid Burgers,
//!   a three-equation stress model, the two fractional steps of a split
//!   Euler scheme, and a four-field elastoplastic solid.
//! * [`godunov`] - the projection engine: CFL step control, exact averaging
//!   of juxtaposed Riemann fans, point-mass bookkeeping for delta shocks,
//!   operator splitting, and a dimensional 2-D driver.
//! * [`hurricane`] - a semi-Lagrangian integrator for a 2-D wind field with
//!   rotation/friction source terms integrated exactly.
//! * [`config`] - INI-style scenario files, named presets, validation.
//! * [`runner`] - scenario execution, CSV snapshots, run manifests.

pub mod config;
pub mod gf;
pub mod godunov;
pub mod hurricane;
pub mod jump;
pub mod numeric;
pub mod runner;
pub mod systems;
