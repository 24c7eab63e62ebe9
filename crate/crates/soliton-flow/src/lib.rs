//! Profile curves of group-invariant translating solitons in product spaces.
//!
//! A hypersurface in a semi-Riemannian product `M × ℝ` (metric `g + ε dt²`)
//! translates under mean curvature flow exactly when its graph height `f`
//! over the one-dimensional orbit space of an isometric group action solves
//!
//! ```text
//! f''(s) = (ε̃ + ε f'(s)²) (1 − h(s) f'(s))
//! ```
//!
//! where `h(s)` is the mean curvature of the orbit over `s` and
//! `ε, ε̃ ∈ {+1, −1}` are the metric signs. This crate integrates the
//! reduced slope equation in `w = f'`, starts trajectories at singular
//! orbits where `h` blows up, classifies trajectory fate (global existence,
//! finite-time slope blow-up, endpoint limits), verifies the closed-form
//! blow-up bounds, and assembles the resulting profiles into exportable
//! surfaces.
//!
//! Modules:
//!
//! - [`ode`] — metric signs and the reduced right-hand side
//! - [`expr`] — expression language for user-supplied `h(s)`
//! - [`integrate`] — adaptive Dormand–Prince 5(4) with blow-up location
//! - [`geometry`] — built-in orbit geometries and expression-backed ones
//! - [`launch`] — trajectory starts at singular endpoints
//! - [`classify`] — outcome classification and blow-up bound verification
//! - [`hyperbolic`] — closed-form first integral for the horosphere family
//! - [`builder`] — profile assembly and surface mesh export
//! - [`cli`] — the `soliton-flow` command-line tool
//!
//! Each major capability has a runnable example under `examples/`.

pub mod assumptions;
pub mod builder;
pub mod classify;
pub mod cli;
pub mod expr;
pub mod geometry;
pub mod hyperbolic;
pub mod integrate;
pub mod launch;
pub mod ode;

pub use classify::{classify, Outcome};
pub use geometry::GeometrySpec;
pub use integrate::{integrate, IntegratorConfig, StopReason, Trajectory};
pub use ode::{ProfileState, Sign, Signature};
