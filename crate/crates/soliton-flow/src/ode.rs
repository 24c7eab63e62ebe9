//! Metric signs and the reduced profile equation.
//!
//! The slope `w = f'` of an invariant soliton profile satisfies the scalar
//! equation `w' = (ε̃ + ε w²)(1 − h(s) w)`. Everything else in the crate is
//! built on this right-hand side and the coupled `(f, w)` system.

use serde::{Deserialize, Serialize};

/// A metric sign, exactly `+1` or `−1`.
///
/// Illegal values are unconstructible; use [`Sign::try_from`] to validate
/// integers coming from the outside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        match s {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> Result<Self, Self::Error> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(format!("sign must be +1 or -1, got {other}")),
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:+}", i8::from(*self))
    }
}

/// The pair `(ε, ε̃)` selecting the equation branch.
///
/// `ε` is the sign of `⟨∂t, ∂t⟩` (spacelike or timelike translation
/// direction), `ε̃` the value of `‖∇π‖²` on the orbit space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub epsilon: Sign,
    pub epsilon_tilde: Sign,
}

impl Signature {
    pub fn new(epsilon: Sign, epsilon_tilde: Sign) -> Self {
        Signature {
            epsilon,
            epsilon_tilde,
        }
    }

    /// Both signs `+1`: the Riemannian graph case.
    pub const fn riemannian() -> Self {
        Signature {
            epsilon: Sign::Plus,
            epsilon_tilde: Sign::Plus,
        }
    }

    /// The product `ε·ε̃`; the lines `w = ±1` are equilibria exactly when
    /// this is `−1`.
    pub fn product(&self) -> f64 {
        self.epsilon.value() * self.epsilon_tilde.value()
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(eps={}, epst={})", self.epsilon, self.epsilon_tilde)
    }
}

/// One point on a profile curve: arc parameter, slope, and height.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileState {
    pub s: f64,
    pub w: f64,
    pub f: f64,
}

impl ProfileState {
    pub fn new(s: f64, w: f64, f: f64) -> Self {
        ProfileState { s, w, f }
    }
}

/// The reduced right-hand side `(ε̃ + ε w²)(1 − h w)`.
///
/// Total on finite inputs. Zeros: `w = 1/h` kills the second factor for any
/// signature; `w = ±1` kills the first factor when `ε·ε̃ = −1`.
#[inline]
pub fn rhs_reduced(sig: Signature, h_val: f64, w: f64) -> f64 {
    (sig.epsilon_tilde.value() + sig.epsilon.value() * w * w) * (1.0 - h_val * w)
}

/// The coupled system `(df/ds, dw/ds) = (w, rhs_reduced)`.
///
/// The first component is the stored `w` bit-exactly.
#[inline]
pub fn rhs_system(sig: Signature, h_val: f64, state: &ProfileState) -> (f64, f64) {
    (state.w, rhs_reduced(sig, h_val, state.w))
}
