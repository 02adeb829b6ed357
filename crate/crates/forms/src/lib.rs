//! Exact finite-precision arithmetic for p-adic modular forms.
//!
//! The crate implements, over `Q_p` at a user-chosen capped precision:
//!
//! - [`padic`]: arithmetic in `Z_p`/`Q_p`, Teichmüller lifts, Hensel lifting;
//! - [`character`]: weight characters splitting into tame and wild parts;
//! - [`qseries`]: truncated q-expansions over pluggable coefficient rings and
//!   the operator calculus `T(l)`, `U`, `V`, `Frob`;
//! - [`zeta`]: Bernoulli numbers, zeta values at negative integers and their
//!   p-adic interpolation, p-adic Eisenstein series;
//! - [`classical`]: exact level-1 modular forms, echelon bases, divided
//!   congruences;
//! - [`ordinary`]: p-stabilization, slopes, the ordinary projector;
//! - [`lambda`]: the Iwasawa algebra `Z_p[[T]]` at finite truncation,
//!   Λ-adic Eisenstein families and Hecke operators;
//! - [`pseudorep`]: trace-level shadows of 2×2 representations, gluing and
//!   reconstruction;
//! - [`overconvergent`]: Katz bases, the compact `U` matrix, Fredholm series
//!   and Newton-polygon slope spectra.
//!
//! All operations are pure and all values immutable; the `parallel` feature
//! (on by default) routes the data-parallel inner loops through rayon.

pub mod character;
pub mod classical;
pub mod lambda;
pub mod ordinary;
pub mod overconvergent;
pub mod padic;
mod par;
pub mod pseudorep;
pub mod qseries;
pub mod ring;
pub mod zeta;

pub use character::WeightCharacter;
pub use padic::PadicNumber;
pub use qseries::QExpansion;

/// Library-wide error type. The CLI maps `Domain`/`InsufficientOrder` to
/// exit code 3 and `Precision` to exit code 4.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A precondition on the mathematical input is violated.
    #[error("domain error: {0}")]
    Domain(String),
    /// The requested answer is not determined at the working precision.
    #[error("precision exhausted: {0}")]
    Precision(String),
    /// A q-order or T-truncation is too small for the requested operation.
    #[error("insufficient order: {0}")]
    InsufficientOrder(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn precision(msg: impl Into<String>) -> Self {
        Error::Precision(msg.into())
    }
    pub fn order(msg: impl Into<String>) -> Self {
        Error::InsufficientOrder(msg.into())
    }
}
