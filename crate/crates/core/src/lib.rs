//! Certified two-sided bounds on arcsine from the rational family
//! `phi_{a,b}(x) = a*x / (b + sqrt(1 - x^2))` on `[0, 1]`.
//!
//! Matching value and slope against arcsine at the origin reduces the family
//! to one parameter (`a = b + 1`); the sign of the remaining distance
//! `f_b - asin` is then decided rigorously by outward-rounded interval
//! arithmetic and adaptive subdivision, producing machine-checkable
//! certificates. On top of the verifier sit parameter searches that recover
//! the extremal members — the least upper bound at `b = 2/(pi - 2)` and the
//! greatest lower bound at `b = 2` (Shafer's bound) — together with the
//! classifier for the four sign regimes of the distance derivative.
//!
//! The `asincert` binary exposes verification, parameter search, regime
//! classification and gap tables; see the crate README.

pub mod cli;
pub mod error;
pub mod functions;
pub mod interval;
pub mod lambda;
pub mod optimizer;
pub mod replay;
pub mod verifier;

pub use error::{Error, Result};
pub use functions::{FamilyParams, ReducedParam};
pub use interval::Interval;
pub use lambda::{classify, tangency_reduce, thresholds, Classification, RegimeTag, Thresholds};
pub use optimizer::{find_bounds, find_lower_parameter, find_upper_parameter, max_gap, BoundsReport, GapReport};
pub use replay::{replay, replay_json};
pub use verifier::{
    find_crossing, verify, verify_difference, verify_family, Certificate, Claim, ClaimTarget,
    Crossing, Relation, Verdict, VerifierConfig,
};
