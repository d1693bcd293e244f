//! Extremal parameter searches and the per-parameter gap report.
//!
//! The least-upper-bound parameter is the largest `b` for which `gap_b >= 0`
//! holds on `[0, 1]`; the greatest-lower-bound parameter the smallest `b`
//! with `gap_b <= 0`. Both are found by bisection over `b` with the
//! certification verifier deciding the predicate, so the searches exercise
//! the full proof machinery rather than the closed forms they reproduce
//! (`2/(pi - 2)` and `2`).

use crate::error::{Error, Result};
use crate::functions::{critical_point, endpoint_gap, gap, one_minus_sq, ReducedParam};
use crate::lambda::{classify, RegimeTag};
use crate::verifier::{verify, Claim, ClaimTarget, Relation, Verdict, VerifierConfig};
use serde::{Deserialize, Serialize};

/// Smallest supported search tolerance.
pub const MIN_TOLERANCE: f64 = 1e-12;

/// Fixed iteration budget; the widest bracket shrinks by 3 * 2^-60, far
/// below any admissible tolerance.
const MAX_BISECTIONS: u32 = 60;

/// Maximum of the distance for one parameter.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GapReport {
    pub b: f64,
    /// Stationary or boundary abscissa where the distance peaks.
    pub argmax_x: f64,
    /// Peak value of the distance, in radians.
    pub max_gap: f64,
    /// `gap_b(1) = 1 + 1/b - pi/2`.
    pub endpoint_gap: f64,
    pub regime: RegimeTag,
}

/// The pair of extremal parameters with the closed-form cross-check.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub b1: f64,
    pub b2: f64,
    pub b1_closed_form: f64,
    /// `|b1 - b1_closed_form|`.
    pub agreement: f64,
}

fn check_tolerance(tol: f64) -> Result<()> {
    if !(tol.is_finite() && tol >= MIN_TOLERANCE) {
        return Err(Error::InvalidTolerance {
            tol,
            min: MIN_TOLERANCE,
        });
    }
    Ok(())
}

/// Certifier-backed predicate: does `gap_b <relation> 0` hold on `[0, 1]`?
/// The claim anchors equality at `x = 0` only, where the distance vanishes
/// identically in `b`. UNDECIDED is surfaced as an error carrying the
/// offending parameter.
fn predicate(b: f64, relation: Relation, cfg: &VerifierConfig) -> Result<bool> {
    let claim = Claim::new(
        ClaimTarget::Reduced(ReducedParam::new(b)?),
        relation,
        [0.0, 1.0],
        vec![0.0],
    )?;
    match verify(&claim, cfg)?.verdict {
        Verdict::Proven => Ok(true),
        Verdict::Refuted => Ok(false),
        Verdict::Undecided => Err(Error::Undecided { b }),
    }
}

/// Bisection between a predicate-true end and a predicate-false end; returns
/// the true-side end of the final bracket, so the reported parameter itself
/// satisfies the predicate.
fn bisect_parameter(
    mut true_end: f64,
    mut false_end: f64,
    tol: f64,
    pred: impl Fn(f64) -> Result<bool>,
) -> Result<f64> {
    if !pred(true_end)? || pred(false_end)? {
        let (lo, hi) = if true_end < false_end {
            (true_end, false_end)
        } else {
            (false_end, true_end)
        };
        return Err(Error::InvalidBracket { lo, hi });
    }
    for _ in 0..MAX_BISECTIONS {
        if (true_end - false_end).abs() <= tol {
            break;
        }
        let mid = 0.5 * (true_end + false_end);
        if mid == true_end || mid == false_end {
            break;
        }
        if pred(mid)? {
            true_end = mid;
        } else {
            false_end = mid;
        }
    }
    Ok(true_end)
}

/// Largest `b` with `gap_b >= 0` certified on `[0, 1]`, within `tol` of the
/// closed form `2/(pi - 2)`. Bracket `[1, 4]`: the predicate holds at 1 and
/// fails at 4 by the endpoint sign.
pub fn find_upper_parameter(tol: f64) -> Result<f64> {
    check_tolerance(tol)?;
    let cfg = VerifierConfig::default();
    bisect_parameter(1.0, 4.0, tol, |b| predicate(b, Relation::Ge, &cfg))
}

/// Smallest `b` with `gap_b <= 0` certified on `[0, 1]`, within `tol` of 2.
/// Bracket `[1.9, 3]`.
pub fn find_lower_parameter(tol: f64) -> Result<f64> {
    check_tolerance(tol)?;
    let cfg = VerifierConfig::default();
    bisect_parameter(3.0, 1.9, tol, |b| predicate(b, Relation::Le, &cfg))
}

/// Runs both searches and reports the closed-form agreement for the upper
/// parameter.
pub fn find_bounds(tol: f64) -> Result<BoundsReport> {
    let b1 = find_upper_parameter(tol)?;
    let b2 = find_lower_parameter(tol)?;
    let b1_closed_form = 2.0 / (std::f64::consts::PI - 2.0);
    Ok(BoundsReport {
        b1,
        b2,
        b1_closed_form,
        agreement: (b1 - b1_closed_form).abs(),
    })
}

/// Bisection on the sign of the derivative sign expression
/// `sqrt(1 - x^2) - (b^2 - b - 1)` around the closed-form stationary point.
fn refine_argmax(b: ReducedParam, seed: f64) -> f64 {
    let bb = b.b();
    let c = bb * bb - bb - 1.0;
    let expr = |x: f64| one_minus_sq(x).sqrt() - c;
    let mut lo = (seed - 1e-6).max(0.0);
    let mut hi = (seed + 1e-6).min(1.0);
    // widen until the bracket straddles (the expression decreases in x)
    for _ in 0..60 {
        if expr(lo) > 0.0 {
            break;
        }
        lo = (lo - 1e-3).max(0.0);
        if lo == 0.0 {
            break;
        }
    }
    for _ in 0..60 {
        if expr(hi) < 0.0 {
            break;
        }
        hi = (hi + 1e-3).min(1.0);
        if hi == 1.0 {
            break;
        }
    }
    if !(expr(lo) > 0.0 && expr(hi) < 0.0) {
        return seed;
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if expr(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Locates the maximum of the distance for the given parameter: an interior
/// stationary point (the critical abscissa refined by sign bisection) when
/// one exists, the appropriate endpoint in the monotone regimes.
pub fn max_gap(b: ReducedParam) -> Result<GapReport> {
    let class = classify(b.b())?;
    let (argmax_x, max_gap) = match class.tag {
        RegimeTag::DerivativeNonnegative => (1.0, endpoint_gap(b)),
        RegimeTag::DerivativeNonpositive => (0.0, 0.0),
        RegimeTag::Hump | RegimeTag::Crossing => {
            let seed = critical_point(b)?;
            let x = refine_argmax(b, seed);
            (x, gap(b, x)?)
        }
    };
    Ok(GapReport {
        b: b.b(),
        argmax_x,
        max_gap,
        endpoint_gap: endpoint_gap(b),
        regime: class.tag,
    })
}
