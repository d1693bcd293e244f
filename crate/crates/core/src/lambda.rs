//! The tangency reduction and the parameter regimes it induces.
//!
//! Matching the family's value and slope to arcsine at the origin eliminates
//! one parameter (`a = b + 1`). The sign structure of the remaining
//! one-parameter distance is governed by the equivalence
//! `gap_b'(x) >= 0  <=>  sqrt(1 - x^2) >= b^2 - b - 1`, which partitions
//! `b > 0` into four regimes at the golden ratio, at `b1 = 2/(pi - 2)` and at
//! `b2 = 2`.

use crate::error::{Error, Result};
use crate::functions::{arcsin, critical_point, endpoint_gap, one_minus_sq, ReducedParam};
use serde::{Deserialize, Serialize};
use std::sync::LazyLock;

/// One-sided finite-difference step used by the numeric tangency solver; the
/// working domain is `[0, 1]`, so arcsine is only probed rightward of 0.
const TANGENCY_STEP: f64 = 1e-7;

/// Regime thresholds, self-checked at startup against their defining
/// identities to 4 ulps so the constants cannot drift from the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    /// Golden ratio: the positive root of `b^2 - b - 1 = 0`.
    pub golden_ratio: f64,
    /// Least-upper-bound parameter `2/(pi - 2)`.
    pub b1: f64,
    /// Greatest-lower-bound parameter.
    pub b2: f64,
}

static THRESHOLDS: LazyLock<Thresholds> = LazyLock::new(|| {
    let golden_ratio = (1.0 + 5.0_f64.sqrt()) / 2.0;
    let b1 = 2.0 / (std::f64::consts::PI - 2.0);
    let t = Thresholds {
        golden_ratio,
        b1,
        b2: 2.0,
    };
    let ulp = f64::EPSILON;
    let phi_defect = golden_ratio * golden_ratio - golden_ratio - 1.0;
    assert!(
        phi_defect.abs() <= 4.0 * ulp * golden_ratio * golden_ratio,
        "golden ratio self-check failed: {phi_defect}"
    );
    let b1_defect = b1 * (std::f64::consts::PI - 2.0) - 2.0;
    assert!(
        b1_defect.abs() <= 4.0 * ulp * 2.0,
        "b1 self-check failed: {b1_defect}"
    );
    assert!(t.golden_ratio < t.b1 && t.b1 < t.b2);
    t
});

pub fn thresholds() -> Thresholds {
    *THRESHOLDS
}

/// The four parameter regimes. Boundary values follow the half-open
/// conventions of the case analysis: `(0, phi]`, `(phi, b1]`, `(b1, 2)`,
/// `[2, inf)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RegimeTag {
    /// `0 < b <= phi`: the distance derivative is nonnegative on all of
    /// `(0, 1)`; the family member lies above arcsine.
    DerivativeNonnegative,
    /// `phi < b <= b1`: the distance rises to an interior maximum at `d(b)`
    /// and stays nonnegative through `x = 1`.
    Hump,
    /// `b1 < b < 2`: the distance still has the interior hump but crosses
    /// zero before `x = 1`.
    Crossing,
    /// `b >= 2`: the derivative is nonpositive; the family member lies below
    /// arcsine.
    DerivativeNonpositive,
}

impl RegimeTag {
    pub fn as_str(self) -> &'static str {
        match self {
            RegimeTag::DerivativeNonnegative => "DERIVATIVE_NONNEGATIVE",
            RegimeTag::Hump => "HUMP",
            RegimeTag::Crossing => "CROSSING",
            RegimeTag::DerivativeNonpositive => "DERIVATIVE_NONPOSITIVE",
        }
    }
}

impl std::fmt::Display for RegimeTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classification of a parameter, with the witnesses relevant to its tag.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub b: f64,
    pub tag: RegimeTag,
    pub thresholds: Thresholds,
    /// The stationary abscissa `d(b)`, present whenever the radicand is
    /// nonnegative (`b` in `[1, 2]`), not only in the hump regime.
    pub critical_point: Option<f64>,
    /// Sign witness `gap_b(1) = 1 + 1/b - pi/2`.
    pub endpoint_gap: f64,
}

/// Maps `b > 0` to its regime.
pub fn classify(b: f64) -> Result<Classification> {
    let param = ReducedParam::new(b)?;
    let t = thresholds();
    let tag = if b <= t.golden_ratio {
        RegimeTag::DerivativeNonnegative
    } else if b <= t.b1 {
        RegimeTag::Hump
    } else if b < t.b2 {
        RegimeTag::Crossing
    } else {
        RegimeTag::DerivativeNonpositive
    };
    Ok(Classification {
        b,
        tag,
        thresholds: t,
        critical_point: critical_point(param).ok(),
        endpoint_gap: endpoint_gap(param),
    })
}

/// The tangency constraint produced by [`tangency_reduce`]: value and slope
/// of the family match arcsine at the anchor.
#[derive(Clone, Copy, Debug)]
pub struct TangencyConstraint {
    anchor: f64,
}

impl TangencyConstraint {
    pub fn anchor(self) -> f64 {
        self.anchor
    }

    /// The closed-form solution `a = b + 1`.
    pub fn closed_form(self, b: f64) -> f64 {
        b + 1.0
    }

    /// Numeric cross-check: the `a` whose family member reproduces the
    /// one-sided finite-difference slope of arcsine at the anchor. The family
    /// scales linearly in `a`, so the slope match inverts directly; the value
    /// match at the anchor is automatic (both sides vanish).
    pub fn numeric(self, b: f64) -> Result<f64> {
        let param = ReducedParam::new(b)?; // validates b > 0
        let d = TANGENCY_STEP;
        let target_slope = (arcsin(d)? - arcsin(0.0)?) / d;
        let unit_slope = (d / (param.b() + one_minus_sq(d).sqrt())) / d;
        Ok(target_slope / unit_slope)
    }
}

/// The reduction step: accepts only the anchor 0 used throughout; other
/// anchors are out of scope.
pub fn tangency_reduce(anchor: f64) -> Result<TangencyConstraint> {
    if anchor != 0.0 {
        return Err(Error::UnsupportedAnchor { anchor });
    }
    Ok(TangencyConstraint { anchor })
}
