//! The bounding family and the distance functions derived from it.
//!
//! The two-parameter family is `phi_{a,b}(x) = a*x / (b + sqrt(1 - x^2))` on
//! `[0, 1]`. The tangency constraint at the origin (value and slope matching
//! arcsine) pins `a = b + 1`, leaving the one-parameter subfamily evaluated by
//! [`ReducedParam`]. The sign of the distance `gap_b = f_b - asin` over
//! `[0, 1]` decides whether a family member bounds arcsine from above or
//! below; [`gap_deriv`] and [`critical_point`] expose the derivative and its
//! interior zero, which drive the case analysis in [`crate::lambda`].
//!
//! Scalar evaluations use the plain formulas in double precision; interval
//! evaluations carry the rigor. Scalars compute `1 - x^2` as
//! `(1 - x)(1 + x)`, halving cancellation near `x = 1`; the interval path
//! intersects that form with `1 - x*x` so the enclosure stays quadratically
//! sharp at both domain endpoints.

use crate::error::{Error, Result};
use crate::interval::Interval;

const UNIT: (f64, f64) = (0.0, 1.0);

fn check_unit(x: f64) -> Result<()> {
    if (UNIT.0..=UNIT.1).contains(&x) {
        Ok(())
    } else {
        Err(Error::OutOfDomain {
            x,
            lo: UNIT.0,
            hi: UNIT.1,
        })
    }
}

fn check_unit_interval(x: Interval) -> Result<()> {
    if x.lo() >= UNIT.0 && x.hi() <= UNIT.1 {
        Ok(())
    } else {
        Err(Error::OutOfDomain {
            x: if x.lo() < UNIT.0 { x.lo() } else { x.hi() },
            lo: UNIT.0,
            hi: UNIT.1,
        })
    }
}

/// `1 - x^2` as `(1 - x)(1 + x)`.
#[inline]
pub(crate) fn one_minus_sq(x: f64) -> f64 {
    (1.0 - x) * (1.0 + x)
}

/// Enclosure of `1 - x^2` for `x` inside the unit interval. Both algebraic
/// forms are taken and intersected: `(1 - x)(1 + x)` is sharp where `x`
/// nears 1, `1 - x*x` where `x` nears 0 (the product form loses the
/// correlation between its factors there, flattening the quadratic into a
/// linear bound). The result is further intersected with `[0, 1]`, the exact
/// range.
pub(crate) fn one_minus_sq_enc(x: Interval) -> Interval {
    let one = Interval::point(1.0);
    let unit = Interval::new(0.0, 1.0).expect("static bounds");
    let factored = (one - x) * (one + x);
    let direct = one - x * x;
    factored
        .intersect(direct)
        .and_then(|u| u.intersect(unit))
        .unwrap_or(Interval::point(0.0))
}

/// Enclosure of `sqrt(1 - x^2)` for `x` inside the unit interval, clamped to
/// `[0, 1]`.
pub(crate) fn sqrt_one_minus_sq_enc(x: Interval) -> Result<Interval> {
    let unit = Interval::new(0.0, 1.0).expect("static bounds");
    let s = one_minus_sq_enc(x).sqrt_enc()?;
    Ok(s.intersect(unit).unwrap_or(Interval::point(0.0)))
}

/// Parameters `(a, b)` of the two-parameter family, both positive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyParams {
    a: f64,
    b: f64,
}

impl FamilyParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if a.is_finite() && b.is_finite() && a > 0.0 && b > 0.0 {
            Ok(Self { a, b })
        } else {
            Err(Error::InvalidParams { a, b })
        }
    }

    pub fn a(self) -> f64 {
        self.a
    }

    pub fn b(self) -> f64 {
        self.b
    }

    /// `a*x / (b + sqrt(1 - x^2))` for `x` in `[0, 1]`.
    pub fn eval(self, x: f64) -> Result<f64> {
        check_unit(x)?;
        Ok(self.a * x / (self.b + one_minus_sq(x).sqrt()))
    }

    /// Containment-sound enclosure of the family member over `x`.
    pub fn eval_enc(self, x: Interval) -> Result<Interval> {
        check_unit_interval(x)?;
        let s = sqrt_one_minus_sq_enc(x)?;
        let num = Interval::point(self.a) * x;
        let den = Interval::point(self.b) + s;
        num.checked_div(den)
    }
}

/// The reduced parameter: `b` alone, with `a = b + 1` implied by tangency.
/// `a` is never stored independently.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReducedParam {
    b: f64,
}

impl ReducedParam {
    pub fn new(b: f64) -> Result<Self> {
        if b.is_finite() && b > 0.0 {
            Ok(Self { b })
        } else {
            Err(Error::InvalidParams { a: b + 1.0, b })
        }
    }

    pub fn b(self) -> f64 {
        self.b
    }

    pub fn a(self) -> f64 {
        self.b + 1.0
    }

    pub fn family(self) -> FamilyParams {
        FamilyParams {
            a: self.b + 1.0,
            b: self.b,
        }
    }

    /// `(b+1)*x / (b + sqrt(1 - x^2))`.
    pub fn eval(self, x: f64) -> Result<f64> {
        self.family().eval(x)
    }

    pub fn eval_enc(self, x: Interval) -> Result<Interval> {
        // a = b + 1 as an interval so the implied parameter stays rigorous
        // even when b + 1 rounds.
        check_unit_interval(x)?;
        let b = Interval::point(self.b);
        let a = b + Interval::point(1.0);
        let s = sqrt_one_minus_sq_enc(x)?;
        (a * x).checked_div(b + s)
    }
}

/// Checked scalar arcsine on `[0, 1]`, the target being bounded.
pub fn arcsin(x: f64) -> Result<f64> {
    check_unit(x)?;
    Ok(x.asin())
}

/// Interval arcsine on `[0, 1]`; delegates to [`Interval::asin_enc`].
pub fn arcsin_enc(x: Interval) -> Result<Interval> {
    check_unit_interval(x)?;
    x.asin_enc()
}

/// The distance `gap_b(x) = f_b(x) - asin x`. At `x = 1` the closed form
/// [`endpoint_gap`] is used: `sqrt(1 - x^2)` vanishes there exactly and the
/// generic difference loses the endpoint cancellation structure.
pub fn gap(b: ReducedParam, x: f64) -> Result<f64> {
    check_unit(x)?;
    if x == 1.0 {
        return Ok(endpoint_gap(b));
    }
    Ok(b.eval(x)? - x.asin())
}

/// Enclosure of the distance over `x`.
pub fn gap_enc(b: ReducedParam, x: Interval) -> Result<Interval> {
    Ok(b.eval_enc(x)? - arcsin_enc(x)?)
}

/// `gap_b(1) = 1 + 1/b - pi/2`, written exactly as displayed.
pub fn endpoint_gap(b: ReducedParam) -> f64 {
    1.0 + 1.0 / b.b() - std::f64::consts::FRAC_PI_2
}

/// The derivative of the distance:
/// `(sqrt(1-x^2) - (b^2 - b - 1)) * x^2 / ((b + sqrt(1-x^2))^2 * (1 - x^2 + sqrt(1-x^2)))`
/// on `0 <= x < 1`. The displayed formula has a pole at `x = 1`.
pub fn gap_deriv(b: ReducedParam, x: f64) -> Result<f64> {
    check_unit(x)?;
    if x == 1.0 {
        return Err(Error::DerivativeSingularity);
    }
    let bb = b.b();
    let sq = one_minus_sq(x);
    let s = sq.sqrt();
    let c = bb * bb - bb - 1.0;
    let den = (bb + s) * (bb + s) * (sq + s);
    Ok((s - c) * x * x / den)
}

/// Enclosure of the distance derivative; requires `x.hi < 1`.
pub fn gap_deriv_enc(b: ReducedParam, x: Interval) -> Result<Interval> {
    check_unit_interval(x)?;
    if x.hi() >= 1.0 {
        return Err(Error::DerivativeSingularity);
    }
    let one = Interval::point(1.0);
    let bv = Interval::point(b.b());
    let sq = one_minus_sq_enc(x);
    let s = sqrt_one_minus_sq_enc(x)?;
    let c = bv * bv - bv - one;
    let bps = bv + s;
    let den = bps * bps * (sq + s);
    ((s - c) * x * x).checked_div(den)
}

/// The stationary abscissa `d(b) = sqrt(b(b-1)(b+1)(2-b))` of the distance,
/// evaluated through the factorization. Defined for `b` in `[1, 2]`; it is
/// the stationary point of `gap_b` when `b` lies strictly between the golden
/// ratio and 2.
pub fn critical_point(b: ReducedParam) -> Result<f64> {
    let bb = b.b();
    let radicand = bb * (bb - 1.0) * (bb + 1.0) * (2.0 - bb);
    if radicand < 0.0 {
        return Err(Error::CriticalPointDomain { b: bb });
    }
    Ok(radicand.sqrt().min(1.0))
}
