//! Outward-rounded interval arithmetic over IEEE-754 binary64.
//!
//! Every operation satisfies containment soundness: the output interval
//! contains the exact real result of the operation applied to any points of
//! the input intervals. Directed rounding is realized without touching the
//! FPU rounding mode. Each bound is computed in round-to-nearest and stepped
//! outward by one ulp only when the rounding error actually fell on the wrong
//! side; the error side is recovered exactly with 2Sum and FMA residuals.
//! Exact operations therefore stay exact: `[1,1] + [2,2]` is `[3,3]`, not a
//! widened box, and `sqrt([4,9])` is `[2,3]`.
//!
//! The kernel assumes the bounded working domain of this crate (no overflow,
//! no NaN inputs); constructors reject non-finite bounds.

use crate::error::{Error, Result};
use std::f64::consts::{FRAC_PI_2, PI};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Number of ulps by which platform `asin` endpoint evaluations are widened.
/// Documented worst-case libm errors are below 2 ulp; 4 leaves margin.
const ASIN_WIDEN_ULPS: u32 = 4;

/// Lower bounds in `[-SQRT_CLAMP, 0)` passed to [`Interval::sqrt_enc`] are
/// treated as roundoff noise and clamped to zero. `1 - x^2` evaluated in
/// intervals can dip infinitesimally below zero near `x = 1` although the
/// exact quantity is nonnegative.
const SQRT_CLAMP: f64 = 1e-15;

/// Exact rounding error of `s = a + b` (Knuth 2Sum). Valid in the absence of
/// overflow.
#[inline]
fn sum_err(a: f64, b: f64, s: f64) -> f64 {
    let bv = s - a;
    let av = s - bv;
    (a - av) + (b - bv)
}

#[inline]
fn add_lo(a: f64, b: f64) -> f64 {
    let s = a + b;
    if sum_err(a, b, s) < 0.0 {
        s.next_down()
    } else {
        s
    }
}

#[inline]
fn add_hi(a: f64, b: f64) -> f64 {
    let s = a + b;
    if sum_err(a, b, s) > 0.0 {
        s.next_up()
    } else {
        s
    }
}

#[inline]
fn sub_lo(a: f64, b: f64) -> f64 {
    add_lo(a, -b)
}

#[inline]
fn sub_hi(a: f64, b: f64) -> f64 {
    add_hi(a, -b)
}

#[inline]
fn mul_lo(a: f64, b: f64) -> f64 {
    let p = a * b;
    // FMA residual: a*b = p + e exactly.
    let e = a.mul_add(b, -p);
    if e < 0.0 {
        p.next_down()
    } else {
        p
    }
}

#[inline]
fn mul_hi(a: f64, b: f64) -> f64 {
    let p = a * b;
    let e = a.mul_add(b, -p);
    if e > 0.0 {
        p.next_up()
    } else {
        p
    }
}

#[inline]
fn div_lo(a: f64, b: f64) -> f64 {
    let q = a / b;
    // e = q*b - a, exactly representable for a correctly rounded quotient.
    // true quotient - q = -e/b, negative iff sign(e) == sign(b).
    let e = q.mul_add(b, -a);
    if e != 0.0 && (e > 0.0) == (b > 0.0) {
        q.next_down()
    } else {
        q
    }
}

#[inline]
fn div_hi(a: f64, b: f64) -> f64 {
    let q = a / b;
    let e = q.mul_add(b, -a);
    if e != 0.0 && (e > 0.0) != (b > 0.0) {
        q.next_up()
    } else {
        q
    }
}

#[inline]
fn sqrt_lo(x: f64) -> f64 {
    let r = x.sqrt();
    // e = r^2 - x, exactly representable; r^2 > x means r overshoots.
    let e = r.mul_add(r, -x);
    if e > 0.0 {
        r.next_down()
    } else {
        r
    }
}

#[inline]
fn sqrt_hi(x: f64) -> f64 {
    let r = x.sqrt();
    let e = r.mul_add(r, -x);
    if e < 0.0 {
        r.next_up()
    } else {
        r
    }
}

#[inline]
fn step_down_n(mut x: f64, n: u32) -> f64 {
    for _ in 0..n {
        x = x.next_down();
    }
    x
}

#[inline]
fn step_up_n(mut x: f64, n: u32) -> f64 {
    for _ in 0..n {
        x = x.next_up();
    }
    x
}

fn asin_lo(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else if x == 1.0 {
        // asin 1 = pi/2 and the nearest double lies below the true value.
        FRAC_PI_2
    } else if x == -1.0 {
        (-FRAC_PI_2).next_down()
    } else {
        step_down_n(x.asin(), ASIN_WIDEN_ULPS)
    }
}

fn asin_hi(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else if x == 1.0 {
        FRAC_PI_2.next_up()
    } else if x == -1.0 {
        -FRAC_PI_2
    } else {
        step_up_n(x.asin(), ASIN_WIDEN_ULPS)
    }
}

#[inline]
fn min4(a: f64, b: f64, c: f64, d: f64) -> f64 {
    a.min(b).min(c.min(d))
}

#[inline]
fn max4(a: f64, b: f64, c: f64, d: f64) -> f64 {
    a.max(b).max(c.max(d))
}

/// A closed interval `[lo, hi]` with finite double-precision bounds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    /// Constructs `[lo, hi]`, rejecting non-finite or unordered bounds.
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_finite() && hi.is_finite() && lo <= hi {
            Ok(Self { lo, hi })
        } else {
            Err(Error::InvalidInterval { lo, hi })
        }
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: f64) -> Self {
        debug_assert!(x.is_finite());
        Self { lo: x, hi: x }
    }

    /// A tight enclosure of pi: one ulp outward from the nearest double.
    pub fn pi() -> Self {
        Self {
            lo: PI.next_down(),
            hi: PI.next_up(),
        }
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn width(self) -> f64 {
        sub_hi(self.hi, self.lo)
    }

    pub fn midpoint(self) -> f64 {
        let m = 0.5 * (self.lo + self.hi);
        m.clamp(self.lo, self.hi)
    }

    pub fn contains(self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(self, other: Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersect(self, other: Self) -> Option<Self> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Self { lo, hi })
    }

    pub fn hull(self, other: Self) -> Self {
        Self {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Multiplication by a point constant.
    pub fn scale(self, c: f64) -> Self {
        self * Self::point(c)
    }

    /// Division with an explicit domain check on the divisor.
    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        if rhs.lo <= 0.0 && rhs.hi >= 0.0 {
            return Err(Error::DivisionByZero {
                lo: rhs.lo,
                hi: rhs.hi,
            });
        }
        let (al, ah, bl, bh) = (self.lo, self.hi, rhs.lo, rhs.hi);
        Ok(Self {
            lo: min4(div_lo(al, bl), div_lo(al, bh), div_lo(ah, bl), div_lo(ah, bh)),
            hi: max4(div_hi(al, bl), div_hi(al, bh), div_hi(ah, bl), div_hi(ah, bh)),
        })
    }

    /// Enclosure of the square root, monotone endpoint evaluation with
    /// outward widening. A lower bound in `[-1e-15, 0)` is clamped to zero;
    /// anything further below is a domain error, as is `hi < 0`.
    pub fn sqrt_enc(self) -> Result<Self> {
        if self.hi < 0.0 {
            return Err(Error::NegativeSqrt {
                lo: self.lo,
                hi: self.hi,
            });
        }
        let lo = if self.lo >= 0.0 {
            self.lo
        } else if self.lo >= -SQRT_CLAMP {
            0.0
        } else {
            return Err(Error::NegativeSqrt {
                lo: self.lo,
                hi: self.hi,
            });
        };
        Ok(Self {
            lo: sqrt_lo(lo),
            hi: sqrt_hi(self.hi),
        })
    }

    /// Enclosure of arcsine on `[-1, 1]` using monotonicity: platform `asin`
    /// at the endpoints, widened by 4 ulps. `0` and `±1` map to their exact
    /// identities (`asin 0 = 0`, `asin ±1 = ±pi/2`) with one-ulp widening
    /// where the true value is not representable.
    pub fn asin_enc(self) -> Result<Self> {
        if self.lo < -1.0 || self.hi > 1.0 {
            return Err(Error::AsinDomain {
                lo: self.lo,
                hi: self.hi,
            });
        }
        Ok(Self {
            lo: asin_lo(self.lo),
            hi: asin_hi(self.hi),
        })
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Self) -> Self {
        Self {
            lo: add_lo(self.lo, rhs.lo),
            hi: add_hi(self.hi, rhs.hi),
        }
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Self) -> Self {
        Self {
            lo: sub_lo(self.lo, rhs.hi),
            hi: sub_hi(self.hi, rhs.lo),
        }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Self) -> Self {
        let (al, ah, bl, bh) = (self.lo, self.hi, rhs.lo, rhs.hi);
        Self {
            lo: min4(mul_lo(al, bl), mul_lo(al, bh), mul_lo(ah, bl), mul_lo(ah, bh)),
            hi: max4(mul_hi(al, bl), mul_hi(al, bh), mul_hi(ah, bl), mul_hi(ah, bh)),
        }
    }
}

impl Div for Interval {
    type Output = Interval;
    /// Panics when the divisor contains zero; use [`Interval::checked_div`]
    /// for a recoverable error.
    fn div(self, rhs: Self) -> Self {
        self.checked_div(rhs)
            .expect("division by an interval containing zero")
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Self {
        Self {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}
