//! Shared test oracles, independent of the library's evaluation paths.
//!
//! `Dd` is a classic double-double (~31 significant digits) built from
//! error-free transforms; it backs the containment fuzzing and the
//! finite-difference derivative oracle, both of which need headroom far
//! below double precision.

#![allow(dead_code)]

pub mod suites;

use asincert::ReducedParam;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bv = s - a;
    let av = s - bv;
    (s, (a - av) + (b - bv))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Unevaluated sum `hi + lo` with `|lo|` below half an ulp of `hi`.
#[derive(Clone, Copy, Debug)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    pub fn mul(self, o: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, o.hi);
        let p2 = p2 + self.hi * o.lo + self.lo * o.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul(Dd::from_f64(q1)));
        let q2 = (r.hi + r.lo) / (o.hi + o.lo);
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }

    /// Newton-refined square root; relative error around 1e-32.
    pub fn sqrt(self) -> Dd {
        assert!(self.hi >= 0.0);
        if self.hi == 0.0 {
            return Dd::from_f64(0.0);
        }
        let y = Dd::from_f64(self.hi.sqrt());
        let diff = self.sub(y.mul(y));
        let corr = diff.div(y.add(y));
        y.add(corr)
    }

    /// True value `>= b`?
    pub fn ge_f64(self, b: f64) -> bool {
        self.hi > b || (self.hi == b && self.lo >= 0.0)
    }

    /// True value `<= b`?
    pub fn le_f64(self, b: f64) -> bool {
        self.hi < b || (self.hi == b && self.lo <= 0.0)
    }
}

/// `f_b(x) = (b + 1) x / (b + sqrt(1 - x^2))` in double-double.
pub fn f_b_dd(b: f64, x: f64) -> Dd {
    let one = Dd::from_f64(1.0);
    let xd = Dd::from_f64(x);
    let bd = Dd::from_f64(b);
    let s = one.sub(xd.mul(xd)).sqrt();
    bd.add(one).mul(xd).div(bd.add(s))
}

/// `asin u - asin v` for nearby `u > v` in `(0, 1)`, through the identity
/// `asin u - asin v = asin(u sqrt(1-v^2) - v sqrt(1-u^2))`. The argument is
/// formed in double-double, so the catastrophic cancellation costs nothing,
/// and the outer arcsine of a tiny argument carries only its own ulp.
pub fn asin_diff(u: f64, v: f64) -> f64 {
    let one = Dd::from_f64(1.0);
    let ud = Dd::from_f64(u);
    let vd = Dd::from_f64(v);
    let su = one.sub(ud.mul(ud)).sqrt();
    let sv = one.sub(vd.mul(vd)).sqrt();
    ud.mul(sv).sub(vd.mul(su)).to_f64().asin()
}

/// Central finite difference of `gap_b` at `x` with the given step, accurate
/// to roughly 1e-15 absolute: the family difference is taken in
/// double-double and the arcsine difference through [`asin_diff`].
pub fn gap_fd_oracle(b: f64, x: f64, step: f64) -> f64 {
    let u = x + step;
    let v = x - step;
    let df = f_b_dd(b, u).sub(f_b_dd(b, v));
    let da = asin_diff(u, v);
    (df.sub(Dd::from_f64(da)).to_f64()) / (2.0 * step)
}

/// Root of `gap_b(1) = 1 + 1/b - pi/2` in `b` by bisection: the independent
/// route to the least-upper-bound parameter.
pub fn endpoint_gap_root() -> f64 {
    let g = |b: f64| 1.0 + 1.0 / b - std::f64::consts::FRAC_PI_2;
    let (mut lo, mut hi) = (1.0, 4.0);
    assert!(g(lo) > 0.0 && g(hi) < 0.0);
    for _ in 0..200 {
        let m = 0.5 * (lo + hi);
        if m == lo || m == hi {
            break;
        }
        if g(m) > 0.0 {
            lo = m;
        } else {
            hi = m;
        }
    }
    0.5 * (lo + hi)
}

/// Scalar `gap_b` written out directly, for dense sampling cross-checks.
pub fn gap_scalar(b: f64, x: f64) -> f64 {
    if x == 1.0 {
        return 1.0 + 1.0 / b - std::f64::consts::FRAC_PI_2;
    }
    (b + 1.0) * x / (b + ((1.0 - x) * (1.0 + x)).sqrt()) - x.asin()
}

pub fn reduced(b: f64) -> ReducedParam {
    ReducedParam::new(b).unwrap()
}

#[cfg(test)]
mod self_tests {
    use super::*;

    #[test]
    fn dd_sqrt_squares_back() {
        let x = Dd::from_f64(2.0);
        let r = x.sqrt();
        let back = r.mul(r).sub(x);
        assert!(back.to_f64().abs() < 1e-30);
    }
}
