//! The randomized property suites, shared between the property tests and the
//! acceptance gate. Each returns the number of failing cases; suites are
//! deterministic (fixed-seed ChaCha).

use super::{gap_fd_oracle, gap_scalar, Dd};
use asincert::functions::gap_deriv;
use asincert::{thresholds, Interval, ReducedParam};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Ordering in the parameter: `b_hi > b_lo` implies `f_{b_hi}(x) < f_{b_lo}(x)`
/// for every `x` in `(0, 1]`.
pub fn monotonicity_in_b(cases: usize) -> usize {
    let mut rng = rng(0x6d6f6e6f);
    let mut failures = 0;
    for _ in 0..cases {
        let lo: f64 = rng.gen_range(0.01..5.0);
        let hi: f64 = lo + rng.gen_range(1e-6..5.0);
        let x: f64 = rng.gen_range(1e-6..=1.0);
        let f_hi = ReducedParam::new(hi).unwrap().eval(x).unwrap();
        let f_lo = ReducedParam::new(lo).unwrap().eval(x).unwrap();
        // NaN-hostile: anything but a strict ordering counts as a failure
        if f_hi.partial_cmp(&f_lo) != Some(std::cmp::Ordering::Less) {
            failures += 1;
        }
    }
    failures
}

/// Tangency at the origin: the family member vanishes there and its
/// finite-difference slope matches arcsine's unit slope to 1e-6.
pub fn tangency_slope(cases: usize) -> usize {
    let mut rng = rng(0x74616e67);
    let mut failures = 0;
    let step = 1e-6;
    for _ in 0..cases {
        let b = ReducedParam::new(rng.gen_range(0.01..10.0)).unwrap();
        let at_zero = b.eval(0.0).unwrap();
        let slope = b.eval(step).unwrap() / step;
        if at_zero != 0.0 || (slope - 1.0).abs() > 1e-6 {
            failures += 1;
        }
    }
    failures
}

/// Derivative formula against the double-double central finite difference on
/// the interior grid; returns the worst relative error.
pub fn derivative_vs_finite_differences() -> f64 {
    let t = thresholds();
    let step = 1e-6;
    let mut worst: f64 = 0.0;
    for b in [0.5, 1.0, t.golden_ratio, t.b1, 2.0, 3.0] {
        let p = ReducedParam::new(b).unwrap();
        for k in 1..=99 {
            let x = k as f64 / 100.0;
            let d = gap_deriv(p, x).unwrap();
            let fd = gap_fd_oracle(b, x, step);
            let rel = (d - fd).abs() / fd.abs().max(f64::MIN_POSITIVE);
            worst = worst.max(rel);
        }
    }
    worst
}

/// Sign equivalence: the derivative's sign equals the sign of
/// `sqrt(1 - x^2) - (b^2 - b - 1)`, with a 1e-12 band around their common
/// zero set.
pub fn sign_equivalence(cases: usize) -> usize {
    let mut rng = rng(0x65713838);
    let mut failures = 0;
    for _ in 0..cases {
        let b: f64 = rng.gen_range(0.01..4.0);
        let x: f64 = rng.gen_range(1e-6..1.0);
        let e = ((1.0 - x) * (1.0 + x)).sqrt() - (b * b - b - 1.0);
        let d = gap_deriv(ReducedParam::new(b).unwrap(), x).unwrap();
        let ok = if e.abs() <= 1e-12 {
            true
        } else if e > 0.0 {
            d >= 0.0
        } else {
            d <= 0.0
        };
        if !ok {
            failures += 1;
        }
    }
    failures
}

/// `-b^4 + 2b^3 + b^2 - 2b` equals `b(b-1)(b+1)(2-b)` to 4 ulps of the
/// monomial magnitude scale.
pub fn radicand_factorization(cases: usize) -> usize {
    let mut rng = rng(0x66616374);
    let mut failures = 0;
    for _ in 0..cases {
        let b: f64 = rng.gen_range(0.0..3.0);
        let expanded = -(b * b * b * b) + 2.0 * (b * b * b) + b * b - 2.0 * b;
        let factored = b * (b - 1.0) * (b + 1.0) * (2.0 - b);
        let scale = b * b * b * b + 2.0 * (b * b * b) + b * b + 2.0 * b;
        if (expanded - factored).abs() > 4.0 * f64::EPSILON * scale {
            failures += 1;
        }
    }
    failures
}

/// Containment fuzzing of the interval kernel: double-double results of
/// point operations must land inside the interval computed from degenerate
/// operands.
pub fn interval_containment(cases: usize) -> usize {
    let mut rng = rng(0x636f6e74);
    let mut failures = 0;
    let sample = |rng: &mut ChaCha8Rng| -> f64 {
        match rng.gen_range(0..10) {
            0 => 0.0,
            1 => 1.0,
            2 => -1.0,
            _ => {
                let mag = 10f64.powf(rng.gen_range(-6.0..6.0));
                if rng.gen_bool(0.5) {
                    mag
                } else {
                    -mag
                }
            }
        }
    };
    for _ in 0..cases {
        let a = sample(&mut rng);
        let b = sample(&mut rng);
        let (ia, ib) = (Interval::point(a), Interval::point(b));
        let (da, db) = (Dd::from_f64(a), Dd::from_f64(b));
        let (result, exact) = match rng.gen_range(0..5) {
            0 => (ia + ib, da.add(db)),
            1 => (ia - ib, da.sub(db)),
            2 => (ia * ib, da.mul(db)),
            3 => {
                let b = if b.abs() < 1e-6 { 1.0 + b.abs() } else { b };
                (
                    ia.checked_div(Interval::point(b)).unwrap(),
                    da.div(Dd::from_f64(b)),
                )
            }
            _ => {
                let a = a.abs();
                (
                    Interval::point(a).sqrt_enc().unwrap(),
                    Dd::from_f64(a).sqrt(),
                )
            }
        };
        if !(exact.ge_f64(result.lo()) && exact.le_f64(result.hi())) {
            failures += 1;
        }
    }
    failures
}

/// Nested inputs produce nested outputs for the unary enclosures.
pub fn monotone_width_nesting(cases: usize) -> usize {
    let mut rng = rng(0x6e657374);
    let mut failures = 0;
    for _ in 0..cases {
        let lo: f64 = rng.gen_range(0.0..0.9);
        let hi: f64 = rng.gen_range(lo..1.0);
        let outer = Interval::new(lo, hi).unwrap();
        let ilo: f64 = rng.gen_range(lo..=hi);
        let ihi: f64 = rng.gen_range(ilo..=hi);
        let inner = Interval::new(ilo, ihi).unwrap();
        let ok_sqrt = outer
            .sqrt_enc()
            .unwrap()
            .contains_interval(inner.sqrt_enc().unwrap());
        let ok_asin = outer
            .asin_enc()
            .unwrap()
            .contains_interval(inner.asin_enc().unwrap());
        if !(ok_sqrt && ok_asin) {
            failures += 1;
        }
    }
    failures
}

/// Dense scalar sampling of `gap_b` most violating the claimed sign; used to
/// cross-check PROVEN verdicts.
pub fn worst_violation(b: f64, ge: bool, points: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for k in 0..=points {
        let x = k as f64 / points as f64;
        let v = gap_scalar(b, x);
        let violation = if ge { -v } else { v };
        worst = worst.max(violation);
    }
    worst
}
