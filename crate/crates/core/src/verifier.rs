//! Rigorous sign certification for family-vs-arcsine claims on `[0, 1]`.
//!
//! A [`Claim`] asserts that a distance function — `f_b - asin`,
//! `phi_{a,b} - asin`, or the difference of two family members — has a fixed
//! sign on a subinterval of `[0, 1]`, with equality asserted at finitely many
//! points (typically the endpoints, where the distances of interest vanish).
//! [`verify`] searches for a covering certificate by adaptive bisection:
//!
//! * SIGN evidence: the interval enclosure of the distance is one-signed on a
//!   subinterval.
//! * MONOTONE evidence: the enclosure of a sign-equivalent derivative
//!   expression is one-signed, and the indicated endpoint carries either an
//!   asserted equality or a point enclosure with the required sign. Near the
//!   equality points pure SIGN subdivision cannot terminate (the distance
//!   vanishes there); the monotone step closes those neighborhoods, which is
//!   the same derivative-sign argument the case analysis itself uses.
//! * WITNESS evidence (refutations): a point whose enclosure lies strictly on
//!   the wrong side of zero, or a MONOTONE node anchored at an equality point
//!   whose strict derivative sign forces the distance onto the wrong side.
//!
//! The derivative sign expressions avoid the removable singularity of the
//! displayed derivative at `x = 1`: for the reduced family the equivalence
//! `gap_b' >= 0  <=>  sqrt(1-x^2) >= b^2 - b - 1` is used directly; for a
//! general member the numerator `a(bs + 1) - (b + s)^2` with `s =
//! sqrt(1-x^2)` carries the sign, and for a difference of members the
//! corresponding cross-multiplied numerator.
//!
//! Equality points are claim data: they are validated numerically (scalar
//! distance within [`EQUALITY_TOL`] and a point enclosure meeting the same
//! band) and then serve as exact anchors for monotone evidence. A PROVEN
//! verdict certifies the sign relative to those validated anchors.
//!
//! Verdicts are deterministic for a fixed claim and configuration; all
//! evaluation is pure, so searches may run concurrently without coordination.

use crate::error::{Error, Result};
use crate::functions::{
    arcsin, arcsin_enc, gap, gap_enc, sqrt_one_minus_sq_enc, FamilyParams, ReducedParam,
};
use crate::interval::Interval;
use serde::{Deserialize, Serialize};

/// Asserted equality points must agree with zero to this tolerance.
pub const EQUALITY_TOL: f64 = 1e-12;

/// Claim parameters are capped so every derivative sign expression stays
/// finite in double precision.
pub const MAX_PARAM: f64 = 1e60;

/// Hard cap on visited subintervals; exhausting it yields UNDECIDED.
const MAX_VISITED: u64 = 4_000_000;

/// Uniform witness-scan resolution (grid points per claim domain).
const WITNESS_GRID: usize = 32;

/// The claimed sign of the distance over the domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// Distance `>= 0` on the domain.
    Ge,
    /// Distance `<= 0` on the domain.
    Le,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Ge => "ge",
            Relation::Le => "le",
        }
    }
}

/// The function whose sign is being certified.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ClaimTarget {
    /// `f_b - asin` for the tangent one-parameter subfamily.
    Reduced(ReducedParam),
    /// `phi_{a,b} - asin` for a general family member.
    Family(FamilyParams),
    /// `phi_{a1,b1} - phi_{a2,b2}`, the first member minus the second.
    Difference(FamilyParams, FamilyParams),
}

/// A sign claim over a subinterval of `[0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Claim {
    target: ClaimTarget,
    relation: Relation,
    domain: [f64; 2],
    equality_set: Vec<f64>,
}

impl Claim {
    /// Validates and normalizes a claim. A `Family` target whose numerator
    /// equals `b + 1` bit-exactly is folded into the reduced form so the
    /// sharper derivative sign expression applies.
    pub fn new(
        target: ClaimTarget,
        relation: Relation,
        domain: [f64; 2],
        mut equality_set: Vec<f64>,
    ) -> Result<Self> {
        let [lo, hi] = domain;
        if !(lo.is_finite() && hi.is_finite() && (0.0..1.0).contains(&lo) && lo < hi && hi <= 1.0)
        {
            return Err(Error::InvalidClaim(format!(
                "domain [{lo}, {hi}] is not a nondegenerate subinterval of [0, 1]"
            )));
        }
        for &e in &equality_set {
            if !(e.is_finite() && (lo..=hi).contains(&e)) {
                return Err(Error::InvalidClaim(format!(
                    "equality point {e} lies outside the claim domain [{lo}, {hi}]"
                )));
            }
        }
        equality_set.sort_by(|a, b| a.partial_cmp(b).expect("finite points"));
        equality_set.dedup();
        let (pa, pb) = match target {
            ClaimTarget::Reduced(p) => (p.a(), p.b()),
            ClaimTarget::Family(p) => (p.a().max(p.b()), 0.0),
            ClaimTarget::Difference(l, r) => {
                (l.a().max(l.b()), r.a().max(r.b()))
            }
        };
        if pa.max(pb) > MAX_PARAM {
            return Err(Error::InvalidClaim(format!(
                "family parameters above {MAX_PARAM:e} are not supported"
            )));
        }
        let target = match target {
            ClaimTarget::Family(p) if p.a() == p.b() + 1.0 => {
                ClaimTarget::Reduced(ReducedParam::new(p.b())?)
            }
            other => other,
        };
        Ok(Self {
            target,
            relation,
            domain,
            equality_set,
        })
    }

    /// Full-domain claim with the endpoint equalities detected from the
    /// scalar distance (`|gap| <= EQUALITY_TOL`). `x = 0` always qualifies:
    /// every family member vanishes there with arcsine.
    pub fn with_auto_equality(target: ClaimTarget, relation: Relation) -> Result<Self> {
        let probe = Self::new(target, relation, [0.0, 1.0], Vec::new())?;
        let eval = ClaimEval::new(&probe.target);
        let mut eq = Vec::new();
        for e in [0.0, 1.0] {
            if eval.gap_scalar(e)?.abs() <= EQUALITY_TOL {
                eq.push(e);
            }
        }
        Self::new(probe.target, relation, [0.0, 1.0], eq)
    }

    /// Convenience constructor for the reduced family with auto equalities.
    pub fn reduced(b: f64, relation: Relation) -> Result<Self> {
        Self::with_auto_equality(ClaimTarget::Reduced(ReducedParam::new(b)?), relation)
    }

    pub fn target(&self) -> ClaimTarget {
        self.target
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn domain(&self) -> [f64; 2] {
        self.domain
    }

    pub fn equality_set(&self) -> &[f64] {
        &self.equality_set
    }

    pub fn record(&self) -> ClaimRecord {
        let (a, b, a2, b2) = match self.target {
            ClaimTarget::Reduced(p) => (p.a(), p.b(), None, None),
            ClaimTarget::Family(p) => (p.a(), p.b(), None, None),
            ClaimTarget::Difference(l, r) => (l.a(), l.b(), Some(r.a()), Some(r.b())),
        };
        ClaimRecord {
            a,
            b,
            a2,
            b2,
            relation: self.relation,
            domain: self.domain,
            equality_set: self.equality_set.clone(),
        }
    }
}

/// Subdivision budget and anchor handling knobs.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifierConfig {
    /// Maximum bisection depth.
    pub max_depth: u32,
    /// Subintervals are not split below this width.
    pub min_width: f64,
    /// Radius around an equality point inside which SIGN evidence is not
    /// attempted (the distance vanishes there; monotone evidence is the only
    /// route).
    pub endpoint_margin: f64,
}

impl Default for VerifierConfig {
    fn default() -> Self {
        Self {
            max_depth: 40,
            min_width: 1e-12,
            endpoint_margin: 1e-6,
        }
    }
}

impl VerifierConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_depth < 1 {
            return Err(Error::InvalidConfig("max_depth must be at least 1".into()));
        }
        if !(self.min_width > 0.0 && self.min_width < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "min_width {} must lie in (0, 1)",
                self.min_width
            )));
        }
        if !(self.endpoint_margin.is_finite() && self.endpoint_margin >= 0.0) {
            return Err(Error::InvalidConfig(format!(
                "endpoint_margin {} must be finite and nonnegative",
                self.endpoint_margin
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Proven,
    Refuted,
    Undecided,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Proven => "PROVEN",
            Verdict::Refuted => "REFUTED",
            Verdict::Undecided => "UNDECIDED",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EvidenceKind {
    /// Enclosure of the distance over the subinterval, one-signed.
    Sign,
    /// Enclosure of the derivative sign expression over the subinterval,
    /// one-signed and chained to an endpoint with known sign or equality.
    Monotone,
    /// A point (degenerate subinterval) whose enclosure violates the claim.
    Witness,
}

impl EvidenceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EvidenceKind::Sign => "SIGN",
            EvidenceKind::Monotone => "MONOTONE",
            EvidenceKind::Witness => "WITNESS",
        }
    }
}

impl std::fmt::Display for EvidenceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One certificate entry. For SIGN and WITNESS the enclosure bounds the
/// distance; for MONOTONE they bound the derivative sign expression.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateNode {
    pub lo: f64,
    pub hi: f64,
    pub kind: EvidenceKind,
    pub enclosure_lo: f64,
    pub enclosure_hi: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateStats {
    /// Deepest subdivision level reached.
    pub depth: u32,
    /// Number of certificate nodes.
    pub nodes: u64,
}

/// Serializable view of a claim; `a2`/`b2` are present for difference
/// claims only.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub a: f64,
    pub b: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub b2: Option<f64>,
    pub relation: Relation,
    pub domain: [f64; 2],
    pub equality_set: Vec<f64>,
}

impl ClaimRecord {
    /// Reconstructs the validated claim, reapplying the reduced-family
    /// normalization.
    pub fn to_claim(&self) -> Result<Claim> {
        let target = match (self.a2, self.b2) {
            (Some(a2), Some(b2)) => ClaimTarget::Difference(
                FamilyParams::new(self.a, self.b)?,
                FamilyParams::new(a2, b2)?,
            ),
            (None, None) => ClaimTarget::Family(FamilyParams::new(self.a, self.b)?),
            _ => {
                return Err(Error::InvalidClaim(
                    "a2 and b2 must be present together".into(),
                ))
            }
        };
        Claim::new(target, self.relation, self.domain, self.equality_set.clone())
    }
}

/// A sign certificate: the verdict plus the evidence that replays it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub claim: ClaimRecord,
    pub nodes: Vec<CertificateNode>,
    pub stats: CertificateStats,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization cannot fail")
    }
}

/// Cached interval views of the claim parameters.
#[derive(Clone, Copy, Debug)]
pub(crate) enum ClaimEval {
    Reduced {
        p: ReducedParam,
        /// Enclosure of `b^2 - b - 1`.
        c: Interval,
    },
    Family {
        p: FamilyParams,
    },
    Difference {
        lhs: FamilyParams,
        rhs: FamilyParams,
    },
}

impl ClaimEval {
    pub(crate) fn new(target: &ClaimTarget) -> Self {
        match *target {
            ClaimTarget::Reduced(p) => {
                let b = Interval::point(p.b());
                let one = Interval::point(1.0);
                ClaimEval::Reduced {
                    p,
                    c: b * b - b - one,
                }
            }
            ClaimTarget::Family(p) => ClaimEval::Family { p },
            ClaimTarget::Difference(lhs, rhs) => ClaimEval::Difference { lhs, rhs },
        }
    }

    /// Scalar distance; the reduced path uses the closed endpoint form at
    /// `x = 1`.
    pub(crate) fn gap_scalar(&self, x: f64) -> Result<f64> {
        match self {
            ClaimEval::Reduced { p, .. } => gap(*p, x),
            ClaimEval::Family { p } => Ok(p.eval(x)? - arcsin(x)?),
            ClaimEval::Difference { lhs, rhs } => Ok(lhs.eval(x)? - rhs.eval(x)?),
        }
    }

    /// Enclosure of the distance over `x`.
    pub(crate) fn gap_over(&self, x: Interval) -> Result<Interval> {
        match self {
            ClaimEval::Reduced { p, .. } => gap_enc(*p, x),
            ClaimEval::Family { p } => Ok(p.eval_enc(x)? - arcsin_enc(x)?),
            ClaimEval::Difference { lhs, rhs } => Ok(lhs.eval_enc(x)? - rhs.eval_enc(x)?),
        }
    }

    pub(crate) fn gap_at(&self, x: f64) -> Result<Interval> {
        self.gap_over(Interval::point(x))
    }

    /// Enclosure of an expression whose sign equals the sign of the distance
    /// derivative on the open interior `(0, 1)`. None of the expressions has
    /// the `x = 1` singularity of the displayed derivative.
    pub(crate) fn deriv_sign_over(&self, x: Interval) -> Result<Interval> {
        let s = sqrt_one_minus_sq_enc(x)?;
        let one = Interval::point(1.0);
        Ok(match self {
            // s - (b^2 - b - 1)
            ClaimEval::Reduced { c, .. } => s - *c,
            // a(bs + 1) - (b + s)^2
            ClaimEval::Family { p } => {
                let a = Interval::point(p.a());
                let b = Interval::point(p.b());
                let bps = b + s;
                a * (b * s + one) - bps * bps
            }
            // a1(b1 s + 1)(b2 + s)^2 - a2(b2 s + 1)(b1 + s)^2
            ClaimEval::Difference { lhs, rhs } => {
                let a1 = Interval::point(lhs.a());
                let b1 = Interval::point(lhs.b());
                let a2 = Interval::point(rhs.a());
                let b2 = Interval::point(rhs.b());
                let b1ps = b1 + s;
                let b2ps = b2 + s;
                a1 * (b1 * s + one) * (b2ps * b2ps) - a2 * (b2 * s + one) * (b1ps * b1ps)
            }
        })
    }
}

struct SearchNode {
    lo: f64,
    hi: f64,
    depth: u32,
    enc: Interval,
}

struct Search<'a> {
    eval: ClaimEval,
    relation: Relation,
    anchors: &'a [f64],
    cfg: &'a VerifierConfig,
}

enum StepOutcome {
    Emit(CertificateNode),
    Refuted(Vec<CertificateNode>),
    Split,
}

impl<'a> Search<'a> {
    fn is_anchor(&self, x: f64) -> bool {
        self.anchors.contains(&x)
    }

    fn near_anchor(&self, lo: f64, hi: f64) -> bool {
        let m = self.cfg.endpoint_margin;
        self.anchors
            .iter()
            .any(|&e| lo >= e - m && hi <= e + m)
    }

    /// Endpoint carries `gap >= 0` (`positive = true`) or `gap <= 0`: either
    /// an asserted equality or a one-signed point enclosure.
    fn endpoint_supports(&self, x: f64, positive: bool) -> Result<bool> {
        if self.is_anchor(x) {
            return Ok(true);
        }
        let enc = self.eval.gap_at(x)?;
        Ok(if positive {
            enc.lo() >= 0.0
        } else {
            enc.hi() <= 0.0
        })
    }

    fn witness_node(&self, x: f64) -> Result<CertificateNode> {
        let enc = self.eval.gap_at(x)?;
        Ok(CertificateNode {
            lo: x,
            hi: x,
            kind: EvidenceKind::Witness,
            enclosure_lo: enc.lo(),
            enclosure_hi: enc.hi(),
        })
    }

    /// Strict anchored-monotone contradiction on `[lo, hi]` with derivative
    /// sign expression enclosure `d`: the distance moves strictly to the
    /// wrong side of an endpoint where it vanishes.
    fn monotone_contradicts(&self, lo: f64, hi: f64, d: Interval) -> bool {
        let (anchored_left, anchored_right) = (self.is_anchor(lo), self.is_anchor(hi));
        match self.relation {
            Relation::Le => {
                (anchored_left && d.lo() > 0.0) || (anchored_right && d.hi() < 0.0)
            }
            Relation::Ge => {
                (anchored_left && d.hi() < 0.0) || (anchored_right && d.lo() > 0.0)
            }
        }
    }

    fn step(&self, node: &SearchNode) -> Result<StepOutcome> {
        let enc = node.enc;
        // A subinterval whose distance enclosure lies strictly on the wrong
        // side refutes the claim. The witness must be a point whose own
        // enclosure violates strictly; when the violation sits within an ulp
        // of zero no candidate may qualify, and the node splits instead.
        let contra = match self.relation {
            Relation::Ge => enc.hi() < 0.0,
            Relation::Le => enc.lo() > 0.0,
        };
        if contra {
            let mid = 0.5 * (node.lo + node.hi);
            for x in [mid, node.lo, node.hi] {
                let w = self.witness_node(x)?;
                let strict = match self.relation {
                    Relation::Ge => w.enclosure_hi < 0.0,
                    Relation::Le => w.enclosure_lo > 0.0,
                };
                if strict {
                    return Ok(StepOutcome::Refuted(vec![w]));
                }
            }
        }
        if !self.near_anchor(node.lo, node.hi) {
            let holds = match self.relation {
                Relation::Ge => enc.lo() >= 0.0,
                Relation::Le => enc.hi() <= 0.0,
            };
            if holds {
                return Ok(StepOutcome::Emit(CertificateNode {
                    lo: node.lo,
                    hi: node.hi,
                    kind: EvidenceKind::Sign,
                    enclosure_lo: enc.lo(),
                    enclosure_hi: enc.hi(),
                }));
            }
        }

        let d = self.eval.deriv_sign_over(Interval::new(node.lo, node.hi)?)?;
        let mono_node = CertificateNode {
            lo: node.lo,
            hi: node.hi,
            kind: EvidenceKind::Monotone,
            enclosure_lo: d.lo(),
            enclosure_hi: d.hi(),
        };
        if self.monotone_contradicts(node.lo, node.hi, d) {
            return Ok(StepOutcome::Refuted(vec![mono_node]));
        }
        let positive = matches!(self.relation, Relation::Ge);
        if d.lo() >= 0.0 {
            // nondecreasing: a >=-claim chains to the left endpoint, a
            // <=-claim to the right.
            let ok = match self.relation {
                Relation::Ge => self.endpoint_supports(node.lo, positive)?,
                Relation::Le => self.endpoint_supports(node.hi, positive)?,
            };
            if ok {
                return Ok(StepOutcome::Emit(mono_node));
            }
        }
        if d.hi() <= 0.0 {
            let ok = match self.relation {
                Relation::Ge => self.endpoint_supports(node.hi, positive)?,
                Relation::Le => self.endpoint_supports(node.lo, positive)?,
            };
            if ok {
                return Ok(StepOutcome::Emit(mono_node));
            }
        }
        Ok(StepOutcome::Split)
    }

    fn make_node(&self, lo: f64, hi: f64, depth: u32) -> Result<SearchNode> {
        let enc = self.eval.gap_over(Interval::new(lo, hi)?)?;
        Ok(SearchNode { lo, hi, depth, enc })
    }

    /// Split point: an interior equality point if one exists (so anchors
    /// become node endpoints), otherwise the midpoint.
    fn split_point(&self, lo: f64, hi: f64) -> f64 {
        for &e in self.anchors {
            if lo < e && e < hi {
                return e;
            }
        }
        let mid = 0.5 * (lo + hi);
        mid.clamp(lo, hi)
    }
}

fn certificate(
    verdict: Verdict,
    claim: &Claim,
    mut nodes: Vec<CertificateNode>,
    depth: u32,
) -> Certificate {
    nodes.sort_by(|a, b| {
        a.lo.partial_cmp(&b.lo)
            .expect("finite bounds")
            .then(a.hi.partial_cmp(&b.hi).expect("finite bounds"))
    });
    let stats = CertificateStats {
        depth,
        nodes: nodes.len() as u64,
    };
    Certificate {
        verdict,
        claim: claim.record(),
        nodes,
        stats,
    }
}

/// Certifies the claim. PROVEN only with a sound covering certificate,
/// REFUTED only with rigorous witness evidence, UNDECIDED when the
/// subdivision budget is exhausted (surfacing the failing subinterval).
pub fn verify(claim: &Claim, cfg: &VerifierConfig) -> Result<Certificate> {
    cfg.validate()?;
    let eval = ClaimEval::new(&claim.target);
    let search = Search {
        eval,
        relation: claim.relation,
        anchors: &claim.equality_set,
        cfg,
    };
    let [dlo, dhi] = claim.domain;

    // Equality points are pre-checked: a strictly wrong-signed anchor
    // refutes the claim outright; an anchor that merely misses the zero
    // band invalidates it.
    for &e in &claim.equality_set {
        let scalar = eval.gap_scalar(e)?;
        let enc = eval.gap_at(e)?;
        let consistent =
            scalar.abs() <= EQUALITY_TOL && enc.lo() <= EQUALITY_TOL && enc.hi() >= -EQUALITY_TOL;
        if consistent {
            continue;
        }
        let refuted = match claim.relation {
            Relation::Ge => enc.hi() < 0.0,
            Relation::Le => enc.lo() > 0.0,
        };
        if refuted {
            let node = search.witness_node(e)?;
            return Ok(certificate(Verdict::Refuted, claim, vec![node], 0));
        }
        return Err(Error::InvalidClaim(format!(
            "asserted equality at x = {e} does not hold: gap = {scalar}"
        )));
    }

    // Anchored-monotone refutation probes on dyadically shrinking
    // neighborhoods of each anchor. These catch violations far too small for
    // point evaluations (the distance can degenerate to quintic order at an
    // endpoint) and keep the parameter searches decidable arbitrarily close
    // to the regime boundaries.
    let span = dhi - dlo;
    for &e in &claim.equality_set {
        if e != dlo && e != dhi {
            continue;
        }
        for k in 0..=cfg.max_depth {
            let w = span * 0.5_f64.powi(k as i32);
            let (lo, hi) = if e == dlo { (e, e + w) } else { (e - w, e) };
            if hi <= lo || lo < dlo || hi > dhi {
                continue;
            }
            let d = eval.deriv_sign_over(Interval::new(lo, hi)?)?;
            if search.monotone_contradicts(lo, hi, d) {
                let node = CertificateNode {
                    lo,
                    hi,
                    kind: EvidenceKind::Monotone,
                    enclosure_lo: d.lo(),
                    enclosure_hi: d.hi(),
                };
                return Ok(certificate(Verdict::Refuted, claim, vec![node], k));
            }
        }
    }

    // Coarse point-witness scan, endpoints included.
    for k in 0..=WITNESS_GRID {
        let x = if k == WITNESS_GRID {
            dhi
        } else {
            dlo + span * (k as f64) / (WITNESS_GRID as f64)
        };
        let enc = eval.gap_at(x)?;
        let wrong = match claim.relation {
            Relation::Ge => enc.hi() < 0.0,
            Relation::Le => enc.lo() > 0.0,
        };
        if wrong {
            let node = search.witness_node(x)?;
            return Ok(certificate(Verdict::Refuted, claim, vec![node], 0));
        }
    }

    // Covering search: depth-first, worst-first by distance enclosure width,
    // midpoint splits (at interior anchors when present).
    let mut stack = vec![search.make_node(dlo, dhi, 0)?];
    let mut emitted: Vec<CertificateNode> = Vec::new();
    let mut max_depth_seen = 0;
    let mut visited: u64 = 0;
    while let Some(node) = stack.pop() {
        visited += 1;
        max_depth_seen = max_depth_seen.max(node.depth);
        match search.step(&node)? {
            StepOutcome::Emit(n) => {
                emitted.push(n);
                continue;
            }
            StepOutcome::Refuted(nodes) => {
                return Ok(certificate(Verdict::Refuted, claim, nodes, max_depth_seen));
            }
            StepOutcome::Split => {}
        }
        let width = node.hi - node.lo;
        let mid = search.split_point(node.lo, node.hi);
        let splittable = node.depth < cfg.max_depth
            && width * 0.5 >= cfg.min_width
            && mid > node.lo
            && mid < node.hi
            && visited < MAX_VISITED;
        if !splittable {
            // Budget exhausted on an undecidable subinterval: first-class
            // UNDECIDED carrying that subinterval.
            let failing = CertificateNode {
                lo: node.lo,
                hi: node.hi,
                kind: EvidenceKind::Sign,
                enclosure_lo: node.enc.lo(),
                enclosure_hi: node.enc.hi(),
            };
            return Ok(certificate(
                Verdict::Undecided,
                claim,
                vec![failing],
                max_depth_seen,
            ));
        }
        let left = search.make_node(node.lo, mid, node.depth + 1)?;
        let right = search.make_node(mid, node.hi, node.depth + 1)?;
        // Worst-first: pop the child with the wider enclosure next; ties go
        // to the left child.
        if right.enc.width() > left.enc.width() {
            stack.push(left);
            stack.push(right);
        } else {
            stack.push(right);
            stack.push(left);
        }
    }
    Ok(certificate(Verdict::Proven, claim, emitted, max_depth_seen))
}

/// Certifies `phi_{a,b} - asin` against the relation on `[0, 1]`, endpoint
/// equalities auto-detected.
pub fn verify_family(
    params: FamilyParams,
    relation: Relation,
    cfg: &VerifierConfig,
) -> Result<Certificate> {
    verify(
        &Claim::with_auto_equality(ClaimTarget::Family(params), relation)?,
        cfg,
    )
}

/// Certifies `phi_{lhs} - phi_{rhs}` against the relation on `[0, 1]`,
/// endpoint equalities auto-detected.
pub fn verify_difference(
    lhs: FamilyParams,
    rhs: FamilyParams,
    relation: Relation,
    cfg: &VerifierConfig,
) -> Result<Certificate> {
    verify(
        &Claim::with_auto_equality(ClaimTarget::Difference(lhs, rhs), relation)?,
        cfg,
    )
}

/// A certified sign change of the distance: point enclosures strictly
/// positive on one side and strictly negative on the other, bracketing a
/// root.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CrossingBracket {
    pub x_positive: f64,
    pub x_negative: f64,
    pub enclosure_positive: Interval,
    pub enclosure_negative: Interval,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Crossing {
    /// A certified root bracket.
    Found(CrossingBracket),
    /// Dense scalar sampling saw no sign change; the distance appears
    /// one-signed (no rigor is claimed for absence).
    Absent,
    /// A scalar sign change was seen but point enclosures could not certify
    /// both sides within budget.
    Undecided,
}

/// Searches `(0, 1)` for a root of `gap_b` by scalar grid scan plus
/// bisection, certifying the bracket with point enclosures.
pub fn find_crossing(b: ReducedParam, cfg: &VerifierConfig) -> Result<Crossing> {
    cfg.validate()?;
    let eval = ClaimEval::new(&ClaimTarget::Reduced(b));
    const GRID: usize = 4096;
    let mut bracket = None;
    let mut prev_x = 0.0;
    let mut prev = eval.gap_scalar(0.0)?;
    for k in 1..=GRID {
        let x = if k == GRID {
            1.0
        } else {
            k as f64 / GRID as f64
        };
        let v = eval.gap_scalar(x)?;
        if prev != 0.0 && v != 0.0 && (prev > 0.0) != (v > 0.0) {
            bracket = Some((prev_x, prev, x, v));
            break;
        }
        prev_x = x;
        prev = v;
    }
    let Some((xa, va, xb, _vb)) = bracket else {
        return Ok(Crossing::Absent);
    };
    let (mut xp, mut xn) = if va > 0.0 { (xa, xb) } else { (xb, xa) };

    let mut best_pos: Option<(f64, Interval)> = None;
    let mut best_neg: Option<(f64, Interval)> = None;
    let consider = |x: f64, best_pos: &mut Option<(f64, Interval)>,
                    best_neg: &mut Option<(f64, Interval)>|
     -> Result<()> {
        let enc = eval.gap_at(x)?;
        if enc.lo() > 0.0 {
            *best_pos = Some((x, enc));
        } else if enc.hi() < 0.0 {
            *best_neg = Some((x, enc));
        }
        Ok(())
    };
    consider(xp, &mut best_pos, &mut best_neg)?;
    consider(xn, &mut best_pos, &mut best_neg)?;
    for _ in 0..200 {
        if (xp - xn).abs() <= cfg.min_width {
            break;
        }
        let m = 0.5 * (xp + xn);
        if m == xp || m == xn {
            break;
        }
        let v = eval.gap_scalar(m)?;
        if v > 0.0 {
            xp = m;
        } else {
            xn = m;
        }
        consider(m, &mut best_pos, &mut best_neg)?;
    }
    match (best_pos, best_neg) {
        (Some((px, pe)), Some((nx, ne))) => Ok(Crossing::Found(CrossingBracket {
            x_positive: px,
            x_negative: nx,
            enclosure_positive: pe,
            enclosure_negative: ne,
        })),
        _ => Ok(Crossing::Undecided),
    }
}
