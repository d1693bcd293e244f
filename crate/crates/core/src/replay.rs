//! Independent certificate replay.
//!
//! The checker performs no search: it re-evaluates interval enclosures over
//! exactly the subintervals recorded in a certificate and accepts the verdict
//! only if the evidence stands on its own. For a PROVEN certificate that
//! means the nodes cover the claim domain, every asserted equality point
//! re-validates, and each node's evidence re-derives; for REFUTED, that at
//! least one recorded witness re-derives.

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::verifier::{
    Certificate, Claim, ClaimEval, CertificateNode, EvidenceKind, Relation, Verdict, EQUALITY_TOL,
};

fn reject(reason: impl Into<String>) -> Error {
    Error::ReplayRejected(reason.into())
}

struct Checker {
    eval: ClaimEval,
    relation: Relation,
    domain: [f64; 2],
    anchors: Vec<f64>,
}

impl Checker {
    fn is_anchor(&self, x: f64) -> bool {
        self.anchors.contains(&x)
    }

    fn check_anchors(&self) -> Result<()> {
        for &e in &self.anchors {
            let scalar = self.eval.gap_scalar(e)?;
            let enc = self.eval.gap_at(e)?;
            let ok = scalar.abs() <= EQUALITY_TOL
                && enc.lo() <= EQUALITY_TOL
                && enc.hi() >= -EQUALITY_TOL;
            if !ok {
                return Err(reject(format!(
                    "equality point {e} fails revalidation: gap = {scalar}"
                )));
            }
        }
        Ok(())
    }

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

    /// Re-derives one covering node of a PROVEN certificate.
    fn check_proof_node(&self, n: &CertificateNode) -> Result<()> {
        // the constructor rejects non-finite or unordered bounds
        let x = Interval::new(n.lo, n.hi).map_err(|e| reject(e.to_string()))?;
        if n.lo == n.hi {
            return Err(reject(format!(
                "covering node [{}, {}] is degenerate",
                n.lo, n.hi
            )));
        }
        let stored = Interval::new(n.enclosure_lo, n.enclosure_hi)
            .map_err(|_| reject("stored enclosure is malformed"))?;
        match n.kind {
            EvidenceKind::Sign => {
                let enc = self.eval.gap_over(x)?;
                let ok = match self.relation {
                    Relation::Ge => enc.lo() >= 0.0 && stored.lo() >= 0.0,
                    Relation::Le => enc.hi() <= 0.0 && stored.hi() <= 0.0,
                };
                if !ok {
                    return Err(reject(format!(
                        "SIGN evidence fails on [{}, {}]: enclosure [{}, {}]",
                        n.lo,
                        n.hi,
                        enc.lo(),
                        enc.hi()
                    )));
                }
            }
            EvidenceKind::Monotone => {
                let d = self.eval.deriv_sign_over(x)?;
                let positive = matches!(self.relation, Relation::Ge);
                let mut ok = false;
                if d.lo() >= 0.0 && stored.lo() >= 0.0 {
                    // nondecreasing: chain at the left endpoint for >=, at
                    // the right for <=
                    ok = match self.relation {
                        Relation::Ge => self.endpoint_supports(n.lo, positive)?,
                        Relation::Le => self.endpoint_supports(n.hi, positive)?,
                    };
                }
                if !ok && d.hi() <= 0.0 && stored.hi() <= 0.0 {
                    ok = match self.relation {
                        Relation::Ge => self.endpoint_supports(n.hi, positive)?,
                        Relation::Le => self.endpoint_supports(n.lo, positive)?,
                    };
                }
                if !ok {
                    return Err(reject(format!(
                        "MONOTONE evidence fails on [{}, {}]: derivative sign [{}, {}]",
                        n.lo,
                        n.hi,
                        d.lo(),
                        d.hi()
                    )));
                }
            }
            EvidenceKind::Witness => {
                return Err(reject("a PROVEN certificate cannot carry WITNESS nodes"));
            }
        }
        Ok(())
    }

    /// Re-derives one refutation node. Evidence outside the claim domain
    /// refutes nothing and is ignored.
    fn check_refutation_node(&self, n: &CertificateNode) -> Result<bool> {
        let [dlo, dhi] = self.domain;
        if n.lo < dlo || n.hi > dhi {
            return Ok(false);
        }
        match n.kind {
            EvidenceKind::Witness => {
                if n.lo != n.hi {
                    return Ok(false);
                }
                let enc = self.eval.gap_at(n.lo)?;
                Ok(match self.relation {
                    Relation::Ge => enc.hi() < 0.0,
                    Relation::Le => enc.lo() > 0.0,
                })
            }
            EvidenceKind::Monotone => {
                // Anchored strict monotone contradiction: the distance leaves
                // an equality point toward the wrong side.
                if n.lo >= n.hi {
                    return Ok(false);
                }
                let x = Interval::new(n.lo, n.hi).map_err(|e| reject(e.to_string()))?;
                let d = self.eval.deriv_sign_over(x)?;
                let (al, ar) = (self.is_anchor(n.lo), self.is_anchor(n.hi));
                Ok(match self.relation {
                    Relation::Le => (al && d.lo() > 0.0) || (ar && d.hi() < 0.0),
                    Relation::Ge => (al && d.hi() < 0.0) || (ar && d.lo() > 0.0),
                })
            }
            EvidenceKind::Sign => Ok(false),
        }
    }
}

/// Replays a certificate, accepting or rejecting its verdict.
pub fn replay(cert: &Certificate) -> Result<()> {
    let claim: Claim = cert.claim.to_claim()?;
    let checker = Checker {
        eval: ClaimEval::new(&claim.target()),
        relation: claim.relation(),
        domain: claim.domain(),
        anchors: claim.equality_set().to_vec(),
    };
    if cert.stats.nodes != cert.nodes.len() as u64 {
        return Err(reject(format!(
            "stats claim {} nodes but {} are present",
            cert.stats.nodes,
            cert.nodes.len()
        )));
    }
    match cert.verdict {
        Verdict::Proven => {
            checker.check_anchors()?;
            if cert.nodes.is_empty() {
                return Err(reject("PROVEN certificate has no covering nodes"));
            }
            let [dlo, dhi] = claim.domain();
            let mut nodes = cert.nodes.clone();
            nodes.sort_by(|a, b| {
                a.lo.partial_cmp(&b.lo)
                    .expect("finite")
                    .then(a.hi.partial_cmp(&b.hi).expect("finite"))
            });
            if nodes[0].lo != dlo {
                return Err(reject("covering does not start at the domain lower end"));
            }
            let mut reach = dlo;
            for n in &nodes {
                if n.lo > reach {
                    return Err(reject(format!(
                        "coverage gap between {reach} and {}",
                        n.lo
                    )));
                }
                reach = reach.max(n.hi);
            }
            if reach != dhi {
                return Err(reject("covering does not reach the domain upper end"));
            }
            for n in &nodes {
                checker.check_proof_node(n)?;
            }
            Ok(())
        }
        Verdict::Refuted => {
            for n in &cert.nodes {
                if checker.check_refutation_node(n)? {
                    return Ok(());
                }
            }
            Err(reject("no refutation node re-derives"))
        }
        // An UNDECIDED certificate asserts nothing checkable.
        Verdict::Undecided => Ok(()),
    }
}

/// Parses a serialized certificate and replays it.
pub fn replay_json(json: &str) -> Result<()> {
    let cert: Certificate =
        serde_json::from_str(json).map_err(|e| reject(format!("malformed certificate: {e}")))?;
    replay(&cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::{verify, Claim, Relation, VerifierConfig};
    use std::f64::consts::PI;

    #[test]
    fn accepts_proven_and_refuted_certificates() {
        let cfg = VerifierConfig::default();
        for (b, rel) in [
            (2.0, Relation::Le),
            (2.0 / (PI - 2.0), Relation::Ge),
            (1.8, Relation::Ge),
            (3.0, Relation::Le),
        ] {
            let cert = verify(&Claim::reduced(b, rel).unwrap(), &cfg).unwrap();
            replay(&cert).unwrap();
            replay_json(&cert.to_json()).unwrap();
        }
    }

    #[test]
    fn rejects_a_forged_verdict() {
        let cfg = VerifierConfig::default();
        let mut cert = verify(&Claim::reduced(1.8, Relation::Ge).unwrap(), &cfg).unwrap();
        assert_eq!(cert.verdict, crate::verifier::Verdict::Refuted);
        cert.verdict = crate::verifier::Verdict::Proven;
        cert.stats.nodes = cert.nodes.len() as u64;
        assert!(replay(&cert).is_err());
    }

    #[test]
    fn rejects_a_coverage_gap() {
        let cfg = VerifierConfig::default();
        let mut cert = verify(&Claim::reduced(2.0, Relation::Le).unwrap(), &cfg).unwrap();
        assert!(!cert.nodes.is_empty());
        cert.nodes.remove(0);
        cert.stats.nodes = cert.nodes.len() as u64;
        assert!(replay(&cert).is_err());
    }

    #[test]
    fn rejects_tampered_enclosures() {
        let cfg = VerifierConfig::default();
        let mut cert = verify(&Claim::reduced(2.0, Relation::Le).unwrap(), &cfg).unwrap();
        for n in &mut cert.nodes {
            n.enclosure_lo = 1.0;
            n.enclosure_hi = 2.0;
        }
        assert!(replay(&cert).is_err());
    }

    #[test]
    fn rejects_malformed_json() {
        assert!(replay_json("{").is_err());
    }

    #[test]
    fn rejects_a_witness_outside_the_claim_domain() {
        use crate::verifier::{CertificateNode, ClaimTarget, EvidenceKind};
        // gap_1.8 >= 0 genuinely holds on [0, 0.5]; a forged witness at
        // x = 1 (where the gap is negative, but outside the domain) must
        // not refute it
        let target = ClaimTarget::Reduced(crate::functions::ReducedParam::new(1.8).unwrap());
        let claim = Claim::new(target, Relation::Ge, [0.0, 0.5], vec![0.0]).unwrap();
        let cert = verify(&claim, &VerifierConfig::default()).unwrap();
        assert_eq!(cert.verdict, crate::verifier::Verdict::Proven);
        let mut forged = cert;
        forged.verdict = crate::verifier::Verdict::Refuted;
        let enc = crate::verifier::ClaimEval::new(&claim.target())
            .gap_at(1.0)
            .unwrap();
        forged.nodes = vec![CertificateNode {
            lo: 1.0,
            hi: 1.0,
            kind: EvidenceKind::Witness,
            enclosure_lo: enc.lo(),
            enclosure_hi: enc.hi(),
        }];
        forged.stats.nodes = 1;
        assert!(replay(&forged).is_err());
    }
}
