//! End-to-end checks of the NMDS claims for the extended hyperoval code and
//! the two `G_f` codes: build, enumerate, compare with the closed forms,
//! classify, and check the minimum-weight support pairing.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::constructions::{expected_enumerator, Construction};
use crate::error::{Error, Result};
use crate::gf2m::FieldCtx;
use crate::lincode::{
    classify, nmds_closed_form, pairing_report, Budget, CodeClass, CodeReport, PairingReport,
    WeightDistribution,
};
use crate::opoly::{check_oval_polynomial, OvalPolySpec};

/// The three NMDS claims, keyed by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// `B_f` extended is a [q+3,3,q] NMDS code, distance-optimal, for any
    /// oval polynomial and any m >= 3.
    Extended,
    /// `G_f` is a [q+1,3,q-2] NMDS code for odd m with binary coefficients.
    Cf,
    /// `G_f` with the extra column is a [q+2,3,q-1] NMDS code under the same
    /// hypotheses.
    CfBar,
}

impl Claim {
    pub const ALL: [Claim; 3] = [Claim::Extended, Claim::Cf, Claim::CfBar];

    pub fn construction(self) -> Construction {
        match self {
            Claim::Extended => Construction::Extended,
            Claim::Cf => Construction::Cf,
            Claim::CfBar => Construction::CfBar,
        }
    }

    /// Refuses inputs outside the claim's hypotheses.
    pub fn check_hypotheses(self, spec: &OvalPolySpec, ctx: &FieldCtx) -> Result<()> {
        let m = ctx.m();
        if m < 3 {
            return Err(Error::Precondition(format!(
                "m must be at least 3, got {m}"
            )));
        }
        if matches!(self, Claim::Cf | Claim::CfBar) {
            if m.is_multiple_of(2) {
                return Err(Error::Precondition(format!("m must be odd, got {m}")));
            }
            if !spec.has_binary_coefficients() {
                return Err(Error::Precondition(format!(
                    "{spec} must have coefficients in GF(2)"
                )));
            }
        }
        let table = spec.table(ctx)?;
        check_oval_polynomial(ctx, &table).map_err(|v| Error::NotOvalPolynomial {
            family: spec.to_string(),
            m,
            violation: v.to_string(),
        })
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.construction().name())
    }
}

/// A weight whose computed count differs from the closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermDiff {
    pub weight: usize,
    pub expected: String,
    pub computed: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub claim: Claim,
    pub label: String,
    pub report: CodeReport,
    #[serde(skip)]
    pub expected: WeightDistribution,
    pub diff: Vec<TermDiff>,
    /// Whether the general NMDS closed form, fed only `(n, k, q, A_min)`,
    /// reproduces the computed distribution.
    pub closed_form_matches: bool,
    pub pairing: PairingReport,
}

impl ClaimReport {
    pub fn expected_parameters(&self) -> (usize, usize) {
        let q = self.report.q as usize;
        match self.claim {
            Claim::Extended => (q + 3, q),
            Claim::Cf => (q + 1, q - 2),
            Claim::CfBar => (q + 2, q - 1),
        }
    }

    pub fn bound_ok(&self) -> bool {
        match self.claim {
            Claim::Extended => self.report.distance_optimal.is_optimal(),
            Claim::Cf | Claim::CfBar => self.report.griesmer_almost_optimal,
        }
    }

    /// Every individual check, as `(name, passed)`.
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        let (n, d) = self.expected_parameters();
        vec![
            (
                "parameters",
                self.report.n == n && self.report.k == 3 && self.report.d == d,
            ),
            ("enumerator", self.diff.is_empty()),
            ("nmds", self.report.class == CodeClass::Nmds),
            ("dual distance 3", self.report.d_dual == Some(3)),
            ("bound", self.bound_ok()),
            ("closed form", self.closed_form_matches),
            ("pairing", self.pairing.is_perfect()),
        ]
    }

    pub fn passed(&self) -> bool {
        self.checks().iter().all(|(_, ok)| *ok)
    }
}

fn diff(expected: &WeightDistribution, computed: &WeightDistribution) -> Vec<TermDiff> {
    let n = expected.n().max(computed.n());
    let zero = BigUint::default();
    let at = |w: &WeightDistribution, i: usize| {
        if i <= w.n() {
            w.count(i).clone()
        } else {
            zero.clone()
        }
    };
    (0..=n)
        .filter_map(|i| {
            let (e, c) = (at(expected, i), at(computed, i));
            (e != c).then(|| TermDiff {
                weight: i,
                expected: e.to_string(),
                computed: c.to_string(),
            })
        })
        .collect()
}

/// Checks one claim for one polynomial. Hypothesis violations are errors;
/// a claim that fails on valid input is reported, not raised.
pub fn verify_claim(
    claim: Claim,
    spec: &OvalPolySpec,
    ctx: &Arc<FieldCtx>,
    budget: Budget,
) -> Result<ClaimReport> {
    claim.check_hypotheses(spec, ctx)?;
    let construction = claim.construction();
    let g = construction.build(spec, ctx)?;
    let report = classify(&g, budget)?;
    let expected = expected_enumerator(construction, ctx.q());
    let diff = diff(&expected, &report.weights);

    let closed_form_matches = report.d + 3 == report.n
        && report
            .weights
            .count(report.d)
            .to_u64()
            .is_some_and(|a_min| {
                nmds_closed_form(report.n, 3, ctx.q(), a_min)
                    .is_ok_and(|(p, d)| p == report.weights && d == report.dual_weights)
            });
    let pairing = pairing_report(&g, budget)?;
    Ok(ClaimReport {
        claim,
        label: construction.label(spec),
        report,
        expected,
        diff,
        closed_form_matches,
        pairing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opoly::Family;

    #[test]
    fn segre_m3_all_claims_pass() {
        let ctx = Arc::new(FieldCtx::new(3).unwrap());
        let spec = OvalPolySpec::new(Family::Segre, &ctx).unwrap();
        for claim in Claim::ALL {
            let r = verify_claim(claim, &spec, &ctx, Budget::DEFAULT).unwrap();
            assert!(r.passed(), "{claim}: {:?}", r.checks());
        }
    }

    #[test]
    fn hypotheses_enforced() {
        let ctx = Arc::new(FieldCtx::new(4).unwrap());
        let spec = OvalPolySpec::new(Family::Translation { h: 1 }, &ctx).unwrap();
        let err = verify_claim(Claim::Cf, &spec, &ctx, Budget::DEFAULT).unwrap_err();
        assert!(err.to_string().contains("m must be odd"), "{err}");
        assert!(verify_claim(Claim::Extended, &spec, &ctx, Budget::DEFAULT)
            .unwrap()
            .passed());
        let sub = OvalPolySpec::subiaco(&ctx).unwrap();
        assert!(verify_claim(Claim::Extended, &sub, &ctx, Budget::DEFAULT)
            .unwrap()
            .passed());
    }

    #[test]
    fn diff_lists_mismatches() {
        let a = WeightDistribution::from_u64(&[1, 2, 3]);
        let b = WeightDistribution::from_u64(&[1, 3, 3]);
        assert_eq!(
            diff(&a, &b),
            vec![TermDiff {
                weight: 1,
                expected: "2".into(),
                computed: "3".into()
            }]
        );
    }
}
