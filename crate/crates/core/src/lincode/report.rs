//! Code parameters, MDS/AMDS/NMDS classification and bound diagnostics.

use std::fmt;

use serde::Serialize;

use super::macwilliams::macwilliams_dual;
use super::matrix::GeneratorMatrix;
use super::weights::{weight_distribution, Budget, WeightDistribution};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CodeClass {
    /// `d = n - k + 1`.
    #[serde(rename = "MDS")]
    Mds,
    /// `d = n - k` while the dual is not almost MDS.
    #[serde(rename = "AMDS")]
    AmdsOnly,
    /// `d + d_dual = n`.
    #[serde(rename = "NMDS")]
    Nmds,
    #[serde(rename = "other")]
    Other,
}

impl fmt::Display for CodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeClass::Mds => "MDS",
            CodeClass::AmdsOnly => "AMDS",
            CodeClass::Nmds => "NMDS",
            CodeClass::Other => "other",
        })
    }
}

/// Which bound, if any, certifies that no `[n, k, d+1]` code exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Optimality {
    BySingleton,
    ByGriesmer,
    NotDetermined,
}

impl Optimality {
    pub fn is_optimal(self) -> bool {
        !matches!(self, Optimality::NotDetermined)
    }
}

/// `sum_{i=0}^{k-1} ceil(d / q^i)`.
pub fn griesmer_sum(k: usize, d: usize, q: u32) -> u128 {
    let d = d as u128;
    let mut power = 1u128;
    let mut sum = 0u128;
    for _ in 0..k {
        sum += d.div_ceil(power);
        power = power.saturating_mul(u128::from(q));
    }
    sum
}

/// Whether the Singleton or Griesmer bound excludes an `[n, k, d+1]` code.
pub fn distance_optimality(n: usize, k: usize, d: usize, q: u32) -> Optimality {
    if d + 1 > n + 1 - k {
        Optimality::BySingleton
    } else if griesmer_sum(k, d + 1, q) > n as u128 {
        Optimality::ByGriesmer
    } else {
        Optimality::NotDetermined
    }
}

pub fn classify_parameters(n: usize, k: usize, d: usize, d_dual: Option<usize>) -> CodeClass {
    if d == n + 1 - k {
        CodeClass::Mds
    } else if d_dual.is_some_and(|dd| d + dd == n) {
        CodeClass::Nmds
    } else if d + k == n {
        CodeClass::AmdsOnly
    } else {
        CodeClass::Other
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub d: usize,
    /// `None` when the dual is the zero code.
    pub d_dual: Option<usize>,
    pub class: CodeClass,
    /// `n - k + 1 - d`.
    pub singleton_defect: usize,
    /// `n - sum_{i<k} ceil(d / q^i)`.
    pub griesmer_gap: i128,
    pub distance_optimal: Optimality,
    pub griesmer_almost_optimal: bool,
    #[serde(skip)]
    pub weights: WeightDistribution,
    #[serde(skip)]
    pub dual_weights: WeightDistribution,
}

impl CodeReport {
    pub fn from_weights(n: usize, k: usize, q: u32, weights: WeightDistribution) -> Result<Self> {
        let d = weights
            .min_distance()
            .ok_or_else(|| Error::Precondition("the zero code has no minimum distance".into()))?;
        let dual_weights = macwilliams_dual(&weights, q, k)?;
        let d_dual = dual_weights.min_distance();
        let griesmer_gap = n as i128 - griesmer_sum(k, d, q) as i128;
        Ok(CodeReport {
            n,
            k,
            q,
            d,
            d_dual,
            class: classify_parameters(n, k, d, d_dual),
            singleton_defect: n + 1 - k - d,
            griesmer_gap,
            distance_optimal: distance_optimality(n, k, d, q),
            griesmer_almost_optimal: griesmer_gap == 1,
            weights,
            dual_weights,
        })
    }

    /// Short summary such as `[9,3,6] NMDS, Griesmer almost-optimal`. The
    /// stronger of the two bound statements is shown.
    pub fn summary(&self) -> String {
        let mut s = format!("[{},{},{}] {}", self.n, self.k, self.d, self.class);
        if self.distance_optimal.is_optimal() {
            s.push_str(", distance-optimal");
        } else if self.griesmer_almost_optimal {
            s.push_str(", Griesmer almost-optimal");
        }
        s
    }
}

/// Exhaustive analysis: weight distribution, dual via MacWilliams, class and
/// bound diagnostics.
pub fn classify(g: &GeneratorMatrix, budget: Budget) -> Result<CodeReport> {
    let w = weight_distribution(g, budget)?;
    CodeReport::from_weights(g.n(), g.k(), g.q(), w)
}
