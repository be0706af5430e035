//! Support pairing between minimum-weight codewords of a three-dimensional
//! NMDS code and the weight-3 codewords of its dual.
//!
//! Dual weight-3 words are found without touching the dual code: a set of
//! three columns of the generator matrix carries a dual word exactly when
//! the columns are linearly dependent, and the dependency coefficients are
//! a null vector of the 3x3 submatrix.

use std::collections::HashMap;

use serde::Serialize;

use super::matrix::GeneratorMatrix;
use super::weights::{code_size, Budget};
use crate::error::{Error, Result};
use crate::gf2m::{Fe, FieldCtx};

/// A dual codeword of weight 3, normalized so its first coefficient is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualTriple {
    pub support: [usize; 3],
    pub coeffs: [Fe; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingReport {
    pub min_weight: usize,
    /// Minimum-weight codewords, scalar multiples counted separately.
    pub primal_count: u64,
    pub primal_projective: u64,
    pub dual_weight3_count: u64,
    pub dual_weight3_projective: u64,
    /// Dual weight-2 dependencies seen while scanning triples.
    pub dual_weight2_pairs: u64,
    /// Primal projective words with a number of disjoint dual partners
    /// other than one, as `(message, partners)`.
    pub unpaired: Vec<(Vec<u32>, usize)>,
}

impl PairingReport {
    pub fn is_perfect(&self) -> bool {
        self.unpaired.is_empty()
            && self.dual_weight2_pairs == 0
            && self.primal_count == self.dual_weight3_count
            && self.primal_projective == self.dual_weight3_projective
    }
}

fn det3(f: &FieldCtx, c: [&[Fe]; 3]) -> Fe {
    let m = |i: usize, j: usize| c[j][i];
    let t1 = f.mul(
        m(0, 0),
        f.add(f.mul(m(1, 1), m(2, 2)), f.mul(m(1, 2), m(2, 1))),
    );
    let t2 = f.mul(
        m(0, 1),
        f.add(f.mul(m(1, 0), m(2, 2)), f.mul(m(1, 2), m(2, 0))),
    );
    let t3 = f.mul(
        m(0, 2),
        f.add(f.mul(m(1, 0), m(2, 1)), f.mul(m(1, 1), m(2, 0))),
    );
    f.add(f.add(t1, t2), t3)
}

fn proportional(f: &FieldCtx, a: &[Fe], b: &[Fe]) -> bool {
    // 2x2 minors all vanish
    (0..3).all(|i| (i + 1..3).all(|j| f.add(f.mul(a[i], b[j]), f.mul(a[j], b[i])).is_zero()))
}

fn cross(f: &FieldCtx, a: [Fe; 3], b: [Fe; 3]) -> [Fe; 3] {
    [
        f.add(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
        f.add(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
        f.add(f.mul(a[0], b[1]), f.mul(a[1], b[0])),
    ]
}

/// All weight-3 dual codewords (one per projective class) of a code with
/// three rows, plus the number of proportional column pairs (weight-2 dual
/// words).
pub fn dual_weight3_words(g: &GeneratorMatrix) -> Result<(Vec<DualTriple>, u64)> {
    if g.k() != 3 {
        return Err(Error::Precondition(format!(
            "pairing needs k = 3, got k = {}",
            g.k()
        )));
    }
    let f = g.ctx();
    let cols: Vec<Vec<Fe>> = g.columns().collect();
    let n = g.n();
    let mut prop = vec![false; n * n];
    let mut weight2 = 0;
    for i in 0..n {
        for j in i + 1..n {
            if proportional(f, &cols[i], &cols[j]) {
                prop[i * n + j] = true;
                weight2 += 1;
            }
        }
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if prop[i * n + j] {
                continue;
            }
            for l in j + 1..n {
                if prop[i * n + l] || prop[j * n + l] {
                    continue;
                }
                let c = [cols[i].as_slice(), cols[j].as_slice(), cols[l].as_slice()];
                if !det3(f, c).is_zero() {
                    continue;
                }
                // Null vector of the matrix with these columns: cross product
                // of two independent rows.
                let rows: [[Fe; 3]; 3] = std::array::from_fn(|r| [c[0][r], c[1][r], c[2][r]]);
                let v = [(0, 1), (0, 2), (1, 2)]
                    .iter()
                    .map(|&(a, b)| cross(f, rows[a], rows[b]))
                    .find(|v| v.iter().any(|x| !x.is_zero()))
                    .expect("columns are pairwise independent so the rank is 2");
                let scale = f
                    .inv(v[0])
                    .expect("all coefficients nonzero when columns are pairwise independent");
                out.push(DualTriple {
                    support: [i, j, l],
                    coeffs: v.map(|x| f.mul(x, scale)),
                });
            }
        }
    }
    Ok((out, weight2))
}

/// Pairs every minimum-weight codeword with the weight-3 dual codewords whose
/// support is disjoint from it. Never fails on a pairing defect; see
/// [`min_weight_support_pairing`] for the strict form.
pub fn pairing_report(g: &GeneratorMatrix, budget: Budget) -> Result<PairingReport> {
    let (duals, weight2) = dual_weight3_words(g)?;
    let f = g.ctx();
    let q = g.q();
    budget.check("pairing enumeration", code_size(q, 3))?;

    // projective messages: first nonzero coordinate equal to 1
    let mut projective = Vec::new();
    for a in f.elements() {
        for b in f.elements() {
            projective.push([Fe::ONE, a, b]);
        }
    }
    for b in f.elements() {
        projective.push([Fe::ZERO, Fe::ONE, b]);
    }
    projective.push([Fe::ZERO, Fe::ZERO, Fe::ONE]);

    let mut min_weight = usize::MAX;
    let mut min_words: Vec<([Fe; 3], Vec<usize>)> = Vec::new();
    for msg in projective {
        let word = g.encode(&msg);
        let weight = word.iter().filter(|x| !x.is_zero()).count();
        if weight > min_weight {
            continue;
        }
        if weight < min_weight {
            min_weight = weight;
            min_words.clear();
        }
        let zeros = word
            .iter()
            .enumerate()
            .filter(|(_, x)| x.is_zero())
            .map(|(j, _)| j)
            .collect();
        min_words.push((msg, zeros));
    }

    let mut by_support: HashMap<[usize; 3], usize> = HashMap::new();
    for t in &duals {
        *by_support.entry(t.support).or_default() += 1;
    }

    let mut unpaired = Vec::new();
    for (msg, zeros) in &min_words {
        // dual supports disjoint from the word's support are 3-subsets of its zeros
        let mut partners = 0;
        for (x, &a) in zeros.iter().enumerate() {
            for (y, &b) in zeros.iter().enumerate().skip(x + 1) {
                for &c in zeros.iter().skip(y + 1) {
                    partners += by_support.get(&[a, b, c]).copied().unwrap_or(0);
                }
            }
        }
        if partners != 1 {
            unpaired.push((msg.iter().map(|x| x.0).collect(), partners));
        }
    }

    let scalars = u64::from(q - 1);
    Ok(PairingReport {
        min_weight,
        primal_count: min_words.len() as u64 * scalars,
        primal_projective: min_words.len() as u64,
        dual_weight3_count: duals.len() as u64 * scalars,
        dual_weight3_projective: duals.len() as u64,
        dual_weight2_pairs: weight2,
        unpaired,
    })
}

/// Strict pairing check for an NMDS code of dimension 3: equal counts of
/// minimum-weight primal and weight-3 dual codewords, and exactly one
/// support-disjoint dual partner (up to scalars) per primal word.
pub fn min_weight_support_pairing(g: &GeneratorMatrix, budget: Budget) -> Result<PairingReport> {
    let report = pairing_report(g, budget)?;
    if report.min_weight + 3 != g.n() {
        return Err(Error::Precondition(format!(
            "minimum weight {} is not n - 3 = {}; the code is not almost MDS",
            report.min_weight,
            g.n() - 3
        )));
    }
    if !report.is_perfect() {
        return Err(Error::PairingViolation(format!(
            "{} primal vs {} dual weight-3 words, {} unpaired, {} weight-2 dual pairs",
            report.primal_count,
            report.dual_weight3_count,
            report.unpaired.len(),
            report.dual_weight2_pairs
        )));
    }
    Ok(report)
}
