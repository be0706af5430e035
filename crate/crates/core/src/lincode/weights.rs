//! Exact weight distributions by exhaustive enumeration.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::matrix::GeneratorMatrix;
use crate::error::{Error, Result};
use crate::gf2m::Fe;

/// Cap on the number of codewords an enumeration may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u128);

impl Budget {
    pub const DEFAULT: Budget = Budget(1 << 28);
    pub const UNLIMITED: Budget = Budget(u128::MAX);

    pub fn check(self, what: &'static str, required: u128) -> Result<()> {
        if required > self.0 {
            Err(Error::BudgetExceeded {
                what,
                required,
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// Number of codewords, `q^k`, saturating at `u128::MAX`.
pub fn code_size(q: u32, k: usize) -> u128 {
    u128::from(q).checked_pow(k as u32).unwrap_or(u128::MAX)
}

/// Codeword counts `A_0, ..., A_n` by Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<BigUint>) -> Self {
        assert!(!counts.is_empty(), "distribution covers weights 0..=n");
        WeightDistribution { counts }
    }

    pub fn from_u64(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Distribution of length `n` with the given nonzero terms.
    pub fn from_terms(n: usize, terms: &[(usize, u64)]) -> Self {
        let mut counts = vec![BigUint::zero(); n + 1];
        for &(w, c) in terms {
            counts[w] += BigUint::from(c);
        }
        Self::new(counts)
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, weight: usize) -> &BigUint {
        &self.counts[weight]
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Counts as `u64`, if they all fit.
    pub fn to_u64(&self) -> Option<Vec<u64>> {
        self.counts.iter().map(ToPrimitive::to_u64).collect()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight present; `None` for the zero code.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| !self.counts[i].is_zero())
    }

    /// `(weight, count)` for every nonzero count.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl fmt::Display for WeightDistribution {
    /// Enumerator polynomial, e.g. `1 + 42z^6 + 126z^7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match w {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}z")?,
                _ => write!(f, "{c}z^{w}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Exact weight distribution of the code generated by `g`.
///
/// Messages are split into a prefix over the first k-1 rows and a final
/// coefficient `t`. For a fixed prefix with partial codeword `b`, coordinate
/// `j` of `b + t*g_last` vanishes either for every `t` (when `b_j = 0 =
/// g_j`), for none, or for exactly `t = b_j / g_j`; one pass over the
/// columns therefore yields the weights of all q codewords sharing that
/// prefix. The prefix space is split across worker threads by its first
/// coordinate, each with a private histogram.
pub fn weight_distribution(g: &GeneratorMatrix, budget: Budget) -> Result<WeightDistribution> {
    let q = g.q() as usize;
    let (k, n) = (g.k(), g.n());
    budget.check("weight enumeration", code_size(g.q(), k))?;
    let f = g.ctx();

    let last = g.row(k - 1);
    // inverse of the last row's entries, None where the entry is zero
    let last_inv: Vec<Option<Fe>> = last.iter().map(|&x| f.inv(x).ok()).collect();

    let leaf = |base: &[Fe], hist: &mut Vec<u64>, zeros_at: &mut Vec<u32>| {
        zeros_at.iter_mut().for_each(|z| *z = 0);
        let mut always_zero = 0usize;
        for (j, &b) in base.iter().enumerate() {
            match last_inv[j] {
                Some(inv) => zeros_at[f.mul(b, inv).0 as usize] += 1,
                None if b.is_zero() => always_zero += 1,
                None => {}
            }
        }
        for &z in zeros_at.iter() {
            hist[n - always_zero - z as usize] += 1;
        }
    };

    let prefix_rows: Vec<&[Fe]> = (0..k - 1).map(|i| g.row(i)).collect();

    let hist = if prefix_rows.is_empty() {
        let mut hist = vec![0u64; n + 1];
        leaf(&vec![Fe::ZERO; n], &mut hist, &mut vec![0u32; q]);
        hist
    } else {
        (0..q as u32)
            .into_par_iter()
            .map(|m0| {
                let mut hist = vec![0u64; n + 1];
                let mut zeros_at = vec![0u32; q];
                let start: Vec<Fe> = prefix_rows[0].iter().map(|&x| f.mul(Fe(m0), x)).collect();
                enumerate_prefixes(f, &prefix_rows[1..], start, &mut |base| {
                    leaf(base, &mut hist, &mut zeros_at)
                });
                hist
            })
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    };
    Ok(WeightDistribution::new(
        hist.into_iter().map(BigUint::from).collect(),
    ))
}

/// Depth-first walk over all combinations of `rows`, adding each to `acc`.
fn enumerate_prefixes(
    f: &crate::gf2m::FieldCtx,
    rows: &[&[Fe]],
    acc: Vec<Fe>,
    visit: &mut impl FnMut(&[Fe]),
) {
    let Some((row, rest)) = rows.split_first() else {
        visit(&acc);
        return;
    };
    let mut next = acc.clone();
    for c in f.elements() {
        for ((o, &a), &r) in next.iter_mut().zip(&acc).zip(row.iter()) {
            *o = f.add(a, f.mul(c, r));
        }
        enumerate_prefixes(f, rest, next.clone(), visit);
    }
}

/// Reference enumeration: encodes every message and counts nonzero
/// coordinates directly.
pub fn weight_distribution_naive(
    g: &GeneratorMatrix,
    budget: Budget,
) -> Result<WeightDistribution> {
    let q = g.q();
    let k = g.k();
    budget.check("weight enumeration", code_size(q, k))?;
    let mut hist = vec![0u64; g.n() + 1];
    let mut message = vec![Fe::ZERO; k];
    loop {
        let word = g.encode(&message);
        hist[word.iter().filter(|x| !x.is_zero()).count()] += 1;
        // odometer increment
        let mut i = 0;
        loop {
            if i == k {
                return Ok(WeightDistribution::new(
                    hist.into_iter().map(BigUint::from).collect(),
                ));
            }
            message[i].0 += 1;
            if message[i].0 < q {
                break;
            }
            message[i] = Fe::ZERO;
            i += 1;
        }
    }
}
