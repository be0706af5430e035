//! Weight distributions of near-MDS codes from `(n, k, q)` and the number
//! of minimum-weight codewords.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::macwilliams::binomial;
use super::weights::WeightDistribution;
use crate::error::{Error, Result};

fn alt_sum(n: usize, lead: usize, base: usize, s: usize, q: &BigInt) -> BigInt {
    // C(n, lead) * sum_{j<s} (-1)^j C(base, j) (q^(s-j) - 1)
    let mut sum = BigInt::zero();
    for j in 0..s {
        let term = binomial(base, j) * (q.pow((s - j) as u32) - BigInt::one());
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    binomial(n, lead) * sum
}

fn finish(n: usize, values: Vec<BigInt>) -> Result<WeightDistribution> {
    debug_assert_eq!(values.len(), n + 1);
    values
        .into_iter()
        .enumerate()
        .map(|(weight, v)| {
            if v.is_negative() {
                Err(Error::NegativeCount {
                    weight,
                    value: v.to_string(),
                })
            } else {
                Ok(v.to_biguint().expect("nonnegative"))
            }
        })
        .collect::<Result<Vec<BigUint>>>()
        .map(WeightDistribution::new)
}

/// Primal and dual distributions of an `[n, k, n-k]` NMDS code over GF(q)
/// with `a_min` codewords of weight `n-k` (equal to the number of
/// weight-`k` dual codewords).
pub fn nmds_closed_form(
    n: usize,
    k: usize,
    q: u32,
    a_min: u64,
) -> Result<(WeightDistribution, WeightDistribution)> {
    if k == 0 || k >= n {
        return Err(Error::Precondition(format!(
            "need 0 < k < n, got n={n}, k={k}"
        )));
    }
    let qb = BigInt::from(q);
    let a_min = BigInt::from(a_min);

    let mut primal = vec![BigInt::zero(); n + 1];
    primal[0] = BigInt::one();
    primal[n - k] = a_min.clone();
    for s in 1..=k {
        let sign = if s % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        primal[n - k + s] = alt_sum(n, k - s, n - k + s, s, &qb) + sign * binomial(k, s) * &a_min;
    }

    let mut dual = vec![BigInt::zero(); n + 1];
    dual[0] = BigInt::one();
    dual[k] = a_min.clone();
    for s in 1..=(n - k) {
        let sign = if s % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        dual[k + s] = alt_sum(n, k + s, k + s, s, &qb) + sign * binomial(n - k, s) * &a_min;
    }

    Ok((finish(n, primal)?, finish(n, dual)?))
}
