//! MacWilliams transform with exact integer arithmetic.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use super::weights::WeightDistribution;
use crate::error::{Error, Result};

/// Binomial coefficients `C(n, 0..=n)`.
pub(crate) fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for i in 0..n {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
        row.push(c.clone());
    }
    row
}

pub(crate) fn binomial(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut c = BigInt::one();
    for i in 0..r {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// Dual weight distribution of a `q`-ary code of dimension `k`:
/// `A_j' = q^-k * sum_i A_i K_j(i)`, where `K_j(i)` is the coefficient of
/// `z^j` in `(1 + (q-1)z)^(n-i) (1 - z)^i`.
///
/// Every output must be a nonnegative integer; anything else means the
/// input was not the distribution of a linear code with these parameters.
pub fn macwilliams_dual(w: &WeightDistribution, q: u32, k: usize) -> Result<WeightDistribution> {
    let n = w.n();
    let size = BigUint::from(q).pow(k as u32);
    if w.total() != size {
        return Err(Error::InconsistentDistribution(format!(
            "counts sum to {}, expected q^k = {size}",
            w.total()
        )));
    }
    let qm1 = BigInt::from(q - 1);
    let mut acc = vec![BigInt::zero(); n + 1];
    for (i, a_i) in w.terms() {
        let a_i = BigInt::from_biguint(Sign::Plus, a_i.clone());
        // (1 + (q-1) z)^(n-i)
        let left: Vec<BigInt> = binomial_row(n - i)
            .into_iter()
            .enumerate()
            .map(|(s, c)| c * qm1.pow(s as u32))
            .collect();
        // (1 - z)^i
        let right: Vec<BigInt> = binomial_row(i)
            .into_iter()
            .enumerate()
            .map(|(s, c)| if s % 2 == 0 { c } else { -c })
            .collect();
        for (s, l) in left.iter().enumerate() {
            let scaled = l * &a_i;
            for (t, r) in right.iter().enumerate() {
                acc[s + t] += &scaled * r;
            }
        }
    }
    let size = BigInt::from_biguint(Sign::Plus, size);
    let counts = acc
        .into_iter()
        .enumerate()
        .map(|(j, v)| {
            if v.is_negative() || !(&v % &size).is_zero() {
                return Err(Error::InconsistentDistribution(format!(
                    "dual count at weight {j} is {v}/{size}, not a nonnegative integer"
                )));
            }
            Ok((v / &size).to_biguint().expect("nonnegative"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightDistribution::new(counts))
}

/// Smallest nonzero weight of a dual distribution.
pub fn dual_min_distance(w_dual: &WeightDistribution) -> Option<usize> {
    w_dual.min_distance()
}
