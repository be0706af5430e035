//! Closed-form weight enumerators of the constructed codes as functions of q.

use num_bigint::BigInt;
use num_traits::Signed;

use super::matrices::Construction;
use crate::lincode::WeightDistribution;

fn build(n: usize, terms: &[(usize, BigInt)]) -> WeightDistribution {
    let mut counts = vec![num_bigint::BigUint::default(); n + 1];
    counts[0] = 1u32.into();
    for (w, c) in terms {
        assert!(!c.is_negative(), "closed form produced {c} at weight {w}");
        counts[*w] += c.to_biguint().expect("nonnegative");
    }
    WeightDistribution::new(counts)
}

/// Expected weight distribution of `construction` over GF(q), q = 2^m >= 8.
pub fn expected_enumerator(construction: Construction, q: u32) -> WeightDistribution {
    let qi = BigInt::from(q);
    let q1 = &qi - 1;
    let q2 = &qi - 2;
    let qs = &qi * &qi;
    let n = construction.length(q);
    let q = q as usize;
    match construction {
        Construction::HyperovalMds => build(
            n,
            &[(q, (&qi + 2) * (&qs - 1) / 2), (q + 2, &qi * &q1 * &q1 / 2)],
        ),
        Construction::Extended => build(
            n,
            &[
                (q, &q1 * (&qi + 2) / 2),
                (q + 1, &q1 * &qi * (&qi + 2) / 2),
                (q + 2, &q1 * &qi / 2),
                (q + 3, &q2 * &q1 * &qi / 2),
            ],
        ),
        Construction::Cf => build(
            n,
            &[
                (q - 2, &q1 * &q2),
                (q - 1, &q1 * (&qs - 5 * &qi + 12) / 2),
                (q, &q1 * (4 * &qi - 5)),
                (q + 1, &q1 * (&qs - 3 * &qi + 4) / 2),
            ],
        ),
        Construction::CfBar => build(
            n,
            &[
                (q - 1, &q1 * &q2),
                (q, &q1 * (&qs - 3 * &qi + 14) / 2),
                (q + 1, 3 * &q1 * &q2),
                (q + 2, &q1 * (&qs - 3 * &qi + 4) / 2),
            ],
        ),
    }
}

/// The enumerator as a formula in q, for display next to computed counts.
pub fn enumerator_formula(construction: Construction) -> &'static str {
    match construction {
        Construction::HyperovalMds => "1 + (q+2)(q^2-1)/2 z^q + q(q-1)^2/2 z^(q+2)",
        Construction::Extended => {
            "1 + (q-1)(q+2)/2 z^q + (q-1)q(q+2)/2 z^(q+1) + (q-1)q/2 z^(q+2) + (q-2)(q-1)q/2 z^(q+3)"
        }
        Construction::Cf => {
            "1 + (q-1)(q-2) z^(q-2) + (q-1)(q^2-5q+12)/2 z^(q-1) + (q-1)(4q-5) z^q + (q-1)(q^2-3q+4)/2 z^(q+1)"
        }
        Construction::CfBar => {
            "1 + (q-1)(q-2) z^(q-1) + (q-1)(q^2-3q+14)/2 z^q + 3(q-1)(q-2) z^(q+1) + (q-1)(q^2-3q+4)/2 z^(q+2)"
        }
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigUint;

    use super::*;

    #[test]
    fn small_field_values() {
        let w = |c| expected_enumerator(c, 8).to_string();
        assert_eq!(w(Construction::HyperovalMds), "1 + 315z^8 + 196z^10");
        assert_eq!(
            w(Construction::Extended),
            "1 + 35z^8 + 280z^9 + 28z^10 + 168z^11"
        );
        assert_eq!(w(Construction::Cf), "1 + 42z^6 + 126z^7 + 189z^8 + 154z^9");
        assert_eq!(
            w(Construction::CfBar),
            "1 + 42z^7 + 189z^8 + 126z^9 + 154z^10"
        );
    }

    #[test]
    fn totals_are_q_cubed() {
        for m in 3..=10 {
            let q = 1u32 << m;
            for c in Construction::ALL {
                assert_eq!(
                    expected_enumerator(c, q).total(),
                    BigUint::from(q).pow(3),
                    "{c} m={m}"
                );
            }
        }
    }
}
