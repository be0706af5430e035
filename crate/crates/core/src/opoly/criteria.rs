//! Exhaustive oval-polynomial criteria over a function table.
//!
//! Four independent characterizations are implemented: the two-condition
//! definition (permutation plus the `g_a` permutations), the 2-to-1
//! criterion for `f(x) + ux`, the slope condition over distinct triples, and
//! the root-freeness of `f(x) + x + 1`. Each check returns a witness on
//! failure.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2m::{Fe, FieldCtx};

/// A function GF(q) -> GF(q) given by its values at `0, 1, ..., q-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueTable {
    m: u32,
    values: Vec<Fe>,
}

impl ValueTable {
    pub fn new(ctx: &FieldCtx, values: Vec<Fe>) -> Self {
        assert_eq!(values.len(), ctx.q() as usize, "table must cover the field");
        ValueTable { m: ctx.m(), values }
    }

    pub fn from_fn(ctx: &FieldCtx, f: impl Fn(Fe) -> Fe) -> Self {
        Self::new(ctx, ctx.elements().map(f).collect())
    }

    pub fn monomial(ctx: &FieldCtx, k: u64) -> Self {
        Self::from_fn(ctx, |x| ctx.pow(x, k))
    }

    #[inline]
    pub fn get(&self, x: Fe) -> Fe {
        self.values[x.0 as usize]
    }

    pub fn values(&self) -> &[Fe] {
        &self.values
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

/// Witness for a failed criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `f(0) != 0` or `f(1) != 1`.
    Normalization { x: Fe, value: Fe },
    /// `f(x) = f(y)` with `x != y`.
    NotPermutation { x: Fe, y: Fe, value: Fe },
    /// `g_a(x) = g_a(y)` with `x != y`, `g_a(x) = (f(x+a)+f(a)) x^(q-2)`.
    SegreCollision { a: Fe, x: Fe, y: Fe, value: Fe },
    /// `f(x) + ux` attains `value` a number of times other than 0 or 2.
    NotTwoToOne { u: Fe, value: Fe, count: u32 },
    /// Equal slopes from `x` to `y` and from `x` to `z`.
    SlopeCollision { x: Fe, y: Fe, z: Fe, slope: Fe },
    /// `f(x) + x + 1 = 0`.
    AffineRoot { x: Fe },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Normalization { x, value } => write!(f, "f({x}) = {value}, expected {x}"),
            Violation::NotPermutation { x, y, value } => {
                write!(f, "not a permutation: f({x}) = f({y}) = {value}")
            }
            Violation::SegreCollision { a, x, y, value } => {
                write!(
                    f,
                    "g_a not a permutation at a={a}: g_a({x}) = g_a({y}) = {value}"
                )
            }
            Violation::NotTwoToOne { u, value, count } => {
                write!(f, "f(x)+{u}x attains {value} exactly {count} times")
            }
            Violation::SlopeCollision { x, y, z, slope } => {
                write!(f, "slopes from x={x} to y={y} and z={z} both equal {slope}")
            }
            Violation::AffineRoot { x } => write!(f, "f(x)+x+1 = 0 at x={x}"),
        }
    }
}

pub type Verdict = std::result::Result<(), Violation>;

/// Largest m for which the cubic slope check runs without an explicit override.
pub const SLOPE_DEFAULT_MAX_M: u32 = 8;

fn check_table(ctx: &FieldCtx, f: &ValueTable) {
    assert_eq!(ctx.m(), f.m(), "table and field disagree on m");
}

pub fn check_normalized(ctx: &FieldCtx, f: &ValueTable) -> Verdict {
    check_table(ctx, f);
    for x in [Fe::ZERO, Fe::ONE] {
        if f.get(x) != x {
            return Err(Violation::Normalization { x, value: f.get(x) });
        }
    }
    Ok(())
}

pub fn check_permutation(ctx: &FieldCtx, f: &ValueTable) -> Verdict {
    check_table(ctx, f);
    // preimage + 1, so 0 marks an unseen value
    let mut seen = vec![0u32; ctx.q() as usize];
    for x in ctx.elements() {
        let v = f.get(x);
        let slot = &mut seen[v.0 as usize];
        if *slot != 0 {
            return Err(Violation::NotPermutation {
                x: Fe(*slot - 1),
                y: x,
                value: v,
            });
        }
        *slot = x.0 + 1;
    }
    Ok(())
}

/// For every `a`, `x -> (f(x+a)+f(a)) x^(q-2)` must be a bijection.
pub fn check_segre_condition(ctx: &FieldCtx, f: &ValueTable) -> Verdict {
    check_table(ctx, f);
    let q = ctx.q() as usize;
    let inv: Vec<Fe> = ctx.elements().map(|x| ctx.pow(x, q as u64 - 2)).collect();
    let mut seen = vec![0u32; q];
    for a in ctx.elements() {
        seen.iter_mut().for_each(|s| *s = 0);
        let fa = f.get(a);
        for x in ctx.elements() {
            let g = ctx.mul(ctx.add(f.get(ctx.add(x, a)), fa), inv[x.0 as usize]);
            let slot = &mut seen[g.0 as usize];
            if *slot != 0 {
                return Err(Violation::SegreCollision {
                    a,
                    x: Fe(*slot - 1),
                    y: x,
                    value: g,
                });
            }
            *slot = x.0 + 1;
        }
    }
    Ok(())
}

/// Permutation, normalization and the `g_a` condition.
pub fn check_oval_polynomial(ctx: &FieldCtx, f: &ValueTable) -> Verdict {
    check_normalized(ctx, f)?;
    check_permutation(ctx, f)?;
    check_segre_condition(ctx, f)
}

/// Every `f(x) + ux`, `u != 0`, attains each value 0 or 2 times.
pub fn check_two_to_one(ctx: &FieldCtx, f: &ValueTable) -> Verdict {
    check_table(ctx, f);
    let mut counts = vec![0u32; ctx.q() as usize];
    for u in ctx.elements().skip(1) {
        counts.iter_mut().for_each(|c| *c = 0);
        for x in ctx.elements() {
            counts[ctx.add(f.get(x), ctx.mul(u, x)).0 as usize] += 1;
        }
        if let Some((v, &c)) = counts.iter().enumerate().find(|(_, &c)| c != 0 && c != 2) {
            return Err(Violation::NotTwoToOne {
                u,
                value: Fe(v as u32),
                count: c,
            });
        }
    }
    Ok(())
}

/// Permutation plus pairwise-distinct secant slopes through every point,
/// compared over all distinct triples. Cubic in q; refuses `m` above
/// `max_m`.
pub fn check_slope_condition(ctx: &FieldCtx, f: &ValueTable, max_m: u32) -> Result<Verdict> {
    check_table(ctx, f);
    if ctx.m() > max_m {
        let q = u128::from(ctx.q());
        return Err(Error::BudgetExceeded {
            what: "slope condition",
            required: q * q * q,
            cap: 1u128 << (3 * max_m),
        });
    }
    if let Err(v) = check_permutation(ctx, f) {
        return Ok(Err(v));
    }
    let q = ctx.q() as usize;
    let mut slopes = vec![Fe::ZERO; q];
    for x in ctx.elements() {
        let fx = f.get(x);
        for y in ctx.elements() {
            if y != x {
                let num = ctx.add(fx, f.get(y));
                let den = ctx.add(x, y);
                slopes[y.0 as usize] = ctx.div(num, den).expect("x != y");
            }
        }
        for y in 0..q {
            if y == x.0 as usize {
                continue;
            }
            for z in (y + 1)..q {
                if z != x.0 as usize && slopes[y] == slopes[z] {
                    return Ok(Err(Violation::SlopeCollision {
                        x,
                        y: Fe(y as u32),
                        z: Fe(z as u32),
                        slope: slopes[y],
                    }));
                }
            }
        }
    }
    Ok(Ok(()))
}

pub fn check_no_affine_root(ctx: &FieldCtx, f: &ValueTable) -> Verdict {
    check_table(ctx, f);
    match ctx
        .elements()
        .find(|&x| ctx.add(ctx.add(f.get(x), x), Fe::ONE).is_zero())
    {
        Some(x) => Err(Violation::AffineRoot { x }),
        None => Ok(()),
    }
}

pub fn is_permutation(ctx: &FieldCtx, f: &ValueTable) -> bool {
    check_permutation(ctx, f).is_ok()
}

pub fn segre_condition(ctx: &FieldCtx, f: &ValueTable) -> bool {
    check_segre_condition(ctx, f).is_ok()
}

pub fn is_oval_polynomial(ctx: &FieldCtx, f: &ValueTable) -> bool {
    check_oval_polynomial(ctx, f).is_ok()
}

pub fn is_two_to_one_criterion(ctx: &FieldCtx, f: &ValueTable) -> bool {
    check_two_to_one(ctx, f).is_ok()
}

pub fn slope_condition(ctx: &FieldCtx, f: &ValueTable) -> Result<bool> {
    Ok(check_slope_condition(ctx, f, SLOPE_DEFAULT_MAX_M)?.is_ok())
}

pub fn no_affine_root(ctx: &FieldCtx, f: &ValueTable) -> bool {
    check_no_affine_root(ctx, f).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opoly::{catalog, Family, OvalPolySpec};

    #[test]
    fn translation_is_oval() {
        for m in 2..=6 {
            let ctx = FieldCtx::new(m).unwrap();
            let f = ValueTable::monomial(&ctx, 2);
            assert!(is_permutation(&ctx, &f));
            assert!(segre_condition(&ctx, &f));
            assert!(is_two_to_one_criterion(&ctx, &f));
            assert!(slope_condition(&ctx, &f).unwrap());
        }
    }

    #[test]
    fn identity_is_degenerate() {
        let ctx = FieldCtx::new(4).unwrap();
        let f = ValueTable::monomial(&ctx, 1);
        assert!(is_permutation(&ctx, &f));
        assert!(matches!(
            check_segre_condition(&ctx, &f),
            Err(Violation::SegreCollision { a: Fe(0), .. })
        ));
        assert!(!is_oval_polynomial(&ctx, &f));
        assert!(!is_two_to_one_criterion(&ctx, &f));
    }

    #[test]
    fn cube_over_gf16_is_not_a_permutation() {
        let ctx = FieldCtx::new(4).unwrap();
        let f = ValueTable::monomial(&ctx, 3);
        assert!(!is_permutation(&ctx, &f));
        assert!(!slope_condition(&ctx, &f).unwrap());
    }

    #[test]
    fn cube_over_gf8_fails_two_to_one_at_u1() {
        let ctx = FieldCtx::new(3).unwrap();
        let f = ValueTable::monomial(&ctx, 3);
        let mut counts = [0u32; 8];
        for x in ctx.elements() {
            counts[ctx.add(ctx.pow(x, 3), x).0 as usize] += 1;
        }
        assert!(counts.iter().any(|&c| c != 0 && c != 2));
        assert!(matches!(
            check_two_to_one(&ctx, &f),
            Err(Violation::NotTwoToOne { u: Fe(1), .. })
        ));
    }

    #[test]
    fn x_squared_plus_x_collides_in_pairs() {
        let ctx = FieldCtx::new(5).unwrap();
        for x in ctx.elements() {
            let y = ctx.add(x, Fe::ONE);
            assert_eq!(ctx.add(ctx.square(x), x), ctx.add(ctx.square(y), y));
        }
    }

    #[test]
    fn segre_parity() {
        let ctx4 = FieldCtx::new(4).unwrap();
        let probe = OvalPolySpec::probe(Family::Segre, &ctx4)
            .unwrap()
            .table(&ctx4)
            .unwrap();
        assert!(!segre_condition(&ctx4, &probe));
        assert!(!slope_condition(&ctx4, &probe).unwrap());
        for m in [3, 5] {
            let ctx = FieldCtx::new(m).unwrap();
            let f = OvalPolySpec::new(Family::Segre, &ctx)
                .unwrap()
                .table(&ctx)
                .unwrap();
            assert!(is_oval_polynomial(&ctx, &f));
            assert!(is_two_to_one_criterion(&ctx, &f));
            assert!(no_affine_root(&ctx, &f));
        }
    }

    #[test]
    fn affine_roots() {
        let ctx4 = FieldCtx::new(4).unwrap();
        assert!(!no_affine_root(&ctx4, &ValueTable::monomial(&ctx4, 2)));
        let ctx5 = FieldCtx::new(5).unwrap();
        let cherowitzo = OvalPolySpec::new(Family::Cherowitzo, &ctx5)
            .unwrap()
            .table(&ctx5)
            .unwrap();
        assert!(no_affine_root(&ctx5, &cherowitzo));
    }

    #[test]
    fn slope_cap() {
        let ctx = FieldCtx::new(9).unwrap();
        let f = ValueTable::monomial(&ctx, 2);
        assert!(matches!(
            slope_condition(&ctx, &f),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(check_slope_condition(&ctx, &f, 9).unwrap().is_ok());
    }

    #[test]
    fn three_way_agreement_on_monomials() {
        for m in 2..=6 {
            let ctx = FieldCtx::new(m).unwrap();
            let q = u64::from(ctx.q());
            for k in 1..q - 1 {
                let f = ValueTable::monomial(&ctx, k);
                let a = is_oval_polynomial(&ctx, &f);
                let b = is_two_to_one_criterion(&ctx, &f);
                let c = slope_condition(&ctx, &f).unwrap();
                assert!(a == b && b == c, "m={m} k={k}: {a} {b} {c}");
            }
        }
    }

    #[test]
    fn catalog_members_pass_every_criterion() {
        for m in 2..=8 {
            let ctx = FieldCtx::new(m).unwrap();
            for spec in catalog(&ctx).unwrap() {
                let f = spec.table(&ctx).unwrap();
                assert_eq!(check_oval_polynomial(&ctx, &f), Ok(()), "{spec} m={m}");
                assert_eq!(check_two_to_one(&ctx, &f), Ok(()), "{spec} m={m}");
                if m <= 7 {
                    assert_eq!(
                        check_slope_condition(&ctx, &f, 8).unwrap(),
                        Ok(()),
                        "{spec}"
                    );
                }
            }
        }
    }

    #[test]
    fn binary_families_satisfy_root_freeness_and_frobenius() {
        for m in [3, 5, 7, 9] {
            let ctx = FieldCtx::new(m).unwrap();
            for spec in catalog(&ctx)
                .unwrap()
                .into_iter()
                .filter(|s| s.has_binary_coefficients())
            {
                let f = spec.table(&ctx).unwrap();
                assert!(no_affine_root(&ctx, &f), "{spec} m={m}");
                for x in ctx.elements() {
                    assert_eq!(f.get(ctx.square(x)), ctx.square(f.get(x)));
                }
            }
        }
    }
}
