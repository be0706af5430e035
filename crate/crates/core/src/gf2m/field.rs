//! Table-driven arithmetic in GF(2^m) for 2 <= m <= 16.
//!
//! Elements are encoded as bitmasks of polynomial coefficients (bit `i` is the
//! coefficient of `x^i`) reduced modulo an irreducible binary polynomial.
//! Multiplication goes through discrete-log tables built from a primitive
//! element; the carry-less schoolbook product is kept alongside as a
//! reference path.

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};

/// A field element, encoded as a coefficient bitmask below `q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Carry-less product of two binary polynomials.
#[inline]
pub fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 != 0 {
            acc ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    acc
}

fn degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

/// Remainder of binary polynomial division `a mod b`; `b` must be nonzero.
pub fn poly_rem(mut a: u64, b: u64) -> u64 {
    debug_assert!(b != 0);
    let db = degree(b);
    while a != 0 && degree(a) >= db {
        a ^= b << (degree(a) - db);
    }
    a
}

/// Irreducibility over GF(2) by trial division with every polynomial of
/// degree 1..=deg/2.
pub fn is_irreducible(poly: u64) -> bool {
    let d = degree(poly);
    if d < 1 {
        return false;
    }
    for div_deg in 1..=(d / 2) {
        for low in 0..(1u64 << div_deg) {
            let divisor = (1u64 << div_deg) | low;
            if poly_rem(poly, divisor) == 0 {
                return false;
            }
        }
    }
    true
}

/// All irreducible binary polynomials of degree `m`, in increasing encoding.
pub fn irreducible_polynomials(m: u32) -> impl Iterator<Item = u32> {
    let lo = 1u32 << m;
    (lo..(lo << 1)).filter(|&p| is_irreducible(u64::from(p)))
}

/// A concrete GF(2^m): modulus, primitive element and log/antilog tables.
///
/// Immutable after construction.
#[derive(Clone)]
pub struct FieldCtx {
    m: u32,
    modulus: u32,
    alpha: Fe,
    /// `log[x]` for `x != 0`; `log[0]` is unused.
    log: Vec<u32>,
    /// `exp[i] = alpha^i` for `0 <= i < 2(q-1)`, doubled so a sum of two logs
    /// indexes without reduction.
    exp: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("m", &self.m)
            .field("modulus", &format_args!("{:#b}", self.modulus))
            .field("alpha", &self.alpha.0)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.modulus == other.modulus && self.alpha == other.alpha
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    pub const MIN_DEGREE: u32 = 2;
    pub const MAX_DEGREE: u32 = 16;

    /// Canonical field: the smallest irreducible modulus and the smallest
    /// primitive element with encoding >= 2.
    pub fn new(m: u32) -> Result<Self> {
        Self::with_params(m, None, None)
    }

    /// Field with an optional modulus and generator override.
    pub fn with_params(m: u32, modulus: Option<u32>, alpha: Option<u32>) -> Result<Self> {
        if !(Self::MIN_DEGREE..=Self::MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let modulus = match modulus {
            Some(p) => {
                if degree(u64::from(p)) != m as i32 || !is_irreducible(u64::from(p)) {
                    return Err(Error::NotIrreducible { m, modulus: p });
                }
                p
            }
            None => irreducible_polynomials(m)
                .next()
                .expect("irreducible polynomials exist in every degree"),
        };
        let q = 1u32 << m;
        match alpha {
            Some(a) => {
                if a >= q {
                    return Err(Error::ElementOutOfRange { value: a, q });
                }
                Self::build_tables(m, modulus, a).ok_or(Error::NotPrimitive { m, alpha: a })
            }
            None => Ok((2..q)
                .find_map(|a| Self::build_tables(m, modulus, a))
                .expect("the multiplicative group is cyclic")),
        }
    }

    fn build_tables(m: u32, modulus: u32, alpha: u32) -> Option<Self> {
        let q = 1usize << m;
        let order = q - 1;
        let mut exp = vec![0u32; 2 * order];
        let mut log = vec![0u32; q];
        let mut x = 1u32;
        for (i, slot) in exp.iter_mut().enumerate().take(order) {
            if i > 0 && x == 1 {
                return None;
            }
            *slot = x;
            log[x as usize] = i as u32;
            x = poly_rem(clmul(u64::from(x), u64::from(alpha)), u64::from(modulus)) as u32;
        }
        if x != 1 {
            return None;
        }
        let (lo, hi) = exp.split_at_mut(order);
        hi.copy_from_slice(lo);
        Some(FieldCtx {
            m,
            modulus,
            alpha: Fe(alpha),
            log,
            exp,
        })
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn q(&self) -> u32 {
        1 << self.m
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    #[inline]
    pub fn alpha(&self) -> Fe {
        self.alpha
    }

    /// Same arithmetic: identical degree and modulus. The generator only
    /// affects table layout and the element ordering used by constructions.
    pub fn same_arithmetic(&self, other: &FieldCtx) -> bool {
        self.m == other.m && self.modulus == other.modulus
    }

    pub fn elem(&self, value: u32) -> Result<Fe> {
        if value < self.q() {
            Ok(Fe(value))
        } else {
            Err(Error::ElementOutOfRange { value, q: self.q() })
        }
    }

    /// All elements in increasing encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.q()).map(Fe)
    }

    /// `alpha^i` for `i` taken modulo `q - 1`.
    #[inline]
    pub fn alpha_pow(&self, i: u64) -> Fe {
        Fe(self.exp[(i % (self.q() as u64 - 1)) as usize])
    }

    /// Discrete log base alpha; `None` for zero.
    #[inline]
    pub fn log(&self, a: Fe) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.0 as usize])
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        Fe(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        Fe(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    /// Reference product: carry-less multiply followed by reduction.
    pub fn mul_schoolbook(&self, a: Fe, b: Fe) -> Fe {
        Fe(poly_rem(
            clmul(u64::from(a.0), u64::from(b.0)),
            u64::from(self.modulus),
        ) as u32)
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let order = self.q() - 1;
        Ok(Fe(
            self.exp[((order - self.log[a.0 as usize]) % order) as usize]
        ))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` with `0^0 = 1` and `0^e = 0` for `e > 0`, so `pow(x, q-2)` is the
    /// total inverse map sending 0 to 0.
    #[inline]
    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.is_zero() {
            return Fe::ZERO;
        }
        let order = u64::from(self.q() - 1);
        let l = u64::from(self.log[a.0 as usize]);
        Fe(self.exp[((l * (e % order)) % order) as usize])
    }

    #[inline]
    pub fn square(&self, a: Fe) -> Fe {
        self.mul(a, a)
    }

    /// Unique square root, `a^(2^(m-1))`.
    pub fn sqrt(&self, a: Fe) -> Fe {
        self.pow(a, 1u64 << (self.m - 1))
    }

    /// Absolute trace to GF(2); the result is 0 or 1.
    pub fn trace(&self, a: Fe) -> Fe {
        let mut acc = Fe::ZERO;
        let mut x = a;
        for _ in 0..self.m {
            acc = self.add(acc, x);
            x = self.square(x);
        }
        acc
    }

    /// Bind a raw value to this context for operator-style arithmetic.
    pub fn bind(&self, value: u32) -> Result<Elem<'_>> {
        Ok(Elem {
            ctx: self,
            value: self.elem(value)?,
        })
    }
}

/// An element carrying its field context. Mixed-context arithmetic is an
/// error through the `checked_*` methods and a panic through the operators.
#[derive(Clone, Copy, Debug)]
pub struct Elem<'a> {
    ctx: &'a FieldCtx,
    value: Fe,
}

impl PartialEq for Elem<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_arithmetic(other.ctx) && self.value == other.value
    }
}

impl<'a> Elem<'a> {
    pub fn fe(self) -> Fe {
        self.value
    }

    pub fn ctx(self) -> &'a FieldCtx {
        self.ctx
    }

    fn check(self, other: Elem<'_>) -> Result<()> {
        if self.ctx.same_arithmetic(other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(self, other: Elem<'_>) -> Result<Elem<'a>> {
        self.check(other)?;
        Ok(Elem {
            ctx: self.ctx,
            value: self.ctx.add(self.value, other.value),
        })
    }

    pub fn checked_mul(self, other: Elem<'_>) -> Result<Elem<'a>> {
        self.check(other)?;
        Ok(Elem {
            ctx: self.ctx,
            value: self.ctx.mul(self.value, other.value),
        })
    }

    pub fn inv(self) -> Result<Elem<'a>> {
        Ok(Elem {
            ctx: self.ctx,
            value: self.ctx.inv(self.value)?,
        })
    }

    pub fn pow(self, e: u64) -> Elem<'a> {
        Elem {
            ctx: self.ctx,
            value: self.ctx.pow(self.value, e),
        }
    }
}

impl<'a> Add for Elem<'a> {
    type Output = Elem<'a>;

    fn add(self, rhs: Self) -> Self::Output {
        self.checked_add(rhs).expect("field context mismatch")
    }
}

impl<'a> Mul for Elem<'a> {
    type Output = Elem<'a>;

    fn mul(self, rhs: Self) -> Self::Output {
        self.checked_mul(rhs).expect("field context mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smallest irreducible cubic/quartic found by a sieve independent of
    /// `is_irreducible`: a degree-m polynomial is reducible iff it equals a
    /// product of two lower-degree polynomials.
    fn sieve_smallest_irreducible(m: u32) -> u32 {
        let mut reducible = std::collections::HashSet::new();
        for a in 2u64..(1 << m) {
            for b in 2u64..(1 << m) {
                let p = clmul(a, b);
                if degree(p) == m as i32 {
                    reducible.insert(p as u32);
                }
            }
        }
        ((1u32 << m)..(2u32 << m))
            .find(|p| !reducible.contains(p))
            .unwrap()
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(sieve_smallest_irreducible(3), 0b1011);
        assert_eq!(sieve_smallest_irreducible(4), 0b10011);
        assert_eq!(FieldCtx::new(3).unwrap().modulus(), 0b1011);
        assert_eq!(FieldCtx::new(4).unwrap().modulus(), 0b10011);
        for m in 2..=8 {
            assert_eq!(
                FieldCtx::new(m).unwrap().modulus(),
                sieve_smallest_irreducible(m)
            );
        }
    }

    #[test]
    fn canonical_alpha_gf8() {
        let f = FieldCtx::new(3).unwrap();
        assert_eq!(f.alpha(), Fe(2));
        // order of 2 is 7
        let mut x = Fe::ONE;
        let mut order = 0;
        loop {
            x = f.mul_schoolbook(x, Fe(2));
            order += 1;
            if x == Fe::ONE {
                break;
            }
        }
        assert_eq!(order, 7);
    }

    #[test]
    fn degree_range() {
        assert!(matches!(FieldCtx::new(1), Err(Error::DegreeOutOfRange(1))));
        assert!(matches!(
            FieldCtx::new(17),
            Err(Error::DegreeOutOfRange(17))
        ));
        assert!(FieldCtx::new(16).is_ok());
    }

    #[test]
    fn overrides_validated() {
        assert!(matches!(
            FieldCtx::with_params(3, Some(0b1001), None),
            Err(Error::NotIrreducible { .. })
        ));
        // x^4+x^3+x^2+x+1 is irreducible but x has order 5
        let f = FieldCtx::with_params(4, Some(0b11111), None).unwrap();
        assert_ne!(f.alpha(), Fe(2));
        assert!(matches!(
            FieldCtx::with_params(4, Some(0b11111), Some(2)),
            Err(Error::NotPrimitive { .. })
        ));
        let g = FieldCtx::with_params(3, Some(0b1101), Some(3)).unwrap();
        assert_eq!(g.alpha(), Fe(3));
    }

    #[test]
    fn small_examples() {
        let f = FieldCtx::new(3).unwrap();
        assert_eq!(f.add(Fe(5), Fe(3)), Fe(6));
        assert_eq!(f.add(Fe(0), Fe(7)), Fe(7));
        assert_eq!(f.mul(Fe(3), Fe(5)), Fe(4));
        let brute = (1..8)
            .map(Fe)
            .find(|&y| f.mul_schoolbook(Fe(2), y) == Fe::ONE)
            .unwrap();
        assert_eq!(brute, Fe(5));
        assert_eq!(f.inv(Fe(2)).unwrap(), Fe(5));
        assert!(matches!(f.inv(Fe::ZERO), Err(Error::ZeroInverse)));
    }

    #[test]
    fn pow_conventions() {
        let f = FieldCtx::new(5).unwrap();
        let q = u64::from(f.q());
        assert_eq!(f.pow(Fe::ZERO, 0), Fe::ONE);
        assert_eq!(f.pow(Fe::ZERO, q - 2), Fe::ZERO);
        for a in f.elements().skip(1) {
            assert_eq!(f.pow(a, q - 1), Fe::ONE);
            assert_eq!(f.pow(a, q - 2), f.inv(a).unwrap());
            assert_eq!(f.square(f.sqrt(a)), a);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for m in 2..=6 {
            let f = FieldCtx::new(m).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.mul(a, b), f.mul_schoolbook(a, b));
                    for c in f.elements() {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn inverses_and_element_sum() {
        for m in 2..=8 {
            let f = FieldCtx::new(m).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
            }
            let sum = f.elements().fold(Fe::ZERO, |acc, x| f.add(acc, x));
            assert_eq!(sum, Fe::ZERO);
        }
    }

    #[test]
    fn trace_properties() {
        assert_eq!(FieldCtx::new(3).unwrap().trace(Fe::ONE), Fe::ONE);
        assert_eq!(FieldCtx::new(4).unwrap().trace(Fe::ONE), Fe::ZERO);
        for m in 2..=8 {
            let f = FieldCtx::new(m).unwrap();
            let mut ones = 0;
            for a in f.elements() {
                let t = f.trace(a);
                assert!(t.0 <= 1);
                assert_eq!(f.trace(f.square(a)), t);
                ones += t.0;
                for b in f.elements().step_by(7) {
                    assert_eq!(f.trace(f.add(a, b)), f.add(t, f.trace(b)));
                }
            }
            assert_eq!(ones, f.q() / 2);
        }
    }

    #[test]
    fn bound_elements() {
        let f = FieldCtx::new(3).unwrap();
        let g = FieldCtx::new(4).unwrap();
        let x = f.bind(3).unwrap();
        let y = f.bind(5).unwrap();
        assert_eq!((x * y).fe(), Fe(4));
        assert_eq!((x + x).fe(), Fe::ZERO);
        let z = g.bind(3).unwrap();
        assert!(matches!(x.checked_add(z), Err(Error::ContextMismatch)));
        assert!(matches!(f.bind(8), Err(Error::ElementOutOfRange { .. })));
    }
}
