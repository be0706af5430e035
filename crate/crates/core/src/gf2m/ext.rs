//! Quadratic extension GF(q^2) = GF(q)[y] / (y^2 + s*y + t).

use super::field::{Fe, FieldCtx};
use crate::error::{Error, Result};

/// `lo + hi * y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtFe {
    pub lo: Fe,
    pub hi: Fe,
}

impl ExtFe {
    pub const ZERO: ExtFe = ExtFe {
        lo: Fe::ZERO,
        hi: Fe::ZERO,
    };
    pub const ONE: ExtFe = ExtFe {
        lo: Fe::ONE,
        hi: Fe::ZERO,
    };

    pub fn new(lo: Fe, hi: Fe) -> Self {
        ExtFe { lo, hi }
    }

    pub fn embed(a: Fe) -> Self {
        ExtFe {
            lo: a,
            hi: Fe::ZERO,
        }
    }

    pub fn is_zero(self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }

    /// Integer encoding `lo | hi << m` used for canonical ordering.
    pub fn encode(self, m: u32) -> u64 {
        u64::from(self.lo.0) | (u64::from(self.hi.0) << m)
    }

    pub fn decode(code: u64, m: u32) -> Self {
        let mask = (1u64 << m) - 1;
        ExtFe {
            lo: Fe((code & mask) as u32),
            hi: Fe((code >> m) as u32),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExtFieldCtx<'a> {
    base: &'a FieldCtx,
    /// Coefficients of the defining polynomial `y^2 + s*y + t`.
    s: Fe,
    t: Fe,
}

impl<'a> ExtFieldCtx<'a> {
    /// Picks the smallest-encoding monic quadratic (encoding `t + s*q`) with
    /// no root in the base field.
    pub fn new(base: &'a FieldCtx) -> Self {
        let q = base.q();
        let (s, t) = (0..q)
            .flat_map(|s| (0..q).map(move |t| (Fe(s), Fe(t))))
            .find(|&(s, t)| {
                base.elements().all(|y| {
                    let v = base.add(base.add(base.square(y), base.mul(s, y)), t);
                    !v.is_zero()
                })
            })
            .expect("irreducible quadratics exist over every finite field");
        ExtFieldCtx { base, s, t }
    }

    pub fn with_modulus(base: &'a FieldCtx, s: Fe, t: Fe) -> Result<Self> {
        base.elem(s.0)?;
        base.elem(t.0)?;
        let has_root = base.elements().any(|y| {
            base.add(base.add(base.square(y), base.mul(s, y)), t)
                .is_zero()
        });
        if has_root {
            return Err(Error::Precondition(format!(
                "y^2 + {s}*y + {t} has a root in GF({})",
                base.q()
            )));
        }
        Ok(ExtFieldCtx { base, s, t })
    }

    pub fn base(&self) -> &'a FieldCtx {
        self.base
    }

    pub fn modulus(&self) -> (Fe, Fe) {
        (self.s, self.t)
    }

    /// Number of elements, q^2.
    pub fn order(&self) -> u64 {
        u64::from(self.base.q()).pow(2)
    }

    pub fn elements(&self) -> impl Iterator<Item = ExtFe> + '_ {
        let m = self.base.m();
        (0..self.order()).map(move |c| ExtFe::decode(c, m))
    }

    pub fn add(&self, a: ExtFe, b: ExtFe) -> ExtFe {
        ExtFe {
            lo: self.base.add(a.lo, b.lo),
            hi: self.base.add(a.hi, b.hi),
        }
    }

    pub fn mul(&self, a: ExtFe, b: ExtFe) -> ExtFe {
        let f = self.base;
        // y^2 = s*y + t in characteristic 2
        let hh = f.mul(a.hi, b.hi);
        let lo = f.add(f.mul(a.lo, b.lo), f.mul(self.t, hh));
        let hi = f.add(
            f.add(f.mul(a.lo, b.hi), f.mul(a.hi, b.lo)),
            f.mul(self.s, hh),
        );
        ExtFe { lo, hi }
    }

    pub fn pow(&self, a: ExtFe, mut e: u64) -> ExtFe {
        let mut acc = ExtFe::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: ExtFe) -> Result<ExtFe> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.order() - 2))
    }

    /// Frobenius `x -> x^q`.
    pub fn conj(&self, a: ExtFe) -> ExtFe {
        self.pow(a, u64::from(self.base.q()))
    }

    /// `T(x) = x + x^q`, which always lands in the base field.
    pub fn trace_to_base(&self, a: ExtFe) -> Fe {
        let t = self.add(a, self.conj(a));
        debug_assert!(t.hi.is_zero());
        t.lo
    }

    /// `x^(q+1)`, also a base-field element.
    pub fn norm_to_base(&self, a: ExtFe) -> Fe {
        let n = self.mul(a, self.conj(a));
        debug_assert!(n.hi.is_zero());
        n.lo
    }
}
