//! The nine known infinite families of oval polynomials over GF(2^m).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::criteria::{check_oval_polynomial, ValueTable};
use crate::error::{Error, Result};
use crate::gf2m::{ExtFe, ExtFieldCtx, Fe, FieldCtx};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `x^(2^h)` with `gcd(h, m) = 1`.
    Translation { h: u32 },
    /// `x^6`, m odd.
    Segre,
    /// `x^(3*2^((m+1)/2) + 4)`, m odd.
    GlynnA,
    /// `x^(2^((m+1)/2) + 2^((m+1)/4))`, m = 3 mod 4.
    GlynnB,
    /// `x^(2^((m+1)/2) + 2^((3m+1)/4))`, m = 1 mod 4.
    GlynnC,
    /// `x^s + x^(s+2) + x^(3s+4)` with `s = 2^((m+1)/2)`, m odd.
    Cherowitzo,
    /// `x^(1/6) + x^(1/2) + x^(5/6)`, exponents taken modulo q-1, m odd.
    Payne,
    /// Subiaco family with parameter `a`, `Tr(1/a) = 1`.
    Subiaco { a: Fe },
    /// Adelaide family; `beta` lies in GF(q^2) with `beta^(q+1) = 1`, and the
    /// exponent satisfies `e = +-(q-1)/3 (mod q+1)`.
    Adelaide { beta: ExtFe, e: u64 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Translation { .. } => "translation",
            Family::Segre => "segre",
            Family::GlynnA => "glynn-a",
            Family::GlynnB => "glynn-b",
            Family::GlynnC => "glynn-c",
            Family::Cherowitzo => "cherowitzo",
            Family::Payne => "payne",
            Family::Subiaco { .. } => "subiaco",
            Family::Adelaide { .. } => "adelaide",
        }
    }

    /// Every family with all polynomial coefficients in GF(2).
    pub fn has_binary_coefficients(&self) -> bool {
        !matches!(self, Family::Subiaco { .. } | Family::Adelaide { .. })
    }

    pub const NAMES: [&'static str; 9] = [
        "translation",
        "segre",
        "glynn-a",
        "glynn-b",
        "glynn-c",
        "cherowitzo",
        "payne",
        "subiaco",
        "adelaide",
    ];
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn exact_div(num: u64, den: u64, what: &str) -> std::result::Result<u64, String> {
    if num.is_multiple_of(den) {
        Ok(num / den)
    } else {
        Err(format!("exponent {what} = {num}/{den} is not an integer"))
    }
}

/// Monomial exponents of the GF(2)-coefficient families, or the reason the
/// formula is undefined at this m.
fn monomial_exponents(family: &Family, m: u32) -> std::result::Result<Vec<u64>, String> {
    let half = |what: &str| -> std::result::Result<u32, String> {
        if m % 2 == 1 {
            Ok(m.div_ceil(2))
        } else {
            Err(format!("{what} needs (m+1)/2 integral, i.e. m odd"))
        }
    };
    match *family {
        Family::Translation { h } => Ok(vec![1u64 << h]),
        Family::Segre => Ok(vec![6]),
        Family::GlynnA => {
            let s = 1u64 << half("glynn-a")?;
            Ok(vec![3 * s + 4])
        }
        Family::GlynnB => {
            if m % 4 != 3 {
                return Err("(m+1)/4 must be an odd-m integer, i.e. m = 3 (mod 4)".into());
            }
            Ok(vec![(1u64 << m.div_ceil(2)) + (1u64 << ((m + 1) / 4))])
        }
        Family::GlynnC => {
            if m % 4 != 1 {
                return Err("(3m+1)/4 must be an integer with m odd, i.e. m = 1 (mod 4)".into());
            }
            Ok(vec![(1u64 << m.div_ceil(2)) + (1u64 << ((3 * m + 1) / 4))])
        }
        Family::Cherowitzo => {
            let s = 1u64 << half("cherowitzo")?;
            Ok(vec![s, s + 2, 3 * s + 4])
        }
        Family::Payne => {
            let p = 1u64 << (m - 1);
            let five_sixths = exact_div(p + 2, 3, "(2^(m-1)+2)/3")?;
            let one_sixth = exact_div(5 * p - 2, 3, "(5*2^(m-1)-2)/3")?;
            Ok(vec![five_sixths, p, one_sixth])
        }
        Family::Subiaco { .. } | Family::Adelaide { .. } => Ok(Vec::new()),
    }
}

/// Degree constraints under which a family is listed as an oval polynomial.
fn applicability(family: &Family, m: u32) -> std::result::Result<(), String> {
    let odd = || {
        if m % 2 == 1 {
            Ok(())
        } else {
            Err("m must be odd".to_string())
        }
    };
    match family {
        Family::Translation { .. } | Family::Subiaco { .. } => Ok(()),
        Family::Segre | Family::GlynnA | Family::Cherowitzo | Family::Payne => odd(),
        Family::GlynnB => {
            if m % 4 == 3 {
                Ok(())
            } else {
                Err("m must be 3 (mod 4)".into())
            }
        }
        Family::GlynnC => {
            if m % 4 == 1 {
                Ok(())
            } else {
                Err("m must be 1 (mod 4)".into())
            }
        }
        Family::Adelaide { .. } => {
            if m >= 4 && m.is_multiple_of(2) {
                Ok(())
            } else {
                Err("m must be even and at least 4".into())
            }
        }
    }
}

fn subiaco_parameter_ok(ctx: &FieldCtx, a: Fe) -> std::result::Result<(), String> {
    if a.0 >= ctx.q() {
        return Err(format!("a={a} is not an element of GF({})", ctx.q()));
    }
    if a.is_zero() {
        return Err("a must be nonzero".into());
    }
    let inv = ctx.inv(a).expect("nonzero");
    if ctx.trace(inv) != Fe::ONE {
        return Err(format!("Tr(1/a) must be 1 for a={a}"));
    }
    if ctx.m() % 4 == 2 && ctx.pow(a, 4) == a {
        return Err(format!("a={a} lies in GF(4) while m = 2 (mod 4)"));
    }
    Ok(())
}

fn adelaide_parameter_ok(ctx: &FieldCtx, beta: ExtFe, e: u64) -> std::result::Result<(), String> {
    let q = u64::from(ctx.q());
    if beta.lo.0 >= ctx.q() || beta.hi.0 >= ctx.q() {
        return Err("beta is not an element of GF(q^2)".into());
    }
    if (q - 1) % 3 != 0 {
        return Err("(q-1)/3 is not an integer; m must be even".into());
    }
    let third = (q - 1) / 3;
    let r = e % (q + 1);
    if e == 0 || (r != third && r != q + 1 - third) {
        return Err(format!(
            "exponent e={e} is not +-(q-1)/3 = +-{third} (mod {})",
            q + 1
        ));
    }
    let ext = ExtFieldCtx::new(ctx);
    if beta == ExtFe::ONE {
        return Err("beta must differ from 1".into());
    }
    if ext.pow(beta, q + 1) != ExtFe::ONE {
        return Err("beta^(q+1) must equal 1".into());
    }
    Ok(())
}

/// A named oval-polynomial family instance at a fixed extension degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OvalPolySpec {
    family: Family,
    m: u32,
    exponents: Vec<u64>,
    applicable: bool,
}

impl OvalPolySpec {
    /// Builds a spec, enforcing both the parameter constraints and the degree
    /// constraints under which the family is known to be an oval polynomial.
    pub fn new(family: Family, ctx: &FieldCtx) -> Result<Self> {
        let spec = Self::probe(family, ctx)?;
        if let Err(reason) = applicability(&family, ctx.m()) {
            return Err(Error::Inapplicable {
                family: family.name().into(),
                m: ctx.m(),
                reason,
            });
        }
        Ok(spec)
    }

    /// Builds a spec whose formula is evaluable at this m even when the
    /// family is not listed as an oval polynomial there (e.g. Segre at even
    /// m). Parameter constraints are still enforced.
    pub fn probe(family: Family, ctx: &FieldCtx) -> Result<Self> {
        let m = ctx.m();
        let name = family.name();
        let bad = |reason: String| Error::InvalidParameter {
            family: name.into(),
            reason,
        };
        match family {
            Family::Translation { h } => {
                if h == 0 || h >= m {
                    return Err(bad(format!("h={h} must lie in 1..{m}")));
                }
                if gcd(h, m) != 1 {
                    return Err(bad(format!(
                        "gcd(h, m) = gcd({h}, {m}) = {} != 1",
                        gcd(h, m)
                    )));
                }
            }
            Family::Subiaco { a } => subiaco_parameter_ok(ctx, a).map_err(bad)?,
            Family::Adelaide { beta, e } => adelaide_parameter_ok(ctx, beta, e).map_err(bad)?,
            _ => {}
        }
        let exponents = monomial_exponents(&family, m).map_err(|reason| Error::Inapplicable {
            family: name.into(),
            m,
            reason,
        })?;
        Ok(OvalPolySpec {
            family,
            m,
            exponents,
            applicable: applicability(&family, m).is_ok(),
        })
    }

    /// Subiaco with the smallest-encoding valid parameter, admitted only after
    /// passing oval-polynomial verification.
    pub fn subiaco(ctx: &FieldCtx) -> Result<Self> {
        let a = ctx
            .elements()
            .find(|&a| subiaco_parameter_ok(ctx, a).is_ok())
            .ok_or_else(|| Error::Inapplicable {
                family: "subiaco".into(),
                m: ctx.m(),
                reason: "no a with Tr(1/a) = 1 outside GF(4)".into(),
            })?;
        Self::new(Family::Subiaco { a }, ctx)?.verified(ctx)
    }

    /// Adelaide with `e = (q-1)/3` and the smallest-encoding `beta != 1` on
    /// the norm-one circle, admitted only after verification.
    pub fn adelaide(ctx: &FieldCtx) -> Result<Self> {
        let q = u64::from(ctx.q());
        if let Err(reason) = applicability(
            &Family::Adelaide {
                beta: ExtFe::ONE,
                e: 0,
            },
            ctx.m(),
        ) {
            return Err(Error::Inapplicable {
                family: "adelaide".into(),
                m: ctx.m(),
                reason,
            });
        }
        let e = (q - 1) / 3;
        let ext = ExtFieldCtx::new(ctx);
        let beta = ext
            .elements()
            .find(|&b| b != ExtFe::ONE && ext.pow(b, q + 1) == ExtFe::ONE)
            .expect("the norm-one subgroup has q+1 > 1 elements");
        Self::new(Family::Adelaide { beta, e }, ctx)?.verified(ctx)
    }

    /// Fails with [`Error::NotOvalPolynomial`] unless the spec passes the
    /// full oval-polynomial check in `ctx`.
    pub fn verified(self, ctx: &FieldCtx) -> Result<Self> {
        let table = self.table(ctx)?;
        match check_oval_polynomial(ctx, &table) {
            Ok(()) => Ok(self),
            Err(v) => Err(Error::NotOvalPolynomial {
                family: self.to_string(),
                m: self.m,
                violation: v.to_string(),
            }),
        }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn name(&self) -> &'static str {
        self.family.name()
    }

    /// Whether the family's degree constraints hold at this m.
    pub fn is_applicable(&self) -> bool {
        self.applicable
    }

    pub fn applicability_reason(&self) -> Option<String> {
        applicability(&self.family, self.m).err()
    }

    pub fn has_binary_coefficients(&self) -> bool {
        self.family.has_binary_coefficients()
    }

    /// Monomial exponents, empty for the rational families.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    fn check_ctx(&self, ctx: &FieldCtx) -> Result<()> {
        if ctx.m() != self.m {
            return Err(Error::Inapplicable {
                family: self.name().into(),
                m: ctx.m(),
                reason: format!("spec was built for m={}", self.m),
            });
        }
        Ok(())
    }

    pub fn eval(&self, ctx: &FieldCtx, x: Fe) -> Result<Fe> {
        self.check_ctx(ctx)?;
        ctx.elem(x.0)?;
        Ok(match self.family {
            Family::Subiaco { a } => eval_subiaco(ctx, a, x),
            Family::Adelaide { beta, e } => eval_adelaide(&ExtFieldCtx::new(ctx), beta, e, x),
            _ => self
                .exponents
                .iter()
                .fold(Fe::ZERO, |acc, &k| ctx.add(acc, ctx.pow(x, k))),
        })
    }

    /// Values of f on every field element.
    pub fn table(&self, ctx: &FieldCtx) -> Result<ValueTable> {
        self.check_ctx(ctx)?;
        let values = match self.family {
            Family::Subiaco { a } => ctx.elements().map(|x| eval_subiaco(ctx, a, x)).collect(),
            Family::Adelaide { beta, e } => {
                let ext = ExtFieldCtx::new(ctx);
                ctx.elements()
                    .map(|x| eval_adelaide(&ext, beta, e, x))
                    .collect()
            }
            _ => ctx
                .elements()
                .map(|x| {
                    self.exponents
                        .iter()
                        .fold(Fe::ZERO, |acc, &k| ctx.add(acc, ctx.pow(x, k)))
                })
                .collect(),
        };
        Ok(ValueTable::new(ctx, values))
    }

    /// Parameters as stable key/value pairs.
    pub fn params(&self, ctx_m: u32) -> BTreeMap<String, Value> {
        let mut p = BTreeMap::new();
        match self.family {
            Family::Translation { h } => {
                p.insert("h".into(), Value::from(h));
            }
            Family::Subiaco { a } => {
                p.insert("a".into(), Value::from(a.0));
            }
            Family::Adelaide { beta, e } => {
                p.insert("beta".into(), Value::from(beta.encode(ctx_m)));
                p.insert("e".into(), Value::from(e));
            }
            _ => {}
        }
        p
    }

    pub fn to_record(&self) -> SpecRecord {
        SpecRecord {
            family: self.name().into(),
            m: self.m,
            params: self.params(self.m),
        }
    }

    pub fn from_record(record: &SpecRecord, ctx: &FieldCtx) -> Result<Self> {
        if record.m != ctx.m() {
            return Err(Error::Precondition(format!(
                "record is for m={}, field has m={}",
                record.m,
                ctx.m()
            )));
        }
        let family = Family::from_parts(&record.family, &record.params, ctx.m())?;
        Self::new(family, ctx)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("records serialize")
    }

    pub fn from_json(text: &str, ctx: &FieldCtx) -> Result<Self> {
        let record: SpecRecord = serde_json::from_str(text)?;
        Self::from_record(&record, ctx)
    }
}

impl Family {
    /// Parses a family name plus parameters. Missing Subiaco/Adelaide
    /// parameters are an error here; use the canonical constructors instead.
    pub fn from_parts(name: &str, params: &BTreeMap<String, Value>, m: u32) -> Result<Family> {
        let get = |key: &str| -> Result<u64> {
            params
                .get(key)
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::InvalidParameter {
                    family: name.into(),
                    reason: format!("missing or non-integer parameter {key:?}"),
                })
        };
        Ok(match name {
            "translation" => Family::Translation {
                h: get("h")? as u32,
            },
            "segre" => Family::Segre,
            "glynn-a" => Family::GlynnA,
            "glynn-b" => Family::GlynnB,
            "glynn-c" => Family::GlynnC,
            "cherowitzo" => Family::Cherowitzo,
            "payne" => Family::Payne,
            "subiaco" => Family::Subiaco {
                a: Fe(get("a")? as u32),
            },
            "adelaide" => Family::Adelaide {
                beta: ExtFe::decode(get("beta")?, m),
                e: get("e")?,
            },
            other => {
                return Err(Error::InvalidParameter {
                    family: other.into(),
                    reason: format!(
                        "unknown family; expected one of {}",
                        Family::NAMES.join(", ")
                    ),
                })
            }
        })
    }
}

impl fmt::Display for OvalPolySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        match self.family {
            Family::Translation { h } => write!(f, "(h={h})"),
            Family::Subiaco { a } => write!(f, "(a={a})"),
            Family::Adelaide { beta, e } => write!(f, "(beta={},e={e})", beta.encode(self.m)),
            _ => Ok(()),
        }
    }
}

/// Serialized form: `{"family": ..., "m": ..., "params": {...}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecRecord {
    pub family: String,
    pub m: u32,
    #[serde(default)]
    pub params: BTreeMap<String, Value>,
}

/// `(a^2(x^4+x) + a^2(1+a+a^2)(x^3+x^2)) * (x^4+a^2x^2+1)^(q-2) + x^(2^(m-1))`
fn eval_subiaco(ctx: &FieldCtx, a: Fe, x: Fe) -> Fe {
    let q = u64::from(ctx.q());
    let a2 = ctx.square(a);
    let x2 = ctx.square(x);
    let x3 = ctx.mul(x2, x);
    let x4 = ctx.square(x2);
    let c = ctx.mul(a2, ctx.add(ctx.add(Fe::ONE, a), a2));
    let num = ctx.add(ctx.mul(a2, ctx.add(x4, x)), ctx.mul(c, ctx.add(x3, x2)));
    let den = ctx.add(ctx.add(x4, ctx.mul(a2, x2)), Fe::ONE);
    ctx.add(ctx.mul(num, ctx.pow(den, q - 2)), ctx.sqrt(x))
}

/// `T(b^e)(x+1)/T(b) + T((b x + b^q)^e) / (T(b) (x + T(b) x^(1/2) + 1)^(e-1)) + x^(1/2)`
fn eval_adelaide(ext: &ExtFieldCtx<'_>, beta: ExtFe, e: u64, x: Fe) -> Fe {
    let f = ext.base();
    let q = u64::from(f.q());
    let t_beta = ext.trace_to_base(beta);
    let t_beta_inv = f.pow(t_beta, q - 2);
    let sqrt_x = f.sqrt(x);

    let first = f.mul(
        f.mul(ext.trace_to_base(ext.pow(beta, e)), f.add(x, Fe::ONE)),
        t_beta_inv,
    );

    let inner = ext.add(ext.mul(beta, ExtFe::embed(x)), ext.conj(beta));
    let numer = ext.trace_to_base(ext.pow(inner, e));
    let base = f.add(f.add(x, f.mul(t_beta, sqrt_x)), Fe::ONE);
    let denom_inv = f.pow(f.pow(base, e - 1), q - 2);
    let second = f.mul(f.mul(numer, t_beta_inv), denom_inv);

    f.add(f.add(first, second), sqrt_x)
}
