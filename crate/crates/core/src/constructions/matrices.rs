//! Generator matrices built from an oval polynomial `f`.
//!
//! Columns indexed by field elements follow the order `alpha^0, ...,
//! alpha^(q-2)`, so printed matrices are reproducible for a given field
//! representation.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2m::{Fe, FieldCtx};
use crate::lincode::GeneratorMatrix;
use crate::opoly::{check_normalized, check_oval_polynomial, OvalPolySpec, ValueTable};

fn oval_table(spec: &OvalPolySpec, ctx: &FieldCtx) -> Result<ValueTable> {
    let table = spec.table(ctx)?;
    check_oval_polynomial(ctx, &table).map_err(|v| Error::NotOvalPolynomial {
        family: spec.to_string(),
        m: ctx.m(),
        violation: v.to_string(),
    })?;
    Ok(table)
}

fn normalized_table(spec: &OvalPolySpec, ctx: &FieldCtx) -> Result<ValueTable> {
    let table = spec.table(ctx)?;
    check_normalized(ctx, &table)
        .map_err(|v| Error::Precondition(format!("{spec} is not normalized: {v}")))?;
    Ok(table)
}

fn power_columns(ctx: &FieldCtx, f: &ValueTable) -> Vec<Vec<Fe>> {
    (0..u64::from(ctx.q() - 1))
        .map(|i| {
            let c = ctx.alpha_pow(i);
            vec![f.get(c), c, Fe::ONE]
        })
        .collect()
}

/// `B_f`: columns `(f(0),0,1)`, `(f(c),c,1)` for nonzero `c`, `(1,0,0)`,
/// `(0,1,0)`. Generates a [q+2,3,q] MDS code.
pub fn build_bf(spec: &OvalPolySpec, ctx: &Arc<FieldCtx>) -> Result<GeneratorMatrix> {
    let f = oval_table(spec, ctx)?;
    let mut cols = vec![vec![f.get(Fe::ZERO), Fe::ZERO, Fe::ONE]];
    cols.extend(power_columns(ctx, &f));
    cols.push(vec![Fe::ONE, Fe::ZERO, Fe::ZERO]);
    cols.push(vec![Fe::ZERO, Fe::ONE, Fe::ZERO]);
    GeneratorMatrix::from_columns(ctx.clone(), &cols)
}

/// `B_f` with a parity column appended; the new column is `(1,1,0)`.
pub fn build_bf_ext(spec: &OvalPolySpec, ctx: &Arc<FieldCtx>) -> Result<GeneratorMatrix> {
    Ok(build_bf(spec, ctx)?.extend())
}

/// `G_f`: columns `(f(c),c,1)` for nonzero `c`, then `(0,1,1)` and `(1,0,1)`.
/// Only `f(0)=0, f(1)=1` is required to build it.
pub fn build_gf(spec: &OvalPolySpec, ctx: &Arc<FieldCtx>) -> Result<GeneratorMatrix> {
    let f = normalized_table(spec, ctx)?;
    let mut cols = power_columns(ctx, &f);
    cols.push(vec![Fe::ZERO, Fe::ONE, Fe::ONE]);
    cols.push(vec![Fe::ONE, Fe::ZERO, Fe::ONE]);
    GeneratorMatrix::from_columns(ctx.clone(), &cols)
}

/// `G_f` with `(f(0),0,1)` prepended.
pub fn build_gf_bar(spec: &OvalPolySpec, ctx: &Arc<FieldCtx>) -> Result<GeneratorMatrix> {
    let f = normalized_table(spec, ctx)?;
    let mut cols = vec![vec![f.get(Fe::ZERO), Fe::ZERO, Fe::ONE]];
    cols.extend(power_columns(ctx, &f));
    cols.push(vec![Fe::ZERO, Fe::ONE, Fe::ONE]);
    cols.push(vec![Fe::ONE, Fe::ZERO, Fe::ONE]);
    GeneratorMatrix::from_columns(ctx.clone(), &cols)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    /// `B_f`, the hyperoval code.
    HyperovalMds,
    /// `B_f` extended by a parity column.
    Extended,
    /// `G_f`.
    Cf,
    /// `G_f` with the `(f(0),0,1)` column.
    CfBar,
}

impl Construction {
    pub const ALL: [Construction; 4] = [
        Construction::HyperovalMds,
        Construction::Extended,
        Construction::Cf,
        Construction::CfBar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::HyperovalMds => "hyperoval-mds",
            Construction::Extended => "extended",
            Construction::Cf => "cf",
            Construction::CfBar => "cfbar",
        }
    }

    fn matrix_name(self) -> &'static str {
        match self {
            Construction::HyperovalMds => "Bf",
            Construction::Extended => "BfExt",
            Construction::Cf => "Gf",
            Construction::CfBar => "GfBar",
        }
    }

    /// Code length at field size q.
    pub fn length(self, q: u32) -> usize {
        let q = q as usize;
        match self {
            Construction::HyperovalMds => q + 2,
            Construction::Extended => q + 3,
            Construction::Cf => q + 1,
            Construction::CfBar => q + 2,
        }
    }

    pub fn build(self, spec: &OvalPolySpec, ctx: &Arc<FieldCtx>) -> Result<GeneratorMatrix> {
        match self {
            Construction::HyperovalMds => build_bf(spec, ctx),
            Construction::Extended => build_bf_ext(spec, ctx),
            Construction::Cf => build_gf(spec, ctx),
            Construction::CfBar => build_gf_bar(spec, ctx),
        }
    }

    /// File label such as `Gf/segre/m=5`.
    pub fn label(self, spec: &OvalPolySpec) -> String {
        format!("{}/{}/m={}", self.matrix_name(), spec.name(), spec.m())
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Construction::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown construction {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opoly::Family;

    fn segre3() -> (Arc<FieldCtx>, OvalPolySpec) {
        let ctx = Arc::new(FieldCtx::new(3).unwrap());
        let spec = OvalPolySpec::new(Family::Segre, &ctx).unwrap();
        (ctx, spec)
    }

    #[test]
    fn shapes() {
        let (ctx, spec) = segre3();
        for c in Construction::ALL {
            let g = c.build(&spec, &ctx).unwrap();
            assert_eq!((g.k(), g.n()), (3, c.length(8)), "{c}");
        }
        assert_eq!(Construction::Cf.label(&spec), "Gf/segre/m=3");
    }

    #[test]
    fn parity_column_is_110() {
        let (ctx, spec) = segre3();
        let g = build_bf_ext(&spec, &ctx).unwrap();
        assert_eq!(g.column(10), vec![Fe::ONE, Fe::ONE, Fe::ZERO]);
    }

    #[test]
    fn gf_bar_extends_gf() {
        let (ctx, spec) = segre3();
        let gf = build_gf(&spec, &ctx).unwrap();
        let bar = build_gf_bar(&spec, &ctx).unwrap();
        let tail: Vec<_> = bar.columns().skip(1).collect();
        assert_eq!(tail, gf.columns().collect::<Vec<_>>());
        assert_eq!(bar.column(0), vec![Fe::ZERO, Fe::ZERO, Fe::ONE]);
    }

    #[test]
    fn gf_needs_only_normalization() {
        let ctx = Arc::new(FieldCtx::new(4).unwrap());
        let spec = OvalPolySpec::probe(Family::Segre, &ctx).unwrap();
        assert!(build_gf(&spec, &ctx).is_ok());
        assert!(matches!(
            build_bf(&spec, &ctx),
            Err(Error::NotOvalPolynomial { .. })
        ));
    }

    #[test]
    fn parse_names() {
        for c in Construction::ALL {
            assert_eq!(c.name().parse::<Construction>().unwrap(), c);
        }
        assert!("bogus".parse::<Construction>().is_err());
    }
}
