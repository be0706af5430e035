//! Oval polynomials: the known families, their evaluation, and exhaustive
//! characterization checks.

mod criteria;
mod spec;

pub use criteria::{
    check_no_affine_root, check_normalized, check_oval_polynomial, check_permutation,
    check_segre_condition, check_slope_condition, check_two_to_one, is_oval_polynomial,
    is_permutation, is_two_to_one_criterion, no_affine_root, segre_condition, slope_condition,
    ValueTable, Verdict, Violation, SLOPE_DEFAULT_MAX_M,
};
pub use spec::{Family, OvalPolySpec, SpecRecord};

use crate::error::{Error, Result};
use crate::gf2m::FieldCtx;

/// Every family instance applicable at `ctx.m()`, with canonical parameters:
/// all translation exponents `h` coprime to m, the smallest valid Subiaco
/// parameter, and the smallest Adelaide `beta` with `e = (q-1)/3`.
///
/// Subiaco and Adelaide members are admitted only after exhaustive
/// verification, so this is quadratic in q for those families.
pub fn catalog(ctx: &FieldCtx) -> Result<Vec<OvalPolySpec>> {
    let m = ctx.m();
    let mut out = Vec::new();
    for h in 1..m {
        if let Ok(spec) = OvalPolySpec::new(Family::Translation { h }, ctx) {
            out.push(spec);
        }
    }
    for family in [
        Family::Segre,
        Family::GlynnA,
        Family::GlynnB,
        Family::GlynnC,
        Family::Cherowitzo,
        Family::Payne,
    ] {
        if let Ok(spec) = OvalPolySpec::new(family, ctx) {
            out.push(spec);
        }
    }
    for built in [OvalPolySpec::subiaco(ctx), OvalPolySpec::adelaide(ctx)] {
        match built {
            Ok(spec) => out.push(spec),
            Err(Error::Inapplicable { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Resolves a family by name at `ctx`, using canonical parameters for
/// Subiaco and Adelaide. `h` is required for the translation family.
pub fn lookup(name: &str, h: Option<u32>, ctx: &FieldCtx) -> Result<OvalPolySpec> {
    match name {
        "subiaco" => OvalPolySpec::subiaco(ctx),
        "adelaide" => OvalPolySpec::adelaide(ctx),
        _ => OvalPolySpec::new(family_by_name(name, h)?, ctx),
    }
}

/// Like [`lookup`] but tolerates a family whose formula is evaluable at this
/// m even though the degree constraints fail.
pub fn lookup_probe(name: &str, h: Option<u32>, ctx: &FieldCtx) -> Result<OvalPolySpec> {
    match name {
        "subiaco" | "adelaide" => lookup(name, h, ctx),
        _ => OvalPolySpec::probe(family_by_name(name, h)?, ctx),
    }
}

fn family_by_name(name: &str, h: Option<u32>) -> Result<Family> {
    let mut params = std::collections::BTreeMap::new();
    if name == "translation" {
        let h = h.ok_or_else(|| Error::InvalidParameter {
            family: name.into(),
            reason: "translation needs the exponent parameter h".into(),
        })?;
        params.insert("h".to_string(), serde_json::Value::from(h));
    }
    Family::from_parts(name, &params, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(m: u32) -> Vec<String> {
        catalog(&FieldCtx::new(m).unwrap())
            .unwrap()
            .iter()
            .map(|s| s.to_string())
            .collect()
    }

    #[test]
    fn catalog_m3() {
        let n = names(3);
        assert_eq!(
            n,
            [
                "translation(h=1)",
                "translation(h=2)",
                "segre",
                "glynn-a",
                "glynn-b",
                "cherowitzo",
                "payne",
                "subiaco(a=1)",
            ]
        );
    }

    #[test]
    fn catalog_m4() {
        let n = names(4);
        assert!(n.contains(&"translation(h=1)".to_string()));
        assert!(n.contains(&"translation(h=3)".to_string()));
        assert!(n.iter().any(|s| s.starts_with("subiaco")));
        assert!(n.iter().any(|s| s.starts_with("adelaide")));
        assert!(!n.iter().any(|s| s.starts_with("segre")));
    }

    #[test]
    fn catalog_m5() {
        let n = names(5);
        assert!(n.contains(&"glynn-c".to_string()));
        assert!(!n.contains(&"glynn-b".to_string()));
    }

    #[test]
    fn lookup_by_name() {
        let ctx = FieldCtx::new(4).unwrap();
        assert!(lookup("translation", Some(1), &ctx).is_ok());
        assert!(lookup("translation", None, &ctx).is_err());
        assert!(lookup("translation", Some(2), &ctx).is_err());
        assert!(lookup("segre", None, &ctx).is_err());
        assert!(lookup_probe("segre", None, &ctx).is_ok());
        assert!(lookup("bogus", None, &ctx).is_err());
    }
}
