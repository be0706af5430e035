//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use ovalcodes::{build_gf, Family, FieldCtx, GeneratorMatrix, OvalPolySpec, ValueTable};

/// Field of degree `m` with its canonical representation.
pub fn field(m: u32) -> Arc<FieldCtx> {
    Arc::new(FieldCtx::new(m).expect("supported degree"))
}

/// `G_f` for the conic `x^2` at degree `m`.
pub fn conic_code(m: u32) -> GeneratorMatrix {
    let ctx = field(m);
    let spec =
        OvalPolySpec::new(Family::Translation { h: 1 }, &ctx).expect("x^2 is defined for every m");
    build_gf(&spec, &ctx).expect("normalized")
}

/// Value table of `x^6`, an oval polynomial exactly when `m` is odd.
pub fn segre_table(m: u32) -> (Arc<FieldCtx>, ValueTable) {
    let ctx = field(m);
    let t = ValueTable::monomial(&ctx, 6);
    (ctx, t)
}
