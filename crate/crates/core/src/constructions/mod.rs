//! Hyperovals and the generator matrices built from oval polynomials.

mod expected;
mod hyperoval;
mod matrices;

pub use expected::{enumerator_formula, expected_enumerator};
pub use hyperoval::{
    build_hyperoval, code_from_hyperoval, hyperoval_from_mds, normalize_point, projective_points,
    Hyperoval, Point,
};
pub use matrices::{build_bf, build_bf_ext, build_gf, build_gf_bar, Construction};
