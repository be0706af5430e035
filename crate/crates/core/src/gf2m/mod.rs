//! Finite fields of characteristic two.

mod ext;
mod field;

pub use ext::{ExtFe, ExtFieldCtx};
pub use field::{clmul, irreducible_polynomials, is_irreducible, poly_rem, Elem, Fe, FieldCtx};
