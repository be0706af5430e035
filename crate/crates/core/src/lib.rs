//! Oval polynomials over GF(2^m), the hyperovals they define, and the
//! MDS and near-MDS codes built from them, with exhaustive verification
//! of weight distributions.
//!
//! ```
//! use std::sync::Arc;
//! use ovalcodes::{classify, build_gf, Budget, Family, FieldCtx, OvalPolySpec};
//!
//! let ctx = Arc::new(FieldCtx::new(3).unwrap());
//! let f = OvalPolySpec::new(Family::Segre, &ctx).unwrap();
//! let report = classify(&build_gf(&f, &ctx).unwrap(), Budget::DEFAULT).unwrap();
//! assert_eq!(report.summary(), "[9,3,6] NMDS, Griesmer almost-optimal");
//! ```

pub mod constructions;
pub mod error;
pub mod gf2m;
pub mod lincode;
pub mod opoly;
pub mod verify;

pub use constructions::{
    build_bf, build_bf_ext, build_gf, build_gf_bar, build_hyperoval, code_from_hyperoval,
    hyperoval_from_mds, Construction, Hyperoval,
};
pub use error::{Error, Result};
pub use gf2m::{ExtFe, ExtFieldCtx, Fe, FieldCtx};
pub use lincode::{
    classify, macwilliams_dual, nmds_closed_form, weight_distribution, Budget, CodeClass, CodeFile,
    CodeReport, GeneratorMatrix, WeightDistribution,
};
pub use opoly::{catalog, Family, OvalPolySpec, ValueTable};
pub use verify::{verify_claim, Claim, ClaimReport};
