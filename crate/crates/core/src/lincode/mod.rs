//! Linear codes over GF(2^m): generator matrices, weight distributions,
//! duals, classification and file formats.

mod io;
mod macwilliams;
mod matrix;
mod nmds;
mod pairing;
mod report;
mod weights;

pub use io::{distribution_csv, distribution_from_csv, distribution_json, CodeFile};
pub use macwilliams::{dual_min_distance, macwilliams_dual};
pub use matrix::{rank_of, row_reduce, GeneratorMatrix};
pub use nmds::nmds_closed_form;
pub use pairing::{
    dual_weight3_words, min_weight_support_pairing, pairing_report, DualTriple, PairingReport,
};
pub use report::{
    classify, classify_parameters, distance_optimality, griesmer_sum, CodeClass, CodeReport,
    Optimality,
};
pub use weights::{
    code_size, weight_distribution, weight_distribution_naive, Budget, WeightDistribution,
};
