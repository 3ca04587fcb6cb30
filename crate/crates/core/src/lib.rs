//! Additive quaternary codes as multisets of lines in PG(l-1, 2).
//!
//! An additive `[n, k, d]_4` code is a multiset of `n` lines in PG(2k-1, 2)
//! such that every hyperplane contains at most `s = n - d` of them. This
//! crate builds the line multisets behind several optimal code families and
//! measures their parameters exactly by enumerating all hyperplanes.
//!
//! ```
//! use linecode::{three_cover_code, code_parameters, Strategy};
//!
//! let code = three_cover_code(5).unwrap();
//! let p = code_parameters(&code, Strategy::default());
//! assert_eq!((p.n, p.d, p.s), (31, 24, 7));
//! ```

pub mod bounds;
pub mod code;
pub mod constructions;
pub mod error;
pub mod exact_cover;
pub mod geometry;
pub mod io;
pub mod matrix;
pub mod verify;

pub use bounds::{
    format_k, griesmer_holds, griesmer_max_n, griesmer_sum, lambda_k, s_k, ExactRatio,
};
pub use code::{
    code_parameters, hyperplane_profile, sum_code, weight_distribution, AdditiveLineCode,
    CodeParameters, HyperplaneLoads, HyperplaneProfile, Strategy, WeightDistribution,
};
pub use constructions::{
    all_lines_code, complete_mapping, cover_multiplicity, is_m_cover, partial_spread_outside_fano,
    spread_code, three_cover_code, variant_code, variant_code_with, CompleteMapping, PartialSpread,
};
pub use error::{Error, Result};
pub use exact_cover::exact_cover_partial_spread;
pub use geometry::{
    enumerate_lines, enumerate_points, fano_subplane, hyperplanes_containing_line, line_count,
    line_in_hyperplane, line_through, FanoPlane, Hyperplane, Line, Point,
};
pub use io::{load_code, save_code};
pub use matrix::{
    brute_force_min_weight, concatenated_binary_generator, quaternary_generator_matrix,
    BinaryMatrix, Gf4, Gf4Matrix,
};
pub use verify::{
    cross_check_oracle, sum_construction_check, verify_code, verify_construction, Family,
    VerificationReport, VerifyOptions,
};
