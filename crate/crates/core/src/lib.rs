//! Exact bounds on sections of multiples of a very ample line bundle, and a
//! rule engine for projections from subvarieties.
//!
//! All arithmetic is exact. Functions that can be handed inputs outside their
//! domain return [`Error::Domain`] instead of a silent wrong answer.

pub mod bounds;
pub mod citation;
pub mod classifier;
pub mod combinatorics;
mod error;
pub mod existence;
pub mod fixtures;
pub mod oracle;
pub mod verify;

pub use bounds::{
    castelnuovo_lower_bound, easy_lower_bound, kodaira_lower_bound, simplified_lower_bound,
    upper_bound_h0, CastelnuovoProfile, EmbeddedVariety,
};
pub use citation::Citation;
pub use combinatorics::{binom, hockey_stick, iterated_castel_sum, BigInteger, BigRational};
pub use error::{Error, Result};
pub use classifier::{
    classify_at_dim, degenerate_triple_analyze, degree_formula, dim_z_bounds, divisor_rules, ClassificationVerdict,
    SubvarietyProfile, VerdictTag,
};
pub use existence::{
    codim2_positive, divisor_threshold, lower_degree_bound, min_t_guaranteed, section_guaranteed,
    surface_lower_degree, threefold_lower_degree, MinT, Subvariety,
};
pub use fixtures::{run_fixture, Registry};
pub use oracle::{h0_multidegree, intersection_number, segre_degree, MultiProjective, Multidegree};
