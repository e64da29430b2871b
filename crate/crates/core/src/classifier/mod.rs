//! Rule engine over the declared hypotheses of a projection `X ⇢ Z` from a
//! subvariety `Y`.
//!
//! The engine reports what the cited results force or exclude. It never
//! infers a hypothesis: whether `Y` is a complete intersection, whether the
//! Hartshorne conjecture is assumed, and so on, are all caller inputs.

mod dimension;
mod divisor;
mod linear;
mod triple;
mod verdict;

pub use dimension::{classify_at_dim, dim_z_bounds, SubvarietyProfile};
pub use divisor::divisor_rules;
pub use linear::{adjoint_exceptions, chern_bound};
pub use triple::{
    degenerate_triple_analyze, degree_closed_form, degree_formula, DegenerateTriple, SurvivingPair,
    TripleAnalysis,
};
pub use verdict::{
    BoundCondition, ClassificationVerdict, Contradiction, DimBound, Skipped, Structural, VerdictTag,
};
