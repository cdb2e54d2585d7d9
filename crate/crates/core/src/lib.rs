//! Exact computation of higher-order Daehee, Bernoulli and Nörlund number
//! families, their λ- and twist-deformed variants, and the lower-triangular
//! Stirling/Pascal matrix algebra connecting them.
//!
//! Everything is computed over arbitrary-precision rationals; every family is
//! derived by at least two structurally independent routes (truncated power
//! series on one side, Stirling-matrix transforms or combinatorial sums on the
//! other), and the identity checkers compare the routes bit-exactly.

pub mod families;
pub mod identities;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod series;
pub mod stirling;

pub use families::{
    bernoulli_numbers, bernoulli_polynomials, daehee_numbers_closed, daehee_numbers_composition,
    daehee_poly_via_norlund, lambda_daehee_composition, norlund_b, table_series,
    table_series_with_order, table_stirling, twisted_bernoulli_eval, Binding, Family, FamilyError,
    FamilySpec,
};
pub use identities::{
    contradiction_demo, corrected_first_kind_check, corrected_second_kind_check,
    daehee_threeway_check, default_suite_reports, genfun_stirling_check, lambda_composition_check,
    lambda_pair_check, norlund_check, reflection_check, stirling_inverse_check,
    stirling_transforms_check, twisted_scaling_check, DemoPoint, VerificationReport,
};
pub use matrix::{mat_apply, MatrixKind, SequenceTable, TriMatrix};
pub use poly::{binomial_poly, binomial_symbol, falling_factorial, MultiPoly, PolyError, Symbol};
pub use rational::{
    binomial_integer, factorial, factorial_rational, ExactError, ExactRing, Rational,
};
pub use series::{ring_pow, SeriesError, TruncatedSeries};
pub use stirling::{
    stirling_first, stirling_first_signless, stirling_second, stirling_second_signed,
};
