//! Mamdani fuzzy inference over piecewise-linear membership functions.
//!
//! AND is `min`, implication clips each output term at its rule strength,
//! aggregation is `max`, and the crisp output is the centroid of the
//! aggregated set.

mod defuzz;
pub mod defaults;
mod membership;
mod rules;
mod system;
mod variable;

pub use defuzz::{defuzzify_centroid, OutputGrid, DEFAULT_RESOLUTION};
pub use membership::{MembershipFunction, Shape};
pub use rules::{evaluate_rules, FuzzyActivation, RuleBase, RuleFiring, OUTPUT_LEVELS, TABLE_I};
pub use system::{compute_rss_threshold, FuzzySystem};
pub use variable::LinguisticVariable;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FuzzyError {
    #[error("membership function {label:?}: {reason}")]
    Breakpoints { label: String, reason: String },
    #[error("linguistic variable {name:?}: {reason}")]
    Variable { name: String, reason: String },
    #[error("rule base: {0}")]
    RuleBase(String),
    #[error("activation: {0}")]
    Activation(String),
    #[error("defuzzification resolution must be positive")]
    Resolution,
    #[error("no output term is activated")]
    NoActivation,
}

/// Fuzzifies `x` against `var`; free-function form of [`LinguisticVariable::fuzzify`].
pub fn fuzzify(var: &LinguisticVariable, x: f64) -> Vec<f64> {
    var.fuzzify(x)
}

/// Degree of `x` in `mf`; free-function form of [`MembershipFunction::degree`].
pub fn membership_degree(mf: &MembershipFunction, x: f64) -> f64 {
    mf.degree(x)
}
