//! Default linguistic variables for the handoff controller.
//!
//! Velocity is in distance units per time unit on `[0, 30]`; boundary
//! distance and free channels are normalized to `[0, 1]` by the caller; the
//! output threshold lives on `[0, 1]` with five half-overlapping triangles.

use super::{LinguisticVariable, MembershipFunction};

fn tri(label: &str, a: f64, b: f64, c: f64) -> MembershipFunction {
    MembershipFunction::triangular(label, a, b, c).expect("default breakpoints are ordered")
}

fn var(name: &str, lo: f64, hi: f64, terms: Vec<MembershipFunction>) -> LinguisticVariable {
    LinguisticVariable::new(name, lo, hi, terms).expect("default variables are valid")
}

pub fn velocity() -> LinguisticVariable {
    var(
        "velocity",
        0.0,
        30.0,
        vec![
            tri("Slow", 0.0, 0.0, 15.0),
            tri("Medium", 5.0, 15.0, 25.0),
            tri("Fast", 15.0, 30.0, 30.0),
        ],
    )
}

pub fn distance() -> LinguisticVariable {
    var(
        "distance",
        0.0,
        1.0,
        vec![
            tri("Near", 0.0, 0.0, 0.4),
            tri("Medium", 0.2, 0.5, 0.8),
            tri("Far", 0.6, 1.0, 1.0),
        ],
    )
}

pub fn channels() -> LinguisticVariable {
    var(
        "free_channels",
        0.0,
        1.0,
        vec![
            tri("Low", 0.0, 0.0, 0.5),
            tri("Medium", 0.25, 0.5, 0.75),
            tri("High", 0.5, 1.0, 1.0),
        ],
    )
}

pub fn rss_threshold() -> LinguisticVariable {
    var(
        "rss_threshold",
        0.0,
        1.0,
        vec![
            tri("VeryLow", 0.0, 0.0, 0.25),
            tri("Low", 0.0, 0.25, 0.5),
            tri("Medium", 0.25, 0.5, 0.75),
            tri("High", 0.5, 0.75, 1.0),
            tri("VeryHigh", 0.75, 1.0, 1.0),
        ],
    )
}
