//! Piecewise-linear membership functions.

use serde::{Deserialize, Serialize};

use super::FuzzyError;

/// Shape of a piecewise-linear fuzzy set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Triangular,
    Trapezoidal,
}

impl Shape {
    fn arity(self) -> usize {
        match self {
            Shape::Triangular => 3,
            Shape::Trapezoidal => 4,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawMembership {
    label: String,
    shape: Shape,
    points: Vec<f64>,
}

/// A triangular or trapezoidal fuzzy set.
///
/// Internally every set is stored as a trapezoid `(a, b, c, d)`; a triangle
/// `(a, b, c)` becomes `(a, b, b, c)`. Degenerate left or right edges
/// (`a == b`, `c == d`) are shoulders: the degree there is 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMembership", into = "RawMembership")]
pub struct MembershipFunction {
    label: String,
    shape: Shape,
    corners: [f64; 4],
}

impl MembershipFunction {
    pub fn new(label: impl Into<String>, shape: Shape, points: &[f64]) -> Result<Self, FuzzyError> {
        let label = label.into();
        if points.len() != shape.arity() {
            return Err(FuzzyError::Breakpoints {
                label,
                reason: format!("{:?} needs {} points, got {}", shape, shape.arity(), points.len()),
            });
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(FuzzyError::Breakpoints {
                label,
                reason: "non-finite breakpoint".into(),
            });
        }
        if points.windows(2).any(|w| w[0] > w[1]) {
            return Err(FuzzyError::Breakpoints {
                label,
                reason: "breakpoints must be non-decreasing".into(),
            });
        }
        let corners = match shape {
            Shape::Triangular => [points[0], points[1], points[1], points[2]],
            Shape::Trapezoidal => [points[0], points[1], points[2], points[3]],
        };
        Ok(Self { label, shape, corners })
    }

    pub fn triangular(label: impl Into<String>, a: f64, b: f64, c: f64) -> Result<Self, FuzzyError> {
        Self::new(label, Shape::Triangular, &[a, b, c])
    }

    pub fn trapezoidal(
        label: impl Into<String>,
        a: f64,
        b: f64,
        c: f64,
        d: f64,
    ) -> Result<Self, FuzzyError> {
        Self::new(label, Shape::Trapezoidal, &[a, b, c, d])
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// Breakpoints as given at construction (3 or 4 values).
    pub fn breakpoints(&self) -> Vec<f64> {
        let [a, b, c, d] = self.corners;
        match self.shape {
            Shape::Triangular => vec![a, b, d],
            Shape::Trapezoidal => vec![a, b, c, d],
        }
    }

    /// Closed support `[a, d]`.
    pub fn support(&self) -> (f64, f64) {
        (self.corners[0], self.corners[3])
    }

    /// Midpoint of the plateau; the apex for a triangle.
    pub fn peak(&self) -> f64 {
        0.5 * (self.corners[1] + self.corners[2])
    }

    /// Membership degree of `x`, always in `[0, 1]`.
    pub fn degree(&self, x: f64) -> f64 {
        let [a, b, c, d] = self.corners;
        let mu = if (b..=c).contains(&x) {
            1.0
        } else if x <= a || x >= d {
            0.0
        } else if x < b {
            (x - a) / (b - a)
        } else {
            (d - x) / (d - c)
        };
        mu.clamp(0.0, 1.0)
    }

    pub(crate) fn corners(&self) -> [f64; 4] {
        self.corners
    }
}

impl TryFrom<RawMembership> for MembershipFunction {
    type Error = FuzzyError;

    fn try_from(raw: RawMembership) -> Result<Self, Self::Error> {
        Self::new(raw.label, raw.shape, &raw.points)
    }
}

impl From<MembershipFunction> for RawMembership {
    fn from(mf: MembershipFunction) -> Self {
        RawMembership {
            points: mf.breakpoints(),
            label: mf.label,
            shape: mf.shape,
        }
    }
}
