use serde::{Deserialize, Serialize};

use super::{FuzzyError, MembershipFunction};

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawVariable {
    name: String,
    universe: [f64; 2],
    terms: Vec<MembershipFunction>,
}

/// A named fuzzy variable: a closed universe `[lo, hi]` and its ordered terms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawVariable", into = "RawVariable")]
pub struct LinguisticVariable {
    name: String,
    lo: f64,
    hi: f64,
    terms: Vec<MembershipFunction>,
}

impl LinguisticVariable {
    /// Validates the universe, label uniqueness, peak ordering and coverage.
    pub fn new(
        name: impl Into<String>,
        lo: f64,
        hi: f64,
        terms: Vec<MembershipFunction>,
    ) -> Result<Self, FuzzyError> {
        let name = name.into();
        let invalid = |reason: String| FuzzyError::Variable {
            name: name.clone(),
            reason,
        };
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(invalid(format!("universe [{lo}, {hi}] must satisfy lo < hi")));
        }
        if terms.is_empty() {
            return Err(invalid("no terms".into()));
        }
        for (i, t) in terms.iter().enumerate() {
            if terms[..i].iter().any(|u| u.label() == t.label()) {
                return Err(invalid(format!("duplicate term label {:?}", t.label())));
            }
        }
        if terms.windows(2).any(|w| w[0].peak() >= w[1].peak()) {
            return Err(invalid("term peaks must strictly increase".into()));
        }
        let var = Self { name: name.clone(), lo, hi, terms };
        if let Some(gap) = var.coverage_gap() {
            return Err(invalid(format!("no term covers x = {gap}")));
        }
        Ok(var)
    }

    /// First point of `[lo, hi]` where every term has zero degree, if any.
    ///
    /// Each degree is linear between consecutive breakpoints, so checking the
    /// breakpoints and the midpoints between them is exhaustive.
    fn coverage_gap(&self) -> Option<f64> {
        let mut knots: Vec<f64> = vec![self.lo, self.hi];
        for t in &self.terms {
            knots.extend(t.corners().iter().copied().filter(|k| (self.lo..=self.hi).contains(k)));
        }
        knots.sort_by(f64::total_cmp);
        knots.dedup();
        let mids: Vec<f64> = knots.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
        knots
            .into_iter()
            .chain(mids)
            .find(|&x| self.terms.iter().all(|t| t.degree(x) == 0.0))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn universe(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn terms(&self) -> &[MembershipFunction] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn clamp(&self, x: f64) -> f64 {
        x.clamp(self.lo, self.hi)
    }

    /// Degree of `x` (clamped into the universe) in every term, in term order.
    pub fn fuzzify(&self, x: f64) -> Vec<f64> {
        let mut out = vec![0.0; self.terms.len()];
        self.fuzzify_into(x, &mut out);
        out
    }

    pub(crate) fn fuzzify_into(&self, x: f64, out: &mut [f64]) {
        let x = if x.is_nan() { self.lo } else { self.clamp(x) };
        for (slot, t) in out.iter_mut().zip(&self.terms) {
            *slot = t.degree(x);
        }
    }
}

impl TryFrom<RawVariable> for LinguisticVariable {
    type Error = FuzzyError;

    fn try_from(raw: RawVariable) -> Result<Self, Self::Error> {
        Self::new(raw.name, raw.universe[0], raw.universe[1], raw.terms)
    }
}

impl From<LinguisticVariable> for RawVariable {
    fn from(v: LinguisticVariable) -> Self {
        RawVariable {
            name: v.name,
            universe: [v.lo, v.hi],
            terms: v.terms,
        }
    }
}
