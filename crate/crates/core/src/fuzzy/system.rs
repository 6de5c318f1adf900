//! The assembled Mamdani pipeline: fuzzify, fire, aggregate, defuzzify.

use super::{
    defaults, FuzzyActivation, FuzzyError, LinguisticVariable, OutputGrid, RuleBase, RuleFiring,
    DEFAULT_RESOLUTION,
};

/// Input variables, output variable and rule grid, plus the cached output
/// sample grid. Immutable once built; safe to share across threads.
#[derive(Debug, Clone)]
pub struct FuzzySystem {
    inputs: Vec<LinguisticVariable>,
    output: LinguisticVariable,
    rules: RuleBase,
    grid: OutputGrid,
}

impl FuzzySystem {
    pub fn new(
        inputs: Vec<LinguisticVariable>,
        output: LinguisticVariable,
        rules: RuleBase,
        resolution: usize,
    ) -> Result<Self, FuzzyError> {
        let dims: Vec<usize> = inputs.iter().map(LinguisticVariable::len).collect();
        if dims != rules.dims() {
            return Err(FuzzyError::RuleBase(format!(
                "rule grid {:?} does not match input term counts {:?}",
                rules.dims(),
                dims
            )));
        }
        if rules.levels() != output.len() {
            return Err(FuzzyError::RuleBase(format!(
                "rule levels {} do not match {} output terms",
                rules.levels(),
                output.len()
            )));
        }
        let grid = OutputGrid::new(&output, resolution)?;
        Ok(Self {
            inputs,
            output,
            rules,
            grid,
        })
    }

    /// Default variables with the 27-rule table.
    pub fn table_i() -> Self {
        Self::new(
            vec![defaults::velocity(), defaults::distance(), defaults::channels()],
            defaults::rss_threshold(),
            RuleBase::table_i(),
            DEFAULT_RESOLUTION,
        )
        .expect("defaults are consistent")
    }

    pub fn inputs(&self) -> &[LinguisticVariable] {
        &self.inputs
    }

    pub fn output(&self) -> &LinguisticVariable {
        &self.output
    }

    pub fn rules(&self) -> &RuleBase {
        &self.rules
    }

    pub fn resolution(&self) -> usize {
        self.grid.resolution()
    }

    /// Same variables, different consequents.
    pub fn with_consequents(&self, consequents: Vec<u8>) -> Result<Self, FuzzyError> {
        Ok(Self {
            rules: self.rules.with_consequents(consequents)?,
            ..self.clone()
        })
    }

    /// Rule firing strengths for crisp inputs (clamped into each universe).
    pub fn fire(&self, crisp: &[f64]) -> RuleFiring {
        assert_eq!(crisp.len(), self.inputs.len(), "one crisp value per input");
        let mut flat = vec![0.0; self.inputs.iter().map(LinguisticVariable::len).sum()];
        let mut rest = flat.as_mut_slice();
        for (var, &x) in self.inputs.iter().zip(crisp) {
            let (head, tail) = rest.split_at_mut(var.len());
            var.fuzzify_into(x, head);
            rest = tail;
        }
        RuleFiring::compute_flat(self.rules.dims(), &flat)
    }

    pub fn activation(&self, crisp: &[f64]) -> FuzzyActivation {
        self.fire(crisp)
            .aggregate(self.rules.consequents(), self.rules.levels())
    }

    /// Defuzzified output for a precomputed firing under arbitrary consequents.
    pub fn infer_fired(&self, firing: &RuleFiring, consequents: &[u8]) -> Result<f64, FuzzyError> {
        self.grid
            .centroid(&firing.aggregate(consequents, self.rules.levels()))
    }

    pub fn defuzzify(&self, act: &FuzzyActivation) -> Result<f64, FuzzyError> {
        self.grid.centroid(act)
    }

    /// Crisp output for crisp inputs.
    pub fn infer(&self, crisp: &[f64]) -> Result<f64, FuzzyError> {
        self.grid.centroid(&self.activation(crisp))
    }
}

/// The three-input threshold pipeline. Distance and channels must already be
/// normalized to `[0, 1]`.
pub fn compute_rss_threshold(
    system: &FuzzySystem,
    velocity: f64,
    dist_norm: f64,
    chan_norm: f64,
) -> Result<f64, FuzzyError> {
    system.infer(&[velocity, dist_norm, chan_norm])
}
