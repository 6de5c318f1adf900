//! Complete rule grids and Mamdani rule evaluation (min AND, max aggregation).

use serde::{Deserialize, Serialize};

use super::FuzzyError;

/// Number of output levels (Very Low .. Very High).
pub const OUTPUT_LEVELS: usize = 5;

/// The handoff rule table, velocity-major, then distance, then free channels.
/// Levels: 1 = Very Low, 2 = Low, 3 = Medium, 4 = High, 5 = Very High.
pub const TABLE_I: [u8; 27] = [
    2, 2, 3, 3, 3, 4, 4, 5, 5, // slow
    1, 2, 2, 3, 3, 3, 4, 4, 4, // medium
    1, 1, 2, 2, 2, 3, 3, 4, 4, // fast
];

/// A complete grid of rules: one consequent level per combination of input
/// terms. Cells are laid out row-major with the first input varying slowest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleBase {
    dims: Vec<usize>,
    levels: usize,
    consequents: Vec<u8>,
}

impl RuleBase {
    pub fn new(dims: Vec<usize>, levels: usize, consequents: Vec<u8>) -> Result<Self, FuzzyError> {
        let cells: usize = dims.iter().product();
        if dims.is_empty() || dims.contains(&0) {
            return Err(FuzzyError::RuleBase("every input needs at least one term".into()));
        }
        if consequents.len() != cells {
            return Err(FuzzyError::RuleBase(format!(
                "grid {:?} needs {cells} consequents, got {}",
                dims,
                consequents.len()
            )));
        }
        if let Some(bad) = consequents.iter().find(|&&c| c == 0 || c as usize > levels) {
            return Err(FuzzyError::RuleBase(format!("consequent {bad} outside 1..={levels}")));
        }
        Ok(Self {
            dims,
            levels,
            consequents,
        })
    }

    /// The 27-rule velocity × distance × channels table.
    pub fn table_i() -> Self {
        Self::new(vec![3, 3, 3], OUTPUT_LEVELS, TABLE_I.to_vec()).expect("static table is valid")
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn consequents(&self) -> &[u8] {
        &self.consequents
    }

    pub fn len(&self) -> usize {
        self.consequents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.consequents.is_empty()
    }

    /// Flat index of the rule with the given term index per input.
    pub fn index_of(&self, terms: &[usize]) -> usize {
        terms
            .iter()
            .zip(&self.dims)
            .fold(0, |acc, (&t, &d)| {
                debug_assert!(t < d);
                acc * d + t
            })
    }

    pub fn consequent(&self, terms: &[usize]) -> u8 {
        self.consequents[self.index_of(terms)]
    }

    /// A copy of this grid with a different consequent vector.
    pub fn with_consequents(&self, consequents: Vec<u8>) -> Result<Self, FuzzyError> {
        Self::new(self.dims.clone(), self.levels, consequents)
    }
}

/// Per-rule firing strengths for one set of fuzzified inputs.
///
/// Independent of the consequents, so one firing vector can be aggregated
/// under many candidate rule bases.
#[derive(Debug, Clone, PartialEq)]
pub struct RuleFiring {
    strengths: Vec<f64>,
}

impl RuleFiring {
    /// Firing strength of every grid cell: the min of its antecedent degrees.
    pub fn compute(dims: &[usize], degrees: &[&[f64]]) -> Self {
        assert_eq!(dims.len(), degrees.len(), "one degree vector per input");
        for (&d, degs) in dims.iter().zip(degrees) {
            assert_eq!(d, degs.len(), "degree vector length must match term count");
        }
        let flat: Vec<f64> = degrees.iter().flat_map(|d| d.iter().copied()).collect();
        Self::compute_flat(dims, &flat)
    }

    /// Same as [`RuleFiring::compute`] with the degree vectors concatenated.
    pub(crate) fn compute_flat(dims: &[usize], flat: &[f64]) -> Self {
        debug_assert_eq!(dims.iter().sum::<usize>(), flat.len());
        let total: usize = dims.iter().product();
        let mut strengths = Vec::with_capacity(total);
        match *dims {
            [a, b] => {
                let (x, y) = flat.split_at(a);
                for &p in x {
                    strengths.extend(y[..b].iter().map(|&q| p.min(q)));
                }
                return Self { strengths };
            }
            [a, b, c] => {
                let (x, rest) = flat.split_at(a);
                let (y, z) = rest.split_at(b);
                for &p in x {
                    for &q in y {
                        let pq = p.min(q);
                        strengths.extend(z[..c].iter().map(|&r| pq.min(r)));
                    }
                }
                return Self { strengths };
            }
            _ => {}
        }
        let mut idx = vec![0usize; dims.len()];
        let offsets: Vec<usize> = dims
            .iter()
            .scan(0, |acc, &d| {
                let o = *acc;
                *acc += d;
                Some(o)
            })
            .collect();
        for _ in 0..total {
            let w = idx
                .iter()
                .zip(&offsets)
                .fold(1.0_f64, |w, (&t, &o)| w.min(flat[o + t]));
            strengths.push(w);
            for i in (0..dims.len()).rev() {
                idx[i] += 1;
                if idx[i] < dims[i] {
                    break;
                }
                idx[i] = 0;
            }
        }
        Self { strengths }
    }

    pub fn strengths(&self) -> &[f64] {
        &self.strengths
    }

    /// Max-aggregates rule strengths into per-level strengths.
    pub fn aggregate(&self, consequents: &[u8], levels: usize) -> FuzzyActivation {
        debug_assert_eq!(consequents.len(), self.strengths.len());
        let mut out = vec![0.0_f64; levels];
        for (&w, &c) in self.strengths.iter().zip(consequents) {
            if w > 0.0 {
                let slot = &mut out[c as usize - 1];
                *slot = slot.max(w);
            }
        }
        FuzzyActivation { strengths: out }
    }
}

/// Max-aggregated firing strength of each output term.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyActivation {
    strengths: Vec<f64>,
}

impl FuzzyActivation {
    pub fn new(strengths: Vec<f64>) -> Result<Self, FuzzyError> {
        if strengths.iter().any(|s| !(0.0..=1.0).contains(s)) {
            return Err(FuzzyError::Activation(format!("strengths {strengths:?} outside [0,1]")));
        }
        Ok(Self { strengths })
    }

    pub fn strengths(&self) -> &[f64] {
        &self.strengths
    }

    pub fn is_empty(&self) -> bool {
        self.strengths.iter().all(|&s| s == 0.0)
    }
}

/// Evaluates every rule of `rb` against the fuzzified inputs.
pub fn evaluate_rules(rb: &RuleBase, degrees: &[&[f64]]) -> FuzzyActivation {
    RuleFiring::compute(rb.dims(), degrees).aggregate(rb.consequents(), rb.levels())
}
