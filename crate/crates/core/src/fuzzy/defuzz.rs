//! Centroid (center of area) defuzzification by midpoint Riemann sum.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use super::{FuzzyActivation, FuzzyError, LinguisticVariable};

pub const DEFAULT_RESOLUTION: usize = 1001;

/// Activations with more output terms than this bypass the memo.
const MEMO_TERMS: usize = 8;
const MEMO_CAPACITY: usize = 1 << 20;

static NEXT_GRID_ID: AtomicU64 = AtomicU64::new(0);

type MemoKey = (u64, [u64; MEMO_TERMS]);

thread_local! {
    static MEMO: RefCell<HashMap<MemoKey, Option<f64>>> = RefCell::new(HashMap::new());
}

/// Precomputed output-term degrees at the midpoint samples of a universe.
///
/// Each term keeps its degrees only over its own support.
#[derive(Debug, Clone)]
pub struct OutputGrid {
    xs: Vec<f64>,
    terms: usize,
    /// Sample index range `[start, end)` where each term is nonzero.
    spans: Vec<(usize, usize)>,
    /// Degrees of each term over its span.
    dense: Vec<Vec<f64>>,
    id: u64,
}

impl OutputGrid {
    pub fn new(var: &LinguisticVariable, resolution: usize) -> Result<Self, FuzzyError> {
        if resolution == 0 {
            return Err(FuzzyError::Resolution);
        }
        let (lo, hi) = var.universe();
        let step = (hi - lo) / resolution as f64;
        let xs: Vec<f64> = (0..resolution)
            .map(|j| lo + (j as f64 + 0.5) * step)
            .collect();
        let mut spans = Vec::with_capacity(var.len());
        let mut dense = Vec::with_capacity(var.len());
        for term in var.terms() {
            let start = xs.iter().position(|&x| term.degree(x) > 0.0).unwrap_or(0);
            let end = xs.iter().rposition(|&x| term.degree(x) > 0.0).map_or(0, |j| j + 1);
            spans.push((start, end));
            dense.push(xs[start.min(end)..end].iter().map(|&x| term.degree(x)).collect());
        }
        Ok(Self {
            spans,
            dense,
            xs,
            terms: var.len(),
            id: NEXT_GRID_ID.fetch_add(1, Ordering::Relaxed),
        })
    }

    pub fn resolution(&self) -> usize {
        self.xs.len()
    }

    /// Centroid of the clipped, max-aggregated output set.
    ///
    /// Results are memoized per thread on the exact activation bits.
    pub fn centroid(&self, act: &FuzzyActivation) -> Result<f64, FuzzyError> {
        let s = act.strengths();
        if s.len() != self.terms {
            return Err(FuzzyError::Activation(format!(
                "{} strengths for {} output terms",
                s.len(),
                self.terms
            )));
        }
        if act.is_empty() {
            return Err(FuzzyError::NoActivation);
        }
        if s.len() > MEMO_TERMS {
            return self.integrate(s).ok_or(FuzzyError::NoActivation);
        }
        let mut bits = [0u64; MEMO_TERMS];
        for (b, x) in bits.iter_mut().zip(s) {
            *b = x.to_bits();
        }
        let key = (self.id, bits);
        let value = MEMO.with(|memo| memo.borrow().get(&key).copied());
        let value = value.unwrap_or_else(|| {
            let v = self.integrate(s);
            MEMO.with(|memo| {
                let mut memo = memo.borrow_mut();
                if memo.len() >= MEMO_CAPACITY {
                    memo.clear();
                }
                memo.insert(key, v);
            });
            v
        });
        value.ok_or(FuzzyError::NoActivation)
    }

    fn integrate(&self, s: &[f64]) -> Option<f64> {
        // Samples outside every active span add exact zeros.
        let (mut start, mut end) = (usize::MAX, 0);
        for (k, &w) in s.iter().enumerate() {
            if w > 0.0 && self.spans[k].0 < self.spans[k].1 {
                start = start.min(self.spans[k].0);
                end = end.max(self.spans[k].1);
            }
        }
        let start = start.min(end);
        let mut mu = vec![0.0_f64; end - start];
        for (k, &w) in s.iter().enumerate() {
            let (a, b) = self.spans[k];
            if w > 0.0 && a < b {
                for (m, &deg) in mu[a - start..b - start].iter_mut().zip(&self.dense[k]) {
                    *m = m.max(w.min(deg));
                }
            }
        }
        let mut num = 0.0;
        let mut den = 0.0;
        for (&x, &m) in self.xs[start..end].iter().zip(&mu) {
            num += x * m;
            den += m;
        }
        (den > 0.0).then(|| num / den)
    }
}

/// One-shot centroid; builds the sample grid on every call.
pub fn defuzzify_centroid(
    act: &FuzzyActivation,
    out_var: &LinguisticVariable,
    resolution: usize,
) -> Result<f64, FuzzyError> {
    OutputGrid::new(out_var, resolution)?.centroid(act)
}
