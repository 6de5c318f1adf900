use std::fmt;

use serde::{Deserialize, Serialize};

use super::RunResult;
use crate::policy::PolicyKind;

/// Max, min and mean of one metric over replicate runs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Stat {
    pub max: f64,
    pub min: f64,
    pub avg: f64,
}

impl Stat {
    pub fn from_samples(samples: impl IntoIterator<Item = f64>) -> Option<Self> {
        let mut n = 0usize;
        let (mut max, mut min, mut sum) = (f64::NEG_INFINITY, f64::INFINITY, 0.0);
        for x in samples {
            n += 1;
            max = max.max(x);
            min = min.min(x);
            sum += x;
        }
        // The mean of identical samples can drift by an ulp; keep it in range.
        (n > 0).then(|| Stat {
            max,
            min,
            avg: (sum / n as f64).clamp(min, max),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    NumberOfHandoffs,
    ConnectionTimePct,
    EnergyWastagePct,
}

impl Metric {
    pub const ALL: [Metric; 3] = [
        Metric::NumberOfHandoffs,
        Metric::ConnectionTimePct,
        Metric::EnergyWastagePct,
    ];
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolicyMetrics {
    pub policy: PolicyKind,
    pub runs: usize,
    pub number_of_handoffs: Stat,
    pub connection_time_pct: Stat,
    pub energy_wastage_pct: Stat,
}

impl PolicyMetrics {
    pub fn get(&self, metric: Metric) -> Stat {
        match metric {
            Metric::NumberOfHandoffs => self.number_of_handoffs,
            Metric::ConnectionTimePct => self.connection_time_pct,
            Metric::EnergyWastagePct => self.energy_wastage_pct,
        }
    }
}

/// Per-policy aggregates in first-seen policy order.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub policies: Vec<PolicyMetrics>,
}

impl MetricsReport {
    pub fn aggregate(runs: &[RunResult]) -> Self {
        let mut order: Vec<PolicyKind> = Vec::new();
        for r in runs {
            if !order.contains(&r.policy) {
                order.push(r.policy);
            }
        }
        let policies = order
            .into_iter()
            .map(|kind| {
                let mine: Vec<_> = runs.iter().filter(|r| r.policy == kind).collect();
                let stat = |f: &dyn Fn(&RunResult) -> f64| {
                    Stat::from_samples(mine.iter().map(|r| f(r))).expect("at least one run")
                };
                PolicyMetrics {
                    policy: kind,
                    runs: mine.len(),
                    number_of_handoffs: stat(&|r| r.metrics.handoffs as f64),
                    connection_time_pct: stat(&|r| r.metrics.connection_time_pct),
                    energy_wastage_pct: stat(&|r| r.metrics.energy_wastage_pct),
                }
            })
            .collect();
        Self { policies }
    }

    pub fn get(&self, kind: PolicyKind) -> Option<&PolicyMetrics> {
        self.policies.iter().find(|p| p.policy == kind)
    }
}

impl fmt::Display for MetricsReport {
    /// Side-by-side table, one column per policy.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<28}", "")?;
        for p in &self.policies {
            write!(f, "{:>10}", p.policy.to_string())?;
        }
        writeln!(f)?;
        for (metric, title, pct) in [
            (Metric::NumberOfHandoffs, "Number of handoffs", false),
            (Metric::ConnectionTimePct, "Connection time (%)", true),
            (Metric::EnergyWastagePct, "Energy wastage (%)", true),
        ] {
            for (i, which) in ["max", "min", "avg"].into_iter().enumerate() {
                let label = if i == 0 { title } else { "" };
                write!(f, "{label:<22}{which:<6}")?;
                for p in &self.policies {
                    let s = p.get(metric);
                    let v = [s.max, s.min, s.avg][i];
                    if pct {
                        write!(f, "{:>9.2}%", v)?;
                    } else {
                        write!(f, "{:>10.1}", v)?;
                    }
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_sample_collapses() {
        let s = Stat::from_samples([3.25]).unwrap();
        assert_eq!((s.max, s.min, s.avg), (3.25, 3.25, 3.25));
        assert!(Stat::from_samples(std::iter::empty()).is_none());
    }

    proptest::proptest! {
        #[test]
        fn min_avg_max_ordered(xs in proptest::collection::vec(0.0f64..1000.0, 1..20)) {
            let s = Stat::from_samples(xs).unwrap();
            proptest::prop_assert!(s.min <= s.avg && s.avg <= s.max);
        }
    }
}
