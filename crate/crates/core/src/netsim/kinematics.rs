//! One-dimensional motion laws, applied along each terminal's heading.

use serde::{Deserialize, Serialize};

use crate::error::DomainError;

/// How instantaneous speed is derived for accelerated motion.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VelocityMode {
    /// `v = a·t`, the time derivative of `x = ½·a·t²`.
    #[default]
    Derivative,
    /// `v = √(2·a·t)`, taken literally.
    Eq2Verbatim,
}

/// Constant acceleration that covers `distance` from rest in `time` units.
pub fn acceleration_for(distance: f64, time: f64) -> Result<f64, DomainError> {
    if !(distance > 0.0 && distance.is_finite()) {
        return Err(DomainError(format!("distance must be positive, got {distance}")));
    }
    if !(time > 0.0 && time.is_finite()) {
        return Err(DomainError(format!("time must be positive, got {time}")));
    }
    Ok(2.0 * distance / (time * time))
}

/// Position and speed at elapsed time `t` under constant acceleration from rest.
pub fn accelerated_state(accel: f64, t: f64, mode: VelocityMode) -> Result<(f64, f64), DomainError> {
    if t < 0.0 || t.is_nan() {
        return Err(DomainError(format!("elapsed time must be non-negative, got {t}")));
    }
    if accel < 0.0 || accel.is_nan() {
        return Err(DomainError(format!("acceleration must be non-negative, got {accel}")));
    }
    let x = 0.5 * accel * t * t;
    let v = match mode {
        VelocityMode::Derivative => accel * t,
        VelocityMode::Eq2Verbatim => (2.0 * accel * t).sqrt(),
    };
    Ok((x, v))
}

pub fn steady_position(speed: f64, t: f64) -> f64 {
    speed * t
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MotionPlan {
    Steady { speed: f64 },
    Accelerated { distance: f64, horizon: f64, accel: f64 },
}

impl MotionPlan {
    pub fn steady(speed: f64) -> Result<Self, DomainError> {
        if !(speed >= 0.0 && speed.is_finite()) {
            return Err(DomainError(format!("speed must be non-negative, got {speed}")));
        }
        Ok(Self::Steady { speed })
    }

    /// Covers `distance` from rest over `horizon` time units.
    pub fn accelerated(distance: f64, horizon: f64) -> Result<Self, DomainError> {
        let accel = acceleration_for(distance, horizon)?;
        Ok(Self::Accelerated {
            distance,
            horizon,
            accel,
        })
    }

    /// Distance travelled from rest by elapsed time `t`.
    pub fn position(&self, t: f64) -> f64 {
        match *self {
            Self::Steady { speed } => steady_position(speed, t),
            Self::Accelerated { accel, .. } => 0.5 * accel * t * t,
        }
    }

    pub fn displacement(&self, from: f64, to: f64) -> f64 {
        self.position(to) - self.position(from)
    }

    pub fn speed_at(&self, t: f64, mode: VelocityMode) -> f64 {
        match *self {
            Self::Steady { speed } => speed,
            Self::Accelerated { accel, .. } => match mode {
                VelocityMode::Derivative => accel * t,
                VelocityMode::Eq2Verbatim => (2.0 * accel * t).sqrt(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn acceleration_examples() {
        assert!((acceleration_for(4500.0, 75.0).unwrap() - 1.6).abs() < 1e-15);
        for t in [1.0, 3.0, 75.0] {
            assert!((acceleration_for(0.5 * t * t, t).unwrap() - 1.0).abs() < 1e-15);
        }
        assert!(acceleration_for(100.0, 0.0).is_err());
        assert!(acceleration_for(0.0, 10.0).is_err());
    }

    #[test]
    fn accelerated_examples() {
        let (x, v) = accelerated_state(1.6, 75.0, VelocityMode::Derivative).unwrap();
        assert!((x - 4500.0).abs() < 1e-9);
        assert!((v - 120.0).abs() < 1e-12);
        let (_, v) = accelerated_state(1.6, 75.0, VelocityMode::Eq2Verbatim).unwrap();
        assert!((v - 240f64.sqrt()).abs() < 1e-12);
        assert!((v - 15.4919).abs() < 1e-4);
        assert!(accelerated_state(1.6, -1.0, VelocityMode::Derivative).is_err());
    }

    #[test]
    fn steady_examples() {
        assert_eq!(steady_position(20.0, 10.0), 200.0);
        assert_eq!(steady_position(20.0, 0.0), 0.0);
        assert_eq!(steady_position(0.0, 42.0), 0.0);
    }

    #[test]
    fn unit_steps_telescope_to_total_distance() {
        let plan = MotionPlan::accelerated(3210.5, 75.0).unwrap();
        let total: f64 = (1..=75).map(|k| plan.displacement(k as f64 - 1.0, k as f64)).sum();
        assert!(((total - 3210.5) / 3210.5).abs() < 1e-9);
    }
}
