use serde::{Deserialize, Serialize};

use super::{MotionPlan, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TerminalState {
    Connect,
    Handover,
    Disconnect,
}

/// Association of a terminal with base stations.
///
/// During a handover the terminal holds a channel at both stations until the
/// dwell counter runs out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "state", rename_all = "snake_case")]
pub enum Link {
    Disconnected,
    Connected { serving: usize },
    Handover { serving: usize, target: usize, dwell: u32 },
}

impl Link {
    pub fn state(&self) -> TerminalState {
        match self {
            Link::Disconnected => TerminalState::Disconnect,
            Link::Connected { .. } => TerminalState::Connect,
            Link::Handover { .. } => TerminalState::Handover,
        }
    }

    pub fn serving(&self) -> Option<usize> {
        match *self {
            Link::Disconnected => None,
            Link::Connected { serving } | Link::Handover { serving, .. } => Some(serving),
        }
    }

    pub fn target(&self) -> Option<usize> {
        match *self {
            Link::Handover { target, .. } => Some(target),
            _ => None,
        }
    }

    /// Whether this link holds a channel at `station`.
    pub fn holds(&self, station: usize) -> bool {
        self.serving() == Some(station) || self.target() == Some(station)
    }

    /// Stations at which this link holds a channel.
    pub fn held(&self) -> impl Iterator<Item = usize> {
        self.serving().into_iter().chain(self.target())
    }

    pub fn is_active(&self) -> bool {
        !matches!(self, Link::Disconnected)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MobileTerminal {
    pub id: usize,
    pub position: Point,
    /// Radians in `[0, 2π)`.
    pub heading: f64,
    pub motion: MotionPlan,
    pub speed: f64,
    pub energy: f64,
    pub link: Link,
    /// Time units elapsed since the motion plan started.
    pub elapsed: u32,
    /// Total path length travelled.
    pub odometer: f64,
}

impl MobileTerminal {
    pub fn new(id: usize, position: Point, heading: f64, motion: MotionPlan, energy: f64) -> Self {
        let speed = match motion {
            MotionPlan::Steady { speed } => speed,
            MotionPlan::Accelerated { .. } => 0.0,
        };
        Self {
            id,
            position,
            heading,
            motion,
            speed,
            energy,
            link: Link::Disconnected,
            elapsed: 0,
            odometer: 0.0,
        }
    }

    pub fn state(&self) -> TerminalState {
        self.link.state()
    }
}
