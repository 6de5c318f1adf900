use std::collections::VecDeque;

use crate::netsim::{UnitSnapshot, WorldState};

/// The most recent time units of a run, oldest first.
#[derive(Debug, Clone)]
pub struct HistoryWindow {
    capacity: usize,
    units: VecDeque<UnitSnapshot>,
    starts: VecDeque<WorldState>,
}

impl HistoryWindow {
    pub fn new(capacity: usize) -> Self {
        assert!(capacity > 0, "history window needs room for one unit");
        Self {
            capacity,
            units: VecDeque::with_capacity(capacity),
            starts: VecDeque::with_capacity(capacity),
        }
    }

    /// Records one time unit together with the world state it started from.
    pub fn push(&mut self, start: WorldState, unit: UnitSnapshot) {
        if self.units.len() == self.capacity {
            self.units.pop_front();
            self.starts.pop_front();
        }
        self.units.push_back(unit);
        self.starts.push_back(start);
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    /// Holds exactly `capacity` units.
    pub fn is_warm(&self) -> bool {
        self.units.len() == self.capacity
    }

    pub fn units(&self) -> impl ExactSizeIterator<Item = &UnitSnapshot> {
        self.units.iter()
    }

    /// World state before the oldest recorded unit.
    pub fn start_state(&self) -> Option<&WorldState> {
        self.starts.front()
    }

    /// `(first, last)` time units covered.
    pub fn span(&self) -> Option<(u32, u32)> {
        Some((self.units.front()?.t, self.units.back()?.t))
    }
}
