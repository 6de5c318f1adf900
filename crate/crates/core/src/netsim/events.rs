use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EventKind {
    HandoffInitiated,
    HandoffCompleted,
    ConnectionCut,
    Connected,
    Blocked,
}

impl EventKind {
    pub const ALL: [EventKind; 5] = [
        EventKind::HandoffInitiated,
        EventKind::HandoffCompleted,
        EventKind::ConnectionCut,
        EventKind::Connected,
        EventKind::Blocked,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EventKind::HandoffInitiated => "HandoffInitiated",
            EventKind::HandoffCompleted => "HandoffCompleted",
            EventKind::ConnectionCut => "ConnectionCut",
            EventKind::Connected => "Connected",
            EventKind::Blocked => "Blocked",
        }
    }
}

impl fmt::Display for EventKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EventKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown event kind {s:?}"))
    }
}

/// One event. `old_bs`/`new_bs` carry the stations involved, where relevant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventRecord {
    pub t: u32,
    pub mt_id: usize,
    pub event: EventKind,
    pub old_bs: Option<usize>,
    pub new_bs: Option<usize>,
}

/// Append-only, time-ordered event log.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EventLog {
    records: Vec<EventRecord>,
}

impl EventLog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, record: EventRecord) {
        debug_assert!(
            self.records.last().map_or(true, |r| r.t <= record.t),
            "event log must stay time-ordered"
        );
        self.records.push(record);
    }

    pub fn extend(&mut self, records: impl IntoIterator<Item = EventRecord>) {
        for r in records {
            self.push(r);
        }
    }

    pub fn records(&self) -> &[EventRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn count(&self, kind: EventKind) -> usize {
        self.records.iter().filter(|r| r.event == kind).count()
    }

    /// Events with `from <= t < to`.
    pub fn between(&self, from: u32, to: u32) -> impl Iterator<Item = &EventRecord> {
        self.records.iter().filter(move |r| r.t >= from && r.t < to)
    }
}

impl FromIterator<EventRecord> for EventLog {
    fn from_iter<I: IntoIterator<Item = EventRecord>>(iter: I) -> Self {
        let mut log = EventLog::new();
        log.extend(iter);
        log
    }
}
