//! The per-terminal connection state machine.
//!
//! | state      | condition                                   | action         | next       |
//! |------------|---------------------------------------------|----------------|------------|
//! | Connect    | S_min ≤ value < S_th, target available      | initiate       | Handover   |
//! | Connect    | value < S_min, or outside serving coverage  | cut            | Disconnect |
//! | Disconnect | value > S_min at a candidate with a channel | connect        | Connect    |
//! | Handover   | dwell expires                               | end handover   | Connect    |
//! | Handover   | outside target coverage                     | cut            | Disconnect |
//!
//! A disconnected terminal that qualifies but finds every covering station
//! full is `Blocked`. Everything else is a no-op.

use super::{select_target_bs, BaseStation, EventKind, Link, Point};

/// Source of the crisp threshold value driving handoff decisions.
pub trait RssPolicy {
    /// Threshold value in `[0, 1]` for the given normalized inputs.
    fn rss_threshold(&self, velocity: f64, dist_norm: f64, chan_norm: f64) -> f64;
}

impl<F> RssPolicy for F
where
    F: Fn(f64, f64, f64) -> f64,
{
    fn rss_threshold(&self, velocity: f64, dist_norm: f64, chan_norm: f64) -> f64 {
        self(velocity, dist_norm, chan_norm)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    /// Handoff initiation threshold.
    pub s_th: f64,
    /// Connection cut threshold.
    pub s_min: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transition {
    pub event: EventKind,
    pub old_bs: Option<usize>,
    pub new_bs: Option<usize>,
}

impl Transition {
    fn new(event: EventKind, old_bs: Option<usize>, new_bs: Option<usize>) -> Self {
        Self { event, old_bs, new_bs }
    }
}

/// Applies one time unit of the state machine to `link`, updating station
/// occupancy in place. Returns the event fired, if any.
pub fn transition<P: RssPolicy + ?Sized>(
    link: &mut Link,
    position: Point,
    speed: f64,
    stations: &mut [BaseStation],
    thresholds: Thresholds,
    dwell: u32,
    policy: &P,
) -> Option<Transition> {
    let value_at = |bs: &BaseStation| {
        policy.rss_threshold(speed, bs.dist_norm(position), bs.free_channels_norm())
    };
    match *link {
        Link::Handover {
            serving,
            target,
            dwell: remaining,
        } => {
            if !stations[target].covers(position) {
                stations[serving].release();
                stations[target].release();
                *link = Link::Disconnected;
                return Some(Transition::new(EventKind::ConnectionCut, Some(serving), Some(target)));
            }
            let remaining = remaining.saturating_sub(1);
            if remaining == 0 {
                stations[serving].release();
                *link = Link::Connected { serving: target };
                Some(Transition::new(EventKind::HandoffCompleted, Some(serving), Some(target)))
            } else {
                *link = Link::Handover {
                    serving,
                    target,
                    dwell: remaining,
                };
                None
            }
        }
        Link::Connected { serving } => {
            let cut = || Transition::new(EventKind::ConnectionCut, Some(serving), None);
            if !stations[serving].covers(position) {
                stations[serving].release();
                *link = Link::Disconnected;
                return Some(cut());
            }
            let value = value_at(&stations[serving]);
            if value < thresholds.s_min {
                stations[serving].release();
                *link = Link::Disconnected;
                Some(cut())
            } else if value < thresholds.s_th {
                let target = select_target_bs(position, stations, Some(serving))?;
                stations[target].acquire();
                *link = Link::Handover {
                    serving,
                    target,
                    dwell,
                };
                Some(Transition::new(EventKind::HandoffInitiated, Some(serving), Some(target)))
            } else {
                None
            }
        }
        Link::Disconnected => {
            let (candidate, free) = match select_target_bs(position, stations, None) {
                Some(id) => (id, true),
                None => (super::best_covering_bs(position, stations)?, false),
            };
            let value = value_at(&stations[candidate]);
            if value <= thresholds.s_min {
                None
            } else if free {
                stations[candidate].acquire();
                *link = Link::Connected { serving: candidate };
                Some(Transition::new(EventKind::Connected, None, Some(candidate)))
            } else {
                Some(Transition::new(EventKind::Blocked, None, Some(candidate)))
            }
        }
    }
}
