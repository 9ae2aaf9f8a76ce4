//! State spaces and events.
//!
//! An [`Event`] is a subset of a finite state space stored as one machine
//! word: bit `i` is set when the `i`-th declared state belongs to the event.
//! Every event carries its width so that complements stay inside the space.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported state space. One event fits in a `u64`.
pub const MAX_STATES: usize = 64;

/// Largest space over which a property may quantify over every event.
pub const EXHAUSTIVE_UNARY_CAP: usize = 14;

/// Largest space over which a property may quantify over every event pair.
pub const EXHAUSTIVE_PAIR_CAP: usize = 7;

fn mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// A finite, ordered, nonempty set of named states.
#[derive(Debug, Clone)]
pub struct StateSpace {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl PartialEq for StateSpace {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for StateSpace {}

/// Whether `label` is a legal state identifier.
pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && label
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl StateSpace {
    /// Builds a space from labels in declaration order.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyStateSpace);
        }
        if labels.len() > MAX_STATES {
            return Err(Error::TooManyStates(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if !is_valid_label(label) {
                return Err(Error::InvalidLabel(label.clone()));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(StateSpace { labels, index })
    }

    /// A space of `n` states labelled `s0`, `s1`, ...
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| format!("s{i}")))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// The empty event over this space.
    pub fn empty(&self) -> Event {
        Event::empty(self.size())
    }

    /// The full event Ω.
    pub fn full(&self) -> Event {
        Event::full(self.size())
    }

    /// The event containing exactly the named states.
    pub fn event<S: AsRef<str>>(&self, members: &[S]) -> Result<Event> {
        let mut bits = 0u64;
        for m in members {
            let m = m.as_ref();
            let i = self
                .index_of(m)
                .ok_or_else(|| Error::UnknownState(m.to_string()))?;
            bits |= 1 << i;
        }
        Ok(Event {
            bits,
            width: self.size() as u8,
        })
    }

    /// Fails unless `event` has this space's width.
    pub fn check(&self, event: Event) -> Result<()> {
        if event.width() == self.size() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.size(),
                found: event.width(),
            })
        }
    }

    /// Member labels of `event` in declaration order.
    pub fn members(&self, event: Event) -> Vec<&str> {
        event.iter().map(|i| self.label(i)).collect()
    }

    /// Renders `event` as `{a,b}` with members in declaration order.
    pub fn format_event(&self, event: Event) -> String {
        format!("{{{}}}", self.members(event).join(","))
    }
}

/// A subset of a state space of at most [`MAX_STATES`] states.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Event {
    bits: u64,
    width: u8,
}

impl Event {
    pub fn empty(width: usize) -> Self {
        assert!(width <= MAX_STATES);
        Event {
            bits: 0,
            width: width as u8,
        }
    }

    pub fn full(width: usize) -> Self {
        assert!(width <= MAX_STATES);
        Event {
            bits: mask(width),
            width: width as u8,
        }
    }

    pub fn singleton(width: usize, index: usize) -> Self {
        assert!(index < width && width <= MAX_STATES);
        Event {
            bits: 1 << index,
            width: width as u8,
        }
    }

    /// Builds an event from raw bits, rejecting bits at or above `width`.
    pub fn from_bits(width: usize, bits: u64) -> Result<Self> {
        if width > MAX_STATES {
            return Err(Error::TooManyStates(width));
        }
        if bits & !mask(width) != 0 {
            return Err(Error::BitsOutOfRange { bits, width });
        }
        Ok(Event {
            bits,
            width: width as u8,
        })
    }

    /// Builds an event from raw bits, discarding bits at or above `width`.
    pub fn from_bits_truncate(width: usize, bits: u64) -> Self {
        assert!(width <= MAX_STATES);
        Event {
            bits: bits & mask(width),
            width: width as u8,
        }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn width(self) -> usize {
        self.width as usize
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_full(self) -> bool {
        self.bits == mask(self.width())
    }

    pub fn contains(self, index: usize) -> bool {
        index < self.width() && self.bits >> index & 1 == 1
    }

    pub fn with(self, index: usize) -> Self {
        assert!(index < self.width());
        Event {
            bits: self.bits | 1 << index,
            ..self
        }
    }

    pub fn union(self, other: Event) -> Self {
        debug_assert_eq!(self.width, other.width);
        Event {
            bits: self.bits | other.bits,
            ..self
        }
    }

    pub fn intersection(self, other: Event) -> Self {
        debug_assert_eq!(self.width, other.width);
        Event {
            bits: self.bits & other.bits,
            ..self
        }
    }

    pub fn difference(self, other: Event) -> Self {
        debug_assert_eq!(self.width, other.width);
        Event {
            bits: self.bits & !other.bits,
            ..self
        }
    }

    /// Complement relative to the space, never beyond it.
    pub fn complement(self) -> Self {
        Event {
            bits: !self.bits & mask(self.width()),
            ..self
        }
    }

    pub fn is_subset(self, other: Event) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.bits & !other.bits == 0
    }

    /// Indices of member states in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl fmt::Debug for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Event{{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}/{}", self.width)
    }
}

/// Iterator over all events of a space in ascending bit order.
#[derive(Debug, Clone)]
pub struct Events {
    next: u64,
    end: u64,
    width: usize,
}

impl Iterator for Events {
    type Item = Event;

    fn next(&mut self) -> Option<Event> {
        if self.next == self.end {
            return None;
        }
        let e = Event {
            bits: self.next,
            width: self.width as u8,
        };
        self.next += 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Events {}

/// All `2^size` events of `space`, from `{}` up to Ω.
///
/// Refused above [`EXHAUSTIVE_UNARY_CAP`] states.
pub fn enumerate_events(space: &StateSpace) -> Result<Events> {
    events_of_width(space.size())
}

pub(crate) fn events_of_width(width: usize) -> Result<Events> {
    if width > EXHAUSTIVE_UNARY_CAP {
        return Err(Error::EnumerationRefused {
            what: "events",
            size: width,
            cap: EXHAUSTIVE_UNARY_CAP,
        });
    }
    Ok(Events {
        next: 0,
        end: 1 << width,
        width,
    })
}
