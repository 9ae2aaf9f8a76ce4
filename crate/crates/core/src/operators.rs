//! Knowledge and unawareness operators.
//!
//! Two families are provided, selected by [`OperatorKind`]:
//!
//! * **standard**: `K(E) = {ω : P(ω) ⊆ E}`. A state with an empty image
//!   knows every event, since `∅ ⊆ E` always holds.
//! * **revised**: `K′(E) = {ω : ∅ ≠ P(ω) ⊆ E}`. A state with an empty image
//!   knows nothing.
//!
//! Unawareness is the intersection of every iterate of "does not know":
//! `U(E) = ¬K(E) ∩ ¬K¬K(E) ∩ ...`, and likewise for `U′` with `¬K′`.
//! Any operator contained in that intersection would also be admissible;
//! this crate always computes the intersection itself, the largest choice.
//! The iterates live in a finite lattice, so the sequence eventually
//! revisits a term and from then on cycles; [`unaware`] stops at the first
//! revisit.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Result;
use crate::model::Model;
use crate::space::{events_of_width, Event};

/// Which knowledge operator to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    Standard,
    Revised,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 2] = [OperatorKind::Standard, OperatorKind::Revised];

    pub fn as_str(self) -> &'static str {
        match self {
            OperatorKind::Standard => "standard",
            OperatorKind::Revised => "revised",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OperatorKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "standard" | "std" => Ok(OperatorKind::Standard),
            "revised" | "rev" => Ok(OperatorKind::Revised),
            _ => Err(format!("unknown operator kind {s:?} (expected std or rev)")),
        }
    }
}

/// The iterates computed while evaluating an unawareness operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixpointTrace {
    /// `terms[i]` is `(¬K)^(i+1)(E)`. The last term repeats an earlier one.
    pub terms: Vec<Event>,
    /// `partials[i]` is the intersection of `terms[..=i]`.
    pub partials: Vec<Event>,
    /// Index of the first repeated term, always `terms.len() - 1`.
    pub cycle_start: usize,
    pub result: Event,
}

impl FixpointTrace {
    /// Index of the earlier term that `terms[cycle_start]` repeats.
    pub fn repeats(&self) -> usize {
        let t = self.terms[self.cycle_start];
        self.terms.iter().position(|&x| x == t).unwrap()
    }
}

// Callers must have checked the event width.
pub(crate) fn know_raw(model: &Model, kind: OperatorKind, event: Event) -> Event {
    let mut bits = 0u64;
    for (i, image) in model.images().iter().enumerate() {
        if kind == OperatorKind::Revised && image.is_empty() {
            continue;
        }
        if image.is_subset(event) {
            bits |= 1 << i;
        }
    }
    Event::from_bits_truncate(model.size(), bits)
}

pub(crate) fn not_know_raw(model: &Model, kind: OperatorKind, event: Event) -> Event {
    know_raw(model, kind, event).complement()
}

pub(crate) fn unaware_raw(model: &Model, kind: OperatorKind, event: Event) -> Event {
    // Short sequences dominate; a linear scan beats hashing there.
    let mut seen: Vec<Event> = Vec::new();
    let mut result = model.space().full();
    let mut term = not_know_raw(model, kind, event);
    while !seen.contains(&term) {
        seen.push(term);
        result = result.intersection(term);
        term = not_know_raw(model, kind, term);
    }
    result
}

/// `K(E)` or `K′(E)`.
pub fn know(model: &Model, kind: OperatorKind, event: Event) -> Result<Event> {
    model.space().check(event)?;
    Ok(know_raw(model, kind, event))
}

/// `¬K(E) = Ω \ K(E)`, or the revised counterpart.
pub fn not_know(model: &Model, kind: OperatorKind, event: Event) -> Result<Event> {
    model.space().check(event)?;
    Ok(not_know_raw(model, kind, event))
}

/// `U(E)` or `U′(E)`, with the iterates that produced it.
pub fn unaware(model: &Model, kind: OperatorKind, event: Event) -> Result<(Event, FixpointTrace)> {
    model.space().check(event)?;
    let mut seen: HashMap<Event, usize> = HashMap::new();
    let mut terms = Vec::new();
    let mut partials = Vec::new();
    let mut acc = model.space().full();
    let mut term = not_know_raw(model, kind, event);
    loop {
        let first_visit = seen.insert(term, terms.len()).is_none();
        acc = acc.intersection(term);
        terms.push(term);
        partials.push(acc);
        if !first_visit {
            break;
        }
        term = not_know_raw(model, kind, term);
    }
    let trace = FixpointTrace {
        cycle_start: terms.len() - 1,
        result: acc,
        terms,
        partials,
    };
    Ok((acc, trace))
}

/// `U′Ω`: the states whose image is empty.
pub fn core_unawareness(model: &Model) -> Event {
    model
        .images()
        .iter()
        .enumerate()
        .filter(|(_, p)| p.is_empty())
        .fold(model.space().empty(), |acc, (i, _)| acc.with(i))
}

/// `U′Ω` computed as the intersection of `U′(E)` over every event `E`.
///
/// Independent of [`core_unawareness`]; refused above the exhaustive cap.
pub fn core_unawareness_by_intersection(model: &Model) -> Result<Event> {
    let events = events_of_width(model.size())?;
    Ok(events.fold(model.space().full(), |acc, e| {
        acc.intersection(unaware_raw(model, OperatorKind::Revised, e))
    }))
}
