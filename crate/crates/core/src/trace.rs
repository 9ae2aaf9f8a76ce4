//! Step-by-step evaluation of the unawareness impossibility chain.
//!
//! The standard chain starts from a non-trivial unawareness set and walks
//!
//! ```text
//! UE ⊆ U(UE)          AU introspection
//!    ⊆ ¬K¬K(UE)       definition of U
//!    = ¬KΩ            KU introspection
//!    = ∅              necessitation
//! ```
//!
//! which would force `∅ ≠ UE = ∅`. The revised chain replaces `UE` with the
//! core set `U′Ω` and necessitation with its revised form, ending at `U′Ω`
//! instead of `∅`:
//!
//! ```text
//! U′Ω ⊆ U′(U′Ω)            AU introspection
//!     ⊆ ¬K′¬K′(U′Ω)        plausibility
//!     = ¬K′Ω               KU introspection
//!     = U′Ω                R necessitation
//! ```
//!
//! The middle step of the revised chain is usually stated for a generic
//! `U′E`; this module instantiates `E := Ω`, so that every line is
//! determined by the model alone.
//!
//! Every step value is recomputed through the operators and compared with
//! the previous step using the relation the chain asserts. A broken
//! relation means the model violates the property the step invokes.

use crate::error::Result;
use crate::model::Model;
use crate::operators::{core_unawareness, not_know, unaware, OperatorKind};
use crate::properties::Relation;
use crate::space::Event;

/// Outcome of checking one step against its predecessor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepStatus {
    SubsetHolds,
    EqualsHolds,
    Violated,
}

impl StepStatus {
    pub fn holds(self) -> bool {
        self != StepStatus::Violated
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StepStatus::SubsetHolds => "subset_holds",
            StepStatus::EqualsHolds => "equals_holds",
            StepStatus::Violated => "violated",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    /// The property or definition the step invokes.
    pub label: &'static str,
    pub expression: &'static str,
    pub value: Event,
    /// Relation claimed between the previous value and this one.
    pub relation: Relation,
    pub status: StepStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The chain forces a nonempty set to equal `∅`.
    Contradiction,
    /// The chain closes on its (nonempty) starting set.
    Preserved,
    /// The starting set is empty, so there is nothing to contradict.
    TriviallyConsistent,
    /// The relation claimed at this 1-based step fails for the model.
    BrokenAt { step: usize },
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Contradiction => "contradiction",
            Verdict::Preserved => "preserved",
            Verdict::TriviallyConsistent => "trivially_consistent",
            Verdict::BrokenAt { .. } => "broken_at",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chain {
    Standard,
    Revised,
}

impl Chain {
    pub fn as_str(self) -> &'static str {
        match self {
            Chain::Standard => "dlr",
            Chain::Revised => "rdlr",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationTrace {
    pub chain: Chain,
    /// The starting event of a standard chain.
    pub event: Option<Event>,
    pub steps: Vec<Step>,
    pub verdict: Verdict,
}

impl DerivationTrace {
    pub fn values(&self) -> impl Iterator<Item = Event> + '_ {
        self.steps.iter().map(|s| s.value)
    }
}

struct Builder {
    steps: Vec<Step>,
}

impl Builder {
    fn start(label: &'static str, expression: &'static str, value: Event) -> Self {
        Builder {
            steps: vec![Step {
                label,
                expression,
                value,
                relation: Relation::Subset,
                status: StepStatus::SubsetHolds,
            }],
        }
    }

    fn then(
        &mut self,
        label: &'static str,
        expression: &'static str,
        relation: Relation,
        value: Event,
    ) {
        let prev = self.steps.last().unwrap().value;
        let status = match (relation, relation.holds(prev, value)) {
            (_, false) => StepStatus::Violated,
            (Relation::Subset, true) => StepStatus::SubsetHolds,
            (Relation::Equal, true) => StepStatus::EqualsHolds,
        };
        self.steps.push(Step {
            label,
            expression,
            value,
            relation,
            status,
        });
    }

    fn finish(self, chain: Chain, event: Option<Event>) -> DerivationTrace {
        let first = self.steps[0].value;
        let last = self.steps.last().unwrap().value;
        let verdict = if first.is_empty() {
            Verdict::TriviallyConsistent
        } else if let Some(i) = self.steps.iter().position(|s| !s.status.holds()) {
            Verdict::BrokenAt { step: i + 1 }
        } else if last.is_empty() {
            Verdict::Contradiction
        } else if last == first {
            Verdict::Preserved
        } else {
            // All relations hold, so first ⊆ last; unreachable for these chains.
            Verdict::BrokenAt {
                step: self.steps.len(),
            }
        };
        DerivationTrace {
            chain,
            event,
            steps: self.steps,
            verdict,
        }
    }
}

/// Walks the standard chain starting from `U(event)`.
///
/// ```
/// use unaware::{fixtures, trace_standard_chain, Verdict};
///
/// let m = fixtures::three_state();
/// let t = trace_standard_chain(&m, m.space().event(&["a"]).unwrap()).unwrap();
/// assert_eq!(t.verdict, Verdict::BrokenAt { step: 2 });
/// ```
pub fn trace_standard_chain(model: &Model, event: Event) -> Result<DerivationTrace> {
    use OperatorKind::Standard;
    let ue = unaware(model, Standard, event)?.0;
    let uue = unaware(model, Standard, ue)?.0;
    let nknk = not_know(model, Standard, not_know(model, Standard, ue)?)?;
    let nk_full = not_know(model, Standard, model.space().full())?;

    let mut b = Builder::start("non-trivial unawareness", "U(E)", ue);
    b.then("AU introspection", "U(U(E))", Relation::Subset, uue);
    b.then("definition of U", "¬K¬K(U(E))", Relation::Subset, nknk);
    b.then("KU introspection", "¬K(Ω)", Relation::Equal, nk_full);
    b.then("necessitation", "∅", Relation::Equal, model.space().empty());
    Ok(b.finish(Chain::Standard, Some(event)))
}

/// Walks the revised chain starting from the core set `U′Ω`.
///
/// ```
/// use unaware::{fixtures, trace_revised_chain, Verdict};
///
/// let t = trace_revised_chain(&fixtures::four_state());
/// assert_eq!(t.verdict, Verdict::Preserved);
/// ```
pub fn trace_revised_chain(model: &Model) -> DerivationTrace {
    use OperatorKind::Revised;
    let full = model.space().full();
    let core = core_unawareness(model);
    // Widths always match here.
    let ucore = unaware(model, Revised, core).unwrap().0;
    let u_full = unaware(model, Revised, full).unwrap().0;
    let nknk = not_know(model, Revised, not_know(model, Revised, u_full).unwrap()).unwrap();
    let nk_full = not_know(model, Revised, full).unwrap();

    let mut b = Builder::start("non-trivial unawareness", "U′(Ω)", core);
    b.then("AU introspection", "U′(U′(Ω))", Relation::Subset, ucore);
    b.then("plausibility", "¬K′¬K′(U′(Ω))", Relation::Subset, nknk);
    b.then("KU introspection", "¬K′(Ω)", Relation::Equal, nk_full);
    b.then("R necessitation", "U′(Ω)", Relation::Equal, core);
    b.finish(Chain::Revised, None)
}
