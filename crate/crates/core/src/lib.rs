//! A model checker for knowledge and unawareness over finite state spaces.
//!
//! A [`Model`] pairs a finite state space with a possibility correspondence
//! `P`, where `P(ω)` is the set of states the agent considers possible at
//! `ω`. Images may be empty: an empty image marks a state at which the agent
//! is unaware.
//!
//! Two operator families are implemented (see [`operators`]): the standard
//! `K`/`U` pair and a revised `K′`/`U′` pair under which states with empty
//! images know nothing. The [`properties`] catalog checks the usual
//! epistemic axioms against either family and returns counterexamples, and
//! [`trace`] replays the impossibility argument for unawareness step by step.
//!
//! ```
//! use unaware::{fixtures, know, unaware, OperatorKind};
//!
//! let m = fixtures::three_state();
//! let a = m.space().event(&["a"]).unwrap();
//! assert_eq!(know(&m, OperatorKind::Standard, a).unwrap(), a);
//! let (u, _) = unaware(&m, OperatorKind::Standard, a).unwrap();
//! assert_eq!(m.space().format_event(u), "{c}");
//! ```
//!
//! The guide in `book/` walks through the concepts; its code samples are
//! compiled and run as doc-tests of this crate.

pub mod cli;
pub mod error;
pub mod fuzz;
pub mod io;
pub mod model;
pub mod operators;
pub mod properties;
pub mod rng;
pub mod space;
pub mod trace;

pub use error::{Error, Result};
pub use model::{classify_correspondence, fixtures, CorrespondenceClass, Model};
pub use operators::{
    core_unawareness, core_unawareness_by_intersection, know, not_know, unaware, FixpointTrace,
    OperatorKind,
};
pub use properties::{
    check_all, check_property, Budget, PropertyId, PropertyReport, Quantification, Relation,
    Witness,
};
pub use space::{enumerate_events, Event, StateSpace};
pub use trace::{trace_revised_chain, trace_standard_chain, DerivationTrace, Verdict};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/models.md")]
    mod models {}
    #[doc = include_str!("../../../book/src/knowledge.md")]
    mod knowledge {}
    #[doc = include_str!("../../../book/src/unawareness.md")]
    mod unawareness {}
    #[doc = include_str!("../../../book/src/properties.md")]
    mod properties {}
    #[doc = include_str!("../../../book/src/chains.md")]
    mod chains {}
    #[doc = include_str!("../../../book/src/files.md")]
    mod files {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
