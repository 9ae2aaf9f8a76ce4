//! The catalog of epistemic properties and their checker.
//!
//! Each [`PropertyId`] names one formal statement about an operator kind.
//! [`check_property`] quantifies that statement over every event (or every
//! pair of events) when the space is small enough, and over a seeded sample
//! of events otherwise. A failing report always carries a [`Witness`] that
//! reproduces the violation.
//!
//! Statements that mention the core unawareness set `U′Ω` use
//! [`core_unawareness`] under the revised kind, and `∅` under the standard
//! kind. In particular `r_necessitation` collapses to `necessitation` for
//! the standard kind.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{classify_correspondence, Model};
use crate::operators::{core_unawareness, know_raw, not_know_raw, unaware_raw, OperatorKind};
use crate::rng::Stream;
use crate::space::{events_of_width, Event, EXHAUSTIVE_PAIR_CAP, EXHAUSTIVE_UNARY_CAP};

/// Default number of sampled events when a space exceeds the caps.
pub const DEFAULT_SAMPLES: usize = 4096;

macro_rules! property_ids {
    ($($variant:ident => $name:literal,)*) => {
        /// A property in the catalog.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum PropertyId {
            $($variant,)*
        }

        impl PropertyId {
            /// Every property, in report order.
            pub const ALL: &'static [PropertyId] = &[$(PropertyId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(PropertyId::$variant => $name,)*
                }
            }
        }

        impl FromStr for PropertyId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(PropertyId::$variant),)*
                    _ => Err(Error::UnknownProperty(s.to_string())),
                }
            }
        }
    };
}

property_ids! {
    Necessitation => "necessitation",
    RNecessitation => "r_necessitation",
    Monotonicity => "monotonicity",
    Truth => "truth",
    PositiveIntrospection => "positive_introspection",
    NegativeIntrospection => "negative_introspection",
    KuIntrospection => "ku_introspection",
    AuIntrospectionCore => "au_introspection_core",
    AuIntrospectionAll => "au_introspection_all",
    ReverseAuIntrospection => "reverse_au_introspection",
    Plausibility => "plausibility",
    Symmetry => "symmetry",
    Absorption => "absorption",
    PartitionNoUnawareness => "partition_no_unawareness",
}

impl PropertyId {
    /// The nine properties claimed for the revised operators.
    pub const REVISED_SUITE: [PropertyId; 9] = [
        PropertyId::RNecessitation,
        PropertyId::Monotonicity,
        PropertyId::Truth,
        PropertyId::PositiveIntrospection,
        PropertyId::Plausibility,
        PropertyId::KuIntrospection,
        PropertyId::AuIntrospectionCore,
        PropertyId::ReverseAuIntrospection,
        PropertyId::Symmetry,
    ];

    /// The formal statement, with `K`/`U` standing for the selected kind.
    pub fn statement(self) -> &'static str {
        use PropertyId::*;
        match self {
            Necessitation => "KΩ = Ω",
            RNecessitation => "KΩ = Ω \\ U′Ω",
            Monotonicity => "E ⊆ F ⇒ KE ⊆ KF",
            Truth => "KE ⊆ E",
            PositiveIntrospection => "KE ⊆ K(KE)",
            NegativeIntrospection => "¬KE ⊆ K¬KE",
            KuIntrospection => "K(UE) = ∅",
            AuIntrospectionCore => "U′Ω ⊆ U(U′Ω)",
            AuIntrospectionAll => "UE ⊆ U(UE)",
            ReverseAuIntrospection => "U(UE) ⊆ UE",
            Plausibility => "U′Ω ⊆ UE ⊆ ¬KE ∩ ¬K¬KE",
            Symmetry => "U′Ω = U∅",
            Absorption => "K(E ∪ U′Ω) = KE",
            PartitionNoUnawareness => "P partitional ⇒ UE = ∅",
        }
    }

    fn arity(self) -> Arity {
        use PropertyId::*;
        match self {
            Necessitation | RNecessitation | AuIntrospectionCore | Symmetry => Arity::Nullary,
            Monotonicity => Arity::Binary,
            _ => Arity::Unary,
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Arity {
    Nullary,
    Unary,
    Binary,
}

/// How a check may quantify over events.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Budget {
    /// Exhaustive within the caps, sampled beyond them.
    Auto { samples: usize, seed: u64 },
    /// Exhaustive or an error.
    Exhaustive,
    /// Always sampled.
    Sampled { samples: usize, seed: u64 },
}

impl Default for Budget {
    fn default() -> Self {
        Budget::Auto {
            samples: DEFAULT_SAMPLES,
            seed: 0,
        }
    }
}

/// How a report's verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantification {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

/// The relation a statement asserts between its two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Subset,
    Equal,
}

impl Relation {
    pub fn holds(self, lhs: Event, rhs: Event) -> bool {
        match self {
            Relation::Subset => lhs.is_subset(rhs),
            Relation::Equal => lhs == rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Subset => "⊆",
            Relation::Equal => "=",
        }
    }

    pub fn negated_symbol(self) -> &'static str {
        match self {
            Relation::Subset => "⊄",
            Relation::Equal => "≠",
        }
    }
}

/// A counterexample: the inputs and both computed sides of a violated relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub event: Event,
    /// The second event of a binary statement.
    pub second: Option<Event>,
    pub lhs: Event,
    pub rhs: Event,
    pub relation: Relation,
}

/// The verdict for one property under one operator kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: PropertyId,
    pub kind: OperatorKind,
    pub holds: bool,
    pub quantification: Quantification,
    pub witness: Option<Witness>,
}

struct Ctx<'a> {
    model: &'a Model,
    kind: OperatorKind,
    core: Event,
    full: Event,
}

impl Ctx<'_> {
    fn k(&self, e: Event) -> Event {
        know_raw(self.model, self.kind, e)
    }
    fn nk(&self, e: Event) -> Event {
        not_know_raw(self.model, self.kind, e)
    }
    fn u(&self, e: Event) -> Event {
        unaware_raw(self.model, self.kind, e)
    }
}

fn expect(event: Event, lhs: Event, relation: Relation, rhs: Event) -> Option<Witness> {
    (!relation.holds(lhs, rhs)).then_some(Witness {
        event,
        second: None,
        lhs,
        rhs,
        relation,
    })
}

fn nullary(cx: &Ctx, id: PropertyId) -> Option<Witness> {
    use PropertyId::*;
    use Relation::*;
    let full = cx.full;
    match id {
        Necessitation => expect(full, cx.k(full), Equal, full),
        RNecessitation => expect(full, cx.k(full), Equal, full.difference(cx.core)),
        AuIntrospectionCore => expect(cx.core, cx.core, Subset, cx.u(cx.core)),
        Symmetry => {
            let none = full.complement();
            expect(none, cx.core, Equal, cx.u(none))
        }
        _ => unreachable!("{id} is not nullary"),
    }
}

fn unary(cx: &Ctx, id: PropertyId, e: Event) -> Option<Witness> {
    use PropertyId::*;
    use Relation::*;
    match id {
        Truth => expect(e, cx.k(e), Subset, e),
        PositiveIntrospection => {
            let ke = cx.k(e);
            expect(e, ke, Subset, cx.k(ke))
        }
        NegativeIntrospection => {
            let nke = cx.nk(e);
            expect(e, nke, Subset, cx.k(nke))
        }
        KuIntrospection => expect(e, cx.k(cx.u(e)), Equal, cx.full.complement()),
        AuIntrospectionAll => {
            let ue = cx.u(e);
            expect(e, ue, Subset, cx.u(ue))
        }
        ReverseAuIntrospection => {
            let ue = cx.u(e);
            expect(e, cx.u(ue), Subset, ue)
        }
        Plausibility => {
            let ue = cx.u(e);
            let nke = cx.nk(e);
            expect(e, cx.core, Subset, ue)
                .or_else(|| expect(e, ue, Subset, nke.intersection(cx.nk(nke))))
        }
        Absorption => expect(e, cx.k(e.union(cx.core)), Equal, cx.k(e)),
        PartitionNoUnawareness => expect(e, cx.u(e), Equal, cx.full.complement()),
        _ => unreachable!("{id} is not unary"),
    }
}

fn monotone_pair(cx: &Ctx, e: Event, f: Event) -> Option<Witness> {
    debug_assert!(e.is_subset(f));
    let (ke, kf) = (cx.k(e), cx.k(f));
    (!ke.is_subset(kf)).then_some(Witness {
        event: e,
        second: Some(f),
        lhs: ke,
        rhs: kf,
        relation: Relation::Subset,
    })
}

/// Supersets of `e` in ascending order.
fn supersets(e: Event) -> impl Iterator<Item = Event> {
    let free = e.complement().bits();
    let width = e.width();
    let mut g = Some(0u64);
    std::iter::from_fn(move || {
        let cur = g?;
        g = if cur == free {
            None
        } else {
            Some(cur.wrapping_sub(free) & free)
        };
        Some(Event::from_bits_truncate(width, e.bits() | cur))
    })
}

fn sampled_samples(budget: Budget) -> Option<(usize, u64)> {
    match budget {
        Budget::Auto { samples, seed } | Budget::Sampled { samples, seed } => Some((samples, seed)),
        Budget::Exhaustive => None,
    }
}

/// Decides between exhaustive and sampled quantification.
fn plan(budget: Budget, n: usize, cap: usize) -> Result<Quantification> {
    match budget {
        Budget::Exhaustive if n > cap => Err(Error::BudgetInfeasible(format!(
            "exhaustive quantification over {n} states exceeds the cap of {cap}"
        ))),
        Budget::Exhaustive => Ok(Quantification::Exhaustive),
        Budget::Auto { .. } if n <= cap => Ok(Quantification::Exhaustive),
        _ => {
            let (samples, seed) = sampled_samples(budget).unwrap();
            if samples == 0 {
                return Err(Error::BudgetInfeasible(
                    "sample count must be positive".into(),
                ));
            }
            Ok(Quantification::Sampled { samples, seed })
        }
    }
}

/// Evaluates one property against `model` under `kind`.
///
/// ```
/// use unaware::{check_property, fixtures, Budget, OperatorKind, PropertyId};
///
/// let m = fixtures::three_state();
/// let r = check_property(&m, OperatorKind::Standard, PropertyId::AuIntrospectionAll, Budget::default())
///     .unwrap();
/// assert!(!r.holds);
/// let w = r.witness.unwrap();
/// assert_eq!(m.space().format_event(w.event), "{a}");
/// ```
pub fn check_property(
    model: &Model,
    kind: OperatorKind,
    property: PropertyId,
    budget: Budget,
) -> Result<PropertyReport> {
    let core = match kind {
        OperatorKind::Revised => core_unawareness(model),
        OperatorKind::Standard => model.space().empty(),
    };
    let cx = Ctx {
        model,
        kind,
        core,
        full: model.space().full(),
    };
    let n = model.size();

    let (quantification, witness) = match property.arity() {
        Arity::Nullary => {
            if let Budget::Sampled { samples: 0, .. } = budget {
                return Err(Error::BudgetInfeasible(
                    "sample count must be positive".into(),
                ));
            }
            (Quantification::Exhaustive, nullary(&cx, property))
        }
        _ if property == PropertyId::PartitionNoUnawareness
            && !classify_correspondence(model).partitional =>
        {
            // Vacuous: the premise fails.
            plan(budget, n, EXHAUSTIVE_UNARY_CAP)?;
            (Quantification::Exhaustive, None)
        }
        Arity::Unary => {
            let q = plan(budget, n, EXHAUSTIVE_UNARY_CAP)?;
            let w = match q {
                Quantification::Exhaustive => {
                    events_of_width(n)?.find_map(|e| unary(&cx, property, e))
                }
                Quantification::Sampled { samples, seed } => {
                    let mut rng = Stream::new(seed);
                    (0..samples).find_map(|_| {
                        let e = Event::from_bits_truncate(n, rng.next_u64());
                        unary(&cx, property, e)
                    })
                }
            };
            (q, w)
        }
        Arity::Binary => {
            let q = plan(budget, n, EXHAUSTIVE_UNARY_CAP)?;
            let w = match q {
                Quantification::Exhaustive if n <= EXHAUSTIVE_PAIR_CAP => events_of_width(n)?
                    .find_map(|e| supersets(e).find_map(|f| monotone_pair(&cx, e, f))),
                // Beyond the pair cap, covering pairs E ⊂ E ∪ {s} suffice:
                // inclusion is the transitive closure of covering.
                Quantification::Exhaustive => events_of_width(n)?.find_map(|e| {
                    e.complement()
                        .iter()
                        .find_map(|s| monotone_pair(&cx, e, e.with(s)))
                }),
                Quantification::Sampled { samples, seed } => {
                    let mut rng = Stream::new(seed);
                    (0..samples).find_map(|_| {
                        let e = Event::from_bits_truncate(n, rng.next_u64());
                        let f = e.union(Event::from_bits_truncate(n, rng.next_u64()));
                        monotone_pair(&cx, e, f)
                    })
                }
            };
            (q, w)
        }
    };

    Ok(PropertyReport {
        property,
        kind,
        holds: witness.is_none(),
        quantification,
        witness,
    })
}

/// One report per catalog entry, in [`PropertyId::ALL`] order.
pub fn check_all(model: &Model, kind: OperatorKind, budget: Budget) -> Result<Vec<PropertyReport>> {
    PropertyId::ALL
        .iter()
        .map(|&p| check_property(model, kind, p, budget))
        .collect()
}
