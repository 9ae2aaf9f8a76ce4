//! Counterexample search over seeded random models.

use crate::error::{Error, Result};
use crate::io::{generate_model, Family, GeneratorParams};
use crate::model::Model;
use crate::operators::{unaware_raw, OperatorKind};
use crate::properties::{check_property, Budget, PropertyId, PropertyReport, Quantification};
use crate::rng::Stream;
use crate::space::{events_of_width, Event, EXHAUSTIVE_UNARY_CAP};

/// What a fuzz run looks for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FuzzTarget {
    /// A model on which one of these properties fails.
    Violation(Vec<PropertyId>),
    /// A model on which necessitation, KU introspection and AU introspection
    /// all hold and yet some event has nonempty unawareness.
    Dlr,
}

/// The premises of the impossibility argument.
pub const DLR_PREMISES: [PropertyId; 3] = [
    PropertyId::Necessitation,
    PropertyId::KuIntrospection,
    PropertyId::AuIntrospectionAll,
];

#[derive(Debug, Clone)]
pub struct FuzzConfig {
    pub models: usize,
    pub n_states: usize,
    pub seed: u64,
    pub kind: OperatorKind,
    pub target: FuzzTarget,
    pub family: Family,
    pub density: f64,
    pub p_empty: f64,
    pub budget: Budget,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finding {
    Violation(PropertyReport),
    /// `U(event) = value ≠ ∅` on a model satisfying every premise.
    NontrivialUnawareness {
        premises: Vec<PropertyReport>,
        event: Event,
        value: Event,
        quantification: Quantification,
    },
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    /// Position of the model in the run, from 0.
    pub index: usize,
    pub seed: u64,
    pub model: Model,
    pub finding: Finding,
}

/// First event with nonempty unawareness, if any.
pub fn nontrivial_unawareness(
    model: &Model,
    kind: OperatorKind,
    budget: Budget,
) -> Result<Option<(Event, Event, Quantification)>> {
    let n = model.size();
    let hit = |e: Event| {
        let u = unaware_raw(model, kind, e);
        (!u.is_empty()).then_some((e, u))
    };
    let exhaustive = match budget {
        Budget::Exhaustive => true,
        Budget::Auto { .. } => n <= EXHAUSTIVE_UNARY_CAP,
        Budget::Sampled { .. } => false,
    };
    if exhaustive {
        let mut found = events_of_width(n).map_err(|_| {
            Error::BudgetInfeasible(format!(
                "exhaustive quantification over {n} states exceeds the cap of {EXHAUSTIVE_UNARY_CAP}"
            ))
        })?;
        return Ok(found
            .find_map(hit)
            .map(|(e, u)| (e, u, Quantification::Exhaustive)));
    }
    let (Budget::Auto { samples, seed } | Budget::Sampled { samples, seed }) = budget else {
        unreachable!()
    };
    let q = Quantification::Sampled { samples, seed };
    let mut rng = Stream::new(seed);
    Ok((0..samples)
        .find_map(|_| hit(Event::from_bits_truncate(n, rng.next_u64())))
        .map(|(e, u)| (e, u, q)))
}

/// Checks one model against `target`.
pub fn check_target(
    model: &Model,
    kind: OperatorKind,
    target: &FuzzTarget,
    budget: Budget,
) -> Result<Option<Finding>> {
    match target {
        FuzzTarget::Violation(ids) => {
            for &id in ids {
                let r = check_property(model, kind, id, budget)?;
                if !r.holds {
                    return Ok(Some(Finding::Violation(r)));
                }
            }
            Ok(None)
        }
        FuzzTarget::Dlr => {
            let mut premises = Vec::new();
            for id in DLR_PREMISES {
                let r = check_property(model, kind, id, budget)?;
                if !r.holds {
                    return Ok(None);
                }
                premises.push(r);
            }
            Ok(nontrivial_unawareness(model, kind, budget)?.map(
                |(event, value, quantification)| Finding::NontrivialUnawareness {
                    premises,
                    event,
                    value,
                    quantification,
                },
            ))
        }
    }
}

/// Generates `config.models` models and returns the first counterexample.
pub fn fuzz(config: &FuzzConfig) -> Result<Option<Counterexample>> {
    if let FuzzTarget::Violation(ids) = &config.target {
        if ids.is_empty() {
            return Err(Error::InvalidParams("no property to fuzz".into()));
        }
    }
    let base = GeneratorParams {
        n_states: config.n_states,
        density: config.density,
        p_empty: config.p_empty,
        family: config.family,
        seed: 0,
    };
    base.validate()?;
    let mut seeds = Stream::new(config.seed);
    for index in 0..config.models {
        let seed = seeds.next_u64();
        let model = generate_model(&GeneratorParams { seed, ..base })?;
        if let Some(finding) = check_target(&model, config.kind, &config.target, config.budget)? {
            return Ok(Some(Counterexample {
                index,
                seed,
                model,
                finding,
            }));
        }
    }
    Ok(None)
}
