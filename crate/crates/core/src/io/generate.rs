//! Seeded random models.
//!
//! Generation is a pure function of [`GeneratorParams`]. The draw order is
//! fixed so that the same parameters produce the same model everywhere:
//!
//! * `general`: for each state in order, one draw decides whether the image
//!   is empty (probability `p_empty`); otherwise one draw per state, in
//!   order, decides membership (probability `density`).
//! * `reflexive`: as `general` with `p_empty = 0`, then `ω` is added to
//!   `P(ω)`.
//! * `partitional`: for each state in order, one draw picks a block id in
//!   `0..⌈n/2⌉`; `P(ω)` is the block of `ω`.
//!
//! States are labelled `s0`, `s1`, ...

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::Model;
use crate::rng::Stream;
use crate::space::{Event, StateSpace, MAX_STATES};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    General,
    Partitional,
    Reflexive,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::General => "general",
            Family::Partitional => "partitional",
            Family::Reflexive => "reflexive",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "general" => Ok(Family::General),
            "partitional" => Ok(Family::Partitional),
            "reflexive" => Ok(Family::Reflexive),
            _ => Err(format!(
                "unknown family {s:?} (expected general, partitional or reflexive)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorParams {
    pub n_states: usize,
    /// Probability that a state belongs to a given image.
    pub density: f64,
    /// Probability that an image is forced empty. Ignored unless `General`.
    pub p_empty: f64,
    pub family: Family,
    pub seed: u64,
}

impl GeneratorParams {
    pub fn new(n_states: usize, family: Family, seed: u64) -> Self {
        GeneratorParams {
            n_states,
            density: 0.5,
            p_empty: 0.0,
            family,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=MAX_STATES).contains(&self.n_states) {
            return Err(Error::InvalidParams(format!(
                "n_states must be in 1..={MAX_STATES}, got {}",
                self.n_states
            )));
        }
        for (name, p) in [("density", self.density), ("p_empty", self.p_empty)] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParams(format!(
                    "{name} must be in [0, 1], got {p}"
                )));
            }
        }
        Ok(())
    }
}

pub fn generate_model(params: &GeneratorParams) -> Result<Model> {
    params.validate()?;
    let n = params.n_states;
    let mut rng = Stream::new(params.seed);
    let images: Vec<Event> = match params.family {
        Family::General | Family::Reflexive => {
            let p_empty = if params.family == Family::General {
                params.p_empty
            } else {
                0.0
            };
            (0..n)
                .map(|i| {
                    let mut image = Event::empty(n);
                    if rng.chance(p_empty) {
                        return image;
                    }
                    for j in 0..n {
                        if rng.chance(params.density) {
                            image = image.with(j);
                        }
                    }
                    if params.family == Family::Reflexive {
                        image = image.with(i);
                    }
                    image
                })
                .collect()
        }
        Family::Partitional => {
            let blocks = n.div_ceil(2) as u64;
            let ids: Vec<u64> = (0..n).map(|_| rng.below(blocks)).collect();
            ids.iter()
                .map(|id| {
                    ids.iter()
                        .enumerate()
                        .filter(|(_, other)| *other == id)
                        .fold(Event::empty(n), |e, (j, _)| e.with(j))
                })
                .collect()
        }
    };
    Model::new(StateSpace::numbered(n)?, images)
}
