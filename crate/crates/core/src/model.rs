//! Possibility correspondences over a state space.

use crate::error::{Error, Result};
use crate::space::{Event, StateSpace};

/// A state space together with a possibility correspondence `P`.
///
/// `P(ω)` is the set of states the agent considers possible when `ω`
/// obtains. Empty images are legal and mark the states at which the agent
/// is unaware.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    space: StateSpace,
    images: Vec<Event>,
}

impl Model {
    /// Builds a model from one image per state, in declaration order.
    pub fn new(space: StateSpace, images: Vec<Event>) -> Result<Self> {
        if images.len() != space.size() {
            return Err(Error::NotTotal {
                expected: space.size(),
                found: images.len(),
            });
        }
        for &image in &images {
            space.check(image)?;
        }
        Ok(Model { space, images })
    }

    /// Builds a model from labels and member lists.
    ///
    /// ```
    /// use unaware::Model;
    ///
    /// let m = Model::from_sets(&["a", "b"], &[&["a"], &[]]).unwrap();
    /// assert!(m.image(1).is_empty());
    /// ```
    pub fn from_sets(labels: &[&str], images: &[&[&str]]) -> Result<Self> {
        let space = StateSpace::new(labels.iter().copied())?;
        let images = images
            .iter()
            .map(|members| space.event(members))
            .collect::<Result<Vec<_>>>()?;
        Model::new(space, images)
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn size(&self) -> usize {
        self.space.size()
    }

    /// `P(ω)` for the state at `index`.
    pub fn image(&self, index: usize) -> Event {
        self.images[index]
    }

    pub fn images(&self) -> &[Event] {
        &self.images
    }
}

/// Structural flags of a correspondence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorrespondenceClass {
    /// `ω ∈ P(ω)` for every state.
    pub reflexive: bool,
    /// Reflexive, and `P(ω) = P(ω′)` whenever `ω′ ∈ P(ω)`.
    pub partitional: bool,
    /// Some state has `P(ω) = ∅`.
    pub has_empty_image: bool,
}

pub fn classify_correspondence(model: &Model) -> CorrespondenceClass {
    let images = model.images();
    let reflexive = images.iter().enumerate().all(|(i, p)| p.contains(i));
    let partitional = reflexive && images.iter().all(|p| p.iter().all(|j| images[j] == *p));
    let has_empty_image = images.iter().any(|p| p.is_empty());
    CorrespondenceClass {
        reflexive,
        partitional,
        has_empty_image,
    }
}

/// Reference models used throughout the tests and the guide.
pub mod fixtures {
    use super::Model;
    use crate::space::{Event, StateSpace};

    /// Ω = {a,b,c} with P(a) = {a}, P(b) = {b}, P(c) = Ω.
    pub fn three_state() -> Model {
        Model::from_sets(&["a", "b", "c"], &[&["a"], &["b"], &["a", "b", "c"]]).unwrap()
    }

    /// Ω = {a,b,c,d} with P(a) = {a}, P(b) = {b}, P(c) = ∅, P(d) = Ω.
    pub fn four_state() -> Model {
        Model::from_sets(
            &["a", "b", "c", "d"],
            &[&["a"], &["b"], &[], &["a", "b", "c", "d"]],
        )
        .unwrap()
    }

    /// The finest partition: P(ω) = {ω}.
    pub fn identity(n: usize) -> Model {
        let space = StateSpace::numbered(n).unwrap();
        let images = (0..n).map(|i| Event::singleton(n, i)).collect();
        Model::new(space, images).unwrap()
    }

    /// Every image empty.
    pub fn all_empty(n: usize) -> Model {
        let space = StateSpace::numbered(n).unwrap();
        Model::new(space, vec![Event::empty(n); n]).unwrap()
    }
}
