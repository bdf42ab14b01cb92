//! Proper interval orderings: LexBFS sweeps, the umbrella property and the
//! conversion of an ordering into a closed labeling.

mod lexbfs;
mod umbrella;

pub use lexbfs::{lexbfs, lexbfs_plus};
pub use umbrella::{umbrella_check, UmbrellaViolation};

use crate::error::{Error, Result};
use crate::graph::{apply_labeling, Graph, LabeledGraph, VertexOrdering};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecognitionResult {
    /// A proper interval ordering of the whole graph.
    Ordering(VertexOrdering),
    /// The graph is not a proper interval graph. `ordering` is the final
    /// sweep and `violation` a triple in it breaking the umbrella property.
    Violation {
        ordering: VertexOrdering,
        violation: UmbrellaViolation,
    },
}

impl RecognitionResult {
    pub fn ordering(&self) -> Option<&VertexOrdering> {
        match self {
            RecognitionResult::Ordering(o) => Some(o),
            RecognitionResult::Violation { .. } => None,
        }
    }

    pub fn violation(&self) -> Option<&UmbrellaViolation> {
        match self {
            RecognitionResult::Ordering(_) => None,
            RecognitionResult::Violation { violation, .. } => Some(violation),
        }
    }

    pub fn is_proper_interval(&self) -> bool {
        matches!(self, RecognitionResult::Ordering(_))
    }
}

/// Decides whether `g` is a proper interval graph with three LexBFS sweeps
/// (plain, then two `+` sweeps) followed by an umbrella check of the last.
///
/// LexBFS finishes one component before starting the next, and each `+`
/// sweep reverses the component order, so after the third sweep the
/// components appear in order of smallest vertex and each is ordered
/// exactly as a sweep run on that component alone would order it.
pub fn recognize_proper_interval(g: &Graph) -> RecognitionResult {
    let first = lexbfs(g, &VertexOrdering::identity(g.n()));
    let second = lexbfs_plus(g, &first);
    let third = lexbfs_plus(g, &second);
    match umbrella_check(g, &third) {
        Ok(()) => RecognitionResult::Ordering(third),
        Err(violation) => RecognitionResult::Violation {
            ordering: third,
            violation,
        },
    }
}

/// Relabels `g` along a proper interval ordering; the result is closed
/// under its new labels.
pub fn ordering_to_closed_labeling(g: &Graph, sigma: &VertexOrdering) -> Result<LabeledGraph> {
    if sigma.len() != g.n() as usize {
        return Err(Error::NotAPermutation {
            n: g.n(),
            reason: format!("ordering has {} entries", sigma.len()),
        });
    }
    umbrella_check(g, sigma).map_err(Error::Umbrella)?;
    let h = apply_labeling(g, sigma)?;
    debug_assert!(crate::closedness::is_closed_labeling(&h).is_ok());
    LabeledGraph::new(h, sigma.clone())
}
