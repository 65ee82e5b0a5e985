//! Recognizing space-form groups from their Cayley tables.

mod classify;
mod metacyclic;
mod necessary;

use std::fmt;

pub use classify::{classify, classify_with, invariants_equal, Classification, ClassificationResult, ClassifyOptions};
pub use metacyclic::{metacyclic_decompose, metacyclic_decompose_subgroup, MetacyclicDecomposition};
pub use necessary::necessary_conditions;

use crate::builders::Violation;

/// Why a group was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RejectionReason {
    /// More than one element of order 2.
    MultipleInvolutions { count: usize },
    /// A noncyclic subgroup of order `p q` for primes `p`, `q`.
    NoncyclicPq { order: usize },
    /// A noncyclic Sylow `p`-subgroup for odd `p`.
    NoncyclicSylow { p: usize },
    /// The Sylow 2-subgroup is neither cyclic nor generalized quaternion.
    SylowTwoShape,
    /// `G/O(G)` matches none of the six types.
    QuotientShape { order: usize },
    /// The extracted invariants fail the tuple constraints.
    StructureConditions { violations: Vec<Violation> },
    /// The group built from the extracted tuple is not isomorphic to the input.
    ParanoidMismatch,
}

impl RejectionReason {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            RejectionReason::MultipleInvolutions { .. } => "multiple-involutions",
            RejectionReason::NoncyclicPq { .. } => "noncyclic-pq",
            RejectionReason::NoncyclicSylow { .. } => "noncyclic-sylow",
            RejectionReason::SylowTwoShape => "sylow-2-shape",
            RejectionReason::QuotientShape { .. } => "quotient-shape",
            RejectionReason::StructureConditions { .. } => "structure-conditions",
            RejectionReason::ParanoidMismatch => "paranoid-mismatch",
        }
    }
}

/// A failed test together with the elements that witness the failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub reason: RejectionReason,
    pub witnesses: Vec<usize>,
}

impl Rejection {
    pub fn new(reason: RejectionReason, witnesses: Vec<usize>) -> Rejection {
        Rejection { reason, witnesses }
    }
}

fn count_word(n: usize) -> String {
    const WORDS: [&str; 11] = ["zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten"];
    WORDS.get(n).map(|w| w.to_string()).unwrap_or_else(|| n.to_string())
}

fn id_list(ids: &[usize]) -> String {
    ids.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids = id_list(&self.witnesses);
        match &self.reason {
            RejectionReason::MultipleInvolutions { count } => {
                write!(f, "{} involutions: ids {ids}", count_word(*count))
            }
            RejectionReason::NoncyclicPq { order } => {
                write!(f, "noncyclic subgroup of order {order}: generated by ids {ids}")
            }
            RejectionReason::NoncyclicSylow { p } => {
                write!(f, "noncyclic Sylow {p}-subgroup: generated by ids {ids}")
            }
            RejectionReason::SylowTwoShape => {
                write!(f, "Sylow 2-subgroup neither cyclic nor quaternionic: generated by ids {ids}")
            }
            RejectionReason::QuotientShape { order } => {
                write!(f, "quotient shape: G/O(G) of order {order} matches no type")
            }
            RejectionReason::StructureConditions { violations } => {
                let v: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
                write!(f, "structure conditions: {}", v.join("; "))
            }
            RejectionReason::ParanoidMismatch => f.write_str("paranoid rebuild is not isomorphic to the input"),
        }
    }
}
