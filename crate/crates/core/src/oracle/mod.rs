//! Grounding of truth values in concrete finite observation universes.
//!
//! A [`Grounding`] assigns an atom the set of observations on which it
//! was evaluated and the positive subset. [`exact_eval_conj`] and
//! [`exact_eval_disj`] compute joint strength/count pairs directly from
//! set semantics. [`ground_max_overlap`] builds nested groundings that
//! realize the additive (min/max) connective family; [`mc_independence`]
//! and [`detector_sim`] estimate the multiplicative family by seeded
//! Monte Carlo.
//!
//! The nested construction reproduces `(min p, min n)` / `(max p, max n)`
//! exactly whenever the spec with the larger evaluated set also has the
//! larger-or-equal strength. When the orderings oppose, no assignment of
//! positives can realize both formulas at once — inclusion-exclusion
//! pins `|pos_a| + |pos_b|` while the formulas demand
//! `min(p)·min(n) + max(p)·max(n)` — and the construction instead yields
//! the two values with strengths swapped. See the tests for witnesses.

mod mc;
pub mod rng;

pub use mc::{
    detector_sim, mc_independence, DetectorEstimates, IndependenceEstimates, McError, McEstimate,
};

use std::collections::BTreeSet;

use thiserror::Error;

/// Finite body of potential observations with ids `0..size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Universe {
    size: usize,
}

impl Universe {
    /// Panics unless `size >= 1`.
    pub fn new(size: usize) -> Universe {
        assert!(size >= 1, "universe must contain at least one observation");
        Universe { size }
    }

    pub fn size(self) -> usize {
        self.size
    }
}

/// Per-atom record of which observations were evaluated and which came
/// out positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grounding {
    eval_set: BTreeSet<u32>,
    positive_set: BTreeSet<u32>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GroundingError {
    #[error("positive set is not a subset of the evaluated set")]
    PositivesNotEvaluated,
    #[error("observation id {id} is outside the universe of size {size}")]
    OutsideUniverse { id: u32, size: usize },
    #[error("evaluated-set size {n} exceeds the universe size {size}")]
    SpecTooLarge { n: usize, size: usize },
    #[error("strength {p} over {n} observations does not give a whole number of positives")]
    UnrealizableTally { n: usize, p: f64 },
    #[error("strength {0} is outside [0, 1]")]
    StrengthOutOfRange(f64),
}

impl Grounding {
    pub fn new(
        eval_set: BTreeSet<u32>,
        positive_set: BTreeSet<u32>,
        universe: Universe,
    ) -> Result<Grounding, GroundingError> {
        if let Some(&id) = eval_set.iter().next_back() {
            if id as usize >= universe.size() {
                return Err(GroundingError::OutsideUniverse {
                    id,
                    size: universe.size(),
                });
            }
        }
        if !positive_set.is_subset(&eval_set) {
            return Err(GroundingError::PositivesNotEvaluated);
        }
        Ok(Grounding {
            eval_set,
            positive_set,
        })
    }

    pub fn evaluated(&self) -> &BTreeSet<u32> {
        &self.eval_set
    }

    pub fn positives(&self) -> &BTreeSet<u32> {
        &self.positive_set
    }

    /// Number of observations the atom was evaluated on.
    pub fn count(&self) -> usize {
        self.eval_set.len()
    }

    /// Positive proportion, undefined on an empty evaluated set.
    pub fn strength(&self) -> Option<f64> {
        if self.eval_set.is_empty() {
            None
        } else {
            Some(self.positive_set.len() as f64 / self.eval_set.len() as f64)
        }
    }
}

/// Joint evaluation of two groundings: the observation count, and the
/// positive proportion when any observations support it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointEval {
    pub count: usize,
    pub strength: Option<f64>,
}

/// Conjunction over shared evidence: observations evaluated for both
/// atoms, positive when positive for both.
pub fn exact_eval_conj(a: &Grounding, b: &Grounding) -> JointEval {
    let shared: Vec<u32> = a.eval_set.intersection(&b.eval_set).copied().collect();
    if shared.is_empty() {
        return JointEval {
            count: 0,
            strength: None,
        };
    }
    let positive = shared
        .iter()
        .filter(|o| a.positive_set.contains(o) && b.positive_set.contains(o))
        .count();
    JointEval {
        count: shared.len(),
        strength: Some(positive as f64 / shared.len() as f64),
    }
}

/// Disjunction over pooled evidence: observations evaluated for either
/// atom, positive when positive for at least one of the properties they
/// were actually evaluated on.
pub fn exact_eval_disj(a: &Grounding, b: &Grounding) -> JointEval {
    let union: Vec<u32> = a.eval_set.union(&b.eval_set).copied().collect();
    if union.is_empty() {
        return JointEval {
            count: 0,
            strength: None,
        };
    }
    let positive = union
        .iter()
        .filter(|o| a.positive_set.contains(o) || b.positive_set.contains(o))
        .count();
    JointEval {
        count: union.len(),
        strength: Some(positive as f64 / union.len() as f64),
    }
}

fn realize_tally(n: usize, p: f64) -> Result<usize, GroundingError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GroundingError::StrengthOutOfRange(p));
    }
    let exact = p * n as f64;
    let k = exact.round();
    if (exact - k).abs() > 1e-9 {
        return Err(GroundingError::UnrealizableTally { n, p });
    }
    Ok(k as usize)
}

/// Builds groundings whose evaluated sets nest maximally: each spec
/// `(n, p)` becomes the id prefix `0..n` with positives on the prefix
/// `0..p*n`, so both the evaluated sets and the positive sets overlap as
/// much as their sizes allow. Results are in input order.
pub fn ground_max_overlap(
    specs: &[(usize, f64)],
    universe: Universe,
) -> Result<Vec<Grounding>, GroundingError> {
    specs
        .iter()
        .map(|&(n, p)| {
            if n > universe.size() {
                return Err(GroundingError::SpecTooLarge {
                    n,
                    size: universe.size(),
                });
            }
            let k = realize_tally(n, p)?;
            Ok(Grounding {
                eval_set: (0..n as u32).collect(),
                positive_set: (0..k as u32).collect(),
            })
        })
        .collect()
}
