//! Proof checker for one-sided sequents with an evidence ledger.
//!
//! Sequents are multisets of formulas in negation normal form, read as
//! the multiplicative disjunction of their members; formulas are
//! normalized on ingestion. Proofs are rule trees whose conclusions the
//! checker computes bottom-up, so a proof file never states sequents —
//! only rules, their arguments, and premises.
//!
//! Linearity is the point: the multiplicative rules split their context
//! exactly, contraction and weakening are licensed only on `?`-formulas,
//! and promotion demands an all-`?` context. A successful check returns
//! an [`EvidenceLedger`] recording how many evidence tokens each atom's
//! axiom links consumed and every contraction that made a `?`-formula's
//! evidence available more than once.
//!
//! Exact conservation — per-atom tokens equal to the paired atom
//! occurrences of the conclusion — holds in the cut-free multiplicative
//! fragment. Cuts consume evidence internally (that is what composition
//! means here), additive branching shares one context between two
//! subproofs, and `+`/`T` introductions discard a side; all three leave
//! token counts that exceed what the conclusion shows. The ledger reports
//! consumption faithfully rather than forcing the identity.

mod check;
mod eta;
pub mod golden;
mod ledger;
mod parse;
mod proof;
mod sequent;

pub use check::{check, tv_annotate, AnnotatedProof, CheckedProof, Derivation, Violation};
pub use eta::identity_proof;
pub use ledger::{EvidenceLedger, ReuseEvent};
pub use parse::{parse_proof, ProofParseError, ProofParseErrorKind};
pub use proof::{ProofNode, RuleApp, RuleTag};
pub use sequent::{Sequent, SequentParseError};
