//! linlog: a logic kernel for uncertain reasoning over counted evidence.
//!
//! Propositions carry `(strength, count)` truth values: the proportion of
//! positive observations and the number of observations behind it. Two
//! connective families combine them under opposite assumptions about how
//! the underlying evidence sets relate:
//!
//! - the **additive** family (`&`, `+`) assumes maximal overlap of the
//!   evidence sets and propagates min/max on both components;
//! - the **multiplicative** family (`*`, `|`) assumes the evidence sets are
//!   independent samples from a finite universe and propagates
//!   product/probabilistic-sum strengths with universe-normalized counts.
//!
//! On top of the algebra sit a formula language ([`formula`]), an
//! evaluator ([`eval`]), a sequent proof checker that enforces linear use
//! of evidence and accounts for every consumed token ([`kernel`]), and
//! oracles that ground both families in concrete observation universes
//! ([`oracle`]).

pub mod eval;
pub mod formula;
pub mod kernel;
pub mod oracle;
pub mod selftest;
pub mod tv;

pub use eval::{evaluate, evaluate_report, Environment, EvalError, EvalTrace};
pub use formula::Formula;
pub use tv::{Constant, Count, TruthValue, UniverseConfig};
