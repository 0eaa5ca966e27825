//! Evidence accounting for checked proofs.

use std::collections::BTreeMap;
use std::fmt;

use crate::formula::Formula;

/// A contraction that made a `?`-formula's evidence available twice.
#[derive(Debug, Clone, PartialEq)]
pub struct ReuseEvent {
    /// The contracted `?`-formula.
    pub formula: Formula,
    /// Premise indices from the root to the contraction node.
    pub path: Vec<usize>,
}

/// Per-atom account of evidence consumed by a checked proof: one token
/// per axiom leaf mentioning the atom, plus every contraction event.
/// Merging ledgers is associative and commutative, so subtree ledgers
/// can be combined in any order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EvidenceLedger {
    tokens: BTreeMap<String, u64>,
    reuse_events: Vec<ReuseEvent>,
}

impl EvidenceLedger {
    pub(crate) fn record_axiom(&mut self, atom: &str) {
        *self.tokens.entry(atom.to_string()).or_insert(0) += 1;
    }

    pub(crate) fn record_reuse(&mut self, formula: Formula, path: Vec<usize>) {
        self.reuse_events.push(ReuseEvent { formula, path });
    }

    pub(crate) fn absorb(&mut self, other: EvidenceLedger) {
        for (atom, n) in other.tokens {
            *self.tokens.entry(atom).or_insert(0) += n;
        }
        self.reuse_events.extend(other.reuse_events);
    }

    /// Number of axiom leaves that consumed this atom's evidence.
    pub fn tokens_consumed(&self, atom: &str) -> u64 {
        self.tokens.get(atom).copied().unwrap_or(0)
    }

    pub fn tokens(&self) -> impl Iterator<Item = (&str, u64)> {
        self.tokens.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn reuse_events(&self) -> &[ReuseEvent] {
        &self.reuse_events
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty() && self.reuse_events.is_empty()
    }
}

pub(crate) fn format_path(path: &[usize]) -> String {
    if path.is_empty() {
        "root".to_string()
    } else {
        let mut s = String::from("root");
        for i in path {
            s.push('.');
            s.push_str(&i.to_string());
        }
        s
    }
}

impl fmt::Display for EvidenceLedger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            writeln!(f, "consumed: none")?;
        } else {
            write!(f, "consumed:")?;
            for (atom, n) in &self.tokens {
                write!(f, " {atom} x{n}")?;
            }
            writeln!(f)?;
        }
        for event in &self.reuse_events {
            writeln!(
                f,
                "reused: {} at {}",
                event.formula,
                format_path(&event.path)
            )?;
        }
        Ok(())
    }
}
