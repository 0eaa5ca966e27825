//! Multiset sequents and their text form.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::formula::{self, Formula};

/// One-sided sequent: a multiset of formulas in negation normal form.
/// Equality is multiset equality; member order is kept only for display.
#[derive(Debug, Clone, Eq)]
pub struct Sequent(Vec<Formula>);

impl Sequent {
    /// Builds a sequent, normalizing every member to negation normal form.
    pub fn new(formulas: impl IntoIterator<Item = Formula>) -> Sequent {
        Sequent(formulas.into_iter().map(|f| f.nnf()).collect())
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Occurrence counts per formula.
    pub fn counts(&self) -> BTreeMap<&Formula, usize> {
        let mut map = BTreeMap::new();
        for f in &self.0 {
            *map.entry(f).or_insert(0) += 1;
        }
        map
    }

    /// Parses `Γ |- Δ` or a bare right-hand side `Δ`, comma-separated.
    /// Left-hand formulas move to the right dualized, so `A, B |- C`
    /// denotes `⊢ A^, B^, C`.
    pub fn parse(text: &str) -> Result<Sequent, SequentParseError> {
        let (left, right) = match text.find("|-") {
            Some(pos) => {
                let rest = &text[pos + 2..];
                if rest.contains("|-") {
                    return Err(SequentParseError::MultipleTurnstiles);
                }
                (&text[..pos], rest)
            }
            None => ("", text),
        };
        let mut formulas = Vec::new();
        for (side, part) in [("left", left), ("right", right)] {
            for (index, item) in split_nonempty(part).into_iter().enumerate() {
                let f = formula::parse(item).map_err(|source| SequentParseError::Formula {
                    side,
                    index: index + 1,
                    source,
                })?;
                formulas.push(if side == "left" { f.dual() } else { f });
            }
        }
        if formulas.is_empty() {
            return Err(SequentParseError::Empty);
        }
        Ok(Sequent::new(formulas))
    }
}

fn split_nonempty(side: &str) -> Vec<&str> {
    if side.trim().is_empty() {
        Vec::new()
    } else {
        side.split(',').map(str::trim).collect()
    }
}

impl PartialEq for Sequent {
    fn eq(&self, other: &Sequent) -> bool {
        let mut a = self.0.clone();
        let mut b = other.0.clone();
        a.sort();
        b.sort();
        a == b
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|-")?;
        for (i, formula) in self.0.iter().enumerate() {
            if i == 0 {
                write!(f, " {formula}")?;
            } else {
                write!(f, ", {formula}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SequentParseError {
    #[error("empty sequent")]
    Empty,
    #[error("multiple `|-` separators")]
    MultipleTurnstiles,
    #[error("{side} formula {index}: {source}")]
    Formula {
        side: &'static str,
        index: usize,
        source: formula::ParseError,
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    #[test]
    fn equality_is_multiset_equality() {
        let a = Sequent::new([parse("A").unwrap(), parse("B").unwrap()]);
        let b = Sequent::new([parse("B").unwrap(), parse("A").unwrap()]);
        assert_eq!(a, b);
        let twice = Sequent::new([parse("A").unwrap(), parse("A").unwrap()]);
        assert_ne!(a, twice);
    }

    #[test]
    fn members_normalize_on_ingestion() {
        let s = Sequent::new([parse("A -o B").unwrap()]);
        assert_eq!(s.formulas()[0], parse("A^ | B").unwrap());
    }

    #[test]
    fn two_sided_text_dualizes_the_left() {
        let s = Sequent::parse("(A -o B) * A |- B").unwrap();
        let expected = Sequent::new([parse("((A -o B) * A)^").unwrap(), parse("B").unwrap()]);
        assert_eq!(s, expected);
    }

    #[test]
    fn one_sided_text_and_display() {
        let s = Sequent::parse("A^, A").unwrap();
        assert_eq!(s.to_string(), "|- A^, A");
        assert_eq!(Sequent::parse("|- A^, A").unwrap(), s);
    }

    #[test]
    fn bad_sequent_text_is_rejected() {
        assert_eq!(Sequent::parse("  ").unwrap_err(), SequentParseError::Empty);
        assert_eq!(
            Sequent::parse("A |- B |- C").unwrap_err(),
            SequentParseError::MultipleTurnstiles
        );
        assert!(matches!(
            Sequent::parse("A, |- B").unwrap_err(),
            SequentParseError::Formula {
                side: "left",
                index: 2,
                ..
            }
        ));
    }
}
