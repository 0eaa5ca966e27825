//! Formula evaluation over an environment of atom bindings.
//!
//! `&`/`+` evaluate through the additive (max-overlap) connectives,
//! `*`/`|` through the multiplicative (independence) connectives, `^`
//! through negation, `!`/`?` through the exponentials, and `A -o B`
//! through its definitional expansion `A^ | B`.
//!
//! Environments also load from a line-oriented text format:
//!
//! ```text
//! # comment
//! universe 100
//! rainy 0.5 20
//! windy 0.3 inf
//! ```

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::formula::{is_valid_atom_name, Formula};
use crate::tv::{Constant, Count, TruthValue, UniverseConfig};

/// Immutable map from atom names to truth values inside a fixed universe.
#[derive(Debug, Clone, PartialEq)]
pub struct Environment {
    universe: UniverseConfig,
    bindings: BTreeMap<String, TruthValue>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BindError {
    #[error("`{0}` is not a valid atom name")]
    InvalidAtomName(String),
    #[error("count {count} exceeds the universe size {universe}")]
    CountExceedsUniverse { count: f64, universe: f64 },
    #[error("atom `{0}` is already bound")]
    DuplicateAtom(String),
}

impl Environment {
    pub fn new(universe: UniverseConfig) -> Environment {
        Environment {
            universe,
            bindings: BTreeMap::new(),
        }
    }

    /// Builds an environment from `(name, value)` pairs.
    pub fn from_bindings<'a>(
        universe: UniverseConfig,
        bindings: impl IntoIterator<Item = (&'a str, TruthValue)>,
    ) -> Result<Environment, BindError> {
        let mut env = Environment::new(universe);
        for (name, value) in bindings {
            env.bind(name, value)?;
        }
        Ok(env)
    }

    /// Binds an atom. Finite counts must not exceed the universe size.
    pub fn bind(&mut self, name: &str, value: TruthValue) -> Result<(), BindError> {
        if !is_valid_atom_name(name) {
            return Err(BindError::InvalidAtomName(name.to_string()));
        }
        if let Count::Finite(count) = value.count() {
            if count > self.universe.size() {
                return Err(BindError::CountExceedsUniverse {
                    count,
                    universe: self.universe.size(),
                });
            }
        }
        if self.bindings.contains_key(name) {
            return Err(BindError::DuplicateAtom(name.to_string()));
        }
        self.bindings.insert(name.to_string(), value);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<TruthValue> {
        self.bindings.get(name).copied()
    }

    pub fn universe(&self) -> UniverseConfig {
        self.universe
    }

    pub fn bindings(&self) -> impl Iterator<Item = (&str, TruthValue)> {
        self.bindings.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// Parses the environment text format: a `universe <N>` line followed
    /// by `<atom> <strength> <count>` lines, where count is a
    /// non-negative decimal or `inf`. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Environment, EnvParseError> {
        let mut env: Option<Environment> = None;
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            last_line = line;
            let content = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let content = content.trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            match &mut env {
                None => {
                    if fields.len() != 2 || fields[0] != "universe" {
                        return Err(EnvParseError {
                            line,
                            kind: EnvParseErrorKind::ExpectedUniverse,
                        });
                    }
                    let size: f64 = fields[1].parse().map_err(|_| EnvParseError {
                        line,
                        kind: EnvParseErrorKind::InvalidUniverse(fields[1].to_string()),
                    })?;
                    if !(size.is_finite() && size > 0.0) {
                        return Err(EnvParseError {
                            line,
                            kind: EnvParseErrorKind::InvalidUniverse(fields[1].to_string()),
                        });
                    }
                    env = Some(Environment::new(UniverseConfig::new(size)));
                }
                Some(env) => {
                    if fields.len() != 3 {
                        return Err(EnvParseError {
                            line,
                            kind: EnvParseErrorKind::MalformedBinding,
                        });
                    }
                    let strength: f64 = fields[1].parse().map_err(|_| EnvParseError {
                        line,
                        kind: EnvParseErrorKind::InvalidStrength(fields[1].to_string()),
                    })?;
                    if !(0.0..=1.0).contains(&strength) {
                        return Err(EnvParseError {
                            line,
                            kind: EnvParseErrorKind::InvalidStrength(fields[1].to_string()),
                        });
                    }
                    let count = if fields[2] == "inf" {
                        Count::Infinite
                    } else {
                        let value: f64 = fields[2].parse().map_err(|_| EnvParseError {
                            line,
                            kind: EnvParseErrorKind::InvalidCount(fields[2].to_string()),
                        })?;
                        if !(value.is_finite() && value >= 0.0) {
                            return Err(EnvParseError {
                                line,
                                kind: EnvParseErrorKind::InvalidCount(fields[2].to_string()),
                            });
                        }
                        Count::finite(value)
                    };
                    env.bind(fields[0], TruthValue::new(strength, count))
                        .map_err(|e| EnvParseError {
                            line,
                            kind: EnvParseErrorKind::Bind(e),
                        })?;
                }
            }
        }
        env.ok_or(EnvParseError {
            line: last_line + 1,
            kind: EnvParseErrorKind::MissingUniverse,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {kind}")]
pub struct EnvParseError {
    pub line: usize,
    pub kind: EnvParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnvParseErrorKind {
    #[error("expected `universe <N>` before any binding")]
    ExpectedUniverse,
    #[error("invalid universe size `{0}`")]
    InvalidUniverse(String),
    #[error("expected `<atom> <strength> <count>`")]
    MalformedBinding,
    #[error("invalid strength `{0}` (expected a number in [0, 1])")]
    InvalidStrength(String),
    #[error("invalid count `{0}` (expected a non-negative number or `inf`)")]
    InvalidCount(String),
    #[error(transparent)]
    Bind(#[from] BindError),
    #[error("no `universe <N>` line found")]
    MissingUniverse,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound atom `{0}`")]
    UnboundAtom(String),
}

/// Evaluates a formula to a truth value. Total and deterministic on
/// formulas whose atoms are all bound.
pub fn evaluate(formula: &Formula, env: &Environment) -> Result<TruthValue, EvalError> {
    let universe = env.universe();
    Ok(match formula {
        Formula::Atom(name) => env
            .get(name)
            .ok_or_else(|| EvalError::UnboundAtom(name.clone()))?,
        Formula::Dual(x) => evaluate(x, env)?.negate(),
        Formula::Tensor(l, r) => evaluate(l, env)?.and_multiplicative(evaluate(r, env)?, universe),
        Formula::Par(l, r) => evaluate(l, env)?.or_multiplicative(evaluate(r, env)?, universe),
        Formula::With(l, r) => evaluate(l, env)?.and_additive(evaluate(r, env)?),
        Formula::Plus(l, r) => evaluate(l, env)?.or_additive(evaluate(r, env)?),
        // A -o B evaluates through its expansion A^ | B.
        Formula::Lollipop(l, r) => evaluate(l, env)?
            .negate()
            .or_multiplicative(evaluate(r, env)?, universe),
        Formula::Bang(x) => evaluate(x, env)?.bang(),
        Formula::Quest(x) => evaluate(x, env)?.quest(),
        Formula::Top => Constant::Top.truth_value(universe),
        Formula::Zero => Constant::Zero.truth_value(universe),
        Formula::One => Constant::One.truth_value(universe),
        Formula::Bottom => Constant::Bottom.truth_value(universe),
    })
}

/// A formula tree with the truth value of every subformula attached.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalTrace {
    pub formula: Formula,
    pub value: TruthValue,
    pub children: Vec<EvalTrace>,
}

/// Like [`evaluate`], but keeps the value of every subformula for display.
pub fn evaluate_report(formula: &Formula, env: &Environment) -> Result<EvalTrace, EvalError> {
    let children = match formula {
        Formula::Atom(_) | Formula::Top | Formula::Zero | Formula::One | Formula::Bottom => {
            Vec::new()
        }
        Formula::Dual(x) | Formula::Bang(x) | Formula::Quest(x) => {
            vec![evaluate_report(x, env)?]
        }
        Formula::Tensor(l, r)
        | Formula::Par(l, r)
        | Formula::With(l, r)
        | Formula::Plus(l, r)
        | Formula::Lollipop(l, r) => {
            vec![evaluate_report(l, env)?, evaluate_report(r, env)?]
        }
    };
    Ok(EvalTrace {
        formula: formula.clone(),
        value: evaluate(formula, env)?,
        children,
    })
}

impl EvalTrace {
    fn write_indented(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        writeln!(
            f,
            "{:indent$}{} = {}",
            "",
            self.formula,
            self.value,
            indent = depth * 2
        )?;
        for child in &self.children {
            child.write_indented(f, depth + 1)?;
        }
        Ok(())
    }
}

impl fmt::Display for EvalTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, 0)
    }
}


#[cfg(test)]
pub(crate) mod nnf_idempotence {
    use crate::formula::Formula;
    use proptest::prelude::*;

    pub(crate) fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            "[a-e]".prop_map(Formula::Atom),
            Just(Formula::Top),
            Just(Formula::Zero),
            Just(Formula::One),
            Just(Formula::Bottom),
        ];
        leaf.prop_recursive(5, 64, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(|f| f.dual()),
                inner.clone().prop_map(|f| f.bang()),
                inner.clone().prop_map(|f| f.quest()),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| l.tensor(r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| l.par(r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| l.with(r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| l.plus(r)),
                (inner.clone(), inner).prop_map(|(l, r)| l.lollipop(r)),
            ]
        })
    }

    proptest! {
        #[test]
        fn nnf_is_idempotent_and_normal(f in arb_formula()) {
            let once = f.nnf();
            prop_assert!(once.is_nnf());
            prop_assert_eq!(once.nnf(), once.clone());
        }

        #[test]
        fn parse_render_round_trip(f in arb_formula()) {
            let text = f.render();
            prop_assert_eq!(crate::formula::parse(&text).unwrap(), f);
        }
    }
}
