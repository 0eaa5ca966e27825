//! Formula language: AST, text parser, renderer, and negation normal form.
//!
//! Surface syntax, tightest-binding first:
//!
//! ```text
//! A^        dual (postfix)          !A  ?A   exponentials (prefix)
//! A * B     multiplicative and      A | B    multiplicative or
//! A & B     additive and            A + B    additive or
//! A -o B    implication (right associative)
//! 1  0  T  F                        constants
//! ```
//!
//! `*`/`|` share a precedence level, as do `&`/`+`; chaining the two
//! operators of one level without parentheses is a syntax error, so
//! `A & B + C` must be written `(A & B) + C` or `A & (B + C)`.

mod nnf;
mod parse;
mod render;

pub use parse::{parse, parse_formula_list, ParseError, ParseErrorKind};

use crate::tv::Constant;

/// Formula over atoms, duals, the four binary connectives, implication,
/// the two exponentials, and the four constants.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(String),
    Dual(Box<Formula>),
    Tensor(Box<Formula>, Box<Formula>),
    Par(Box<Formula>, Box<Formula>),
    With(Box<Formula>, Box<Formula>),
    Plus(Box<Formula>, Box<Formula>),
    Lollipop(Box<Formula>, Box<Formula>),
    Bang(Box<Formula>),
    Quest(Box<Formula>),
    Top,
    Zero,
    One,
    Bottom,
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        let name = name.into();
        debug_assert!(is_valid_atom_name(&name), "invalid atom name `{name}`");
        Formula::Atom(name)
    }

    pub fn constant(c: Constant) -> Formula {
        match c {
            Constant::Top => Formula::Top,
            Constant::Zero => Formula::Zero,
            Constant::One => Formula::One,
            Constant::Bottom => Formula::Bottom,
        }
    }

    pub fn dual(self) -> Formula {
        Formula::Dual(Box::new(self))
    }

    pub fn tensor(self, other: Formula) -> Formula {
        Formula::Tensor(Box::new(self), Box::new(other))
    }

    pub fn par(self, other: Formula) -> Formula {
        Formula::Par(Box::new(self), Box::new(other))
    }

    pub fn with(self, other: Formula) -> Formula {
        Formula::With(Box::new(self), Box::new(other))
    }

    pub fn plus(self, other: Formula) -> Formula {
        Formula::Plus(Box::new(self), Box::new(other))
    }

    pub fn lollipop(self, other: Formula) -> Formula {
        Formula::Lollipop(Box::new(self), Box::new(other))
    }

    pub fn bang(self) -> Formula {
        Formula::Bang(Box::new(self))
    }

    pub fn quest(self) -> Formula {
        Formula::Quest(Box::new(self))
    }

    /// Atom names occurring anywhere in the formula, in first-seen order.
    pub fn atoms(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Formula::Atom(name) => {
                if !out.contains(&name.as_str()) {
                    out.push(name);
                }
            }
            Formula::Dual(x) | Formula::Bang(x) | Formula::Quest(x) => x.collect_atoms(out),
            Formula::Tensor(l, r)
            | Formula::Par(l, r)
            | Formula::With(l, r)
            | Formula::Plus(l, r)
            | Formula::Lollipop(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            Formula::Top | Formula::Zero | Formula::One | Formula::Bottom => {}
        }
    }
}

/// Atom names match `[A-Za-z][A-Za-z0-9_]*`, except the constant names
/// `T` and `F`, which the grammar reserves.
pub fn is_valid_atom_name(name: &str) -> bool {
    if name == "T" || name == "F" {
        return false;
    }
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
