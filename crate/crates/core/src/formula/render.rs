//! Canonical text rendering with minimal parentheses.
//!
//! `parse(render(f))` reproduces `f` structurally: parentheses appear
//! exactly where the grammar's precedence and the same-level mixing rule
//! would otherwise reshape the tree.

use std::fmt;
use std::mem::discriminant;

use super::Formula;

/// Binding tightness; larger binds tighter.
fn prec(f: &Formula) -> u8 {
    match f {
        Formula::Atom(_) | Formula::Top | Formula::Zero | Formula::One | Formula::Bottom => 4,
        Formula::Dual(_) | Formula::Bang(_) | Formula::Quest(_) => 3,
        Formula::Tensor(_, _) | Formula::Par(_, _) => 2,
        Formula::With(_, _) | Formula::Plus(_, _) => 1,
        Formula::Lollipop(_, _) => 0,
    }
}

fn write_child(f: &Formula, parens: bool, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if parens {
        write!(out, "(")?;
        write_formula(f, out)?;
        write!(out, ")")
    } else {
        write_formula(f, out)
    }
}

fn write_binary(
    node: &Formula,
    l: &Formula,
    op: &str,
    r: &Formula,
    level: u8,
    out: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    // Left-associative: an equal-precedence left child of the same
    // operator re-parses identically; a different operator at the same
    // level must be parenthesized (the grammar forbids mixing).
    let left_parens =
        prec(l) < level || (prec(l) == level && discriminant(l) != discriminant(node));
    let right_parens = prec(r) <= level;
    write_child(l, left_parens, out)?;
    write!(out, " {op} ")?;
    write_child(r, right_parens, out)
}

fn write_formula(f: &Formula, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    match f {
        Formula::Atom(name) => write!(out, "{name}"),
        Formula::Top => write!(out, "T"),
        Formula::Bottom => write!(out, "F"),
        Formula::One => write!(out, "1"),
        Formula::Zero => write!(out, "0"),
        Formula::Dual(x) => {
            // `^` binds tighter than the prefixes, so `(!A)^` needs parens
            // while `!A^` means the dual is applied first.
            let parens = prec(x) < 3 || matches!(**x, Formula::Bang(_) | Formula::Quest(_));
            write_child(x, parens, out)?;
            write!(out, "^")
        }
        Formula::Bang(x) => {
            write!(out, "!")?;
            write_child(x, prec(x) < 3, out)
        }
        Formula::Quest(x) => {
            write!(out, "?")?;
            write_child(x, prec(x) < 3, out)
        }
        Formula::Tensor(l, r) => write_binary(f, l, "*", r, 2, out),
        Formula::Par(l, r) => write_binary(f, l, "|", r, 2, out),
        Formula::With(l, r) => write_binary(f, l, "&", r, 1, out),
        Formula::Plus(l, r) => write_binary(f, l, "+", r, 1, out),
        Formula::Lollipop(l, r) => {
            write_child(l, prec(l) == 0, out)?;
            write!(out, " -o ")?;
            write_child(r, false, out)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(self, f)
    }
}

impl Formula {
    pub fn render(&self) -> String {
        self.to_string()
    }
}
