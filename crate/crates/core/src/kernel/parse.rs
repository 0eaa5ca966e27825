//! S-expression reader for proof files.
//!
//! ```text
//! proof := "(" rule arg* proof* ")"
//! arg   := "[" formula* "]"      bracketed formula list (greedy split)
//!        | symbol                bare atom name (ax only)
//! ```
//!
//! `;` starts a comment to end of line.

use std::fmt;

use thiserror::Error;

use crate::formula::{self, Formula};

use super::proof::{ProofNode, RuleApp};

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ProofParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ProofParseErrorKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ProofParseErrorKind {
    UnknownRule(String),
    WrongPremises {
        rule: &'static str,
        expected: usize,
        found: usize,
    },
    WrongArguments {
        rule: &'static str,
        expected: &'static str,
        found: usize,
    },
    ExpectedNode,
    UnclosedParen,
    UnclosedBracket,
    UnexpectedCloseParen,
    ExpectedSingleFormula(usize),
    Formula(formula::ParseError),
    TrailingText,
}

impl fmt::Display for ProofParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProofParseErrorKind::UnknownRule(name) => write!(f, "unknown rule `{name}`"),
            ProofParseErrorKind::WrongPremises {
                rule,
                expected,
                found,
            } => {
                write!(
                    f,
                    "rule `{rule}` expects {expected} premise(s), found {found}"
                )
            }
            ProofParseErrorKind::WrongArguments {
                rule,
                expected,
                found,
            } => {
                write!(
                    f,
                    "rule `{rule}` expects {expected}, found {found} argument(s)"
                )
            }
            ProofParseErrorKind::ExpectedNode => write!(f, "expected `(`"),
            ProofParseErrorKind::UnclosedParen => write!(f, "unclosed `(`"),
            ProofParseErrorKind::UnclosedBracket => write!(f, "unclosed `[`"),
            ProofParseErrorKind::UnexpectedCloseParen => write!(f, "unexpected `)`"),
            ProofParseErrorKind::ExpectedSingleFormula(found) => {
                write!(f, "expected exactly one formula in `[...]`, found {found}")
            }
            ProofParseErrorKind::Formula(e) => write!(f, "in formula argument: {e}"),
            ProofParseErrorKind::TrailingText => write!(f, "trailing text after proof"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    /// Raw text between `[` and `]`.
    Bracket(String),
    Symbol(String),
}

#[derive(Debug, Clone, Copy)]
struct Loc {
    line: usize,
    column: usize,
}

fn err(loc: Loc, kind: ProofParseErrorKind) -> ProofParseError {
    ProofParseError {
        line: loc.line,
        column: loc.column,
        kind,
    }
}

fn lex(text: &str) -> Result<Vec<(Loc, Tok)>, ProofParseError> {
    let mut toks = Vec::new();
    let mut line = 1usize;
    let mut column = 0usize;
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        column += 1;
        let loc = Loc { line, column };
        match c {
            '\n' => {
                line += 1;
                column = 0;
            }
            c if c.is_whitespace() => {}
            ';' => {
                for c in chars.by_ref() {
                    if c == '\n' {
                        line += 1;
                        column = 0;
                        break;
                    }
                }
            }
            '(' => toks.push((loc, Tok::LParen)),
            ')' => toks.push((loc, Tok::RParen)),
            '[' => {
                let mut content = String::new();
                let mut closed = false;
                for c in chars.by_ref() {
                    column += 1;
                    if c == '\n' {
                        line += 1;
                        column = 0;
                        content.push(' ');
                    } else if c == ']' {
                        closed = true;
                        break;
                    } else {
                        content.push(c);
                    }
                }
                if !closed {
                    return Err(err(loc, ProofParseErrorKind::UnclosedBracket));
                }
                toks.push((loc, Tok::Bracket(content)));
            }
            _ => {
                let mut sym = String::from(c);
                while let Some(&c) = chars.peek() {
                    if c.is_whitespace() || matches!(c, '(' | ')' | '[' | ']' | ';') {
                        break;
                    }
                    sym.push(c);
                    chars.next();
                    column += 1;
                }
                toks.push((loc, Tok::Symbol(sym)));
            }
        }
    }
    Ok(toks)
}

struct Reader {
    toks: Vec<(Loc, Tok)>,
    pos: usize,
    end: Loc,
}

/// Arguments collected for one node before premises.
enum Arg {
    List(Loc, Vec<Formula>),
    Symbol(Loc, String),
}

impl Reader {
    fn peek(&self) -> Option<&(Loc, Tok)> {
        self.toks.get(self.pos)
    }

    fn node(&mut self) -> Result<ProofNode, ProofParseError> {
        let open_loc = match self.peek() {
            Some((loc, Tok::LParen)) => {
                let loc = *loc;
                self.pos += 1;
                loc
            }
            Some((loc, Tok::RParen)) => {
                return Err(err(*loc, ProofParseErrorKind::UnexpectedCloseParen))
            }
            Some((loc, _)) => return Err(err(*loc, ProofParseErrorKind::ExpectedNode)),
            None => return Err(err(self.end, ProofParseErrorKind::ExpectedNode)),
        };
        let (name_loc, name) = match self.peek() {
            Some((loc, Tok::Symbol(s))) => (*loc, s.clone()),
            Some((loc, _)) => return Err(err(*loc, ProofParseErrorKind::ExpectedNode)),
            None => return Err(err(open_loc, ProofParseErrorKind::UnclosedParen)),
        };
        self.pos += 1;

        let mut args = Vec::new();
        loop {
            match self.peek() {
                Some((loc, Tok::Bracket(content))) => {
                    let loc = *loc;
                    let formulas = formula::parse_formula_list(content)
                        .map_err(|e| err(loc, ProofParseErrorKind::Formula(e)))?;
                    args.push(Arg::List(loc, formulas));
                    self.pos += 1;
                }
                Some((loc, Tok::Symbol(s))) => {
                    args.push(Arg::Symbol(*loc, s.clone()));
                    self.pos += 1;
                }
                _ => break,
            }
        }

        let mut premises = Vec::new();
        loop {
            match self.peek() {
                Some((_, Tok::LParen)) => premises.push(self.node()?),
                Some((_, Tok::RParen)) => {
                    self.pos += 1;
                    break;
                }
                Some((loc, _)) => return Err(err(*loc, ProofParseErrorKind::ExpectedNode)),
                None => return Err(err(open_loc, ProofParseErrorKind::UnclosedParen)),
            }
        }

        let rule = build_rule(&name, name_loc, args)?;
        let expected = rule.premise_arity();
        if premises.len() != expected {
            return Err(err(
                name_loc,
                ProofParseErrorKind::WrongPremises {
                    rule: rule.tag().name(),
                    expected,
                    found: premises.len(),
                },
            ));
        }
        Ok(ProofNode::new(rule, premises))
    }
}

fn single(rule: &'static str, args: Vec<Arg>) -> Result<Formula, ProofParseError> {
    match args.as_slice() {
        [Arg::List(loc, formulas)] => match formulas.as_slice() {
            [f] => Ok(f.clone()),
            _ => Err(err(
                *loc,
                ProofParseErrorKind::ExpectedSingleFormula(formulas.len()),
            )),
        },
        other => {
            let loc = arg_loc(other);
            Err(err(
                loc,
                ProofParseErrorKind::WrongArguments {
                    rule,
                    expected: "one `[formula]` argument",
                    found: other.len(),
                },
            ))
        }
    }
}

fn two_lists(
    rule: &'static str,
    args: Vec<Arg>,
) -> Result<(Vec<Formula>, Vec<Formula>), ProofParseError> {
    match args.as_slice() {
        [Arg::List(_, a), Arg::List(_, b)] => Ok((a.clone(), b.clone())),
        other => {
            let loc = arg_loc(other);
            Err(err(
                loc,
                ProofParseErrorKind::WrongArguments {
                    rule,
                    expected: "two `[context]` arguments",
                    found: other.len(),
                },
            ))
        }
    }
}

fn optional_list(rule: &'static str, args: Vec<Arg>) -> Result<Vec<Formula>, ProofParseError> {
    match args.as_slice() {
        [] => Ok(Vec::new()),
        [Arg::List(_, a)] => Ok(a.clone()),
        other => {
            let loc = arg_loc(other);
            Err(err(
                loc,
                ProofParseErrorKind::WrongArguments {
                    rule,
                    expected: "at most one `[context]` argument",
                    found: other.len(),
                },
            ))
        }
    }
}

fn arg_loc(args: &[Arg]) -> Loc {
    match args.first() {
        Some(Arg::List(loc, _)) | Some(Arg::Symbol(loc, _)) => *loc,
        None => Loc { line: 0, column: 0 },
    }
}

fn build_rule(name: &str, name_loc: Loc, args: Vec<Arg>) -> Result<RuleApp, ProofParseError> {
    match name {
        "ax" => match args.as_slice() {
            [Arg::Symbol(loc, s)] => {
                let formula =
                    formula::parse(s).map_err(|e| err(*loc, ProofParseErrorKind::Formula(e)))?;
                Ok(RuleApp::Ax { formula })
            }
            [Arg::List(..)] => Ok(RuleApp::Ax {
                formula: single("ax", args)?,
            }),
            other => Err(err(
                arg_loc(other),
                ProofParseErrorKind::WrongArguments {
                    rule: "ax",
                    expected: "one atom name or `[formula]`",
                    found: other.len(),
                },
            )),
        },
        "cut" => {
            let (l, r) = two_lists("cut", args)?;
            Ok(RuleApp::Cut {
                left_context: l,
                right_context: r,
            })
        }
        "tensor" => {
            let (l, r) = two_lists("tensor", args)?;
            Ok(RuleApp::Tensor {
                left_context: l,
                right_context: r,
            })
        }
        "par" => Ok(RuleApp::Par {
            principal: single("par", args)?,
        }),
        "with" => Ok(RuleApp::With {
            principal: single("with", args)?,
        }),
        "plus1" => Ok(RuleApp::Plus1 {
            principal: single("plus1", args)?,
        }),
        "plus2" => Ok(RuleApp::Plus2 {
            principal: single("plus2", args)?,
        }),
        "one" => Ok(RuleApp::One {
            context: optional_list("one", args)?,
        }),
        "bottom" => {
            if args.is_empty() {
                Ok(RuleApp::Bottom)
            } else {
                Err(err(
                    arg_loc(&args),
                    ProofParseErrorKind::WrongArguments {
                        rule: "bottom",
                        expected: "no arguments",
                        found: args.len(),
                    },
                ))
            }
        }
        "top" => Ok(RuleApp::Top {
            context: optional_list("top", args)?,
        }),
        "promote" => Ok(RuleApp::Promote {
            principal: single("promote", args)?,
        }),
        "derelict" => Ok(RuleApp::Derelict {
            principal: single("derelict", args)?,
        }),
        "weaken?" => Ok(RuleApp::WeakenQuest {
            principal: single("weaken?", args)?,
        }),
        "contract?" => Ok(RuleApp::ContractQuest {
            principal: single("contract?", args)?,
        }),
        other => Err(err(
            name_loc,
            ProofParseErrorKind::UnknownRule(other.to_string()),
        )),
    }
}

/// Parses one proof spanning the whole input.
pub fn parse_proof(text: &str) -> Result<ProofNode, ProofParseError> {
    let lines = text.lines().count().max(1);
    let end = Loc {
        line: lines,
        column: text
            .lines()
            .last()
            .map(|l| l.chars().count() + 1)
            .unwrap_or(1),
    };
    let mut reader = Reader {
        toks: lex(text)?,
        pos: 0,
        end,
    };
    let node = reader.node()?;
    match reader.peek() {
        None => Ok(node),
        Some((loc, _)) => Err(err(*loc, ProofParseErrorKind::TrailingText)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse as pf;

    #[test]
    fn axiom_forms() {
        let p = parse_proof("(ax A)").unwrap();
        assert_eq!(
            p.rule,
            RuleApp::Ax {
                formula: pf("A").unwrap()
            }
        );
        assert!(p.premises.is_empty());
        let p = parse_proof("(ax [A * B])").unwrap();
        assert_eq!(
            p.rule,
            RuleApp::Ax {
                formula: pf("A * B").unwrap()
            }
        );
    }

    #[test]
    fn tensor_with_declared_split() {
        let p = parse_proof("(tensor [A] [B] (ax A) (ax B))").unwrap();
        assert_eq!(
            p.rule,
            RuleApp::Tensor {
                left_context: vec![pf("A").unwrap()],
                right_context: vec![pf("B").unwrap()],
            }
        );
        assert_eq!(p.premises.len(), 2);
    }

    #[test]
    fn comments_and_multiline_brackets() {
        let p = parse_proof("; golden\n(par [A |\n  B] ; principal\n  (ax A))");
        // The bracket spans a newline, which folds to a space.
        let p = p.unwrap();
        assert_eq!(
            p.rule,
            RuleApp::Par {
                principal: pf("A | B").unwrap()
            }
        );
    }

    #[test]
    fn arity_errors_name_the_rule() {
        let e = parse_proof("(tensor [A] [B] (ax A))").unwrap_err();
        assert_eq!(
            e.kind,
            ProofParseErrorKind::WrongPremises {
                rule: "tensor",
                expected: 2,
                found: 1
            }
        );
        let e = parse_proof("(par [A | B] [C] (ax A))").unwrap_err();
        assert!(matches!(
            e.kind,
            ProofParseErrorKind::WrongArguments { rule: "par", .. }
        ));
    }

    #[test]
    fn unknown_rules_and_broken_nesting_are_located() {
        let e = parse_proof("(frob A)").unwrap_err();
        assert_eq!(e.kind, ProofParseErrorKind::UnknownRule("frob".into()));
        assert_eq!((e.line, e.column), (1, 2));

        let e = parse_proof("(ax A").unwrap_err();
        assert_eq!(e.kind, ProofParseErrorKind::UnclosedParen);

        let e = parse_proof("(par [A | B (ax A))").unwrap_err();
        assert_eq!(e.kind, ProofParseErrorKind::UnclosedBracket);

        let e = parse_proof("(ax A) (ax B)").unwrap_err();
        assert_eq!(e.kind, ProofParseErrorKind::TrailingText);
    }

    #[test]
    fn formula_errors_inside_brackets_surface() {
        let e = parse_proof("(par [A &] (ax A))").unwrap_err();
        assert!(matches!(e.kind, ProofParseErrorKind::Formula(_)));
        assert_eq!(e.line, 1);
    }

    #[test]
    fn single_formula_brackets_reject_lists() {
        let e = parse_proof("(par [A B] (ax A))").unwrap_err();
        assert_eq!(e.kind, ProofParseErrorKind::ExpectedSingleFormula(2));
    }
}
