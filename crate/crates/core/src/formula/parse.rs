//! Recursive-descent parser for the formula surface syntax.

use std::fmt;

use super::Formula;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character offset of the offending token.
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Unexpected {
        found: String,
        expected: Vec<&'static str>,
    },
    /// `&`/`+` (or `*`/`|`) chained at one precedence level.
    MixedOperators {
        first: &'static str,
        second: &'static str,
    },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Unexpected { found, expected } => write!(
                f,
                "syntax error at offset {}: found {}, expected {}",
                self.offset,
                found,
                expected.join(" or ")
            ),
            ParseErrorKind::MixedOperators { first, second } => write!(
                f,
                "syntax error at offset {}: cannot mix '{}' and '{}' at the same precedence level without parentheses",
                self.offset, first, second
            ),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Star,
    Pipe,
    Amp,
    Plus,
    Lolli,
    Caret,
    Bang,
    Quest,
    LParen,
    RParen,
    One,
    Zero,
    Top,
    Bottom,
    Eof,
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Ident(s) => format!("atom '{s}'"),
        Tok::Star => "'*'".into(),
        Tok::Pipe => "'|'".into(),
        Tok::Amp => "'&'".into(),
        Tok::Plus => "'+'".into(),
        Tok::Lolli => "'-o'".into(),
        Tok::Caret => "'^'".into(),
        Tok::Bang => "'!'".into(),
        Tok::Quest => "'?'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::One => "'1'".into(),
        Tok::Zero => "'0'".into(),
        Tok::Top => "'T'".into(),
        Tok::Bottom => "'F'".into(),
        Tok::Eof => "end of input".into(),
    }
}

const PRIMARY_EXPECTED: &[&'static str] =
    &["an atom", "'('", "'!'", "'?'", "'1'", "'0'", "'T'", "'F'"];

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut toks = Vec::new();
    let mut chars = text.chars().enumerate().peekable();
    while let Some(&(i, c)) = chars.peek() {
        let offset = i + 1;
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let tok = match name.as_str() {
                    "T" => Tok::Top,
                    "F" => Tok::Bottom,
                    _ => Tok::Ident(name),
                };
                toks.push((offset, tok));
            }
            '1' => {
                chars.next();
                toks.push((offset, Tok::One));
            }
            '0' => {
                chars.next();
                toks.push((offset, Tok::Zero));
            }
            '*' => {
                chars.next();
                toks.push((offset, Tok::Star));
            }
            '|' => {
                chars.next();
                toks.push((offset, Tok::Pipe));
            }
            '&' => {
                chars.next();
                toks.push((offset, Tok::Amp));
            }
            '+' => {
                chars.next();
                toks.push((offset, Tok::Plus));
            }
            '^' => {
                chars.next();
                toks.push((offset, Tok::Caret));
            }
            '!' => {
                chars.next();
                toks.push((offset, Tok::Bang));
            }
            '?' => {
                chars.next();
                toks.push((offset, Tok::Quest));
            }
            '(' => {
                chars.next();
                toks.push((offset, Tok::LParen));
            }
            ')' => {
                chars.next();
                toks.push((offset, Tok::RParen));
            }
            '-' => {
                chars.next();
                match chars.peek() {
                    Some(&(_, 'o')) => {
                        chars.next();
                        toks.push((offset, Tok::Lolli));
                    }
                    _ => {
                        return Err(ParseError {
                            offset,
                            kind: ParseErrorKind::Unexpected {
                                found: "'-'".into(),
                                expected: vec!["'-o'"],
                            },
                        })
                    }
                }
            }
            other => {
                return Err(ParseError {
                    offset,
                    kind: ParseErrorKind::Unexpected {
                        found: format!("'{other}'"),
                        expected: PRIMARY_EXPECTED.to_vec(),
                    },
                })
            }
        }
    }
    toks.push((text.chars().count() + 1, Tok::Eof));
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &(usize, Tok) {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: Vec<&'static str>) -> ParseError {
        let (offset, tok) = self.peek();
        ParseError {
            offset: *offset,
            kind: ParseErrorKind::Unexpected {
                found: describe(tok),
                expected,
            },
        }
    }

    fn lolli(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.additive()?;
        if self.peek().1 == Tok::Lolli {
            self.bump();
            let rhs = self.lolli()?;
            Ok(lhs.lollipop(rhs))
        } else {
            Ok(lhs)
        }
    }

    fn additive(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.multiplicative()?;
        let mut seen: Option<&'static str> = None;
        loop {
            let (offset, op) = match self.peek() {
                (o, Tok::Amp) => (*o, "&"),
                (o, Tok::Plus) => (*o, "+"),
                _ => break,
            };
            if let Some(first) = seen {
                if first != op {
                    return Err(ParseError {
                        offset,
                        kind: ParseErrorKind::MixedOperators { first, second: op },
                    });
                }
            }
            seen = Some(op);
            self.bump();
            let rhs = self.multiplicative()?;
            lhs = if op == "&" {
                lhs.with(rhs)
            } else {
                lhs.plus(rhs)
            };
        }
        Ok(lhs)
    }

    fn multiplicative(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        let mut seen: Option<&'static str> = None;
        loop {
            let (offset, op) = match self.peek() {
                (o, Tok::Star) => (*o, "*"),
                (o, Tok::Pipe) => (*o, "|"),
                _ => break,
            };
            if let Some(first) = seen {
                if first != op {
                    return Err(ParseError {
                        offset,
                        kind: ParseErrorKind::MixedOperators { first, second: op },
                    });
                }
            }
            seen = Some(op);
            self.bump();
            let rhs = self.unary()?;
            lhs = if op == "*" {
                lhs.tensor(rhs)
            } else {
                lhs.par(rhs)
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let mut prefixes = Vec::new();
        loop {
            match self.peek().1 {
                Tok::Bang => {
                    self.bump();
                    prefixes.push(true);
                }
                Tok::Quest => {
                    self.bump();
                    prefixes.push(false);
                }
                _ => break,
            }
        }
        let mut f = self.primary()?;
        while self.peek().1 == Tok::Caret {
            self.bump();
            f = f.dual();
        }
        for is_bang in prefixes.into_iter().rev() {
            f = if is_bang { f.bang() } else { f.quest() };
        }
        Ok(f)
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match &self.peek().1 {
            Tok::Ident(_) => {
                let (_, tok) = self.bump();
                match tok {
                    Tok::Ident(name) => Ok(Formula::Atom(name)),
                    _ => unreachable!(),
                }
            }
            Tok::One => {
                self.bump();
                Ok(Formula::One)
            }
            Tok::Zero => {
                self.bump();
                Ok(Formula::Zero)
            }
            Tok::Top => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::Bottom => {
                self.bump();
                Ok(Formula::Bottom)
            }
            Tok::LParen => {
                self.bump();
                let f = self.lolli()?;
                if self.peek().1 == Tok::RParen {
                    self.bump();
                    Ok(f)
                } else {
                    Err(self.unexpected(vec!["')'", "'*'", "'|'", "'&'", "'+'", "'-o'"]))
                }
            }
            _ => Err(self.unexpected(PRIMARY_EXPECTED.to_vec())),
        }
    }

    fn at_eof(&self) -> bool {
        self.peek().1 == Tok::Eof
    }
}

/// Parses one formula spanning the whole input.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let f = p.lolli()?;
    if p.at_eof() {
        Ok(f)
    } else {
        Err(p.unexpected(vec!["end of input", "'*'", "'|'", "'&'", "'+'", "'-o'"]))
    }
}

/// Parses zero or more juxtaposed formulas, each consumed greedily.
/// Used for the bracketed formula lists in proof files.
pub fn parse_formula_list(text: &str) -> Result<Vec<Formula>, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let mut out = Vec::new();
    while !p.at_eof() {
        out.push(p.lolli()?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Formula::*;

    fn atom(n: &str) -> Formula {
        Formula::atom(n)
    }

    #[test]
    fn precedence_tensor_binds_tighter_than_plus_inside_parens() {
        let f = parse("A * (B + C)").unwrap();
        assert_eq!(f, atom("A").tensor(atom("B").plus(atom("C"))));
    }

    #[test]
    fn lollipop_is_right_associative() {
        let f = parse("A -o B -o C").unwrap();
        assert_eq!(f, atom("A").lollipop(atom("B").lollipop(atom("C"))));
    }

    #[test]
    fn postfix_dual_binds_tighter_than_prefix_bang() {
        assert_eq!(parse("!A^").unwrap(), atom("A").dual().bang());
        assert_eq!(parse("(!A)^").unwrap(), atom("A").bang().dual());
    }

    #[test]
    fn multiplicatives_bind_tighter_than_additives() {
        let f = parse("A * B & C").unwrap();
        assert_eq!(f, atom("A").tensor(atom("B")).with(atom("C")));
    }

    #[test]
    fn binary_chains_associate_left() {
        assert_eq!(
            parse("A * B * C").unwrap(),
            atom("A").tensor(atom("B")).tensor(atom("C"))
        );
        assert_eq!(
            parse("A & B & C").unwrap(),
            atom("A").with(atom("B")).with(atom("C"))
        );
    }

    #[test]
    fn prefixes_nest_outside_in() {
        assert_eq!(parse("!?A").unwrap(), atom("A").quest().bang());
        assert_eq!(parse("?A^^").unwrap(), atom("A").dual().dual().quest());
    }

    #[test]
    fn constants_parse() {
        assert_eq!(parse("1").unwrap(), One);
        assert_eq!(parse("0").unwrap(), Zero);
        assert_eq!(parse("T").unwrap(), Top);
        assert_eq!(parse("F").unwrap(), Bottom);
        // A leading T is only a constant when it is the whole word.
        assert_eq!(parse("Tall").unwrap(), atom("Tall"));
    }

    #[test]
    fn syntax_error_carries_offset_and_expectations() {
        let err = parse("A & + B").unwrap_err();
        assert_eq!(err.offset, 5);
        match err.kind {
            ParseErrorKind::Unexpected { found, expected } => {
                assert_eq!(found, "'+'");
                assert!(expected.contains(&"an atom"));
            }
            other => panic!("unexpected kind: {other:?}"),
        }
    }

    #[test]
    fn mixing_additive_operators_is_rejected() {
        let err = parse("A & B + C").unwrap_err();
        assert_eq!(err.offset, 7);
        assert!(matches!(
            err.kind,
            ParseErrorKind::MixedOperators {
                first: "&",
                second: "+"
            }
        ));
        let err = parse("A * B | C").unwrap_err();
        assert!(matches!(
            err.kind,
            ParseErrorKind::MixedOperators {
                first: "*",
                second: "|"
            }
        ));
    }

    #[test]
    fn trailing_tokens_are_rejected() {
        let err = parse("A B").unwrap_err();
        assert_eq!(err.offset, 3);
    }

    #[test]
    fn stray_dash_is_rejected() {
        let err = parse("A - B").unwrap_err();
        assert_eq!(err.offset, 3);
    }

    #[test]
    fn whitespace_is_insignificant() {
        let tight = parse("A*(B+C)-o!D^").unwrap();
        let airy = parse("  A * ( B + C )  -o  ! D ^ ").unwrap();
        assert_eq!(tight, airy);
    }

    #[test]
    fn formula_lists_parse_greedily() {
        let fs = parse_formula_list("A -o B C^").unwrap();
        assert_eq!(fs, vec![atom("A").lollipop(atom("B")), atom("C").dual()]);
        assert_eq!(parse_formula_list("  ").unwrap(), vec![]);
    }
}
