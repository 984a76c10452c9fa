use std::fmt;

use super::lexer::{tokenize, Token, TokenKind};
use super::Formula;

/// A syntax error: where it happened and what the parser would have accepted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at byte {}: expected one of {}, found {}",
            self.offset,
            self.expected.join(", "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

/// Cursor over a token stream, shared with the first-order parser.
pub(crate) struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
}

impl Cursor {
    pub(crate) fn new(text: &str) -> Result<Self, ParseError> {
        let tokens = tokenize(text).map_err(|offset| ParseError {
            offset,
            expected: vec!["a formula token".into()],
            found: format!("`{}`", text[offset..].chars().next().unwrap_or(' ')),
        })?;
        Ok(Cursor { tokens, pos: 0 })
    }

    pub(crate) fn peek(&self) -> &TokenKind {
        &self.tokens[self.pos].kind
    }

    pub(crate) fn peek_at(&self, ahead: usize) -> &TokenKind {
        let i = (self.pos + ahead).min(self.tokens.len() - 1);
        &self.tokens[i].kind
    }

    pub(crate) fn bump(&mut self) -> Token {
        let tok = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        tok
    }

    pub(crate) fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek() == kind {
            self.bump();
            true
        } else {
            false
        }
    }

    pub(crate) fn error(&self, expected: &[&str]) -> ParseError {
        let tok = &self.tokens[self.pos];
        ParseError {
            offset: tok.offset,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.kind.to_string(),
        }
    }

    pub(crate) fn expect(&mut self, kind: TokenKind, label: &str) -> Result<Token, ParseError> {
        if *self.peek() == kind {
            Ok(self.bump())
        } else {
            Err(self.error(&[label]))
        }
    }

    pub(crate) fn finish(&self) -> Result<(), ParseError> {
        if *self.peek() == TokenKind::End {
            Ok(())
        } else {
            Err(self.error(&["`&`", "`|`", "`->`", "`<->`", "end of input"]))
        }
    }
}

const OPERAND: &[&str] = &["identifier", "`true`", "`false`", "`~`", "`#`", "`(`"];

pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut cur = Cursor::new(text)?;
    let f = iff(&mut cur)?;
    cur.finish()?;
    Ok(f)
}

fn iff(cur: &mut Cursor) -> Result<Formula, ParseError> {
    let lhs = implies(cur)?;
    if cur.eat(&TokenKind::Iff) {
        Ok(Formula::iff(lhs, iff(cur)?))
    } else {
        Ok(lhs)
    }
}

fn implies(cur: &mut Cursor) -> Result<Formula, ParseError> {
    let lhs = or(cur)?;
    if cur.eat(&TokenKind::Implies) {
        Ok(Formula::implies(lhs, implies(cur)?))
    } else {
        Ok(lhs)
    }
}

fn or(cur: &mut Cursor) -> Result<Formula, ParseError> {
    let mut lhs = and(cur)?;
    while cur.eat(&TokenKind::Or) {
        lhs = Formula::or(lhs, and(cur)?);
    }
    Ok(lhs)
}

fn and(cur: &mut Cursor) -> Result<Formula, ParseError> {
    let mut lhs = unary(cur)?;
    while cur.eat(&TokenKind::And) {
        lhs = Formula::and(lhs, unary(cur)?);
    }
    Ok(lhs)
}

fn unary(cur: &mut Cursor) -> Result<Formula, ParseError> {
    match cur.peek().clone() {
        TokenKind::Not => {
            cur.bump();
            Ok(Formula::not(unary(cur)?))
        }
        TokenKind::Nabla => {
            cur.bump();
            Ok(Formula::nabla(unary(cur)?))
        }
        TokenKind::LParen => {
            cur.bump();
            let f = iff(cur)?;
            cur.expect(TokenKind::RParen, "`)`")?;
            Ok(f)
        }
        TokenKind::Ident(name) => {
            cur.bump();
            Ok(match name.as_str() {
                "true" => Formula::Top,
                "false" => Formula::Bottom,
                _ => Formula::Atom(name.into()),
            })
        }
        _ => Err(cur.error(OPERAND)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(n: &str) -> Formula {
        Formula::atom(n)
    }

    #[test]
    fn nabla_of_excluded_middle() {
        assert_eq!(
            parse("#(p | ~p)").unwrap(),
            Formula::nabla(Formula::or(atom("p"), Formula::not(atom("p"))))
        );
    }

    #[test]
    fn single_atom() {
        assert_eq!(parse("p").unwrap(), atom("p"));
    }

    #[test]
    fn precedence_table() {
        assert_eq!(
            parse("~p & q -> r").unwrap(),
            Formula::implies(Formula::and(Formula::not(atom("p")), atom("q")), atom("r"))
        );
        assert_eq!(
            parse("p | q & r").unwrap(),
            Formula::or(atom("p"), Formula::and(atom("q"), atom("r")))
        );
        assert_eq!(
            parse("p -> q <-> r").unwrap(),
            Formula::iff(Formula::implies(atom("p"), atom("q")), atom("r"))
        );
    }

    #[test]
    fn arrows_associate_right() {
        assert_eq!(
            parse("p -> q -> r").unwrap(),
            Formula::implies(atom("p"), Formula::implies(atom("q"), atom("r")))
        );
        assert_eq!(
            parse("p <-> q <-> r").unwrap(),
            Formula::iff(atom("p"), Formula::iff(atom("q"), atom("r")))
        );
    }

    #[test]
    fn unary_operators_stack() {
        assert_eq!(
            parse("~#p").unwrap(),
            Formula::not(Formula::nabla(atom("p")))
        );
        assert_eq!(
            parse("#~#p").unwrap(),
            Formula::nabla(Formula::not(Formula::nabla(atom("p"))))
        );
    }

    #[test]
    fn constants_and_unicode() {
        assert_eq!(parse("true & false").unwrap(), Formula::and(Formula::Top, Formula::Bottom));
        assert_eq!(parse("∇p → ¬⊥").unwrap(), parse("#p -> ~false").unwrap());
    }

    #[test]
    fn error_reports_offset_and_expected() {
        let err = parse("p & ").unwrap_err();
        assert_eq!(err.offset, 4);
        assert!(err.expected.iter().any(|e| e == "`(`"));

        let err = parse("(p | q").unwrap_err();
        assert_eq!(err.offset, 6);
        assert_eq!(err.expected, vec!["`)`".to_string()]);

        let err = parse("p q").unwrap_err();
        assert_eq!(err.offset, 2);
        assert!(err.expected.iter().any(|e| e == "end of input"));

        assert_eq!(parse("p @ q").unwrap_err().offset, 2);
    }
}
