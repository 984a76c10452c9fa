//! Grammar: the propositional connectives, plus
//! `forall x. φ`, `exists x. φ`, `P x. φ` (bodies extend as far right as
//! possible), `R(t, ...)`, nullary `R`, and `t = t` over terms built from
//! names and `f(t, ...)`. `#` is rejected.

use super::{FoFormula, Quantifier, Term};
use crate::formula::lexer::TokenKind;
use crate::formula::parse::Cursor;
use crate::formula::ParseError;

const OPERAND: &[&str] = &[
    "identifier",
    "`true`",
    "`false`",
    "`~`",
    "`(`",
    "`forall`",
    "`exists`",
    "`P`",
];

pub fn parse_fo(text: &str) -> Result<FoFormula, ParseError> {
    let mut cur = Cursor::new(text)?;
    let f = iff(&mut cur)?;
    cur.finish()?;
    Ok(f)
}

fn iff(cur: &mut Cursor) -> Result<FoFormula, ParseError> {
    let lhs = implies(cur)?;
    if cur.eat(&TokenKind::Iff) {
        Ok(FoFormula::iff(lhs, iff(cur)?))
    } else {
        Ok(lhs)
    }
}

fn implies(cur: &mut Cursor) -> Result<FoFormula, ParseError> {
    let lhs = or(cur)?;
    if cur.eat(&TokenKind::Implies) {
        Ok(FoFormula::implies(lhs, implies(cur)?))
    } else {
        Ok(lhs)
    }
}

fn or(cur: &mut Cursor) -> Result<FoFormula, ParseError> {
    let mut lhs = and(cur)?;
    while cur.eat(&TokenKind::Or) {
        lhs = FoFormula::or(lhs, and(cur)?);
    }
    Ok(lhs)
}

fn and(cur: &mut Cursor) -> Result<FoFormula, ParseError> {
    let mut lhs = unary(cur)?;
    while cur.eat(&TokenKind::And) {
        lhs = FoFormula::and(lhs, unary(cur)?);
    }
    Ok(lhs)
}

fn quantifier(cur: &Cursor) -> Option<Quantifier> {
    let TokenKind::Ident(word) = cur.peek() else {
        return None;
    };
    let q = match word.as_str() {
        "forall" => Quantifier::Forall,
        "exists" => Quantifier::Exists,
        "P" => Quantifier::Plausibly,
        _ => return None,
    };
    let binds = matches!(cur.peek_at(1), TokenKind::Ident(_)) && *cur.peek_at(2) == TokenKind::Dot;
    binds.then_some(q)
}

fn unary(cur: &mut Cursor) -> Result<FoFormula, ParseError> {
    if let Some(q) = quantifier(cur) {
        cur.bump();
        let TokenKind::Ident(var) = cur.bump().kind else {
            unreachable!("checked by lookahead");
        };
        cur.bump();
        return Ok(FoFormula::quant(q, &var, iff(cur)?));
    }
    match cur.peek().clone() {
        TokenKind::Not => {
            cur.bump();
            Ok(FoFormula::not(unary(cur)?))
        }
        TokenKind::LParen => {
            cur.bump();
            let f = iff(cur)?;
            cur.expect(TokenKind::RParen, "`)`")?;
            Ok(f)
        }
        TokenKind::Ident(name) if name == "true" || name == "false" => {
            cur.bump();
            Ok(if name == "true" { FoFormula::True } else { FoFormula::False })
        }
        TokenKind::Ident(_) => atomic(cur),
        _ => Err(cur.error(OPERAND)),
    }
}

fn atomic(cur: &mut Cursor) -> Result<FoFormula, ParseError> {
    let head = term(cur)?;
    if cur.eat(&TokenKind::Eq) {
        return Ok(FoFormula::Eq(head, term(cur)?));
    }
    Ok(match head {
        Term::Name(r) => FoFormula::Rel(r, vec![]),
        Term::App(r, args) => FoFormula::Rel(r, args),
    })
}

fn term(cur: &mut Cursor) -> Result<Term, ParseError> {
    let TokenKind::Ident(name) = cur.peek().clone() else {
        return Err(cur.error(&["a term"]));
    };
    cur.bump();
    if !cur.eat(&TokenKind::LParen) {
        return Ok(Term::Name(name));
    }
    let mut args = vec![term(cur)?];
    while cur.eat(&TokenKind::Comma) {
        args.push(term(cur)?);
    }
    cur.expect(TokenKind::RParen, "`)` or `,`")?;
    Ok(Term::App(name, args))
}
