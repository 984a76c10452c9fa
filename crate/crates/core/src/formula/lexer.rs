//! Tokenizer shared by the propositional and first-order parsers.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Not,
    Nabla,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    Dot,
    Comma,
    Eq,
    End,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(name) => write!(f, "identifier `{name}`"),
            TokenKind::Not => f.write_str("`~`"),
            TokenKind::Nabla => f.write_str("`#`"),
            TokenKind::And => f.write_str("`&`"),
            TokenKind::Or => f.write_str("`|`"),
            TokenKind::Implies => f.write_str("`->`"),
            TokenKind::Iff => f.write_str("`<->`"),
            TokenKind::LParen => f.write_str("`(`"),
            TokenKind::RParen => f.write_str("`)`"),
            TokenKind::Dot => f.write_str("`.`"),
            TokenKind::Comma => f.write_str("`,`"),
            TokenKind::Eq => f.write_str("`=`"),
            TokenKind::End => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    /// Byte offset of the first character of the token.
    pub offset: usize,
}

/// Splits `text` into tokens. On an unrecognised character, returns its byte
/// offset.
pub fn tokenize(text: &str) -> Result<Vec<Token>, usize> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(offset, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut end = offset;
            while let Some(&(i, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    end = i + c.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            tokens.push(Token {
                kind: TokenKind::Ident(text[offset..end].to_string()),
                offset,
            });
            continue;
        }
        let rest = &text[offset..];
        let (kind, len) = if rest.starts_with("<->") {
            (TokenKind::Iff, 3)
        } else if rest.starts_with("->") {
            (TokenKind::Implies, 2)
        } else {
            let kind = match c {
                '~' | '¬' => TokenKind::Not,
                '#' | '∇' => TokenKind::Nabla,
                '&' | '∧' => TokenKind::And,
                '|' | '∨' => TokenKind::Or,
                '→' => TokenKind::Implies,
                '↔' => TokenKind::Iff,
                '(' => TokenKind::LParen,
                ')' => TokenKind::RParen,
                '.' => TokenKind::Dot,
                ',' => TokenKind::Comma,
                '=' => TokenKind::Eq,
                '⊥' => TokenKind::Ident("false".into()),
                '⊤' => TokenKind::Ident("true".into()),
                _ => return Err(offset),
            };
            (kind, c.len_utf8())
        };
        tokens.push(Token { kind, offset });
        for _ in rest[..len].chars() {
            chars.next();
        }
    }
    tokens.push(Token {
        kind: TokenKind::End,
        offset: text.len(),
    });
    Ok(tokens)
}
