//! Line-oriented proof files:
//!
//! ```text
//! // comment
//! 1. p -> p | q ; axiom LPC
//! 2. #p -> #(p | q) ; rnabla 1
//! 3. #q -> q ; axiom AX3 A=q
//! ```
//!
//! Justifications: `premise`, `axiom <SCHEMA> [A=<formula>] [B=<formula>]`,
//! `mp <i> <j>` (line `j` is `line i -> this`), `rnabla <i>`.

use std::fmt::Write as _;

use thiserror::Error;

use super::{AxiomSchema, Bindings, Justification, ProofLine};
use crate::formula::{parse, Formula};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("proof file line {line_no}: {message}")]
pub struct ProofFileError {
    /// 1-based line number in the file.
    pub line_no: usize,
    pub message: String,
}

pub fn parse_proof(text: &str) -> Result<Vec<ProofLine>, ProofFileError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with("//") {
            continue;
        }
        let err = |message: String| ProofFileError {
            line_no: n + 1,
            message,
        };
        let (index, rest) = line
            .split_once('.')
            .ok_or_else(|| err("expected `<index>. <formula> ; <justification>`".into()))?;
        let index: usize = index
            .trim()
            .parse()
            .map_err(|_| err(format!("bad line index `{}`", index.trim())))?;
        let (formula, justification) = rest
            .split_once(';')
            .ok_or_else(|| err("missing `;` before the justification".into()))?;
        let formula = parse(formula.trim()).map_err(|e| err(e.to_string()))?;
        let justification = parse_justification(justification.trim()).map_err(err)?;
        out.push(ProofLine {
            index,
            formula,
            justification,
        });
    }
    Ok(out)
}

fn parse_justification(text: &str) -> Result<Justification, String> {
    let (head, rest) = match text.split_once(char::is_whitespace) {
        Some((h, r)) => (h, r.trim()),
        None => (text, ""),
    };
    let number = |s: &str| -> Result<usize, String> {
        s.parse().map_err(|_| format!("bad line reference `{s}`"))
    };
    match head {
        "premise" if rest.is_empty() => Ok(Justification::Premise),
        "mp" => {
            let refs: Vec<&str> = rest.split_whitespace().collect();
            match refs.as_slice() {
                [i, j] => Ok(Justification::Mp(number(i)?, number(j)?)),
                _ => Err("`mp` takes two line numbers".into()),
            }
        }
        "rnabla" => {
            let refs: Vec<&str> = rest.split_whitespace().collect();
            match refs.as_slice() {
                [i] => Ok(Justification::RNabla(number(i)?)),
                _ => Err("`rnabla` takes one line number".into()),
            }
        }
        "axiom" => {
            let (schema, bindings) = match rest.split_once(char::is_whitespace) {
                Some((s, b)) => (s, b.trim()),
                None => (rest, ""),
            };
            let schema: AxiomSchema = schema.parse()?;
            Ok(Justification::Axiom(schema, parse_bindings(bindings)?))
        }
        _ => Err(format!("unknown justification `{text}`")),
    }
}

/// `A=<formula> B=<formula>`. Formulas never contain `=`, so each `=` marks
/// a binding whose name is the character before it.
fn parse_bindings(text: &str) -> Result<Bindings, String> {
    let mut bindings = Bindings::none();
    let eqs: Vec<usize> = text.match_indices('=').map(|(i, _)| i).collect();
    for (k, &eq) in eqs.iter().enumerate() {
        if eq == 0 {
            return Err("binding without a metavariable".into());
        }
        let name = &text[eq - 1..eq];
        let start_ok = eq == 1 || text[..eq - 1].ends_with(char::is_whitespace);
        if (k == 0 && eq != 1) || !start_ok {
            return Err(format!("malformed bindings `{text}`"));
        }
        let end = eqs.get(k + 1).map_or(text.len(), |&next| next - 1);
        let value = parse(text[eq + 1..end].trim()).map_err(|e| e.to_string())?;
        let slot = match name {
            "A" => &mut bindings.a,
            "B" => &mut bindings.b,
            other => return Err(format!("unknown metavariable `{other}`")),
        };
        if slot.replace(value).is_some() {
            return Err(format!("metavariable {name} bound twice"));
        }
    }
    Ok(bindings)
}

fn render_binding(out: &mut String, name: &str, value: &Option<Formula>) {
    if let Some(f) = value {
        let _ = write!(out, " {name}={f}");
    }
}

pub fn render_proof(lines: &[ProofLine]) -> String {
    let mut out = String::new();
    for line in lines {
        let _ = write!(out, "{}. {} ; ", line.index, line.formula);
        match &line.justification {
            Justification::Premise => out.push_str("premise"),
            Justification::Axiom(schema, b) => {
                let _ = write!(out, "axiom {schema}");
                render_binding(&mut out, "A", &b.a);
                render_binding(&mut out, "B", &b.b);
            }
            Justification::Mp(i, j) => {
                let _ = write!(out, "mp {i} {j}");
            }
            Justification::RNabla(i) => {
                let _ = write!(out, "rnabla {i}");
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_justification() {
        let text = "\
// weakening
1. p -> p | q ; axiom LPC
2. #p -> #(p | q) ; rnabla 1
3. (#p & #q) -> #(p & q) ; axiom AX1 A=p B=q
4. #(q | ~q) ; axiom AX4 A=q
5. q ; premise
6. x ; mp 5 4
";
        let lines = parse_proof(text).unwrap();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[1].justification, Justification::RNabla(1));
        assert_eq!(
            lines[2].justification,
            Justification::Axiom(
                AxiomSchema::Ax1,
                Bindings::ab(parse("p").unwrap(), parse("q").unwrap())
            )
        );
        assert_eq!(lines[4].justification, Justification::Premise);
        assert_eq!(lines[5].justification, Justification::Mp(5, 4));
        assert_eq!(parse_proof(&render_proof(&lines)).unwrap(), lines);
    }

    #[test]
    fn bindings_may_contain_spaces() {
        let lines = parse_proof("1. #(p & q) -> p & q ; axiom AX3 A=p & q\n").unwrap();
        assert_eq!(
            lines[0].justification,
            Justification::Axiom(AxiomSchema::Ax3, Bindings::a(parse("p & q").unwrap()))
        );
    }

    #[test]
    fn errors_carry_file_line() {
        let err = parse_proof("\n1. p ; premise\n2. p -> ; premise\n").unwrap_err();
        assert_eq!(err.line_no, 3);
        assert!(parse_proof("1. p ; axiom AX9").is_err());
        assert!(parse_proof("1. p ; mp 1").is_err());
        assert!(parse_proof("1. p premise").is_err());
        assert!(parse_proof("x. p ; premise").is_err());
        assert!(parse_proof("1. p ; axiom AX1 C=p").is_err());
    }
}
