//! Hilbert-style derivations: axiom schemas, Modus Ponens and the
//! plausibility rule `⊢ A -> B / ⊢ #A -> #B`.
//!
//! Classical axioms are not drawn from a fixed basis: any line justified by
//! `LPC` must be a classical tautology, with maximal `#`-subformulas read as
//! propositional letters.

mod file;
pub mod library;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::Formula;

pub use file::{parse_proof, render_proof, ProofFileError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomSchema {
    Lpc,
    /// `(#A & #B) -> #(A & B)`
    Ax1,
    /// `(#A | #B) -> #(A | B)`
    Ax2,
    /// `#A -> A`
    Ax3,
    /// `#(A | ~A)`
    Ax4,
}

impl AxiomSchema {
    /// Number of metavariables.
    pub fn arity(self) -> usize {
        match self {
            AxiomSchema::Lpc => 0,
            AxiomSchema::Ax1 | AxiomSchema::Ax2 => 2,
            AxiomSchema::Ax3 | AxiomSchema::Ax4 => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AxiomSchema::Lpc => "LPC",
            AxiomSchema::Ax1 => "AX1",
            AxiomSchema::Ax2 => "AX2",
            AxiomSchema::Ax3 => "AX3",
            AxiomSchema::Ax4 => "AX4",
        }
    }
}

impl fmt::Display for AxiomSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomSchema {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "LPC" => Ok(AxiomSchema::Lpc),
            "AX1" => Ok(AxiomSchema::Ax1),
            "AX2" => Ok(AxiomSchema::Ax2),
            "AX3" => Ok(AxiomSchema::Ax3),
            "AX4" => Ok(AxiomSchema::Ax4),
            other => Err(format!("unknown axiom schema `{other}`")),
        }
    }
}

/// Values for the metavariables `A` and `B`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bindings {
    pub a: Option<Formula>,
    pub b: Option<Formula>,
}

impl Bindings {
    pub fn none() -> Self {
        Bindings::default()
    }

    pub fn a(a: Formula) -> Self {
        Bindings { a: Some(a), b: None }
    }

    pub fn ab(a: Formula, b: Formula) -> Self {
        Bindings {
            a: Some(a),
            b: Some(b),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_none() && self.b.is_none()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstantiateError {
    #[error("{schema} needs a binding for metavariable {var}")]
    MissingBinding { schema: AxiomSchema, var: char },
    #[error("LPC is not a schema; any classical tautology is an instance")]
    NotASchema,
}

pub fn instantiate(schema: AxiomSchema, bindings: &Bindings) -> Result<Formula, InstantiateError> {
    let need = |v: &Option<Formula>, var| {
        v.clone()
            .ok_or(InstantiateError::MissingBinding { schema, var })
    };
    use Formula as F;
    Ok(match schema {
        AxiomSchema::Lpc => return Err(InstantiateError::NotASchema),
        AxiomSchema::Ax1 => {
            let (a, b) = (need(&bindings.a, 'A')?, need(&bindings.b, 'B')?);
            F::implies(
                F::and(F::nabla(a.clone()), F::nabla(b.clone())),
                F::nabla(F::and(a, b)),
            )
        }
        AxiomSchema::Ax2 => {
            let (a, b) = (need(&bindings.a, 'A')?, need(&bindings.b, 'B')?);
            F::implies(
                F::or(F::nabla(a.clone()), F::nabla(b.clone())),
                F::nabla(F::or(a, b)),
            )
        }
        AxiomSchema::Ax3 => {
            let a = need(&bindings.a, 'A')?;
            F::implies(F::nabla(a.clone()), a)
        }
        AxiomSchema::Ax4 => {
            let a = need(&bindings.a, 'A')?;
            F::nabla(F::or(a.clone(), F::not(a)))
        }
    })
}

/// Recovers the metavariable values when `f` is an instance of `schema`.
pub fn match_schema(schema: AxiomSchema, f: &Formula) -> Option<Bindings> {
    let bindings = match (schema, f) {
        (AxiomSchema::Ax1, Formula::Implies(lhs, _)) | (AxiomSchema::Ax2, Formula::Implies(lhs, _)) => {
            match lhs.as_ref() {
                Formula::And(x, y) | Formula::Or(x, y) => match (x.as_ref(), y.as_ref()) {
                    (Formula::Nabla(a), Formula::Nabla(b)) => {
                        Bindings::ab((**a).clone(), (**b).clone())
                    }
                    _ => return None,
                },
                _ => return None,
            }
        }
        (AxiomSchema::Ax3, Formula::Implies(_, a)) => Bindings::a((**a).clone()),
        (AxiomSchema::Ax4, Formula::Nabla(inner)) => match inner.as_ref() {
            Formula::Or(a, _) => Bindings::a((**a).clone()),
            _ => return None,
        },
        _ => return None,
    };
    (instantiate(schema, &bindings).ok()? == *f).then_some(bindings)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Premise,
    Axiom(AxiomSchema, Bindings),
    /// `Mp(i, j)`: line `j` is `line_i -> this`.
    Mp(usize, usize),
    RNabla(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    pub index: usize,
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Accepted {
    /// Formula on the last line.
    pub formula: Formula,
    /// The last line depends on no premise.
    pub theorem: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RejectReason {
    #[error("the proof has no lines")]
    Empty,
    #[error("expected line index {expected}")]
    BadIndex { expected: usize },
    #[error("`{0}` is not among the premises")]
    NotAPremise(Formula),
    #[error("not a classical tautology")]
    NotATautology,
    #[error("not an instance of {schema}{detail}")]
    BadAxiomInstance { schema: AxiomSchema, detail: String },
    #[error("line {0} does not exist before this line")]
    BadReference(usize),
    #[error("modus ponens needs line {j} to be `line {i} -> this line`")]
    BadMpShape { i: usize, j: usize },
    #[error("R# needs line {0} to be an implication `A -> B` and this line `#A -> #B`")]
    RNablaShape(usize),
    #[error("R# cites line {0}, which depends on a premise")]
    RNablaOnPremiseDependent(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {reason}")]
pub struct Rejection {
    pub line: usize,
    pub reason: RejectReason,
}

pub fn check_proof(lines: &[ProofLine], premises: &[Formula]) -> Result<Accepted, Rejection> {
    let reject = |line, reason| Rejection { line, reason };
    if lines.is_empty() {
        return Err(reject(0, RejectReason::Empty));
    }
    // depends[k]: line k + 1 rests on a premise
    let mut depends: Vec<bool> = Vec::with_capacity(lines.len());
    for (pos, line) in lines.iter().enumerate() {
        let index = pos + 1;
        if line.index != index {
            return Err(reject(line.index, RejectReason::BadIndex { expected: index }));
        }
        let cited = |i: usize| -> Result<&ProofLine, Rejection> {
            if i == 0 || i >= index {
                Err(reject(index, RejectReason::BadReference(i)))
            } else {
                Ok(&lines[i - 1])
            }
        };
        let dep = match &line.justification {
            Justification::Premise => {
                if !premises.contains(&line.formula) {
                    return Err(reject(index, RejectReason::NotAPremise(line.formula.clone())));
                }
                true
            }
            Justification::Axiom(AxiomSchema::Lpc, _) => {
                if !line.formula.is_classical_tautology() {
                    return Err(reject(index, RejectReason::NotATautology));
                }
                false
            }
            Justification::Axiom(schema, bindings) => {
                let ok = if bindings.is_empty() {
                    match_schema(*schema, &line.formula).is_some()
                } else {
                    match instantiate(*schema, bindings) {
                        Ok(inst) => inst == line.formula,
                        Err(e) => {
                            return Err(reject(
                                index,
                                RejectReason::BadAxiomInstance {
                                    schema: *schema,
                                    detail: format!(": {e}"),
                                },
                            ))
                        }
                    }
                };
                if !ok {
                    return Err(reject(
                        index,
                        RejectReason::BadAxiomInstance {
                            schema: *schema,
                            detail: String::new(),
                        },
                    ));
                }
                false
            }
            Justification::Mp(i, j) => {
                let (minor, major) = (cited(*i)?, cited(*j)?);
                let expected = Formula::implies(minor.formula.clone(), line.formula.clone());
                if major.formula != expected {
                    return Err(reject(index, RejectReason::BadMpShape { i: *i, j: *j }));
                }
                depends[*i - 1] || depends[*j - 1]
            }
            Justification::RNabla(i) => {
                let source = cited(*i)?;
                let shape_ok = match &source.formula {
                    Formula::Implies(a, b) => {
                        line.formula
                            == Formula::implies(
                                Formula::nabla((**a).clone()),
                                Formula::nabla((**b).clone()),
                            )
                    }
                    _ => false,
                };
                if !shape_ok {
                    return Err(reject(index, RejectReason::RNablaShape(*i)));
                }
                if depends[*i - 1] {
                    return Err(reject(index, RejectReason::RNablaOnPremiseDependent(*i)));
                }
                false
            }
        };
        depends.push(dep);
    }
    Ok(Accepted {
        formula: lines.last().expect("nonempty").formula.clone(),
        theorem: !depends[depends.len() - 1],
    })
}

#[cfg(test)]
mod tests;
