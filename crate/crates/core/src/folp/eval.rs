use std::collections::BTreeMap;

use thiserror::Error;

use super::structure::PlausibleStructure;
use super::{FoFormula, Quantifier, Term};
use crate::pseudotopology::Subset;

pub type Assignment = BTreeMap<String, u32>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FolError {
    #[error("`{0}` is neither a bound variable nor a constant of the structure")]
    UnboundName(String),
    #[error("unknown relation `{0}`")]
    UnknownRelation(String),
    #[error("unknown function `{0}`")]
    UnknownFunction(String),
    #[error("`{symbol}` takes {expected} argument(s), given {found}")]
    ArityMismatch {
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error("variable `{var}` is assigned {value}, outside the domain")]
    AssignmentOutOfRange { var: String, value: u32 },
}

/// Scope during checking and evaluation; later entries shadow earlier ones.
type Env = Vec<(String, u32)>;

fn lookup(env: &Env, name: &str) -> Option<u32> {
    env.iter().rev().find(|(n, _)| n == name).map(|&(_, v)| v)
}

fn initial_env(m: &PlausibleStructure, assignment: &Assignment) -> Result<Env, FolError> {
    assignment
        .iter()
        .map(|(var, &value)| {
            if value < m.domain_size {
                Ok((var.clone(), value))
            } else {
                Err(FolError::AssignmentOutOfRange {
                    var: var.clone(),
                    value,
                })
            }
        })
        .collect()
}

/// Tarskian satisfaction; `P x. φ` holds iff `{b : φ[x := b]}` is open.
pub fn satisfies(
    m: &PlausibleStructure,
    phi: &FoFormula,
    assignment: &Assignment,
) -> Result<bool, FolError> {
    let mut env = initial_env(m, assignment)?;
    check(m, phi, &mut env)?;
    Ok(eval(m, phi, &mut env))
}

/// `{b : φ[x := b]}` as a bitmask over the domain.
pub fn definable_set(
    m: &PlausibleStructure,
    x: &str,
    phi: &FoFormula,
    assignment: &Assignment,
) -> Result<Subset, FolError> {
    let mut env = initial_env(m, assignment)?;
    env.push((x.to_string(), 0));
    check(m, phi, &mut env)?;
    env.pop();
    Ok(extension(m, x, phi, &mut env))
}

// Arity and scope checks up front, so evaluation cannot fail halfway and
// errors do not depend on short-circuiting.
fn check(m: &PlausibleStructure, phi: &FoFormula, env: &mut Env) -> Result<(), FolError> {
    match phi {
        FoFormula::True | FoFormula::False => Ok(()),
        FoFormula::Rel(r, args) => {
            let rel = m
                .relations
                .get(r)
                .ok_or_else(|| FolError::UnknownRelation(r.clone()))?;
            if let Some(expected) = rel.arity {
                if expected != args.len() {
                    return Err(FolError::ArityMismatch {
                        symbol: r.clone(),
                        expected,
                        found: args.len(),
                    });
                }
            }
            args.iter().try_for_each(|t| check_term(m, t, env))
        }
        FoFormula::Eq(a, b) => {
            check_term(m, a, env)?;
            check_term(m, b, env)
        }
        FoFormula::Not(a) => check(m, a, env),
        FoFormula::And(a, b)
        | FoFormula::Or(a, b)
        | FoFormula::Implies(a, b)
        | FoFormula::Iff(a, b) => {
            check(m, a, env)?;
            check(m, b, env)
        }
        FoFormula::Quant(_, v, body) => {
            env.push((v.clone(), 0));
            let r = check(m, body, env);
            env.pop();
            r
        }
    }
}

fn check_term(m: &PlausibleStructure, t: &Term, env: &Env) -> Result<(), FolError> {
    match t {
        Term::Name(n) => {
            let known = lookup(env, n).is_some()
                || m.constants.contains_key(n)
                || m.functions.get(n).is_some_and(|f| f.arity == 0);
            if known {
                Ok(())
            } else {
                Err(FolError::UnboundName(n.clone()))
            }
        }
        Term::App(name, args) => {
            let f = m
                .functions
                .get(name)
                .ok_or_else(|| FolError::UnknownFunction(name.clone()))?;
            if f.arity != args.len() {
                return Err(FolError::ArityMismatch {
                    symbol: name.clone(),
                    expected: f.arity,
                    found: args.len(),
                });
            }
            args.iter().try_for_each(|a| check_term(m, a, env))
        }
    }
}

fn value(m: &PlausibleStructure, t: &Term, env: &Env) -> u32 {
    match t {
        Term::Name(n) => lookup(env, n)
            .or_else(|| m.constants.get(n).copied())
            .unwrap_or_else(|| m.apply(&m.functions[n], &[])),
        Term::App(name, args) => {
            let args: Vec<u32> = args.iter().map(|a| value(m, a, env)).collect();
            m.apply(&m.functions[name], &args)
        }
    }
}

fn extension(m: &PlausibleStructure, x: &str, body: &FoFormula, env: &mut Env) -> Subset {
    let mut set = 0;
    env.push((x.to_string(), 0));
    for b in 0..m.domain_size {
        env.last_mut().expect("just pushed").1 = b;
        if eval(m, body, env) {
            set |= 1 << b;
        }
    }
    env.pop();
    set
}

fn eval(m: &PlausibleStructure, phi: &FoFormula, env: &mut Env) -> bool {
    match phi {
        FoFormula::True => true,
        FoFormula::False => false,
        FoFormula::Rel(r, args) => {
            let tuple: Vec<u32> = args.iter().map(|t| value(m, t, env)).collect();
            m.relations[r].tuples.contains(&tuple)
        }
        FoFormula::Eq(a, b) => value(m, a, env) == value(m, b, env),
        FoFormula::Not(a) => !eval(m, a, env),
        FoFormula::And(a, b) => eval(m, a, env) && eval(m, b, env),
        FoFormula::Or(a, b) => eval(m, a, env) || eval(m, b, env),
        FoFormula::Implies(a, b) => !eval(m, a, env) || eval(m, b, env),
        FoFormula::Iff(a, b) => eval(m, a, env) == eval(m, b, env),
        FoFormula::Quant(q, x, body) => {
            let set = extension(m, x, body, env);
            match q {
                Quantifier::Forall => set == m.omega.universe(),
                Quantifier::Exists => set != 0,
                Quantifier::Plausibly => m.omega.is_open(set),
            }
        }
    }
}
