//! First-order logic with the plausibility quantifier `P`, evaluated over
//! finite structures carrying a pseudo-topology `Ω` on the domain.
//!
//! `P x. φ` holds when `{b : φ(b)}` is an open of `Ω`.

mod axioms;
mod eval;
mod parse;
mod structure;

use std::collections::BTreeSet;
use std::fmt;

pub use axioms::{check_axioms, AxiomReport, AxiomVerdict, FoAxiom};
pub use eval::{definable_set, satisfies, Assignment, FolError};
pub use parse::parse_fo;
pub use structure::{PlausibleStructure, StructureError, StructureFile};

/// A bare name is a variable when bound (by a quantifier or the
/// assignment), otherwise a constant or nullary function of the structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Name(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn name(n: impl Into<String>) -> Self {
        Term::Name(n.into())
    }

    fn collect_names(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Name(n) => {
                out.insert(n.clone());
            }
            Term::App(_, args) => args.iter().for_each(|t| t.collect_names(out)),
        }
    }

    fn rename(&self, from: &str, to: &str) -> Term {
        match self {
            Term::Name(n) if n == from => Term::Name(to.to_string()),
            Term::Name(_) => self.clone(),
            Term::App(f, args) => Term::App(f.clone(), args.iter().map(|t| t.rename(from, to)).collect()),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Name(n) => f.write_str(n),
            Term::App(name, args) => {
                write!(f, "{name}(")?;
                write_list(f, args)?;
                f.write_str(")")
            }
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, terms: &[Term]) -> fmt::Result {
    for (i, t) in terms.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{t}")?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Forall,
    Exists,
    /// "for a good part of the domain"
    Plausibly,
}

impl Quantifier {
    fn keyword(self) -> &'static str {
        match self {
            Quantifier::Forall => "forall",
            Quantifier::Exists => "exists",
            Quantifier::Plausibly => "P",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FoFormula {
    True,
    False,
    /// Predicate application; zero arguments is a propositional constant.
    Rel(String, Vec<Term>),
    Eq(Term, Term),
    Not(Box<FoFormula>),
    And(Box<FoFormula>, Box<FoFormula>),
    Or(Box<FoFormula>, Box<FoFormula>),
    Implies(Box<FoFormula>, Box<FoFormula>),
    Iff(Box<FoFormula>, Box<FoFormula>),
    Quant(Quantifier, String, Box<FoFormula>),
}

impl FoFormula {
    pub fn rel(name: impl Into<String>, args: Vec<Term>) -> Self {
        FoFormula::Rel(name.into(), args)
    }

    /// `name(var)`
    pub fn unary(name: &str, var: &str) -> Self {
        FoFormula::rel(name, vec![Term::name(var)])
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: FoFormula) -> Self {
        FoFormula::Not(Box::new(a))
    }

    pub fn and(a: FoFormula, b: FoFormula) -> Self {
        FoFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: FoFormula, b: FoFormula) -> Self {
        FoFormula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: FoFormula, b: FoFormula) -> Self {
        FoFormula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: FoFormula, b: FoFormula) -> Self {
        FoFormula::Iff(Box::new(a), Box::new(b))
    }

    pub fn quant(q: Quantifier, var: &str, body: FoFormula) -> Self {
        FoFormula::Quant(q, var.to_string(), Box::new(body))
    }

    pub fn forall(var: &str, body: FoFormula) -> Self {
        FoFormula::quant(Quantifier::Forall, var, body)
    }

    pub fn exists(var: &str, body: FoFormula) -> Self {
        FoFormula::quant(Quantifier::Exists, var, body)
    }

    pub fn plausibly(var: &str, body: FoFormula) -> Self {
        FoFormula::quant(Quantifier::Plausibly, var, body)
    }

    /// Names occurring free, whether they end up as variables or constants.
    pub fn free_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            FoFormula::True | FoFormula::False => {}
            FoFormula::Rel(_, args) => {
                let mut names = BTreeSet::new();
                args.iter().for_each(|t| t.collect_names(&mut names));
                out.extend(names.into_iter().filter(|n| !bound.contains(n)));
            }
            FoFormula::Eq(a, b) => {
                let mut names = BTreeSet::new();
                a.collect_names(&mut names);
                b.collect_names(&mut names);
                out.extend(names.into_iter().filter(|n| !bound.contains(n)));
            }
            FoFormula::Not(a) => a.collect_free(bound, out),
            FoFormula::And(a, b)
            | FoFormula::Or(a, b)
            | FoFormula::Implies(a, b)
            | FoFormula::Iff(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            FoFormula::Quant(_, v, body) => {
                bound.push(v.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Every name, bound or free, including bound variables.
    pub fn all_names(&self) -> BTreeSet<String> {
        let mut out = self.free_names();
        self.walk(&mut |f| {
            if let FoFormula::Quant(_, v, _) = f {
                out.insert(v.clone());
            }
        });
        out
    }

    fn walk(&self, visit: &mut dyn FnMut(&FoFormula)) {
        visit(self);
        match self {
            FoFormula::Not(a) | FoFormula::Quant(_, _, a) => a.walk(visit),
            FoFormula::And(a, b)
            | FoFormula::Or(a, b)
            | FoFormula::Implies(a, b)
            | FoFormula::Iff(a, b) => {
                a.walk(visit);
                b.walk(visit);
            }
            _ => {}
        }
    }

    /// Replaces free occurrences of `from` by `to`. The caller picks `to`
    /// fresh, so nothing is captured.
    pub fn rename_free(&self, from: &str, to: &str) -> FoFormula {
        let bin = |a: &FoFormula, b: &FoFormula| {
            (Box::new(a.rename_free(from, to)), Box::new(b.rename_free(from, to)))
        };
        match self {
            FoFormula::True | FoFormula::False => self.clone(),
            FoFormula::Rel(r, args) => {
                FoFormula::Rel(r.clone(), args.iter().map(|t| t.rename(from, to)).collect())
            }
            FoFormula::Eq(a, b) => FoFormula::Eq(a.rename(from, to), b.rename(from, to)),
            FoFormula::Not(a) => FoFormula::not(a.rename_free(from, to)),
            FoFormula::And(a, b) => {
                let (a, b) = bin(a, b);
                FoFormula::And(a, b)
            }
            FoFormula::Or(a, b) => {
                let (a, b) = bin(a, b);
                FoFormula::Or(a, b)
            }
            FoFormula::Implies(a, b) => {
                let (a, b) = bin(a, b);
                FoFormula::Implies(a, b)
            }
            FoFormula::Iff(a, b) => {
                let (a, b) = bin(a, b);
                FoFormula::Iff(a, b)
            }
            FoFormula::Quant(_, v, _) if v == from => self.clone(),
            FoFormula::Quant(q, v, body) => FoFormula::quant(*q, v, body.rename_free(from, to)),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            FoFormula::Quant(..) => 0,
            FoFormula::Iff(..) => 1,
            FoFormula::Implies(..) => 2,
            FoFormula::Or(..) => 3,
            FoFormula::And(..) => 4,
            FoFormula::Not(_) => 5,
            _ => 6,
        }
    }
}

fn operand(f: &mut fmt::Formatter<'_>, child: &FoFormula, paren: bool) -> fmt::Result {
    // A quantifier's body runs to the end, so one is always bracketed
    // inside another connective.
    if paren || child.precedence() == 0 {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for FoFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prec = self.precedence();
        let (a, b, op, left_assoc) = match self {
            FoFormula::True => return f.write_str("true"),
            FoFormula::False => return f.write_str("false"),
            FoFormula::Rel(r, args) if args.is_empty() => return f.write_str(r),
            FoFormula::Rel(r, args) => {
                write!(f, "{r}(")?;
                write_list(f, args)?;
                return f.write_str(")");
            }
            FoFormula::Eq(a, b) => return write!(f, "{a} = {b}"),
            FoFormula::Not(a) => {
                f.write_str("~")?;
                return operand(f, a, a.precedence() < prec);
            }
            FoFormula::Quant(q, v, body) => return write!(f, "{} {v}. {body}", q.keyword()),
            FoFormula::And(a, b) => (a, b, " & ", true),
            FoFormula::Or(a, b) => (a, b, " | ", true),
            FoFormula::Implies(a, b) => (a, b, " -> ", false),
            FoFormula::Iff(a, b) => (a, b, " <-> ", false),
        };
        if left_assoc {
            operand(f, a, a.precedence() < prec)?;
            f.write_str(op)?;
            operand(f, b, b.precedence() <= prec)
        } else {
            operand(f, a, a.precedence() <= prec)?;
            f.write_str(op)?;
            operand(f, b, b.precedence() < prec)
        }
    }
}

impl std::str::FromStr for FoFormula {
    type Err = crate::formula::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_fo(s)
    }
}

#[cfg(test)]
mod tests;
