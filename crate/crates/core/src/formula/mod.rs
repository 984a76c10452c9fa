//! The propositional language of the plausibility operator `#` (∇).
//!
//! Formulas are plain immutable trees. Nothing is normalised implicitly:
//! `~~p` and `p` are different formulas, and `<->` is a primitive connective.

pub(crate) mod lexer;
pub(crate) mod parse;

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

pub use parse::{parse, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Formula {
    Atom(Arc<str>),
    Bottom,
    Top,
    Not(Arc<Formula>),
    And(Arc<Formula>, Arc<Formula>),
    Or(Arc<Formula>, Arc<Formula>),
    Implies(Arc<Formula>, Arc<Formula>),
    Iff(Arc<Formula>, Arc<Formula>),
    Nabla(Arc<Formula>),
}

// Hashing stops a few levels down: tableau branches hash the same large
// formulas over and over, and equality does the rest.
const HASH_DEPTH: u32 = 4;

impl Hash for Formula {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.hash_to(HASH_DEPTH, state);
    }
}

impl Formula {
    fn hash_to<H: Hasher>(&self, depth: u32, state: &mut H) {
        std::mem::discriminant(self).hash(state);
        if depth == 0 {
            return;
        }
        match self {
            Formula::Atom(n) => n.hash(state),
            Formula::Bottom | Formula::Top => {}
            Formula::Not(a) | Formula::Nabla(a) => a.hash_to(depth - 1, state),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.hash_to(depth - 1, state);
                b.hash_to(depth - 1, state);
            }
        }
    }

    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(Arc::from(name.into()))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Arc::new(f))
    }

    pub fn nabla(f: Formula) -> Self {
        Formula::Nabla(Arc::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Arc::new(a), Arc::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Arc::new(a), Arc::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Arc::new(a), Arc::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::Iff(Arc::new(a), Arc::new(b))
    }

    /// Node count of the tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Bottom | Formula::Top => 1,
            Formula::Not(a) | Formula::Nabla(a) => 1 + a.size(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }

    /// Atom names in lexicographic order.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(n) => {
                out.insert(n.to_string());
            }
            Formula::Bottom | Formula::Top => {}
            Formula::Not(a) | Formula::Nabla(a) => a.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    pub fn contains_nabla(&self) -> bool {
        match self {
            Formula::Atom(_) | Formula::Bottom | Formula::Top => false,
            Formula::Nabla(_) => true,
            Formula::Not(a) => a.contains_nabla(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.contains_nabla() || b.contains_nabla()
            }
        }
    }

    /// Replaces every `#X` by (the translation of) `X`.
    pub fn erase_nabla(&self) -> Formula {
        match self {
            Formula::Atom(_) | Formula::Bottom | Formula::Top => self.clone(),
            Formula::Nabla(a) => a.erase_nabla(),
            Formula::Not(a) => Formula::not(a.erase_nabla()),
            Formula::And(a, b) => Formula::and(a.erase_nabla(), b.erase_nabla()),
            Formula::Or(a, b) => Formula::or(a.erase_nabla(), b.erase_nabla()),
            Formula::Implies(a, b) => Formula::implies(a.erase_nabla(), b.erase_nabla()),
            Formula::Iff(a, b) => Formula::iff(a.erase_nabla(), b.erase_nabla()),
        }
    }

    /// Truth-table check where atoms and maximal `#`-subformulas are the
    /// propositional letters.
    pub fn is_classical_tautology(&self) -> bool {
        let mut letters = BTreeSet::new();
        self.collect_letters(&mut letters);
        let letters: Vec<&Formula> = letters.into_iter().collect();
        assert!(letters.len() < 64, "too many propositional letters for a truth table");
        (0..1u64 << letters.len()).all(|row| {
            self.eval_classical(&|letter| {
                let i = letters.iter().position(|l| *l == letter).expect("letter collected");
                (row >> (letters.len() - 1 - i)) & 1 == 1
            })
        })
    }

    fn collect_letters<'a>(&'a self, out: &mut BTreeSet<&'a Formula>) {
        match self {
            Formula::Atom(_) | Formula::Nabla(_) => {
                out.insert(self);
            }
            Formula::Bottom | Formula::Top => {}
            Formula::Not(a) => a.collect_letters(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.collect_letters(out);
                b.collect_letters(out);
            }
        }
    }

    /// Boolean evaluation; `letter` decides atoms and `#`-subformulas.
    pub fn eval_classical(&self, letter: &dyn Fn(&Formula) -> bool) -> bool {
        match self {
            Formula::Atom(_) | Formula::Nabla(_) => letter(self),
            Formula::Bottom => false,
            Formula::Top => true,
            Formula::Not(a) => !a.eval_classical(letter),
            Formula::And(a, b) => a.eval_classical(letter) && b.eval_classical(letter),
            Formula::Or(a, b) => a.eval_classical(letter) || b.eval_classical(letter),
            Formula::Implies(a, b) => !a.eval_classical(letter) || b.eval_classical(letter),
            Formula::Iff(a, b) => a.eval_classical(letter) == b.eval_classical(letter),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Iff(..) => 1,
            Formula::Implies(..) => 2,
            Formula::Or(..) => 3,
            Formula::And(..) => 4,
            Formula::Not(_) | Formula::Nabla(_) => 5,
            Formula::Atom(_) | Formula::Bottom | Formula::Top => 6,
        }
    }

    /// Canonical text with minimal parentheses.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

/// `Not(f)`, without any double-negation stripping.
pub fn negate(f: &Formula) -> Formula {
    Formula::not(f.clone())
}

fn write_operand(
    f: &mut fmt::Formatter<'_>,
    child: &Formula,
    parenthesize: bool,
) -> fmt::Result {
    if parenthesize {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prec = self.precedence();
        match self {
            Formula::Atom(n) => f.write_str(n),
            Formula::Bottom => f.write_str("false"),
            Formula::Top => f.write_str("true"),
            Formula::Not(a) | Formula::Nabla(a) => {
                f.write_str(if matches!(self, Formula::Not(_)) { "~" } else { "#" })?;
                write_operand(f, a, a.precedence() < prec)
            }
            Formula::And(a, b) | Formula::Or(a, b) => {
                let op = if matches!(self, Formula::And(..)) { " & " } else { " | " };
                write_operand(f, a, a.precedence() < prec)?;
                f.write_str(op)?;
                write_operand(f, b, b.precedence() <= prec)
            }
            Formula::Implies(a, b) | Formula::Iff(a, b) => {
                let op = if matches!(self, Formula::Implies(..)) { " -> " } else { " <-> " };
                write_operand(f, a, a.precedence() <= prec)?;
                f.write_str(op)?;
                write_operand(f, b, b.precedence() < prec)
            }
        }
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
