use rustc_hash::{FxHashMap as HashMap, FxHashSet as HashSet};
use std::cell::Cell;
use std::collections::hash_map::Entry;
use std::fmt;

use serde::Serialize;

use crate::formula::Formula;

/// Name of the rule that introduced a formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RuleId {
    Premise,
    NegatedGoal,
    DoubleNegation,
    Conjunction,
    NegatedDisjunction,
    NegatedImplication,
    NegatedTop,
    Biconditional,
    Disjunction,
    NegatedConjunction,
    Implication,
    NegatedBiconditional,
    R1,
    R2,
    R3,
    R4,
    R5A,
    R5B,
    R6,
}

impl RuleId {
    fn bit(self) -> u32 {
        1 << self as u32
    }

    pub fn label(self) -> &'static str {
        match self {
            RuleId::Premise => "premise",
            RuleId::NegatedGoal => "negated goal",
            RuleId::DoubleNegation => "~~",
            RuleId::Conjunction => "&",
            RuleId::NegatedDisjunction => "~|",
            RuleId::NegatedImplication => "~->",
            RuleId::NegatedTop => "~true",
            RuleId::Biconditional => "<->",
            RuleId::Disjunction => "|",
            RuleId::NegatedConjunction => "~&",
            RuleId::Implication => "->",
            RuleId::NegatedBiconditional => "~<->",
            RuleId::R1 => "R1",
            RuleId::R2 => "R2",
            RuleId::R3 => "R3",
            RuleId::R4 => "R4",
            RuleId::R5A => "R5A",
            RuleId::R5B => "R5B",
            RuleId::R6 => "R6",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One path of a tableau.
///
/// Closed iff the contradiction flag is set, `false` is a member, or some
/// `A` and `~A` are both members.
#[derive(Debug, Clone, Default)]
pub struct Branch {
    formulas: Vec<Formula>,
    /// Rules already applied to each member, one bit per `RuleId`.
    consumed: Vec<u32>,
    /// Position of each member in `formulas`.
    members: HashMap<Formula, usize>,
    /// `A` for every member `~A`.
    negated: HashSet<Formula>,
    /// Consumption marks on formulas that are not members (R6 on pairs).
    consumed_elsewhere: HashMap<Formula, u32>,
    contradiction: bool,
    closed: bool,
    /// Every `#A`, `~#B` pair among the first this-many members has been
    /// tried for R6 without success.
    pub(crate) pairs_checked: Cell<usize>,
}

impl PartialEq for Branch {
    fn eq(&self, other: &Self) -> bool {
        self.formulas == other.formulas
            && self.consumed == other.consumed
            && self.consumed_elsewhere == other.consumed_elsewhere
            && self.contradiction == other.contradiction
    }
}

impl Eq for Branch {}

impl Branch {
    pub fn new(formulas: impl IntoIterator<Item = Formula>) -> Self {
        let mut branch = Branch::default();
        for f in formulas {
            branch.add(f);
        }
        branch
    }

    /// Members in insertion order.
    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.members.contains_key(f)
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn contradiction_flag(&self) -> bool {
        self.contradiction
    }

    pub fn is_consumed(&self, rule: RuleId, f: &Formula) -> bool {
        let bits = match self.members.get(f) {
            Some(&i) => self.consumed[i],
            None => self.consumed_elsewhere.get(f).copied().unwrap_or(0),
        };
        bits & rule.bit() != 0
    }

    /// `is_consumed` for the member at position `i`.
    pub(crate) fn is_consumed_at(&self, i: usize, rule: RuleId) -> bool {
        self.consumed[i] & rule.bit() != 0
    }

    pub(crate) fn consume(&mut self, rule: RuleId, f: &Formula) {
        match self.members.get(f) {
            Some(&i) => self.consumed[i] |= rule.bit(),
            None => *self.consumed_elsewhere.entry(f.clone()).or_default() |= rule.bit(),
        }
    }

    pub(crate) fn set_contradiction(&mut self) {
        self.contradiction = true;
        self.closed = true;
    }

    /// Adds `f` if absent; returns whether it was new.
    pub fn add(&mut self, f: Formula) -> bool {
        let i = self.formulas.len();
        match self.members.entry(f.clone()) {
            Entry::Occupied(_) => return false,
            Entry::Vacant(slot) => {
                slot.insert(i);
            }
        }
        let clashes = match &f {
            Formula::Bottom => true,
            Formula::Not(g) => {
                let hit = self.members.contains_key(g.as_ref());
                self.negated.insert((**g).clone());
                hit
            }
            _ => false,
        } || self.negated.contains(&f);
        if clashes {
            self.closed = true;
        }
        // marks set while `f` was not yet a member carry over
        let bits = if self.consumed_elsewhere.is_empty() {
            0
        } else {
            self.consumed_elsewhere.remove(&f).unwrap_or(0)
        };
        self.formulas.push(f);
        self.consumed.push(bits);
        true
    }
}
