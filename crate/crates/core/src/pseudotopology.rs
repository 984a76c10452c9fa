//! Pseudo-topological spaces `(E, Ω)`: `E = {0..n}` and a family `Ω` of
//! subsets closed under binary intersection (E1) and union (E2), containing
//! `E` (E3) and not containing the empty set (E4).
//!
//! Subsets are `u64` bitmasks, so universes hold at most 64 points.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::Formula;

pub type Subset = u64;

/// Largest universe the enumerator accepts.
pub const MAX_ENUM_SIZE: u32 = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpaceError {
    #[error("universe size must be between 1 and {max}, got {got}")]
    BadUniverseSize { got: u32, max: u32 },
    #[error("subset {subset:#b} is not contained in a universe of {universe_size} points")]
    OutOfRange { subset: Subset, universe_size: u32 },
    #[error("no value given for formula `{0}`")]
    MissingValue(Formula),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceViolation {
    E1 { a: Subset, b: Subset },
    E2 { a: Subset, b: Subset },
    E3,
    E4,
}

impl fmt::Display for SpaceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceViolation::E1 { a, b } => {
                write!(f, "E1 fails: {a:#b} & {b:#b} = {:#b} is not open", a & b)
            }
            SpaceViolation::E2 { a, b } => {
                write!(f, "E2 fails: {a:#b} | {b:#b} = {:#b} is not open", a | b)
            }
            SpaceViolation::E3 => f.write_str("E3 fails: the universe is not open"),
            SpaceViolation::E4 => f.write_str("E4 fails: the empty set is open"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PseudoTopology {
    pub universe_size: u32,
    pub opens: Vec<Subset>,
}

fn check_size(universe_size: u32, max: u32) -> Result<(), SpaceError> {
    if universe_size == 0 || universe_size > max {
        Err(SpaceError::BadUniverseSize {
            got: universe_size,
            max,
        })
    } else {
        Ok(())
    }
}

impl PseudoTopology {
    /// Stores `opens` sorted and deduplicated. No axiom is checked here.
    pub fn new(universe_size: u32, mut opens: Vec<Subset>) -> Self {
        opens.sort_unstable();
        opens.dedup();
        PseudoTopology {
            universe_size,
            opens,
        }
    }

    /// `Ω = {E}`.
    pub fn trivial(universe_size: u32) -> Self {
        let mut space = PseudoTopology::new(universe_size, vec![]);
        space.opens.push(space.universe());
        space
    }

    /// `Ω = {B ⊆ E : point ∈ B}`.
    pub fn principal(universe_size: u32, point: u32) -> Self {
        assert!(point < universe_size && universe_size <= 20);
        let opens = (0..1u64 << universe_size)
            .filter(|b| b >> point & 1 == 1)
            .collect();
        PseudoTopology::new(universe_size, opens)
    }

    pub fn universe(&self) -> Subset {
        if self.universe_size >= 64 {
            u64::MAX
        } else {
            (1 << self.universe_size) - 1
        }
    }

    pub fn is_open(&self, set: Subset) -> bool {
        self.opens.binary_search(&set).is_ok()
    }

    fn check_subset(&self, subset: Subset) -> Result<(), SpaceError> {
        if subset & !self.universe() != 0 {
            Err(SpaceError::OutOfRange {
                subset,
                universe_size: self.universe_size,
            })
        } else {
            Ok(())
        }
    }

    /// Checks E1–E4. The outer error is for malformed input.
    pub fn validate(&self) -> Result<Result<(), SpaceViolation>, SpaceError> {
        check_size(self.universe_size, 64)?;
        for &s in &self.opens {
            self.check_subset(s)?;
        }
        for &a in &self.opens {
            for &b in &self.opens {
                if !self.is_open(a & b) {
                    return Ok(Err(SpaceViolation::E1 { a, b }));
                }
            }
        }
        for &a in &self.opens {
            for &b in &self.opens {
                if !self.is_open(a | b) {
                    return Ok(Err(SpaceViolation::E2 { a, b }));
                }
            }
        }
        if !self.is_open(self.universe()) {
            return Ok(Err(SpaceViolation::E3));
        }
        if self.is_open(0) {
            return Ok(Err(SpaceViolation::E4));
        }
        Ok(Ok(()))
    }

    /// No two opens are disjoint.
    pub fn pairwise_nondisjoint(&self) -> bool {
        self.opens
            .iter()
            .all(|&a| self.opens.iter().all(|&b| a & b != 0))
    }

    /// Number of open singletons.
    pub fn singleton_opens(&self) -> usize {
        self.opens.iter().filter(|s| s.count_ones() == 1).count()
    }

    /// Checks the constraints a valuation of formulas into subsets of `E`
    /// has to respect:
    ///
    /// * a classical tautology is sent to `E`;
    /// * `false` is not sent into `Ω`;
    /// * `φ & ψ` is open when `φ` and `ψ` both are;
    /// * `φ | ψ` is open when `φ` or `ψ` is;
    /// * classically equivalent formulas are open together.
    ///
    /// Formulas are visited in list order, then equivalent pairs `(i, j)`
    /// with `i < j`; the first violated constraint is reported.
    pub fn check_valuation_constraints(
        &self,
        v: &BTreeMap<Formula, Subset>,
        formulas: &[Formula],
    ) -> Result<Result<(), ConstraintViolation>, SpaceError> {
        let value = |f: &Formula| -> Result<Subset, SpaceError> {
            let s = *v.get(f).ok_or_else(|| SpaceError::MissingValue(f.clone()))?;
            self.check_subset(s)?;
            Ok(s)
        };
        let open = |f: &Formula| -> Result<Option<bool>, SpaceError> {
            match v.get(f) {
                Some(_) => Ok(Some(self.is_open(value(f)?))),
                None => Ok(None),
            }
        };
        for f in formulas {
            let here = value(f)?;
            if f.is_classical_tautology() && here != self.universe() {
                return Ok(Err(ConstraintViolation::Tautology(f.clone())));
            }
            if *f == Formula::Bottom && self.is_open(here) {
                return Ok(Err(ConstraintViolation::BottomOpen));
            }
            match f {
                Formula::And(a, b) => {
                    if let (Some(true), Some(true)) = (open(a)?, open(b)?) {
                        if !self.is_open(here) {
                            return Ok(Err(ConstraintViolation::Conjunction(f.clone())));
                        }
                    }
                }
                Formula::Or(a, b)
                    if (open(a)? == Some(true) || open(b)? == Some(true)) && !self.is_open(here) =>
                {
                    return Ok(Err(ConstraintViolation::Disjunction(f.clone())));
                }
                _ => {}
            }
        }
        for (i, a) in formulas.iter().enumerate() {
            for b in &formulas[i + 1..] {
                let equivalent = Formula::iff(a.clone(), b.clone()).is_classical_tautology();
                if equivalent && self.is_open(value(a)?) != self.is_open(value(b)?) {
                    return Ok(Err(ConstraintViolation::Equivalence(a.clone(), b.clone())));
                }
            }
        }
        Ok(Ok(()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstraintViolation {
    Tautology(Formula),
    BottomOpen,
    Conjunction(Formula),
    Disjunction(Formula),
    Equivalence(Formula, Formula),
}

impl fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintViolation::Tautology(t) => {
                write!(f, "tautology `{t}` is not sent to the universe")
            }
            ConstraintViolation::BottomOpen => f.write_str("`false` is sent to an open set"),
            ConstraintViolation::Conjunction(c) => {
                write!(f, "both conjuncts of `{c}` are open but the conjunction is not")
            }
            ConstraintViolation::Disjunction(d) => {
                write!(f, "a disjunct of `{d}` is open but the disjunction is not")
            }
            ConstraintViolation::Equivalence(a, b) => {
                write!(f, "`{a}` and `{b}` are equivalent but only one is open")
            }
        }
    }
}

/// Every pseudo-topology on `universe_size` points, ordered by the family
/// bitmask (bit `s` set iff subset `s` is open).
pub fn enumerate_spaces(universe_size: u32) -> Result<Vec<PseudoTopology>, SpaceError> {
    check_size(universe_size, MAX_ENUM_SIZE)?;
    let universe: Subset = (1 << universe_size) - 1;
    let mut out = Vec::new();
    // Subsets are decided from the universe downwards, excluded first, which
    // yields families in increasing bitmask order.
    let mut chosen = vec![universe];
    decide(universe - 1, &mut chosen, &mut out, universe_size);
    Ok(out)
}

fn decide(
    next: Subset,
    chosen: &mut Vec<Subset>,
    out: &mut Vec<PseudoTopology>,
    universe_size: u32,
) {
    // The empty set is never open (E4).
    if next == 0 {
        let space = PseudoTopology::new(universe_size, chosen.clone());
        if space.validate() == Ok(Ok(())) {
            out.push(space);
        }
        return;
    }
    // Excluding `next` is only possible if no pair of larger chosen sets
    // meets exactly in it.
    let is_meet = chosen
        .iter()
        .any(|&a| chosen.iter().any(|&b| a & b == next));
    if !is_meet {
        decide(next - 1, chosen, out, universe_size);
    }
    // Including it needs every union with a larger chosen set to be chosen
    // already, and no chosen set disjoint from it.
    let compatible = chosen
        .iter()
        .all(|&a| a & next != 0 && chosen.contains(&(a | next)));
    if compatible {
        chosen.push(next);
        decide(next - 1, chosen, out, universe_size);
        chosen.pop();
    }
}
