//! Finite plausible algebras: the powerset Boolean algebra on `n` generators
//! plus a `sharp` operator table.
//!
//! Elements are bitmasks `0..2^n`; meet is `&`, join is `|`, complement is
//! xor with the top element. `sharp` must satisfy
//!
//! * (a1) `sharp(a) & sharp(b) <= sharp(a & b)`
//! * (a2) `sharp(a) <= sharp(a | b)`
//! * (a3) `sharp(a) <= a`
//! * (a4) `sharp(top) = top`
//!
//! This module is the brute-force semantic oracle the tableau prover is
//! cross-checked against.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::Formula;

/// Largest generator count the enumerator accepts.
pub const MAX_ATOMS: u32 = 3;

pub type Element = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("n_atoms must be between 1 and {max}, got {got}")]
    BadAtomCount { got: u32, max: u32 },
    #[error("sharp table has {got} entries, expected {expected}")]
    TableLength { got: usize, expected: usize },
    #[error("sharp({index}) = {value} is not an element of the algebra")]
    OutOfRange { index: usize, value: Element },
    #[error("atom `{0}` has no value in the valuation")]
    UnboundAtom(String),
    #[error("value {value} of atom `{atom}` is not an element of the algebra")]
    ValuationOutOfRange { atom: String, value: Element },
}

/// Which defining axiom a table violates, with witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomViolation {
    A1 { a: Element, b: Element },
    A2 { a: Element, b: Element },
    A3 { a: Element },
    A4,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::A1 { a, b } => {
                write!(f, "a1 fails: #{a} & #{b} is not below #({a} & {b})")
            }
            AxiomViolation::A2 { a, b } => {
                write!(f, "a2 fails: #{a} is not below #({a} | {b})")
            }
            AxiomViolation::A3 { a } => write!(f, "a3 fails: #{a} is not below {a}"),
            AxiomViolation::A4 => f.write_str("a4 fails: #1 is not 1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlausibleAlgebra {
    n_atoms: u32,
    sharp: Vec<Element>,
}

fn check_atoms(n_atoms: u32, max: u32) -> Result<(), AlgebraError> {
    if n_atoms == 0 || n_atoms > max {
        Err(AlgebraError::BadAtomCount { got: n_atoms, max })
    } else {
        Ok(())
    }
}

fn check_table(n_atoms: u32, sharp: &[Element]) -> Result<(), AlgebraError> {
    // Tables beyond 16 generators are not meaningful here.
    check_atoms(n_atoms, 16)?;
    let expected = 1usize << n_atoms;
    if sharp.len() != expected {
        return Err(AlgebraError::TableLength {
            got: sharp.len(),
            expected,
        });
    }
    if let Some((index, &value)) = sharp
        .iter()
        .enumerate()
        .find(|&(_, &v)| v as usize >= expected)
    {
        return Err(AlgebraError::OutOfRange { index, value });
    }
    Ok(())
}

fn first_violation(n_atoms: u32, sharp: &[Element]) -> Option<AxiomViolation> {
    let top = (1 << n_atoms) - 1;
    let len = sharp.len() as Element;
    for a in 0..len {
        for b in 0..len {
            if sharp[a as usize] & sharp[b as usize] & !sharp[(a & b) as usize] != 0 {
                return Some(AxiomViolation::A1 { a, b });
            }
        }
    }
    for a in 0..len {
        for b in 0..len {
            if sharp[a as usize] & !sharp[(a | b) as usize] != 0 {
                return Some(AxiomViolation::A2 { a, b });
            }
        }
    }
    if let Some(a) = (0..len).find(|&a| sharp[a as usize] & !a != 0) {
        return Some(AxiomViolation::A3 { a });
    }
    if sharp[top as usize] != top {
        return Some(AxiomViolation::A4);
    }
    None
}

/// Checks a raw table against a1–a4. The outer error is for malformed
/// tables; the inner result names the first violated axiom.
pub fn validate(
    n_atoms: u32,
    sharp: &[Element],
) -> Result<Result<(), AxiomViolation>, AlgebraError> {
    check_table(n_atoms, sharp)?;
    Ok(match first_violation(n_atoms, sharp) {
        Some(v) => Err(v),
        None => Ok(()),
    })
}

impl PlausibleAlgebra {
    /// Builds a validated algebra.
    pub fn new(n_atoms: u32, sharp: Vec<Element>) -> Result<Self, PlausibleAlgebraError> {
        match validate(n_atoms, &sharp)? {
            Ok(()) => Ok(PlausibleAlgebra { n_atoms, sharp }),
            Err(v) => Err(PlausibleAlgebraError::Axiom(v)),
        }
    }

    /// The 2-element algebra; `sharp` is forced to be the identity.
    pub fn two_element() -> Self {
        PlausibleAlgebra {
            n_atoms: 1,
            sharp: vec![0, 1],
        }
    }

    pub fn n_atoms(&self) -> u32 {
        self.n_atoms
    }

    pub fn sharp_table(&self) -> &[Element] {
        &self.sharp
    }

    pub fn top(&self) -> Element {
        (1 << self.n_atoms) - 1
    }

    /// Number of elements, `2^n_atoms`.
    pub fn cardinality(&self) -> usize {
        self.sharp.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        0..self.sharp.len() as Element
    }

    pub fn sharp(&self, a: Element) -> Element {
        self.sharp[a as usize]
    }

    pub fn complement(&self, a: Element) -> Element {
        a ^ self.top()
    }

    /// `{a : a != 0 and sharp(a) = a}`
    pub fn plausible_elements(&self) -> Vec<Element> {
        self.elements()
            .filter(|&a| a != 0 && self.sharp(a) == a)
            .collect()
    }

    pub fn eval(&self, f: &Formula, v: &Valuation) -> Result<Element, AlgebraError> {
        let value = |name: &str| -> Result<Element, AlgebraError> {
            let x = *v
                .get(name)
                .ok_or_else(|| AlgebraError::UnboundAtom(name.to_string()))?;
            if x > self.top() {
                return Err(AlgebraError::ValuationOutOfRange {
                    atom: name.to_string(),
                    value: x,
                });
            }
            Ok(x)
        };
        self.eval_with(f, &value)
    }

    fn eval_with(
        &self,
        f: &Formula,
        value: &dyn Fn(&str) -> Result<Element, AlgebraError>,
    ) -> Result<Element, AlgebraError> {
        Ok(match f {
            Formula::Atom(n) => value(n)?,
            Formula::Bottom => 0,
            Formula::Top => self.top(),
            Formula::Not(a) => self.complement(self.eval_with(a, value)?),
            Formula::Nabla(a) => self.sharp(self.eval_with(a, value)?),
            Formula::And(a, b) => self.eval_with(a, value)? & self.eval_with(b, value)?,
            Formula::Or(a, b) => self.eval_with(a, value)? | self.eval_with(b, value)?,
            Formula::Implies(a, b) => {
                self.complement(self.eval_with(a, value)?) | self.eval_with(b, value)?
            }
            Formula::Iff(a, b) => {
                let (x, y) = (self.eval_with(a, value)?, self.eval_with(b, value)?);
                (self.complement(x) | y) & (self.complement(y) | x)
            }
        })
    }

    /// Every total valuation of `atoms` in lexicographic order; the first
    /// atom is the most significant digit.
    pub fn valuations<'a>(&self, atoms: &'a [String]) -> impl Iterator<Item = Valuation> + 'a {
        let base = self.cardinality() as u64;
        let total = base.pow(atoms.len() as u32);
        (0..total).map(move |mut code| {
            let mut v = Valuation::new();
            for atom in atoms.iter().rev() {
                v.insert(atom.clone(), (code % base) as Element);
                code /= base;
            }
            v
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlausibleAlgebraError {
    #[error(transparent)]
    Malformed(#[from] AlgebraError),
    #[error("{0}")]
    Axiom(AxiomViolation),
}

/// Atom name to element.
pub type Valuation = BTreeMap<String, Element>;

/// Every plausible algebra on `n_atoms` generators, in lexicographic order of
/// the sharp table.
pub fn enumerate_algebras(n_atoms: u32) -> Result<Vec<PlausibleAlgebra>, AlgebraError> {
    check_atoms(n_atoms, MAX_ATOMS)?;
    let len = 1usize << n_atoms;
    let mut out = Vec::new();
    let mut table = vec![0; len];
    extend_table(n_atoms, &mut table, 0, &mut out);
    Ok(out)
}

/// Depth-first over positions; `sharp(a)` ranges over subsets of `a` in
/// increasing order, so the output is lexicographic. Every subset `b` of `a`
/// satisfies `b <= a` numerically, so monotonicity and a1 can be checked
/// against already-fixed entries.
fn extend_table(n_atoms: u32, table: &mut Vec<Element>, pos: usize, out: &mut Vec<PlausibleAlgebra>) {
    let len = table.len();
    if pos == len {
        if first_violation(n_atoms, table).is_none() {
            out.push(PlausibleAlgebra {
                n_atoms,
                sharp: table.clone(),
            });
        }
        return;
    }
    let a = pos as Element;
    let top = (len - 1) as Element;
    for candidate in 0..=a {
        if candidate & !a != 0 {
            continue;
        }
        if a == top && candidate != top {
            continue;
        }
        let consistent = (0..a).all(|b| {
            let sb = table[b as usize];
            // monotone on already-fixed subsets
            let mono = b & !a != 0 || sb & !candidate == 0;
            // a1 for the pair (a, b); a & b < a is fixed
            let meet = sb & candidate & !table[(a & b) as usize] == 0;
            mono && meet
        });
        if consistent {
            table[pos] = candidate;
            extend_table(n_atoms, table, pos + 1, out);
        }
    }
    table[pos] = 0;
}

/// First `(algebra, valuation)` pair in enumeration order, over generator
/// counts `1..=max_atoms`, under which `f` does not evaluate to the top.
pub fn find_countermodel(
    f: &Formula,
    max_atoms: u32,
) -> Result<Option<(PlausibleAlgebra, Valuation)>, AlgebraError> {
    check_atoms(max_atoms, MAX_ATOMS)?;
    let atoms: Vec<String> = f.atoms().into_iter().collect();
    for n in 1..=max_atoms {
        for alg in enumerate_algebras(n)? {
            for v in alg.valuations(&atoms) {
                if alg.eval(f, &v)? != alg.top() {
                    return Ok(Some((alg, v)));
                }
            }
        }
    }
    Ok(None)
}

/// Serialisable countermodel witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Countermodel {
    pub algebra: PlausibleAlgebra,
    pub valuation: Valuation,
}
