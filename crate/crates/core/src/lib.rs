//! Reasoning tools for the logic of the plausible.
//!
//! * [`formula`]: the propositional language with the operator `#` (∇).
//! * [`tableau`]: a refutation tableau prover for it.
//! * [`hilbert`]: a checker for Hilbert-style derivations, and a library of
//!   derivations.
//! * [`algebra`]: finite plausible algebras, used as a semantic oracle.
//! * [`pseudotopology`]: finite pseudo-topological spaces.
//! * [`folp`]: a finite model checker for first-order logic with the
//!   plausibility quantifier `P`.
//! * [`corpus`]: seeded random formulas for cross-checking.

pub mod algebra;
pub mod corpus;
pub mod folp;
pub mod formula;
pub mod hilbert;
pub mod pseudotopology;
pub mod tableau;

pub use algebra::{enumerate_algebras, find_countermodel, Countermodel, PlausibleAlgebra, Valuation};
pub use folp::{check_axioms, parse_fo, satisfies, FoFormula, PlausibleStructure};
pub use formula::{parse, Formula, ParseError};
pub use hilbert::{check_proof, parse_proof, ProofLine};
pub use pseudotopology::{enumerate_spaces, PseudoTopology};
pub use tableau::{is_valid, prove, ProveResult, Prover, Verdict};
