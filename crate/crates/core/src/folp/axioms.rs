//! Instance checks for the axioms of the plausibility quantifier.

use std::fmt;

use super::eval::{satisfies, Assignment, FolError};
use super::structure::PlausibleStructure;
use super::FoFormula;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FoAxiom {
    /// `Pxφ & Pxψ -> Px(φ & ψ)`
    A1,
    /// `Pxφ & Pxψ -> Px(φ | ψ)`
    A2,
    /// `∀xφ -> Pxφ`
    A3,
    /// `Pxφ -> ∃xφ`
    A4,
    /// `∀x(φ -> ψ) -> (Pxφ -> Pxψ)`
    A5,
    /// renaming the bound variable of `P` changes nothing
    A6,
}

impl FoAxiom {
    pub const ALL: [FoAxiom; 6] = [
        FoAxiom::A1,
        FoAxiom::A2,
        FoAxiom::A3,
        FoAxiom::A4,
        FoAxiom::A5,
        FoAxiom::A6,
    ];

    /// A1 and A2 are checked with `ψ` in place of the printed `Pxψ` inside
    /// the conclusion.
    pub fn corrected_reading(self) -> bool {
        matches!(self, FoAxiom::A1 | FoAxiom::A2)
    }
}

impl fmt::Display for FoAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: FoAxiom,
    /// The sentence that was evaluated.
    pub instance: FoFormula,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub verdicts: Vec<AxiomVerdict>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn holds(&self, axiom: FoAxiom) -> bool {
        self.verdicts
            .iter()
            .find(|v| v.axiom == axiom)
            .is_some_and(|v| v.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomVerdict> {
        self.verdicts.iter().filter(|v| !v.holds)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            let verdict = if v.holds { "holds" } else { "fails" };
            write!(f, "{} {verdict}: {}", v.axiom, v.instance)?;
            if v.axiom.corrected_reading() {
                f.write_str("  (corrected reading)")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A variable not occurring in any of `taken`.
fn fresh(m: &PlausibleStructure, taken: &[&FoFormula]) -> String {
    let used = |name: &str| {
        taken.iter().any(|f| f.all_names().contains(name))
            || m.constants.contains_key(name)
            || m.functions.contains_key(name)
    };
    std::iter::once("y".to_string())
        .chain((1..).map(|i| format!("y{i}")))
        .find(|n| !used(n))
        .expect("an unbounded supply of names")
}

/// Evaluates A1–A6 at the instance `(φ, ψ)` with `x` the quantified
/// variable. Apart from `x`, `φ` and `ψ` may only mention symbols of `m`.
pub fn check_axioms(
    m: &PlausibleStructure,
    phi: &FoFormula,
    psi: &FoFormula,
    x: &str,
) -> Result<AxiomReport, FolError> {
    use FoFormula as F;
    let p = |f: &FoFormula| F::plausibly(x, f.clone());
    let both = F::and(p(phi), p(psi));

    let y = fresh(m, &[phi, psi]);
    let variant = |f: &FoFormula| F::iff(p(f), F::plausibly(&y, f.rename_free(x, &y)));

    let instances = [
        (FoAxiom::A1, F::implies(both.clone(), p(&F::and(phi.clone(), psi.clone())))),
        (FoAxiom::A2, F::implies(both, p(&F::or(phi.clone(), psi.clone())))),
        (FoAxiom::A3, F::implies(F::forall(x, phi.clone()), p(phi))),
        (FoAxiom::A4, F::implies(p(phi), F::exists(x, phi.clone()))),
        (
            FoAxiom::A5,
            F::implies(
                F::forall(x, F::implies(phi.clone(), psi.clone())),
                F::implies(p(phi), p(psi)),
            ),
        ),
        (FoAxiom::A6, F::and(variant(phi), variant(psi))),
    ];
    let empty = Assignment::new();
    let verdicts = instances
        .into_iter()
        .map(|(axiom, instance)| {
            let holds = satisfies(m, &instance, &empty)?;
            Ok(AxiomVerdict {
                axiom,
                instance,
                holds,
            })
        })
        .collect::<Result<_, FolError>>()?;
    Ok(AxiomReport { verdicts })
}
