//! A library of derivations, each built from a parameterised recipe so the
//! same argument can be replayed at several formulas.

use super::{AxiomSchema, Bindings, Justification, ProofLine};
use crate::formula::{parse, Formula};

/// A named derivation of its last line from `premises`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LibraryProof {
    pub name: String,
    pub premises: Vec<Formula>,
    pub lines: Vec<ProofLine>,
}

impl LibraryProof {
    pub fn conclusion(&self) -> &Formula {
        &self.lines.last().expect("library proofs are nonempty").formula
    }
}

#[derive(Debug, Default)]
struct Builder {
    lines: Vec<ProofLine>,
}

impl Builder {
    fn push(&mut self, formula: Formula, justification: Justification) -> usize {
        let index = self.lines.len() + 1;
        self.lines.push(ProofLine {
            index,
            formula,
            justification,
        });
        index
    }

    fn lpc(&mut self, formula: Formula) -> usize {
        self.push(formula, Justification::Axiom(AxiomSchema::Lpc, Bindings::none()))
    }

    fn axiom(&mut self, schema: AxiomSchema, bindings: Bindings) -> usize {
        let f = super::instantiate(schema, &bindings).expect("library bindings are complete");
        self.push(f, Justification::Axiom(schema, bindings))
    }

    fn premise(&mut self, formula: Formula) -> usize {
        self.push(formula, Justification::Premise)
    }

    /// From `i: X` and `j: X -> Y`, adds `Y`.
    fn mp(&mut self, i: usize, j: usize) -> usize {
        let Formula::Implies(_, y) = self.lines[j - 1].formula.clone() else {
            panic!("line {j} is not an implication");
        };
        self.push((*y).clone(), Justification::Mp(i, j))
    }

    /// From `i: A -> B`, adds `#A -> #B`.
    fn rnabla(&mut self, i: usize) -> usize {
        let Formula::Implies(a, b) = self.lines[i - 1].formula.clone() else {
            panic!("line {i} is not an implication");
        };
        self.push(
            Formula::implies(Formula::nabla((*a).clone()), Formula::nabla((*b).clone())),
            Justification::RNabla(i),
        )
    }

    fn finish(self, name: impl Into<String>, premises: Vec<Formula>) -> LibraryProof {
        LibraryProof {
            name: name.into(),
            premises,
            lines: self.lines,
        }
    }
}

use Formula as F;

fn nabla(f: &Formula) -> Formula {
    F::nabla(f.clone())
}

fn imp(a: &Formula, b: &Formula) -> Formula {
    F::implies(a.clone(), b.clone())
}

/// `~#false`
pub fn nabla_bottom_refuted() -> LibraryProof {
    let mut b = Builder::default();
    let ax = b.axiom(AxiomSchema::Ax3, Bindings::a(F::Bottom));
    let bridge = b.lpc(imp(&imp(&nabla(&F::Bottom), &F::Bottom), &F::not(nabla(&F::Bottom))));
    b.mp(ax, bridge);
    b.finish("not-nabla-false", vec![])
}

/// `#φ -> #(φ | ψ)`
pub fn nabla_weakening(phi: &Formula, psi: &Formula) -> LibraryProof {
    let mut b = Builder::default();
    let weak = b.lpc(imp(phi, &F::or(phi.clone(), psi.clone())));
    b.rnabla(weak);
    b.finish(format!("nabla-weakening[{phi}; {psi}]"), vec![])
}

/// Appends `φ -> ~#~φ` and returns its line.
fn truth_excludes_plausible_negation(b: &mut Builder, phi: &Formula) -> usize {
    let neg = F::not(phi.clone());
    let ax = b.axiom(AxiomSchema::Ax3, Bindings::a(neg.clone()));
    let goal = imp(phi, &F::not(nabla(&neg)));
    let bridge = b.lpc(imp(&imp(&nabla(&neg), &neg), &goal));
    b.mp(ax, bridge)
}

/// `φ -> ~#~φ`
pub fn truth_not_implausible(phi: &Formula) -> LibraryProof {
    let mut b = Builder::default();
    truth_excludes_plausible_negation(&mut b, phi);
    b.finish(format!("truth-excludes-plausible-negation[{phi}]"), vec![])
}

/// `#φ -> ~#~φ`
pub fn plausible_not_implausible(phi: &Formula) -> LibraryProof {
    let mut b = Builder::default();
    let ax = b.axiom(AxiomSchema::Ax3, Bindings::a(phi.clone()));
    let tail = truth_excludes_plausible_negation(&mut b, phi);
    let target = F::not(nabla(&F::not(phi.clone())));
    let chain = b.lpc(imp(
        &imp(&nabla(phi), phi),
        &imp(&imp(phi, &target), &imp(&nabla(phi), &target)),
    ));
    let step = b.mp(ax, chain);
    b.mp(tail, step);
    b.finish(format!("plausible-excludes-plausible-negation[{phi}]"), vec![])
}

/// `#~φ -> ~#φ`
pub fn plausible_negation_excludes(phi: &Formula) -> LibraryProof {
    let mut b = Builder::default();
    let neg = F::not(phi.clone());
    let ax_neg = b.axiom(AxiomSchema::Ax3, Bindings::a(neg.clone()));
    let ax_pos = b.axiom(AxiomSchema::Ax3, Bindings::a(phi.clone()));
    let bridge = b.lpc(imp(
        &imp(&nabla(&neg), &neg),
        &imp(&imp(&nabla(phi), phi), &imp(&nabla(&neg), &F::not(nabla(phi)))),
    ));
    let step = b.mp(ax_neg, bridge);
    b.mp(ax_pos, step);
    b.finish(format!("plausible-negation-excludes[{phi}]"), vec![])
}

fn or_introduction_goal(phi: &Formula, psi: &Formula) -> (Formula, Formula, Formula) {
    let join = nabla(&F::or(phi.clone(), psi.clone()));
    let left = imp(&nabla(phi), &join);
    let right = imp(&nabla(psi), &join);
    (left, right, join)
}

/// `(#φ | #ψ) -> #(φ | ψ)`, from two weakenings.
pub fn nabla_or_from_weakening(phi: &Formula, psi: &Formula) -> LibraryProof {
    let mut b = Builder::default();
    let or = F::or(phi.clone(), psi.clone());
    let l = b.lpc(imp(phi, &or));
    let l = b.rnabla(l);
    let r = b.lpc(imp(psi, &or));
    let r = b.rnabla(r);
    let (left, right, join) = or_introduction_goal(phi, psi);
    let goal = imp(&F::or(nabla(phi), nabla(psi)), &join);
    let cases = b.lpc(imp(&left, &imp(&right, &goal)));
    let step = b.mp(l, cases);
    b.mp(r, step);
    b.finish(format!("nabla-or[{phi}; {psi}]"), vec![])
}

/// From the weakening hypotheses for both disjuncts, derives the
/// disjunctive form.
pub fn nabla_or_forward(phi: &Formula, psi: &Formula) -> LibraryProof {
    let mut b = Builder::default();
    let (left, right, join) = or_introduction_goal(phi, psi);
    let l = b.premise(left.clone());
    let r = b.premise(right.clone());
    let goal = imp(&F::or(nabla(phi), nabla(psi)), &join);
    let cases = b.lpc(imp(&left, &imp(&right, &goal)));
    let step = b.mp(l, cases);
    b.mp(r, step);
    b.finish(format!("nabla-or-forward[{phi}; {psi}]"), vec![left, right])
}

/// From the disjunctive form, derives the weakening for the first disjunct.
pub fn nabla_or_backward(phi: &Formula, psi: &Formula) -> LibraryProof {
    let mut b = Builder::default();
    let (left, _, join) = or_introduction_goal(phi, psi);
    let hyp = imp(&F::or(nabla(phi), nabla(psi)), &join);
    let h = b.premise(hyp.clone());
    let bridge = b.lpc(imp(&hyp, &left));
    b.mp(h, bridge);
    b.finish(format!("nabla-or-backward[{phi}; {psi}]"), vec![hyp])
}

/// `#A <-> #B` for a classically provable `A <-> B`: split the
/// biconditional, apply the rule to each direction, recombine.
pub fn nabla_congruence(a: &Formula, bf: &Formula) -> LibraryProof {
    let mut b = Builder::default();
    let bicond = F::iff(a.clone(), bf.clone());
    let eq = b.lpc(bicond.clone());
    let to = b.lpc(imp(&bicond, &imp(a, bf)));
    let to = b.mp(eq, to);
    let from = b.lpc(imp(&bicond, &imp(bf, a)));
    let from = b.mp(eq, from);
    let to = b.rnabla(to);
    let from = b.rnabla(from);
    let (na, nb) = (nabla(a), nabla(bf));
    let join = b.lpc(imp(
        &imp(&na, &nb),
        &imp(&imp(&nb, &na), &F::iff(na.clone(), nb.clone())),
    ));
    let step = b.mp(to, join);
    b.mp(from, step);
    b.finish(format!("nabla-congruence[{a}; {bf}]"), vec![])
}

/// Turns a premise-free proof of `f` into a proof of `#f`, using AX4, R#
/// and a classical step.
pub fn necessitate(proof: &LibraryProof) -> LibraryProof {
    assert!(proof.premises.is_empty(), "only theorems can be necessitated");
    let mut b = Builder {
        lines: proof.lines.clone(),
    };
    let f = proof.conclusion().clone();
    let last = b.lines.len();
    let p = F::atom("p");
    let lem = F::or(p.clone(), F::not(p.clone()));
    let weaken = b.lpc(imp(&f, &imp(&lem, &f)));
    let cond = b.mp(last, weaken);
    let lifted = b.rnabla(cond);
    let ax = b.axiom(AxiomSchema::Ax4, Bindings::a(p));
    b.mp(ax, lifted);
    b.finish(format!("necessitation[{}]", proof.name), vec![])
}

fn f(s: &str) -> Formula {
    parse(s).expect("library formula parses")
}

/// Premise-free derivations.
pub fn theorems() -> Vec<LibraryProof> {
    let mut out = vec![nabla_bottom_refuted()];
    for (phi, psi) in [("p", "q"), ("q & r", "p"), ("#p", "~q")] {
        out.push(nabla_weakening(&f(phi), &f(psi)));
    }
    for phi in ["p", "q & r", "#p"] {
        out.push(truth_not_implausible(&f(phi)));
    }
    for phi in ["p", "p -> q", "#p"] {
        out.push(plausible_not_implausible(&f(phi)));
    }
    for phi in ["p", "q | r", "~p"] {
        out.push(plausible_negation_excludes(&f(phi)));
    }
    for (phi, psi) in [("p", "q"), ("#p", "q & r")] {
        out.push(nabla_or_from_weakening(&f(phi), &f(psi)));
    }
    for (a, b) in [("p & q", "q & p"), ("p", "~~p"), ("p -> q", "~p | q")] {
        out.push(nabla_congruence(&f(a), &f(b)));
    }
    out.push(necessitate(&nabla_weakening(&f("p"), &f("q"))));
    out.push(necessitate(&nabla_bottom_refuted()));
    out.push(necessitate(&plausible_not_implausible(&f("p"))));
    out
}

/// Every shipped derivation: the theorems plus both directions of the
/// disjunction lemma, which carry premises.
pub fn library() -> Vec<LibraryProof> {
    let mut out = theorems();
    for (phi, psi) in [("p", "q"), ("#p", "q & r")] {
        out.push(nabla_or_forward(&f(phi), &f(psi)));
        out.push(nabla_or_backward(&f(phi), &f(psi)));
    }
    out
}
