use super::library::{self, LibraryProof};
use super::*;
use crate::algebra::find_countermodel;
use crate::formula::parse;
use crate::tableau::prove;

fn f(s: &str) -> Formula {
    parse(s).unwrap()
}

fn proof(text: &str) -> Vec<ProofLine> {
    parse_proof(text).unwrap()
}

#[test]
fn single_axiom_line() {
    let lines = proof("1. #p -> p ; axiom AX3 A=p");
    let ok = check_proof(&lines, &[]).unwrap();
    assert_eq!(ok.formula, f("#p -> p"));
    assert!(ok.theorem);
}

#[test]
fn tautology_then_rule() {
    let lines = proof("1. p -> p | q ; axiom LPC\n2. #p -> #(p | q) ; rnabla 1");
    assert_eq!(check_proof(&lines, &[]).unwrap().formula, f("#p -> #(p | q)"));
}

#[test]
fn rule_refuses_premise_dependent_line() {
    let lines = proof("1. p -> q ; premise\n2. #p -> #q ; rnabla 1");
    let err = check_proof(&lines, &[f("p -> q")]).unwrap_err();
    assert_eq!(err.line, 2);
    assert_eq!(err.reason, RejectReason::RNablaOnPremiseDependent(1));
}

#[test]
fn dependency_propagates_through_mp() {
    let lines = proof(
        "1. q ; premise\n2. q -> (p -> q) ; axiom LPC\n3. p -> q ; mp 1 2\n4. #p -> #q ; rnabla 3",
    );
    let err = check_proof(&lines, &[f("q")]).unwrap_err();
    assert_eq!(err.reason, RejectReason::RNablaOnPremiseDependent(3));
    let ok = check_proof(&lines[..3], &[f("q")]).unwrap();
    assert!(!ok.theorem);
}

#[test]
fn instantiation_examples() {
    assert_eq!(
        instantiate(AxiomSchema::Ax4, &Bindings::a(f("q"))).unwrap(),
        f("#(q | ~q)")
    );
    assert_eq!(
        instantiate(AxiomSchema::Ax1, &Bindings::ab(f("p"), f("p"))).unwrap(),
        f("#p & #p -> #(p & p)")
    );
    assert_eq!(
        instantiate(AxiomSchema::Ax3, &Bindings::a(f("#p"))).unwrap(),
        f("##p -> #p")
    );
    assert_eq!(
        instantiate(AxiomSchema::Ax1, &Bindings::a(f("p"))),
        Err(InstantiateError::MissingBinding {
            schema: AxiomSchema::Ax1,
            var: 'B'
        })
    );
    assert_eq!(
        instantiate(AxiomSchema::Lpc, &Bindings::none()),
        Err(InstantiateError::NotASchema)
    );
}

#[test]
fn schema_matching_recovers_bindings() {
    for (schema, b) in [
        (AxiomSchema::Ax1, Bindings::ab(f("p & q"), f("~r"))),
        (AxiomSchema::Ax2, Bindings::ab(f("#p"), f("q"))),
        (AxiomSchema::Ax3, Bindings::a(f("p -> q"))),
        (AxiomSchema::Ax4, Bindings::a(f("#q"))),
    ] {
        let inst = instantiate(schema, &b).unwrap();
        assert_eq!(match_schema(schema, &inst), Some(b));
    }
    assert_eq!(match_schema(AxiomSchema::Ax3, &f("#p -> q")), None);
    assert_eq!(match_schema(AxiomSchema::Ax4, &f("#(p | ~q)")), None);
    assert_eq!(match_schema(AxiomSchema::Ax1, &f("#p | #q -> #(p | q)")), None);
}

#[test]
fn axiom_line_without_bindings_is_matched() {
    let lines = proof("1. #(p | ~p) ; axiom AX4");
    assert!(check_proof(&lines, &[]).is_ok());
    let lines = proof("1. #(p | ~q) ; axiom AX4");
    assert!(matches!(
        check_proof(&lines, &[]).unwrap_err().reason,
        RejectReason::BadAxiomInstance { .. }
    ));
}

/// Proof text, premises, rejected line, expected reason.
type Rejection = (&'static str, &'static [&'static str], usize, fn(&RejectReason) -> bool);

#[test]
fn rejections() {
    let cases: &[Rejection] = &[
        ("1. p ; axiom LPC", &[], 1, |r| *r == RejectReason::NotATautology),
        // `#p -> p` is not a tautology once `#p` is read as a letter.
        ("1. #p -> p ; axiom LPC", &[], 1, |r| *r == RejectReason::NotATautology),
        ("1. p ; premise", &[], 1, |r| matches!(r, RejectReason::NotAPremise(_))),
        ("1. #p -> p ; axiom AX3 A=q", &[], 1, |r| {
            matches!(r, RejectReason::BadAxiomInstance { .. })
        }),
        ("1. p ; premise\n2. q ; mp 1 3", &["p"], 2, |r| {
            *r == RejectReason::BadReference(3)
        }),
        ("1. p ; premise\n2. p -> r ; premise\n3. q ; mp 1 2", &["p", "p -> r"], 3, |r| {
            *r == RejectReason::BadMpShape { i: 1, j: 2 }
        }),
        ("1. p | ~p ; axiom LPC\n2. #p ; rnabla 1", &[], 2, |r| {
            *r == RejectReason::RNablaShape(1)
        }),
        ("1. p -> p ; axiom LPC\n2. #p -> #q ; rnabla 1", &[], 2, |r| {
            *r == RejectReason::RNablaShape(1)
        }),
        ("1. p -> p ; axiom LPC\n3. p -> p ; axiom LPC", &[], 3, |r| {
            *r == RejectReason::BadIndex { expected: 2 }
        }),
    ];
    for (text, premises, line, check) in cases {
        let premises: Vec<Formula> = premises.iter().map(|s| f(s)).collect();
        let err = check_proof(&proof(text), &premises).unwrap_err();
        assert_eq!(err.line, *line, "{text}");
        assert!(check(&err.reason), "{text}: {:?}", err.reason);
    }
    assert_eq!(check_proof(&[], &[]).unwrap_err().reason, RejectReason::Empty);
}

fn check(p: &LibraryProof) -> Accepted {
    check_proof(&p.lines, &p.premises).unwrap_or_else(|e| panic!("{}: {e}", p.name))
}

#[test]
fn library_has_twenty_theorems() {
    let theorems = library::theorems();
    assert!(theorems.len() >= 20, "{}", theorems.len());
    for p in &theorems {
        assert!(p.premises.is_empty());
        assert!(check(p).theorem, "{}", p.name);
    }
}

#[test]
fn library_conclusions_close_and_have_no_countermodel() {
    for p in library::theorems() {
        let goal = p.conclusion();
        assert!(prove(&[], goal).unwrap().is_closed(), "{}: {goal}", p.name);
        assert_eq!(find_countermodel(goal, 3).unwrap(), None, "{}", p.name);
    }
}

#[test]
fn premise_bearing_library_proofs() {
    let rest: Vec<LibraryProof> = library::library()
        .into_iter()
        .filter(|p| !p.premises.is_empty())
        .collect();
    assert_eq!(rest.len(), 4);
    for p in &rest {
        let ok = check(p);
        assert!(!ok.theorem);
        assert!(prove(&p.premises, p.conclusion()).unwrap().is_closed(), "{}", p.name);
    }
}

#[test]
fn necessitation_wraps_the_conclusion() {
    let base = library::nabla_bottom_refuted();
    let boxed = library::necessitate(&base);
    assert_eq!(*boxed.conclusion(), Formula::nabla(base.conclusion().clone()));
    assert_eq!(boxed.lines.len(), base.lines.len() + 5);
}

#[test]
fn library_round_trips_through_files() {
    for p in library::library() {
        assert_eq!(parse_proof(&render_proof(&p.lines)).unwrap(), p.lines, "{}", p.name);
    }
}
