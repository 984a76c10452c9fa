use super::*;
use crate::pseudotopology::{enumerate_spaces, PseudoTopology, Subset};

fn fo(s: &str) -> FoFormula {
    parse_fo(s).unwrap()
}

fn sentence(m: &PlausibleStructure, s: &str) -> bool {
    satisfies(m, &fo(s), &Assignment::new()).unwrap()
}

fn structure(json: &str) -> PlausibleStructure {
    serde_json::from_str(json).unwrap()
}

#[test]
fn parses_quantifiers_and_terms() {
    assert_eq!(
        fo("forall x. R(x) -> exists y. S(x, f(y))"),
        FoFormula::forall(
            "x",
            FoFormula::implies(
                FoFormula::unary("R", "x"),
                FoFormula::exists(
                    "y",
                    FoFormula::rel(
                        "S",
                        vec![Term::name("x"), Term::App("f".into(), vec![Term::name("y")])]
                    )
                )
            )
        )
    );
    assert_eq!(
        fo("P x. x = c"),
        FoFormula::plausibly("x", FoFormula::Eq(Term::name("x"), Term::name("c")))
    );
    // `P(x)` is a predicate, `P x.` the quantifier.
    assert_eq!(fo("P(x)"), FoFormula::unary("P", "x"));
    assert_eq!(fo("Q"), FoFormula::rel("Q", vec![]));
    assert_eq!(
        fo("f(x) = y"),
        FoFormula::Eq(Term::App("f".into(), vec![Term::name("x")]), Term::name("y"))
    );
}

#[test]
fn rejects_nabla_and_junk() {
    assert!(parse_fo("#R(x)").is_err());
    assert!(parse_fo("forall x R(x)").is_err());
    assert!(parse_fo("R(x").is_err());
    assert!(parse_fo("R()").is_err());
    assert!(parse_fo("x =").is_err());
}

#[test]
fn display_round_trips() {
    for s in [
        "forall x. R(x) -> exists y. S(x, f(y))",
        "(P x. R(x)) & (P x. S(x)) -> (P x. R(x) & S(x))",
        "~(forall x. x = c) | Q",
        "(R(c) -> S(c)) -> R(c)",
        "P x. P y. S(x, y) <-> true",
    ] {
        let f = fo(s);
        assert_eq!(fo(&f.to_string()), f, "{s} rendered as {f}");
    }
    assert_eq!(fo("P x.(R(x))").to_string(), "P x. R(x)");
}

#[test]
fn free_names_and_renaming() {
    let f = fo("R(x) & forall x. S(x, y)");
    assert_eq!(
        f.free_names().into_iter().collect::<Vec<_>>(),
        vec!["x".to_string(), "y".to_string()]
    );
    assert_eq!(f.rename_free("x", "z"), fo("R(z) & forall x. S(x, y)"));
}

const THREE: &str = r#"{
    "domain_size": 3,
    "relations": {"R": [[0], [1]], "E": [[0, 1], [1, 2]], "Empty": []},
    "functions": {"s": [[0, 1], [1, 2], [2, 0]]},
    "constants": {"c": 0},
    "omega": [1, 3, 5, 7]
}"#;

#[test]
fn plausible_unary_relation_example() {
    // Ω = {B : 0 ∈ B}; {b : R(b)} = {0, 1} contains 0.
    let m = structure(THREE);
    assert!(sentence(&m, "P x. R(x)"));
    assert!(!sentence(&m, "P x. ~R(x)"));
    assert!(!sentence(&m, "forall x. R(x)"));
}

#[test]
fn terms_functions_constants() {
    let m = structure(THREE);
    assert!(sentence(&m, "s(s(s(c))) = c"));
    assert!(sentence(&m, "forall x. exists y. s(y) = x"));
    assert!(sentence(&m, "E(c, s(c))"));
    assert!(!sentence(&m, "E(s(c), c)"));
    assert!(!sentence(&m, "exists x. Empty(x, x, x)"));
    // A bound variable shadows the constant of the same name.
    assert!(sentence(&m, "forall c. exists x. ~(x = c)"));
    let mut a = Assignment::new();
    a.insert("z".into(), 2);
    assert!(satisfies(&m, &fo("s(z) = c"), &a).unwrap());
    assert_eq!(definable_set(&m, "x", &fo("E(x, z)"), &a).unwrap(), 0b010);
}

#[test]
fn evaluation_errors() {
    let m = structure(THREE);
    let none = Assignment::new();
    assert_eq!(
        satisfies(&m, &fo("R(z)"), &none),
        Err(FolError::UnboundName("z".into()))
    );
    // Reported even where evaluation would short-circuit.
    assert!(matches!(
        satisfies(&m, &fo("false & R(c, c)"), &none),
        Err(FolError::ArityMismatch { expected: 1, found: 2, .. })
    ));
    assert!(matches!(
        satisfies(&m, &fo("s(c, c) = c"), &none),
        Err(FolError::ArityMismatch { .. })
    ));
    assert_eq!(
        satisfies(&m, &fo("T(c)"), &none),
        Err(FolError::UnknownRelation("T".into()))
    );
    assert_eq!(
        satisfies(&m, &fo("g(c) = c"), &none),
        Err(FolError::UnknownFunction("g".into()))
    );
    let mut a = Assignment::new();
    a.insert("x".into(), 3);
    assert!(matches!(
        satisfies(&m, &fo("R(x)"), &a),
        Err(FolError::AssignmentOutOfRange { .. })
    ));
}

#[test]
fn malformed_structures() {
    let bad = |json: &str| serde_json::from_str::<PlausibleStructure>(json).unwrap_err().to_string();
    assert!(bad(r#"{"domain_size": 0, "omega": []}"#).contains("domain size"));
    assert!(bad(r#"{"domain_size": 2, "omega": [1]}"#).contains("pseudo-topology"));
    assert!(bad(r#"{"domain_size": 2, "omega": [3, 0]}"#).contains("pseudo-topology"));
    assert!(bad(r#"{"domain_size": 2, "omega": [7]}"#).contains("omega"));
    assert!(bad(r#"{"domain_size": 2, "relations": {"R": [[0], [0, 1]]}, "omega": [3]}"#)
        .contains("different lengths"));
    assert!(bad(r#"{"domain_size": 2, "relations": {"R": [[2]]}, "omega": [3]}"#)
        .contains("outside the domain"));
    assert!(bad(r#"{"domain_size": 2, "functions": {"f": [[0, 1]]}, "omega": [3]}"#)
        .contains("not total"));
    assert!(bad(r#"{"domain_size": 2, "functions": {"f": [[0, 1], [0, 0]]}, "omega": [3]}"#)
        .contains("twice"));
    assert!(bad(
        r#"{"domain_size": 2, "functions": {"c": [[1]]}, "constants": {"c": 0}, "omega": [3]}"#
    )
    .contains("both"));
    assert!(bad(r#"{"domain_size": 2, "omega": [3], "extra": 1}"#).contains("unknown field"));
}

#[test]
fn json_round_trip() {
    let m = structure(THREE);
    let text = serde_json::to_string(&m).unwrap();
    assert_eq!(structure(&text), m);
}

// Every pair of unary relations over a domain, as bitmasks.
fn relation_pairs(n: u32) -> impl Iterator<Item = (Subset, Subset)> {
    let all = 1u64 << n;
    (0..all).flat_map(move |r| (0..all).map(move |s| (r, s)))
}

const INSTANCES: [(&str, &str); 4] = [("R", "R"), ("R", "S"), ("S", "R"), ("S", "S")];

fn check_all<F>(mut visit: F)
where
    F: FnMut(&PseudoTopology, Subset, Subset, &AxiomReport, Subset, Subset),
{
    for n in 1..=3 {
        for omega in enumerate_spaces(n).unwrap() {
            for (r, s) in relation_pairs(n) {
                let m = PlausibleStructure::unary(n, &[("R", r), ("S", s)], &omega).unwrap();
                for (a, b) in INSTANCES {
                    let report = check_axioms(
                        &m,
                        &FoFormula::unary(a, "x"),
                        &FoFormula::unary(b, "x"),
                        "x",
                    )
                    .unwrap();
                    let mask = |name| if name == "R" { r } else { s };
                    visit(&omega, r, s, &report, mask(a), mask(b));
                }
            }
        }
    }
}

#[test]
fn axioms_other_than_a5_hold_on_every_small_structure() {
    check_all(|omega, r, s, report, _, _| {
        for axiom in [FoAxiom::A1, FoAxiom::A2, FoAxiom::A3, FoAxiom::A4, FoAxiom::A6] {
            assert!(report.holds(axiom), "{axiom} fails: Ω={:?} R={r:#b} S={s:#b}", omega.opens);
        }
    });
}

fn upward_closed(omega: &PseudoTopology) -> bool {
    let all = omega.universe();
    omega
        .opens
        .iter()
        .all(|&a| (0..=all).filter(|b| b & a == a).all(|b| omega.is_open(b)))
}

#[test]
fn a5_is_exactly_extensional_monotonicity() {
    let mut failures = 0;
    check_all(|omega, _, _, report, phi, psi| {
        let monotone_here = !(phi & !psi == 0 && omega.is_open(phi) && !omega.is_open(psi));
        assert_eq!(report.holds(FoAxiom::A5), monotone_here);
        if upward_closed(omega) {
            assert!(report.holds(FoAxiom::A5));
        }
        failures += usize::from(!monotone_here);
    });
    // Non-upward-closed spaces exist from three points on, and they break A5.
    assert!(failures > 0);
}

#[test]
fn a5_counterexample() {
    // Ω = {{0,1,2}, {0}}, R = {0} ⊆ S = {0,1}: R is plausible, S is not.
    let omega = PseudoTopology::new(3, vec![0b001, 0b111]);
    let m = PlausibleStructure::unary(3, &[("R", 0b001), ("S", 0b011)], &omega).unwrap();
    let report = check_axioms(&m, &fo("R(x)"), &fo("S(x)"), "x").unwrap();
    assert_eq!(
        report.failures().map(|v| v.axiom).collect::<Vec<_>>(),
        vec![FoAxiom::A5]
    );
    let text = report.to_string();
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().next().unwrap().ends_with("(corrected reading)"));
    assert!(text.contains("A5 fails: (forall x. R(x) -> S(x)) -> (P x. R(x)) -> (P x. S(x))"));
}

#[test]
fn degenerate_spaces() {
    for n in 1..=3u32 {
        for (r, s) in relation_pairs(n) {
            let trivial = PseudoTopology::trivial(n);
            let m = PlausibleStructure::unary(n, &[("R", r), ("S", s)], &trivial).unwrap();
            for phi in ["R(x)", "S(x)", "R(x) & ~S(x)", "R(x) -> S(x)"] {
                let p = sentence(&m, &format!("P x. {phi}"));
                assert_eq!(p, sentence(&m, &format!("forall x. {phi}")));
            }
            for point in 0..n {
                let principal = PseudoTopology::principal(n, point);
                let m = m.with_omega(principal).unwrap();
                let mut at = Assignment::new();
                at.insert("x".into(), point);
                for phi in ["R(x)", "S(x)", "R(x) & ~S(x)", "R(x) -> S(x)"] {
                    let p = sentence(&m, &format!("P x. {phi}"));
                    assert_eq!(p, satisfies(&m, &fo(phi), &at).unwrap());
                }
            }
        }
    }
}

#[test]
fn a6_uses_a_fresh_variable() {
    let omega = PseudoTopology::principal(2, 0);
    let m = PlausibleStructure::unary(2, &[("R", 0b01), ("S", 0b10)], &omega).unwrap();
    let report = check_axioms(&m, &fo("R(x) & exists y. S(y)"), &fo("S(x)"), "x").unwrap();
    let a6 = &report.verdicts[5];
    assert_eq!(a6.axiom, FoAxiom::A6);
    assert!(a6.instance.to_string().contains("P y1."));
    assert!(report.holds(FoAxiom::A6));
}
