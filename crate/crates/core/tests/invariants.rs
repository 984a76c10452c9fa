//! Cross-module invariants, checked against the finite semantic oracles.

use plausible_core::algebra::{self, enumerate_algebras, find_countermodel};
use plausible_core::hilbert::{check_proof, library};
use plausible_core::pseudotopology::{enumerate_spaces, PseudoTopology};
use plausible_core::tableau::{Prover, Verdict};
use plausible_core::{parse, Formula};
use proptest::prelude::*;

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        6 => prop::sample::select(vec!["p", "q"]).prop_map(Formula::atom),
        1 => Just(Formula::Top),
        1 => Just(Formula::Bottom),
    ];
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            inner.clone().prop_map(Formula::nabla),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
}

fn holds_in_small_algebras(f: &Formula) -> bool {
    find_countermodel(f, 2).unwrap().is_none()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closed_tableaux_have_no_small_countermodel(f in formula()) {
        if Prover::default().decide(&[], &f) == Ok(Verdict::Closed) {
            prop_assert!(holds_in_small_algebras(&f), "closed on {}", f);
        }
    }

    #[test]
    fn decide_agrees_with_prove(f in formula()) {
        let full = Prover::default().prove(&[], &f).map(|r| r.verdict);
        prop_assert_eq!(Prover::default().decide(&[], &f), full);
    }

    #[test]
    fn prove_is_deterministic(f in formula()) {
        let a = Prover::default().prove(&[], &f).unwrap();
        let b = Prover::default().prove(&[], &f).unwrap();
        prop_assert_eq!(a.render_text(), b.render_text());
    }

    #[test]
    fn nabla_free_goals_close_iff_tautologies(f in formula()) {
        let f = f.erase_nabla();
        let closed = Prover::default().decide(&[], &f) == Ok(Verdict::Closed);
        prop_assert_eq!(closed, f.is_classical_tautology());
    }

    #[test]
    fn cached_prover_is_sound(fs in prop::collection::vec(formula(), 1..8)) {
        let mut cached = Prover::default().keep_validity_cache();
        for f in &fs {
            if cached.decide(&[], f) == Ok(Verdict::Closed) {
                prop_assert!(holds_in_small_algebras(f), "closed on {}", f);
            }
        }
    }

    #[test]
    fn falsified_in_the_two_element_algebra_means_open(f in formula()) {
        let two = algebra::PlausibleAlgebra::two_element();
        let atoms: Vec<String> = f.atoms().into_iter().collect();
        let refuted = two.valuations(&atoms).any(|v| two.eval(&f, &v).unwrap() != two.top());
        if refuted {
            prop_assert_eq!(Prover::default().decide(&[], &f), Ok(Verdict::Open));
        }
    }
}

#[test]
fn cached_and_fresh_provers_agree_on_the_corpus() {
    let corpus = plausible_core::corpus::random_formulas(7, 300, 10);
    let mut cached = Prover::default().keep_validity_cache();
    for f in &corpus {
        assert_eq!(cached.decide(&[], f), Prover::default().decide(&[], f), "{f}");
    }
}

#[test]
fn library_theorems_are_checked_and_sound() {
    for proof in library::library() {
        let accepted = check_proof(&proof.lines, &proof.premises)
            .unwrap_or_else(|e| panic!("{}: {e}", proof.name));
        assert_eq!(&accepted.formula, proof.conclusion());
        if proof.premises.is_empty() {
            assert!(accepted.theorem);
            assert!(holds_in_small_algebras(proof.conclusion()), "{}", proof.name);
        }
    }
}

#[test]
fn enumerated_algebras_satisfy_the_axioms() {
    for n in 1..=3 {
        for a in enumerate_algebras(n).unwrap() {
            assert_eq!(algebra::validate(n, a.sharp_table()).unwrap(), Ok(()));
        }
    }
}

#[test]
fn enumerated_spaces_are_valid_and_include_the_degenerate_ones() {
    for n in 1..=4 {
        let spaces = enumerate_spaces(n).unwrap();
        for s in &spaces {
            assert_eq!(s.validate().unwrap(), Ok(()), "{:?}", s.opens);
        }
        assert!(spaces.contains(&PseudoTopology::trivial(n)));
        for point in 0..n {
            assert!(spaces.contains(&PseudoTopology::principal(n, point)));
        }
    }
}

#[test]
fn valid_biconditional_on_a_branch_uses_r6() {
    let goal = parse("#(p & q) <-> #(q & p)").unwrap();
    let result = Prover::default().prove(&[], &goal).unwrap();
    assert!(result.is_closed());
    assert!(result.render_text().contains("R6"));
}
