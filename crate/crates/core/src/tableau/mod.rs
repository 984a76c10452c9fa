//! Refutation tableaux for the plausibility operator.
//!
//! The calculus is the classical propositional tableau extended with six
//! rules for `#`:
//!
//! | rule | premise            | conclusion                                  |
//! |------|--------------------|---------------------------------------------|
//! | R1   | `#A`               | `A`                                         |
//! | R2   | `~#A`, `A` valid   | `false`                                     |
//! | R3   | `~#(A & B)`        | `~#A` \| `~#B`                              |
//! | R4   | `~#(A \| B)`       | `~#A`, `~#B`                                |
//! | R5A  | `~#(A -> B)`       | `~#(~A \| B)`                               |
//! | R5B  | `~#(A <-> B)`      | `~#((A -> B) & (B -> A))`                   |
//! | R6   | `A <-> B` valid    | `#A & #B` \| `~#A & ~#B`                    |
//!
//! R2 and R6 call the prover recursively. R6 is also tried for every pair
//! `#A`, `~#B` on a branch, with the valid biconditional `A <-> B` supplied
//! as a theorem; both arms of that split close at once.
//!
//! Rules are applied in a fixed priority order (closure, classical α, R1,
//! R2, R6 on pairs, R5A/R5B, R4, then branching rules), each rule at most
//! once per formula and branch, leftmost branch first.

mod branch;
mod tree;

use rustc_hash::FxHashMap as HashMap;

use serde_json::{json, Value};
use thiserror::Error;

pub use branch::{Branch, RuleId};
pub use tree::{LeafMark, Node, NodeId, TableauTree};

use crate::formula::{negate, Formula};

pub const DEFAULT_NODE_BUDGET: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("node budget of {budget} exhausted")]
    ResourceLimit { budget: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Closed,
    Open,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProveResult {
    pub verdict: Verdict,
    pub tree: TableauTree,
    /// A saturated open branch when the verdict is `Open`.
    pub open_branch: Option<Vec<Formula>>,
}

impl ProveResult {
    pub fn is_closed(&self) -> bool {
        self.verdict == Verdict::Closed
    }

    pub fn to_json(&self) -> Value {
        json!({
            "verdict": self.verdict,
            "tree": self.tree.to_json(),
            "open_branch": self.open_branch.as_ref().map(|b| {
                b.iter().map(|f| f.to_string()).collect::<Vec<_>>()
            }),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = self.tree.render_text();
        match &self.open_branch {
            None => out.push_str("verdict: closed\n"),
            Some(branch) => {
                out.push_str("verdict: open\nopen branch:\n");
                for f in branch {
                    out.push_str(&format!("  {f}\n"));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
enum Memo {
    InProgress,
    /// Verdict, and whether it rests on a cycle cut short.
    Done(bool, bool),
}

/// One rule application, before it is applied to a branch.
#[derive(Debug, Clone)]
struct Application {
    rule: RuleId,
    premise: Formula,
    successors: Vec<Vec<Formula>>,
    contradiction: bool,
}

impl Application {
    fn linear(rule: RuleId, premise: &Formula, added: Vec<Formula>) -> Self {
        Application {
            rule,
            premise: premise.clone(),
            successors: vec![added],
            contradiction: false,
        }
    }

    fn split(rule: RuleId, premise: &Formula, left: Formula, right: Formula) -> Self {
        Application {
            rule,
            premise: premise.clone(),
            successors: vec![vec![left], vec![right]],
            contradiction: false,
        }
    }

    fn apply(&self, branch: &Branch) -> Vec<Branch> {
        self.apply_owned(branch.clone())
    }

    /// `apply`, reusing `branch` for the last successor.
    fn apply_owned(&self, branch: Branch) -> Vec<Branch> {
        let mut out = Vec::with_capacity(self.successors.len());
        let (last, rest) = self.successors.split_last().expect("at least one successor");
        for added in rest {
            let mut next = branch.clone();
            self.extend(&mut next, added);
            out.push(next);
        }
        let mut next = branch;
        self.extend(&mut next, last);
        out.push(next);
        out
    }

    fn extend(&self, branch: &mut Branch, added: &[Formula]) {
        branch.consume(self.rule, &self.premise);
        if self.contradiction {
            branch.set_contradiction();
        }
        for f in added {
            branch.add(f.clone());
        }
    }
}

/// Tableau prover with a node budget. Every public entry point starts a
/// fresh validity memo shared by the nested R2/R6 tests it triggers.
///
/// With [`Prover::keep_validity_cache`], verdicts of nested tests that never
/// hit a running test survive across calls. Those verdicts do not depend on
/// what was running at the time; cache hits charge no nodes, so only budget
/// exhaustion can differ from a fresh prover.
#[derive(Debug, Clone)]
pub struct Prover {
    budget: usize,
    used: usize,
    memo: HashMap<Formula, Memo>,
    /// Bumped whenever a test reads an in-progress or cycle-tainted verdict.
    cycle_hits: usize,
    persistent: Option<HashMap<Formula, bool>>,
}

impl Default for Prover {
    fn default() -> Self {
        Prover::new(DEFAULT_NODE_BUDGET)
    }
}

impl Prover {
    pub fn new(budget: usize) -> Self {
        Prover {
            budget,
            used: 0,
            memo: HashMap::default(),
            cycle_hits: 0,
            persistent: None,
        }
    }

    /// Keeps cycle-free validity verdicts from one call to the next.
    pub fn keep_validity_cache(mut self) -> Self {
        self.persistent = Some(HashMap::default());
        self
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    fn reset(&mut self) {
        self.used = 0;
        self.cycle_hits = 0;
        self.memo.clear();
    }

    /// Tableau for `premises ∪ {~goal}`.
    pub fn prove(&mut self, premises: &[Formula], goal: &Formula) -> Result<ProveResult, TableauError> {
        self.reset();
        let mut roots: Vec<(Formula, RuleId)> =
            premises.iter().map(|p| (p.clone(), RuleId::Premise)).collect();
        roots.push((negate(goal), RuleId::NegatedGoal));
        self.search(&roots, true)
    }

    /// `prove` without building the tree: only the verdict.
    pub fn decide(&mut self, premises: &[Formula], goal: &Formula) -> Result<Verdict, TableauError> {
        self.reset();
        let mut roots: Vec<(Formula, RuleId)> =
            premises.iter().map(|p| (p.clone(), RuleId::Premise)).collect();
        roots.push((negate(goal), RuleId::NegatedGoal));
        Ok(self.search(&roots, false)?.verdict)
    }

    pub fn is_valid(&mut self, f: &Formula) -> Result<bool, TableauError> {
        self.reset();
        self.valid(f)
    }

    /// Applies the highest-priority applicable rule. Returns the successor
    /// branches, or an empty list when `branch` is closed or saturated.
    pub fn expand_step(&mut self, branch: &Branch) -> Result<Vec<Branch>, TableauError> {
        self.reset();
        if branch.is_closed() {
            return Ok(Vec::new());
        }
        Ok(match self.next_application(branch)? {
            Some(app) => app.apply(branch),
            None => Vec::new(),
        })
    }

    /// Follows the leftmost successor until the branch closes or no rule
    /// applies.
    pub fn saturate(&mut self, branch: &Branch) -> Result<Branch, TableauError> {
        self.reset();
        let mut current = branch.clone();
        while !current.is_closed() {
            let Some(app) = self.next_application(&current)? else {
                break;
            };
            self.charge(app.successors[0].len())?;
            current = app.apply(&current).swap_remove(0);
        }
        Ok(current)
    }

    fn charge(&mut self, nodes: usize) -> Result<(), TableauError> {
        self.used += nodes;
        if self.used > self.budget {
            Err(TableauError::ResourceLimit {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    /// Memoised validity test. A formula whose test is already running
    /// counts as not (yet) valid.
    fn valid(&mut self, f: &Formula) -> Result<bool, TableauError> {
        if !f.contains_nabla() {
            // Without `#` the tableau is the classical one, which decides
            // exactly the tautologies.
            self.charge(1)?;
            return Ok(f.is_classical_tautology());
        }
        if let Some(&v) = self.persistent.as_ref().and_then(|c| c.get(f)) {
            return Ok(v);
        }
        match self.memo.get(f) {
            Some(&Memo::Done(v, tainted)) => {
                self.cycle_hits += usize::from(tainted);
                return Ok(v);
            }
            Some(Memo::InProgress) => {
                self.cycle_hits += 1;
                return Ok(false);
            }
            None => {}
        }
        self.memo.insert(f.clone(), Memo::InProgress);
        let hits = self.cycle_hits;
        let result = self.search(&[(negate(f), RuleId::NegatedGoal)], false);
        match result {
            Ok(r) => {
                let v = r.is_closed();
                let tainted = self.cycle_hits != hits;
                match &mut self.persistent {
                    Some(cache) if !tainted => {
                        self.memo.remove(f);
                        cache.insert(f.clone(), v);
                    }
                    _ => {
                        self.memo.insert(f.clone(), Memo::Done(v, tainted));
                    }
                }
                Ok(v)
            }
            Err(e) => {
                self.memo.remove(f);
                Err(e)
            }
        }
    }

    /// Leftmost-first search. Nested validity tests pass `record = false`
    /// and get an empty tree back; only the verdict is used.
    fn search(&mut self, roots: &[(Formula, RuleId)], record: bool) -> Result<ProveResult, TableauError> {
        let mut tree = TableauTree::default();
        let push = |tree: &mut TableauTree, f: &Formula, rule, parent| {
            if record {
                Some(tree.push(f.clone(), rule, parent))
            } else {
                None
            }
        };
        let mut branch = Branch::default();
        let mut last = None;
        for (f, rule) in roots {
            self.charge(1)?;
            last = push(&mut tree, f, *rule, last);
            branch.add(f.clone());
        }

        let mut stack = vec![(branch, last)];
        while let Some((mut branch, mut node)) = stack.pop() {
            loop {
                if branch.is_closed() {
                    if let Some(leaf) = node {
                        tree.mark(leaf, LeafMark::Closed);
                    }
                    break;
                }
                let Some(app) = self.next_application(&branch)? else {
                    if record {
                        tree.mark(node.expect("recorded"), LeafMark::Open);
                        for (_, pending) in stack {
                            tree.mark(pending.expect("recorded"), LeafMark::Unexplored);
                        }
                    }
                    return Ok(ProveResult {
                        verdict: Verdict::Open,
                        tree,
                        open_branch: Some(branch.formulas().to_vec()),
                    });
                };
                if app.successors.len() == 1 {
                    for f in &app.successors[0] {
                        self.charge(1)?;
                        node = push(&mut tree, f, app.rule, node);
                    }
                    app.extend(&mut branch, &app.successors[0]);
                    continue;
                }
                let successors = app.apply_owned(branch);
                let mut arms = Vec::with_capacity(successors.len());
                for (succ, added) in successors.into_iter().zip(&app.successors) {
                    let mut arm = node;
                    for f in added {
                        self.charge(1)?;
                        arm = push(&mut tree, f, app.rule, arm);
                    }
                    arms.push((succ, arm));
                }
                // leftmost arm is explored first
                stack.extend(arms.into_iter().rev());
                break;
            }
        }
        Ok(ProveResult {
            verdict: Verdict::Closed,
            tree,
            open_branch: None,
        })
    }

    fn next_application(&mut self, branch: &Branch) -> Result<Option<Application>, TableauError> {
        if let Some(app) = self.alpha(branch)? {
            return Ok(Some(app));
        }
        for (i, f) in branch.formulas().iter().enumerate() {
            if let Formula::Nabla(a) = f {
                if !branch.is_consumed_at(i, RuleId::R1) {
                    return Ok(Some(Application::linear(RuleId::R1, f, vec![(**a).clone()])));
                }
            }
        }
        for (i, f) in branch.formulas().iter().enumerate() {
            if let Formula::Not(inner) = f {
                if let Formula::Nabla(a) = inner.as_ref() {
                    if !branch.is_consumed_at(i, RuleId::R2) {
                        let valid = self.valid(a)?;
                        let mut app = Application::linear(
                            RuleId::R2,
                            f,
                            if valid { vec![Formula::Bottom] } else { vec![] },
                        );
                        app.contradiction = valid;
                        return Ok(Some(app));
                    }
                }
            }
        }
        if let Some(app) = self.r6_on_pairs(branch)? {
            return Ok(Some(app));
        }
        for (i, f) in branch.formulas().iter().enumerate() {
            let Some(arg) = negated_nabla(f) else { continue };
            match arg {
                Formula::Implies(a, b) if !branch.is_consumed_at(i, RuleId::R5A) => {
                    let rewritten = Formula::or(Formula::not((**a).clone()), (**b).clone());
                    return Ok(Some(Application::linear(
                        RuleId::R5A,
                        f,
                        vec![Formula::not(Formula::nabla(rewritten))],
                    )));
                }
                Formula::Iff(a, b) if !branch.is_consumed_at(i, RuleId::R5B) => {
                    let rewritten = Formula::and(
                        Formula::implies((**a).clone(), (**b).clone()),
                        Formula::implies((**b).clone(), (**a).clone()),
                    );
                    return Ok(Some(Application::linear(
                        RuleId::R5B,
                        f,
                        vec![Formula::not(Formula::nabla(rewritten))],
                    )));
                }
                _ => {}
            }
        }
        for (i, f) in branch.formulas().iter().enumerate() {
            if let Some(Formula::Or(a, b)) = negated_nabla(f) {
                if !branch.is_consumed_at(i, RuleId::R4) {
                    return Ok(Some(Application::linear(
                        RuleId::R4,
                        f,
                        vec![
                            Formula::not(Formula::nabla((**a).clone())),
                            Formula::not(Formula::nabla((**b).clone())),
                        ],
                    )));
                }
            }
        }
        self.beta(branch)
    }

    fn alpha(&mut self, branch: &Branch) -> Result<Option<Application>, TableauError> {
        for (i, f) in branch.formulas().iter().enumerate() {
            let Some(rule) = alpha_rule(f) else { continue };
            if branch.is_consumed_at(i, rule) {
                continue;
            }
            let added = match f {
                Formula::And(a, b) => vec![(**a).clone(), (**b).clone()],
                Formula::Iff(a, b) => {
                    // a valid biconditional is left to R6
                    if self.valid(f)? {
                        continue;
                    }
                    vec![
                        Formula::implies((**a).clone(), (**b).clone()),
                        Formula::implies((**b).clone(), (**a).clone()),
                    ]
                }
                Formula::Not(inner) => match inner.as_ref() {
                    Formula::Not(a) => vec![(**a).clone()],
                    Formula::Or(a, b) => vec![Formula::not((**a).clone()), Formula::not((**b).clone())],
                    Formula::Implies(a, b) => vec![(**a).clone(), Formula::not((**b).clone())],
                    Formula::Top => vec![Formula::Bottom],
                    _ => unreachable!("alpha_rule matched"),
                },
                _ => unreachable!("alpha_rule matched"),
            };
            return Ok(Some(Application::linear(rule, f, added)));
        }
        Ok(None)
    }

    /// R6 with the biconditional supplied as a theorem: for `#A` and `~#B`
    /// on the branch with `A <-> B` valid.
    ///
    /// Verdicts cannot change during one search, so pairs among members
    /// already scanned without success are skipped.
    fn r6_on_pairs(&mut self, branch: &Branch) -> Result<Option<Application>, TableauError> {
        let seen = branch.pairs_checked.get();
        let formulas = branch.formulas();
        for (i, pos) in formulas.iter().enumerate() {
            let Formula::Nabla(a) = pos else { continue };
            for (j, neg) in formulas.iter().enumerate() {
                if i < seen && j < seen {
                    continue;
                }
                let Some(b) = negated_nabla(neg) else { continue };
                if a.as_ref() == b {
                    continue;
                }
                let bicond = Formula::iff((**a).clone(), b.clone());
                if branch.is_consumed(RuleId::R6, &bicond) || !self.valid(&bicond)? {
                    continue;
                }
                return Ok(Some(r6_split(&bicond, a, b)));
            }
        }
        branch.pairs_checked.set(formulas.len());
        Ok(None)
    }

    fn beta(&mut self, branch: &Branch) -> Result<Option<Application>, TableauError> {
        for (i, f) in branch.formulas().iter().enumerate() {
            let Some(rule) = beta_rule(f) else { continue };
            if branch.is_consumed_at(i, rule) {
                continue;
            }
            let not = |g: &Formula| Formula::not(g.clone());
            let app = match f {
                Formula::Or(a, b) => Application::split(rule, f, (**a).clone(), (**b).clone()),
                Formula::Implies(a, b) => Application::split(rule, f, not(a), (**b).clone()),
                Formula::Iff(a, b) => {
                    if !self.valid(f)? {
                        continue;
                    }
                    r6_split(f, a, b)
                }
                Formula::Not(inner) => match inner.as_ref() {
                    Formula::And(a, b) => Application::split(rule, f, not(a), not(b)),
                    Formula::Iff(a, b) => Application::split(
                        rule,
                        f,
                        Formula::not(Formula::implies((**a).clone(), (**b).clone())),
                        Formula::not(Formula::implies((**b).clone(), (**a).clone())),
                    ),
                    Formula::Nabla(arg) => match arg.as_ref() {
                        Formula::And(a, b) => Application::split(
                            rule,
                            f,
                            Formula::not(Formula::nabla((**a).clone())),
                            Formula::not(Formula::nabla((**b).clone())),
                        ),
                        _ => unreachable!("beta_rule matched"),
                    },
                    _ => unreachable!("beta_rule matched"),
                },
                _ => unreachable!("beta_rule matched"),
            };
            return Ok(Some(app));
        }
        Ok(None)
    }
}

fn alpha_rule(f: &Formula) -> Option<RuleId> {
    Some(match f {
        Formula::And(..) => RuleId::Conjunction,
        Formula::Iff(..) => RuleId::Biconditional,
        Formula::Not(inner) => match inner.as_ref() {
            Formula::Not(_) => RuleId::DoubleNegation,
            Formula::Or(..) => RuleId::NegatedDisjunction,
            Formula::Implies(..) => RuleId::NegatedImplication,
            Formula::Top => RuleId::NegatedTop,
            _ => return None,
        },
        _ => return None,
    })
}

fn beta_rule(f: &Formula) -> Option<RuleId> {
    Some(match f {
        Formula::Or(..) => RuleId::Disjunction,
        Formula::Implies(..) => RuleId::Implication,
        Formula::Iff(..) => RuleId::R6,
        Formula::Not(inner) => match inner.as_ref() {
            Formula::And(..) => RuleId::NegatedConjunction,
            Formula::Iff(..) => RuleId::NegatedBiconditional,
            Formula::Nabla(arg) if matches!(arg.as_ref(), Formula::And(..)) => RuleId::R3,
            _ => return None,
        },
        _ => return None,
    })
}

fn negated_nabla(f: &Formula) -> Option<&Formula> {
    match f {
        Formula::Not(inner) => match inner.as_ref() {
            Formula::Nabla(a) => Some(a),
            _ => None,
        },
        _ => None,
    }
}

fn r6_split(key: &Formula, a: &Formula, b: &Formula) -> Application {
    let na = Formula::nabla(a.clone());
    let nb = Formula::nabla(b.clone());
    Application::split(
        RuleId::R6,
        key,
        Formula::and(na.clone(), nb.clone()),
        Formula::and(Formula::not(na), Formula::not(nb)),
    )
}

/// `prove` with the default node budget.
pub fn prove(premises: &[Formula], goal: &Formula) -> Result<ProveResult, TableauError> {
    Prover::default().prove(premises, goal)
}

/// `is_valid` with the default node budget.
pub fn is_valid(f: &Formula) -> Result<bool, TableauError> {
    Prover::default().is_valid(f)
}
