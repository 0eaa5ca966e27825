//! The rule checker: computes conclusions bottom-up and validates every
//! application.

use std::fmt;

use thiserror::Error;

use crate::eval::{evaluate, Environment, EvalError};
use crate::formula::Formula;
use crate::tv::{Constant, TruthValue};

use super::ledger::{format_path, EvidenceLedger};
use super::proof::{ProofNode, RuleApp, RuleTag};
use super::sequent::Sequent;

/// A rejected rule application: which rule, where in the tree, and what
/// was expected against what was found.
#[derive(Debug, Clone, PartialEq, Error)]
pub struct Violation {
    pub rule: RuleTag,
    /// Premise indices from the root to the offending node.
    pub path: Vec<usize>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rule `{}` at {}: {}",
            self.rule,
            format_path(&self.path),
            self.message
        )
    }
}

/// A node of a validated derivation, with its computed conclusion.
#[derive(Debug, Clone, PartialEq)]
pub struct Derivation {
    pub rule: RuleTag,
    pub conclusion: Sequent,
    pub premises: Vec<Derivation>,
}

/// A validated proof with its evidence ledger.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckedProof {
    pub derivation: Derivation,
    pub ledger: EvidenceLedger,
}

impl CheckedProof {
    pub fn conclusion(&self) -> &Sequent {
        &self.derivation.conclusion
    }
}

/// Validates a proof tree. On success the derivation carries every
/// node's computed conclusion and the ledger accounts for every axiom
/// leaf and contraction; on failure the violation names the rule, the
/// node path, and the mismatch.
pub fn check(proof: &ProofNode) -> Result<CheckedProof, Violation> {
    let mut path = Vec::new();
    let (derivation, ledger) = check_node(proof, &mut path)?;
    Ok(CheckedProof { derivation, ledger })
}

fn violation(rule: RuleTag, path: &[usize], message: String) -> Violation {
    Violation {
        rule,
        path: path.to_vec(),
        message,
    }
}

fn show(formulas: &[Formula]) -> String {
    if formulas.is_empty() {
        return "<empty>".to_string();
    }
    formulas
        .iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Removes one occurrence of `target`; false when absent.
fn remove_one(formulas: &mut Vec<Formula>, target: &Formula) -> bool {
    match formulas.iter().position(|f| f == target) {
        Some(idx) => {
            formulas.remove(idx);
            true
        }
        None => false,
    }
}

/// Removes each of `targets` once, reporting the first one missing.
fn remove_all(formulas: &mut Vec<Formula>, targets: &[Formula]) -> Result<(), Formula> {
    for t in targets {
        if !remove_one(formulas, t) {
            return Err(t.clone());
        }
    }
    Ok(())
}

fn multiset_eq(a: &[Formula], b: &[Formula]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort();
    b.sort();
    a == b
}

/// Splits a premise conclusion into the declared context and the single
/// remaining principal formula.
fn split_context(
    premise: &Sequent,
    declared: &[Formula],
    rule: RuleTag,
    side: &str,
    path: &[usize],
) -> Result<Formula, Violation> {
    let mut rest = premise.formulas().to_vec();
    if let Err(missing) = remove_all(&mut rest, declared) {
        return Err(violation(
            rule,
            path,
            format!(
                "{side} premise does not contain declared context formula {missing}; premise concludes {premise}"
            ),
        ));
    }
    match rest.len() {
        1 => Ok(rest.pop().expect("len checked")),
        n => Err(violation(
            rule,
            path,
            format!(
                "{side} premise must be the declared context plus exactly one principal formula; found {n} leftover ({}) in {premise}",
                show(&rest)
            ),
        )),
    }
}

fn check_node(
    node: &ProofNode,
    path: &mut Vec<usize>,
) -> Result<(Derivation, EvidenceLedger), Violation> {
    let rule = node.rule.tag();
    if node.premises.len() != node.rule.premise_arity() {
        return Err(violation(
            rule,
            path,
            format!(
                "expects {} premise(s), found {}",
                node.rule.premise_arity(),
                node.premises.len()
            ),
        ));
    }

    let mut premises = Vec::with_capacity(node.premises.len());
    let mut ledger = EvidenceLedger::default();
    for (i, premise) in node.premises.iter().enumerate() {
        path.push(i);
        let (derivation, sub) = check_node(premise, path)?;
        path.pop();
        premises.push(derivation);
        ledger.absorb(sub);
    }

    let conclusion = match &node.rule {
        RuleApp::Ax { formula } => {
            let f = formula.nnf();
            let Formula::Atom(name) = &f else {
                return Err(violation(
                    rule,
                    path,
                    format!("axiom must conclude on an atom, found {f}"),
                ));
            };
            ledger.record_axiom(name);
            Sequent::new([f.clone().dual(), f.clone()])
        }
        RuleApp::Cut {
            left_context,
            right_context,
        } => {
            let left: Vec<Formula> = left_context.iter().map(Formula::nnf).collect();
            let right: Vec<Formula> = right_context.iter().map(Formula::nnf).collect();
            let cut_formula = split_context(&premises[0].conclusion, &left, rule, "left", path)?;
            let dual = split_context(&premises[1].conclusion, &right, rule, "right", path)?;
            let expected = cut_formula.clone().dual().nnf();
            if dual != expected {
                return Err(violation(
                    rule,
                    path,
                    format!(
                        "cut formulas are not dual: left yields {cut_formula}, right yields {dual}, expected {expected}"
                    ),
                ));
            }
            Sequent::new(left.into_iter().chain(right))
        }
        RuleApp::Tensor {
            left_context,
            right_context,
        } => {
            let left: Vec<Formula> = left_context.iter().map(Formula::nnf).collect();
            let right: Vec<Formula> = right_context.iter().map(Formula::nnf).collect();
            let a = split_context(&premises[0].conclusion, &left, rule, "left", path)?;
            let b = split_context(&premises[1].conclusion, &right, rule, "right", path)?;
            Sequent::new(
                left.into_iter()
                    .chain(right)
                    .chain(std::iter::once(a.tensor(b))),
            )
        }
        RuleApp::Par { principal } => {
            let p = principal.nnf();
            let Formula::Par(l, r) = &p else {
                return Err(violation(
                    rule,
                    path,
                    format!("principal of `par` must be a `|` formula, found {p}"),
                ));
            };
            let mut rest = premises[0].conclusion.formulas().to_vec();
            if let Err(missing) = remove_all(&mut rest, &[(**l).clone(), (**r).clone()]) {
                return Err(violation(
                    rule,
                    path,
                    format!(
                        "premise {} does not provide component {missing} of {p}",
                        premises[0].conclusion
                    ),
                ));
            }
            rest.push(p.clone());
            Sequent::new(rest)
        }
        RuleApp::With { principal } => {
            let p = principal.nnf();
            let Formula::With(l, r) = &p else {
                return Err(violation(
                    rule,
                    path,
                    format!("principal of `with` must be a `&` formula, found {p}"),
                ));
            };
            let mut ctx1 = premises[0].conclusion.formulas().to_vec();
            if !remove_one(&mut ctx1, l) {
                return Err(violation(
                    rule,
                    path,
                    format!(
                        "left premise {} does not provide component {l} of {p}",
                        premises[0].conclusion
                    ),
                ));
            }
            let mut ctx2 = premises[1].conclusion.formulas().to_vec();
            if !remove_one(&mut ctx2, r) {
                return Err(violation(
                    rule,
                    path,
                    format!(
                        "right premise {} does not provide component {r} of {p}",
                        premises[1].conclusion
                    ),
                ));
            }
            if !multiset_eq(&ctx1, &ctx2) {
                return Err(violation(
                    rule,
                    path,
                    format!(
                        "premises of `with` must share identical contexts, found {} against {}",
                        show(&ctx1),
                        show(&ctx2)
                    ),
                ));
            }
            ctx1.push(p.clone());
            Sequent::new(ctx1)
        }
        RuleApp::Plus1 { principal } | RuleApp::Plus2 { principal } => {
            let p = principal.nnf();
            let Formula::Plus(l, r) = &p else {
                return Err(violation(
                    rule,
                    path,
                    format!("principal of `{rule}` must be a `+` formula, found {p}"),
                ));
            };
            let component = if rule == RuleTag::PlusR1 { l } else { r };
            let mut rest = premises[0].conclusion.formulas().to_vec();
            if !remove_one(&mut rest, component) {
                return Err(violation(
                    rule,
                    path,
                    format!(
                        "premise {} does not provide component {component} of {p}",
                        premises[0].conclusion
                    ),
                ));
            }
            rest.push(p.clone());
            Sequent::new(rest)
        }
        RuleApp::One { context } => {
            if !context.is_empty() {
                return Err(violation(
                    rule,
                    path,
                    format!(
                        "`1` must be proven with an empty context, declared {}",
                        show(context)
                    ),
                ));
            }
            Sequent::new([Formula::One])
        }
        RuleApp::Bottom => {
            let mut rest = premises[0].conclusion.formulas().to_vec();
            rest.push(Formula::Bottom);
            Sequent::new(rest)
        }
        RuleApp::Top { context } => {
            let mut ctx: Vec<Formula> = context.iter().map(Formula::nnf).collect();
            ctx.push(Formula::Top);
            Sequent::new(ctx)
        }
        RuleApp::Promote { principal } => {
            let p = principal.nnf();
            let Formula::Bang(inner) = &p else {
                return Err(violation(
                    rule,
                    path,
                    format!("principal of `promote` must be a `!` formula, found {p}"),
                ));
            };
            let mut rest = premises[0].conclusion.formulas().to_vec();
            if !remove_one(&mut rest, inner) {
                return Err(violation(
                    rule,
                    path,
                    format!(
                        "premise {} does not provide {inner} for {p}",
                        premises[0].conclusion
                    ),
                ));
            }
            if let Some(bad) = rest.iter().find(|f| !matches!(f, Formula::Quest(_))) {
                return Err(violation(
                    rule,
                    path,
                    format!("promotion requires an all-`?` context, found {bad}"),
                ));
            }
            rest.push(p.clone());
            Sequent::new(rest)
        }
        RuleApp::Derelict { principal } => {
            let p = principal.nnf();
            let Formula::Quest(inner) = &p else {
                return Err(violation(
                    rule,
                    path,
                    format!("principal of `derelict` must be a `?` formula, found {p}"),
                ));
            };
            let mut rest = premises[0].conclusion.formulas().to_vec();
            if !remove_one(&mut rest, inner) {
                return Err(violation(
                    rule,
                    path,
                    format!(
                        "premise {} does not provide {inner} for {p}",
                        premises[0].conclusion
                    ),
                ));
            }
            rest.push(p.clone());
            Sequent::new(rest)
        }
        RuleApp::WeakenQuest { principal } => {
            let p = principal.nnf();
            if !matches!(p, Formula::Quest(_)) {
                return Err(violation(
                    rule,
                    path,
                    format!("weakening is restricted to `?`-formulas, found {p}"),
                ));
            }
            let mut rest = premises[0].conclusion.formulas().to_vec();
            rest.push(p);
            Sequent::new(rest)
        }
        RuleApp::ContractQuest { principal } => {
            let p = principal.nnf();
            if !matches!(p, Formula::Quest(_)) {
                return Err(violation(
                    rule,
                    path,
                    format!("contraction is restricted to `?`-formulas, found {p}"),
                ));
            }
            let mut rest = premises[0].conclusion.formulas().to_vec();
            for _ in 0..2 {
                if !remove_one(&mut rest, &p) {
                    return Err(violation(
                        rule,
                        path,
                        format!(
                            "contraction needs two occurrences of {p} in the premise {}",
                            premises[0].conclusion
                        ),
                    ));
                }
            }
            ledger.record_reuse(p.clone(), path.to_vec());
            rest.push(p);
            Sequent::new(rest)
        }
    };

    Ok((
        Derivation {
            rule,
            conclusion,
            premises,
        },
        ledger,
    ))
}

/// A derivation with the truth value of every sequent attached.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnotatedProof {
    pub rule: RuleTag,
    pub conclusion: Sequent,
    pub value: TruthValue,
    pub premises: Vec<AnnotatedProof>,
}

/// Annotates every sequent of a checked proof with its truth value: the
/// multiplicative disjunction of its members (an empty sequent takes the
/// `F` constant's value).
pub fn tv_annotate(proof: &CheckedProof, env: &Environment) -> Result<AnnotatedProof, EvalError> {
    annotate_node(&proof.derivation, env)
}

fn annotate_node(node: &Derivation, env: &Environment) -> Result<AnnotatedProof, EvalError> {
    let mut value: Option<TruthValue> = None;
    for formula in node.conclusion.formulas() {
        let v = evaluate(formula, env)?;
        value = Some(match value {
            None => v,
            Some(acc) => acc.or_multiplicative(v, env.universe()),
        });
    }
    let value = value.unwrap_or_else(|| Constant::Bottom.truth_value(env.universe()));
    let premises = node
        .premises
        .iter()
        .map(|p| annotate_node(p, env))
        .collect::<Result<_, _>>()?;
    Ok(AnnotatedProof {
        rule: node.rule,
        conclusion: node.conclusion.clone(),
        value,
        premises,
    })
}

impl AnnotatedProof {
    fn write_indented(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        writeln!(
            f,
            "{:indent$}[{}] {} = {}",
            "",
            self.rule,
            self.conclusion,
            self.value,
            indent = depth * 2
        )?;
        for premise in &self.premises {
            premise.write_indented(f, depth + 1)?;
        }
        Ok(())
    }
}

impl fmt::Display for AnnotatedProof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, 0)
    }
}
