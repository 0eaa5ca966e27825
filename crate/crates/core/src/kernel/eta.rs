//! Derived identity proofs: the kernel's axiom is atomic-only, so
//! `|- f^, f` for compound `f` is built by eta-expansion.

use crate::formula::Formula;

use super::proof::{ProofNode, RuleApp};

/// Builds the canonical proof of `|- f^, f` (both sides in negation
/// normal form) for any formula.
pub fn identity_proof(formula: &Formula) -> ProofNode {
    build(&formula.nnf())
}

/// `f` is in negation normal form.
fn build(f: &Formula) -> ProofNode {
    let dual = |g: &Formula| g.clone().dual().nnf();
    match f {
        Formula::Atom(_) => ProofNode::new(RuleApp::Ax { formula: f.clone() }, vec![]),
        // Dual in normal form sits on an atom; the axiom covers it.
        Formula::Dual(inner) => ProofNode::new(
            RuleApp::Ax {
                formula: (**inner).clone(),
            },
            vec![],
        ),
        Formula::Tensor(l, r) => {
            // tensor [l^] [r^] over the component identities, then fold
            // the context with par into (l * r)^ = l^ | r^.
            let tensor = ProofNode::new(
                RuleApp::Tensor {
                    left_context: vec![dual(l)],
                    right_context: vec![dual(r)],
                },
                vec![build(l), build(r)],
            );
            ProofNode::new(
                RuleApp::Par {
                    principal: dual(l).par(dual(r)),
                },
                vec![tensor],
            )
        }
        Formula::Par(l, r) => {
            let tensor = ProofNode::new(
                RuleApp::Tensor {
                    left_context: vec![(**l).clone()],
                    right_context: vec![(**r).clone()],
                },
                vec![build(l), build(r)],
            );
            ProofNode::new(
                RuleApp::Par {
                    principal: (**l).clone().par((**r).clone()),
                },
                vec![tensor],
            )
        }
        Formula::With(l, r) => {
            let plus = dual(l).plus(dual(r));
            let left = ProofNode::new(
                RuleApp::Plus1 {
                    principal: plus.clone(),
                },
                vec![build(l)],
            );
            let right = ProofNode::new(RuleApp::Plus2 { principal: plus }, vec![build(r)]);
            ProofNode::new(
                RuleApp::With {
                    principal: (**l).clone().with((**r).clone()),
                },
                vec![left, right],
            )
        }
        Formula::Plus(l, r) => {
            let plus = (**l).clone().plus((**r).clone());
            let left = ProofNode::new(
                RuleApp::Plus1 {
                    principal: plus.clone(),
                },
                vec![build(l)],
            );
            let right = ProofNode::new(RuleApp::Plus2 { principal: plus }, vec![build(r)]);
            ProofNode::new(
                RuleApp::With {
                    principal: dual(l).with(dual(r)),
                },
                vec![left, right],
            )
        }
        Formula::Bang(inner) => {
            let derelict = ProofNode::new(
                RuleApp::Derelict {
                    principal: dual(inner).quest(),
                },
                vec![build(inner)],
            );
            ProofNode::new(
                RuleApp::Promote {
                    principal: (**inner).clone().bang(),
                },
                vec![derelict],
            )
        }
        Formula::Quest(inner) => {
            let derelict = ProofNode::new(
                RuleApp::Derelict {
                    principal: (**inner).clone().quest(),
                },
                vec![build(inner)],
            );
            ProofNode::new(
                RuleApp::Promote {
                    principal: dual(inner).bang(),
                },
                vec![derelict],
            )
        }
        Formula::One | Formula::Bottom => ProofNode::new(
            RuleApp::Bottom,
            vec![ProofNode::new(RuleApp::One { context: vec![] }, vec![])],
        ),
        Formula::Top | Formula::Zero => ProofNode::new(
            RuleApp::Top {
                context: vec![Formula::Zero],
            },
            vec![],
        ),
        Formula::Lollipop(_, _) => unreachable!("normal form has no lollipop"),
    }
}
