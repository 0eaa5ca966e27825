//! Proof trees: rule applications over premise subtrees.

use std::fmt;

use crate::formula::Formula;

/// The closed rule set. There is no rule for the constant `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleTag {
    Ax,
    Cut,
    TensorR,
    ParR,
    WithR,
    PlusR1,
    PlusR2,
    OneR,
    BottomR,
    TopR,
    Promotion,
    Dereliction,
    QWeakening,
    QContraction,
}

impl RuleTag {
    /// The rule's name in the proof file format.
    pub fn name(self) -> &'static str {
        match self {
            RuleTag::Ax => "ax",
            RuleTag::Cut => "cut",
            RuleTag::TensorR => "tensor",
            RuleTag::ParR => "par",
            RuleTag::WithR => "with",
            RuleTag::PlusR1 => "plus1",
            RuleTag::PlusR2 => "plus2",
            RuleTag::OneR => "one",
            RuleTag::BottomR => "bottom",
            RuleTag::TopR => "top",
            RuleTag::Promotion => "promote",
            RuleTag::Dereliction => "derelict",
            RuleTag::QWeakening => "weaken?",
            RuleTag::QContraction => "contract?",
        }
    }
}

impl fmt::Display for RuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One rule application with its arguments as written. The checker
/// normalizes argument formulas and computes the node's conclusion.
#[derive(Debug, Clone, PartialEq)]
pub enum RuleApp {
    /// `(ax a)`: concludes `|- a^, a` for an atom `a`.
    Ax { formula: Formula },
    /// `(cut [Γ] [Δ] P1 P2)`: `P1` proves `|- Γ, C`, `P2` proves
    /// `|- Δ, C^`; concludes `|- Γ, Δ`, consuming `C`.
    Cut {
        left_context: Vec<Formula>,
        right_context: Vec<Formula>,
    },
    /// `(tensor [Γ] [Δ] P1 P2)`: from `|- Γ, A` and `|- Δ, B` concludes
    /// `|- Γ, Δ, A * B` with the declared exact split.
    Tensor {
        left_context: Vec<Formula>,
        right_context: Vec<Formula>,
    },
    /// `(par [A | B] P)`: from `|- Γ, A, B` concludes `|- Γ, A | B`.
    Par { principal: Formula },
    /// `(with [A & B] P1 P2)`: premises share one context.
    With { principal: Formula },
    /// `(plus1 [A + B] P)`: from `|- Γ, A`.
    Plus1 { principal: Formula },
    /// `(plus2 [A + B] P)`: from `|- Γ, B`.
    Plus2 { principal: Formula },
    /// `(one)`: concludes `|- 1`; any declared context must be empty.
    One { context: Vec<Formula> },
    /// `(bottom P)`: from `|- Γ` concludes `|- Γ, F`.
    Bottom,
    /// `(top [Γ])`: concludes `|- Γ, T` from nothing.
    Top { context: Vec<Formula> },
    /// `(promote [!A] P)`: from `|- ?Γ, A`, every context formula
    /// `?`-prefixed.
    Promote { principal: Formula },
    /// `(derelict [?A] P)`: from `|- Γ, A`.
    Derelict { principal: Formula },
    /// `(weaken? [?A] P)`: from `|- Γ`.
    WeakenQuest { principal: Formula },
    /// `(contract? [?A] P)`: from `|- Γ, ?A, ?A`.
    ContractQuest { principal: Formula },
}

impl RuleApp {
    pub fn tag(&self) -> RuleTag {
        match self {
            RuleApp::Ax { .. } => RuleTag::Ax,
            RuleApp::Cut { .. } => RuleTag::Cut,
            RuleApp::Tensor { .. } => RuleTag::TensorR,
            RuleApp::Par { .. } => RuleTag::ParR,
            RuleApp::With { .. } => RuleTag::WithR,
            RuleApp::Plus1 { .. } => RuleTag::PlusR1,
            RuleApp::Plus2 { .. } => RuleTag::PlusR2,
            RuleApp::One { .. } => RuleTag::OneR,
            RuleApp::Bottom => RuleTag::BottomR,
            RuleApp::Top { .. } => RuleTag::TopR,
            RuleApp::Promote { .. } => RuleTag::Promotion,
            RuleApp::Derelict { .. } => RuleTag::Dereliction,
            RuleApp::WeakenQuest { .. } => RuleTag::QWeakening,
            RuleApp::ContractQuest { .. } => RuleTag::QContraction,
        }
    }

    pub fn premise_arity(&self) -> usize {
        match self.tag() {
            RuleTag::Ax | RuleTag::OneR | RuleTag::TopR => 0,
            RuleTag::Cut | RuleTag::TensorR | RuleTag::WithR => 2,
            _ => 1,
        }
    }
}

/// A proof: one rule application over premise subtrees.
#[derive(Debug, Clone, PartialEq)]
pub struct ProofNode {
    pub rule: RuleApp,
    pub premises: Vec<ProofNode>,
}

impl ProofNode {
    pub fn new(rule: RuleApp, premises: Vec<ProofNode>) -> ProofNode {
        ProofNode { rule, premises }
    }

    /// True when no rule in the tree operates on `?`-formulas
    /// (dereliction, weakening, contraction, promotion).
    pub fn is_exponential_free(&self) -> bool {
        let own = !matches!(
            self.rule.tag(),
            RuleTag::Dereliction | RuleTag::QWeakening | RuleTag::QContraction | RuleTag::Promotion
        );
        own && self.premises.iter().all(ProofNode::is_exponential_free)
    }
}
