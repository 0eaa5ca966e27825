//! Stored proofs: valid derivations exercising every rule, and malformed
//! ones with the violations they must produce.

/// A stored valid proof and the sequent it concludes (sequent text, with
/// `Γ |- Δ` sugar allowed).
#[derive(Debug, Clone, Copy)]
pub struct GoldenProof {
    pub name: &'static str,
    pub text: &'static str,
    pub conclusion: &'static str,
}

/// A stored invalid proof with the node path and a fragment of the
/// message the checker must produce.
#[derive(Debug, Clone, Copy)]
pub struct GoldenViolation {
    pub name: &'static str,
    pub text: &'static str,
    pub path: &'static [usize],
    pub message_contains: &'static str,
}

pub const VALID: &[GoldenProof] = &[
    GoldenProof {
        name: "identity_atom",
        text: "(ax A)",
        conclusion: "A^, A",
    },
    GoldenProof {
        name: "identity_tensor",
        text: "(par [A^ | B^] (tensor [A^] [B^] (ax A) (ax B)))",
        conclusion: "A^ | B^, A * B",
    },
    GoldenProof {
        name: "modus_ponens",
        // Composes an implication with its antecedent; stated two-sided.
        text: "(par [(A * B^) | A^] (tensor [A^] [B] (ax A) (ax B)))",
        conclusion: "(A -o B) * A |- B",
    },
    GoldenProof {
        name: "composition_theorem",
        // (A -o B) * (B -o C) entails A -o C.
        text: "(par [((A * B^) | (B * C^)) | (A^ | C)]
  (par [(A * B^) | (B * C^)]
    (par [A^ | C]
      (tensor [A^ (A * B^)] [C]
        (tensor [A^] [B] (ax A) (ax B))
        (ax C)))))",
        conclusion: "((A * B^) | (B * C^)) | (A^ | C)",
    },
    GoldenProof {
        name: "cut_identity",
        // Composition consumes the cut formula: the ledger records two
        // tokens for A even though the conclusion shows one pair.
        text: "(cut [A^] [A] (ax A) (ax A))",
        conclusion: "A^, A",
    },
    GoldenProof {
        name: "cut_compound",
        text: "(cut [A^ | B^] [A * B]
  (par [A^ | B^] (tensor [A^] [B^] (ax A) (ax B)))
  (par [A^ | B^] (tensor [A^] [B^] (ax A) (ax B))))",
        conclusion: "A^ | B^, A * B",
    },
    GoldenProof {
        name: "distrib_tensor_plus_fwd",
        // A * (B + C) entails (A * B) + (A * C).
        text: "(par [(A^ | (B^ & C^)) | ((A * B) + (A * C))]
  (par [A^ | (B^ & C^)]
    (with [B^ & C^]
      (plus1 [(A * B) + (A * C)] (tensor [A^] [B^] (ax A) (ax B)))
      (plus2 [(A * B) + (A * C)] (tensor [A^] [C^] (ax A) (ax C))))))",
        conclusion: "(A^ | (B^ & C^)) | ((A * B) + (A * C))",
    },
    GoldenProof {
        name: "distrib_tensor_plus_rev",
        // (A * B) + (A * C) entails A * (B + C).
        text: "(par [((A^ | B^) & (A^ | C^)) | (A * (B + C))]
  (with [(A^ | B^) & (A^ | C^)]
    (par [A^ | B^] (tensor [A^] [B^] (ax A) (plus1 [B + C] (ax B))))
    (par [A^ | C^] (tensor [A^] [C^] (ax A) (plus2 [B + C] (ax C))))))",
        conclusion: "((A^ | B^) & (A^ | C^)) | (A * (B + C))",
    },
    GoldenProof {
        name: "distrib_par_with_fwd",
        // A | (B & C) entails (A | B) & (A | C).
        text: "(par [(A^ * (B^ + C^)) | ((A | B) & (A | C))]
  (with [(A | B) & (A | C)]
    (par [A | B] (tensor [A] [B] (ax A) (plus1 [B^ + C^] (ax B))))
    (par [A | C] (tensor [A] [C] (ax A) (plus2 [B^ + C^] (ax C))))))",
        conclusion: "(A^ * (B^ + C^)) | ((A | B) & (A | C))",
    },
    GoldenProof {
        name: "distrib_par_with_rev",
        // (A | B) & (A | C) entails A | (B & C).
        text: "(par [((A^ * B^) + (A^ * C^)) | (A | (B & C))]
  (par [A | (B & C)]
    (with [B & C]
      (plus1 [(A^ * B^) + (A^ * C^)] (tensor [A] [B] (ax A) (ax B)))
      (plus2 [(A^ * B^) + (A^ * C^)] (tensor [A] [C] (ax A) (ax C))))))",
        conclusion: "((A^ * B^) + (A^ * C^)) | (A | (B & C))",
    },
    GoldenProof {
        name: "promotion_chain",
        text: "(promote [!A] (derelict [?A^] (ax A)))",
        conclusion: "?A^, !A",
    },
    GoldenProof {
        name: "dereliction_simple",
        text: "(derelict [?A] (ax A))",
        conclusion: "A^, ?A",
    },
    GoldenProof {
        name: "contraction_reuse",
        // Duplicates ?A^ so one banked premise feeds both tensor sides;
        // the ledger must report a reuse event.
        text: "(contract? [?A^]
  (tensor [?A^] [?A^]
    (derelict [?A^] (ax A))
    (derelict [?A^] (ax A))))",
        conclusion: "?A^, A * A",
    },
    GoldenProof {
        name: "weakening_quest",
        text: "(weaken? [?B] (ax A))",
        conclusion: "A^, A, ?B",
    },
    GoldenProof {
        name: "top_absorbs_context",
        text: "(top [A])",
        conclusion: "A, T",
    },
    GoldenProof {
        name: "one_unit",
        text: "(one)",
        conclusion: "1",
    },
    GoldenProof {
        name: "bottom_intro",
        text: "(bottom (one))",
        conclusion: "1, F",
    },
    GoldenProof {
        name: "with_plus_mixed",
        text: "(with [A & (A + B)] (ax A) (plus1 [A + B] (ax A)))",
        conclusion: "A^, A & (A + B)",
    },
];

pub const INVALID: &[GoldenViolation] = &[
    GoldenViolation {
        name: "contract_plain_formula",
        text: "(contract? [A] (top [A A]))",
        path: &[],
        message_contains: "contraction is restricted to `?`-formulas",
    },
    GoldenViolation {
        name: "weaken_plain_formula",
        text: "(weaken? [B] (ax A))",
        path: &[],
        message_contains: "weakening is restricted to `?`-formulas",
    },
    GoldenViolation {
        name: "tensor_unsplit_context",
        text: "(tensor [] [] (ax A) (ax B))",
        path: &[],
        message_contains: "exactly one principal formula",
    },
    GoldenViolation {
        name: "tensor_context_not_owned",
        text: "(tensor [B] [] (ax A) (ax B))",
        path: &[],
        message_contains: "does not contain declared context formula",
    },
    GoldenViolation {
        name: "promote_plain_context",
        text: "(promote [!A] (ax A))",
        path: &[],
        message_contains: "all-`?` context",
    },
    GoldenViolation {
        name: "axiom_compound_formula",
        text: "(ax [A * B])",
        path: &[],
        message_contains: "axiom must conclude on an atom",
    },
    GoldenViolation {
        name: "one_with_context",
        text: "(one [A])",
        path: &[],
        message_contains: "empty context",
    },
    GoldenViolation {
        name: "cut_formulas_not_dual",
        text: "(cut [A^] [B] (ax A) (ax B))",
        path: &[],
        message_contains: "not dual",
    },
    GoldenViolation {
        name: "with_context_mismatch",
        text: "(with [A & B] (ax A) (ax B))",
        path: &[],
        message_contains: "share identical contexts",
    },
    GoldenViolation {
        name: "nested_with_mismatch",
        text: "(par [A | (B & C)] (with [B & C] (ax B) (ax C)))",
        path: &[0],
        message_contains: "share identical contexts",
    },
];
