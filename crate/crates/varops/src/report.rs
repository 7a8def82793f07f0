//! Verdicts with replayable counterexample witnesses.

use crate::word::Word;

/// Property names used across reports. Kept as plain strings so reports
/// serialize without a registry.
pub mod property {
    pub const STANDARD: &str = "standard";
    pub const EPSILON_STANDARD: &str = "epsilon-standard";
    pub const ASSOCIATIVE: &str = "associative";
    pub const ASSOCIATIVE_SHORT: &str = "associative-short";
    pub const PREASSOCIATIVE: &str = "preassociative";
    pub const PREASSOCIATIVE_PAIRWISE: &str = "preassociative-pairwise";
    pub const PREASSOCIATIVE_SINGLE_CONTEXT: &str = "preassociative-single-context";
    pub const STRONGLY_PREASSOCIATIVE: &str = "strongly-preassociative";
    pub const SYMMETRIC: &str = "symmetric";
    pub const IDEMPOTENT: &str = "idempotent";
    pub const UNARILY_IDEMPOTENT: &str = "unarily-idempotent";
    pub const UNARILY_RANGE_IDEMPOTENT: &str = "unarily-range-idempotent";
    pub const UNARILY_QUASI_RANGE_IDEMPOTENT: &str = "unarily-quasi-range-idempotent";
    pub const CONSTANT_PARTS: &str = "constant-parts";
    pub const QUASI_INVERSE: &str = "quasi-inverse";
    pub const KERNEL_CONGRUENCE: &str = "kernel-congruence";
    pub const ASSOCIATIVITY_IDENTITY_SAMPLED: &str = "associativity-identity-sampled";
    pub const PREASSOCIATIVITY_SAMPLED: &str = "preassociativity-sampled";
    pub const FAMILY_FACTORIZATION_SAMPLED: &str = "family-factorization-sampled";
    pub const EXTENSION_CONDITION_I: &str = "extension-condition-i";
    pub const EXTENSION_CONDITION_II: &str = "extension-condition-ii";
    pub const EXTENSION_CONDITION_III: &str = "extension-condition-iii";
    pub const EXTENSION_RANGE_INCLUSION: &str = "extension-range-inclusion";
}

/// The tuple instantiating a violated implication.
///
/// Finite oracles witness with words; pointwise conditions on unary/binary
/// parts witness with element names; sampled real-family checks witness with
/// float words.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    Words(Vec<Word>),
    Values(Vec<String>),
    RealWords(Vec<Vec<f64>>),
}

/// Verdict of a property oracle, with a witness exactly when it is negative.
///
/// Every verdict is relative to the horizon it was computed at; consumers
/// must not read a `true` as a statement about words longer than
/// `horizon_used`.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub property: String,
    pub verdict: bool,
    pub witness: Option<Witness>,
    pub horizon_used: usize,
}

impl CheckReport {
    pub fn pass(property: &str, horizon_used: usize) -> Self {
        Self {
            property: property.to_string(),
            verdict: true,
            witness: None,
            horizon_used,
        }
    }

    pub fn fail(property: &str, horizon_used: usize, witness: Witness) -> Self {
        Self {
            property: property.to_string(),
            verdict: false,
            witness: Some(witness),
            horizon_used,
        }
    }

    pub fn is_pass(&self) -> bool {
        self.verdict
    }

    /// The witness as words, when this report carries one.
    pub fn witness_words(&self) -> Option<&[Word]> {
        match &self.witness {
            Some(Witness::Words(ws)) => Some(ws),
            _ => None,
        }
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: {} (horizon {})",
            self.property,
            if self.verdict { "holds" } else { "fails" },
            self.horizon_used
        )
    }
}
