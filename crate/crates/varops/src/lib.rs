//! A computational workbench for variadic operations on finite carriers.
//!
//! The crate tabulates functions F: X* → Y on every word up to a horizon L
//! and decides their laws exhaustively within it: standardness,
//! associativity, preassociativity and its equivalent forms, symmetry, and
//! the idempotence hierarchy. On top of the oracles sit quasi-inverse
//! enumeration for finite unary maps, synthesis of the unique variadic
//! extension determined by unary and binary parts, factorization of
//! preassociative tables through associative ε-standard operations, and a
//! set of rule-defined real-valued families checked by seeded sampling.
//!
//! Every verdict is horizon-bounded: a `true` means "holds for all words of
//! length ≤ L", never more. Negative verdicts carry a minimal witness that
//! replays through the definitional predicates.

pub mod carrier;
pub mod construct;
mod error;
pub mod io;
pub mod oracle;
pub mod quasi_inverse;
pub mod real_families;
pub mod report;
pub mod table;
#[cfg(test)]
pub(crate) mod testutil;
pub mod word;

pub use carrier::{Carrier, Codomain, Value};
pub use error::{Error, Result};
pub use report::{CheckReport, Witness};
pub use table::{BinaryMap, TabulatedVariadic, UnaryMap};
pub use word::{enumerate_words, Word, WordSpace};
