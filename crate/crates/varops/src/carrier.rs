//! Finite carriers, codomains, and the values a tabulated function can take.
//!
//! A [`Carrier`] is the input alphabet: an ordered list of distinct symbol
//! names. A [`Codomain`] is an ordered list of distinct value names, which may
//! additionally contain the distinguished empty-string value ε. ε is never a
//! named element; codomains opt into it with a flag and every API spells it
//! as [`Value::Epsilon`].

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::word::Word;

/// Reserved spelling for the ε value in file formats and display output.
pub const EPSILON_NAME: &str = "ε";

fn validate_name(name: &str) -> Result<()> {
    if name.is_empty() || name.contains(',') || name == EPSILON_NAME {
        return Err(Error::InvalidName(name.to_string()));
    }
    Ok(())
}

fn validate_distinct(names: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for name in names {
        validate_name(name)?;
        if !seen.insert(name.as_str()) {
            return Err(Error::DuplicateName(name.clone()));
        }
    }
    Ok(())
}

/// A finite ordered alphabet of distinct symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Carrier {
    symbols: Vec<String>,
}

impl Carrier {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        validate_distinct(&symbols)?;
        Ok(Self { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // size >= 1 by construction
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> &str {
        &self.symbols[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == name)
    }

    /// The empty word over this carrier.
    pub fn epsilon(&self) -> Word {
        Word::epsilon(self.len())
    }

    /// Build a word from symbol names.
    pub fn word<S: AsRef<str>>(&self, names: &[S]) -> Result<Word> {
        let mut letters = Vec::with_capacity(names.len());
        for name in names {
            let idx = self
                .index_of(name.as_ref())
                .ok_or_else(|| Error::UnknownSymbol(name.as_ref().to_string()))?;
            letters.push(idx);
        }
        Word::from_letters(self.len(), letters)
    }

    /// Build a word from letter indices.
    pub fn word_from_indices(&self, letters: &[usize]) -> Result<Word> {
        Word::from_letters(self.len(), letters.to_vec())
    }

    /// Render a word with symbol names joined by commas; ε for the empty word.
    pub fn format_word(&self, word: &Word) -> String {
        if word.is_empty() {
            return EPSILON_NAME.to_string();
        }
        word.letters()
            .iter()
            .map(|&i| self.symbols[i].as_str())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// This carrier viewed as a plain value set (no ε).
    pub fn to_codomain(&self) -> Codomain {
        Codomain {
            values: self.symbols.clone(),
            has_epsilon: false,
        }
    }

    /// The codomain X ∪ {ε} of a variadic operation on this carrier.
    pub fn operation_codomain(&self) -> Codomain {
        Codomain {
            values: self.symbols.clone(),
            has_epsilon: true,
        }
    }
}

/// One output value of a tabulated function: ε or a named codomain element.
///
/// `Epsilon` sorts before every named value, matching the canonical element
/// order of a [`Codomain`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Epsilon,
    Val(usize),
}

impl Value {
    pub fn is_epsilon(&self) -> bool {
        matches!(self, Value::Epsilon)
    }

    /// The carrier letter this value denotes, when the codomain is X ∪ {ε}.
    pub fn as_letter(&self) -> Option<usize> {
        match self {
            Value::Epsilon => None,
            Value::Val(i) => Some(*i),
        }
    }
}

/// A finite ordered set of distinct value names, optionally containing ε.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Codomain {
    values: Vec<String>,
    has_epsilon: bool,
}

impl Codomain {
    pub fn new<I, S>(values: I, has_epsilon: bool) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let values: Vec<String> = values.into_iter().map(Into::into).collect();
        validate_distinct(&values)?;
        if values.is_empty() && !has_epsilon {
            return Err(Error::EmptyCarrier);
        }
        Ok(Self { values, has_epsilon })
    }

    /// Number of elements, counting ε when present.
    pub fn card(&self) -> usize {
        self.values.len() + usize::from(self.has_epsilon)
    }

    pub fn has_epsilon(&self) -> bool {
        self.has_epsilon
    }

    pub fn values(&self) -> &[String] {
        &self.values
    }

    /// Element at a canonical position; ε comes first when present.
    pub fn element(&self, index: usize) -> Value {
        if self.has_epsilon {
            if index == 0 {
                Value::Epsilon
            } else {
                Value::Val(index - 1)
            }
        } else {
            Value::Val(index)
        }
    }

    /// Canonical position of an element; inverse of [`Codomain::element`].
    pub fn position(&self, value: Value) -> usize {
        match (value, self.has_epsilon) {
            (Value::Epsilon, true) => 0,
            (Value::Epsilon, false) => panic!("codomain has no ε"),
            (Value::Val(i), true) => i + 1,
            (Value::Val(i), false) => i,
        }
    }

    pub fn contains(&self, value: Value) -> bool {
        match value {
            Value::Epsilon => self.has_epsilon,
            Value::Val(i) => i < self.values.len(),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Value> + '_ {
        (0..self.card()).map(|i| self.element(i))
    }

    /// Look a value up by name; the spelling `ε` resolves to ε when present.
    pub fn value_named(&self, name: &str) -> Result<Value> {
        if name == EPSILON_NAME {
            return if self.has_epsilon {
                Ok(Value::Epsilon)
            } else {
                Err(Error::MissingEpsilon)
            };
        }
        self.values
            .iter()
            .position(|v| v == name)
            .map(Value::Val)
            .ok_or_else(|| Error::UnknownValue(name.to_string()))
    }

    pub fn name_of(&self, value: Value) -> &str {
        match value {
            Value::Epsilon => EPSILON_NAME,
            Value::Val(i) => &self.values[i],
        }
    }

    /// True when this codomain is exactly `carrier ∪ {ε}`, with `Val(i)`
    /// denoting the carrier letter `i`.
    pub fn is_operation_on(&self, carrier: &Carrier) -> bool {
        self.has_epsilon && self.values == carrier.symbols()
    }
}
