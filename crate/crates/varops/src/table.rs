//! Total finite maps: unary, binary, and variadic-up-to-a-horizon.

use std::collections::BTreeSet;

use crate::carrier::{Carrier, Codomain, Value};
use crate::error::{Error, Result};
use crate::word::{Word, WordSpace};

/// Hard cap on materialized table size; keeps CLI inputs from exploding.
pub const MAX_TABLE_ENTRIES: usize = 2_000_000;

/// Smallest horizon at which binary parts exist.
pub const MIN_HORIZON: usize = 2;

/// A total map between two finite value sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnaryMap {
    domain: Codomain,
    codomain: Codomain,
    table: Vec<Value>,
}

impl UnaryMap {
    pub fn new(domain: Codomain, codomain: Codomain, table: Vec<Value>) -> Result<Self> {
        if table.len() != domain.card() {
            return Err(Error::TableNotTotal {
                got: table.len(),
                expected: domain.card(),
            });
        }
        for (i, &v) in table.iter().enumerate() {
            if !codomain.contains(v) {
                return Err(Error::ValueOutsideCodomain {
                    at: domain.name_of(domain.element(i)).to_string(),
                });
            }
        }
        Ok(Self {
            domain,
            codomain,
            table,
        })
    }

    pub fn from_fn(
        domain: Codomain,
        codomain: Codomain,
        f: impl Fn(Value) -> Value,
    ) -> Result<Self> {
        let table = domain.elements().map(f).collect();
        Self::new(domain, codomain, table)
    }

    /// Build from (element name, value name) pairs; every domain element
    /// must appear exactly once.
    pub fn from_pairs(
        domain: Codomain,
        codomain: Codomain,
        pairs: &[(&str, &str)],
    ) -> Result<Self> {
        let mut table = vec![None; domain.card()];
        for (from, to) in pairs {
            let pos = domain.position(domain.value_named(from)?);
            if table[pos].is_some() {
                return Err(Error::DuplicateName((*from).to_string()));
            }
            table[pos] = Some(codomain.value_named(to)?);
        }
        let table: Option<Vec<Value>> = table.into_iter().collect();
        match table {
            Some(t) => Self::new(domain, codomain, t),
            None => Err(Error::TableNotTotal {
                got: pairs.len(),
                expected: domain.card(),
            }),
        }
    }

    pub fn identity(set: &Codomain) -> Self {
        Self {
            domain: set.clone(),
            codomain: set.clone(),
            table: set.elements().collect(),
        }
    }

    pub fn domain(&self) -> &Codomain {
        &self.domain
    }

    pub fn codomain(&self) -> &Codomain {
        &self.codomain
    }

    /// Image of `v`, which must be a domain element.
    pub fn apply(&self, v: Value) -> Value {
        self.table[self.domain.position(v)]
    }

    /// Image of an element given by name in another value space. Values are
    /// matched by name, so maps with merely overlapping domains compose.
    pub fn apply_named(&self, name: &str) -> Result<Value> {
        Ok(self.apply(self.domain.value_named(name)?))
    }

    pub fn entries(&self) -> impl Iterator<Item = (Value, Value)> + '_ {
        self.domain.elements().zip(self.table.iter().copied())
    }

    pub fn range(&self) -> BTreeSet<Value> {
        self.table.iter().copied().collect()
    }

    /// Composition self ∘ inner; requires the value spaces to agree exactly.
    pub fn compose(&self, inner: &UnaryMap) -> Result<UnaryMap> {
        if inner.codomain != self.domain {
            return Err(Error::MapShapeMismatch {
                role: "composition",
                expected: "inner codomain equal to outer domain",
            });
        }
        UnaryMap::new(
            inner.domain.clone(),
            self.codomain.clone(),
            inner.table.iter().map(|&v| self.apply(v)).collect(),
        )
    }

    /// First pair of distinct elements of `subset` with equal images, if any.
    pub fn collision_on(&self, subset: &[Value]) -> Option<(Value, Value)> {
        for (i, &a) in subset.iter().enumerate() {
            for &b in &subset[i + 1..] {
                if self.apply(a) == self.apply(b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_one_to_one_on(&self, subset: &[Value]) -> bool {
        self.collision_on(subset).is_none()
    }

    /// Table as codomain positions, the key for canonical (lexicographic)
    /// ordering of maps over a fixed domain.
    pub fn lex_key(&self) -> Vec<usize> {
        self.table.iter().map(|&v| self.codomain.position(v)).collect()
    }
}

/// A total map X² → Y on a carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMap {
    carrier: Carrier,
    codomain: Codomain,
    table: Vec<Value>, // row-major: table[i * n + j] = F(xᵢ, xⱼ)
}

impl BinaryMap {
    pub fn new(carrier: Carrier, codomain: Codomain, table: Vec<Value>) -> Result<Self> {
        let n = carrier.len();
        if table.len() != n * n {
            return Err(Error::TableNotTotal {
                got: table.len(),
                expected: n * n,
            });
        }
        for (k, &v) in table.iter().enumerate() {
            if !codomain.contains(v) {
                return Err(Error::ValueOutsideCodomain {
                    at: format!("{},{}", carrier.symbol(k / n), carrier.symbol(k % n)),
                });
            }
        }
        Ok(Self {
            carrier,
            codomain,
            table,
        })
    }

    pub fn from_fn(
        carrier: Carrier,
        codomain: Codomain,
        f: impl Fn(usize, usize) -> Value,
    ) -> Result<Self> {
        let n = carrier.len();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(f(i, j));
            }
        }
        Self::new(carrier, codomain, table)
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn codomain(&self) -> &Codomain {
        &self.codomain
    }

    pub fn apply(&self, i: usize, j: usize) -> Value {
        self.table[i * self.carrier.len() + j]
    }

    pub fn range(&self) -> BTreeSet<Value> {
        self.table.iter().copied().collect()
    }

    /// True when every entry is a carrier letter (the map is X² → X).
    pub fn is_operation(&self) -> bool {
        self.codomain.values() == self.carrier.symbols()
            && self.table.iter().all(|v| !v.is_epsilon())
    }
}

/// A variadic function tabulated on every word of length ≤ the horizon.
///
/// The arity-k slice of the table is the k-ary part; the restriction to
/// lengths ≥ 1 plays the role of F♭.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabulatedVariadic {
    carrier: Carrier,
    codomain: Codomain,
    space: WordSpace,
    table: Vec<Value>,
}

impl TabulatedVariadic {
    pub fn new(
        carrier: Carrier,
        codomain: Codomain,
        horizon: usize,
        table: Vec<Value>,
    ) -> Result<Self> {
        let space = Self::space_for(&carrier, horizon)?;
        if table.len() != space.word_count() {
            return Err(Error::TableNotTotal {
                got: table.len(),
                expected: space.word_count(),
            });
        }
        for (rank, &v) in table.iter().enumerate() {
            if !codomain.contains(v) {
                return Err(Error::ValueOutsideCodomain {
                    at: carrier.format_word(&space.word_of_rank(rank)),
                });
            }
        }
        Ok(Self {
            carrier,
            codomain,
            space,
            table,
        })
    }

    pub fn from_fn(
        carrier: Carrier,
        codomain: Codomain,
        horizon: usize,
        f: impl Fn(&Word) -> Value,
    ) -> Result<Self> {
        let space = Self::space_for(&carrier, horizon)?;
        let table = (0..space.word_count())
            .map(|r| f(&space.word_of_rank(r)))
            .collect();
        Self::new(carrier, codomain, horizon, table)
    }

    fn space_for(carrier: &Carrier, horizon: usize) -> Result<WordSpace> {
        if horizon < MIN_HORIZON {
            return Err(Error::HorizonTooSmall {
                got: horizon,
                min: MIN_HORIZON,
            });
        }
        let n = carrier.len();
        let mut entries = 1usize;
        let mut pow = 1usize;
        for _ in 0..horizon {
            pow = pow.saturating_mul(n);
            entries = entries.saturating_add(pow);
            if entries > MAX_TABLE_ENTRIES {
                return Err(Error::TableTooLarge {
                    entries,
                    limit: MAX_TABLE_ENTRIES,
                });
            }
        }
        Ok(WordSpace::new(n, horizon))
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn codomain(&self) -> &Codomain {
        &self.codomain
    }

    pub fn horizon(&self) -> usize {
        self.space.max_len()
    }

    pub fn space(&self) -> &WordSpace {
        &self.space
    }

    /// Value at a word; errors beyond the horizon or over a different alphabet.
    pub fn value(&self, word: &Word) -> Result<Value> {
        if word.alphabet() != self.carrier.len() {
            return Err(Error::CarrierMismatch(
                word.alphabet(),
                self.carrier.len(),
            ));
        }
        if word.len() > self.horizon() {
            return Err(Error::BeyondHorizon {
                len: word.len(),
                horizon: self.horizon(),
            });
        }
        Ok(self.table[self.space.rank(word.letters())])
    }

    /// Value at a letter slice; callers must stay within the horizon.
    pub(crate) fn value_at(&self, letters: &[usize]) -> Value {
        self.table[self.space.rank(letters)]
    }

    /// Value at a word rank; callers must stay within the table.
    pub(crate) fn value_of_rank(&self, rank: usize) -> Value {
        self.table[rank]
    }

    pub fn epsilon_value(&self) -> Value {
        self.table[0]
    }

    /// The unary part F₁ as a map from the carrier into the codomain.
    pub fn unary_part(&self) -> UnaryMap {
        let n = self.carrier.len();
        let table = (0..n).map(|i| self.value_at(&[i])).collect();
        UnaryMap::new(self.carrier.to_codomain(), self.codomain.clone(), table)
            .expect("unary slice of a valid table is a valid map")
    }

    /// The binary part F₂.
    pub fn binary_part(&self) -> BinaryMap {
        BinaryMap::from_fn(self.carrier.clone(), self.codomain.clone(), |i, j| {
            self.value_at(&[i, j])
        })
        .expect("binary slice of a valid table is a valid map")
    }

    /// The values of the arity-n slice in canonical word order.
    pub fn arity_slice(&self, n: usize) -> &[Value] {
        let range = self.space.ranks_in(n, n);
        &self.table[range]
    }

    /// All values over words with length in [min_len, max_len].
    pub fn range_over(&self, min_len: usize, max_len: usize) -> BTreeSet<Value> {
        self.table[self.space.ranks_in(min_len, max_len)]
            .iter()
            .copied()
            .collect()
    }

    /// Copy of this table with one entry replaced.
    pub fn with_entry(&self, word: &Word, value: Value) -> Result<Self> {
        self.value(word)?; // validates word
        if !self.codomain.contains(value) {
            return Err(Error::ValueOutsideCodomain {
                at: self.carrier.format_word(word),
            });
        }
        let mut table = self.table.clone();
        table[self.space.rank(word.letters())] = value;
        Ok(Self {
            carrier: self.carrier.clone(),
            codomain: self.codomain.clone(),
            space: self.space.clone(),
            table,
        })
    }

    /// Words of length ≤ horizon in canonical order.
    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.space.word_count()).map(|r| self.space.word_of_rank(r))
    }

    pub fn entries(&self) -> impl Iterator<Item = (Word, Value)> + '_ {
        self.words().zip(self.table.iter().copied())
    }

    /// True when this is a variadic operation: values lie in X ∪ {ε}.
    pub fn is_operation(&self) -> bool {
        self.codomain.is_operation_on(&self.carrier)
    }
}
