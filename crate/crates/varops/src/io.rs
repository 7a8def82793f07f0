//! JSON file formats for tables, unary maps, and extension parts.
//!
//! Words are written as symbol names joined by "," with "" for ε; the ε
//! value is written as "ε". Unknown fields are rejected.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::carrier::{Carrier, Codomain, Value, EPSILON_NAME};
use crate::error::{Error, Result};
use crate::table::{BinaryMap, TabulatedVariadic, UnaryMap};
use crate::word::Word;

/// A value set: an ordered list of names plus an ε flag.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodomainSpec {
    pub values: Vec<String>,
    pub epsilon: bool,
}

impl CodomainSpec {
    pub fn to_codomain(&self) -> Result<Codomain> {
        Codomain::new(self.values.clone(), self.epsilon)
    }

    pub fn of(codomain: &Codomain) -> Self {
        Self {
            values: codomain.values().to_vec(),
            epsilon: codomain.has_epsilon(),
        }
    }
}

/// The operation-definition file: carrier, codomain, horizon, and a total
/// table from words to values.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub carrier: Vec<String>,
    pub codomain: CodomainSpec,
    pub horizon: usize,
    pub table: BTreeMap<String, String>,
}

/// Parse a word key: symbol names joined by ",", with "" for ε.
pub fn parse_word_key(carrier: &Carrier, key: &str) -> Result<Word> {
    if key.is_empty() {
        return Ok(carrier.epsilon());
    }
    let names: Vec<&str> = key.split(',').collect();
    carrier.word(&names)
}

/// Render a word as a table key.
pub fn word_key(carrier: &Carrier, word: &Word) -> String {
    if word.is_empty() {
        return String::new();
    }
    word.letters()
        .iter()
        .map(|&i| carrier.symbol(i))
        .collect::<Vec<_>>()
        .join(",")
}

impl TableFile {
    pub fn to_table(&self) -> Result<TabulatedVariadic> {
        let carrier = Carrier::new(self.carrier.clone())?;
        let codomain = self.codomain.to_codomain()?;
        let mut entries: BTreeMap<usize, Value> = BTreeMap::new();
        let space = crate::word::WordSpace::new(carrier.len(), self.horizon);
        for (key, value_name) in &self.table {
            let word = parse_word_key(&carrier, key)
                .map_err(|e| Error::Malformed(format!("table key `{key}`: {e}")))?;
            if word.len() > self.horizon {
                return Err(Error::Malformed(format!(
                    "table key `{key}` is longer than the horizon {}",
                    self.horizon
                )));
            }
            let value = codomain
                .value_named(value_name)
                .map_err(|e| Error::Malformed(format!("table value `{value_name}`: {e}")))?;
            if entries.insert(space.rank(word.letters()), value).is_some() {
                return Err(Error::Malformed(format!("duplicate table key `{key}`")));
            }
        }
        if entries.len() != space.word_count() {
            let missing = (0..space.word_count())
                .find(|r| !entries.contains_key(r))
                .map(|r| word_key(&carrier, &space.word_of_rank(r)))
                .unwrap_or_default();
            return Err(Error::Malformed(format!(
                "table is not total: {} of {} words defined (first missing: `{}`)",
                entries.len(),
                space.word_count(),
                missing
            )));
        }
        let table: Vec<Value> = entries.into_values().collect();
        TabulatedVariadic::new(carrier, codomain, self.horizon, table)
    }

    pub fn of(table: &TabulatedVariadic) -> Self {
        let carrier = table.carrier();
        let codomain = table.codomain();
        let mut map = BTreeMap::new();
        for (word, value) in table.entries() {
            map.insert(
                word_key(carrier, &word),
                codomain.name_of(value).to_string(),
            );
        }
        Self {
            carrier: carrier.symbols().to_vec(),
            codomain: CodomainSpec::of(codomain),
            horizon: table.horizon(),
            table: map,
        }
    }
}

/// A unary map file: domain, codomain, and a total element map. The ε
/// element, when present in a set, is keyed as "ε".
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnaryMapFile {
    pub domain: CodomainSpec,
    pub codomain: CodomainSpec,
    pub map: BTreeMap<String, String>,
}

impl UnaryMapFile {
    pub fn to_unary_map(&self) -> Result<UnaryMap> {
        let domain = self.domain.to_codomain()?;
        let codomain = self.codomain.to_codomain()?;
        let mut table = vec![None; domain.card()];
        for (from, to) in &self.map {
            let pos = domain.position(
                domain
                    .value_named(from)
                    .map_err(|e| Error::Malformed(format!("map key `{from}`: {e}")))?,
            );
            if table[pos].is_some() {
                return Err(Error::Malformed(format!("duplicate map key `{from}`")));
            }
            table[pos] = Some(
                codomain
                    .value_named(to)
                    .map_err(|e| Error::Malformed(format!("map value `{to}`: {e}")))?,
            );
        }
        let table: Option<Vec<Value>> = table.into_iter().collect();
        match table {
            Some(t) => UnaryMap::new(domain, codomain, t),
            None => Err(Error::Malformed(
                "map does not cover every domain element".to_string(),
            )),
        }
    }

    pub fn of(map: &UnaryMap) -> Self {
        let mut entries = BTreeMap::new();
        for (from, to) in map.entries() {
            entries.insert(
                map.domain().name_of(from).to_string(),
                map.codomain().name_of(to).to_string(),
            );
        }
        Self {
            domain: CodomainSpec::of(map.domain()),
            codomain: CodomainSpec::of(map.codomain()),
            map: entries,
        }
    }
}

/// Parts file for extension synthesis: unary and binary parts over a shared
/// carrier and codomain, plus the nullary value required in preassociative
/// mode.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartsFile {
    pub carrier: Vec<String>,
    pub codomain: CodomainSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f0: Option<String>,
    pub f1: BTreeMap<String, String>,
    pub f2: BTreeMap<String, String>,
}

/// The decoded contents of a [`PartsFile`].
pub struct ExtensionParts {
    pub carrier: Carrier,
    pub codomain: Codomain,
    pub f0: Option<Value>,
    pub f1: UnaryMap,
    pub f2: BinaryMap,
}

impl PartsFile {
    pub fn to_parts(&self) -> Result<ExtensionParts> {
        let carrier = Carrier::new(self.carrier.clone())?;
        let codomain = self.codomain.to_codomain()?;
        let f0 = self
            .f0
            .as_ref()
            .map(|name| codomain.value_named(name))
            .transpose()?;

        let mut f1_table = vec![None; carrier.len()];
        for (from, to) in &self.f1 {
            let idx = carrier
                .index_of(from)
                .ok_or_else(|| Error::Malformed(format!("f1 key `{from}` is not a symbol")))?;
            if f1_table[idx].is_some() {
                return Err(Error::Malformed(format!("duplicate f1 key `{from}`")));
            }
            f1_table[idx] = Some(codomain.value_named(to)?);
        }
        let f1_table: Option<Vec<Value>> = f1_table.into_iter().collect();
        let f1 = match f1_table {
            Some(t) => UnaryMap::new(carrier.to_codomain(), codomain.clone(), t)?,
            None => {
                return Err(Error::Malformed(
                    "f1 does not cover every symbol".to_string(),
                ))
            }
        };

        let n = carrier.len();
        let mut f2_table = vec![None; n * n];
        for (from, to) in &self.f2 {
            let word = parse_word_key(&carrier, from)?;
            if word.len() != 2 {
                return Err(Error::Malformed(format!(
                    "f2 key `{from}` is not a pair of symbols"
                )));
            }
            let (i, j) = (word.letters()[0], word.letters()[1]);
            if f2_table[i * n + j].is_some() {
                return Err(Error::Malformed(format!("duplicate f2 key `{from}`")));
            }
            f2_table[i * n + j] = Some(codomain.value_named(to)?);
        }
        let f2_table: Option<Vec<Value>> = f2_table.into_iter().collect();
        let f2 = match f2_table {
            Some(t) => BinaryMap::new(carrier.clone(), codomain.clone(), t)?,
            None => {
                return Err(Error::Malformed(
                    "f2 does not cover every pair of symbols".to_string(),
                ))
            }
        };

        Ok(ExtensionParts {
            carrier,
            codomain,
            f0,
            f1,
            f2,
        })
    }
}

/// Render a witness word list for reports: each word as a comma-joined key
/// string ("" for ε), values by name, real words as comma-joined floats.
pub fn witness_strings(
    carrier: &Carrier,
    witness: &crate::report::Witness,
) -> Vec<String> {
    match witness {
        crate::report::Witness::Words(words) => {
            words.iter().map(|w| word_key(carrier, w)).collect()
        }
        crate::report::Witness::Values(names) => names.clone(),
        crate::report::Witness::RealWords(words) => words
            .iter()
            .map(|w| {
                w.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect(),
    }
}

/// The reserved ε spelling, re-exported for front ends.
pub fn epsilon_name() -> &'static str {
    EPSILON_NAME
}
