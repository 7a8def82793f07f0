//! Words over a finite alphabet and the canonical length-then-lexicographic
//! enumeration used everywhere a table, report, or witness is ordered.

use std::cmp::Ordering;

use crate::carrier::Carrier;
use crate::error::{Error, Result};

/// A finite string of carrier letters; length 0 encodes ε.
///
/// Words are tagged with their alphabet size so that concatenation across
/// carriers of different sizes is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: usize,
    letters: Vec<usize>,
}

impl Word {
    /// The empty word ε.
    pub fn epsilon(alphabet: usize) -> Self {
        Self {
            alphabet,
            letters: Vec::new(),
        }
    }

    pub fn from_letters(alphabet: usize, letters: Vec<usize>) -> Result<Self> {
        for &l in &letters {
            if l >= alphabet {
                return Err(Error::LetterOutOfBounds {
                    index: l,
                    alphabet,
                });
            }
        }
        Ok(Self { alphabet, letters })
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation; ε is the two-sided identity.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.alphabet != other.alphabet {
            return Err(Error::CarrierMismatch(self.alphabet, other.alphabet));
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            alphabet: self.alphabet,
            letters,
        })
    }

    /// The power xⁿ = x⋯x.
    pub fn repeat(&self, n: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        Word {
            alphabet: self.alphabet,
            letters,
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    /// Length first, then lexicographic by letter index.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.alphabet.cmp(&other.alphabet))
    }
}

/// Ranking scheme for all words of length ≤ `max_len` over an alphabet of
/// size `n`, in canonical order: rank 0 is ε, then the n letters, then the
/// n² two-letter words in lexicographic order, and so on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSpace {
    alphabet: usize,
    max_len: usize,
    /// offsets[k] = number of words of length < k.
    offsets: Vec<usize>,
}

impl WordSpace {
    pub fn new(alphabet: usize, max_len: usize) -> Self {
        assert!(alphabet >= 1, "alphabet must be nonempty");
        let mut offsets = Vec::with_capacity(max_len + 2);
        let mut total = 0usize;
        let mut pow = 1usize;
        offsets.push(0);
        for _ in 0..=max_len {
            total += pow;
            offsets.push(total);
            pow *= alphabet;
        }
        Self {
            alphabet,
            max_len,
            offsets,
        }
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Total number of words of length ≤ max_len.
    pub fn word_count(&self) -> usize {
        self.offsets[self.max_len + 1]
    }

    /// Number of words of length < len.
    pub fn offset(&self, len: usize) -> usize {
        self.offsets[len]
    }

    pub fn len_of_rank(&self, rank: usize) -> usize {
        debug_assert!(rank < self.word_count());
        // offsets is strictly increasing, so this finds the unique slot.
        self.offsets.partition_point(|&o| o <= rank) - 1
    }

    pub fn rank(&self, letters: &[usize]) -> usize {
        debug_assert!(letters.len() <= self.max_len);
        let mut r = 0usize;
        for &l in letters {
            debug_assert!(l < self.alphabet);
            r = r * self.alphabet + l;
        }
        self.offsets[letters.len()] + r
    }

    pub fn unrank(&self, rank: usize) -> Vec<usize> {
        let len = self.len_of_rank(rank);
        let mut r = rank - self.offsets[len];
        let mut letters = vec![0usize; len];
        for slot in letters.iter_mut().rev() {
            *slot = r % self.alphabet;
            r /= self.alphabet;
        }
        letters
    }

    /// All words of length in [min_len, max_len], canonical order, as ranks.
    pub fn ranks_in(&self, min_len: usize, max_len: usize) -> std::ops::Range<usize> {
        debug_assert!(max_len <= self.max_len);
        self.offsets[min_len]..self.offsets[max_len + 1]
    }

    pub fn word_of_rank(&self, rank: usize) -> Word {
        Word {
            alphabet: self.alphabet,
            letters: self.unrank(rank),
        }
    }
}

/// Every word over `carrier` with length in [min_len, max_len], yielded
/// exactly once in canonical (length-then-lexicographic) order.
pub fn enumerate_words(
    carrier: &Carrier,
    min_len: usize,
    max_len: usize,
) -> Result<impl Iterator<Item = Word>> {
    if min_len > max_len {
        return Err(Error::EmptyWordRange {
            min: min_len,
            max: max_len,
        });
    }
    let space = WordSpace::new(carrier.len(), max_len);
    let range = space.ranks_in(min_len, max_len);
    Ok(range.map(move |r| space.word_of_rank(r)))
}
