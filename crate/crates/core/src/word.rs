//! Finite words over `Σ_k = {0, …, k-1}`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::{Error, Result};

/// A single letter. Letters are small integers rendered as decimal digits.
pub type Letter = u8;

/// Largest supported alphabet; every letter must render as one digit.
pub const MAX_ALPHABET: u8 = 10;

/// A finite word tagged with the size of its alphabet.
///
/// Mixing words over different alphabets is an error rather than a silent
/// widening, so `Word` equality also compares the alphabet size.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet_size: u8,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>, alphabet_size: u8) -> Result<Self> {
        check_alphabet(alphabet_size as usize)?;
        if let Some((position, &letter)) = letters.iter().enumerate().find(|(_, &a)| a >= alphabet_size) {
            return Err(Error::LetterOutOfAlphabet { position, letter, alphabet_size });
        }
        Ok(Word { alphabet_size, letters })
    }

    /// Caller guarantees every letter is `< alphabet_size`.
    pub(crate) fn from_trusted(letters: Vec<Letter>, alphabet_size: u8) -> Self {
        debug_assert!(letters.iter().all(|&a| a < alphabet_size));
        Word { alphabet_size, letters }
    }

    pub fn empty(alphabet_size: u8) -> Result<Self> {
        Word::new(Vec::new(), alphabet_size)
    }

    /// Parses the digit rendering of a word, e.g. `"0121"`.
    ///
    /// Errors name the position of the first non-digit or out-of-alphabet letter.
    pub fn parse(text: &str, alphabet_size: u8) -> Result<Self> {
        check_alphabet(alphabet_size as usize)?;
        let mut letters = Vec::with_capacity(text.len());
        for (position, c) in text.chars().enumerate() {
            let letter = c.to_digit(10).ok_or(Error::NotADigit { position, found: c })? as u8;
            if letter >= alphabet_size {
                return Err(Error::LetterOutOfAlphabet { position, letter, alphabet_size });
            }
            letters.push(letter);
        }
        Ok(Word { alphabet_size, letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn alphabet_size(&self) -> u8 {
        self.alphabet_size
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_binary(&self) -> bool {
        self.alphabet_size == 2
    }

    /// Letterwise `0 ↔ 1` exchange. Only defined over `Σ_2`.
    pub fn complement(&self) -> Result<Word> {
        if !self.is_binary() {
            return Err(Error::NotBinary { alphabet_size: self.alphabet_size });
        }
        Ok(Word::from_trusted(self.letters.iter().map(|&a| 1 - a).collect(), 2))
    }

    pub fn reverse(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word::from_trusted(letters, self.alphabet_size)
    }

    pub fn parikh(&self) -> ParikhVector {
        ParikhVector::of(&self.letters, self.alphabet_size)
    }

    /// The factor occupying `range`. Panics if the range is out of bounds.
    pub fn factor(&self, range: Range<usize>) -> Word {
        Word::from_trusted(self.letters[range].to_vec(), self.alphabet_size)
    }

    /// The prefix of length `min(n, |w|)`.
    pub fn prefix(&self, n: usize) -> Word {
        self.factor(0..n.min(self.len()))
    }

    /// The suffix starting at `start` (empty if `start >= |w|`).
    pub fn suffix_from(&self, start: usize) -> Word {
        self.factor(start.min(self.len())..self.len())
    }

    /// Concatenation; both words must share an alphabet.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.alphabet_size != other.alphabet_size {
            return Err(Error::AlphabetMismatch { expected: self.alphabet_size, found: other.alphabet_size });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word::from_trusted(letters, self.alphabet_size))
    }

    /// Position of the first occurrence of `pattern` as a factor.
    pub fn find(&self, pattern: &[Letter]) -> Option<usize> {
        find_factor(&self.letters, pattern)
    }

    /// All distinct factors of length `n`; empty when `n > |w|`.
    pub fn factors_of_length(&self, n: usize) -> BTreeSet<Word> {
        windows(&self.letters, n).map(|f| Word::from_trusted(f.to_vec(), self.alphabet_size)).collect()
    }

    /// Number of distinct factors of length `n` (1 for `n = 0`).
    pub fn factor_complexity(&self, n: usize) -> usize {
        windows(&self.letters, n).collect::<BTreeSet<_>>().len()
    }
}

fn check_alphabet(k: usize) -> Result<()> {
    if k == 0 || k > MAX_ALPHABET as usize {
        return Err(Error::InvalidAlphabetSize(k));
    }
    Ok(())
}

/// Sliding windows of width `n`, including the single empty window for `n = 0`.
fn windows(letters: &[Letter], n: usize) -> impl Iterator<Item = &[Letter]> {
    let count = if n > letters.len() { 0 } else { letters.len() - n + 1 };
    (0..count).map(move |i| &letters[i..i + n])
}

pub(crate) fn find_factor(haystack: &[Letter], pattern: &[Letter]) -> Option<usize> {
    if pattern.is_empty() {
        return Some(0);
    }
    haystack.windows(pattern.len()).position(|w| w == pattern)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.letters {
            fmt::Write::write_char(f, char::from(b'0' + a))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\", k={})", self.alphabet_size)
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.letters
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Per-letter occurrence counts `[|u|_0, |u|_1, …]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(transparent))]
pub struct ParikhVector {
    counts: Vec<usize>,
}

impl ParikhVector {
    pub fn new(counts: Vec<usize>) -> Self {
        ParikhVector { counts }
    }

    pub(crate) fn of(letters: &[Letter], alphabet_size: u8) -> Self {
        let mut counts = alloc::vec![0; alphabet_size as usize];
        for &a in letters {
            counts[a as usize] += 1;
        }
        ParikhVector { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `π(x) > π(y)`: componentwise `≥` with at least one strict coordinate.
    pub fn dominates(&self, other: &ParikhVector) -> Result<bool> {
        if self.counts.len() != other.counts.len() {
            return Err(Error::DimensionMismatch { left: self.counts.len(), right: other.counts.len() });
        }
        Ok(dominates_counts(&self.counts, &other.counts))
    }
}

pub(crate) fn dominates_counts(x: &[usize], y: &[usize]) -> bool {
    let mut strict = false;
    for (a, b) in x.iter().zip(y) {
        if a < b {
            return false;
        }
        strict |= a > b;
    }
    strict
}
