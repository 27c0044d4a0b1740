//! Lexicographic backtracking for binary words that avoid 5/2⁺ powers and a
//! set of forbidden factors.
//!
//! The search extends with `0` before `1` and only ever tests suffixes of
//! the current word: the parent of every visited node already satisfies the
//! predicate, so a new violation must end at the last letter.

use alloc::vec::Vec;

use crate::repetition::suffix_is_52plus_power;
use crate::{Error, Letter, Result, Word};

/// Target length used by every row of the reference table.
pub const DEFAULT_TARGET: usize = 200;

/// Result of [`longest_avoiding`].
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SearchOutcome {
    pub max_length: usize,
    /// Lexicographically least good word of length `max_length`.
    pub witness: Word,
    pub reached_target: bool,
    /// Number of candidate words tested.
    pub nodes_explored: u64,
}

fn ends_with_forbidden(w: &[Letter], forbidden: &[Word]) -> bool {
    forbidden.iter().any(|f| w.ends_with(f.letters()))
}

/// Incremental predicate: no suffix of `w` is a 5/2⁺ power or a forbidden factor.
pub fn is_good_extension(w: &[Letter], forbidden: &[Word]) -> bool {
    !ends_with_forbidden(w, forbidden) && !suffix_is_52plus_power(w)
}

/// Depth-first search for the lexicographically least binary word of length
/// `target` with no 5/2⁺-power factor and no factor in `forbidden`.
///
/// When no such word exists the search exhausts the tree and reports the
/// longest good word instead.
pub fn longest_avoiding(forbidden: &[Word], target: usize) -> Result<SearchOutcome> {
    if forbidden.iter().any(Word::is_empty) {
        return Err(Error::EmptyForbiddenFactor);
    }
    let mut w: Vec<Letter> = Vec::with_capacity(target + 1);
    let mut best: Vec<Letter> = Vec::new();
    let mut nodes = 0u64;
    loop {
        nodes += 1;
        if is_good_extension(&w, forbidden) {
            if w.len() > best.len() {
                best.clone_from(&w);
            }
            if w.len() == target {
                return Ok(outcome(best, true, nodes));
            }
            w.push(0);
        } else {
            while w.last() == Some(&1) {
                w.pop();
            }
            match w.last_mut() {
                Some(last) => *last = 1,
                None => return Ok(outcome(best, false, nodes)),
            }
        }
    }
}

fn outcome(best: Vec<Letter>, reached_target: bool, nodes_explored: u64) -> SearchOutcome {
    SearchOutcome {
        max_length: best.len(),
        witness: Word::from_trusted(best, 2),
        reached_target,
        nodes_explored,
    }
}

/// One backtrack computation with its published maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TableRow {
    /// Which forcing argument the row supports.
    pub group: &'static str,
    pub forbidden: Vec<Word>,
    pub expected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RowResult {
    pub row: TableRow,
    pub outcome: SearchOutcome,
}

impl RowResult {
    pub fn matches(&self) -> bool {
        self.outcome.max_length == self.row.expected && !self.outcome.reached_target
    }
}

const LENGTH_FOUR_PAIRS: [&str; 4] = ["0010", "0100", "1011", "1101"];
const WITH_0011: [(&str, usize); 7] =
    [("0010", 15), ("0100", 31), ("0101", 12), ("1010", 18), ("1011", 15), ("1101", 31), ("1100", 30)];
const LENGTH_EIGHT: [(&str, usize); 17] = [
    ("00100110", 24),
    ("01001100", 50),
    ("10011001", 33),
    ("00110010", 50),
    ("01100100", 24),
    ("11001001", 24),
    ("10010011", 24),
    ("00110011", 52),
    ("01100110", 33),
    ("11001101", 50),
    ("10011011", 24),
    ("00110110", 24),
    ("01101100", 24),
    ("11011001", 24),
    ("10110010", 88),
    ("10110011", 50),
    ("11001100", 52),
];

fn words(list: &[&str]) -> Vec<Word> {
    list.iter().map(|s| Word::parse(s, 2).expect("table words are binary")).collect()
}

/// The 32 reference computations, in canonical order.
pub fn paper_table() -> Vec<TableRow> {
    let mut rows = Vec::with_capacity(32);
    rows.push(TableRow { group: "0110 is forced", forbidden: words(&["0110"]), expected: 14 });
    let pair_maxima = [44, 28, 13, 13, 28, 44];
    let mut k = 0;
    for (i, a) in LENGTH_FOUR_PAIRS.iter().enumerate() {
        for b in &LENGTH_FOUR_PAIRS[i + 1..] {
            rows.push(TableRow {
                group: "three of C are forced",
                forbidden: words(&[a, b]),
                expected: pair_maxima[k],
            });
            k += 1;
        }
    }
    for (a, expected) in WITH_0011 {
        rows.push(TableRow { group: "0011 is forced", forbidden: words(&["0011", a]), expected });
    }
    for (d, expected) in LENGTH_EIGHT {
        rows.push(TableRow {
            group: "0101 or 1010 is forced",
            forbidden: words(&["0101", "1010", d]),
            expected,
        });
    }
    rows.push(TableRow { group: "length-4 factor set", forbidden: words(&["1011", "1010"]), expected: 20 });
    rows
}

pub fn run_row(row: &TableRow, target: usize) -> RowResult {
    let outcome = longest_avoiding(&row.forbidden, target).expect("table words are nonempty");
    RowResult { row: row.clone(), outcome }
}

/// Runs every row of [`paper_table`] sequentially at the default target.
pub fn run_paper_table() -> Vec<RowResult> {
    paper_table().iter().map(|row| run_row(row, DEFAULT_TARGET)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repetition::{is_power_free, Threshold};

    fn ws(list: &[&str]) -> Vec<Word> {
        words(list)
    }

    #[test]
    fn single_forbidden_0110() {
        let out = longest_avoiding(&ws(&["0110"]), 200).unwrap();
        assert_eq!(out.max_length, 14);
        assert!(!out.reached_target);
        assert_eq!(out.witness.len(), 14);
        assert_eq!(is_power_free(&out.witness, &Threshold::FIVE_HALVES_PLUS), Ok(()));
        assert!(out.witness.find(&[0, 1, 1, 0]).is_none());
    }

    #[test]
    fn reaches_target_without_constraints() {
        let out = longest_avoiding(&[], 30).unwrap();
        assert!(out.reached_target);
        assert_eq!(out.max_length, 30);
        assert_eq!(is_power_free(&out.witness, &Threshold::FIVE_HALVES_PLUS), Ok(()));
        let zero = longest_avoiding(&[], 0).unwrap();
        assert!(zero.reached_target);
        assert_eq!(zero.max_length, 0);
    }

    #[test]
    fn rejects_empty_forbidden_word() {
        let empty = Word::empty(2).unwrap();
        assert_eq!(longest_avoiding(&[empty], 10), Err(Error::EmptyForbiddenFactor));
    }

    #[test]
    fn table_shape() {
        let rows = paper_table();
        assert_eq!(rows.len(), 32);
        assert_eq!(rows[1].forbidden, ws(&["0010", "0100"]));
        assert_eq!(rows[6].forbidden, ws(&["1011", "1101"]));
        assert_eq!(rows[9].forbidden, ws(&["0011", "0101"]));
        assert_eq!(rows[9].expected, 12);
        assert_eq!(rows[21].forbidden, ws(&["0101", "1010", "00110011"]));
        assert_eq!(rows[21].expected, 52);
        assert_eq!(rows[31].forbidden, ws(&["1011", "1010"]));
        assert_eq!(rows[31].expected, 20);
    }

    #[test]
    fn deterministic() {
        let a = longest_avoiding(&ws(&["1011", "1010"]), 200).unwrap();
        let b = longest_avoiding(&ws(&["1011", "1010"]), 200).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.max_length, 20);
    }
}
