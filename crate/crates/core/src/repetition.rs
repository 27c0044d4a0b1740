//! Periods, exponents and power detection.
//!
//! Every comparison against a threshold is done by cross-multiplication on
//! integers; no floating point is involved.
//!
//! The scans are organised around *runs*: for a start index `i` and a period
//! `p`, the longest factor starting at `i` with period `p` has length
//! `p + lcp(i, i + p)`. Iterating `i` downward for a fixed `p` keeps the
//! longest common extension as a running counter, so all `O(n²)` pairs are
//! visited in constant time each.

use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Letter, Result, Word};

/// An exact exponent `length / period`. The fraction is kept unreduced so
/// that the numerator is the length of the word it describes.
#[derive(Clone, Copy, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Exponent {
    pub numerator: usize,
    pub denominator: usize,
}

impl Exponent {
    pub fn new(numerator: usize, denominator: usize) -> Self {
        assert!(denominator >= 1, "exponent denominator must be positive");
        Exponent { numerator, denominator }
    }

    /// Lossy conversion for display only.
    pub fn to_f64(self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    /// `self > a / b`.
    pub fn exceeds(self, a: usize, b: usize) -> bool {
        (self.numerator as u128) * (b as u128) > (a as u128) * (self.denominator as u128)
    }
}

impl PartialEq for Exponent {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Exponent {}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numerator as u128 * other.denominator as u128;
        let rhs = other.numerator as u128 * self.denominator as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// A power threshold `numerator / denominator`.
///
/// With `strict` set, words must avoid `t⁺`-powers (exponent `> t` is a
/// violation, exponent exactly `t` is allowed); otherwise `t`-powers
/// (exponent `≥ t` is a violation).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Threshold {
    pub numerator: usize,
    pub denominator: usize,
    pub strict: bool,
}

impl Threshold {
    /// `(5/2)⁺`.
    pub const FIVE_HALVES_PLUS: Threshold = Threshold { numerator: 5, denominator: 2, strict: true };

    pub fn new(numerator: usize, denominator: usize, strict: bool) -> Result<Self> {
        if denominator == 0 || numerator < denominator {
            return Err(Error::InvalidThreshold { numerator, denominator });
        }
        Ok(Threshold { numerator, denominator, strict })
    }

    /// Whether a factor of length `length` and period `period` violates the threshold.
    pub fn is_violated_by(&self, length: usize, period: usize) -> bool {
        let lhs = length as u128 * self.denominator as u128;
        let rhs = self.numerator as u128 * period as u128;
        if self.strict {
            lhs > rhs
        } else {
            lhs >= rhs
        }
    }

    /// Least length at which a factor with period `period` violates the threshold.
    fn violating_length(&self, period: usize) -> usize {
        let np = self.numerator * period;
        if self.strict {
            np / self.denominator + 1
        } else {
            np.div_ceil(self.denominator)
        }
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)?;
        if self.strict {
            f.write_str("+")?;
        }
        Ok(())
    }
}

/// The factor `[start, start + length)`, whose smallest period is `period`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RepetitionWitness {
    pub start: usize,
    pub length: usize,
    pub period: usize,
}

impl RepetitionWitness {
    pub fn exponent(&self) -> Exponent {
        Exponent::new(self.length, self.period)
    }
}

/// Least `p ≥ 1` with `w[i] = w[i + p]` for all valid `i`.
pub fn smallest_period(w: &Word) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(smallest_period_of(w.letters()))
}

pub(crate) fn smallest_period_of(letters: &[Letter]) -> usize {
    let n = letters.len();
    (1..=n).find(|&p| letters[p..].iter().zip(letters).all(|(a, b)| a == b)).unwrap_or(n.max(1))
}

pub fn exponent(w: &Word) -> Result<Exponent> {
    Ok(Exponent::new(w.len(), smallest_period(w)?))
}

/// Checks every factor of `w` against `threshold`.
///
/// Returns `Ok(())` when no factor violates it; otherwise the violating
/// factor with the smallest start, and among those the shortest.
pub fn is_power_free(w: &Word, threshold: &Threshold) -> core::result::Result<(), RepetitionWitness> {
    match first_violation(w.letters(), threshold) {
        None => Ok(()),
        Some(witness) => Err(witness),
    }
}

pub(crate) fn first_violation(letters: &[Letter], threshold: &Threshold) -> Option<RepetitionWitness> {
    let n = letters.len();
    // (start, length) of the best candidate so far.
    let mut best: Option<(usize, usize)> = None;
    for p in 1..=n {
        let need = threshold.violating_length(p);
        if need > n {
            // `need` is nondecreasing in p.
            break;
        }
        let mut lcp = 0usize;
        for i in (0..=n - p).rev() {
            if i + p < n {
                lcp = if letters[i] == letters[i + p] { lcp + 1 } else { 0 };
            }
            if p + lcp >= need && best.is_none_or(|b| (i, need) < b) {
                best = Some((i, need));
            }
        }
    }
    best.map(|(start, length)| RepetitionWitness {
        start,
        length,
        period: smallest_period_of(&letters[start..start + length]),
    })
}

/// Whether some suffix of `w` is a 5/2⁺ power.
///
/// For each period `p` with `5p < 2|w|` only the shortest candidate suffix,
/// of length `2p + ⌈(p + 1)/2⌉`, is compared; any longer 5/2⁺ suffix with
/// period `p` ends with it. This is the incremental check used by the
/// backtracking search.
pub fn suffix_is_52plus_power(w: &[Letter]) -> bool {
    let n = w.len();
    let mut p = 1;
    while 5 * p < 2 * n {
        let len = 2 * p + (p + 2) / 2;
        let tail = &w[n - len..];
        if tail[p..] == tail[..len - p] {
            return true;
        }
        p += 1;
    }
    false
}

/// The largest exponent over all nonempty factors, with a witness.
///
/// Ties are broken by smallest start, then shortest length.
pub fn max_factor_exponent(w: &Word) -> Result<(Exponent, RepetitionWitness)> {
    let letters = w.letters();
    let n = letters.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let mut best = RepetitionWitness { start: 0, length: 1, period: 1 };
    for p in 1..=n {
        // A factor with period p can reach exponent at most n/p.
        if Exponent::new(n, p) < best.exponent() {
            break;
        }
        let mut lcp = 0usize;
        for i in (0..=n - p).rev() {
            if i + p < n {
                lcp = if letters[i] == letters[i + p] { lcp + 1 } else { 0 };
            }
            let candidate = RepetitionWitness { start: i, length: p + lcp, period: p };
            match candidate.exponent().cmp(&best.exponent()) {
                Ordering::Greater => best = candidate,
                Ordering::Equal if (i, p + lcp) < (best.start, best.length) => best = candidate,
                _ => {}
            }
        }
    }
    // A maximal run attaining the maximum cannot have a smaller period, or
    // its exponent would be larger still.
    debug_assert_eq!(smallest_period_of(&letters[best.start..best.start + best.length]), best.period);
    Ok((best.exponent(), best))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 3).unwrap()
    }

    fn b(s: &str) -> Word {
        Word::parse(s, 2).unwrap()
    }

    #[test]
    fn periods() {
        assert_eq!(smallest_period(&b("0101")), Ok(2));
        assert_eq!(smallest_period(&b("011")), Ok(3));
        assert_eq!(smallest_period(&b("10011001100")), Ok(4));
        assert_eq!(smallest_period(&b("")), Err(Error::EmptyWord));
    }

    #[test]
    fn exponents_from_worked_factors() {
        assert_eq!(exponent(&b("000")).unwrap(), Exponent::new(3, 1));
        let e = exponent(&b("01001001")).unwrap();
        assert_eq!((e.numerator, e.denominator), (8, 3));
        let e = exponent(&b("10011001100")).unwrap();
        assert_eq!((e.numerator, e.denominator), (11, 4));
        assert!(e.exceeds(5, 2));
        assert_eq!(exponent(&b("")), Err(Error::EmptyWord));
    }

    #[test]
    fn exponent_ordering_is_exact() {
        assert_eq!(Exponent::new(5, 2), Exponent::new(10, 4));
        assert!(Exponent::new(11, 4) > Exponent::new(5, 2));
        assert!(!Exponent::new(5, 2).exceeds(5, 2));
    }

    #[test]
    fn power_free_examples() {
        let t = Threshold::FIVE_HALVES_PLUS;
        assert_eq!(is_power_free(&b("0110"), &t), Ok(()));
        assert_eq!(
            is_power_free(&b("10011001100"), &t),
            Err(RepetitionWitness { start: 0, length: 11, period: 4 })
        );
        // exponent exactly 5/2 is permitted under the strict threshold
        assert_eq!(is_power_free(&b("01010"), &t), Ok(()));
        let non_strict = Threshold::new(5, 2, false).unwrap();
        assert_eq!(
            is_power_free(&b("01010"), &non_strict),
            Err(RepetitionWitness { start: 0, length: 5, period: 2 })
        );
        assert_eq!(is_power_free(&b("000"), &t), Err(RepetitionWitness { start: 0, length: 3, period: 1 }));
        assert_eq!(is_power_free(&b(""), &t), Ok(()));
    }

    #[test]
    fn threshold_validation() {
        assert!(Threshold::new(1, 2, true).is_err());
        assert!(Threshold::new(3, 0, true).is_err());
        assert!(Threshold::new(2, 1, true).is_ok());
    }

    #[test]
    fn suffix_check_examples() {
        assert!(suffix_is_52plus_power(b("10011001100").letters()));
        assert!(!suffix_is_52plus_power(b("01010").letters()));
        assert!(!suffix_is_52plus_power(&[]));
        assert!(suffix_is_52plus_power(b("000").letters()));
        assert!(!suffix_is_52plus_power(b("0001").letters()));
    }

    #[test]
    fn max_exponent_examples() {
        let (e, wit) = max_factor_exponent(&b("000")).unwrap();
        assert_eq!(e, Exponent::new(3, 1));
        assert_eq!(wit, RepetitionWitness { start: 0, length: 3, period: 1 });
        let (e, wit) = max_factor_exponent(&b("0110")).unwrap();
        assert_eq!(e, Exponent::new(2, 1));
        assert_eq!(wit, RepetitionWitness { start: 1, length: 2, period: 1 });
        let (e, wit) = max_factor_exponent(&w("012")).unwrap();
        assert_eq!(e, Exponent::new(1, 1));
        assert_eq!(wit, RepetitionWitness { start: 0, length: 1, period: 1 });
        assert_eq!(max_factor_exponent(&b("")), Err(Error::EmptyWord));
    }
}
