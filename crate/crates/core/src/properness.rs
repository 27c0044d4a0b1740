//! Proper and antiproper ternary words.
//!
//! A word is proper when it contains none of the seven forbidden factors
//! `00, 11, 22, 20, 10101, 2121, 10210210` and no factor `xyxyx` with
//! `π(x) > π(y)`. It is antiproper when its reversal is proper.
//!
//! Checking a finite prefix is one-sided: a clean prefix says nothing about
//! the letters after it.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::word::{dominates_counts, find_factor};
use crate::{Error, Letter, Result, Word};

/// Factors a proper word never contains.
pub const FORBIDDEN_FACTORS: [&[Letter]; 7] =
    [&[0, 0], &[1, 1], &[2, 2], &[2, 0], &[1, 0, 1, 0, 1], &[2, 1, 2, 1], &[1, 0, 2, 1, 0, 2, 1, 0]];

/// Default input-length guard for [`ProperChecker`].
pub const DEFAULT_LENGTH_LIMIT: usize = 20_000;

/// A factor `xyxyx` at `start` with `|x| = x_length`, `|y| = y_length` and `π(x) > π(y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct XyxyxOccurrence {
    pub start: usize,
    pub x_length: usize,
    pub y_length: usize,
}

impl XyxyxOccurrence {
    pub fn period(&self) -> usize {
        self.x_length + self.y_length
    }

    pub fn length(&self) -> usize {
        3 * self.x_length + 2 * self.y_length
    }
}

/// The earliest reason a word fails to be proper (or antiproper).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `factor` occurs at `position`.
    ForbiddenFactor {
        position: usize,
        factor: Word,
    },
    Xyxyx(XyxyxOccurrence),
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::ForbiddenFactor { .. } => "forbidden_factor",
            Violation::Xyxyx(_) => "xyxyx",
        }
    }

    pub fn position(&self) -> usize {
        match self {
            Violation::ForbiddenFactor { position, .. } => *position,
            Violation::Xyxyx(occ) => occ.start,
        }
    }

    pub fn detail(&self) -> String {
        match self {
            Violation::ForbiddenFactor { factor, .. } => format!("factor {factor}"),
            Violation::Xyxyx(occ) => {
                format!("x_length={} y_length={}", occ.x_length, occ.y_length)
            }
        }
    }

    fn shifted(self, offset: usize) -> Violation {
        match self {
            Violation::ForbiddenFactor { position, factor } => {
                Violation::ForbiddenFactor { position: position + offset, factor }
            }
            Violation::Xyxyx(occ) => Violation::Xyxyx(XyxyxOccurrence { start: occ.start + offset, ..occ }),
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Violation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Violation", 3)?;
        s.serialize_field("kind", self.kind())?;
        s.serialize_field("position", &self.position())?;
        s.serialize_field("detail", &self.detail())?;
        s.end()
    }
}

/// Earliest dominated `xyxyx` factor: smallest start, then smallest
/// `|x|`, then smallest `|y|`. `y` may be empty, so every cube is reported.
pub fn find_dominated_xyxyx(u: &Word) -> Option<XyxyxOccurrence> {
    find_dominated_xyxyx_in(u.letters(), u.alphabet_size())
}

pub(crate) fn find_dominated_xyxyx_in(letters: &[Letter], alphabet_size: u8) -> Option<XyxyxOccurrence> {
    let n = letters.len();
    let k = alphabet_size as usize;
    // prefix[i * k + c] = occurrences of c in letters[..i]
    let mut prefix = alloc::vec![0usize; (n + 1) * k];
    for (i, &a) in letters.iter().enumerate() {
        let (head, tail) = prefix.split_at_mut((i + 1) * k);
        tail[..k].copy_from_slice(&head[i * k..]);
        tail[a as usize] += 1;
    }
    let counts = |from: usize, to: usize, out: &mut [usize]| {
        for c in 0..k {
            out[c] = prefix[to * k + c] - prefix[from * k + c];
        }
    };
    let mut x_counts = alloc::vec![0usize; k];
    let mut y_counts = alloc::vec![0usize; k];

    let mut best: Option<XyxyxOccurrence> = None;
    // xyxyx = (xy)(xy)x has period p = |x| + |y| and length 2p + |x|, with |x| > p/2.
    for p in 1..=n / 2 {
        let min_x = p / 2 + 1;
        if 2 * p + min_x > n {
            break;
        }
        let mut lcp = 0usize;
        for i in (0..=n - p).rev() {
            if i + p < n {
                lcp = if letters[i] == letters[i + p] { lcp + 1 } else { 0 };
            }
            let run = p + lcp;
            if run < 2 * p + min_x {
                continue;
            }
            if best.is_some_and(|b| b.start < i) {
                continue;
            }
            let max_x = p.min(run - 2 * p);
            for x in min_x..=max_x {
                let occ = XyxyxOccurrence { start: i, x_length: x, y_length: p - x };
                if best.is_some_and(|b| b <= occ) {
                    break;
                }
                counts(i, i + x, &mut x_counts);
                counts(i + x, i + p, &mut y_counts);
                if dominates_counts(&x_counts, &y_counts) {
                    best = Some(occ);
                    break;
                }
            }
        }
    }
    best
}

fn first_forbidden(letters: &[Letter], alphabet_size: u8) -> Option<Violation> {
    FORBIDDEN_FACTORS
        .iter()
        .filter_map(|f| find_factor(letters, f).map(|pos| (pos, *f)))
        .min_by_key(|&(pos, _)| pos)
        .map(|(position, f)| Violation::ForbiddenFactor {
            position,
            factor: Word::from_trusted(f.to_vec(), alphabet_size.max(3)),
        })
}

fn proper_violation_in(letters: &[Letter], alphabet_size: u8) -> Option<Violation> {
    let forbidden = first_forbidden(letters, alphabet_size);
    let xyxyx = find_dominated_xyxyx_in(letters, alphabet_size).map(Violation::Xyxyx);
    match (forbidden, xyxyx) {
        (Some(a), Some(b)) => Some(if b.position() < a.position() { b } else { a }),
        (a, b) => a.or(b),
    }
}

/// Properness checks with an input-length guard.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProperChecker {
    pub length_limit: usize,
}

impl Default for ProperChecker {
    fn default() -> Self {
        ProperChecker { length_limit: DEFAULT_LENGTH_LIMIT }
    }
}

impl ProperChecker {
    pub fn new(length_limit: usize) -> Self {
        ProperChecker { length_limit }
    }

    fn guard(&self, u: &Word) -> Result<()> {
        if u.len() > self.length_limit {
            return Err(Error::InputTooLong { length: u.len(), limit: self.length_limit });
        }
        Ok(())
    }

    /// `Ok(None)` when `u` is proper, otherwise the earliest violation
    /// (forbidden factors win ties at equal positions).
    pub fn is_proper(&self, u: &Word) -> Result<Option<Violation>> {
        self.guard(u)?;
        Ok(proper_violation_in(u.letters(), u.alphabet_size()))
    }

    /// Properness of the reversal, with positions mapped back into `u`.
    /// Forbidden factors are reported as they read in `u`.
    pub fn is_antiproper(&self, u: &Word) -> Result<Option<Violation>> {
        self.guard(u)?;
        let n = u.len();
        let reversed = u.reverse();
        Ok(proper_violation_in(reversed.letters(), u.alphabet_size()).map(|v| match v {
            Violation::ForbiddenFactor { position, factor } => {
                Violation::ForbiddenFactor { position: n - position - factor.len(), factor: factor.reverse() }
            }
            Violation::Xyxyx(occ) => {
                Violation::Xyxyx(XyxyxOccurrence { start: n - occ.start - occ.length(), ..occ })
            }
        }))
    }
}

/// [`ProperChecker::is_proper`] with the default guard.
pub fn is_proper(u: &Word) -> Result<Option<Violation>> {
    ProperChecker::default().is_proper(u)
}

/// [`ProperChecker::is_antiproper`] with the default guard.
pub fn is_antiproper(u: &Word) -> Result<Option<Violation>> {
    ProperChecker::default().is_antiproper(u)
}

/// Outcome of a properness check that may discard a bounded prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PropernessReport {
    /// Length of the prefix that was examined.
    pub verified_length: usize,
    /// Leading letters discarded before the examined window.
    pub trimmed: usize,
    /// Remaining violation, in coordinates of the untrimmed word.
    pub violation: Option<Violation>,
}

impl PropernessReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Which of the two conditions to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Proper,
    Antiproper,
}

/// Checks `u[..length_limit]`, dropping leading letters past each violation
/// while the total trim stays within `max_trim`.
pub fn check_with_trim(
    u: &Word,
    orientation: Orientation,
    max_trim: usize,
    length_limit: usize,
) -> PropernessReport {
    let window = u.prefix(length_limit);
    let checker = ProperChecker::new(usize::MAX);
    let mut trimmed = 0usize;
    loop {
        let rest = window.suffix_from(trimmed);
        let found = match orientation {
            Orientation::Proper => checker.is_proper(&rest),
            Orientation::Antiproper => checker.is_antiproper(&rest),
        }
        .expect("no length limit");
        match found {
            None => return PropernessReport { verified_length: window.len(), trimmed, violation: None },
            Some(v) => {
                let next = trimmed + v.position() + 1;
                if next > max_trim {
                    return PropernessReport {
                        verified_length: window.len(),
                        trimmed,
                        violation: Some(v.shifted(trimmed)),
                    };
                }
                trimmed = next;
            }
        }
    }
}

/// Collects every `(start, x_length, y_length)` decomposition, for tests and oracles.
#[doc(hidden)]
pub fn all_dominated_xyxyx(u: &Word) -> Vec<XyxyxOccurrence> {
    let letters = u.letters();
    let n = letters.len();
    let mut out = Vec::new();
    for start in 0..n {
        for x in 1..=n {
            for y in 0..x {
                let len = 3 * x + 2 * y;
                if start + len > n {
                    break;
                }
                let s = &letters[start..start + len];
                let (xs, ys) = (&s[..x], &s[x..x + y]);
                let shape = s[x + y..2 * x + y] == *xs
                    && s[2 * x + y..2 * x + 2 * y] == *ys
                    && s[2 * x + 2 * y..] == *xs;
                let px = crate::ParikhVector::of(xs, u.alphabet_size());
                let py = crate::ParikhVector::of(ys, u.alphabet_size());
                if shape && px.dominates(&py).unwrap_or(false) {
                    out.push(XyxyxOccurrence { start, x_length: x, y_length: y });
                }
            }
        }
    }
    out
}
