//! Classification of binary words by their length-4 factors and iterated
//! inverse-morphism decomposition.
//!
//! A word whose length-4 factor set is `F` is decoded once under `g` and
//! then repeatedly under `f`; the reversed cases use `h` instead, and the
//! complemented cases are complemented first. Everything operates on finite
//! prefixes, so decoding may drop a few leading letters (to reach a block
//! boundary) and truncate an incomplete trailing block. Properness of the
//! decoded levels is checked on the prefix only.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::morphism::NamedMorphism;
use crate::properness::{check_with_trim, Orientation, PropernessReport, DEFAULT_LENGTH_LIMIT};
use crate::{Error, Letter, Morphism, Result, Word};

/// The four length-4 factor sets of (5/2)⁺-power-free Rote words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    /// `F = {0110, 1001, 0011, 1100, 0010, 0100, 1101, 1010}`
    F,
    /// complement of `F`
    FBar,
    /// reversal of `F`
    FRev,
    /// complement of the reversal of `F`
    FBarRev,
}

impl CaseTag {
    pub const ALL: [CaseTag; 4] = [CaseTag::F, CaseTag::FBar, CaseTag::FRev, CaseTag::FBarRev];

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::F => "F",
            CaseTag::FBar => "Fbar",
            CaseTag::FRev => "Frev",
            CaseTag::FBarRev => "FbarRev",
        }
    }

    pub fn is_complemented(self) -> bool {
        matches!(self, CaseTag::FBar | CaseTag::FBarRev)
    }

    pub fn is_reversed(self) -> bool {
        matches!(self, CaseTag::FRev | CaseTag::FBarRev)
    }

    /// Tag of the complemented word.
    pub fn complement(self) -> CaseTag {
        CaseTag::from_flags(!self.is_complemented(), self.is_reversed())
    }

    /// Tag of the reversed word.
    pub fn reverse(self) -> CaseTag {
        CaseTag::from_flags(self.is_complemented(), !self.is_reversed())
    }

    fn from_flags(complemented: bool, reversed: bool) -> CaseTag {
        match (complemented, reversed) {
            (false, false) => CaseTag::F,
            (true, false) => CaseTag::FBar,
            (false, true) => CaseTag::FRev,
            (true, true) => CaseTag::FBarRev,
        }
    }

    /// The eight length-4 factors of this case.
    pub fn factor_set(self) -> BTreeSet<Word> {
        BASE_SET
            .iter()
            .map(|s| {
                let mut w = Word::parse(s, 2).expect("binary literal");
                if self.is_reversed() {
                    w = w.reverse();
                }
                if self.is_complemented() {
                    w = w.complement().expect("binary");
                }
                w
            })
            .collect()
    }

    /// Inner morphism of the decomposition chain.
    pub fn inner_morphism(self) -> NamedMorphism {
        if self.is_reversed() {
            NamedMorphism::H
        } else {
            NamedMorphism::F
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CaseTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownCase(s.into()))
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for CaseTag {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

const BASE_SET: [&str; 8] = ["0110", "1001", "0011", "1100", "0010", "0100", "1101", "1010"];

/// Outcome of [`classify_by_length4`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorClass {
    /// The length-4 factor set equals the set of this case.
    Case(CaseTag),
    /// A proper subset of the listed cases' sets.
    Ambiguous(Vec<CaseTag>),
    /// Factors that fit no case; either outside all four sets or too many.
    Inconsistent(Vec<Word>),
}

impl FactorClass {
    pub fn tag_name(&self) -> &'static str {
        match self {
            FactorClass::Case(CaseTag::F) => "CaseF",
            FactorClass::Case(CaseTag::FBar) => "CaseFBar",
            FactorClass::Case(CaseTag::FRev) => "CaseFRev",
            FactorClass::Case(CaseTag::FBarRev) => "CaseFBarRev",
            FactorClass::Ambiguous(_) => "Ambiguous",
            FactorClass::Inconsistent(_) => "Inconsistent",
        }
    }

    /// The case to decode with: the exact case, or the sole compatible one.
    pub fn resolved(&self) -> Option<CaseTag> {
        match self {
            FactorClass::Case(tag) => Some(*tag),
            FactorClass::Ambiguous(tags) if tags.len() == 1 => Some(tags[0]),
            _ => None,
        }
    }
}

impl fmt::Display for FactorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag_name())?;
        match self {
            FactorClass::Case(_) => Ok(()),
            FactorClass::Ambiguous(tags) => {
                f.write_str("(")?;
                for (i, t) in tags.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{t}")?;
                }
                f.write_str(")")
            }
            FactorClass::Inconsistent(words) => {
                f.write_str("(")?;
                for (i, w) in words.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{w}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for FactorClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("FactorClass", 2)?;
        s.serialize_field("tag", self.tag_name())?;
        match self {
            FactorClass::Case(_) => s.skip_field("detail")?,
            FactorClass::Ambiguous(tags) => s.serialize_field("candidates", tags)?,
            FactorClass::Inconsistent(words) => s.serialize_field("offenders", words)?,
        }
        s.end()
    }
}

/// Classifies a binary word of length at least 4 by its set of length-4 factors.
pub fn classify_by_length4(w: &Word) -> Result<FactorClass> {
    if !w.is_binary() {
        return Err(Error::NotBinary { alphabet_size: w.alphabet_size() });
    }
    if w.len() < 4 {
        return Err(Error::TooShort { length: w.len(), required: 4 });
    }
    let observed = w.factors_of_length(4);
    let sets: Vec<(CaseTag, BTreeSet<Word>)> =
        CaseTag::ALL.into_iter().map(|t| (t, t.factor_set())).collect();

    let outside: Vec<Word> =
        observed.iter().filter(|f| sets.iter().all(|(_, s)| !s.contains(*f))).cloned().collect();
    if !outside.is_empty() {
        return Ok(FactorClass::Inconsistent(outside));
    }
    if let Some((tag, _)) = sets.iter().find(|(_, s)| *s == observed) {
        return Ok(FactorClass::Case(*tag));
    }
    let compatible: Vec<CaseTag> =
        sets.iter().filter(|(_, s)| observed.is_subset(s)).map(|(t, _)| *t).collect();
    if !compatible.is_empty() {
        return Ok(FactorClass::Ambiguous(compatible));
    }
    // Every factor lies in some case but no single case holds them all:
    // report what falls outside the best-fitting case.
    let (_, best) = sets
        .iter()
        .max_by_key(|(t, s)| (s.intersection(&observed).count(), core::cmp::Reverse(*t)))
        .expect("four cases");
    Ok(FactorClass::Inconsistent(observed.difference(best).cloned().collect()))
}

/// A decoded preimage with the margins discarded around it.
///
/// `input = input[..dropped_prefix] · encode(preimage) · input[len - truncated_suffix..]`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DecodeResult {
    pub preimage: Word,
    pub dropped_prefix: usize,
    pub truncated_suffix: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeErrorKind {
    /// The input is over the wrong alphabet.
    Alphabet(Error),
    /// Letters before the first block cannot end an image.
    BadLeadingSegment(Word),
    /// A delimited block that is not an image.
    InvalidBlock(Word),
    /// Letters after the last block cannot begin an image.
    BadTrailingSegment(Word),
}

/// Why the input is not (a factor of) an image of the morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeError {
    pub morphism: NamedMorphism,
    pub position: usize,
    pub kind: DecodeErrorKind,
}

impl fmt::Display for DecodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-decoding failed at position {}: ", self.morphism, self.position)?;
        match &self.kind {
            DecodeErrorKind::Alphabet(e) => write!(f, "{e}"),
            DecodeErrorKind::BadLeadingSegment(w) => write!(f, "leading segment {w} ends no image"),
            DecodeErrorKind::InvalidBlock(w) => write!(f, "block {w} is not an image"),
            DecodeErrorKind::BadTrailingSegment(w) => write!(f, "trailing segment {w} begins no image"),
        }
    }
}

impl core::error::Error for DecodeError {}

#[cfg(feature = "serde")]
impl serde::Serialize for DecodeError {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("DecodeError", 3)?;
        s.serialize_field("morphism", self.morphism.name())?;
        s.serialize_field("position", &self.position)?;
        s.serialize_field("message", &alloc::format!("{self}"))?;
        s.end()
    }
}

/// Where the single occurrence of the marker letter sits inside every image.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum MarkerAt {
    Start,
    End,
}

/// A three-letter code whose images each contain the marker letter exactly
/// once, at the same end. Blocks are therefore delimited by the marker alone.
struct BlockCode {
    morphism: NamedMorphism,
    images: Vec<Vec<Letter>>,
    target_alphabet: u8,
    marker: Letter,
    marker_at: MarkerAt,
}

impl BlockCode {
    fn new(morphism: NamedMorphism, marker_at: MarkerAt) -> BlockCode {
        let m = morphism.morphism();
        let images = m.images().to_vec();
        let marker = match marker_at {
            MarkerAt::Start => images[0][0],
            MarkerAt::End => *images[0].last().expect("non-erasing"),
        };
        BlockCode { morphism, images, target_alphabet: m.target_alphabet(), marker, marker_at }
    }

    fn letter_of(&self, block: &[Letter]) -> Option<Letter> {
        self.images.iter().position(|im| im.as_slice() == block).map(|a| a as Letter)
    }

    fn is_proper_prefix(&self, s: &[Letter]) -> bool {
        self.images.iter().any(|im| im.len() > s.len() && im.starts_with(s))
    }

    fn is_proper_suffix(&self, s: &[Letter]) -> bool {
        self.images.iter().any(|im| im.len() > s.len() && im.ends_with(s))
    }

    fn error(&self, position: usize, kind: DecodeErrorKind) -> DecodeError {
        DecodeError { morphism: self.morphism, position, kind }
    }

    fn word(&self, letters: &[Letter]) -> Word {
        Word::from_trusted(letters.to_vec(), self.target_alphabet)
    }

    fn decode(&self, input: &Word) -> core::result::Result<DecodeResult, DecodeError> {
        if input.alphabet_size() != self.target_alphabet {
            return Err(self.error(
                0,
                DecodeErrorKind::Alphabet(Error::AlphabetMismatch {
                    expected: self.target_alphabet,
                    found: input.alphabet_size(),
                }),
            ));
        }
        match self.marker_at {
            MarkerAt::Start => self.decode_start_marked(input.letters()),
            MarkerAt::End => self.decode_end_marked(input.letters()),
        }
    }

    /// Blocks run from one marker up to the next.
    fn decode_start_marked(&self, s: &[Letter]) -> core::result::Result<DecodeResult, DecodeError> {
        let markers: Vec<usize> = (0..s.len()).filter(|&i| s[i] == self.marker).collect();
        let dropped = markers.first().copied().unwrap_or(s.len());
        if dropped > 0 && !self.is_proper_suffix(&s[..dropped]) {
            return Err(self.error(0, DecodeErrorKind::BadLeadingSegment(self.word(&s[..dropped]))));
        }
        let mut preimage = Vec::with_capacity(markers.len());
        let mut truncated = 0;
        for (k, &start) in markers.iter().enumerate() {
            let end = markers.get(k + 1).copied().unwrap_or(s.len());
            let block = &s[start..end];
            match self.letter_of(block) {
                Some(a) => preimage.push(a),
                None if end == s.len() && self.is_proper_prefix(block) => truncated = block.len(),
                None if end == s.len() => {
                    return Err(self.error(start, DecodeErrorKind::BadTrailingSegment(self.word(block))))
                }
                None => return Err(self.error(start, DecodeErrorKind::InvalidBlock(self.word(block)))),
            }
        }
        Ok(DecodeResult {
            preimage: Word::from_trusted(preimage, self.images.len() as u8),
            dropped_prefix: dropped,
            truncated_suffix: truncated,
        })
    }

    /// Blocks run up to and including each marker. The first block may be
    /// preceded by stray letters: the fewest are dropped that leave an image.
    fn decode_end_marked(&self, s: &[Letter]) -> core::result::Result<DecodeResult, DecodeError> {
        let max_margin = self.images.iter().map(Vec::len).max().unwrap_or(1) - 1;
        let markers: Vec<usize> = (0..s.len()).filter(|&i| s[i] == self.marker).collect();
        let mut preimage = Vec::with_capacity(markers.len());
        let mut dropped = 0;
        let mut block_start = 0;
        for (k, &m) in markers.iter().enumerate() {
            let block = &s[block_start..=m];
            if k == 0 {
                let skip = (0..block.len()).find(|&d| self.letter_of(&block[d..]).is_some());
                match skip {
                    Some(d) if d <= max_margin => {
                        dropped = d;
                        preimage.push(self.letter_of(&block[d..]).expect("found above"));
                    }
                    None if self.is_proper_suffix(block) => dropped = block.len(),
                    _ => return Err(self.error(0, DecodeErrorKind::BadLeadingSegment(self.word(block)))),
                }
            } else {
                match self.letter_of(block) {
                    Some(a) => preimage.push(a),
                    None => {
                        return Err(self.error(block_start, DecodeErrorKind::InvalidBlock(self.word(block))))
                    }
                }
            }
            block_start = m + 1;
        }
        let tail = &s[block_start..];
        if !tail.is_empty() && !self.is_proper_prefix(tail) {
            return Err(self.error(block_start, DecodeErrorKind::BadTrailingSegment(self.word(tail))));
        }
        Ok(DecodeResult {
            preimage: Word::from_trusted(preimage, self.images.len() as u8),
            dropped_prefix: dropped,
            truncated_suffix: tail.len(),
        })
    }
}

/// Decodes `w` as a window cut out of a longer image. A block at either cut
/// end that could also be part of a longer image is moved into the margin,
/// so every preimage letter is forced by the window.
fn decode_window(morphism: NamedMorphism, w: &Word) -> core::result::Result<DecodeResult, DecodeError> {
    let (code, mut result) = match morphism {
        NamedMorphism::H => {
            let code = BlockCode::new(morphism, MarkerAt::End);
            let r = code.decode(w)?;
            (code, r)
        }
        _ => {
            let code = BlockCode::new(morphism, MarkerAt::Start);
            let r = code.decode(w)?;
            (code, r)
        }
    };
    let s = w.letters();
    let mut letters = result.preimage.letters().to_vec();
    match code.marker_at {
        MarkerAt::Start => {
            if result.truncated_suffix == 0 {
                if let Some(&last) = letters.last() {
                    let block = &code.images[last as usize];
                    if code.is_proper_prefix(block) {
                        letters.pop();
                        result.truncated_suffix = block.len();
                    }
                }
            }
        }
        MarkerAt::End => {
            if let Some(&first) = letters.first() {
                let block = &code.images[first as usize];
                let whole = &s[..result.dropped_prefix + block.len()];
                if code.is_proper_suffix(whole) {
                    letters.remove(0);
                    result.dropped_prefix = whole.len();
                }
            }
        }
    }
    result.preimage = Word::from_trusted(letters, code.images.len() as u8);
    Ok(result)
}

/// Inverts `g`: blocks `011 → 0`, `0 → 1`, `01 → 2`, each starting at a `0`.
pub fn g_decode(w: &Word) -> core::result::Result<DecodeResult, DecodeError> {
    BlockCode::new(NamedMorphism::G, MarkerAt::Start).decode(w)
}

/// Inverts `f` on 0-blocks: `0121 → 0`, `021 → 1`, `01 → 2`.
pub fn f_decode(u: &Word) -> core::result::Result<DecodeResult, DecodeError> {
    BlockCode::new(NamedMorphism::F, MarkerAt::Start).decode(u)
}

/// Inverts `h`: `1210 → 0`, `120 → 1`, `10 → 2`. Every image ends with its
/// only `0`.
pub fn h_decode(u: &Word) -> core::result::Result<DecodeResult, DecodeError> {
    BlockCode::new(NamedMorphism::H, MarkerAt::End).decode(u)
}

/// Decoder for one of `f`, `g`, `h`.
pub fn decode_with(
    morphism: NamedMorphism,
    w: &Word,
) -> Result<core::result::Result<DecodeResult, DecodeError>> {
    match morphism {
        NamedMorphism::G => Ok(g_decode(w)),
        NamedMorphism::F => Ok(f_decode(w)),
        NamedMorphism::H => Ok(h_decode(w)),
        other => Err(Error::UnknownMorphism(alloc::format!("no decoder for {other}"))),
    }
}

/// Re-encodes a decode result, margins included.
pub fn reencode(morphism: &Morphism, original: &Word, result: &DecodeResult) -> Result<Word> {
    let body = morphism.apply(&result.preimage)?;
    let head = original.prefix(result.dropped_prefix);
    let tail = original.suffix_from(original.len() - result.truncated_suffix);
    head.concat(&body)?.concat(&tail)
}

/// Tuning knobs for [`decompose`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecomposeOptions {
    /// Stop once a preimage is shorter than this.
    pub min_level_length: usize,
    /// Leading letters a properness check may discard.
    pub seed_trim: usize,
    /// Properness is checked on at most this many leading letters per level.
    pub check_limit: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions { min_level_length: 10, seed_trim: 64, check_limit: DEFAULT_LENGTH_LIMIT }
    }
}

/// One decoded ternary level.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Level {
    #[cfg_attr(feature = "serde", serde(serialize_with = "ser_morphism"))]
    pub morphism: NamedMorphism,
    pub decode: DecodeResult,
    pub proper: Option<PropernessReport>,
    pub antiproper: Option<PropernessReport>,
}

#[cfg(feature = "serde")]
fn ser_morphism<S: serde::Serializer>(m: &NamedMorphism, s: S) -> core::result::Result<S::Ok, S::Error> {
    s.serialize_str(m.name())
}

impl Level {
    /// f-chain levels must be proper; h-chain levels may be proper or antiproper.
    pub fn passed(&self) -> bool {
        let ok = |r: &Option<PropernessReport>| r.as_ref().is_some_and(PropernessReport::passed);
        ok(&self.proper) || ok(&self.antiproper)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DecompositionCertificate {
    pub class: FactorClass,
    /// The `g` level first, then one level per `f` or `h` decoding.
    pub levels: Vec<Level>,
    pub depth_achieved: usize,
}

impl DecompositionCertificate {
    pub fn all_levels_passed(&self) -> bool {
        self.levels.iter().all(Level::passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecomposeError {
    Word(Error),
    /// The length-4 factors fit no single case.
    Structural(FactorClass),
    /// Decoding failed at `level` (0 is the `g` level).
    Decode {
        level: usize,
        error: DecodeError,
        partial: Box<DecompositionCertificate>,
    },
}

impl fmt::Display for DecomposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecomposeError::Word(e) => write!(f, "{e}"),
            DecomposeError::Structural(class) => write!(f, "cannot decompose: classified {class}"),
            DecomposeError::Decode { level, error, .. } => write!(f, "level {level}: {error}"),
        }
    }
}

impl core::error::Error for DecomposeError {}

impl From<Error> for DecomposeError {
    fn from(e: Error) -> Self {
        DecomposeError::Word(e)
    }
}

fn level_reports(
    word: &Word,
    reversed_chain: bool,
    options: &DecomposeOptions,
) -> (Option<PropernessReport>, Option<PropernessReport>) {
    let check = |o| check_with_trim(word, o, options.seed_trim, options.check_limit);
    let proper = Some(check(Orientation::Proper));
    let antiproper = reversed_chain.then(|| check(Orientation::Antiproper));
    (proper, antiproper)
}

/// Classifies `w`, decodes it under `g`, then under `f` (or `h` for the
/// reversed cases) up to `depth` times, checking each ternary level.
pub fn decompose(
    w: &Word,
    depth: usize,
    options: &DecomposeOptions,
) -> core::result::Result<DecompositionCertificate, DecomposeError> {
    let class = classify_by_length4(w)?;
    let tag = class.resolved().ok_or_else(|| DecomposeError::Structural(class.clone()))?;
    let binary = if tag.is_complemented() { w.complement()? } else { w.clone() };
    let reversed_chain = tag.is_reversed();
    let mut cert = DecompositionCertificate { class, levels: Vec::new(), depth_achieved: 0 };

    let decoded = decode_window(NamedMorphism::G, &binary).map_err(|error| DecomposeError::Decode {
        level: 0,
        error,
        partial: Box::new(cert.clone()),
    })?;
    let (proper, antiproper) = level_reports(&decoded.preimage, reversed_chain, options);
    let mut current = decoded.preimage.clone();
    cert.levels.push(Level { morphism: NamedMorphism::G, decode: decoded, proper, antiproper });

    let inner = tag.inner_morphism();
    for level in 1..=depth {
        let decoded = decode_window(inner, &current).map_err(|error| DecomposeError::Decode {
            level,
            error,
            partial: Box::new(cert.clone()),
        })?;
        if decoded.preimage.len() < options.min_level_length {
            break;
        }
        let (proper, antiproper) = level_reports(&decoded.preimage, reversed_chain, options);
        current = decoded.preimage.clone();
        cert.levels.push(Level { morphism: inner, decode: decoded, proper, antiproper });
        cert.depth_achieved = level;
    }
    Ok(cert)
}

/// Builds `g(f^depth(u))` (or `g(h^depth(u))` for the reversed cases, complemented
/// for the bar cases), with `u` a prefix of `f^ω(0)` (resp. `h^ω(1)`),
/// truncated to exactly `min_length` letters.
pub fn generate_case_word(tag: CaseTag, depth: usize, min_length: usize) -> Word {
    let g = NamedMorphism::G.morphism();
    let (inner, seed) =
        if tag.is_reversed() { (NamedMorphism::H.morphism(), 1) } else { (NamedMorphism::F.morphism(), 0) };
    let mut base_len = 1usize;
    loop {
        let mut u = inner.iterate_prefix(seed, base_len).expect("prolongable");
        for _ in 0..depth {
            u = inner.apply(&u).expect("endomorphism");
        }
        let w = g.apply(&u).expect("ternary source");
        if w.len() >= min_length {
            let w = w.prefix(min_length);
            return if tag.is_complemented() { w.complement().expect("binary") } else { w };
        }
        base_len *= 2;
    }
}
