use alloc::string::String;
use core::fmt;

/// Errors raised by word, morphism and analysis operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A character in textual input was not a decimal digit.
    NotADigit { position: usize, found: char },
    /// A letter fell outside `{0, …, alphabet_size - 1}`.
    LetterOutOfAlphabet { position: usize, letter: u8, alphabet_size: u8 },
    /// Alphabet sizes must lie in `1..=10` so words render as digit strings.
    InvalidAlphabetSize(usize),
    /// Two values declared over different alphabets were combined.
    AlphabetMismatch { expected: u8, found: u8 },
    /// The operation is only defined on binary words.
    NotBinary { alphabet_size: u8 },
    /// The operation is undefined on the empty word.
    EmptyWord,
    /// Parikh vectors of different dimensions were compared.
    DimensionMismatch { left: usize, right: usize },
    /// A name outside the morphism registry.
    UnknownMorphism(String),
    /// Malformed `name: image,image,...` morphism text.
    MorphismSyntax(String),
    /// The seed letter does not start its own image, or the image is too short.
    NotProlongable { seed: u8 },
    /// Threshold numerator/denominator outside the accepted range.
    InvalidThreshold { numerator: usize, denominator: usize },
    /// Input longer than the configured guard.
    InputTooLong { length: usize, limit: usize },
    /// A forbidden-factor set contained the empty word.
    EmptyForbiddenFactor,
    /// The word is shorter than the operation requires.
    TooShort { length: usize, required: usize },
    /// A case name other than `F`, `Fbar`, `Frev`, `FbarRev`.
    UnknownCase(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotADigit { position, found } => {
                write!(f, "position {position}: {found:?} is not a digit")
            }
            Error::LetterOutOfAlphabet { position, letter, alphabet_size } => write!(
                f,
                "position {position}: letter {letter} is outside an alphabet of size {alphabet_size}"
            ),
            Error::InvalidAlphabetSize(k) => write!(f, "alphabet size {k} is not in 1..=10"),
            Error::AlphabetMismatch { expected, found } => {
                write!(f, "expected alphabet size {expected}, found {found}")
            }
            Error::NotBinary { alphabet_size } => {
                write!(f, "binary word required, alphabet size is {alphabet_size}")
            }
            Error::EmptyWord => f.write_str("operation undefined on the empty word"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "Parikh vectors have dimensions {left} and {right}")
            }
            Error::UnknownMorphism(name) => write!(f, "unknown morphism {name:?}"),
            Error::MorphismSyntax(msg) => write!(f, "malformed morphism: {msg}"),
            Error::NotProlongable { seed } => write!(f, "morphism is not prolongable on {seed}"),
            Error::InvalidThreshold { numerator, denominator } => {
                write!(f, "threshold {numerator}/{denominator} must satisfy numerator >= denominator >= 1")
            }
            Error::InputTooLong { length, limit } => {
                write!(f, "input of length {length} exceeds the limit of {limit} letters")
            }
            Error::EmptyForbiddenFactor => f.write_str("forbidden factors must be nonempty"),
            Error::TooShort { length, required } => {
                write!(f, "word of length {length} is shorter than the required {required}")
            }
            Error::UnknownCase(name) => write!(f, "unknown case {name:?}"),
        }
    }
}

impl core::error::Error for Error {}
