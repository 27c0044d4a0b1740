//! Combinatorics on words for (5/2)⁺-power-free Rote words.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! - [`word`]: alphabet-checked finite words, factors, complexity and Parikh vectors.
//! - [`repetition`]: smallest periods, exact exponents and power-freeness scans.
//! - [`morphism`]: morphisms, composition, fixed-point prefixes and the named registry.
//! - [`properness`]: proper / antiproper ternary words (forbidden factors and dominated `xyxyx`).
//! - [`search`]: lexicographic backtracking for long words avoiding 5/2⁺ powers and a factor set.
//! - [`structure`]: length-4 factor classification, block decoding and iterated decomposition.
//!
//! ```
//! use rote_core::morphism::NamedMorphism;
//! use rote_core::repetition::{is_power_free, Threshold};
//! use rote_core::structure::{decompose, generate_case_word, CaseTag, DecomposeOptions};
//!
//! let u = NamedMorphism::F.morphism().iterate_prefix(0, 2000).unwrap();
//! let w = NamedMorphism::G.morphism().apply(&u).unwrap().prefix(2000);
//! assert!(is_power_free(&w, &Threshold::FIVE_HALVES_PLUS).is_ok());
//!
//! let w = generate_case_word(CaseTag::FRev, 2, 2000);
//! let cert = decompose(&w, 2, &DecomposeOptions::default()).unwrap();
//! assert_eq!(cert.depth_achieved, 2);
//! ```
#![no_std]
#![deny(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod morphism;
pub mod properness;
pub mod repetition;
pub mod search;
pub mod structure;
pub mod word;

pub use error::Error;
pub use morphism::{Morphism, NamedMorphism};
pub use properness::{Violation, XyxyxOccurrence};
pub use repetition::{Exponent, RepetitionWitness, Threshold};
pub use search::SearchOutcome;
pub use structure::{CaseTag, DecodeResult, DecompositionCertificate, FactorClass};
pub use word::{Letter, ParikhVector, Word};

pub type Result<T, E = Error> = core::result::Result<T, E>;
