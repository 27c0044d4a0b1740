//! Morphisms `Σ_m* → Σ_n*` given by their letter images.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Letter, ParikhVector, Result, Word};

/// A morphism defined by the images of its source letters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    source_alphabet: u8,
    target_alphabet: u8,
    images: Vec<Vec<Letter>>,
}

impl Morphism {
    /// The source alphabet is `images.len()`; every image must lie in `Σ_target`.
    pub fn new(target_alphabet: u8, images: Vec<Vec<Letter>>) -> Result<Self> {
        let source_alphabet =
            u8::try_from(images.len()).map_err(|_| Error::InvalidAlphabetSize(images.len()))?;
        // Validates both alphabets and every image letter.
        Word::empty(source_alphabet)?;
        for image in &images {
            Word::new(image.clone(), target_alphabet)?;
        }
        Ok(Morphism { source_alphabet, target_alphabet, images })
    }

    pub fn identity(alphabet: u8) -> Result<Self> {
        Morphism::new(alphabet, (0..alphabet).map(|a| alloc::vec![a]).collect())
    }

    /// Parses `name: image0,image1[,image2...]`. The target alphabet is the
    /// larger of 2 and one more than the largest letter used.
    pub fn parse_definition(text: &str) -> Result<(String, Morphism)> {
        let (name, body) = text
            .split_once(':')
            .ok_or_else(|| Error::MorphismSyntax("expected `name: image,image,...`".to_string()))?;
        let name = name.trim();
        if name.is_empty() {
            return Err(Error::MorphismSyntax("missing name".to_string()));
        }
        let mut images = Vec::new();
        for part in body.split(',') {
            let part = part.trim();
            let image = Word::parse(part, 10)
                .map_err(|e| Error::MorphismSyntax(alloc::format!("image {part:?}: {e}")))?;
            images.push(image.into_letters());
        }
        let max_letter = images.iter().flatten().copied().max().unwrap_or(0);
        let target = (max_letter + 1).max(2);
        Ok((name.to_string(), Morphism::new(target, images)?))
    }

    pub fn source_alphabet(&self) -> u8 {
        self.source_alphabet
    }

    pub fn target_alphabet(&self) -> u8 {
        self.target_alphabet
    }

    pub fn image(&self, letter: Letter) -> Word {
        Word::from_trusted(self.images[letter as usize].clone(), self.target_alphabet)
    }

    pub fn images(&self) -> &[Vec<Letter>] {
        &self.images
    }

    pub fn is_non_erasing(&self) -> bool {
        self.images.iter().all(|im| !im.is_empty())
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.alphabet_size() != self.source_alphabet {
            return Err(Error::AlphabetMismatch { expected: self.source_alphabet, found: w.alphabet_size() });
        }
        Ok(Word::from_trusted(self.apply_letters(w.letters()), self.target_alphabet))
    }

    pub(crate) fn apply_letters(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::with_capacity(letters.len() * self.max_image_len());
        for &a in letters {
            out.extend_from_slice(&self.images[a as usize]);
        }
        out
    }

    /// `outer ∘ inner`: each letter `a` maps to `outer(inner(a))`.
    pub fn compose(outer: &Morphism, inner: &Morphism) -> Result<Morphism> {
        if inner.target_alphabet != outer.source_alphabet {
            return Err(Error::AlphabetMismatch {
                expected: outer.source_alphabet,
                found: inner.target_alphabet,
            });
        }
        Ok(Morphism {
            source_alphabet: inner.source_alphabet,
            target_alphabet: outer.target_alphabet,
            images: inner.images.iter().map(|im| outer.apply_letters(im)).collect(),
        })
    }

    /// Letterwise equality of images, which is equality of the morphisms.
    pub fn equal_on_letters(&self, other: &Morphism) -> bool {
        self.source_alphabet == other.source_alphabet && self.images == other.images
    }

    /// The prefix of length `min_length` of the fixed point `m^ω(seed)`.
    ///
    /// Requires an endomorphism whose image of `seed` starts with `seed` and
    /// has length at least 2.
    pub fn iterate_prefix(&self, seed: Letter, min_length: usize) -> Result<Word> {
        if self.source_alphabet != self.target_alphabet {
            return Err(Error::AlphabetMismatch {
                expected: self.source_alphabet,
                found: self.target_alphabet,
            });
        }
        if seed >= self.source_alphabet {
            return Err(Error::LetterOutOfAlphabet {
                position: 0,
                letter: seed,
                alphabet_size: self.source_alphabet,
            });
        }
        let image = &self.images[seed as usize];
        if image.len() < 2 || image[0] != seed {
            return Err(Error::NotProlongable { seed });
        }
        let mut w = alloc::vec![seed];
        while w.len() < min_length {
            w = self.apply_letters(&w);
        }
        w.truncate(min_length);
        Ok(Word::from_trusted(w, self.source_alphabet))
    }

    /// Parikh vectors of the images, one column per source letter.
    pub fn incidence(&self) -> Vec<ParikhVector> {
        self.images.iter().map(|im| ParikhVector::of(im, self.target_alphabet)).collect()
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({self})")
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, image) in self.images.iter().enumerate() {
            if a > 0 {
                f.write_str(",")?;
            }
            for &b in image {
                fmt::Write::write_char(f, char::from(b'0' + b))?;
            }
        }
        Ok(())
    }
}

/// The closed registry of named morphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedMorphism {
    /// `0 → 0121, 1 → 021, 2 → 01`
    F,
    /// `0 → 011, 1 → 0, 2 → 01` (ternary to binary)
    G,
    /// `0 → 1210, 1 → 120, 2 → 10`, the letterwise reversal of `f`
    H,
    /// Thue–Morse, `0 → 01, 1 → 10`
    Mu,
    /// `0 → 0, 1 → 01, 2 → 011` (ternary to binary)
    Tau,
    /// `0 → 01, 1 → 2, 2 → 02`
    Theta,
    /// The cyclic permutation `0 → 1 → 2 → 0`
    Sigma,
    /// Inverse of [`NamedMorphism::Sigma`]
    SigmaInv,
}

impl NamedMorphism {
    pub const ALL: [NamedMorphism; 8] = [
        NamedMorphism::F,
        NamedMorphism::G,
        NamedMorphism::H,
        NamedMorphism::Mu,
        NamedMorphism::Tau,
        NamedMorphism::Theta,
        NamedMorphism::Sigma,
        NamedMorphism::SigmaInv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedMorphism::F => "f",
            NamedMorphism::G => "g",
            NamedMorphism::H => "h",
            NamedMorphism::Mu => "mu",
            NamedMorphism::Tau => "tau",
            NamedMorphism::Theta => "theta",
            NamedMorphism::Sigma => "sigma",
            NamedMorphism::SigmaInv => "sigma_inv",
        }
    }

    fn table(self) -> (u8, &'static [&'static [Letter]]) {
        match self {
            NamedMorphism::F => (3, &[&[0, 1, 2, 1], &[0, 2, 1], &[0, 1]]),
            NamedMorphism::G => (2, &[&[0, 1, 1], &[0], &[0, 1]]),
            NamedMorphism::H => (3, &[&[1, 2, 1, 0], &[1, 2, 0], &[1, 0]]),
            NamedMorphism::Mu => (2, &[&[0, 1], &[1, 0]]),
            NamedMorphism::Tau => (2, &[&[0], &[0, 1], &[0, 1, 1]]),
            NamedMorphism::Theta => (3, &[&[0, 1], &[2], &[0, 2]]),
            NamedMorphism::Sigma => (3, &[&[1], &[2], &[0]]),
            NamedMorphism::SigmaInv => (3, &[&[2], &[0], &[1]]),
        }
    }

    pub fn morphism(self) -> Morphism {
        let (target_alphabet, images) = self.table();
        Morphism {
            source_alphabet: images.len() as u8,
            target_alphabet,
            images: images.iter().map(|im| im.to_vec()).collect(),
        }
    }
}

impl FromStr for NamedMorphism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedMorphism::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownMorphism(s.to_string()))
    }
}

impl fmt::Display for NamedMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Registry lookup by name.
pub fn named(name: &str) -> Result<Morphism> {
    Ok(name.parse::<NamedMorphism>()?.morphism())
}
