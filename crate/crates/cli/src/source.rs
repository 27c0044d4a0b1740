//! Word sources: digit-line text and generator specs.
//!
//! Generator specs compose right to left, so `image:tau:fixpoint:theta:0:20000`
//! is the image under `tau` of the 20000-letter prefix of the fixed point of
//! `theta` starting with `0`.

use std::collections::BTreeMap;
use std::fs;

use anyhow::{anyhow, bail, Context, Result};
use rote_core::morphism::named;
use rote_core::structure::{generate_case_word, CaseTag};
use rote_core::{Error, Morphism, Word};

/// Parses one line of digits, taking the alphabet to be the smallest one
/// (at least binary) that holds every letter.
pub fn parse_inferred(line: &str) -> Result<Word> {
    let w = Word::parse(line, 10)?;
    let k = w.letters().iter().copied().max().map_or(2, |m| (m + 1).max(2));
    Ok(Word::new(w.into_letters(), k)?)
}

/// Reads the digit-line format: one word per line, blank lines ignored.
pub fn read_words(text: &str, limit: usize) -> Result<Vec<Word>> {
    let mut words = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        check_limit(line.len(), limit)?;
        words.push(parse_inferred(line).with_context(|| format!("line {}", i + 1))?);
    }
    Ok(words)
}

/// Reinterprets `w` over a `k`-letter alphabet.
pub fn with_alphabet(w: &Word, k: u8) -> Result<Word> {
    if w.alphabet_size() == k {
        return Ok(w.clone());
    }
    Word::new(w.letters().to_vec(), k).with_context(|| format!("word {w} is not over a {k}-letter alphabet"))
}

fn check_limit(length: usize, limit: usize) -> Result<()> {
    if length > limit {
        return Err(Error::InputTooLong { length, limit }.into());
    }
    Ok(())
}

/// Named morphisms plus any defined on the command line.
#[derive(Debug, Default)]
pub struct Registry {
    custom: BTreeMap<String, Morphism>,
}

impl Registry {
    pub fn define(&mut self, definition: &str) -> Result<()> {
        let (name, m) = Morphism::parse_definition(definition)?;
        self.custom.insert(name, m);
        Ok(())
    }

    pub fn lookup(&self, name: &str) -> Result<Morphism> {
        match self.custom.get(name) {
            Some(m) => Ok(m.clone()),
            None => Ok(named(name)?),
        }
    }

    /// Evaluates a generator spec, refusing to build anything longer than `limit`.
    pub fn generate(&self, spec: &str, limit: usize) -> Result<Word> {
        let (head, rest) = spec.split_once(':').unwrap_or((spec, ""));
        let w = match head {
            "fixpoint" => {
                let mut parts = rest.splitn(3, ':');
                let (m, seed, len) = (parts.next(), parts.next(), parts.next());
                let (Some(m), Some(seed), Some(len)) = (m, seed, len) else {
                    bail!("expected fixpoint:<morphism>:<seed>:<length>, got {spec:?}");
                };
                let len = parse_number(len, "length")?;
                check_limit(len, limit)?;
                let seed: u8 = parse_number(seed, "seed")?.try_into().map_err(|_| anyhow!("seed too large"))?;
                self.lookup(m)?.iterate_prefix(seed, len)?
            }
            "image" => {
                let (m, inner) = rest
                    .split_once(':')
                    .ok_or_else(|| anyhow!("expected image:<morphism>:<spec>, got {spec:?}"))?;
                let m = self.lookup(m)?;
                let w = self.generate(inner, limit)?;
                check_limit(w.len().saturating_mul(m.max_image_len()), limit)?;
                let w = if w.alphabet_size() < m.source_alphabet() {
                    with_alphabet(&w, m.source_alphabet())?
                } else {
                    w
                };
                m.apply(&w)?
            }
            "complement" => {
                let w = self.generate(rest, limit)?;
                with_alphabet(&w, 2)?.complement()?
            }
            "reverse" => self.generate(rest, limit)?.reverse(),
            "prefix" => {
                let (n, inner) = rest
                    .split_once(':')
                    .ok_or_else(|| anyhow!("expected prefix:<length>:<spec>, got {spec:?}"))?;
                let n = parse_number(n, "length")?;
                let w = self.generate(inner, limit)?;
                if w.len() < n {
                    return Err(Error::TooShort { length: w.len(), required: n }.into());
                }
                w.prefix(n)
            }
            "case" => {
                let parts: Vec<&str> = rest.split(':').collect();
                let [tag, depth, len] = parts[..] else {
                    bail!("expected case:<tag>:<depth>:<length>, got {spec:?}");
                };
                let len = parse_number(len, "length")?;
                check_limit(len, limit)?;
                generate_case_word(tag.parse::<CaseTag>()?, parse_number(depth, "depth")?, len)
            }
            "word" => match rest.split_once(':') {
                Some((k, digits)) => Word::parse(digits, parse_number(k, "alphabet size")? as u8)?,
                None => parse_inferred(rest)?,
            },
            "file" => {
                let text = fs::read_to_string(rest).with_context(|| format!("reading {rest}"))?;
                read_words(&text, limit)?
                    .into_iter()
                    .next()
                    .ok_or_else(|| anyhow!("{rest} holds no word"))?
            }
            other => bail!(
                "unknown generator {other:?} (expected fixpoint, image, complement, reverse, prefix, case, word or file)"
            ),
        };
        check_limit(w.len(), limit)?;
        Ok(w)
    }
}

fn parse_number(text: &str, what: &str) -> Result<usize> {
    text.trim().parse().with_context(|| format!("bad {what} {text:?}"))
}
