//! Alphabets and finite words.
//!
//! Letters are stored as their rank in the alphabet, so the alphabet order
//! is simply the numeric order of [`Letter`] values. Positions in public
//! contracts are 1-based; the underlying letter slices are 0-based.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Rank of a letter in its alphabet.
pub type Letter = u8;

pub const MAX_ALPHABET: usize = 255;

#[derive(Clone, Debug)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, Letter>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl std::hash::Hash for Alphabet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl Alphabet {
    /// Builds an alphabet whose order is the order of `symbols`.
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() || symbols.len() > MAX_ALPHABET {
            return Err(Error::AlphabetSize(symbols.len()));
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (rank, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(char::is_whitespace) {
                return Err(Error::Parse(format!("invalid letter symbol {s:?}")));
            }
            if index.insert(s.clone(), rank as Letter).is_some() {
                return Err(Error::DuplicateLetter(s.clone()));
            }
        }
        Ok(Alphabet { symbols, index })
    }

    /// One letter per character, e.g. `"012"` or `"ACGT"`.
    pub fn from_chars(letters: &str) -> Result<Self> {
        Alphabet::new(letters.chars().map(String::from))
    }

    /// `0 < 1 < ... < size-1`, for sizes up to 10.
    pub fn digits(size: usize) -> Result<Self> {
        if size == 0 || size > 10 {
            return Err(Error::AlphabetSize(size));
        }
        Alphabet::new((0..size).map(|d| d.to_string()))
    }

    /// `A < C < G < T`.
    pub fn dna() -> Self {
        Alphabet::from_chars("ACGT").expect("static alphabet")
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.symbols.len()).map(|l| l as Letter)
    }

    pub fn symbol(&self, letter: Letter) -> &str {
        &self.symbols[letter as usize]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn letter(&self, symbol: &str) -> Result<Letter> {
        self.index
            .get(symbol)
            .copied()
            .ok_or_else(|| Error::UnknownLetter(symbol.to_string()))
    }

    pub fn is_single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.symbols.join(","))
    }
}

/// A finite word over a shared alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty(alphabet: Arc<Alphabet>) -> Self {
        Word {
            alphabet,
            letters: Vec::new(),
        }
    }

    pub fn from_letters(alphabet: Arc<Alphabet>, letters: Vec<Letter>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l as usize >= alphabet.size()) {
            return Err(Error::UnknownLetter(format!("#{bad}")));
        }
        Ok(Word { alphabet, letters })
    }

    /// Parses a word written with single-character letters.
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self> {
        let mut buf = [0u8; 4];
        let letters = text
            .chars()
            .map(|c| alphabet.letter(c.encode_utf8(&mut buf)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word {
            alphabet: Arc::clone(alphabet),
            letters,
        })
    }

    /// Parses whitespace-separated letter tokens (for multi-character letters).
    pub fn from_tokens(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|t| alphabet.letter(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word {
            alphabet: Arc::clone(alphabet),
            letters,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> Option<Letter> {
        pos.checked_sub(1).and_then(|i| self.letters.get(i).copied())
    }

    /// The factor `w[start .. start+len-1]` (1-based).
    pub fn factor(&self, start: usize, len: usize) -> Option<Word> {
        let from = start.checked_sub(1)?;
        let to = from.checked_add(len)?;
        let letters = self.letters.get(from..to)?.to_vec();
        Some(Word {
            alphabet: Arc::clone(&self.alphabet),
            letters,
        })
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.same_alphabet(other.alphabet())?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            alphabet: Arc::clone(&self.alphabet),
            letters,
        })
    }

    pub fn reversed(&self) -> Word {
        Word {
            alphabet: Arc::clone(&self.alphabet),
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub(crate) fn with_letters(&self, letters: Vec<Letter>) -> Word {
        Word {
            alphabet: Arc::clone(&self.alphabet),
            letters,
        }
    }

    pub(crate) fn same_alphabet(&self, alphabet: &Arc<Alphabet>) -> Result<()> {
        if Arc::ptr_eq(&self.alphabet, alphabet) || *self.alphabet == **alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.alphabet.is_single_char() { "" } else { " " };
        for (i, &l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            f.write_str(self.alphabet.symbol(l))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_rejects_duplicates_and_bad_sizes() {
        assert_eq!(
            Alphabet::from_chars("0120"),
            Err(Error::DuplicateLetter("0".into()))
        );
        assert_eq!(Alphabet::from_chars(""), Err(Error::AlphabetSize(0)));
        let too_many: Vec<String> = (0..256).map(|i| format!("x{i}")).collect();
        assert_eq!(Alphabet::new(too_many), Err(Error::AlphabetSize(256)));
        let max: Vec<String> = (0..255).map(|i| format!("x{i}")).collect();
        assert_eq!(Alphabet::new(max).unwrap().size(), 255);
    }

    #[test]
    fn dna_order() {
        let dna = Alphabet::dna();
        assert!(dna.letter("A").unwrap() < dna.letter("C").unwrap());
        assert!(dna.letter("G").unwrap() < dna.letter("T").unwrap());
    }

    #[test]
    fn word_parse_and_positions() {
        let sigma = Arc::new(Alphabet::digits(3).unwrap());
        let w = Word::parse(&sigma, "0121").unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.at(1), Some(0));
        assert_eq!(w.at(4), Some(1));
        assert_eq!(w.at(0), None);
        assert_eq!(w.factor(2, 2).unwrap().to_string(), "12");
        assert!(w.factor(4, 2).is_none());
        assert_eq!(w.to_string(), "0121");
        assert!(Word::parse(&sigma, "013").is_err());
        assert!(Word::parse(&sigma, "").unwrap().is_empty());
    }

    #[test]
    fn multi_char_tokens() {
        let sigma = Arc::new(Alphabet::new(["ab", "c"]).unwrap());
        let w = Word::from_tokens(&sigma, "ab c  ab\n").unwrap();
        assert_eq!(w.letters(), &[0, 1, 0]);
        assert_eq!(w.to_string(), "ab c ab");
    }

    #[test]
    fn concat_checks_alphabet() {
        let a = Arc::new(Alphabet::digits(2).unwrap());
        let b = Arc::new(Alphabet::digits(3).unwrap());
        let u = Word::parse(&a, "01").unwrap();
        let v = Word::parse(&b, "2").unwrap();
        assert_eq!(u.concat(&v), Err(Error::AlphabetMismatch));
        assert_eq!(u.concat(&u).unwrap().to_string(), "0101");
    }
}
