//! Morphisms (letter-to-word substitutions) and prefixes of their fixed points.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    alphabet: Arc<Alphabet>,
    images: Vec<Vec<Letter>>,
}

/// The named constructions shipped with the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Leech's uniform square-free morphism on three letters.
    LeechL,
    /// Dekking's abelian-cube-free morphism on three letters.
    DekkingD3,
    /// Dekking's abelian-4th-power-free morphism on two letters.
    DekkingD4,
    /// Thue-Morse with `2` inserted between consecutive letters.
    TmSepT,
    ThueMorse,
}

impl Builtin {
    pub const ALL: [Builtin; 5] = [
        Builtin::LeechL,
        Builtin::DekkingD3,
        Builtin::DekkingD4,
        Builtin::TmSepT,
        Builtin::ThueMorse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::LeechL => "leech_l",
            Builtin::DekkingD3 => "dekking_d3",
            Builtin::DekkingD4 => "dekking_d4",
            Builtin::TmSepT => "tm_sep_t",
            Builtin::ThueMorse => "thue_morse",
        }
    }

    fn table(self) -> (usize, &'static [&'static str]) {
        match self {
            Builtin::LeechL => (
                3,
                &["0121021201210", "1202102012021", "2010210120102"],
            ),
            Builtin::DekkingD3 => (3, &["0012", "112", "022"]),
            Builtin::DekkingD4 => (2, &["011", "0001"]),
            Builtin::TmSepT => (3, &["021", "120", "2"]),
            Builtin::ThueMorse => (2, &["01", "10"]),
        }
    }

    pub fn morphism(self) -> Morphism {
        let (size, images) = self.table();
        let alphabet = Arc::new(Alphabet::digits(size).expect("digit alphabet"));
        let images = images
            .iter()
            .map(|s| s.bytes().map(|b| b - b'0').collect())
            .collect();
        Morphism { alphabet, images }
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Looks up a built-in morphism by name.
pub fn builtin(name: &str) -> Result<Morphism> {
    name.parse::<Builtin>().map(Builtin::morphism)
}

impl Morphism {
    pub fn new(alphabet: Arc<Alphabet>, images: Vec<Word>) -> Result<Self> {
        if images.len() != alphabet.size() {
            return Err(Error::IncompleteMap);
        }
        let images = images
            .into_iter()
            .map(|w| {
                w.same_alphabet(&alphabet)?;
                Ok(w.into_letters())
            })
            .collect::<Result<_>>()?;
        Ok(Morphism { alphabet, images })
    }

    /// Parses `a->image;b->image;...` where every letter of the alphabet
    /// appears exactly once on the left.
    pub fn parse(alphabet: Arc<Alphabet>, text: &str) -> Result<Self> {
        let mut images: Vec<Option<Vec<Letter>>> = vec![None; alphabet.size()];
        for rule in text.split(';').map(str::trim).filter(|r| !r.is_empty()) {
            let (lhs, rhs) = rule
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("rule `{rule}` lacks `->`")))?;
            let a = alphabet.letter(lhs.trim())?;
            let image = Word::parse(&alphabet, rhs.trim())?.into_letters();
            if images[a as usize].replace(image).is_some() {
                return Err(Error::Parse(format!("letter `{}` has two images", lhs.trim())));
            }
        }
        let images = images
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::IncompleteMap)?;
        Ok(Morphism { alphabet, images })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn image(&self, letter: Letter) -> &[Letter] {
        &self.images[letter as usize]
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        w.same_alphabet(&self.alphabet)?;
        Ok(w.with_letters(self.apply_letters(w.letters())))
    }

    pub fn apply_letters(&self, letters: &[Letter]) -> Vec<Letter> {
        letters
            .iter()
            .flat_map(|&a| self.images[a as usize].iter().copied())
            .collect()
    }

    /// The image of `seed` is nonempty and begins with `seed`.
    pub fn is_prolongable_at(&self, seed: Letter) -> bool {
        self.images
            .get(seed as usize)
            .and_then(|img| img.first())
            .is_some_and(|&first| first == seed)
    }

    /// A prefix of the fixed point `h^ω(seed)` with at least `min_len`
    /// letters. The result may overshoot `min_len` by part of one image.
    pub fn fixed_point_prefix(&self, seed: Letter, min_len: usize) -> Result<Word> {
        let not_prolongable = || Error::NotProlongable(self.alphabet.symbol(seed).to_string());
        if (seed as usize) >= self.alphabet.size() {
            return Err(Error::UnknownLetter(format!("#{seed}")));
        }
        if !self.is_prolongable_at(seed) {
            return Err(not_prolongable());
        }
        let mut current = vec![seed];
        while current.len() < min_len {
            let mut next = Vec::with_capacity(min_len.min(current.len() * 4));
            for &a in &current {
                next.extend_from_slice(&self.images[a as usize]);
                if next.len() >= min_len {
                    break;
                }
            }
            // Since h(seed) starts with seed, `next` extends `current`.
            if next.len() <= current.len() {
                return Err(not_prolongable());
            }
            current = next;
        }
        Word::from_letters(Arc::clone(&self.alphabet), current)
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, img) in self.images.iter().enumerate() {
            if a > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}->", self.alphabet.symbol(a as Letter))?;
            for &b in img {
                f.write_str(self.alphabet.symbol(b))?;
            }
        }
        Ok(())
    }
}
