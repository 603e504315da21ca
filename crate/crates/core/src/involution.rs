//! Antimorphic involutions: a self-inverse letter permutation followed by
//! reversal.
//!
//! Every such map is a product of disjoint transpositions and the mirror
//! image `Mir`; [`Involution::decompose`] recovers that product and
//! [`Involution::classify`] splits the alphabet into fixed letters (`Idt`)
//! and letters sent upward in the alphabet order (`Trn`), so that
//! `|Idt| + 2 |Trn| = |alphabet|`.
//!
//! Text format: `mir`, or transposition pairs followed by `.mir`, e.g.
//! `(0,1).mir` or `(A,T),(C,G).mir`. The keyword is case-insensitive; letters
//! are matched exactly.

use std::fmt;
use std::sync::Arc;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Involution {
    alphabet: Arc<Alphabet>,
    map: Vec<Letter>,
}

/// Disjoint transpositions `(a, b)` with `a < b`, sorted by `a`; the mirror
/// image is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub transpositions: Vec<(Letter, Letter)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub idt: Vec<Letter>,
    pub trn: Vec<Letter>,
}

impl Involution {
    /// Validates `letter_map` (indexed by letter) as a self-inverse permutation.
    pub fn new(alphabet: Arc<Alphabet>, letter_map: Vec<Letter>) -> Result<Self> {
        let n = alphabet.size();
        if letter_map.len() != n {
            return Err(Error::IncompleteMap);
        }
        let mut seen = vec![false; n];
        for &b in &letter_map {
            let b = b as usize;
            if b >= n || std::mem::replace(&mut seen[b], true) {
                return Err(Error::NotPermutation);
            }
        }
        if let Some(a) = (0..n).find(|&a| letter_map[letter_map[a] as usize] as usize != a) {
            return Err(Error::NotInvolutive(alphabet.symbol(a as Letter).to_string()));
        }
        Ok(Involution {
            alphabet,
            map: letter_map,
        })
    }

    /// Builds an involution from `(from, to)` symbol pairs; the pairs must
    /// cover every letter exactly once.
    pub fn from_symbol_map(alphabet: Arc<Alphabet>, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut map: Vec<Option<Letter>> = vec![None; alphabet.size()];
        for (from, to) in pairs {
            let a = alphabet.letter(from)?;
            let b = alphabet.letter(to)?;
            if map[a as usize].replace(b).is_some() {
                return Err(Error::NotPermutation);
            }
        }
        let map = map
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::IncompleteMap)?;
        Involution::new(alphabet, map)
    }

    /// The mirror image: identity on letters.
    pub fn mirror(alphabet: Arc<Alphabet>) -> Self {
        let map = alphabet.letters().collect();
        Involution { alphabet, map }
    }

    /// `Mir` composed with the given disjoint transpositions.
    pub fn from_transpositions(alphabet: Arc<Alphabet>, pairs: &[(Letter, Letter)]) -> Result<Self> {
        let n = alphabet.size();
        let mut map: Vec<Letter> = alphabet.letters().collect();
        let mut used = vec![false; n];
        for &(a, b) in pairs {
            if a as usize >= n || b as usize >= n {
                return Err(Error::UnknownLetter(format!("#{}", a.max(b))));
            }
            if a == b || used[a as usize] || used[b as usize] {
                return Err(Error::Parse("transpositions must be disjoint pairs of distinct letters".into()));
            }
            used[a as usize] = true;
            used[b as usize] = true;
            map.swap(a as usize, b as usize);
        }
        Ok(Involution { alphabet, map })
    }

    /// Watson-Crick complementarity over `A < C < G < T`.
    pub fn watson_crick() -> Self {
        let dna = Arc::new(Alphabet::dna());
        Involution::parse(dna, "(A,T),(C,G).mir").expect("static involution")
    }

    /// Every antimorphic involution over `alphabet`, in a fixed order.
    pub fn enumerate(alphabet: Arc<Alphabet>) -> Vec<Involution> {
        fn go(map: &mut Vec<Letter>, from: usize, out: &mut Vec<Vec<Letter>>) {
            let n = map.len();
            let Some(a) = (from..n).find(|&a| map[a] as usize == a) else {
                out.push(map.clone());
                return;
            };
            // `a` stays fixed; later letters may still pair among themselves.
            go(map, a + 1, out);
            for b in a + 1..n {
                if map[b] as usize == b {
                    map.swap(a, b);
                    go(map, a + 1, out);
                    map.swap(a, b);
                }
            }
        }
        let mut out = Vec::new();
        let mut map: Vec<Letter> = alphabet.letters().collect();
        go(&mut map, 0, &mut out);
        out.into_iter()
            .map(|map| Involution {
                alphabet: Arc::clone(&alphabet),
                map,
            })
            .collect()
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// The letter permutation, indexed by letter.
    pub fn letter_map(&self) -> &[Letter] {
        &self.map
    }

    #[inline]
    pub fn image(&self, letter: Letter) -> Letter {
        self.map[letter as usize]
    }

    pub fn is_mirror(&self) -> bool {
        self.map.iter().enumerate().all(|(a, &b)| a == b as usize)
    }

    /// Maps letters, then reverses.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        w.same_alphabet(&self.alphabet)?;
        Ok(w.with_letters(self.apply_letters(w.letters())))
    }

    pub fn apply_letters(&self, letters: &[Letter]) -> Vec<Letter> {
        letters.iter().rev().map(|&a| self.image(a)).collect()
    }

    pub fn decompose(&self) -> Decomposition {
        let transpositions = self
            .map
            .iter()
            .enumerate()
            .filter(|&(a, &b)| (b as usize) > a)
            .map(|(a, &b)| (a as Letter, b))
            .collect();
        Decomposition { transpositions }
    }

    pub fn classify(&self) -> Classification {
        let mut idt = Vec::new();
        let mut trn = Vec::new();
        for (a, &b) in self.map.iter().enumerate() {
            match (b as usize).cmp(&a) {
                std::cmp::Ordering::Equal => idt.push(a as Letter),
                std::cmp::Ordering::Greater => trn.push(a as Letter),
                std::cmp::Ordering::Less => {}
            }
        }
        Classification { idt, trn }
    }

    /// Parses the `(a,b),(c,d).mir` / `mir` text form.
    pub fn parse(alphabet: Arc<Alphabet>, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.eq_ignore_ascii_case("mir") {
            return Ok(Involution::mirror(alphabet));
        }
        let body = strip_suffix_ignore_case(text, ".mir")
            .ok_or_else(|| Error::Parse(format!("involution `{text}` must be `mir` or end with `.mir`")))?;
        let mut pairs = Vec::new();
        let mut rest = body.trim();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected `(` in `{text}`")))?;
            let close = inner
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed `(` in `{text}`")))?;
            let (a, b) = inner[..close]
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("transposition needs two letters in `{text}`")))?;
            pairs.push((alphabet.letter(a.trim())?, alphabet.letter(b.trim())?));
            rest = inner[close + 1..].trim_start();
            if let Some(r) = rest.strip_prefix(',') {
                rest = r.trim_start();
                if rest.is_empty() {
                    return Err(Error::Parse(format!("trailing `,` in `{text}`")));
                }
            } else if !rest.is_empty() {
                return Err(Error::Parse(format!("expected `,` between transpositions in `{text}`")));
            }
        }
        if pairs.is_empty() {
            return Err(Error::Parse(format!("no transpositions before `.mir` in `{text}`")));
        }
        Involution::from_transpositions(alphabet, &pairs)
    }
}

fn strip_suffix_ignore_case<'a>(text: &'a str, suffix: &str) -> Option<&'a str> {
    let cut = text.len().checked_sub(suffix.len())?;
    if text.is_char_boundary(cut) && text[cut..].eq_ignore_ascii_case(suffix) {
        Some(&text[..cut])
    } else {
        None
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.decompose().fmt_with(&self.alphabet, f)
    }
}

impl Decomposition {
    /// Rebuilds the involution `(a0,a1)...(..)·Mir`.
    pub fn recompose(&self, alphabet: Arc<Alphabet>) -> Result<Involution> {
        Involution::from_transpositions(alphabet, &self.transpositions)
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Decomposition, &'a Alphabet);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(self.1, f)
            }
        }
        D(self, alphabet)
    }

    fn fmt_with(&self, alphabet: &Alphabet, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.transpositions.is_empty() {
            return f.write_str("mir");
        }
        for (i, &(a, b)) in self.transpositions.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", alphabet.symbol(a), alphabet.symbol(b))?;
        }
        f.write_str(".mir")
    }
}

impl Classification {
    /// `|Idt| + 2 |Trn|`, which equals the alphabet size.
    pub fn weighted_size(&self) -> usize {
        self.idt.len() + 2 * self.trn.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digits(n: usize) -> Arc<Alphabet> {
        Arc::new(Alphabet::digits(n).unwrap())
    }

    #[test]
    fn make_involution_examples() {
        let wc = Involution::from_symbol_map(
            Arc::new(Alphabet::dna()),
            &[("A", "T"), ("T", "A"), ("C", "G"), ("G", "C")],
        )
        .unwrap();
        assert_eq!(wc, Involution::watson_crick());

        let id = Involution::new(digits(4), vec![0, 1, 2, 3]).unwrap();
        assert!(id.is_mirror());

        assert_eq!(
            Involution::new(digits(3), vec![1, 2, 0]),
            Err(Error::NotInvolutive("0".into()))
        );
        assert_eq!(Involution::new(digits(3), vec![1, 1, 0]), Err(Error::NotPermutation));
        assert_eq!(Involution::new(digits(3), vec![0, 1]), Err(Error::IncompleteMap));
        assert_eq!(
            Involution::from_symbol_map(digits(2), &[("0", "1")]),
            Err(Error::IncompleteMap)
        );
    }

    #[test]
    fn apply_examples() {
        let wc = Involution::watson_crick();
        let dna = Arc::clone(wc.alphabet());
        let w = Word::parse(&dna, "ACG").unwrap();
        assert_eq!(wc.apply(&w).unwrap().to_string(), "CGT");
        assert!(wc.apply(&Word::empty(dna)).unwrap().is_empty());

        let mir = Involution::mirror(digits(2));
        let w = Word::parse(&digits(2), "0110").unwrap();
        assert_eq!(mir.apply(&w).unwrap(), w);

        let other = Word::parse(&digits(2), "01").unwrap();
        assert_eq!(wc.apply(&other), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn decompose_examples() {
        assert!(Involution::mirror(digits(3)).decompose().transpositions.is_empty());
        let t = Involution::parse(digits(3), "(0,1).mir").unwrap();
        assert_eq!(t.decompose().transpositions, vec![(0, 1)]);
        let wc = Involution::watson_crick();
        // A=0 C=1 G=2 T=3
        assert_eq!(wc.decompose().transpositions, vec![(0, 3), (1, 2)]);
        assert_eq!(wc.to_string(), "(A,T),(C,G).mir");
    }

    #[test]
    fn classify_examples() {
        let c = Involution::mirror(digits(3)).classify();
        assert_eq!((c.idt, c.trn), (vec![0, 1, 2], vec![]));
        let c = Involution::watson_crick().classify();
        assert_eq!((c.idt.clone(), c.trn.clone()), (vec![], vec![0, 1]));
        assert_eq!(c.weighted_size(), 4);
        let c = Involution::parse(digits(3), "(0,1).mir").unwrap().classify();
        assert_eq!((c.idt.clone(), c.trn.clone()), (vec![2], vec![0]));
        assert_eq!(c.weighted_size(), 3);
    }

    #[test]
    fn parse_forms() {
        let s = digits(4);
        assert!(Involution::parse(Arc::clone(&s), "MIR").unwrap().is_mirror());
        let t = Involution::parse(Arc::clone(&s), " (1,0) , (2,3).MiR ").unwrap();
        assert_eq!(t.letter_map(), &[1, 0, 3, 2]);
        assert_eq!(t.to_string(), "(0,1),(2,3).mir");
        for bad in ["", "(0,1)", "(0,1),.mir", "(0,0).mir", "(0,1),(1,2).mir", "(0,9).mir", ".mir", "(0 1).mir", "(0,1)(2,3).mir"] {
            assert!(Involution::parse(Arc::clone(&s), bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn enumerate_counts_involutions() {
        // Telephone numbers: 1, 2, 4, 10, 26.
        for (n, count) in [(1, 1), (2, 2), (3, 4), (4, 10), (5, 26)] {
            let all = Involution::enumerate(digits(n));
            assert_eq!(all.len(), count);
            let uniq: std::collections::HashSet<_> = all.iter().collect();
            assert_eq!(uniq.len(), count);
        }
    }
}
