//! Pseudo-power detection.
//!
//! Four deciders are provided, all agreeing on every input:
//!
//! | algorithm   | exponents | cost          | module     |
//! |-------------|-----------|---------------|------------|
//! | `Naive`     | any `k`   | O(N^3)        | [`naive`]  |
//! | `Matrix`    | any `k`   | O(N^2 lg N)   | [`matrix`] |
//! | `Linear`    | `k = 2`   | O(N log N)    | [`square`] |
//! | `Quadratic` | `k = 3`   | O(N^2)        | [`cube`]   |
//!
//! `Linear` is bounded by the square test, which here is the O(N log N)
//! divide-and-conquer enumeration rather than a suffix-tree method.

use std::fmt;
use std::str::FromStr;

use crate::alphabet::{Letter, Word};
use crate::error::{Error, Result};
use crate::involution::Involution;

pub mod cube;
pub mod matrix;
pub mod naive;
pub mod square;

pub use cube::is_pseudo_cube_free;
pub use matrix::{
    build_bitmaps, build_match_matrix, find_k_powers, matrix_find, MatchMatrix, PseudoSquareBitmap,
    SquareBitmaps, MATRIX_CAP,
};
pub use naive::{naive_find, naive_first};
pub use square::is_pseudo_square_free;

/// How block `u_i` relates to `u_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Same,
    Phi,
}

impl Tag {
    pub fn name(self) -> &'static str {
        match self {
            Tag::Same => "same",
            Tag::Phi => "phi",
        }
    }
}

/// An occurrence `w[start .. start + k*block_len - 1]` (1-based) of a pseudo
/// k-th power. When a block equals both `u_1` and `phi(u_1)` it is tagged
/// `Same`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PseudoPowerHit {
    pub start: usize,
    pub block_len: usize,
    pub k: usize,
    pub pattern: Vec<Tag>,
}

impl PseudoPowerHit {
    pub fn len(&self) -> usize {
        self.k * self.block_len
    }

    pub fn is_empty(&self) -> bool {
        self.block_len == 0
    }

    /// The `(start, block_len)` key used to compare hit sets.
    pub fn key(&self) -> (usize, usize) {
        (self.start, self.block_len)
    }
}

impl fmt::Display for PseudoPowerHit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "start={} block={} k={} pattern=", self.start, self.block_len, self.k)?;
        for (i, t) in self.pattern.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(t.name())?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Algorithm {
    /// `Linear` for k = 2, `Quadratic` for k = 3, otherwise `Matrix` up to
    /// [`MATRIX_CAP`] letters and `Naive` beyond.
    #[default]
    Auto,
    Naive,
    Matrix,
    Linear,
    Quadratic,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Naive => "naive",
            Algorithm::Matrix => "matrix",
            Algorithm::Linear => "linear",
            Algorithm::Quadratic => "quadratic",
        }
    }

    /// Picks the concrete decider for exponent `k` and word length `len`.
    pub fn resolve(self, k: usize, len: usize) -> Result<Algorithm> {
        check_exponent(k)?;
        match self {
            Algorithm::Auto => Ok(match k {
                2 => Algorithm::Linear,
                3 => Algorithm::Quadratic,
                _ if len <= MATRIX_CAP => Algorithm::Matrix,
                _ => Algorithm::Naive,
            }),
            Algorithm::Linear if k != 2 => Err(Error::BadSetting(format!(
                "the linear algorithm decides squares only (k = 2), got k = {k}"
            ))),
            Algorithm::Quadratic if k != 3 => Err(Error::BadSetting(format!(
                "the quadratic algorithm decides cubes only (k = 3), got k = {k}"
            ))),
            other => Ok(other),
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Algorithm::Auto,
            Algorithm::Naive,
            Algorithm::Matrix,
            Algorithm::Linear,
            Algorithm::Quadratic,
        ]
        .into_iter()
        .find(|a| a.name().eq_ignore_ascii_case(s))
        .ok_or_else(|| Error::Parse(format!("unknown algorithm `{s}`")))
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Some pseudo k-th power occurring in `w`, or `None` if `w` is
/// pseudo-k-th-power-free.
pub fn first_hit(
    w: &Word,
    phi: &Involution,
    k: usize,
    algorithm: Algorithm,
) -> Result<Option<PseudoPowerHit>> {
    w.same_alphabet(phi.alphabet())?;
    match algorithm.resolve(k, w.len())? {
        Algorithm::Linear => is_pseudo_square_free(w, phi),
        Algorithm::Quadratic => is_pseudo_cube_free(w, phi),
        Algorithm::Matrix => Ok(matrix_find(w, phi, k)?.into_iter().next()),
        Algorithm::Naive | Algorithm::Auto => naive_first(w, phi, k),
    }
}

/// Every pseudo k-th power occurrence, sorted by `(start, block_len)`.
/// Only the naive and matrix algorithms enumerate; `Auto` picks the matrix
/// method up to [`MATRIX_CAP`] letters.
pub fn find_all(
    w: &Word,
    phi: &Involution,
    k: usize,
    algorithm: Algorithm,
) -> Result<Vec<PseudoPowerHit>> {
    check_exponent(k)?;
    match algorithm {
        Algorithm::Naive => naive_find(w, phi, k),
        Algorithm::Matrix => matrix_find(w, phi, k),
        Algorithm::Auto if w.len() <= MATRIX_CAP => matrix_find(w, phi, k),
        Algorithm::Auto => naive_find(w, phi, k),
        other => Err(Error::BadSetting(format!(
            "the {other} algorithm reports a single occurrence; use naive or matrix to list all"
        ))),
    }
}

/// True iff `|w|` is a multiple of `k` and the `k` equal-length blocks have
/// identical letter counts.
pub fn is_abelian_k_power(w: &Word, k: usize) -> Result<bool> {
    check_exponent(k)?;
    let s = w.letters();
    if s.is_empty() || !s.len().is_multiple_of(k) {
        return Ok(false);
    }
    let size = w.alphabet().size();
    let counts = |block: &[Letter]| {
        let mut c = vec![0usize; size];
        for &a in block {
            c[a as usize] += 1;
        }
        c
    };
    let mut blocks = s.chunks(s.len() / k);
    let first = counts(blocks.next().expect("k >= 2 blocks"));
    Ok(blocks.all(|b| counts(b) == first))
}

pub(crate) fn check_exponent(k: usize) -> Result<()> {
    if k < 2 {
        Err(Error::BadExponent(k))
    } else {
        Ok(())
    }
}

/// `s[a .. a+len] == phi(s[b .. b+len])`.
#[inline]
pub(crate) fn phi_equal(s: &[Letter], phi: &[Letter], a: usize, b: usize, len: usize) -> bool {
    (0..len).all(|t| s[a + t] == phi[s[b + len - 1 - t] as usize])
}

/// Tags for the `k` blocks of length `y` starting at 0-based `start`, or
/// `None` if some block is neither `u_1` nor `phi(u_1)`.
pub(crate) fn block_pattern(
    s: &[Letter],
    phi: &[Letter],
    start: usize,
    y: usize,
    k: usize,
) -> Option<Vec<Tag>> {
    let mut pattern = Vec::with_capacity(k);
    pattern.push(Tag::Same);
    for i in 1..k {
        let b = start + i * y;
        if s[start..start + y] == s[b..b + y] {
            pattern.push(Tag::Same);
        } else if phi_equal(s, phi, b, start, y) {
            pattern.push(Tag::Phi);
        } else {
            return None;
        }
    }
    Some(pattern)
}

/// Builds a hit from a 0-based start already known to be a pseudo power.
pub(crate) fn make_hit(s: &[Letter], phi: &[Letter], start: usize, y: usize, k: usize) -> PseudoPowerHit {
    let pattern = block_pattern(s, phi, start, y, k).expect("certified pseudo power");
    PseudoPowerHit {
        start: start + 1,
        block_len: y,
        k,
        pattern,
    }
}
