//! Direct enumeration of every candidate factor.

use super::{block_pattern, check_exponent, PseudoPowerHit};
use crate::alphabet::{Letter, Word};
use crate::error::Result;
use crate::involution::Involution;

/// Every pseudo k-th power occurrence in `w`, sorted by `(start, block_len)`.
pub fn naive_find(w: &Word, phi: &Involution, k: usize) -> Result<Vec<PseudoPowerHit>> {
    check_exponent(k)?;
    w.same_alphabet(phi.alphabet())?;
    let (s, map) = (w.letters(), phi.letter_map());
    let n = s.len();
    let mut hits = Vec::new();
    for start in 0..n {
        for y in 1..=(n - start) / k {
            if let Some(pattern) = block_pattern(s, map, start, y, k) {
                hits.push(PseudoPowerHit {
                    start: start + 1,
                    block_len: y,
                    k,
                    pattern,
                });
            }
        }
    }
    Ok(hits)
}

/// The first occurrence in `(start, block_len)` order, stopping early.
pub fn naive_first(w: &Word, phi: &Involution, k: usize) -> Result<Option<PseudoPowerHit>> {
    check_exponent(k)?;
    w.same_alphabet(phi.alphabet())?;
    let (s, map) = (w.letters(), phi.letter_map());
    let n = s.len();
    for start in 0..n {
        for y in 1..=(n - start) / k {
            if let Some(pattern) = block_pattern(s, map, start, y, k) {
                return Ok(Some(PseudoPowerHit {
                    start: start + 1,
                    block_len: y,
                    k,
                    pattern,
                }));
            }
        }
    }
    Ok(None)
}

/// A pseudo k-th power that is a suffix of `s`, as `(0-based start, y)`;
/// the shortest one is reported.
pub(crate) fn suffix_hit(s: &[Letter], phi: &[Letter], k: usize) -> Option<(usize, usize)> {
    let n = s.len();
    (1..=n / k)
        .map(|y| (n - k * y, y))
        .find(|&(start, y)| block_pattern(s, phi, start, y, k).is_some())
}
