use super::{make_hit, PseudoPowerHit};
use crate::alphabet::Word;
use crate::error::Result;
use crate::involution::Involution;
use crate::periodicity::{cmp_letters, cube_letters, lmp_letters, rmp_letters};

/// Decides pseudo-cube-freeness in O(N^2).
///
/// A pseudo-cube has one of the shapes `xxx`, `phi(x)xx`, `xx phi(x)` or
/// `x phi(x) x`. The first is a plain cube. The other three are an
/// overlap of a square with a centred pseudo-palindrome, or of two centred
/// pseudo-palindromes, and are read off `rmp`, `lmp` and the gap-indexed
/// `cmp`:
///
/// * `phi(x)xx`: `rmp[i] <= cmp[gap i-1]`
/// * `xx phi(x)`: `lmp[i] <= cmp[gap i]`
/// * `x phi(x) x`: `d <= cmp[gap i]` and `d <= cmp[gap i+d]`
///
/// The reported occurrence is the first one found in that order and may
/// differ from a particular pseudo-cube embedded in `w`.
pub fn is_pseudo_cube_free(w: &Word, phi: &Involution) -> Result<Option<PseudoPowerHit>> {
    w.same_alphabet(phi.alphabet())?;
    let (s, map) = (w.letters(), phi.letter_map());
    let n = s.len();

    if let Some((start, p)) = cube_letters(s) {
        return Ok(Some(make_hit(s, map, start - 1, p, 3)));
    }
    let rmp = rmp_letters(s);
    let lmp = lmp_letters(s);
    let cmp = cmp_letters(s, map);

    // 0-based position i is 1-based position i+1; with 1-based gaps,
    // gap(i+1) - 1 = i and gap(i+1) = i + 1.
    for i in 0..n {
        if rmp[i] <= cmp[i] {
            let y = rmp[i];
            return Ok(Some(make_hit(s, map, i - y, y, 3)));
        }
        if lmp[i] <= cmp[i + 1] {
            let y = lmp[i];
            return Ok(Some(make_hit(s, map, i + 1 - 2 * y, y, 3)));
        }
        for d in 1..=cmp[i + 1] {
            if d <= cmp[i + 1 + d] {
                return Ok(Some(make_hit(s, map, i + 1 - d, d, 3)));
            }
        }
    }
    Ok(None)
}
