use super::{make_hit, PseudoPowerHit};
use crate::alphabet::Word;
use crate::error::Result;
use crate::involution::Involution;
use crate::alphabet::Letter;
use crate::periodicity::{cmp_letters, square_letters};

/// Decides pseudo-square-freeness: `w` contains a pseudo-square iff it
/// contains a square or two adjacent letters `a phi(a)` (the centre of any
/// `u phi(u)`).
///
/// Returns `None` when `w` is free. Otherwise the occurrence with the
/// leftmost start and, at that start, the shortest block, which is the
/// occurrence the naive scan finds first. Squares come from the shortest
/// square vector and the `u phi(u)` factors from the centred
/// pseudo-palindrome radii, so the whole check stays O(N log N).
pub fn is_pseudo_square_free(w: &Word, phi: &Involution) -> Result<Option<PseudoPowerHit>> {
    w.same_alphabet(phi.alphabet())?;
    let (s, map) = (w.letters(), phi.letter_map());
    let adjacent = s.windows(2).any(|p| p[1] == map[p[0] as usize]);
    let square = square_letters(s).map(|(start, half)| (start - 1, half));
    let palindrome = if adjacent { leftmost_pseudo_palindrome(s, map) } else { None };
    let best = match (square, palindrome) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    Ok(best.map(|(start, y)| make_hit(s, map, start, y, 2)))
}

/// Leftmost `u phi(u)` factor as `(0-based start, |u|)`, shortest `u` first.
fn leftmost_pseudo_palindrome(s: &[Letter], map: &[Letter]) -> Option<(usize, usize)> {
    let cmp = cmp_letters(s, map);
    let start = (1..s.len()).filter(|&g| cmp[g] > 0).map(|g| g - cmp[g]).min()?;
    (start + 1..s.len())
        .find(|&g| cmp[g] >= g - start)
        .map(|g| (start, g - start))
}
