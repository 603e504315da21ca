//! Periodicity vectors of a word.
//!
//! * `rmp[i]`: half-length of the shortest square starting at position `i`.
//! * `lmp[i]`: half-length of the shortest square ending at position `i`.
//! * `cmp[g]`: largest `m` with `phi(w[g-m+1..g]) = w[g+1..g+m]`, indexed by
//!   gaps `0..=N`, where gap `g` sits between `w[g]` and `w[g+1]`.
//!
//! Positions are 1-based in the documentation; the returned vectors are
//! plain `Vec`s whose entry `i - 1` describes position `i` (and whose entry
//! `g` describes gap `g` for `cmp`). Missing squares are reported as
//! [`INFINITY`].
//!
//! `rmp`, `lmp`, and square/cube detection run in O(N log N) via the
//! divide-and-conquer window enumeration; `cmp` is a linear Manacher scan in
//! which mirrored letters are compared through `phi`.

use crate::alphabet::{Letter, Word};
use crate::error::Result;
use crate::involution::Involution;
use crate::repetition::{for_each_window, Window};

/// Marker for "no square here"; larger than any half-period.
pub const INFINITY: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicityProfile {
    pub word_len: usize,
    pub rmp: Vec<usize>,
    pub lmp: Vec<usize>,
    pub cmp: Vec<usize>,
}

impl PeriodicityProfile {
    pub fn compute(w: &Word, phi: &Involution) -> Result<Self> {
        let cmp = compute_cmp(w, phi)?;
        Ok(PeriodicityProfile {
            word_len: w.len(),
            rmp: compute_rmp(w),
            lmp: compute_lmp(w),
            cmp,
        })
    }
}

pub fn compute_rmp(w: &Word) -> Vec<usize> {
    rmp_letters(w.letters())
}

pub fn compute_lmp(w: &Word) -> Vec<usize> {
    lmp_letters(w.letters())
}

pub fn compute_cmp(w: &Word, phi: &Involution) -> Result<Vec<usize>> {
    w.same_alphabet(phi.alphabet())?;
    Ok(cmp_letters(w.letters(), phi.letter_map()))
}

/// Some square `(start, half_len)` (1-based start), or `None` if `w` is
/// square-free. The reported square is the leftmost one, with the shortest
/// half-length at that start.
pub fn has_square(w: &Word) -> Option<(usize, usize)> {
    square_letters(w.letters())
}

/// Some cube `(start, third_len)` (1-based start), or `None` if `w` is
/// cube-free; leftmost start, then shortest period.
pub fn has_cube(w: &Word) -> Option<(usize, usize)> {
    cube_letters(w.letters())
}

pub(crate) fn rmp_letters(s: &[Letter]) -> Vec<usize> {
    let n = s.len();
    let mut by_period: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n / 2 + 1];
    for_each_window(s, &mut |win: Window| {
        if let Some(range) = win.starts(2) {
            by_period[win.period].push(range);
        }
    });

    // Paint positions with periods in increasing order; `next[i]` skips
    // already-painted positions (path-halving union-find).
    let mut rmp = vec![INFINITY; n];
    let mut next: Vec<usize> = (0..=n).collect();
    fn find(next: &mut [usize], mut i: usize) -> usize {
        while next[i] != i {
            next[i] = next[next[i]];
            i = next[i];
        }
        i
    }
    for (period, ranges) in by_period.iter().enumerate() {
        for &(lo, hi) in ranges {
            let mut i = find(&mut next, lo);
            while i <= hi {
                rmp[i] = period;
                next[i] = i + 1;
                i = find(&mut next, i + 1);
            }
        }
    }
    rmp
}

pub(crate) fn lmp_letters(s: &[Letter]) -> Vec<usize> {
    let rev: Vec<Letter> = s.iter().rev().copied().collect();
    let mut v = rmp_letters(&rev);
    v.reverse();
    v
}

pub(crate) fn cmp_letters(s: &[Letter], phi: &[Letter]) -> Vec<usize> {
    let n = s.len();
    let mut cmp = vec![0usize; n + 1];
    // Even-centre Manacher: `cmp[i]` is the radius at the gap before s[i]
    // (0-based), and [l, r] is the rightmost phi-palindrome found so far.
    let (mut l, mut r) = (0usize, 0usize);
    let mut have = false;
    for i in 1..n {
        let mut k = if have && i <= r {
            cmp[l + r + 1 - i].min(r + 1 - i)
        } else {
            0
        };
        while i + k < n && k < i && s[i + k] == phi[s[i - k - 1] as usize] {
            k += 1;
        }
        cmp[i] = k;
        if k > 0 && (!have || i + k - 1 > r) {
            l = i - k;
            r = i + k - 1;
            have = true;
        }
    }
    cmp
}

pub(crate) fn square_letters(s: &[Letter]) -> Option<(usize, usize)> {
    rmp_letters(s)
        .into_iter()
        .enumerate()
        .find(|&(_, p)| p != INFINITY)
        .map(|(i, p)| (i + 1, p))
}

pub(crate) fn cube_letters(s: &[Letter]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for_each_window(s, &mut |win: Window| {
        if let Some((lo, _)) = win.starts(3) {
            if best.is_none_or(|b| (lo, win.period) < b) {
                best = Some((lo, win.period));
            }
        }
    });
    best.map(|(lo, p)| (lo + 1, p))
}
