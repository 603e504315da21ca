//! Divide-and-conquer enumeration of periodic windows (Main-Lorentz).
//!
//! For a segment split at `m`, every square or cube lying inside the segment
//! and crossing `m` has its run of matching positions `s[x] == s[x+p]`
//! containing either `m` or `m - p`. Extending around both anchors with
//! Z-functions yields, per period, at most two windows per split, so the
//! whole recursion reports O(n log n) windows in O(n log n) time.

use crate::alphabet::Letter;

/// A maximal (within its recursion segment) interval `[lo, hi)` of
/// positions `x` with `s[x] == s[x + period]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Window {
    pub period: usize,
    pub lo: usize,
    pub hi: usize,
}

impl Window {
    /// 0-based starts of repetitions `x^reps` with `|x| = period`, inclusive.
    pub fn starts(&self, reps: usize) -> Option<(usize, usize)> {
        let span = (reps - 1) * self.period;
        (self.hi >= self.lo + span).then(|| (self.lo, self.hi - span))
    }
}

const SEP: u16 = u16::MAX;

pub(crate) fn z_function<T: Eq>(s: &[T]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0, 0);
    for i in 1..n {
        if i < r {
            z[i] = (r - i).min(z[i - l]);
        }
        while i + z[i] < n && s[z[i]] == s[i + z[i]] {
            z[i] += 1;
        }
        if i + z[i] > r {
            l = i;
            r = i + z[i];
        }
    }
    z
}

fn joined(a: impl Iterator<Item = Letter>, b: impl Iterator<Item = Letter>) -> Vec<u16> {
    a.map(u16::from)
        .chain(std::iter::once(SEP))
        .chain(b.map(u16::from))
        .collect()
}

/// Calls `visit` for every window found by the recursion.
pub(crate) fn for_each_window(s: &[Letter], visit: &mut impl FnMut(Window)) {
    recurse(s, 0, visit);
}

fn recurse(s: &[Letter], offset: usize, visit: &mut impl FnMut(Window)) {
    let n = s.len();
    if n < 2 {
        return;
    }
    let m = n / 2;
    recurse(&s[..m], offset, visit);
    recurse(&s[m..], offset + m, visit);

    let (u, v) = s.split_at(m);
    let z_v = z_function(v);
    let z_ru = z_function(&u.iter().rev().copied().collect::<Vec<_>>());
    // lcp(v, s[j..]) at index v.len() + 1 + j
    let z_vs = z_function(&joined(v.iter().copied(), s.iter().copied()));
    // lcp(rev u, rev s[rj..]) at index m + 1 + rj
    let z_rurs = z_function(&joined(u.iter().rev().copied(), s.iter().rev().copied()));

    let mut emit = |period: usize, anchor: usize, back: usize, ahead: usize| {
        let (lo, hi) = (anchor - back, anchor + ahead);
        if hi - lo >= period {
            visit(Window {
                period,
                lo: offset + lo,
                hi: offset + hi,
            });
        }
    };

    // Anchor at m: the run of period p passes through the split point.
    for p in 1..=v.len() {
        let ahead = if p < v.len() { z_v[p] } else { 0 };
        let back = z_rurs[m + 1 + (n - m - p)];
        emit(p, m, back, ahead);
    }
    // Anchor at m - p: the run passes through the position one period back.
    for p in 1..=m {
        let back = if p < m { z_ru[p] } else { 0 };
        let ahead = z_vs[v.len() + 1 + (m - p)];
        emit(p, m - p, back, ahead);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_function_basic() {
        assert_eq!(z_function(b"aabxaab"), vec![7, 1, 0, 0, 3, 1, 0]);
        assert_eq!(z_function::<u8>(&[]), Vec::<usize>::new());
    }

    #[test]
    fn windows_are_sound_and_complete_for_squares() {
        // Every reported window is a genuine run, and every square of every
        // word over {0,1} up to length 12 lies in some reported window.
        for n in 0..=12usize {
            for code in 0..(1u32 << n) {
                let s: Vec<Letter> = (0..n).map(|i| ((code >> i) & 1) as Letter).collect();
                let mut windows = Vec::new();
                for_each_window(&s, &mut |w| windows.push(w));
                for w in &windows {
                    assert!(w.hi + w.period <= n);
                    assert!((w.lo..w.hi).all(|x| s[x] == s[x + w.period]));
                }
                for p in 1..=n / 2 {
                    for a in 0..=n - 2 * p {
                        if s[a..a + p] == s[a + p..a + 2 * p] {
                            assert!(windows.iter().any(|w| w.period == p
                                && w.starts(2).is_some_and(|(lo, hi)| lo <= a && a <= hi)));
                        }
                    }
                }
            }
        }
    }
}
