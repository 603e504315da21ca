//! The doubling match-matrix detector for arbitrary exponents.
//!
//! Level `k` of the matrix records, for every pair of positions `(i, j)`,
//! whether the length-`2^k` blocks at `i` and `j` are equal (type 0) or
//! whether the block at `i` is the `phi`-image of the block at `j` (type 1):
//!
//! ```text
//! A[i][j][k][0] = A[i][j][k-1][0]   & A[i+h][j+h][k-1][0]     (h = 2^(k-1))
//! A[i][j][k][1] = A[i][j+h][k-1][1] & A[i+h][j][k-1][1]
//! ```
//!
//! The type-1 rule pairs the first half of the `i` block with the second half
//! of the `j` block and vice versa, since `phi` reverses. Rows are packed
//! 64 positions per word so each level is built with shifted word ANDs.
//!
//! From the matrix, `s_i[l] = 1` iff `w[l .. l+2i-1]` is a pseudo-square,
//! by splitting `i` into powers of two. A pseudo k-th power with blocks of
//! length `y` at `x` is then exactly a run of `k - 1` ones at stride `y` in
//! `s_y` starting at `x`.

use super::{check_exponent, make_hit, PseudoPowerHit};
use crate::alphabet::Word;
use crate::error::{Error, Result};
use crate::involution::Involution;

/// Longest word accepted by the matrix detector; all `lg N` levels are kept
/// in memory (about 54 MB at the cap).
pub const MATRIX_CAP: usize = 4096;

#[derive(Clone, Debug)]
pub struct MatchMatrix {
    n: usize,
    levels: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl MatchMatrix {
    /// Word length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `floor(lg n) + 1`, or 0 for the empty word.
    pub fn levels(&self) -> usize {
        self.levels
    }

    #[inline]
    fn row_offset(&self, level: usize, phi: bool, i: usize) -> usize {
        ((level * 2 + phi as usize) * self.n + i) * self.stride
    }

    #[inline]
    fn bit(&self, level: usize, phi: bool, i: usize, j: usize) -> bool {
        let w = self.bits[self.row_offset(level, phi, i) + j / 64];
        (w >> (j % 64)) & 1 == 1
    }

    /// `A[i][j][level][t]` with 1-based positions; `phi = false` is type 0.
    /// Out-of-range entries read as `false`.
    pub fn get(&self, i: usize, j: usize, level: usize, phi: bool) -> bool {
        if i == 0 || j == 0 || i > self.n || j > self.n || level >= self.levels {
            return false;
        }
        self.bit(level, phi, i - 1, j - 1)
    }
}

/// Fills every level of the match matrix for `w` under `phi`.
pub fn build_match_matrix(w: &Word, phi: &Involution) -> Result<MatchMatrix> {
    w.same_alphabet(phi.alphabet())?;
    let n = w.len();
    if n > MATRIX_CAP {
        return Err(Error::TooLong {
            len: n,
            cap: MATRIX_CAP,
        });
    }
    let levels = if n == 0 { 0 } else { n.ilog2() as usize + 1 };
    let stride = n.div_ceil(64);
    let mut m = MatchMatrix {
        n,
        levels,
        stride,
        bits: vec![0; levels * 2 * n * stride],
    };
    if n == 0 {
        return Ok(m);
    }
    let (s, map) = (w.letters(), phi.letter_map());

    // Level 0: single letters. Bucket positions by letter so each row is the
    // OR-free copy of a precomputed letter mask.
    let size = w.alphabet().size();
    let mut masks = vec![0u64; size * stride];
    for (j, &a) in s.iter().enumerate() {
        masks[a as usize * stride + j / 64] |= 1 << (j % 64);
    }
    for (i, &a) in s.iter().enumerate() {
        let eq = a as usize * stride;
        let o = m.row_offset(0, false, i);
        m.bits[o..o + stride].copy_from_slice(&masks[eq..eq + stride]);
        // w[i] = phi(w[j])  <=>  w[j] = phi(w[i])
        let ph = map[a as usize] as usize * stride;
        let o = m.row_offset(0, true, i);
        m.bits[o..o + stride].copy_from_slice(&masks[ph..ph + stride]);
    }

    let mut shifted = vec![0u64; stride];
    for level in 1..levels {
        let h = 1usize << (level - 1);
        let rows = n + 1 - (1 << level);
        for i in 0..rows {
            // type 0: row(i) & (row(i+h) >> h)
            let src = m.row_offset(level - 1, false, i + h);
            shift_down(&m.bits[src..src + stride], h, &mut shifted);
            let a = m.row_offset(level - 1, false, i);
            let dst = m.row_offset(level, false, i);
            for (t, &bits) in shifted.iter().enumerate() {
                m.bits[dst + t] = m.bits[a + t] & bits;
            }
            // type 1: (row(i) >> h) & row(i+h)
            let src = m.row_offset(level - 1, true, i);
            shift_down(&m.bits[src..src + stride], h, &mut shifted);
            let b = m.row_offset(level - 1, true, i + h);
            let dst = m.row_offset(level, true, i);
            for (t, &bits) in shifted.iter().enumerate() {
                m.bits[dst + t] = m.bits[b + t] & bits;
            }
        }
    }
    Ok(m)
}

/// `out[j] = src[j + by]` on packed bit rows.
fn shift_down(src: &[u64], by: usize, out: &mut [u64]) {
    let (words, bits) = (by / 64, by % 64);
    for (t, o) in out.iter_mut().enumerate() {
        let lo = src.get(t + words).copied().unwrap_or(0);
        let hi = src.get(t + words + 1).copied().unwrap_or(0);
        *o = if bits == 0 {
            lo
        } else {
            (lo >> bits) | (hi << (64 - bits))
        };
    }
}

/// `s_half[l] = 1` iff `w[l .. l + 2*half - 1]` is a pseudo-square, for
/// `l = 1 ..= N - 2*half + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoSquareBitmap {
    pub half: usize,
    pub bits: Vec<bool>,
}

impl PseudoSquareBitmap {
    /// Bit at 1-based position `l`; `false` outside `1 ..= N - 2*half + 1`.
    pub fn get(&self, l: usize) -> bool {
        l.checked_sub(1)
            .and_then(|i| self.bits.get(i))
            .copied()
            .unwrap_or(false)
    }
}

/// The bitmaps `s_1 ..= s_{N/2}` together with the word they describe.
#[derive(Clone, Debug)]
pub struct SquareBitmaps {
    pub word: Word,
    pub phi: Involution,
    pub maps: Vec<PseudoSquareBitmap>,
}

impl SquareBitmaps {
    /// `s_half`, for `1 <= half <= N/2`.
    pub fn bitmap(&self, half: usize) -> Option<&PseudoSquareBitmap> {
        half.checked_sub(1).and_then(|i| self.maps.get(i))
    }
}

/// Derives `s_i` for every half-length `i` from the match matrix.
pub fn build_bitmaps(a: &MatchMatrix, w: &Word, phi: &Involution) -> Result<SquareBitmaps> {
    w.same_alphabet(phi.alphabet())?;
    if a.n() != w.len() {
        return Err(Error::BadSetting(format!(
            "match matrix built for length {}, word has length {}",
            a.n(),
            w.len()
        )));
    }
    let n = w.len();
    let maps = (1..=n / 2)
        .map(|half| {
            // Powers of two summing to `half`, largest first, with the
            // offset of each piece inside the half.
            let pieces: Vec<(usize, usize)> = {
                let mut off = 0;
                (0..usize::BITS as usize)
                    .rev()
                    .filter(|b| half >> b & 1 == 1)
                    .map(|b| {
                        let piece = (b, off);
                        off += 1 << b;
                        piece
                    })
                    .collect()
            };
            let bits = (0..=n - 2 * half)
                .map(|l| {
                    let equal = pieces
                        .iter()
                        .all(|&(b, off)| a.bit(b, false, l + off, l + half + off));
                    equal
                        || pieces.iter().all(|&(b, off)| {
                            a.bit(b, true, l + off, l + 2 * half - off - (1 << b))
                        })
                })
                .collect();
            PseudoSquareBitmap { half, bits }
        })
        .collect();
    Ok(SquareBitmaps {
        word: w.clone(),
        phi: phi.clone(),
        maps,
    })
}

/// Every pseudo k-th power certified by the bitmaps, sorted by
/// `(start, block_len)`. Block tags are recovered by comparing each block
/// with the first.
pub fn find_k_powers(bitmaps: &SquareBitmaps, k: usize) -> Result<Vec<PseudoPowerHit>> {
    check_exponent(k)?;
    let s = bitmaps.word.letters();
    let map = bitmaps.phi.letter_map();
    let n = s.len();
    let need = k - 1;
    let mut keys = Vec::new();
    for sm in &bitmaps.maps {
        let y = sm.half;
        if k * y > n {
            continue;
        }
        for residue in 0..y.min(sm.bits.len()) {
            let mut run = 0;
            for (q, &bit) in sm.bits.iter().enumerate().skip(residue).step_by(y) {
                run = if bit { run + 1 } else { 0 };
                if run >= need {
                    keys.push((q - (need - 1) * y, y));
                }
            }
        }
    }
    keys.sort_unstable();
    Ok(keys
        .into_iter()
        .map(|(start, y)| make_hit(s, map, start, y, k))
        .collect())
}

/// Matrix, bitmaps, then all k-th powers.
pub fn matrix_find(w: &Word, phi: &Involution, k: usize) -> Result<Vec<PseudoPowerHit>> {
    check_exponent(k)?;
    let a = build_match_matrix(w, phi)?;
    let bitmaps = build_bitmaps(&a, w, phi)?;
    find_k_powers(&bitmaps, k)
}
