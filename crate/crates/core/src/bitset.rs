//! Fixed-width bitsets over `Z/nZ` with cyclic rotation.
//!
//! Rotation by `s` maps element `x` to `(x + s) mod n`, which turns a sumset
//! `X + Y` into the OR of `X` rotated by every `y` in `Y`.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bitset {
    len: usize,
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    /// Builds a set from residues; panics if any element is `>= len`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(len: usize, elements: I) -> Self {
        let mut s = Self::new(len);
        for x in elements {
            s.insert(x);
        }
        s
    }

    /// Universe size `n`.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, x: usize) {
        assert!(x < self.len, "element {x} out of range 0..{}", self.len);
        self.words[x / WORD] |= 1 << (x % WORD);
    }

    pub fn remove(&mut self, x: usize) {
        assert!(x < self.len, "element {x} out of range 0..{}", self.len);
        self.words[x / WORD] &= !(1 << (x % WORD));
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.len && self.words[x / WORD] >> (x % WORD) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn min(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD + t)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &Bitset) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &Bitset) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Bitset) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Bitset) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection_count(&self, other: &Bitset) -> usize {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `{(x + shift) mod n : x in self}`.
    pub fn rotated(&self, shift: usize) -> Bitset {
        let mut out = Bitset::new(self.len);
        self.rotate_into(shift, &mut out);
        out
    }

    /// ORs the rotation of `self` by `shift` into `acc` without allocating.
    pub fn or_rotated_into(&self, shift: usize, acc: &mut Bitset) {
        assert_eq!(self.len, acc.len);
        if self.len == 0 {
            return;
        }
        let s = shift % self.len;
        // Bits below n - s move up by s; the rest wrap to the bottom.
        self.shift_up_or(s, self.len - s, acc);
        self.shift_down_or(self.len - s, acc);
    }

    fn rotate_into(&self, shift: usize, out: &mut Bitset) {
        out.words.iter_mut().for_each(|w| *w = 0);
        self.or_rotated_into(shift, out);
    }

    /// ORs `{x + s : x in self, x < limit}` into `acc`.
    fn shift_up_or(&self, s: usize, limit: usize, acc: &mut Bitset) {
        let ws = s / WORD;
        let bs = s % WORD;
        let full = limit / WORD;
        let rem = limit % WORD;
        let src_words = full + usize::from(rem > 0);
        for i in 0..src_words {
            let mut w = self.words[i];
            if i == full {
                w &= (1u64 << rem) - 1;
            }
            if w == 0 {
                continue;
            }
            let lo = i + ws;
            if lo < acc.words.len() {
                acc.words[lo] |= w << bs;
            }
            if bs > 0 && lo + 1 < acc.words.len() {
                acc.words[lo + 1] |= w >> (WORD - bs);
            }
        }
    }

    /// ORs `{x - s : x in self, x >= s}` into `acc`.
    fn shift_down_or(&self, s: usize, acc: &mut Bitset) {
        let ws = s / WORD;
        let bs = s % WORD;
        for (j, out) in acc.words.iter_mut().enumerate() {
            let i = j + ws;
            if i >= self.words.len() {
                break;
            }
            let mut w = self.words[i] >> bs;
            if bs > 0 && i + 1 < self.words.len() {
                w |= self.words[i + 1] << (WORD - bs);
            }
            *out |= w;
        }
    }
}

impl fmt::Debug for Bitset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
