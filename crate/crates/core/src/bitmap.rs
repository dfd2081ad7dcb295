//! Fixed-width bitmap with a word-aligned shift-or kernel.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bitmap {
    words: Vec<u64>,
    len: usize,
}

impl Bitmap {
    pub fn new(len: usize) -> Self {
        Self { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} outside bitmap of {} bits", self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `self |= src << shift`, reading only the first `live_words` words of `src`.
    ///
    /// The caller guarantees no set bit of `src` lands at or beyond `self.len()`.
    pub fn or_shifted(&mut self, src: &Bitmap, shift: usize, live_words: usize) {
        let ws = shift / 64;
        let bs = shift % 64;
        let live = live_words.min(src.words.len());
        let dst = &mut self.words;
        if bs == 0 {
            for (w, &s) in src.words[..live].iter().enumerate() {
                if s != 0 {
                    dst[w + ws] |= s;
                }
            }
        } else {
            for (w, &s) in src.words[..live].iter().enumerate() {
                if s == 0 {
                    continue;
                }
                dst[w + ws] |= s << bs;
                let carry = s >> (64 - bs);
                if carry != 0 {
                    dst[w + ws + 1] |= carry;
                }
            }
        }
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + tz)
            })
        })
    }
}
