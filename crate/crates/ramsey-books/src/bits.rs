//! Fixed-width 512-bit masks. Every vertex set and adjacency row in the
//! crate is one of these, so set algebra is straight word arithmetic with
//! no length bookkeeping.

pub(crate) const WORDS: usize = 8;
pub(crate) const CAPACITY: usize = WORDS * 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub(crate) struct Mask(pub [u64; WORDS]);

impl Mask {
    pub fn empty() -> Mask {
        Mask([0; WORDS])
    }

    /// Mask with bits 0..n set. n <= CAPACITY.
    pub fn first_n(n: usize) -> Mask {
        debug_assert!(n <= CAPACITY);
        let mut m = Mask::empty();
        let full = n / 64;
        for w in 0..full {
            m.0[w] = !0;
        }
        if full < WORDS && !n.is_multiple_of(64) {
            m.0[full] = (1u64 << (n % 64)) - 1;
        }
        m
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1u64 << (i % 64));
    }

    #[inline]
    pub fn test(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 != 0
    }

    #[inline]
    pub fn and(&self, other: &Mask) -> Mask {
        let mut out = *self;
        for w in 0..WORDS {
            out.0[w] &= other.0[w];
        }
        out
    }

    #[inline]
    pub fn or(&self, other: &Mask) -> Mask {
        let mut out = *self;
        for w in 0..WORDS {
            out.0[w] |= other.0[w];
        }
        out
    }

    #[inline]
    pub fn and_not(&self, other: &Mask) -> Mask {
        let mut out = *self;
        for w in 0..WORDS {
            out.0[w] &= !other.0[w];
        }
        out
    }

    #[inline]
    pub fn and_in_place(&mut self, other: &Mask) {
        for w in 0..WORDS {
            self.0[w] &= other.0[w];
        }
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &Mask) -> bool {
        (0..WORDS).any(|w| self.0[w] & other.0[w] != 0)
    }

    pub fn is_subset_of(&self, other: &Mask) -> bool {
        (0..WORDS).all(|w| self.0[w] & !other.0[w] == 0)
    }

    /// Number of set bits at index >= from.
    pub fn count_from(&self, from: usize) -> usize {
        if from >= CAPACITY {
            return 0;
        }
        let w = from / 64;
        let mut total = (self.0[w] & (!0u64).wrapping_shl((from % 64) as u32)).count_ones();
        for word in &self.0[w + 1..] {
            total += word.count_ones();
        }
        total as usize
    }

    /// Smallest set bit at index >= from, if any.
    pub fn next_one(&self, from: usize) -> Option<usize> {
        if from >= CAPACITY {
            return None;
        }
        let mut w = from / 64;
        let mut cur = self.0[w] & (!0u64).wrapping_shl((from % 64) as u32);
        loop {
            if cur != 0 {
                return Some(w * 64 + cur.trailing_zeros() as usize);
            }
            w += 1;
            if w == WORDS {
                return None;
            }
            cur = self.0[w];
        }
    }

    pub fn ones(&self) -> Ones {
        Ones {
            mask: *self,
            pos: 0,
        }
    }
}

pub(crate) struct Ones {
    mask: Mask,
    pos: usize,
}

impl Iterator for Ones {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let i = self.mask.next_one(self.pos)?;
        self.pos = i + 1;
        Some(i)
    }
}
