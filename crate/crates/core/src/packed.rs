/// Fixed-width colour store: 1 bit per entry for two colours, 2 bits for three.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PackedColours {
    width: u8,
    len: usize,
    words: Vec<u64>,
}

impl PackedColours {
    pub fn new(palette: u8, len: usize) -> PackedColours {
        let width = if palette <= 2 { 1 } else { 2 };
        let per_word = 64 / width as usize;
        PackedColours {
            width,
            len,
            words: vec![0; len.div_ceil(per_word)],
        }
    }

    /// Builds a one-bit store from raw words; bits past `len` are cleared.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> PackedColours {
        words.resize(len.div_ceil(64), 0);
        if !len.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (len % 64)) - 1;
            }
        }
        PackedColours { width: 1, len, words }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn width(&self) -> u8 {
        self.width
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        debug_assert!(i < self.len);
        match self.width {
            1 => ((self.words[i >> 6] >> (i & 63)) & 1) as u8,
            _ => ((self.words[i >> 5] >> ((i & 31) * 2)) & 3) as u8,
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: u8) {
        debug_assert!(i < self.len);
        match self.width {
            1 => {
                let mask = 1u64 << (i & 63);
                if value & 1 == 1 {
                    self.words[i >> 6] |= mask;
                } else {
                    self.words[i >> 6] &= !mask;
                }
            }
            _ => {
                let shift = (i & 31) * 2;
                let w = &mut self.words[i >> 5];
                *w = (*w & !(3u64 << shift)) | (((value & 3) as u64) << shift);
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Number of entries holding `value`.
    pub fn count(&self, value: u8) -> usize {
        if self.width == 1 {
            let ones: usize = self.words.iter().map(|w| w.count_ones() as usize).sum();
            if value == 1 {
                ones
            } else {
                self.len - ones
            }
        } else {
            self.iter().filter(|&v| v == value).count()
        }
    }
}
