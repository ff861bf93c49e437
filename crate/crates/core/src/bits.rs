//! Append-only bit strings with fixed-width big-endian fields.

use std::fmt;

/// A sequence of bits, packed most-significant-bit first into bytes.
/// Pad bits past `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitString {
    bytes: Vec<u8>,
    len: usize,
}

impl BitString {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        BitString {
            bytes: Vec::with_capacity(bits.div_ceil(8)),
            len: 0,
        }
    }

    /// Rebuilds a bit string from packed bytes. Returns `None` when `bytes`
    /// is too short for `len` or has non-zero pad bits.
    pub fn from_bytes(bytes: Vec<u8>, len: usize) -> Option<Self> {
        if bytes.len() != len.div_ceil(8) {
            return None;
        }
        let pad = bytes.len() * 8 - len;
        if pad > 0 && bytes.last().is_some_and(|&b| b & ((1u8 << pad) - 1) != 0) {
            return None;
        }
        Some(BitString { bytes, len })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn push(&mut self, bit: bool) {
        if self.len % 8 == 0 {
            self.bytes.push(0);
        }
        if bit {
            let last = self.bytes.len() - 1;
            self.bytes[last] |= 0x80 >> (self.len % 8);
        }
        self.len += 1;
    }

    /// Appends the low `width` bits of `value`, most significant first.
    pub fn push_bits(&mut self, value: u64, width: usize) {
        debug_assert!(width <= 64);
        debug_assert!(width == 64 || value >> width == 0, "value exceeds width");
        for i in (0..width).rev() {
            self.push(value >> i & 1 == 1);
        }
    }

    /// Appends `count` zero bits.
    pub fn push_zeros(&mut self, count: usize) {
        self.len += count;
        self.bytes.resize(self.len.div_ceil(8), 0);
    }

    pub fn set(&mut self, index: usize, bit: bool) {
        assert!(index < self.len, "bit index out of range");
        let mask = 0x80 >> (index % 8);
        if bit {
            self.bytes[index / 8] |= mask;
        } else {
            self.bytes[index / 8] &= !mask;
        }
    }

    #[inline]
    pub fn get(&self, index: usize) -> Option<bool> {
        if index >= self.len {
            return None;
        }
        Some(self.bytes[index / 8] & (0x80 >> (index % 8)) != 0)
    }

    /// Reads the `width`-bit big-endian field starting at bit `pos`.
    pub fn read_bits(&self, pos: usize, width: usize) -> Option<u64> {
        if width > 64 || pos.checked_add(width)? > self.len {
            return None;
        }
        if width == 0 {
            return Some(0);
        }
        let end = pos + width;
        // At most 9 bytes cover a 64-bit field.
        let mut acc = 0u128;
        for &b in &self.bytes[pos / 8..end.div_ceil(8)] {
            acc = acc << 8 | b as u128;
        }
        acc >>= end.div_ceil(8) * 8 - end;
        Some((acc & ((1u128 << width) - 1)) as u64)
    }

    /// Lowercase hex of the packed bytes.
    pub fn to_hex(&self) -> String {
        let mut s = String::with_capacity(self.bytes.len() * 2);
        for b in &self.bytes {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString(")?;
        for i in 0..self.len {
            f.write_str(if self.get(i) == Some(true) { "1" } else { "0" })?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn layout_is_msb_first() {
        let mut b = BitString::new();
        b.push(false);
        b.push_bits(0b10, 2);
        b.push_bits(0b01, 2);
        assert_eq!(b.len(), 5);
        assert_eq!(format!("{b:?}"), "BitString(01001)");
        assert_eq!(b.to_hex(), "48");
    }

    #[test]
    fn zeros_and_set() {
        let mut b = BitString::new();
        b.push(true);
        b.push_zeros(10);
        b.set(9, true);
        assert_eq!(b.len(), 11);
        assert_eq!(b.get(9), Some(true));
        assert_eq!(b.get(8), Some(false));
        assert_eq!(b.get(11), None);
        assert_eq!(b.to_hex(), "8040");
    }

    #[test]
    fn from_bytes_rejects_dirty_padding() {
        assert!(BitString::from_bytes(vec![0x48], 5).is_some());
        assert!(BitString::from_bytes(vec![0x49], 5).is_none());
        assert!(BitString::from_bytes(vec![0x48, 0], 5).is_none());
    }

    #[test]
    fn read_past_end() {
        let mut b = BitString::new();
        b.push_bits(5, 3);
        assert_eq!(b.read_bits(0, 3), Some(5));
        assert_eq!(b.read_bits(1, 3), None);
    }

    proptest! {
        #[test]
        fn fields_read_back(fields in prop::collection::vec((0u64..u64::MAX, 1usize..=64), 0..20)) {
            let mut b = BitString::new();
            let mut expect = Vec::new();
            for (v, w) in fields {
                let v = if w == 64 { v } else { v & ((1u64 << w) - 1) };
                b.push_bits(v, w);
                expect.push((v, w));
            }
            let mut pos = 0;
            for (v, w) in expect {
                prop_assert_eq!(b.read_bits(pos, w), Some(v));
                pos += w;
            }
            prop_assert_eq!(pos, b.len());
            let again = BitString::from_bytes(b.as_bytes().to_vec(), b.len());
            prop_assert_eq!(again, Some(b));
        }
    }
}
