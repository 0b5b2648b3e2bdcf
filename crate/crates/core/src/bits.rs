//! Helpers for `u64` characteristic vectors.

pub type Mask = u64;

#[inline]
pub fn bit(i: usize) -> Mask {
    1u64 << i
}

#[inline]
pub fn has(mask: Mask, i: usize) -> bool {
    mask >> i & 1 == 1
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of `mask` in ascending order.
pub fn ones(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Renders `mask` as a bit string whose i-th character is element i.
pub fn to_bitstring(mask: Mask, n: usize) -> String {
    (0..n).map(|i| if has(mask, i) { '1' } else { '0' }).collect()
}

pub fn from_bitstring(s: &str) -> Option<Mask> {
    if s.len() > 64 {
        return None;
    }
    let mut m = 0;
    for (i, c) in s.chars().enumerate() {
        match c {
            '1' => m |= bit(i),
            '0' => {}
            _ => return None,
        }
    }
    Some(m)
}
