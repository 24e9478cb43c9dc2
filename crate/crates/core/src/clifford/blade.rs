//! Basis blades `e_A` stored as bitmasks, and the sign rule for their product.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result, MAX_GENERATORS};

/// Number of Clifford generators `n`, validated to lie in `1..=16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dimension(u8);

impl Dimension {
    pub fn new(n: usize) -> Result<Self> {
        if (1..=MAX_GENERATORS).contains(&n) {
            Ok(Dimension(n as u8))
        } else {
            Err(Error::InvalidDimension(n))
        }
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }

    /// Bitmask with one bit per generator.
    pub fn mask(self) -> u32 {
        (1u32 << self.0) - 1
    }

    pub fn check_same(self, other: Dimension) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: self.get(), right: other.get() })
        }
    }

    /// All `2ⁿ` blades of `C_n`, in canonical order.
    pub fn blades(self) -> Vec<Blade> {
        let mut all: Vec<Blade> = (0..(1u32 << self.0)).map(|m| Blade(m as u16)).collect();
        all.sort();
        all
    }
}

impl TryFrom<usize> for Dimension {
    type Error = Error;
    fn try_from(n: usize) -> Result<Self> {
        Dimension::new(n)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Basis blade `e_A = e_{i₁}⋯e_{i_k}` with `i₁ < ⋯ < i_k`.
///
/// Bit `i - 1` is set iff generator `e_i` is a factor; the empty mask is the
/// unit `e_∅ = 1`. Blades order by grade first, then lexicographically by
/// index list, which is the order used for serialization.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u16);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// Generator `e_i`, 1-based. Panics outside `1..=16`.
    pub fn generator(i: usize) -> Blade {
        assert!((1..=MAX_GENERATORS).contains(&i), "generator index {i} out of range");
        Blade(1 << (i - 1))
    }

    pub fn from_bits(bits: u16) -> Blade {
        Blade(bits)
    }

    /// Builds a blade from a strictly increasing list of 1-based indices.
    pub fn from_indices(indices: &[usize], n: Dimension) -> Result<Blade> {
        let mut bits = 0u16;
        let mut prev = 0usize;
        for &i in indices {
            if i == 0 || i > n.get() {
                return Err(Error::IndexOutOfRange { index: i, n: n.get() });
            }
            if i <= prev {
                return Err(Error::UnsortedBlade(indices.to_vec()));
            }
            prev = i;
            bits |= 1 << (i - 1);
        }
        Ok(Blade(bits))
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> Vec<usize> {
        (0..16).filter(|b| self.0 & (1 << b) != 0).map(|b| b + 1).collect()
    }

    /// Highest generator index present, 0 for the scalar blade.
    pub fn max_index(self) -> usize {
        16 - self.0.leading_zeros() as usize
    }

    pub fn fits(self, n: Dimension) -> bool {
        u32::from(self.0) & !n.mask() == 0
    }

    /// `e_a e_b = sign · e_{a △ b}`, returning the sign as `±1`.
    ///
    /// The sign is `(-1)^{swaps + collisions}`: `swaps` counts the
    /// transpositions needed to merge the two index lists into ascending
    /// order, and every shared generator contributes `e_i² = -1`.
    pub fn product(self, other: Blade) -> (i8, Blade) {
        let a = u32::from(self.0);
        let b = u32::from(other.0);
        let mut swaps = 0u32;
        let mut shifted = a >> 1;
        while shifted != 0 {
            swaps += (shifted & b).count_ones();
            shifted >>= 1;
        }
        let collisions = (a & b).count_ones();
        let sign = if (swaps + collisions) % 2 == 0 { 1 } else { -1 };
        (sign, Blade((a ^ b) as u16))
    }

    /// Sign picked up by `e_A` under Hermitian conjugation:
    /// `conj(e_A) = (-1)^k (-1)^{k(k-1)/2} e_A` for `k = |A|`.
    pub fn conj_sign(self) -> i8 {
        let k = self.grade();
        if (k + k * (k.saturating_sub(1)) / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Checked blade product: both blades must belong to `C_n`.
pub fn blade_product(a: Blade, b: Blade, n: Dimension) -> Result<(i8, Blade)> {
    for blade in [a, b] {
        if !blade.fits(n) {
            return Err(Error::IndexOutOfRange { index: blade.max_index(), n: n.get() });
        }
    }
    Ok(a.product(b))
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| {
            // Same grade: lexicographic on index lists. The first differing
            // lowest set bit decides; the blade holding it is smaller.
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        f.write_str("e")?;
        let idx = self.indices();
        let sep = if idx.iter().any(|&i| i > 9) { "," } else { "" };
        let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
