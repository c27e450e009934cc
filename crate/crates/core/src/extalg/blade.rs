use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::binomial;
use crate::error::{Error, Result};

pub const MAX_DIM: usize = 64;

/// A strictly increasing index tuple `j_1 < … < j_p`, stored as a bit set.
///
/// Indices are 0-based in the API and 1-based in text. Blades of equal degree
/// are ordered lexicographically by their index tuples; a lower degree sorts
/// first.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Blade(u64);

impl Blade {
    pub const EMPTY: Blade = Blade(0);

    pub fn from_indices(indices: &[usize]) -> Result<Blade> {
        let mut mask = 0u64;
        let mut prev: Option<usize> = None;
        for &i in indices {
            if i >= MAX_DIM {
                return Err(Error::DimensionTooLarge(i + 1));
            }
            if prev.is_some_and(|q| q >= i) {
                return Err(Error::InvalidInput(alloc::format!(
                    "index tuple {indices:?} is not strictly increasing"
                )));
            }
            mask |= 1 << i;
            prev = Some(i);
        }
        Ok(Blade(mask))
    }

    pub fn single(i: usize) -> Blade {
        assert!(i < MAX_DIM);
        Blade(1 << i)
    }

    /// Blade on the contiguous range `start..end`.
    pub fn range(start: usize, end: usize) -> Blade {
        assert!(start <= end && end <= MAX_DIM);
        let width = end - start;
        if width == 64 {
            return Blade(u64::MAX);
        }
        Blade(((1u64 << width) - 1) << start)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_DIM && self.0 >> i & 1 == 1
    }

    pub fn is_subset_of(self, other: Blade) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Blade) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Blade) -> Blade {
        Blade(self.0 | other.0)
    }

    pub fn difference(self, other: Blade) -> Blade {
        Blade(self.0 & !other.0)
    }

    /// Largest index plus one; zero for the empty blade.
    pub fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Parity of the permutation that sorts the concatenation `self ++ other`.
    /// Only meaningful for disjoint blades.
    pub fn merge_is_odd(self, other: Blade) -> bool {
        let mut inversions = 0u32;
        for j in other.indices() {
            // elements of self that come after j
            let above = if j + 1 >= 64 { 0 } else { self.0 >> (j + 1) };
            inversions += above.count_ones();
        }
        inversions & 1 == 1
    }

    /// Position of this blade among all blades of its degree in dimension
    /// `dim`, in lexicographic order.
    pub fn rank(self, dim: usize) -> usize {
        let p = self.degree();
        let mut rank = 0;
        let mut next = 0;
        for (pos, c) in self.indices().enumerate() {
            for x in next..c {
                rank += binomial(dim - 1 - x, p - 1 - pos);
            }
            next = c + 1;
        }
        rank
    }

    /// Inverse of [`Blade::rank`].
    pub fn unrank(mut rank: usize, dim: usize, degree: usize) -> Blade {
        let mut mask = 0u64;
        let mut x = 0;
        for pos in 0..degree {
            loop {
                let block = binomial(dim - 1 - x, degree - 1 - pos);
                if rank < block {
                    break;
                }
                rank -= block;
                x += 1;
            }
            mask |= 1 << x;
            x += 1;
        }
        Blade(mask)
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        // With index 0 mapped to the top bit, a lexicographically smaller tuple
        // has the larger reversed mask.
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.reverse_bits().cmp(&self.0.reverse_bits()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    /// `e12`, `e135`; indices are joined with `_` once any exceeds 9 (`e1_10`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("e")?;
        let wide = self.span() > 9;
        for (k, i) in self.indices().enumerate() {
            if wide && k > 0 {
                f.write_str("_")?;
            }
            write!(f, "{}", i + 1)?;
        }
        Ok(())
    }
}

/// All blades of `degree` in dimension `dim`, lexicographically.
pub fn blades(dim: usize, degree: usize) -> Vec<Blade> {
    (0..binomial(dim, degree))
        .map(|r| Blade::unrank(r, dim, degree))
        .collect()
}
