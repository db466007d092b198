//! Packed binary vectors over GF(2) and the few matrix routines the
//! stabilizer code needs (row reduction and left kernels).

use alloc::vec;
use alloc::vec::Vec;

const WORD: usize = 64;

/// A fixed-length vector over GF(2), packed into `u64` words.
///
/// Bits past `len` in the last word are always zero, so equality, hashing
/// and ordering only see meaningful bits.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(WORD)] }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn or(&self, other: &BitVec) -> BitVec {
        debug_assert_eq!(self.len, other.len);
        BitVec { len: self.len, words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect() }
    }

    pub fn and(&self, other: &BitVec) -> BitVec {
        debug_assert_eq!(self.len, other.len);
        BitVec { len: self.len, words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    /// Parity of the inner product `self · other` over GF(2).
    #[inline]
    pub fn dot(&self, other: &BitVec) -> bool {
        self.and_count(other) & 1 == 1
    }

    /// `popcount(self & other)`.
    #[inline]
    pub fn and_count(&self, other: &BitVec) -> u32 {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum()
    }

    #[inline]
    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    /// Indices of set bits in increasing order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * WORD + t)
                }
            })
        })
    }

    /// Cyclic shift: bit `i` moves to `(i + shift) mod len`.
    pub fn rotate(&self, shift: usize) -> BitVec {
        if self.len == 0 {
            return self.clone();
        }
        let shift = shift % self.len;
        BitVec::from_indices(self.len, self.ones().map(|i| (i + shift) % self.len))
    }

    /// Applies a site permutation: bit `i` moves to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> BitVec {
        debug_assert_eq!(perm.len(), self.len);
        BitVec::from_indices(self.len, self.ones().map(|i| perm[i]))
    }

    /// Concatenation `[self | other]`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        BitVec::from_indices(self.len + other.len, self.ones().chain(other.ones().map(|i| i + self.len)))
    }

    /// The sub-vector `self[start..start + len]`.
    pub fn slice(&self, start: usize, len: usize) -> BitVec {
        assert!(start + len <= self.len);
        BitVec::from_indices(len, self.ones().filter(|&i| i >= start && i < start + len).map(|i| i - start))
    }
}

/// Row-reduces `rows` in place to reduced row echelon form, scanning columns
/// left to right. Returns the pivot column of each nonzero row; zero rows are
/// moved to the bottom.
pub fn rref(rows: &mut [BitVec]) -> Vec<usize> {
    let Some(ncols) = rows.first().map(BitVec::len) else {
        return Vec::new();
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[BitVec]) -> usize {
    let mut work = rows.to_vec();
    rref(&mut work).len()
}

/// Basis of the left kernel `{c : Σ c_i rows_i = 0}`, as coefficient vectors
/// of length `rows.len()`, in reduced echelon form.
pub fn left_kernel(rows: &[BitVec]) -> Vec<BitVec> {
    let m = rows.len();
    if m == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut aug: Vec<BitVec> = rows.iter().enumerate().map(|(i, r)| r.concat(&BitVec::from_indices(m, [i]))).collect();
    // Only eliminate on the original columns.
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| aug[i].get(c)) else {
            continue;
        };
        aug.swap(r, p);
        let pivot = aug[r].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot);
            }
        }
        r += 1;
    }
    let mut kernel: Vec<BitVec> = aug[r..].iter().map(|row| row.slice(ncols, m)).collect();
    rref(&mut kernel);
    kernel
}
