// Copyright 2026 The stabilizer-locality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Packed binary vectors and GF(2) elimination.

use std::fmt;

const WORD: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// Fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits past `len` in the last word are always zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut v = BitVector::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        BitVector::from_indices(bits.len(), bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i))
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
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn and(&self, other: &BitVector) -> BitVector {
        debug_assert_eq!(self.len, other.len);
        BitVector {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// Parity of the bitwise AND, i.e. the GF(2) dot product.
    #[inline]
    pub fn dot(&self, other: &BitVector) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() & 1 == 1
    }

    /// Popcount of `self | other`.
    pub fn or_count_ones(&self, other: &BitVector) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let tz = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD + tz)
                }
            })
        })
    }

    /// Concatenation `self ‖ other`.
    pub fn concat(&self, other: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Bits `[start, start + len)` as a new vector.
    pub fn slice(&self, start: usize, len: usize) -> BitVector {
        assert!(start + len <= self.len);
        BitVector::from_indices(
            len,
            self.iter_ones()
                .filter(|&i| i >= start && i < start + len)
                .map(|i| i - start),
        )
    }

    /// Same bits, new length. Bits at or beyond `len` are dropped.
    pub fn resized(&self, len: usize) -> BitVector {
        BitVector::from_indices(len, self.iter_ones().filter(|&i| i < len))
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct EchelonRow {
    bits: BitVector,
    pivot: usize,
    combo: BitVector,
}

/// Incremental row-echelon basis over GF(2).
///
/// Every stored row remembers which inserted tags it is a combination of,
/// so that a reduction to zero yields an explicit linear dependency.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    tags: usize,
    rows: Vec<EchelonRow>,
}

impl Echelon {
    pub fn new(width: usize, tags: usize) -> Self {
        Echelon {
            width,
            tags,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `v` in place against the stored rows, folding the used rows'
    /// combinations into `combo`.
    pub fn reduce(&self, v: &mut BitVector, combo: &mut BitVector) {
        debug_assert_eq!(v.len(), self.width);
        for row in &self.rows {
            if v.get(row.pivot) {
                v.xor_assign(&row.bits);
                combo.xor_assign(&row.combo);
            }
        }
    }

    /// Expresses `v` through the inserted tags, if it lies in the span.
    pub fn solve(&self, v: &BitVector) -> Option<BitVector> {
        let mut residual = v.clone();
        let mut combo = BitVector::zeros(self.tags);
        self.reduce(&mut residual, &mut combo);
        residual.is_zero().then_some(combo)
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        let mut residual = v.clone();
        let mut scratch = BitVector::zeros(self.tags);
        self.reduce(&mut residual, &mut scratch);
        residual.is_zero()
    }

    /// Inserts `v`, tagged with `combo`.
    ///
    /// Returns `Err(dependency)` when `v` is already in the span; the
    /// dependency is `combo` plus the combination of earlier tags equal to `v`.
    pub fn insert(&mut self, v: BitVector, combo: BitVector) -> Result<(), BitVector> {
        debug_assert_eq!(combo.len(), self.tags);
        let mut bits = v;
        let mut combo = combo;
        self.reduce(&mut bits, &mut combo);
        match bits.first_one() {
            None => Err(combo),
            Some(pivot) => {
                self.rows.push(EchelonRow { bits, pivot, combo });
                Ok(())
            }
        }
    }

    /// Inserts `v` with the single tag `tag`.
    pub fn insert_tagged(&mut self, v: BitVector, tag: usize) -> Result<(), BitVector> {
        let combo = BitVector::from_indices(self.tags, [tag]);
        self.insert(v, combo)
    }
}

/// Basis of the right null space `{ v : M v = 0 }` of a matrix with `ncols`
/// columns given by its rows. Basis vectors are ordered by free column.
pub fn nullspace(rows: &[BitVector], ncols: usize) -> Vec<BitVector> {
    let mut m: Vec<BitVector> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| m[i].get(col)) else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }

    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = BitVector::zeros(ncols);
            v.set(free, true);
            for (row, &p) in m.iter().zip(&pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect()
}

/// GF(2) rank of a set of vectors.
pub fn rank(rows: &[BitVector]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let mut e = Echelon::new(first.len(), 0);
    for row in rows {
        let _ = e.insert(row.clone(), BitVector::zeros(0));
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_across_words() {
        let mut v = BitVector::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.iter_ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(v.count_ones(), 3);
        v.flip(64);
        assert_eq!(v.first_one(), Some(0));
        v.set(0, false);
        assert_eq!(v.first_one(), Some(129));
    }

    #[test]
    fn concat_and_slice() {
        let a = BitVector::from_indices(3, [0, 2]);
        let b = BitVector::from_indices(70, [1, 69]);
        let c = a.concat(&b);
        assert_eq!(c.len(), 73);
        assert_eq!(c.iter_ones().collect::<Vec<_>>(), vec![0, 2, 4, 72]);
        assert_eq!(c.slice(3, 70), b);
        assert_eq!(c.slice(0, 3), a);
    }

    #[test]
    fn echelon_reports_dependency() {
        let mut e = Echelon::new(4, 3);
        e.insert_tagged(BitVector::from_indices(4, [0, 1]), 0).unwrap();
        e.insert_tagged(BitVector::from_indices(4, [1, 2]), 1).unwrap();
        let dep = e.insert_tagged(BitVector::from_indices(4, [0, 2]), 2).unwrap_err();
        assert_eq!(dep.iter_ones().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let rows = vec![
            BitVector::from_indices(5, [0, 1, 3]),
            BitVector::from_indices(5, [1, 2]),
            BitVector::from_indices(5, [0, 2, 3]),
        ];
        let ns = nullspace(&rows, 5);
        assert_eq!(ns.len(), 5 - rank(&rows));
        for v in &ns {
            for r in &rows {
                assert!(!r.dot(v));
            }
        }
        assert_eq!(rank(&ns), ns.len());
    }

    #[test]
    fn nullspace_of_empty_matrix_is_everything() {
        let ns = nullspace(&[], 3);
        assert_eq!(ns.len(), 3);
    }
}
