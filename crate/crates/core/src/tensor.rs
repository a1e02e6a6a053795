//! Sparse vectors in tensor powers `V^{(x)n}`.
//!
//! A word `(w_0, ..., w_{n-1})` over `{0..d-1}` is stored as the base-`d` number
//! with `w_0` most significant, so numeric order of indices is lexicographic
//! order of words.

use std::fmt;

use crate::linalg::{self, SparseVec};
use crate::scalars::Cyc;

/// Sparse braiding-like matrix on `V (x) V`: column `i*d+j` lists the image of
/// `x_i (x) x_j` as `(k*d+l, coefficient)` pairs sorted by output index.
pub type Columns = [Vec<(u32, Cyc)>];

#[derive(Clone, PartialEq)]
pub struct TensorVec {
    dim: usize,
    degree: usize,
    entries: SparseVec,
}

pub fn word_index(dim: usize, word: &[usize]) -> u64 {
    word.iter().fold(0u64, |acc, &w| acc * dim as u64 + w as u64)
}

pub fn index_word(dim: usize, degree: usize, mut idx: u64) -> Vec<usize> {
    let mut w = vec![0; degree];
    for slot in (0..degree).rev() {
        w[slot] = (idx % dim as u64) as usize;
        idx /= dim as u64;
    }
    w
}

impl TensorVec {
    pub fn zero(dim: usize, degree: usize) -> TensorVec {
        TensorVec { dim, degree, entries: Vec::new() }
    }

    /// The scalar `c` in degree 0.
    pub fn scalar(dim: usize, c: Cyc) -> TensorVec {
        TensorVec::from_entries(dim, 0, vec![(0, c)])
    }

    pub fn basis(dim: usize, word: &[usize]) -> TensorVec {
        TensorVec { dim, degree: word.len(), entries: vec![(word_index(dim, word), Cyc::one())] }
    }

    /// Normalizes arbitrary `(index, coefficient)` pairs.
    pub fn from_entries(dim: usize, degree: usize, entries: Vec<(u64, Cyc)>) -> TensorVec {
        TensorVec { dim, degree, entries: linalg::normalize(entries) }
    }

    /// Wraps entries that are already sorted, merged and nonzero.
    pub fn from_sparse(dim: usize, degree: usize, entries: SparseVec) -> TensorVec {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        TensorVec { dim, degree, entries }
    }

    pub fn from_words<I: IntoIterator<Item = (Vec<usize>, Cyc)>>(dim: usize, degree: usize, terms: I) -> TensorVec {
        TensorVec::from_entries(
            dim,
            degree,
            terms
                .into_iter()
                .map(|(w, c)| {
                    assert_eq!(w.len(), degree);
                    (word_index(dim, &w), c)
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &SparseVec {
        &self.entries
    }

    pub fn into_entries(self) -> SparseVec {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coeff(&self, word: &[usize]) -> Cyc {
        linalg::get(&self.entries, word_index(self.dim, word)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &Cyc)> + '_ {
        self.entries.iter().map(|(i, c)| (index_word(self.dim, self.degree, *i), c))
    }

    fn same_space(&self, other: &TensorVec) {
        assert_eq!(self.dim, other.dim, "tensor dimension mismatch");
        assert_eq!(self.degree, other.degree, "tensor degree mismatch");
    }

    pub fn add(&self, other: &TensorVec) -> TensorVec {
        self.axpy(&Cyc::one(), other)
    }

    pub fn sub(&self, other: &TensorVec) -> TensorVec {
        self.axpy(&Cyc::from_int(-1), other)
    }

    /// `self + f * other`.
    pub fn axpy(&self, f: &Cyc, other: &TensorVec) -> TensorVec {
        self.same_space(other);
        TensorVec { dim: self.dim, degree: self.degree, entries: linalg::axpy(&self.entries, f, &other.entries) }
    }

    pub fn scale(&self, f: &Cyc) -> TensorVec {
        TensorVec { dim: self.dim, degree: self.degree, entries: linalg::scale(&self.entries, f) }
    }

    /// `self (x) other`.
    pub fn concat(&self, other: &TensorVec) -> TensorVec {
        assert_eq!(self.dim, other.dim);
        let shift = (self.dim as u64).pow(other.degree as u32);
        let mut entries = Vec::with_capacity(self.len() * other.len());
        for (i, a) in &self.entries {
            for (j, b) in &other.entries {
                entries.push((i * shift + j, a * b));
            }
        }
        // already sorted by construction
        entries.retain(|e| !e.1.is_zero());
        TensorVec { dim: self.dim, degree: self.degree + other.degree, entries }
    }

    /// Applies the two-slot matrix `cols` at slots `p, p+1` (0-based).
    pub fn apply_at(&self, p: usize, cols: &Columns) -> TensorVec {
        assert!(p + 1 < self.degree, "slot {p} out of range for degree {}", self.degree);
        let d = self.dim as u64;
        let w2 = d.pow((self.degree - 2 - p) as u32);
        let w1 = w2 * d;
        let mut out = Vec::with_capacity(self.entries.len() * 2);
        for (idx, c) in &self.entries {
            let a = (idx / w1) % d;
            let b = (idx / w2) % d;
            let base = idx - a * w1 - b * w2;
            for (k, coef) in &cols[(a * d + b) as usize] {
                let (k, l) = (*k as u64 / d, *k as u64 % d);
                let val = if coef.is_one() { c.clone() } else { coef * c };
                out.push((base + k * w1 + l * w2, val));
            }
        }
        TensorVec::from_entries(self.dim, self.degree, out)
    }

    /// Moves the factor at slot `p` past the next `m` slots, returning
    /// `v + sigma v + ...` i.e. the sum over all `m + 1` positions (the shuffle
    /// sum `e + U^1 + ... + U^m` on those slots).
    pub fn shuffle_first(&self, p: usize, m: usize, cols: &Columns) -> TensorVec {
        let mut acc = self.clone();
        let mut cur = self.clone();
        for j in 0..m {
            cur = cur.apply_at(p + j, cols);
            acc = acc.add(&cur);
        }
        acc
    }
}

impl fmt::Debug for TensorVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorVec(d={}, n={}) [", self.dim, self.degree)?;
        for (k, (w, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            let word: String = w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(".");
            write!(f, "{c} x[{word}]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_roundtrip() {
        for idx in 0..81u64 {
            assert_eq!(word_index(3, &index_word(3, 4, idx)), idx);
        }
        assert_eq!(word_index(4, &[1, 2]), 6);
    }

    #[test]
    fn concat_and_flip() {
        let a = TensorVec::basis(2, &[0]);
        let b = TensorVec::basis(2, &[1]);
        let ab = a.concat(&b);
        assert_eq!(ab, TensorVec::basis(2, &[0, 1]));
        // flip on V (x) V
        let flip: Vec<Vec<(u32, Cyc)>> =
            (0..4u32).map(|ij| vec![((ij % 2) * 2 + ij / 2, Cyc::one())]).collect();
        assert_eq!(ab.apply_at(0, &flip), TensorVec::basis(2, &[1, 0]));
        let t = TensorVec::basis(2, &[0, 1, 1]).shuffle_first(0, 2, &flip);
        let expect = TensorVec::from_words(
            2,
            3,
            vec![(vec![0, 1, 1], Cyc::one()), (vec![1, 0, 1], Cyc::one()), (vec![1, 1, 0], Cyc::one())],
        );
        assert_eq!(t, expect);
    }
}
