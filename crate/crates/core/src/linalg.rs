//! Sparse exact linear algebra over [`Cyc`], and integer Smith normal form.

use std::collections::HashMap;

use malachite_base::num::arithmetic::traits::{Abs, DivRound, UnsignedAbs};
use malachite_base::num::basic::traits::Zero;
use malachite_base::rounding_modes::RoundingMode;
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;

use crate::scalars::Cyc;

/// Sparse vector: strictly increasing indices, no zero coefficients.
pub type SparseVec = Vec<(u64, Cyc)>;

/// Sorts, merges duplicate indices and drops zeros.
pub fn normalize(mut entries: Vec<(u64, Cyc)>) -> SparseVec {
    entries.sort_unstable_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(entries.len());
    for (i, c) in entries {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc += &c,
            _ => {
                if let Some((_, acc)) = out.last() {
                    if acc.is_zero() {
                        out.pop();
                    }
                }
                out.push((i, c));
            }
        }
    }
    if out.last().is_some_and(|(_, c)| c.is_zero()) {
        out.pop();
    }
    out
}

pub fn get(v: &[(u64, Cyc)], idx: u64) -> Option<&Cyc> {
    v.binary_search_by_key(&idx, |e| e.0).ok().map(|p| &v[p].1)
}

pub fn scale(v: &[(u64, Cyc)], f: &Cyc) -> SparseVec {
    if f.is_one() {
        return v.to_vec();
    }
    if f.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, c)| (*i, c * f)).collect()
}

/// `a + f * b`.
pub fn axpy(a: &[(u64, Cyc)], f: &Cyc, b: &[(u64, Cyc)]) -> SparseVec {
    if f.is_zero() || b.is_empty() {
        return a.to_vec();
    }
    let neg_one = Cyc::from_int(-1);
    let minus = *f == neg_one;
    let unit = f.is_one();
    let term = |c: &Cyc| -> Cyc {
        if unit {
            c.clone()
        } else if minus {
            -c
        } else {
            c * f
        }
    };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (ia, ib) = (a[i].0, b[j].0);
        if ia < ib {
            out.push(a[i].clone());
            i += 1;
        } else if ib < ia {
            out.push((ib, term(&b[j].1)));
            j += 1;
        } else {
            let s = if minus {
                &a[i].1 - &b[j].1
            } else {
                &a[i].1 + &term(&b[j].1)
            };
            if !s.is_zero() {
                out.push((ia, s));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(k, c)| (*k, term(c))));
    out
}

/// Standard bilinear pairing `sum a_i b_i`.
pub fn dot(a: &[(u64, Cyc)], b: &[(u64, Cyc)]) -> Cyc {
    let mut acc = Cyc::zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &(&a[i].1 * &b[j].1);
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// Which coordinate of a row serves as its pivot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotOrder {
    Lowest,
    Highest,
}

/// Incrementally maintained reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    order: PivotOrder,
    rows: Vec<SparseVec>,
    pivots: Vec<u64>,
    pivot_row: HashMap<u64, usize>,
}

impl Echelon {
    pub fn new(order: PivotOrder) -> Echelon {
        Echelon { order, rows: Vec::new(), pivots: Vec::new(), pivot_row: HashMap::new() }
    }

    pub fn from_rows<I: IntoIterator<Item = SparseVec>>(order: PivotOrder, rows: I) -> Echelon {
        let mut e = Echelon::new(order);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, idx: u64) -> bool {
        self.pivot_row.contains_key(&idx)
    }

    /// Remainder of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &[(u64, Cyc)]) -> SparseVec {
        // rows vanish on each other's pivots, so the coefficients can be read off `v` directly
        let hits: Vec<(usize, Cyc)> = v
            .iter()
            .filter_map(|(i, c)| self.pivot_row.get(i).map(|&r| (r, c.clone())))
            .collect();
        let mut out = v.to_vec();
        for (r, c) in hits {
            out = axpy(&out, &(-&c), &self.rows[r]);
        }
        out
    }

    pub fn contains(&self, v: &[(u64, Cyc)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(&v);
        if r.is_empty() {
            return false;
        }
        let (p, lead) = match self.order {
            PivotOrder::Lowest => r[0].clone(),
            PivotOrder::Highest => r[r.len() - 1].clone(),
        };
        let r = scale(&r, &lead.inv());
        for row in self.rows.iter_mut() {
            if let Some(c) = get(row, p) {
                let f = -c;
                *row = axpy(row, &f, &r);
            }
        }
        self.pivot_row.insert(p, self.rows.len());
        self.pivots.push(p);
        self.rows.push(r);
        true
    }

    /// Rows ordered by pivot (ascending).
    pub fn rows(&self) -> Vec<SparseVec> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&r| self.pivots[r]);
        idx.into_iter().map(|r| self.rows[r].clone()).collect()
    }

    pub fn rows_unordered(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Pivots in ascending order.
    pub fn pivots(&self) -> Vec<u64> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        let mut pairs: Vec<(u64, SparseVec)> = self.pivots.into_iter().zip(self.rows).collect();
        pairs.sort_by_key(|p| p.0);
        pairs.into_iter().map(|p| p.1).collect()
    }
}

/// Basis of `{x : <row, x> = 0 for every row}` inside `k^ncols`, in echelon form with
/// lowest pivots. Cost is linear in `ncols`, so only use for moderate sizes.
pub fn annihilator<I: IntoIterator<Item = SparseVec>>(rows: I, ncols: u64) -> Vec<SparseVec> {
    // RREF with highest pivots; every free column f gives e_f - sum_r row_r[f] e_{p_r}
    let ech = Echelon::from_rows(PivotOrder::Highest, rows);
    let mut rows_by_col: HashMap<u64, Vec<(u64, Cyc)>> = HashMap::new();
    for row in ech.rows_unordered() {
        let p = row[row.len() - 1].0;
        for (i, c) in row {
            if *i != p {
                rows_by_col.entry(*i).or_default().push((p, -c));
            }
        }
    }
    let mut out = Vec::new();
    for f in 0..ncols {
        if ech.is_pivot(f) {
            continue;
        }
        let mut v = rows_by_col.remove(&f).unwrap_or_default();
        v.push((f, Cyc::one()));
        out.push(normalize(v));
    }
    // canonical form: lowest-pivot RREF of the span
    Echelon::from_rows(PivotOrder::Lowest, out).into_rows()
}

/// Matrix-vector product with the matrix given by sparse columns.
pub fn apply_columns(cols: &[Vec<(u32, Cyc)>], v: &[(u64, Cyc)]) -> SparseVec {
    let mut acc = Vec::new();
    for (j, c) in v {
        for (i, a) in &cols[*j as usize] {
            acc.push((*i as u64, a * c));
        }
    }
    normalize(acc)
}

/// Inverse of a square matrix given by sparse columns, or `None` if singular.
pub fn invert_columns(cols: &[Vec<(u32, Cyc)>]) -> Option<Vec<Vec<(u32, Cyc)>>> {
    let n = cols.len() as u64;
    // row-reduce [A | I] on augmented coordinates j + n*(1 + k)
    let mut ech = Echelon::new(PivotOrder::Lowest);
    let mut rows: Vec<Vec<(u64, Cyc)>> = vec![Vec::new(); n as usize];
    for (j, col) in cols.iter().enumerate() {
        for (i, a) in col {
            rows[*i as usize].push((j as u64, a.clone()));
        }
    }
    for (i, mut r) in rows.into_iter().enumerate() {
        r.push((n + i as u64, Cyc::one()));
        ech.insert(normalize(r));
    }
    if ech.rank() < n as usize || ech.pivots().iter().any(|&p| p >= n) {
        return None;
    }
    // row with pivot j is e_j + (inverse row j) in augmented part
    let mut inv: Vec<Vec<(u32, Cyc)>> = vec![Vec::new(); n as usize];
    for row in ech.rows_unordered() {
        let j = row[0].0;
        for (k, c) in &row[1..] {
            let col = (k - n) as usize;
            inv[col].push((j as u32, c.clone()));
        }
    }
    for c in inv.iter_mut() {
        c.sort_by_key(|e| e.0);
    }
    Some(inv)
}

/// Nonzero invariant factors of an integer matrix (Smith normal form diagonal), ascending.
pub fn smith_invariants(mut a: Vec<Vec<Integer>>) -> Vec<Natural> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag: Vec<Natural> = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block as the pivot
        let mut best: Option<(usize, usize, Natural)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if *x != Integer::ZERO {
                    let ax = x.unsigned_abs();
                    if best.as_ref().is_none_or(|b| ax < b.2) {
                        best = Some((i, j, ax));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            let p = a[t][t].clone();
            for i in t + 1..rows {
                if a[i][t] != Integer::ZERO {
                    let q = (&a[i][t]).div_round(&p, RoundingMode::Floor).0;
                    for j in t..cols {
                        let s = &q * &a[t][j];
                        a[i][j] -= s;
                    }
                    if a[i][t] != Integer::ZERO {
                        done = false;
                    }
                }
            }
            for j in t + 1..cols {
                if a[t][j] != Integer::ZERO {
                    let q = (&a[t][j]).div_round(&p, RoundingMode::Floor).0;
                    for row in a.iter_mut().skip(t) {
                        let s = &q * &row[t];
                        row[j] -= s;
                    }
                    if a[t][j] != Integer::ZERO {
                        done = false;
                    }
                }
            }
            if done {
                // divisibility of the rest of the block
                let bad = (t + 1..rows).find_map(|i| {
                    (t + 1..cols)
                        .find(|&j| {
                            let r = (&a[i][j]).div_round(&p, RoundingMode::Floor).0 * &p;
                            r != a[i][j]
                        })
                        .map(|_| i)
                });
                match bad {
                    Some(i) => {
                        for j in t..cols {
                            let s = a[i][j].clone();
                            a[t][j] += s;
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // move the smallest entry of row/column t to the pivot
            let mut best = (t, t, (&a[t][t]).unsigned_abs());
            for i in t + 1..rows {
                if a[i][t] != Integer::ZERO && (&a[i][t]).unsigned_abs() < best.2 {
                    best = (i, t, (&a[i][t]).unsigned_abs());
                }
            }
            for j in t + 1..cols {
                if a[t][j] != Integer::ZERO && (&a[t][j]).unsigned_abs() < best.2 {
                    best = (t, j, (&a[t][j]).unsigned_abs());
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push((&a[t][t]).abs().unsigned_abs());
        t += 1;
    }
    diag.sort();
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(u64, i64)]) -> SparseVec {
        normalize(entries.iter().map(|&(i, c)| (i, Cyc::from_int(c))).collect())
    }

    #[test]
    fn normalize_merges() {
        let x = v(&[(3, 1), (1, 2), (3, -1), (0, 0)]);
        assert_eq!(x, v(&[(1, 2)]));
    }

    #[test]
    fn echelon_rank_and_rref() {
        let mut e = Echelon::new(PivotOrder::Lowest);
        assert!(e.insert(v(&[(0, 1), (1, 1)])));
        assert!(e.insert(v(&[(1, 1), (2, 1)])));
        assert!(!e.insert(v(&[(0, 1), (2, -1)])));
        let rows = e.rows();
        assert_eq!(rows[0], v(&[(0, 1), (2, -1)]));
        assert_eq!(rows[1], v(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn annihilator_dims() {
        let rows = vec![v(&[(0, 1), (1, 1)])];
        let ann = annihilator(rows, 3);
        assert_eq!(ann.len(), 2);
        for a in &ann {
            assert!(dot(a, &v(&[(0, 1), (1, 1)])).is_zero());
        }
    }

    #[test]
    fn inverse() {
        let z = Cyc::root_of_unity(3, 1);
        let cols = vec![vec![(0u32, Cyc::one()), (1, z.clone())], vec![(1u32, Cyc::from_int(2))]];
        let inv = invert_columns(&cols).unwrap();
        let x = v(&[(0, 5), (1, 7)]);
        assert_eq!(apply_columns(&inv, &apply_columns(&cols, &x)), x);
        assert!(invert_columns(&[vec![(0u32, Cyc::one())], vec![(0u32, Cyc::one())]]).is_none());
    }

    #[test]
    fn smith() {
        let m = |r: &[&[i64]]| -> Vec<Vec<Integer>> {
            r.iter().map(|row| row.iter().map(|&x| Integer::from(x)).collect()).collect()
        };
        let d = smith_invariants(m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(d, vec![Natural::from(2u32), Natural::from(6u32), Natural::from(12u32)]);
        let d = smith_invariants(m(&[&[0, 0], &[0, 3]]));
        assert_eq!(d, vec![Natural::from(3u32)]);
        assert!(smith_invariants(m(&[&[0]])).is_empty());
    }
}
