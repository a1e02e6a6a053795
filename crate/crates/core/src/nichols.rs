//! Graded components of the Nichols algebra as the image of the quantum
//! symmetrizer inside the tensor coalgebra, and the operations built on them.
//!
//! Degree `n` is spanned by `T_{1,n-1}(x_i (x) b)` for `b` in degree `n - 1`, since
//! the algebra is generated in degree one. Bases are kept in reduced echelon form
//! with lowest pivots under the lexicographic order on words.

use std::collections::BTreeSet;
use std::fmt;

use crate::bpair::BraidedPair;
use crate::error::{Error, Result};
use crate::linalg::{self, Echelon, PivotOrder, SparseVec};
use crate::scalars::{Cyc, RootOrder};
use crate::tensor::{self, TensorVec};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

const CHUNK: usize = 32;

/// Per-degree bases of the Nichols algebra, extended on demand.
#[derive(Clone, Debug)]
pub struct GradedComputation {
    bp: BraidedPair,
    levels: Vec<Vec<SparseVec>>,
    /// First degree with dimension zero, once reached.
    top: Option<usize>,
}

fn left_multiply_basis(bp: &BraidedPair, i: usize, b: &SparseVec, n: usize) -> SparseVec {
    let d = bp.dim();
    let shift = (d as u64).pow((n - 1) as u32) * i as u64;
    let v: SparseVec = b.iter().map(|(w, c)| (w + shift, c.clone())).collect();
    TensorVec::from_sparse(d, n, v).shuffle_first(0, n - 1, bp.columns()).into_entries()
}

impl GradedComputation {
    pub fn new(bp: BraidedPair) -> GradedComputation {
        let d = bp.dim();
        let one = vec![vec![(0u64, Cyc::one())]];
        let lin = (0..d as u64).map(|i| vec![(i, Cyc::one())]).collect();
        let top = if d == 0 { Some(1) } else { None };
        GradedComputation { bp, levels: vec![one, lin], top }
    }

    pub fn bp(&self) -> &BraidedPair {
        &self.bp
    }

    /// Highest degree computed so far.
    pub fn computed(&self) -> usize {
        self.levels.len() - 1
    }

    /// First degree whose component vanishes, if reached.
    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn extend_to(&mut self, n: usize) {
        while self.levels.len() <= n {
            let k = self.levels.len();
            let basis = if self.top.is_some() { Vec::new() } else { self.next_level(k) };
            if basis.is_empty() && self.top.is_none() {
                self.top = Some(k);
            }
            self.levels.push(basis);
        }
    }

    fn next_level(&self, n: usize) -> Vec<SparseVec> {
        let prev = &self.levels[n - 1];
        let d = self.bp.dim();
        let cands: Vec<(usize, usize)> = (0..prev.len()).flat_map(|b| (0..d).map(move |i| (i, b))).collect();
        let mut ech = Echelon::new(PivotOrder::Lowest);
        for chunk in cands.chunks(CHUNK) {
            #[cfg(feature = "parallel")]
            let vecs: Vec<SparseVec> =
                chunk.par_iter().map(|&(i, b)| left_multiply_basis(&self.bp, i, &prev[b], n)).collect();
            #[cfg(not(feature = "parallel"))]
            let vecs: Vec<SparseVec> =
                chunk.iter().map(|&(i, b)| left_multiply_basis(&self.bp, i, &prev[b], n)).collect();
            for v in vecs {
                ech.insert(v);
            }
        }
        ech.into_rows()
    }

    /// Echelon basis of degree `n` (computing it if needed).
    pub fn basis(&mut self, n: usize) -> &[SparseVec] {
        self.extend_to(n);
        &self.levels[n]
    }

    pub fn basis_vectors(&mut self, n: usize) -> Vec<TensorVec> {
        let d = self.bp.dim();
        self.basis(n).iter().map(|r| TensorVec::from_sparse(d, n, r.clone())).collect()
    }

    pub fn dim(&mut self, n: usize) -> usize {
        self.basis(n).len()
    }

    /// Dimensions of the degrees computed so far.
    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Whether `v` lies in the computed degree-`v.degree()` component.
    pub fn contains(&mut self, v: &TensorVec) -> bool {
        let rows = self.basis(v.degree()).to_vec();
        Echelon::from_rows(PivotOrder::Lowest, rows).contains(v.entries())
    }

    pub fn levels(&self) -> &[Vec<SparseVec>] {
        &self.levels
    }

    /// Rebuilds a computation from stored levels (no validation beyond shapes).
    pub fn from_levels(bp: BraidedPair, levels: Vec<Vec<SparseVec>>) -> Result<GradedComputation> {
        if levels.len() < 2 || levels[1].len() != bp.dim() {
            return Err(Error::Invalid("stored levels do not match the braided pair".into()));
        }
        let top = levels.iter().position(Vec::is_empty);
        Ok(GradedComputation { bp, levels, top })
    }
}

/// A finite prefix of the Hilbert series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub dims: Vec<usize>,
    /// `Some(total)` once a zero degree has been reached.
    pub total: Option<usize>,
}

impl HilbertSeries {
    pub fn is_finite(&self) -> bool {
        self.total.is_some()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        writeln!(f, "dims: {}", dims.join(" "))?;
        match self.total {
            Some(t) => write!(f, "total: {t}\nfinite: yes"),
            None => write!(f, "total: unknown\nfinite: unknown"),
        }
    }
}

/// Dimensions up to `max_degree`, stopping at the first zero.
pub fn hilbert_with(gc: &mut GradedComputation, max_degree: usize) -> HilbertSeries {
    let mut dims = Vec::new();
    for n in 0..=max_degree {
        let k = gc.dim(n);
        dims.push(k);
        if k == 0 {
            return HilbertSeries { total: Some(dims.iter().sum()), dims };
        }
    }
    HilbertSeries { dims, total: None }
}

pub fn hilbert(bp: &BraidedPair, max_degree: usize) -> HilbertSeries {
    hilbert_with(&mut GradedComputation::new(bp.clone()), max_degree)
}

/// Basis of `B^n`.
pub fn degree_basis(bp: &BraidedPair, n: usize) -> Vec<TensorVec> {
    GradedComputation::new(bp.clone()).basis_vectors(n)
}

fn rows_of_columns(cols: &[Vec<(u32, Cyc)>], size: usize) -> Vec<SparseVec> {
    let mut rows: Vec<Vec<(u64, Cyc)>> = vec![Vec::new(); size];
    for (j, col) in cols.iter().enumerate() {
        for (i, c) in col {
            rows[*i as usize].push((j as u64, c.clone()));
        }
    }
    rows.into_iter().map(linalg::normalize).collect()
}

/// Basis of `ker S^n` in `V^{(x)n}`; for `n = 2` this is `ker(1 + c)`.
pub fn kernel_basis(bp: &BraidedPair, n: usize) -> Vec<TensorVec> {
    let d = bp.dim();
    let size = (d as u64).pow(n as u32);
    let rows = match n {
        0 | 1 => return Vec::new(),
        2 => {
            let cols: Vec<Vec<(u32, Cyc)>> = bp
                .columns()
                .iter()
                .enumerate()
                .map(|(j, col)| {
                    let mut c = col.clone();
                    c.push((j as u32, Cyc::one()));
                    let v = linalg::normalize(c.into_iter().map(|(i, x)| (i as u64, x)).collect());
                    v.into_iter().map(|(i, x)| (i as u32, x)).collect()
                })
                .collect();
            rows_of_columns(&cols, d * d)
        }
        _ => GradedComputation::new(bp.transpose()).basis(n).to_vec(),
    };
    linalg::annihilator(rows, size).into_iter().map(|v| TensorVec::from_sparse(d, n, v)).collect()
}

/// New relations in one degree.
#[derive(Clone, Debug)]
pub struct DegreeRelations {
    pub degree: usize,
    /// Dimension of `ker S^n / (V ker S^{n-1} + ker S^{n-1} V)`.
    pub count: usize,
    /// Echelon representatives of the new relations, when requested.
    pub representatives: Option<Vec<TensorVec>>,
    /// Leading words (order `x_0 > x_1 > ...`) added to a Groebner basis in this degree.
    pub groebner_words: Vec<Vec<usize>>,
}

/// Relations of the Nichols algebra, computed through the dual pair `(V*, c^T)`:
/// `ker S^n` is the annihilator of the dual component `W_n`.
#[derive(Clone, Debug)]
pub struct RelationComputation {
    dual: GradedComputation,
    standard: Vec<BTreeSet<u64>>,
}

impl RelationComputation {
    pub fn new(bp: &BraidedPair) -> RelationComputation {
        RelationComputation { dual: GradedComputation::new(bp.transpose()), standard: Vec::new() }
    }

    fn d(&self) -> usize {
        self.dual.bp().dim()
    }

    /// Words not divisible by any leading word of the ideal, in degree `n`.
    pub fn standard_words(&mut self, n: usize) -> &BTreeSet<u64> {
        while self.standard.len() <= n {
            let k = self.standard.len();
            let rows = self.dual.basis(k).to_vec();
            let set = Echelon::from_rows(PivotOrder::Highest, rows).pivots().into_iter().collect();
            self.standard.push(set);
        }
        &self.standard[n]
    }

    /// `Z_n = (V (x) W_{n-1}) ∩ (W_{n-1} (x) V)`; returns its basis if asked, and its dimension.
    fn z_space(&mut self, n: usize, want_basis: bool) -> (usize, Option<Vec<SparseVec>>) {
        let d = self.d() as u64;
        let prev = self.dual.basis(n - 1).to_vec();
        let high = d.pow((n - 1) as u32);
        let a: Vec<SparseVec> = (0..d)
            .flat_map(|i| prev.iter().map(move |w| w.iter().map(|(x, c)| (x + i * high, c.clone())).collect()))
            .collect();
        let b = Echelon::from_rows(
            PivotOrder::Lowest,
            prev.iter().flat_map(|w| (0..d).map(move |j| w.iter().map(|(x, c)| (x * d + j, c.clone())).collect())),
        );
        // x = sum l_k a_k lies in B iff sum l_k reduce(a_k) = 0
        let tag = d.pow(n as u32);
        let mut ech = Echelon::new(PivotOrder::Lowest);
        let mut kernel = Vec::new();
        for (k, ak) in a.iter().enumerate() {
            let mut r = b.reduce(ak);
            if want_basis {
                r.push((tag + k as u64, Cyc::one()));
            }
            if !ech.insert(r) && !want_basis {
                continue;
            }
        }
        let rank = ech.rows_unordered().iter().filter(|r| r[0].0 < tag).count();
        let dim = a.len() - rank;
        if want_basis {
            for row in ech.rows_unordered() {
                if row[0].0 >= tag {
                    let mut acc: SparseVec = Vec::new();
                    for (t, c) in row {
                        acc = linalg::axpy(&acc, c, &a[(t - tag) as usize]);
                    }
                    kernel.push(acc);
                }
            }
            debug_assert_eq!(kernel.len(), dim);
            return (dim, Some(kernel));
        }
        (dim, None)
    }

    pub fn degree(&mut self, n: usize, with_representatives: bool) -> DegreeRelations {
        assert!(n >= 2, "relations start in degree 2");
        let dn = self.d();
        let w = self.dual.basis(n).to_vec();
        let (zdim, zbasis) = self.z_space(n, with_representatives);
        let count = zdim - w.len();
        let representatives = zbasis.map(|z| {
            let normal = Echelon::from_rows(PivotOrder::Highest, z).pivots();
            let local = |x: u64| normal.binary_search(&x).ok();
            let rows: Vec<SparseVec> = w
                .iter()
                .map(|r| r.iter().filter_map(|(x, c)| local(*x).map(|p| (p as u64, c.clone()))).collect())
                .collect();
            linalg::annihilator(rows, normal.len() as u64)
                .into_iter()
                .map(|v| {
                    let e = v.into_iter().map(|(p, c)| (normal[p as usize], c)).collect();
                    TensorVec::from_sparse(dn, n, e)
                })
                .collect()
        });
        let groebner_words = self.groebner_words(n);
        DegreeRelations { degree: n, count, representatives, groebner_words }
    }

    fn groebner_words(&mut self, n: usize) -> Vec<Vec<usize>> {
        let d = self.d() as u64;
        let prev = self.standard_words(n - 1).clone();
        let cur = self.standard_words(n).clone();
        let low = d.pow((n - 1) as u32);
        let mut out = Vec::new();
        for &p in &prev {
            for j in 0..d {
                let w = p * d + j;
                if !cur.contains(&w) && prev.contains(&(w % low)) {
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out.into_iter().map(|w| tensor::index_word(d as usize, n, w)).collect()
    }

    /// Relation counts and Groebner counts for degrees `2..=max_degree`.
    pub fn counts(&mut self, max_degree: usize) -> Vec<(usize, usize, usize)> {
        (2..=max_degree)
            .map(|n| {
                let r = self.degree(n, false);
                (n, r.count, r.groebner_words.len())
            })
            .collect()
    }
}

/// Basis of the new degree-`n` relations.
pub fn relations(bp: &BraidedPair, n: usize) -> Vec<TensorVec> {
    RelationComputation::new(bp).degree(n, true).representatives.unwrap_or_default()
}

/// `d_y = (id (x) y) Delta^{n-1,1}`: pairs the last slot with the dual vector `y`.
pub fn derivation(y: usize, v: &TensorVec) -> Result<TensorVec> {
    let n = v.degree();
    if n == 0 {
        return Err(Error::Degree { expected: 1, got: 0 });
    }
    let d = v.dim() as u64;
    let e = v
        .entries()
        .iter()
        .filter(|(w, _)| w % d == y as u64)
        .map(|(w, c)| (w / d, c.clone()))
        .collect();
    Ok(TensorVec::from_sparse(v.dim(), n - 1, e))
}

/// `T_{i,j}` acting on slots `0..i+j` of `v`, where the first `i` slots form the left factor.
fn shuffle_product(v: &TensorVec, i: usize, j: usize, cols: &tensor::Columns) -> TensorVec {
    if i == 0 || j == 0 || v.is_zero() {
        return v.clone();
    }
    if i == 1 {
        return v.shuffle_first(0, j, cols);
    }
    // last output slot comes from the right factor, or the last letter of the left factor moved there
    let keep = shuffle_product(v, i, j - 1, cols);
    let mut moved = v.clone();
    for p in i - 1..i + j - 1 {
        moved = moved.apply_at(p, cols);
    }
    keep.add(&shuffle_product(&moved, i - 1, j, cols))
}

/// Product in the tensor coalgebra: `T_{i,j}(a (x) b)`.
pub fn multiply(bp: &BraidedPair, a: &TensorVec, b: &TensorVec) -> TensorVec {
    shuffle_product(&a.concat(b), a.degree(), b.degree(), bp.columns())
}

/// Product of several elements, left to right.
pub fn multiply_all(bp: &BraidedPair, factors: &[TensorVec]) -> TensorVec {
    let mut acc = TensorVec::scalar(bp.dim(), Cyc::one());
    for f in factors {
        acc = multiply(bp, &acc, f);
    }
    acc
}

/// `x^k` in the tensor coalgebra.
pub fn power(bp: &BraidedPair, x: &TensorVec, k: usize) -> TensorVec {
    multiply_all(bp, &vec![x.clone(); k])
}

/// Braided adjoint of the generator `x_i`: `x_i v - m(c(x_i (x) v))`.
pub fn adjoint(bp: &BraidedPair, i: usize, v: &TensorVec) -> TensorVec {
    let n = v.degree();
    let x = TensorVec::basis(bp.dim(), &[i]);
    let xv = x.concat(v);
    let left = xv.shuffle_first(0, n, bp.columns());
    let mut braided = xv;
    for p in 0..n {
        braided = braided.apply_at(p, bp.columns());
    }
    left.sub(&shuffle_product(&braided, n, 1, bp.columns()))
}

/// Nilpotency order of an adjoint action.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NilOrder {
    Finite(usize),
    Infinite,
}

impl fmt::Display for NilOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NilOrder::Finite(n) => write!(f, "{n}"),
            NilOrder::Infinite => f.write_str("inf"),
        }
    }
}

/// Least `t >= 0` with `q_ii^t q_ij q_ji = 1`, searched over one period of `q_ii`.
pub fn least_t(q: &[Vec<Cyc>], i: usize, j: usize) -> Option<usize> {
    let s = &q[i][j] * &q[j][i];
    if s.is_one() {
        return Some(0);
    }
    let period = match q[i][i].order() {
        RootOrder::Finite(n) => n as usize,
        RootOrder::Infinite => return None,
    };
    let mut acc = s;
    for t in 1..period {
        acc = &acc * &q[i][i];
        if acc.is_one() {
            return Some(t);
        }
    }
    None
}

/// The closed form `r + 1`, `r = min{t, N(q_ii) - 1}`, for `Ad_{x_i}` on `x_j`.
pub fn nilpotency_formula(q: &[Vec<Cyc>], i: usize, j: usize) -> NilOrder {
    let n = q[i][i].order().finite().map(|n| n as usize);
    match (least_t(q, i, j), n) {
        (Some(t), Some(n)) => NilOrder::Finite(t.min(n - 1) + 1),
        (Some(t), None) => NilOrder::Finite(t + 1),
        (None, Some(n)) => NilOrder::Finite(n),
        (None, None) => NilOrder::Infinite,
    }
}

/// Iterates `Ad_{x_i}` on `x_j` up to `cap` times; the first `k` with `Ad^k = 0`.
pub fn nilpotency_direct(bp: &BraidedPair, i: usize, j: usize, cap: usize) -> Option<usize> {
    let mut y = TensorVec::basis(bp.dim(), &[j]);
    for k in 1..=cap {
        y = adjoint(bp, i, &y);
        if y.is_zero() {
            return Some(k);
        }
    }
    None
}

/// How far to iterate when the closed form says the order is infinite.
pub const INFINITE_PROBE: usize = 8;

/// Nilpotency order of `Ad_{x_i}` on `x_j` for a diagonal pair, cross-checked
/// against direct iteration.
pub fn nilpotency_order(bp: &BraidedPair, i: usize, j: usize) -> Result<NilOrder> {
    let q = bp.diagonal_matrix().ok_or_else(|| Error::Invalid("braiding is not diagonal".into()))?;
    if i == j || i >= bp.dim() || j >= bp.dim() {
        return Err(Error::Index(format!("need distinct indices below {}, got ({i}, {j})", bp.dim())));
    }
    let formula = nilpotency_formula(&q, i, j);
    let cap = match formula {
        NilOrder::Finite(n) => n,
        NilOrder::Infinite => INFINITE_PROBE,
    };
    let direct = nilpotency_direct(bp, i, j, cap);
    let agrees = match (formula, direct) {
        (NilOrder::Finite(n), Some(k)) => n == k,
        (NilOrder::Infinite, None) => true,
        _ => false,
    };
    if !agrees {
        return Err(Error::Disagreement {
            formula: formula.to_string(),
            direct: direct.map_or("none".into(), |k| k.to_string()),
        });
    }
    Ok(formula)
}

/// Dimension of `ker d_y` on `B^n`.
pub fn derivation_kernel_dim(gc: &mut GradedComputation, y: usize, n: usize) -> usize {
    let basis = gc.basis_vectors(n);
    let images = basis.iter().map(|b| derivation(y, b).expect("n >= 1").into_entries());
    basis.len() - Echelon::from_rows(PivotOrder::Lowest, images).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bpair;

    fn cyc(m: u32, e: i64) -> Cyc {
        Cyc::root_of_unity(m, e)
    }

    #[test]
    fn one_dimensional() {
        for n in 2..7u32 {
            let bp = bpair::diagonal(&[vec![cyc(n, 1)]]).unwrap();
            let h = hilbert(&bp, 10);
            assert_eq!(h.dims, [vec![1; n as usize], vec![0]].concat());
            assert_eq!(h.total, Some(n as usize));
        }
    }

    #[test]
    fn v3_minus_one() {
        let bp = bpair::v3(&Cyc::from_int(-1)).unwrap();
        let h = hilbert(&bp, 6);
        assert_eq!(h.dims, vec![1, 3, 4, 3, 1, 0]);
        let mut rc = RelationComputation::new(&bp);
        let r2 = rc.degree(2, true);
        assert_eq!(r2.count, 5);
        assert_eq!(r2.representatives.unwrap().len(), 5);
        for n in 3..6 {
            assert_eq!(rc.degree(n, false).count, 0);
        }
        assert_eq!(kernel_basis(&bp, 2).len(), 5);
        assert_eq!(kernel_basis(&bp, 3).len(), 27 - 3);
    }

    #[test]
    fn products() {
        let q = cyc(5, 2);
        let bp = bpair::diagonal(&[vec![q.clone()]]).unwrap();
        let x = TensorVec::basis(1, &[0]);
        assert_eq!(multiply(&bp, &x, &x), TensorVec::basis(1, &[0, 0]).scale(&(Cyc::one() + &q)));
        let x3 = power(&bp, &x, 3);
        let fact = crate::scalars::q_factorial(3, &q);
        assert_eq!(x3, TensorVec::basis(1, &[0, 0, 0]).scale(&fact));
        // T_{1,n} through both code paths
        let v3 = bpair::v3(&Cyc::from_int(-1)).unwrap();
        let a = TensorVec::basis(3, &[1]);
        let b = TensorVec::from_words(3, 2, vec![(vec![0, 2], Cyc::one()), (vec![2, 1], cyc(3, 1))]);
        let ab = a.concat(&b);
        assert_eq!(shuffle_product(&ab, 1, 2, v3.columns()), ab.shuffle_first(0, 2, v3.columns()));
    }

    #[test]
    fn nilpotency_small() {
        let i = cyc(4, 1);
        let bp = bpair::diagonal(&[vec![Cyc::from_int(-1), i.clone()], vec![Cyc::from_int(-1), i]]).unwrap();
        assert_eq!(nilpotency_order(&bp, 0, 1).unwrap(), NilOrder::Finite(2));
        let one = bpair::diagonal(&[vec![Cyc::one(), cyc(3, 1)], vec![Cyc::one(), Cyc::one()]]).unwrap();
        assert_eq!(nilpotency_order(&one, 0, 1).unwrap(), NilOrder::Infinite);
    }
}
