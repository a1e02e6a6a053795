//! Braided pairs `(V, c)` and their constructors.
//!
//! The braiding is stored column-wise on `V (x) V`: column `i*d + j` is the image
//! of `x_i (x) x_j`, with output index `k*d + l` for `x_k (x) x_l`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groups::{self, FiniteGroup, Representation};
use crate::linalg;
use crate::quandle::{Cocycle2, CrossedSet};
use crate::scalars::{lcm, Cyc};
use crate::tensor::TensorVec;

/// Sparse column: `(output index, coefficient)`, sorted, nonzero.
pub type Column = Vec<(u32, Cyc)>;

/// A finite group acting on `V`, with a degree (group element) for each basis vector.
#[derive(Clone, Debug)]
pub struct GroupAction {
    pub group: FiniteGroup,
    /// Group element attached to each basis vector.
    pub labels: Vec<usize>,
    /// `matrices[h][j]` is `h . x_j`.
    pub matrices: Vec<Vec<Column>>,
}

#[derive(Clone, Debug)]
pub struct BraidedPair {
    dim: usize,
    cols: Vec<Column>,
    inv: Vec<Column>,
    /// `grouplikes[i][j] = g_i(x_j)` when `c(x_i (x) x_j) = g_i(x_j) (x) x_i`.
    grouplikes: Option<Vec<Vec<Column>>>,
    action: Option<GroupAction>,
}

/// A partition of the basis into blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub blocks: Vec<Vec<usize>>,
}

/// Result of [`check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostics {
    /// First basis tensor `x_a (x) x_b (x) x_c` where the braid equation fails.
    pub braid_failure: Option<(usize, usize, usize)>,
    pub invertible: bool,
    /// First `(i, j)` where `c(x_i (x) x_j)` disagrees with `g_i(x_j) (x) x_i`.
    pub grouplike_failure: Option<(usize, usize)>,
}

impl Diagnostics {
    pub fn ok(&self) -> bool {
        self.braid_failure.is_none() && self.invertible && self.grouplike_failure.is_none()
    }
}

/// How the summands of a direct sum braid with each other.
#[derive(Clone, Debug)]
pub enum CrossDatum {
    /// `c(a_i (x) b_j) = a_on_b[i][j] b_j (x) a_i` and `c(b_j (x) a_i) = b_on_a[j][i] a_i (x) b_j`.
    Scalars { a_on_b: Vec<Vec<Cyc>>, b_on_a: Vec<Vec<Cyc>> },
    /// Full diagonal matrix for the sum of two diagonal pairs.
    JointDiagonal(Vec<Vec<Cyc>>),
    /// Both pairs carry actions of the same group.
    SameGroup,
}

fn normalize_column(col: Vec<(u32, Cyc)>) -> Column {
    let v = linalg::normalize(col.into_iter().map(|(i, c)| (i as u64, c)).collect());
    v.into_iter().map(|(i, c)| (i as u32, c)).collect()
}

fn braid_failure(dim: usize, cols: &[Column]) -> Option<(usize, usize, usize)> {
    for a in 0..dim {
        for b in 0..dim {
            for c in 0..dim {
                let v = TensorVec::basis(dim, &[a, b, c]);
                let lhs = v.apply_at(0, cols).apply_at(1, cols).apply_at(0, cols);
                let rhs = v.apply_at(1, cols).apply_at(0, cols).apply_at(1, cols);
                if lhs != rhs {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

fn infer_grouplikes(dim: usize, cols: &[Column]) -> Option<Vec<Vec<Column>>> {
    let d = dim as u32;
    let mut g = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            for (out, c) in &cols[i * dim + j] {
                if out % d != i as u32 {
                    return None;
                }
                g[i][j].push((out / d, c.clone()));
            }
        }
    }
    Some(g)
}

impl BraidedPair {
    /// Validates the braid equation and invertibility, and records grouplikes
    /// whenever the braiding has the form `c(x_i (x) x_j) = g_i(x_j) (x) x_i`.
    pub fn from_columns(dim: usize, cols: Vec<Column>) -> Result<BraidedPair> {
        if cols.len() != dim * dim {
            return Err(Error::Invalid(format!("expected {} columns, got {}", dim * dim, cols.len())));
        }
        let cols: Vec<Column> = cols.into_iter().map(normalize_column).collect();
        if cols.iter().flatten().any(|(i, _)| *i as usize >= dim * dim) {
            return Err(Error::Invalid("column entry out of range".into()));
        }
        if let Some(t) = braid_failure(dim, &cols) {
            return Err(Error::BraidEquation(t));
        }
        let inv = linalg::invert_columns(&cols).ok_or(Error::NotInvertible)?;
        let grouplikes = infer_grouplikes(dim, &cols);
        Ok(BraidedPair { dim, cols, inv, grouplikes, action: None })
    }

    /// Builds `c(x_i (x) x_j) = g_i(x_j) (x) x_i`; `g[i][j]` lists `g_i(x_j)`.
    pub fn from_grouplikes(dim: usize, g: Vec<Vec<Column>>) -> Result<BraidedPair> {
        let mut cols = vec![Vec::new(); dim * dim];
        for (i, gi) in g.iter().enumerate() {
            for (j, img) in gi.iter().enumerate() {
                cols[i * dim + j] = img.iter().map(|(k, c)| (*k * dim as u32 + i as u32, c.clone())).collect();
            }
        }
        BraidedPair::from_columns(dim, cols)
    }

    /// From a dense `d^2 x d^2` matrix, `m[row][col]`.
    pub fn from_matrix(dim: usize, m: &[Vec<Cyc>]) -> Result<BraidedPair> {
        let n = dim * dim;
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid(format!("braiding matrix must be {n} x {n}")));
        }
        let cols = (0..n)
            .map(|c| (0..n).filter(|&r| !m[r][c].is_zero()).map(|r| (r as u32, m[r][c].clone())).collect())
            .collect();
        BraidedPair::from_columns(dim, cols)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn columns(&self) -> &[Column] {
        &self.cols
    }

    pub fn inverse_columns(&self) -> &[Column] {
        &self.inv
    }

    pub fn grouplikes(&self) -> Option<&Vec<Vec<Column>>> {
        self.grouplikes.as_ref()
    }

    pub fn group_action(&self) -> Option<&GroupAction> {
        self.action.as_ref()
    }

    /// `c(x_i (x) x_j)` as a degree-2 tensor.
    pub fn braid(&self, i: usize, j: usize) -> TensorVec {
        TensorVec::basis(self.dim, &[i, j]).apply_at(0, &self.cols)
    }

    /// Dense matrix entry `<x_k (x) x_l, c(x_i (x) x_j)>`.
    pub fn entry(&self, out: usize, input: usize) -> Cyc {
        self.cols[input]
            .binary_search_by_key(&(out as u32), |e| e.0)
            .map(|p| self.cols[input][p].1.clone())
            .unwrap_or_default()
    }

    /// Smallest conductor containing every braiding coefficient.
    pub fn conductor(&self) -> u32 {
        self.cols
            .iter()
            .flatten()
            .fold(1u64, |m, (_, c)| lcm(m, c.minimal().conductor() as u64)) as u32
    }

    /// The matrix `q` if `c(x_i (x) x_j) = q_ij x_j (x) x_i` for all `i, j`.
    pub fn diagonal_matrix(&self) -> Option<Vec<Vec<Cyc>>> {
        let d = self.dim;
        let mut q = vec![vec![Cyc::zero(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let col = &self.cols[i * d + j];
                if col.len() != 1 || col[0].0 as usize != j * d + i {
                    return None;
                }
                q[i][j] = col[0].1.clone();
            }
        }
        Some(q)
    }

    pub fn is_diagonal(&self) -> bool {
        self.diagonal_matrix().is_some()
    }

    /// The pair `(V, c^T)`; it acts on the dual basis.
    pub fn transpose(&self) -> BraidedPair {
        let n = self.dim * self.dim;
        let mut cols = vec![Vec::new(); n];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                cols[*i as usize].push((j as u32, c.clone()));
            }
        }
        let mut inv = vec![Vec::new(); n];
        for (j, col) in self.inv.iter().enumerate() {
            for (i, c) in col {
                inv[*i as usize].push((j as u32, c.clone()));
            }
        }
        let cols: Vec<Column> = cols.into_iter().map(normalize_column).collect();
        let inv: Vec<Column> = inv.into_iter().map(normalize_column).collect();
        let grouplikes = infer_grouplikes(self.dim, &cols);
        BraidedPair { dim: self.dim, cols, inv, grouplikes, action: None }
    }

    /// Same braiding written in the basis `z_j = sum_i p[i][j] x_i`.
    pub fn change_basis(&self, p: &[Vec<Cyc>]) -> Result<BraidedPair> {
        let d = self.dim;
        let pcols: Vec<Column> =
            (0..d).map(|j| (0..d).filter(|&i| !p[i][j].is_zero()).map(|i| (i as u32, p[i][j].clone())).collect()).collect();
        let pinv = linalg::invert_columns(&pcols).ok_or_else(|| Error::Invalid("singular basis change".into()))?;
        let vec_of = |col: &Column| TensorVec::from_entries(d, 1, col.iter().map(|(i, c)| (*i as u64, c.clone())).collect());
        // P^{-1} (x) P^{-1} as a two-slot operator
        let mut kron = vec![Vec::new(); d * d];
        for k in 0..d {
            for l in 0..d {
                for (u, a) in &pinv[k] {
                    for (v, b) in &pinv[l] {
                        kron[k * d + l].push((*u * d as u32 + *v, a * b));
                    }
                }
            }
        }
        let kron: Vec<Column> = kron.into_iter().map(normalize_column).collect();
        let mut cols = Vec::with_capacity(d * d);
        for a in 0..d {
            for b in 0..d {
                let v = vec_of(&pcols[a]).concat(&vec_of(&pcols[b]));
                let w = v.apply_at(0, &self.cols).apply_at(0, &kron);
                cols.push(w.entries().iter().map(|(i, c)| (*i as u32, c.clone())).collect());
            }
        }
        BraidedPair::from_columns(d, cols)
    }

    /// Restriction to the span of a subset of basis vectors (which must be braided into itself).
    pub fn restrict(&self, indices: &[usize]) -> Result<BraidedPair> {
        let d = self.dim;
        let pos: BTreeMap<usize, usize> = indices.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let e = indices.len();
        let mut cols = Vec::with_capacity(e * e);
        for &a in indices {
            for &b in indices {
                let mut col = Vec::new();
                for (out, c) in &self.cols[a * d + b] {
                    let (k, l) = (*out as usize / d, *out as usize % d);
                    match (pos.get(&k), pos.get(&l)) {
                        (Some(&pk), Some(&pl)) => col.push(((pk * e + pl) as u32, c.clone())),
                        _ => return Err(Error::Invalid(format!("subspace not closed under c at ({a},{b})"))),
                    }
                }
                cols.push(col);
            }
        }
        BraidedPair::from_columns(e, cols)
    }

    /// Whether `c_{BA} c_{AB} = id` on `A (x) B` for the spans of two index sets.
    pub fn cross_square_is_identity(&self, a: &[usize], b: &[usize]) -> bool {
        a.iter().all(|&i| {
            b.iter().all(|&j| {
                let v = TensorVec::basis(self.dim, &[i, j]);
                v.apply_at(0, &self.cols).apply_at(0, &self.cols) == v
            })
        })
    }
}

/// Validates braid equation, invertibility and grouplike consistency.
pub fn check(bp: &BraidedPair) -> Diagnostics {
    check_columns(bp.dim, &bp.cols, bp.grouplikes.as_ref())
}

pub fn check_columns(dim: usize, cols: &[Column], grouplikes: Option<&Vec<Vec<Column>>>) -> Diagnostics {
    let braid_failure = braid_failure(dim, cols);
    let invertible = linalg::invert_columns(cols).is_some();
    let mut grouplike_failure = None;
    if let Some(g) = grouplikes {
        'outer: for i in 0..dim {
            for j in 0..dim {
                let expect: Column =
                    normalize_column(g[i][j].iter().map(|(k, c)| (*k * dim as u32 + i as u32, c.clone())).collect());
                if expect != normalize_column(cols[i * dim + j].clone()) {
                    grouplike_failure = Some((i, j));
                    break 'outer;
                }
            }
        }
    }
    Diagnostics { braid_failure, invertible, grouplike_failure }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut x = x;
    while parent[x] != r {
        let next = parent[x];
        parent[x] = r;
        x = next;
    }
    r
}

/// The finest decomposition compatible with the braiding support, followed by
/// all of its coarsenings (only the finest and the trivial one when there are
/// more than eight blocks).
pub fn find_decompositions(bp: &BraidedPair) -> Vec<Decomposition> {
    let d = bp.dim;
    let mut parent: Vec<usize> = (0..d).collect();
    for i in 0..d {
        for j in 0..d {
            for (out, _) in &bp.cols[i * d + j] {
                let (k, l) = (*out as usize / d, *out as usize % d);
                // c(V_a (x) V_b) must land in V_b (x) V_a
                let (rk, rj) = (find(&mut parent, k), find(&mut parent, j));
                parent[rk] = rj;
                let (rl, ri) = (find(&mut parent, l), find(&mut parent, i));
                parent[rl] = ri;
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..d {
        let r = find(&mut parent, i);
        blocks.entry(r).or_default().push(i);
    }
    let mut finest: Vec<Vec<usize>> = blocks.into_values().collect();
    finest.sort();
    let mut out = vec![Decomposition { blocks: finest.clone() }];
    if finest.len() > 8 {
        out.push(Decomposition { blocks: vec![(0..d).collect()] });
        return out;
    }
    for partition in set_partitions(finest.len()) {
        if partition.len() == finest.len() {
            continue;
        }
        let mut blocks: Vec<Vec<usize>> = partition
            .iter()
            .map(|group| {
                let mut b: Vec<usize> = group.iter().flat_map(|&g| finest[g].clone()).collect();
                b.sort();
                b
            })
            .collect();
        blocks.sort();
        out.push(Decomposition { blocks });
    }
    out
}

fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in set_partitions(n - 1) {
        for k in 0..p.len() {
            let mut q = p.clone();
            q[k].push(n - 1);
            out.push(q);
        }
        let mut q = p.clone();
        q.push(vec![n - 1]);
        out.push(q);
    }
    out
}

// ---- constructors ----

/// `c(x_i (x) x_j) = q_ij x_j (x) x_i`.
pub fn diagonal(q: &[Vec<Cyc>]) -> Result<BraidedPair> {
    let d = q.len();
    if q.iter().any(|r| r.len() != d) {
        return Err(Error::Invalid("braiding matrix is not square".into()));
    }
    if q.iter().flatten().any(Cyc::is_zero) {
        return Err(Error::Invalid("zero entry in diagonal braiding".into()));
    }
    let g = (0..d).map(|i| (0..d).map(|j| vec![(j as u32, q[i][j].clone())]).collect()).collect();
    BraidedPair::from_grouplikes(d, g)
}

/// `c(x_i (x) x_j) = q x_{-i-j} (x) x_i` over `Z/3`.
pub fn v3(q: &Cyc) -> Result<BraidedPair> {
    let g = (0..3)
        .map(|i| (0..3).map(|j| vec![(((6 - i - j) % 3) as u32, q.clone())]).collect())
        .collect();
    BraidedPair::from_grouplikes(3, g)
}

/// `c(x_a (x) x_b) = (t_a . x_b) (x) x_a` for the four-element class with the
/// tabulated action (`alpha = +-1`).
pub fn v4(q: &Cyc, alpha: &Cyc) -> Result<BraidedPair> {
    if *alpha != Cyc::one() && *alpha != Cyc::from_int(-1) {
        return Err(Error::Invalid("alpha must be 1 or -1".into()));
    }
    let qa = q * alpha;
    // (target, uses alpha)
    let table: [[(u32, bool); 4]; 4] = [
        [(0, false), (2, false), (3, false), (1, false)],
        [(3, false), (1, false), (0, true), (2, true)],
        [(1, false), (3, true), (2, false), (0, true)],
        [(2, false), (0, true), (1, true), (3, false)],
    ];
    let g = table
        .iter()
        .map(|row| row.iter().map(|&(k, a)| vec![(k, if a { qa.clone() } else { q.clone() })]).collect())
        .collect();
    BraidedPair::from_grouplikes(4, g)
}

/// The four-dimensional sum of two two-dimensional modules on the basis
/// `(x_1, x'_1, x_2, x'_2)`, with `alpha_i = beta_i^2`.
pub fn two_by_two(q1: &Cyc, q2: &Cyc, eta1: &Cyc, eta2: &Cyc, beta1: &Cyc, beta2: &Cyc) -> Result<BraidedPair> {
    let pm = |e: &Cyc| *e == Cyc::one() || *e == Cyc::from_int(-1);
    if !pm(eta1) || !pm(eta2) {
        return Err(Error::Invalid("eta must be 1 or -1".into()));
    }
    let (a1, a2) = (beta1 * beta1, beta2 * beta2);
    let (x1, y1, x2, y2) = (0u32, 1u32, 2u32, 3u32);
    // g[i][j] = image of basis j under the grouplike of basis i
    let mut g: Vec<Vec<Column>> = vec![vec![Vec::new(); 4]; 4];
    let e1q1 = eta1 * q1;
    let e2q2 = eta2 * q2;
    g[0][0] = vec![(x1, q1.clone())];
    g[0][1] = vec![(y1, e1q1.clone())];
    g[1][0] = vec![(x1, e1q1)];
    g[1][1] = vec![(y1, q1.clone())];
    g[2][2] = vec![(x2, q2.clone())];
    g[2][3] = vec![(y2, e2q2.clone())];
    g[3][2] = vec![(x2, e2q2)];
    g[3][3] = vec![(y2, q2.clone())];
    g[0][2] = vec![(y2, Cyc::one())];
    g[2][0] = vec![(y1, Cyc::one())];
    g[0][3] = vec![(x2, a2.clone())];
    g[2][1] = vec![(x1, a1.clone())];
    g[1][2] = vec![(y2, eta2.clone())];
    g[3][0] = vec![(y1, eta1.clone())];
    g[1][3] = vec![(x2, eta2 * &a2)];
    g[3][1] = vec![(x1, eta1 * &a1)];
    BraidedPair::from_grouplikes(4, g)
}

/// `c^f(i (x) j) = f(i,j) (i |> j) (x) i`.
pub fn from_cocycle(x: &CrossedSet, f: &Cocycle2) -> Result<BraidedPair> {
    let n = x.size();
    if f.size() != n {
        return Err(Error::Invalid("cocycle size does not match crossed set".into()));
    }
    let m = f.modulus();
    let g = (0..n)
        .map(|i| (0..n).map(|j| vec![(x.act(i, j) as u32, Cyc::root_of_unity(m, f.exponent(i, j) as i64))]).collect())
        .collect();
    BraidedPair::from_grouplikes(n, g)
}

/// The module `M(g, rho)` induced from a representation of the centralizer of `g`,
/// on the basis `z_{j l}` (index `j * deg + l`), with braiding
/// `c(z_{jl} (x) z) = (t_j . z) (x) z_{jl}`.
pub fn induced_yd(group: &FiniteGroup, g: usize, rep: &Representation) -> Result<BraidedPair> {
    let datum = groups::induced_datum(group, g, rep.clone())?;
    let deg = rep.degree();
    let s = datum.coset_reps.len();
    let dim = s * deg;
    let matrices: Vec<Vec<Column>> = (0..group.order())
        .map(|x| {
            (0..dim)
                .map(|basis| {
                    let (j, l) = (basis / deg, basis % deg);
                    let (u, k) = datum.decompose(group, x, j);
                    let rk = datum.rep.image(k).expect("centralizer element");
                    (0..deg)
                        .filter(|&w| !rk[w][l].is_zero())
                        .map(|w| ((u * deg + w) as u32, rk[w][l].clone()))
                        .collect()
                })
                .collect()
        })
        .collect();
    let labels: Vec<usize> = (0..dim).map(|b| datum.t[b / deg]).collect();
    from_action(GroupAction { group: group.clone(), labels, matrices })
}

/// Braiding `c(x (x) y) = (label(x) . y) (x) x` of a graded module.
pub fn from_action(action: GroupAction) -> Result<BraidedPair> {
    let g: Vec<Vec<Column>> = action.labels.iter().map(|&h| action.matrices[h].clone()).collect();
    let mut bp = BraidedPair::from_grouplikes(action.labels.len(), g)?;
    bp.action = Some(action);
    Ok(bp)
}

/// `a (+) b` with cross braidings supplied by `datum`.
pub fn direct_sum(a: &BraidedPair, b: &BraidedPair, datum: &CrossDatum) -> Result<BraidedPair> {
    let (da, db) = (a.dim, b.dim);
    let d = da + db;
    match datum {
        CrossDatum::SameGroup => {
            let (ga, gb) = match (&a.action, &b.action) {
                (Some(x), Some(y)) if x.group == y.group => (x, y),
                _ => return Err(Error::NoJointDatum),
            };
            let mut labels = ga.labels.clone();
            labels.extend_from_slice(&gb.labels);
            let matrices = (0..ga.group.order())
                .map(|h| {
                    let mut cols = ga.matrices[h].clone();
                    cols.extend(
                        gb.matrices[h].iter().map(|col| col.iter().map(|(k, c)| (k + da as u32, c.clone())).collect()),
                    );
                    cols
                })
                .collect();
            from_action(GroupAction { group: ga.group.clone(), labels, matrices })
        }
        CrossDatum::JointDiagonal(q) => {
            let (qa, qb) = (a.diagonal_matrix().ok_or(Error::NoJointDatum)?, b.diagonal_matrix().ok_or(Error::NoJointDatum)?);
            if q.len() != d || q.iter().any(|r| r.len() != d) {
                return Err(Error::Invalid("joint matrix has wrong size".into()));
            }
            for i in 0..d {
                for j in 0..d {
                    let expect = match (i < da, j < da) {
                        (true, true) => Some(&qa[i][j]),
                        (false, false) => Some(&qb[i - da][j - da]),
                        _ => None,
                    };
                    if expect.is_some_and(|e| *e != q[i][j]) {
                        return Err(Error::Invalid("joint matrix does not restrict to the summands".into()));
                    }
                }
            }
            diagonal(q)
        }
        CrossDatum::Scalars { a_on_b, b_on_a } => {
            if a_on_b.len() != da || b_on_a.len() != db {
                return Err(Error::Invalid("cross scalars have wrong size".into()));
            }
            let mut cols = vec![Vec::new(); d * d];
            for i in 0..d {
                for j in 0..d {
                    let col: Column = match (i < da, j < da) {
                        (true, true) => a.cols[i * da + j]
                            .iter()
                            .map(|(o, c)| (((*o as usize / da) * d + *o as usize % da) as u32, c.clone()))
                            .collect(),
                        (false, false) => b.cols[(i - da) * db + (j - da)]
                            .iter()
                            .map(|(o, c)| {
                                let (k, l) = (*o as usize / db + da, *o as usize % db + da);
                                ((k * d + l) as u32, c.clone())
                            })
                            .collect(),
                        (true, false) => vec![((j * d + i) as u32, a_on_b[i][j - da].clone())],
                        (false, true) => vec![((j * d + i) as u32, b_on_a[i - da][j].clone())],
                    };
                    cols[i * d + j] = col;
                }
            }
            BraidedPair::from_columns(d, cols)
        }
    }
}

/// Coefficients of `c(x_i (x) x_j)` keyed by output word, for display and tests.
pub fn braid_terms(bp: &BraidedPair, i: usize, j: usize) -> Vec<(Vec<usize>, Cyc)> {
    bp.braid(i, j).terms().map(|(w, c)| (w, c.clone())).collect()
}

/// `c^3 = lambda id` on the span of the given pairs `(i, j)`?
pub fn cube_is_scalar_on(bp: &BraidedPair, pairs: &[(usize, usize)], lambda: &Cyc) -> bool {
    pairs.iter().all(|&(i, j)| {
        let v = TensorVec::basis(bp.dim, &[i, j]);
        let c3 = v.apply_at(0, &bp.cols).apply_at(0, &bp.cols).apply_at(0, &bp.cols);
        c3 == v.scale(lambda)
    })
}

/// All ordered pairs of basis indices.
pub fn all_pairs(d: usize) -> Vec<(usize, usize)> {
    (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect()
}
