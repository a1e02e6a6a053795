//! Crossed sets, their multiplicative cochain complex with coefficients in the
//! `m`-th roots of unity, and cohomology.
//!
//! A cochain `f : X^n -> mu_m` is stored additively as its exponent table in
//! `Z/m`, indexed like tensor words (`x_0` most significant).

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use malachite_base::num::arithmetic::traits::Gcd;
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;

use crate::bpair;
use crate::error::{Error, Result};
use crate::groups::{self, FiniteGroup};
use crate::linalg;

/// A finite set with `table[i][j] = i |> j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedSet {
    table: Vec<Vec<usize>>,
}

/// Name of the first failing crossed-set axiom and a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub detail: String,
}

/// Checks the four axioms: bijective left translations, idempotence,
/// `i |> j = j => j |> i = i`, and self-distributivity.
pub fn check_crossed_set(table: &[Vec<usize>]) -> std::result::Result<(), AxiomFailure> {
    let n = table.len();
    let fail = |axiom, detail: String| Err(AxiomFailure { axiom, detail });
    for (i, row) in table.iter().enumerate() {
        if row.len() != n || row.iter().any(|&x| x >= n) {
            return fail("shape", format!("row {i} is not a map into 0..{n}"));
        }
    }
    for (i, row) in table.iter().enumerate() {
        let mut seen = vec![false; n];
        for &x in row {
            if seen[x] {
                return fail("bijective", format!("{i} |> . is not injective"));
            }
            seen[x] = true;
        }
    }
    for (i, row) in table.iter().enumerate() {
        if row[i] != i {
            return fail("idempotent", format!("{i} |> {i} = {}", row[i]));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if table[i][j] == j && table[j][i] != i {
                return fail("symmetric-fixing", format!("{i} |> {j} = {j} but {j} |> {i} != {i}"));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[i][table[j][k]] != table[table[i][j]][table[i][k]] {
                    return fail("self-distributive", format!("fails at ({i},{j},{k})"));
                }
            }
        }
    }
    Ok(())
}

impl CrossedSet {
    pub fn new(table: Vec<Vec<usize>>) -> Result<CrossedSet> {
        check_crossed_set(&table).map_err(|f| Error::CrossedSet(f.axiom, f.detail))?;
        Ok(CrossedSet { table })
    }

    /// `i |> j = j`.
    pub fn trivial(n: usize) -> CrossedSet {
        CrossedSet { table: (0..n).map(|_| (0..n).collect()).collect() }
    }

    /// `Z/n` with `i |> j = 2i - j`; for `n = 3` this is `-i - j`.
    pub fn dihedral(n: usize) -> CrossedSet {
        CrossedSet::new((0..n).map(|i| (0..n).map(|j| (2 * i + n - j) % n).collect()).collect())
            .expect("dihedral quandle")
    }

    /// The class of 3-cycles `(1 2 3)`-type in the alternating group on four letters.
    pub fn tetrahedral() -> CrossedSet {
        let a4 = FiniteGroup::alternating(4);
        let g = (0..a4.order()).find(|&x| a4.element_order(x) == 3).expect("3-cycle");
        let class = groups::conjugacy_class(&a4, g);
        conjugation_crossed_set(&a4, &[class]).expect("conjugacy class").0
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn act(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Classes of the equivalence relation generated by `j ~ i |> j`, sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(j) = queue.pop_front() {
                for i in 0..n {
                    // both directions: j ~ i |> j, and its inverse image
                    for k in [self.table[i][j], self.table[i].iter().position(|&x| x == j).unwrap()] {
                        if comp[k] == usize::MAX {
                            comp[k] = id;
                            members.push(k);
                            queue.push_back(k);
                        }
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }
}

/// Union of conjugacy classes of `g_` with `i |> j = i j i^{-1}`. Also returns the
/// group element behind each point.
pub fn conjugation_crossed_set(g_: &FiniteGroup, classes: &[Vec<usize>]) -> Result<(CrossedSet, Vec<usize>)> {
    let elems: Vec<usize> = classes.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let pos = |x: usize| elems.binary_search(&x).ok();
    let mut table = Vec::with_capacity(elems.len());
    for &a in &elems {
        let row = elems
            .iter()
            .map(|&b| pos(g_.conj(a, b)).ok_or_else(|| Error::Invalid("union of classes not closed under conjugation".into())))
            .collect::<Result<Vec<_>>>()?;
        table.push(row);
    }
    Ok((CrossedSet::new(table)?, elems))
}

/// A 2-cochain `f(i,j) = zeta_m^{e(i,j)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle2 {
    modulus: u32,
    exponents: Vec<Vec<u32>>,
}

impl Cocycle2 {
    pub fn new(modulus: u32, exponents: Vec<Vec<u32>>) -> Result<Cocycle2> {
        if modulus == 0 {
            return Err(Error::Invalid("modulus must be positive".into()));
        }
        let n = exponents.len();
        if exponents.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("exponent table is not square".into()));
        }
        let exponents = exponents.into_iter().map(|r| r.into_iter().map(|e| e % modulus).collect()).collect();
        Ok(Cocycle2 { modulus, exponents })
    }

    pub fn constant(n: usize, modulus: u32, e: u32) -> Cocycle2 {
        Cocycle2::new(modulus, vec![vec![e; n]; n]).expect("constant cochain")
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn size(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponent(&self, i: usize, j: usize) -> u32 {
        self.exponents[i][j]
    }

    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exponents
    }

    /// Exponent vector indexed by `i * |X| + j`.
    pub fn flat(&self) -> Vec<u32> {
        self.exponents.iter().flatten().copied().collect()
    }
}

/// Elementary divisors of a finite abelian group; the trivial group has none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyGroup {
    pub factors: Vec<u64>,
}

impl CohomologyGroup {
    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }
}

impl fmt::Display for CohomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

fn tuples(size: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = size.pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut t = vec![0; n];
        for slot in (0..n).rev() {
            t[slot] = idx % size;
            idx /= size;
        }
        t
    })
}

fn tuple_index(size: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &x| acc * size + x)
}

/// Integer matrix of `delta^n : C^n -> C^{n+1}` on exponent vectors; rows `X^{n+1}`,
/// columns `X^n`. For `X^0` there is a single column.
pub fn delta_matrix(x: &CrossedSet, n: usize) -> Vec<Vec<i64>> {
    let s = x.size();
    let cols = s.pow(n as u32);
    let mut m = vec![vec![0i64; cols]; s.pow(n as u32 + 1)];
    if n == 0 {
        return m;
    }
    for (r, t) in tuples(s, n + 1).enumerate() {
        for i in 0..n {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let mut omit: Vec<usize> = t.clone();
            omit.remove(i);
            m[r][tuple_index(s, &omit)] += sign;
            let mut acted: Vec<usize> = t[..i].to_vec();
            acted.extend(t[i + 1..].iter().map(|&y| x.act(t[i], y)));
            m[r][tuple_index(s, &acted)] -= sign;
        }
    }
    m
}

/// Applies `delta^n` to an exponent vector mod `m`.
pub fn apply_delta(x: &CrossedSet, n: usize, f: &[u32], m: u32) -> Vec<u32> {
    delta_matrix(x, n)
        .iter()
        .map(|row| {
            let v: i64 = row.iter().zip(f).map(|(&a, &b)| a * b as i64).sum();
            v.rem_euclid(m as i64) as u32
        })
        .collect()
}

fn invariants(m: &[Vec<i64>]) -> Vec<Natural> {
    let a: Vec<Vec<Integer>> = m.iter().map(|r| r.iter().map(|&x| Integer::from(x)).collect()).collect();
    linalg::smith_invariants(a)
}

/// `H^n(X; Z/m)` from Smith forms of the integral differentials.
pub fn cohomology(x: &CrossedSet, n: usize, m: u32) -> CohomologyGroup {
    let s = x.size() as u64;
    let width = s.pow(n as u32);
    // incoming differential (zero for n = 0)
    let incoming = if n == 0 { Vec::new() } else { invariants(&delta_matrix(x, n - 1)) };
    let outgoing = invariants(&delta_matrix(x, n));
    let free = width - incoming.len() as u64 - outgoing.len() as u64;
    let mn = Natural::from(m);
    let mut factors: Vec<u64> = vec![m as u64; free as usize];
    for e in incoming.iter().chain(outgoing.iter()) {
        let g = u64::try_from(&e.clone().gcd(&mn)).expect("divides m");
        if g > 1 {
            factors.push(g);
        }
    }
    if m == 1 {
        factors.clear();
    }
    factors.sort_unstable();
    CohomologyGroup { factors }
}

/// `H^1(X; Z/m)` and the components `pi_0(X)`.
pub fn h1(x: &CrossedSet, m: u32) -> (CohomologyGroup, Vec<Vec<usize>>) {
    (cohomology(x, 1, m), x.components())
}

pub fn h2(x: &CrossedSet, m: u32) -> CohomologyGroup {
    cohomology(x, 2, m)
}

/// Whether `f` is a 2-cocycle.
pub fn is_cocycle(x: &CrossedSet, f: &Cocycle2) -> bool {
    apply_delta(x, 2, &f.flat(), f.modulus()).iter().all(|&v| v == 0)
}

/// Whether `c^f` satisfies the braid equation.
pub fn braidings_check(x: &CrossedSet, f: &Cocycle2) -> bool {
    bpair::from_cocycle(x, f).is_ok()
}

/// Order of the group generated by the grouplikes `g_i(j) = f(i,j) (i |> j)`,
/// realized as permutations of `X x Z/m`.
pub fn grouplike_closure(x: &CrossedSet, f: &Cocycle2) -> usize {
    let (n, m) = (x.size(), f.modulus() as usize);
    let gens: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            (0..n * m)
                .map(|y| {
                    let (j, a) = (y / m, y % m);
                    (x.act(i, j) * m + (a + f.exponent(i, j) as usize) % m) as u32
                })
                .collect()
        })
        .collect();
    let id: Vec<u32> = (0..(n * m) as u32).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in &gens {
            let q: Vec<u32> = p.iter().map(|&y| g[y as usize]).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.len()
}
