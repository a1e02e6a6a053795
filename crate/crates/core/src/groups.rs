//! Finite groups given by multiplication tables, and the data needed to
//! induce Yetter-Drinfeld modules from characters of centralizers.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::braidgrp::Perm;
use crate::error::{Error, Result};
use crate::scalars::Cyc;

/// A finite group; element `i` times element `j` is `table[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates associativity, identity and inverses.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Invalid("empty group".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::Invalid("multiplication table is not n x n over 0..n".into()));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::Invalid("no identity element".into()))?;
        let mut inverses = vec![0; n];
        for x in 0..n {
            inverses[x] = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::Invalid(format!("element {x} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::Invalid(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { table, identity, inverses })
    }

    /// Group of permutations closed under composition; element 0 is `perms[0]`.
    /// Product `a*b` is the composition `a o b`.
    pub fn from_permutations(perms: &[Perm]) -> Result<FiniteGroup> {
        let index: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        index
                            .get(&a.compose(b))
                            .copied()
                            .ok_or_else(|| Error::Invalid("permutations not closed".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::from_table(table)
    }

    /// `Z/n`, element `k` is the `k`-th power of the generator.
    pub fn cyclic(n: usize) -> FiniteGroup {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(table).expect("cyclic group")
    }

    /// Dihedral group of order `2n`: element `k + n*e` is `r^k s^e`.
    pub fn dihedral(n: usize) -> FiniteGroup {
        let idx = |k: usize, e: usize| k % n + n * e;
        let mut table = vec![vec![0; 2 * n]; 2 * n];
        for (x, row) in table.iter_mut().enumerate() {
            let (a, e) = (x % n, x / n);
            for (y, cell) in row.iter_mut().enumerate() {
                let (b, f) = (y % n, y / n);
                let k = if e == 0 { a + b } else { a + n - b };
                *cell = idx(k, (e + f) % 2);
            }
        }
        FiniteGroup::from_table(table).expect("dihedral group")
    }

    /// Symmetric group with elements in lexicographic order of image lists (identity first).
    pub fn symmetric(n: usize) -> FiniteGroup {
        FiniteGroup::from_permutations(&Perm::all(n)).expect("symmetric group")
    }

    /// Alternating group, even permutations in lexicographic order.
    pub fn alternating(n: usize) -> FiniteGroup {
        let even: Vec<Perm> = Perm::all(n).into_iter().filter(|p| p.length() % 2 == 0).collect();
        FiniteGroup::from_permutations(&even).expect("alternating group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `x g x^{-1}`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(x, g), self.inv(x))
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Subgroup generated by `gens`, sorted.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }
}

/// `{x : xg = gx}`, sorted.
pub fn centralizer(g_: &FiniteGroup, g: usize) -> Vec<usize> {
    (0..g_.order()).filter(|&x| g_.mul(x, g) == g_.mul(g, x)).collect()
}

/// Conjugacy class of `g`, sorted.
pub fn conjugacy_class(g_: &FiniteGroup, g: usize) -> Vec<usize> {
    let set: BTreeSet<usize> = (0..g_.order()).map(|x| g_.conj(x, g)).collect();
    set.into_iter().collect()
}

/// All conjugacy classes, ordered by least element.
pub fn conjugacy_classes(g_: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g_.order()];
    let mut out = Vec::new();
    for g in 0..g_.order() {
        if !seen[g] {
            let c = conjugacy_class(g_, g);
            for &x in &c {
                seen[x] = true;
            }
            out.push(c);
        }
    }
    out
}

/// Least element of each left coset `xH`, in increasing order.
pub fn coset_representatives(g_: &FiniteGroup, subgroup: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g_.order()];
    let mut reps = Vec::new();
    for x in 0..g_.order() {
        if !seen[x] {
            reps.push(x);
            for &h in subgroup {
                seen[g_.mul(x, h)] = true;
            }
        }
    }
    reps
}

/// A matrix representation of a subgroup, stored element by element.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    degree: usize,
    /// Dense matrices, `m[row][col]`, keyed by group element.
    images: HashMap<usize, Vec<Vec<Cyc>>>,
}

fn mat_mul(a: &[Vec<Cyc>], b: &[Vec<Cyc>]) -> Vec<Vec<Cyc>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = Cyc::zero();
                    for (k, bk) in b.iter().enumerate() {
                        if !a[i][k].is_zero() && !bk[j].is_zero() {
                            acc += &(&a[i][k] * &bk[j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn identity_matrix(n: usize) -> Vec<Vec<Cyc>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Cyc::one() } else { Cyc::zero() }).collect())
        .collect()
}

impl Representation {
    /// Extends images of generators to the subgroup they generate, checking consistency
    /// and the homomorphism property on `subgroup`.
    pub fn from_generators(
        g_: &FiniteGroup,
        subgroup: &[usize],
        gens: &[(usize, Vec<Vec<Cyc>>)],
    ) -> Result<Representation> {
        let degree = gens.first().map_or(1, |g| g.1.len());
        let mut images: HashMap<usize, Vec<Vec<Cyc>>> = HashMap::new();
        images.insert(g_.identity(), identity_matrix(degree));
        let mut queue = VecDeque::from([g_.identity()]);
        while let Some(x) = queue.pop_front() {
            for (g, m) in gens {
                let y = g_.mul(x, *g);
                let my = mat_mul(&images[&x], m);
                match images.get(&y) {
                    Some(old) if *old != my => {
                        return Err(Error::NotHomomorphism(format!(
                            "inconsistent images for element {y}"
                        )))
                    }
                    Some(_) => {}
                    None => {
                        images.insert(y, my);
                        queue.push_back(y);
                    }
                }
            }
        }
        let rep = Representation { degree, images };
        rep.check(g_, subgroup)?;
        Ok(rep)
    }

    /// A one-dimensional character given on generators.
    pub fn character(g_: &FiniteGroup, subgroup: &[usize], gens: &[(usize, Cyc)]) -> Result<Representation> {
        let gens: Vec<(usize, Vec<Vec<Cyc>>)> =
            gens.iter().map(|(g, v)| (*g, vec![vec![v.clone()]])).collect();
        Representation::from_generators(g_, subgroup, &gens)
    }

    /// A character given by its value on every element of `subgroup`.
    pub fn from_values(g_: &FiniteGroup, subgroup: &[usize], values: &[(usize, Cyc)]) -> Result<Representation> {
        let images = values.iter().map(|(g, v)| (*g, vec![vec![v.clone()]])).collect();
        let rep = Representation { degree: 1, images };
        rep.check(g_, subgroup)?;
        Ok(rep)
    }

    fn check(&self, g_: &FiniteGroup, subgroup: &[usize]) -> Result<()> {
        for &a in subgroup {
            let ma = self
                .images
                .get(&a)
                .ok_or_else(|| Error::NotHomomorphism(format!("no image for element {a}")))?;
            for &b in subgroup {
                let ab = g_.mul(a, b);
                let mab = self
                    .images
                    .get(&ab)
                    .ok_or_else(|| Error::NotHomomorphism(format!("no image for element {ab}")))?;
                if mat_mul(ma, &self.images[&b]) != *mab {
                    return Err(Error::NotHomomorphism(format!("rho({a})rho({b}) != rho({ab})")));
                }
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn image(&self, x: usize) -> Option<&Vec<Vec<Cyc>>> {
        self.images.get(&x)
    }
}

/// Data of the induced module `M(g, rho)`.
#[derive(Clone, Debug)]
pub struct InducedDatum {
    pub g: usize,
    pub centralizer: Vec<usize>,
    pub coset_reps: Vec<usize>,
    /// `t_j = h_j g h_j^{-1}`
    pub t: Vec<usize>,
    pub rep: Representation,
}

impl InducedDatum {
    /// For `x h_j = h_u k` with `k` in the centralizer, returns `(u, k)`.
    pub fn decompose(&self, g_: &FiniteGroup, x: usize, j: usize) -> (usize, usize) {
        let xh = g_.mul(x, self.coset_reps[j]);
        for (u, &h) in self.coset_reps.iter().enumerate() {
            let k = g_.mul(g_.inv(h), xh);
            if self.centralizer.binary_search(&k).is_ok() {
                return (u, k);
            }
        }
        unreachable!("coset representatives cover the group")
    }
}

pub fn induced_datum(g_: &FiniteGroup, g: usize, rep: Representation) -> Result<InducedDatum> {
    let centralizer = centralizer(g_, g);
    rep.check(g_, &centralizer)?;
    let coset_reps = coset_representatives(g_, &centralizer);
    let t = coset_reps.iter().map(|&h| g_.conj(h, g)).collect();
    Ok(InducedDatum { g, centralizer, coset_reps, t, rep })
}

/// `f_g(k)` for every element `k`: the permutation `i -> j` with `k t_i k^{-1} = t_j`,
/// where `t_0, t_1, ...` is the class of `g` indexed as in [`induced_datum`].
pub fn f_g_map(g_: &FiniteGroup, g: usize) -> Vec<Perm> {
    let cent = centralizer(g_, g);
    let t: Vec<usize> = coset_representatives(g_, &cent).iter().map(|&h| g_.conj(h, g)).collect();
    let pos: HashMap<usize, usize> = t.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    (0..g_.order())
        .map(|k| Perm::new(t.iter().map(|&ti| pos[&g_.conj(k, ti)]).collect()).expect("bijection"))
        .collect()
}

/// Whether `f` (given on all elements of `g_`) is a homomorphism into `h_`.
pub fn is_homomorphism(g_: &FiniteGroup, h_: &FiniteGroup, f: &[usize]) -> bool {
    let n = g_.order();
    f.len() == n && (0..n).all(|a| (0..n).all(|b| f[g_.mul(a, b)] == h_.mul(f[a], f[b])))
}

/// `(n, m)` with `n = [G : f^{-1}(H_{f(g)})]`, `m = [f^{-1}(H_{f(g)}) : G_g]`, and `n m` the
/// size of the class of `g`.
pub fn orbit_factorization(g_: &FiniteGroup, h_: &FiniteGroup, f: &[usize], g: usize) -> Result<(usize, usize)> {
    if !is_homomorphism(g_, h_, f) {
        return Err(Error::NotHomomorphism("orbit factorization map".into()));
    }
    let hc = centralizer(h_, f[g]);
    let pre = (0..g_.order()).filter(|&x| hc.binary_search(&f[x]).is_ok()).count();
    let gg = centralizer(g_, g).len();
    let s = conjugacy_class(g_, g).len();
    let (n, m) = (g_.order() / pre, pre / gg);
    debug_assert_eq!(n * m, s);
    Ok((n, m))
}
