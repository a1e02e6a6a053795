//! Symmetric and braid group combinatorics.
//!
//! Conventions: `sigma_i` (1-based, `1 <= i < n`) acts on tensor slots `i-1, i`
//! (0-based). A word `s_{i1} s_{i2} ... s_{il}` is a product in the group, so
//! as an operator its rightmost letter acts first. Permutations act on
//! positions: `tau_i` swaps positions `i-1` and `i`, and `x.compose(y)` is
//! `x o y`. With these choices the projection from braids to permutations is
//! a homomorphism.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::bpair::BraidedPair;
use crate::error::{Error, Result};
use crate::scalars::Cyc;
use crate::tensor::{self, TensorVec};

/// A permutation of `0..n`, as its list of images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    /// `tau_i`, swapping positions `i-1` and `i`.
    pub fn transposition(n: usize, i: usize) -> Perm {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i - 1, i);
        Perm(v)
    }

    /// All of `S_n` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self o other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x] = i;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Coxeter length (number of inversions).
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    /// Product of the transpositions of a word over `tau_1..tau_{n-1}`.
    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        word.iter().fold(Perm::identity(n), |acc, &i| acc.compose(&Perm::transposition(n, i)))
    }
}

/// A word in the generators `sigma_i^{+-1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(usize, i8)>) -> Result<BraidWord> {
        for &(i, s) in &letters {
            if i == 0 || i >= strands || (s != 1 && s != -1) {
                return Err(Error::Index(format!("letter ({i},{s}) on {strands} strands")));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Positive word `sigma_{i1} ... sigma_{il}`.
    pub fn positive(strands: usize, gens: &[usize]) -> BraidWord {
        BraidWord::new(strands, gens.iter().map(|&i| (i, 1)).collect()).expect("valid generators")
    }

    pub fn identity(strands: usize) -> BraidWord {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Generator indices, for positive words.
    pub fn gens(&self) -> Vec<usize> {
        self.letters.iter().map(|l| l.0).collect()
    }

    fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    /// Image under `sigma_i -> sigma_{i+offset}` inside `total` strands.
    pub fn shifted(&self, offset: usize, total: usize) -> BraidWord {
        assert!(self.strands + offset <= total);
        BraidWord { strands: total, letters: self.letters.iter().map(|&(i, s)| (i + offset, s)).collect() }
    }

    /// Acts on a tensor; the rightmost letter first.
    pub fn act(&self, bp: &BraidedPair, v: &TensorVec) -> TensorVec {
        let mut cur = v.clone();
        for &(i, s) in self.letters.iter().rev() {
            let cols = if s > 0 { bp.columns() } else { bp.inverse_columns() };
            cur = cur.apply_at(i - 1, cols);
        }
        cur
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(i, s)| if s > 0 { format!("s{i}") } else { format!("s{i}^-1") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Element of the group algebra of the braid group: a formal sum of words.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlgElt {
    strands: usize,
    terms: BTreeMap<BraidWord, Cyc>,
}

impl GroupAlgElt {
    pub fn zero(strands: usize) -> GroupAlgElt {
        GroupAlgElt { strands, terms: BTreeMap::new() }
    }

    pub fn identity(strands: usize) -> GroupAlgElt {
        GroupAlgElt::from_word(BraidWord::identity(strands))
    }

    pub fn from_word(w: BraidWord) -> GroupAlgElt {
        let strands = w.strands;
        GroupAlgElt { strands, terms: BTreeMap::from([(w, Cyc::one())]) }
    }

    /// Single positive word.
    pub fn word(strands: usize, gens: &[usize]) -> GroupAlgElt {
        GroupAlgElt::from_word(BraidWord::positive(strands, gens))
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BraidWord, &Cyc)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, w: BraidWord, c: Cyc) {
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &GroupAlgElt) -> GroupAlgElt {
        assert_eq!(self.strands, other.strands);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GroupAlgElt) -> GroupAlgElt {
        self.add(&other.scale(&Cyc::from_int(-1)))
    }

    pub fn scale(&self, f: &Cyc) -> GroupAlgElt {
        let mut out = GroupAlgElt::zero(self.strands);
        if f.is_zero() {
            return out;
        }
        for (w, c) in &self.terms {
            out.terms.insert(w.clone(), c * f);
        }
        out
    }

    /// Group-algebra product (concatenation of words).
    pub fn mul(&self, other: &GroupAlgElt) -> GroupAlgElt {
        assert_eq!(self.strands, other.strands, "strand mismatch");
        let mut out = GroupAlgElt::zero(self.strands);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        out
    }

    pub fn product<'a, I: IntoIterator<Item = &'a GroupAlgElt>>(strands: usize, factors: I) -> GroupAlgElt {
        factors.into_iter().fold(GroupAlgElt::identity(strands), |acc, f| acc.mul(f))
    }

    /// `iota`: `sigma_i -> sigma_{i+offset}` into `total` strands.
    pub fn shifted(&self, offset: usize, total: usize) -> GroupAlgElt {
        let mut out = GroupAlgElt::zero(total);
        for (w, c) in &self.terms {
            out.terms.insert(w.shifted(offset, total), c.clone());
        }
        out
    }

    /// `(a|b) = a * iota(b)`.
    pub fn bar(&self, other: &GroupAlgElt) -> GroupAlgElt {
        let total = self.strands + other.strands;
        self.shifted(0, total).mul(&other.shifted(self.strands, total))
    }
}

// ---- Matsumoto section and shuffles ----

/// Lexicographically least reduced word of `x`, lifted to the braid group.
pub fn matsumoto_section(x: &Perm) -> BraidWord {
    let n = x.n();
    let mut cur = x.clone();
    let mut gens = Vec::new();
    while !cur.is_identity() {
        let inv = cur.inverse();
        // smallest left descent: value i-1 sits to the right of value i
        let i = (1..n).find(|&i| inv.apply(i - 1) > inv.apply(i)).expect("non-identity has a descent");
        gens.push(i);
        cur = Perm::transposition(n, i).compose(&cur);
    }
    BraidWord::positive(n, &gens)
}

/// `Sh_{i_1,...,i_r}`: permutations whose inverse is increasing on each block of values.
pub fn shuffles(parts: &[usize]) -> Vec<Perm> {
    let n: usize = parts.iter().sum();
    let offsets: Vec<usize> = parts.iter().scan(0, |s, &p| {
        let o = *s;
        *s += p;
        Some(o)
    }).collect();
    // label sequence: block of the value sitting at each position
    let mut labels: Vec<usize> = parts.iter().enumerate().flat_map(|(b, &p)| std::iter::repeat_n(b, p)).collect();
    let mut out = Vec::new();
    loop {
        let mut seen = vec![0; parts.len()];
        let images = labels
            .iter()
            .map(|&b| {
                let v = offsets[b] + seen[b];
                seen[b] += 1;
                v
            })
            .collect();
        out.push(Perm(images));
        let Some(i) = (1..n).rev().find(|&i| labels[i - 1] < labels[i]) else { break };
        let j = (i..n).rev().find(|&j| labels[j] > labels[i - 1]).unwrap();
        labels.swap(i - 1, j);
        labels[i..].reverse();
    }
    out
}

fn check_range(n: usize, j: usize, i: usize) -> Result<()> {
    if i < 1 || i > j || j + 1 > n {
        return Err(Error::Index(format!("need 1 <= i={i} <= j={j} <= n-1={}", n.saturating_sub(1))));
    }
    Ok(())
}

/// `U^j_i = sigma_j sigma_{j-1} ... sigma_i`.
pub fn u_elt(n: usize, j: usize, i: usize) -> Result<GroupAlgElt> {
    check_range(n, j, i)?;
    Ok(GroupAlgElt::word(n, &(i..=j).rev().collect::<Vec<_>>()))
}

/// `D^j_i = sigma_i sigma_{i+1} ... sigma_j`.
pub fn d_elt(n: usize, j: usize, i: usize) -> Result<GroupAlgElt> {
    check_range(n, j, i)?;
    Ok(GroupAlgElt::word(n, &(i..=j).collect::<Vec<_>>()))
}

/// `R^j_i = (e - sigma_j sigma_j)(e - D^j_{j-1} sigma_j) ... (e - D^j_i sigma_j)`.
pub fn r_elt(n: usize, j: usize, i: usize) -> Result<GroupAlgElt> {
    check_range(n, j, i)?;
    let e = GroupAlgElt::identity(n);
    let sj = GroupAlgElt::word(n, &[j]);
    let mut acc = e.clone();
    for k in (i..=j).rev() {
        let dk = d_elt(n, j, k)?;
        acc = acc.mul(&e.sub(&dk.mul(&sj)));
    }
    Ok(acc)
}

fn sum_of_lifts<I: IntoIterator<Item = Perm>>(n: usize, perms: I) -> GroupAlgElt {
    let mut out = GroupAlgElt::zero(n);
    for p in perms {
        out.add_term(matsumoto_section(&p).shifted(0, n), Cyc::one());
    }
    out
}

/// `S^n = sum_{x in S_n} s(x)`; on zero strands the empty identity.
pub fn symmetrizer(n: usize) -> GroupAlgElt {
    if n == 0 {
        return GroupAlgElt::identity(0);
    }
    sum_of_lifts(n, Perm::all(n))
}

/// `T_{i,j} = sum over x with x^{-1} an (i,j)-shuffle of s(x)`.
pub fn t_shuffle(i: usize, j: usize) -> GroupAlgElt {
    sum_of_lifts(i + j, shuffles(&[i, j]).into_iter().map(|p| p.inverse()))
}

/// `S_{i,j} = sum over (i,j)-shuffles x of s(x)`.
pub fn s_shuffle(i: usize, j: usize) -> GroupAlgElt {
    sum_of_lifts(i + j, shuffles(&[i, j]))
}

/// `S^{j_1|...|j_s}`.
pub fn symmetrizer_bar(parts: &[usize]) -> GroupAlgElt {
    parts.iter().fold(GroupAlgElt::identity(0), |acc, &p| acc.bar(&symmetrizer(p)))
}

// ---- actions ----

/// Linear action of a group-algebra element.
pub fn apply(elt: &GroupAlgElt, bp: &BraidedPair, v: &TensorVec) -> Result<TensorVec> {
    if elt.strands() != v.degree() && !(elt.strands() <= 1 && v.degree() <= 1) {
        return Err(Error::Degree { expected: elt.strands(), got: v.degree() });
    }
    let mut acc = TensorVec::zero(v.dim(), v.degree());
    for (w, c) in elt.terms() {
        acc = acc.axpy(c, &w.act(bp, v));
    }
    Ok(acc)
}

/// `S^n v` through `S^n = T_{1,n-1} (id (x) S^{n-1})`.
pub fn symmetrizer_apply(bp: &BraidedPair, v: &TensorVec) -> TensorVec {
    let n = v.degree();
    let mut cur = v.clone();
    for k in 2..=n {
        cur = cur.shuffle_first(n - k, k - 1, bp.columns());
    }
    cur
}

/// Outcome of an operator identity check.
#[derive(Clone, Debug, PartialEq)]
pub enum IdentityReport {
    Holds { checked: usize },
    Fails { pair: usize, input: Vec<usize>, lhs: TensorVec, rhs: TensorVec },
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityReport::Holds { .. })
    }
}

/// Checks `lhs = rhs` on every standard basis tensor of every pair in `suite`.
pub fn verify_identity(lhs: &GroupAlgElt, rhs: &GroupAlgElt, suite: &[BraidedPair]) -> Result<IdentityReport> {
    verify_factored(std::slice::from_ref(lhs), std::slice::from_ref(rhs), suite)
}

fn apply_product(factors: &[GroupAlgElt], bp: &BraidedPair, v: &TensorVec) -> Result<TensorVec> {
    let mut cur = v.clone();
    for f in factors.iter().rev() {
        cur = apply(f, bp, &cur)?;
    }
    Ok(cur)
}

fn strands_of(factors: &[GroupAlgElt]) -> Result<usize> {
    let n = factors.first().map_or(0, GroupAlgElt::strands);
    match factors.iter().find(|f| f.strands() != n) {
        Some(f) => Err(Error::Degree { expected: n, got: f.strands() }),
        None => Ok(n),
    }
}

/// As [`verify_identity`] for products given as factor lists (leftmost factor
/// applied last), which avoids expanding them in the group algebra.
pub fn verify_factored(lhs: &[GroupAlgElt], rhs: &[GroupAlgElt], suite: &[BraidedPair]) -> Result<IdentityReport> {
    let n = strands_of(lhs)?;
    let m = strands_of(rhs)?;
    if n != m {
        return Err(Error::Degree { expected: n, got: m });
    }
    let mut checked = 0;
    for (k, bp) in suite.iter().enumerate() {
        let d = bp.dim();
        for idx in 0..(d as u64).pow(n as u32) {
            let word = tensor::index_word(d, n, idx);
            let v = TensorVec::basis(d, &word);
            let a = apply_product(lhs, bp, &v)?;
            let b = apply_product(rhs, bp, &v)?;
            if a != b {
                return Ok(IdentityReport::Fails { pair: k, input: word, lhs: a, rhs: b });
            }
            checked += 1;
        }
    }
    Ok(IdentityReport::Holds { checked })
}

/// A named operator identity; each side is a product of the listed factors.
pub struct NamedIdentity {
    pub name: String,
    pub lhs: Vec<GroupAlgElt>,
    pub rhs: Vec<GroupAlgElt>,
}

impl NamedIdentity {
    pub fn verify(&self, suite: &[BraidedPair]) -> Result<IdentityReport> {
        verify_factored(&self.lhs, &self.rhs, suite)
    }
}

fn sum(n: usize, elts: impl IntoIterator<Item = GroupAlgElt>) -> GroupAlgElt {
    elts.into_iter().fold(GroupAlgElt::zero(n), |acc, e| acc.add(&e))
}

/// `e + U^1_1 + ... + U^m_1` on `n` strands.
fn u_sum(n: usize, m: usize) -> GroupAlgElt {
    GroupAlgElt::identity(n).add(&sum(n, (1..=m).map(|k| u_elt(n, k, 1).unwrap())))
}

/// The adjoint-action identities on `n + 1` strands, with the rank-`n` parameter as stated.
pub fn adjoint_identities(n: usize) -> Vec<NamedIdentity> {
    assert!(n >= 1);
    let s = n + 1;
    let mut out = Vec::new();
    let id = |name: String, lhs: Vec<GroupAlgElt>, rhs: Vec<GroupAlgElt>| NamedIdentity { name, lhs, rhs };
    let un1 = u_elt(s, n, 1).unwrap();
    let dn1 = d_elt(s, n, 1).unwrap();
    // shifting past the first strand
    for j in 1..n {
        let y = GroupAlgElt::word(s, &[j]);
        let x = GroupAlgElt::word(s, &[j + 1]);
        out.push(id(format!("shift-through-U n={n} y=s{j}"), vec![un1.clone(), x.clone()], vec![y.clone(), un1.clone()]));
        out.push(id(format!("shift-through-D n={n} y=s{j}"), vec![x, dn1.clone()], vec![dn1.clone(), y]));
    }
    // a longer element of B_n, to exercise more than generators
    if n >= 3 {
        let yn = GroupAlgElt::word(n, &[1, 2, 1, 2]).add(&GroupAlgElt::word(n, &[2]).scale(&Cyc::from_int(-2)));
        let (y, x) = (yn.shifted(0, s), yn.shifted(1, s));
        out.push(id(format!("shift-through-U n={n} y=sum"), vec![un1.clone(), x], vec![y, un1.clone()]));
    }
    for j in 2..=n {
        let x = GroupAlgElt::word(s, &[j]);
        out.push(id(
            format!("DU-commutes n={n} x=s{j}"),
            vec![x.clone(), dn1.clone(), un1.clone()],
            vec![dn1.clone(), un1.clone(), x],
        ));
    }
    let sn = GroupAlgElt::word(s, &[n]);
    for j in 1..n {
        let d2 = if n >= 2 { d_elt(s, n, 2).unwrap() } else { GroupAlgElt::identity(s) };
        let u = if j >= 2 { u_elt(s, j - 1, 1).unwrap() } else { GroupAlgElt::identity(s) };
        out.push(id(
            format!("UD-exchange n={n} j={j}"),
            vec![u_elt(s, j, 1).unwrap(), d2, sn.clone()],
            vec![dn1.clone(), sn.clone(), u],
        ));
    }
    if n >= 2 {
        let minus_d = sum(s, (1..=n).map(|k| d_elt(s, n, k).unwrap().mul(&un1)));
        out.push(id(
            format!("R-recursion n={n}"),
            vec![u_sum(s, n - 1).sub(&minus_d), r_elt(s, n, 2).unwrap()],
            vec![r_elt(s, n, 1).unwrap(), u_sum(s, n - 1)],
        ));
    }
    // S^{n+1} (e - U^n_1) ... (e - U^n_n) = R^n_1 S^{n|1}
    let e = GroupAlgElt::identity(s);
    let mut lhs = vec![symmetrizer(s)];
    lhs.extend((1..=n).map(|k| e.sub(&u_elt(s, n, k).unwrap())));
    out.push(id(
        format!("symmetrizer-factorization n={n}"),
        lhs,
        vec![r_elt(s, n, 1).unwrap(), symmetrizer_bar(&[n, 1])],
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matsumoto_examples() {
        assert!(matsumoto_section(&Perm::identity(3)).is_empty());
        assert_eq!(matsumoto_section(&Perm::transposition(2, 1)).gens(), vec![1]);
        let w0 = Perm::new(vec![2, 1, 0]).unwrap();
        assert_eq!(matsumoto_section(&w0).gens(), vec![1, 2, 1]);
    }

    #[test]
    fn section_projects_back() {
        for n in 1..=5 {
            for p in Perm::all(n) {
                let w = matsumoto_section(&p);
                assert_eq!(w.len(), p.length());
                assert_eq!(Perm::from_word(n, &w.gens()), p);
            }
        }
    }

    #[test]
    fn shuffle_counts() {
        assert_eq!(shuffles(&[1, 1]).len(), 2);
        assert_eq!(shuffles(&[1, 2]).len(), 3);
        assert_eq!(shuffles(&[2, 2]).len(), 6);
        assert_eq!(shuffles(&[2, 1, 2]).len(), 30);
    }

    #[test]
    fn elements() {
        assert_eq!(u_elt(3, 2, 1).unwrap(), GroupAlgElt::word(3, &[2, 1]));
        assert_eq!(d_elt(4, 3, 1).unwrap(), GroupAlgElt::word(4, &[1, 2, 3]));
        let r = r_elt(3, 2, 2).unwrap();
        assert_eq!(r.num_terms(), 2);
        assert_eq!(r, GroupAlgElt::identity(3).sub(&GroupAlgElt::word(3, &[2, 2])));
        assert!(u_elt(3, 3, 1).is_err());
        assert_eq!(symmetrizer(2), GroupAlgElt::identity(2).add(&GroupAlgElt::word(2, &[1])));
        assert_eq!(symmetrizer(3).num_terms(), 6);
        assert_eq!(t_shuffle(1, 2), u_sum(3, 2));
    }
}
