//! Brute-force reference computations, kept independent of the library's
//! elimination and shuffle code. Only scalar arithmetic and the braiding
//! matrix entries are taken from the crate.
#![allow(dead_code)]

use std::collections::BTreeMap;

use nichols::bpair::BraidedPair;
use nichols::Cyc;

pub type Vector = BTreeMap<Vec<usize>, Cyc>;

fn add_into(v: &mut Vector, w: Vec<usize>, c: Cyc) {
    let e = v.entry(w.clone()).or_insert_with(Cyc::zero);
    *e = &*e + &c;
    if e.is_zero() {
        v.remove(&w);
    }
}

/// `c` acting on slots `p, p + 1` (0-based), read from the dense matrix.
pub fn apply_c(bp: &BraidedPair, p: usize, v: &Vector) -> Vector {
    let d = bp.dim();
    let mut out = Vector::new();
    for (w, c) in v {
        let input = w[p] * d + w[p + 1];
        for k in 0..d {
            for l in 0..d {
                let e = bp.entry(k * d + l, input);
                if e.is_zero() {
                    continue;
                }
                let mut u = w.clone();
                u[p] = k;
                u[p + 1] = l;
                add_into(&mut out, u, &e * c);
            }
        }
    }
    out
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// A reduced word (0-based adjacent transpositions) found by bubble sort.
pub fn reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut word = Vec::new();
    loop {
        match (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
            Some(i) => {
                p.swap(i, i + 1);
                word.push(i);
            }
            None => break,
        }
    }
    word.reverse();
    word
}

/// Full quantum symmetrizer on `v`: the sum over all permutations of their braid lifts.
pub fn symmetrize(bp: &BraidedPair, v: &Vector, n: usize) -> Vector {
    let mut total = Vector::new();
    for perm in permutations(n) {
        let mut cur = v.clone();
        for &p in reduced_word(&perm).iter().rev() {
            cur = apply_c(bp, p, &cur);
        }
        for (w, c) in cur {
            add_into(&mut total, w, c);
        }
    }
    total
}

pub fn all_words(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..d).map(move |i| {
                    let mut u = w.clone();
                    u.push(i);
                    u
                })
            })
            .collect();
    }
    out
}

/// Rank by dense Gaussian elimination.
pub fn rank(rows: Vec<Vec<Cyc>>) -> usize {
    let mut rows = rows;
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].inv();
        let pivot: Vec<Cyc> = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in col..ncols {
                    let t = &pivot[j] * &f;
                    rows[i][j] = &rows[i][j] - &t;
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// `dim S^n(V^{(x)n})`, from the full symmetrizer matrix.
pub fn symmetrizer_rank(bp: &BraidedPair, n: usize) -> usize {
    let d = bp.dim();
    if n == 0 {
        return 1;
    }
    let words = all_words(d, n);
    let index: BTreeMap<&Vec<usize>, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let rows = words
        .iter()
        .map(|w| {
            let image = symmetrize(bp, &Vector::from([(w.clone(), Cyc::one())]), n);
            let mut row = vec![Cyc::zero(); words.len()];
            for (u, c) in image {
                row[index[&u]] = c;
            }
            row
        })
        .collect();
    rank(rows)
}

/// Number of `f: X x X -> Z/m` whose braiding `f(i,j) (i |> j) (x) i` satisfies
/// the braid equation, by enumeration.
pub fn count_braiding_cocycles(table: &[Vec<usize>], m: u32) -> u64 {
    let n = table.len();
    let cells = n * n;
    let total = (m as u64).pow(cells as u32);
    let mut f = vec![0u32; cells];
    let act = |i: usize, j: usize| table[i][j];
    let mut count = 0;
    for mut code in 0..total {
        for c in f.iter_mut() {
            *c = (code % m as u64) as u32;
            code /= m as u64;
        }
        let fv = |i: usize, j: usize| f[i * n + j];
        let ok = (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    // c1 c2 c1 and c2 c1 c2 on i (x) j (x) k
                    let (a, b) = (act(i, j), i);
                    let left = fv(i, j) + fv(i, k) + fv(a, act(b, k));
                    let right = fv(j, k) + fv(i, act(j, k)) + fv(i, j);
                    left % m == right % m
                })
            })
        });
        if ok {
            count += 1;
        }
    }
    count
}
