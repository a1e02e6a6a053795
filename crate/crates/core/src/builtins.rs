//! Named examples.

use crate::bpair::{self, BraidedPair, CrossDatum};
use crate::error::{Error, Result};
use crate::groups::{self, FiniteGroup, Representation};
use crate::quandle::CrossedSet;
use crate::scalars::Cyc;

/// Optional scalar parameters for the parametrized built-ins.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub q: Option<Cyc>,
    pub alpha: Option<Cyc>,
}

/// `(name, description)` for every braided-pair built-in.
pub const BRAIDED_PAIRS: &[(&str, &str)] = &[
    ("v3", "three-dimensional class of transpositions in S3, braiding scalar q (default -1)"),
    ("v4", "four-dimensional class with scalars q, alpha (defaults -1, 1)"),
    ("diag1", "one-dimensional, c = q (default -1)"),
    ("c4-a2", "diagonal [[-1, i], [-1, i]] over C4"),
    ("c4-induced", "the same pair built as M(s, chi) + M(s^2, chi) over C4"),
    ("c6-b2", "diagonal [[-1, w], [-1, w]], w a primitive cube root of 1"),
    ("ms-d4", "two_by_two with q = -1, eta = 1, alpha = 1"),
    ("v3-a1", "v3 with scalar q plus a line x with c(x, x) = q; alpha is q12 q21 (default 1)"),
    ("qls2", "diagonal, q on the diagonal (default -1), q_ij = 1 otherwise; rank 2"),
    ("qls3", "as qls2, rank 3"),
    ("qls4", "as qls2, rank 4"),
    ("a2", "Cartan type A2 at q (default -1)"),
    ("a2xa1", "a2 plus an orthogonal line with c = -1"),
];

/// `(name, description)` for the crossed-set built-ins.
pub const CROSSED_SETS: &[(&str, &str)] = &[
    ("trivialN", "N points, i |> j = j"),
    ("dihedralN", "Z/N, i |> j = 2i - j"),
    ("tetrahedral", "class of 3-cycles (123)-type in A4, four points"),
];

fn unknown(name: &str) -> Error {
    Error::Invalid(format!("unknown built-in `{name}`"))
}

fn minus_one() -> Cyc {
    Cyc::from_int(-1)
}

fn qls(rank: usize, q: &Cyc) -> Result<BraidedPair> {
    let m = (0..rank)
        .map(|i| (0..rank).map(|j| if i == j { q.clone() } else { Cyc::one() }).collect())
        .collect::<Vec<_>>();
    bpair::diagonal(&m)
}

fn a2(q: &Cyc) -> Result<BraidedPair> {
    bpair::diagonal(&[vec![q.clone(), q.inv()], vec![Cyc::one(), q.clone()]])
}

/// V3,q plus a one-dimensional `M(g, chi)` with `chi(g) = q`; `g` acts on V3 by 1
/// and `chi(g') = sigma`.
pub fn v3_plus_line(q: &Cyc, sigma: &Cyc) -> Result<BraidedPair> {
    let a = bpair::v3(q)?;
    let b = bpair::diagonal(&[vec![q.clone()]])?;
    let datum = CrossDatum::Scalars {
        a_on_b: vec![vec![sigma.clone()]; 3],
        b_on_a: vec![vec![Cyc::one(); 3]],
    };
    bpair::direct_sum(&a, &b, &datum)
}

/// `M(s, chi) + M(s^2, chi)` over C4 with `chi(s) = i`.
pub fn c4_induced() -> Result<BraidedPair> {
    let g = FiniteGroup::cyclic(4);
    let all: Vec<usize> = (0..4).collect();
    let chi = Representation::character(&g, &all, &[(1, Cyc::root_of_unity(4, 1))])?;
    let a = bpair::induced_yd(&g, 1, &chi)?;
    let b = bpair::induced_yd(&g, 2, &chi)?;
    debug_assert_eq!(groups::centralizer(&g, 1).len(), 4);
    bpair::direct_sum(&a, &b, &CrossDatum::SameGroup)
}

pub fn braided_pair(name: &str, p: &Params) -> Result<BraidedPair> {
    let q = p.q.clone().unwrap_or_else(minus_one);
    match name {
        "v3" => bpair::v3(&q),
        "v4" => bpair::v4(&q, &p.alpha.clone().unwrap_or_else(Cyc::one)),
        "diag1" => bpair::diagonal(&[vec![q]]),
        "c4-a2" => {
            let i = Cyc::root_of_unity(4, 1);
            bpair::diagonal(&[vec![minus_one(), i.clone()], vec![minus_one(), i]])
        }
        "c4-induced" => c4_induced(),
        "c6-b2" => {
            let w = Cyc::root_of_unity(3, 1);
            bpair::diagonal(&[vec![minus_one(), w.clone()], vec![minus_one(), w]])
        }
        "ms-d4" => {
            let (m, one) = (minus_one(), Cyc::one());
            bpair::two_by_two(&m, &m, &one, &one, &one, &one)
        }
        "v3-a1" => v3_plus_line(&q, &p.alpha.clone().unwrap_or_else(Cyc::one)),
        "qls2" => qls(2, &q),
        "qls3" => qls(3, &q),
        "qls4" => qls(4, &q),
        "a2" => a2(&q),
        "a2xa1" => {
            let m = minus_one();
            let inv = q.inv();
            let one = Cyc::one();
            bpair::diagonal(&[
                vec![q.clone(), inv, one.clone()],
                vec![one.clone(), q.clone(), one.clone()],
                vec![one.clone(), one, m],
            ])
        }
        _ => Err(unknown(name)),
    }
}

/// Diagonal braidings with entry orders at most 12, used for operator identity checks.
pub fn identity_suite() -> Vec<BraidedPair> {
    let z = |m: u32, e: i64| Cyc::root_of_unity(m, e);
    let mats: Vec<Vec<Vec<Cyc>>> = vec![
        vec![vec![z(2, 1)]],
        vec![vec![z(5, 2)]],
        vec![vec![z(2, 1), z(4, 1)], vec![z(2, 1), z(4, 1)]],
        vec![vec![z(2, 1), z(3, 1)], vec![z(2, 1), z(3, 1)]],
        vec![vec![z(3, 1), z(6, 1)], vec![z(12, 5), z(4, 3)]],
        vec![vec![z(12, 1), z(12, 7)], vec![z(3, 2), z(12, 11)]],
        vec![vec![z(5, 1), z(10, 3)], vec![z(10, 1), z(5, 2)]],
        vec![vec![z(1, 0), z(8, 3)], vec![z(8, 1), z(4, 1)]],
        vec![vec![z(6, 5), z(2, 1)], vec![z(4, 1), z(12, 1)]],
        vec![
            vec![z(2, 1), z(3, 1), z(4, 1)],
            vec![z(6, 1), z(3, 2), z(12, 7)],
            vec![z(4, 3), z(12, 5), z(2, 1)],
        ],
        vec![
            vec![z(12, 1), z(1, 0), z(6, 1)],
            vec![z(3, 1), z(4, 1), z(12, 5)],
            vec![z(2, 1), z(6, 5), z(3, 1)],
        ],
    ];
    mats.iter().map(|m| bpair::diagonal(m).expect("diagonal braiding")).collect()
}

fn suffix_number(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix).and_then(|s| s.parse().ok()).filter(|&n| n > 0)
}

pub fn crossed_set(name: &str) -> Result<CrossedSet> {
    if name == "tetrahedral" {
        return Ok(CrossedSet::tetrahedral());
    }
    if let Some(n) = suffix_number(name, "trivial") {
        return Ok(CrossedSet::trivial(n));
    }
    if let Some(n) = suffix_number(name, "dihedral") {
        return Ok(CrossedSet::dihedral(n));
    }
    Err(unknown(name))
}

/// `cyclicN`, `dihedralN` (order 2N), `symmetricN`, `alternatingN`.
pub fn group(name: &str) -> Result<FiniteGroup> {
    if let Some(n) = suffix_number(name, "cyclic") {
        return Ok(FiniteGroup::cyclic(n));
    }
    if let Some(n) = suffix_number(name, "dihedral") {
        return Ok(FiniteGroup::dihedral(n));
    }
    if let Some(n) = suffix_number(name, "symmetric").filter(|&n| n <= 7) {
        return Ok(FiniteGroup::symmetric(n));
    }
    if let Some(n) = suffix_number(name, "alternating").filter(|&n| n <= 7) {
        return Ok(FiniteGroup::alternating(n));
    }
    Err(unknown(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_build() {
        for (name, _) in BRAIDED_PAIRS {
            braided_pair(name, &Params::default()).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert!(braided_pair("nope", &Params::default()).is_err());
        assert_eq!(crossed_set("dihedral3").unwrap().size(), 3);
        assert_eq!(crossed_set("trivial5").unwrap().size(), 5);
        assert!(crossed_set("trivial0").is_err());
        assert_eq!(group("symmetric3").unwrap().order(), 6);
    }

    #[test]
    fn induced_matches_diagonal() {
        let bp = c4_induced().unwrap();
        let q = bp.diagonal_matrix().unwrap();
        let i = Cyc::root_of_unity(4, 1);
        assert_eq!(q, vec![vec![i.clone(), i], vec![minus_one(), minus_one()]]);
    }
}
