//! Diagonal braidings: quantum linear spaces, Cartan matrices from adjoint
//! nilpotency, PBW lower bounds in rank two, and numeric screens.

use std::fmt;

use crate::bpair::BraidedPair;
use crate::error::{Error, Result};
use crate::nichols::{self, NilOrder};
use crate::scalars::{Cyc, RootOrder};
use crate::tensor::TensorVec;

/// A dimension that may be infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Bound {
    Finite(u64),
    Infinite,
}

impl Bound {
    pub fn finite(self) -> Option<u64> {
        match self {
            Bound::Finite(n) => Some(n),
            Bound::Infinite => None,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(n) => write!(f, "{n}"),
            Bound::Infinite => f.write_str("inf"),
        }
    }
}

fn product(orders: impl IntoIterator<Item = RootOrder>) -> Bound {
    let mut acc = 1u64;
    for o in orders {
        match o.finite() {
            Some(n) => acc *= n as u64,
            None => return Bound::Infinite,
        }
    }
    Bound::Finite(acc)
}

/// `Some(prod N(q_ii))` when `q_ij q_ji = 1` for all `i != j`.
pub fn is_qls(q: &[Vec<Cyc>]) -> Option<Bound> {
    let d = q.len();
    for i in 0..d {
        for j in i + 1..d {
            if !(&q[i][j] * &q[j][i]).is_one() {
                return None;
            }
        }
    }
    Some(product((0..d).map(|i| q[i][i].order())))
}

/// Which equality case of the rank-two bound applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Qls,
    A2Equality,
    R2Equality,
    R2ConditionalHolds,
    R2ConditionalFails,
    BoundOnly,
    /// `N_1` or another factor is infinite, so the bound says nothing finite.
    Unbounded,
}

impl Verdict {
    pub fn is_equality(self) -> bool {
        matches!(self, Verdict::Qls | Verdict::A2Equality | Verdict::R2Equality | Verdict::R2ConditionalHolds)
    }

    fn rank(self) -> u8 {
        match self {
            Verdict::Qls | Verdict::A2Equality | Verdict::R2Equality | Verdict::R2ConditionalHolds => 3,
            Verdict::R2ConditionalFails => 2,
            Verdict::BoundOnly => 1,
            Verdict::Unbounded => 0,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Qls => "QLS",
            Verdict::A2Equality => "A2_equality",
            Verdict::R2Equality => "r2_equality",
            Verdict::R2ConditionalHolds => "r2_conditional_holds",
            Verdict::R2ConditionalFails => "r2_conditional_fails",
            Verdict::BoundOnly => "bound_only",
            Verdict::Unbounded => "unbounded",
        })
    }
}

/// Which of the three alternatives of the `N_1 = 2, N_2 = 3` case holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// `q_12 q_21 = -1`
    MinusOne,
    /// `q_12 q_21 = q_22`
    EqualsQ22,
    /// `q_12 q_21 = -q_22`
    MinusQ22,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::MinusOne => "q12q21=-1",
            Condition::EqualsQ22 => "q12q21=q22",
            Condition::MinusQ22 => "q12q21=-q22",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rank2Analysis {
    pub q: Vec<Vec<Cyc>>,
    pub n1: RootOrder,
    pub n2: RootOrder,
    /// Least `t` with `q_22^t q_12 q_21 = 1`.
    pub t: Option<usize>,
    /// `Ad_{x_2}` on `x_1` has order `r + 1`; `None` when that order is infinite.
    pub r: Option<usize>,
    pub m: Vec<RootOrder>,
    pub bound: Bound,
    pub verdict: Verdict,
    /// Order of `Ad_{x_1}` on `x_2`.
    pub ad12: NilOrder,
    pub condition: Option<Condition>,
    /// Whether the basis was swapped relative to the input.
    pub swapped: bool,
}

impl fmt::Display for Rank2Analysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |x: Option<usize>| x.map_or("none".to_string(), |v| v.to_string());
        let m: Vec<String> = self.m.iter().map(|o| o.to_string()).collect();
        writeln!(f, "N1: {}", self.n1)?;
        writeln!(f, "N2: {}", self.n2)?;
        writeln!(f, "t: {}", opt(self.t))?;
        writeln!(f, "r: {}", self.r.map_or("inf".to_string(), |v| v.to_string()))?;
        writeln!(f, "M: {}", m.join(" "))?;
        writeln!(f, "ad12_order: {}", self.ad12)?;
        writeln!(f, "condition: {}", self.condition.map_or("none".to_string(), |c| c.to_string()))?;
        writeln!(f, "swapped: {}", self.swapped)?;
        writeln!(f, "bound: {}", self.bound)?;
        write!(f, "verdict: {}", self.verdict)
    }
}

fn check_square(q: &[Vec<Cyc>], d: usize) -> Result<()> {
    if q.len() != d || q.iter().any(|r| r.len() != d) {
        return Err(Error::Invalid(format!("expected a {d}x{d} matrix")));
    }
    if q.iter().flatten().any(|x| x.is_zero()) {
        return Err(Error::Invalid("braiding matrix has a zero entry".into()));
    }
    Ok(())
}

fn condition(q: &[Vec<Cyc>]) -> Option<Condition> {
    let s = &q[0][1] * &q[1][0];
    if s == Cyc::from_int(-1) {
        Some(Condition::MinusOne)
    } else if s == q[1][1] {
        Some(Condition::EqualsQ22)
    } else if s == -&q[1][1] {
        Some(Condition::MinusQ22)
    } else {
        None
    }
}

/// The rank-two analysis with the roles of `x_1, x_2` as given.
pub fn analyze(q: &[Vec<Cyc>]) -> Result<Rank2Analysis> {
    check_square(q, 2)?;
    let n1 = q[0][0].order();
    let n2 = q[1][1].order();
    let t = nichols::least_t(q, 1, 0);
    let r = match nichols::nilpotency_formula(q, 1, 0) {
        NilOrder::Finite(k) => Some(k - 1),
        NilOrder::Infinite => None,
    };
    let ad12 = nichols::nilpotency_formula(q, 0, 1);
    let s = &q[0][1] * &q[1][0];
    let m: Vec<RootOrder> = (1..=r.unwrap_or(0) as i64)
        .map(|i| (&(&q[0][0] * &s.pow(i)) * &q[1][1].pow(i * i)).order())
        .collect();
    let bound = match r {
        Some(_) => product([n1, n2].into_iter().chain(m.iter().copied())),
        None => Bound::Infinite,
    };
    let cond = condition(q);
    let verdict = if bound == Bound::Infinite || n1.is_infinite() {
        Verdict::Unbounded
    } else if s.is_one() {
        Verdict::Qls
    } else if ad12 != NilOrder::Finite(2) {
        Verdict::BoundOnly
    } else {
        match r {
            Some(1) => Verdict::A2Equality,
            Some(2) if n1 != RootOrder::Finite(2) || n2 != RootOrder::Finite(3) => Verdict::R2Equality,
            Some(2) if cond.is_some() => Verdict::R2ConditionalHolds,
            Some(2) => Verdict::R2ConditionalFails,
            _ => Verdict::BoundOnly,
        }
    };
    Ok(Rank2Analysis {
        q: q.to_vec(),
        n1,
        n2,
        t,
        r,
        m,
        bound,
        verdict,
        ad12,
        condition: if r == Some(2) && n1 == RootOrder::Finite(2) && n2 == RootOrder::Finite(3) { cond } else { None },
        swapped: false,
    })
}

fn swap(q: &[Vec<Cyc>]) -> Vec<Vec<Cyc>> {
    vec![vec![q[1][1].clone(), q[1][0].clone()], vec![q[0][1].clone(), q[0][0].clone()]]
}

/// Tries both orderings of the basis and keeps the more informative verdict.
pub fn analyze_best(q: &[Vec<Cyc>]) -> Result<Rank2Analysis> {
    let a = analyze(q)?;
    let mut b = analyze(&swap(q))?;
    b.swapped = true;
    let key = |x: &Rank2Analysis| (x.verdict.rank(), x.bound.finite().unwrap_or(0));
    Ok(if key(&b) > key(&a) { b } else { a })
}

/// Generalized Cartan matrix `a_ij = 1 - d_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    pub a: Vec<Vec<i64>>,
}

impl fmt::Display for CartanData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .a
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

pub fn cartan(q: &[Vec<Cyc>]) -> Result<CartanData> {
    let d = q.len();
    check_square(q, d)?;
    let mut a = vec![vec![2i64; d]; d];
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            match nichols::nilpotency_formula(q, i, j) {
                NilOrder::Finite(k) => a[i][j] = 1 - k as i64,
                NilOrder::Infinite => return Err(Error::InfiniteOrder(format!("Ad_x{i} on x{j}"))),
            }
        }
    }
    Ok(CartanData { a })
}

/// A 2x2 generalized Cartan matrix is of finite type iff `a_12 a_21 <= 3`.
pub fn finite_cartan_rank2(c: &CartanData) -> bool {
    c.a.len() == 2 && c.a[0][1] * c.a[1][0] <= 3
}

/// `r(n) = log_{p_1} n`, kept exact as the pair `(p_1, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RValue {
    pub p1: u64,
    pub n: u64,
}

impl RValue {
    /// `d <= r(n)`, i.e. `p_1^d <= n`.
    pub fn admits(&self, d: u32) -> bool {
        self.p1.checked_pow(d).is_some_and(|p| p <= self.n)
    }

    /// Largest `d` with `d <= r(n)`.
    pub fn floor(&self) -> u32 {
        let mut d = 0;
        while self.admits(d + 1) {
            d += 1;
        }
        d
    }

    pub fn approx(&self) -> f64 {
        (self.n as f64).ln() / (self.p1 as f64).ln()
    }
}

impl fmt::Display for RValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "log_{}({})", self.p1, self.n)
    }
}

/// Prime factorization as `(p, v)` pairs, increasing.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut v = 0;
            while n % p == 0 {
                n /= p;
                v += 1;
            }
            out.push((p, v));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn r_of(n: u64) -> Result<RValue> {
    if n < 2 {
        return Err(Error::Invalid(format!("r(n) needs n >= 2, got {n}")));
    }
    Ok(RValue { p1: factorize(n)[0].0, n })
}

/// Necessary conditions for a Nichols algebra of dimension `n` over a space of
/// dimension `d` with `theta` irreducible summands.
pub fn screen(n: u64, d: u32, theta: u32) -> Result<bool> {
    let r = r_of(n)?;
    let total: u32 = factorize(n).iter().map(|&(_, v)| v).sum();
    Ok(r.admits(d) && theta <= total)
}

/// Constraint on `q = rho(g)` for a finite Nichols algebra of an irreducible
/// module whose representation has degree `deg_rho`.
pub fn csgr_screen(deg_rho: usize, q: &Cyc) -> bool {
    let n = q.order();
    match deg_rho {
        0 | 1 => true,
        2 => matches!(n, RootOrder::Finite(2) | RootOrder::Finite(3)),
        _ => n == RootOrder::Finite(2),
    }
}

/// `z_1 = Ad_{x_2}(x_1)` and `z_{i+1} = Ad_{x_2}(z_i)` in coalgebra coordinates.
pub fn z_elements(bp: &BraidedPair, count: usize) -> Vec<TensorVec> {
    let mut out = Vec::with_capacity(count);
    let mut z = TensorVec::basis(bp.dim(), &[0]);
    for _ in 0..count {
        z = nichols::adjoint(bp, 1, &z);
        out.push(z.clone());
    }
    out
}

/// The set `x_1^{n_1} z_1^{m_1} ... z_r^{m_r} x_2^{n_2}`, `n_i < N_i`, `m_i < M_i`.
pub fn pbw_elements(bp: &BraidedPair, a: &Rank2Analysis) -> Result<Vec<TensorVec>> {
    let fin = |o: RootOrder| o.finite().map(|n| n as usize).ok_or_else(|| Error::InfiniteOrder(o.to_string()));
    let r = a.r.ok_or_else(|| Error::InfiniteOrder("r".into()))?;
    let mut exps = vec![fin(a.n1)?];
    for m in &a.m {
        exps.push(fin(*m)?);
    }
    exps.push(fin(a.n2)?);
    let x1 = TensorVec::basis(bp.dim(), &[0]);
    let x2 = TensorVec::basis(bp.dim(), &[1]);
    let gens: Vec<TensorVec> = std::iter::once(x1).chain(z_elements(bp, r)).chain(std::iter::once(x2)).collect();
    // powers[k][e] = gens[k]^e
    let powers: Vec<Vec<TensorVec>> = gens
        .iter()
        .zip(&exps)
        .map(|(g, &e)| {
            let mut p = vec![TensorVec::scalar(bp.dim(), Cyc::one())];
            for _ in 1..e {
                p.push(nichols::multiply(bp, p.last().unwrap(), g));
            }
            p
        })
        .collect();
    let mut out = vec![TensorVec::scalar(bp.dim(), Cyc::one())];
    for p in &powers {
        out = out.iter().flat_map(|acc| p.iter().map(move |pe| nichols::multiply(bp, acc, pe))).collect();
    }
    Ok(out)
}
