//! Exact arithmetic in cyclotomic fields, plus q-numbers.
//!
//! A [`Cyc`] is an element of `Q(zeta_m)` stored as a residue modulo the
//! m-th cyclotomic polynomial, where `zeta_m = exp(2 pi i / m)`. Values of
//! different conductors are embedded into the lcm on demand, so equality and
//! arithmetic never depend on the representation chosen.

mod cyclo;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use malachite_base::num::arithmetic::traits::Reciprocal;
use malachite_base::num::basic::traits::{One, Zero};
use malachite_nz::integer::Integer;
use malachite_q::Rational;
use smallvec::{smallvec, SmallVec};

pub(crate) use cyclo::{euler_phi, gcd, lcm};

type Coeffs = SmallVec<[Rational; 2]>;

/// Element of a cyclotomic field.
#[derive(Clone)]
pub struct Cyc {
    conductor: u32,
    coeffs: Coeffs,
}

/// Multiplicative order `N(q)`; `Infinite` for `q = 1` and for non-roots of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootOrder {
    Finite(u32),
    Infinite,
}

impl RootOrder {
    pub fn finite(self) -> Option<u32> {
        match self {
            RootOrder::Finite(n) => Some(n),
            RootOrder::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, RootOrder::Infinite)
    }
}

impl fmt::Display for RootOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootOrder::Finite(n) => write!(f, "{n}"),
            RootOrder::Infinite => f.write_str("inf"),
        }
    }
}

fn canonical_conductor(m: u32) -> u32 {
    if m % 4 == 2 {
        m / 2
    } else {
        m
    }
}

#[inline]
fn add_scaled(out: &mut Rational, a: &Rational, c: i64) {
    match c {
        0 => {}
        1 => *out += a,
        -1 => *out -= a,
        _ => *out += a * Rational::from(c),
    }
}

impl Cyc {
    pub fn zero() -> Cyc {
        Cyc { conductor: 1, coeffs: smallvec![Rational::ZERO] }
    }

    pub fn one() -> Cyc {
        Cyc::from_int(1)
    }

    pub fn from_int(n: i64) -> Cyc {
        Cyc { conductor: 1, coeffs: smallvec![Rational::from(n)] }
    }

    pub fn from_rational(r: Rational) -> Cyc {
        Cyc { conductor: 1, coeffs: smallvec![r] }
    }

    /// `zeta_m^e`, stored at the smallest conductor containing it.
    pub fn root_of_unity(m: u32, e: i64) -> Cyc {
        assert!(m >= 1, "conductor must be positive");
        let e = e.rem_euclid(m as i64) as u64;
        let g = gcd(m as u64, e);
        let (mut m, mut e) = ((m as u64 / g) as u32, e / g);
        if m == 1 {
            return Cyc::one();
        }
        let mut sign = 1i64;
        if m % 4 == 2 {
            // zeta_{2k}^f = (-1)^f zeta_k^{f(k+1)/2} for odd k
            let k = (m / 2) as u64;
            if e % 2 == 1 {
                sign = -1;
            }
            e = (e * ((k + 1) / 2)) % k;
            m = k as u32;
        }
        let t = cyclo::table(m);
        let coeffs = t.powers[e as usize]
            .iter()
            .map(|&c| Rational::from(c * sign))
            .collect();
        Cyc { conductor: m, coeffs }
    }

    /// Builds `sum c_k zeta_m^{e_k}`.
    pub fn from_terms<I>(m: u32, terms: I) -> Cyc
    where
        I: IntoIterator<Item = (Rational, i64)>,
    {
        let mut acc = Cyc::zero();
        for (c, e) in terms {
            acc += &(Cyc::root_of_unity(m, e) * &Cyc::from_rational(c));
        }
        acc
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coordinates in the power basis `1, zeta, ..., zeta^{phi-1}` of the current conductor.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == Rational::ZERO)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == Rational::ONE && self.coeffs[1..].iter().all(|c| *c == Rational::ZERO)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| *c == Rational::ZERO) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the element in `Q(zeta_target)`; `target` must be a multiple of the conductor.
    pub fn embed(&self, target: u32) -> Cyc {
        let target = canonical_conductor(target);
        if target == self.conductor {
            return self.clone();
        }
        assert!(
            target % self.conductor == 0,
            "cannot embed conductor {} into {}",
            self.conductor,
            target
        );
        let t = cyclo::table(target);
        let step = (target / self.conductor) as usize;
        let mut coeffs: Coeffs = smallvec![Rational::ZERO; t.phi];
        for (k, a) in self.coeffs.iter().enumerate() {
            if *a == Rational::ZERO {
                continue;
            }
            let p = &t.powers[(k * step) % target as usize];
            for (j, &c) in p.iter().enumerate() {
                add_scaled(&mut coeffs[j], a, c);
            }
        }
        Cyc { conductor: target, coeffs }
    }

    fn common(&self, other: &Cyc) -> u32 {
        lcm(self.conductor as u64, other.conductor as u64) as u32
    }

    /// Same value at the smallest conductor that contains it.
    pub fn minimal(&self) -> Cyc {
        if self.conductor == 1 {
            return self.clone();
        }
        if let Some(r) = self.to_rational() {
            return Cyc::from_rational(r);
        }
        let m = self.conductor;
        for d in 2..m {
            if m % d != 0 || d % 4 == 2 {
                continue;
            }
            // columns: images of the power basis of Q(zeta_d)
            let phi_d = euler_phi(d);
            let cols: Vec<Cyc> = (0..phi_d)
                .map(|k| Cyc::root_of_unity(d, k as i64).embed(m))
                .collect();
            let phi = self.coeffs.len();
            let mat: Vec<Vec<Rational>> = (0..phi)
                .map(|r| cols.iter().map(|c| c.coeffs[r].clone()).collect())
                .collect();
            if let Some(y) = solve_dense(mat, self.coeffs.to_vec()) {
                return Cyc { conductor: d, coeffs: y.into_iter().collect() };
            }
        }
        self.clone()
    }

    /// Terms `(coefficient, exponent)` of the element written over `zeta_m` with `m` a
    /// multiple of the conductor (the power basis `zeta_m^0 .. zeta_m^{phi(m)-1}`).
    pub fn terms_at(&self, m: u32) -> Vec<(Rational, u32)> {
        let e = self.embed(m);
        let mm = canonical_conductor(m);
        if mm != m {
            // m = 2k, k odd: write zeta_k^j = zeta_m^{2j}
            return e
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != Rational::ZERO)
                .map(|(j, c)| (c.clone(), (2 * j as u32) % m))
                .collect();
        }
        e.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != Rational::ZERO)
            .map(|(j, c)| (c.clone(), j as u32))
            .collect()
    }

    fn mul_same(&self, other: &Cyc) -> Cyc {
        let m = self.conductor;
        let (a, b) = (&self.coeffs, &other.coeffs);
        if a.len() == 1 {
            return Cyc { conductor: m, coeffs: smallvec![&a[0] * &b[0]] };
        }
        let t = cyclo::table(m);
        let phi = t.phi;
        let mut acc = vec![Rational::ZERO; 2 * phi - 1];
        for (i, ai) in a.iter().enumerate() {
            if *ai == Rational::ZERO {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if *bj != Rational::ZERO {
                    acc[i + j] += ai * bj;
                }
            }
        }
        let high = acc.split_off(phi);
        let mut coeffs: Coeffs = acc.into_iter().collect();
        for (k, h) in high.iter().enumerate() {
            if *h == Rational::ZERO {
                continue;
            }
            let p = &t.powers[(k + phi) % m as usize];
            for (j, &c) in p.iter().enumerate() {
                add_scaled(&mut coeffs[j], h, c);
            }
        }
        Cyc { conductor: m, coeffs }
    }

    pub fn checked_inv(&self) -> Option<Cyc> {
        if self.is_zero() {
            return None;
        }
        if self.coeffs.len() == 1 {
            return Some(Cyc {
                conductor: self.conductor,
                coeffs: smallvec![(&self.coeffs[0]).reciprocal()],
            });
        }
        // solve (self * zeta^j) y = 1 column-wise
        let m = self.conductor;
        let phi = self.coeffs.len();
        let cols: Vec<Cyc> = (0..phi)
            .map(|j| self.mul_same(&Cyc::root_of_unity(m, j as i64).embed(m)))
            .collect();
        let mat: Vec<Vec<Rational>> = (0..phi)
            .map(|r| cols.iter().map(|c| c.coeffs[r].clone()).collect())
            .collect();
        let mut rhs = vec![Rational::ZERO; phi];
        rhs[0] = Rational::ONE;
        let y = solve_dense(mat, rhs)?;
        Some(Cyc { conductor: m, coeffs: y.into_iter().collect() })
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Cyc {
        self.checked_inv().expect("inverse of zero")
    }

    pub fn pow(&self, e: i64) -> Cyc {
        let mut base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyc::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `N(q)`.
    pub fn order(&self) -> RootOrder {
        order(self)
    }
}

/// `N(q)`: the multiplicative order of `q`, `Infinite` if `q = 1` or `q` is not a root of unity.
pub fn order(q: &Cyc) -> RootOrder {
    if q.is_one() || q.is_zero() {
        return RootOrder::Infinite;
    }
    // every root of unity in Q(zeta_m) is a power of zeta_{lcm(2,m)}
    let m = q.conductor;
    let l = if m % 2 == 1 { 2 * m } else { m };
    let z = Cyc::root_of_unity(l, 1).embed(m);
    let mut cur = Cyc::one().embed(m);
    for k in 1..=l {
        cur = cur.mul_same(&z);
        if cur == *q {
            let n = l as u64 / gcd(l as u64, k as u64);
            return RootOrder::Finite(n as u32);
        }
    }
    RootOrder::Infinite
}

pub fn root_of_unity(m: u32, e: i64) -> Cyc {
    Cyc::root_of_unity(m, e)
}

/// Square rational system `a x = b` (or overdetermined); `None` when inconsistent.
fn solve_dense(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] != Rational::ZERO) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = (&a[r][c]).reciprocal();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        b[r] *= &inv;
        for i in 0..rows {
            if i != r && a[i][c] != Rational::ZERO {
                let f = a[i][c].clone();
                for j in 0..cols {
                    if a[r][j] != Rational::ZERO {
                        let t = &f * &a[r][j];
                        a[i][j] -= t;
                    }
                }
                let t = &f * &b[r];
                b[i] -= t;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if b[r..].iter().any(|x| *x != Rational::ZERO) {
        return None;
    }
    let mut x = vec![Rational::ZERO; cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = b[i].clone();
    }
    Some(x)
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Cyc) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let m = self.common(other);
        self.embed(m).coeffs == other.embed(m).coeffs
    }
}

impl Eq for Cyc {}

impl Default for Cyc {
    fn default() -> Self {
        Cyc::zero()
    }
}

impl From<i64> for Cyc {
    fn from(n: i64) -> Cyc {
        Cyc::from_int(n)
    }
}

impl From<Rational> for Cyc {
    fn from(r: Rational) -> Cyc {
        Cyc::from_rational(r)
    }
}

impl From<&Integer> for Cyc {
    fn from(n: &Integer) -> Cyc {
        Cyc::from_rational(Rational::from(n))
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `m:(num,den,exp)+...` over the current conductor.
impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.conductor, format_terms(self, self.conductor))
    }
}

/// The term list `(num,den,exp)+...` of `x` written over `zeta_m`.
pub fn format_terms(x: &Cyc, m: u32) -> String {
    let terms = x.terms_at(m);
    if terms.is_empty() {
        return "(0,1,0)".to_string();
    }
    terms
        .iter()
        .map(|(c, e)| {
            let (n, d) = c.to_numerator_and_denominator();
            let sign = if *c < Rational::ZERO { "-" } else { "" };
            format!("({sign}{n},{d},{e})")
        })
        .collect::<Vec<_>>()
        .join("+")
}

impl<'a> Add<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn add(self, rhs: &Cyc) -> Cyc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn sub(self, rhs: &Cyc) -> Cyc {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn mul(self, rhs: &Cyc) -> Cyc {
        if self.conductor == rhs.conductor {
            return self.mul_same(rhs);
        }
        if self.conductor == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.conductor == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        let m = self.common(rhs);
        self.embed(m).mul_same(&rhs.embed(m))
    }
}

impl<'a> Div<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn div(self, rhs: &Cyc) -> Cyc {
        self * &rhs.inv()
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(mut self) -> Cyc {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Cyc {
    /// Multiplication by a rational.
    pub fn scale(&self, r: &Rational) -> Cyc {
        Cyc { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    fn lift_to(&mut self, m: u32) {
        if self.conductor != m {
            *self = self.embed(m);
        }
    }

    fn add_assign_signed(&mut self, rhs: &Cyc, negate: bool) {
        if rhs.is_zero() {
            return;
        }
        if self.conductor != rhs.conductor {
            if self.is_zero() {
                *self = if negate { -rhs } else { rhs.clone() };
                return;
            }
            let m = self.common(rhs);
            self.lift_to(m);
            if rhs.conductor != m {
                let r = rhs.embed(m);
                self.add_assign_signed(&r, negate);
                return;
            }
        }
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if negate {
                *a -= b;
            } else {
                *a += b;
            }
        }
    }
}

impl AddAssign<&Cyc> for Cyc {
    fn add_assign(&mut self, rhs: &Cyc) {
        self.add_assign_signed(rhs, false);
    }
}

impl SubAssign<&Cyc> for Cyc {
    fn sub_assign(&mut self, rhs: &Cyc) {
        self.add_assign_signed(rhs, true);
    }
}

impl MulAssign<&Cyc> for Cyc {
    fn mul_assign(&mut self, rhs: &Cyc) {
        *self = &*self * rhs;
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Cyc> for Cyc {
            type Output = Cyc;
            fn $f(self, rhs: Cyc) -> Cyc {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyc> for Cyc {
            type Output = Cyc;
            fn $f(self, rhs: &Cyc) -> Cyc {
                (&self).$f(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

// ---- q-numbers ----

/// Integer polynomial, lowest degree first.
pub type IntPoly = Vec<Integer>;

pub fn poly_mul(a: &[Integer], b: &[Integer]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Integer::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(|c| *c == Integer::ZERO) {
        p.pop();
    }
    p
}

/// `(n)_q = 1 + q + ... + q^{n-1}` as a polynomial.
pub fn q_number_poly(n: u32) -> IntPoly {
    vec![Integer::ONE; n as usize]
}

pub fn q_factorial_poly(n: u32) -> IntPoly {
    (1..=n).fold(vec![Integer::ONE], |acc, k| poly_mul(&acc, &q_number_poly(k)))
}

/// Gaussian binomial via `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn q_binomial_poly(n: u32, k: u32) -> IntPoly {
    if k > n {
        return Vec::new();
    }
    let k = k as usize;
    // row[j] holds [i, j] for the current i
    let mut row: Vec<IntPoly> = vec![Vec::new(); k + 1];
    row[0] = vec![Integer::ONE];
    for i in 1..=n as usize {
        for j in (1..=k.min(i)).rev() {
            let mut shifted = vec![Integer::ZERO; j];
            shifted.extend(row[j].iter().cloned());
            let lower = &row[j - 1];
            let len = shifted.len().max(lower.len());
            let mut sum = vec![Integer::ZERO; len];
            for (t, c) in lower.iter().enumerate() {
                sum[t] += c;
            }
            for (t, c) in shifted.into_iter().enumerate() {
                sum[t] += c;
            }
            row[j] = trim(sum);
        }
    }
    row[k].clone()
}

/// Evaluates an integer polynomial at `q` (Horner).
pub fn eval_poly(p: &[Integer], q: &Cyc) -> Cyc {
    let mut acc = Cyc::zero();
    for c in p.iter().rev() {
        acc = &acc * q;
        acc += &Cyc::from(c);
    }
    acc
}

pub fn q_number(n: u32, q: &Cyc) -> Cyc {
    eval_poly(&q_number_poly(n), q)
}

pub fn q_factorial(n: u32, q: &Cyc) -> Cyc {
    (1..=n).fold(Cyc::one(), |acc, k| &acc * &q_number(k, q))
}

/// `binom(n, k)_q`, from the expanded Gaussian polynomial.
pub fn q_binomial(n: u32, k: u32, q: &Cyc) -> Cyc {
    eval_poly(&q_binomial_poly(n, k), q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u32, e: i64) -> Cyc {
        Cyc::root_of_unity(m, e)
    }

    #[test]
    fn roots_basic() {
        assert!(z(1, 0).is_one());
        assert_eq!(z(2, 1), Cyc::from_int(-1));
        assert_eq!(&z(3, 1) + &z(3, 2), Cyc::from_int(-1));
        assert_eq!(z(6, 1).pow(6), Cyc::one());
        assert_eq!(z(4, 1).pow(2), Cyc::from_int(-1));
        assert_eq!(z(12, 3), z(4, 1));
        assert_eq!(z(6, 2), z(3, 1));
        assert_eq!(z(10, 5), Cyc::from_int(-1));
    }

    #[test]
    fn orders() {
        assert_eq!(order(&Cyc::from_int(-1)), RootOrder::Finite(2));
        assert_eq!(order(&Cyc::one()), RootOrder::Infinite);
        assert_eq!(order(&z(6, 1)), RootOrder::Finite(6));
        assert_eq!(order(&z(12, 8)), RootOrder::Finite(3));
        assert_eq!(order(&Cyc::from_int(2)), RootOrder::Infinite);
        assert_eq!(order(&(&z(4, 1) + &Cyc::one())), RootOrder::Infinite);
        for m in 1..=30u32 {
            for e in 0..m as i64 {
                let expect = m as u64 / gcd(m as u64, e as u64);
                let got = order(&z(m, e));
                if expect == 1 {
                    assert_eq!(got, RootOrder::Infinite);
                } else {
                    assert_eq!(got, RootOrder::Finite(expect as u32), "m={m} e={e}");
                }
            }
        }
    }

    #[test]
    fn inverse_and_mixed_conductors() {
        let a = &z(5, 1) + &Cyc::from_int(3);
        assert!((&a * &a.inv()).is_one());
        let b = &z(4, 1) - &z(3, 1);
        assert!((&b * &b.inv()).is_one());
        assert_eq!(b.conductor(), 12);
        assert_eq!(&(&b + &z(3, 1)) - &z(4, 1), Cyc::zero());
    }

    #[test]
    fn minimal_conductor() {
        let x = z(3, 1).embed(12);
        assert_eq!(x.conductor(), 12);
        assert_eq!(x.minimal().conductor(), 3);
        assert_eq!((&z(8, 1) + &z(8, 7)).minimal().conductor(), 8);
        assert_eq!((&z(8, 2) + &z(8, 6)).minimal().conductor(), 1);
    }

    #[test]
    fn q_numbers() {
        let q = z(5, 1);
        assert_eq!(q_number(2, &q), &Cyc::one() + &q);
        assert!(q_factorial(3, &z(3, 1)).is_zero());
        assert_eq!(q_binomial_poly(4, 2), [1, 1, 2, 1, 1].map(Integer::from).to_vec());
        assert_eq!(q_binomial(4, 2, &Cyc::from_int(-1)), Cyc::from_int(2));
        assert_eq!(q_binomial(5, 0, &q), Cyc::one());
        assert!(q_binomial(2, 3, &q).is_zero());
    }

    #[test]
    fn terms_render() {
        assert_eq!(format_terms(&Cyc::from_int(-1), 1), "(-1,1,0)");
        assert_eq!(format_terms(&z(4, 1).scale(&Rational::from_signeds(1, 2)), 4), "(1,2,1)");
        assert_eq!(z(4, 1).to_string(), "4:(1,1,1)");
        // exponent rendering at a conductor that is 2 mod 4
        assert_eq!(format_terms(&z(3, 1), 6), "(1,1,2)");
    }
}
