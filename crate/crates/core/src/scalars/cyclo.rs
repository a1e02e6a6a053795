//! Cyclotomic polynomials and power-reduction tables, cached per conductor.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

pub(crate) struct CycloTable {
    pub phi: usize,
    /// `powers[k]` is `x^k mod Phi_m` for `0 <= k < m`, as `phi` integer coefficients.
    pub powers: Vec<Vec<i64>>,
}

thread_local! {
    static TABLES: RefCell<HashMap<u32, Rc<CycloTable>>> = RefCell::new(HashMap::new());
    static POLYS: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub(crate) fn euler_phi(m: u32) -> usize {
    let mut n = m as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// Coefficients of `Phi_m`, lowest degree first.
pub(crate) fn cyclotomic_poly(m: u32) -> Rc<Vec<i64>> {
    if let Some(p) = POLYS.with(|c| c.borrow().get(&m).cloned()) {
        return p;
    }
    // x^m - 1 divided by Phi_d for every proper divisor d
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            let div = cyclotomic_poly(d);
            num = div_monic(&num, &div);
        }
    }
    let rc = Rc::new(num);
    POLYS.with(|c| c.borrow_mut().insert(m, rc.clone()));
    rc
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

pub(crate) fn table(m: u32) -> Rc<CycloTable> {
    if let Some(t) = TABLES.with(|c| c.borrow().get(&m).cloned()) {
        return t;
    }
    let poly = cyclotomic_poly(m);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(m as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..m {
        powers.push(cur.clone());
        // multiply by x and reduce the overflow coefficient
        let top = cur[phi - 1];
        for j in (1..phi).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for j in 0..phi {
                cur[j] -= top * poly[j];
            }
        }
    }
    let t = Rc::new(CycloTable { phi, powers });
    TABLES.with(|c| c.borrow_mut().insert(m, t.clone()));
    t
}
