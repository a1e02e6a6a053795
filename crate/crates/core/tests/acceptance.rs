mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nichols::bpair::{self, BraidedPair};
use nichols::braidgrp::{self, GroupAlgElt};
use nichols::builtins::{self, Params};
use nichols::linalg::{Echelon, PivotOrder};
use nichols::nichols::{
    derivation_kernel_dim, hilbert, kernel_basis, nilpotency_direct, nilpotency_formula, GradedComputation,
    NilOrder, RelationComputation,
};
use nichols::quandle::{self, CrossedSet};
use nichols::rank2::{self, Bound, Condition, Verdict};
use nichols::{Cyc, RootOrder, TensorVec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn z(m: u32, e: i64) -> Cyc {
    Cyc::root_of_unity(m, e)
}

fn builtin(name: &str, q: Option<Cyc>, alpha: Option<Cyc>) -> BraidedPair {
    builtins::braided_pair(name, &Params { q, alpha }).expect(name)
}

fn total(bp: &BraidedPair, cutoff: usize) -> Option<usize> {
    hilbert(bp, cutoff).total
}

fn echelon_of(vs: &[TensorVec]) -> Vec<Vec<(u64, Cyc)>> {
    Echelon::from_rows(PivotOrder::Lowest, vs.iter().map(|v| v.entries().clone())).into_rows()
}

fn c1() -> Check {
    let bp = builtin("v3", None, None);
    let h = hilbert(&bp, 8);
    ensure(h.total == Some(12), format!("total {:?}", h.total))?;
    let mut rc = RelationComputation::new(&bp);
    let counts = rc.counts(5);
    let new: Vec<usize> = counts.iter().map(|c| c.1).collect();
    ensure(new == [5, 0, 0, 0], format!("relation counts {new:?}"))?;
    Ok(format!("dims {:?}, relations by degree {new:?}", h.dims))
}

fn c2() -> Check {
    let bp = builtin("v4", None, Some(Cyc::one()));
    let h = hilbert(&bp, 10);
    ensure(h.dims == [1, 4, 8, 11, 12, 12, 11, 8, 4, 1, 0], format!("dims {:?}", h.dims))?;
    ensure(h.total == Some(72), "total")?;
    let mut rc = RelationComputation::new(&bp);
    let counts = rc.counts(9);
    let minimal: Vec<usize> = counts.iter().map(|c| c.1).collect();
    let groebner: Vec<usize> = counts.iter().map(|c| c.2).collect();
    ensure(minimal == [8, 0, 0, 0, 1, 0, 0, 0], format!("minimal relations {minimal:?}"))?;
    ensure(groebner == [8, 2, 0, 0, 1, 0, 0, 0], format!("groebner additions {groebner:?}"))?;
    let deg3 = rc.degree(3, false).groebner_words;
    ensure(deg3 == [vec![1, 2, 1], vec![2, 3, 2]], format!("degree-3 leading words {deg3:?}"))?;
    Ok(format!("total 72; relations in degrees 2..9 {minimal:?}; groebner {groebner:?}"))
}

fn c3() -> Check {
    let bp = builtin("c4-a2", None, None);
    let a = rank2::analyze(&bp.diagonal_matrix().unwrap()).map_err(|e| e.to_string())?;
    ensure(a.bound == Bound::Finite(16), format!("bound {}", a.bound))?;
    ensure(a.verdict == Verdict::A2Equality, format!("verdict {}", a.verdict))?;
    let t = total(&bp, 20);
    ensure(t == Some(16), format!("total {t:?}"))?;
    let induced = builtins::c4_induced().map_err(|e| e.to_string())?;
    ensure(total(&induced, 20) == Some(16), "induced module total")?;
    Ok("bound 16, A2_equality, total 16".into())
}

fn c4() -> Check {
    let bp = builtin("c6-b2", None, None);
    let a = rank2::analyze(&bp.diagonal_matrix().unwrap()).map_err(|e| e.to_string())?;
    ensure(a.n1 == RootOrder::Finite(2) && a.n2 == RootOrder::Finite(3), "N1, N2")?;
    ensure(a.m == [RootOrder::Finite(3), RootOrder::Finite(2)], format!("M {:?}", a.m))?;
    ensure(a.bound == Bound::Finite(36), format!("bound {}", a.bound))?;
    ensure(a.condition == Some(Condition::MinusQ22), format!("condition {:?}", a.condition))?;
    let t = total(&bp, 20);
    ensure(t == Some(36), format!("total {t:?}"))?;
    Ok(format!("M {:?}, bound 36, condition {}, total 36", a.m, Condition::MinusQ22))
}

fn c5() -> Check {
    let bp = builtin("ms-d4", None, None);
    let t = total(&bp, 20);
    ensure(t == Some(64), format!("total {t:?}"))?;
    // z_e = x1 + e x1', z'_e = x2 + e x2' on the basis (x1, x1', x2, x2')
    let (o, one, m) = (Cyc::zero(), Cyc::one(), Cyc::from_int(-1));
    let p = vec![
        vec![one.clone(), one.clone(), o.clone(), o.clone()],
        vec![one.clone(), m.clone(), o.clone(), o.clone()],
        vec![o.clone(), o.clone(), one.clone(), one.clone()],
        vec![o.clone(), o, one, m],
    ];
    let e = bp.change_basis(&p).map_err(|e| e.to_string())?;
    // new basis order: z_+, z_-, z'_+, z'_-
    let (pm, mp) = ([0usize, 3], [1usize, 2]);
    for block in [pm, mp] {
        let b = e.restrict(&block).map_err(|e| e.to_string())?;
        ensure(total(&b, 20) == Some(8), format!("block {block:?} total {:?}", total(&b, 20)))?;
    }
    ensure(e.cross_square_is_identity(&pm, &mp) && e.cross_square_is_identity(&mp, &pm), "c^2 != id across blocks")?;
    Ok("total 64, blocks 8 and 8, c^2 = id across".into())
}

fn c6() -> Check {
    let bp = bpair::v3(&z(3, 1)).map_err(|e| e.to_string())?;
    let mut gc = GradedComputation::new(bp);
    ensure(gc.dim(2) == 9, format!("dim B^2 = {}", gc.dim(2)))?;
    let k2 = derivation_kernel_dim(&mut gc, 0, 2);
    ensure(k2 == 6, format!("ker d0 on B^2 = {k2}"))?;
    let p = [1usize, 2, 6, 2, 1];
    let mut kernel = vec![1usize];
    for n in 1..=4 {
        kernel.push(derivation_kernel_dim(&mut gc, 0, n));
    }
    ensure(kernel.iter().zip(p).all(|(k, p)| *k >= p), format!("kernel dims {kernel:?} below {p:?}"))?;
    let bound = 3 * p.iter().sum::<usize>();
    let running = 3 * kernel.iter().sum::<usize>();
    ensure(bound == 36 && running >= 36, "bound")?;
    Ok(format!("dim B^2 9, ker d0 6, kernel dims {kernel:?}, bound 3*P(1) = {bound} (running {running})"))
}

fn c7() -> Check {
    let q = z(6, 1);
    let bp = bpair::v3(&q).map_err(|e| e.to_string())?;
    let ker = kernel_basis(&bp, 2);
    let q2 = &q * &q;
    let mq = -&q;
    let span = [
        TensorVec::from_words(3, 2, [(vec![0, 1], Cyc::one()), (vec![2, 0], mq.clone()), (vec![1, 2], q2.clone())]),
        TensorVec::from_words(3, 2, [(vec![1, 0], Cyc::one()), (vec![2, 1], mq), (vec![0, 2], q2)]),
    ];
    ensure(ker.len() == 2, format!("kernel dim {}", ker.len()))?;
    ensure(echelon_of(&ker) == echelon_of(&span), "kernel differs from the displayed span")?;
    for m in [3u32, 4, 5, 12] {
        let other = bpair::v3(&z(m, 1)).map_err(|e| e.to_string())?;
        ensure(kernel_basis(&other, 2).is_empty(), format!("kernel nonzero for N(q) = {m}"))?;
    }
    Ok("ker S^2 is the 2-dim displayed span; zero for N(q) in {3,4,5,12}".into())
}

fn c8() -> Check {
    let m1 = Cyc::from_int(-1);
    let bp = bpair::v4(&m1, &m1).map_err(|e| e.to_string())?;
    let mut gc = GradedComputation::new(bp.clone());
    ensure(gc.dim(2) == 12, format!("dim B^2 = {}", gc.dim(2)))?;
    let squares: Vec<TensorVec> = (0..4).map(|i| TensorVec::basis(4, &[i, i])).collect();
    ensure(echelon_of(&kernel_basis(&bp, 2)) == echelon_of(&squares), "ker S^2 != span of squares")?;
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                let v = TensorVec::basis(4, &[i, j]);
                let cubed = v.apply_at(0, bp.columns()).apply_at(0, bp.columns()).apply_at(0, bp.columns());
                ensure(cubed == v, format!("c^3 != id on x{i}x{j}"))?;
            }
        }
    }
    ensure(derivation_kernel_dim(&mut gc, 0, 2) == 9, "ker d0 on B^2")?;
    let lower = [1usize, 4, 12, 12, 4, 1];
    let dims: Vec<usize> = (0..=6).map(|n| gc.dim(n)).collect();
    ensure(dims.iter().zip(lower).all(|(d, l)| *d >= l), format!("dims {dims:?}"))?;
    Ok(format!("dim B^2 12, ker S^2 = squares, c^3 = id, dims {dims:?} >= {lower:?}"))
}

fn c9() -> Check {
    let suite = builtins::identity_suite();
    ensure(suite.len() >= 10, "suite too small")?;
    let mut count = 0;
    for n in 1..=4 {
        for id in braidgrp::adjoint_identities(n) {
            let r = id.verify(&suite).map_err(|e| e.to_string())?;
            ensure(r.holds(), format!("{} fails: {r:?}", id.name))?;
            count += 1;
        }
    }
    // S^2 (e - s1) = e - s1 s1
    let e = GroupAlgElt::identity(2);
    let s1 = GroupAlgElt::word(2, &[1]);
    let lhs = braidgrp::symmetrizer(2).mul(&e.sub(&s1));
    let rhs = e.sub(&s1.mul(&s1));
    ensure(braidgrp::verify_identity(&lhs, &rhs, &suite).map_err(|e| e.to_string())?.holds(), "n = 1 factorization")?;
    Ok(format!("{} identities over {} diagonal pairs", count + 1, suite.len()))
}

fn random_root(rng: &mut ChaCha8Rng, max_order: u32) -> Cyc {
    let m = rng.gen_range(1..=max_order);
    z(m, rng.gen_range(0..m as i64))
}

fn c10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut finite = 0;
    for trial in 0..200 {
        let q: Vec<Vec<Cyc>> = (0..2).map(|_| (0..2).map(|_| random_root(&mut rng, 12)).collect()).collect();
        let bp = bpair::diagonal(&q).map_err(|e| e.to_string())?;
        for (i, j) in [(0, 1), (1, 0)] {
            let formula = nilpotency_formula(&q, i, j);
            let direct = nilpotency_direct(&bp, i, j, 13);
            let agree = match formula {
                NilOrder::Finite(k) => direct == Some(k),
                NilOrder::Infinite => direct.is_none(),
            };
            ensure(agree, format!("trial {trial} q {q:?} ({i},{j}): formula {formula}, direct {direct:?}"))?;
            if direct.is_some() {
                finite += 1;
            }
        }
    }
    Ok(format!("200 matrices, 400 orders agree ({finite} finite)"))
}

fn c11() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..60 {
        let rank = rng.gen_range(1..=3);
        let mut q = vec![vec![Cyc::one(); rank]; rank];
        let mut expected = 1;
        for i in 0..rank {
            let n = rng.gen_range(2..=5u32);
            let e = loop {
                let e = rng.gen_range(1..n);
                if gcd(e, n) == 1 {
                    break e as i64;
                }
            };
            q[i][i] = z(n, e);
            expected *= n as usize;
            for j in 0..i {
                // orders dividing 60 keep the field small
                let m = [1u32, 2, 3, 4, 5, 6, 10, 12][rng.gen_range(0..8)];
                let a = z(m, rng.gen_range(0..m as i64));
                q[j][i] = a.inv();
                q[i][j] = a;
            }
        }
        ensure(rank2::is_qls(&q) == Some(Bound::Finite(expected as u64)), format!("trial {trial}: not QLS"))?;
        let bp = bpair::diagonal(&q).map_err(|e| e.to_string())?;
        let t = total(&bp, 20);
        ensure(t == Some(expected), format!("trial {trial}: total {t:?}, expected {expected}"))?;
    }
    Ok("60 random quantum linear spaces of rank <= 3".into())
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    a.iter()
        .map(|row| (0..b.first().map_or(0, Vec::len)).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect())
        .collect()
}

fn c12() -> Check {
    let x = CrossedSet::dihedral(3);
    for m in [2u32, 3, 4, 6] {
        let h = quandle::h2(&x, m);
        ensure(h.factors == [m as u64], format!("H2 over Z/{m} = {h}"))?;
    }
    let sets = [CrossedSet::trivial(1), CrossedSet::trivial(3), CrossedSet::dihedral(3), CrossedSet::dihedral(4), CrossedSet::dihedral(5), CrossedSet::tetrahedral()];
    for s in &sets {
        let prod = mat_mul(&quandle::delta_matrix(s, 2), &quandle::delta_matrix(s, 1));
        ensure(prod.iter().flatten().all(|&v| v == 0), format!("delta^2 delta^1 != 0 on size {}", s.size()))?;
    }
    let mut compared = 0;
    let small = [CrossedSet::trivial(1), CrossedSet::trivial(2), CrossedSet::trivial(3), CrossedSet::dihedral(3), CrossedSet::dihedral(4), CrossedSet::trivial(4), CrossedSet::tetrahedral()];
    for s in &small {
        for m in 2..=4u32 {
            let n = s.size();
            if (m as u64).pow((n * n) as u32) > 1 << 20 {
                continue;
            }
            let brute = common::count_braiding_cocycles(s.table(), m);
            let h1 = quandle::cohomology(s, 1, m).order();
            let h2 = quandle::cohomology(s, 2, m).order();
            // |Z^2| = |H^2| |B^2| and |B^2| = |C^1| / |Z^1| with Z^1 = H^1
            let from_h = h2 * (m as u64).pow(n as u32) / h1;
            ensure(brute == from_h, format!("size {n}, m {m}: brute {brute}, from cohomology {from_h}"))?;
            compared += 1;
        }
    }
    Ok(format!("H2(Z/3) = Z/m for m in 2,3,4,6; d^2 d^1 = 0 on {} sets; {compared} brute-force counts agree", sets.len()))
}

fn c13() -> Check {
    let one = Cyc::one();
    let m1 = Cyc::from_int(-1);
    let diag = |q: Vec<Vec<Cyc>>| bpair::diagonal(&q).unwrap();
    let rows: Vec<(&str, BraidedPair, Vec<usize>)> = vec![
        ("QLS rank 1", diag(vec![vec![z(5, 1)]]), vec![5]),
        ("QLS rank 2", diag(vec![vec![m1.clone(), one.clone()], vec![one.clone(), z(3, 1)]]), vec![6]),
        ("QLS rank 3", builtin("qls3", None, None), vec![8, 12, 16, 18, 20, 24, 27, 28, 30]),
        ("QLS rank 4", builtin("qls4", None, None), vec![16, 24]),
        ("A2", builtin("a2", None, None), vec![8, 12, 16, 20, 27, 28]),
        ("A2 at N = 3", builtin("a2", Some(z(3, 1)), None), vec![8, 12, 16, 20, 27, 28]),
        ("A2 x A1", builtin("a2xa1", None, None), vec![16, 24]),
        ("V3,-1", builtin("v3", None, None), vec![12]),
        ("V3,-1 x A1", builtin("v3-a1", None, Some(one)), vec![24]),
    ];
    let mut seen = Vec::new();
    for (name, bp, allowed) in rows {
        let t = total(&bp, 30).ok_or_else(|| format!("{name}: no top degree"))?;
        ensure(allowed.contains(&t), format!("{name}: {t} not in {allowed:?}"))?;
        seen.push(format!("{name}={t}"));
    }
    Ok(seen.join(", "))
}

fn c14() -> Check {
    let mut checked = 0;
    for (name, _) in builtins::BRAIDED_PAIRS {
        let bp = builtin(name, None, None);
        let mut gc = GradedComputation::new(bp.clone());
        for n in 0..=4 {
            let ours = gc.dim(n);
            let oracle = common::symmetrizer_rank(&bp, n);
            ensure(ours == oracle, format!("{name} degree {n}: {ours} vs oracle {oracle}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (pair, degree) dimensions match the full symmetrizer"))
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, fn() -> Check, u64)> = vec![
        ("V3,-1: dim 12, five relations in degree 2 only", c1, 1),
        ("V4,-1,1: Hilbert series, total 72, relation degrees", c2, 300),
        ("C4 example: bound 16, A2_equality, total 16", c3, 10),
        ("C6 example: M = (3,2), bound 36, condition, total 36", c4, 60),
        ("two_by_two q=-1: total 64, 8-dim blocks, c^2 = id", c5, 300),
        ("V3,q with N(q)=3: B^2, ker d0, bound 36", c6, 10),
        ("V3,q with N(q)=6: kernel of S^2", c7, 1),
        ("V4,-1,-1: B^2, ker S^2, c^3, lower bound", c8, 60),
        ("operator identities over a diagonal suite", c9, 120),
        ("nilpotency formula vs iteration", c10, 300),
        ("quantum linear spaces: total = product of orders", c11, 600),
        ("crossed-set cohomology", c12, 60),
        ("classification table witnesses", c13, 600),
        ("image iteration vs full symmetrizer", c14, 300),
    ];
    let mut failed = 0;
    for (k, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        let over = took > Duration::from_secs(*limit);
        let (status, detail) = match (&result, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; took longer than {limit}s")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} {:>2} {name} [{:.2}s] {detail}", k + 1, took.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
